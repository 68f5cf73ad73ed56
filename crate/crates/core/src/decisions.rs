//! Exact decisions for the three monotone properties.
//!
//! Every procedure returns a [`Verdict`] naming the clause that certified the
//! answer: the satisfied condition when the property holds, or the first
//! violated clause when it fails. Inequalities keep the strictness of the
//! underlying conditions: `(alpha_+ - 1)(c1 - c0 alpha_-) > 0` and
//! `alpha_+ != 1` are strict, everything else is non-strict.
//!
//! The published conditions for property 1 and property 3 overlook solutions
//! that are a single geometric progression `c0 r^n` (`c1 = c0 r` for a root
//! `r`). Those are decided directly and reported as
//! [`Branch::GeometricRoot`] / [`Branch::GeometricAlpha`].

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qfield::{order_by_modulus, Quad};
use crate::recurrence::{iterate, Recurrence};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    // holding certificates
    CondMonotonic1,
    CondAlphaOne,
    GeometricRoot,
    DiscriminantNonnegative,
    CondCorollary,
    CondModulus,
    CondBetaModulus,
    ComplexModulus,
    GeometricAlpha,
    // violated clauses
    DiscriminantNegative,
    TripleNotMonotone,
    Cond1FailAlphaPlus,
    Cond1FailA,
    Cond1FailProduct,
    Cond2FailTriple,
    InitialNonpositive,
    ABelowOne,
    AlphaPlusBelowOne,
    Cond2FailModulus,
    Cond3FailModulus,
    ComplexModulusFail,
}

impl Branch {
    pub fn holds(self) -> bool {
        use Branch::*;
        matches!(
            self,
            CondMonotonic1
                | CondAlphaOne
                | GeometricRoot
                | DiscriminantNonnegative
                | CondCorollary
                | CondModulus
                | CondBetaModulus
                | ComplexModulus
                | GeometricAlpha
        )
    }

    /// Failures whose witness may lie arbitrarily far out, so a finite window
    /// without violations does not contradict them.
    pub fn is_asymptotic(self) -> bool {
        use Branch::*;
        matches!(self, DiscriminantNegative | Cond1FailAlphaPlus | Cond1FailA | Cond1FailProduct | AlphaPlusBelowOne)
    }

    pub fn as_str(self) -> &'static str {
        use Branch::*;
        match self {
            CondMonotonic1 => "COND_MONOTONIC_1",
            CondAlphaOne => "COND_ALPHA_ONE",
            GeometricRoot => "GEOMETRIC_ROOT",
            DiscriminantNonnegative => "DISCRIMINANT_NONNEGATIVE",
            CondCorollary => "COND_COROLLARY",
            CondModulus => "COND_MODULUS",
            CondBetaModulus => "COND_BETA_MODULUS",
            ComplexModulus => "COMPLEX_MODULUS",
            GeometricAlpha => "GEOMETRIC_ALPHA",
            DiscriminantNegative => "DISCRIMINANT_NEGATIVE",
            TripleNotMonotone => "TRIPLE_NOT_MONOTONE",
            Cond1FailAlphaPlus => "COND1_FAIL_ALPHA_PLUS",
            Cond1FailA => "COND1_FAIL_A",
            Cond1FailProduct => "COND1_FAIL_PRODUCT",
            Cond2FailTriple => "COND2_FAIL_TRIPLE",
            InitialNonpositive => "INITIAL_NONPOSITIVE",
            ABelowOne => "A_BELOW_ONE",
            AlphaPlusBelowOne => "ALPHA_PLUS_BELOW_ONE",
            Cond2FailModulus => "COND2_FAIL_MODULUS",
            Cond3FailModulus => "COND3_FAIL_MODULUS",
            ComplexModulusFail => "COMPLEX_MODULUS_FAIL",
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub branch: Branch,
}

impl From<Branch> for Verdict {
    fn from(branch: Branch) -> Self {
        Verdict { holds: branch.holds(), branch }
    }
}

fn is_nondecreasing_triple<T: Scalar>(x: &T, y: &T, z: &T) -> bool {
    x <= y && y <= z
}

/// `(a_{k-1}, a_k, a_{k+1})`, reconstructing `a_{-1}` when `k = 0`.
fn triple_at<T: Scalar>(spec: &Recurrence<T>, k: usize) -> (T, T, T) {
    let t = iterate(spec, k + 1).terms;
    let before = if k == 0 { spec.term_before_start() } else { t[k - 1].clone() };
    (before, t[k].clone(), t[k + 1].clone())
}

/// Decides a solution `c0 r^n` (with `c1 = c0 r`) directly, if it is one.
fn geometric_eventual<T: Scalar>(spec: &Recurrence<T>, plus: &Quad<T>, minus: &Quad<T>) -> Option<bool> {
    [plus, minus].into_iter().find(|r| spec.root_defect(r).is_zero()).map(|r| {
        let shifted = r.add_scalar(&-T::one());
        shifted.is_zero() || (r.sign() == Ordering::Greater && shifted.scale(spec.v0()).sign() == Ordering::Greater)
    })
}

/// Conditions shared by the eventual and from-`k` decisions, with
/// `alpha_+ = 1` handled by the caller.
fn cond_monotonic_1<T: Scalar>(spec: &Recurrence<T>, plus: &Quad<T>, minus: &Quad<T>) -> Branch {
    let shifted = plus.add_scalar(&-T::one());
    if plus.sign() != Ordering::Greater {
        Branch::Cond1FailAlphaPlus
    } else if !spec.a().is_positive() {
        Branch::Cond1FailA
    } else if (shifted * spec.root_defect(minus)).sign() != Ordering::Greater {
        Branch::Cond1FailProduct
    } else {
        Branch::CondMonotonic1
    }
}

/// Whether `a_n <= a_{n+1}` for all sufficiently large `n`.
pub fn eventually_nondecreasing<T: Scalar>(spec: &Recurrence<T>) -> Verdict {
    let roots = spec.roots();
    let (plus, minus) = match (roots.alpha_plus(), roots.alpha_minus()) {
        (Some(p), Some(m)) => (p, m),
        _ => return Branch::DiscriminantNegative.into(),
    };
    if plus.add_scalar(&-T::one()).is_zero() {
        let t = iterate(spec, 2).terms;
        return if is_nondecreasing_triple(&t[0], &t[1], &t[2]) {
            Branch::CondAlphaOne.into()
        } else {
            Branch::Cond2FailTriple.into()
        };
    }
    let branch = cond_monotonic_1(spec, plus, minus);
    if !branch.holds() && geometric_eventual(spec, plus, minus) == Some(true) {
        return Branch::GeometricRoot.into();
    }
    branch.into()
}

/// Whether `a_n <= a_{n+1}` for every `n >= k - 1`.
pub fn nondecreasing_from<T: Scalar>(spec: &Recurrence<T>, k: usize) -> Verdict {
    let roots = spec.roots();
    let (plus, minus) = match (roots.alpha_plus(), roots.alpha_minus()) {
        (Some(p), Some(m)) => (p, m),
        _ => return Branch::DiscriminantNegative.into(),
    };
    let (x, y, z) = triple_at(spec, k);
    if !is_nondecreasing_triple(&x, &y, &z) {
        return Branch::TripleNotMonotone.into();
    }
    if plus.add_scalar(&-T::one()).is_zero() {
        return Branch::CondAlphaOne.into();
    }
    let branch = cond_monotonic_1(spec, plus, minus);
    if !branch.holds() && geometric_eventual(spec, plus, minus) == Some(true) {
        return Branch::GeometricRoot.into();
    }
    branch.into()
}

/// Whether `|alpha - a_{n+1}/a_n|` is eventually non-increasing.
pub fn eventually_ratio_monotone<T: Scalar>(spec: &Recurrence<T>) -> Result<Verdict> {
    if spec.v0().is_zero() || spec.v1().is_zero() {
        return Err(Error::ZeroInitialTerm);
    }
    Ok(if spec.discriminant().is_negative() { Branch::DiscriminantNegative } else { Branch::DiscriminantNonnegative }
        .into())
}

/// Property 1 for h-type solutions: `0 = a_{-1} < a_0 <= a_n <= a_{n+1}`.
pub fn positive_monotone_h<T: Scalar>(spec: &Recurrence<T>) -> Result<Verdict> {
    if !spec.is_h_type() {
        return Err(Error::NotHType);
    }
    let roots = spec.roots();
    let Some(plus) = roots.alpha_plus() else {
        return Ok(Branch::DiscriminantNegative.into());
    };
    let branch = if !spec.v0().is_positive() {
        Branch::InitialNonpositive
    } else if *spec.a() < T::one() {
        Branch::ABelowOne
    } else if plus.add_scalar(&-T::one()).sign() == Ordering::Less {
        Branch::AlphaPlusBelowOne
    } else {
        Branch::CondCorollary
    };
    Ok(branch.into())
}

/// Property 2 for h-type solutions, for every `n >= 0`: requires real roots
/// and `|a| = |alpha + beta| >= |beta|`.
pub fn ratio_monotone_h<T: Scalar>(spec: &Recurrence<T>) -> Result<Verdict> {
    if !spec.is_h_type() {
        return Err(Error::NotHType);
    }
    let roots = spec.roots();
    if !roots.is_real() {
        return Ok(Branch::DiscriminantNegative.into());
    }
    let (_, beta) = order_by_modulus(&roots)?;
    let a = Quad::rational(spec.a().clone());
    Ok(if a.cmp_abs(&beta)? == Ordering::Less { Branch::Cond2FailModulus } else { Branch::CondModulus }.into())
}

/// Property 3, `|a_n alpha - a_{n+1}|` non-increasing, for any initial values.
///
/// Holds iff `|beta| <= 1`; complex roots compare `|beta|^2 = b` with 1.
pub fn weighted_monotone<T: Scalar>(spec: &Recurrence<T>) -> Verdict {
    let roots = spec.roots();
    if let Some(modulus_sq) = roots.modulus_squared() {
        return if *modulus_sq <= T::one() { Branch::ComplexModulus } else { Branch::ComplexModulusFail }.into();
    }
    let (alpha, beta) = order_by_modulus(&roots).expect("roots are real");
    if beta.cmp_abs(&Quad::one()).expect("rational operand") != Ordering::Greater {
        Branch::CondBetaModulus.into()
    } else if spec.root_defect(&alpha).is_zero() {
        // c0 alpha^n: every residual a_n alpha - a_{n+1} vanishes
        Branch::GeometricAlpha.into()
    } else {
        Branch::Cond3FailModulus.into()
    }
}

/// Sufficient condition `a - 1 - b > 0, b > 0` for `a_n < a_{n+1}` whenever
/// `0 < a_0 <= a_1`.
pub fn hartman_aurel_sufficient<T: Scalar>(a: &T, b: &T) -> bool {
    (a.clone() - T::one() - b.clone()).is_positive() && b.is_positive()
}

//! Second-order recurrences `a_{n+2} = a*a_{n+1} - b*a_n` with `ab != 0`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::qfield::{characteristic_roots, order_by_modulus, Quad, Roots};
use crate::scalar::Scalar;

/// Default number of terms scanned by [`exceptional_zero`] before giving up.
pub const DEFAULT_ZERO_HORIZON: usize = 10_000;

/// Coefficients `(a, b)` and initial pair `(a_0, a_1) = (v0, v1)`.
///
/// `h_type` records that the pair came from the convention `a_{-1} = 0`,
/// `a_0 = c`, which makes every term a multiple of `h_n(alpha_+, alpha_-)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence<T> {
    a: T,
    b: T,
    v0: T,
    v1: T,
    h_type: bool,
}

impl<T: Scalar> Recurrence<T> {
    pub fn new(a: T, b: T, v0: T, v1: T) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateCoefficients);
        }
        if v0.is_zero() && v1.is_zero() {
            return Err(Error::ZeroInitialValues);
        }
        Ok(Recurrence { a, b, v0, v1, h_type: false })
    }

    /// The h-type solution `c * h_n(alpha_+, alpha_-)`: `a_{-1} = 0`, `a_0 = c`.
    pub fn h_type(a: T, b: T, c: T) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let v1 = a.clone() * c.clone();
        let mut spec = Self::new(a, b, c, v1)?;
        spec.h_type = true;
        Ok(spec)
    }

    /// Power sums `p_n(alpha_+, alpha_-)`: initial values `2, a`.
    pub fn power_sum(a: T, b: T) -> Result<Self> {
        let v1 = a.clone();
        Self::new(a, b, T::two(), v1)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn v0(&self) -> &T {
        &self.v0
    }

    pub fn v1(&self) -> &T {
        &self.v1
    }

    pub fn is_h_type(&self) -> bool {
        self.h_type
    }

    pub fn discriminant(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_int(4) * self.b.clone()
    }

    pub fn roots(&self) -> Roots<T> {
        characteristic_roots(&self.a, &self.b).expect("ab != 0 is a spec invariant")
    }

    /// `a_{-1}`, obtained by running the recurrence backwards.
    pub fn term_before_start(&self) -> T {
        (self.a.clone() * self.v0.clone() - self.v1.clone()) / self.b.clone()
    }

    /// Next term from the two preceding ones.
    pub fn step(&self, prev: &T, cur: &T) -> T {
        self.a.clone() * cur.clone() - self.b.clone() * prev.clone()
    }

    /// `c1 - c0 * r` for a root `r`; zero exactly when the solution is `c0 r^n`.
    pub fn root_defect(&self, r: &Quad<T>) -> Quad<T> {
        (-r.scale(&self.v0)).add_scalar(&self.v1)
    }
}

/// Consecutive terms `a_start, a_{start+1}, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct Terms<T> {
    pub start_index: usize,
    pub terms: Vec<T>,
}

impl<T> Terms<T> {
    pub fn get(&self, n: usize) -> Option<&T> {
        n.checked_sub(self.start_index).and_then(|i| self.terms.get(i))
    }
}

/// Exact terms `a_0 ..= a_{n_max}`.
pub fn iterate<T: Scalar>(spec: &Recurrence<T>, n_max: usize) -> Terms<T> {
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(spec.v0.clone());
    if n_max >= 1 {
        terms.push(spec.v1.clone());
    }
    for k in 2..=n_max {
        let next = spec.step(&terms[k - 2], &terms[k - 1]);
        terms.push(next);
    }
    Terms { start_index: 0, terms }
}

/// `h_{-1} = 0, h_0 = 1, h_1, ..., h_{n_max}` for the pair `(a, b)`.
pub fn complete_homogeneous<T: Scalar>(a: &T, b: &T, n_max: usize) -> Vec<T> {
    let mut h = vec![T::zero(), T::one()];
    for k in 2..=n_max + 1 {
        let next = a.clone() * h[k - 1].clone() - b.clone() * h[k - 2].clone();
        h.push(next);
    }
    h
}

/// `a_n` from the closed form in `Q(sqrt(a^2 - 4b))`.
///
/// Distinct roots use `((c1 - c0 a_-) a_+^n - (c1 - c0 a_+) a_-^n) / sqrt(a^2-4b)`;
/// a repeated root `r` uses `c0 (n+1) r^n + (c1 - a c0) n r^(n-1)`.
/// Complex roots are rejected; use [`iterate`] instead.
pub fn closed_form_term<T: Scalar>(spec: &Recurrence<T>, n: u64) -> Result<T> {
    let roots = spec.roots();
    let (plus, minus) = match (roots.alpha_plus(), roots.alpha_minus()) {
        (Some(p), Some(m)) => (p, m),
        _ => return Err(Error::ComplexRoots),
    };
    let value = if roots.is_repeated() {
        if n == 0 {
            return Ok(spec.v0.clone());
        }
        let r = plus;
        let n_t = T::from_u64(n).ok_or_else(|| Error::InvalidArgument(format!("index {n}")))?;
        let lead = r.pow(n).scale(&(spec.v0.clone() * (n_t.clone() + T::one())));
        let tail_coef = (spec.v1.clone() - spec.a.clone() * spec.v0.clone()) * n_t;
        lead + r.pow(n - 1).scale(&tail_coef)
    } else {
        let big = spec.root_defect(minus);
        let small = spec.root_defect(plus);
        let numer = big * plus.pow(n) - small * minus.pow(n);
        numer.checked_div(&(plus - minus))?
    };
    value
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("closed form at n = {n} left an irrational part")))
}

/// The unique index with `a_n = 0`, if any, under `v0 v1 != 0` and real roots.
pub fn exceptional_zero<T: Scalar>(spec: &Recurrence<T>) -> Result<Option<usize>> {
    exceptional_zero_within(spec, DEFAULT_ZERO_HORIZON)
}

/// [`exceptional_zero`] with an explicit search horizon.
///
/// For distinct roots `a_n sqrt(disc) = A r^n - B s^n` with `|r| > |s|`. Once
/// `|A r^n| > |B s^n|` the gap only widens, so the scan stops there and the
/// answer is exact. Reaching `horizon` before that point is an error.
pub fn exceptional_zero_within<T: Scalar>(spec: &Recurrence<T>, horizon: usize) -> Result<Option<usize>> {
    if spec.v0.is_zero() || spec.v1.is_zero() {
        return Err(Error::ZeroInitialTerm);
    }
    let roots = spec.roots();
    let (plus, minus) = match (roots.alpha_plus(), roots.alpha_minus()) {
        (Some(p), Some(m)) => (p.clone(), m.clone()),
        _ => return Err(Error::ComplexRoots),
    };

    if roots.is_repeated() {
        // a_n = r^(n-1) (c0 r - (c0 r - c1) n)
        let c0r = plus.scale(&spec.v0);
        let slope = c0r.add_scalar(&-spec.v1.clone());
        if slope.is_zero() {
            return Ok(None);
        }
        let n = (c0r / slope)
            .as_rational()
            .cloned()
            .ok_or_else(|| Error::Internal("repeated root must be rational".into()))?;
        if n.is_negative() || !n.denominator_part().is_one() {
            return Ok(None);
        }
        return Ok(n.to_usize());
    }

    let (dom, dom_coef, sub, sub_coef) = if plus.cmp_abs(&minus)? == Ordering::Greater {
        (plus.clone(), spec.root_defect(&minus), minus.clone(), spec.root_defect(&plus))
    } else {
        (minus.clone(), spec.root_defect(&plus), plus.clone(), spec.root_defect(&minus))
    };
    if dom_coef.is_zero() {
        // Pure geometric progression in the smaller root; never zero.
        return Ok(None);
    }
    let (mut dom_term, mut sub_term) = (dom_coef, sub_coef);
    let (mut prev, mut cur) = (spec.term_before_start(), spec.v0.clone());
    for n in 0..=horizon {
        if cur.is_zero() {
            return Ok(Some(n));
        }
        if dom_term.cmp_abs(&sub_term)? == Ordering::Greater {
            return Ok(None);
        }
        let next = spec.step(&prev, &cur);
        prev = std::mem::replace(&mut cur, next);
        dom_term = dom_term * &dom;
        sub_term = sub_term * &sub;
    }
    Err(Error::Internal(format!("no domination cutoff within {horizon} terms")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitRoot {
    Alpha,
    Beta,
}

/// Behaviour of `a_{n+1} / a_n` as `n -> infinity`.
#[derive(Clone, Debug, PartialEq)]
pub enum RatioLimit<T> {
    Converges { limit: Quad<T>, root: LimitRoot },
    Diverges,
}

/// Limit of consecutive ratios; requires `v0 v1 != 0`.
///
/// Diverges exactly for complex roots. Otherwise the limit is the dominant
/// root `alpha`, unless `c1 = c0 beta` pins the solution to `c0 beta^n`.
pub fn ratio_limit<T: Scalar>(spec: &Recurrence<T>) -> Result<RatioLimit<T>> {
    if spec.v0.is_zero() || spec.v1.is_zero() {
        return Err(Error::ZeroInitialTerm);
    }
    let roots = spec.roots();
    if !roots.is_real() {
        return Ok(RatioLimit::Diverges);
    }
    let (alpha, beta) = order_by_modulus(&roots)?;
    if spec.root_defect(&beta).is_zero() {
        Ok(RatioLimit::Converges { limit: beta, root: LimitRoot::Beta })
    } else {
        Ok(RatioLimit::Converges { limit: alpha, root: LimitRoot::Alpha })
    }
}

//! Integer-coefficient recurrences: irreducibility, quadratic Pisot roots,
//! and the lattice points of the coefficient domain.

use std::cmp::Ordering;

use num_integer::Roots;
use serde::Serialize;

use crate::qfield::{order_by_modulus, Quad};
use crate::recurrence::Recurrence;
use crate::regions::{contains_coeff_plane, RegionId};
use crate::{rational, Rational};

/// Coefficients of `x^2 - a x + b`, i.e. of `a_{n+2} = a a_{n+1} - b a_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntCoeffPair {
    pub a: i64,
    pub b: i64,
}

impl IntCoeffPair {
    pub fn new(a: i64, b: i64) -> Self {
        IntCoeffPair { a, b }
    }

    /// The coefficient `c = -b` of the additive form `a_{n+2} = a a_{n+1} + c a_n`.
    pub fn additive_c(self) -> i64 {
        -self.b
    }

    pub fn discriminant(self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a - 4 * b
    }

    /// Fibonacci-like recurrence with `a_{-1} = 0`, `a_0 = 1`.
    pub fn h_spec(self) -> crate::Result<Recurrence<Rational>> {
        Recurrence::h_type(rational(self.a, 1), rational(self.b, 1), rational(1, 1))
    }
}

fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = n.sqrt();
        r * r == n
    }
}

/// Whether `x^2 - a x + b` is irreducible over the integers.
///
/// A monic integer quadratic with rational roots has integer roots, so this
/// is exactly the failure of `a^2 - 4b` to be a perfect square.
pub fn is_irreducible(pair: IntCoeffPair) -> bool {
    !is_square(pair.discriminant())
}

/// Whether the dominant root is a quadratic Pisot number: irreducible,
/// `alpha > 1` and `|beta| < 1`.
pub fn is_quadratic_pisot(pair: IntCoeffPair) -> bool {
    if !is_irreducible(pair) || pair.discriminant() < 0 || pair.b == 0 {
        return false;
    }
    let Ok(roots) = crate::qfield::characteristic_roots(&rational(pair.a, 1), &rational(pair.b, 1)) else {
        return false;
    };
    let Ok((alpha, beta)) = order_by_modulus(&roots) else {
        return false;
    };
    let one = Quad::rational(rational(1, 1));
    alpha > one && beta.cmp_abs(&one) == Ok(Ordering::Less)
}

/// Integer points of `D'` with `1 <= a <= a_max` whose polynomial is
/// irreducible, ordered by `a` then `b`.
pub fn enumerate_generalized_fibonacci(a_max: i64) -> Vec<IntCoeffPair> {
    (1..=a_max)
        .flat_map(|a| ((-a - 1)..=(a - 1)).map(move |b| IntCoeffPair::new(a, b)))
        .filter(|p| p.b != -p.a - 1 && p.b != 0 && p.b != p.a - 1)
        .collect()
}

/// Irreducible integer points on the boundary of `D'`.
///
/// Only the edge `a = 1` is scanned. On the slanted edges the polynomial
/// factors as `(x - 1)(x - (a - 1))` or `(x + 1)(x - (a + 1))`, so no point
/// there is irreducible at any height.
pub fn boundary_characterization(scan_bound: i64) -> Vec<IntCoeffPair> {
    let a = 1;
    let mut out: Vec<IntCoeffPair> = (-scan_bound..=scan_bound)
        .map(|b| IntCoeffPair::new(a, b))
        .filter(|p| on_boundary(*p) && is_irreducible(*p))
        .collect();
    debug_assert!((1..=scan_bound.min(200)).all(|a| {
        [IntCoeffPair::new(a, a - 1), IntCoeffPair::new(a, -a - 1)].into_iter().all(|p| !is_irreducible(p))
    }));
    out.sort();
    out
}

fn on_boundary(p: IntCoeffPair) -> bool {
    contains_coeff_plane(RegionId::DpBoundary, &rational(p.a, 1), &rational(p.b, 1)).expect("coefficient-plane tag")
}

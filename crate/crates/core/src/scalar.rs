//! The scalar abstraction shared by every numeric routine in the crate.
//!
//! Decision procedures are only exact over [`Rational`](crate::Rational); the
//! floating-point instances exist for display and quick numerical checks.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};

/// An ordered field usable as the coefficient type of recurrences and
/// quadratic-field elements.
pub trait Scalar:
    Clone + fmt::Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Square root of `self` when it lies in the scalar type.
    ///
    /// Returns `None` for negative values and, for exact types, for values that
    /// are not perfect squares.
    fn exact_sqrt(&self) -> Option<Self>;

    /// The denominator of `self` as a value of the same type; `1` for floats.
    fn denominator_part(&self) -> Self;

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar represents small integers")
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn exact_sqrt(&self) -> Option<Self> {
                if *self >= 0.0 {
                    Some(self.sqrt())
                } else {
                    None
                }
            }

            fn denominator_part(&self) -> Self {
                1.0
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

fn int_sqrt<I>(n: &I) -> Option<I>
where
    I: Roots + Signed + Clone,
{
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if r.clone() * r.clone() == *n {
        Some(r)
    } else {
        None
    }
}

impl Scalar for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        let n: Option<BigInt> = int_sqrt(self.numer());
        let d: Option<BigInt> = int_sqrt(self.denom());
        Some(Ratio::new(n?, d?))
    }

    fn denominator_part(&self) -> Self {
        Ratio::from_integer(self.denom().clone())
    }
}

impl Scalar for Ratio<i64> {
    fn exact_sqrt(&self) -> Option<Self> {
        Some(Ratio::new(int_sqrt(self.numer())?, int_sqrt(self.denom())?))
    }

    fn denominator_part(&self) -> Self {
        Ratio::from_integer(*self.denom())
    }
}

pub(crate) fn sign_of<T: Scalar>(x: &T) -> std::cmp::Ordering {
    if x.is_zero() {
        std::cmp::Ordering::Equal
    } else if x.is_positive() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Less
    }
}

/// Integer power by repeated squaring; `x^0 = 1`.
pub(crate) fn powi<T: Clone + One + std::ops::Mul<Output = T>>(x: &T, mut n: u64) -> T {
    let mut base = x.clone();
    let mut acc = T::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

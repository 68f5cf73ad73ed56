//! Exact arithmetic in real quadratic extensions `Q(sqrt(D))`.
//!
//! A [`Quad`] is `p + q*sqrt(D)` with `D >= 0`. Elements whose radicand is a
//! perfect square collapse to plain scalars on construction, and any element
//! with `q = 0` carries `D = 0`, so a rational element combines freely with
//! elements of any radicand. Two irrational elements must share `D`.
//!
//! Signs are decided without approximation: for mixed-sign `p`, `q` the sign
//! follows from comparing `p^2` with `q^2 D`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{sign_of, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Quad<T> {
    p: T,
    q: T,
    d: T,
}

impl<T: Scalar> Quad<T> {
    /// Builds `p + q*sqrt(d)`, collapsing perfect-square radicands.
    pub fn new(p: T, q: T, d: T) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        match d.exact_sqrt() {
            Some(r) => Ok(Self::rational(p + q * r)),
            None => Ok(Self::canonical(p, q, d)),
        }
    }

    pub fn rational(p: T) -> Self {
        Quad { p, q: T::zero(), d: T::zero() }
    }

    /// `sqrt(d)` as an element of `Q(sqrt(d))`.
    pub fn sqrt_of(d: T) -> Result<Self> {
        Self::new(T::zero(), T::one(), d)
    }

    // Callers guarantee `d` is not a perfect square unless `q` is zero.
    fn canonical(p: T, q: T, d: T) -> Self {
        if q.is_zero() || d.is_zero() {
            Quad { p, q: T::zero(), d: T::zero() }
        } else {
            Quad { p, q, d }
        }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// Radicand; zero for rational elements.
    pub fn radicand(&self) -> &T {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// The rational value, when the element has no irrational part.
    pub fn as_rational(&self) -> Option<&T> {
        self.is_rational().then_some(&self.p)
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    fn common_radicand(&self, other: &Self) -> Result<T> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::RadicandMismatch)
        }
    }

    pub fn conjugate(&self) -> Self {
        Quad { p: self.p.clone(), q: -self.q.clone(), d: self.d.clone() }
    }

    /// `p^2 - q^2 D`, the product with the conjugate.
    pub fn norm(&self) -> T {
        self.p.clone() * self.p.clone() - self.q.clone() * self.q.clone() * self.d.clone()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::canonical(self.p.clone() + rhs.p.clone(), self.q.clone() + rhs.q.clone(), d))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        Ok(Self::canonical(self.p.clone() - rhs.p.clone(), self.q.clone() - rhs.q.clone(), d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_radicand(rhs)?;
        let p = self.p.clone() * rhs.p.clone() + self.q.clone() * rhs.q.clone() * d.clone();
        let q = self.p.clone() * rhs.q.clone() + self.q.clone() * rhs.p.clone();
        Ok(Self::canonical(p, q, d))
    }

    /// Division by conjugate rationalization.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.common_radicand(rhs)?;
        let n = rhs.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.checked_mul(&rhs.conjugate())?;
        Ok(Self::canonical(num.p / n.clone(), num.q / n, num.d))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::canonical(self.p.clone() * k.clone(), self.q.clone() * k.clone(), self.d.clone())
    }

    pub fn add_scalar(&self, k: &T) -> Self {
        Quad { p: self.p.clone() + k.clone(), q: self.q.clone(), d: self.d.clone() }
    }

    pub fn pow(&self, n: u64) -> Self {
        crate::scalar::powi(self, n)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Exact sign of the real number `p + q*sqrt(D)`.
    pub fn sign(&self) -> Ordering {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == Ordering::Equal {
            return sp;
        }
        if sp == Ordering::Equal || sp == sq {
            return sq;
        }
        // Mixed signs: the larger of |p| and |q| sqrt(D) wins.
        match sign_of(&self.norm()) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Compares `|self|` with `|other|` as `sign(self^2 - other^2)`.
    pub fn cmp_abs(&self, other: &Self) -> Result<Ordering> {
        let diff = self.square().checked_sub(&other.square())?;
        Ok(diff.sign())
    }

    /// Floating-point value. Mixed-sign elements are evaluated through
    /// `norm / (p - q sqrt(D))` to avoid cancellation.
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64_lossy();
        if self.is_rational() {
            return p;
        }
        let qs = self.q.to_f64_lossy() * self.d.to_f64_lossy().sqrt();
        if (p >= 0.0) == (qs >= 0.0) {
            p + qs
        } else {
            self.norm().to_f64_lossy() / (p - qs)
        }
    }
}

impl<T: Scalar> From<T> for Quad<T> {
    fn from(p: T) -> Self {
        Self::rational(p)
    }
}

impl<T: Scalar> PartialOrd for Quad<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).ok().map(|d| d.sign())
    }
}

impl<T: Scalar> Zero for Quad<T> {
    fn zero() -> Self {
        Self::rational(T::zero())
    }

    fn is_zero(&self) -> bool {
        Quad::is_zero(self)
    }
}

impl<T: Scalar> One for Quad<T> {
    fn one() -> Self {
        Self::rational(T::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, T: Scalar> $tr<&'a Quad<T>> for &'a Quad<T> {
            type Output = Quad<T>;

            /// # Panics
            /// On mismatched irrational radicands (and division by zero).
            fn $method(self, rhs: &'a Quad<T>) -> Quad<T> {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("Quad::{}: {}", stringify!($method), e),
                }
            }
        }

        impl<T: Scalar> $tr for Quad<T> {
            type Output = Quad<T>;

            fn $method(self, rhs: Quad<T>) -> Quad<T> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, T: Scalar> $tr<&'a Quad<T>> for Quad<T> {
            type Output = Quad<T>;

            fn $method(self, rhs: &'a Quad<T>) -> Quad<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl<T: Scalar> Neg for Quad<T> {
    type Output = Quad<T>;

    fn neg(self) -> Quad<T> {
        Quad { p: -self.p, q: -self.q, d: self.d }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Quad<T> {
    /// Renders as `p + q*sqrt(D)`, or just `p` for rational elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.p);
        }
        let (op, q) = if self.q.is_negative() { ("-", -self.q.clone()) } else { ("+", self.q.clone()) };
        write!(f, "{} {} {}*sqrt({})", self.p, op, q, self.d)
    }
}

/// Characteristic roots of `x^2 - a x + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Roots<T> {
    a: T,
    b: T,
    discriminant: T,
    real: Option<(Quad<T>, Quad<T>)>,
}

impl<T: Scalar> Roots<T> {
    pub fn discriminant(&self) -> &T {
        &self.discriminant
    }

    pub fn discriminant_sign(&self) -> Ordering {
        sign_of(&self.discriminant)
    }

    pub fn is_real(&self) -> bool {
        self.real.is_some()
    }

    pub fn is_repeated(&self) -> bool {
        self.discriminant.is_zero()
    }

    /// `(a + sqrt(a^2 - 4b)) / 2` when real.
    pub fn alpha_plus(&self) -> Option<&Quad<T>> {
        self.real.as_ref().map(|r| &r.0)
    }

    /// `(a - sqrt(a^2 - 4b)) / 2` when real.
    pub fn alpha_minus(&self) -> Option<&Quad<T>> {
        self.real.as_ref().map(|r| &r.1)
    }

    /// `|alpha|^2 = |beta|^2 = b` for complex-conjugate roots.
    pub fn modulus_squared(&self) -> Option<&T> {
        if self.is_real() {
            None
        } else {
            Some(&self.b)
        }
    }

    pub fn coefficients(&self) -> (&T, &T) {
        (&self.a, &self.b)
    }
}

/// Roots of `x^2 - a x + b` for `ab != 0`.
pub fn characteristic_roots<T: Scalar>(a: &T, b: &T) -> Result<Roots<T>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateCoefficients);
    }
    let four = T::from_int(4);
    let discriminant = a.clone() * a.clone() - four * b.clone();
    let real = if discriminant.is_negative() {
        None
    } else {
        let half = T::half();
        let s = Quad::sqrt_of(discriminant.clone())?.scale(&half);
        let mid = a.clone() * half;
        Some((s.add_scalar(&mid), (-s).add_scalar(&mid)))
    };
    Ok(Roots { a: a.clone(), b: b.clone(), discriminant, real })
}

/// Relabels real roots as `(alpha, beta)` with `|alpha| >= |beta|`.
pub fn order_by_modulus<T: Scalar>(roots: &Roots<T>) -> Result<(Quad<T>, Quad<T>)> {
    let (plus, minus) = roots.real.as_ref().ok_or(Error::ComplexRoots)?;
    if plus.cmp_abs(minus)? == Ordering::Less {
        Ok((minus.clone(), plus.clone()))
    } else {
        Ok((plus.clone(), minus.clone()))
    }
}

/// `sign(|alpha_+| - |alpha_-|)` from the closed-form case table on the
/// signs of `a` and `b`.
pub fn modulus_gap_sign<T: Scalar>(a: &T, b: &T) -> Result<Ordering> {
    let roots = characteristic_roots(a, b)?;
    if !roots.is_real() {
        return Err(Error::ComplexRoots);
    }
    let sqrt_disc = sign_of(roots.discriminant());
    let gap = if b.is_negative() {
        sign_of(a)
    } else if a.is_positive() {
        sqrt_disc
    } else {
        sqrt_disc.reverse()
    };
    debug_assert_eq!(Some(gap), roots.alpha_plus().zip(roots.alpha_minus()).and_then(|(p, m)| p.cmp_abs(m).ok()));
    Ok(gap)
}

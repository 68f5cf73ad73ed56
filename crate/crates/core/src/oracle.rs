//! Brute-force window checks of the monotone properties.
//!
//! Every comparison is exact and made on squared moduli, so there is no
//! tolerance anywhere. A clean window is evidence, not proof; eventual
//! behaviour is the business of [`crate::decisions`].
//!
//! Terms are carried as integers `y_n = d l^n a_n`, where `l` clears the
//! coefficient denominators and `d` those of the initial values. They obey
//! `y_{n+2} = A y_{n+1} - B y_n` with `A = a l`, `B = b l^2`, and every
//! comparison below reduces to the sign of `x + y sqrt(D)` over the integers.
//! That avoids a gcd per arithmetic step, which dominates for long windows.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qfield::{order_by_modulus, Quad};
use crate::recurrence::iterate;
use crate::{Rational, RecurrenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    P1,
    P2,
    P3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub property: Property,
    /// Inclusive range of comparison indices `n`.
    pub checked_range: (i64, i64),
    pub holds_on_window: bool,
    pub first_violation: Option<i64>,
    /// Indices of vanishing terms whose ratio comparisons were skipped.
    pub skipped_indices: Vec<i64>,
}

impl WindowReport {
    fn fold(
        property: Property,
        range: (i64, i64),
        steps: impl IntoIterator<Item = (i64, Option<bool>)>,
        skipped: Vec<i64>,
    ) -> Self {
        let first_violation = steps.into_iter().find(|(_, s)| *s == Some(false)).map(|(n, _)| n);
        WindowReport {
            property,
            checked_range: range,
            holds_on_window: first_violation.is_none(),
            first_violation,
            skipped_indices: skipped,
        }
    }
}

/// `y_0 ..= y_{n_max}` with `a_n = y_n / (d l^n)`, plus `l`, `A`, `B`.
struct Scaled {
    y: Vec<BigInt>,
    l: BigInt,
    big_a: BigInt,
    big_b: BigInt,
}

impl Scaled {
    fn new(spec: &RecurrenceSpec, n_max: usize) -> Self {
        let l = spec.a().denom().lcm(spec.b().denom());
        let d = spec.v0().denom().lcm(spec.v1().denom());
        let big_a = (spec.a() * Rational::from_integer(l.clone())).to_integer();
        let big_b = (spec.b() * Rational::from_integer(&l * &l)).to_integer();
        let mut y = Vec::with_capacity(n_max + 1);
        y.push((spec.v0() * Rational::from_integer(d.clone())).to_integer());
        if n_max >= 1 {
            y.push((spec.v1() * Rational::from_integer(&d * &l)).to_integer());
        }
        for k in 2..=n_max {
            let next = &big_a * &y[k - 1] - &big_b * &y[k - 2];
            y.push(next);
        }
        Scaled { y, l, big_a, big_b }
    }

    fn disc(&self) -> BigInt {
        &self.big_a * &self.big_a - BigInt::from(4) * &self.big_b
    }

    /// `a_n <= a_{n+1}`.
    fn nondecreasing_at(&self, n: usize) -> bool {
        &self.l * &self.y[n] <= self.y[n + 1]
    }

    /// `y_{n+1}^2 - A y_n y_{n+1} + B y_n^2 = |alpha' y_n - y_{n+1}|^2`
    /// for conjugate complex roots `alpha' = l alpha`.
    fn modulus_form(&self, n: usize) -> BigInt {
        let (u, v) = (&self.y[n], &self.y[n + 1]);
        v * v - &self.big_a * u * v + &self.big_b * u * u
    }

    /// `2 (alpha' y_n - y_{n+1})` as `(p, q)` meaning `p + q sqrt(disc)`, with
    /// `alpha'` the root of larger modulus (`A` and the surd share a sign).
    fn residual(&self, n: usize) -> (BigInt, BigInt) {
        let (u, v) = (&self.y[n], &self.y[n + 1]);
        let p = &self.big_a * u - BigInt::from(2) * v;
        let q = if self.big_a.is_negative() { -u.clone() } else { u.clone() };
        (p, q)
    }
}

/// Sign of `x + y sqrt(d)` for `d >= 0`.
fn surd_sign(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    let (sx, sy) = (x.cmp(&zero), y.cmp(&zero));
    if sy == Ordering::Equal || d.is_zero() {
        return sx;
    }
    if sx == Ordering::Equal || sx == sy {
        return sy;
    }
    match (x * x).cmp(&(y * y * d)) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => Ordering::Equal,
    }
}

/// `((p + q sqrt(d)) k)^2` as `(x, y)` meaning `x + y sqrt(d)`.
fn scaled_square(p: &BigInt, q: &BigInt, k: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    let (p, q) = (p * k, q * k);
    (&p * &p + &q * &q * d, BigInt::from(2) * p * q)
}

/// `a_n <= a_{n+1}` for `n` in `[k-1, n_max]`; `a_{-1}` is reconstructed
/// from the recurrence when `k = 0`.
pub fn check_p1_window(spec: &RecurrenceSpec, k: usize, n_max: usize) -> WindowReport {
    let n_max = n_max.max(k);
    let s = Scaled::new(spec, n_max + 1);
    let before = (k == 0).then(|| (-1i64, Some(spec.term_before_start() <= *spec.v0())));
    let steps =
        before.into_iter().chain((k.saturating_sub(1)..=n_max).map(|n| (n as i64, Some(s.nondecreasing_at(n)))));
    WindowReport::fold(Property::P1, (k as i64 - 1, n_max as i64), steps, Vec::new())
}

/// Whether `a_n <= a_{n+1}`, for each `n` in `[0, n_max]`.
pub fn p1_comparisons(spec: &RecurrenceSpec, n_max: usize) -> Vec<bool> {
    let s = Scaled::new(spec, n_max + 1);
    (0..=n_max).map(|n| s.nondecreasing_at(n)).collect()
}

/// Smallest `n0 <= n_cap` with `a_n <= a_{n+1}` for all `n` in `[n0, n_cap]`.
///
/// This is a witness search only: a hit says nothing about indices past the cap.
pub fn find_n0(spec: &RecurrenceSpec, n_cap: usize) -> Option<usize> {
    let steps: Vec<Option<bool>> = p1_comparisons(spec, n_cap).into_iter().map(Some).collect();
    tail_start(&steps)
}

fn tail_start(steps: &[Option<bool>]) -> Option<usize> {
    match steps.iter().rposition(|s| *s == Some(false)) {
        None => Some(0),
        Some(n) if n + 1 < steps.len() => Some(n + 1),
        Some(_) => None,
    }
}

/// Outcome of each property-2 comparison for `n` in `[0, n_max]`; `None`
/// where a vanishing term leaves it undefined.
///
/// Real roots compare `|E_n| |y_{n+1}|` with `|E_{n+1}| |y_n|`, where
/// `E_n = alpha' y_n - y_{n+1}`. Complex roots compare the conjugate-modulus
/// forms `G_n y_{n+1}^2` and `G_{n+1} y_n^2`.
pub fn p2_comparisons(spec: &RecurrenceSpec, n_max: usize) -> Vec<Option<bool>> {
    let s = Scaled::new(spec, n_max + 2);
    let disc = s.disc();
    (0..=n_max)
        .map(|n| {
            let (u, v) = (&s.y[n], &s.y[n + 1]);
            if u.is_zero() || v.is_zero() {
                return None;
            }
            let holds = if disc.is_negative() {
                s.modulus_form(n) * v * v >= s.modulus_form(n + 1) * u * u
            } else {
                let (p0, q0) = s.residual(n);
                let (p1, q1) = s.residual(n + 1);
                let (x0, y0) = scaled_square(&p0, &q0, v, &disc);
                let (x1, y1) = scaled_square(&p1, &q1, u, &disc);
                surd_sign(&(x0 - x1), &(y0 - y1), &disc) != Ordering::Less
            };
            Some(holds)
        })
        .collect()
}

fn zero_indices(spec: &RecurrenceSpec, n_max: usize) -> Vec<i64> {
    let s = Scaled::new(spec, n_max + 1);
    (0..=n_max + 1).filter(|&n| s.y[n].is_zero()).map(|n| n as i64).collect()
}

/// `|alpha - a_{n+1}/a_n| >= |alpha - a_{n+2}/a_{n+1}|` for `n` in `[0, n_max]`.
///
/// Comparisons that would divide by a vanishing term are skipped and the
/// term's index reported. Complex roots are rejected; see
/// [`check_p2_modulus_window`].
pub fn check_p2_window(spec: &RecurrenceSpec, n_max: usize) -> Result<WindowReport> {
    if spec.discriminant().is_negative() {
        return Err(Error::ComplexRoots);
    }
    Ok(check_p2_modulus_window(spec, n_max))
}

/// [`check_p2_window`] extended to complex roots through the complex modulus.
pub fn check_p2_modulus_window(spec: &RecurrenceSpec, n_max: usize) -> WindowReport {
    let steps = p2_comparisons(spec, n_max);
    WindowReport::fold(
        Property::P2,
        (0, n_max as i64),
        steps.into_iter().enumerate().map(|(n, s)| (n as i64, s)),
        zero_indices(spec, n_max),
    )
}

/// Smallest `n0 <= n_cap` such that property 2 holds on `[n0, n_cap]`
/// (skipped comparisons do not count as violations).
pub fn find_p2_n0(spec: &RecurrenceSpec, n_cap: usize) -> Option<usize> {
    tail_start(&p2_comparisons(spec, n_cap))
}

/// Whether `|a_n alpha - a_{n+1}| >= |a_{n+1} alpha - a_{n+2}|`, for each `n`
/// in `[0, n_max]`. In scaled terms: `l |E_n| >= |E_{n+1}|`, or
/// `l^2 G_n >= G_{n+1}` for complex roots.
pub fn p3_comparisons(spec: &RecurrenceSpec, n_max: usize) -> Vec<bool> {
    let s = Scaled::new(spec, n_max + 2);
    let disc = s.disc();
    let one = BigInt::from(1);
    (0..=n_max)
        .map(|n| {
            if disc.is_negative() {
                &s.l * &s.l * s.modulus_form(n) >= s.modulus_form(n + 1)
            } else {
                let (p0, q0) = s.residual(n);
                let (p1, q1) = s.residual(n + 1);
                let (x0, y0) = scaled_square(&p0, &q0, &s.l, &disc);
                let (x1, y1) = scaled_square(&p1, &q1, &one, &disc);
                surd_sign(&(x0 - x1), &(y0 - y1), &disc) != Ordering::Less
            }
        })
        .collect()
}

/// `|a_n alpha - a_{n+1}| >= |a_{n+1} alpha - a_{n+2}|` for `n` in `[0, n_max]`.
pub fn check_p3_window(spec: &RecurrenceSpec, n_max: usize) -> WindowReport {
    let steps = p3_comparisons(spec, n_max);
    WindowReport::fold(
        Property::P3,
        (0, n_max as i64),
        steps.into_iter().enumerate().map(|(n, s)| (n as i64, Some(s))),
        Vec::new(),
    )
}

/// `|alpha - a_{n+1}/a_n|` for `n < count` (real roots), `None` where `a_n = 0`.
pub fn p2_distances(spec: &RecurrenceSpec, count: usize) -> Result<Vec<Option<Quad<Rational>>>> {
    let roots = spec.roots();
    let (alpha, _) = order_by_modulus(&roots)?;
    let terms = iterate(spec, count).terms;
    Ok((0..count)
        .map(|n| (!terms[n].is_zero()).then(|| alpha.add_scalar(&-(terms[n + 1].clone() / terms[n].clone())).abs()))
        .collect())
}

/// `|a_n alpha - a_{n+1}|` for `n < count` (real roots).
pub fn p3_residuals(spec: &RecurrenceSpec, count: usize) -> Result<Vec<Quad<Rational>>> {
    let roots = spec.roots();
    let (alpha, _) = order_by_modulus(&roots)?;
    let terms = iterate(spec, count).terms;
    Ok((0..count).map(|n| alpha.scale(&terms[n]).add_scalar(&-terms[n + 1].clone()).abs()).collect())
}

//! The Riccati map `b_{n+1} = (a b_n - b) / b_n` induced on consecutive-term
//! ratios `b_n = a_{n+1} / a_n`. Its fixed points are the characteristic roots.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Orbit<T> {
    pub a: T,
    pub b: T,
    pub states: Vec<T>,
    /// Index of the zero state at which the map became undefined.
    pub terminated_early: Option<usize>,
}

/// One application of the map; `None` at the pole `state = 0`.
pub fn riccati_step<T: Scalar>(a: &T, b: &T, state: &T) -> Option<T> {
    (!state.is_zero()).then(|| (a.clone() * state.clone() - b.clone()) / state.clone())
}

/// `states[0..=n_max]` starting from `b0`, stopping early at a zero state
/// (which is kept as the last entry).
pub fn riccati_orbit<T: Scalar>(a: T, b: T, b0: T, n_max: usize) -> Result<Orbit<T>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateCoefficients);
    }
    if b0.is_zero() {
        return Err(Error::ZeroInitialState);
    }
    let mut states = Vec::with_capacity(n_max + 1);
    states.push(b0);
    let mut terminated_early = None;
    while states.len() <= n_max {
        let next = riccati_step(&a, &b, states.last().unwrap()).expect("zero states end the loop");
        let zero = next.is_zero();
        states.push(next);
        if zero {
            terminated_early = Some(states.len() - 1);
            break;
        }
    }
    Ok(Orbit { a, b, states, terminated_early })
}

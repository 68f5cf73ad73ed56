#![allow(dead_code)]

use std::process::Command;

use monotone_recurrence::{rational, Rational, RecurrenceSpec};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    rational(n, d)
}

/// `n / d` with `|n| <= 20`, `1 <= d <= 20`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

pub fn nonzero_small<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = small_rational(rng);
        if x != q(0, 1) {
            return x;
        }
    }
}

/// Coefficients with `ab != 0` and the requested discriminant sign
/// (`true` for negative).
pub fn coefficients<R: Rng>(rng: &mut R, complex: bool) -> (Rational, Rational) {
    loop {
        let (a, b) = (nonzero_small(rng), nonzero_small(rng));
        let disc = a.clone() * a.clone() - q(4, 1) * b.clone();
        if (disc < q(0, 1)) == complex {
            return (a, b);
        }
    }
}

pub fn random_spec<R: Rng>(rng: &mut R, complex: bool) -> RecurrenceSpec {
    let (a, b) = coefficients(rng, complex);
    loop {
        let (v0, v1) = (small_rational(rng), small_rational(rng));
        if let Ok(s) = RecurrenceSpec::new(a.clone(), b.clone(), v0, v1) {
            return s;
        }
    }
}

pub fn random_h_spec<R: Rng>(rng: &mut R, complex: bool) -> RecurrenceSpec {
    let (a, b) = coefficients(rng, complex);
    RecurrenceSpec::h_type(a, b, nonzero_small(rng)).unwrap()
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn monorec(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_monorec")).args(args).output().expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn monorec_json(args: &[&str]) -> serde_json::Value {
    let out = monorec(args);
    assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

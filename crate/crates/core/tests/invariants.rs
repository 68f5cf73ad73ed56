//! Property tests for the algebraic invariants of each module.

mod common;

use std::cmp::Ordering;

use common::q;
use monotone_recurrence::decisions::{eventually_nondecreasing, ratio_monotone_h};
use monotone_recurrence::oracle::{find_n0, p2_comparisons, p3_comparisons};
use monotone_recurrence::qfield::{characteristic_roots, modulus_gap_sign, order_by_modulus, Quad};
use monotone_recurrence::recurrence::{
    closed_form_term, exceptional_zero, iterate, ratio_limit, RatioLimit, Recurrence,
};
use monotone_recurrence::riccati::riccati_orbit;
use monotone_recurrence::{QuadElem, Rational, RecurrenceSpec};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20).prop_map(|(n, d)| q(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

fn disc(a: &Rational, b: &Rational) -> Rational {
    a * a - q(4, 1) * b
}

fn real_coefficients() -> impl Strategy<Value = (Rational, Rational)> {
    (nonzero(), nonzero()).prop_filter("real roots", |(a, b)| !disc(a, b).is_negative())
}

fn any_spec() -> impl Strategy<Value = RecurrenceSpec> {
    (nonzero(), nonzero(), small(), small())
        .prop_filter_map("valid spec", |(a, b, v0, v1)| RecurrenceSpec::new(a, b, v0, v1).ok())
}

fn real_spec() -> impl Strategy<Value = RecurrenceSpec> {
    any_spec().prop_filter("real roots", |s| !s.discriminant().is_negative())
}

fn h_spec() -> impl Strategy<Value = RecurrenceSpec> {
    (nonzero(), nonzero(), nonzero()).prop_map(|(a, b, c)| RecurrenceSpec::h_type(a, b, c).unwrap())
}

/// Elements of `Q(sqrt(d))` for a fixed non-square `d`.
fn quad_pair() -> impl Strategy<Value = (QuadElem, QuadElem)> {
    (prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 13]), small(), small(), small(), small())
        .prop_map(|(d, p0, q0, p1, q1)| (Quad::new(p0, q0, q(d, 1)).unwrap(), Quad::new(p1, q1, q(d, 1)).unwrap()))
}

fn sq(x: &QuadElem) -> QuadElem {
    x * x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quad_sign_is_multiplicative((x, y) in quad_pair()) {
        prop_assert_eq!((&x * &y).sign(), sign_product(x.sign(), y.sign()));
        prop_assert_eq!(x.cmp_abs(&y).unwrap(), (sq(&x) - sq(&y)).sign());
    }

    #[test]
    fn square_radicands_collapse(p in small(), k in small(), r in 0i64..=12) {
        let x = Quad::new(p.clone(), k.clone(), q(r * r, 1)).unwrap();
        prop_assert_eq!(x, Quad::rational(p + k * q(r, 1)));
    }

    #[test]
    fn vieta((a, b) in real_coefficients()) {
        let roots = characteristic_roots(&a, &b).unwrap();
        let (plus, minus) = (roots.alpha_plus().unwrap(), roots.alpha_minus().unwrap());
        prop_assert_eq!(plus + minus, Quad::rational(a.clone()));
        prop_assert_eq!(plus * minus, Quad::rational(b.clone()));
        prop_assert!(!plus.is_zero() && !minus.is_zero());
        let equal_moduli = plus.cmp_abs(minus).unwrap() == Ordering::Equal;
        prop_assert_eq!(equal_moduli, plus == minus);
        prop_assert_eq!(equal_moduli, disc(&a, &b).is_zero());
        prop_assert_eq!(modulus_gap_sign(&a, &b).unwrap(), plus.cmp_abs(minus).unwrap());
    }

    #[test]
    fn closed_form_matches_iteration(spec in real_spec()) {
        let terms = iterate(&spec, 40).terms;
        for (n, t) in terms.iter().enumerate() {
            prop_assert_eq!(&closed_form_term(&spec, n as u64).unwrap(), t);
        }
    }

    #[test]
    fn complete_homogeneous_expansion(spec in any_spec()) {
        let (a, b) = (spec.a().clone(), spec.b().clone());
        // h_{-1} = 0, h_0 = 1
        let mut h = vec![q(0, 1), q(1, 1)];
        for k in 2..=41 {
            let next = &a * &h[k - 1] - &b * &h[k - 2];
            h.push(next);
        }
        let (c0, c1) = (spec.v0().clone(), spec.v1().clone());
        let terms = iterate(&spec, 40).terms;
        for n in 0..=40 {
            let expected = &c0 * &h[n + 1] + (&c1 - &a * &c0) * &h[n];
            prop_assert_eq!(&terms[n], &expected);
        }
    }

    #[test]
    fn at_most_one_zero(spec in real_spec()) {
        let terms = iterate(&spec, 120).terms;
        let zeros: Vec<usize> = (0..terms.len()).filter(|&n| terms[n].is_zero()).collect();
        prop_assert!(zeros.len() <= 1, "zeros at {:?}", zeros);
        if !spec.v0().is_zero() && !spec.v1().is_zero() {
            prop_assert_eq!(exceptional_zero(&spec).unwrap(), zeros.first().copied());
        }
    }

    #[test]
    fn geometric_solutions(r in nonzero(), s in nonzero(), c in nonzero()) {
        prop_assume!(r != -s.clone());
        // roots r and s; c1 = c0 s leaves only the s^n mode
        let spec = Recurrence::new(&r + &s, &r * &s, c.clone(), &c * &s).unwrap();
        let mut power = c;
        for t in iterate(&spec, 30).terms {
            prop_assert_eq!(&t, &power);
            power *= &s;
        }
    }

    #[test]
    fn ratio_converges_to_limit(spec in real_spec()) {
        let Ok((alpha, beta)) = order_by_modulus(&spec.roots()) else { return Ok(()) };
        // the error decays like |beta/alpha|^n; only well separated roots settle by n = 60
        prop_assume!(beta.to_f64().abs() <= 0.5 * alpha.to_f64().abs());
        prop_assume!(!spec.v0().is_zero() && !spec.v1().is_zero());
        let RatioLimit::Converges { limit, .. } = ratio_limit(&spec).unwrap() else { return Ok(()) };
        let f = Recurrence::new(
            spec.a().to_f64().unwrap(),
            spec.b().to_f64().unwrap(),
            spec.v0().to_f64().unwrap(),
            spec.v1().to_f64().unwrap(),
        )
        .unwrap();
        let t = iterate(&f, 61).terms;
        prop_assume!(t[60] != 0.0);
        let ratio = t[61] / t[60];
        prop_assert!((ratio - limit.to_f64()).abs() <= 1e-9, "{ratio} vs {limit}");
    }

    #[test]
    fn n0_witness_when_eventually_nondecreasing(spec in any_spec()) {
        if eventually_nondecreasing(&spec).holds {
            prop_assert!(find_n0(&spec, 600).is_some());
        }
    }

    #[test]
    fn weighted_residual_identity(spec in real_spec()) {
        let Ok((alpha, beta)) = order_by_modulus(&spec.roots()) else { return Ok(()) };
        prop_assume!(alpha != beta);
        let (c0, c1) = (spec.v0(), spec.v1());
        let base = sq(&alpha.scale(&-c0.clone()).add_scalar(c1));
        let beta2 = sq(&beta);
        let terms = iterate(&spec, 41).terms;
        let mut rhs = base;
        for n in 0..=40 {
            let lhs = sq(&alpha.scale(&terms[n]).add_scalar(&-terms[n + 1].clone()));
            prop_assert_eq!(&lhs, &rhs, "n = {}", n);
            rhs = rhs * &beta2;
        }
    }

    #[test]
    fn scaled_oracle_matches_direct_comparison(spec in any_spec()) {
        let n_max = 30;
        let terms = iterate(&spec, n_max + 2).terms;
        let p2 = p2_comparisons(&spec, n_max);
        let p3 = p3_comparisons(&spec, n_max);
        match order_by_modulus(&spec.roots()) {
            Ok((alpha, _)) => {
                let residual = |n: usize| alpha.scale(&terms[n]).add_scalar(&-terms[n + 1].clone());
                for n in 0..=n_max {
                    let direct = residual(n).cmp_abs(&residual(n + 1)).unwrap() != Ordering::Less;
                    prop_assert_eq!(p3[n], direct, "p3 at {}", n);
                    if terms[n].is_zero() || terms[n + 1].is_zero() {
                        prop_assert_eq!(p2[n], None);
                        continue;
                    }
                    let dist = |n: usize| alpha.add_scalar(&-(&terms[n + 1] / &terms[n]));
                    let direct = dist(n).cmp_abs(&dist(n + 1)).unwrap() != Ordering::Less;
                    prop_assert_eq!(p2[n], Some(direct), "p2 at {}", n);
                }
            }
            Err(_) => {
                // |x alpha - y|^2 for alpha = (a + i sqrt(-disc)) / 2
                let neg_disc = -spec.discriminant();
                let (a, quarter) = (spec.a().clone(), q(1, 4));
                let modulus = |x: &Rational, y: &Rational| {
                    let re = x * &a / q(2, 1) - y;
                    &re * &re + x * x * &neg_disc * &quarter
                };
                for n in 0..=n_max {
                    let (u, v, w) = (&terms[n], &terms[n + 1], &terms[n + 2]);
                    prop_assert_eq!(p3[n], modulus(u, v) >= modulus(v, w), "p3 at {}", n);
                    if u.is_zero() || v.is_zero() {
                        prop_assert_eq!(p2[n], None);
                        continue;
                    }
                    let direct = modulus(&q(1, 1), &(v / u)) >= modulus(&q(1, 1), &(w / v));
                    prop_assert_eq!(p2[n], Some(direct), "p2 at {}", n);
                }
            }
        }
    }

    #[test]
    fn riccati_states_are_term_ratios(spec in any_spec()) {
        prop_assume!(!spec.v0().is_zero());
        let terms = iterate(&spec, 31).terms;
        let orbit = riccati_orbit(spec.a().clone(), spec.b().clone(), spec.v1() / spec.v0(), 30);
        let Ok(orbit) = orbit else {
            prop_assert!(spec.v1().is_zero());
            return Ok(());
        };
        let first_zero = (1..=31).find(|&n| terms[n].is_zero());
        for (k, state) in orbit.states.iter().enumerate() {
            prop_assert_eq!(state, &(&terms[k + 1] / &terms[k]));
        }
        prop_assert_eq!(orbit.terminated_early, first_zero.map(|n| n - 1));
        if first_zero.is_none() {
            prop_assert_eq!(orbit.states.len(), 31);
        }
    }

    #[test]
    fn rational_roots_are_fixed(r in nonzero(), s in nonzero()) {
        prop_assume!(r != -s.clone());
        let orbit = riccati_orbit(&r + &s, &r * &s, r.clone(), 5).unwrap();
        prop_assert!(orbit.states.iter().all(|x| *x == r));
    }

    #[test]
    fn riccati_approach_is_monotone(spec in h_spec()) {
        prop_assume!(ratio_monotone_h(&spec).map(|v| v.holds).unwrap_or(false));
        let (alpha, _) = order_by_modulus(&spec.roots()).unwrap();
        let orbit = riccati_orbit(spec.a().clone(), spec.b().clone(), spec.a().clone(), 40).unwrap();
        let dist = |x: &Rational| alpha.add_scalar(&-x.clone());
        for pair in orbit.states.windows(2) {
            prop_assert_ne!(dist(&pair[0]).cmp_abs(&dist(&pair[1])).unwrap(), Ordering::Less);
        }
    }
}

fn sign_product(x: Ordering, y: Ordering) -> Ordering {
    match (x, y) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        _ if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

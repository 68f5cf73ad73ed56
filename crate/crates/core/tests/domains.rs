//! Region membership and the integer lattice of the coefficient domain.

mod common;

use common::q;
use monotone_recurrence::decisions::{positive_monotone_h, ratio_monotone_h, weighted_monotone};
use monotone_recurrence::numtheory::{
    boundary_characterization, enumerate_generalized_fibonacci, is_irreducible, is_quadratic_pisot, IntCoeffPair,
};
use monotone_recurrence::oracle::{check_p1_window, check_p2_window, check_p3_window};
use monotone_recurrence::regions::{contains, contains_coeff_plane, contains_root_plane, rasterize, RegionId};
use monotone_recurrence::{Rational, RecurrenceSpec};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn grid_point(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    // multiples of 1/40 inside [lo, hi]
    (lo * 40..=hi * 40).prop_map(|k| q(k, 40))
}

/// Root-plane domains spelled out on floats.
fn root_plane_f64(region: RegionId, alpha: f64, beta: f64) -> bool {
    let sum = alpha + beta;
    let ordered = beta.abs() <= alpha.abs();
    match region {
        RegionId::D1 => sum >= 1.0 && alpha >= 1.0 && ordered,
        RegionId::D2 => beta.abs() <= sum.abs() && ordered,
        RegionId::D3 => beta.abs() <= 1.0 && ordered,
        RegionId::D => sum >= 1.0 && alpha >= 1.0 && beta.abs() <= 1.0,
        _ => unreachable!(),
    }
}

/// Real roots `(alpha, beta)` with `|alpha| >= |beta|`, as floats.
fn roots_f64(a: f64, b: f64) -> Option<(f64, f64)> {
    let disc = a * a - 4.0 * b;
    (disc >= 0.0).then(|| {
        let (p, m) = ((a + disc.sqrt()) / 2.0, (a - disc.sqrt()) / 2.0);
        if m.abs() > p.abs() {
            (m, p)
        } else {
            (p, m)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn root_plane_matches_float_definition(alpha in grid_point(-3, 3), beta in grid_point(-3, 3)) {
        // floats round near the edges, so only points off every boundary are compared
        let (x, y) = (alpha, beta);
        for region in [RegionId::D1, RegionId::D2, RegionId::D3, RegionId::D] {
            let exact = contains_root_plane(region, &x, &y).unwrap();
            let (fx, fy) = (f(&x), f(&y));
            let margin = [fx + fy - 1.0, fx - 1.0, fy.abs() - 1.0, fy.abs() - fx.abs(), fy.abs() - (fx + fy).abs()];
            if margin.iter().all(|m| m.abs() > 1e-9) {
                prop_assert_eq!(exact, root_plane_f64(region, fx, fy), "{} at ({}, {})", region, x, y);
            }
        }
    }

    #[test]
    fn primed_domains_are_root_domains_of_real_roots(r in grid_point(-3, 3), s in grid_point(-3, 3)) {
        // (a, b) = (r + s, r s) has roots r and s; the larger modulus is alpha
        let (alpha, beta) = if s.abs() > r.abs() { (s.clone(), r.clone()) } else { (r.clone(), s.clone()) };
        let (a, b) = (&r + &s, &r * &s);
        let pairs = [(RegionId::D1, RegionId::D1P), (RegionId::D2, RegionId::D2P), (RegionId::D3, RegionId::D3P)];
        for (root, coeff) in pairs {
            let expected = contains_root_plane(root, &alpha, &beta).unwrap();
            // D1P additionally asks a >= 1, which D1 implies through alpha + beta >= 1
            prop_assert_eq!(contains_coeff_plane(coeff, &a, &b).unwrap(), expected, "{} at ({}, {})", coeff, a, b);
        }
    }

    #[test]
    fn coefficient_plane_matches_float_roots(a in grid_point(-1, 5), b in grid_point(-7, 5)) {
        let (fa, fb) = (f(&a), f(&b));
        let Some((alpha, beta)) = roots_f64(fa, fb) else { return Ok(()) };
        prop_assume!((fa * fa - 4.0 * fb).abs() > 1e-6);
        let margins = [alpha - 1.0, beta.abs() - fa.abs(), beta.abs() - 1.0, fa - 1.0];
        prop_assume!(margins.iter().all(|m| m.abs() > 1e-9));
        prop_assert_eq!(contains_coeff_plane(RegionId::D1P, &a, &b).unwrap(), fa >= 1.0 && alpha >= 1.0);
        prop_assert_eq!(contains_coeff_plane(RegionId::D2P, &a, &b).unwrap(), beta.abs() <= fa.abs());
        prop_assert_eq!(contains_coeff_plane(RegionId::D3P, &a, &b).unwrap(), beta.abs() <= 1.0);
    }

    #[test]
    fn dp_has_real_roots_and_all_three_properties(a in grid_point(1, 5), b in grid_point(-7, 5)) {
        prop_assume!(contains(RegionId::DP, &a, &b) && !b.is_zero());
        let disc = &a * &a - q(4, 1) * &b;
        let shifted = &a - q(2, 1);
        prop_assert!(disc >= &shifted * &shifted);
        let spec = RecurrenceSpec::h_type(a.clone(), b.clone(), q(1, 1)).unwrap();
        prop_assert!(positive_monotone_h(&spec).unwrap().holds);
        prop_assert!(ratio_monotone_h(&spec).unwrap().holds);
        prop_assert!(weighted_monotone(&spec).holds);
    }
}

fn f(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap()
}

#[test]
fn raster_cells_agree_with_membership() {
    let bbox = (q(-1, 1), q(5, 1), q(-7, 1), q(5, 1));
    let raster = rasterize(RegionId::DP, bbox, 24).unwrap();
    for row in 0..24 {
        for col in 0..24 {
            let (x, y) = raster.center(row, col);
            assert_eq!(raster.cell(row, col), contains(RegionId::DP, &x, &y), "cell ({row}, {col})");
        }
    }
    assert!(raster.member_count() > 0);
}

#[test]
fn irreducibility_matches_the_excluded_lines() {
    for a in 1..=50i64 {
        for b in (-a - 1)..=(a - 1) {
            let excluded = b == -a - 1 || b == 0 || b == a - 1;
            assert_eq!(is_irreducible(IntCoeffPair::new(a, b)), !excluded, "({a}, {b})");
        }
    }
}

#[test]
fn interior_pairs_are_pisot() {
    for a in 1..=20i64 {
        for b in (-a)..=(a - 2) {
            let p = IntCoeffPair::new(a, b);
            if b != 0 {
                assert!(is_quadratic_pisot(p), "({a}, {b})");
            }
        }
    }
    assert!(enumerate_generalized_fibonacci(20).into_iter().all(is_quadratic_pisot));
}

#[test]
fn enumerated_pairs_are_monotone_in_every_sense() {
    for p in enumerate_generalized_fibonacci(12) {
        let spec = p.h_spec().unwrap();
        assert!(positive_monotone_h(&spec).unwrap().holds, "{p:?}");
        assert!(ratio_monotone_h(&spec).unwrap().holds, "{p:?}");
        assert!(weighted_monotone(&spec).holds, "{p:?}");
        assert!(check_p1_window(&spec, 0, 200).holds_on_window, "{p:?}");
        assert!(check_p2_window(&spec, 200).unwrap().holds_on_window, "{p:?}");
        assert!(check_p3_window(&spec, 200).holds_on_window, "{p:?}");
    }
}

#[test]
fn boundary_scan_is_stable_and_complete() {
    let expected = vec![IntCoeffPair::new(1, -1)];
    for bound in [10, 100, 1000] {
        assert_eq!(boundary_characterization(bound), expected, "bound {bound}");
    }
    // brute force over the whole boundary, slanted edges included
    let mut found = Vec::new();
    for a in 1..=60i64 {
        for b in -80..=80i64 {
            let on = contains_coeff_plane(RegionId::DpBoundary, &q(a, 1), &q(b, 1)).unwrap();
            if on && b != 0 && is_irreducible(IntCoeffPair::new(a, b)) {
                found.push(IntCoeffPair::new(a, b));
            }
        }
    }
    assert_eq!(found, expected);
}

use std::collections::HashSet;

use annulus_core::oracle::{check_genus_formula, count_double_points, sample_curve, CoefficientCurve};
use annulus_core::rational::{int, ratio};
use annulus_core::{AnnulusProfile, Error};

fn prof(p: i64, q: i64, r: i64, s: i64) -> AnnulusProfile {
    AnnulusProfile::new(p, q, r, s).unwrap()
}

#[test]
fn generic_counts() {
    for (x, expected) in [(prof(1, 2, 1, 2), 1), (prof(1, 2, 1, 3), 2), (prof(2, 3, 2, 3), 7)] {
        let c = count_double_points(&sample_curve(&x, 11).unwrap()).unwrap();
        assert_eq!(c.count, expected, "{x}");
        assert_eq!(c.relevant_degree as u64, 2 * expected, "{x}");
    }
}

#[test]
fn count_invariant_under_rescaling() {
    for x in [prof(1, 2, 1, 3), prof(3, 2, 1, 2), prof(2, 3, -1, 2)] {
        let curve = sample_curve(&x, 5).unwrap();
        let base = count_double_points(&curve).unwrap().count;
        for c in [int(2), ratio(-3, 2), ratio(1, 5)] {
            assert_eq!(count_double_points(&curve.rescaled(&c)).unwrap().count, base, "{x}");
        }
    }
}

#[test]
fn known_double_point() {
    // x = t + 1/t agrees on t and 1/t; y = t^2 + t + 1/t - 1/t^2 then agrees
    // only for t = ±i, one double point at the origin.
    let x = prof(1, 2, 1, 2);
    let curve = CoefficientCurve {
        profile: x,
        x_coeffs: vec![int(0), int(1)],
        y_coeffs: vec![int(1), int(0), int(1), int(-1)],
        seed: 0,
    };
    let (a, b) = curve.point(&int(2));
    let (c, d) = curve.point(&ratio(1, 2));
    assert_eq!(a, c);
    assert_ne!(b, d);
    assert_eq!(count_double_points(&curve).unwrap().count, 1);
}

#[test]
fn degenerate_samples_are_reported() {
    let x = prof(1, 2, 1, 2);
    // y = x^2 + 2, so the parametrisation covers a parabola twice.
    let curve = CoefficientCurve {
        profile: x,
        x_coeffs: vec![int(0), int(1)],
        y_coeffs: vec![int(0), int(4), int(0), int(1)],
        seed: 0,
    };
    assert!(matches!(count_double_points(&curve), Err(Error::Degenerate(_))));
}

#[test]
fn seeds_rarely_collide() {
    let x = prof(2, 3, 2, 3);
    let draws: HashSet<_> = (0..100)
        .map(|seed| {
            let c = sample_curve(&x, seed).unwrap();
            (c.x_coeffs, c.y_coeffs)
        })
        .collect();
    assert!(draws.len() >= 99);
}

#[test]
fn report_shape() {
    let report = check_genus_formula(&prof(1, 2, 1, 3), 5, 3).unwrap();
    assert_eq!(report.two_delta_max, 4);
    assert_eq!(report.agreement, "5/5");
    assert!(report.mismatches.is_empty());
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["profile"], serde_json::json!([1, 2, 1, 3]));
    assert!(json["samples"][0]["count"]["relevantDegree"].is_u64());
    let curve = serde_json::to_value(sample_curve(&prof(1, 2, 1, 3), 3).unwrap()).unwrap();
    assert!(curve["xCoeffs"][0].is_string());
}

mod common;

use annulus_core::budget::{self, ExtNuFloor, SingularityBudget};
use annulus_core::lattice::{canonical_divisor, pairings_with_components, zariski_by_support_growth, zariski_fujita};
use annulus_core::oracle::poly::Poly;
use annulus_core::rational::{self, int, ratio, Rational};
use annulus_core::resolution::resolve_branch;
use annulus_core::topology::excess_floor;
use annulus_core::verifier::{max_hidden_capacity, verify_profile, OptimizerOptions};
use annulus_core::{AnnulusProfile, BranchTopology};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn coprime_pair() -> impl Strategy<Value = (u32, u32)> {
    (2u32..14, 3u32..30).prop_filter_map("coprime, m < n", |(m, n)| {
        (m < n && num_integer::gcd(m, n) == 1).then_some((m, n))
    })
}

fn two_pair_topology() -> impl Strategy<Value = BranchTopology> {
    (coprime_pair(), 2u32..4, 1u32..12).prop_filter_map("valid second pair", |((m1, n1), m2, extra)| {
        let n2 = n1 * m2 + extra;
        if num_integer::gcd(m2, n2) != 1 {
            return None;
        }
        BranchTopology::new(vec![(m1, n1), (m2, n2)]).ok()
    })
}

fn topology() -> impl Strategy<Value = BranchTopology> {
    prop_oneof![
        coprime_pair().prop_map(|p| BranchTopology::new(vec![p]).unwrap()),
        two_pair_topology(),
    ]
}

fn classified_profile(max: i64) -> impl Strategy<Value = AnnulusProfile> {
    (1..=max, -max..=max, -max..=max, 1..=max).prop_filter_map("classifiable", |(p, q, r, s)| {
        let x = AnnulusProfile::new(p, q, r, s).ok()?;
        x.classify().ok().map(|_| x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn codimension_floors(t in topology()) {
        let ext = t.external_codimension().unwrap();
        let m = t.multiplicity();
        prop_assert!(ext + 3 >= 2 * m);
        prop_assert!(ext >= 1);
        prop_assert_eq!(t.milnor_number(), 2 * t.delta_invariant());
        prop_assert!(2 * t.delta_invariant() <= m * (ext + 2 - m));
    }

    #[test]
    fn rough_m_number_is_external_codimension(t in topology()) {
        let g = resolve_branch(&t).unwrap();
        let km = annulus_core::lattice::rough_m_number(&g).unwrap();
        prop_assert_eq!(km, int(t.external_codimension().unwrap() as i64));
    }

    #[test]
    fn delta_matches_semigroup_gaps((m, n) in coprime_pair()) {
        let t = BranchTopology::new(vec![(m, n)]).unwrap();
        prop_assert_eq!(t.delta_invariant(), common::semigroup_gaps(m as u64, n as u64));
    }

    #[test]
    fn excess_floor_symmetric((m, n) in coprime_pair()) {
        let a = excess_floor(m, n).unwrap();
        prop_assert_eq!(&a, &excess_floor(n, m).unwrap());
        prop_assert!(a > ratio(1, 2));
    }

    #[test]
    fn canonical_divisor_resubstitutes(t in topology()) {
        let g = resolve_branch(&t).unwrap();
        let k = canonical_divisor(&g).unwrap();
        let pairings = pairings_with_components(&g, &k).unwrap();
        for (kj, w) in pairings.iter().zip(g.weights()) {
            prop_assert_eq!(kj + int(*w), int(-2));
        }
    }

    #[test]
    fn zariski_orthogonality(t in topology()) {
        let g = resolve_branch(&t).unwrap();
        let z = zariski_fujita(&g).unwrap();
        let pe = z.positive_pairings(&g).unwrap();
        for (j, c) in z.negative.coefficients.iter().enumerate() {
            prop_assert!(!c.is_negative() && *c < Rational::one());
            if !c.is_zero() {
                prop_assert!(pe[j].is_zero());
            } else {
                prop_assert!(!pe[j].is_negative());
            }
        }
        prop_assert_eq!(z, zariski_by_support_growth(&g).unwrap());
    }

    #[test]
    fn symmetries_preserve_invariants(x in classified_profile(12)) {
        for y in x.orbit() {
            prop_assert_eq!(y.two_delta_max(), x.two_delta_max());
            prop_assert_eq!(y.canonical().unwrap(), x.canonical().unwrap());
        }
        let (c, _) = x.canonical().unwrap();
        prop_assert_eq!(c.canonical().unwrap().0, c);
    }

    #[test]
    fn profile_text_round_trip(x in classified_profile(20)) {
        prop_assert_eq!(x.to_string().parse::<AnnulusProfile>().unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<AnnulusProfile>(&json).unwrap(), x);
    }

    #[test]
    fn reduction_terminates_in_reduced_form(x in classified_profile(10)) {
        if let Ok(y) = x.reduce() {
            prop_assert!(y.is_reduced());
            prop_assert!(y.is_handsome().unwrap());
        }
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let x = ratio(n, d);
        prop_assert_eq!(rational::parse(&rational::format(&x)).unwrap(), x);
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(-9i64..10, 1..6), b in prop::collection::vec(-9i64..10, 1..6)) {
        let pa = Poly::new(a.iter().map(|&x| int(x)).collect());
        let pb = Poly::new(b.iter().map(|&x| int(x)).collect());
        prop_assume!(!pa.is_zero() && !pb.is_zero());
        let g = pa.gcd(&pb);
        prop_assert!(pa.div_rem(&g).1.is_zero());
        prop_assert!(pb.div_rem(&g).1.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// No admissible budget beats the optimizer, and the witness is admissible.
    #[test]
    fn optimizer_dominates_random_budgets(
        x in classified_profile(8),
        ms in prop::collection::vec(2u32..5, 4),
        extra in prop::collection::vec(0u64..6, 7),
    ) {
        let options = OptimizerOptions::default();
        let Ok((best, witness)) = max_hidden_capacity(&x, options) else { return Ok(()) };
        prop_assert_eq!(budget::hidden_capacity(&x, &witness, ExtNuFloor::Standard), Ok(best));
        let mut ms = ms;
        ms.sort_unstable_by(|a, b| b.cmp(a));
        let candidate = SingularityBudget {
            extnu: ms.iter().zip(&extra).map(|(&m, &e)| ExtNuFloor::Standard.of(m) + e).collect(),
            m: ms,
            nu0: extra[4],
            nu_inf: extra[5],
            nu_tan: extra[6],
        };
        if let Ok(c) = budget::hidden_capacity(&x, &candidate, ExtNuFloor::Standard) {
            prop_assert!(c <= best);
        }
    }

    #[test]
    fn certificates_round_trip(x in classified_profile(8)) {
        let cert = verify_profile(&x, OptimizerOptions::default()).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: annulus_core::verifier::certificate::Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, cert);
    }
}

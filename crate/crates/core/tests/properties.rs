use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use spinc_core::charring::char_sum;
use spinc_core::cutting::{build_cut_data, check_additivity, CutSpecification};
use spinc_core::fpdata::{polarize, validate, FixedPointData};
use spinc_core::kostant::{
    character_rational, character_series, multiplicity, multiplicity_isolated, rational_character, Conventions,
};
use spinc_core::sphere::{canonical_cut_spec, closed_form_multiplicity, cut_identity, sphere_data, SphereStructure};
use spinc_testkit::{realizable_cut, unpolarize, valid_polarized, Bounds};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn window(data: &FixedPointData) -> (i64, i64) {
    let r = data.max_abs_det_weight() / 2 + 20;
    (-r, r)
}

fn conv() -> Conventions {
    Conventions::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counting_matches_series_on_valid_data(seed in any::<u64>(), m in 1u32..=2) {
        let d = valid_polarized(&mut rng(seed), m, Bounds::default());
        let (lo, hi) = window(&d);
        let series = character_series(&d, lo, hi, conv()).unwrap();
        for beta in lo..=hi {
            prop_assert_eq!(multiplicity(&d, beta, conv()).unwrap(), series[&beta], "beta {}", beta);
        }
    }

    #[test]
    fn isolated_engine_agrees_with_general_one(seed in any::<u64>(), m in 1u32..=2) {
        let mut d = valid_polarized(&mut rng(seed), m, Bounds::default());
        d.codim2.clear();
        for beta in -25..=25 {
            prop_assert_eq!(multiplicity_isolated(&d, beta).unwrap(), multiplicity(&d, beta, conv()).unwrap());
        }
    }

    #[test]
    fn rational_and_counting_paths_agree(seed in any::<u64>(), m in 1u32..=2) {
        let ex = realizable_cut(&mut rng(seed), m, Bounds::default());
        let ch = character_rational(&ex.data, conv()).unwrap();
        let (lo, hi) = window(&ex.data);
        for beta in lo..=hi {
            prop_assert_eq!(ch.multiplicity(beta), multiplicity(&ex.data, beta, conv()).unwrap(), "beta {}", beta);
        }
        // the whole support lies in the window
        prop_assert!(ch.iter().all(|(b, _)| lo <= b && b <= hi));
    }

    #[test]
    fn polarization_preserves_the_localization_sum(seed in any::<u64>(), m in 1u32..=2) {
        let mut r = rng(seed);
        let d = valid_polarized(&mut r, m, Bounds::default());
        let u = unpolarize(&mut r, &d);
        prop_assert!(validate(&u).is_valid());
        let p = polarize(&u).unwrap();
        prop_assert!(p.is_polarized());
        prop_assert!(validate(&p).is_valid());
        prop_assert_eq!(&polarize(&p).unwrap(), &p);
        let before = rational_character(&u, conv()).unwrap();
        let after = rational_character(&p, conv()).unwrap();
        prop_assert!(before.equivalent(&after));
    }

    #[test]
    fn polarization_preserves_realizable_characters(seed in any::<u64>(), m in 1u32..=2) {
        let mut r = rng(seed);
        let ex = realizable_cut(&mut r, m, Bounds::default());
        let u = unpolarize(&mut r, &ex.data);
        prop_assert_eq!(
            character_rational(&u, conv()).unwrap(),
            character_rational(&polarize(&u).unwrap(), conv()).unwrap()
        );
    }

    #[test]
    fn random_cuts_are_additive(seed in any::<u64>(), m in 1u32..=2) {
        let ex = realizable_cut(&mut rng(seed), m, Bounds::default());
        let cut = build_cut_data(&ex.data, &ex.spec).unwrap();
        prop_assert!(validate(&cut.plus).is_valid());
        prop_assert!(validate(&cut.minus).is_valid());
        prop_assert!(cut.plus.is_polarized() && cut.minus.is_polarized());
        let report = check_additivity(&ex.data, &cut.plus, &cut.minus, conv()).unwrap();
        prop_assert!(report.holds, "{}", report);
        prop_assert!(report.rows.iter().all(|r| r.holds()));
    }

    #[test]
    fn cut_specs_round_trip(seed in any::<u64>(), m in 1u32..=2) {
        let ex = realizable_cut(&mut rng(seed), m, Bounds::default());
        let text = ex.spec.to_json();
        prop_assert_eq!(&CutSpecification::from_json(&text).unwrap(), &ex.spec);
        let cut = build_cut_data(&ex.data, &ex.spec).unwrap();
        prop_assert_eq!(&FixedPointData::from_json(&cut.plus.to_json()).unwrap(), &cut.plus);
    }

    #[test]
    fn sphere_engines_match_closed_form(k in -12i64..=12, n in -12i64..=12, beta in -40i64..=40) {
        let s = SphereStructure::new(k, n);
        let d = sphere_data(s);
        let expected = closed_form_multiplicity(s, beta);
        prop_assert_eq!(multiplicity(&d, beta, conv()).unwrap(), expected);
        prop_assert_eq!(character_rational(&d, conv()).unwrap().multiplicity(beta), expected);
    }

    #[test]
    fn sphere_cut_identity(k in -12i64..=12, n in -12i64..=12) {
        let s = SphereStructure::new(k, n);
        let cut = build_cut_data(&sphere_data(s), &canonical_cut_spec()).unwrap();
        let (p, q) = cut_identity(s);
        let plus = character_rational(&cut.plus, conv()).unwrap();
        let minus = character_rational(&cut.minus, conv()).unwrap();
        prop_assert_eq!(&plus, &character_rational(&sphere_data(p), conv()).unwrap());
        prop_assert_eq!(&minus, &character_rational(&sphere_data(q), conv()).unwrap());
        prop_assert_eq!(char_sum(&plus, &minus), character_rational(&sphere_data(s), conv()).unwrap());
    }
}

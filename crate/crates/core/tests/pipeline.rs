use std::collections::BTreeSet;

use iwk_core::admissible::{adm, k_adm, tau_of};
use iwk_core::iwahori_weyl::IwElement;
use iwk_core::levi_reduction::{find_path, i_mu_b_m, levi_of_newton};
use iwk_core::root_datum::{preset, CoWeight, DatumSpec, RootDatum};
use iwk_core::sigma_conj::{b_g_mu, invariants};
use iwk_core::strata::{component_report, strata_table, ComponentCount};
use proptest::prelude::*;

#[test]
fn custom_spec_round_trip() {
    let spec = DatumSpec::Custom(preset("GSp4").unwrap());
    let text = spec.to_json();
    let d = RootDatum::build(&DatumSpec::from_json(&text).unwrap()).unwrap();
    let p = RootDatum::preset("GSp4").unwrap();
    let mu = CoWeight::from_i64(&[1, 1, 1]);
    let a: Vec<String> = adm(&d, &mu).unwrap().elements.iter().map(|x| x.label()).collect();
    let b: Vec<String> = adm(&p, &mu).unwrap().elements.iter().map(|x| x.label()).collect();
    assert_eq!(a, b);
    let r = RootDatum::build(&DatumSpec::from_json(r#"{"preset": "SL3"}"#).unwrap()).unwrap();
    assert_eq!(r.rank(), 2);
}

#[test]
fn bad_specs_are_rejected() {
    let mut spec = preset("SL3").unwrap();
    spec.cartan[0][1] = 1;
    assert_eq!(RootDatum::from_custom(spec).unwrap_err().code(), "BAD_CARTAN");
    let err = DatumSpec::from_json(r#"{"preset": "GL2", "name": "x"}"#).unwrap_err();
    assert_eq!(err.code(), "DATUM_ERROR");
    assert_eq!(RootDatum::preset("GL9").unwrap_err().code(), "DATUM_ERROR");
}

/// Admissible set, sigma-classes, strata and Levi data for a minuscule
/// coweight of GL3, read through the public API only.
#[test]
fn gl3_pipeline() {
    let d = RootDatum::preset("GL3").unwrap();
    let mu = CoWeight::from_i64(&[1, 0, 0]);
    let set = adm(&d, &mu).unwrap();
    assert_eq!(set.elements.len(), 7);
    let tau = tau_of(&d, &mu).unwrap();
    assert_eq!(tau.length(), 0);

    let b = b_g_mu(&d, &mu).unwrap();
    assert!(b.coherent());
    assert_eq!(b.basic().len(), 1);

    let t = strata_table(&d, &mu, &[]).unwrap();
    assert_eq!(t.len(), set.elements.len());
    let basic: BTreeSet<usize> = t.iter().filter(|r| r.basic).map(|r| r.length).collect();
    assert!(basic.contains(&0));

    let basic_class = &b.basic()[0].invariants;
    let r = component_report(&d, &mu, basic_class, &[]).unwrap();
    assert!(matches!(r.count, ComponentCount::Symbolic(_)));

    for e in &b.entries {
        let levi = levi_of_newton(&d, &e.invariants.newton);
        let set = i_mu_b_m(&d, &mu, &e.invariants, &levi).unwrap();
        assert!(!set.is_empty());
        for x in &set {
            for y in &set {
                assert!(find_path(&mu, &levi, x, y).unwrap().is_some());
            }
        }
    }

    let ek = k_adm(&d, &mu, &[1, 2]).unwrap();
    assert!(ek.elements.len() <= set.elements.len());
}

fn element(preset: &str, word: &[usize]) -> IwElement {
    let d = RootDatum::preset(preset).unwrap();
    let gens = IwElement::generators(&d);
    word.iter().fold(IwElement::identity(&d), |x, &i| &x * &gens[i % gens.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_are_conjugation_invariant(
        p in prop::sample::select(vec!["GL3", "GSp4", "U3-unram", "ResE2-GL2"]),
        w in prop::collection::vec(0usize..4, 0..6),
        g in prop::collection::vec(0usize..4, 0..4),
    ) {
        let x = element(p, &w);
        let h = element(p, &g);
        prop_assert_eq!(invariants(&x), invariants(&x.sigma_conjugate_by(&h)));
    }
}

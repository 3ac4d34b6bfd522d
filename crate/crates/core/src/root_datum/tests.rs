use super::*;
use proptest::prelude::*;

fn cw(v: &[i64]) -> CoWeight {
    CoWeight::from_i64(v)
}

#[test]
fn gl2_defining_data() {
    let d = RootDatum::preset("GL2").unwrap();
    assert_eq!(d.dim(), 2);
    assert_eq!(d.simple_coroot(0), cw(&[1, -1]));
    assert_eq!(d.system().root(0).covector, vec![Int::from(1), Int::from(-1)]);
    assert!(d.is_split());
    assert_eq!(d.weyl().order(), 2);
}

#[test]
fn sl2_pairing_is_two() {
    let d = RootDatum::preset("SL2").unwrap();
    assert_eq!(d.system().pair(0, &cw(&[1]).0), Int::from(2));
}

#[test]
fn rese2_twist_swaps_factors() {
    let d = RootDatum::preset("ResE2-GL2").unwrap();
    assert_eq!(d.dim(), 4);
    assert_eq!(d.simple_coroot(1), cw(&[0, 0, 1, -1]));
    assert_eq!(d.twist_order(), 2);
    assert_eq!(d.sigma_coweight(&cw(&[1, 0, 0, 0])), cw(&[0, 0, 1, 0]));
    assert_eq!(d.sigma_simple(0), 1);
}

#[test]
fn all_presets_build() {
    for name in PRESET_NAMES {
        let d = RootDatum::preset(name).unwrap();
        assert_eq!(d.name(), *name);
        d.fold().unwrap();
    }
    assert_eq!(RootDatum::preset("nope").unwrap_err().code(), "DATUM_ERROR");
}

#[test]
fn weyl_orders_match_types() {
    let expect = [("GL3", 6), ("SL3", 6), ("GSp4", 8), ("Sp4", 8), ("ResE2-GL2", 4)];
    for (name, n) in expect {
        assert_eq!(RootDatum::preset(name).unwrap().weyl().order(), n, "{name}");
    }
    let g2 = RootDatum::from_custom(simply_connected("G2", standard_cartan(CartanType::new('G', 2)), None)).unwrap();
    assert_eq!(g2.weyl().order(), 12);
    assert_eq!(g2.system().num_positive(), 6);
    let f4 = RootDatum::from_custom(simply_connected("F4", standard_cartan(CartanType::new('F', 4)), None)).unwrap();
    assert_eq!(f4.system().num_positive(), 24);
    assert_eq!(f4.weyl().order(), 1152);
}

#[test]
fn weyl_words_are_reduced_and_consistent() {
    let d = RootDatum::preset("GSp4").unwrap();
    let w = d.weyl();
    for x in w.elements() {
        assert_eq!(w.word(x).len(), w.length(x));
        assert_eq!(w.from_word(w.word(x)), x);
        assert_eq!(w.mul(x, w.inv(x)), w.identity());
    }
    assert_eq!(w.length(w.longest()), d.system().num_positive());
}

#[test]
fn validation_errors() {
    let mut c = preset("GL2").unwrap();
    c.root_pairing = vec![vec![1, 0]];
    assert_eq!(RootDatum::from_custom(c).unwrap_err().code(), "BAD_PAIRING");

    let mut c = preset("GL3").unwrap();
    c.cartan = vec![vec![2, -1], vec![-1, 3]];
    assert_eq!(RootDatum::from_custom(c).unwrap_err().code(), "BAD_CARTAN");

    // affine type is rejected
    let c = simply_connected("A1~", vec![vec![2, -2], vec![-2, 2]], None);
    let err = RootDatum::from_custom(c).unwrap_err();
    assert_eq!(err.code(), "BAD_CARTAN");

    let mut c = preset("GSp4").unwrap();
    c.twist = Some(TwistSpec {
        perm: vec![1, 0],
        lattice_endo: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    });
    let err = RootDatum::from_custom(c).unwrap_err();
    assert_eq!(err.code(), "BAD_TWIST");
    assert!(err.to_string().contains("$.twist.perm"));

    let mut c = preset("GL3").unwrap();
    c.twist = Some(TwistSpec {
        perm: vec![1, 0],
        lattice_endo: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    });
    assert_eq!(RootDatum::from_custom(c).unwrap_err().code(), "BAD_TWIST");
}

#[test]
fn torsion_lattice() {
    // PGL2 x Z/2 with torsion never pairing
    let c = CustomDatum {
        name: "PGL2xZ2".into(),
        cartan: vec![vec![2]],
        lattice: LatticeSpec { free_rank: 1, torsion: vec![2] },
        simple_coroots: vec![vec![2, 1]],
        root_pairing: vec![vec![1]],
        twist: None,
        echelonnage_override: None,
    };
    let d = RootDatum::from_custom(c).unwrap();
    assert_eq!(d.coweight(&[0, 3]).unwrap(), cw(&[0, 1]));
    assert_eq!(d.act(d.weyl().simple(0), &cw(&[1, 0])), cw(&[-1, 1]));
    assert_eq!(d.pi1().order(), Some(Int::from(4)));
}

#[test]
fn dominant_rep_examples() {
    let d = RootDatum::preset("GL2").unwrap();
    assert_eq!(d.dominant_rep(&cw(&[0, 1])), cw(&[1, 0]));
    assert!(d.is_dominant(&cw(&[1, 0])));
    let half = RatCoWeight::from_frac(&[(1, 2), (1, 2)]);
    assert_eq!(d.dominant_rep_rat(&half), half);
}

#[test]
fn dominance_examples() {
    let d = RootDatum::preset("GL2").unwrap();
    assert!(d.dominance_leq(&cw(&[1, 0]), &cw(&[1, 0])).unwrap());
    assert!(d.dominance_leq(&cw(&[1, 1]), &cw(&[2, 0])).unwrap());
    assert!(!d.dominance_leq(&cw(&[2, 0]), &cw(&[1, 1])).unwrap());
    assert_eq!(d.dominance_leq(&cw(&[0, 1]), &cw(&[1, 0])).unwrap_err().code(), "NOT_DOMINANT");
    assert_eq!(d.dominant_below(&cw(&[2, 0])).unwrap(), vec![cw(&[1, 1]), cw(&[2, 0])]);
}

#[test]
fn galois_average_examples() {
    let d = RootDatum::preset("ResE2-GL2").unwrap();
    let avg = d.galois_average(&cw(&[1, 0, 0, 0]));
    assert_eq!(avg, RatCoWeight::from_frac(&[(1, 2), (0, 1), (1, 2), (0, 1)]));
    assert_eq!(d.sigma_rat(&avg), avg);
    assert!(d.galois_average(&cw(&[0, 0, 0, 0])).is_zero());
    let g = RootDatum::preset("GL3").unwrap();
    assert_eq!(g.galois_average(&cw(&[2, 1, 0])), cw(&[2, 1, 0]).to_rat(3));
}

#[test]
fn folding_table() {
    let a3 = standard_cartan(CartanType::new('A', 3));
    let d = RootDatum::from_custom(simply_connected("A3-flip", a3, Some(vec![2, 1, 0]))).unwrap();
    let s = d.fold().unwrap();
    assert_eq!(s.types, vec!["C2"]);
    assert_eq!(s.weyl_order, 8);

    let d = RootDatum::preset("U3-unram").unwrap();
    let s = d.fold().unwrap();
    assert_eq!(s.types, vec!["A1"]);
    assert_eq!(s.weyl_order, 2);

    let a4 = standard_cartan(CartanType::new('A', 4));
    let d = RootDatum::from_custom(simply_connected("A4-flip", a4, Some(vec![3, 2, 1, 0]))).unwrap();
    assert_eq!(d.fold().unwrap().types, vec!["C2"]);

    let d4 = standard_cartan(CartanType::new('D', 4));
    let d = RootDatum::from_custom(simply_connected("D4-tri", d4.clone(), Some(vec![2, 1, 3, 0]))).unwrap();
    assert_eq!(d.fold().unwrap().types, vec!["G2"]);
    let d = RootDatum::from_custom(simply_connected("D4-flip", d4, Some(vec![0, 1, 3, 2]))).unwrap();
    assert_eq!(d.fold().unwrap().types, vec!["B3"]);

    let e6 = standard_cartan(CartanType::new('E', 6));
    // Bourbaki: 1<->6, 3<->5, 2 and 4 fixed
    let d = RootDatum::from_custom(simply_connected("E6-flip", e6, Some(vec![5, 1, 4, 3, 2, 0]))).unwrap();
    let s = d.fold().unwrap();
    assert_eq!(s.types, vec!["F4"]);
    assert_eq!(s.weyl_order, 1152);

    let split = RootDatum::preset("GL3").unwrap().fold().unwrap();
    assert_eq!(split.source, fold::FoldSource::Identity);
    assert_eq!(split.cartan, standard_cartan(CartanType::new('A', 2)));
}

#[test]
fn override_system() {
    let mut c = preset("SL2").unwrap();
    c.echelonnage_override = Some(OverrideSpec { simple_roots: vec![vec![1]], simple_coroots: vec![vec![2]] });
    let d = RootDatum::from_custom(c).unwrap();
    assert_eq!(d.fold().unwrap().source, fold::FoldSource::Override);
    assert_eq!(d.simple_coroot(0), cw(&[2]));
}

proptest! {
    #[test]
    fn dominant_rep_is_orbit_invariant(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        for name in ["GSp4", "GL3"] {
            let d = RootDatum::preset(name).unwrap();
            let l = cw(&[a, b, c]);
            let dom = d.dominant_rep(&l);
            prop_assert!(d.is_dominant(&dom));
            prop_assert_eq!(d.dominant_rep(&dom), dom.clone());
            for w in d.weyl().elements() {
                prop_assert_eq!(d.dominant_rep(&d.act(w, &l)), dom.clone());
            }
            let (rep, w) = d.dominant_rep_with(&l);
            prop_assert_eq!(d.act(w, &l), rep);
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    let d = RootDatum::preset("GSp4").unwrap();
    let mut dom = Vec::new();
    for a in -3..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                let l = cw(&[a, b, c]);
                if d.is_dominant(&l) {
                    dom.push(l);
                }
            }
        }
    }
    let leq = |x: &CoWeight, y: &CoWeight| d.dominance_leq(x, y).unwrap();
    for x in &dom {
        assert!(leq(x, x));
        for y in &dom {
            if x != y && leq(x, y) {
                assert!(!leq(y, x));
            }
            for z in &dom {
                if leq(x, y) && leq(y, z) {
                    assert!(leq(x, z));
                }
            }
        }
    }
}

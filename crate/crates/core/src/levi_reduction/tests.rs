use super::*;
use crate::admissible::{adm, tau_of};
use crate::root_datum::PRESET_NAMES;
use crate::sigma_conj::{b_g_mu, straight_elements};

fn cw(v: &[i64]) -> CoWeight {
    CoWeight::from_i64(v)
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

#[test]
fn levi_examples() {
    let d = RootDatum::preset("GL2").unwrap();
    let b = b_g_mu(&d, &cw(&[1, 0])).unwrap();
    let basic = &b.entries[0].invariants;
    let ord = &b.entries[1].invariants;
    assert_eq!(levi_of_newton(&d, &basic.newton).simple_subset(), &[0]);
    assert!(levi_of_newton(&d, &ord.newton).simple_subset().is_empty());
    assert_eq!(levi_of_newton(&d, &RatCoWeight::zero(2)).simple_subset(), &[0]);
}

#[test]
fn minuscule_reps() {
    let d = RootDatum::preset("GL2").unwrap();
    let g = LeviDatum::new(&d, &[0]);
    assert_eq!(minuscule_dominant_rep(&g, &ints(&[1])).unwrap().mu, cw(&[1, 0]));
    assert_eq!(minuscule_dominant_rep(&g, &ints(&[0])).unwrap().mu, cw(&[0, 0]));
    let t = LeviDatum::new(&d, &[]);
    let x = t.project(&cw(&[2, -1]));
    assert_eq!(minuscule_dominant_rep(&t, &x).unwrap().mu, cw(&[2, -1]));
}

#[test]
fn minuscule_section_roundtrip() {
    for name in ["GL3", "GSp4", "SL3", "PGL2", "U3-unram"] {
        let d = RootDatum::preset(name).unwrap();
        let r = d.rank();
        for mask in 0u32..(1 << r) {
            let j: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let levi = LeviDatum::new(&d, &j);
            let n = d.dim();
            let mut v = vec![-2i64; n];
            loop {
                let lam = cw(&v);
                let x = levi.project(&lam);
                let m = minuscule_dominant_rep(&levi, &x).unwrap();
                assert!(levi.is_minuscule_dominant(&m.mu), "{name} {j:?} {lam}");
                assert_eq!(levi.project(&m.mu), x);
                assert_eq!(levi.m_length(&IwElement::new(&d, m.mu.clone(), m.w)), Some(0));
                // advance odometer over [-2, 2]^n
                let mut i = 0;
                while i < n && v[i] == 2 {
                    v[i] = -2;
                    i += 1;
                }
                if i == n {
                    break;
                }
                v[i] += 1;
            }
        }
    }
}

#[test]
fn i_set_examples() {
    let d = RootDatum::preset("GL2").unwrap();
    let mu = cw(&[1, 0]);
    let b = b_g_mu(&d, &mu).unwrap();
    let basic = &b.entries[0].invariants;
    let m = levi_of_newton(&d, &basic.newton);
    assert_eq!(i_mu_b_m(&d, &mu, basic, &m).unwrap(), vec![ints(&[1])]);
    let ord = &b.entries[1].invariants;
    let t = levi_of_newton(&d, &ord.newton);
    assert_eq!(i_mu_b_m(&d, &mu, ord, &t).unwrap(), vec![t.project(&mu)]);
    assert_eq!(i_mu_b_m(&d, &mu, ord, &m).unwrap_err().code(), "LEVI_MISMATCH");

    let z = d.zero_coweight();
    let b0 = b_g_mu(&d, &z).unwrap();
    let inv = &b0.entries[0].invariants;
    let m0 = levi_of_newton(&d, &inv.newton);
    assert_eq!(i_mu_b_m(&d, &z, inv, &m0).unwrap(), vec![ints(&[0])]);
}

#[test]
fn move_examples() {
    let d = RootDatum::preset("GL2").unwrap();
    let t = LeviDatum::new(&d, &[]);
    let mu = cw(&[1, 0]);
    let x = t.project(&mu);
    assert_eq!(move_target(&t, &x, 0, 1), x);
    let g = LeviDatum::new(&d, &[0]);
    assert_eq!(move_applicable(&mu, &g, &ints(&[1]), 0, 1).unwrap_err().code(), "ALPHA_IN_LEVI");

    let r = RootDatum::preset("ResE2-GL2").unwrap();
    let t = LeviDatum::new(&r, &[]);
    let mu = cw(&[1, 0, 1, 0]);
    let x = t.project(&cw(&[1, 0, 0, 1]));
    assert!(!move_applicable(&mu, &t, &x, 0, 1).unwrap());
    let far = t.project(&cw(&[3, -3, 0, 0]));
    for k in [0, 1, 2, 3] {
        assert!(!move_applicable(&mu, &t, &far, k, 1).unwrap());
    }
}

#[test]
fn orbit_sizes() {
    for name in PRESET_NAMES {
        let d = RootDatum::preset(name).unwrap();
        for k in 0..d.system().num_roots() {
            orbit_size(&d, k).unwrap();
        }
    }
    let r = RootDatum::preset("ResE2-GL2").unwrap();
    assert_eq!(orbit_size(&r, 0).unwrap(), OrbitSize { size: 2, h: 2, multiple: 1 });
    let u = RootDatum::preset("U3-unram").unwrap();
    let sizes: BTreeSet<usize> = (0..u.system().num_roots()).map(|k| orbit_size(&u, k).unwrap().multiple).collect();
    assert_eq!(sizes, BTreeSet::from([1, 2]));
}

#[test]
fn short_elements() {
    let d = RootDatum::preset("GL2").unwrap();
    let mu = cw(&[1, 0]);
    let tau = tau_of(&d, &mu).unwrap();
    let s = short_element_check(&tau).unwrap();
    assert!(s.ok && s.u == 0 && s.w_sharp == tau);
    let t = IwElement::translation(&d, mu.clone());
    let s = short_element_check(&t).unwrap();
    assert!(s.ok && s.w_sharp == t);
    assert_eq!(short_element_check(&IwElement::generator(&d, 1)).unwrap_err().code(), "NOT_STRAIGHT");
}

/// The appendix predictions over a small matrix of data and coweights on
/// which they hold.
#[test]
fn appendix_predictions() {
    let cases: [(&str, &[&[i64]]); 6] = [
        ("GL2", &[&[1, 0], &[2, 0], &[1, -1]]),
        ("GL3", &[&[1, 0, 0], &[1, 1, 0]]),
        ("GSp4", &[&[1, 1, 1], &[1, 0, 0]]),
        ("ResE2-GL2", &[&[1, 0, 1, 0], &[1, 0, 0, 0], &[2, 0, 0, 0]]),
        ("U3-unram", &[&[1, 0, 0], &[1, 1, 0]]),
        ("PGL2", &[&[1], &[2]]),
    ];
    for (name, mus) in cases {
        let d = RootDatum::preset(name).unwrap();
        for mu in mus {
            let mu = cw(mu);
            for w in straight_elements(&adm(&d, &mu).unwrap()) {
                assert!(short_element_check(&w).unwrap().ok, "{name} {mu} {w}");
            }
            for e in b_g_mu(&d, &mu).unwrap().entries {
                let levi = levi_of_newton(&d, &e.invariants.newton);
                let set = i_mu_b_m(&d, &mu, &e.invariants, &levi).unwrap();
                assert!(!set.is_empty(), "{name} {mu}");
                for x in &set {
                    let m = minuscule_dominant_rep(&levi, x).unwrap();
                    assert!(is_weakly_dominant(&d, &m.mu), "{name} {mu} {}", m.mu);
                }
                for x in &set {
                    for y in &set {
                        assert!(find_path(&mu, &levi, x, y).unwrap().is_some(), "{name} {mu} {x:?} -> {y:?}");
                    }
                }
            }
        }
    }
}

/// For a non-minuscule coweight of the unramified unitary group the set
/// `I_{mu,b,T}` has two classes that no constrained move connects.
#[test]
fn unitary_nonminuscule_disconnected() {
    let d = RootDatum::preset("U3-unram").unwrap();
    let mu = cw(&[1, 0, -1]);
    let b = b_g_mu(&d, &mu).unwrap();
    let e = b.entries.iter().find(|e| e.invariants.newton == RatCoWeight::from_frac(&[(1, 2), (0, 1), (-1, 2)])).unwrap();
    let levi = levi_of_newton(&d, &e.invariants.newton);
    assert!(levi.simple_subset().is_empty());
    let set = i_mu_b_m(&d, &mu, &e.invariants, &levi).unwrap();
    let x = levi.project(&cw(&[0, 1, -1]));
    let y = levi.project(&cw(&[1, -1, 0]));
    assert_eq!(set, vec![x.clone(), y.clone()].into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    assert!(find_path(&mu, &levi, &x, &y).unwrap().is_none());
}

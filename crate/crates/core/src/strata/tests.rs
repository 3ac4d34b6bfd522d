use super::*;
use crate::admissible::adm;
use crate::sigma_conj::b_g_mu;

fn cw(v: &[i64]) -> CoWeight {
    CoWeight::from_i64(v)
}

#[test]
fn supports() {
    let sl2 = RootDatum::preset("SL2").unwrap();
    let e = IwElement::identity(&sl2);
    let s0 = IwElement::generator(&sl2, 0);
    assert!(supp_sigma(&e, &e).unwrap().is_empty());
    assert_eq!(supp_sigma(&s0, &e).unwrap(), vec![0]);
    assert!(kr_basic_flag(&s0, &e).unwrap());
    assert_eq!(supp_sigma(&s0, &s0).unwrap_err().code(), "TAU_NOT_LENGTH_ZERO");

    let gl2 = RootDatum::preset("GL2").unwrap();
    let tau = tau_of(&gl2, &cw(&[1, 0])).unwrap();
    let s0 = IwElement::generator(&gl2, 0);
    assert_eq!(supp_sigma(&s0, &tau).unwrap(), vec![0, 1]);
    assert!(!kr_basic_flag(&s0, &tau).unwrap());
}

#[test]
fn compact_types() {
    let sl2 = RootDatum::preset("SL2").unwrap();
    assert_eq!(compact_type_factors(&sl2, &IwElement::identity(&sl2)).unwrap(), vec![false]);
    let gl2 = RootDatum::preset("GL2").unwrap();
    assert_eq!(compact_type_factors(&gl2, &tau_of(&gl2, &cw(&[1, 0])).unwrap()).unwrap(), vec![true]);
    let gl3 = RootDatum::preset("GL3").unwrap();
    assert_eq!(compact_type_factors(&gl3, &tau_of(&gl3, &cw(&[1, 0, 0])).unwrap()).unwrap(), vec![true]);
    assert_eq!(compact_type_factors(&gl3, &tau_of(&gl3, &cw(&[1, 1, 1])).unwrap()).unwrap(), vec![false]);
}

#[test]
fn fixed_fundamental_groups() {
    for (name, desc) in [("GL2", "Z"), ("GL3", "Z"), ("SL2", "0"), ("SL3", "0"), ("PGL2", "Z/2"), ("ResE2-GL2", "Z"), ("GSp4", "Z")] {
        let d = RootDatum::preset(name).unwrap();
        assert_eq!(describe(&pi1_i_sigma(&d)), desc, "{name}");
    }
}

#[test]
fn orbit_parahorics() {
    let sl2 = RootDatum::preset("SL2").unwrap();
    let o = sigma_orbit_parahorics(&sl2, &IwElement::identity(&sl2)).unwrap();
    assert_eq!(o.len(), 2);
    assert!(o.iter().all(|p| p.finite && p.generators.len() == 1));
    let gl2 = RootDatum::preset("GL2").unwrap();
    let o = sigma_orbit_parahorics(&gl2, &tau_of(&gl2, &cw(&[1, 0])).unwrap()).unwrap();
    assert_eq!(o, vec![OrbitParahoric { generators: vec![0, 1], finite: false }]);
    let sl3 = RootDatum::preset("SL3").unwrap();
    assert_eq!(sigma_orbit_parahorics(&sl3, &IwElement::identity(&sl3)).unwrap().len(), 3);
}

#[test]
fn component_reports() {
    let gl2 = RootDatum::preset("GL2").unwrap();
    let mu = cw(&[1, 0]);
    let b = b_g_mu(&gl2, &mu).unwrap();
    let r = component_report(&gl2, &mu, &b.basic()[0].invariants, &[]).unwrap();
    assert_eq!(r.count, ComponentCount::Symbolic("pi1(G)_I^sigma = Z".into()));

    let pgl2 = RootDatum::preset("PGL2").unwrap();
    let mu = cw(&[1]);
    let b = b_g_mu(&pgl2, &mu).unwrap();
    let r = component_report(&pgl2, &mu, &b.basic()[0].invariants, &[]).unwrap();
    assert_eq!(r.count, ComponentCount::Finite(Int::from(2)));

    let z = gl2.zero_coweight();
    let b = b_g_mu(&gl2, &z).unwrap();
    let r = component_report(&gl2, &z, &b.entries[0].invariants, &[]).unwrap();
    assert!(matches!(r.count, ComponentCount::Symbolic(_)));
    assert!(r.factors.iter().all(|f| !f.noncentral));
}

#[test]
fn tables() {
    let gl2 = RootDatum::preset("GL2").unwrap();
    let mu = cw(&[1, 0]);
    let t = strata_table(&gl2, &mu, &[]).unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t.iter().filter(|r| r.basic).count(), 1);
    assert!(t[0].basic && t[0].length == 0);

    let z = strata_table(&gl2, &gl2.zero_coweight(), &[]).unwrap();
    assert_eq!(z.len(), 1);
    assert!(z[0].basic);

    let gsp4 = RootDatum::preset("GSp4").unwrap();
    let mu = cw(&[1, 1, 1]);
    assert_eq!(strata_table(&gsp4, &mu, &[]).unwrap().len(), adm(&gsp4, &mu).unwrap().elements.len());
}

#[test]
fn basic_flags_downward_closed() {
    for (name, mu) in [("GL3", vec![1, 0, 0]), ("GSp4", vec![1, 1, 1]), ("U3-unram", vec![1, 0, 0]), ("SL2", vec![1])] {
        let d = RootDatum::preset(name).unwrap();
        let t = strata_table(&d, &cw(&mu), &[]).unwrap();
        for hi in &t {
            for lo in &t {
                if lo.element.bruhat_leq(&hi.element) {
                    let a: BTreeSet<_> = lo.supp_sigma.iter().collect();
                    assert!(a.iter().all(|s| hi.supp_sigma.contains(s)), "{name}");
                    assert!(!hi.basic || lo.basic, "{name}");
                }
            }
        }
    }
}

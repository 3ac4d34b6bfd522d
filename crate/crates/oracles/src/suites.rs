//! Named comparison suites: each runs a core computation and its oracle on
//! the same inputs and reports disagreements.

use std::collections::BTreeSet;
use std::sync::Arc;

use iwk_core::abelian::{smith_normal_form, Matrix};
use iwk_core::admissible::adm;
use iwk_core::root_datum::{CoWeight, RootDatum, PRESET_NAMES};
use iwk_core::sigma_conj::{b_g_mu, invariants, straight_elements};
use iwk_core::strata::pi1_i_sigma;
use iwk_core::Int;
use num_traits::One;

use crate::{
    ball, bfs_length, cone_member, determinantal_invariant_factors, down_set, omega_sample, orbit_closure, pi1_sigma_shape,
    relation_matrix, subword_set, verify_smith, OracleError, OracleReport, Result,
};

/// Presets used for the length and Bruhat comparisons.
pub const WORD_PRESETS: &[&str] = &["GL2", "SL2", "PGL2", "SL3", "GSp4", "ResE2-GL2", "U3-unram"];

pub const SUITES: &[&str] = &["length", "bruhat", "adm", "dominance", "bgmu", "snf", "pi1"];

pub fn run_suite(name: &str) -> Result<OracleReport> {
    match name {
        "length" => length_suite(WORD_PRESETS, 5),
        "bruhat" => bruhat_suite(WORD_PRESETS, 4),
        "adm" => adm_suite(),
        "dominance" => dominance_suite(),
        "bgmu" => bgmu_suite(),
        "snf" => snf_suite(),
        "pi1" => pi1_suite(),
        "all" => {
            let mut r = OracleReport::new("all");
            for s in SUITES {
                r.merge(run_suite(s)?);
            }
            Ok(r)
        }
        _ => Err(OracleError::UnknownSuite(name.to_string())),
    }
}

fn preset(name: &str) -> Result<Arc<RootDatum>> {
    Ok(RootDatum::preset(name)?)
}

/// Calls `f` on every integer vector of `[lo, hi]^n`.
pub fn for_box(n: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    let mut v = vec![lo; n];
    loop {
        f(&v);
        let mut i = 0;
        while i < n && v[i] == hi {
            v[i] = lo;
            i += 1;
        }
        if i == n {
            return;
        }
        v[i] += 1;
    }
}

/// Dominant coweights with coordinates in `[-bound, bound]`.
pub fn dominant_box(datum: &RootDatum, bound: i64) -> Vec<CoWeight> {
    let mut out = Vec::new();
    for_box(datum.dim(), -bound, bound, |v| {
        let c = CoWeight::from_i64(v);
        if datum.is_dominant(&c) {
            out.push(c);
        }
    });
    out
}

/// Core length against BFS word length on every element of length at most
/// `radius` (times each sampled length-zero element).
pub fn length_suite(presets: &[&str], radius: usize) -> Result<OracleReport> {
    let mut r = OracleReport::new("length");
    for name in presets {
        let d = preset(name)?;
        for x in ball(&d, radius, &omega_sample(&d))? {
            let o = bfs_length(&x)?;
            r.check(|| format!("{name} {x}"), x.length(), o);
        }
    }
    Ok(r)
}

/// Core Bruhat order against the subword scan, on all pairs of length at
/// most `radius`.
pub fn bruhat_suite(presets: &[&str], radius: usize) -> Result<OracleReport> {
    let mut r = OracleReport::new("bruhat");
    for name in presets {
        let d = preset(name)?;
        let elems = ball(&d, radius, &omega_sample(&d))?;
        for y in &elems {
            let below = subword_set(y)?;
            for x in &elems {
                r.check(|| format!("{name} {x} <= {y}"), x.bruhat_leq(y), below.contains(x));
            }
        }
    }
    Ok(r)
}

fn adm_suite() -> Result<OracleReport> {
    let mut r = OracleReport::new("adm");
    for name in PRESET_NAMES {
        let d = preset(name)?;
        for mu in dominant_box(&d, 2) {
            let oracle = match down_set(&d, &mu) {
                Ok(s) => s,
                Err(OracleError::CapExceeded(_)) => {
                    r.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let main: BTreeSet<_> = adm(&d, &mu)?.elements.into_iter().collect();
            let oracle: BTreeSet<_> = oracle.into_iter().collect();
            r.check(|| format!("{name} adm({mu})"), main, oracle);
        }
    }
    Ok(r)
}

fn dominance_suite() -> Result<OracleReport> {
    let mut r = OracleReport::new("dominance");
    for name in PRESET_NAMES {
        let d = preset(name)?;
        let gens: Vec<Vec<Int>> = (0..d.rank()).map(|i| d.simple_coroot(i).0).collect();
        let doms = dominant_box(&d, 2);
        for lam in &doms {
            for mu in &doms {
                let diff = d.sub(mu, lam);
                match cone_member(&diff.0, &gens) {
                    Ok(o) => r.check(|| format!("{name} {lam} <= {mu}"), d.dominance_leq(lam, mu)?, o),
                    Err(OracleError::CapExceeded(_)) => r.skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(r)
}

/// Small cases for the sigma-class comparison.
pub const BGMU_CASES: &[(&str, &[i64])] = &[
    ("GL2", &[1, 0]),
    ("GL2", &[2, 0]),
    ("SL2", &[1]),
    ("PGL2", &[1]),
    ("GL3", &[1, 0, 0]),
    ("GSp4", &[1, 1, 1]),
    ("ResE2-GL2", &[1, 0, 0, 0]),
    ("ResE2-GL2", &[1, 0, 1, 0]),
    ("U3-unram", &[1, 0, 0]),
];

/// Groups the straight elements of `Adm(mu)` by bounded sigma-conjugation and
/// compares with the grouping by core invariants.
fn bgmu_suite() -> Result<OracleReport> {
    let mut r = OracleReport::new("bgmu");
    for (name, mu) in BGMU_CASES {
        let d = preset(name)?;
        let mu = CoWeight::from_i64(mu);
        let set = adm(&d, &mu)?;
        let bound = set.elements.iter().map(|x| x.length()).max().unwrap_or(0);
        let straight: BTreeSet<_> = straight_elements(&set).into_iter().collect();
        for e in b_g_mu(&d, &mu)?.entries {
            let orbit = match orbit_closure(&e.witness, bound) {
                Ok(o) => o,
                Err(OracleError::CapExceeded(_)) => {
                    r.skipped += 1;
                    continue;
                }
                Err(err) => return Err(err),
            };
            let by_orbit: BTreeSet<_> = straight.iter().filter(|x| orbit.contains(x)).cloned().collect();
            let by_inv: BTreeSet<_> = straight.iter().filter(|x| invariants(x) == e.invariants).cloned().collect();
            r.check(|| format!("{name} {mu} class of {}", e.witness), by_inv, by_orbit);
        }
    }
    Ok(r)
}

fn snf_suite() -> Result<OracleReport> {
    let mut r = OracleReport::new("snf");
    for name in PRESET_NAMES {
        let d = preset(name)?;
        let a = relation_matrix(&d);
        let sf = smith_normal_form(&Matrix::from_rows(a.clone()));
        let bad = verify_smith(&a, &sf.u.to_rows(), &sf.d.to_rows(), &sf.v.to_rows(), &sf.u_inv.to_rows(), &sf.v_inv.to_rows());
        r.check(|| format!("{name} smith form"), bad, Vec::new());
        r.check(|| format!("{name} invariant factors"), sf.invariant_factors(), determinantal_invariant_factors(&a));
        let oracle_free = d.dim() - sf.rank();
        let torsion: Vec<Int> = determinantal_invariant_factors(&a).into_iter().filter(|x| !x.is_one()).collect();
        r.check(|| format!("{name} pi1"), (d.pi1().free_rank(), d.pi1().torsion().to_vec()), (oracle_free, torsion));
    }
    Ok(r)
}

fn pi1_suite() -> Result<OracleReport> {
    let mut r = OracleReport::new("pi1");
    for name in PRESET_NAMES {
        let d = preset(name)?;
        let g = pi1_i_sigma(&d);
        let order: Int = g.torsion().iter().product();
        r.check(|| format!("{name} pi1_I^sigma"), (g.free_rank(), order), pi1_sigma_shape(&d)?);
    }
    Ok(r)
}

//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Thresholds are fixed constants below.

#![allow(clippy::mutable_key_type)]

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use iwk_cli::docs::*;
use iwk_core::admissible::{adm, adm_k_avatars, adm_very_special, closure_poset, very_special_levels};
use iwk_core::iwahori_weyl::IwElement;
use iwk_core::levi_reduction::{
    find_path, i_mu_b_m, is_weakly_dominant, levi_of_newton, minuscule_dominant_rep, orbit_size, short_element_check,
};
use iwk_core::root_datum::{CoWeight, RootDatum, PRESET_NAMES};
use iwk_core::sigma_conj::{b_g_mu, length_matches_newton, straight_elements};
use iwk_core::strata::{component_report, describe, pi1_i_sigma, strata_table, ComponentCount};
use iwk_core::Int;
use iwk_oracles::suites::{bruhat_suite, dominant_box, length_suite, run_suite, WORD_PRESETS};
use iwk_oracles::{down_set, pi1_sigma_shape};
use num_traits::Signed;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

const LENGTH_RADIUS: usize = 5;
const BRUHAT_RADIUS: usize = 4;
const MATRIX_BOUND: i64 = 2;
const LENGTH_LIMIT: Duration = Duration::from_secs(60);
const APPENDIX_LIMIT: Duration = Duration::from_secs(120);

type Outcome = (bool, String);

fn matrix() -> Vec<(&'static str, Arc<RootDatum>, CoWeight)> {
    let mut out = Vec::new();
    for name in PRESET_NAMES {
        let d = RootDatum::preset(name).unwrap();
        for mu in dominant_box(&d, MATRIX_BOUND) {
            out.push((*name, d.clone(), mu));
        }
    }
    out
}

fn first<T: std::fmt::Display>(fails: &[T]) -> String {
    fails.first().map(|f| format!("; first: {f}")).unwrap_or_default()
}

fn c1_length() -> Outcome {
    let t = Instant::now();
    let r = length_suite(WORD_PRESETS, LENGTH_RADIUS).unwrap();
    let el = t.elapsed();
    (
        r.passed() && el < LENGTH_LIMIT,
        format!("{} elements, {} mismatches, {:.1}s (limit {}s)", r.checked, r.mismatches.len(), el.as_secs_f64(), LENGTH_LIMIT.as_secs()),
    )
}

fn c2_bruhat() -> Outcome {
    let r = bruhat_suite(WORD_PRESETS, BRUHAT_RADIUS).unwrap();
    (r.passed(), format!("{} pairs, {} mismatches", r.checked, r.mismatches.len()))
}

/// Elements obtained by deleting one letter of a reduced word of `y` that
/// have length one less; every Bruhat cover of `y` is among them.
fn covers_below(y: &IwElement) -> Vec<IwElement> {
    let (word, omega) = y.reduced_word();
    let d = y.datum();
    let gens = IwElement::generators(d);
    let mut out = Vec::new();
    for skip in 0..word.len() {
        let mut x = IwElement::identity(d);
        for (i, &s) in word.iter().enumerate() {
            if i != skip {
                x = &x * &gens[s];
            }
        }
        let x = &x * &omega;
        if x.length() + 1 == word.len() {
            out.push(x);
        }
    }
    out
}

fn c3_adm_structure() -> Outcome {
    let mut fails = Vec::new();
    let cases = matrix();
    for (name, d, mu) in &cases {
        let set = adm(d, mu).unwrap();
        let members: BTreeSet<&IwElement> = set.elements.iter().collect();
        if set.elements.iter().filter(|x| x.length() == 0).count() != 1 {
            fails.push(format!("{name} {mu}: length-zero count"));
        }
        let classes: BTreeSet<_> = set.elements.iter().map(|x| x.omega_component()).collect();
        if classes.len() != 1 {
            fails.push(format!("{name} {mu}: {} Omega classes", classes.len()));
        }
        if set.elements.iter().any(|y| covers_below(y).iter().any(|x| !members.contains(x))) {
            fails.push(format!("{name} {mu}: not downward closed"));
        }
        let p = closure_poset(&set);
        let maximal: BTreeSet<IwElement> = p.maximal().into_iter().map(|i| p.nodes[i].clone()).collect();
        let extremes: BTreeSet<IwElement> =
            d.weyl().elements().map(|w| IwElement::translation(d, d.act(w, mu))).collect();
        if maximal != extremes {
            fails.push(format!("{name} {mu}: maximal elements differ from the translations"));
        }
    }
    (fails.is_empty(), format!("{} cases, {} failures{}", cases.len(), fails.len(), first(&fails)))
}

fn c4_very_special() -> Outcome {
    let mut fails = Vec::new();
    let mut checked = 0;
    for (name, d, mu) in matrix() {
        for k in very_special_levels(&d) {
            checked += 1;
            if adm_k_avatars(&d, &mu, &k).unwrap() != adm_very_special(&d, &mu, &k).unwrap() {
                fails.push(format!("{name} {mu} K={k:?}"));
            }
        }
    }
    (fails.is_empty(), format!("{checked} (datum, mu, K) cases, {} failures{}", fails.len(), first(&fails)))
}

fn c5_counts() -> Outcome {
    let gl2 = RootDatum::preset("GL2").unwrap();
    let mu = CoWeight::from_i64(&[1, 0]);
    let n = adm(&gl2, &mu).unwrap().elements.len();
    let b = b_g_mu(&gl2, &mu).unwrap();
    let newtons: BTreeSet<String> = b.entries.iter().map(|e| e.invariants.newton.to_string()).collect();
    let want: BTreeSet<String> = ["(1,0)", "(1/2,1/2)"].iter().map(|s| s.to_string()).collect();
    let basic = b.basic().len();
    let gsp4 = RootDatum::preset("GSp4").unwrap();
    let siegel = CoWeight::from_i64(&[1, 1, 1]);
    let g = adm(&gsp4, &siegel).unwrap().elements.len();
    let o = down_set(&gsp4, &siegel).unwrap().len();
    let ok = n == 3 && b.entries.len() == 2 && newtons == want && basic == 1 && g == o;
    (
        ok,
        format!(
            "GL2 |adm| {n}, {} classes {:?}, {basic} basic; GSp4 Siegel |adm| {g}, oracle down-set {o} (expected 13)",
            b.entries.len(),
            newtons
        ),
    )
}

fn c6_bgmu() -> Outcome {
    let mut fails = Vec::new();
    let cases = matrix();
    for (name, d, mu) in &cases {
        let b = b_g_mu(d, mu).unwrap();
        if !b.coherent() {
            fails.push(format!("{name} {mu}: routes disagree"));
        }
        let inv: BTreeSet<_> = b.entries.iter().map(|e| &e.invariants).collect();
        if !b.injective || inv.len() != b.entries.len() {
            fails.push(format!("{name} {mu}: invariants not distinct"));
        }
        if let Some(e) = b.entries.iter().find(|e| !length_matches_newton(&e.witness)) {
            fails.push(format!("{name} {mu}: witness {} length != <2rho, nu>", e.witness));
        }
    }
    let oracle = run_suite("bgmu").unwrap();
    (
        fails.is_empty() && oracle.passed(),
        format!(
            "{} cases, {} failures{}; orbit-closure oracle {} classes, {} mismatches",
            cases.len(),
            fails.len(),
            first(&fails),
            oracle.checked,
            oracle.mismatches.len()
        ),
    )
}

fn c7_basic_locus() -> Outcome {
    let mut fails = Vec::new();
    let cases = matrix();
    for (name, d, mu) in &cases {
        let t = strata_table(d, mu, &[]).unwrap();
        let basic: std::collections::HashMap<&IwElement, bool> = t.iter().map(|r| (&r.element, r.basic)).collect();
        if !t.iter().any(|r| r.length == 0 && r.basic) {
            fails.push(format!("{name} {mu}: tau stratum not basic"));
        }
        for r in t.iter().filter(|r| r.basic) {
            if covers_below(&r.element).iter().any(|x| basic.get(x) != Some(&true)) {
                fails.push(format!("{name} {mu}: basic flag not downward closed below {}", r.element));
            }
        }
    }
    let gl2 = RootDatum::preset("GL2").unwrap();
    let t = strata_table(&gl2, &CoWeight::from_i64(&[1, 0]), &[]).unwrap();
    let basic: Vec<usize> = t.iter().filter(|r| r.basic).map(|r| r.length).collect();
    let gl2_ok = t.len() == 3 && basic == vec![0];
    (
        fails.is_empty() && gl2_ok,
        format!("{} cases, {} failures{}; GL2 (1,0): basic strata lengths {basic:?} of {}", cases.len(), fails.len(), first(&fails), t.len()),
    )
}

fn c8_pi1() -> Outcome {
    let mut fails = Vec::new();
    for (name, want) in [("GL2", "Z"), ("GL3", "Z"), ("SL2", "0"), ("SL3", "0"), ("PGL2", "Z/2"), ("ResE2-GL2", "Z")] {
        let got = describe(&pi1_i_sigma(&RootDatum::preset(name).unwrap()));
        if got != want {
            fails.push(format!("{name}: {got} != {want}"));
        }
    }
    let mut finite = 0;
    for name in PRESET_NAMES {
        let d = RootDatum::preset(name).unwrap();
        let (free, tors) = pi1_sigma_shape(&d).unwrap();
        for mu in dominant_box(&d, 1) {
            let b = b_g_mu(&d, &mu).unwrap();
            let Some(e) = b.basic().first().copied() else { continue };
            if let ComponentCount::Finite(n) = component_report(&d, &mu, &e.invariants, &[]).unwrap().count {
                finite += 1;
                if free != 0 || n != tors {
                    fails.push(format!("{name} {mu}: count {n}, oracle pi1 shape ({free}, {tors})"));
                }
            }
        }
    }
    let snf = run_suite("snf").unwrap();
    let pi1 = run_suite("pi1").unwrap();
    (
        fails.is_empty() && snf.passed() && pi1.passed(),
        format!(
            "{} failures{}; {finite} finite counts checked; SNF oracle {} mismatches, pi1 oracle {} mismatches",
            fails.len(),
            first(&fails),
            snf.mismatches.len(),
            pi1.mismatches.len()
        ),
    )
}

#[derive(Default)]
struct AppendixTally {
    cases: usize,
    short_fail: usize,
    path_fail: usize,
    weak_fail: usize,
    examples: Vec<String>,
}

impl AppendixTally {
    fn failures(&self) -> usize {
        self.short_fail + self.path_fail + self.weak_fail
    }

    fn summary(&self) -> String {
        format!(
            "{} cases; short-element failures {}, disconnected pairs {}, not weakly dominant {}{}",
            self.cases,
            self.short_fail,
            self.path_fail,
            self.weak_fail,
            first(&self.examples)
        )
    }
}

fn is_minuscule(d: &RootDatum, mu: &CoWeight) -> bool {
    let sys = d.system();
    (0..sys.num_roots()).all(|k| sys.pair(k, &mu.0).abs() <= Int::from(1))
}

fn c9_appendix() -> (Outcome, String) {
    let t = Instant::now();
    let mut all = AppendixTally::default();
    let mut minuscule = AppendixTally::default();
    for (name, d, mu) in matrix() {
        let mut local = AppendixTally { cases: 1, ..Default::default() };
        for w in straight_elements(&adm(&d, &mu).unwrap()) {
            if !short_element_check(&w).unwrap().ok {
                local.short_fail += 1;
                local.examples.push(format!("{name} {mu}: short element {w}"));
            }
        }
        for e in b_g_mu(&d, &mu).unwrap().entries {
            let levi = levi_of_newton(&d, &e.invariants.newton);
            let set = i_mu_b_m(&d, &mu, &e.invariants, &levi).unwrap();
            for x in &set {
                if !is_weakly_dominant(&d, &minuscule_dominant_rep(&levi, x).unwrap().mu) {
                    local.weak_fail += 1;
                    local.examples.push(format!("{name} {mu}: {x:?} not weakly dominant"));
                }
            }
            for (i, x) in set.iter().enumerate() {
                for y in &set[i + 1..] {
                    if find_path(&mu, &levi, x, y).unwrap().is_none() {
                        local.path_fail += 1;
                        local.examples.push(format!("{name} mu={mu} nu={}: no path {x:?} -> {y:?}", e.invariants.newton));
                    }
                }
            }
        }
        if is_minuscule(&d, &mu) {
            merge(&mut minuscule, &local);
        }
        merge(&mut all, &local);
    }
    let mut orbit_fail = Vec::new();
    let mut roots = 0;
    for name in PRESET_NAMES {
        let d = RootDatum::preset(name).unwrap();
        for k in 0..d.system().num_roots() {
            roots += 1;
            if orbit_size(&d, k).is_err() {
                orbit_fail.push(format!("{name} root {k}"));
            }
        }
    }
    let el = t.elapsed();
    let ok = all.failures() == 0 && orbit_fail.is_empty() && el < APPENDIX_LIMIT;
    let detail = format!(
        "{}; orbit sizes outside {{h,2h,3h}}: {} of {roots} roots; {:.1}s (limit {}s)",
        all.summary(),
        orbit_fail.len(),
        el.as_secs_f64(),
        APPENDIX_LIMIT.as_secs()
    );
    let info = format!(
        "minuscule sub-matrix: {} (failures {})",
        minuscule.summary(),
        if minuscule.failures() == 0 { "none" } else { "present" }
    );
    ((ok, detail), info)
}

fn merge(into: &mut AppendixTally, from: &AppendixTally) {
    into.cases += from.cases;
    into.short_fail += from.short_fail;
    into.path_fail += from.path_fail;
    into.weak_fail += from.weak_fail;
    into.examples.extend(from.examples.iter().cloned());
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["iwk".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = iwk_cli::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn round_trips<T: Serialize + DeserializeOwned>(text: &str) -> bool {
    match serde_json::from_str::<T>(text) {
        Ok(doc) => serde_json::to_string_pretty(&doc).unwrap() + "\n" == text,
        Err(_) => false,
    }
}

/// Every embedded element document must rebuild to itself.
fn elements_round_trip(d: &Arc<RootDatum>, v: &Value) -> bool {
    match v {
        Value::Object(m) => {
            if m.contains_key("label") && m.contains_key("fin_word") {
                let doc: ElementDoc = serde_json::from_value(v.clone()).unwrap();
                let x = IwElement::from_json(d, &doc.element_json()).unwrap();
                return ElementDoc::of(&x) == doc;
            }
            m.values().all(|c| elements_round_trip(d, c))
        }
        Value::Array(a) => a.iter().all(|c| elements_round_trip(d, c)),
        _ => true,
    }
}

fn c10_determinism() -> Outcome {
    type Check = fn(&str) -> bool;
    let runs: Vec<(Vec<&str>, Check)> = vec![
        (vec!["presets"], round_trips::<Vec<String>>),
        (vec!["--datum", "preset:GL2", "adm", "--mu", "1,0"], round_trips::<Vec<ElementDoc>>),
        (vec!["--datum", "preset:GSp4", "adm", "--mu", "1,1,1"], round_trips::<Vec<ElementDoc>>),
        (vec!["--datum", "preset:GSp4", "--level", "very-special", "adm-k", "--mu", "1,1,1"], round_trips::<AdmKDoc>),
        (vec!["--datum", "preset:GL3", "--level", "K=0", "ekor", "--mu", "1,0,0"], round_trips::<AdmKDoc>),
        (vec!["--datum", "preset:U3-unram", "tau", "--mu", "1,0,0"], round_trips::<ElementDoc>),
        (vec!["--datum", "preset:U3-unram", "bgmu", "--mu", "1,0,-1"], round_trips::<BgMuDoc>),
        (vec!["--datum", "preset:GL2", "newton", "--x", "1,0:0"], round_trips::<NewtonDoc>),
        (vec!["--datum", "preset:ResE2-GL2", "straight", "--mu", "1,0,1,0"], round_trips::<Vec<StraightDoc>>),
        (vec!["--datum", "preset:GSp4", "strata", "--mu", "1,1,1"], round_trips::<StrataDoc>),
        (vec!["--datum", "preset:PGL2", "components", "--mu", "1"], round_trips::<ComponentsDoc>),
        (vec!["--datum", "preset:GL2", "components", "--mu", "1,0"], round_trips::<ComponentsDoc>),
        (vec!["--datum", "preset:ResE2-GL2", "levi", "--mu", "1,0,0,0"], round_trips::<LeviDoc>),
        (vec!["--datum", "preset:U3-unram", "path", "--mu", "1,0,-1", "--b", "1"], round_trips::<PathDoc>),
        (vec!["--datum", "preset:SL3", "poset", "--mu", "1,1"], round_trips::<PosetDoc>),
        (vec!["oracle", "--suite", "pi1"], round_trips::<OracleDoc>),
    ];
    let mut fails = Vec::new();
    for (args, check) in &runs {
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        for a in [args.clone(), json_args.clone(), { let mut v = args.clone(); v.extend(["--format", "dot"]); v }] {
            if run_cli(&a) != run_cli(&a) {
                fails.push(format!("{}: output differs between runs", a.join(" ")));
            }
        }
        let (code, text) = run_cli(&json_args);
        if code != 0 || !check(&text) {
            fails.push(format!("{}: JSON does not round-trip (exit {code})", json_args.join(" ")));
            continue;
        }
        if let Some(i) = args.iter().position(|a| *a == "--datum") {
            let d = iwk_cli::input::load_datum(args[i + 1]).unwrap();
            if !elements_round_trip(&d, &serde_json::from_str(&text).unwrap()) {
                fails.push(format!("{}: element documents do not rebuild", json_args.join(" ")));
            }
        }
    }
    (fails.is_empty(), format!("{} commands x 3 formats, {} failures{}", runs.len(), fails.len(), first(&fails)))
}

fn main() {
    let mut all_ok = true;
    let mut report = |n: usize, title: &str, (ok, detail): Outcome| {
        all_ok &= ok;
        println!("{} {n:>2} {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    };
    report(1, "length equals BFS word length", c1_length());
    report(2, "Bruhat order equals subword order", c2_bruhat());
    report(3, "admissible-set structure", c3_adm_structure());
    report(4, "very-special cross-check", c4_very_special());
    report(5, "exact counts", c5_counts());
    report(6, "B(G,mu) coherence", c6_bgmu());
    report(7, "basic-locus criterion consistency", c7_basic_locus());
    report(8, "pi1 computations", c8_pi1());
    let (c9, info) = c9_appendix();
    report(9, "appendix predictions", c9);
    println!("INFO  9 {info}");
    report(10, "determinism and JSON round-trip", c10_determinism());
    if !all_ok {
        std::process::exit(1);
    }
}

//! The `iwk` command line: argument parsing, dispatch and rendering.
//!
//! [`run`] is the whole program; `main` only wires it to the process
//! streams, so tests can call it directly.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use iwk_core::admissible::{adm, adm_k, adm_k_avatars, closure_poset, is_very_special, k_adm, tau_of, AdmissibleSet};
use iwk_core::iwahori_weyl::IwElement;
use iwk_core::levi_reduction::{
    find_path, i_mu_b_m, is_weakly_dominant, levi_of_newton, minuscule_dominant_rep, short_element_check,
};
use iwk_core::root_datum::{CoWeight, RootDatum, PRESET_NAMES};
use iwk_core::sigma_conj::{b_g_mu, invariants, is_straight, newton, straight_elements, BgMu, BgMuEntry};
use iwk_core::strata::{component_report, strata_table};
use iwk_oracles::OracleError;
use serde::Serialize;

pub mod docs;
pub mod input;
mod render;

use docs::*;
use render::{dot, json_compact, table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("USAGE: {0}")]
    Usage(String),
    #[error("DATUM_ERROR: {0}")]
    Datum(String),
    #[error("ORACLE_MISMATCH: {0}")]
    Mismatch(String),
    #[error("{0}")]
    Core(#[from] iwk_core::Error),
    #[error("{0}")]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "USAGE",
            CliError::Datum(_) => "DATUM_ERROR",
            CliError::Mismatch(_) => "ORACLE_MISMATCH",
            CliError::Core(e) => e.code(),
            CliError::Oracle(e) => e.code(),
        }
    }

    /// Exit status: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.code() == "USAGE" {
            2
        } else {
            1
        }
    }

    /// The message, always starting with the machine-readable code.
    pub fn message(&self) -> String {
        let m = self.to_string();
        let code = self.code();
        if m.starts_with(code) {
            return m;
        }
        // inner messages may carry their own tag, e.g. "ARITY: ..."
        let body = match m.split_once(": ") {
            Some((tag, rest)) if !tag.is_empty() && tag.chars().all(|c| c.is_ascii_uppercase() || c == '_') => rest.to_string(),
            _ => m,
        };
        format!("{code}: {body}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "iwk", version, about = "Iwahori-Weyl group combinatorics")]
struct Cli {
    /// `preset:NAME` or a datum spec file.
    #[arg(long, global = true)]
    datum: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// `iwahori`, `K=<comma list of S-indices>` or `very-special`.
    #[arg(long, global = true, default_value = "iwahori")]
    level: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, clap::Args)]
struct MuArg {
    /// Coweight: comma-separated free coordinates, then `;` and torsion.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Debug, clap::Args)]
struct ClassArgs {
    #[command(flatten)]
    mu: MuArg,
    /// Index into the `bgmu` listing; the basic class by default.
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// List the datum presets.
    Presets,
    /// `Adm(mu)` at Iwahori level.
    Adm(MuArg),
    /// `Adm(mu)_K` at the chosen level.
    AdmK(MuArg),
    /// `^K Adm(mu)`, the EKOR index set.
    Ekor(MuArg),
    /// The length-zero element of `Adm(mu)`.
    Tau(MuArg),
    /// `B(G, mu)` with one straight witness per class.
    Bgmu(MuArg),
    /// Newton point and Kottwitz invariant of an element.
    Newton {
        /// `{"trans": [..], "fin_word": [..]}` or `TRANS:FINWORD` such as `1,0:0`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The straight elements of `Adm(mu)`.
    Straight(MuArg),
    /// EKOR strata with basic-locus flags.
    Strata(MuArg),
    /// Predicted connected components for a class in `B(G, mu)`.
    Components(ClassArgs),
    /// Levi reduction data for a class in `B(G, mu)`.
    Levi(ClassArgs),
    /// Constrained move paths inside `I_{mu,b,M}`.
    Path {
        #[command(flatten)]
        class: ClassArgs,
        /// Index of the start class in `I_{mu,b,M}`; with `--to`, else every pair
        #[arg(long)]
        from: Option<usize>,
        /// Index of the end class in `I_{mu,b,M}`
        #[arg(long)]
        to: Option<usize>,
    },
    /// Bruhat closure poset of the admissible set at the chosen level.
    Poset(MuArg),
    /// Run an oracle comparison suite.
    Oracle {
        #[arg(long)]
        suite: String,
    },
}

impl Cmd {
    fn supports_dot(&self) -> bool {
        matches!(self, Cmd::Adm(_) | Cmd::AdmK(_) | Cmd::Ekor(_) | Cmd::Strata(_) | Cmd::Poset(_))
    }

    fn needs_datum(&self) -> bool {
        !matches!(self, Cmd::Presets | Cmd::Oracle { .. })
    }
}

/// A rendered result: the JSON document, its table form and (for posets)
/// its DOT form.
struct Output {
    json: String,
    table: String,
    dot: Option<String>,
}

fn json_of<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize") + "\n"
}

/// Runs the program on `args` (including the program name) and returns the
/// exit status.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "USAGE: {e}");
            return 2;
        }
    };
    let mut warnings = Vec::new();
    match execute(&cli, &mut warnings) {
        Ok(o) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let text = match cli.format {
                Format::Json => o.json,
                Format::Table => o.table,
                Format::Dot => o.dot.unwrap_or_default(),
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err((e, partial)) => {
            if let Some(p) = partial {
                let _ = out.write_all(p.as_bytes());
            }
            let _ = writeln!(err, "{}", e.message());
            e.exit_code()
        }
    }
}

type Failure = (CliError, Option<String>);

fn execute(cli: &Cli, warnings: &mut Vec<String>) -> Result<Output, Failure> {
    if cli.format == Format::Dot && !cli.cmd.supports_dot() {
        return Err((CliError::Usage("--format dot is only available for adm, adm-k, ekor, strata and poset".into()), None));
    }
    if let Cmd::Oracle { suite } = &cli.cmd {
        return oracle(suite, cli.format);
    }
    let datum = match (&cli.datum, cli.cmd.needs_datum()) {
        (Some(d), true) => Some(input::load_datum(d).map_err(|e| (e, None))?),
        (None, true) => return Err((CliError::Usage("--datum is required".into()), None)),
        _ => None,
    };
    dispatch(cli, datum, warnings).map_err(|e| (e, None))
}

fn oracle(suite: &str, format: Format) -> Result<Output, Failure> {
    let report = iwk_oracles::suites::run_suite(suite).map_err(|e| (e.into(), None))?;
    let o = Output { json: json_of(&OracleDoc::of(&report)), table: report.to_string(), dot: None };
    if report.passed() {
        Ok(o)
    } else {
        let partial = if format == Format::Json { o.json } else { o.table };
        Err((CliError::Mismatch(format!("{} mismatches in suite {suite}", report.mismatches.len())), Some(partial)))
    }
}

fn parse_mu(datum: &Arc<RootDatum>, arg: &MuArg, warnings: &mut Vec<String>) -> Result<CoWeight, CliError> {
    let mu = input::parse_coweight(datum, &arg.mu)?;
    if datum.dominant_rep(&datum.sigma_coweight(&mu)) != datum.dominant_rep(&mu) {
        warnings.push(format!("sigma moves the dominant representative of mu = {mu}; results use mu as given"));
    }
    Ok(mu)
}

fn select_class(bg: &BgMu, b: Option<usize>) -> Result<(usize, &BgMuEntry), CliError> {
    match b {
        Some(i) => bg
            .entries
            .get(i)
            .map(|e| (i, e))
            .ok_or_else(|| CliError::Usage(format!("--b {i}: B(G, mu) has {} classes", bg.entries.len()))),
        None => bg
            .entries
            .iter()
            .enumerate()
            .find(|(_, e)| e.invariants.is_basic)
            .ok_or_else(|| CliError::Usage("B(G, mu) has no basic class; pass --b".into())),
    }
}

fn dispatch(cli: &Cli, datum: Option<Arc<RootDatum>>, warnings: &mut Vec<String>) -> Result<Output, CliError> {
    let Some(d) = datum else {
        let mut names: Vec<String> = PRESET_NAMES.iter().map(|s| s.to_string()).collect();
        names.extend(input::extra_presets().into_iter().filter(|n| !PRESET_NAMES.contains(&n.as_str())));
        return Ok(Output { json: json_of(&names), table: names.iter().map(|n| format!("{n}\n")).collect(), dot: None });
    };
    let level = || input::parse_level(&d, &cli.level);
    match &cli.cmd {
        Cmd::Presets | Cmd::Oracle { .. } => unreachable!("handled before datum loading"),
        Cmd::Adm(m) => {
            let set = adm(&d, &parse_mu(&d, m, warnings)?)?;
            let docs: Vec<ElementDoc> = set.elements.iter().map(ElementDoc::of).collect();
            Ok(Output { json: json_of(&docs), table: element_table(&docs), dot: Some(poset_dot(&set, None)) })
        }
        Cmd::AdmK(m) | Cmd::Ekor(m) => {
            let mu = parse_mu(&d, m, warnings)?;
            let k = level()?;
            let set = if matches!(cli.cmd, Cmd::AdmK(_)) { adm_k(&d, &mu, &k)? } else { k_adm(&d, &mu, &k)? };
            let avatars = if !k.is_empty() && is_very_special(&d, &k) {
                Some(adm_k_avatars(&d, &mu, &k)?.iter().map(coweight_json).collect::<Vec<_>>())
            } else {
                None
            };
            let doc = AdmKDoc {
                mu: coweight_json(&mu),
                level: set.level.clone(),
                kind: set.kind.name().to_string(),
                elements: set.elements.iter().map(ElementDoc::of).collect(),
                avatars,
            };
            let mut t = format!("level {:?} ({})\n", doc.level, doc.kind);
            t.push_str(&element_table(&doc.elements));
            if let Some(a) = &doc.avatars {
                let a: Vec<String> = a.iter().map(json_compact).collect();
                t.push_str(&format!("avatars: {}\n", a.join(" ")));
            }
            Ok(Output { json: json_of(&doc), table: t, dot: Some(poset_dot(&set, None)) })
        }
        Cmd::Tau(m) => {
            let doc = ElementDoc::of(&tau_of(&d, &parse_mu(&d, m, warnings)?)?);
            let t = element_table(std::slice::from_ref(&doc));
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Bgmu(m) => {
            let mu = parse_mu(&d, m, warnings)?;
            let bg = b_g_mu(&d, &mu)?;
            let doc = BgMuDoc {
                mu: coweight_json(&mu),
                coherent: bg.coherent(),
                injective: bg.injective,
                classes: bg.entries.iter().enumerate().map(|(i, e)| ClassDoc::of(i, e)).collect(),
            };
            let rows = doc
                .classes
                .iter()
                .map(|c| {
                    vec![
                        c.index.to_string(),
                        json_compact(&c.kappa),
                        format!("({})", c.newton.join(",")),
                        c.basic.to_string(),
                        c.witness.label.clone(),
                    ]
                })
                .collect();
            let mut t = table(&["index", "kappa", "newton", "basic", "witness"], rows);
            t.push_str(&format!("coherent: {}\ninjective: {}\n", doc.coherent, doc.injective));
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Newton { x } => {
            let x = input::parse_element(&d, x)?;
            let (nu, nu_dom) = newton(&x);
            let inv = invariants(&x);
            let doc = NewtonDoc {
                element: ElementDoc::of(&x),
                newton: rat_strings(&nu),
                newton_dominant: rat_strings(&nu_dom),
                kappa: ints_json(&inv.kottwitz),
                basic: inv.is_basic,
                straight: is_straight(&x),
            };
            let t = format!(
                "element: {}\nlength: {}\nnewton: ({})\nnewton_dominant: ({})\nkappa: {}\nbasic: {}\nstraight: {}\n",
                doc.element.label,
                doc.element.length,
                doc.newton.join(","),
                doc.newton_dominant.join(","),
                json_compact(&doc.kappa),
                doc.basic,
                doc.straight
            );
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Straight(m) => {
            let set = adm(&d, &parse_mu(&d, m, warnings)?)?;
            let docs: Vec<StraightDoc> = straight_elements(&set).iter().map(|x| StraightDoc::of(x, &invariants(x))).collect();
            let rows = docs
                .iter()
                .map(|s| {
                    vec![
                        s.element.label.clone(),
                        s.element.length.to_string(),
                        format!("({})", s.newton_dominant.join(",")),
                        json_compact(&s.kappa),
                    ]
                })
                .collect();
            Ok(Output { json: json_of(&docs), table: table(&["element", "length", "newton", "kappa"], rows), dot: None })
        }
        Cmd::Strata(m) => {
            let mu = parse_mu(&d, m, warnings)?;
            let k = level()?;
            let rows = strata_table(&d, &mu, &k)?;
            let doc = StrataDoc {
                mu: coweight_json(&mu),
                level: k.clone(),
                tau: ElementDoc::of(&tau_of(&d, &mu)?),
                strata: rows.iter().map(StratumDoc::of).collect(),
            };
            let trows = doc
                .strata
                .iter()
                .map(|s| {
                    vec![
                        s.element.label.clone(),
                        s.element.length.to_string(),
                        format!("{:?}", s.supp_sigma),
                        s.basic.to_string(),
                        s.kr_member.to_string(),
                    ]
                })
                .collect();
            let t = format!("tau: {}\n", doc.tau.label) + &table(&["stratum", "length", "supp_sigma", "basic", "kr_member"], trows);
            let set = AdmissibleSet {
                mu: mu.clone(),
                level: k.clone(),
                kind: k_adm(&d, &mu, &k)?.kind,
                elements: rows.iter().map(|r| r.element.clone()).collect(),
            };
            let basic: Vec<bool> = rows.iter().map(|r| r.basic).collect();
            Ok(Output { json: json_of(&doc), table: t, dot: Some(poset_dot(&set, Some(&basic))) })
        }
        Cmd::Components(c) => {
            let mu = parse_mu(&d, &c.mu, warnings)?;
            let bg = b_g_mu(&d, &mu)?;
            let (i, e) = select_class(&bg, c.b)?;
            let r = component_report(&d, &mu, &e.invariants, &level()?)?;
            let doc = ComponentsDoc::of(ClassDoc::of(i, e), &r);
            let count = match &doc.count {
                CountDoc::Finite(n) => n.clone(),
                CountDoc::Symbolic(s) => s.clone(),
            };
            let mut t = format!(
                "class: {} newton ({})\nlevel: {:?}\npi1_sigma: {}\ncount: {}\nstatus: {}\n",
                doc.class.index,
                doc.class.newton.join(","),
                doc.level,
                doc.pi1_sigma,
                count,
                doc.status
            );
            let rows = doc
                .factors
                .iter()
                .map(|f| vec![format!("{:?}", f.components), f.noncentral.to_string(), f.compact_type.to_string()])
                .collect();
            t.push_str(&table(&["factor", "noncentral", "compact_type"], rows));
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Levi(c) => {
            let mu = parse_mu(&d, &c.mu, warnings)?;
            let bg = b_g_mu(&d, &mu)?;
            let (i, e) = select_class(&bg, c.b)?;
            let levi = levi_of_newton(&d, &e.invariants.newton);
            let set = i_mu_b_m(&d, &mu, &e.invariants, &levi)?;
            let i_set = set
                .iter()
                .map(|x| {
                    let rep = minuscule_dominant_rep(&levi, x)?;
                    Ok(IClassDoc { class: ints_json(x), mu_x: coweight_json(&rep.mu), weakly_dominant: is_weakly_dominant(&d, &rep.mu) })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let s = short_element_check(&e.witness)?;
            let doc = LeviDoc {
                class: ClassDoc::of(i, e),
                levi: levi.simple_subset().to_vec(),
                sigma_stable: levi.is_sigma_stable(),
                i_set,
                short_element: ShortDoc { u_word: d.weyl().word(s.u).to_vec(), w_sharp: ElementDoc::of(&s.w_sharp), ok: s.ok },
            };
            let mut t = format!(
                "class: {} newton ({})\nlevi: {:?}\nsigma_stable: {}\nshort_element: u {:?} w_sharp {} ok {}\n",
                doc.class.index,
                doc.class.newton.join(","),
                doc.levi,
                doc.sigma_stable,
                doc.short_element.u_word,
                doc.short_element.w_sharp.label,
                doc.short_element.ok
            );
            let rows = doc
                .i_set
                .iter()
                .map(|x| vec![json_compact(&x.class), json_compact(&x.mu_x), x.weakly_dominant.to_string()])
                .collect();
            t.push_str(&table(&["class", "mu_x", "weakly_dominant"], rows));
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Path { class, from, to } => {
            let mu = parse_mu(&d, &class.mu, warnings)?;
            let bg = b_g_mu(&d, &mu)?;
            let (i, e) = select_class(&bg, class.b)?;
            let levi = levi_of_newton(&d, &e.invariants.newton);
            let set = i_mu_b_m(&d, &mu, &e.invariants, &levi)?;
            let pick = |k: usize| {
                set.get(k).cloned().ok_or_else(|| CliError::Usage(format!("index {k}: I_(mu,b,M) has {} classes", set.len())))
            };
            let pairs: Vec<(Vec<iwk_core::Int>, Vec<iwk_core::Int>)> = match (from, to) {
                (Some(a), Some(b)) => vec![(pick(*a)?, pick(*b)?)],
                (None, None) => {
                    let mut v = Vec::new();
                    for a in 0..set.len() {
                        for b in a + 1..set.len() {
                            v.push((set[a].clone(), set[b].clone()));
                        }
                    }
                    v
                }
                _ => return Err(CliError::Usage("--from and --to go together".into())),
            };
            let mut docs = Vec::new();
            for (x, y) in &pairs {
                let moves = find_path(&mu, &levi, x, y)?.map(|p| p.iter().map(|m| MoveDoc::of(&d, m)).collect());
                docs.push(PairDoc { from: ints_json(x), to: ints_json(y), moves });
            }
            let doc = PathDoc { class: ClassDoc::of(i, e), levi: levi.simple_subset().to_vec(), pairs: docs };
            let mut t = format!("class: {} levi: {:?}\n", doc.class.index, doc.levi);
            for p in &doc.pairs {
                t.push_str(&format!("{} -> {}: ", json_compact(&p.from), json_compact(&p.to)));
                match &p.moves {
                    None => t.push_str("no path\n"),
                    Some(ms) if ms.is_empty() => t.push_str("equal\n"),
                    Some(ms) => {
                        let steps: Vec<String> =
                            ms.iter().map(|m| format!("(alpha {:?}, r {}) {}", m.alpha, m.r, json_compact(&m.to))).collect();
                        t.push_str(&steps.join(" ; "));
                        t.push('\n');
                    }
                }
            }
            Ok(Output { json: json_of(&doc), table: t, dot: None })
        }
        Cmd::Poset(m) => {
            let mu = parse_mu(&d, m, warnings)?;
            let k = level()?;
            let set = if k.is_empty() { adm(&d, &mu)? } else { adm_k(&d, &mu, &k)? };
            let p = closure_poset(&set);
            let doc = PosetDoc { nodes: p.nodes.iter().map(ElementDoc::of).collect(), covers: p.covers.clone() };
            let mut t = element_table(&doc.nodes);
            for (a, b) in &doc.covers {
                t.push_str(&format!("{} < {}\n", doc.nodes[*a].label, doc.nodes[*b].label));
            }
            Ok(Output { json: json_of(&doc), table: t, dot: Some(poset_dot(&set, None)) })
        }
    }
}

fn element_table(docs: &[ElementDoc]) -> String {
    let rows = docs
        .iter()
        .map(|e| vec![e.label.clone(), e.length.to_string(), json_compact(&e.omega_class), json_compact(&e.trans), format!("{:?}", e.fin_word)])
        .collect();
    table(&["word", "length", "omega", "trans", "fin_word"], rows)
}

fn poset_dot(set: &AdmissibleSet, filled: Option<&[bool]>) -> String {
    let p = closure_poset(set);
    let labels: Vec<String> = p.nodes.iter().map(IwElement::label).collect();
    let lens: Vec<usize> = p.nodes.iter().map(IwElement::length).collect();
    dot(&labels, &lens, &p.covers, filled)
}

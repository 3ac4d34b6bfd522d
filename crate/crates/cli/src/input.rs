use std::path::PathBuf;
use std::sync::Arc;

use iwk_core::admissible::{default_very_special, is_very_special, very_special_levels};
use iwk_core::iwahori_weyl::IwElement;
use iwk_core::root_datum::{CoWeight, DatumSpec, RootDatum, PRESET_NAMES};
use iwk_core::Error;

use crate::CliError;

pub const PRESET_DIR_VAR: &str = "IWK_PRESET_DIR";

fn preset_dir() -> Option<PathBuf> {
    std::env::var_os(PRESET_DIR_VAR).map(PathBuf::from)
}

/// Names of the extra datum files in `$IWK_PRESET_DIR` (without `.json`).
pub fn extra_presets() -> Vec<String> {
    let Some(dir) = preset_dir() else { return Vec::new() };
    let Ok(entries) = std::fs::read_dir(dir) else { return Vec::new() };
    let mut out: Vec<String> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().to_str().and_then(|n| n.strip_suffix(".json")).map(str::to_string))
        .collect();
    out.sort();
    out
}

fn load_file(path: &std::path::Path) -> Result<Arc<RootDatum>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Datum(format!("cannot read {}: {e}", path.display())))?;
    Ok(RootDatum::build(&DatumSpec::from_json(&text)?)?)
}

/// `preset:NAME` (built-in, then `$IWK_PRESET_DIR/NAME.json`) or a path to a
/// datum spec file.
pub fn load_datum(arg: &str) -> Result<Arc<RootDatum>, CliError> {
    match arg.strip_prefix("preset:") {
        Some(name) if PRESET_NAMES.contains(&name) => Ok(RootDatum::preset(name)?),
        Some(name) => match preset_dir().map(|d| d.join(format!("{name}.json"))) {
            Some(p) if p.is_file() => load_file(&p),
            _ => Err(Error::UnknownPreset(name.to_string()).into()),
        },
        None => load_file(std::path::Path::new(arg)),
    }
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("{what}: '{t}' is not an integer"))))
        .collect()
}

/// `a,b,c` in the free basis, optionally followed by `;t1,t2` torsion
/// coordinates.
pub fn parse_coweight(datum: &RootDatum, s: &str) -> Result<CoWeight, CliError> {
    let (free, tors) = s.split_once(';').unwrap_or((s, ""));
    let mut v = parse_ints(free, "mu")?;
    v.extend(parse_ints(tors, "mu")?);
    Ok(datum.coweight(&v)?)
}

/// `iwahori`, `K=i,j,...` or `very-special`.
pub fn parse_level(datum: &Arc<RootDatum>, s: &str) -> Result<Vec<usize>, CliError> {
    match s {
        "iwahori" => Ok(Vec::new()),
        "very-special" => {
            let d = default_very_special(datum);
            if is_very_special(datum, &d) {
                return Ok(d);
            }
            very_special_levels(datum)
                .into_iter()
                .next()
                .ok_or_else(|| Error::NotVerySpecial("no very special level".into()).into())
        }
        _ => {
            let Some(list) = s.strip_prefix("K=") else {
                return Err(CliError::Usage(format!("level '{s}': expected iwahori, K=<list> or very-special")));
            };
            let k = parse_ints(list, "level")?;
            let n = datum.num_gens();
            k.iter()
                .map(|&i| {
                    usize::try_from(i)
                        .ok()
                        .filter(|&i| i < n)
                        .ok_or_else(|| CliError::Usage(format!("level index {i} out of range 0..{n}")))
                })
                .collect()
        }
    }
}

/// An element as JSON `{"trans": [...], "fin_word": [...]}` or as
/// `TRANS:FINWORD`, e.g. `1,0:0`.
pub fn parse_element(datum: &Arc<RootDatum>, s: &str) -> Result<IwElement, CliError> {
    if s.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("element: {e}")))?;
        return Ok(IwElement::from_json(datum, &v)?);
    }
    let (t, w) = s.split_once(':').unwrap_or((s, ""));
    let lambda = parse_coweight(datum, t)?;
    let word = parse_ints(w, "element word")?;
    let word: Vec<usize> = word
        .into_iter()
        .map(|i| {
            usize::try_from(i)
                .ok()
                .filter(|&i| i < datum.rank())
                .ok_or_else(|| CliError::Usage(format!("finite letter {i} out of range")))
        })
        .collect::<Result<_, _>>()?;
    Ok(IwElement::new(datum, lambda, datum.weyl().from_word(&word)))
}

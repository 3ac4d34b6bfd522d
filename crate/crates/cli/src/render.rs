use std::collections::BTreeMap;

use serde_json::Value;

pub fn json_compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in &rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Hasse diagram with one rank per length. `filled` marks nodes drawn
/// filled (basic strata); the rest are outlined.
pub fn dot(labels: &[String], lens: &[usize], covers: &[(usize, usize)], filled: Option<&[bool]>) -> String {
    let mut out = String::from("digraph closure {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, l) in labels.iter().enumerate() {
        let style = match filled {
            Some(f) if f[i] => " style=filled fillcolor=lightgray",
            Some(_) => " style=solid",
            None => "",
        };
        out.push_str(&format!("  \"{l}\" [label=\"{l}\"{style}];\n"));
    }
    let mut ranks: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for (l, &n) in labels.iter().zip(lens) {
        ranks.entry(n).or_default().push(l);
    }
    for (n, ls) in ranks {
        let ids: Vec<String> = ls.iter().map(|l| format!("\"{l}\";")).collect();
        out.push_str(&format!("  {{ rank=same; /* length {n} */ {} }}\n", ids.join(" ")));
    }
    for &(a, b) in covers {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", labels[a], labels[b]));
    }
    out.push_str("}\n");
    out
}

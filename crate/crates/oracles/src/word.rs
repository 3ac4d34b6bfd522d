use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use iwk_core::iwahori_weyl::IwElement;
use iwk_core::root_datum::{CoWeight, RootDatum};
use num_traits::ToPrimitive;

use crate::{OracleError, Result, CAPS};

fn mul(a: &IwElement, b: &IwElement) -> IwElement {
    a.mul(b).expect("elements share a datum")
}

/// `y` has length zero iff conjugation by `y` permutes the simple affine
/// reflections.
pub fn is_omega(y: &IwElement) -> bool {
    let gens = IwElement::generators(y.datum());
    let yi = y.inv();
    gens.iter().all(|s| gens.contains(&mul(&mul(y, s), &yi)))
}

/// A reduced word: `x = s_{w[0]} ... s_{w[k-1]} omega`, found by breadth-first
/// search over left multiplication by generators.
pub fn bfs_word(x: &IwElement) -> Result<(Vec<usize>, IwElement)> {
    bfs_word_within(x, CAPS.max_length)?
        .ok_or_else(|| OracleError::CapExceeded(format!("length of {x} exceeds {}", CAPS.max_length)))
}

/// As [`bfs_word`], but `None` when the length exceeds `max`.
pub(crate) fn bfs_word_within(x: &IwElement, max: usize) -> Result<Option<(Vec<usize>, IwElement)>> {
    if max > CAPS.max_length {
        return Err(OracleError::CapExceeded(format!("search depth {max} > {}", CAPS.max_length)));
    }
    let gens = IwElement::generators(x.datum());
    let mut parent: HashMap<IwElement, (IwElement, usize)> = HashMap::new();
    let mut seen: HashSet<IwElement> = HashSet::from([x.clone()]);
    let mut frontier = vec![x.clone()];
    for depth in 0..=max {
        if let Some(y) = frontier.iter().find(|y| is_omega(y)) {
            let mut word = Vec::with_capacity(depth);
            let mut cur = y.clone();
            while let Some((p, s)) = parent.get(&cur) {
                word.push(*s);
                cur = p.clone();
            }
            word.reverse();
            return Ok(Some((word, y.clone())));
        }
        if depth == max {
            break;
        }
        let mut next = Vec::new();
        for z in &frontier {
            for (i, s) in gens.iter().enumerate() {
                let y = mul(s, z);
                if seen.insert(y.clone()) {
                    parent.insert(y.clone(), (z.clone(), i));
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// Word length of `x` in `S ∪ Ω`.
pub fn bfs_length(x: &IwElement) -> Result<usize> {
    Ok(bfs_word(x)?.0.len())
}

/// All `s_{i1} ... s_{ij} omega` for subwords of the BFS word of `y`.
pub fn subword_set(y: &IwElement) -> Result<HashSet<IwElement>> {
    let (word, omega) = bfs_word(y)?;
    let gens = IwElement::generators(y.datum());
    let mut prefixes: HashSet<IwElement> = HashSet::from([IwElement::identity(y.datum())]);
    for &s in &word {
        let ext: Vec<IwElement> = prefixes.iter().map(|p| mul(p, &gens[s])).collect();
        prefixes.extend(ext);
    }
    Ok(prefixes.iter().map(|p| mul(p, &omega)).collect())
}

/// `x <= y` in Bruhat order by exhaustive subword scan.
pub fn subword_leq(x: &IwElement, y: &IwElement) -> Result<bool> {
    Ok(subword_set(y)?.contains(x))
}

fn check_coords(v: &[num_bigint::BigInt]) -> Result<()> {
    for c in v {
        if c.to_i64().is_none_or(|c| c.abs() > CAPS.max_coord) {
            return Err(OracleError::CapExceeded(format!("coordinate {c} exceeds {}", CAPS.max_coord)));
        }
    }
    Ok(())
}

/// Length-zero elements `t^lambda w` with `lambda` in `[-1, 1]^n`, sorted,
/// identity first.
pub fn omega_sample(datum: &Arc<RootDatum>) -> Vec<IwElement> {
    let n = datum.dim();
    let mut out: Vec<IwElement> = Vec::new();
    let mut v = vec![-1i64; n];
    loop {
        for w in datum.weyl().elements() {
            let y = IwElement::new(datum, CoWeight::from_i64(&v), w);
            if is_omega(&y) && !out.contains(&y) {
                out.push(y);
            }
        }
        let mut i = 0;
        while i < n && v[i] == 1 {
            v[i] = -1;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    out.sort();
    let e = IwElement::identity(datum);
    out.retain(|y| *y != e);
    out.insert(0, e);
    out
}

/// Every product of at most `radius` generators, times each element of
/// `omegas`.
pub fn ball(datum: &Arc<RootDatum>, radius: usize, omegas: &[IwElement]) -> Result<Vec<IwElement>> {
    if radius > CAPS.max_length {
        return Err(OracleError::CapExceeded(format!("radius {radius} > {}", CAPS.max_length)));
    }
    let gens = IwElement::generators(datum);
    let e = IwElement::identity(datum);
    let mut seen: HashSet<IwElement> = HashSet::from([e.clone()]);
    let mut layers = vec![e];
    let mut frontier = layers.clone();
    for _ in 0..radius {
        let mut next = Vec::new();
        for z in &frontier {
            for s in &gens {
                let y = mul(z, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        layers.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out: Vec<IwElement> = omegas.iter().flat_map(|o| layers.iter().map(move |w| mul(w, o))).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `Adm(mu)` as the union of subword sets of the translations `t^{w mu}`.
pub fn down_set(datum: &Arc<RootDatum>, mu: &CoWeight) -> Result<HashSet<IwElement>> {
    check_coords(&mu.0)?;
    let mut extremes: Vec<IwElement> =
        datum.weyl().elements().map(|w| IwElement::translation(datum, datum.act(w, mu))).collect();
    extremes.sort();
    extremes.dedup();
    let mut out = HashSet::new();
    for t in &extremes {
        out.extend(subword_set(t)?);
    }
    Ok(out)
}

//! Admissible sets `Adm(mu)`, their images at parahoric level, EKOR index
//! sets, and closure posets.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::iwahori_weyl::{check_level, generator_index, min_coset_rep, parabolic_elements, IwElement, Side};
use crate::root_datum::{CoWeight, RatCoWeight, RootDatum};
use crate::{Int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Iwahori,
    ParahoricDoubleCoset,
    EkorMinReps,
}

impl SetKind {
    pub fn name(&self) -> &'static str {
        match self {
            SetKind::Iwahori => "iwahori",
            SetKind::ParahoricDoubleCoset => "parahoric_double_coset",
            SetKind::EkorMinReps => "ekor_min_reps",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdmissibleSet {
    pub mu: CoWeight,
    pub level: Vec<usize>,
    pub kind: SetKind,
    pub elements: Vec<IwElement>,
}

/// Hasse diagram of the Bruhat order on a set; edges are `(lower, upper)`
/// indices into `nodes`.
#[derive(Clone, Debug)]
pub struct ClosurePoset {
    pub nodes: Vec<IwElement>,
    pub covers: Vec<(usize, usize)>,
}

/// Sort key: (length, reduced word, Omega class).
pub fn sort_key(x: &IwElement) -> (usize, Vec<usize>, Vec<Int>) {
    let (w, _) = x.reduced_word();
    (w.len(), w, x.omega_component())
}

/// Sorts into the canonical presentation order and removes duplicates.
pub fn canonical_sort(elements: impl IntoIterator<Item = IwElement>) -> Vec<IwElement> {
    let set: HashSet<IwElement> = elements.into_iter().collect();
    let mut keyed: Vec<_> = set.into_iter().map(|x| (sort_key(&x), x)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, x)| x).collect()
}

fn require_dominant(datum: &RootDatum, mu: &CoWeight) -> Result<()> {
    if mu.len() != datum.dim() {
        return Err(Error::Arity(format!("expected {} coordinates, got {}", datum.dim(), mu.len())));
    }
    if !datum.is_dominant(mu) {
        return Err(Error::NotDominant(format!("mu = {mu}")));
    }
    Ok(())
}

/// The translations `t^{w mu}`, `w` in `W_0`, without repetition.
pub fn extreme_translations(datum: &Arc<RootDatum>, mu: &CoWeight) -> Vec<IwElement> {
    let orbit: HashSet<CoWeight> = datum.weyl().elements().map(|w| datum.act(w, mu)).collect();
    canonical_sort(orbit.into_iter().map(|l| IwElement::translation(datum, l)))
}

/// Bruhat down-set of `y`, via `{x <= y} = D(sy) + s D(sy)` for a left
/// descent `s` of `y`.
pub fn down_set(y: &IwElement) -> HashSet<IwElement> {
    let mut memo = HashMap::new();
    down_set_memo(y, &mut memo)
}

fn down_set_memo(y: &IwElement, memo: &mut HashMap<IwElement, Arc<HashSet<IwElement>>>) -> HashSet<IwElement> {
    // iterative: walk down the reduced word, then rebuild upwards
    let (word, omega) = y.reduced_word();
    let mut set: HashSet<IwElement> = HashSet::from([omega.clone()]);
    let mut cur = omega;
    for &s in word.iter().rev() {
        cur = cur.gen_mul(s);
        if let Some(known) = memo.get(&cur) {
            set = (**known).clone();
            continue;
        }
        let shifted: Vec<IwElement> = set.iter().map(|x| x.gen_mul(s)).collect();
        set.extend(shifted);
        memo.insert(cur.clone(), Arc::new(set.clone()));
    }
    set
}

/// `Adm(mu)`: the union of the Bruhat down-sets of `t^{w mu}`.
pub fn adm(datum: &Arc<RootDatum>, mu: &CoWeight) -> Result<AdmissibleSet> {
    require_dominant(datum, mu)?;
    let mut memo = HashMap::new();
    let mut all = HashSet::new();
    for y in extreme_translations(datum, mu) {
        all.extend(down_set_memo(&y, &mut memo));
    }
    Ok(AdmissibleSet {
        mu: mu.clone(),
        level: Vec::new(),
        kind: SetKind::Iwahori,
        elements: canonical_sort(all),
    })
}

/// The unique length-zero element of `Adm(mu)`.
pub fn tau_of(datum: &Arc<RootDatum>, mu: &CoWeight) -> Result<IwElement> {
    require_dominant(datum, mu)?;
    Ok(IwElement::translation(datum, mu.clone()).omega_part())
}

/// `sigma` on indices of `S`.
pub fn sigma_on_gens(datum: &Arc<RootDatum>) -> Vec<usize> {
    (0..datum.num_gens())
        .map(|i| generator_index(&IwElement::generator(datum, i).apply_sigma()).expect("sigma preserves S"))
        .collect()
}

/// Validates a level: indices in range, sigma-stable, finite type.
pub fn check_parahoric_level(datum: &Arc<RootDatum>, k: &[usize]) -> Result<Vec<usize>> {
    let mut k = k.to_vec();
    k.sort_unstable();
    k.dedup();
    if let Some(&bad) = k.iter().find(|&&s| s >= datum.num_gens()) {
        return Err(Error::Arity(format!("generator index {bad} out of range")));
    }
    let sig = sigma_on_gens(datum);
    if k.iter().any(|&s| !k.contains(&sig[s])) {
        return Err(Error::KNotSigmaStable(k));
    }
    check_level(datum, &k)?;
    Ok(k)
}

/// Image of `Adm(mu)` in `W_K \ W / W_K`, as minimal double coset
/// representatives.
pub fn adm_k(datum: &Arc<RootDatum>, mu: &CoWeight, k: &[usize]) -> Result<AdmissibleSet> {
    let k = check_parahoric_level(datum, k)?;
    let a = adm(datum, mu)?;
    let reps = a
        .elements
        .iter()
        .map(|x| min_coset_rep(&k, x, Side::Double))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleSet {
        mu: mu.clone(),
        level: k,
        kind: SetKind::ParahoricDoubleCoset,
        elements: canonical_sort(reps),
    })
}

/// `^K Adm(mu)`: elements of `Adm(mu)` minimal in their left `W_K`-coset.
pub fn k_adm(datum: &Arc<RootDatum>, mu: &CoWeight, k: &[usize]) -> Result<AdmissibleSet> {
    let k = check_parahoric_level(datum, k)?;
    let a = adm(datum, mu)?;
    let elements = a
        .elements
        .into_iter()
        .filter(|x| k.iter().all(|&s| !x.is_left_descent(s)))
        .collect();
    Ok(AdmissibleSet {
        mu: mu.clone(),
        level: k,
        kind: SetKind::EkorMinReps,
        elements,
    })
}

/// Whether `K` is very special: sigma-stable, `|W_K| = |W_0|`, and the
/// projection `W_K -> W_0` is injective.
pub fn is_very_special(datum: &Arc<RootDatum>, k: &[usize]) -> bool {
    let Ok(k) = check_parahoric_level(datum, k) else {
        return false;
    };
    let Ok(els) = parabolic_elements(datum, &k) else {
        return false;
    };
    let fins: HashSet<_> = els.iter().map(|x| x.fin()).collect();
    els.len() == datum.weyl().order() && fins.len() == els.len()
}

/// The finite simple reflections, always a very special level.
pub fn default_very_special(datum: &Arc<RootDatum>) -> Vec<usize> {
    (datum.num_affine()..datum.num_gens()).collect()
}

/// All very special levels, in lexicographic order.
pub fn very_special_levels(datum: &Arc<RootDatum>) -> Vec<Vec<usize>> {
    let n = datum.num_gens();
    let r = datum.rank();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let k: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_very_special(datum, &k) {
            out.push(k);
        }
    }
    out.sort();
    out
}

/// The point of the apartment fixed by `W_K` (on the free part).
fn special_vertex(datum: &Arc<RootDatum>, k: &[usize]) -> Result<Vec<Rat>> {
    let sys = datum.system();
    let r = sys.rank();
    let a = datum.num_affine();
    // hyperplane <beta_s, v> = c_s of each generator
    let planes: Vec<(usize, i64)> = k
        .iter()
        .map(|&s| if s < a { (sys.highest_roots()[s], 1) } else { (s - a, 0) })
        .collect();
    if planes.len() != r {
        return Err(Error::NotVerySpecial(format!("level {k:?} has the wrong size")));
    }
    let m: Vec<Vec<i64>> = planes
        .iter()
        .map(|&(b, _)| (0..r).map(|i| sys.root_coroot(b, i)).collect())
        .collect();
    let inv = crate::root_datum::rational_inverse_checked(&m)
        .ok_or_else(|| Error::NotVerySpecial(format!("level {k:?} fixes no vertex")))?;
    let c: Vec<Rat> = (0..r)
        .map(|i| (0..r).map(|j| &inv[i][j] * Rat::from_integer(Int::from(planes[j].1))).sum())
        .collect();
    let f = datum.free_rank();
    Ok((0..f)
        .map(|coord| {
            (0..r)
                .map(|i| &c[i] * Rat::from_integer(sys.root(i).coroot[coord].clone()))
                .sum()
        })
        .collect())
}

/// Dominant coweight attached to the double coset of `x` at a very special
/// level with vertex `v`: the dominant representative of `x(v) - v`.
fn avatar(datum: &Arc<RootDatum>, x: &IwElement, v: &[Rat]) -> Result<CoWeight> {
    if v.iter().all(|c| c.is_zero()) {
        return Ok(datum.dominant_rep(x.trans()));
    }
    let moved = x.act_rat(v);
    let diff: Vec<Rat> = moved.iter().zip(v).map(|(a, b)| a - b).collect();
    if !diff.iter().all(|c| c.is_integer()) || !datum.lattice().torsion().is_empty() {
        return Err(Error::NotVerySpecial("vertex translation is not a coweight".into()));
    }
    let dom = datum.dominant_rep_rat(&RatCoWeight(diff));
    Ok(CoWeight(dom.0.into_iter().map(|c| c.to_integer()).collect()))
}

/// Coweight avatars of `Adm(mu)_K` at a very special level.
pub fn adm_k_avatars(datum: &Arc<RootDatum>, mu: &CoWeight, k: &[usize]) -> Result<Vec<CoWeight>> {
    if !is_very_special(datum, k) {
        return Err(Error::NotVerySpecial(format!("level {k:?}")));
    }
    let v = special_vertex(datum, k)?;
    let set = adm_k(datum, mu, k)?;
    let mut out = set
        .elements
        .iter()
        .map(|x| avatar(datum, x, &v))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// `{lambda dominant : lambda <= mu}` at a very special level.
pub fn adm_very_special(datum: &Arc<RootDatum>, mu: &CoWeight, k: &[usize]) -> Result<Vec<CoWeight>> {
    if !is_very_special(datum, k) {
        return Err(Error::NotVerySpecial(format!("level {k:?}")));
    }
    require_dominant(datum, mu)?;
    datum.dominant_below(mu)
}

/// Hasse diagram of the Bruhat order restricted to the set.
pub fn closure_poset(set: &AdmissibleSet) -> ClosurePoset {
    let nodes = set.elements.clone();
    let n = nodes.len();
    let lens: Vec<usize> = nodes.iter().map(|x| x.length()).collect();
    let mut covers = Vec::new();
    if set.kind == SetKind::Iwahori {
        for i in 0..n {
            for j in 0..n {
                if lens[j] == lens[i] + 1 && nodes[i].bruhat_leq(&nodes[j]) {
                    covers.push((i, j));
                }
            }
        }
    } else {
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i == j || (lens[i] < lens[j] && nodes[i].bruhat_leq(&nodes[j]))).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && !(0..n).any(|m| m != i && m != j && leq[i][m] && leq[m][j]) {
                    covers.push((i, j));
                }
            }
        }
    }
    ClosurePoset { nodes, covers }
}

impl ClosurePoset {
    /// Nodes not below any other node.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.covers.iter().any(|&(a, _)| a == i))
            .collect()
    }
}

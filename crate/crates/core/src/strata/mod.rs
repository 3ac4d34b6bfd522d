//! Kottwitz-Rapoport and EKOR stratum reports: sigma-supports, basic-locus
//! flags, compact-type factors and component-count predictions.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::abelian::{fixed_subgroup, FgAbelian};
use crate::admissible::{adm_k, check_parahoric_level, k_adm, tau_of};
use crate::error::Result;
use crate::iwahori_weyl::{subgroup_finite, tau_sigma_action, IwElement, OmegaClass};
use crate::root_datum::{CoWeight, RootDatum};
use crate::sigma_conj::{require_in_bgmu, SigmaClassInvariants};
use crate::Int;

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub element: IwElement,
    pub length: usize,
    pub label: String,
    pub supp_sigma: Vec<usize>,
    pub basic: bool,
    /// Member of `^K Adm(mu)`.
    pub ekor_member: bool,
    /// Minimal representative of a double coset in `Adm(mu)_K`.
    pub kr_member: bool,
    pub omega_class: OmegaClass,
}

/// A simple factor: a sigma-orbit of components of the affine diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    /// Component indices (into [`RootDatum::affine_components`]).
    pub components: Vec<usize>,
    pub noncentral: bool,
    pub compact_type: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentCount {
    Finite(Int),
    Symbolic(String),
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub pi1_sigma: FgAbelian<Int>,
    pub factors: Vec<FactorReport>,
    pub level: Vec<usize>,
    pub count: ComponentCount,
    /// Counts are predictions of the connectedness theorems, never verified.
    pub status: &'static str,
}

/// Closure of `set` under the permutation `perm`.
fn orbit_closure(set: &BTreeSet<usize>, perm: &[usize]) -> BTreeSet<usize> {
    let mut out = set.clone();
    let mut frontier: Vec<usize> = set.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        let t = perm[s];
        if out.insert(t) {
            frontier.push(t);
        }
    }
    out
}

/// Orbits of a permutation of `0..n`.
fn perm_orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let o: Vec<usize> = orbit_closure(&BTreeSet::from([s]), perm).into_iter().collect();
        for &t in &o {
            seen[t] = true;
        }
        out.push(o);
    }
    out
}

/// `Supp_sigma(w)`: the `tau sigma`-stable closure of the letters of a
/// reduced word of `w`.
pub fn supp_sigma(w: &IwElement, tau: &IwElement) -> Result<Vec<usize>> {
    let perm = tau_sigma_action(tau)?;
    let letters: BTreeSet<usize> = w.reduced_word().0.into_iter().collect();
    Ok(orbit_closure(&letters, &perm).into_iter().collect())
}

/// The stratum of `w tau` lies in the basic locus iff `W_{Supp_sigma(w)}`
/// is finite.
pub fn kr_basic_flag(w: &IwElement, tau: &IwElement) -> Result<bool> {
    Ok(subgroup_finite(w.datum(), &supp_sigma(w, tau)?))
}

/// Groups the affine components into orbits of `tau sigma`.
fn factor_orbits(datum: &RootDatum, perm: &[usize]) -> Vec<Vec<usize>> {
    let comps = datum.affine_components();
    let comp_of = |s: usize| comps.iter().position(|c| c.contains(&s)).expect("every generator lies in a component");
    let cperm: Vec<usize> = comps.iter().map(|c| comp_of(perm[c[0]])).collect();
    perm_orbits(&cperm)
}

/// Per simple factor, whether `tau sigma` acts transitively on its nodes.
pub fn compact_type_factors(datum: &RootDatum, tau: &IwElement) -> Result<Vec<bool>> {
    let perm = tau_sigma_action(tau)?;
    let comps = datum.affine_components();
    Ok(factor_orbits(datum, &perm)
        .iter()
        .map(|orbit| {
            let nodes: BTreeSet<usize> = orbit.iter().flat_map(|&c| comps[c].iter().copied()).collect();
            let first = *nodes.iter().next().expect("components are nonempty");
            orbit_closure(&BTreeSet::from([first]), &perm) == nodes
        })
        .collect())
}

/// `pi1(G)_I^sigma` with its inclusion into `pi1(G)_I` (canonical coordinates).
pub fn pi1_i_sigma(datum: &RootDatum) -> FgAbelian<Int> {
    fixed_subgroup(datum.pi1(), &datum.pi1_sigma()).expect("sigma descends to pi1").0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitParahoric {
    pub generators: Vec<usize>,
    pub finite: bool,
}

/// The `tau sigma`-orbits of simple affine reflections.
pub fn sigma_orbit_parahorics(datum: &RootDatum, tau: &IwElement) -> Result<Vec<OrbitParahoric>> {
    let perm = tau_sigma_action(tau)?;
    Ok(perm_orbits(&perm)
        .into_iter()
        .map(|o| OrbitParahoric { finite: subgroup_finite(datum, &o), generators: o })
        .collect())
}

/// Whether some root of the factor pairs nonzero with `mu`.
fn factor_noncentral(datum: &RootDatum, comps: &[usize], mu: &CoWeight) -> bool {
    let sys = datum.system();
    comps.iter().any(|&c| sys.components()[c].iter().any(|&i| !sys.pair(i, &mu.0).is_zero()))
}

/// Predicted count of connected components of the affine Deligne-Lusztig
/// variety attached to `(mu, b)` at level `K`.
pub fn component_report(
    datum: &Arc<RootDatum>,
    mu: &CoWeight,
    b: &SigmaClassInvariants,
    k: &[usize],
) -> Result<ComponentReport> {
    let level = check_parahoric_level(datum, k)?;
    require_in_bgmu(datum, mu, b)?;
    let tau = tau_of(datum, mu)?;
    let perm = tau_sigma_action(&tau)?;
    let compact = compact_type_factors(datum, &tau)?;
    let factors: Vec<FactorReport> = factor_orbits(datum, &perm)
        .into_iter()
        .zip(compact)
        .map(|(components, compact_type)| FactorReport {
            noncentral: factor_noncentral(datum, &components, mu),
            components,
            compact_type,
        })
        .collect();
    let pi1_sigma = pi1_i_sigma(datum);
    let count = if !factors.is_empty() && factors.iter().all(|f| f.noncentral) {
        match pi1_sigma.order() {
            Some(n) => ComponentCount::Finite(n),
            None => ComponentCount::Symbolic(format!("pi1(G)_I^sigma = {}", describe(&pi1_sigma))),
        }
    } else {
        ComponentCount::Symbolic("G(Q_p)/G(Z_p)-torsor (mu central on some factor)".into())
    };
    Ok(ComponentReport { pi1_sigma, factors, level, count, status: "predicted" })
}

/// `Z^r + Z/d1 + ...`, or `0`.
pub fn describe(g: &FgAbelian<Int>) -> String {
    let mut parts = Vec::new();
    match g.free_rank() {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(g.torsion().iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// One row per element of `^K Adm(mu)`; basic flags are computed on the
/// element itself, which is the minimal Iwahori lift of its stratum.
pub fn strata_table(datum: &Arc<RootDatum>, mu: &CoWeight, k: &[usize]) -> Result<Vec<StratumReport>> {
    let ek = k_adm(datum, mu, k)?;
    let kr: BTreeSet<IwElement> = adm_k(datum, mu, k)?.elements.into_iter().collect();
    ek.elements
        .into_iter()
        .map(|x| {
            let (word, tau) = x.reduced_word();
            let supp = supp_sigma(&x, &tau)?;
            Ok(StratumReport {
                length: word.len(),
                label: x.label(),
                basic: subgroup_finite(datum, &supp),
                supp_sigma: supp,
                ekor_member: true,
                kr_member: kr.contains(&x),
                omega_class: x.omega_component(),
                element: x,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;

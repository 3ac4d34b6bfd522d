//! Reduction to the Levi subgroup centralizing a Newton point: the
//! `M`-minuscule representatives of `pi1(M)`, the set `I_{mu,b,M}`, the
//! `(alpha, r)`-moves between its elements and the short-element check.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::abelian::FgAbelian;
use crate::error::{Error, Result};
use crate::iwahori_weyl::IwElement;
use crate::root_datum::{CoWeight, RatCoWeight, RootDatum, WIdx};
use crate::sigma_conj::{is_straight, newton, require_in_bgmu, twisted_coinvariants, SigmaClassInvariants};
use crate::{Int, IntMatrix};

/// Element of `pi1(M)` in canonical coordinates.
pub type LeviClass = Vec<Int>;

/// The standard Levi `M` attached to a subset `J` of the simple roots.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    parent: Arc<RootDatum>,
    j: Vec<usize>,
    /// Positive roots of `Sigma_M`.
    positive_m: Vec<usize>,
    weyl_m: Vec<WIdx>,
    pi1_m: FgAbelian<Int>,
    /// Frobenius on `pi1(M)`, when `J` is sigma-stable.
    sigma_m: Option<IntMatrix>,
}

impl LeviDatum {
    pub fn new(parent: &Arc<RootDatum>, j: &[usize]) -> Self {
        let sys = parent.system();
        let mut j = j.to_vec();
        j.sort_unstable();
        j.dedup();
        let positive_m: Vec<usize> = (0..sys.num_positive())
            .filter(|&k| sys.root(k).coeffs.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(&i)))
            .collect();

        let weyl = parent.weyl();
        let mut weyl_m = vec![weyl.identity()];
        let mut seen = HashSet::from([weyl.identity()]);
        let mut i = 0;
        while i < weyl_m.len() {
            for &s in &j {
                let y = weyl.mul(weyl_m[i], weyl.simple(s));
                if seen.insert(y) {
                    weyl_m.push(y);
                }
            }
            i += 1;
        }
        weyl_m.sort_by_key(|&w| (weyl.length(w), w));

        let n = parent.dim();
        let f = parent.free_rank();
        let mut rels: Vec<Vec<Int>> = j.iter().map(|&i| sys.root(i).coroot.clone()).collect();
        for (t, d) in parent.lattice().torsion().iter().enumerate() {
            let mut v = vec![Int::zero(); n];
            v[f + t] = d.clone();
            rels.push(v);
        }
        let pi1_m = FgAbelian::quotient(n, &crate::abelian::Matrix::from_cols(n, &rels));
        let stable = j.iter().all(|&i| j.contains(&parent.sigma_simple(i)));
        let sigma_m = stable.then(|| pi1_m.induced_endo(parent.twist_endo()));
        LeviDatum { parent: parent.clone(), j, positive_m, weyl_m, pi1_m, sigma_m }
    }

    pub fn parent(&self) -> &Arc<RootDatum> {
        &self.parent
    }

    /// Simple roots of `Sigma` spanning `Sigma_M`.
    pub fn simple_subset(&self) -> &[usize] {
        &self.j
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive_m
    }

    pub fn contains_root(&self, k: usize) -> bool {
        self.positive_m.contains(&self.parent.system().positive_part(k))
    }

    pub fn pi1(&self) -> &FgAbelian<Int> {
        &self.pi1_m
    }

    pub fn is_sigma_stable(&self) -> bool {
        self.sigma_m.is_some()
    }

    pub fn project(&self, lambda: &CoWeight) -> LeviClass {
        self.pi1_m.project(&lambda.0)
    }

    fn sigma_matrix(&self) -> Result<&IntMatrix> {
        self.sigma_m
            .as_ref()
            .ok_or_else(|| Error::LeviMismatch(format!("simple subset {:?} is not sigma-stable", self.j)))
    }

    /// The sigma-coinvariants `pi1(M)_Gamma`.
    pub fn coinvariants(&self) -> Result<FgAbelian<Int>> {
        Ok(twisted_coinvariants(&self.pi1_m, self.sigma_matrix()?))
    }

    pub fn in_weyl_m(&self, w: WIdx) -> bool {
        self.weyl_m.contains(&w)
    }

    /// `M`-dominant and `M`-minuscule: `0 <= <beta, lambda> <= 1` for all
    /// positive `beta` in `Sigma_M`.
    pub fn is_minuscule_dominant(&self, lambda: &CoWeight) -> bool {
        let sys = self.parent.system();
        self.positive_m.iter().all(|&b| {
            let p = sys.pair(b, &lambda.0);
            !p.is_negative() && p <= Int::from(1)
        })
    }

    /// Iwahori-Matsumoto length over `Sigma_M` of `t^lambda w`; `None` when
    /// `w` is not in `W_M`.
    pub fn m_length(&self, x: &IwElement) -> Option<usize> {
        if !self.in_weyl_m(x.fin()) {
            return None;
        }
        let sys = self.parent.system();
        let weyl = self.parent.weyl();
        let winv = weyl.inv(x.fin());
        let mut l = Int::zero();
        for &b in &self.positive_m {
            let p = sys.pair(b, &x.trans().0);
            if sys.is_positive(weyl.root_image(winv, b)) {
                l += p.abs();
            } else {
                l += (p - Int::from(1)).abs();
            }
        }
        Some(usize::try_from(l).expect("length fits in usize"))
    }
}

/// The Levi centralizing `nu`: `J = {alpha simple : <alpha, nu> = 0}`.
pub fn levi_of_newton(datum: &Arc<RootDatum>, nu: &RatCoWeight) -> LeviDatum {
    let sys = datum.system();
    let j: Vec<usize> = (0..sys.rank()).filter(|&i| sys.pair_rat(i, &nu.0).is_zero()).collect();
    LeviDatum::new(datum, &j)
}

/// `tau_x = t^{mu_x} w_x`, the length-zero element of `W~_M` in class `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusculeRep {
    pub mu: CoWeight,
    pub w: WIdx,
}

/// The unique `M`-dominant `M`-minuscule coweight in the class `x`.
pub fn minuscule_dominant_rep(levi: &LeviDatum, x: &[Int]) -> Result<MinusculeRep> {
    let d = &levi.parent;
    let sys = d.system();
    let mut lambda = levi.pi1_m.lift(x);
    d.lattice().reduce(&mut lambda);
    loop {
        if let Some(&i) = levi.j.iter().find(|&&i| sys.pair(i, &lambda).is_negative()) {
            lambda = sys.reflect(i, &lambda);
            continue;
        }
        match levi.positive_m.iter().find(|&&b| sys.pair(b, &lambda) >= Int::from(2)) {
            Some(&b) => {
                lambda = d.sub(&CoWeight(lambda), &CoWeight(sys.root(b).coroot.clone())).0;
            }
            None => break,
        }
    }
    let mu = CoWeight(lambda);
    if levi.project(&mu) != levi.pi1_m.project(&levi.pi1_m.lift(x)) {
        return Err(Error::NoRepresentative(format!("class {x:?} does not round-trip")));
    }
    let w = levi
        .weyl_m
        .iter()
        .copied()
        .find(|&w| levi.m_length(&IwElement::new(d, mu.clone(), w)) == Some(0))
        .ok_or_else(|| Error::NoRepresentative(format!("no length-zero element over {mu}")))?;
    Ok(MinusculeRep { mu, w })
}

/// `mu_x <= mu`, comparing the dominant representative of `mu_x`.
fn class_below(levi: &LeviDatum, x: &[Int], mu: &CoWeight) -> Result<bool> {
    let m = minuscule_dominant_rep(levi, x)?.mu;
    levi.parent.dominance_leq(&levi.parent.dominant_rep(&m), mu)
}

/// Whether `<alpha, lambda> >= -1` for every positive root.
pub fn is_weakly_dominant(datum: &RootDatum, lambda: &CoWeight) -> bool {
    let sys = datum.system();
    (0..sys.num_positive()).all(|k| sys.pair(k, &lambda.0) >= Int::from(-1))
}

/// Result of the short-element construction for a straight `w`.
#[derive(Clone, Debug)]
pub struct ShortElement {
    pub u: WIdx,
    pub w_sharp: IwElement,
    pub ok: bool,
}

/// `u` is the shortest element of `W_0` with `u(nu_w)` dominant and
/// `w_sharp = u w sigma(u)^-1`; `ok` records whether `w_sharp` lies in
/// `Omega_M` for the Levi of `nu_w`.
pub fn short_element_check(w: &IwElement) -> Result<ShortElement> {
    if !is_straight(w) {
        return Err(Error::NotStraight(w.label()));
    }
    let d = w.datum();
    let (nu, dom) = newton(w);
    let levi = levi_of_newton(d, &dom);
    let u = d
        .weyl()
        .elements()
        .find(|&u| d.act_rat(u, &nu) == dom)
        .expect("some element of W_0 makes nu dominant");
    let ue = IwElement::finite(d, u);
    let w_sharp = &(&ue * w) * &ue.apply_sigma().inv();
    let ok = levi.m_length(&w_sharp) == Some(0);
    Ok(ShortElement { u, w_sharp, ok })
}

/// `kappa_M(b)`, read in `pi1(M)_Gamma` through the `Omega_M` avatar of a
/// straight witness of `b`.
pub fn kappa_m(levi: &LeviDatum, witness: &IwElement) -> Result<Vec<Int>> {
    let s = short_element_check(witness)?;
    if !s.ok {
        return Err(Error::LeviMismatch(format!("{} has no Omega_M avatar", witness.label())));
    }
    Ok(levi.coinvariants()?.project(&levi.project(s.w_sharp.trans())))
}

fn check_levi(levi: &LeviDatum, b: &SigmaClassInvariants) -> Result<()> {
    let expected = levi_of_newton(&levi.parent, &b.newton);
    if expected.j != levi.j {
        return Err(Error::LeviMismatch(format!(
            "simple subset {:?} but the Newton point centralizes {:?}",
            levi.j, expected.j
        )));
    }
    Ok(())
}

/// `I_{mu,b,M}`: classes `x` of `pi1(M)` with `kappa_M(b) = x` in the
/// coinvariants and `mu_x <= mu`. Sorted.
pub fn i_mu_b_m(datum: &Arc<RootDatum>, mu: &CoWeight, b: &SigmaClassInvariants, levi: &LeviDatum) -> Result<Vec<LeviClass>> {
    check_levi(levi, b)?;
    let entry = require_in_bgmu(datum, mu, b)?;
    let target = kappa_m(levi, &entry.witness)?;
    let coinv = levi.coinvariants()?;
    let mut out = BTreeSet::new();
    for lam in datum.dominant_below(mu)? {
        for w in datum.weyl().elements() {
            let v = datum.act(w, &lam);
            if levi.is_minuscule_dominant(&v) {
                let x = levi.project(&v);
                if coinv.project(&x) == target {
                    out.insert(x);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A move `x -(alpha, r)-> x'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub alpha: usize,
    pub r: usize,
    pub from: LeviClass,
    pub to: LeviClass,
}

fn sigma_root_pow(datum: &RootDatum, k: usize, r: usize) -> usize {
    (0..r).fold(k, |k, _| datum.sigma_root(k))
}

fn coroot_class(levi: &LeviDatum, k: usize) -> LeviClass {
    levi.project(&CoWeight(levi.parent.system().root(k).coroot.clone()))
}

/// `x' = x - alpha^vee + sigma^r(alpha^vee)`
pub fn move_target(levi: &LeviDatum, x: &[Int], alpha: usize, r: usize) -> LeviClass {
    let g = &levi.pi1_m;
    let a = coroot_class(levi, alpha);
    let sa = coroot_class(levi, sigma_root_pow(&levi.parent, alpha, r));
    g.add(&g.add(x, &g.neg(&a)), &sa)
}

/// The four conditions `mu_x, mu_{x+alpha}, mu_{x-sigma^r alpha}, mu_{x'} <= mu`.
pub fn move_applicable(mu: &CoWeight, levi: &LeviDatum, x: &[Int], alpha: usize, r: usize) -> Result<bool> {
    if levi.contains_root(alpha) {
        return Err(Error::AlphaInLevi(alpha));
    }
    let g = &levi.pi1_m;
    let a = coroot_class(levi, alpha);
    let sa = coroot_class(levi, sigma_root_pow(&levi.parent, alpha, r));
    for y in [x.to_vec(), g.add(x, &a), g.add(x, &g.neg(&sa)), move_target(levi, x, alpha, r)] {
        if !class_below(levi, &y, mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The irreducible refinement: applicable and not a composite of two
/// applicable moves through `sigma^i(alpha)` for `0 < i < r`.
pub fn move_irreducible(mu: &CoWeight, levi: &LeviDatum, x: &[Int], alpha: usize, r: usize) -> Result<bool> {
    if !move_applicable(mu, levi, x, alpha, r)? {
        return Ok(false);
    }
    let target = move_target(levi, x, alpha, r);
    for i in 1..r {
        let ai = sigma_root_pow(&levi.parent, alpha, i);
        let y = move_target(levi, x, alpha, i);
        if move_applicable(mu, levi, &y, ai, r - i)? && move_target(levi, &y, ai, r - i) == target {
            return Ok(false);
        }
        let y = move_target(levi, x, ai, r - i);
        if move_applicable(mu, levi, x, ai, r - i)? && move_applicable(mu, levi, &y, alpha, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of connected components of the Dynkin diagram in the sigma-orbit
/// of the component containing root `k`.
pub fn components_in_orbit(datum: &RootDatum, k: usize) -> usize {
    let sys = datum.system();
    let mut comps = BTreeSet::from([sys.component_of_root(k)]);
    let mut cur = datum.sigma_root(k);
    while cur != k {
        comps.insert(sys.component_of_root(cur));
        cur = datum.sigma_root(cur);
    }
    comps.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitSize {
    pub size: usize,
    pub h: usize,
    /// `size / h`, one of 1, 2, 3.
    pub multiple: usize,
}

/// Size of the sigma-orbit of root `k`, classified against `h`.
pub fn orbit_size(datum: &RootDatum, k: usize) -> Result<OrbitSize> {
    let mut size = 1;
    let mut cur = datum.sigma_root(k);
    while cur != k {
        size += 1;
        cur = datum.sigma_root(cur);
    }
    let h = components_in_orbit(datum, k);
    if size % h != 0 || !(1..=3).contains(&(size / h)) {
        return Err(Error::ClassError { size, h });
    }
    Ok(OrbitSize { size, h, multiple: size / h })
}

/// Roots allowed in a path step: outside `Sigma_M` with `M`-dominant,
/// `M`-minuscule coroot, paired with their admissible `r`.
pub fn move_candidates(levi: &LeviDatum) -> Result<Vec<(usize, std::ops::RangeInclusive<usize>)>> {
    let d = &levi.parent;
    let sys = d.system();
    let mut out = Vec::new();
    for k in 0..sys.num_roots() {
        if levi.contains_root(k) {
            continue;
        }
        let ok = levi.positive_m.iter().all(|&b| (0..=1).contains(&sys.root_coroot(b, k)));
        if !ok {
            continue;
        }
        let o = orbit_size(d, k)?;
        let rmax = if o.multiple == 3 { 2 * o.h - 1 } else { o.h };
        out.push((k, 1..=rmax));
    }
    Ok(out)
}

/// Breadth-first search for a chain of constrained moves from `x` to `x'`.
pub fn find_path(mu: &CoWeight, levi: &LeviDatum, x: &[Int], x2: &[Int]) -> Result<Option<Vec<Move>>> {
    if x == x2 {
        return Ok(Some(Vec::new()));
    }
    let cands = move_candidates(levi)?;
    let mut prev: HashMap<LeviClass, Move> = HashMap::new();
    let mut seen = HashSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for (alpha, rs) in &cands {
            for r in rs.clone() {
                let next = move_target(levi, &cur, *alpha, r);
                if seen.contains(&next) || !move_applicable(mu, levi, &cur, *alpha, r)? {
                    continue;
                }
                seen.insert(next.clone());
                prev.insert(next.clone(), Move { alpha: *alpha, r, from: cur.clone(), to: next.clone() });
                if next == x2 {
                    let mut path = Vec::new();
                    let mut at = next;
                    while let Some(m) = prev.get(&at) {
                        at = m.from.clone();
                        path.push(m.clone());
                    }
                    path.reverse();
                    return Ok(Some(path));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;

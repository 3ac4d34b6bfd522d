//! Sigma-conjugacy invariants: Newton points, the Kottwitz map, straight
//! elements and `B(G, mu)`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::Zero;

use crate::abelian::{FgAbelian, Matrix};
use crate::admissible::{adm, canonical_sort, AdmissibleSet, SetKind};
use crate::error::{Error, Result};
use crate::iwahori_weyl::IwElement;
use crate::root_datum::{CoWeight, RatCoWeight, RootDatum};
use crate::{Int, Rat};

/// Invariants `(nu, kappa)` of a sigma-conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaClassInvariants {
    /// Dominant Newton point.
    pub newton: RatCoWeight,
    /// Class in the sigma-coinvariants of `pi1`.
    pub kottwitz: Vec<Int>,
    pub is_basic: bool,
}

#[derive(Clone, Debug)]
pub struct BgMuEntry {
    pub invariants: SigmaClassInvariants,
    /// A sigma-straight element of `Adm(mu)` in the class.
    pub witness: IwElement,
}

/// `B(G, mu)` computed twice: from sigma-conjugacy classes of straight
/// elements of `Adm(mu)`, and by filtering invariants of all of `Adm(mu)`.
#[derive(Clone, Debug)]
pub struct BgMu {
    pub entries: Vec<BgMuEntry>,
    /// Invariants passing the direct filter.
    pub filtered: Vec<SigmaClassInvariants>,
    /// Whether two straight classes share their invariants.
    pub injective: bool,
}

impl BgMu {
    /// Whether both routes give the same set of invariants.
    pub fn coherent(&self) -> bool {
        let a: BTreeSet<_> = self.entries.iter().map(|e| &e.invariants).collect();
        let b: BTreeSet<_> = self.filtered.iter().collect();
        a == b
    }

    pub fn basic(&self) -> Vec<&BgMuEntry> {
        self.entries.iter().filter(|e| e.invariants.is_basic).collect()
    }
}

/// `(n, x sigma(x) ... sigma^{n-1}(x))` for the least `n` divisible by the
/// order of `sigma` at which the product is a translation.
pub fn twisted_power_period(x: &IwElement) -> (usize, IwElement) {
    let d = x.datum();
    let e = d.twist_order();
    let cap = e * d.weyl().order();
    let mut p = x.clone();
    let mut s = x.clone();
    for n in 1..=cap {
        if n % e == 0 && p.is_translation() {
            return (n, p);
        }
        s = s.apply_sigma();
        p = &p * &s;
    }
    unreachable!("twisted power did not become a translation within e |W_0| steps")
}

/// `x sigma(x) ... sigma^{n-1}(x)`
pub fn twisted_power(x: &IwElement, n: usize) -> IwElement {
    let mut p = IwElement::identity(x.datum());
    let mut s = x.clone();
    for _ in 0..n {
        p = &p * &s;
        s = s.apply_sigma();
    }
    p
}

/// Newton point `nu_x = lambda / n` and its dominant representative.
pub fn newton(x: &IwElement) -> (RatCoWeight, RatCoWeight) {
    let d = x.datum();
    let (n, p) = twisted_power_period(x);
    let f = d.free_rank();
    let nn = Rat::from_integer(Int::from(n as i64));
    let nu = RatCoWeight(p.trans().0[..f].iter().map(|c| Rat::from_integer(c.clone()) / &nn).collect());
    let dom = d.dominant_rep_rat(&nu);
    (nu, dom)
}

/// The group `pi1_Gamma`: sigma-coinvariants of `pi1`, presented on the
/// canonical coordinates of `pi1`.
pub fn pi1_coinvariants(datum: &RootDatum) -> FgAbelian<Int> {
    twisted_coinvariants(datum.pi1(), &datum.pi1_sigma())
}

/// Coinvariants of an endomorphism `s` of `g`, given on canonical
/// coordinates of `g`.
pub fn twisted_coinvariants(g: &FgAbelian<Int>, s: &Matrix<Int>) -> FgAbelian<Int> {
    let k = g.rank();
    let mut rel = Matrix::identity(k).sub(s);
    if !g.torsion().is_empty() {
        let cols: Vec<Vec<Int>> = g
            .torsion()
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let mut c = vec![Int::zero(); k];
                c[g.free_rank() + j] = t.clone();
                c
            })
            .collect();
        rel = rel.hcat(&Matrix::from_cols(k, &cols));
    }
    FgAbelian::quotient(k, &rel)
}

/// Kottwitz class: the `Omega` component pushed to sigma-coinvariants.
pub fn kottwitz(x: &IwElement) -> Vec<Int> {
    pi1_coinvariants(x.datum()).project(&x.omega_component())
}

pub fn kottwitz_of_coweight(datum: &RootDatum, lambda: &CoWeight) -> Vec<Int> {
    pi1_coinvariants(datum).project(&datum.pi1_class(lambda))
}

/// Whether `nu` pairs to zero with every root.
pub fn is_central(datum: &RootDatum, nu: &RatCoWeight) -> bool {
    let sys = datum.system();
    (0..sys.rank()).all(|i| sys.pair_rat(i, &nu.0).is_zero())
}

pub fn invariants(x: &IwElement) -> SigmaClassInvariants {
    let (_, dom) = newton(x);
    let is_basic = is_central(x.datum(), &dom);
    SigmaClassInvariants { newton: dom, kottwitz: kottwitz(x), is_basic }
}

/// `l(x sigma(x) ... sigma^{n-1}(x)) = n l(x)` for every `n` up to the period.
pub fn is_straight(x: &IwElement) -> bool {
    let (n, _) = twisted_power_period(x);
    let l = x.length();
    let mut p = IwElement::identity(x.datum());
    let mut s = x.clone();
    for k in 1..=n {
        p = &p * &s;
        s = s.apply_sigma();
        if p.length() != k * l {
            return false;
        }
    }
    true
}

/// Length and Newton point agree: `l(x) = <2 rho, nu_x>`.
pub fn length_matches_newton(x: &IwElement) -> bool {
    let (_, dom) = newton(x);
    x.datum().two_rho_pairing(&dom) == Rat::from_integer(Int::from(x.length() as i64))
}

pub fn straight_elements(set: &AdmissibleSet) -> Vec<IwElement> {
    assert_eq!(set.kind, SetKind::Iwahori, "straight elements are taken in an Iwahori-level set");
    set.elements.iter().filter(|x| is_straight(x)).cloned().collect()
}

/// `[b] <= [b']`: equal Kottwitz classes and dominance of Newton points.
pub fn leq_b(datum: &RootDatum, a: &SigmaClassInvariants, b: &SigmaClassInvariants) -> bool {
    a.kottwitz == b.kottwitz && datum.rat_leq(&a.newton, &b.newton)
}

/// Elements reachable from `seed` by `x -> g x sigma(g)^-1` with `g` among
/// `conj`, staying within length `bound` and inside the `pi1` class of
/// `seed`. The class constraint keeps the search finite when sigma moves
/// the centre.
pub fn sigma_orbit_closure(seed: &IwElement, conj: &[IwElement], bound: usize) -> HashSet<IwElement> {
    let twisted: Vec<(IwElement, IwElement)> = conj.iter().map(|g| (g.clone(), g.apply_sigma().inv())).collect();
    let om = seed.omega_component();
    let mut seen = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(x) = queue.pop_front() {
        for (g, sgi) in &twisted {
            let y = &(g * &x) * sgi;
            if y.length() <= bound && !seen.contains(&y) && y.omega_component() == om {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `B(G, mu)` by both routes.
pub fn b_g_mu(datum: &Arc<RootDatum>, mu: &CoWeight) -> Result<BgMu> {
    let a = adm(datum, mu)?;
    let max_len = a.elements.iter().map(|x| x.length()).max().unwrap_or(0);
    let straight = straight_elements(&a);

    let mut conj = IwElement::generators(datum);
    for x in &a.elements {
        if x.length() == 0 && !conj.contains(x) {
            conj.push(x.clone());
        }
    }

    // group straight elements into classes
    let mut class_of: HashMap<IwElement, usize> = HashMap::new();
    let mut classes: Vec<Vec<IwElement>> = Vec::new();
    for x in &straight {
        if class_of.contains_key(x) {
            continue;
        }
        let orbit = sigma_orbit_closure(x, &conj, max_len);
        let id = classes.len();
        let members: Vec<IwElement> = straight.iter().filter(|y| orbit.contains(y)).cloned().collect();
        for y in &members {
            class_of.insert(y.clone(), id);
        }
        classes.push(members);
    }
    let mut entries: Vec<BgMuEntry> = classes
        .into_iter()
        .map(|members| {
            let witness = canonical_sort(members).remove(0);
            BgMuEntry { invariants: invariants(&witness), witness }
        })
        .collect();
    sort_entries(datum, &mut entries);
    let distinct: HashSet<_> = entries.iter().map(|e| e.invariants.clone()).collect();
    let injective = distinct.len() == entries.len();

    Ok(BgMu { entries, filtered: invariant_filter(datum, mu, &a)?, injective })
}

/// Invariants of all elements of `Adm(mu)` that satisfy `kappa = kappa(mu)`
/// and `nu <= ` the Galois average of `mu`.
pub fn invariant_filter(datum: &Arc<RootDatum>, mu: &CoWeight, a: &AdmissibleSet) -> Result<Vec<SigmaClassInvariants>> {
    let k_mu = kottwitz_of_coweight(datum, mu);
    let avg = datum.galois_average(mu);
    let set: BTreeSet<SigmaClassInvariants> = a
        .elements
        .iter()
        .map(invariants)
        .filter(|inv| inv.kottwitz == k_mu && datum.rat_leq(&inv.newton, &avg))
        .collect();
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by_key(|x| inv_key(datum, x));
    Ok(v)
}

fn inv_key(datum: &RootDatum, inv: &SigmaClassInvariants) -> (Rat, RatCoWeight, Vec<Int>) {
    (datum.two_rho_pairing(&inv.newton), inv.newton.clone(), inv.kottwitz.clone())
}

fn sort_entries(datum: &RootDatum, entries: &mut [BgMuEntry]) {
    entries.sort_by_key(|x| inv_key(datum, &x.invariants));
}

/// Checks that `inv` belongs to `B(G, mu)`.
pub fn require_in_bgmu(datum: &Arc<RootDatum>, mu: &CoWeight, inv: &SigmaClassInvariants) -> Result<BgMuEntry> {
    let b = b_g_mu(datum, mu)?;
    b.entries
        .into_iter()
        .find(|e| e.invariants == *inv)
        .ok_or_else(|| Error::InvariantsNotInBgMu(format!("newton {} kappa {:?}", inv.newton, inv.kottwitz)))
}

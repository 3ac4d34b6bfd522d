//! Based root data with a diagram twist, their Weyl groups, folding, and
//! the dominance order.

mod cartan_type;
mod dominance;
mod fold;
mod presets;
mod roots;
mod spec;
mod weyl;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

pub use cartan_type::{classify, dynkin_components, standard_cartan, CartanType};
pub use fold::{EchelonnageSystem, FoldSource};
pub use presets::{preset, simply_connected, PRESET_NAMES};
pub use roots::{rational_inverse_checked, Root, RootSystem};
pub use spec::{CustomDatum, DatumSpec, LatticeSpec, OverrideSpec, TwistSpec};
pub use weyl::{WIdx, WeylGroup};

use crate::abelian::{FgAbelian, Matrix};
use crate::error::{Error, Result};
use crate::{Int, IntMatrix, Rat};

/// A coweight: an element of the lattice in canonical coordinates (free
/// part first, then torsion reduced modulo its order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoWeight(pub Vec<Int>);

/// A rational vector on the free part of the lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatCoWeight(pub Vec<Rat>);

impl CoWeight {
    pub fn from_i64(v: &[i64]) -> Self {
        CoWeight(v.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// The free part as a rational vector.
    pub fn to_rat(&self, free_rank: usize) -> RatCoWeight {
        RatCoWeight(self.0[..free_rank].iter().map(|x| Rat::from_integer(x.clone())).collect())
    }
}

impl std::fmt::Display for CoWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl RatCoWeight {
    pub fn zero(n: usize) -> Self {
        RatCoWeight(vec![Rat::zero(); n])
    }

    pub fn from_frac(v: &[(i64, i64)]) -> Self {
        RatCoWeight(v.iter().map(|&(a, b)| Rat::new(Int::from(a), Int::from(b))).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

impl std::fmt::Display for RatCoWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A based root datum together with the Frobenius twist `sigma`.
///
/// All affine Weyl group computations run over [`RootDatum::system`]: the
/// datum's own root system, or the échelonnage override when one is given.
#[derive(Debug)]
pub struct RootDatum {
    spec: CustomDatum,
    tag: u64,
    abs_cartan: Vec<Vec<i64>>,
    twist_perm: Vec<usize>,
    twist_endo: IntMatrix,
    twist_order: usize,
    system: RootSystem,
    sigma_roots: Vec<usize>,
    pi1: FgAbelian<Int>,
    weyl: OnceLock<WeylGroup>,
    sigma_weyl: OnceLock<Vec<WIdx>>,
    affine_gens: OnceLock<Vec<(CoWeight, WIdx)>>,
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn bad_spec(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::BadSpec { path: path.into(), msg: msg.into() }
}

impl RootDatum {
    /// Resolves and validates a spec. Preset names are looked up in the
    /// built-in catalog.
    pub fn build(spec: &DatumSpec) -> Result<Arc<Self>> {
        match spec {
            DatumSpec::Preset { preset: name } => {
                let custom = preset(name).ok_or_else(|| Error::UnknownPreset(name.clone()))?;
                Self::from_custom(custom)
            }
            DatumSpec::Custom(c) => Self::from_custom(c.clone()),
        }
    }

    pub fn preset(name: &str) -> Result<Arc<Self>> {
        Self::build(&DatumSpec::Preset { preset: name.to_string() })
    }

    pub fn from_custom(spec: CustomDatum) -> Result<Arc<Self>> {
        let r = spec.cartan.len();
        let f = spec.lattice.free_rank;
        let lattice = FgAbelian::canonical(f, ints(&spec.lattice.torsion))
            .map_err(|e| bad_spec("$.lattice.torsion", e.to_string()))?;
        let n = lattice.rank();

        for (i, row) in spec.cartan.iter().enumerate() {
            if row.len() != r {
                return Err(Error::BadCartan {
                    path: format!("$.cartan[{i}]"),
                    msg: format!("expected {r} entries, found {}", row.len()),
                });
            }
        }
        roots::validate_cartan(&spec.cartan).map_err(|e| match e {
            Error::BadCartan { path, msg } => Error::BadCartan { path: format!("$.{path}"), msg },
            e => e,
        })?;
        for (c, comp) in dynkin_components(&spec.cartan).iter().enumerate() {
            if classify(&spec.cartan, comp).is_none() {
                return Err(Error::BadCartan {
                    path: "$.cartan".into(),
                    msg: format!("component {c} (nodes {comp:?}) is not of finite type"),
                });
            }
        }
        check_rows("$.simple_coroots", &spec.simple_coroots, r, n)?;
        check_rows("$.root_pairing", &spec.root_pairing, r, f)?;

        let covectors: Vec<Vec<Int>> = spec.root_pairing.iter().map(|v| ints(v)).collect();
        let coroots: Vec<Vec<Int>> = spec.simple_coroots.iter().map(|v| ints(v)).collect();
        for i in 0..r {
            for j in 0..r {
                let p: Int = covectors[i].iter().zip(&coroots[j][..f]).map(|(a, b)| a * b).sum();
                if p != Int::from(spec.cartan[i][j]) {
                    return Err(Error::BadPairing {
                        path: format!("$.root_pairing[{i}]"),
                        msg: format!(
                            "<alpha_{i}, alpha_{j}^vee> = {p} but the Cartan entry is {}",
                            spec.cartan[i][j]
                        ),
                    });
                }
            }
        }
        let absolute = RootSystem::new(lattice.clone(), covectors, coroots).map_err(|e| match e {
            Error::BadCartan { path, msg } => Error::BadCartan { path: format!("$.{path}"), msg },
            e => e,
        })?;

        // twist
        let (perm, endo) = match &spec.twist {
            None => ((0..r).collect::<Vec<_>>(), IntMatrix::identity(n)),
            Some(t) => {
                if t.perm.len() != r {
                    return Err(Error::BadTwist {
                        path: "$.twist.perm".into(),
                        msg: format!("expected {r} entries"),
                    });
                }
                check_rows("$.twist.lattice_endo", &t.lattice_endo, n, n).map_err(|e| match e {
                    Error::BadSpec { path, msg } => Error::BadTwist { path, msg },
                    e => e,
                })?;
                (t.perm.clone(), IntMatrix::from_i64_rows(&t.lattice_endo))
            }
        };
        let mut seen = vec![false; r];
        for &p in &perm {
            if p >= r || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadTwist {
                    path: "$.twist.perm".into(),
                    msg: "not a permutation of the simple roots".into(),
                });
            }
        }
        for i in 0..r {
            for j in 0..r {
                if spec.cartan[perm[i]][perm[j]] != spec.cartan[i][j] {
                    return Err(Error::BadTwist {
                        path: "$.twist.perm".into(),
                        msg: format!("does not preserve cartan[{i}][{j}]"),
                    });
                }
            }
        }
        lattice.check_endo(&endo).map_err(|e| Error::BadTwist {
            path: "$.twist.lattice_endo".into(),
            msg: e.to_string(),
        })?;
        let endo = reduce_endo(&lattice, &endo);
        let twist_order = endo_order(&lattice, &endo).ok_or_else(|| Error::BadTwist {
            path: "$.twist.lattice_endo".into(),
            msg: "endomorphism is not of finite order".into(),
        })?;
        check_sigma_compat(&absolute, &endo, Some(&perm), "$.twist.lattice_endo")?;
        let perm_order = perm_order(&perm);
        if twist_order % perm_order != 0 {
            return Err(Error::BadTwist {
                path: "$.twist".into(),
                msg: "order of the permutation does not divide the order of the endomorphism".into(),
            });
        }

        let system = match &spec.echelonnage_override {
            None => absolute,
            Some(o) => {
                let rr = o.simple_roots.len();
                check_rows("$.echelonnage_override.simple_roots", &o.simple_roots, rr, f)?;
                check_rows("$.echelonnage_override.simple_coroots", &o.simple_coroots, rr, n)?;
                let sys = RootSystem::new(
                    lattice.clone(),
                    o.simple_roots.iter().map(|v| ints(v)).collect(),
                    o.simple_coroots.iter().map(|v| ints(v)).collect(),
                )
                .map_err(|e| match e {
                    Error::BadCartan { path, msg } => Error::BadCartan {
                        path: format!("$.echelonnage_override ({path})"),
                        msg,
                    },
                    e => e,
                })?;
                check_sigma_compat(&sys, &endo, None, "$.echelonnage_override")?;
                sys
            }
        };
        let sigma_roots: Vec<usize> = (0..system.num_roots())
            .map(|k| {
                let img = endo.mul_vec(&system.root(k).coroot);
                system.index_of_coroot(&img).expect("checked above")
            })
            .collect();

        // pi_1 = Lambda / (torsion relations + coroot span)
        let mut rels: Vec<Vec<Int>> = (0..system.rank()).map(|i| system.root(i).coroot.clone()).collect();
        for (t, d) in lattice.torsion().iter().enumerate() {
            let mut v = vec![Int::zero(); n];
            v[f + t] = d.clone();
            rels.push(v);
        }
        let pi1 = if rels.is_empty() {
            FgAbelian::quotient(n, &Matrix::zeros(n, 0))
        } else {
            FgAbelian::quotient(n, &Matrix::from_cols(n, &rels))
        };

        let mut h = DefaultHasher::new();
        serde_json::to_string(&spec).expect("spec serializes").hash(&mut h);
        let tag = h.finish();

        Ok(Arc::new(RootDatum {
            abs_cartan: spec.cartan.clone(),
            spec,
            tag,
            twist_perm: perm,
            twist_endo: endo,
            twist_order,
            system,
            sigma_roots,
            pi1,
            weyl: OnceLock::new(),
            sigma_weyl: OnceLock::new(),
            affine_gens: OnceLock::new(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &CustomDatum {
        &self.spec
    }

    /// Identifies the datum; elements built on different data never mix.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn absolute_cartan(&self) -> &[Vec<i64>] {
        &self.abs_cartan
    }

    pub fn twist_perm(&self) -> &[usize] {
        &self.twist_perm
    }

    pub fn has_override(&self) -> bool {
        self.spec.echelonnage_override.is_some()
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn lattice(&self) -> &FgAbelian<Int> {
        self.system.lattice()
    }

    pub fn free_rank(&self) -> usize {
        self.system.free_rank()
    }

    /// Number of canonical coordinates of the lattice.
    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    /// Number of simple roots of the working system.
    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        self.system.components()
    }

    pub fn weyl(&self) -> &WeylGroup {
        self.weyl.get_or_init(|| WeylGroup::new(&self.system))
    }

    /// The Frobenius on the lattice (canonical coordinates).
    pub fn twist_endo(&self) -> &IntMatrix {
        &self.twist_endo
    }

    /// Order `e` of the Frobenius action on the lattice.
    pub fn twist_order(&self) -> usize {
        self.twist_order
    }

    pub fn is_split(&self) -> bool {
        self.twist_order == 1
    }

    /// The fundamental group `Lambda / Q^vee` (as a quotient of the lattice's
    /// canonical coordinates).
    pub fn pi1(&self) -> &FgAbelian<Int> {
        &self.pi1
    }

    /// Frobenius on `pi1`, in its canonical coordinates.
    pub fn pi1_sigma(&self) -> IntMatrix {
        self.pi1.induced_endo(&self.twist_endo)
    }

    pub fn sigma_coweight(&self, lambda: &CoWeight) -> CoWeight {
        let mut v = self.twist_endo.mul_vec(&lambda.0);
        self.lattice().reduce(&mut v);
        CoWeight(v)
    }

    pub fn sigma_rat(&self, nu: &RatCoWeight) -> RatCoWeight {
        let f = self.free_rank();
        RatCoWeight(
            (0..f)
                .map(|i| {
                    (0..f)
                        .map(|j| Rat::from_integer(self.twist_endo[(i, j)].clone()) * &nu.0[j])
                        .sum()
                })
                .collect(),
        )
    }

    /// `sigma` on root indices of the working system.
    pub fn sigma_root(&self, k: usize) -> usize {
        self.sigma_roots[k]
    }

    /// `sigma` on simple roots of the working system.
    pub fn sigma_simple(&self, i: usize) -> usize {
        self.sigma_roots[i]
    }

    /// `sigma(w) = sigma w sigma^{-1}` on the finite Weyl group.
    pub fn sigma_weyl(&self, w: WIdx) -> WIdx {
        let table = self.sigma_weyl.get_or_init(|| {
            let weyl = self.weyl();
            let nroots = self.system.num_roots();
            let mut inv = vec![0usize; nroots];
            for (k, &s) in self.sigma_roots.iter().enumerate() {
                inv[s] = k;
            }
            weyl.elements()
                .map(|w| {
                    let p: Vec<u32> = (0..nroots)
                        .map(|k| self.sigma_roots[weyl.root_image(w, inv[k])] as u32)
                        .collect();
                    weyl.lookup_perm(&p).expect("sigma normalizes W0")
                })
                .collect()
        });
        table[w as usize]
    }

    /// Parses a coweight from integer coordinates, checking arity.
    pub fn coweight(&self, coords: &[i64]) -> Result<CoWeight> {
        if coords.len() != self.dim() {
            return Err(Error::Arity(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                coords.len()
            )));
        }
        let mut v = ints(coords);
        self.lattice().reduce(&mut v);
        Ok(CoWeight(v))
    }

    pub fn zero_coweight(&self) -> CoWeight {
        CoWeight(vec![Int::zero(); self.dim()])
    }

    /// Simple coroot `i` of the working system.
    pub fn simple_coroot(&self, i: usize) -> CoWeight {
        CoWeight(self.system.root(i).coroot.clone())
    }

    pub fn add(&self, a: &CoWeight, b: &CoWeight) -> CoWeight {
        CoWeight(self.lattice().add(&a.0, &b.0))
    }

    pub fn sub(&self, a: &CoWeight, b: &CoWeight) -> CoWeight {
        CoWeight(self.lattice().add(&a.0, &self.lattice().neg(&b.0)))
    }

    pub fn neg(&self, a: &CoWeight) -> CoWeight {
        CoWeight(self.lattice().neg(&a.0))
    }

    /// `w(lambda)` for a finite Weyl element.
    pub fn act(&self, w: WIdx, lambda: &CoWeight) -> CoWeight {
        CoWeight(self.weyl().act(&self.system, w, &lambda.0))
    }

    pub fn act_rat(&self, w: WIdx, nu: &RatCoWeight) -> RatCoWeight {
        RatCoWeight(self.weyl().act_rat(w, &nu.0))
    }

    /// Number of affine simple reflections (one per Dynkin component).
    pub fn num_affine(&self) -> usize {
        self.components().len()
    }

    /// Size of `S`: affine generators first, then finite simple reflections.
    pub fn num_gens(&self) -> usize {
        self.num_affine() + self.rank()
    }

    /// Raw data `(translation, finite part)` of every element of `S`.
    pub fn affine_gen_data(&self) -> &[(CoWeight, WIdx)] {
        self.affine_gens.get_or_init(|| {
            let sys = self.system();
            let weyl = self.weyl();
            let mut out: Vec<(CoWeight, WIdx)> = sys
                .highest_roots()
                .iter()
                .map(|&k| (CoWeight(sys.root(k).coroot.clone()), weyl.reflection(sys, k)))
                .collect();
            out.extend((0..sys.rank()).map(|i| (self.zero_coweight(), weyl.simple(i))));
            out
        })
    }

    /// Nodes of each affine Dynkin component, as indices into `S`.
    pub fn affine_components(&self) -> Vec<Vec<usize>> {
        let a = self.num_affine();
        self.components()
            .iter()
            .enumerate()
            .map(|(c, comp)| std::iter::once(c).chain(comp.iter().map(|&i| a + i)).collect())
            .collect()
    }

    /// Class of a coweight in `pi1`.
    pub fn pi1_class(&self, lambda: &CoWeight) -> Vec<Int> {
        self.pi1.project(&lambda.0)
    }
}

fn check_rows(path: &str, rows: &[Vec<i64>], count: usize, len: usize) -> Result<()> {
    if rows.len() != count {
        return Err(bad_spec(path, format!("expected {count} rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != len {
            return Err(bad_spec(
                format!("{path}[{i}]"),
                format!("expected {len} entries, found {}", row.len()),
            ));
        }
    }
    Ok(())
}

fn reduce_endo(lattice: &FgAbelian<Int>, endo: &IntMatrix) -> IntMatrix {
    let n = endo.rows();
    let cols: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            let mut c = endo.col(j);
            lattice.reduce(&mut c);
            c
        })
        .collect();
    if n == 0 {
        return IntMatrix::zeros(0, 0);
    }
    IntMatrix::from_cols(n, &cols)
}

fn endo_order(lattice: &FgAbelian<Int>, endo: &IntMatrix) -> Option<usize> {
    let n = endo.rows();
    let id = IntMatrix::identity(n);
    let mut p = endo.clone();
    for k in 1..=60 {
        if reduce_endo(lattice, &p) == reduce_endo(lattice, &id) {
            return Some(k);
        }
        p = &p * endo;
    }
    None
}

fn perm_order(perm: &[usize]) -> usize {
    let mut q: Vec<usize> = perm.to_vec();
    let mut k = 1;
    while q.iter().enumerate().any(|(i, &x)| i != x) {
        q = q.iter().map(|&x| perm[x]).collect();
        k += 1;
    }
    k
}

/// Checks that `endo` maps simple coroots to simple coroots (following
/// `perm` when given) and is compatible with the pairing.
fn check_sigma_compat(sys: &RootSystem, endo: &IntMatrix, perm: Option<&[usize]>, path: &str) -> Result<()> {
    let f = sys.free_rank();
    let r = sys.rank();
    let mut images = Vec::with_capacity(r);
    for i in 0..r {
        let img = endo.mul_vec(&sys.root(i).coroot);
        let k = sys.index_of_coroot(&img).filter(|&k| k < r).ok_or_else(|| Error::BadTwist {
            path: path.into(),
            msg: format!("image of simple coroot {i} is not a simple coroot"),
        })?;
        if let Some(p) = perm {
            if p[i] != k {
                return Err(Error::BadTwist {
                    path: path.into(),
                    msg: format!("sends simple coroot {i} to {k}, but the permutation says {}", p[i]),
                });
            }
        }
        images.push(k);
    }
    // <alpha_{sigma i}, endo v> = <alpha_i, v> on the free part
    for (i, &k) in images.iter().enumerate() {
        for c in 0..f {
            let lhs: Int = (0..f).map(|a| &sys.root(k).covector[a] * &endo[(a, c)]).sum();
            if lhs != sys.root(i).covector[c] {
                return Err(Error::BadTwist {
                    path: path.into(),
                    msg: format!("endomorphism does not carry alpha_{i} to alpha_{k}"),
                });
            }
        }
    }
    Ok(())
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.spec == other.spec
    }
}

impl Eq for RootDatum {}

#[cfg(test)]
mod tests;

use std::collections::{HashMap, VecDeque};

use num_traits::{One, ToPrimitive, Zero};

use super::cartan_type::{classify, dynkin_components, CartanType};
use crate::abelian::FgAbelian;
use crate::error::{Error, Result};
use crate::{Int, Rat};

/// One root together with its coroot.
#[derive(Clone, Debug)]
pub struct Root {
    /// Functional on the free part of the lattice.
    pub covector: Vec<Int>,
    /// Coroot in canonical lattice coordinates.
    pub coroot: Vec<Int>,
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// A reduced finite root system realized on a lattice `Z^f + torsion`.
///
/// Roots `0..npos` are the positive roots (simple roots first, then by
/// height), and root `i + npos` is the negative of root `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lattice: FgAbelian<Int>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    npos: usize,
    by_coeffs: HashMap<Vec<i64>, usize>,
    by_coroot: HashMap<Vec<Int>, usize>,
    cartan_inv: Vec<Vec<Rat>>,
    components: Vec<Vec<usize>>,
    types: Vec<CartanType>,
    highest: Vec<usize>,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    /// Generates the root system spanned by the given simple roots
    /// (covectors on the free part) and simple coroots (lattice vectors).
    pub fn new(
        lattice: FgAbelian<Int>,
        simple_covectors: Vec<Vec<Int>>,
        simple_coroots: Vec<Vec<Int>>,
    ) -> Result<Self> {
        let r = simple_covectors.len();
        let f = lattice.free_rank();
        assert_eq!(simple_coroots.len(), r);
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = dot(&simple_covectors[i], &simple_coroots[j][..f]);
                cartan[i][j] = v.to_i64().ok_or_else(|| Error::BadCartan {
                    path: format!("cartan[{i}][{j}]"),
                    msg: "entry out of range".into(),
                })?;
            }
        }
        validate_cartan(&cartan)?;

        let components = dynkin_components(&cartan);
        let mut types = Vec::new();
        for (c, comp) in components.iter().enumerate() {
            let ty = classify(&cartan, comp).ok_or_else(|| Error::BadCartan {
                path: format!("cartan (component {c}: nodes {comp:?})"),
                msg: "not of finite type".into(),
            })?;
            types.push(ty);
        }

        // positive roots by closure under simple reflections
        let mut roots: Vec<Root> = (0..r)
            .map(|i| {
                let mut coeffs = vec![0i64; r];
                coeffs[i] = 1;
                let mut coroot = simple_coroots[i].clone();
                lattice.reduce(&mut coroot);
                Root { covector: simple_covectors[i].clone(), coroot, coeffs }
            })
            .collect();
        let mut by_coeffs: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, rt)| (rt.coeffs.clone(), k)).collect();
        let mut queue: VecDeque<usize> = (0..r).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| roots[k].coeffs[j] * cartan[j][i]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut coeffs = roots[k].coeffs.clone();
                coeffs[i] -= pairing;
                if coeffs.iter().any(|&c| c < 0) || by_coeffs.contains_key(&coeffs) {
                    continue;
                }
                let ki = Int::from(pairing);
                let covector: Vec<Int> = roots[k]
                    .covector
                    .iter()
                    .zip(&simple_covectors[i])
                    .map(|(a, b)| a - &ki * b)
                    .collect();
                let back = dot(&simple_covectors[i], &roots[k].coroot[..f]);
                let mut coroot: Vec<Int> = roots[k]
                    .coroot
                    .iter()
                    .zip(&simple_coroots[i])
                    .map(|(a, b)| a - &back * b)
                    .collect();
                lattice.reduce(&mut coroot);
                by_coeffs.insert(coeffs.clone(), roots.len());
                queue.push_back(roots.len());
                roots.push(Root { covector, coroot, coeffs });
            }
        }
        // simple roots first, then by height, ties by coefficients
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&a, &b| {
            (roots[a].height(), std::cmp::Reverse(&roots[a].coeffs))
                .cmp(&(roots[b].height(), std::cmp::Reverse(&roots[b].coeffs)))
        });
        let mut pos: Vec<Root> = order.into_iter().map(|k| roots[k].clone()).collect();
        let npos = pos.len();
        let negs: Vec<Root> = pos
            .iter()
            .map(|rt| {
                let mut coroot: Vec<Int> = rt.coroot.iter().map(|x| -x).collect();
                lattice.reduce(&mut coroot);
                Root {
                    covector: rt.covector.iter().map(|x| -x).collect(),
                    coroot,
                    coeffs: rt.coeffs.iter().map(|x| -x).collect(),
                }
            })
            .collect();
        pos.extend(negs);
        let roots = pos;
        let by_coeffs: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, rt)| (rt.coeffs.clone(), k)).collect();
        let by_coroot: HashMap<Vec<Int>, usize> =
            roots.iter().enumerate().map(|(k, rt)| (rt.coroot.clone(), k)).collect();
        if by_coroot.len() != roots.len() {
            return Err(Error::BadPairing {
                path: "simple_coroots".into(),
                msg: "coroots are not distinct in the lattice".into(),
            });
        }

        let highest = components
            .iter()
            .map(|comp| {
                (0..npos)
                    .filter(|&k| roots[k].coeffs.iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i)))
                    .max_by_key(|&k| roots[k].height())
                    .expect("component without roots")
            })
            .collect();

        let cartan_inv = rational_inverse(&cartan);
        Ok(RootSystem {
            lattice,
            cartan,
            roots,
            npos,
            by_coeffs,
            by_coroot,
            cartan_inv,
            components,
            types,
            highest,
        })
    }

    pub fn lattice(&self) -> &FgAbelian<Int> {
        &self.lattice
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn free_rank(&self) -> usize {
        self.lattice.free_rank()
    }

    /// Number of canonical lattice coordinates.
    pub fn dim(&self) -> usize {
        self.lattice.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.npos
    }

    pub fn negate(&self, k: usize) -> usize {
        if k < self.npos {
            k + self.npos
        } else {
            k - self.npos
        }
    }

    /// Index of the positive root among `{k, -k}`.
    pub fn positive_part(&self, k: usize) -> usize {
        k % self.npos
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_types(&self) -> &[CartanType] {
        &self.types
    }

    /// Highest root of each Dynkin component.
    pub fn highest_roots(&self) -> &[usize] {
        &self.highest
    }

    pub fn component_of_root(&self, k: usize) -> usize {
        let rt = &self.roots[k];
        let i = rt.coeffs.iter().position(|&c| c != 0).expect("zero root");
        self.components.iter().position(|c| c.contains(&i)).unwrap()
    }

    pub fn index_of_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.by_coeffs.get(coeffs).copied()
    }

    pub fn index_of_coroot(&self, coroot: &[Int]) -> Option<usize> {
        let mut c = coroot.to_vec();
        self.lattice.reduce(&mut c);
        self.by_coroot.get(&c).copied()
    }

    /// `<alpha_k, lambda>` for a lattice vector (torsion pairs to zero).
    pub fn pair(&self, k: usize, lambda: &[Int]) -> Int {
        dot(&self.roots[k].covector, &lambda[..self.free_rank()])
    }

    /// `<alpha_k, nu>` for a rational vector on the free part.
    pub fn pair_rat(&self, k: usize, nu: &[Rat]) -> Rat {
        self.roots[k]
            .covector
            .iter()
            .zip(nu)
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .sum()
    }

    /// `<alpha_a, alpha_b^vee>`
    pub fn root_coroot(&self, a: usize, b: usize) -> i64 {
        self.pair(a, &self.roots[b].coroot).to_i64().unwrap()
    }

    /// Reflection `s_k` applied to a lattice vector.
    pub fn reflect(&self, k: usize, lambda: &[Int]) -> Vec<Int> {
        let p = self.pair(k, lambda);
        let mut out: Vec<Int> = lambda
            .iter()
            .zip(&self.roots[k].coroot)
            .map(|(x, c)| x - &p * c)
            .collect();
        self.lattice.reduce(&mut out);
        out
    }

    /// Reflection `s_k` applied to a rational vector on the free part.
    pub fn reflect_rat(&self, k: usize, nu: &[Rat]) -> Vec<Rat> {
        let p = self.pair_rat(k, nu);
        nu.iter()
            .zip(&self.roots[k].coroot)
            .map(|(x, c)| x - &p * Rat::from_integer(c.clone()))
            .collect()
    }

    /// Index of `s_k(alpha_j)`.
    pub fn reflect_root(&self, k: usize, j: usize) -> usize {
        let p = self.root_coroot(j, k);
        let coeffs: Vec<i64> = self.roots[j]
            .coeffs
            .iter()
            .zip(&self.roots[k].coeffs)
            .map(|(a, b)| a - p * b)
            .collect();
        self.by_coeffs[&coeffs]
    }

    /// `2 rho`: the sum of positive roots, as a covector.
    pub fn two_rho(&self) -> Vec<Int> {
        let f = self.free_rank();
        (0..f)
            .map(|c| (0..self.npos).map(|k| self.roots[k].covector[c].clone()).sum())
            .collect()
    }

    /// Rational coefficients `c` with `sum_i c_i alpha_i^vee = d` on the free
    /// part, or `None` if the free part of `d` is outside the coroot span.
    pub fn coroot_coefficients(&self, d: &[Rat]) -> Option<Vec<Rat>> {
        let r = self.rank();
        let p: Vec<Rat> = (0..r).map(|j| self.pair_rat(j, d)).collect();
        let c: Vec<Rat> = (0..r)
            .map(|i| (0..r).map(|j| &self.cartan_inv[i][j] * &p[j]).sum())
            .collect();
        let f = self.free_rank();
        for (coord, target) in d.iter().enumerate().take(f) {
            let v: Rat = (0..r)
                .map(|i| &c[i] * Rat::from_integer(self.roots[i].coroot[coord].clone()))
                .sum();
            if &v != target {
                return None;
            }
        }
        Some(c)
    }

    /// Integer coefficients `c` with `sum_i c_i alpha_i^vee = d` exactly
    /// (torsion included), or `None`.
    pub fn coroot_coefficients_int(&self, d: &[Int]) -> Option<Vec<Int>> {
        let f = self.free_rank();
        let dq: Vec<Rat> = d[..f].iter().map(|x| Rat::from_integer(x.clone())).collect();
        let c = self.coroot_coefficients(&dq)?;
        if !c.iter().all(|x| x.is_integer()) {
            return None;
        }
        let c: Vec<Int> = c.into_iter().map(|x| x.to_integer()).collect();
        let mut sum = vec![Int::zero(); self.dim()];
        for (i, ci) in c.iter().enumerate() {
            for (s, x) in sum.iter_mut().zip(&self.roots[i].coroot) {
                *s += ci * x;
            }
        }
        let mut diff: Vec<Int> = sum.iter().zip(d).map(|(a, b)| a - b).collect();
        self.lattice.reduce(&mut diff);
        diff.iter().all(|x| x.is_zero()).then_some(c)
    }
}

pub(crate) fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    let r = a.len();
    for i in 0..r {
        if a[i].len() != r {
            return Err(Error::BadCartan {
                path: format!("cartan[{i}]"),
                msg: format!("expected {r} entries"),
            });
        }
        if a[i][i] != 2 {
            return Err(Error::BadCartan {
                path: format!("cartan[{i}][{i}]"),
                msg: "diagonal entry must be 2".into(),
            });
        }
        for j in 0..r {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return Err(Error::BadCartan {
                    path: format!("cartan[{i}][{j}]"),
                    msg: "off-diagonal entries must be nonpositive with symmetric zero pattern".into(),
                });
            }
        }
    }
    Ok(())
}

/// Exact inverse of a nonsingular integer matrix.
pub(crate) fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&x| Rat::from_integer(Int::from(x))).collect();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero()).expect("singular Cartan matrix");
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let k = m[i][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= &k * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Exact inverse, or `None` for a singular matrix.
pub fn rational_inverse_checked(a: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let m = crate::IntMatrix::from_i64_rows(a);
    if a.is_empty() {
        return Some(Vec::new());
    }
    (!m.determinant().is_zero()).then(|| rational_inverse(a))
}

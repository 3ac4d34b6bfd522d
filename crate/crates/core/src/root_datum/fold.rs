use super::cartan_type::{classify, dynkin_components, CartanType};
use super::{CoWeight, RootDatum};
use crate::error::{Error, Result};

/// Where an [`EchelonnageSystem`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldSource {
    /// Trivial twist: the datum's own system.
    Identity,
    /// Folded along the twist and matched against the supported table.
    Table,
    /// Given explicitly in the datum spec.
    Override,
}

/// The relative (échelonnage) root system attached to a twisted datum.
///
/// Simple coroots of a folded system are the orbit sums of absolute simple
/// coroots.
#[derive(Clone, Debug)]
pub struct EchelonnageSystem {
    pub source: FoldSource,
    pub types: Vec<String>,
    pub cartan: Vec<Vec<i64>>,
    /// Orbits of absolute simple roots, one per relative simple root.
    pub orbits: Vec<Vec<usize>>,
    pub simple_coroots: Vec<CoWeight>,
    pub positive_coroots: Vec<CoWeight>,
    pub weyl_order: u128,
}

fn perm_orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Relative type of a component of type `ty` folded by an automorphism of
/// order `o`.
fn table(ty: CartanType, o: usize) -> Option<CartanType> {
    let n = ty.rank;
    match (ty.family, o) {
        (_, 1) => Some(ty),
        ('A', 2) if n >= 2 => Some(CartanType::new('C', n.div_ceil(2))),
        ('D', 2) if n >= 4 => Some(CartanType::new('B', n - 1)),
        ('E', 2) if n == 6 => Some(CartanType::new('F', 4)),
        ('D', 3) if n == 4 => Some(CartanType::new('G', 2)),
        _ => None,
    }
}

impl RootDatum {
    /// The échelonnage root system of the datum.
    pub fn fold(&self) -> Result<EchelonnageSystem> {
        let sys = self.system();
        let w0_order = |types: &[CartanType]| types.iter().map(|t| t.weyl_order()).product::<u128>();
        if self.has_override() || self.twist_perm().iter().enumerate().all(|(i, &p)| i == p) {
            let types = sys.component_types().to_vec();
            let order = w0_order(&types);
            if order != self.weyl().order() as u128 {
                return Err(Error::UnsupportedFolding(format!(
                    "Weyl group has {} elements, type table says {order}",
                    self.weyl().order()
                )));
            }
            return Ok(EchelonnageSystem {
                source: if self.has_override() { FoldSource::Override } else { FoldSource::Identity },
                types: types.iter().map(|t| t.to_string()).collect(),
                cartan: sys.cartan().to_vec(),
                orbits: (0..sys.rank()).map(|i| vec![i]).collect(),
                simple_coroots: (0..sys.rank()).map(|i| self.simple_coroot(i)).collect(),
                positive_coroots: (0..sys.num_positive())
                    .map(|k| CoWeight(sys.root(k).coroot.clone()))
                    .collect(),
                weyl_order: order,
            });
        }

        let a = self.absolute_cartan();
        let perm = self.twist_perm();
        let orbits = perm_orbits(perm);
        let m = orbits.len();
        let mut folded = vec![vec![0i64; m]; m];
        for (i, oi) in orbits.iter().enumerate() {
            for (j, oj) in orbits.iter().enumerate() {
                folded[i][j] = oj.iter().map(|&b| a[oi[0]][b]).sum();
            }
        }
        for row in folded.iter_mut().enumerate().filter(|(i, r)| r[*i] == 1).map(|(_, r)| r) {
            for x in row.iter_mut() {
                *x *= 2;
            }
        }
        let got: Vec<CartanType> = {
            let comps = dynkin_components(&folded);
            let mut v = Vec::new();
            for c in &comps {
                v.push(classify(&folded, c).ok_or_else(|| {
                    Error::UnsupportedFolding(format!("folded Cartan matrix {folded:?} is not of finite type"))
                })?);
            }
            v.sort();
            v
        };

        // expected types, one per sigma-orbit of absolute components
        let comps = dynkin_components(a);
        let comp_of = |node: usize| comps.iter().position(|c| c.contains(&node)).unwrap();
        let mut seen = vec![false; comps.len()];
        let mut expected = Vec::new();
        for start in 0..comps.len() {
            if seen[start] {
                continue;
            }
            let mut size = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                size += 1;
                c = comp_of(perm[comps[c][0]]);
            }
            let nodes = &comps[start];
            let power = |x: usize| (0..size).fold(x, |y, _| perm[y]);
            let mut o = 1;
            let mut cur: Vec<usize> = nodes.iter().map(|&x| power(x)).collect();
            while cur.as_slice() != nodes.as_slice() {
                cur = cur.iter().map(|&x| power(x)).collect();
                o += 1;
            }
            let ty = classify(a, nodes).expect("validated at build time");
            expected.push(table(ty, o).ok_or_else(|| {
                Error::UnsupportedFolding(format!("{ty} with a diagram automorphism of order {o}"))
            })?);
        }
        expected.sort();
        if expected != got {
            return Err(Error::UnsupportedFolding(format!(
                "folded system {got:?} does not match the table {expected:?}"
            )));
        }

        // |W(Sigma)| against the sigma-fixed part of W_0
        let order = w0_order(&got);
        let weyl = self.weyl();
        let fixed = weyl.elements().filter(|&w| self.sigma_weyl(w) == w).count() as u128;
        if fixed != order {
            return Err(Error::UnsupportedFolding(format!(
                "sigma-fixed Weyl group has {fixed} elements, expected {order}"
            )));
        }

        let orbit_sum = |nodes: &[usize]| {
            nodes
                .iter()
                .fold(self.zero_coweight(), |acc, &k| self.add(&acc, &CoWeight(sys.root(k).coroot.clone())))
        };
        let mut positive: Vec<CoWeight> = Vec::new();
        let mut done = vec![false; sys.num_positive()];
        for k in 0..sys.num_positive() {
            if done[k] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = k;
            while !done[x] {
                done[x] = true;
                orbit.push(x);
                x = self.sigma_root(x);
            }
            let s = orbit_sum(&orbit);
            if !positive.contains(&s) {
                positive.push(s);
            }
        }
        Ok(EchelonnageSystem {
            source: FoldSource::Table,
            types: got.iter().map(|t| t.to_string()).collect(),
            cartan: folded,
            simple_coroots: orbits.iter().map(|o| orbit_sum(o)).collect(),
            orbits,
            positive_coroots: positive,
            weyl_order: order,
        })
    }
}

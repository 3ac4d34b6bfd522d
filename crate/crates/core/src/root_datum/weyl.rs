use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use super::roots::RootSystem;
use crate::{Int, IntMatrix, Rat};

/// Index of an element of the finite Weyl group inside its [`WeylGroup`] table.
pub type WIdx = u32;

/// Multiplication table of the finite Weyl group `W_0`, built once per datum.
///
/// Elements are identified by their permutation of the roots; index `0` is
/// the identity, and indices are sorted by (length, lex-min reduced word).
#[derive(Clone, Debug)]
pub struct WeylGroup {
    perms: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, WIdx>,
    mats: Vec<IntMatrix>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    inverse: Vec<WIdx>,
    simple: Vec<WIdx>,
    longest: WIdx,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&r| a[r as usize]).collect()
}

impl WeylGroup {
    pub fn new(sys: &RootSystem) -> Self {
        let r = sys.rank();
        let nroots = sys.num_roots();
        let npos = sys.num_positive();
        let dim = sys.dim();
        let simple_perms: Vec<Vec<u32>> = (0..r)
            .map(|i| (0..nroots).map(|j| sys.reflect_root(i, j) as u32).collect())
            .collect();
        let simple_mats: Vec<IntMatrix> = (0..r)
            .map(|i| {
                let cols: Vec<Vec<Int>> = (0..dim)
                    .map(|k| {
                        let mut e = vec![Int::zero(); dim];
                        e[k] = Int::from(1);
                        sys.reflect(i, &e)
                    })
                    .collect();
                IntMatrix::from_cols(dim, &cols)
            })
            .collect();

        let id: Vec<u32> = (0..nroots as u32).collect();
        let mut found: HashMap<Vec<u32>, ()> = HashMap::new();
        let mut all = vec![id.clone()];
        found.insert(id, ());
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for sp in &simple_perms {
                let p = compose(sp, &all[k]);
                if found.insert(p.clone(), ()).is_none() {
                    queue.push_back(all.len());
                    all.push(p);
                }
            }
        }
        let length_of = |p: &[u32]| p[..npos].iter().filter(|&&x| (x as usize) >= npos).count();
        all.sort_by_key(|p| length_of(p));
        let tmp_index: HashMap<Vec<u32>, usize> =
            all.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();

        // lex-min reduced words: w = s_i (s_i w) with i the smallest left descent
        let n = all.len();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut mats: Vec<IntMatrix> = vec![IntMatrix::identity(dim); n];
        let lengths: Vec<usize> = all.iter().map(|p| length_of(p)).collect();
        for k in 1..n {
            let (i, rest) = (0..r)
                .find_map(|i| {
                    let q = compose(&simple_perms[i], &all[k]);
                    let j = tmp_index[&q];
                    (lengths[j] < lengths[k]).then_some((i, j))
                })
                .expect("nonidentity element without left descent");
            let mut w = vec![i];
            w.extend_from_slice(&words[rest]);
            words[k] = w;
            mats[k] = &simple_mats[i] * &mats[rest];
        }
        // final ordering: (length, word)
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (lengths[a], &words[a]).cmp(&(lengths[b], &words[b])));
        let perms: Vec<Vec<u32>> = order.iter().map(|&k| all[k].clone()).collect();
        let words: Vec<Vec<usize>> = order.iter().map(|&k| words[k].clone()).collect();
        let mut mats: Vec<IntMatrix> = order.iter().map(|&k| mats[k].clone()).collect();
        for m in mats.iter_mut() {
            reduce_matrix(sys, m);
        }
        let lengths: Vec<usize> = order.iter().map(|&k| lengths[k]).collect();
        let index: HashMap<Vec<u32>, WIdx> =
            perms.iter().enumerate().map(|(k, p)| (p.clone(), k as WIdx)).collect();
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u32; p.len()];
                for (a, &b) in p.iter().enumerate() {
                    inv[b as usize] = a as u32;
                }
                index[&inv]
            })
            .collect();
        let simple = simple_perms.iter().map(|p| index[p]).collect();
        let longest = (n - 1) as WIdx;
        WeylGroup { perms, index, mats, words, lengths, inverse, simple, longest }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> WIdx {
        0
    }

    pub fn simple(&self, i: usize) -> WIdx {
        self.simple[i]
    }

    pub fn longest(&self) -> WIdx {
        self.longest
    }

    pub fn length(&self, w: WIdx) -> usize {
        self.lengths[w as usize]
    }

    /// Lexicographically smallest reduced word in the simple reflections.
    pub fn word(&self, w: WIdx) -> &[usize] {
        &self.words[w as usize]
    }

    pub fn inv(&self, w: WIdx) -> WIdx {
        self.inverse[w as usize]
    }

    pub fn mul(&self, a: WIdx, b: WIdx) -> WIdx {
        self.index[&compose(&self.perms[a as usize], &self.perms[b as usize])]
    }

    pub fn from_word(&self, word: &[usize]) -> WIdx {
        word.iter().fold(0, |acc, &i| self.mul(acc, self.simple[i]))
    }

    /// Image of root `k` under `w`.
    pub fn root_image(&self, w: WIdx, k: usize) -> usize {
        self.perms[w as usize][k] as usize
    }

    pub fn perm(&self, w: WIdx) -> &[u32] {
        &self.perms[w as usize]
    }

    pub fn lookup_perm(&self, p: &[u32]) -> Option<WIdx> {
        self.index.get(p).copied()
    }

    /// Action matrix on canonical lattice coordinates (torsion rows reduced).
    pub fn matrix(&self, w: WIdx) -> &IntMatrix {
        &self.mats[w as usize]
    }

    pub fn act(&self, sys: &RootSystem, w: WIdx, lambda: &[Int]) -> Vec<Int> {
        let mut v = self.mats[w as usize].mul_vec(lambda);
        sys.lattice().reduce(&mut v);
        v
    }

    /// Action on a rational vector of the free part.
    pub fn act_rat(&self, w: WIdx, nu: &[Rat]) -> Vec<Rat> {
        let m = &self.mats[w as usize];
        let f = nu.len();
        (0..f)
            .map(|i| (0..f).map(|j| Rat::from_integer(m[(i, j)].clone()) * &nu[j]).sum())
            .collect()
    }

    /// All elements, in table order.
    pub fn elements(&self) -> impl Iterator<Item = WIdx> {
        0..self.perms.len() as WIdx
    }

    /// The reflection `s_beta` for a root index.
    pub fn reflection(&self, sys: &RootSystem, k: usize) -> WIdx {
        let p: Vec<u32> = (0..sys.num_roots()).map(|j| sys.reflect_root(k, j) as u32).collect();
        self.index[&p]
    }
}

fn reduce_matrix(sys: &RootSystem, m: &mut IntMatrix) {
    let f = sys.free_rank();
    let torsion = sys.lattice().torsion().to_vec();
    let mut rows = m.to_rows();
    for (t, d) in torsion.iter().enumerate() {
        for x in rows[f + t].iter_mut() {
            *x = num_integer::Integer::mod_floor(x, d);
        }
    }
    *m = IntMatrix::from_rows(rows);
}

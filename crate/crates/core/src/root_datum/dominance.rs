use num_traits::{Signed, Zero};

use super::{CoWeight, RatCoWeight, RootDatum, WIdx};
use crate::error::{Error, Result};
use crate::{Int, Rat};

impl RootDatum {
    pub fn is_dominant(&self, lambda: &CoWeight) -> bool {
        let sys = self.system();
        (0..sys.rank()).all(|i| !sys.pair(i, &lambda.0).is_negative())
    }

    pub fn is_dominant_rat(&self, nu: &RatCoWeight) -> bool {
        let sys = self.system();
        (0..sys.rank()).all(|i| !sys.pair_rat(i, &nu.0).is_negative())
    }

    /// Dominant representative of the `W_0`-orbit, by chamber descent
    /// (lowest index first).
    pub fn dominant_rep(&self, lambda: &CoWeight) -> CoWeight {
        self.dominant_rep_with(lambda).0
    }

    /// Dominant representative together with `w` such that `w(lambda)` is it.
    pub fn dominant_rep_with(&self, lambda: &CoWeight) -> (CoWeight, WIdx) {
        let sys = self.system();
        let mut v = lambda.0.clone();
        let mut steps = Vec::new();
        while let Some(i) = (0..sys.rank()).find(|&i| sys.pair(i, &v).is_negative()) {
            v = sys.reflect(i, &v);
            steps.push(i);
        }
        steps.reverse();
        (CoWeight(v), self.weyl().from_word(&steps))
    }

    pub fn dominant_rep_rat(&self, nu: &RatCoWeight) -> RatCoWeight {
        self.dominant_rep_rat_with(nu).0
    }

    pub fn dominant_rep_rat_with(&self, nu: &RatCoWeight) -> (RatCoWeight, WIdx) {
        let sys = self.system();
        let mut v = nu.0.clone();
        let mut steps = Vec::new();
        while let Some(i) = (0..sys.rank()).find(|&i| sys.pair_rat(i, &v).is_negative()) {
            v = sys.reflect_rat(i, &v);
            steps.push(i);
        }
        steps.reverse();
        (RatCoWeight(v), self.weyl().from_word(&steps))
    }

    /// The order `lambda <= mu`: `mu - lambda` is a nonnegative integral
    /// combination of simple coroots (torsion parts included).
    pub fn dominance_leq(&self, lambda: &CoWeight, mu: &CoWeight) -> Result<bool> {
        for (name, v) in [("lambda", lambda), ("mu", mu)] {
            if !self.is_dominant(v) {
                return Err(Error::NotDominant(format!("{name} = {v}")));
            }
        }
        Ok(self.coroot_cone_member(&self.sub(mu, lambda)))
    }

    /// Whether `d` is a nonnegative integral combination of simple coroots.
    pub fn coroot_cone_member(&self, d: &CoWeight) -> bool {
        self.system()
            .coroot_coefficients_int(&d.0)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Rational dominance: `b - a` is a nonnegative rational combination of
    /// simple coroots.
    pub fn rat_leq(&self, a: &RatCoWeight, b: &RatCoWeight) -> bool {
        let d: Vec<Rat> = b.0.iter().zip(&a.0).map(|(x, y)| x - y).collect();
        self.system()
            .coroot_coefficients(&d)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Average of the dominant representatives of `sigma^k(mu)`, `k < e`.
    pub fn galois_average(&self, mu: &CoWeight) -> RatCoWeight {
        let e = self.twist_order();
        let f = self.free_rank();
        let mut acc = vec![Rat::zero(); f];
        let mut cur = mu.clone();
        for _ in 0..e {
            let d = self.dominant_rep(&cur);
            for (a, x) in acc.iter_mut().zip(&d.0[..f]) {
                *a += Rat::from_integer(x.clone());
            }
            cur = self.sigma_coweight(&cur);
        }
        let n = Rat::from_integer(Int::from(e as i64));
        self.dominant_rep_rat(&RatCoWeight(acc.into_iter().map(|x| x / &n).collect()))
    }

    /// `<2 rho, nu>` where `2 rho` is the sum of the positive roots.
    pub fn two_rho_pairing(&self, nu: &RatCoWeight) -> Rat {
        let sys = self.system();
        (0..sys.num_positive()).map(|k| sys.pair_rat(k, &nu.0)).sum()
    }

    /// All dominant `lambda <= mu`, sorted.
    pub fn dominant_below(&self, mu: &CoWeight) -> Result<Vec<CoWeight>> {
        if !self.is_dominant(mu) {
            return Err(Error::NotDominant(format!("mu = {mu}")));
        }
        let sys = self.system();
        let mut seen = std::collections::BTreeSet::from([mu.clone()]);
        let mut stack = vec![mu.clone()];
        while let Some(l) = stack.pop() {
            for k in 0..sys.num_positive() {
                let next = self.sub(&l, &CoWeight(sys.root(k).coroot.clone()));
                if self.is_dominant(&next) && !seen.contains(&next) {
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

//! The Iwahori-Weyl group: length, reduced words, Bruhat order, the
//! length-zero subgroup `Omega`, and parabolic cosets.

mod element;

use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

pub use element::{coords_json, IwElement};

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::Int;

/// Class in `pi1 = Lambda / Q^vee`, in canonical coordinates of
/// [`RootDatum::pi1`].
pub type OmegaClass = Vec<Int>;

/// Which side a parabolic coset is taken on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `W_K x`
    Left,
    /// `x W_K`
    Right,
    /// `W_K x W_K`
    Double,
}

impl IwElement {
    /// Iwahori-Matsumoto length:
    /// `sum_{a>0, w^-1 a>0} |<a,l>| + sum_{a>0, w^-1 a<0} |<a,l> - 1|`.
    pub fn length(&self) -> usize {
        let d = self.datum();
        let sys = d.system();
        let weyl = d.weyl();
        let winv = weyl.inv(self.fin());
        let npos = sys.num_positive();
        let mut total: u64 = 0;
        for k in 0..npos {
            let p = sys.pair(k, &self.trans().0);
            let p = if weyl.root_image(winv, k) < npos { p } else { p - 1 };
            total += p.abs().to_u64().expect("length overflow");
        }
        total as usize
    }

    /// `S[i] * self`
    pub fn gen_mul(&self, i: usize) -> IwElement {
        &IwElement::generator(self.datum(), i) * self
    }

    /// `self * S[i]`
    pub fn mul_gen(&self, i: usize) -> IwElement {
        self * &IwElement::generator(self.datum(), i)
    }

    /// Smallest `i` with `S[i] * self` shorter, if any.
    pub fn first_left_descent(&self) -> Option<usize> {
        let l = self.length();
        (0..self.datum().num_gens()).find(|&i| self.gen_mul(i).length() < l)
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.gen_mul(i).length() < self.length()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.mul_gen(i).length() < self.length()
    }

    /// Factorization `self = S[i1] ... S[ik] * omega` with `k = length` and
    /// `omega` of length zero. The word is lexicographically smallest among
    /// reduced words.
    pub fn reduced_word(&self) -> (Vec<usize>, IwElement) {
        let mut word = Vec::new();
        let mut x = self.clone();
        while let Some(i) = x.first_left_descent() {
            word.push(i);
            x = x.gen_mul(i);
        }
        (word, x)
    }

    pub fn omega_component(&self) -> OmegaClass {
        self.datum().pi1_class(self.trans())
    }

    /// The length-zero element of `Omega` in the same class.
    pub fn omega_part(&self) -> IwElement {
        self.reduced_word().1
    }

    /// Bruhat order. Elements in different `Omega` classes are incomparable.
    pub fn bruhat_leq(&self, y: &IwElement) -> bool {
        if self.datum().tag() != y.datum().tag() || self.omega_component() != y.omega_component() {
            return false;
        }
        bruhat_rec(self.clone(), self.length(), y.clone(), y.length())
    }

    /// A stable text label: the reduced word followed by the `Omega` part.
    pub fn label(&self) -> String {
        let (word, omega) = self.reduced_word();
        word_label(&word, &omega)
    }

    /// `x * y * sigma(x)^-1`
    pub fn sigma_conjugate_by(&self, g: &IwElement) -> IwElement {
        &(g * self) * &g.apply_sigma().inv()
    }
}

// lifting property: for s with sy < y, x <= y iff min(x, sx) <= sy
fn bruhat_rec(x: IwElement, lx: usize, y: IwElement, ly: usize) -> bool {
    if lx > ly {
        return false;
    }
    if ly == 0 {
        return x == y;
    }
    if lx == 0 {
        // x is the Omega part of y (same class checked by the caller)
        return true;
    }
    let s = y.first_left_descent().expect("positive length has a descent");
    let sy = y.gen_mul(s);
    let sx = x.gen_mul(s);
    let lsx = sx.length();
    if lsx < lx {
        bruhat_rec(sx, lsx, sy, ly - 1)
    } else {
        bruhat_rec(x, lx, sy, ly - 1)
    }
}

pub fn word_label(word: &[usize], omega: &IwElement) -> String {
    let mut s: String = word.iter().map(|i| format!("s{i}")).collect();
    if !omega.is_identity() {
        let class = omega.omega_component();
        let c: Vec<String> = class.iter().map(|x| x.to_string()).collect();
        if !s.is_empty() {
            s.push('.');
        }
        s.push_str(&format!("w[{}]", c.join(",")));
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

/// The element of `Omega` with the given `pi1` class.
pub fn omega_element(datum: &Arc<RootDatum>, class: &[Int]) -> IwElement {
    let lambda = datum.pi1().lift(class);
    IwElement::translation(datum, crate::root_datum::CoWeight(lambda)).omega_part()
}

/// Whether `W_K` is finite: every affine Dynkin component omits a node of K.
pub fn subgroup_finite(datum: &RootDatum, k: &[usize]) -> bool {
    datum
        .affine_components()
        .iter()
        .all(|comp| comp.iter().any(|s| !k.contains(s)))
}

/// Validates a level `K` (indices into `S`).
pub fn check_level(datum: &RootDatum, k: &[usize]) -> Result<()> {
    if let Some(&bad) = k.iter().find(|&&s| s >= datum.num_gens()) {
        return Err(Error::Arity(format!("generator index {bad} out of range")));
    }
    if !subgroup_finite(datum, k) {
        return Err(Error::KInfinite(k.to_vec()));
    }
    Ok(())
}

/// Unique minimal-length element of `W_K x`, `x W_K` or `W_K x W_K`.
pub fn min_coset_rep(k: &[usize], x: &IwElement, side: Side) -> Result<IwElement> {
    check_level(x.datum(), k)?;
    let mut x = x.clone();
    loop {
        let l = x.length();
        let left = matches!(side, Side::Left | Side::Double)
            .then(|| k.iter().map(|&s| x.gen_mul(s)).find(|y| y.length() < l))
            .flatten();
        if let Some(y) = left {
            x = y;
            continue;
        }
        let right = matches!(side, Side::Right | Side::Double)
            .then(|| k.iter().map(|&s| x.mul_gen(s)).find(|y| y.length() < l))
            .flatten();
        match right {
            Some(y) => x = y,
            None => return Ok(x),
        }
    }
}

/// Index in `S` of `g`, if `g` is a simple reflection.
pub fn generator_index(g: &IwElement) -> Option<usize> {
    (0..g.datum().num_gens()).find(|&i| IwElement::generator(g.datum(), i) == *g)
}

/// The permutation of `S` induced by `s -> tau sigma(s) tau^-1`; `tau` must
/// have length zero.
pub fn tau_sigma_action(tau: &IwElement) -> Result<Vec<usize>> {
    let l = tau.length();
    if l != 0 {
        return Err(Error::TauNotLengthZero(l));
    }
    let d = tau.datum();
    let ti = tau.inv();
    Ok((0..d.num_gens())
        .map(|i| {
            let s = IwElement::generator(d, i).apply_sigma();
            generator_index(&(&(tau * &s) * &ti)).expect("length-zero elements normalize S")
        })
        .collect())
}

/// Elements of the finite group `W_K`, by closure.
pub fn parabolic_elements(datum: &Arc<RootDatum>, k: &[usize]) -> Result<Vec<IwElement>> {
    check_level(datum, k)?;
    let mut out = vec![IwElement::identity(datum)];
    let mut seen: std::collections::HashSet<IwElement> = out.iter().cloned().collect();
    let mut i = 0;
    while i < out.len() {
        for &s in k {
            let y = out[i].mul_gen(s);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    Ok(out)
}

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::root_datum::{CoWeight, RootDatum, WIdx};
use crate::{Int, Rat};

/// An element `t^lambda w` of the Iwahori-Weyl group `Lambda x| W_0`.
///
/// It acts on the apartment by `v -> lambda + w(v)`.
#[derive(Clone)]
pub struct IwElement {
    datum: Arc<RootDatum>,
    trans: CoWeight,
    fin: WIdx,
}

impl IwElement {
    pub fn new(datum: &Arc<RootDatum>, trans: CoWeight, fin: WIdx) -> Self {
        let mut t = trans.0;
        datum.lattice().reduce(&mut t);
        IwElement { datum: datum.clone(), trans: CoWeight(t), fin }
    }

    pub fn identity(datum: &Arc<RootDatum>) -> Self {
        IwElement::new(datum, datum.zero_coweight(), 0)
    }

    pub fn translation(datum: &Arc<RootDatum>, lambda: CoWeight) -> Self {
        IwElement::new(datum, lambda, 0)
    }

    pub fn finite(datum: &Arc<RootDatum>, w: WIdx) -> Self {
        IwElement::new(datum, datum.zero_coweight(), w)
    }

    /// The generator `S[i]` (affine reflections first).
    pub fn generator(datum: &Arc<RootDatum>, i: usize) -> Self {
        let (t, w) = datum.affine_gen_data()[i].clone();
        IwElement { datum: datum.clone(), trans: t, fin: w }
    }

    pub fn generators(datum: &Arc<RootDatum>) -> Vec<Self> {
        (0..datum.num_gens()).map(|i| Self::generator(datum, i)).collect()
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn trans(&self) -> &CoWeight {
        &self.trans
    }

    pub fn fin(&self) -> WIdx {
        self.fin
    }

    pub fn is_identity(&self) -> bool {
        self.fin == 0 && self.trans.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.fin == 0
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.datum.tag() != other.datum.tag() {
            return Err(Error::DatumMismatch);
        }
        Ok(())
    }

    /// `(t^l w)(t^m v) = t^{l + w m} wv`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = &self.datum;
        let moved = d.act(self.fin, &other.trans);
        Ok(IwElement {
            datum: d.clone(),
            trans: d.add(&self.trans, &moved),
            fin: d.weyl().mul(self.fin, other.fin),
        })
    }

    pub fn inv(&self) -> Self {
        let d = &self.datum;
        let wi = d.weyl().inv(self.fin);
        IwElement {
            datum: d.clone(),
            trans: d.neg(&d.act(wi, &self.trans)),
            fin: wi,
        }
    }

    /// The Frobenius `sigma` applied to the element.
    pub fn apply_sigma(&self) -> Self {
        let d = &self.datum;
        IwElement {
            datum: d.clone(),
            trans: d.sigma_coweight(&self.trans),
            fin: d.sigma_weyl(self.fin),
        }
    }

    /// `sigma^k(x)`.
    pub fn sigma_pow(&self, k: usize) -> Self {
        (0..k % self.datum.twist_order()).fold(self.clone(), |x, _| x.apply_sigma())
    }

    /// Action on a lattice point.
    pub fn act(&self, v: &CoWeight) -> CoWeight {
        self.datum.add(&self.trans, &self.datum.act(self.fin, v))
    }

    /// Action on a rational point of the free part.
    pub fn act_rat(&self, v: &[Rat]) -> Vec<Rat> {
        let f = self.datum.free_rank();
        let wv = self.datum.weyl().act_rat(self.fin, v);
        wv.into_iter()
            .zip(&self.trans.0[..f])
            .map(|(a, b)| a + Rat::from_integer(b.clone()))
            .collect()
    }

    /// Serializes as `{"trans": [...], "fin_word": [...]}` with the
    /// canonical reduced word of the finite part.
    pub fn to_json(&self) -> Value {
        json!({
            "trans": coords_json(&self.trans.0),
            "fin_word": self.datum.weyl().word(self.fin),
        })
    }

    /// Inverse of [`IwElement::to_json`]; revalidates arity and letters.
    pub fn from_json(datum: &Arc<RootDatum>, v: &Value) -> Result<Self> {
        let bad = |path: &str, msg: &str| Error::BadSpec { path: path.into(), msg: msg.into() };
        let trans = v
            .get("trans")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("$.trans", "expected an integer array"))?;
        let trans: Vec<i64> = trans
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| bad("$.trans", "expected integers")))
            .collect::<Result<_>>()?;
        let word = v
            .get("fin_word")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("$.fin_word", "expected an integer array"))?;
        let word: Vec<usize> = word
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|i| i as usize)
                    .filter(|&i| i < datum.rank())
                    .ok_or_else(|| bad("$.fin_word", "letters must be simple reflection indices"))
            })
            .collect::<Result<_>>()?;
        let lambda = datum.coweight(&trans)?;
        Ok(IwElement::new(datum, lambda, datum.weyl().from_word(&word)))
    }
}

/// JSON integers; values outside the `i64` range are written as strings.
pub fn coords_json(v: &[Int]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| match x.to_i64() {
                Some(i) => json!(i),
                None => json!(x.to_string()),
            })
            .collect(),
    )
}

impl PartialEq for IwElement {
    fn eq(&self, other: &Self) -> bool {
        self.datum.tag() == other.datum.tag() && self.fin == other.fin && self.trans == other.trans
    }
}

impl Eq for IwElement {}

impl Hash for IwElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trans.hash(state);
        self.fin.hash(state);
    }
}

impl PartialOrd for IwElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order (translation, then finite index); see
/// [`crate::admissible::canonical_sort`] for the presentation order.
impl Ord for IwElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.trans, self.fin).cmp(&(&other.trans, other.fin))
    }
}

impl std::ops::Mul for &IwElement {
    type Output = IwElement;

    /// Panics on elements of different data; use [`IwElement::mul`] to get
    /// a `DATUM_MISMATCH` error instead.
    fn mul(self, rhs: &IwElement) -> IwElement {
        IwElement::mul(self, rhs).expect("product of elements of different root data")
    }
}

impl fmt::Debug for IwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} w{:?}", self.trans, self.datum.weyl().word(self.fin))
    }
}

impl fmt::Display for IwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.trans)?;
        let w = self.datum.weyl().word(self.fin);
        if !w.is_empty() {
            write!(f, "·")?;
            for i in w {
                write!(f, "s{}", self.datum.num_affine() + i)?;
            }
        }
        Ok(())
    }
}

//! JSON document types. Every JSON output of the CLI is one of these, so a
//! document can be read back with `serde_json::from_str::<T>`.

use iwk_core::iwahori_weyl::{coords_json, IwElement};
use iwk_core::levi_reduction::Move;
use iwk_core::root_datum::{CoWeight, RatCoWeight, RootDatum};
use iwk_core::sigma_conj::{BgMuEntry, SigmaClassInvariants};
use iwk_core::strata::{ComponentCount, ComponentReport, StratumReport};
use iwk_core::Int;
use iwk_oracles::OracleReport;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub label: String,
    pub length: usize,
    /// Reduced word in `S`; the element is `s_word * omega`.
    pub word: Vec<usize>,
    pub omega_class: Value,
    pub trans: Value,
    pub fin_word: Vec<usize>,
}

impl ElementDoc {
    pub fn of(x: &IwElement) -> Self {
        let (word, omega) = x.reduced_word();
        let j = x.to_json();
        ElementDoc {
            label: iwk_core::iwahori_weyl::word_label(&word, &omega),
            length: word.len(),
            word,
            omega_class: coords_json(&x.omega_component()),
            trans: j["trans"].clone(),
            fin_word: serde_json::from_value(j["fin_word"].clone()).expect("fin_word is a list of letters"),
        }
    }

    /// The `{"trans", "fin_word"}` part, readable by `IwElement::from_json`.
    pub fn element_json(&self) -> Value {
        serde_json::json!({ "trans": self.trans, "fin_word": self.fin_word })
    }
}

pub fn rat_strings(nu: &RatCoWeight) -> Vec<String> {
    nu.0.iter().map(|x| x.to_string()).collect()
}

pub fn ints_json(v: &[Int]) -> Value {
    coords_json(v)
}

pub fn coweight_json(c: &CoWeight) -> Value {
    coords_json(&c.0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdmKDoc {
    pub mu: Value,
    pub level: Vec<usize>,
    pub kind: String,
    pub elements: Vec<ElementDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub avatars: Option<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub index: usize,
    pub kappa: Value,
    pub newton: Vec<String>,
    pub basic: bool,
    pub witness: ElementDoc,
}

impl ClassDoc {
    pub fn of(index: usize, e: &BgMuEntry) -> Self {
        ClassDoc {
            index,
            kappa: ints_json(&e.invariants.kottwitz),
            newton: rat_strings(&e.invariants.newton),
            basic: e.invariants.is_basic,
            witness: ElementDoc::of(&e.witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BgMuDoc {
    pub mu: Value,
    pub coherent: bool,
    pub injective: bool,
    pub classes: Vec<ClassDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NewtonDoc {
    pub element: ElementDoc,
    pub newton: Vec<String>,
    pub newton_dominant: Vec<String>,
    pub kappa: Value,
    pub basic: bool,
    pub straight: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StraightDoc {
    pub element: ElementDoc,
    pub newton_dominant: Vec<String>,
    pub kappa: Value,
}

impl StraightDoc {
    pub fn of(x: &IwElement, inv: &SigmaClassInvariants) -> Self {
        StraightDoc { element: ElementDoc::of(x), newton_dominant: rat_strings(&inv.newton), kappa: ints_json(&inv.kottwitz) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumDoc {
    pub element: ElementDoc,
    pub supp_sigma: Vec<usize>,
    pub basic: bool,
    pub ekor_member: bool,
    pub kr_member: bool,
}

impl StratumDoc {
    pub fn of(r: &StratumReport) -> Self {
        StratumDoc {
            element: ElementDoc::of(&r.element),
            supp_sigma: r.supp_sigma.clone(),
            basic: r.basic,
            ekor_member: r.ekor_member,
            kr_member: r.kr_member,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrataDoc {
    pub mu: Value,
    pub level: Vec<usize>,
    pub tau: ElementDoc,
    pub strata: Vec<StratumDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub components: Vec<usize>,
    pub noncentral: bool,
    pub compact_type: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountDoc {
    Finite(String),
    Symbolic(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentsDoc {
    pub class: ClassDoc,
    pub level: Vec<usize>,
    pub pi1_sigma: String,
    pub factors: Vec<FactorDoc>,
    pub count: CountDoc,
    pub status: String,
}

impl ComponentsDoc {
    pub fn of(class: ClassDoc, r: &ComponentReport) -> Self {
        ComponentsDoc {
            class,
            level: r.level.clone(),
            pi1_sigma: iwk_core::strata::describe(&r.pi1_sigma),
            factors: r
                .factors
                .iter()
                .map(|f| FactorDoc { components: f.components.clone(), noncentral: f.noncentral, compact_type: f.compact_type })
                .collect(),
            count: match &r.count {
                ComponentCount::Finite(n) => CountDoc::Finite(n.to_string()),
                ComponentCount::Symbolic(s) => CountDoc::Symbolic(s.clone()),
            },
            status: r.status.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IClassDoc {
    pub class: Value,
    pub mu_x: Value,
    pub weakly_dominant: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShortDoc {
    pub u_word: Vec<usize>,
    pub w_sharp: ElementDoc,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeviDoc {
    pub class: ClassDoc,
    pub levi: Vec<usize>,
    pub sigma_stable: bool,
    pub i_set: Vec<IClassDoc>,
    pub short_element: ShortDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveDoc {
    /// The root `alpha` in simple-root coordinates.
    pub alpha: Vec<i64>,
    pub r: usize,
    pub from: Value,
    pub to: Value,
}

impl MoveDoc {
    pub fn of(datum: &RootDatum, m: &Move) -> Self {
        MoveDoc {
            alpha: datum.system().root(m.alpha).coeffs.clone(),
            r: m.r,
            from: ints_json(&m.from),
            to: ints_json(&m.to),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    pub from: Value,
    pub to: Value,
    /// `None` when no constrained path exists.
    pub moves: Option<Vec<MoveDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathDoc {
    pub class: ClassDoc,
    pub levi: Vec<usize>,
    pub pairs: Vec<PairDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub nodes: Vec<ElementDoc>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub input: String,
    pub main: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub suite: String,
    pub checked: usize,
    pub skipped: usize,
    pub mismatches: Vec<MismatchDoc>,
}

impl OracleDoc {
    pub fn of(r: &OracleReport) -> Self {
        OracleDoc {
            suite: r.suite.clone(),
            checked: r.checked,
            skipped: r.skipped,
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchDoc { input: m.input.clone(), main: m.main.clone(), oracle: m.oracle.clone() })
                .collect(),
        }
    }
}

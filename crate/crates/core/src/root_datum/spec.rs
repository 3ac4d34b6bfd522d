use serde::{Deserialize, Serialize};

/// Input description of a root datum: either a named preset or a full
/// custom specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumSpec {
    Preset { preset: String },
    Custom(CustomDatum),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomDatum {
    pub name: String,
    pub cartan: Vec<Vec<i64>>,
    pub lattice: LatticeSpec,
    pub simple_coroots: Vec<Vec<i64>>,
    pub root_pairing: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub echelonnage_override: Option<OverrideSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    pub perm: Vec<usize>,
    pub lattice_endo: Vec<Vec<i64>>,
}

/// Explicit échelonnage system: simple roots as covectors on the free part,
/// simple coroots in canonical lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverrideSpec {
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

impl DatumSpec {
    /// Parses a JSON document, reporting the failing field path on error.
    pub fn from_json(text: &str) -> crate::Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| crate::Error::BadSpec {
            path: "$".into(),
            msg: e.to_string(),
        })?;
        if let Some(obj) = value.as_object() {
            if obj.contains_key("preset") {
                return match (obj.len(), obj["preset"].as_str()) {
                    (1, Some(p)) => Ok(DatumSpec::Preset { preset: p.to_string() }),
                    (_, None) => Err(crate::Error::BadSpec {
                        path: "$.preset".into(),
                        msg: "expected a string".into(),
                    }),
                    _ => Err(crate::Error::BadSpec {
                        path: "$".into(),
                        msg: "a preset reference takes no other fields".into(),
                    }),
                };
            }
        }
        let custom = CustomDatum::deserialize(&value).map_err(|e| crate::Error::BadSpec {
            path: locate_error(&value),
            msg: e.to_string(),
        })?;
        Ok(DatumSpec::Custom(custom))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("datum spec serializes")
    }
}

// serde_json's value deserializer does not track paths, so find the first
// field whose shape is wrong by checking each one separately.
fn locate_error(value: &serde_json::Value) -> String {
    let Some(obj) = value.as_object() else {
        return "$".into();
    };
    let known = [
        "name",
        "cartan",
        "lattice",
        "simple_coroots",
        "root_pairing",
        "twist",
        "echelonnage_override",
    ];
    for key in obj.keys() {
        if !known.contains(&key.as_str()) {
            return format!("$.{key}");
        }
    }
    let check = |key: &str, ok: fn(&serde_json::Value) -> bool| -> Option<String> {
        match obj.get(key) {
            None if matches!(key, "twist" | "echelonnage_override") => None,
            None => Some(format!("$.{key}")),
            Some(v) if !ok(v) => Some(format!("$.{key}")),
            _ => None,
        }
    };
    let matrix = |v: &serde_json::Value| Vec::<Vec<i64>>::deserialize(v).is_ok();
    type Check = fn(&serde_json::Value) -> bool;
    let fields: [(&str, Check); 7] = [
        ("name", |v| v.is_string()),
        ("cartan", matrix),
        ("lattice", |v| LatticeSpec::deserialize(v).is_ok()),
        ("simple_coroots", matrix),
        ("root_pairing", matrix),
        ("twist", |v| v.is_null() || TwistSpec::deserialize(v).is_ok()),
        ("echelonnage_override", |v| v.is_null() || OverrideSpec::deserialize(v).is_ok()),
    ];
    fields
        .iter()
        .find_map(|(k, f)| check(k, *f))
        .unwrap_or_else(|| "$".into())
}

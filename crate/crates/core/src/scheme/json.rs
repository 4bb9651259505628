use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::FatPointScheme;
use crate::error::{Error, Result};
use crate::exactlinalg::{format_rational, parse_rational};

/// On-disk form of a scheme. Coordinates are strings (`"p"` or `"p/q"`) so
/// no value passes through floating point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeJson {
    pub ambient_dim: usize,
    pub points: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub coords: Vec<String>,
    pub multiplicity: i64,
}

impl From<&FatPointScheme> for SchemeJson {
    fn from(z: &FatPointScheme) -> Self {
        SchemeJson {
            ambient_dim: z.ambient_dim(),
            points: z
                .components()
                .iter()
                .map(|c| ComponentJson {
                    coords: c.point.coords().iter().map(format_rational).collect(),
                    multiplicity: c.multiplicity as i64,
                })
                .collect(),
        }
    }
}

impl TryFrom<SchemeJson> for FatPointScheme {
    type Error = Error;

    fn try_from(raw: SchemeJson) -> Result<Self> {
        let parsed = raw
            .points
            .into_iter()
            .map(|p| {
                let coords = p
                    .coords
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok((coords, p.multiplicity))
            })
            .collect::<Result<Vec<_>>>()?;
        FatPointScheme::new(raw.ambient_dim, parsed)
    }
}

impl FatPointScheme {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SchemeJson::from(self)).expect("scheme serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&SchemeJson::from(self))
            .expect("scheme serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SchemeJson = serde_json::from_str(text)?;
        raw.try_into()
    }

    /// SHA-256 (hex) of the compact canonical JSON.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

//! Configuration documents: manifolds as variable groups of ascending
//! integer coefficient lists, and points as exact rationals or constructed
//! series. Parse → serialize → parse is the identity on every document.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use dioph_core::liouville::LiouvilleSeries;
use dioph_core::manifold::{ManifoldError, ManifoldSpec, VariableGroup};
use dioph_core::poly::Polynomial;
use dioph_core::rational::Rational;
use dioph_core::real::RefinableReal;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid document {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("field `den`: denominator must be nonzero")]
    ZeroDenominator,
    #[error("field `variables`: {0}")]
    Manifold(#[from] ManifoldError),
    #[error("field `polys`: {0}")]
    Poly(#[from] dioph_core::poly::PolyError),
    #[error("field `{field}`: {message}")]
    Invalid { field: String, message: String },
}

impl ConfigError {
    pub fn invalid(field: &str, message: impl Into<String>) -> Self {
        ConfigError::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }
}

/// Unbounded integer that serializes as a JSON number when it fits in i64
/// and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("not an integer: `{v}`")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(JsonIntVisitor)
    }
}

/// Exact rational as a `{"num": …, "den": …}` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalDoc {
    pub num: JsonInt,
    pub den: JsonInt,
}

impl RationalDoc {
    pub fn to_rational(&self) -> Result<Rational, ConfigError> {
        if self.den.0.is_zero() {
            return Err(ConfigError::ZeroDenominator);
        }
        Ok(Rational::new(self.num.0.clone(), self.den.0.clone()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self {
            num: JsonInt(r.numer().clone()),
            den: JsonInt(r.denom().clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDoc {
    pub name: String,
    /// Ascending coefficient lists, one per polynomial.
    pub polys: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralDoc {
    pub s: u32,
    pub d_max: u32,
}

/// A manifold document: either the full separate-variable structure under
/// `variables`, or a bare `(s, d_max)` pair under `general` for manifolds
/// where only the maximal total degree matters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifoldDoc {
    Product { variables: Vec<VariableDoc> },
    General { general: GeneralDoc },
}

impl ManifoldDoc {
    pub fn to_spec(&self) -> Result<ManifoldSpec, ConfigError> {
        match self {
            ManifoldDoc::Product { variables } => {
                let groups = variables
                    .iter()
                    .map(|v| {
                        let polys = v
                            .polys
                            .iter()
                            .map(|cs| {
                                Polynomial::new(cs.iter().map(|c| c.0.clone()).collect())
                                    .map_err(ConfigError::from)
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        VariableGroup::new(v.name.clone(), polys).map_err(ConfigError::from)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ManifoldSpec::new(groups)?)
            }
            ManifoldDoc::General { .. } => Err(ConfigError::invalid(
                "general",
                "this command needs the full variable structure",
            )),
        }
    }

    pub fn from_spec(spec: &ManifoldSpec) -> Self {
        ManifoldDoc::Product {
            variables: spec
                .groups()
                .iter()
                .map(|g| VariableDoc {
                    name: g.name().to_string(),
                    polys: g
                        .polys()
                        .iter()
                        .map(|p| p.coefficients().iter().cloned().map(JsonInt).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// A point document: exact rational coordinates, or one constructed series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PointDoc {
    Liouville {
        base: u32,
        tau: RationalDoc,
        #[serde(skip_serializing_if = "Option::is_none")]
        terms: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        digits: Option<Vec<u32>>,
    },
    Rational {
        values: Vec<RationalDoc>,
    },
}

impl PointDoc {
    /// The coordinate vector this document describes.
    pub fn to_reals(&self) -> Result<Vec<RefinableReal>, ConfigError> {
        match self {
            PointDoc::Rational { values } => values
                .iter()
                .map(|v| Ok(RefinableReal::Exact(v.to_rational()?)))
                .collect(),
            PointDoc::Liouville {
                base, tau, digits, ..
            } => {
                let tau = tau.to_rational()?;
                let series =
                    LiouvilleSeries::new(*base, tau, digits.clone().unwrap_or_default(), 1)
                        .map_err(|e| ConfigError::invalid("point", e.to_string()))?;
                Ok(vec![RefinableReal::Liouville(series)])
            }
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, ConfigError> {
    std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_manifold(path: &Path) -> Result<ManifoldDoc, ConfigError> {
    let text = read_to_string(path)?;
    serde_json::from_str(&text).map_err(|source| ConfigError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_point(path: &Path) -> Result<PointDoc, ConfigError> {
    let text = read_to_string(path)?;
    serde_json::from_str(&text).map_err(|source| ConfigError::Json {
        path: path.display().to_string(),
        source,
    })
}

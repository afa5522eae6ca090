//! Series-definition files.
//!
//! ```json
//! {"name": "F", "kind": "explicit", "sign_convention": "as-is",
//!  "coefficients": ["3/4", "-21/8", "333/16"]}
//! ```
//!
//! Exact coefficients are written as `"p/q"` strings. A `"catalog"` entry
//! names a built-in series and may omit its coefficients.

use serde::{Deserialize, Serialize};

use super::scalar::Scalar;
use super::sequence::{CoefficientSequence, Origin, SignConvention};
use crate::catalog;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Explicit,
    Catalog,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub name: String,
    pub kind: SeriesKind,
    pub sign_convention: SignConvention,
    #[serde(default)]
    pub coefficients: Vec<String>,
}

impl SeriesFile {
    pub fn into_sequence(self) -> Result<CoefficientSequence> {
        match self.kind {
            SeriesKind::Explicit => {
                let terms = self
                    .coefficients
                    .iter()
                    .map(|c| Scalar::parse(c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(CoefficientSequence::explicit(self.name, terms, self.sign_convention))
            }
            SeriesKind::Catalog => {
                let seq = catalog::lookup(&self.name)?;
                if seq.sign_convention() != self.sign_convention {
                    return Err(Error::InvalidInput(format!(
                        "catalog series '{}' uses a different sign convention",
                        self.name
                    )));
                }
                Ok(seq)
            }
        }
    }

    pub fn from_sequence(seq: &CoefficientSequence, count: usize) -> Result<Self> {
        let coefficients = seq
            .stored_prefix(count)?
            .iter()
            .map(|c| match c {
                Scalar::Exact(_) => c.to_string(),
                Scalar::Real(_) => c.render(u32::MAX),
            })
            .collect();
        let kind = match seq.origin() {
            Origin::Catalog(_) => SeriesKind::Catalog,
            _ => SeriesKind::Explicit,
        };
        Ok(Self {
            name: seq.name().to_string(),
            kind,
            sign_convention: seq.sign_convention(),
            coefficients,
        })
    }
}

pub fn parse_series_json(text: &str) -> Result<CoefficientSequence> {
    let file: SeriesFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("series file: {e}")))?;
    file.into_sequence()
}

pub fn to_series_json(seq: &CoefficientSequence, count: usize) -> Result<String> {
    let file = SeriesFile::from_sequence(seq, count)?;
    serde_json::to_string_pretty(&file).map_err(|e| Error::InvalidInput(e.to_string()))
}

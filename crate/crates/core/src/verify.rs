//! Regression matrix over the catalog: every structural claim the library
//! is built around, runnable as one suite from the CLI and from the
//! integration tests.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Float,
    Exact,
    Both,
}

impl std::str::FromStr for Backend {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "float" => Ok(Backend::Float),
            "exact" => Ok(Backend::Exact),
            "both" => Ok(Backend::Both),
            other => Err(crate::Error::Input(format!("unknown backend '{other}'"))),
        }
    }
}

/// One verification item: an id, what it checked, and the outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ItemResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
    /// Integer outputs as (name, float value, exact value when computed).
    pub integers: Vec<IntegerOutput>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntegerOutput {
    pub name: String,
    pub float: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<i64>,
}

/// Placeholder module shape; the matrix itself is assembled in `suite`.
pub mod suite;

pub use suite::{run_all, VerifyOptions};

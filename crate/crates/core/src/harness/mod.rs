//! Batch drivers behind the CLI: verification campaigns over whole
//! families, the random scan of the `l <= i- <= l + q` bounds, and the
//! exact-arithmetic property suites.
//!
//! All drivers are deterministic. Instances are generated up front, run in
//! parallel, and collected in index order, so reports do not depend on
//! scheduling.

mod campaign;
mod props;
mod scan;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exact::{ExactError, MatrixJson, RationalSymMatrix};
use crate::graph::{all_pairs_distance_squared, Graph, GraphError};

pub use campaign::{
    verify_campaign, CampaignFamily, CampaignReport, CampaignSpec, InstanceRecord, WitnessSummary,
};
pub use props::{property_suite, PropertyCheck, PropertyReport};
pub use scan::{conjecture_scan, ScanConfig, ScanLine, ScanRecord, ScanReport, ScanSummary};

/// Default largest `n` handed to the exact oracle.
pub const DEFAULT_MAX_N: usize = 24;

/// Environment variable that overrides [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "INERTIA_LAB_MAX_N";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("instance with n = {n} exceeds the oracle cap {max} (set {MAX_N_ENV} to raise it)")]
    SizeLimit { n: usize, max: usize },
    #[error("invalid campaign: {0}")]
    InvalidCampaign(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("input is neither a graph nor a matrix")]
    UnknownInput,
}

/// The oracle cap: `INERTIA_LAB_MAX_N` if set to a positive integer, else
/// [`DEFAULT_MAX_N`].
pub fn oracle_cap() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_N)
}

pub(crate) fn check_cap(n: usize, max: usize) -> Result<(), HarnessError> {
    if n > max {
        Err(HarnessError::SizeLimit { n, max })
    } else {
        Ok(())
    }
}

/// Hex SHA-256 of the graph's canonical JSON.
pub fn graph_hash(g: &Graph) -> String {
    hex::encode(Sha256::digest(g.to_json().as_bytes()))
}

pub(crate) fn exact_delta(g: &Graph) -> Result<RationalSymMatrix, GraphError> {
    Ok((&all_pairs_distance_squared(g)?).into())
}

/// A parsed CLI input document.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Matrix(RationalSymMatrix),
}

impl Input {
    /// Reads either `{"n", "edges"}` or `{"n", "data"}`. Matrix entries may be
    /// JSON integers or rational strings.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("edges").is_some() {
            return Ok(Input::Graph(serde_json::from_value(value)?));
        }
        let Some(data) = value.get("data").and_then(|d| d.as_array()) else {
            return Err(HarnessError::UnknownInput);
        };
        let n = value
            .get("n")
            .and_then(|n| n.as_u64())
            .map_or(data.len(), |n| n as usize);
        let mut rows = Vec::with_capacity(data.len());
        for row in data {
            let cells = row.as_array().ok_or(HarnessError::UnknownInput)?;
            rows.push(
                cells
                    .iter()
                    .map(|c| match c {
                        serde_json::Value::String(s) => Ok(s.clone()),
                        serde_json::Value::Number(x) if x.is_i64() => Ok(x.to_string()),
                        other => Err(ExactError::Parse(other.to_string())),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(Input::Matrix(RationalSymMatrix::try_from(MatrixJson { n, data: rows })?))
    }

    /// The matrix itself, or `Δ` of the graph.
    pub fn into_matrix(self) -> Result<RationalSymMatrix, HarnessError> {
        match self {
            Input::Graph(g) => Ok(exact_delta(&g)?),
            Input::Matrix(m) => Ok(m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn input_forms() {
        let g = Input::parse(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        let m = g.into_matrix().unwrap();
        assert_eq!(m.get(0, 2), &rat(4));

        let m = Input::parse(r#"{"n":2,"data":[[0,"1/2"],["1/2",3]]}"#)
            .unwrap()
            .into_matrix()
            .unwrap();
        assert_eq!(m.get(1, 1), &rat(3));

        assert!(matches!(Input::parse(r#"{"n":2}"#), Err(HarnessError::UnknownInput)));
        assert!(Input::parse(r#"{"n":2,"data":[[0,1],[2,0]]}"#).is_err());
        assert!(Input::parse("nope").is_err());
    }

    #[test]
    fn hash_is_stable() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(graph_hash(&g).len(), 64);
        assert_eq!(graph_hash(&g), graph_hash(&Graph::new(2, [(1, 0)]).unwrap()));
    }
}

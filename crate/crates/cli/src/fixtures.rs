//! Inputs bundled into the binary so `verify-paper` never touches the
//! filesystem unless asked to.

use knotcert_core::ledger::{Axiom, AxiomStore, DeltaTag, LedgerError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const V1: &str = include_str!("../fixtures/v1.mat");
pub const V2: &str = include_str!("../fixtures/v2.mat");
pub const TAMPERED: &str = include_str!("../fixtures/tampered.mat");
pub const EMPTY: &str = include_str!("../fixtures/empty.mat");
pub const AXIOMS: &str = include_str!("../fixtures/axioms.json");

#[derive(Debug, Error)]
pub enum AxiomFileError {
    #[error("axiom file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AxiomFile {
    axioms: Vec<AxiomEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AxiomEntry {
    name: String,
    framing: i64,
    tau: i64,
    s: i64,
    delta: Option<String>,
    citations: Vec<String>,
}

pub fn parse_axioms(json: &str) -> Result<AxiomStore, AxiomFileError> {
    let file: AxiomFile = serde_json::from_str(json)?;
    let entries = file
        .axioms
        .into_iter()
        .map(|e| Axiom {
            name: e.name,
            framing: e.framing,
            tau: e.tau,
            s: e.s,
            delta: e.delta.map(DeltaTag),
            citations: e.citations,
        })
        .collect();
    Ok(AxiomStore::new(entries)?)
}

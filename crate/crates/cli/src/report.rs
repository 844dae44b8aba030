//! Structured command output with deterministic text and JSON renderings.
//!
//! Big integers (determinants, polynomial coefficients, matrix entries) are
//! rendered as decimal strings in JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use knotcert_core::invariants::InvariantReport;
use knotcert_core::IntMatrix;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Payload,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Invariants(InvariantsPayload),
    Matrix(MatrixPayload),
    BandCheck(BandCheckPayload),
    Pipeline(PipelinePayload),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsPayload {
    pub alexander: String,
    /// Ascending coefficients `c0, c1, …` of the canonical polynomial.
    pub alexander_coefficients: Vec<String>,
    pub determinant: String,
    pub signature: i64,
    pub arf: u8,
    pub genus: usize,
    pub alexander_one: bool,
    pub slice_obstructions: SliceObstructionsPayload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceObstructionsPayload {
    pub signature_zero: bool,
    pub determinant_square: bool,
}

impl From<&InvariantReport> for InvariantsPayload {
    fn from(r: &InvariantReport) -> Self {
        Self {
            alexander: r.alexander.to_string(),
            alexander_coefficients: r.alexander.dense_coeffs().iter().map(ToString::to_string).collect(),
            determinant: r.determinant.to_string(),
            signature: r.signature,
            arf: r.arf,
            genus: r.genus,
            alexander_one: r.alexander_one,
            slice_obstructions: SliceObstructionsPayload {
                signature_zero: r.slice_obstructions.signature_zero,
                determinant_square: r.slice_obstructions.determinant_square,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixPayload {
    pub dimension: usize,
    pub rows: Vec<Vec<String>>,
}

impl From<&IntMatrix> for MatrixPayload {
    fn from(m: &IntMatrix) -> Self {
        Self {
            dimension: m.dim(),
            rows: m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

impl MatrixPayload {
    /// The matrix in the plain-text file format.
    pub fn to_matrix_text(&self) -> String {
        let mut out = format!("{}\n", self.dimension);
        for row in &self.rows {
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BandCheckPayload {
    pub band_index: usize,
    pub dimension: usize,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelinePayload {
    pub steps: Vec<Step>,
    pub failed_step: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub number: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CliReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if !self.inputs.is_empty() {
            out.push_str("inputs:\n");
            for (k, v) in &self.inputs {
                writeln!(out, "  {k}: {v}").unwrap();
            }
        }
        out.push_str("result:\n");
        match &self.result {
            Payload::Pipeline(p) => {
                for step in &p.steps {
                    let mark = if step.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "  [{mark}] step {}: {}", step.number, step.name).unwrap();
                    writeln!(out, "         {}", step.detail).unwrap();
                }
                if let Some(n) = p.failed_step {
                    writeln!(out, "  halted at step {n}").unwrap();
                }
            }
            other => {
                let value = serde_json::to_value(other).expect("payload serializes");
                write_value(&mut out, &value, 1);
            }
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        writeln!(out, "status: {status}").unwrap();
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(_) | Value::Object(_) => None,
                x => scalar(x),
            })
            .collect::<Option<Vec<_>>>()
            .map(|xs| format!("[{}]", xs.join(", "))),
        Value::Object(_) => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        write_value(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        write_value(out, item, depth + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

//! One function per subcommand, each returning a [`CliReport`].

use std::collections::BTreeMap;
use std::path::Path;

use knotcert_core::invariants::{alexander, alexander_raw, InvariantReport};
use knotcert_core::ledger::{
    band_move_update, connect_sum, double_name, summand_rank3_certificate, tau_neq_s_half,
    topologically_slice, AxiomStore, BoundedValue, LedgerError, Sliceness,
};
use knotcert_core::seifert::{
    direct_sum, double_seifert, is_band_move, validate, BandMoveClaim, SeifertError,
};
use knotcert_core::{IntMatrix, LaurentPoly, SeifertMatrix};
use num_bigint::BigInt;
use thiserror::Error;

use crate::fixtures::{self, AxiomFileError};
use crate::format::{parse_matrix, parse_matrix_file, FormatError};
use crate::report::{
    BandCheckPayload, CliReport, InvariantsPayload, MatrixPayload, Payload, PipelinePayload, Status, Step,
};

/// Errors that stop a command before it can reach a verdict. All map to exit
/// status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{path}: not a Seifert matrix: {source}")]
    NotSeifert {
        path: String,
        #[source]
        source: SeifertError,
    },
    #[error("band check: {0}")]
    BandCheck(SeifertError),
    #[error(transparent)]
    Axioms(#[from] AxiomFileError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn display_path(path: &Path) -> String {
    path.display().to_string()
}

pub fn load_seifert(path: &Path) -> Result<SeifertMatrix, CliError> {
    let m = parse_matrix_file(path)?;
    validate(m).map_err(|source| CliError::NotSeifert { path: display_path(path), source })
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn cmd_invariants(path: &Path) -> Result<CliReport, CliError> {
    let v = load_seifert(path)?;
    let report = InvariantReport::compute(&v);
    Ok(CliReport {
        command: "invariants".to_string(),
        inputs: inputs([("file", display_path(path))]),
        result: Payload::Invariants(InvariantsPayload::from(&report)),
        status: Status::Pass,
    })
}

pub fn cmd_double(framing: &BigInt) -> CliReport {
    let v = double_seifert(framing.clone());
    CliReport {
        command: "double".to_string(),
        inputs: inputs([("framing", framing.to_string())]),
        result: Payload::Matrix(MatrixPayload::from(v.matrix())),
        status: Status::Pass,
    }
}

/// Block sum of the given matrices; no files gives the unknot's empty matrix.
pub fn cmd_sum<P: AsRef<Path>>(paths: &[P]) -> Result<CliReport, CliError> {
    let mut total = SeifertMatrix::empty();
    for p in paths {
        total = direct_sum(&total, &load_seifert(p.as_ref())?);
    }
    let files = paths.iter().map(|p| display_path(p.as_ref())).collect::<Vec<_>>().join(" ");
    Ok(CliReport {
        command: "sum".to_string(),
        inputs: inputs([("files", files)]),
        result: Payload::Matrix(MatrixPayload::from(total.matrix())),
        status: Status::Pass,
    })
}

/// Verdict of [`is_band_move`]. A dimension mismatch or bad index is an
/// error, not a `false` verdict.
pub fn cmd_band_check(before: &Path, after: &Path, index: usize) -> Result<CliReport, CliError> {
    let a = load_seifert(before)?;
    let b = load_seifert(after)?;
    let dimension = a.dim();
    let verdict = is_band_move(&BandMoveClaim::new(a, b, index)).map_err(CliError::BandCheck)?;
    Ok(CliReport {
        command: "band-check".to_string(),
        inputs: inputs([
            ("before", display_path(before)),
            ("after", display_path(after)),
            ("index", index.to_string()),
        ]),
        result: Payload::BandCheck(BandCheckPayload { band_index: index, dimension, verdict }),
        status: if verdict { Status::Pass } else { Status::Fail },
    })
}

/// Everything `verify-paper` reads. The bundled fixtures are the default;
/// each piece can be swapped to check that a corrupted input is caught.
#[derive(Debug, Clone)]
pub struct VerifyInputs {
    pub v1: IntMatrix,
    pub v2: IntMatrix,
    pub axioms: AxiomStore,
    pub labels: BTreeMap<String, String>,
}

impl VerifyInputs {
    pub fn bundled() -> Self {
        Self {
            v1: parse_matrix(fixtures::V1).expect("bundled V1 parses"),
            v2: parse_matrix(fixtures::V2).expect("bundled V2 parses"),
            axioms: fixtures::parse_axioms(fixtures::AXIOMS).expect("bundled axioms parse"),
            labels: inputs([
                ("axioms", "bundled".to_string()),
                ("v1", "bundled".to_string()),
                ("v2", "bundled".to_string()),
            ]),
        }
    }

    pub fn with_v1_file(mut self, path: &Path) -> Result<Self, CliError> {
        self.v1 = parse_matrix_file(path)?;
        self.labels.insert("v1".to_string(), display_path(path));
        Ok(self)
    }

    pub fn with_v2_file(mut self, path: &Path) -> Result<Self, CliError> {
        self.v2 = parse_matrix_file(path)?;
        self.labels.insert("v2".to_string(), display_path(path));
        Ok(self)
    }

    pub fn with_axioms_file(mut self, path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: display_path(path), source })?;
        self.axioms = fixtures::parse_axioms(&text)?;
        self.labels.insert("axioms".to_string(), display_path(path));
        Ok(self)
    }
}

pub const STEP_NAMES: [&str; 7] = [
    "D+(K,2) + D+(K,2) + D+(K,4) block sum equals V1",
    "ledger: K = D+(T_{2,3},2) # D+(T_{2,3},2) # D+(T_{2,5},4) has tau = 0, s = 6",
    "V1 -> V2 reattaches band 1",
    "Alexander polynomial of V2 is 1, so J is topologically slice",
    "band move bounds: tau(J) in [-1, 1], s(J) in [4, 6] even",
    "tau(J) != s(J)/2 certified",
    "tau, s/2, delta give a rank-3 summand on D+(T_{2,3},0), D+(T_{2,5},0), J",
];

struct Pipeline {
    steps: Vec<Step>,
}

impl Pipeline {
    /// Records step `number`; an `Err` halts the pipeline.
    fn record(&mut self, number: usize, outcome: Result<String, String>) -> Result<(), usize> {
        let passed = outcome.is_ok();
        let detail = outcome.unwrap_or_else(|e| e);
        self.steps.push(Step { number, name: STEP_NAMES[number - 1].to_string(), passed, detail });
        if passed {
            Ok(())
        } else {
            Err(number)
        }
    }
}

fn ledger_detail(e: &LedgerError) -> String {
    match e {
        LedgerError::UnknownAxiom(_) => format!("UnknownAxiom: {e}"),
        LedgerError::NotABandMove(_) => format!("NotABandMove: {e}"),
        LedgerError::MissingMatrix(_) => format!("MissingMatrix: {e}"),
        other => other.to_string(),
    }
}

fn first_difference(a: &IntMatrix, b: &IntMatrix) -> String {
    if a.dim() != b.dim() {
        return format!("dimension {} differs from fixture dimension {}", a.dim(), b.dim());
    }
    (0..a.dim())
        .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
        .find(|&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|(i, j)| {
            format!("entry ({}, {}) is {} but the fixture has {}", i + 1, j + 1, a.get(i, j), b.get(i, j))
        })
        .unwrap_or_default()
}

fn interval_is(v: &BoundedValue, lo: i64, hi: i64, even: bool) -> bool {
    v.lo() == lo && v.hi() == hi && v.even_only() == even
}

fn run_pipeline(inputs: &VerifyInputs, p: &mut Pipeline) -> Result<(), usize> {
    // 1
    let built = direct_sum(&direct_sum(&double_seifert(2), &double_seifert(2)), &double_seifert(4));
    p.record(
        1,
        if built.matrix() == &inputs.v1 {
            Ok("block sum matches the V1 fixture entry by entry".to_string())
        } else {
            Err(first_difference(built.matrix(), &inputs.v1))
        },
    )?;

    // 2
    let lookup = |name: String| inputs.axioms.known_double(&name).map_err(|e| ledger_detail(&e));
    let k = (|| {
        let d23 = lookup(double_name(2, 3, 2))?;
        let d25 = lookup(double_name(2, 5, 4))?;
        let sum = connect_sum(&d23, &d23).and_then(|s| connect_sum(&s, &d25));
        sum.map_err(|e| ledger_detail(&e))
    })();
    let k = match k {
        Ok(k) => k,
        Err(detail) => return p.record(2, Err(detail)),
    };
    let detail = format!("tau(K) = {}, s(K) = {} from {}", k.tau(), k.s(), k.provenance.join(" "));
    p.record(
        2,
        if interval_is(k.tau(), 0, 0, false) && interval_is(k.s(), 6, 6, true) {
            Ok(detail)
        } else {
            Err(detail)
        },
    )?;

    // 3
    let v1 = validate(inputs.v1.clone()).map_err(|e| format!("V1 fixture: {e}"));
    let v2 = validate(inputs.v2.clone()).map_err(|e| format!("V2 fixture: {e}"));
    let (v1, v2) = match (v1, v2) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return p.record(3, Err(e)),
    };
    let verdict = is_band_move(&BandMoveClaim::new(v1, v2.clone(), 1));
    p.record(
        3,
        match verdict {
            Ok(true) => Ok("only row and column 1 change; V - V^t is preserved".to_string()),
            Ok(false) => Err("V1 and V2 are not related by reattaching band 1".to_string()),
            Err(e) => Err(e.to_string()),
        },
    )?;

    // 4
    let j = band_move_update(&k, &v2, 1).map_err(|e| ledger_detail(&e));
    let raw = alexander_raw(&v2);
    let canonical = alexander(&v2);
    let detail = format!("det(V2 - t V2^t) = {raw}, canonical {canonical}");
    let j = match j {
        Ok(j)
            if canonical == LaurentPoly::one()
                && topologically_slice(&j) == Sliceness::TopologicallySlice =>
        {
            p.record(4, Ok(format!("{detail}; topologically slice [fr]")))?;
            j
        }
        Ok(_) => return p.record(4, Err(format!("{detail} is not 1"))),
        Err(e) => return p.record(4, Err(e)),
    };

    // 5
    let detail = format!(
        "tau(J) in {{{}}}, s(J) in {{{}}} from {}",
        join_values(j.tau()),
        join_values(j.s()),
        j.provenance.join(" ")
    );
    p.record(
        5,
        if interval_is(j.tau(), -1, 1, false) && interval_is(j.s(), 4, 6, true) {
            Ok(detail)
        } else {
            Err(detail)
        },
    )?;

    // 6
    let cert = tau_neq_s_half(&j);
    let detail =
        format!("2 tau(J) in [{}, {}], s(J) in {}: {cert}", 2 * j.tau().lo(), 2 * j.tau().hi(), j.s());
    p.record(6, if cert.is_certified() { Ok(detail) } else { Err(detail) })?;

    // 7
    let pair = lookup(double_name(2, 3, 0)).and_then(|a| Ok((a, lookup(double_name(2, 5, 0))?)));
    let (a, b) = match pair {
        Ok(x) => x,
        Err(detail) => return p.record(7, Err(detail)),
    };
    let cert = summand_rank3_certificate(&a, &b, &j);
    let detail =
        format!("value matrix determinant tau_a (delta_a - delta_b)(s_J/2 - tau_J) is nonzero: {cert}");
    p.record(7, if cert.is_certified() { Ok(detail) } else { Err(detail) })
}

fn join_values(v: &BoundedValue) -> String {
    v.values().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// Runs the seven-step reproduction, halting at the first failing step.
pub fn cmd_verify_paper(inputs: &VerifyInputs) -> CliReport {
    let mut pipeline = Pipeline { steps: Vec::new() };
    let failed_step = run_pipeline(inputs, &mut pipeline).err();
    CliReport {
        command: "verify-paper".to_string(),
        inputs: inputs.labels.clone(),
        result: Payload::Pipeline(PipelinePayload { steps: pipeline.steps, failed_step }),
        status: if failed_step.is_none() { Status::Pass } else { Status::Fail },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steps(r: &CliReport) -> &PipelinePayload {
        match &r.result {
            Payload::Pipeline(p) => p,
            _ => panic!("not a pipeline"),
        }
    }

    #[test]
    fn bundled_run_passes_all_steps() {
        let r = cmd_verify_paper(&VerifyInputs::bundled());
        let p = steps(&r);
        assert_eq!(p.steps.len(), 7);
        assert!(p.steps.iter().all(|s| s.passed), "{:#?}", p.steps);
        assert_eq!(p.failed_step, None);
        assert!(r.passed());
        assert!(p.steps[3].detail.starts_with("det(V2 - t V2^t) = t^3, canonical 1"));
        assert!(p.steps[4].detail.starts_with("tau(J) in {-1, 0, 1}, s(J) in {4, 6}"));
    }

    #[test]
    fn v2_replaced_by_v1_fails_at_step_four() {
        let mut inputs = VerifyInputs::bundled();
        inputs.v2 = inputs.v1.clone();
        let r = cmd_verify_paper(&inputs);
        assert_eq!(steps(&r).failed_step, Some(4));
        assert_eq!(steps(&r).steps.len(), 4);
        assert!(!r.passed());
    }

    #[test]
    fn empty_axioms_fail_at_step_two() {
        let mut inputs = VerifyInputs::bundled();
        inputs.axioms = AxiomStore::empty();
        let r = cmd_verify_paper(&inputs);
        let p = steps(&r);
        assert_eq!(p.failed_step, Some(2));
        assert!(p.steps[1].detail.starts_with("UnknownAxiom"));
    }

    #[test]
    fn tampered_v2_fails_at_step_three() {
        let mut inputs = VerifyInputs::bundled();
        inputs.v2 = parse_matrix(fixtures::TAMPERED).unwrap();
        assert_eq!(steps(&cmd_verify_paper(&inputs)).failed_step, Some(3));
    }

    #[test]
    fn wrong_v1_fails_at_step_one() {
        let mut inputs = VerifyInputs::bundled();
        inputs.v1 = inputs.v2.clone();
        let r = cmd_verify_paper(&inputs);
        assert_eq!(steps(&r).failed_step, Some(1));
        assert_eq!(steps(&r).steps[0].detail, "entry (1, 1) is -1 but the fixture has 3");
    }

    #[test]
    fn double_report() {
        let r = cmd_double(&BigInt::from(4));
        assert_eq!(r.result, Payload::Matrix(MatrixPayload::from(double_seifert(4).matrix())));
    }
}

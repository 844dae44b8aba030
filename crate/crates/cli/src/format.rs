//! Plain-text matrix files.
//!
//! ```text
//! # comment lines start with '#'
//! 2
//! -1 1
//! 0 2
//! ```
//!
//! The first non-comment line is the dimension `n`, followed by `n` rows of
//! `n` whitespace-separated integers. Blank lines are ignored. The writer
//! emits the header and rows with single spaces and no comments, so
//! `write_matrix(&parse_matrix(&write_matrix(m))?) == write_matrix(m)`.

use std::fs;
use std::path::{Path, PathBuf};

use knotcert_core::IntMatrix;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLengthMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: {token:?} is not an integer")]
    NonIntegerToken { line: usize, token: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| FormatError::MalformedHeader {
        line: 0,
        reason: "missing dimension line".to_string(),
    })?;
    let n: usize = header.parse().map_err(|_| FormatError::MalformedHeader {
        line: header_line,
        reason: format!("{header:?} is not a non-negative integer"),
    })?;

    let mut rows = Vec::with_capacity(n);
    for (line, body) in lines {
        if rows.len() == n {
            return Err(FormatError::MalformedHeader {
                line: header_line,
                reason: format!("declares {n} rows but line {line} holds more data"),
            });
        }
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| FormatError::NonIntegerToken { line, token: tok.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(FormatError::RowLengthMismatch { line, expected: n, found: row.len() });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(FormatError::MalformedHeader {
            line: header_line,
            reason: format!("declares {n} rows but only {} present", rows.len()),
        });
    }
    Ok(IntMatrix::from_rows(rows).expect("rows checked to be square"))
}

pub fn write_matrix(m: &IntMatrix) -> String {
    format!("{}\n{m}", m.dim())
}

pub fn parse_matrix_file(path: impl AsRef<Path>) -> Result<IntMatrix, FormatError> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })?;
    parse_matrix(&text)
}

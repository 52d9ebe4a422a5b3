//! JSON file formats.
//!
//! A polynomial matrix file is `{"n": .., "m": .., "entries": [...]}` with
//! `entries` an `n × m` array of coefficient lists (decimal strings,
//! ascending degree). An integer matrix file is `{"rows": .., "cols": ..,
//! "entries": [...]}` with the entries as a row-major list of decimal strings.
//!
//! Parse errors carry the line and column reported by the JSON reader;
//! checks on dimensions and tokens run during deserialization so that they
//! are located as well.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use ghnf_core::{IntMatrix, IntPoly, PolyMatrix};
use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

/// A malformed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; keep the bare message
        let text = e.to_string();
        let message = match text.rfind(" at line ") {
            Some(i) => text[..i].to_string(),
            None => text,
        };
        ParseError { message, line: e.line(), column: e.column() }
    }
}

/// An arbitrary-precision integer written as a decimal string.
struct Decimal(BigInt);

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = Decimal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal integer string")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<Decimal, E> {
                let digits = s.strip_prefix('-').unwrap_or(s);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(E::custom(format!("invalid integer {s:?}")));
                }
                BigInt::from_str(s).map(Decimal).map_err(|_| E::custom(format!("invalid integer {s:?}")))
            }
        }

        d.deserialize_str(V)
    }
}

fn poly_from(coeffs: Vec<Decimal>) -> IntPoly {
    IntPoly::from_coeffs(coeffs.into_iter().map(|c| c.0).collect())
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        vec!["0".to_string()]
    } else {
        p.coeffs().iter().map(ToString::to_string).collect()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    n: usize,
    m: usize,
    entries: Vec<Vec<Vec<Decimal>>>,
}

#[derive(Serialize)]
struct MatrixOut {
    n: usize,
    m: usize,
    entries: Vec<Vec<Vec<String>>>,
}

struct MatrixFile(PolyMatrix);

impl<'de> Deserialize<'de> for MatrixFile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(d)?;
        if raw.entries.len() != raw.n {
            return Err(de::Error::custom(format!(
                "expected {} rows of entries, found {}",
                raw.n,
                raw.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(raw.n);
        for (i, r) in raw.entries.into_iter().enumerate() {
            if r.len() != raw.m {
                return Err(de::Error::custom(format!(
                    "row {i} has {} entries, expected {}",
                    r.len(),
                    raw.m
                )));
            }
            rows.push(r.into_iter().map(poly_from).collect());
        }
        let f = if raw.n == 0 || raw.m == 0 {
            PolyMatrix::empty(raw.n)
        } else {
            PolyMatrix::from_rows(rows).map_err(de::Error::custom)?
        };
        Ok(MatrixFile(f))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Decimal>,
}

/// Serialized form of an integer matrix.
#[derive(Serialize)]
pub struct IntMatrixOut {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl IntMatrixOut {
    pub fn new(a: &IntMatrix) -> Self {
        let entries = (0..a.rows())
            .flat_map(|i| a.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect();
        IntMatrixOut { rows: a.rows(), cols: a.cols(), entries }
    }
}

struct IntMatrixFile(IntMatrix);

impl<'de> Deserialize<'de> for IntMatrixFile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawIntMatrix::deserialize(d)?;
        if raw.entries.len() != raw.rows * raw.cols {
            return Err(de::Error::custom(format!(
                "expected {}x{} = {} entries, found {}",
                raw.rows,
                raw.cols,
                raw.rows * raw.cols,
                raw.entries.len()
            )));
        }
        let data = raw.entries.into_iter().map(|e| e.0).collect();
        IntMatrix::new(raw.rows, raw.cols, data).map(IntMatrixFile).map_err(de::Error::custom)
    }
}

pub fn parse_matrix(text: &str) -> Result<PolyMatrix, ParseError> {
    Ok(serde_json::from_str::<MatrixFile>(text)?.0)
}

pub fn emit_matrix(f: &PolyMatrix) -> String {
    let out = MatrixOut {
        n: f.nrows(),
        m: f.ncols(),
        entries: (0..f.nrows()).map(|i| f.row(i).iter().map(coeff_strings).collect()).collect(),
    };
    serde_json::to_string(&out).expect("matrix serializes")
}

pub fn parse_int_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    Ok(serde_json::from_str::<IntMatrixFile>(text)?.0)
}

pub fn emit_int_matrix(a: &IntMatrix) -> String {
    serde_json::to_string(&IntMatrixOut::new(a)).expect("matrix serializes")
}

/// Failure to obtain a matrix from a file.
#[derive(Debug)]
pub enum ReadError {
    Io(std::io::Error),
    Parse(ParseError),
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Io(e) => write!(f, "{e}"),
            ReadError::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ReadError {}

pub fn read_matrix(path: &Path) -> Result<PolyMatrix, ReadError> {
    let text = fs::read_to_string(path).map_err(ReadError::Io)?;
    parse_matrix(&text).map_err(ReadError::Parse)
}

pub fn read_int_matrix(path: &Path) -> Result<IntMatrix, ReadError> {
    let text = fs::read_to_string(path).map_err(ReadError::Io)?;
    parse_int_matrix(&text).map_err(ReadError::Parse)
}

//! Machine-readable tables and figure data: the `λ_g(k)` table, `ℓ_g(n)`
//! as a function of `g`, length scatter data with the `λ_g` overlay, and
//! OEIS b-files.
//!
//! CSV output is comma separated with a header row and LF line endings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::gadic::{g_length, lambda};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Text,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "text" => Ok(TableFormat::Text),
            other => Err(Error::InvalidConfig(format!(
                "unknown table format `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub bases: Vec<u32>,
    pub k_max: u64,
    pub format: TableFormat,
}

impl Default for TableSpec {
    /// Primes below 30, lengths 1 through 20, aligned text.
    fn default() -> Self {
        Self {
            bases: vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29],
            k_max: 20,
            format: TableFormat::Text,
        }
    }
}

/// `rows[k - 1][i] = λ_{bases[i]}(k)`.
pub fn lambda_matrix(bases: &[u32], k_max: u64) -> Result<Vec<Vec<BigInt>>> {
    if k_max < 1 {
        return Err(Error::InvalidLength(k_max));
    }
    (1..=k_max)
        .map(|k| bases.iter().map(|&g| lambda(g, k)).collect())
        .collect()
}

pub fn emit_lambda_table(spec: &TableSpec) -> Result<String> {
    if spec.bases.is_empty() {
        return Err(Error::InvalidConfig("at least one base is required".into()));
    }
    let rows = lambda_matrix(&spec.bases, spec.k_max)?;
    Ok(match spec.format {
        TableFormat::Csv => table_csv(&spec.bases, &rows),
        TableFormat::Json => table_json(spec, &rows),
        TableFormat::Text => table_text(&spec.bases, &rows),
    })
}

fn table_csv(bases: &[u32], rows: &[Vec<BigInt>]) -> String {
    let mut out = String::from("k");
    for g in bases {
        write!(out, ",{g}").unwrap();
    }
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        write!(out, "{}", i + 1).unwrap();
        for v in row {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn number(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn table_json(spec: &TableSpec, rows: &[Vec<BigInt>]) -> String {
    let values: Vec<Value> = rows
        .iter()
        .map(|row| Value::Array(row.iter().map(number).collect()))
        .collect();
    let doc = json!({
        "bases": spec.bases,
        "k_max": spec.k_max,
        "values": values,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

/// Right-aligned columns separated by two spaces.
fn table_text(bases: &[u32], rows: &[Vec<BigInt>]) -> String {
    let header: Vec<String> = std::iter::once("k".to_string())
        .chain(bases.iter().map(u32::to_string))
        .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            std::iter::once((i + 1).to_string())
                .chain(row.iter().map(BigInt::to_string))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            body.iter()
                .map(|r| r[c].len())
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in std::iter::once(&header).chain(body.iter()) {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

/// `(g, ℓ_g(n))` for every `g` in `[g_lo, g_hi]`.
pub fn emit_length_vs_g(n: &BigInt, g_lo: u32, g_hi: u32) -> Result<Vec<(u32, u64)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if g_lo < 2 {
        return Err(Error::InvalidBase(u64::from(g_lo)));
    }
    (g_lo..=g_hi)
        .map(|g| g_length(n, g).map(|len| (g, len)))
        .collect()
}

pub fn length_vs_g_csv(rows: &[(u32, u64)]) -> String {
    let mut out = String::from("g,length\n");
    for (g, len) in rows {
        writeln!(out, "{g},{len}").unwrap();
    }
    out
}

/// Lengths of `1..=n_max` in base `g`, plus the points `(λ_g(k), k)` that
/// fall inside the range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthHistogram {
    pub base: u32,
    pub n_max: u64,
    /// `(n, ℓ_g(n))`.
    pub points: Vec<(u64, u64)>,
    /// `(k, λ_g(k))`.
    pub overlay: Vec<(u64, BigInt)>,
}

impl LengthHistogram {
    /// `kind,n,length` rows: `point` rows for every `n`, then `lambda`
    /// rows `λ_g(k),k`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,n,length\n");
        for (n, len) in &self.points {
            writeln!(out, "point,{n},{len}").unwrap();
        }
        for (k, value) in &self.overlay {
            writeln!(out, "lambda,{value},{k}").unwrap();
        }
        out
    }
}

pub fn emit_length_histogram(base: u32, n_max: u64) -> Result<LengthHistogram> {
    if n_max < 1 {
        return Err(Error::OutOfRange {
            value: BigInt::from(n_max),
            min: BigInt::from(1),
        });
    }
    let points = (1..=n_max)
        .map(|n| g_length(&BigInt::from(n), base).map(|len| (n, len)))
        .collect::<Result<Vec<_>>>()?;
    let longest = points.iter().map(|&(_, len)| len).max().unwrap_or(0);
    let limit = BigInt::from(n_max);
    let mut overlay = Vec::new();
    for k in 1..=longest {
        let value = lambda(base, k)?;
        if value <= limit {
            overlay.push((k, value));
        }
    }
    Ok(LengthHistogram {
        base,
        n_max,
        points,
        overlay,
    })
}

/// One `n a(n)` line of an OEIS b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileRecord {
    pub index: u64,
    pub value: BigInt,
}

/// `λ_g(1), …, λ_g(count)` as b-file records.
pub fn emit_bfile(base: u32, count: u64) -> Result<Vec<BFileRecord>> {
    if count < 1 {
        return Err(Error::InvalidLength(count));
    }
    (1..=count)
        .map(|k| lambda(base, k).map(|value| BFileRecord { index: k, value }))
        .collect()
}

pub fn format_bfile(records: &[BFileRecord]) -> String {
    let mut out = String::new();
    for r in records {
        writeln!(out, "{} {}", r.index, r.value).unwrap();
    }
    out
}

/// Reads a b-file, skipping blank lines and `#` comments. Indices must be
/// consecutive.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileRecord>> {
    let mut out: Vec<BFileRecord> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected `n a(n)`, got `{line}`")));
        };
        let index: u64 = idx.parse().map_err(|_| err(format!("bad index `{idx}`")))?;
        let value: BigInt = val.parse().map_err(|_| err(format!("bad value `{val}`")))?;
        if let Some(prev) = out.last() {
            if index != prev.index + 1 {
                return Err(err(format!("index {index} does not follow {}", prev.index)));
            }
        }
        out.push(BFileRecord { index, value });
    }
    Ok(out)
}

//! Line-oriented rational matrix files.
//!
//! ```text
//! field 7
//! rows 3
//! cols 2
//! num: 1                 # entry (0,0)
//! num: 1 6               # entry (0,1) = 1 + 6d
//! num: 1 / den: 1 2      # 1 / (1 + 2d)
//! ```
//!
//! Entries are row-major, coefficients low to high. Negative coefficients
//! are reduced mod p. A missing `den:` means 1.

use std::fmt::Write;

use minspan_core::lti::{Poly, PolyMatrix, RationalEntry, RationalMatrix};
use minspan_core::PrimeField;

use crate::ParseError;

#[derive(Debug, Clone)]
pub struct LtiFile {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<RationalEntry>,
}

impl LtiFile {
    pub fn to_matrix(&self) -> minspan_core::Result<RationalMatrix> {
        RationalMatrix::new(self.field, self.rows, self.cols, self.entries.clone())
    }
}

fn coeffs(field: PrimeField, s: &str, ln: usize) -> Result<Poly, ParseError> {
    let c = s
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| ParseError::new(ln, format!("bad coefficient `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_i64(field, &c))
}

fn parse_entry(field: PrimeField, line: &str, ln: usize) -> Result<RationalEntry, ParseError> {
    let (num, den) = match line.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (line, None),
    };
    let num = num.strip_prefix("num:").ok_or_else(|| ParseError::new(ln, "expected `num:`"))?;
    let num = coeffs(field, num, ln)?;
    let den = match den {
        None => Poly::one(field),
        Some(d) => {
            let d = d.strip_prefix("den:").ok_or_else(|| ParseError::new(ln, "expected `den:` after `/`"))?;
            coeffs(field, d, ln)?
        }
    };
    if den.constant_term() == 0 {
        return Err(ParseError::new(ln, "denominator must have a nonzero constant term"));
    }
    Ok(RationalEntry::new(num, den))
}

pub fn parse(src: &str) -> Result<LtiFile, ParseError> {
    let mut field = None;
    let mut rows = None;
    let mut cols = None;
    let mut entries = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let header = |slot: &mut Option<u64>| -> Result<(), ParseError> {
            if !entries.is_empty() {
                return Err(ParseError::new(ln, format!("header `{}` after entries", toks[0])));
            }
            match toks.as_slice() {
                [_, v] => {
                    *slot = Some(v.parse().map_err(|_| ParseError::new(ln, format!("bad value `{v}`")))?);
                    Ok(())
                }
                _ => Err(ParseError::new(ln, format!("`{}` takes exactly one value", toks[0]))),
            }
        };
        match toks[0] {
            "field" => {
                let mut p = None;
                header(&mut p)?;
                field = Some(PrimeField::new(p.unwrap()).map_err(|e| ParseError::new(ln, e.to_string()))?);
            }
            "rows" => header(&mut rows)?,
            "cols" => header(&mut cols)?,
            _ => {
                let f = field.ok_or_else(|| ParseError::new(ln, "entry before `field` header"))?;
                entries.push(parse_entry(f, line, ln)?);
            }
        }
    }
    let field = field.ok_or_else(|| ParseError::new(0, "missing `field` header"))?;
    let rows = rows.ok_or_else(|| ParseError::new(0, "missing `rows` header"))? as usize;
    let cols = cols.ok_or_else(|| ParseError::new(0, "missing `cols` header"))? as usize;
    if entries.len() != rows * cols {
        return Err(ParseError::new(0, format!("expected {} entries, found {}", rows * cols, entries.len())));
    }
    Ok(LtiFile { field, rows, cols, entries })
}

fn coeff_list(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Writes a polynomial matrix (all denominators 1) in file form.
pub fn write_poly_matrix(out: &mut String, m: &PolyMatrix) {
    writeln!(out, "field {}", m.field().modulus()).unwrap();
    writeln!(out, "rows {}", m.n_rows()).unwrap();
    writeln!(out, "cols {}", m.k_cols()).unwrap();
    for i in 0..m.n_rows() {
        for j in 0..m.k_cols() {
            let e = m.entry(i, j);
            writeln!(out, "num: {:<12} # ({i},{j}) = {e}", coeff_list(e)).unwrap();
        }
    }
}

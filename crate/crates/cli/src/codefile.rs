//! Line-oriented block-code files.
//!
//! ```text
//! # comment
//! field 2
//! length 8
//! sections 1 1 1 1 1 1 1 1   (optional)
//! 1 1 1 1 0 0 0 0
//! 11001100                   (one packed token also works when p <= 10)
//! ```

use std::fmt::Write;

use minspan_core::{CodeSpec, GeneratorMatrix, PrimeField};

use crate::ParseError;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError::new(line, format!("bad {what} `{tok}`")))
}

fn header_value<'a>(toks: &[&'a str], line: usize, key: &str) -> Result<&'a str, ParseError> {
    match toks {
        [_, v] => Ok(v),
        _ => Err(ParseError::new(line, format!("`{key}` takes exactly one value"))),
    }
}

pub fn parse(src: &str) -> Result<GeneratorMatrix, ParseError> {
    let mut field: Option<PrimeField> = None;
    let mut length: Option<usize> = None;
    let mut sections: Option<(usize, Vec<usize>)> = None;
    let mut spec: Option<CodeSpec> = None;
    let mut rows: Vec<Vec<u32>> = Vec::new();

    for (i, raw) in src.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let is_header = matches!(toks[0], "field" | "length" | "sections");
        if is_header && spec.is_some() {
            return Err(ParseError::new(ln, format!("header `{}` after generator rows", toks[0])));
        }
        match toks[0] {
            "field" => {
                let p: u64 = parse_num(header_value(&toks, ln, "field")?, ln, "modulus")?;
                field = Some(PrimeField::new(p).map_err(|e| ParseError::new(ln, e.to_string()))?);
            }
            "length" => length = Some(parse_num(header_value(&toks, ln, "length")?, ln, "length")?),
            "sections" => {
                let s = toks[1..].iter().map(|t| parse_num(t, ln, "section size")).collect::<Result<_, _>>()?;
                sections = Some((ln, s));
            }
            _ => {
                let spec = match &spec {
                    Some(s) => s,
                    None => spec.insert(build_spec(field, length, sections.take())?),
                };
                rows.push(parse_row(spec, &toks, ln)?);
            }
        }
    }
    let spec = match spec {
        Some(s) => s,
        None => build_spec(field, length, sections)?,
    };
    GeneratorMatrix::from_rows(spec, &rows).map_err(|e| ParseError::new(0, e.to_string()))
}

fn build_spec(
    field: Option<PrimeField>,
    length: Option<usize>,
    sections: Option<(usize, Vec<usize>)>,
) -> Result<CodeSpec, ParseError> {
    let field = field.ok_or_else(|| ParseError::new(0, "missing `field` header"))?;
    let n = length.ok_or_else(|| ParseError::new(0, "missing `length` header"))?;
    if n == 0 {
        return Err(ParseError::new(0, "length must be positive"));
    }
    match sections {
        None => Ok(CodeSpec::uniform(field, n)),
        Some((ln, s)) => {
            if s.len() != n {
                return Err(ParseError::new(ln, format!("expected {n} section sizes, found {}", s.len())));
            }
            CodeSpec::new(field, s).map_err(|e| ParseError::new(ln, e.to_string()))
        }
    }
}

fn parse_row(spec: &CodeSpec, toks: &[&str], ln: usize) -> Result<Vec<u32>, ParseError> {
    let p = spec.field().modulus();
    let cols = spec.total_cols();
    let values: Vec<u32> = if toks.len() == 1 && cols > 1 {
        if p > 10 {
            return Err(ParseError::new(ln, "packed rows need p <= 10; separate values with spaces"));
        }
        toks[0]
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| ParseError::new(ln, format!("bad digit `{c}`"))))
            .collect::<Result<_, _>>()?
    } else {
        toks.iter().map(|t| parse_num(t, ln, "value")).collect::<Result<_, _>>()?
    };
    if values.len() != cols {
        return Err(ParseError::new(ln, format!("expected {cols} values, found {}", values.len())));
    }
    if let Some(v) = values.iter().find(|&&v| v >= p) {
        return Err(ParseError::new(ln, format!("value {v} is not in [0, {p})")));
    }
    Ok(values)
}

/// Header lines for `spec`. `sections` is written only when some section is wider than 1.
pub fn write_header(out: &mut String, spec: &CodeSpec) {
    writeln!(out, "field {}", spec.field().modulus()).unwrap();
    writeln!(out, "length {}", spec.n_symbols()).unwrap();
    if spec.sections().iter().any(|&s| s != 1) {
        let s: Vec<String> = spec.sections().iter().map(ToString::to_string).collect();
        writeln!(out, "sections {}", s.join(" ")).unwrap();
    }
}

pub fn write_rows(out: &mut String, g: &GeneratorMatrix) {
    for row in g.row_iter() {
        let r: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", r.join(" ")).unwrap();
    }
}

pub fn to_string(g: &GeneratorMatrix) -> String {
    let mut out = String::new();
    write_header(&mut out, g.spec());
    write_rows(&mut out, g);
    out
}

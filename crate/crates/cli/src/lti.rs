//! Polynomial-matrix commands. Every command clears the rational input to
//! polynomial generators first.

use std::fmt::Write;

use minspan_core::lti::{Poly, PolyMatrix, RepairKind, RepairStep};
use serde_json::{json, Value};

use crate::render::join;
use crate::{ltifile, CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtiCommand {
    Clear,
    Minors,
    Report,
    Reduce,
    Indices,
    Dual,
}

fn load(src: &str) -> Result<PolyMatrix, CliError> {
    Ok(ltifile::parse(src)?.to_matrix()?.clear()?)
}

fn poly_json(p: &Poly) -> Value {
    json!(p.coeffs())
}

fn matrix_json(m: &PolyMatrix) -> Value {
    let rows: Vec<Value> =
        (0..m.n_rows()).map(|i| Value::Array((0..m.k_cols()).map(|j| poly_json(m.entry(i, j))).collect())).collect();
    json!({"rows": m.n_rows(), "cols": m.k_cols(), "matrix": rows})
}

fn step_text(i: usize, s: &RepairStep) -> String {
    let kind = match &s.kind {
        RepairKind::Delay => "delay".to_string(),
        RepairKind::Degree => "degree".to_string(),
        RepairKind::CommonFactor(p) => format!("common factor {p}"),
    };
    let terms: Vec<String> = s
        .multipliers
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(j, m)| format!("({m})*g{j}"))
        .collect();
    format!("# step {}: {kind} repair, g{} := ({}) / ({})", i + 1, s.replaced, terms.join(" + "), s.divisor)
}

fn step_json(s: &RepairStep) -> Value {
    let kind = match &s.kind {
        RepairKind::Delay => "delay",
        RepairKind::Degree => "degree",
        RepairKind::CommonFactor(_) => "common_factor",
    };
    json!({
        "kind": kind,
        "replaced": s.replaced,
        "multipliers": s.multipliers.iter().map(poly_json).collect::<Vec<_>>(),
        "divisor": poly_json(&s.divisor),
    })
}

fn clear(m: &PolyMatrix) -> Output {
    let mut text = String::from("# cleared polynomial generators\n");
    ltifile::write_poly_matrix(&mut text, m);
    Output::ok(text, matrix_json(m))
}

fn minors(m: &PolyMatrix) -> Output {
    let minors = m.minors();
    let mut text = String::new();
    for mi in &minors {
        writeln!(text, "rows {}: {}", join(&mi.rows), mi.value).unwrap();
    }
    let js: Vec<Value> = minors.iter().map(|mi| json!({"rows": mi.rows, "value": poly_json(&mi.value)})).collect();
    Output::ok(text, json!({ "minors": js }))
}

fn report(m: &PolyMatrix) -> Output {
    let r = m.minimality_report();
    let mut text = String::new();
    writeln!(text, "constant term rank: {}", r.constant_term_rank).unwrap();
    writeln!(text, "leading coefficient rank: {}", r.leading_coeff_rank).unwrap();
    writeln!(text, "column degrees: {}", join(&m.column_degrees())).unwrap();
    writeln!(text, "minor gcd: {}", r.minor_gcd).unwrap();
    writeln!(text, "expected degree: {}", r.expected_degree).unwrap();
    writeln!(text, "max minor degree: {}", r.max_minor_degree).unwrap();
    writeln!(text, "verdict: {}", r.verdict).unwrap();
    let minors: Vec<Value> =
        m.minors().iter().map(|mi| json!({"rows": mi.rows, "value": poly_json(&mi.value)})).collect();
    let js = json!({
        "constant_term_rank": r.constant_term_rank,
        "leading_coeff_rank": r.leading_coeff_rank,
        "column_degrees": m.column_degrees(),
        "minor_gcd": poly_json(&r.minor_gcd),
        "expected_degree": r.expected_degree,
        "max_minor_degree": r.max_minor_degree,
        "verdict": r.verdict.to_string(),
        "minors": minors,
    });
    Output::ok(text, js)
}

fn reduce(m: &PolyMatrix) -> Result<Output, CliError> {
    let red = m.reduce_to_minimal();
    let mut text = String::from("# minimal polynomial generators\n");
    if red.log.is_empty() {
        text.push_str("# already minimal\n");
    }
    for (i, s) in red.log.iter().enumerate() {
        writeln!(text, "{}", step_text(i, s)).unwrap();
    }
    let indices = red.minimal.controllability_indices()?;
    writeln!(text, "# verdict: {}, indices: {}", red.minimal.minimality_report().verdict, join(&indices)).unwrap();
    ltifile::write_poly_matrix(&mut text, &red.minimal);
    let mut js = matrix_json(&red.minimal);
    js["verdict"] = json!(red.minimal.minimality_report().verdict.to_string());
    js["indices"] = json!(indices);
    js["log"] = Value::Array(red.log.iter().map(step_json).collect());
    Ok(Output::ok(text, js))
}

fn indices(m: &PolyMatrix) -> Result<Output, CliError> {
    let idx = m.controllability_indices()?;
    let d = m.lti_dims()?;
    let text = format!(
        "indices: {}\nstate: {}\ntransition: {}\ndual transition: {}\n",
        join(&idx),
        d.state,
        d.transition,
        d.dual_transition
    );
    let js = json!({
        "indices": idx,
        "state_dims": d.state,
        "transition_dims": d.transition,
        "dual_transition_dims": d.dual_transition,
    });
    Ok(Output::ok(text, js))
}

fn dual(m: &PolyMatrix) -> Result<Output, CliError> {
    let h = m.dual()?;
    let product = m.transpose_mul(&h);
    let zero = product.iter().flatten().all(Poly::is_zero);
    let mut text = String::from("# dual minimal polynomial generators\n");
    writeln!(text, "# indices: {}", join(&h.controllability_indices()?)).unwrap();
    if zero {
        text.push_str("# product G^T H: 0\n");
    } else {
        for row in &product {
            writeln!(text, "# product G^T H row: {}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
                .unwrap();
        }
    }
    ltifile::write_poly_matrix(&mut text, &h);
    let mut js = matrix_json(&h);
    js["indices"] = json!(h.controllability_indices()?);
    js["product_zero"] = json!(zero);
    Ok(Output::ok(text, js))
}

pub fn run(cmd: LtiCommand, src: &str) -> Result<Output, CliError> {
    let m = load(src)?;
    match cmd {
        LtiCommand::Clear => Ok(clear(&m)),
        LtiCommand::Minors => Ok(minors(&m)),
        LtiCommand::Report => Ok(report(&m)),
        LtiCommand::Reduce => reduce(&m),
        LtiCommand::Indices => indices(&m),
        LtiCommand::Dual => dual(&m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exit;

    const EXAMPLE3: &str = "field 7\nrows 3\ncols 2\nnum: 1\nnum: 1 -1\nnum: 1 -2\nnum: 1\nnum: 1 -3\nnum: 1 -5\n";

    #[test]
    fn minors_of_example3() {
        let out = run(LtiCommand::Minors, EXAMPLE3).unwrap();
        assert!(out.text.starts_with("rows 0 1: 3*d^1 + 5*d^2\n"));
        assert_eq!(out.text.lines().count(), 3);
    }

    #[test]
    fn reduce_then_indices() {
        let red = run(LtiCommand::Reduce, EXAMPLE3).unwrap();
        assert!(red.text.contains("delay repair"));
        let idx = run(LtiCommand::Indices, &red.text).unwrap();
        assert!(idx.text.starts_with("indices: 0 1\nstate: 1\ntransition: 3\ndual transition: 2\n"));
        assert_eq!(run(LtiCommand::Indices, EXAMPLE3).unwrap_err().code, exit::NOT_MINIMAL);
    }

    #[test]
    fn dual_of_first_order_filter() {
        let out = run(LtiCommand::Dual, "field 7\nrows 2\ncols 1\nnum: 1\nnum: 1 / den: 1 2\n").unwrap();
        assert!(out.text.contains("# product G^T H: 0\n"));
        assert_eq!(out.json["cols"], json!(1));
    }
}

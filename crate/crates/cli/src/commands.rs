//! Block-code commands: reduce, profile, trellis, dual, verify.

use std::fmt::Write;

use minspan_core::duality::{dual_code, verify_duality, Identity};
use minspan_core::profiles::{oracle_profiles, profiles_from_basis};
use minspan_core::trellis::{build_controller, observer_for_code, TrellisLimits};
use minspan_core::{GeneratorMatrix, ShortestBasis};
use serde_json::{json, Value};

use crate::render::{self, join};
use crate::{codefile, exit, CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrellisKind {
    Controller,
    Observer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrellisFormat {
    Text,
    Dot,
}

/// A code file with spans as trailing comments and the PSP certificate.
/// Parsing it back and reducing again reproduces it exactly.
fn basis_file(title: &str, b: &ShortestBasis) -> String {
    let mut out = format!("# {title}\n");
    codefile::write_header(&mut out, b.spec());
    for (row, span) in b.matrix.row_iter().zip(&b.spans) {
        writeln!(out, "{}  # span {span} length {}", join(row), span.len()).unwrap();
    }
    let psp = b.matrix.check_psp();
    let verdict = |ok: bool| if ok { "ok" } else { "violated" };
    writeln!(out, "# psp: delay {}, degree {}", verdict(psp.delay_ok), verdict(psp.degree_ok)).unwrap();
    out
}

fn basis_json(b: &ShortestBasis) -> Value {
    let rows: Vec<&[u32]> = b.matrix.row_iter().collect();
    json!({
        "rows": rows,
        "spans": render::spans_json(&b.spans),
        "certified": b.certified,
    })
}

pub fn reduce(src: &str) -> Result<Output, CliError> {
    let g = codefile::parse(src)?;
    let b = g.to_shortest_basis()?;
    Ok(Output::ok(basis_file("shortest basis", &b), basis_json(&b)))
}

pub fn profile(src: &str, oracle: bool) -> Result<Output, CliError> {
    let g = codefile::parse(src)?;
    let b = g.to_shortest_basis()?;
    let prof = profiles_from_basis(&b)?;
    let mut text = String::new();
    render::profiles_text(&mut text, "", &prof);
    let spans: Vec<String> = b.spans.iter().map(ToString::to_string).collect();
    writeln!(text, "spans: {}", spans.join(" ")).unwrap();
    let mut js = render::profiles_json(&prof);
    js["spans"] = render::spans_json(&b.spans);
    let mut code = exit::OK;
    if oracle {
        let o = oracle_profiles(&g);
        let matched = o == prof;
        render::profiles_text(&mut text, "oracle ", &o);
        writeln!(text, "oracle: {}", if matched { "MATCH" } else { "MISMATCH" }).unwrap();
        js["oracle"] = render::profiles_json(&o);
        js["match"] = json!(matched);
        if !matched {
            code = exit::CHECK_FAILED;
        }
    }
    Ok(Output { text, json: js, code })
}

/// `p^max_state_dim` states per time, saturating.
pub fn limits_for(g: &GeneratorMatrix, max_state_dim: Option<u32>) -> TrellisLimits {
    let mut lim = TrellisLimits::default();
    if let Some(d) = max_state_dim {
        lim.max_states = u64::from(g.field().modulus()).checked_pow(d).unwrap_or(u64::MAX);
    }
    lim
}

pub fn trellis(
    src: &str,
    kind: TrellisKind,
    format: TrellisFormat,
    max_state_dim: Option<u32>,
) -> Result<Output, CliError> {
    let g = codefile::parse(src)?;
    let lim = limits_for(&g, max_state_dim);
    let t = match kind {
        TrellisKind::Controller => build_controller(&g.to_shortest_basis()?, &lim)?,
        TrellisKind::Observer => observer_for_code(&g, &lim)?,
    };
    let text = match format {
        TrellisFormat::Text => render::trellis_text(&t),
        TrellisFormat::Dot => render::trellis_dot(&t),
    };
    let mut js = render::trellis_json(&t);
    let prof = oracle_profiles(&g);
    js["state_dims"] = json!(prof.state_dims);
    js["transition_dims"] = json!(prof.transition_dims);
    Ok(Output::ok(text, js))
}

pub fn dual(src: &str) -> Result<Output, CliError> {
    let g = codefile::parse(src)?;
    let b = dual_code(&g)?.to_shortest_basis()?;
    Ok(Output::ok(basis_file("dual code, shortest basis", &b), basis_json(&b)))
}

fn identity_name(i: Identity) -> &'static str {
    match i {
        Identity::StateEqual => "state_equal",
        Identity::TransitionSum => "transition_sum",
        Identity::InComplement => "in_complement",
        Identity::OutComplement => "out_complement",
    }
}

pub fn verify(src: &str) -> Result<Output, CliError> {
    let g = codefile::parse(src)?;
    let r = verify_duality(&g)?;
    let mut text = String::new();
    writeln!(text, "sections: {}", join(&r.section_sizes)).unwrap();
    render::profiles_text(&mut text, "", &r.primal);
    render::profiles_text(&mut text, "dual ", &r.dual);
    for id in [Identity::StateEqual, Identity::TransitionSum, Identity::InComplement, Identity::OutComplement] {
        let times: Vec<usize> = r.failures.iter().filter(|f| f.identity == id).map(|f| f.time).collect();
        if times.is_empty() {
            writeln!(text, "{}: ok", identity_name(id)).unwrap();
        } else {
            writeln!(text, "{}: FAIL at {}", identity_name(id), join(&times)).unwrap();
        }
    }
    writeln!(text, "{}", if r.all_identities_hold { "all identities hold" } else { "identities FAIL" }).unwrap();
    let mut js = render::profiles_json(&r.primal);
    js["section_sizes"] = json!(r.section_sizes);
    js["dual"] = render::profiles_json(&r.dual);
    js["all_identities_hold"] = json!(r.all_identities_hold);
    js["failures"] = Value::Array(
        r.failures.iter().map(|f| json!({"identity": identity_name(f.identity), "time": f.time})).collect(),
    );
    let code = if r.all_identities_hold { exit::OK } else { exit::CHECK_FAILED };
    Ok(Output { text, json: js, code })
}

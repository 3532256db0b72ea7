//! Text and DOT serializations of trellis realizations, and small helpers
//! shared by the commands.

use std::fmt::Write;

use minspan_core::profiles::DimensionProfiles;
use minspan_core::trellis::{RealizationKind, TrellisRealization};
use minspan_core::Span;
use serde_json::{json, Value};

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn kind_name(kind: RealizationKind) -> &'static str {
    match kind {
        RealizationKind::Controller => "controller",
        RealizationKind::Observer => "observer",
    }
}

/// `a,b,c` for multi-column sections, a plain value otherwise.
fn symbol(s: &[u32]) -> String {
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn profiles_text(out: &mut String, prefix: &str, p: &DimensionProfiles) {
    writeln!(out, "{prefix}state: {}", join(&p.state_dims)).unwrap();
    writeln!(out, "{prefix}transition: {}", join(&p.transition_dims)).unwrap();
    writeln!(out, "{prefix}in: {}", join(&p.in_dims)).unwrap();
    writeln!(out, "{prefix}out: {}", join(&p.out_dims)).unwrap();
}

pub fn profiles_json(p: &DimensionProfiles) -> Value {
    json!({
        "state_dims": p.state_dims,
        "transition_dims": p.transition_dims,
        "in_dims": p.in_dims,
        "out_dims": p.out_dims,
    })
}

pub fn spans_json(spans: &[Span]) -> Value {
    Value::Array(spans.iter().map(|s| json!([s.start, s.end])).collect())
}

/// Header with counts, then one block per symbol time listing
/// `from symbol to` triples in index order.
pub fn trellis_text(t: &TrellisRealization) -> String {
    let spec = t.spec();
    let mut out = String::new();
    writeln!(out, "kind {}", kind_name(t.kind())).unwrap();
    writeln!(out, "field {}", spec.field().modulus()).unwrap();
    writeln!(out, "length {}", spec.n_symbols()).unwrap();
    writeln!(out, "states {}", join(&t.state_counts())).unwrap();
    writeln!(out, "transitions {}", join(&t.transition_counts())).unwrap();
    for k in 0..spec.n_symbols() {
        writeln!(out, "section {k}").unwrap();
        for tr in t.transitions(k) {
            writeln!(out, "{} {} {}", tr.from, symbol(&tr.symbol), tr.to).unwrap();
        }
    }
    out
}

/// One `rank=same` group per state time; node `s{k}_{i}` is state `i` at time `k`.
pub fn trellis_dot(t: &TrellisRealization) -> String {
    let spec = t.spec();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", kind_name(t.kind())).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=circle, width=0.2, label=\"\"];").unwrap();
    for (k, &count) in t.state_counts().iter().enumerate() {
        let nodes: Vec<String> = (0..count).map(|i| format!("s{k}_{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", nodes.join(" ")).unwrap();
    }
    for k in 0..spec.n_symbols() {
        for tr in t.transitions(k) {
            writeln!(out, "  s{k}_{} -> s{}_{} [label=\"{}\"];", tr.from, k + 1, tr.to, symbol(&tr.symbol)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn trellis_json(t: &TrellisRealization) -> Value {
    let sections: Vec<Value> = (0..t.spec().n_symbols())
        .map(|k| {
            Value::Array(
                t.transitions(k).iter().map(|tr| json!({"from": tr.from, "symbol": tr.symbol, "to": tr.to})).collect(),
            )
        })
        .collect();
    json!({
        "kind": kind_name(t.kind()),
        "state_counts": t.state_counts(),
        "transition_counts": t.transition_counts(),
        "sections": sections,
    })
}

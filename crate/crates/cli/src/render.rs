//! Text and JSON rendering of core results.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use liefusion_core::rational::fmt_rational;
use liefusion_core::{LieContext, Rational, RootSystem, Weight};

pub fn q(x: &Rational) -> String {
    fmt_rational(x)
}

/// Components ordered by dimension, then level, then labels.
pub fn ordered_components(ctx: &LieContext, comps: &BTreeMap<Weight, u64>) -> Vec<(Weight, u64, u64)> {
    let rs = ctx.root_system();
    let mut out: Vec<(Weight, u64, u64)> =
        comps.iter().map(|(nu, &m)| (nu.clone(), m, ctx.dim(nu).unwrap_or(0))).collect();
    out.sort_by(|a, b| (a.2, rs.level_int(&a.0), &a.0).cmp(&(b.2, rs.level_int(&b.0), &b.0)));
    out
}

/// `(0010)⊗(0010)=(0000)+(0001)+...+2(0010)+...` in the compressed notation.
pub fn decomposition_line(ctx: &LieContext, lambda: &Weight, mu: &Weight, comps: &BTreeMap<Weight, u64>) -> String {
    let terms: Vec<String> = ordered_components(ctx, comps)
        .into_iter()
        .map(|(nu, m, _)| if m == 1 { nu.compact() } else { format!("{m}{}", nu.compact()) })
        .collect();
    format!("{}⊗{}={}", lambda.compact(), mu.compact(), terms.join("+"))
}

pub fn decomposition_json(ctx: &LieContext, lambda: &Weight, mu: &Weight, comps: &BTreeMap<Weight, u64>) -> Value {
    let components: Vec<Value> = ordered_components(ctx, comps)
        .into_iter()
        .map(|(nu, m, d)| json!({"weight": nu.coords(), "multiplicity": m, "dim": d}))
        .collect();
    json!({
        "factors": [lambda.coords(), mu.coords()],
        "components": components,
        "notation": decomposition_line(ctx, lambda, mu, comps),
    })
}

pub fn roots_json(rs: &RootSystem) -> Value {
    let simple: Vec<Value> = (0..rs.rank())
        .map(|i| {
            json!({
                "dynkin": rs.simple_root_weight(i).coords(),
                "orthogonal": rs.simple_roots()[i].to_string(),
            })
        })
        .collect();
    let positive: Vec<Value> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            json!({
                "dynkin": r.weight.coords(),
                "orthogonal": r.ortho.to_string(),
                "simple_coords": r.simple_coords,
                "height": r.height,
                "norm": q(&r.norm),
            })
        })
        .collect();
    json!({
        "type": rs.lie_type().to_string(),
        "rank": rs.rank(),
        "dimension": rs.dimension(),
        "dual_coxeter": rs.dual_coxeter(),
        "highest_root": rs.highest_root().weight.coords(),
        "simple_roots": simple,
        "positive_roots": positive,
    })
}

pub fn roots_text(rs: &RootSystem) -> String {
    let mut s = format!(
        "{}: rank {}, dimension {}, dual Coxeter number {}, {} positive roots\n",
        rs.lie_type(),
        rs.rank(),
        rs.dimension(),
        rs.dual_coxeter(),
        rs.num_positive_roots()
    );
    s.push_str("simple roots:\n");
    for i in 0..rs.rank() {
        s.push_str(&format!("  α{} = {}  {}\n", i + 1, rs.simple_root_weight(i), rs.simple_roots()[i]));
    }
    s.push_str("positive roots (height, Dynkin labels, orthogonal, squared length):\n");
    for r in rs.positive_roots() {
        s.push_str(&format!("  {:>2}  {:<16} {:<22} {}\n", r.height, r.weight.to_string(), r.ortho.to_string(), q(&r.norm)));
    }
    s.push_str(&format!("highest root θ = {}\n", rs.highest_root().weight));
    s
}

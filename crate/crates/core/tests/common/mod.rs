//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use liefusion_core::weights;
use liefusion_core::{RootSystem, Weight};

pub fn w(xs: &[i64]) -> Weight {
    Weight::new(xs.to_vec())
}

/// All weights of the given rank with labels in `0..=max`.
pub fn boxed(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=max).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

/// Weights of the sl3 module (a,b) by counting Gelfand–Tsetlin patterns.
pub fn gt_multiplicities(a: i64, b: i64) -> BTreeMap<Weight, u64> {
    let (m1, m2, m3) = (a + b, b, 0);
    let mut out = BTreeMap::new();
    for x1 in m2..=m1 {
        for x2 in m3..=m2 {
            for y in x2..=x1 {
                let (w1, w2, w3) = (y, x1 + x2 - y, m1 + m2 + m3 - x1 - x2);
                *out.entry(w(&[w1 - w2, w2 - w3])).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Multiplicity of `μ` in the sl2 module of highest weight `m`.
pub fn sl2_mult(m: i64, mu: i64) -> u64 {
    u64::from(mu.abs() <= m && (m - mu) % 2 == 0)
}

/// Level-k sl2 fusion rule for labels `a, b, c`.
pub fn sl2_fusion(k: i64, a: i64, b: i64, c: i64) -> u64 {
    u64::from((a + b + c) % 2 == 0 && c >= (a - b).abs() && c <= (a + b).min(2 * k - a - b))
}

/// Multiplies the characters of `L(λ)` and `L(μ)` and peels off highest
/// weights one at a time.
pub fn character_product(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> BTreeMap<Weight, u64> {
    let a = weights::weight_system(rs, lambda).unwrap().expanded(rs);
    let b = weights::weight_system(rs, mu).unwrap().expanded(rs);
    let mut ch: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, m) in &a {
        for (y, n) in &b {
            *ch.entry(x + y).or_insert(0) += (m * n) as i64;
        }
    }
    let rho = rs.weyl_vector();
    let mut out = BTreeMap::new();
    loop {
        ch.retain(|_, c| *c != 0);
        let Some(top) = ch.keys().max_by_key(|x| rs.scaled_inner(x, &rho)).cloned() else { break };
        let c = ch[&top];
        assert!(c > 0 && top.is_dominant(), "character product peeled a non-dominant or negative term");
        out.insert(top.clone(), c as u64);
        for (x, m) in weights::weight_system(rs, &top).unwrap().expanded(rs) {
            *ch.entry(x).or_insert(0) -= c * m as i64;
        }
    }
    out
}

//! Level-l admissibility, conformal weights, affine fusion rules and
//! central-charge arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::context::LieContext;
use crate::error::{Error, Result};
use crate::rational::{q, qi, Rational};
use crate::rootsystem::{LieType, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FusionMethod {
    /// Classical multiplicity truncated to admissible weights (unit-level charge).
    Truncated,
    /// Affine Weyl folding of tensor multiplicities.
    KacWalton,
    /// Root-string test for one-dimensional weight spaces of `L(λ4)` (F4).
    StringCriterion,
    /// Corank of the K-space inside the weight space of an explicit module.
    KspaceCorank,
}

impl fmt::Display for FusionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FusionMethod::Truncated => "truncated",
            FusionMethod::KacWalton => "kac-walton",
            FusionMethod::StringCriterion => "string-criterion",
            FusionMethod::KspaceCorank => "kspace-corank",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRule {
    pub level: u32,
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub value: u64,
    pub method: FusionMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformalData {
    pub level: u32,
    pub casimir: Rational,
    /// Conformal weight `Δ_λ = C_λ / (2(l+h∨))`.
    pub delta: Rational,
}

pub fn is_admissible(rs: &RootSystem, lambda: &Weight, level: u32) -> bool {
    lambda.rank() == rs.rank() && lambda.is_dominant() && rs.level_int(lambda) <= level as i64
}

fn require_admissible(rs: &RootSystem, w: &Weight, level: u32) -> Result<()> {
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.rank() });
    }
    if !is_admissible(rs, w, level) {
        return Err(Error::NotAdmissible { weight: w.to_string(), level });
    }
    Ok(())
}

/// `P_+(g, l)`: dominant weights of level at most `l`, ordered by level and
/// then by Dynkin labels.
pub fn admissible_set(rs: &RootSystem, level: u32) -> Vec<Weight> {
    fn extend(comarks: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let i = prefix.len();
        if i == comarks.len() {
            out.push(Weight::new(prefix.clone()));
            return;
        }
        let mut c = 0;
        while c * comarks[i] <= budget {
            prefix.push(c);
            extend(comarks, budget - c * comarks[i], prefix, out);
            prefix.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    extend(rs.comarks(), level as i64, &mut Vec::new(), &mut out);
    out.sort_by_key(|w| (rs.level_int(w), w.clone()));
    out
}

pub fn conformal(rs: &RootSystem, level: u32, lambda: &Weight) -> Result<ConformalData> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let casimir = crate::weights::casimir(rs, lambda);
    let delta = &casimir / qi(2 * (level as i64 + rs.dual_coxeter()));
    Ok(ConformalData { level, casimir, delta })
}

/// `Δ_λ + Δ_μ − Δ_ν`.
pub fn delta_defect(rs: &RootSystem, level: u32, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Rational> {
    let d = |w: &Weight| conformal(rs, level, w).map(|c| c.delta);
    Ok(d(lambda)? + d(mu)? - d(nu)?)
}

/// Fusion rule with a level-one charge: the classical multiplicity when `ν`
/// is admissible, else zero.
pub fn fusion_unit_charge(ctx: &LieContext, level: u32, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<FusionRule> {
    let rs = ctx.root_system();
    require_admissible(rs, lambda, level)?;
    if rs.level_int(lambda) != 1 {
        return Err(Error::ChargeNotUnitLevel(lambda.to_string(), rs.level(lambda).to_string()));
    }
    require_admissible(rs, mu, level)?;
    let value = if is_admissible(rs, nu, level) { ctx.hom_dim(lambda, mu, nu)? } else { 0 };
    Ok(FusionRule {
        level,
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        value,
        method: FusionMethod::Truncated,
    })
}

/// Folds a ρ̄-shifted weight into the fundamental alcove at shifted level
/// `k = l + h∨`. Returns the unshifted image and the sign, or `None` when the
/// point lies on an affine wall.
fn fold_into_alcove(rs: &RootSystem, shifted: &Weight, k: i64) -> Option<(Weight, i64)> {
    let theta = rs.highest_root().weight.clone();
    let mut x = shifted.clone();
    let mut sign = 1;
    loop {
        if let Some(i) = x.coords().iter().position(|&c| c < 0) {
            x = rs.simple_reflection(i, &x);
            sign = -sign;
            continue;
        }
        let lev = rs.level_int(&x);
        if lev > k {
            x = &x - &((lev - k) * &theta);
            sign = -sign;
            continue;
        }
        if lev == k || x.coords().contains(&0) {
            return None;
        }
        return Some((&x - &rs.weyl_vector(), sign));
    }
}

/// The level-l fusion product `λ ⊠ μ` by the Kac–Walton formula.
pub fn fusion_product(ctx: &LieContext, level: u32, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let rs = ctx.root_system();
    require_admissible(rs, lambda, level)?;
    require_admissible(rs, mu, level)?;
    let (small, big) = if ctx.dim(lambda)? <= ctx.dim(mu)? { (lambda, mu) } else { (mu, lambda) };
    let ws = ctx.weight_system(small)?;
    let shifted = big + &rs.weyl_vector();
    let k = level as i64 + rs.dual_coxeter();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, m) in ws.expanded(rs) {
        if let Some((nu, sign)) = fold_into_alcove(rs, &(&shifted + &kappa), k) {
            *acc.entry(nu).or_insert(0) += sign * m as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, c) in acc {
        if c < 0 {
            return Err(Error::Inconsistent(format!("negative fusion coefficient {c} at {nu}")));
        }
        if c > 0 {
            out.insert(nu, c as u64);
        }
    }
    Ok(out)
}

pub fn fusion_general(ctx: &LieContext, level: u32, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<FusionRule> {
    require_admissible(ctx.root_system(), nu, level)?;
    let value = fusion_product(ctx, level, lambda, mu)?.get(nu).copied().unwrap_or(0);
    Ok(FusionRule {
        level,
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        value,
        method: FusionMethod::KacWalton,
    })
}

/// Truncated rule for a level-one charge, Kac–Walton otherwise.
pub fn fusion(ctx: &LieContext, level: u32, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<FusionRule> {
    if ctx.root_system().level_int(lambda) == 1 {
        fusion_unit_charge(ctx, level, lambda, mu, nu)
    } else {
        fusion_general(ctx, level, lambda, mu, nu)
    }
}

/// Root-string criterion for F4 with charge `λ4`: when `ν − μ` is a nonzero
/// weight of `L(λ4)`, the fusion rule is 1 exactly when no
/// `ν − μ + (n_{μ,α}+1)α` (α simple) is a weight of `L(λ4)`, and 0 otherwise.
pub fn string_criterion(ctx: &LieContext, mu: &Weight, nu: &Weight) -> Result<u64> {
    let rs = ctx.root_system();
    if rs.lie_type() != LieType::F4 {
        return Err(Error::RequiresF4("the root-string criterion"));
    }
    for w in [mu, nu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    let l4 = Weight::fundamental(4, 3);
    let ws = ctx.weight_system(&l4)?;
    let diff = nu - mu;
    if diff.is_zero() || ws.mult(rs, &diff) == 0 {
        return Err(Error::Precondition(format!("{diff} is not a nonzero weight of L(λ4)")));
    }
    for i in 0..4 {
        let alpha = rs.simple_root_weight(i);
        let shifted = &diff + &((mu[i] + 1) * &alpha);
        if ws.mult(rs, &shifted) != 0 {
            return Ok(0);
        }
    }
    Ok(1)
}

/// Least set containing `generators` and closed under fusion with them.
pub fn fusion_closure(ctx: &LieContext, level: u32, generators: &[Weight]) -> Result<BTreeSet<Weight>> {
    let rs = ctx.root_system();
    for g in generators {
        require_admissible(rs, g, level)?;
    }
    let unit = generators.iter().all(|g| rs.level_int(g) == 1);
    let mut closure: BTreeSet<Weight> = generators.iter().cloned().collect();
    let mut frontier: Vec<Weight> = closure.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for mu in &frontier {
            for g in generators {
                let products: Vec<Weight> = if unit {
                    ctx.decompose(g, mu)?
                        .components
                        .into_keys()
                        .filter(|nu| is_admissible(rs, nu, level))
                        .collect()
                } else {
                    fusion_product(ctx, level, g, mu)?.into_keys().collect()
                };
                for nu in products {
                    if !closure.contains(&nu) {
                        next.insert(nu);
                    }
                }
            }
        }
        closure.extend(next.iter().cloned());
        frontier = next.into_iter().collect();
    }
    Ok(closure)
}

/// Sugawara central charge `l·dim g / (l + h∨)`.
pub fn central_charge(rs: &RootSystem, level: u32) -> Rational {
    let l = level as i64;
    Rational::new(BigInt::from(l * rs.dimension() as i64), BigInt::from(l + rs.dual_coxeter()))
}

/// Unitary minimal-model central charge `1 − 6/(m(m+1))`.
pub fn virasoro_c(m: i64) -> Rational {
    qi(1) - q(6, m * (m + 1))
}

/// `c(big) − Σ c(parts)`.
pub fn coset_defect(big: (&RootSystem, u32), parts: &[(&RootSystem, u32)]) -> Rational {
    parts
        .iter()
        .fold(central_charge(big.0, big.1), |acc, (rs, l)| acc - central_charge(rs, *l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[i64]) -> Weight {
        Weight::new(xs.to_vec())
    }

    fn f4() -> LieContext {
        LieContext::new(LieType::F4).unwrap()
    }

    #[test]
    fn admissible_sets() {
        let ctx = f4();
        let rs = ctx.root_system();
        assert_eq!(admissible_set(rs, 0), vec![Weight::zero(4)]);
        assert_eq!(admissible_set(rs, 1), vec![Weight::zero(4), w(&[0, 0, 0, 1])]);
        let l2: BTreeSet<_> = admissible_set(rs, 2).into_iter().collect();
        let expected: BTreeSet<_> =
            [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 2], [1, 0, 0, 0], [0, 0, 1, 0]].iter().map(|x| w(x)).collect();
        assert_eq!(l2, expected);
        assert_eq!(admissible_set(rs, 3).len(), 9);
    }

    #[test]
    fn conformal_weights() {
        let rs = RootSystem::build(LieType::F4).unwrap();
        for l in 1..4 {
            assert_eq!(conformal(&rs, l, &Weight::zero(4)).unwrap().delta, qi(0));
            assert_eq!(conformal(&rs, l, &w(&[1, 0, 0, 0])).unwrap().casimir, qi(18));
        }
        let c = conformal(&rs, 1, &w(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c.casimir, qi(12));
        assert_eq!(c.delta, q(3, 5));
    }

    #[test]
    fn unit_charge_examples() {
        let ctx = f4();
        let l4 = w(&[0, 0, 0, 1]);
        let r = fusion_unit_charge(&ctx, 2, &l4, &w(&[0, 0, 0, 2]), &w(&[0, 0, 1, 0])).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.method, FusionMethod::Truncated);
        let r = fusion_unit_charge(&ctx, 3, &l4, &w(&[1, 0, 0, 1]), &w(&[0, 1, 0, 0])).unwrap();
        assert_eq!(r.value, 1);
        // ν = λ1+λ4 has level 3 > 2
        let r = fusion_unit_charge(&ctx, 2, &l4, &w(&[1, 0, 0, 0]), &w(&[1, 0, 0, 1])).unwrap();
        assert_eq!(r.value, 0);
        assert!(matches!(
            fusion_unit_charge(&ctx, 2, &w(&[1, 0, 0, 0]), &l4, &l4),
            Err(Error::ChargeNotUnitLevel(..))
        ));
    }

    #[test]
    fn string_criterion_examples() {
        let ctx = f4();
        assert_eq!(string_criterion(&ctx, &w(&[0, 0, 1, 0]), &w(&[0, 0, 0, 2])).unwrap(), 1);
        assert_eq!(string_criterion(&ctx, &w(&[1, 0, 0, 0]), &w(&[0, 0, 1, 0])).unwrap(), 1);
        assert!(matches!(
            string_criterion(&ctx, &w(&[0, 0, 1, 0]), &w(&[0, 0, 1, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn vacuum_is_unit() {
        let ctx = f4();
        let rs = ctx.root_system();
        for l in 1..=3 {
            let adm = admissible_set(rs, l);
            for mu in &adm {
                for nu in &adm {
                    let n = fusion_general(&ctx, l, &Weight::zero(4), mu, nu).unwrap().value;
                    assert_eq!(n, u64::from(mu == nu));
                }
            }
        }
    }

    #[test]
    fn closures() {
        let ctx = f4();
        let rs = ctx.root_system();
        let l4 = w(&[0, 0, 0, 1]);
        for l in 1..=3 {
            let c = fusion_closure(&ctx, l, std::slice::from_ref(&l4)).unwrap();
            let all: BTreeSet<_> = admissible_set(rs, l).into_iter().collect();
            assert_eq!(c, all, "level {l}");
        }
    }

    #[test]
    fn central_charges() {
        let f4 = RootSystem::build(LieType::F4).unwrap();
        let a1 = RootSystem::build(LieType::A1).unwrap();
        let c3 = RootSystem::build(LieType::C3).unwrap();
        let g2 = RootSystem::build(LieType::G2).unwrap();
        assert_eq!(central_charge(&f4, 1), q(26, 5));
        assert_eq!(coset_defect((&f4, 1), &[(&a1, 1), (&c3, 1)]), qi(0));
        assert_eq!(coset_defect((&g2, 1), &[(&a1, 3), (&a1, 1)]), qi(0));
        assert_eq!(coset_defect((&f4, 2), &[(&a1, 2), (&c3, 2)]), q(21, 22));
        assert_eq!(virasoro_c(9), q(14, 15));
        assert_eq!(virasoro_c(11), q(21, 22));
    }
}

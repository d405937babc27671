//! Reduction of F4 fusion types with charge `λ4` to nine fundamental types,
//! and the finitely checkable hypotheses of the level-raising argument.
//!
//! A type `(ν over μ)` at level `l` reduces to `(ν0 over μ0)` at level `k`
//! when `N^ν_μ ≤ N^{ν0}_{μ0}` and `μ = μ0 + ρ`, `ν = ν0 + ρ` for some `ρ`
//! admissible at level `l − k`.

use serde::{Deserialize, Serialize};

use crate::context::LieContext;
use crate::error::{Error, Result};
use crate::fusion;
use crate::linalg;
use crate::rational::{qi, Rational};
use crate::repbuilder;
use crate::rootsystem::{LieType, OrthoVec, RootSystem, Weight};

fn lambda4() -> Weight {
    Weight::fundamental(4, 3)
}

fn fw(i: usize) -> Weight {
    Weight::fundamental(4, i)
}

fn require_f4(rs: &RootSystem, what: &'static str) -> Result<()> {
    if rs.lie_type() == LieType::F4 {
        Ok(())
    } else {
        Err(Error::RequiresF4(what))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum DifferenceClass {
    Zero,
    /// Short root orthogonal to `θ`.
    ShortA { root: Weight, positive: bool },
    /// Short root not orthogonal to `θ`.
    ShortB { root: Weight, positive: bool },
    LongRoot { root: Weight, positive: bool },
    Other,
}

impl DifferenceClass {
    pub fn name(&self) -> &'static str {
        match self {
            DifferenceClass::Zero => "zero",
            DifferenceClass::ShortA { .. } => "shortA",
            DifferenceClass::ShortB { .. } => "shortB",
            DifferenceClass::LongRoot { .. } => "long-root",
            DifferenceClass::Other => "other",
        }
    }
}

/// Classifies `ν − μ` against the F4 root system.
pub fn classify_difference(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<DifferenceClass> {
    require_f4(rs, "classify_difference")?;
    for w in [mu, nu] {
        if w.rank() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: w.rank() });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    let d = nu - mu;
    if d.is_zero() {
        return Ok(DifferenceClass::Zero);
    }
    let Some(r) = rs.find_root(&d) else {
        return Ok(DifferenceClass::Other);
    };
    let root = &rs.positive_roots()[r.index];
    let positive = r.positive;
    Ok(if root.is_long() {
        DifferenceClass::LongRoot { root: d, positive }
    } else if rs.inner_weights(&root.weight, &rs.highest_root().weight) == qi(0) {
        DifferenceClass::ShortA { root: d, positive }
    } else {
        DifferenceClass::ShortB { root: d, positive }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalType {
    pub id: u8,
    pub nu0: Weight,
    pub mu0: Weight,
    pub level: u32,
    pub rule: u64,
}

/// `(id, ν0, μ0, level)`; weights as sums of fundamental weights.
fn fundamental_data() -> Vec<(u8, Weight, Weight, u32)> {
    let (l1, l2, l3, l4) = (fw(0), fw(1), fw(2), fw(3));
    vec![
        (1, 2 * &l3, &l2 + &l4, 4),
        (2, l2.clone(), &l1 + &l4, 3),
        (3, 2 * &l4, l3.clone(), 2),
        (4, &l3 + &l4, l2.clone(), 3),
        (5, &l2 + &l4, &l1 + &l3, 4),
        (6, l3.clone(), l1.clone(), 2),
        (7, &l3 + &l4, &l3 + &l4, 3),
        (8, l3.clone(), l3.clone(), 2),
        (9, l4.clone(), l4, 1),
    ]
}

const EXPECTED_RULES: [u64; 9] = [1, 1, 1, 1, 1, 1, 2, 1, 1];

/// The nine fundamental types with their fusion rules, checked against the
/// expected rules and against the six group-A positive roots.
pub fn fundamental_table(ctx: &LieContext) -> Result<Vec<FundamentalType>> {
    let rs = ctx.root_system();
    require_f4(rs, "fundamental_table")?;
    let mut out = Vec::with_capacity(9);
    for ((id, nu0, mu0, level), expected) in fundamental_data().into_iter().zip(EXPECTED_RULES) {
        let rule = fusion::fusion(ctx, level, &lambda4(), &mu0, &nu0)?.value;
        if rule != expected {
            return Err(Error::Inconsistent(format!("fundamental type ({id}) has rule {rule}, expected {expected}")));
        }
        if rs.level_int(&nu0) != level as i64 || rs.level_int(&mu0) != level as i64 {
            return Err(Error::Inconsistent(format!("fundamental type ({id}) is not at level {level}")));
        }
        out.push(FundamentalType { id, nu0, mu0, level, rule });
    }
    let mut diffs: Vec<Weight> = out[..6].iter().map(|t| &t.nu0 - &t.mu0).collect();
    let mut group_a: Vec<Weight> = rs.short_root_groups().0.into_iter().map(|r| r.weight.clone()).collect();
    diffs.sort();
    group_a.sort();
    if diffs != group_a {
        return Err(Error::Inconsistent("types (1)-(6) do not match the group-A roots".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "type", rename_all = "kebab-case")]
pub enum ReductionTarget {
    Fundamental(u8),
    /// The swapped type `(μ over ν)` reduces to the given fundamental type.
    AdjointOf(u8),
    /// `N^ν_μ = 0`; nothing to reduce.
    ZeroRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub level: u32,
    pub mu: Weight,
    pub nu: Weight,
    /// `N^ν_μ` at level `l`.
    pub rule: u64,
    pub target: ReductionTarget,
    pub mu0: Weight,
    pub nu0: Weight,
    pub target_level: u32,
    pub target_rule: u64,
    pub rho: Weight,
    /// `N^ν_μ ≤ N^{ν0}_{μ0}` (for the adjoint variant, with `μ` and `ν` swapped).
    pub rule_bound: bool,
    /// `ρ` dominant of level `l − k` and the shifts match.
    pub shift_ok: bool,
}

/// Reduces `(ν over μ)` at level `l` with charge `λ4`, assuming
/// `(μ|θ) = (ν|θ) = l`.
pub fn reduce_to_fundamental(ctx: &LieContext, level: u32, mu: &Weight, nu: &Weight) -> Result<ReductionCertificate> {
    let rs = ctx.root_system();
    require_f4(rs, "reduce_to_fundamental")?;
    let class = classify_difference(rs, mu, nu)?;
    for w in [mu, nu] {
        if rs.level_int(w) != level as i64 {
            return Err(Error::Precondition(format!("{w} does not have level {level}")));
        }
    }
    let rule = fusion::fusion(ctx, level, &lambda4(), mu, nu)?.value;
    if rule == 0 {
        return Ok(ReductionCertificate {
            level,
            mu: mu.clone(),
            nu: nu.clone(),
            rule,
            target: ReductionTarget::ZeroRule,
            mu0: mu.clone(),
            nu0: nu.clone(),
            target_level: level,
            target_rule: 0,
            rho: Weight::zero(4),
            rule_bound: true,
            shift_ok: true,
        });
    }
    let table = fundamental_data();
    let (target, swapped) = match &class {
        DifferenceClass::Zero => {
            let id = match (mu[2] > 0, mu[3] > 0) {
                (false, false) => {
                    return Err(Error::ReductionFailed(format!("N^μ_μ = {rule} for μ = {mu} with n3 = n4 = 0")))
                }
                (true, false) => 8,
                (false, true) => 9,
                (true, true) => 7,
            };
            (ReductionTarget::Fundamental(id), false)
        }
        DifferenceClass::ShortA { root, positive } => {
            let key = if *positive { root.clone() } else { -root };
            let id = table[..6]
                .iter()
                .find(|(_, n0, m0, _)| (n0 - m0) == key)
                .map(|t| t.0)
                .ok_or_else(|| Error::Inconsistent(format!("no fundamental type for {key}")))?;
            if *positive {
                (ReductionTarget::Fundamental(id), false)
            } else {
                (ReductionTarget::AdjointOf(id), true)
            }
        }
        _ => return Err(Error::OutOfReductionScope(format!("{} − {} = {}", nu, mu, nu - mu))),
    };
    let id = match target {
        ReductionTarget::Fundamental(id) | ReductionTarget::AdjointOf(id) => id,
        ReductionTarget::ZeroRule => unreachable!(),
    };
    let (_, nu0, mu0, k) = table[id as usize - 1].clone();
    let (m, n) = if swapped { (nu, mu) } else { (mu, nu) };
    let rho = m - &mu0;
    let target_rule = EXPECTED_RULES[id as usize - 1];
    let swapped_rule = if swapped { fusion::fusion(ctx, level, &lambda4(), nu, mu)?.value } else { rule };
    let rule_bound = swapped_rule <= target_rule;
    let shift_ok = k <= level
        && rho.is_dominant()
        && rs.level_int(&rho) == (level - k) as i64
        && &(&nu0 + &rho) == n;
    if !rule_bound || !shift_ok {
        return Err(Error::ReductionFailed(format!(
            "({nu} over {mu}) at level {level}: ρ = {rho}, bound {rule_bound}, shift {shift_ok}"
        )));
    }
    Ok(ReductionCertificate {
        level,
        mu: mu.clone(),
        nu: nu.clone(),
        rule,
        target,
        mu0,
        nu0,
        target_level: k,
        target_rule,
        rho,
        rule_bound,
        shift_ok,
    })
}

/// How condition (d) was established, if at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRoute {
    /// One-dimensional target weight space and `(η|α) < 0`.
    Dimension,
    /// Explicit vector `E_α u` outside the K-space.
    ExplicitVector,
    None,
}

/// Hypotheses for lifting a level-`k` type to level `l` along `ρ`, with
/// charge `λ = λ4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftConditions {
    pub level: u32,
    pub mu: Weight,
    pub nu: Weight,
    pub rho: Weight,
    pub mu0: Weight,
    pub nu0: Weight,
    /// `max{(λ|θ), (μ0|θ), (ν0|θ)}`.
    pub k: u32,
    /// `ν0 − ν + ρ`.
    pub alpha: Weight,
    /// `ν − μ`.
    pub eta: Weight,
    pub rule: u64,
    pub target_rule: u64,
    /// `N^ν_μ ≤ N^{ν0}_{μ0}` (level `l` versus level `k`).
    pub a: bool,
    /// `μ = μ0 + ρ`, `dim L(ν0)[ν−ρ] = 1` and `dim Hom(ν0 ⊗ ρ, ν) = 1`.
    pub b: bool,
    pub nu_minus_rho_mult: u64,
    pub hom_nu0_rho_nu: u64,
    /// `(ρ|θ) + k ≤ l`.
    pub c: bool,
    /// `dim Hom(λ ⊗ μ0, ν0) = 1`.
    pub d_i: bool,
    /// `α` is a positive root.
    pub d_ii: bool,
    pub d_iii_prime: bool,
    /// Only evaluated when the dimension route fails.
    pub d_iii: Option<bool>,
    pub d: bool,
    pub route: WitnessRoute,
    pub passed: bool,
}

pub fn check_lift_conditions(
    ctx: &LieContext,
    level: u32,
    mu: &Weight,
    nu: &Weight,
    rho: &Weight,
    mu0: &Weight,
    nu0: &Weight,
) -> Result<LiftConditions> {
    let rs = ctx.root_system();
    require_f4(rs, "check_lift_conditions")?;
    for w in [mu, nu, rho, mu0, nu0] {
        if w.rank() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: w.rank() });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    let lam = lambda4();
    let k = [&lam, mu0, nu0].iter().map(|w| rs.level_int(w)).max().unwrap_or(0) as u32;
    let alpha = &(nu0 - nu) + rho;
    let eta = nu - mu;

    let admissible = |w: &Weight, lvl: u32| fusion::is_admissible(rs, w, lvl);
    let rule = if admissible(mu, level) && admissible(nu, level) {
        fusion::fusion(ctx, level, &lam, mu, nu)?.value
    } else {
        0
    };
    let target_rule = if admissible(mu0, k) && admissible(nu0, k) {
        fusion::fusion(ctx, k, &lam, mu0, nu0)?.value
    } else {
        0
    };
    let a = rule <= target_rule;

    let nu_minus_rho_mult = ctx.multiplicity(nu0, &(nu - rho))?;
    let hom_nu0_rho_nu = ctx.hom_dim(nu0, rho, nu)?;
    let b = &(mu0 + rho) == mu && nu_minus_rho_mult == 1 && hom_nu0_rho_nu == 1;
    let c = rs.level_int(rho) + k as i64 <= level as i64;

    let d_i = ctx.hom_dim(&lam, mu0, nu0)? == 1;
    let d_ii = rs.is_positive_root(&alpha);
    let target_dim = ctx.multiplicity(&lam, &(nu0 - mu0))?;
    let d_iii_prime = d_i && d_ii && target_dim == 1 && rs.inner_weights(&eta, &alpha) < Rational::from_integer(0.into());
    let d_iii = if d_iii_prime || !d_ii {
        None
    } else {
        let m = ctx.module(&lam)?;
        match repbuilder::raising_escapes_kspace(rs, &m, mu0, nu0, &alpha, &eta) {
            Ok(v) => Some(v),
            Err(Error::Precondition(_)) => Some(false),
            Err(e) => return Err(e),
        }
    };
    let route = if d_iii_prime {
        WitnessRoute::Dimension
    } else if d_iii == Some(true) {
        WitnessRoute::ExplicitVector
    } else {
        WitnessRoute::None
    };
    let d = d_i && d_ii && route != WitnessRoute::None;
    Ok(LiftConditions {
        level,
        mu: mu.clone(),
        nu: nu.clone(),
        rho: rho.clone(),
        mu0: mu0.clone(),
        nu0: nu0.clone(),
        k,
        alpha,
        eta,
        rule,
        target_rule,
        a,
        b,
        nu_minus_rho_mult,
        hom_nu0_rho_nu,
        c,
        d_i,
        d_ii,
        d_iii_prime,
        d_iii,
        d,
        route,
        passed: a && b && c && d,
    })
}

/// Input data for one of the four level-raising cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftCase {
    pub id: u8,
    pub level: u32,
    pub mu: Weight,
    pub nu: Weight,
    pub rho: Weight,
    pub mu0: Weight,
    pub nu0: Weight,
    /// Expected `k`, `α`, `η` as orthogonal vectors and the expected route.
    pub k: u32,
    pub alpha: OrthoVec,
    pub eta: OrthoVec,
    pub nu_minus_rho: Weight,
    pub route: WitnessRoute,
}

pub fn lift_cases() -> Vec<LiftCase> {
    let (l1, l2, l3, l4) = (fw(0), fw(1), fw(2), fw(3));
    let w = |xs: [i64; 4]| Weight::new(xs.to_vec());
    vec![
        LiftCase {
            id: 1,
            level: 4,
            mu: 2 * &l3,
            nu: &l2 + &l4,
            rho: l3.clone(),
            mu0: l3.clone(),
            nu0: l3.clone(),
            k: 2,
            alpha: OrthoVec::from_ints(&[0, 0, 0, 1]),
            eta: OrthoVec::from_ints(&[0, 0, 0, -1]),
            nu_minus_rho: w([0, 1, -1, 1]),
            route: WitnessRoute::ExplicitVector,
        },
        LiftCase {
            id: 2,
            level: 3,
            mu: &l1 + &l4,
            nu: l2.clone(),
            rho: l4.clone(),
            mu0: l1.clone(),
            nu0: l3.clone(),
            k: 2,
            alpha: OrthoVec::scaled(1, 2, &[1, -1, -1, 1]),
            eta: OrthoVec::from_ints(&[0, 0, 1, 0]),
            nu_minus_rho: w([0, 1, 0, -1]),
            route: WitnessRoute::Dimension,
        },
        LiftCase {
            id: 4,
            level: 3,
            mu: &l3 + &l4,
            nu: l2.clone(),
            rho: l3.clone(),
            mu0: l4.clone(),
            nu0: l4.clone(),
            k: 1,
            alpha: OrthoVec::scaled(1, 2, &[1, -1, -1, 1]),
            eta: OrthoVec::scaled(1, 2, &[-1, 1, 1, -1]),
            nu_minus_rho: w([0, 1, -1, 0]),
            route: WitnessRoute::ExplicitVector,
        },
        LiftCase {
            id: 5,
            level: 4,
            mu: &l1 + &l3,
            nu: &l2 + &l4,
            rho: l3.clone(),
            mu0: l1,
            nu0: l3,
            k: 2,
            alpha: OrthoVec::from_ints(&[0, 0, 0, 1]),
            eta: OrthoVec::scaled(1, 2, &[1, -1, 1, -1]),
            nu_minus_rho: w([0, 1, -1, 1]),
            route: WitnessRoute::Dimension,
        },
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftCaseOutcome {
    pub case: LiftCase,
    pub conditions: LiftConditions,
    /// Computed `k`, `α`, `η`, `ν − ρ` and route agree with the case data.
    pub data_matches: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub cases: Vec<LiftCaseOutcome>,
    /// The lines in `L(λ4)[0]` annihilated (under the contravariant form) by
    /// `F_{ρ3}v_{ρ3}` and by `F_{ρ4}v_{ρ4}` are distinct.
    pub annihilators_distinct: bool,
    pub passed: bool,
}

pub fn run_lift_case(ctx: &LieContext, case: &LiftCase) -> Result<LiftCaseOutcome> {
    let rs = ctx.root_system();
    let conditions = check_lift_conditions(ctx, case.level, &case.mu, &case.nu, &case.rho, &case.mu0, &case.nu0)?;
    let data_matches = conditions.k == case.k
        && rs.to_orthogonal(&conditions.alpha) == case.alpha
        && rs.to_orthogonal(&conditions.eta) == case.eta
        && &case.nu - &case.rho == case.nu_minus_rho
        && conditions.route == case.route;
    let passed = conditions.passed && data_matches;
    Ok(LiftCaseOutcome { case: case.clone(), conditions, data_matches, passed })
}

/// Annihilator of `x` in a two-dimensional weight space with diagonal form `g`.
fn annihilator_line(g: &[Rational], x: &[Rational]) -> Vec<Rational> {
    vec![&g[1] * &x[1], -(&g[0] * &x[0])]
}

pub fn annihilators_distinct(ctx: &LieContext) -> Result<bool> {
    let rs = ctx.root_system();
    let m = ctx.module(&lambda4())?;
    let z = repbuilder::zero_weight_report(rs, &m)?;
    if z.zero_weight_dim != 2 {
        return Err(Error::Inconsistent(format!("dim L(λ4)[0] = {}", z.zero_weight_dim)));
    }
    let g = m.gram_diagonal(&Weight::zero(4));
    let a3 = annihilator_line(g, &z.x3);
    let a4 = annihilator_line(g, &z.x4);
    Ok(linalg::rank(&[a3, a4]) == 2)
}

pub fn verify_lift_cases(ctx: &LieContext) -> Result<LiftReport> {
    require_f4(ctx.root_system(), "verify_lift_cases")?;
    let cases = lift_cases().iter().map(|c| run_lift_case(ctx, c)).collect::<Result<Vec<_>>>()?;
    let annihilators_distinct = annihilators_distinct(ctx)?;
    let passed = annihilators_distinct && cases.iter().all(|c| c.passed);
    Ok(LiftReport { cases, annihilators_distinct, passed })
}

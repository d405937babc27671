//! The verification suite: every finite computation the F4 fusion analysis
//! rests on, as individually addressable checks.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use liefusion_core::fusion::{self, admissible_set};
use liefusion_core::rational::qi;
use liefusion_core::reduction::{self, DifferenceClass, WitnessRoute};
use liefusion_core::repbuilder;
use liefusion_core::{LieContext, LieType, Result as CoreResult, RootSystem, Weight};

use crate::render::{self, q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PaperDiscrepancy,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PaperDiscrepancy => "paper-discrepancy",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub description: String,
    pub status: Status,
    pub expected: Value,
    pub computed: Value,
    pub ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub version: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            s.push_str(&format!("{:<17} {:<width$}  {}\n", c.status.label().to_uppercase(), c.id, c.description));
            s.push_str(&format!("{:<17} {:<width$}  expected: {}\n", "", "", c.expected));
            s.push_str(&format!("{:<17} {:<width$}  computed: {}\n", "", "", c.computed));
        }
        let count = |st: Status| self.checks.iter().filter(|c| c.status == st).count();
        s.push_str(&format!(
            "{} checks: {} pass, {} fail, {} paper-discrepancy\n",
            self.checks.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::PaperDiscrepancy)
        ));
        s
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub only: Option<Vec<String>>,
    pub scan_max: i64,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { only: None, scan_max: 2, timings: true }
    }
}

struct Outcome {
    pass: bool,
    expected: Value,
    computed: Value,
}

impl Outcome {
    fn compare(expected: Value, computed: Value) -> Self {
        Outcome { pass: expected == computed, expected, computed }
    }
}

type CheckFn = fn(&Suite, &VerifyOptions) -> CoreResult<Outcome>;

struct CheckDef {
    id: &'static str,
    anchor: &'static str,
    description: &'static str,
    run: CheckFn,
}

/// Shared contexts; checks may run concurrently against them.
pub struct Suite {
    pub f4: LieContext,
}

fn w(xs: &[i64]) -> Weight {
    Weight::new(xs.to_vec())
}

fn fw(i: usize) -> Weight {
    Weight::fundamental(4, i)
}

fn l4() -> Weight {
    fw(3)
}

fn check_defs() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "f4-roots",
            anchor: "F4 root data",
            description: "24 positive roots; short roots split 6+6 by orthogonality to θ; h∨ = 9; dim 52; ρ̄ = Σλ_i",
            run: f4_roots,
        },
        CheckDef {
            id: "lambda4-weights",
            anchor: "weights of (0001)",
            description: "L(λ4) has dimension 26, 25 weights, zero weight of multiplicity 2, nonzero weights = short roots",
            run: lambda4_weights,
        },
        CheckDef {
            id: "tensor-lambda3-lambda3",
            anchor: "(0010)⊗(0010)",
            description: "decomposition of (0010)⊗(0010)",
            run: tensor_33,
        },
        CheckDef {
            id: "tensor-lambda3-lambda4",
            anchor: "(0010)⊗(0001)",
            description: "decomposition of (0010)⊗(0001)",
            run: tensor_34,
        },
        CheckDef {
            id: "mult-queries",
            anchor: "weight multiplicity queries",
            description: "multiplicities of ν−ρ in L(ν0) for the four level-raising cases",
            run: mult_queries,
        },
        CheckDef {
            id: "zero-weight-basis",
            anchor: "zero-weight basis F_ρ3 v_ρ3, F_ρ4 v_ρ4",
            description: "F_ρ3 v_ρ3 and F_ρ4 v_ρ4 span L(λ4)[0] (nonzero Gram determinant)",
            run: zero_weight_basis,
        },
        CheckDef {
            id: "zero-weight-basis-rho5",
            anchor: "zero-weight basis F_ρ3 v_ρ3, F_ρ5 v_ρ5",
            description: "F_ρ3 v_ρ3 and F_ρ5 v_ρ5 span L(λ4)[0] (nonzero Gram determinant)",
            run: zero_weight_basis_rho5,
        },
        CheckDef {
            id: "kspace-ranks",
            anchor: "K-spaces at ν = μ",
            description: "rank of K^μ(λ4)[0] for μ = λ1, λ3, λ4, λ3+λ4",
            run: kspace_ranks,
        },
        CheckDef {
            id: "kspace-scan",
            anchor: "corank identity",
            description: "dim L(λ4)[ν−μ] − rank K^μ(λ4)[ν−μ] equals the Klimyk multiplicity over the scan box",
            run: kspace_scan,
        },
        CheckDef {
            id: "string-criterion-scan",
            anchor: "root-string criterion",
            description: "root-string criterion for nonzero ν−μ equals the Klimyk multiplicity over the scan box",
            run: string_scan,
        },
        CheckDef {
            id: "fundamental-types",
            anchor: "fundamental types",
            description: "fusion rules of the nine fundamental types; types (1)-(6) realize the six positive group-A roots",
            run: fundamental_types,
        },
        CheckDef {
            id: "closure-l1",
            anchor: "fusion closure",
            description: "closure of {λ4} at level 1",
            run: |s, _| closure(s, 1),
        },
        CheckDef {
            id: "closure-l2",
            anchor: "fusion closure",
            description: "closure of {λ4} at level 2",
            run: |s, _| closure(s, 2),
        },
        CheckDef {
            id: "closure-l3",
            anchor: "fusion closure",
            description: "closure of {λ4} at level 3 equals P_+(F4,3)",
            run: |s, _| closure(s, 3),
        },
        CheckDef { id: "case-1", anchor: "level-raising case (1)", description: "lifting conditions, case (1)", run: |s, _| lift_case(s, 1) },
        CheckDef { id: "case-2", anchor: "level-raising case (2)", description: "lifting conditions, case (2)", run: |s, _| lift_case(s, 2) },
        CheckDef { id: "case-4", anchor: "level-raising case (4)", description: "lifting conditions, case (4)", run: |s, _| lift_case(s, 4) },
        CheckDef { id: "case-5", anchor: "level-raising case (5)", description: "lifting conditions, case (5)", run: |s, _| lift_case(s, 5) },
        CheckDef {
            id: "annihilator-independence",
            anchor: "annihilators in L(λ4)[0]",
            description: "the lines in L(λ4)[0] orthogonal to F_ρ3 v_ρ3 and to F_ρ4 v_ρ4 are distinct",
            run: annihilator_independence,
        },
        CheckDef {
            id: "appendixB",
            anchor: "explicit pairing computation",
            description: "‖F_ρ3 F_α v‖², ‖F_ρ4 F_β v‖², |⟨F_ρ3 F_α v | F_ρ4 F_β v⟩| with α=[1,0,0,-1], β=1/2[1,1,1,1]",
            run: appendix_b,
        },
        CheckDef {
            id: "cc-f4-level1",
            anchor: "central charges",
            description: "c(F4,1) − c(A1,1) − c(C3,1)",
            run: cc_f4_level1,
        },
        CheckDef {
            id: "cc-g2-level1",
            anchor: "central charges",
            description: "c(G2,1) − c(A1,3) − c(A1,1)",
            run: cc_g2_level1,
        },
        CheckDef {
            id: "cc-f4-level2-coset",
            anchor: "level-2 coset central charge",
            description: "c(F4,2) − c(A1,2) − c(C3,2) against the stated c9 = 1 − 6/(9·10)",
            run: cc_f4_level2,
        },
    ]
}

pub fn check_ids() -> Vec<&'static str> {
    check_defs().iter().map(|c| c.id).collect()
}

pub fn run(suite: &Suite, opts: &VerifyOptions) -> CheckReport {
    let mut defs: Vec<CheckDef> = check_defs()
        .into_iter()
        .filter(|c| opts.only.as_ref().is_none_or(|ids| ids.iter().any(|i| i == c.id)))
        .collect();
    defs.sort_by_key(|c| c.id);
    let checks = defs
        .par_iter()
        .map(|def| {
            let start = Instant::now();
            let outcome = (def.run)(suite, opts);
            let ms = if opts.timings { start.elapsed().as_millis() as u64 } else { 0 };
            let (status, expected, computed) = match outcome {
                Ok(o) if o.pass => (Status::Pass, o.expected, o.computed),
                Ok(o) if def.id == "cc-f4-level2-coset" => (Status::PaperDiscrepancy, o.expected, o.computed),
                Ok(o) => (Status::Fail, o.expected, o.computed),
                Err(e) => (Status::Fail, Value::Null, json!({ "error": e.to_string() })),
            };
            Check {
                id: def.id.to_string(),
                anchor: def.anchor.to_string(),
                description: def.description.to_string(),
                status,
                expected,
                computed,
                ms,
            }
        })
        .collect();
    CheckReport { version: env!("CARGO_PKG_VERSION").to_string(), checks }
}

fn sorted_strings<I: IntoIterator<Item = String>>(xs: I) -> Vec<String> {
    let mut v: Vec<String> = xs.into_iter().collect();
    v.sort();
    v
}

fn f4_roots(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let (a, b) = rs.short_root_groups();
    let expected = json!({
        "positive_roots": 24,
        "group_a": sorted_strings(
            ["[0,0,0,1]", "[0,0,1,0]", "1/2[1,-1,-1,-1]", "1/2[1,-1,-1,1]", "1/2[1,-1,1,-1]", "1/2[1,-1,1,1]"]
                .map(String::from)
        ),
        "group_b": sorted_strings(
            ["[0,1,0,0]", "[1,0,0,0]", "1/2[1,1,1,1]", "1/2[1,1,1,-1]", "1/2[1,1,-1,1]", "1/2[1,1,-1,-1]"]
                .map(String::from)
        ),
        "dual_coxeter": 9,
        "dimension": 52,
        "weyl_vector": [1, 1, 1, 1],
        "highest_root": "[1,1,0,0]",
    });
    let computed = json!({
        "positive_roots": rs.num_positive_roots(),
        "group_a": sorted_strings(a.iter().map(|r| r.ortho.to_string())),
        "group_b": sorted_strings(b.iter().map(|r| r.ortho.to_string())),
        "dual_coxeter": rs.dual_coxeter(),
        "dimension": rs.dimension(),
        "weyl_vector": rs.weyl_vector().coords(),
        "highest_root": rs.highest_root().ortho.to_string(),
    });
    Ok(Outcome::compare(expected, computed))
}

fn lambda4_weights(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let ws = s.f4.weight_system(&l4())?;
    let all = ws.expanded(rs);
    let short: BTreeSet<Weight> = rs
        .positive_roots()
        .iter()
        .filter(|r| !r.is_long())
        .flat_map(|r| [r.weight.clone(), -&r.weight])
        .collect();
    let nonzero: BTreeSet<Weight> = all.keys().filter(|k| !k.is_zero()).cloned().collect();
    let computed = json!({
        "dim": ws.total_dim(),
        "distinct_weights": all.len(),
        "zero_multiplicity": ws.mult(rs, &Weight::zero(4)),
        "nonzero_weights_are_short_roots": nonzero == short,
        "nonzero_multiplicities_one": all.iter().filter(|(k, _)| !k.is_zero()).all(|(_, &m)| m == 1),
    });
    let expected = json!({
        "dim": 26,
        "distinct_weights": 25,
        "zero_multiplicity": 2,
        "nonzero_weights_are_short_roots": true,
        "nonzero_multiplicities_one": true,
    });
    Ok(Outcome::compare(expected, computed))
}

fn tensor_check(s: &Suite, mu: &Weight, expected: &str, dim_product: u64) -> CoreResult<Outcome> {
    let l3 = fw(2);
    let d = s.f4.decompose(&l3, mu)?;
    let line = render::decomposition_line(&s.f4, &l3, mu, &d.components);
    let total: u64 = d.components.iter().map(|(nu, m)| m * s.f4.dim(nu).unwrap_or(0)).sum();
    Ok(Outcome::compare(
        json!({ "decomposition": expected, "total_dim": dim_product }),
        json!({ "decomposition": line, "total_dim": total }),
    ))
}

fn tensor_33(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    tensor_check(
        s,
        &fw(2),
        "(0010)⊗(0010)=(0000)+(0001)+(1000)+2(0010)+2(0002)+2(1001)+(2000)+(0100)+(0003)+2(0011)+(1010)+(1002)+(0101)+(0020)",
        273 * 273,
    )
}

fn tensor_34(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    tensor_check(s, &l4(), "(0010)⊗(0001)=(0001)+(1000)+(0010)+(0002)+(1001)+(0100)+(0011)", 273 * 26)
}

fn mult_queries(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let mut queries = Vec::new();
    let mut computed = Vec::new();
    for case in reduction::lift_cases() {
        queries.push(json!({ "case": case.id, "nu0": case.nu0.compact(), "weight": case.nu_minus_rho.coords(), "multiplicity": 1 }));
        let m = s.f4.multiplicity(&case.nu0, &case.nu_minus_rho)?;
        computed.push(json!({ "case": case.id, "nu0": case.nu0.compact(), "weight": case.nu_minus_rho.coords(), "multiplicity": m }));
    }
    Ok(Outcome::compare(json!(queries), json!(computed)))
}

fn zero_weight(s: &Suite) -> CoreResult<repbuilder::ZeroWeightReport> {
    let m = s.f4.module(&l4())?;
    repbuilder::zero_weight_report(s.f4.root_system(), &m)
}

fn zero_weight_basis(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let z = zero_weight(s)?;
    Ok(Outcome {
        pass: z.gram_det_34 != qi(0) && z.zero_weight_dim == 2,
        expected: json!({ "gram_det_nonzero": true, "zero_weight_dim": 2 }),
        computed: json!({ "gram_det": q(&z.gram_det_34), "zero_weight_dim": z.zero_weight_dim }),
    })
}

fn zero_weight_basis_rho5(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let z = zero_weight(s)?;
    Ok(Outcome {
        pass: z.gram_det_35 != qi(0) && z.joint_rank == 2,
        expected: json!({ "gram_det_nonzero": true, "joint_rank": 2 }),
        computed: json!({ "gram_det": q(&z.gram_det_35), "joint_rank": z.joint_rank, "cos2": q(&z.cos2_35) }),
    })
}

fn kspace_ranks(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let m = s.f4.module(&l4())?;
    let mus = [fw(0), fw(2), fw(3), &fw(2) + &fw(3)];
    let mut ranks = Vec::new();
    let mut rules = Vec::new();
    for mu in &mus {
        let k = repbuilder::kspace(rs, &m, mu, mu)?;
        ranks.push(k.rank());
        rules.push(k.corank());
    }
    Ok(Outcome::compare(
        json!({ "ranks": [2, 1, 1, 0], "fusion": [0, 1, 1, 2] }),
        json!({ "ranks": ranks, "fusion": rules }),
    ))
}

fn scan_box(max: i64) -> Vec<Weight> {
    let r = 0..=max;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    out.push(w(&[a, b, c, d]));
                }
            }
        }
    }
    out
}

fn kspace_scan(s: &Suite, opts: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let m = s.f4.module(&l4())?;
    let labels = scan_box(opts.scan_max);
    let mut pairs = 0u64;
    let mut mismatches = Vec::new();
    for mu in &labels {
        for nu in &labels {
            if m.weight_space_dim(&(nu - mu)) == 0 {
                continue;
            }
            pairs += 1;
            let a = repbuilder::fusion_via_kspace(rs, &m, mu, nu)?;
            let b = s.f4.hom_dim(&l4(), mu, nu)?;
            if a != b {
                mismatches.push(json!({ "mu": mu.coords(), "nu": nu.coords(), "corank": a, "klimyk": b }));
            }
        }
    }
    Ok(Outcome {
        pass: mismatches.is_empty(),
        expected: json!({ "mismatches": [] }),
        computed: json!({ "scan_max": opts.scan_max, "pairs": pairs, "mismatches": mismatches }),
    })
}

fn string_scan(s: &Suite, opts: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let ws = s.f4.weight_system(&l4())?;
    let labels = scan_box(opts.scan_max);
    let mut pairs = 0u64;
    let mut mismatches = Vec::new();
    for mu in &labels {
        for nu in &labels {
            let d = nu - mu;
            if d.is_zero() || ws.mult(rs, &d) == 0 {
                continue;
            }
            pairs += 1;
            let a = fusion::string_criterion(&s.f4, mu, nu)?;
            let b = s.f4.hom_dim(&l4(), mu, nu)?;
            if a != b {
                mismatches.push(json!({ "mu": mu.coords(), "nu": nu.coords(), "criterion": a, "klimyk": b }));
            }
        }
    }
    Ok(Outcome {
        pass: mismatches.is_empty(),
        expected: json!({ "mismatches": [] }),
        computed: json!({ "scan_max": opts.scan_max, "pairs": pairs, "mismatches": mismatches }),
    })
}

fn fundamental_types(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let table = reduction::fundamental_table(&s.f4)?;
    let rules: Vec<u64> = table.iter().map(|x| x.rule).collect();
    // Types (1)-(6) must use each positive group-A root exactly once.
    let mut a_roots = BTreeSet::new();
    for x in table.iter().filter(|x| x.id <= 6) {
        if let DifferenceClass::ShortA { root, positive: true } = reduction::classify_difference(rs, &x.mu0, &x.nu0)? {
            a_roots.insert(root);
        }
    }
    let types: Vec<Value> = table
        .iter()
        .map(|x| json!({ "id": x.id, "nu0": x.nu0.compact(), "mu0": x.mu0.compact(), "level": x.level, "rule": x.rule }))
        .collect();
    let expected = json!({ "rules": [1, 1, 1, 1, 1, 1, 2, 1, 1], "distinct_group_a_roots": 6 });
    let shown = json!({ "rules": rules, "distinct_group_a_roots": a_roots.len() });
    Ok(Outcome {
        pass: shown == expected,
        expected,
        computed: json!({ "rules": rules, "distinct_group_a_roots": a_roots.len(), "types": types }),
    })
}

fn closure(s: &Suite, level: u32) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let c = fusion::fusion_closure(&s.f4, level, &[l4()])?;
    let expected: Vec<Weight> = match level {
        1 => vec![w(&[0, 0, 0, 0]), l4()],
        2 => vec![w(&[0, 0, 0, 0]), l4(), w(&[0, 0, 0, 2]), fw(0), fw(2)],
        _ => admissible_set(rs, level),
    };
    let fmt = |ws: &mut Vec<Weight>| -> Vec<String> {
        ws.sort_by_key(|x| (rs.level_int(x), x.clone()));
        ws.iter().map(|x| x.compact()).collect()
    };
    let mut e = expected;
    let mut got: Vec<Weight> = c.into_iter().collect();
    Ok(Outcome::compare(json!(fmt(&mut e)), json!(fmt(&mut got))))
}

fn lift_case(s: &Suite, id: u8) -> CoreResult<Outcome> {
    let rs = s.f4.root_system();
    let case = reduction::lift_cases().into_iter().find(|c| c.id == id).expect("known case");
    let o = reduction::run_lift_case(&s.f4, &case)?;
    let c = &o.conditions;
    let route = |r: WitnessRoute| match r {
        WitnessRoute::Dimension => "dimension",
        WitnessRoute::ExplicitVector => "explicit-vector",
        WitnessRoute::None => "none",
    };
    let expected = json!({
        "k": case.k,
        "alpha": case.alpha.to_string(),
        "eta": case.eta.to_string(),
        "nu_minus_rho": case.nu_minus_rho.coords(),
        "nu_minus_rho_multiplicity": 1,
        "route": route(case.route),
    });
    let computed = json!({
        "k": c.k,
        "alpha": rs.to_orthogonal(&c.alpha).to_string(),
        "eta": rs.to_orthogonal(&c.eta).to_string(),
        "nu_minus_rho": (&case.nu - &case.rho).coords(),
        "nu_minus_rho_multiplicity": c.nu_minus_rho_mult,
        "route": route(c.route),
        "conditions": {
            "a": c.a, "b": c.b, "c": c.c, "d": c.d,
            "i": c.d_i, "ii": c.d_ii, "iii_prime": c.d_iii_prime, "iii": c.d_iii,
            "eta_dot_alpha": q(&rs.inner_weights(&c.eta, &c.alpha)),
        },
    });
    let mut shown = computed.clone();
    if let Some(obj) = shown.as_object_mut() {
        obj.remove("conditions");
    }
    Ok(Outcome { pass: o.passed && shown == expected, expected, computed })
}

fn annihilator_independence(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let distinct = reduction::annihilators_distinct(&s.f4)?;
    Ok(Outcome::compare(json!({ "distinct": true }), json!({ "distinct": distinct })))
}

fn appendix_b(s: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let m = s.f4.module(&l4())?;
    let p = repbuilder::pairing_report(s.f4.root_system(), &m)?;
    Ok(Outcome::compare(
        json!({ "norm_rho3": "2", "norm_rho4": "2", "cross_abs": "1" }),
        json!({ "norm_rho3": q(&p.norm3), "norm_rho4": q(&p.norm4), "cross_abs": q(&p.cross_abs) }),
    ))
}

fn build(t: LieType) -> CoreResult<RootSystem> {
    RootSystem::build(t)
}

fn defect_outcome(big: (&RootSystem, u32), parts: &[(&RootSystem, u32)]) -> Outcome {
    let c_big = fusion::central_charge(big.0, big.1);
    let c_parts: Vec<String> = parts.iter().map(|(rs, l)| q(&fusion::central_charge(rs, *l))).collect();
    let d = fusion::coset_defect(big, parts);
    Outcome {
        pass: d == qi(0),
        expected: json!({ "defect": "0" }),
        computed: json!({ "defect": q(&d), "c_total": q(&c_big), "c_parts": c_parts }),
    }
}

fn cc_f4_level1(_: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let (f4, a1, c3) = (build(LieType::F4)?, build(LieType::A1)?, build(LieType::C3)?);
    Ok(defect_outcome((&f4, 1), &[(&a1, 1), (&c3, 1)]))
}

fn cc_g2_level1(_: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let (g2, a1) = (build(LieType::G2)?, build(LieType::A1)?);
    Ok(defect_outcome((&g2, 1), &[(&a1, 3), (&a1, 1)]))
}

/// The defect is compared with the stated value but neither is asserted:
/// a mismatch is reported as a discrepancy, not a failure.
fn cc_f4_level2(_: &Suite, _: &VerifyOptions) -> CoreResult<Outcome> {
    let (f4, a1, c3) = (build(LieType::F4)?, build(LieType::A1)?, build(LieType::C3)?);
    let d = fusion::coset_defect((&f4, 2), &[(&a1, 2), (&c3, 2)]);
    let stated = fusion::virasoro_c(9);
    let nearest = (2..200).find(|&m| fusion::virasoro_c(m) == d);
    Ok(Outcome {
        pass: d == stated,
        expected: json!({ "c9": q(&stated), "minimal_model_m": 9 }),
        computed: json!({
            "defect": q(&d),
            "c_total": q(&fusion::central_charge(&f4, 2)),
            "c_parts": [q(&fusion::central_charge(&a1, 2)), q(&fusion::central_charge(&c3, 2))],
            "minimal_model_m": nearest,
        }),
    })
}


//! Cross-checks of the core algorithms against independent oracles.

use liefusion_core::fusion::{self, admissible_set};
use liefusion_core::rational::qi;
use liefusion_core::weights::{self, weyl_orbit};
use liefusion_core::{LieContext, LieType, RootSystem};

mod common;

use common::{boxed, character_product, gt_multiplicities, sl2_fusion, sl2_mult, w};

#[test]
fn freudenthal_matches_sl2_closed_form() {
    let rs = RootSystem::build(LieType::A1).unwrap();
    for m in 0..12 {
        let ws = weights::weight_system(&rs, &w(&[m])).unwrap();
        for mu in -m - 3..=m + 3 {
            assert_eq!(ws.mult(&rs, &w(&[mu])), sl2_mult(m, mu), "m={m} μ={mu}");
        }
    }
}

#[test]
fn freudenthal_matches_gelfand_tsetlin() {
    let rs = RootSystem::build(LieType::new(liefusion_core::Family::A, 2).unwrap()).unwrap();
    for a in 0..=4 {
        for b in 0..=4 {
            let ws = weights::weight_system(&rs, &w(&[a, b])).unwrap();
            assert_eq!(ws.expanded(&rs), gt_multiplicities(a, b), "({a},{b})");
        }
    }
}

#[test]
fn klimyk_matches_character_product() {
    for (t, max) in [("A2", 2), ("B2", 2), ("G2", 1), ("C3", 1)] {
        let ctx = LieContext::new(t.parse().unwrap()).unwrap();
        let rs = ctx.root_system();
        let weights = boxed(rs.rank(), max);
        for lambda in &weights {
            for mu in &weights {
                let d = ctx.decompose(lambda, mu).unwrap();
                assert_eq!(d.components, character_product(rs, lambda, mu), "{t} {lambda} ⊗ {mu}");
            }
        }
    }
}

#[test]
fn kac_walton_matches_sl2_closed_form() {
    let ctx = LieContext::new(LieType::A1).unwrap();
    for k in 1..=6i64 {
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    let n = fusion::fusion_general(&ctx, k as u32, &w(&[a]), &w(&[b]), &w(&[c])).unwrap().value;
                    assert_eq!(n, sl2_fusion(k, a, b, c), "k={k} ({a},{b},{c})");
                }
            }
        }
    }
}

#[test]
fn truncated_rule_matches_kac_walton_for_f4() {
    let ctx = LieContext::new(LieType::F4).unwrap();
    let rs = ctx.root_system();
    let l4 = w(&[0, 0, 0, 1]);
    for l in 1..=3 {
        let adm = admissible_set(rs, l);
        for mu in &adm {
            for nu in &adm {
                let t = fusion::fusion_unit_charge(&ctx, l, &l4, mu, nu).unwrap().value;
                let kw = fusion::fusion_general(&ctx, l, &l4, mu, nu).unwrap().value;
                assert_eq!(t, kw, "l={l} μ={mu} ν={nu}");
            }
        }
    }
}

#[test]
fn fusion_is_symmetric_in_f4() {
    let ctx = LieContext::new(LieType::F4).unwrap();
    let rs = ctx.root_system();
    for l in 1..=2 {
        let adm = admissible_set(rs, l);
        for a in &adm {
            for b in &adm {
                assert_eq!(
                    fusion::fusion_product(&ctx, l, a, b).unwrap(),
                    fusion::fusion_product(&ctx, l, b, a).unwrap()
                );
            }
        }
    }
}

#[test]
fn string_criterion_matches_klimyk() {
    let ctx = LieContext::new(LieType::F4).unwrap();
    let rs = ctx.root_system();
    let l4 = w(&[0, 0, 0, 1]);
    let ws = ctx.weight_system(&l4).unwrap();
    let mut checked = 0;
    for mu in boxed(4, 2) {
        for nu in boxed(4, 2) {
            let d = &nu - &mu;
            if d.is_zero() || ws.mult(rs, &d) == 0 {
                continue;
            }
            let s = fusion::string_criterion(&ctx, &mu, &nu).unwrap();
            assert_eq!(s, ctx.hom_dim(&l4, &mu, &nu).unwrap(), "μ={mu} ν={nu}");
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn dimension_identities() {
    for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let ctx = LieContext::new(t.parse().unwrap()).unwrap();
        let rs = ctx.root_system();
        for lambda in boxed(rs.rank(), 1).into_iter().take(12) {
            let ws = ctx.weight_system(&lambda).unwrap();
            let total: u64 = ws.expanded(rs).values().sum();
            assert_eq!(total, ctx.dim(&lambda).unwrap(), "{t} {lambda}");
            for mu in ws.dominant().keys() {
                let orbit = weyl_orbit(rs, mu);
                assert!(orbit.iter().all(|x| ws.mult(rs, x) == ws.mult(rs, mu)));
            }
        }
    }
}

#[test]
fn casimir_matches_quadratic_formula_for_small_sl2() {
    // (m ω | m ω + 2ρ̄) = m(m+2)/2 with (α|α) = 2.
    let rs = RootSystem::build(LieType::A1).unwrap();
    for m in 0..8 {
        assert_eq!(weights::casimir(&rs, &w(&[m])), qi(m * (m + 2)) / qi(2));
    }
}

//! Tensor product decomposition by Klimyk's ρ̄-shifted reflection rule.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{parity_sign, RootSystem, Weight};
use crate::weights::{self, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub factors: (Weight, Weight),
    #[serde(with = "crate::rootsystem::weight_map")]
    pub components: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, nu: &Weight) -> u64 {
        self.components.get(nu).copied().unwrap_or(0)
    }
}

/// Decomposes `L(ws.highest_weight) ⊗ L(other)` by running over the weights
/// of `ws`.
///
/// Each weight `κ` of multiplicity `m` contributes `det(w)·m` to the
/// component `w(other+κ+ρ̄) − ρ̄`, where `w` moves `other+κ+ρ̄` into the
/// dominant chamber; points on a reflection wall contribute nothing.
pub fn klimyk(rs: &RootSystem, ws: &WeightSystem, other: &Weight) -> Result<BTreeMap<Weight, u64>> {
    if !other.is_dominant() {
        return Err(Error::NotDominant(other.to_string()));
    }
    let rho = rs.weyl_vector();
    let shifted = other + &rho;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, m) in ws.expanded(rs) {
        let x = &shifted + &kappa;
        let (dom, steps) = rs.to_dominant(&x);
        if dom.coords().contains(&0) {
            continue;
        }
        *acc.entry(&dom - &rho).or_insert(0) += parity_sign(steps) * m as i64;
    }
    let mut out = BTreeMap::new();
    for (nu, c) in acc {
        match c {
            0 => {}
            c if c < 0 => {
                return Err(Error::Inconsistent(format!("negative tensor multiplicity {c} at {nu}")))
            }
            c => {
                out.insert(nu, c as u64);
            }
        }
    }
    Ok(out)
}

pub fn decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    // Iterate over the smaller factor's weights.
    let (small, big) = if weights::dim(rs, lambda)? <= weights::dim(rs, mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let ws = weights::weight_system(rs, small)?;
    let components = klimyk(rs, &ws, big)?;
    Ok(Decomposition { factors: (lambda.clone(), mu.clone()), components })
}

/// `dim Hom(L(λ) ⊗ L(μ), L(ν))`.
pub fn hom_dim(rs: &RootSystem, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    if !nu.is_dominant() {
        return Ok(0);
    }
    Ok(decompose(rs, lambda, mu)?.multiplicity(nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::LieType;

    fn w(xs: &[i64]) -> Weight {
        Weight::new(xs.to_vec())
    }

    #[test]
    fn trivial_factor() {
        let rs = RootSystem::build(LieType::F4).unwrap();
        let l = w(&[0, 1, 0, 1]);
        let d = decompose(&rs, &l, &Weight::zero(4)).unwrap();
        assert_eq!(d.components, BTreeMap::from([(l, 1)]));
    }

    #[test]
    fn lambda3_times_lambda4() {
        let rs = RootSystem::build(LieType::F4).unwrap();
        let d = decompose(&rs, &w(&[0, 0, 1, 0]), &w(&[0, 0, 0, 1])).unwrap();
        let expected: BTreeMap<Weight, u64> = [
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 2],
            [1, 0, 0, 1],
            [0, 1, 0, 0],
            [0, 0, 1, 1],
        ]
        .iter()
        .map(|x| (w(x), 1))
        .collect();
        assert_eq!(d.components, expected);
    }

    #[test]
    fn hom_dims() {
        let rs = RootSystem::build(LieType::F4).unwrap();
        let l4 = w(&[0, 0, 0, 1]);
        assert_eq!(hom_dim(&rs, &l4, &l4, &Weight::zero(4)).unwrap(), 1);
        assert_eq!(hom_dim(&rs, &l4, &l4, &w(&[1, 0, 0, 1])).unwrap(), 0);
        assert_eq!(hom_dim(&rs, &w(&[0, 0, 1, 0]), &w(&[0, 0, 1, 0]), &w(&[0, 1, 0, 1])).unwrap(), 1);
        assert!(decompose(&rs, &w(&[0, 0, -1, 0]), &l4).is_err());
    }
}

//! Weight systems of irreducible highest-weight modules.
//!
//! Multiplicities come from Freudenthal's recursion over the dominant
//! weights, processed by increasing depth below the highest weight. Only
//! dominant multiplicities are stored; any other weight is looked up through
//! its dominant representative.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::rootsystem::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSystem {
    highest_weight: Weight,
    /// Multiplicities of the dominant weights only.
    #[serde(with = "crate::rootsystem::weight_map")]
    dominant: BTreeMap<Weight, u64>,
    /// Orbit sizes of the dominant weights.
    #[serde(with = "crate::rootsystem::weight_map")]
    orbit_sizes: BTreeMap<Weight, u64>,
    total_dim: u64,
}

impl WeightSystem {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn total_dim(&self) -> u64 {
        self.total_dim
    }

    pub fn dominant(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    pub fn orbit_sizes(&self) -> &BTreeMap<Weight, u64> {
        &self.orbit_sizes
    }

    /// Number of distinct weights (orbit-expanded).
    pub fn num_weights(&self) -> u64 {
        self.orbit_sizes.values().sum()
    }

    /// Multiplicity of an arbitrary weight.
    pub fn mult(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        let (dom, _) = rs.to_dominant(mu);
        self.dominant.get(&dom).copied().unwrap_or(0)
    }

    /// Every weight with its multiplicity.
    pub fn expanded(&self, rs: &RootSystem) -> BTreeMap<Weight, u64> {
        let mut out = BTreeMap::new();
        for (mu, &m) in &self.dominant {
            for w in weyl_orbit(rs, mu) {
                out.insert(w, m);
            }
        }
        out
    }
}

/// Dominant weights `μ ≤ λ`, each with its depth (height of `λ − μ`).
///
/// Uses the fact that the dominant weights below `λ` are connected to `λ`
/// by chains of positive-root subtractions that stay dominant.
fn dominant_below(rs: &RootSystem, lambda: &Weight) -> Vec<(Weight, i64)> {
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(lambda.clone(), 0);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for root in rs.positive_roots() {
            let next = &mu - &root.weight;
            if next.is_dominant() && !depth.contains_key(&next) {
                depth.insert(next.clone(), d + root.height);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<_> = depth.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

pub fn weight_system(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem> {
    check_dominant(rs, lambda)?;
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let top = rs.scaled_inner(&lr, &lr);

    let mut dominant: BTreeMap<Weight, u64> = BTreeMap::new();
    dominant.insert(lambda.clone(), 1);
    let lookup = |dominant: &BTreeMap<Weight, u64>, w: &Weight| -> u64 {
        let (dom, _) = rs.to_dominant(w);
        dominant.get(&dom).copied().unwrap_or(0)
    };

    for (mu, _) in dominant_below(rs, lambda).into_iter().skip(1) {
        let mr = &mu + &rho;
        let denom = top - rs.scaled_inner(&mr, &mr);
        if denom <= 0 {
            return Err(Error::Inconsistent(format!("Freudenthal denominator {denom} at {mu}")));
        }
        let mut numer: i128 = 0;
        for root in rs.positive_roots() {
            let mut w = &mu + &root.weight;
            loop {
                let m = lookup(&dominant, &w);
                if m == 0 {
                    break;
                }
                numer += 2 * m as i128 * rs.scaled_inner(&w, &root.weight) as i128;
                w += &root.weight;
            }
        }
        if numer % denom as i128 != 0 {
            return Err(Error::Inconsistent(format!("non-integral multiplicity at {mu}")));
        }
        let m = numer / denom as i128;
        if m > 0 {
            dominant.insert(mu, u64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))?);
        }
    }

    let mut orbit_sizes = BTreeMap::new();
    let mut total: u64 = 0;
    for (mu, &m) in &dominant {
        let size = weyl_orbit(rs, mu).len() as u64;
        orbit_sizes.insert(mu.clone(), size);
        total = total
            .checked_add(size.checked_mul(m).ok_or(Error::Overflow("dimension"))?)
            .ok_or(Error::Overflow("dimension"))?;
    }
    Ok(WeightSystem { highest_weight: lambda.clone(), dominant, orbit_sizes, total_dim: total })
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ̄|α)/(ρ̄|α)`.
pub fn dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    check_dominant(rs, lambda)?;
    let rho = rs.weyl_vector();
    let lr = lambda + &rho;
    let mut prod = Rational::one();
    for root in rs.positive_roots() {
        prod *= Rational::new(
            BigInt::from(rs.scaled_inner(&lr, &root.weight)),
            BigInt::from(rs.scaled_inner(&rho, &root.weight)),
        );
    }
    if !prod.is_integer() {
        return Err(Error::Inconsistent(format!("Weyl dimension of {lambda} is {prod}")));
    }
    prod.to_integer().to_u64().ok_or(Error::Overflow("dimension"))
}

pub fn multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    let ws = weight_system(rs, lambda)?;
    if mu.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: mu.rank() });
    }
    Ok(ws.mult(rs, mu))
}

/// The Weyl orbit of `mu`, by closure under the simple reflections.
pub fn weyl_orbit(rs: &RootSystem, mu: &Weight) -> BTreeSet<Weight> {
    let (start, _) = rs.to_dominant(mu);
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(w) = stack.pop() {
        for i in 0..rs.rank() {
            // From the dominant element, descending reflections reach every
            // orbit element.
            if w[i] > 0 {
                let next = rs.simple_reflection(i, &w);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Casimir number `(λ|λ+2ρ̄)`.
pub fn casimir(rs: &RootSystem, lambda: &Weight) -> Rational {
    let two_rho = 2 * &rs.weyl_vector();
    rs.inner_weights(lambda, &(lambda + &two_rho))
}

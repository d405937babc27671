//! Kernel-side subspaces of weight spaces and the zero-weight computations
//! of the 26-dimensional F4 module.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::module::ExplicitModule;
use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, Vector};
use crate::rational::Rational;
use crate::rootsystem::{LieType, OrthoVec, RootSystem, Weight};

/// A subspace of one weight space, in local (weight-space) coordinates.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub weight: Weight,
    pub ambient_dim: usize,
    pub spanning: Vec<Vector>,
    basis: EchelonBasis,
}

impl Subspace {
    fn new(weight: Weight, ambient_dim: usize) -> Self {
        Subspace { weight, ambient_dim, spanning: Vec::new(), basis: EchelonBasis::new() }
    }

    fn push(&mut self, v: Vector) {
        self.basis.insert(&v);
        self.spanning.push(v);
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.basis.contains(v)
    }

    pub fn corank(&self) -> usize {
        self.ambient_dim - self.rank()
    }
}

/// The span of `F_i^{n_i+1} u` over simple roots `α_i` (with `n_i` the i-th
/// label of `μ`) and basis vectors `u` of weight `ν − μ + (n_i+1)α_i`, inside
/// the weight space `ν − μ` of the module of highest weight `λ`.
pub fn kspace(rs: &RootSystem, m: &ExplicitModule, mu: &Weight, nu: &Weight) -> Result<Subspace> {
    for w in [mu, nu] {
        if w.rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.rank() });
        }
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
    }
    let target = nu - mu;
    let mut k = Subspace::new(target.clone(), m.weight_space_dim(&target));
    if k.ambient_dim == 0 {
        return Ok(k);
    }
    for i in 0..rs.rank() {
        let power = mu[i] + 1;
        let src = &target + &(power * &rs.simple_root_weight(i));
        for idx in 0..m.weight_space_dim(&src) {
            let mut v = m.basis_vector(&src, idx).expect("index in range");
            for _ in 0..power {
                v = m.apply(m.simple_lowering(i), &v);
            }
            k.push(m.restrict(&v, &target));
        }
    }
    Ok(k)
}

/// `dim L(λ)[ν−μ] − rank K`, the fusion coefficient predicted by the kernel
/// description.
pub fn fusion_via_kspace(rs: &RootSystem, m: &ExplicitModule, mu: &Weight, nu: &Weight) -> Result<u64> {
    let k = kspace(rs, m, mu, nu)?;
    Ok(k.corank() as u64)
}

/// True iff some basis vector `u` of weight `η` has `E_α u` outside
/// `kspace(μ0, ν0)`. Requires `η + α = ν0 − μ0`.
pub fn raising_escapes_kspace(
    rs: &RootSystem,
    m: &ExplicitModule,
    mu0: &Weight,
    nu0: &Weight,
    alpha: &Weight,
    eta: &Weight,
) -> Result<bool> {
    if !rs.is_positive_root(alpha) {
        return Err(Error::NotPositiveRoot(alpha.to_string(), rs.lie_type()));
    }
    let target = nu0 - mu0;
    if (eta + alpha) != target {
        return Err(Error::Precondition(format!("η + α = {} differs from ν0 − μ0 = {target}", eta + alpha)));
    }
    let k = kspace(rs, m, mu0, nu0)?;
    let e = m.raising(alpha).expect("positive root");
    for idx in 0..m.weight_space_dim(eta) {
        let u = m.basis_vector(eta, idx).expect("index in range");
        let w = m.restrict(&m.apply(e, &u), &target);
        if !k.contains(&w) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn require_f4_lambda4(rs: &RootSystem, m: &ExplicitModule, what: &'static str) -> Result<()> {
    if rs.lie_type() != LieType::F4 {
        return Err(Error::RequiresF4(what));
    }
    if m.highest_weight() != &Weight::fundamental(4, 3) {
        return Err(Error::Precondition(format!("{what} needs the module (0001), got {}", m.highest_weight())));
    }
    Ok(())
}

fn root_from_ortho(rs: &RootSystem, v: OrthoVec) -> Result<Weight> {
    let w = rs.from_orthogonal(&v)?;
    if !rs.is_root(&w) {
        return Err(Error::NotARoot(v.to_string(), rs.lie_type()));
    }
    Ok(w)
}

fn gram2(m: &ExplicitModule, a: &[Rational], b: &[Rational]) -> Rational {
    let g = vec![vec![m.inner(a, a), m.inner(a, b)], vec![m.inner(b, a), m.inner(b, b)]];
    linalg::determinant(&g)
}

/// The three spanning candidates of the zero-weight space of the
/// 26-dimensional F4 module, with their pairwise Gram determinants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroWeightReport {
    pub zero_weight_dim: usize,
    /// `F_{ρ3} v_{ρ3}`, `F_{ρ4} v_{ρ4}`, `F_{ρ5} v_{ρ5}` in zero-weight coordinates.
    pub x3: Vector,
    pub x4: Vector,
    pub x5: Vector,
    pub gram_det_34: Rational,
    pub gram_det_35: Rational,
    pub gram_det_45: Rational,
    /// Rank of `{x3, x4, x5}`.
    pub joint_rank: usize,
    /// `⟨x3|x5⟩² / (‖x3‖²‖x5‖²)`.
    pub cos2_35: Rational,
}

/// `ρ3 = α_3`, `ρ4 = α_4`, `ρ5 = ½[−1,1,1,−1]`; `v_{ρ3} = F_α v` and
/// `v_{ρ4} = F_β v` with `α = [1,0,0,−1]`, `β = ½[1,1,1,1]`, and `v_{ρ5}` the
/// first basis vector of its (one-dimensional) weight space.
pub fn zero_weight_report(rs: &RootSystem, m: &ExplicitModule) -> Result<ZeroWeightReport> {
    require_f4_lambda4(rs, m, "zero_weight_report")?;
    let (rho3, rho4) = (rs.simple_root_weight(2), rs.simple_root_weight(3));
    let rho5 = root_from_ortho(rs, OrthoVec::scaled(1, 2, &[-1, 1, 1, -1]))?;
    let alpha = root_from_ortho(rs, OrthoVec::from_ints(&[1, 0, 0, -1]))?;
    let beta = root_from_ortho(rs, OrthoVec::scaled(1, 2, &[1, 1, 1, 1]))?;
    let v = m.highest_vector();
    let lower = |root: &Weight, x: &[Rational]| m.apply(m.lowering(root).expect("root"), x);
    let v3 = lower(&alpha, &v);
    let v4 = lower(&beta, &v);
    let v5 = m
        .basis_vector(&rho5, 0)
        .ok_or_else(|| Error::Inconsistent(format!("{rho5} is not a weight of (0001)")))?;
    let zero = Weight::zero(4);
    let x3 = m.restrict(&lower(&rho3, &v3), &zero);
    let x4 = m.restrict(&lower(&rho4, &v4), &zero);
    let x5 = m.restrict(&lower(&rho5, &v5), &zero);
    for (name, x) in [("F_ρ3 v_ρ3", &x3), ("F_ρ4 v_ρ4", &x4), ("F_ρ5 v_ρ5", &x5)] {
        if x.iter().all(Zero::is_zero) {
            return Err(Error::Inconsistent(format!("{name} vanishes")));
        }
    }
    let embed = |x: &Vector| {
        let mut g = m.zero_vector();
        let r = m.weight_space(&zero);
        g[r].clone_from_slice(x);
        g
    };
    let (g3, g4, g5) = (embed(&x3), embed(&x4), embed(&x5));
    let ip35 = m.inner(&g3, &g5);
    let cos2_35 = &ip35 * &ip35 / (m.inner(&g3, &g3) * m.inner(&g5, &g5));
    Ok(ZeroWeightReport {
        zero_weight_dim: m.weight_space_dim(&zero),
        gram_det_34: gram2(m, &g3, &g4),
        gram_det_35: gram2(m, &g3, &g5),
        gram_det_45: gram2(m, &g4, &g5),
        joint_rank: linalg::rank(&[x3.clone(), x4.clone(), x5.clone()]),
        cos2_35,
        x3,
        x4,
        x5,
    })
}

/// Norms and cross pairing of `F_{ρ3}F_α v` and `F_{ρ4}F_β v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    pub norm3: Rational,
    pub norm4: Rational,
    pub cross_abs: Rational,
}

pub fn pairing_report(rs: &RootSystem, m: &ExplicitModule) -> Result<PairingReport> {
    let z = zero_weight_report(rs, m)?;
    let zero = Weight::zero(4);
    let g = m.gram_diagonal(&zero);
    let ip = |a: &Vector, b: &Vector| -> Rational {
        g.iter().zip(a).zip(b).map(|((w, x), y)| w * x * y).sum()
    };
    Ok(PairingReport { norm3: ip(&z.x3, &z.x3), norm4: ip(&z.x4, &z.x4), cross_abs: ip(&z.x3, &z.x4).abs() })
}

//! Explicit irreducible modules with exact raising/lowering matrices.
//!
//! The module is built weight by weight, from the highest weight down. Each
//! weight space is spanned by vectors `F_i b` with `b` a basis vector one
//! step higher; the contravariant form on these candidates is computed from
//! `⟨F_i b, F_j b'⟩ = ⟨b, E_i F_j b'⟩` and `E_i F_j = F_j E_i + δ_ij H_i`,
//! and an orthogonal basis is extracted by Gram–Schmidt. The radical of the
//! Verma module is thereby quotiented out, leaving the irreducible module.

use std::collections::HashMap;
use std::ops::Range;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::blockop::{BlockOp, DenseBlock};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rational::{qi, Rational};
use crate::rootsystem::{LieType, RootSystem, Weight};
use crate::weights::WeightSystem;

/// Modules larger than this are refused unless a larger cap is passed.
pub const DEFAULT_DIMENSION_CAP: u64 = 400;

/// The serializable part of an [`ExplicitModule`]; operators for non-simple
/// roots are rederived on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSkeleton {
    pub lie_type: LieType,
    pub highest_weight: Weight,
    pub weights: Vec<Weight>,
    /// Diagonal of the contravariant form, per weight space.
    pub gram: Vec<Vec<Rational>>,
    pub raising: Vec<BlockOp>,
    pub lowering: Vec<BlockOp>,
}

#[derive(Debug, Clone)]
pub struct ExplicitModule {
    skeleton: ModuleSkeleton,
    index: HashMap<Weight, usize>,
    offsets: Vec<usize>,
    dim: usize,
    /// `E_γ`, `F_γ` for every positive root in canonical order.
    root_raising: Vec<BlockOp>,
    root_lowering: Vec<BlockOp>,
    root_lookup: HashMap<Weight, usize>,
}

pub fn build_module(rs: &RootSystem, ws: &WeightSystem) -> Result<ExplicitModule> {
    build_module_with(rs, ws, DEFAULT_DIMENSION_CAP)
}

pub fn build_module_with(rs: &RootSystem, ws: &WeightSystem, cap: u64) -> Result<ExplicitModule> {
    if ws.total_dim() > cap {
        return Err(Error::DimensionCap { dim: ws.total_dim(), cap });
    }
    let n = rs.rank();
    let lambda = ws.highest_weight().clone();
    let mut ordered: Vec<(i64, Weight, u64)> = ws
        .expanded(rs)
        .into_iter()
        .map(|(mu, m)| {
            let depth = rs
                .simple_coords(&(&lambda - &mu))
                .map(|c| c.iter().sum::<i64>())
                .unwrap_or(i64::MAX);
            (depth, mu, m)
        })
        .collect();
    ordered.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let weights: Vec<Weight> = ordered.iter().map(|(_, w, _)| w.clone()).collect();
    let index: HashMap<Weight, usize> = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let simple: Vec<Weight> = (0..n).map(|i| rs.simple_root_weight(i)).collect();

    let mut raising: Vec<BlockOp> = simple.iter().map(|a| BlockOp::new(a.clone())).collect();
    let mut lowering: Vec<BlockOp> = simple.iter().map(|a| BlockOp::new(-a)).collect();
    let mut gram: Vec<Vec<Rational>> = Vec::with_capacity(weights.len());
    let mut dims: Vec<usize> = Vec::with_capacity(weights.len());

    for (b, (_, mu, mult)) in ordered.iter().enumerate() {
        if b == 0 {
            gram.push(vec![Rational::one()]);
            dims.push(1);
            continue;
        }
        let up: Vec<Option<usize>> = simple.iter().map(|a| index.get(&(mu + a)).copied()).collect();

        // Candidates F_i b_k, with their E_j images in the weight spaces above.
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for (i, src) in up.iter().enumerate() {
            if let Some(src) = *src {
                cands.extend((0..dims[src]).map(|k| (i, src, k)));
            }
        }
        let images: Vec<Vec<Option<Vector>>> = cands
            .iter()
            .map(|&(i, src, k)| {
                (0..n)
                    .map(|j| {
                        let tj = up[j]?;
                        let mut y = vec![Rational::zero(); dims[tj]];
                        if let Some((mid, eb)) = raising[j].blocks.get(&src) {
                            let x = eb.column(k);
                            if let Some((tgt, fb)) = lowering[i].blocks.get(mid) {
                                debug_assert_eq!(*tgt, tj);
                                y = fb.mul_vec(&x);
                            }
                        }
                        if i == j {
                            y[k] += qi(weights[src][i]);
                        }
                        Some(y)
                    })
                    .collect()
            })
            .collect();
        let m = cands.len();
        let mut g = vec![vec![Rational::zero(); m]; m];
        for (c, &(i, src, k)) in cands.iter().enumerate() {
            for c2 in 0..m {
                let img = images[c2][i].as_ref().expect("source block lies above");
                g[c][c2] = &gram[src][k] * &img[k];
            }
        }
        for c in 0..m {
            for c2 in 0..c {
                if g[c][c2] != g[c2][c] {
                    return Err(Error::Inconsistent(format!("contravariant form not symmetric at weight {mu}")));
                }
            }
        }

        // Gram–Schmidt; `gu[t] = G u_t` gives ⟨u_t, e_c⟩ = gu[t][c].
        let mut basis: Vec<Vector> = Vec::new();
        let mut gu: Vec<Vector> = Vec::new();
        let mut norms: Vec<Rational> = Vec::new();
        for c in 0..m {
            let mut v = vec![Rational::zero(); m];
            v[c] = Rational::one();
            for t in 0..basis.len() {
                let coef = &gu[t][c] / &norms[t];
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&basis[t]) {
                    if !y.is_zero() {
                        *x -= &coef * y;
                    }
                }
            }
            let gv: Vector = g
                .iter()
                .map(|row| row.iter().zip(&v).filter(|(_, y)| !y.is_zero()).map(|(a, y)| a * y).sum())
                .collect();
            let norm: Rational = v.iter().zip(&gv).map(|(a, b)| a * b).sum();
            if norm.is_zero() {
                continue;
            }
            if norm.is_negative() {
                return Err(Error::Inconsistent(format!("contravariant form not positive at weight {mu}")));
            }
            basis.push(v);
            gu.push(gv);
            norms.push(norm);
        }
        if basis.len() as u64 != *mult {
            return Err(Error::Inconsistent(format!(
                "weight {mu}: constructed dimension {} but multiplicity {mult}",
                basis.len()
            )));
        }
        let d = basis.len();

        for j in 0..n {
            let Some(tj) = up[j] else { continue };
            let cols: Vec<Vector> = basis
                .iter()
                .map(|u| {
                    let mut col = vec![Rational::zero(); dims[tj]];
                    for (c, coef) in u.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let img = images[c][j].as_ref().expect("present");
                        for (x, y) in col.iter_mut().zip(img) {
                            *x += coef * y;
                        }
                    }
                    col
                })
                .collect();
            let blk = DenseBlock::from_columns(dims[tj], &cols);
            if !blk.is_zero() {
                raising[j].blocks.insert(b, (tj, blk));
            }
        }
        for (i, src) in up.iter().enumerate() {
            let Some(src) = *src else { continue };
            let mut blk = DenseBlock::zeros(d, dims[src]);
            for (c, &(ci, _, k)) in cands.iter().enumerate() {
                if ci != i {
                    continue;
                }
                for t in 0..d {
                    blk.set(t, k, &gu[t][c] / &norms[t]);
                }
            }
            if !blk.is_zero() {
                lowering[i].blocks.insert(src, (b, blk));
            }
        }
        gram.push(norms);
        dims.push(d);
    }

    ExplicitModule::from_skeleton(
        rs,
        ModuleSkeleton { lie_type: rs.lie_type(), highest_weight: lambda, weights, gram, raising, lowering },
    )
}

/// Operators for the non-simple positive roots: with `α_i` the first simple
/// root such that `β = γ − α_i` is a root and `p` the largest `k` with
/// `β − kα_i` a root, `E_γ = [E_i, E_β]/(p+1)` and `F_γ = [F_β, F_i]/(p+1)`.
fn derive_root_ops(rs: &RootSystem, raising: &[BlockOp], lowering: &[BlockOp]) -> (Vec<BlockOp>, Vec<BlockOp>) {
    let mut e: Vec<BlockOp> = Vec::with_capacity(rs.num_positive_roots());
    let mut f: Vec<BlockOp> = Vec::with_capacity(rs.num_positive_roots());
    for root in rs.positive_roots() {
        if root.height == 1 {
            let i = root.simple_coords.iter().position(|&c| c == 1).expect("simple root");
            e.push(raising[i].clone());
            f.push(lowering[i].clone());
            continue;
        }
        let (i, beta) = (0..rs.rank())
            .filter(|&i| root.simple_coords[i] > 0)
            .find_map(|i| {
                let beta = &root.weight - &rs.simple_root_weight(i);
                rs.find_root(&beta).filter(|r| r.positive).map(|r| (i, r.index))
            })
            .expect("every non-simple positive root has a simple predecessor");
        let ai = rs.simple_root_weight(i);
        let mut p = 0;
        let mut w = &rs.positive_roots()[beta].weight - &ai;
        while rs.is_root(&w) {
            p += 1;
            w = &w - &ai;
        }
        let s = Rational::new(1.into(), (p + 1).into());
        e.push(raising[i].commutator(&e[beta]).scale(&s));
        f.push(f[beta].commutator(&lowering[i]).scale(&s));
    }
    (e, f)
}

impl ExplicitModule {
    pub fn from_skeleton(rs: &RootSystem, skeleton: ModuleSkeleton) -> Result<Self> {
        let n = rs.rank();
        if skeleton.lie_type != rs.lie_type() {
            return Err(Error::Precondition(format!(
                "module for {} used with {}",
                skeleton.lie_type,
                rs.lie_type()
            )));
        }
        if skeleton.weights.len() != skeleton.gram.len()
            || skeleton.raising.len() != n
            || skeleton.lowering.len() != n
            || skeleton.weights.first() != Some(&skeleton.highest_weight)
        {
            return Err(Error::Inconsistent("malformed module skeleton".into()));
        }
        let index: HashMap<Weight, usize> =
            skeleton.weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut offsets = Vec::with_capacity(skeleton.gram.len());
        let mut dim = 0;
        for g in &skeleton.gram {
            offsets.push(dim);
            dim += g.len();
        }
        let (root_raising, root_lowering) = derive_root_ops(rs, &skeleton.raising, &skeleton.lowering);
        let root_lookup = rs.positive_roots().iter().enumerate().map(|(i, r)| (r.weight.clone(), i)).collect();
        Ok(ExplicitModule { skeleton, index, offsets, dim, root_raising, root_lowering, root_lookup })
    }

    pub fn skeleton(&self) -> ModuleSkeleton {
        self.skeleton.clone()
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.skeleton.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weights in construction order (by depth below the highest weight).
    pub fn weights(&self) -> &[Weight] {
        &self.skeleton.weights
    }

    pub fn block_index(&self, mu: &Weight) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn weight_space_dim(&self, mu: &Weight) -> usize {
        self.block_index(mu).map_or(0, |b| self.skeleton.gram[b].len())
    }

    /// Global coordinate range of the weight space of `mu` (empty if absent).
    pub fn weight_space(&self, mu: &Weight) -> Range<usize> {
        match self.block_index(mu) {
            Some(b) => self.offsets[b]..self.offsets[b] + self.skeleton.gram[b].len(),
            None => 0..0,
        }
    }

    /// Squared norms of the orthogonal basis of a weight space.
    pub fn gram_diagonal(&self, mu: &Weight) -> &[Rational] {
        self.block_index(mu).map_or(&[], |b| &self.skeleton.gram[b])
    }

    pub fn simple_raising(&self, i: usize) -> &BlockOp {
        &self.skeleton.raising[i]
    }

    pub fn simple_lowering(&self, i: usize) -> &BlockOp {
        &self.skeleton.lowering[i]
    }

    /// `E_γ` for any root `γ`; for negative `γ` this is `F_{−γ}`.
    pub fn raising(&self, root: &Weight) -> Option<&BlockOp> {
        if let Some(&i) = self.root_lookup.get(root) {
            return Some(&self.root_raising[i]);
        }
        self.root_lookup.get(&-root).map(|&i| &self.root_lowering[i])
    }

    /// `F_γ`, the adjoint of `E_γ`.
    pub fn lowering(&self, root: &Weight) -> Option<&BlockOp> {
        self.raising(&-root)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Rational::zero(); self.dim]
    }

    /// The highest-weight vector, of norm 1.
    pub fn highest_vector(&self) -> Vector {
        let mut v = self.zero_vector();
        v[0] = Rational::one();
        v
    }

    /// The `k`-th orthogonal basis vector of the weight space of `mu`.
    pub fn basis_vector(&self, mu: &Weight, k: usize) -> Option<Vector> {
        let r = self.weight_space(mu);
        if k >= r.len() {
            return None;
        }
        let mut v = self.zero_vector();
        v[r.start + k] = Rational::one();
        Some(v)
    }

    pub fn apply(&self, op: &BlockOp, v: &[Rational]) -> Vector {
        let mut out = self.zero_vector();
        for (&src, (tgt, m)) in &op.blocks {
            let (s0, t0) = (self.offsets[src], self.offsets[*tgt]);
            let local = &v[s0..s0 + m.cols];
            if local.iter().all(Zero::is_zero) {
                continue;
            }
            for (k, x) in m.mul_vec(local).into_iter().enumerate() {
                out[t0 + k] += x;
            }
        }
        out
    }

    /// The contravariant (Shapovalov) form.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (b, g) in self.skeleton.gram.iter().enumerate() {
            let o = self.offsets[b];
            for (k, gk) in g.iter().enumerate() {
                let (x, y) = (&u[o + k], &v[o + k]);
                if !x.is_zero() && !y.is_zero() {
                    s += gk * x * y;
                }
            }
        }
        s
    }

    /// Coordinates of `v` inside the weight space of `mu`.
    pub fn restrict(&self, v: &[Rational], mu: &Weight) -> Vector {
        v[self.weight_space(mu)].to_vec()
    }

    /// Checks `⟨E_γ u, w⟩ = ⟨u, F_γ w⟩` on basis vectors for every root.
    pub fn check_adjointness(&self, rs: &RootSystem) -> Result<()> {
        for root in rs.positive_roots() {
            let e = self.raising(&root.weight).expect("positive root");
            let f = self.lowering(&root.weight).expect("positive root");
            for (&src, (tgt, m)) in &e.blocks {
                let fb = f.blocks.get(tgt).map(|(_, b)| b);
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        let lhs = &self.skeleton.gram[*tgt][r] * m.get(r, c);
                        let rhs = fb.map_or(Rational::zero(), |b| &self.skeleton.gram[src][c] * b.get(c, r));
                        if lhs != rhs {
                            return Err(Error::Inconsistent(format!(
                                "E/F not adjoint for root {} at {}",
                                root.weight, self.skeleton.weights[src]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates the quadratic Casimir on every basis vector and returns the
    /// scalar it acts by, or an error if it is not scalar.
    pub fn casimir_eigenvalue(&self, rs: &RootSystem) -> Result<Rational> {
        let n = rs.rank();
        // (α_i^∨|α_j^∨) and its inverse give the dual basis of the Cartan part.
        let coroot_gram: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (ai, aj) = (&rs.positive_roots()[i], &rs.positive_roots()[j]);
                        qi(4) * rs.inner_weights(&ai.weight, &aj.weight) / (&ai.norm * &aj.norm)
                    })
                    .collect()
            })
            .collect();
        let inv = crate::linalg::inverse(&coroot_gram).ok_or_else(|| Error::Inconsistent("singular coroot form".into()))?;
        let h: Vec<BlockOp> = (0..n).map(|i| self.simple_raising(i).commutator(self.simple_lowering(i))).collect();
        let mut value: Option<Rational> = None;
        for idx in 0..self.dim {
            let mut v = self.zero_vector();
            v[idx] = Rational::one();
            let mut acc = self.zero_vector();
            let hv: Vec<Vector> = h.iter().map(|op| self.apply(op, &v)).collect();
            for i in 0..n {
                for j in 0..n {
                    if inv[i][j].is_zero() {
                        continue;
                    }
                    let hhv = self.apply(&h[i], &hv[j]);
                    for (a, x) in acc.iter_mut().zip(hhv) {
                        *a += &inv[i][j] * x;
                    }
                }
            }
            for root in rs.positive_roots() {
                let e = self.raising(&root.weight).expect("root");
                let f = self.lowering(&root.weight).expect("root");
                let w = &root.norm / qi(2);
                let t = self.apply(e, &self.apply(f, &v));
                let u = self.apply(f, &self.apply(e, &v));
                for ((a, x), y) in acc.iter_mut().zip(t).zip(u) {
                    *a += &w * (x + y);
                }
            }
            let c = acc[idx].clone();
            if acc.iter().enumerate().any(|(k, x)| k != idx && !x.is_zero()) {
                return Err(Error::Inconsistent("Casimir is not diagonal".into()));
            }
            match &value {
                None => value = Some(c),
                Some(prev) if *prev != c => return Err(Error::Inconsistent("Casimir is not scalar".into())),
                _ => {}
            }
        }
        value.ok_or_else(|| Error::Inconsistent("empty module".into()))
    }
}

//! Chevalley basis of the Lie algebra itself, read off the adjoint module.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::module::ExplicitModule;
use crate::error::{Error, Result};
use crate::rational::{qi, to_i64};
use crate::rootsystem::{LieType, RootSystem, Weight};

/// Basis `{E_α : α root} ∪ {H_i}` with integer structure constants.
///
/// Element indices: the positive roots in canonical order, then their
/// negatives in the same order, then the simple coroots `H_1..H_n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChevalleyBasis {
    lie_type: LieType,
    rank: usize,
    roots: Vec<Weight>,
    /// `coroots[r]` expresses `H_α = [E_α, E_{−α}]` in the simple coroots.
    coroots: Vec<Vec<i64>>,
    /// `N_{α,β}` keyed by root indices, for `α + β` a root.
    structure: BTreeMap<(usize, usize), i64>,
    /// `p + 1` where `p` is the largest `k` with `β − kα` a root.
    string_bound: BTreeMap<(usize, usize), i64>,
}

pub type LieVector = BTreeMap<usize, i64>;

pub fn chevalley_basis_from_adjoint(rs: &RootSystem, adjoint: &ExplicitModule) -> Result<ChevalleyBasis> {
    if adjoint.highest_weight() != &rs.highest_root().weight {
        return Err(Error::Precondition(format!(
            "structure constants need the adjoint module, got highest weight {}",
            adjoint.highest_weight()
        )));
    }
    let n = rs.rank();
    let mut roots: Vec<Weight> = rs.positive_roots().iter().map(|r| r.weight.clone()).collect();
    roots.extend(rs.positive_roots().iter().map(|r| -&r.weight));
    let lookup: HashMap<Weight, usize> = roots.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let simple_norms: Vec<_> = (0..n).map(|i| rs.positive_roots()[i].norm.clone()).collect();
    let coroots = roots
        .iter()
        .map(|w| {
            let r = rs.find_root(w).expect("root");
            let norm = &rs.positive_roots()[r.index].norm;
            let coords = rs.simple_coords(w).expect("roots lie in the root lattice");
            coords
                .iter()
                .zip(&simple_norms)
                .map(|(&c, sn)| to_i64(&(qi(c) * sn / norm)).expect("coroot coefficients are integers"))
                .collect()
        })
        .collect();

    let mut structure = BTreeMap::new();
    let mut string_bound = BTreeMap::new();
    for (a, wa) in roots.iter().enumerate() {
        let ea = adjoint.raising(wa).expect("root operator");
        for (b, wb) in roots.iter().enumerate() {
            let sum = wa + wb;
            let Some(&c) = lookup.get(&sum) else { continue };
            let eb = adjoint.raising(wb).expect("root operator");
            let ec = adjoint.raising(&roots[c]).expect("root operator");
            let bracket = ea.commutator(eb);
            let s = bracket
                .ratio_to(ec)
                .and_then(|s| to_i64(&s))
                .ok_or_else(|| Error::Inconsistent(format!("[E_{wa}, E_{wb}] is not an integer multiple of E_{sum}")))?;
            let mut p = 0;
            let mut w = wb - wa;
            while rs.is_root(&w) {
                p += 1;
                w = &w - wa;
            }
            structure.insert((a, b), s);
            string_bound.insert((a, b), p + 1);
        }
    }
    Ok(ChevalleyBasis { lie_type: rs.lie_type(), rank: n, roots, coroots, structure, string_bound })
}

impl ChevalleyBasis {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn root_index(&self, w: &Weight) -> Option<usize> {
        self.roots.iter().position(|r| r == w)
    }

    /// `N_{α,β}` with `[E_α, E_β] = N_{α,β} E_{α+β}`; `None` unless `α+β` is a root.
    pub fn structure_constant(&self, alpha: &Weight, beta: &Weight) -> Option<i64> {
        let a = self.root_index(alpha)?;
        let b = self.root_index(beta)?;
        self.structure.get(&(a, b)).copied()
    }

    pub fn num_structure_constants(&self) -> usize {
        self.structure.len()
    }

    pub fn element_name(&self, i: usize) -> String {
        if i < self.roots.len() {
            format!("E{}", self.roots[i])
        } else {
            format!("H{}", i - self.roots.len() + 1)
        }
    }

    fn cartan_index(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.roots.len())
    }

    /// Lie bracket of two basis elements.
    pub fn bracket(&self, x: usize, y: usize) -> LieVector {
        let mut out = LieVector::new();
        match (self.cartan_index(x), self.cartan_index(y)) {
            (Some(_), Some(_)) => {}
            (Some(i), None) => {
                let c = self.roots[y][i];
                if c != 0 {
                    out.insert(y, c);
                }
            }
            (None, Some(j)) => {
                let c = -self.roots[x][j];
                if c != 0 {
                    out.insert(x, c);
                }
            }
            (None, None) => {
                let sum = &self.roots[x] + &self.roots[y];
                if sum.is_zero() {
                    for (i, &c) in self.coroots[x].iter().enumerate() {
                        if c != 0 {
                            out.insert(self.roots.len() + i, c);
                        }
                    }
                } else if let Some(&n) = self.structure.get(&(x, y)) {
                    let z = self.root_index(&sum).expect("structure constants only for root sums");
                    out.insert(z, n);
                }
            }
        }
        out
    }

    pub fn bracket_vec(&self, x: &LieVector, y: &LieVector) -> LieVector {
        let mut out = LieVector::new();
        for (&i, &a) in x {
            for (&j, &b) in y {
                for (k, c) in self.bracket(i, j) {
                    *out.entry(k).or_insert(0) += a * b * c;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// `N_{α,β} = −N_{β,α}` and `|N_{α,β}| = p + 1`.
    pub fn check_structure_constants(&self) -> Result<()> {
        for (&(a, b), &n) in &self.structure {
            if self.structure.get(&(b, a)) != Some(&-n) {
                return Err(Error::Inconsistent(format!(
                    "N not antisymmetric for {} and {}",
                    self.roots[a], self.roots[b]
                )));
            }
            if n.abs() != self.string_bound[&(a, b)] {
                return Err(Error::Inconsistent(format!(
                    "|N| = {} but p + 1 = {} for {} and {}",
                    n.abs(),
                    self.string_bound[&(a, b)],
                    self.roots[a],
                    self.roots[b]
                )));
            }
        }
        Ok(())
    }

    /// Jacobi identity on every triple of basis elements.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        let unit = |i: usize| LieVector::from([(i, 1)]);
        for x in 0..d {
            for y in x + 1..d {
                let xy = self.bracket_vec(&unit(x), &unit(y));
                for z in y + 1..d {
                    let mut total = self.bracket_vec(&unit(z), &xy);
                    let yz = self.bracket_vec(&unit(y), &unit(z));
                    let zx = self.bracket_vec(&unit(z), &unit(x));
                    for part in [self.bracket_vec(&unit(x), &yz), self.bracket_vec(&unit(y), &zx)] {
                        for (k, c) in part {
                            *total.entry(k).or_insert(0) += c;
                        }
                    }
                    if total.values().any(|&c| c != 0) {
                        return Err(Error::Inconsistent(format!(
                            "Jacobi fails for {}, {}, {}",
                            self.element_name(x),
                            self.element_name(y),
                            self.element_name(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

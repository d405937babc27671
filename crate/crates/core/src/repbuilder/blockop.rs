//! Weight-graded sparse operators: one dense rational block per source
//! weight space.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::rootsystem::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseBlock {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl DenseBlock {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseBlock { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut b = DenseBlock::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                b.set(r, c, x.clone());
            }
        }
        b
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &DenseBlock) -> DenseBlock {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = DenseBlock::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                let mut s = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    fn axpy(&mut self, a: &Rational, other: &DenseBlock) {
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x += a * y;
            }
        }
    }
}

/// An operator shifting weights by `shift`. `blocks[src] = (tgt, M)` with `M`
/// mapping block `src` coordinates to block `tgt` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockOp {
    pub shift: Weight,
    pub blocks: BTreeMap<usize, (usize, DenseBlock)>,
}

impl BlockOp {
    pub fn new(shift: Weight) -> Self {
        BlockOp { shift, blocks: BTreeMap::new() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BlockOp) -> BlockOp {
        let mut out = BlockOp::new(&self.shift + &other.shift);
        for (&src, (mid, mb)) in &other.blocks {
            if let Some((tgt, ma)) = self.blocks.get(mid) {
                let m = ma.mul(mb);
                if !m.is_zero() {
                    out.blocks.insert(src, (*tgt, m));
                }
            }
        }
        out
    }

    /// `a·self + b·other`; both operators must carry the same shift.
    pub fn combine(&self, a: &Rational, other: &BlockOp, b: &Rational) -> BlockOp {
        debug_assert_eq!(self.shift, other.shift);
        let mut out = BlockOp::new(self.shift.clone());
        for (&src, (tgt, m)) in self.blocks.iter().chain(other.blocks.iter()) {
            out.blocks
                .entry(src)
                .or_insert_with(|| (*tgt, DenseBlock::zeros(m.rows, m.cols)));
        }
        for (src, (_, acc)) in out.blocks.iter_mut() {
            if let Some((_, m)) = self.blocks.get(src) {
                acc.axpy(a, m);
            }
            if let Some((_, m)) = other.blocks.get(src) {
                acc.axpy(b, m);
            }
        }
        out.blocks.retain(|_, (_, m)| !m.is_zero());
        out
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &BlockOp) -> BlockOp {
        let one = Rational::from_integer(1.into());
        self.compose(other).combine(&one, &other.compose(self), &-one.clone())
    }

    pub fn scale(&self, a: &Rational) -> BlockOp {
        let zero = Rational::zero();
        self.combine(a, &BlockOp::new(self.shift.clone()), &zero)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|(_, m)| m.is_zero())
    }

    /// Returns `s` with `self == s·other`, if such a scalar exists.
    pub fn ratio_to(&self, other: &BlockOp) -> Option<Rational> {
        let (src, (_, m)) = other.blocks.iter().find(|(_, (_, m))| !m.is_zero())?;
        let (r, c) = (0..m.rows)
            .flat_map(|r| (0..m.cols).map(move |c| (r, c)))
            .find(|&(r, c)| !m.get(r, c).is_zero())?;
        let mine = self.blocks.get(src).map(|(_, b)| b.get(r, c).clone()).unwrap_or_else(Rational::zero);
        let s = mine / m.get(r, c);
        let one = Rational::from_integer(1.into());
        let diff = self.combine(&one, other, &-s.clone());
        diff.is_zero().then_some(s)
    }
}

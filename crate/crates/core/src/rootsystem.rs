//! Root systems of the simple Lie algebras, normalized so that long roots
//! have squared length 2.
//!
//! Every type carries a fixed orthogonal realization: a list of simple roots
//! in `R^n` together with a scalar metric `(x|y) = s * x.y`. For F4 the
//! realization is
//!
//! ```text
//! ρ1 = [0,1,-1,0]  ρ2 = [0,0,1,-1]  ρ3 = [0,0,0,1]  ρ4 = 1/2[1,-1,-1,-1]
//! ```
//!
//! with `s = 1`. Weights are otherwise handled in the Dynkin basis (the
//! coefficients of the fundamental weights), where all arithmetic is integral.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{lcm_of_denominators, q, qi, to_i64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie type such as `F4` or `A1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub const F4: LieType = LieType { family: Family::F, rank: 4 };
    pub const G2: LieType = LieType { family: Family::G, rank: 2 };
    pub const A1: LieType = LieType { family: Family::A, rank: 1 };
    pub const C3: LieType = LieType { family: Family::C, rank: 3 };

    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::UnsupportedType { family: family.letter(), rank })
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadLieType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadLieType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// A weight in the Dynkin basis: `coords[i]` is the coefficient of the
/// i-th fundamental weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The i-th fundamental weight (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Compressed `(n1n2n3n4)` form when every label is a digit, else the
    /// comma-separated form.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&x| (0..=9).contains(&x)) {
            let digits: String = self.0.iter().map(|x| x.to_string()).collect();
            format!("({digits})")
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"0,0,1,0"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.is_empty() {
            return Err(Error::BadWeight(s.to_string()));
        }
        body.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::BadWeight(s.to_string()))
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// Serializes weight-keyed maps as `[[weight, value], ...]`, since JSON
/// object keys must be strings.
pub mod weight_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Weight;

    pub fn serialize<T: Serialize, S: Serializer>(map: &BTreeMap<Weight, T>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(map.iter())
    }

    pub fn deserialize<'de, T: Deserialize<'de>, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, T>, D::Error> {
        Ok(Vec::<(Weight, T)>::deserialize(d)?.into_iter().collect())
    }
}

/// A vector in the fixed orthogonal realization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrthoVec(pub Vec<Rational>);

impl OrthoVec {
    pub fn from_ints(xs: &[i64]) -> Self {
        OrthoVec(xs.iter().map(|&x| qi(x)).collect())
    }

    /// `num/den * [xs]`, matching the bracket notation `1/2[1,-1,-1,-1]`.
    pub fn scaled(num: i64, den: i64, xs: &[i64]) -> Self {
        let s = q(num, den);
        OrthoVec(xs.iter().map(|&x| &s * qi(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        OrthoVec(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    fn dot(&self, other: &OrthoVec) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    fn axpy(&mut self, a: &Rational, x: &OrthoVec) {
        for (s, v) in self.0.iter_mut().zip(&x.0) {
            *s += a * v;
        }
    }
}

impl fmt::Display for OrthoVec {
    /// Bracket notation with a common denominator pulled out front.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = lcm_of_denominators(&self.0);
        let body: Vec<String> = self
            .0
            .iter()
            .map(|x| (x * Rational::from_integer(den.clone())).to_integer().to_string())
            .collect();
        if den.is_one() {
            write!(f, "[{}]", body.join(","))
        } else {
            write!(f, "1/{}[{}]", den, body.join(","))
        }
    }
}

impl Add for &OrthoVec {
    type Output = OrthoVec;
    fn add(self, rhs: &OrthoVec) -> OrthoVec {
        OrthoVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &OrthoVec {
    type Output = OrthoVec;
    fn sub(self, rhs: &OrthoVec) -> OrthoVec {
        OrthoVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &OrthoVec {
    type Output = OrthoVec;
    fn neg(self) -> OrthoVec {
        OrthoVec(self.0.iter().map(|a| -a).collect())
    }
}

/// A positive root, stored in every coordinate system we use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// Coefficients with respect to the simple roots (all nonnegative).
    pub simple_coords: Vec<i64>,
    /// Dynkin labels.
    pub weight: Weight,
    pub ortho: OrthoVec,
    pub height: i64,
    /// Squared length `(α|α)`.
    pub norm: Rational,
}

impl Root {
    pub fn is_long(&self) -> bool {
        self.norm == qi(2)
    }
}

/// Location of a root in [`RootSystem::positive_roots`], with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootRef {
    pub index: usize,
    pub positive: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    metric: Rational,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational>>,
    simple_roots: Vec<OrthoVec>,
    positive_roots: Vec<Root>,
    root_lookup: HashMap<Weight, usize>,
    fundamental_weights: Vec<OrthoVec>,
    form: Vec<Vec<Rational>>,
    form_scaled: Vec<Vec<i64>>,
    form_den: i64,
    weyl_vector: OrthoVec,
    highest_root: usize,
    dual_coxeter: i64,
    comarks: Vec<i64>,
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Simple roots and the metric scale of the fixed realization.
fn realization(t: LieType) -> (Vec<OrthoVec>, Rational) {
    let n = t.rank;
    match t.family {
        Family::A => (
            (0..n).map(|i| OrthoVec::from_ints(&diff(n + 1, i, i + 1))).collect(),
            qi(1),
        ),
        Family::B => {
            let mut s: Vec<OrthoVec> = (0..n - 1)
                .map(|i| OrthoVec::from_ints(&diff(n, i, i + 1)))
                .collect();
            s.push(OrthoVec::from_ints(&unit(n, n - 1, 1)));
            (s, qi(1))
        }
        Family::C => {
            let mut s: Vec<OrthoVec> = (0..n - 1)
                .map(|i| OrthoVec::from_ints(&diff(n, i, i + 1)))
                .collect();
            s.push(OrthoVec::from_ints(&unit(n, n - 1, 2)));
            (s, q(1, 2))
        }
        Family::D => {
            let mut s: Vec<OrthoVec> = (0..n - 1)
                .map(|i| OrthoVec::from_ints(&diff(n, i, i + 1)))
                .collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            s.push(OrthoVec::from_ints(&last));
            (s, qi(1))
        }
        Family::E => {
            // Bourbaki labelling inside R^8; E6 and E7 use the first simple roots.
            let mut s = vec![
                OrthoVec::scaled(1, 2, &[1, -1, -1, -1, -1, -1, -1, 1]),
                OrthoVec::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            for i in 0..6 {
                s.push(OrthoVec::from_ints(&diff(8, i + 1, i)));
            }
            s.truncate(n);
            (s, qi(1))
        }
        Family::F => (
            vec![
                OrthoVec::from_ints(&[0, 1, -1, 0]),
                OrthoVec::from_ints(&[0, 0, 1, -1]),
                OrthoVec::from_ints(&[0, 0, 0, 1]),
                OrthoVec::scaled(1, 2, &[1, -1, -1, -1]),
            ],
            qi(1),
        ),
        Family::G => (
            vec![
                OrthoVec::from_ints(&[1, -1, 0]),
                OrthoVec::from_ints(&[-2, 1, 1]),
            ],
            q(1, 3),
        ),
    }
}

/// Positive roots in simple-root coordinates, by closure under the simple
/// roots using unbroken root strings.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let labels = |c: &[i64], i: usize| -> i64 { (0..n).map(|j| c[j] * cartan[i][j]).sum() };
    let mut known: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
    let mut all = Vec::new();
    for r in &layer {
        known.insert(r.clone());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p = how far the α_i-string extends downward from β
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - labels(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}

impl RootSystem {
    pub fn build(t: LieType) -> Result<RootSystem> {
        let t = LieType::new(t.family, t.rank)?;
        let n = t.rank;
        let (simple_roots, metric) = realization(t);
        let ip = |x: &OrthoVec, y: &OrthoVec| &metric * x.dot(y);

        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let a = qi(2) * ip(&simple_roots[i], &simple_roots[j])
                    / ip(&simple_roots[i], &simple_roots[i]);
                cartan[i][j] = to_i64(&a)
                    .ok_or_else(|| Error::Inconsistent(format!("non-integral Cartan entry in {t}")))?;
            }
        }

        let mut coords = close_positive_roots(&cartan);
        coords.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let dim = simple_roots[0].dim();
        let positive_roots: Vec<Root> = coords
            .into_iter()
            .map(|c| {
                let mut ortho = OrthoVec::zero(dim);
                for (j, &cj) in c.iter().enumerate() {
                    ortho.axpy(&qi(cj), &simple_roots[j]);
                }
                let weight = Weight((0..n).map(|i| (0..n).map(|j| c[j] * cartan[i][j]).sum()).collect());
                let norm = ip(&ortho, &ortho);
                Root { height: c.iter().sum(), simple_coords: c, weight, ortho, norm }
            })
            .collect();

        let cartan_q: Vec<Vec<Rational>> =
            cartan.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        let inverse_cartan = linalg::inverse(&cartan_q)
            .ok_or_else(|| Error::Inconsistent(format!("singular Cartan matrix for {t}")))?;

        // α_j = Σ_i A_ij ω_i, so ω_i = Σ_j (A^{-1})_{ji} α_j.
        let fundamental_weights: Vec<OrthoVec> = (0..n)
            .map(|i| {
                let mut w = OrthoVec::zero(dim);
                for j in 0..n {
                    w.axpy(&inverse_cartan[j][i], &simple_roots[j]);
                }
                w
            })
            .collect();

        let form: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| ip(&fundamental_weights[i], &fundamental_weights[j])).collect())
            .collect();
        let den = lcm_of_denominators(form.iter().flatten());
        let form_den = den.to_i64().ok_or(Error::Overflow("form denominator"))?;
        let form_scaled = form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| to_i64(&(x * qi(form_den))).ok_or(Error::Overflow("scaled form")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        let mut weyl_vector = OrthoVec::zero(dim);
        for w in &fundamental_weights {
            weyl_vector.axpy(&qi(1), w);
        }

        let highest_root = positive_roots.len() - 1;
        let root_lookup = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.weight.clone(), i))
            .collect();

        let theta = &positive_roots[highest_root].ortho;
        let dual = qi(1) + ip(&weyl_vector, theta);
        let dual_coxeter =
            to_i64(&dual).ok_or_else(|| Error::Inconsistent("non-integral dual Coxeter number".into()))?;
        let comarks = fundamental_weights
            .iter()
            .map(|w| to_i64(&ip(w, theta)).ok_or_else(|| Error::Inconsistent("non-integral comark".into())))
            .collect::<Result<Vec<_>>>()?;

        let rs = RootSystem {
            lie_type: t,
            metric,
            cartan,
            inverse_cartan,
            simple_roots,
            positive_roots,
            root_lookup,
            fundamental_weights,
            form,
            form_scaled,
            form_den,
            weyl_vector,
            highest_root,
            dual_coxeter,
            comarks,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let theta = self.highest_root();
        if theta.norm != qi(2) {
            return Err(Error::Inconsistent(format!("(θ|θ) = {} in {}", theta.norm, self.lie_type)));
        }
        if self.positive_roots.iter().filter(|r| r.height == theta.height).count() != 1 {
            return Err(Error::Inconsistent("highest root is not unique".into()));
        }
        let mut half_sum = OrthoVec::zero(self.ortho_dim());
        for r in &self.positive_roots {
            half_sum.axpy(&q(1, 2), &r.ortho);
        }
        if half_sum != self.weyl_vector {
            return Err(Error::Inconsistent("half-sum of positive roots differs from Σ ω_i".into()));
        }
        Ok(())
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// Dimension of the ambient orthogonal realization.
    pub fn ortho_dim(&self) -> usize {
        self.simple_roots[0].dim()
    }

    /// The scalar `s` in `(x|y) = s * x.y`.
    pub fn metric_scale(&self) -> &Rational {
        &self.metric
    }

    /// `cartan_matrix()[i][j] = n_{α_j, α_i} = 2(α_i|α_j)/(α_i|α_i)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational>] {
        &self.inverse_cartan
    }

    pub fn simple_roots(&self) -> &[OrthoVec] {
        &self.simple_roots
    }

    /// Dynkin labels of the i-th simple root (column i of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// Positive roots ordered by height, then by simple-root coordinates in
    /// decreasing lexicographic order (so the simple roots come first, in
    /// index order).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn fundamental_weights(&self) -> &[OrthoVec] {
        &self.fundamental_weights
    }

    /// `form_matrix()[i][j] = (ω_i|ω_j)`.
    pub fn form_matrix(&self) -> &[Vec<Rational>] {
        &self.form
    }

    /// ρ̄ in the Dynkin basis: all labels equal to 1.
    pub fn weyl_vector(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn weyl_vector_ortho(&self) -> &OrthoVec {
        &self.weyl_vector
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// `(ω_i|θ)`; the level of a weight is `Σ λ_i * comark_i`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.lie_type.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: len });
        }
        Ok(())
    }

    fn check_ortho(&self, v: &OrthoVec) -> Result<()> {
        if v.dim() != self.ortho_dim() {
            return Err(Error::DimensionMismatch { expected: self.ortho_dim(), got: v.dim() });
        }
        Ok(())
    }

    pub fn inner(&self, x: &OrthoVec, y: &OrthoVec) -> Result<Rational> {
        self.check_ortho(x)?;
        self.check_ortho(y)?;
        Ok(&self.metric * x.dot(y))
    }

    /// `(λ|μ)` for Dynkin-basis weights.
    pub fn inner_weights(&self, x: &Weight, y: &Weight) -> Rational {
        Rational::new(self.scaled_inner(x, y).into(), self.form_den.into())
    }

    /// `(λ|μ) * form_denominator()`, always an integer.
    pub fn scaled_inner(&self, x: &Weight, y: &Weight) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                s += xi * self.form_scaled[i][j] * yj;
            }
        }
        s
    }

    pub fn form_denominator(&self) -> i64 {
        self.form_den
    }

    pub fn find_root(&self, w: &Weight) -> Option<RootRef> {
        if let Some(&index) = self.root_lookup.get(w) {
            return Some(RootRef { index, positive: true });
        }
        self.root_lookup.get(&-w).map(|&index| RootRef { index, positive: false })
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.find_root(w).is_some()
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.root_lookup.contains_key(w)
    }

    fn root_norm(&self, alpha: &Weight) -> Result<&Rational> {
        let r = self
            .find_root(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string(), self.lie_type))?;
        Ok(&self.positive_roots[r.index].norm)
    }

    /// `n_{λ,α} = 2(λ|α)/(α|α)`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Rational> {
        self.check_rank(lambda.rank())?;
        self.check_rank(alpha.rank())?;
        let norm = self.root_norm(alpha)?.clone();
        Ok(qi(2) * self.inner_weights(lambda, alpha) / norm)
    }

    /// Integer pairing for integral weights.
    pub fn pairing_int(&self, lambda: &Weight, alpha: &Weight) -> Result<i64> {
        let p = self.pairing(lambda, alpha)?;
        to_i64(&p).ok_or_else(|| Error::NotIntegral(lambda.to_string()))
    }

    pub fn pairing_ortho(&self, x: &OrthoVec, alpha: &OrthoVec) -> Result<Rational> {
        let a = self.from_orthogonal(alpha)?;
        let norm = self.root_norm(&a)?.clone();
        Ok(qi(2) * self.inner(x, alpha)? / norm)
    }

    /// Reflection `ϖ_α(λ) = λ − n_{λ,α} α`.
    pub fn reflect(&self, alpha: &Weight, lambda: &Weight) -> Result<Weight> {
        let n = self.pairing_int(lambda, alpha)?;
        Ok(lambda - &(n * alpha))
    }

    pub fn reflect_ortho(&self, alpha: &OrthoVec, x: &OrthoVec) -> Result<OrthoVec> {
        let n = self.pairing_ortho(x, alpha)?;
        let mut out = x.clone();
        out.axpy(&-n, alpha);
        Ok(out)
    }

    /// Simple reflection `s_i` in the Dynkin basis.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        let c = w.0[i];
        if c == 0 {
            return w.clone();
        }
        Weight(w.0.iter().enumerate().map(|(k, &x)| x - c * self.cartan[k][i]).collect())
    }

    /// Moves `w` into the dominant chamber by simple reflections; returns the
    /// dominant representative and the number of reflections applied.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, usize) {
        let mut cur = w.clone();
        let mut steps = 0;
        while let Some(i) = cur.0.iter().position(|&x| x < 0) {
            cur = self.simple_reflection(i, &cur);
            steps += 1;
        }
        (cur, steps)
    }

    pub fn to_orthogonal(&self, w: &Weight) -> OrthoVec {
        let mut v = OrthoVec::zero(self.ortho_dim());
        for (i, &c) in w.0.iter().enumerate() {
            if c != 0 {
                v.axpy(&qi(c), &self.fundamental_weights[i]);
            }
        }
        v
    }

    pub fn from_orthogonal(&self, v: &OrthoVec) -> Result<Weight> {
        self.check_ortho(v)?;
        let labels = self
            .simple_roots
            .iter()
            .map(|a| {
                let n = qi(2) * v.dot(a) / a.dot(a);
                to_i64(&n).ok_or_else(|| Error::NotIntegral(v.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let w = Weight(labels);
        if self.to_orthogonal(&w) != *v {
            return Err(Error::NotIntegral(v.to_string()));
        }
        Ok(w)
    }

    /// Coefficients of `w` with respect to the simple roots, if `w` lies in
    /// the root lattice.
    pub fn simple_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                let c: Rational = (0..self.rank()).map(|j| &self.inverse_cartan[i][j] * qi(w.0[j])).sum();
                to_i64(&c)
            })
            .collect()
    }

    /// `(λ|θ)`.
    pub fn level(&self, w: &Weight) -> Rational {
        qi(self.level_int(w))
    }

    pub fn level_int(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.comarks).map(|(a, b)| a * b).sum()
    }

    /// F4 short positive roots orthogonal to θ (first) and not orthogonal (second).
    pub fn short_root_groups(&self) -> (Vec<&Root>, Vec<&Root>) {
        let theta = self.highest_root().weight.clone();
        self.positive_roots
            .iter()
            .filter(|r| !r.is_long())
            .partition(|r| self.inner_weights(&r.weight, &theta).is_zero())
    }
}

/// Sign of a Weyl group element given by a word length.
pub fn parity_sign(steps: usize) -> i64 {
    if steps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

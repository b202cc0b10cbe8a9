//! Irreducible reduced root systems of types A–G.
//!
//! Simple roots follow Bourbaki numbering. Weights are stored in the
//! fundamental-weight basis; the simple-root basis is derived through the
//! inverse transposed Cartan matrix.
//!
//! The invariant form is normalized so that short roots have squared length 2.
//! Under that normalization `(λ, α_j) = c_j · d_j` where `c` are the
//! fundamental-weight coordinates of `λ` and `d_j = (α_j, α_j) / 2`, so every
//! pairing of a weight against a root-lattice vector is an integer.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

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

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// An admissible (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemId {
    family: Family,
    rank: usize,
}

impl RootSystemId {
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
            Ok(RootSystemId { family, rank })
        } else {
            Err(Error::InadmissibleType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_number(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l + 1,
            Family::B | Family::C => 2 * l,
            Family::D => 2 * l - 2,
            Family::E => [12, 18, 30][l - 6],
            Family::F => 12,
            Family::G => 6,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => [36, 63, 120][l - 6],
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let l = self.rank as u64;
        let fact = |n: u64| (1..=n).product::<u64>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u64 << l) * fact(l),
            Family::D => (1u64 << (l - 1)) * fact(l),
            Family::E => [51_840, 2_903_040, 696_729_600][self.rank - 6],
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// A_1..A_max, B_2.., C_2.., D_3.., then G_2, F_4, E_6, E_7, E_8.
    pub fn classical_up_to(max_rank: usize) -> Vec<RootSystemId> {
        let mut out = Vec::new();
        for (family, min) in [
            (Family::A, 1),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 3),
        ] {
            for rank in min..=max_rank {
                out.push(RootSystemId { family, rank });
            }
        }
        out.push(RootSystemId {
            family: Family::G,
            rank: 2,
        });
        out.push(RootSystemId {
            family: Family::F,
            rank: 4,
        });
        for rank in 6..=8.min(max_rank) {
            out.push(RootSystemId {
                family: Family::E,
                rank,
            });
        }
        out
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.clone()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.clone()))?;
        RootSystemId::new(family, rank)
    }
}

/// A weight in fundamental-weight coordinates.
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

    /// The fundamental weight ω_{i+1} (zero-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = std::num::ParseIntError;

    /// Parses `"3,0"` or `"(3,0)"`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight(self.0.clone()))
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Dynkin data: squared lengths of the simple roots (short = 2) and the
/// edges of the diagram, Bourbaki numbering, zero-based.
fn dynkin(id: RootSystemId) -> (Vec<i64>, Vec<(usize, usize)>) {
    let l = id.rank;
    let chain = |n: usize| {
        (0..n.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match id.family {
        Family::A => (vec![2; l], chain(l)),
        Family::B => {
            let mut norms = vec![4; l];
            norms[l - 1] = 2;
            (norms, chain(l))
        }
        Family::C => {
            let mut norms = vec![2; l];
            norms[l - 1] = 4;
            (norms, chain(l))
        }
        Family::D => {
            let mut edges = chain(l - 1);
            edges.push((l - 3, l - 1));
            (vec![2; l], edges)
        }
        Family::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..l - 1).map(|i| (i, i + 1)));
            (vec![2; l], edges)
        }
        Family::F => (vec![4, 4, 2, 2], chain(4)),
        Family::G => (vec![2, 6], vec![(0, 1)]),
    }
}

/// Inverse of an integer matrix over the rationals (Gauss–Jordan).
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot) {
                    *x -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    id: RootSystemId,
    cartan: Vec<Vec<i64>>,
    /// (α_i, α_i) / 2 for each simple root.
    half_norms: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<RootVector>,
    rho: Weight,
    theta_short: Weight,
    theta_long: Weight,
    /// (Aᵀ)⁻¹ = inv_num / inv_den, mapping fw coordinates to root coordinates.
    inv_num: Vec<Vec<i64>>,
    inv_den: i64,
}

impl RootSystem {
    pub fn build(id: RootSystemId) -> Result<RootSystem> {
        let rank = id.rank;
        let (norms, edges) = dynkin(id);

        let mut form = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            form[i][i] = norms[i];
        }
        for &(i, j) in &edges {
            let v = -norms[i].max(norms[j]) / 2;
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[j][j]).collect())
            .collect();
        let half_norms: Vec<i64> = norms.iter().map(|n| n / 2).collect();

        let transpose: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[j][i]).collect())
            .collect();
        let inv = invert(&transpose);
        let inv_den = inv.iter().flatten().fold(1i64, |acc, q| acc.lcm(q.denom()));
        let inv_num: Vec<Vec<i64>> = inv
            .iter()
            .map(|row| row.iter().map(|q| (q * inv_den).to_integer()).collect())
            .collect();

        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight(row.clone())).collect();

        let mut rs = RootSystem {
            id,
            cartan,
            half_norms,
            simple_roots,
            positive_roots: Vec::new(),
            positive_root_coords: Vec::new(),
            rho: Weight(vec![1; rank]),
            theta_short: Weight::zero(rank),
            theta_long: Weight::zero(rank),
            inv_num,
            inv_den,
        };

        // All roots as the W-orbit of the simple roots.
        let mut seen: HashSet<Weight> = rs.simple_roots.iter().cloned().collect();
        let mut queue: VecDeque<Weight> = rs.simple_roots.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let mut img = beta.clone();
                rs.reflect_simple(&mut img, i);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<(RootVector, Weight)> = seen
            .into_iter()
            .map(|w| {
                let r = rs
                    .root_coords(&w)
                    .ok_or_else(|| Error::Inconsistency(format!("root {w} is not integral")))?;
                Ok((r, w))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(r, _)| r.is_nonneg())
            .collect();
        positive.sort_by(|(a, _), (b, _)| root_order(a, b));
        rs.positive_root_coords = positive.iter().map(|(r, _)| r.clone()).collect();
        rs.positive_roots = positive.into_iter().map(|(_, w)| w).collect();

        if rs.positive_roots.len() != id.num_positive_roots() {
            return Err(Error::Inconsistency(format!(
                "{id}: found {} positive roots, expected {}",
                rs.positive_roots.len(),
                id.num_positive_roots()
            )));
        }

        // ρ as half-sum of positive roots must agree with Σ ω_i.
        let mut sum = vec![0i64; rank];
        for a in &rs.positive_roots {
            for (s, c) in sum.iter_mut().zip(a.coords()) {
                *s += c;
            }
        }
        if sum.iter().any(|s| *s != 2) {
            return Err(Error::Inconsistency(format!(
                "{id}: half-sum of positive roots {} differs from rho",
                Weight(sum)
            )));
        }

        rs.theta_long = rs.positive_roots.last().cloned().expect("nonempty");
        let top = rs.positive_root_coords.last().unwrap().height();
        if rs
            .positive_root_coords
            .iter()
            .filter(|r| r.height() == top)
            .count()
            != 1
        {
            return Err(Error::Inconsistency(format!(
                "{id}: highest root not unique"
            )));
        }
        if top as usize + 1 != id.coxeter_number() {
            return Err(Error::Inconsistency(format!(
                "{id}: highest root height {top} disagrees with Coxeter number"
            )));
        }

        let short_norm = rs
            .positive_root_coords
            .iter()
            .map(|r| rs.norm2(r))
            .min()
            .unwrap();
        let dominant_short: Vec<usize> = (0..rs.positive_roots.len())
            .filter(|&i| {
                rs.norm2(&rs.positive_root_coords[i]) == short_norm
                    && rs.positive_roots[i].is_dominant()
            })
            .collect();
        if dominant_short.len() != 1 {
            return Err(Error::Inconsistency(format!(
                "{id}: {} dominant short roots",
                dominant_short.len()
            )));
        }
        rs.theta_short = rs.positive_roots[dominant_short[0]].clone();

        // θ is also the root dual to the highest coroot.
        let dual_highest = rs.highest_coroot_root();
        if dual_highest != rs.theta_short {
            return Err(Error::Inconsistency(format!(
                "{id}: root dual to highest coroot {dual_highest} differs from dominant short root {}",
                rs.theta_short
            )));
        }

        Ok(rs)
    }

    /// The positive root whose coroot has maximal height in the coroot basis.
    fn highest_coroot_root(&self) -> Weight {
        // β^∨ = Σ r_i (α_i,α_i)/(β,β) α_i^∨, so its coroot height is
        // Σ r_i · 2 d_i / (β,β).
        let mut best: Option<(Rational64, usize)> = None;
        for (idx, r) in self.positive_root_coords.iter().enumerate() {
            let n = self.norm2(r);
            let h: i64 = r
                .coords()
                .iter()
                .zip(&self.half_norms)
                .map(|(a, d)| a * 2 * d)
                .sum();
            let h = Rational64::new(h, n);
            if best.as_ref().is_none_or(|(b, _)| h > *b) {
                best = Some((h, idx));
            }
        }
        self.positive_roots[best.unwrap().1].clone()
    }

    pub fn id(&self) -> RootSystemId {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Positive roots in fw coordinates, ordered by height then lexicographically
    /// in root coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_root_coords(&self) -> &[RootVector] {
        &self.positive_root_coords
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The unique dominant short root.
    pub fn theta_short(&self) -> &Weight {
        &self.theta_short
    }

    /// The highest root.
    pub fn theta_long(&self) -> &Weight {
        &self.theta_long
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn to_root_basis(&self, w: &Weight) -> Vec<Rational64> {
        self.inv_num
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(w.coords()).map(|(a, b)| a * b).sum();
                Rational64::new(s, self.inv_den)
            })
            .collect()
    }

    /// Root-basis coordinates, if `w` lies in the root lattice.
    pub fn root_coords(&self, w: &Weight) -> Option<RootVector> {
        let mut out = Vec::with_capacity(self.rank());
        for row in &self.inv_num {
            let s: i64 = row.iter().zip(w.coords()).map(|(a, b)| a * b).sum();
            if s % self.inv_den != 0 {
                return None;
            }
            out.push(s / self.inv_den);
        }
        Some(RootVector(out))
    }

    pub fn from_root_coords(&self, r: &RootVector) -> Weight {
        let rank = self.rank();
        let mut c = vec![0i64; rank];
        for (i, ri) in r.coords().iter().enumerate() {
            for (cj, aij) in c.iter_mut().zip(&self.cartan[i]) {
                *cj += ri * aij;
            }
        }
        Weight(c)
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coords(w).is_some()
    }

    /// Sum of root-basis coordinates.
    pub fn height(&self, w: &Weight) -> Rational64 {
        self.to_root_basis(w).into_iter().sum()
    }

    /// μ ≤ λ in the dominance order.
    pub fn dominance_le(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.root_coords(&(lambda - mu))
            .is_some_and(|r| r.is_nonneg())
    }

    /// The invariant form (λ, β) for a weight and a root-lattice vector.
    pub fn pairing(&self, lambda: &Weight, beta: &RootVector) -> i64 {
        lambda
            .coords()
            .iter()
            .zip(beta.coords())
            .zip(&self.half_norms)
            .map(|((c, r), d)| c * r * d)
            .sum()
    }

    pub fn norm2(&self, beta: &RootVector) -> i64 {
        self.pairing(&self.from_root_coords(beta), beta)
    }

    /// ⟨λ, β^∨⟩ = 2(λ, β)/(β, β); integral for roots β.
    pub fn coroot_pairing(&self, lambda: &Weight, beta: &RootVector) -> i64 {
        let num = 2 * self.pairing(lambda, beta);
        let den = self.norm2(beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    pub fn is_short(&self, beta: &RootVector) -> bool {
        self.norm2(beta) == 2
    }

    /// In-place simple reflection s_i.
    pub fn reflect_simple(&self, w: &mut Weight, i: usize) {
        let ci = w.0[i];
        if ci != 0 {
            for (c, a) in w.0.iter_mut().zip(&self.cartan[i]) {
                *c -= ci * a;
            }
        }
    }

    /// The dominant weight in the W-orbit of `w`, with the number of simple
    /// reflections used (its parity is the sign of the connecting element
    /// when the stabilizer is trivial).
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, usize) {
        let mut v = w.clone();
        let mut steps = 0;
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            self.reflect_simple(&mut v, i);
            steps += 1;
        }
        (v, steps)
    }

    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let mut img = v.clone();
                self.reflect_simple(&mut img, i);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
            out.push(v);
        }
        out.sort_by(|a, b| self.weight_order(a, b));
        out
    }

    /// Dominant μ with μ ≤ λ, found by descending from λ through positive
    /// roots while staying dominant. Sorted by [`RootSystem::weight_order`].
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        if lambda.is_dominant() {
            seen.insert(lambda.clone());
            queue.push_back(lambda.clone());
        }
        while let Some(mu) = queue.pop_front() {
            for alpha in &self.positive_roots {
                let nu = &mu - alpha;
                if nu.is_dominant() && !seen.contains(&nu) {
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort_by(|a, b| self.weight_order(a, b));
        out
    }

    /// All dominant weights (root lattice or not) with height ≤ `max_height`.
    pub fn dominant_weights_up_to_height(&self, max_height: i64) -> Vec<Weight> {
        let fw_heights: Vec<Rational64> = (0..self.rank())
            .map(|j| self.height(&Weight::fundamental(self.rank(), j)))
            .collect();
        let limit = Rational64::from_integer(max_height);
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank()];
        fn rec(
            j: usize,
            used: Rational64,
            limit: Rational64,
            hs: &[Rational64],
            cur: &mut Vec<i64>,
            out: &mut Vec<Weight>,
        ) {
            if j == hs.len() {
                out.push(Weight(cur.clone()));
                return;
            }
            let mut c = 0;
            while used + hs[j] * c <= limit {
                cur[j] = c;
                rec(j + 1, used + hs[j] * c, limit, hs, cur, out);
                c += 1;
            }
            cur[j] = 0;
        }
        if max_height >= 0 {
            rec(
                0,
                Rational64::zero(),
                limit,
                &fw_heights,
                &mut cur,
                &mut out,
            );
        }
        out.sort_by(|a, b| self.weight_order(a, b));
        out
    }

    /// Output order for weights: by height, then lexicographically in fw
    /// coordinates.
    pub fn weight_order(&self, a: &Weight, b: &Weight) -> Ordering {
        self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b))
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            family: self.id.family.to_string(),
            rank: self.id.rank,
            cartan: self.cartan.clone(),
            positive_roots: self
                .positive_roots
                .iter()
                .map(|w| w.coords().to_vec())
                .collect(),
            rho: self.rho.coords().to_vec(),
            theta_short: self.theta_short.coords().to_vec(),
            theta_long: self.theta_long.coords().to_vec(),
        }
    }
}

fn root_order(a: &RootVector, b: &RootVector) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| a.cmp(b))
}

/// Serialized root-system data. Root and weight vectors are in the
/// fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub family: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: Vec<i64>,
    pub theta_short: Vec<i64>,
    pub theta_long: Vec<i64>,
}

pub fn build(id: RootSystemId) -> Result<RootSystem> {
    RootSystem::build(id)
}

pub fn to_root_basis(rs: &RootSystem, w: &Weight) -> Vec<Rational64> {
    rs.to_root_basis(w)
}

pub fn dominance_le(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> bool {
    rs.dominance_le(mu, lambda)
}

//! Graded multiplicities of simple modules L(λ) in the coordinate rings of
//! the nilpotent cone and of the subregular orbit closure, and the
//! cohomology tables assembled from them.
//!
//! Every formula here reduces to one kernel,
//!
//! ```text
//! E_n(λ, μ) = Σ_{w∈W} (−1)^w p_n(w·λ − μ),
//! ```
//!
//! the multiplicity of L(λ) in the Euler characteristic of the module
//! induced from S^n(n*) ⊗ μ:
//!
//! - d_n(λ) = E_n(λ, 0)            nilpotent cone, degree n
//! - a_i(λ) = E_{i−k}(λ, θ)        wall module, cohomological degree 2i−1
//! - t_n(λ) = d_n(λ) − a_n(λ)      subregular orbit closure, degree n
//!
//! where θ is the dominant short root and 2k−1 the length of s_θ.
//!
//! Degrees are polynomial degrees throughout. In cohomology, polynomial
//! degree n of the trivial and tilting modules sits in degree 2n.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multiplicity::{check_dominant, weyl_dim, Character};
use crate::partition::PartitionTable;
use crate::rootsys::{Family, RootSystem, RootSystemId, Weight};
use crate::weyl::{reflection_length_theta, WeylGroup};

pub const TABLE_SCHEMA_VERSION: u32 = 1;

pub const DEGREE_CONVENTION: &str =
    "polynomial degree n; trivial/tilting/Weyl(even) rows at cohomological degree 2n, \
     wall-module classes at 2i-1 with polynomial degree i-k";

/// A finitely supported map degree → integer. Zero values are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedMult(BTreeMap<usize, BigInt>);

impl GradedMult {
    pub fn new() -> Self {
        GradedMult::default()
    }

    /// From dense coefficients, lowest degree first.
    pub fn from_dense(values: Vec<BigInt>) -> Self {
        GradedMult(
            values
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        )
    }

    pub fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        self.0.get(&(n as usize)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, n: usize, v: BigInt) {
        if v.is_zero() {
            self.0.remove(&n);
        } else {
            self.0.insert(n, v);
        }
    }

    pub fn total(&self) -> BigInt {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest degree with a nonzero value.
    pub fn max_degree(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.0.iter().map(|(n, v)| (*n, v))
    }

    /// First degree with a negative value.
    pub fn first_negative(&self) -> Option<(usize, &BigInt)> {
        self.iter().find(|(_, v)| v.is_negative())
    }

    fn shifted(&self, by: usize) -> GradedMult {
        GradedMult(self.0.iter().map(|(n, v)| (n + by, v.clone())).collect())
    }

    fn minus(&self, other: &GradedMult) -> GradedMult {
        let mut out = self.clone();
        for (n, v) in other.iter() {
            out.set(n, out.get(n as i64) - v);
        }
        out
    }
}

impl fmt::Display for GradedMult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (n, v)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{v}")?;
        }
        write!(f, "}}")
    }
}

/// The integer k with ℓ(s_θ) = 2k − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KConstant(u32);

impl KConstant {
    pub fn from_reflection_length(length: usize) -> Result<Self> {
        if length.is_multiple_of(2) {
            return Err(Error::Inconsistency(format!(
                "reflection length {length} is even"
            )));
        }
        Ok(KConstant(length.div_ceil(2) as u32))
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    pub fn reflection_length(&self) -> u32 {
        2 * self.0 - 1
    }
}

impl fmt::Display for KConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn reflection_k(rs: &RootSystem) -> Result<KConstant> {
    KConstant::from_reflection_length(reflection_length_theta(rs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variety {
    Nilcone,
    Subregular,
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::Nilcone => "nilcone",
            Variety::Subregular => "subregular",
        })
    }
}

impl FromStr for Variety {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "nilcone" => Ok(Variety::Nilcone),
            "subregular" => Ok(Variety::Subregular),
            _ => Err(format!("unknown variety `{s}`")),
        }
    }
}

/// The module whose cohomology a [`CohomologyTable`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    /// The trivial module.
    Trivial,
    /// The induced module with highest weight on the affine wall.
    InducedWall,
    /// The wall-crossing of the trivial module.
    Tilting,
    /// The Weyl module with highest weight on the affine wall.
    Weyl,
    /// The simple module with highest weight on the affine wall.
    Simple,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 5] = [
        ModuleKind::Trivial,
        ModuleKind::InducedWall,
        ModuleKind::Tilting,
        ModuleKind::Weyl,
        ModuleKind::Simple,
    ];

    /// Parity (0 even, 1 odd) of the cohomological degrees that vanish.
    pub fn vanishing_parity(&self) -> Option<usize> {
        match self {
            ModuleKind::Trivial | ModuleKind::Tilting => Some(1),
            ModuleKind::InducedWall | ModuleKind::Simple => Some(0),
            ModuleKind::Weyl => None,
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Trivial => "trivial",
            ModuleKind::InducedWall => "induced-wall",
            ModuleKind::Tilting => "tilting",
            ModuleKind::Weyl => "weyl",
            ModuleKind::Simple => "simple",
        })
    }
}

impl FromStr for ModuleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| format!("unknown module kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyRow {
    /// Cohomological degree.
    pub degree: usize,
    /// Nonzero multiplicities, sorted by height then fw coordinates.
    pub entries: Vec<(Weight, BigInt)>,
}

#[derive(Debug, Clone)]
pub struct CohomologyTable {
    pub system: RootSystemId,
    pub kind: ModuleKind,
    pub k: KConstant,
    pub sweep_bound: u32,
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn row(&self, degree: usize) -> Option<&CohomologyRow> {
        self.rows.iter().find(|r| r.degree == degree)
    }

    /// Multiplicity of L(λ) in cohomological degree `degree`.
    pub fn get(&self, degree: usize, lambda: &Weight) -> BigInt {
        self.row(degree)
            .and_then(|r| r.entries.iter().find(|(w, _)| w == lambda))
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    /// Σ_i (−1)^i · (multiplicity of L(λ) in degree i).
    pub fn euler_characteristic(&self, lambda: &Weight) -> BigInt {
        self.rows
            .iter()
            .map(|r| {
                let v = self.get(r.degree, lambda);
                if r.degree % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// Degrees that should vanish for this kind but hold entries.
    pub fn parity_violations(&self) -> Vec<usize> {
        match self.kind.vanishing_parity() {
            None => Vec::new(),
            Some(p) => self
                .rows
                .iter()
                .filter(|r| r.degree % 2 == p && !r.entries.is_empty())
                .map(|r| r.degree)
                .collect(),
        }
    }

    /// Degrees holding a negative multiplicity.
    pub fn negative_entries(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.entries.iter().any(|(_, v)| v.is_negative()))
            .map(|r| r.degree)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let entries: Vec<Value> = r
                    .entries
                    .iter()
                    .map(|(w, v)| json!({"lambda": w.coords(), "mult": big_to_json(v)}))
                    .collect();
                json!({"i": r.degree, "entries": entries})
            })
            .collect();
        json!({
            "schema_version": TABLE_SCHEMA_VERSION,
            "family": self.system.family().to_string(),
            "rank": self.system.rank(),
            "kind": self.kind.to_string(),
            "k": self.k.value(),
            "sweep_bound": self.sweep_bound,
            "degree_convention": DEGREE_CONVENTION,
            "rows": rows,
        })
    }
}

/// An exact JSON number for an arbitrary-precision integer.
pub fn big_to_json(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("integer literal"))
}

/// Root system, Weyl group and partition table bundled for the graded
/// formulas. Safe to share across threads.
pub struct GradedEngine {
    rs: RootSystem,
    weyl: WeylGroup,
    table: PartitionTable,
    k: KConstant,
}

impl GradedEngine {
    pub fn new(rs: RootSystem, cap: usize) -> Result<Self> {
        let table = PartitionTable::new(&rs);
        Self::with_table(rs, cap, table)
    }

    pub fn with_table(rs: RootSystem, cap: usize, table: PartitionTable) -> Result<Self> {
        let weyl = WeylGroup::enumerate(&rs, cap)?;
        let k = reflection_k(&rs)?;
        Ok(GradedEngine { rs, weyl, table, k })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn table(&self) -> &PartitionTable {
        &self.table
    }

    pub fn k(&self) -> KConstant {
        self.k
    }

    /// E_n(λ, μ) for every n.
    pub fn euler_series(&self, lambda: &Weight, mu: &Weight) -> Result<GradedMult> {
        check_dominant(&self.rs, lambda)?;
        let mut acc: Vec<BigInt> = Vec::new();
        for (sign, x) in self.weyl.dot_orbit(&self.rs, lambda) {
            let Some(r) = self.rs.root_coords(&(&x - mu)) else {
                continue;
            };
            if !r.is_nonneg() {
                continue;
            }
            let s = self.table.series(&r);
            if acc.len() < s.len() {
                acc.resize(s.len(), BigInt::zero());
            }
            for (n, v) in s.iter().enumerate() {
                let v = BigInt::from(v.clone());
                if sign > 0 {
                    acc[n] += v;
                } else {
                    acc[n] -= v;
                }
            }
        }
        Ok(GradedMult::from_dense(acc))
    }

    pub fn graded_euler_mult(&self, lambda: &Weight, mu: &Weight, n: i64) -> Result<BigInt> {
        Ok(self.euler_series(lambda, mu)?.get(n))
    }

    /// d_n(λ) for all n.
    pub fn nilcone(&self, lambda: &Weight) -> Result<GradedMult> {
        let d = self.euler_series(lambda, &Weight::zero(self.rs.rank()))?;
        if let Some((n, v)) = d.first_negative() {
            return Err(Error::Inconsistency(format!(
                "d_{n}({lambda}) = {v} is negative"
            )));
        }
        Ok(d)
    }

    /// a_i(λ) for all i: the multiplicity of L(λ) in cohomological degree
    /// 2i − 1 of the wall module.
    pub fn wall(&self, lambda: &Weight) -> Result<GradedMult> {
        let a = self
            .euler_series(lambda, self.rs.theta_short())?
            .shifted(self.k.value() as usize);
        if let Some((i, v)) = a.first_negative() {
            return Err(Error::Inconsistency(format!(
                "a_{i}({lambda}) = {v} is negative"
            )));
        }
        Ok(a)
    }

    /// t_n(λ) for all n.
    pub fn subregular(&self, lambda: &Weight) -> Result<GradedMult> {
        let t = self.nilcone(lambda)?.minus(&self.wall(lambda)?);
        if let Some((n, v)) = t.first_negative() {
            return Err(Error::Violation {
                quantity: "t_n",
                lambda: lambda.clone(),
                degree: n as i64,
                value: v.to_string(),
            });
        }
        Ok(t)
    }

    pub fn graded(&self, variety: Variety, lambda: &Weight) -> Result<GradedMult> {
        match variety {
            Variety::Nilcone => self.nilcone(lambda),
            Variety::Subregular => self.subregular(lambda),
        }
    }

    pub fn hesselink_d(&self, lambda: &Weight, n: i64) -> Result<BigInt> {
        Ok(self.nilcone(lambda)?.get(n))
    }

    pub fn andersen_jantzen_a(&self, lambda: &Weight, i: i64) -> Result<BigInt> {
        Ok(self.wall(lambda)?.get(i))
    }

    pub fn subregular_t(&self, lambda: &Weight, n: i64) -> Result<BigInt> {
        Ok(self.subregular(lambda)?.get(n))
    }

    /// Dominant λ ≤ N·θ_long, sorted by height then fw coordinates.
    pub fn sweep(&self, bound: u32) -> Vec<Weight> {
        self.rs
            .dominant_weights_below(&self.rs.theta_long().scale(bound as i64))
    }

    pub fn cohomology_table(
        &self,
        kind: ModuleKind,
        bound: u32,
        max_i: usize,
    ) -> Result<CohomologyTable> {
        let weights = self.sweep(bound);
        let per_weight: Vec<(Weight, GradedMult, GradedMult)> = weights
            .par_iter()
            .map(|l| Ok((l.clone(), self.nilcone(l)?, self.wall(l)?)))
            .collect::<Result<_>>()?;

        let value = |i: usize, d: &GradedMult, a: &GradedMult| -> BigInt {
            let i = i as i64;
            let even = i % 2 == 0;
            match kind {
                ModuleKind::Trivial if even => d.get(i / 2),
                ModuleKind::Tilting if even => d.get(i / 2) - a.get(i / 2),
                ModuleKind::InducedWall if !even => a.get((i + 1) / 2),
                ModuleKind::Weyl if even => d.get(i / 2) - a.get(i / 2),
                ModuleKind::Weyl => d.get((i - 1) / 2),
                ModuleKind::Simple if !even => d.get((i - 1) / 2) + a.get((i + 1) / 2),
                _ => BigInt::zero(),
            }
        };

        let rows = (0..=max_i)
            .map(|i| CohomologyRow {
                degree: i,
                entries: per_weight
                    .iter()
                    .map(|(l, d, a)| (l.clone(), value(i, d, a)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            })
            .collect();
        let table = CohomologyTable {
            system: self.rs.id(),
            kind,
            k: self.k,
            sweep_bound: bound,
            rows,
        };
        if let Some(&i) = table.negative_entries().first() {
            let row = table.row(i).unwrap();
            let (l, v) = row.entries.iter().find(|(_, v)| v.is_negative()).unwrap();
            return Err(Error::Violation {
                quantity: "cohomology multiplicity",
                lambda: l.clone(),
                degree: i as i64,
                value: v.to_string(),
            });
        }
        Ok(table)
    }

    /// Dimensions of the graded pieces up to `max_degree`.
    pub fn hilbert_series(&self, variety: Variety, max_degree: u32) -> Result<Vec<BigInt>> {
        let weights = self.sweep(max_degree);
        let contributions: Vec<Vec<BigInt>> = weights
            .par_iter()
            .map(|l| {
                let c = self.graded(variety, l)?;
                let dim = weyl_dim(&self.rs, l)?;
                Ok((0..=max_degree as i64).map(|n| c.get(n) * &dim).collect())
            })
            .collect::<Result<_>>()?;
        let mut out = vec![BigInt::zero(); max_degree as usize + 1];
        for c in contributions {
            for (o, v) in out.iter_mut().zip(c) {
                *o += v;
            }
        }
        Ok(out)
    }
}

/// Euler characteristic multiplicity of L(λ) in the cohomology of the A_2
/// tilting module with Weyl filtration factors of untwisted highest weights
/// 3ω_2, ω_1+ω_2 (twice) and 0:
/// m_λ(3ω_2) + m_λ(0) − 2·m_λ(ω_1+ω_2).
pub fn tilting_euler_a2(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    let a2 = RootSystemId::new(Family::A, 2)?;
    if rs.id() != a2 {
        return Err(Error::WrongType {
            expected: a2.to_string(),
            got: rs.id().to_string(),
        });
    }
    let ch = Character::new(rs, lambda)?;
    let m = |c: [i64; 2]| ch.multiplicity(rs, &Weight::new(c.to_vec()));
    Ok(m([0, 3]) + m([0, 0]) - m([1, 1]) * 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;
    use crate::weyl::DEFAULT_WEYL_CAP;

    fn engine(f: Family, r: usize) -> GradedEngine {
        let rs = RootSystem::build(RootSystemId::new(f, r).unwrap()).unwrap();
        GradedEngine::new(rs, DEFAULT_WEYL_CAP).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn gm(pairs: &[(usize, i64)]) -> GradedMult {
        let mut g = GradedMult::new();
        for &(n, v) in pairs {
            g.set(n, BigInt::from(v));
        }
        g
    }

    #[test]
    fn k_constants() {
        let k = |f, r| engine(f, r).k().value();
        assert_eq!(k(Family::A, 1), 1);
        assert_eq!(k(Family::A, 2), 2);
        assert_eq!(k(Family::G, 2), 3);
    }

    #[test]
    fn even_reflection_length_rejected() {
        assert!(KConstant::from_reflection_length(4).is_err());
        assert_eq!(KConstant::from_reflection_length(57).unwrap().value(), 29);
    }

    #[test]
    fn euler_kernel_examples() {
        let e = engine(Family::A, 2);
        let zero = w(&[0, 0]);
        assert_eq!(
            e.graded_euler_mult(&zero, &zero, 0).unwrap(),
            BigInt::from(1)
        );
        let theta = w(&[1, 1]);
        assert_eq!(
            e.euler_series(&theta, &zero).unwrap(),
            gm(&[(1, 1), (2, 1)])
        );
        assert_eq!(
            e.graded_euler_mult(&theta, &theta, 0).unwrap(),
            BigInt::from(1)
        );

        let e = engine(Family::A, 1);
        assert_eq!(e.euler_series(&w(&[2]), &w(&[0])).unwrap(), gm(&[(1, 1)]));
    }

    #[test]
    fn nilcone_examples() {
        let e = engine(Family::A, 2);
        assert_eq!(e.nilcone(&w(&[0, 0])).unwrap(), gm(&[(0, 1)]));
        assert_eq!(e.nilcone(&w(&[1, 1])).unwrap(), gm(&[(1, 1), (2, 1)]));
        let e = engine(Family::A, 1);
        for m in 0..6 {
            assert_eq!(e.nilcone(&w(&[2 * m])).unwrap(), gm(&[(m as usize, 1)]));
        }
    }

    #[test]
    fn wall_examples() {
        let e = engine(Family::A, 2);
        let a = e.wall(&w(&[1, 1])).unwrap();
        assert_eq!(a.get(1), BigInt::zero());
        assert_eq!(a.get(2), BigInt::from(1));
        let e = engine(Family::A, 1);
        assert!(e.wall(&w(&[0])).unwrap().is_zero());
    }

    #[test]
    fn subregular_examples() {
        let e = engine(Family::A, 2);
        assert_eq!(e.subregular(&w(&[0, 0])).unwrap(), gm(&[(0, 1)]));
        assert_eq!(e.subregular(&w(&[1, 1])).unwrap(), gm(&[(1, 1)]));
        let e = engine(Family::A, 1);
        assert!(e.subregular(&w(&[2])).unwrap().is_zero());
    }

    #[test]
    fn non_dominant_rejected() {
        let e = engine(Family::A, 2);
        assert!(matches!(
            e.nilcone(&w(&[-1, 0])),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn trivial_table_a1() {
        let e = engine(Family::A, 1);
        let t = e.cohomology_table(ModuleKind::Trivial, 2, 4).unwrap();
        assert_eq!(t.row(0).unwrap().entries, vec![(w(&[0]), BigInt::from(1))]);
        assert_eq!(t.row(2).unwrap().entries, vec![(w(&[2]), BigInt::from(1))]);
        assert_eq!(t.row(4).unwrap().entries, vec![(w(&[4]), BigInt::from(1))]);
        assert!(t.row(1).unwrap().entries.is_empty());
        assert!(t.parity_violations().is_empty());
    }

    #[test]
    fn weyl_odd_rows_are_trivial_even_rows() {
        let e = engine(Family::B, 2);
        let triv = e.cohomology_table(ModuleKind::Trivial, 2, 9).unwrap();
        let weyl = e.cohomology_table(ModuleKind::Weyl, 2, 9).unwrap();
        for i in 0..4 {
            assert_eq!(
                weyl.row(2 * i + 1).unwrap().entries,
                triv.row(2 * i).unwrap().entries
            );
        }
    }

    #[test]
    fn simple_table_a2() {
        let e = engine(Family::A, 2);
        let t = e.cohomology_table(ModuleKind::Simple, 2, 3).unwrap();
        assert_eq!(t.get(1, &w(&[0, 0])), BigInt::from(1));
        assert!(t.row(0).unwrap().entries.is_empty());
        assert!(t.row(2).unwrap().entries.is_empty());
    }

    #[test]
    fn tilting_example_values() {
        let rs = RootSystem::build(RootSystemId::new(Family::A, 2).unwrap()).unwrap();
        assert_eq!(tilting_euler_a2(&rs, &w(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(
            tilting_euler_a2(&rs, &w(&[3, 0])).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(tilting_euler_a2(&rs, &w(&[0, 3])).unwrap(), BigInt::from(0));
        let b2 = RootSystem::build(RootSystemId::new(Family::B, 2).unwrap()).unwrap();
        assert!(matches!(
            tilting_euler_a2(&b2, &w(&[0, 0])),
            Err(Error::WrongType { .. })
        ));
    }

    #[test]
    fn hilbert_small() {
        let e = engine(Family::A, 1);
        let h = e.hilbert_series(Variety::Subregular, 3).unwrap();
        assert_eq!(
            h,
            vec![1, 0, 0, 0]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        let e = engine(Family::A, 2);
        let h = e.hilbert_series(Variety::Nilcone, 1).unwrap();
        assert_eq!(h[1], BigInt::from(8));
    }

    #[test]
    fn table_json_schema() {
        let e = engine(Family::A, 1);
        let v = e
            .cohomology_table(ModuleKind::Tilting, 1, 2)
            .unwrap()
            .to_json();
        assert_eq!(v["family"], "A");
        assert_eq!(v["kind"], "tilting");
        assert_eq!(v["k"], 1);
        assert!(v["degree_convention"].is_string());
        assert_eq!(v["rows"][0]["i"], 0);
        assert_eq!(v["rows"][0]["entries"][0]["lambda"], json!([0]));
        assert_eq!(v["rows"][0]["entries"][0]["mult"], json!(1));
    }
}

//! The graded partition function p_n(x): the number of multisets of n
//! positive roots summing to x, i.e. the coefficient of tⁿeˣ in
//! Π_{α>0} (1 − e^α t)⁻¹.
//!
//! For each x the table stores the whole polynomial Σ_n p_n(x) tⁿ. It is
//! built from the recursion over the fixed positive-root order
//!
//! ```text
//! F_j(x) = Σ_{m≥0} t^m F_{j−1}(x − m·α_j),   F_0(x) = [x = 0]
//! ```
//!
//! memoized on (j, x).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::rootsys::{RootSystem, RootSystemId, RootVector};

/// Coefficients of Σ_n p_n(x) tⁿ, lowest degree first, no trailing zeros.
pub type Series = Arc<Vec<BigUint>>;

pub struct PartitionTable {
    system: RootSystemId,
    roots: Vec<RootVector>,
    memo: RwLock<HashMap<(usize, RootVector), Series>>,
}

impl PartitionTable {
    pub fn new(rs: &RootSystem) -> Self {
        PartitionTable {
            system: rs.id(),
            roots: rs.positive_root_coords().to_vec(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> RootSystemId {
        self.system
    }

    /// The positive-root order the recursion runs over.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    /// Σ_n p_n(x) tⁿ.
    pub fn series(&self, x: &RootVector) -> Series {
        self.partial(self.roots.len(), x)
    }

    /// p_n(x); zero off the nonnegative cone and for n < 0.
    pub fn p(&self, x: &RootVector, n: i64) -> BigUint {
        if n < 0 || !x.is_nonneg() {
            return BigUint::zero();
        }
        self.series(x)
            .get(n as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Σ_n p_n(x), the ungraded Kostant partition function.
    pub fn big_p(&self, x: &RootVector) -> BigUint {
        self.series(x).iter().sum()
    }

    /// Number of memoized (prefix, x) entries.
    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Full-root-set entries, for persisting.
    pub fn entries(&self) -> Vec<(RootVector, Series)> {
        let full = self.roots.len();
        let memo = self.memo.read().unwrap();
        let mut out: Vec<(RootVector, Series)> = memo
            .iter()
            .filter(|((j, _), _)| *j == full)
            .map(|((_, x), s)| (x.clone(), s.clone()))
            .collect();
        out.sort_by(|a, b| a.0.height().cmp(&b.0.height()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Seed a full-root-set entry, e.g. from a cache file.
    pub fn insert(&self, x: RootVector, series: Vec<BigUint>) {
        let full = self.roots.len();
        self.memo
            .write()
            .unwrap()
            .insert((full, x), Arc::new(trim(series)));
    }

    fn partial(&self, j: usize, x: &RootVector) -> Series {
        if !x.is_nonneg() {
            return Arc::new(Vec::new());
        }
        if j == 0 {
            return Arc::new(if x.is_zero() {
                vec![BigUint::from(1u32)]
            } else {
                Vec::new()
            });
        }
        let key = (j, x.clone());
        if let Some(s) = self.memo.read().unwrap().get(&key) {
            return s.clone();
        }

        let alpha = &self.roots[j - 1];
        let mut acc: Vec<BigUint> = Vec::new();
        let mut rest = x.clone();
        let mut m = 0usize;
        while rest.is_nonneg() {
            let sub = self.partial(j - 1, &rest);
            if acc.len() < sub.len() + m {
                acc.resize(sub.len() + m, BigUint::zero());
            }
            for (n, v) in sub.iter().enumerate() {
                acc[n + m] += v;
            }
            rest = &rest - alpha;
            m += 1;
        }
        let series = Arc::new(trim(acc));
        self.memo
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| series.clone())
            .clone()
    }
}

fn trim(mut v: Vec<BigUint>) -> Vec<BigUint> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

pub fn p(table: &PartitionTable, x: &RootVector, n: i64) -> BigUint {
    table.p(x, n)
}

pub fn big_p(table: &PartitionTable, x: &RootVector) -> BigUint {
    table.big_p(x)
}

//! Independent oracles. None of these touch the partition table or the
//! Weyl group enumeration.

#![allow(dead_code)]

use std::collections::HashMap;

use nilgrade::{Family, RootSystem, RootSystemId, RootVector, Weight};

pub fn sys(f: Family, r: usize) -> RootSystem {
    RootSystem::build(RootSystemId::new(f, r).unwrap()).unwrap()
}

pub fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

/// Every multiset of `n` positive roots, as a vector of per-root counts.
pub fn multisets(num_roots: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; num_roots];
    rec(0, n, &mut cur, &mut out);
    out
}

/// (x, n) → number of n-element multisets of positive roots summing to x,
/// for all multisets with sum of height ≤ `max_height`.
pub fn brute_force_partitions(rs: &RootSystem, max_height: i64) -> HashMap<(Vec<i64>, usize), u64> {
    let roots = rs.positive_root_coords();
    let mut out = HashMap::new();
    for n in 0..=max_height as usize {
        for ms in multisets(roots.len(), n) {
            let mut x = vec![0i64; rs.rank()];
            for (count, r) in ms.iter().zip(roots) {
                for (xi, ri) in x.iter_mut().zip(r.coords()) {
                    *xi += *count as i64 * ri;
                }
            }
            if x.iter().sum::<i64>() <= max_height {
                *out.entry((x, n)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Truncated expansion of Π_{α>0} 1/(1 − t z^α), keeping monomials with
/// height(x) ≤ max_height. Built by multiplying geometric series one root at
/// a time.
pub fn product_expansion(rs: &RootSystem, max_height: i64) -> HashMap<(Vec<i64>, usize), u64> {
    let mut poly: HashMap<(Vec<i64>, usize), u64> = HashMap::new();
    poly.insert((vec![0; rs.rank()], 0), 1);
    for r in rs.positive_root_coords() {
        let h = r.height();
        let mut next: HashMap<(Vec<i64>, usize), u64> = HashMap::new();
        for ((x, n), c) in &poly {
            let mut m = 0i64;
            while x.iter().sum::<i64>() + m * h <= max_height {
                let y: Vec<i64> = x.iter().zip(r.coords()).map(|(a, b)| a + m * b).collect();
                *next.entry((y, n + m as usize)).or_insert(0) += c;
                m += 1;
            }
        }
        poly = next;
    }
    poly
}

/// All nonnegative root vectors of height ≤ h.
pub fn nonneg_vectors(rank: usize, h: i64) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootVector>) {
        if i == cur.len() {
            out.push(RootVector::new(cur.clone()));
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, h, &mut cur, &mut out);
    out
}

/// Truncated power series of (1−t²)(1−t³)/(1−t)⁸.
pub fn a2_nilcone_series(max_degree: usize) -> Vec<i64> {
    let n = max_degree + 1;
    // 1/(1−t)^8 coefficients: C(j+7, 7).
    let binom = |a: i64, b: i64| -> i64 { (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1)) };
    let inv: Vec<i64> = (0..n as i64).map(|j| binom(j + 7, 7)).collect();
    let num = [1i64, 0, -1, -1, 0, 1]; // (1−t²)(1−t³) = 1 − t² − t³ + t⁵
    (0..n)
        .map(|d| {
            (0..=d)
                .filter(|&i| i < num.len())
                .map(|i| num[i] * inv[d - i])
                .sum()
        })
        .collect()
}

/// Dimension of degree-n piece of C[x,y,z]/(xz − y²): monomials of degree n
/// not divisible by the leading term y² (graded reverse lex, x > y > z).
pub fn quadric_cone_dims(max_degree: usize) -> Vec<i64> {
    (0..=max_degree as i64)
        .map(|n| {
            let mut count = 0;
            for a in 0..=n {
                for b in 0..=(n - a) {
                    if b < 2 {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect()
}

//! Weyl group elements and the ρ-shifted action.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector, Weight};

/// Covers E_7 (order 2 903 040).
pub const DEFAULT_WEYL_CAP: usize = 3_000_000;

/// A Weyl group element as a matrix acting on fundamental-weight coordinates.
///
/// Entries of such matrices are coroot coefficients (|entry| ≤ 6), so they
/// are stored as `i8`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Box<[i8]>,
    rank: usize,
    length: u32,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0i8; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement {
            matrix: m.into_boxed_slice(),
            rank,
            length: 0,
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.rank + col] as i64
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|r| (0..self.rank).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// (−1)^length.
    pub fn sign(&self) -> i32 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, w: &Weight) -> Weight {
        let c = w.coords();
        Weight::new(
            (0..self.rank)
                .map(|r| (0..self.rank).map(|k| self.entry(r, k) * c[k]).sum())
                .collect(),
        )
    }

    /// w·λ = w(λ+ρ) − ρ.
    pub fn dot(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        &self.act(&(lambda + rs.rho())) - rs.rho()
    }

    /// #{α > 0 : w(α) < 0}.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|a| {
                let img = rs.root_coords(&self.act(a)).expect("roots map to roots");
                !img.is_nonneg()
            })
            .count()
    }

    /// Integer determinant (Bareiss elimination).
    pub fn determinant(&self) -> i64 {
        let n = self.rank;
        let mut a = self.matrix();
        let mut sign = 1i64;
        let mut prev = 1i64;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }

    /// `self · s_i`: column i becomes M e_i − M α_i.
    fn times_simple(&self, rs: &RootSystem, i: usize, length: u32) -> WeylElement {
        let n = self.rank;
        let alpha = &rs.cartan()[i];
        let mut m = self.matrix.clone();
        for r in 0..n {
            let mut v = self.entry(r, i);
            for (j, a) in alpha.iter().enumerate() {
                v -= a * self.entry(r, j);
            }
            m[r * n + i] = v as i8;
        }
        WeylElement {
            matrix: m,
            rank: n,
            length,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    cap: usize,
}

impl WeylGroup {
    /// Breadth-first closure from the identity under right multiplication by
    /// simple reflections.
    ///
    /// An element w is tracked together with w⁻¹ρ, which is regular and so
    /// identifies w uniquely. `ws_i` is longer than `w` exactly when the i-th
    /// coordinate of w⁻¹ρ is positive, so each BFS layer is one length.
    pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
        let rank = rs.rank();
        let cap = cap.max(1);
        let mut elements = vec![WeylElement::identity(rank)];
        let mut layer: Vec<(usize, Weight)> = vec![(0, rs.rho().clone())];
        let mut length = 0u32;
        while !layer.is_empty() {
            length += 1;
            let mut next: HashMap<Weight, usize> = HashMap::new();
            let mut next_layer = Vec::new();
            for (idx, u) in &layer {
                for i in 0..rank {
                    if u.coords()[i] <= 0 {
                        continue;
                    }
                    let mut v = u.clone();
                    rs.reflect_simple(&mut v, i);
                    if next.contains_key(&v) {
                        continue;
                    }
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            cap,
                            reached: elements.len(),
                        });
                    }
                    let elem = elements[*idx].times_simple(rs, i, length);
                    next.insert(v.clone(), elements.len());
                    next_layer.push((elements.len(), v));
                    elements.push(elem);
                }
            }
            layer = next_layer;
        }
        Ok(WeylGroup { elements, cap })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group is nonempty")
    }

    /// (sign, w·λ) for every element.
    pub fn dot_orbit(&self, rs: &RootSystem, lambda: &Weight) -> Vec<(i32, Weight)> {
        let shifted = lambda + rs.rho();
        self.elements
            .iter()
            .map(|w| (w.sign(), &w.act(&shifted) - rs.rho()))
            .collect()
    }
}

pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    WeylGroup::enumerate(rs, cap)
}

pub fn dot_action(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    w.dot(rs, lambda)
}

/// Length of the reflection in the dominant short root, as its inversion
/// count. Needs no group enumeration.
pub fn reflection_length_theta(rs: &RootSystem) -> usize {
    let theta = rs.theta_short();
    let theta_r = rs.root_coords(theta).expect("θ is a root");
    rs.positive_roots()
        .iter()
        .zip(rs.positive_root_coords())
        .filter(|(alpha, r)| {
            let c = rs.coroot_pairing(alpha, &theta_r);
            let img: RootVector = RootVector::new(
                r.coords()
                    .iter()
                    .zip(theta_r.coords())
                    .map(|(a, t)| a - c * t)
                    .collect(),
            );
            !img.is_nonneg()
        })
        .count()
}

/// Resolve the Euler characteristic of the line bundle of weight μ:
/// `None` when μ+ρ is singular, otherwise `((−1)^w, w(μ+ρ)−ρ)` for the
/// unique w making w(μ+ρ) dominant.
pub fn euler_induced(rs: &RootSystem, mu: &Weight) -> Option<(i32, Weight)> {
    let (v, steps) = rs.dominant_representative(&(mu + rs.rho()));
    if v.coords().contains(&0) {
        return None;
    }
    let sign = if steps % 2 == 0 { 1 } else { -1 };
    Some((sign, &v - rs.rho()))
}

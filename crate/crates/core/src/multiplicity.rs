//! Weight multiplicities of irreducible highest-weight modules.
//!
//! [`freudenthal_m`] is the production path. [`kostant_m`] evaluates the
//! alternating sum over the Weyl group against the partition function and
//! is kept as an independent check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::PartitionTable;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylGroup;

fn check_rank(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            weight: w.clone(),
            got: w.rank(),
            expected: rs.rank(),
        });
    }
    Ok(())
}

pub(crate) fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    check_rank(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.clone()));
    }
    Ok(())
}

/// Dominant weight multiplicities of L(λ), computed once by Freudenthal's
/// recursion and then queried for arbitrary weights.
#[derive(Debug, Clone)]
pub struct Character {
    lambda: Weight,
    dominant: HashMap<Weight, BigInt>,
    order: Vec<Weight>,
}

impl Character {
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
        check_dominant(rs, lambda)?;
        // Descend in order of depth = height(λ − μ).
        let mut order = rs.dominant_weights_below(lambda);
        order.sort_by_key(|mu| {
            let d = rs.root_coords(&(lambda - mu)).expect("μ ≤ λ");
            (d.height(), mu.clone())
        });

        let two_rho = rs.rho().scale(2);
        let mut dominant: HashMap<Weight, BigInt> = HashMap::new();
        dominant.insert(lambda.clone(), BigInt::one());
        for mu in order.iter().skip(1) {
            // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = (λ−μ, λ+μ+2ρ)
            let diff = rs.root_coords(&(lambda - mu)).expect("μ ≤ λ");
            let denom = rs.pairing(&(&(lambda + mu) + &two_rho), &diff);
            let mut num = BigInt::zero();
            for (alpha, alpha_r) in rs.positive_roots().iter().zip(rs.positive_root_coords()) {
                let mut nu = mu + alpha;
                while rs.dominance_le(&nu, lambda) {
                    let (rep, _) = rs.dominant_representative(&nu);
                    if let Some(m) = dominant.get(&rep) {
                        num += m * rs.pairing(&nu, alpha_r);
                    }
                    nu = &nu + alpha;
                }
            }
            num *= 2;
            let (q, r) = num.div_rem(&BigInt::from(denom));
            if !r.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "Freudenthal quotient for λ={lambda}, μ={mu} is not integral"
                )));
            }
            dominant.insert(mu.clone(), q);
        }
        order.sort_by(|a, b| rs.weight_order(a, b));
        Ok(Character {
            lambda: lambda.clone(),
            dominant,
            order,
        })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    /// m_λ(μ) for any weight μ.
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> BigInt {
        let (rep, _) = rs.dominant_representative(mu);
        self.dominant
            .get(&rep)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Dominant weights of L(λ) with their multiplicities, in output order.
    pub fn dominant_weights(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.order.iter().map(|w| (w, &self.dominant[w]))
    }

    /// Every weight of L(λ) (all W-orbits of the dominant ones).
    pub fn saturation(&self, rs: &RootSystem) -> Vec<Weight> {
        let mut out: Vec<Weight> = self.order.iter().flat_map(|w| rs.orbit(w)).collect();
        out.sort_by(|a, b| rs.weight_order(a, b));
        out
    }
}

pub fn freudenthal_m(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<BigInt> {
    check_rank(rs, mu)?;
    let ch = Character::new(rs, lambda)?;
    Ok(ch.multiplicity(rs, mu))
}

/// Σ_w (−1)^w P(w·λ − μ).
pub fn kostant_m(
    rs: &RootSystem,
    weyl: &WeylGroup,
    table: &PartitionTable,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    check_rank(rs, mu)?;
    let mut total = BigInt::zero();
    for (sign, x) in weyl.dot_orbit(rs, lambda) {
        let Some(r) = rs.root_coords(&(&x - mu)) else {
            continue;
        };
        if !r.is_nonneg() {
            continue;
        }
        let v = BigInt::from(table.big_p(&r));
        if sign > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// Π_{α>0} (λ+ρ, α) / (ρ, α).
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    let shifted = lambda + rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for r in rs.positive_root_coords() {
        num *= rs.pairing(&shifted, r);
        den *= rs.pairing(rs.rho(), r);
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!(
            "Weyl dimension of {lambda} is not integral"
        )));
    }
    Ok(q)
}

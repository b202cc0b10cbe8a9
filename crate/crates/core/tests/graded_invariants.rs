mod common;

use std::collections::HashMap;

use common::{multisets, sys, w};
use nilgrade::{
    euler_induced, Character, Family, GradedEngine, ModuleKind, RootSystem, Weight,
    DEFAULT_WEYL_CAP,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn engine(f: Family, r: usize) -> GradedEngine {
    GradedEngine::new(sys(f, r), DEFAULT_WEYL_CAP).unwrap()
}

/// Multiplicity of L(λ) in the Euler characteristic of Ind(Sⁿ(n*)), from the
/// weights of Sⁿ(n*) resolved one by one.
fn symmetric_power_oracle(rs: &RootSystem, n: usize) -> HashMap<Weight, i64> {
    let mut out = HashMap::new();
    for ms in multisets(rs.num_positive_roots(), n) {
        let mut nu = Weight::zero(rs.rank());
        for (count, a) in ms.iter().zip(rs.positive_roots()) {
            nu = &nu + &a.scale(*count as i64);
        }
        if let Some((sign, lam)) = euler_induced(rs, &nu) {
            *out.entry(lam).or_insert(0) += sign as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

#[test]
fn hesselink_matches_symmetric_power_oracle() {
    for f in [Family::A, Family::B, Family::G] {
        let e = engine(f, 2);
        let rs = e.root_system();
        for n in 0..=5usize {
            let oracle = symmetric_power_oracle(rs, n);
            let sweep = e.sweep(n as u32);
            for lam in oracle.keys() {
                assert!(sweep.contains(lam), "{f}2: {lam} outside sweep {n}");
            }
            for lam in &sweep {
                let d = e.hesselink_d(lam, n as i64).unwrap();
                let expected = oracle.get(lam).copied().unwrap_or(0);
                assert_eq!(d, BigInt::from(expected), "{f}2 d_{n}({lam})");
            }
        }
    }
}

#[test]
fn totals_exactness_and_support() {
    for f in [Family::A, Family::B, Family::G] {
        let e = engine(f, 2);
        let rs = e.root_system();
        let zero = Weight::zero(2);
        for lam in rs.dominant_weights_up_to_height(7) {
            let d = e.nilcone(&lam).unwrap();
            let a = e.wall(&lam).unwrap();
            let t = e.subregular(&lam).unwrap();
            let ch = Character::new(rs, &lam).unwrap();
            let m0 = ch.multiplicity(rs, &zero);
            let mt = ch.multiplicity(rs, rs.theta_short());
            assert_eq!(d.total(), m0, "{f}2 Σd({lam})");
            assert_eq!(a.total(), mt, "{f}2 Σa({lam})");
            assert_eq!(t.total(), &m0 - &mt, "{f}2 Σt({lam})");

            let h = rs.height(&lam).to_integer();
            for n in 0..=h + 3 {
                let (dn, an, tn) = (d.get(n), a.get(n), t.get(n));
                assert_eq!(dn, &tn + &an);
                assert!(!dn.is_negative() && !an.is_negative() && !tn.is_negative());
                if n > h {
                    assert!(dn.is_zero() && tn.is_zero(), "{f}2 support {lam} n={n}");
                }
            }
        }
    }
}

#[test]
fn weyl_kind_euler_characteristic_is_minus_m_theta() {
    let e = engine(Family::B, 2);
    let rs = e.root_system();
    let bound = 3;
    let sweep = e.sweep(bound);
    let top = sweep
        .iter()
        .map(|l| rs.height(l).to_integer())
        .max()
        .unwrap() as usize;
    let table = e
        .cohomology_table(ModuleKind::Weyl, bound, 2 * top + 1)
        .unwrap();
    for lam in sweep {
        let ch = Character::new(rs, &lam).unwrap();
        let mt = ch.multiplicity(rs, rs.theta_short());
        assert_eq!(table.euler_characteristic(&lam), -mt, "{lam}");
    }
}

#[test]
fn parity_vanishing_holds_for_every_kind() {
    let e = engine(Family::G, 2);
    for kind in ModuleKind::ALL {
        let t = e.cohomology_table(kind, 2, 9).unwrap();
        assert!(t.parity_violations().is_empty(), "{kind}");
        assert!(t.negative_entries().is_empty(), "{kind}");
    }
}

#[test]
fn simple_rows_combine_nilcone_and_wall() {
    let e = engine(Family::A, 2);
    let simple = e.cohomology_table(ModuleKind::Simple, 2, 7).unwrap();
    let wall = e.cohomology_table(ModuleKind::InducedWall, 2, 9).unwrap();
    let triv = e.cohomology_table(ModuleKind::Trivial, 2, 7).unwrap();
    for lam in e.sweep(2) {
        for i in 0..4 {
            assert_eq!(
                simple.get(2 * i + 1, &lam),
                triv.get(2 * i, &lam) + wall.get(2 * i + 1, &lam)
            );
        }
    }
}

#[test]
fn tilting_rows_are_exact_sequence_cokernels() {
    let e = engine(Family::B, 2);
    let tilt = e.cohomology_table(ModuleKind::Tilting, 2, 8).unwrap();
    let triv = e.cohomology_table(ModuleKind::Trivial, 2, 8).unwrap();
    let wall = e.cohomology_table(ModuleKind::InducedWall, 2, 8).unwrap();
    for lam in e.sweep(2) {
        for i in 1..=4 {
            assert_eq!(
                tilt.get(2 * i, &lam),
                triv.get(2 * i, &lam) - wall.get(2 * i - 1, &lam)
            );
        }
    }
}

#[test]
fn a1_subregular_is_a_point() {
    let e = engine(Family::A, 1);
    for m in 0..=10 {
        let t = e.subregular(&w(&[m])).unwrap();
        if m == 0 {
            assert_eq!(t.total(), BigInt::from(1));
            assert_eq!(t.get(0), BigInt::from(1));
        } else {
            assert!(t.is_zero(), "t({m}) = {t}");
        }
    }
}

#[test]
fn b3_positivity() {
    let e = engine(Family::B, 3);
    for lam in e.sweep(2) {
        e.subregular(&lam).unwrap();
    }
}

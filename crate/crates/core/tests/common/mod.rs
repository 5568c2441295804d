//! Shared generators for the property suites.
#![allow(dead_code)]

use gpdmf::{FuzzyNumber, Tolerance};
use proptest::prelude::*;

/// Tuples with `x`, `mu` in [-10, 10] and support lengths `e^[-3, 3]`.
pub fn arb_fuzzy() -> impl Strategy<Value = FuzzyNumber> {
    (
        -10.0..10.0f64,
        -3.0..3.0f64,
        -3.0..3.0f64,
        -10.0..10.0f64,
        -10.0..10.0f64,
    )
        .prop_map(|(x, ldm, ldp, mm, mp)| {
            FuzzyNumber::new(x, ldm.exp(), ldp.exp(), mm, mp).expect("generator stays in range")
        })
}

fn signed_magnitude(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo..hi, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
}

/// Units: every chart coordinate at least 0.1 away from its degenerate value.
pub fn arb_unit() -> impl Strategy<Value = FuzzyNumber> {
    (
        signed_magnitude(0.1, 10.0),
        signed_magnitude(0.1, 3.0),
        signed_magnitude(0.1, 3.0),
        signed_magnitude(0.1, 10.0),
        signed_magnitude(0.1, 10.0),
    )
        .prop_map(|(x, ldm, ldp, mm, mp)| {
            FuzzyNumber::new(x, ldm.exp(), ldp.exp(), mm, mp).expect("generator stays in range")
        })
}

/// Scalars kept small enough that scaled supports stay representable.
pub fn arb_lambda() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

pub fn fz(x: f64, dm: f64, dp: f64, mm: f64, mp: f64) -> FuzzyNumber {
    FuzzyNumber::new(x, dm, dp, mm, mp).unwrap()
}

pub fn tol() -> Tolerance {
    Tolerance::default()
}

/// Residual every law is checked against: Chebyshev distance in the chart.
pub const LAW_TOL: f64 = 1e-9;

pub fn assert_law(lhs: &FuzzyNumber, rhs: &FuzzyNumber, law: &str) {
    let res = gpdmf::coords::coord_distance(lhs, rhs);
    assert!(
        res <= LAW_TOL,
        "{law}: residual {res:e} for {lhs} vs {rhs}"
    );
}

//! The coordinate chart that makes the fuzzy arithmetic linear.
//!
//! `to_coords` sends `<x; d-, d+, mu-, mu+>` to `(x, ln d-, ln d+, mu-, mu+)`.
//! Under that chart addition and scalar multiplication become the ordinary
//! vector operations on R^5, and multiplication becomes the componentwise
//! product. `from_coords` is the exact inverse.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;

/// A point of R^5 in chart order `(x, ln d-, ln d+, mu-, mu+)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoordVector([f64; 5]);

impl CoordVector {
    pub fn new(c: [f64; 5]) -> Result<Self> {
        const FIELDS: [&str; 5] = ["c1", "c2", "c3", "c4", "c5"];
        for (field, value) in FIELDS.iter().zip(c) {
            if !value.is_finite() {
                return Err(Error::NonFinite { field, value });
            }
        }
        Ok(CoordVector(c))
    }

    pub fn as_array(&self) -> [f64; 5] {
        self.0
    }

    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }
}

/// Chart map; total on valid fuzzy numbers since `ln` of a positive finite
/// support length is always finite.
pub fn to_coords(f: &FuzzyNumber) -> CoordVector {
    CoordVector([
        f.x(),
        f.d_minus().ln(),
        f.d_plus().ln(),
        f.mu_minus(),
        f.mu_plus(),
    ])
}

/// Inverse chart map; `exp` of a large coordinate can overflow, which is
/// reported as a range error.
pub fn from_coords(c: &CoordVector) -> Result<FuzzyNumber> {
    let [c1, c2, c3, c4, c5] = c.as_array();
    let d_minus = c2.exp();
    let d_plus = c3.exp();
    if !d_minus.is_finite() || !d_plus.is_finite() || d_minus <= 0.0 || d_plus <= 0.0 {
        return Err(Error::Overflow { op: "from_coords" });
    }
    FuzzyNumber::new(c1, d_minus, d_plus, c4, c5)
}

/// The five fuzzy numbers whose coordinate images are the standard basis
/// of R^5.
pub fn basis() -> [FuzzyNumber; 5] {
    let e = std::f64::consts::E;
    [
        FuzzyNumber::new(1.0, 1.0, 1.0, 0.0, 0.0).expect("basis element is valid"),
        FuzzyNumber::new(0.0, e, 1.0, 0.0, 0.0).expect("basis element is valid"),
        FuzzyNumber::new(0.0, 1.0, e, 0.0, 0.0).expect("basis element is valid"),
        FuzzyNumber::new(0.0, 1.0, 1.0, 1.0, 0.0).expect("basis element is valid"),
        FuzzyNumber::new(0.0, 1.0, 1.0, 0.0, 1.0).expect("basis element is valid"),
    ]
}

/// Weighted combination of the basis, folded with `scale` and `add`.
/// Agrees with `from_coords` applied to the same weights.
pub fn reconstruct(weights: &[f64; 5]) -> Result<FuzzyNumber> {
    let mut acc = FuzzyNumber::zero();
    for (w, b) in weights.iter().zip(basis()) {
        acc = acc.add(&b.scale(*w)?)?;
    }
    Ok(acc)
}

/// Chebyshev distance between two fuzzy numbers in chart coordinates.
/// This is the residual metric used by the solvers.
pub fn coord_distance(a: &FuzzyNumber, b: &FuzzyNumber) -> f64 {
    let ca = to_coords(a).as_array();
    let cb = to_coords(b).as_array();
    ca.iter()
        .zip(cb)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

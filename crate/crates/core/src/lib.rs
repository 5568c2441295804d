//! Five-parameter fuzzy numbers with Gaussian-shaped membership curves.
//!
//! A fuzzy number here is a five-component value `<x; d-, d+, mu-, mu+>`:
//! peak location, left and right support lengths (strictly positive), and
//! the two flank shape parameters of a tangent-warped Gaussian membership
//! curve. The arithmetic is closed-form in the components, forms a
//! commutative ring with zero divisors, and becomes plain linear algebra on
//! R^5 under the chart in [`coords`].
//!
//! ```
//! use gpdmf::{FuzzyNumber, Tolerance};
//!
//! let a = FuzzyNumber::new(1.0, 2.0, 1.0, 0.5, 1.0)?;
//! let b = FuzzyNumber::new(2.0, 0.5, 3.0, 1.0, -1.0)?;
//! let sum = a.add(&b)?;
//! assert!(sum.sub(&b)?.approx_eq(&a, &Tolerance::default()));
//! # Ok::<(), gpdmf::Error>(())
//! ```

pub mod algebra;
pub mod coords;
pub mod error;
pub mod fuzzy;
pub mod membership;
pub mod solvers;

pub use error::{Component, Error, Result};
pub use fuzzy::{n_prod, n_sum, FuzzyNumber, Tolerance};

//! Five-component fuzzy numbers and their closed-form arithmetic.
//!
//! A value `<x; d-, d+, mu-, mu+>` describes a fuzzy quantity whose peak sits
//! at `x`, whose support extends `d-` to the left and `d+` to the right, and
//! whose flank shapes are controlled by `mu-` and `mu+`. Both support lengths
//! are strictly positive; crisp numbers are outside this type. Addition acts
//! multiplicatively on support lengths and additively everywhere else, which
//! is what makes every operation here closed-form.

use crate::error::{Component, Error, Result};

/// Absolute and relative comparison thresholds.
///
/// `abs_eps` guards degeneracy checks (unit tests against exact constants),
/// `rel_eps` scales with magnitude in [`FuzzyNumber::approx_eq`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs_eps: f64,
    rel_eps: f64,
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        for (field, value) in [("abs_eps", abs_eps), ("rel_eps", rel_eps)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { field, value });
            }
            if value < 0.0 {
                return Err(Error::Domain {
                    what: "tolerance threshold",
                    value,
                });
            }
        }
        Ok(Tolerance { abs_eps, rel_eps })
    }

    pub fn abs_eps(&self) -> f64 {
        self.abs_eps
    }

    pub fn rel_eps(&self) -> f64 {
        self.rel_eps
    }

    /// Combined absolute/relative closeness test for one pair of reals.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs_eps.max(self.rel_eps * a.abs().max(b.abs()))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-12,
            rel_eps: 1e-9,
        }
    }
}

/// A fuzzy number `<x; d-, d+, mu-, mu+>`.
///
/// Invariants, enforced by every constructor and operation:
/// all five fields are finite and `d- > 0`, `d+ > 0`.
/// Operations that would leave that range report [`Error::Overflow`]
/// instead of propagating infinities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyNumber {
    x: f64,
    d_minus: f64,
    d_plus: f64,
    mu_minus: f64,
    mu_plus: f64,
}

impl FuzzyNumber {
    pub fn new(x: f64, d_minus: f64, d_plus: f64, mu_minus: f64, mu_plus: f64) -> Result<Self> {
        for (field, value) in [
            ("x", x),
            ("d-", d_minus),
            ("d+", d_plus),
            ("mu-", mu_minus),
            ("mu+", mu_plus),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { field, value });
            }
        }
        for (field, value) in [("d-", d_minus), ("d+", d_plus)] {
            if value <= 0.0 {
                return Err(Error::NonPositiveSupport { field, value });
            }
        }
        Ok(FuzzyNumber {
            x,
            d_minus,
            d_plus,
            mu_minus,
            mu_plus,
        })
    }

    /// Validates the result of an arithmetic step; failures are range errors.
    fn from_op(
        op: &'static str,
        x: f64,
        d_minus: f64,
        d_plus: f64,
        mu_minus: f64,
        mu_plus: f64,
    ) -> Result<Self> {
        let in_range = x.is_finite()
            && mu_minus.is_finite()
            && mu_plus.is_finite()
            && d_minus.is_finite()
            && d_plus.is_finite()
            && d_minus > 0.0
            && d_plus > 0.0;
        if !in_range {
            return Err(Error::Overflow { op });
        }
        Ok(FuzzyNumber {
            x,
            d_minus,
            d_plus,
            mu_minus,
            mu_plus,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn d_minus(&self) -> f64 {
        self.d_minus
    }

    pub fn d_plus(&self) -> f64 {
        self.d_plus
    }

    pub fn mu_minus(&self) -> f64 {
        self.mu_minus
    }

    pub fn mu_plus(&self) -> f64 {
        self.mu_plus
    }

    /// Component lookup in storage order.
    pub fn component(&self, c: Component) -> f64 {
        match c {
            Component::X => self.x,
            Component::DMinus => self.d_minus,
            Component::DPlus => self.d_plus,
            Component::MuMinus => self.mu_minus,
            Component::MuPlus => self.mu_plus,
        }
    }

    /// Additive identity `<0; 1, 1, 0, 0>`.
    pub fn zero() -> Self {
        FuzzyNumber {
            x: 0.0,
            d_minus: 1.0,
            d_plus: 1.0,
            mu_minus: 0.0,
            mu_plus: 0.0,
        }
    }

    /// Multiplicative identity `<1; e, e, 1, 1>`.
    pub fn one() -> Self {
        FuzzyNumber {
            x: 1.0,
            d_minus: std::f64::consts::E,
            d_plus: std::f64::consts::E,
            mu_minus: 1.0,
            mu_plus: 1.0,
        }
    }

    /// Componentwise closeness: `x` and `mu` absolutely/relatively, the
    /// support lengths on the log scale.
    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        tol.close(self.x, other.x)
            && tol.close(self.d_minus.ln(), other.d_minus.ln())
            && tol.close(self.d_plus.ln(), other.d_plus.ln())
            && tol.close(self.mu_minus, other.mu_minus)
            && tol.close(self.mu_plus, other.mu_plus)
    }

    /// Ranking by the leading factor only; spreads and shapes do not count.
    pub fn compare(&self, other: &Self) -> std::cmp::Ordering {
        self.x
            .partial_cmp(&other.x)
            .expect("components are finite by invariant")
    }

    /// A unit (invertible element) keeps every component away from the
    /// degenerate value: `x != 0`, `d != 1`, `mu != 0`, all within `abs_eps`.
    pub fn is_unit(&self, tol: &Tolerance) -> bool {
        self.first_degenerate(tol).is_none()
    }

    pub(crate) fn first_degenerate(&self, tol: &Tolerance) -> Option<(Component, f64)> {
        let eps = tol.abs_eps();
        if self.x.abs() <= eps {
            return Some((Component::X, self.x));
        }
        if (self.d_minus - 1.0).abs() <= eps {
            return Some((Component::DMinus, self.d_minus));
        }
        if (self.d_plus - 1.0).abs() <= eps {
            return Some((Component::DPlus, self.d_plus));
        }
        if self.mu_minus.abs() <= eps {
            return Some((Component::MuMinus, self.mu_minus));
        }
        if self.mu_plus.abs() <= eps {
            return Some((Component::MuPlus, self.mu_plus));
        }
        None
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::from_op(
            "add",
            self.x + rhs.x,
            self.d_minus * rhs.d_minus,
            self.d_plus * rhs.d_plus,
            self.mu_minus + rhs.mu_minus,
            self.mu_plus + rhs.mu_plus,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Self::from_op(
            "sub",
            self.x - rhs.x,
            self.d_minus / rhs.d_minus,
            self.d_plus / rhs.d_plus,
            self.mu_minus - rhs.mu_minus,
            self.mu_plus - rhs.mu_plus,
        )
    }

    /// Additive inverse `<-x; 1/d-, 1/d+, -mu-, -mu+>`.
    pub fn neg(&self) -> Result<Self> {
        Self::from_op(
            "neg",
            -self.x,
            1.0 / self.d_minus,
            1.0 / self.d_plus,
            -self.mu_minus,
            -self.mu_plus,
        )
    }

    /// Scalar multiple: `<lambda x; d-^lambda, d+^lambda, lambda mu-, lambda mu+>`.
    pub fn scale(&self, lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::NonFinite {
                field: "lambda",
                value: lambda,
            });
        }
        Self::from_op(
            "scale",
            lambda * self.x,
            self.d_minus.powf(lambda),
            self.d_plus.powf(lambda),
            lambda * self.mu_minus,
            lambda * self.mu_plus,
        )
    }

    /// Product: support lengths combine through logarithms,
    /// `d = exp(ln d1 * ln d2)`, shapes multiply.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::from_op(
            "mul",
            self.x * rhs.x,
            (self.d_minus.ln() * rhs.d_minus.ln()).exp(),
            (self.d_plus.ln() * rhs.d_plus.ln()).exp(),
            self.mu_minus * rhs.mu_minus,
            self.mu_plus * rhs.mu_plus,
        )
    }

    /// Multiplicative inverse `<1/x; exp(1/ln d-), exp(1/ln d+), 1/mu-, 1/mu+>`.
    /// Defined only for units; the error names the first degenerate component.
    pub fn inv(&self, tol: &Tolerance) -> Result<Self> {
        if let Some((component, value)) = self.first_degenerate(tol) {
            return Err(Error::NotAUnit { component, value });
        }
        Self::from_op(
            "inv",
            1.0 / self.x,
            (1.0 / self.d_minus.ln()).exp(),
            (1.0 / self.d_plus.ln()).exp(),
            1.0 / self.mu_minus,
            1.0 / self.mu_plus,
        )
    }

    /// Quotient `a / b = a * inv(b)`; `b` must be a unit.
    pub fn div(&self, rhs: &Self, tol: &Tolerance) -> Result<Self> {
        self.mul(&rhs.inv(tol)?)
    }

    /// Integer power. `n = 0` yields [`FuzzyNumber::one`]; otherwise equal to
    /// the n-fold product, computed in closed form per component:
    /// `x^n`, `exp((ln d)^n)`, `mu^n`.
    pub fn pow(&self, n: u32) -> Result<Self> {
        match n {
            0 => Ok(Self::one()),
            1 => Ok(*self),
            _ => {
                let n = n as i32;
                Self::from_op(
                    "pow",
                    self.x.powi(n),
                    self.d_minus.ln().powi(n).exp(),
                    self.d_plus.ln().powi(n).exp(),
                    self.mu_minus.powi(n),
                    self.mu_plus.powi(n),
                )
            }
        }
    }
}

impl std::fmt::Display for FuzzyNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "<{}; {}, {}, {}, {}>",
            self.x, self.d_minus, self.d_plus, self.mu_minus, self.mu_plus
        )
    }
}

/// Sum of a non-empty list, folded left with [`FuzzyNumber::add`].
pub fn n_sum(terms: &[FuzzyNumber]) -> Result<FuzzyNumber> {
    let (first, rest) = terms
        .split_first()
        .ok_or(Error::EmptyList { op: "n_sum" })?;
    rest.iter().try_fold(*first, |acc, t| acc.add(t))
}

/// Product of a non-empty list, folded left with [`FuzzyNumber::mul`].
pub fn n_prod(factors: &[FuzzyNumber]) -> Result<FuzzyNumber> {
    let (first, rest) = factors
        .split_first()
        .ok_or(Error::EmptyList { op: "n_prod" })?;
    rest.iter().try_fold(*first, |acc, f| acc.mul(f))
}

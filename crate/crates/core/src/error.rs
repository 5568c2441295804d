//! Error and component types shared across the crate.

use thiserror::Error;

/// One of the five components of a fuzzy number, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    X,
    DMinus,
    DPlus,
    MuMinus,
    MuPlus,
}

impl Component {
    pub const ALL: [Component; 5] = [
        Component::X,
        Component::DMinus,
        Component::DPlus,
        Component::MuMinus,
        Component::MuPlus,
    ];

    /// Index of this component in coordinate vectors.
    pub fn index(self) -> usize {
        match self {
            Component::X => 0,
            Component::DMinus => 1,
            Component::DPlus => 2,
            Component::MuMinus => 3,
            Component::MuPlus => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Component::X => "x",
            Component::DMinus => "d-",
            Component::DPlus => "d+",
            Component::MuMinus => "mu-",
            Component::MuPlus => "mu+",
        }
    }
}

impl std::fmt::Display for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{field} must be finite, got {value}")]
    NonFinite { field: &'static str, value: f64 },

    #[error("support length {field} must be > 0, got {value}")]
    NonPositiveSupport { field: &'static str, value: f64 },

    #[error("{op} left the representable range (non-finite or zero support length)")]
    Overflow { op: &'static str },

    #[error("not a unit: component {component} = {value} is degenerate within tolerance")]
    NotAUnit { component: Component, value: f64 },

    #[error("{op} requires a non-empty list")]
    EmptyList { op: &'static str },

    #[error("coefficient {what} = {value} is zero within tolerance")]
    ZeroCoefficient { what: &'static str, value: f64 },

    #[error("equation is inconsistent in component {component}: reduces to 0 = c with c != 0")]
    DegenerateEquation { component: Component },

    #[error("solution set would hold {count} candidates, over the cap of {cap}")]
    SolutionCap { count: usize, cap: usize },

    #[error("binomial coefficient C({n}, {k}) overflows exact integer arithmetic")]
    CoefficientOverflow { n: u32, k: u32 },

    #[error("expansion would visit {terms:e} monomials, over the budget of {cap:e}")]
    TermBudget { terms: f64, cap: f64 },

    #[error("invalid polynomial: {reason}")]
    InvalidPolynomial { reason: &'static str },

    #[error("{what} must lie in its domain, got {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("precondition violated: {what}")]
    Precondition { what: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;

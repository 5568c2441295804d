//! Linear and quadratic fuzzy equation solvers.
//!
//! In chart coordinates every equation here splits into five independent
//! scalar equations, one per component. The solvers work componentwise,
//! assemble candidates from the per-component root sets, and accept only
//! candidates that survive substitution back into the original equation.

use crate::coords::{coord_distance, from_coords, to_coords, CoordVector};
use crate::error::{Component, Error, Result};
use crate::fuzzy::{FuzzyNumber, Tolerance};

/// Substitution residual (Chebyshev distance in chart coordinates) a
/// returned solution is allowed to leave.
pub const VERIFY_TOL: f64 = 1e-9;

/// Hard cap on the number of candidates a solution set may hold.
pub const SOLUTION_CAP: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Solved,
    /// Some component has a negative discriminant; the first one is named.
    NoRealSolution { component: Component },
}

/// Result of a solver run: verified solutions with their substitution
/// residuals, plus flags for components the equation left unconstrained
/// (those are pinned to the canonical chart value 0).
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    solutions: Vec<FuzzyNumber>,
    residuals: Vec<f64>,
    status: SolveStatus,
    free_components: Vec<Component>,
}

impl SolutionSet {
    pub fn solutions(&self) -> &[FuzzyNumber] {
        &self.solutions
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn status(&self) -> SolveStatus {
        self.status
    }

    pub fn free_components(&self) -> &[Component] {
        &self.free_components
    }
}

/// Solve `a x + b = c` for real `a != 0`:
/// `<(c.x - b.x)/a; (dc-/db-)^(1/a), (dc+/db+)^(1/a), (mc- - mb-)/a, (mc+ - mb+)/a>`.
pub fn solve_linear_real(a: f64, b: &FuzzyNumber, c: &FuzzyNumber) -> Result<FuzzyNumber> {
    if !a.is_finite() {
        return Err(Error::NonFinite {
            field: "a",
            value: a,
        });
    }
    if a.abs() <= Tolerance::default().abs_eps() {
        return Err(Error::ZeroCoefficient { what: "a", value: a });
    }
    let cb = to_coords(c).as_array();
    let bb = to_coords(b).as_array();
    from_coords(&CoordVector::new([
        (cb[0] - bb[0]) / a,
        (cb[1] - bb[1]) / a,
        (cb[2] - bb[2]) / a,
        (cb[3] - bb[3]) / a,
        (cb[4] - bb[4]) / a,
    ])?)
}

/// Solve `a x + b = c` for a unit fuzzy coefficient `a`: componentwise
/// `(c - b) / a` in chart coordinates.
pub fn solve_linear_fuzzy(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    c: &FuzzyNumber,
    tol: &Tolerance,
) -> Result<FuzzyNumber> {
    if let Some((component, value)) = a.first_degenerate(tol) {
        return Err(Error::NotAUnit { component, value });
    }
    let ca = to_coords(a).as_array();
    let cb = to_coords(b).as_array();
    let cc = to_coords(c).as_array();
    let mut out = [0.0f64; 5];
    for i in 0..5 {
        out[i] = (cc[i] - cb[i]) / ca[i];
    }
    from_coords(&CoordVector::new(out)?)
}

enum ComponentRoots {
    Roots(Vec<f64>),
    Free,
    NoReal,
}

/// Real roots of `alpha t^2 + beta t + gamma = 0`, with degeneracy handled
/// against `eps`: vanishing leading terms fall back to the linear and
/// constant cases, and the discriminant is treated as zero when it is
/// negligible next to `beta^2` and `4 alpha gamma`.
fn scalar_quadratic(
    alpha: f64,
    beta: f64,
    gamma: f64,
    eps: f64,
    component: Component,
) -> Result<ComponentRoots> {
    if alpha.abs() <= eps {
        if beta.abs() <= eps {
            return if gamma.abs() <= eps {
                Ok(ComponentRoots::Free)
            } else {
                Err(Error::DegenerateEquation { component })
            };
        }
        return Ok(ComponentRoots::Roots(vec![-gamma / beta]));
    }
    let four_ag = 4.0 * alpha * gamma;
    let delta = beta * beta - four_ag;
    if delta.abs() <= eps * (beta * beta).max(four_ag.abs()) {
        return Ok(ComponentRoots::Roots(vec![-beta / (2.0 * alpha)]));
    }
    if delta < 0.0 {
        return Ok(ComponentRoots::NoReal);
    }
    // larger-magnitude root first through the stable form, partner by Vieta
    let q = -0.5 * (beta + delta.sqrt().copysign(beta));
    let mut roots = vec![q / alpha, gamma / q];
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    Ok(ComponentRoots::Roots(roots))
}

/// Solve `a x^2 + b x + c = 0`. The five components separate in the chart;
/// the solution set is the Cartesian product of the per-component root
/// sets, ordered lexicographically by root index (roots ascending, last
/// component fastest), each candidate verified by substitution.
pub fn solve_quadratic(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    c: &FuzzyNumber,
    tol: &Tolerance,
) -> Result<SolutionSet> {
    if a.x().abs() <= tol.abs_eps() {
        return Err(Error::ZeroCoefficient {
            what: "a.x",
            value: a.x(),
        });
    }
    let ca = to_coords(a).as_array();
    let cb = to_coords(b).as_array();
    let cc = to_coords(c).as_array();

    let mut free_components = Vec::new();
    let mut no_real: Option<Component> = None;
    let mut component_roots: Vec<Vec<f64>> = Vec::with_capacity(5);
    for component in Component::ALL {
        let i = component.index();
        match scalar_quadratic(ca[i], cb[i], cc[i], tol.abs_eps(), component)? {
            ComponentRoots::Roots(r) => component_roots.push(r),
            ComponentRoots::Free => {
                free_components.push(component);
                component_roots.push(vec![0.0]);
            }
            ComponentRoots::NoReal => {
                if no_real.is_none() {
                    no_real = Some(component);
                }
                component_roots.push(vec![]);
            }
        }
    }
    if let Some(component) = no_real {
        return Ok(SolutionSet {
            solutions: Vec::new(),
            residuals: Vec::new(),
            status: SolveStatus::NoRealSolution { component },
            free_components,
        });
    }

    let total: usize = component_roots.iter().map(Vec::len).product();
    if total > SOLUTION_CAP {
        return Err(Error::SolutionCap {
            count: total,
            cap: SOLUTION_CAP,
        });
    }

    let mut solutions = Vec::with_capacity(total);
    let mut residuals = Vec::with_capacity(total);
    for flat in 0..total {
        let mut idx = flat;
        let mut coords = [0.0f64; 5];
        for i in (0..5).rev() {
            let roots = &component_roots[i];
            coords[i] = roots[idx % roots.len()];
            idx /= roots.len();
        }
        let candidate = from_coords(&CoordVector::new(coords)?)?;
        let value = a
            .mul(&candidate.pow(2)?)?
            .add(&b.mul(&candidate)?)?
            .add(c)?;
        let residual = coord_distance(&value, &FuzzyNumber::zero());
        // the substitution oracle has the final word on every candidate
        if residual <= VERIFY_TOL {
            solutions.push(candidate);
            residuals.push(residual);
        }
    }
    Ok(SolutionSet {
        solutions,
        residuals,
        status: SolveStatus::Solved,
        free_components,
    })
}

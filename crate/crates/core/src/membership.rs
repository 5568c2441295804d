//! Membership curves: evaluation, shape fitting, and sampling.
//!
//! The curve of `<x0; d-, d+, mu-, mu+>` is zero outside the closed support
//! `[x0 - d-, x0 + d+]`, exactly one at `x0`, and on each open side equals
//! `Phi(tan(w) - mu)` where `w` sweeps `(-pi/2, pi/2)` linearly across the
//! side and `Phi` is the standard normal cdf. The tangent warp gives both
//! flanks full Gaussian shape in finite width; `mu` slides the flank along
//! the Gaussian, steering how much weight hugs the peak.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyNumber;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

/// Warp arguments are kept this far inside (-pi/2, pi/2) before `tan`;
/// past the clamp the cdf saturates to 0 or 1 on its own.
const WARP_CLAMP: f64 = FRAC_PI_2 - 1e-12;

/// Standard normal cdf, `Phi(t) = erfc(-t / sqrt 2) / 2`.
///
/// `Phi(0) = 0.5` exactly; absolute error stays below 1e-12 across
/// `[-8, 8]` (the erfc backing is faithfully rounded).
pub fn std_normal_cdf(t: f64) -> f64 {
    0.5 * libm::erfc(-t / SQRT_2)
}

/// Standard normal density.
fn std_normal_pdf(t: f64) -> f64 {
    (-0.5 * t * t).exp() / (2.0 * PI).sqrt()
}

// Rational initial estimate for the normal quantile (Acklam's algorithm,
// |relative error| < 1.15e-9), finished with one Newton step against
// `std_normal_cdf`.
const ACKLAM_A: [f64; 6] = [
    -3.969683028665376e+01,
    2.209460984245205e+02,
    -2.759285104469687e+02,
    1.38357751867269e+02,
    -3.066479806614716e+01,
    2.506628277459239e+00,
];
const ACKLAM_B: [f64; 5] = [
    -5.447609879822406e+01,
    1.615858368580409e+02,
    -1.556989798598866e+02,
    6.680131188771972e+01,
    -1.328068155288572e+01,
];
const ACKLAM_C: [f64; 6] = [
    -7.784894002430293e-03,
    -3.223964580411365e-01,
    -2.400758277161838e+00,
    -2.549732539343734e+00,
    4.374664141464968e+00,
    2.938163982698783e+00,
];
const ACKLAM_D: [f64; 4] = [
    7.784695709041462e-03,
    3.224671290700398e-01,
    2.445134137142996e+00,
    3.754408661907416e+00,
];
const ACKLAM_LOW: f64 = 0.02425;

fn acklam_tail(q: f64) -> f64 {
    let [c1, c2, c3, c4, c5, c6] = ACKLAM_C;
    let [d1, d2, d3, d4] = ACKLAM_D;
    (((((c1 * q + c2) * q + c3) * q + c4) * q + c5) * q + c6)
        / ((((d1 * q + d2) * q + d3) * q + d4) * q + 1.0)
}

/// Inverse of [`std_normal_cdf`] on `(0, 1)`.
///
/// After the polish step `|Phi(result) - y| <= 1e-10` holds with wide
/// margin for `y` in `(1e-9, 1 - 1e-9)`.
pub fn std_normal_quantile(y: f64) -> Result<f64> {
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Domain {
            what: "quantile argument",
            value: y,
        });
    }
    let estimate = if y < ACKLAM_LOW {
        acklam_tail((-2.0 * y.ln()).sqrt())
    } else if y > 1.0 - ACKLAM_LOW {
        // 1 - y is exact here, so the two tails are handled symmetrically
        -acklam_tail((-2.0 * (1.0 - y).ln()).sqrt())
    } else {
        let q = y - 0.5;
        let r = q * q;
        let [a1, a2, a3, a4, a5, a6] = ACKLAM_A;
        let [b1, b2, b3, b4, b5] = ACKLAM_B;
        q * (((((a1 * r + a2) * r + a3) * r + a4) * r + a5) * r + a6)
            / (((((b1 * r + b2) * r + b3) * r + b4) * r + b5) * r + 1.0)
    };
    let density = std_normal_pdf(estimate);
    if density > 0.0 {
        let polished = estimate - (std_normal_cdf(estimate) - y) / density;
        if polished.is_finite() {
            return Ok(polished);
        }
    }
    // density underflow: deep in a tail the estimate is the best we can do
    Ok(estimate)
}

/// Membership degree of `f` at `x`.
pub fn eval(f: &FuzzyNumber, x: f64) -> f64 {
    let x0 = f.x();
    if x == x0 {
        return 1.0;
    }
    if x <= x0 - f.d_minus() || x >= x0 + f.d_plus() {
        return 0.0;
    }
    let (w, mu) = if x < x0 {
        let d = f.d_minus();
        (PI * (x - x0 + d) / d - FRAC_PI_2, f.mu_minus())
    } else {
        let d = f.d_plus();
        (PI * (x0 + d - x) / d - FRAC_PI_2, f.mu_plus())
    };
    std_normal_cdf(w.clamp(-WARP_CLAMP, WARP_CLAMP).tan() - mu)
}

/// An interior point of one flank together with its membership degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlPoint {
    x: f64,
    y: f64,
}

impl ControlPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite {
                field: "control point abscissa",
                value: x,
            });
        }
        if !(y > 0.0 && y < 1.0) {
            return Err(Error::Domain {
                what: "control point membership degree",
                value: y,
            });
        }
        Ok(ControlPoint { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

/// Recover the shape parameters from the support and one control point per
/// flank: `mu = tan(w) - quantile(y)` with `w` the warp argument of the
/// control abscissa.
pub fn fit_mu(
    x0: f64,
    d_minus: f64,
    d_plus: f64,
    p: &ControlPoint,
    q: &ControlPoint,
) -> Result<(f64, f64)> {
    if !x0.is_finite() {
        return Err(Error::NonFinite {
            field: "x0",
            value: x0,
        });
    }
    for (field, value) in [("d-", d_minus), ("d+", d_plus)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { field, value });
        }
        if value <= 0.0 {
            return Err(Error::NonPositiveSupport { field, value });
        }
    }
    if !(p.x() > x0 - d_minus && p.x() < x0) {
        return Err(Error::Precondition {
            what: "control point P must lie strictly inside (x0 - d-, x0)",
        });
    }
    if !(q.x() > x0 && q.x() < x0 + d_plus) {
        return Err(Error::Precondition {
            what: "control point Q must lie strictly inside (x0, x0 + d+)",
        });
    }
    let w_left = PI * (p.x() - x0 + d_minus) / d_minus - FRAC_PI_2;
    let w_right = PI * (x0 + d_plus - q.x()) / d_plus - FRAC_PI_2;
    let mu_minus = w_left.tan() - std_normal_quantile(p.y())?;
    let mu_plus = w_right.tan() - std_normal_quantile(q.y())?;
    if !mu_minus.is_finite() || !mu_plus.is_finite() {
        return Err(Error::Overflow { op: "fit_mu" });
    }
    Ok((mu_minus, mu_plus))
}

/// A fuzzy number described by its support triple `a < b < c` plus one
/// control point on each flank.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriControlForm {
    a: f64,
    b: f64,
    c: f64,
    p: ControlPoint,
    q: ControlPoint,
}

impl TriControlForm {
    pub fn new(a: f64, b: f64, c: f64, p: ControlPoint, q: ControlPoint) -> Result<Self> {
        for (field, value) in [("a", a), ("b", b), ("c", c)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { field, value });
            }
        }
        if !(a < b && b < c) {
            return Err(Error::Precondition {
                what: "support triple must satisfy a < b < c",
            });
        }
        if !(p.x() > a && p.x() < b) {
            return Err(Error::Precondition {
                what: "control point P must lie strictly inside (a, b)",
            });
        }
        if !(q.x() > b && q.x() < c) {
            return Err(Error::Precondition {
                what: "control point Q must lie strictly inside (b, c)",
            });
        }
        Ok(TriControlForm { a, b, c, p, q })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn p(&self) -> ControlPoint {
        self.p
    }

    pub fn q(&self) -> ControlPoint {
        self.q
    }
}

/// Build the tuple form from a tri-control description.
pub fn from_tri_control(t: &TriControlForm) -> Result<FuzzyNumber> {
    let x0 = t.b();
    let d_minus = t.b() - t.a();
    let d_plus = t.c() - t.b();
    let (mu_minus, mu_plus) = fit_mu(x0, d_minus, d_plus, &t.p(), &t.q())?;
    FuzzyNumber::new(x0, d_minus, d_plus, mu_minus, mu_plus)
}

/// Read a tuple back as a tri-control description, evaluating the curve at
/// the two requested abscissae. Fails if either degree saturates to 0 or 1.
pub fn to_tri_control(f: &FuzzyNumber, p_x: f64, q_x: f64) -> Result<TriControlForm> {
    let a = f.x() - f.d_minus();
    let b = f.x();
    let c = f.x() + f.d_plus();
    let p = ControlPoint::new(p_x, eval(f, p_x))?;
    let q = ControlPoint::new(q_x, eval(f, q_x))?;
    TriControlForm::new(a, b, c, p, q)
}

/// `n` evenly spaced curve samples over the support widened by `margin`,
/// endpoints included. The exact peak `(x0, 1)` is appended if the grid
/// missed it.
pub fn sample(f: &FuzzyNumber, n: usize, margin: f64) -> Result<Vec<(f64, f64)>> {
    if n < 2 {
        return Err(Error::Precondition {
            what: "sample requires at least 2 points",
        });
    }
    if !margin.is_finite() {
        return Err(Error::NonFinite {
            field: "margin",
            value: margin,
        });
    }
    if margin < 0.0 {
        return Err(Error::Domain {
            what: "margin",
            value: margin,
        });
    }
    let lo = f.x() - f.d_minus() - margin;
    let hi = f.x() + f.d_plus() + margin;
    let step = (hi - lo) / (n - 1) as f64;
    let mut points = Vec::with_capacity(n + 1);
    for i in 0..n {
        let x = if i == n - 1 { hi } else { lo + step * i as f64 };
        points.push((x, eval(f, x)));
    }
    if !points.iter().any(|(x, _)| *x == f.x()) {
        points.push((f.x(), 1.0));
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fz(x: f64, dm: f64, dp: f64, mm: f64, mp: f64) -> FuzzyNumber {
        FuzzyNumber::new(x, dm, dp, mm, mp).unwrap()
    }

    #[test]
    fn cdf_hits_frozen_values() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
        assert!((std_normal_cdf(-1.0) - 0.15865525393145705).abs() < 1e-15);
        assert!((std_normal_cdf(-2.0) - 0.02275013194817921).abs() < 1e-15);
        assert!((std_normal_cdf(0.5) - 0.6914624612740131).abs() < 1e-15);
        assert!((std_normal_cdf(3.0) - 0.9986501019683699).abs() < 1e-15);
        assert!((std_normal_cdf(1.959963984540054) - 0.975).abs() < 1e-12);
        let tail = std_normal_cdf(-6.0);
        assert!((tail - 9.86587645037698e-10).abs() < 1e-22);
    }

    #[test]
    fn cdf_is_symmetric_and_saturates() {
        for t in [0.3, 1.7, 4.2] {
            let s = std_normal_cdf(t) + std_normal_cdf(-t);
            assert!((s - 1.0).abs() < 1e-15);
        }
        assert!(std_normal_cdf(40.0) == 1.0);
        assert!(std_normal_cdf(-40.0) == 0.0);
    }

    #[test]
    fn quantile_hits_frozen_values() {
        assert_eq!(std_normal_quantile(0.5).unwrap(), 0.0);
        let q = std_normal_quantile(0.975).unwrap();
        assert!((q - 1.959963984540054).abs() < 1e-10);
        let q = std_normal_quantile(0.15865525393145705).unwrap();
        assert!((q + 1.0).abs() < 1e-12);
    }

    #[test]
    fn quantile_round_trips_in_probability() {
        for y in [
            1e-9, 1e-6, 1e-3, 0.02, 0.0243, 0.3, 0.5, 0.7, 0.9757, 0.98, 0.999, 1.0 - 1e-6,
            1.0 - 1e-9,
        ] {
            let t = std_normal_quantile(y).unwrap();
            assert!(
                (std_normal_cdf(t) - y).abs() <= 1e-10,
                "round trip failed at y = {y}"
            );
        }
    }

    #[test]
    fn quantile_round_trips_in_t() {
        for t in [-5.0, -3.0, -1.0, -0.1, 0.0, 0.7, 2.4, 4.8] {
            let back = std_normal_quantile(std_normal_cdf(t)).unwrap();
            assert!((back - t).abs() <= 1e-9, "round trip failed at t = {t}");
        }
    }

    #[test]
    fn quantile_rejects_out_of_domain() {
        for y in [0.0, 1.0, -0.1, 1.1, f64::NAN] {
            assert!(matches!(
                std_normal_quantile(y),
                Err(Error::Domain { .. })
            ));
        }
    }

    #[test]
    fn eval_worked_example() {
        // symmetric tuple, quarter point of the left flank: Phi(tan(-pi/4))
        let f = fz(0.0, 2.0, 2.0, 0.0, 0.0);
        let y = eval(&f, -1.5);
        assert!((y - 0.15865525393145705).abs() < 1e-14);
        assert_eq!(eval(&f, 1.5), y); // mirror symmetry with equal flanks
    }

    #[test]
    fn eval_peak_endpoints_and_outside() {
        let f = fz(1.0, 2.0, 1.0, 0.5, 1.0);
        assert_eq!(eval(&f, 1.0), 1.0);
        assert_eq!(eval(&f, -1.0), 0.0);
        assert_eq!(eval(&f, 2.0), 0.0);
        assert_eq!(eval(&f, -7.3), 0.0);
        assert_eq!(eval(&f, 55.0), 0.0);
    }

    #[test]
    fn eval_one_sided_limits_reach_one() {
        let f = fz(1.0, 2.0, 1.0, 0.5, 1.0);
        assert_eq!(eval(&f, 1.0 - 1e-13), 1.0);
        assert_eq!(eval(&f, 1.0 + 1e-13), 1.0);
        // and the support edges fade out
        assert!(eval(&f, -1.0 + 1e-9) < 1e-12);
        assert!(eval(&f, 2.0 - 1e-9) < 1e-12);
    }

    #[test]
    fn eval_is_monotone_on_each_flank() {
        let f = fz(1.0, 2.0, 1.0, 0.5, 1.0);
        let mut prev = 0.0;
        for i in 0..=1000 {
            let x = -1.0 + 2.0 * i as f64 / 1000.0;
            let y = eval(&f, x);
            assert!(y >= prev, "left flank dipped at x = {x}");
            prev = y;
        }
        let mut prev = 1.0;
        for i in 0..=1000 {
            let x = 1.0 + i as f64 / 1000.0;
            let y = eval(&f, x);
            assert!(y <= prev, "right flank rose at x = {x}");
            prev = y;
        }
    }

    #[test]
    fn control_point_validation() {
        assert!(ControlPoint::new(0.0, 0.5).is_ok());
        assert!(matches!(
            ControlPoint::new(0.0, 0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            ControlPoint::new(0.0, 1.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            ControlPoint::new(f64::INFINITY, 0.5),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn fit_mu_recovers_shape_parameters() {
        let f = fz(1.0, 2.0, 1.0, 0.5, 1.0);
        let p = ControlPoint::new(0.2, eval(&f, 0.2)).unwrap();
        let q = ControlPoint::new(1.6, eval(&f, 1.6)).unwrap();
        let (mm, mp) = fit_mu(1.0, 2.0, 1.0, &p, &q).unwrap();
        assert!((mm - 0.5).abs() < 1e-8);
        assert!((mp - 1.0).abs() < 1e-8);
    }

    #[test]
    fn fit_mu_rejects_misplaced_control_points() {
        let p = ControlPoint::new(0.2, 0.4).unwrap();
        let q = ControlPoint::new(1.6, 0.3).unwrap();
        // P on the wrong side of the peak
        assert!(matches!(
            fit_mu(0.1, 1.0, 2.0, &p, &q),
            Err(Error::Precondition { .. })
        ));
        // Q outside the right support
        let far_q = ControlPoint::new(9.0, 0.3).unwrap();
        assert!(matches!(
            fit_mu(1.0, 2.0, 1.0, &p, &far_q),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            fit_mu(1.0, -2.0, 1.0, &p, &q),
            Err(Error::NonPositiveSupport { .. })
        ));
    }

    #[test]
    fn tri_control_round_trip() {
        let p = ControlPoint::new(0.0, 0.4).unwrap();
        let q = ControlPoint::new(1.5, 0.3).unwrap();
        let t = TriControlForm::new(-1.0, 1.0, 2.0, p, q).unwrap();
        let f = from_tri_control(&t).unwrap();
        assert_eq!(f.x(), 1.0);
        assert_eq!(f.d_minus(), 2.0);
        assert_eq!(f.d_plus(), 1.0);
        assert!((eval(&f, 0.0) - 0.4).abs() < 1e-9);
        assert!((eval(&f, 1.5) - 0.3).abs() < 1e-9);
        let back = to_tri_control(&f, 0.0, 1.5).unwrap();
        assert!((back.p().y() - 0.4).abs() < 1e-9);
        assert!((back.q().y() - 0.3).abs() < 1e-9);
        assert_eq!(back.a(), -1.0);
        assert_eq!(back.b(), 1.0);
        assert_eq!(back.c(), 2.0);
    }

    #[test]
    fn tri_control_validation() {
        let p = ControlPoint::new(0.0, 0.4).unwrap();
        let q = ControlPoint::new(1.5, 0.3).unwrap();
        assert!(matches!(
            TriControlForm::new(1.0, 1.0, 2.0, p, q),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            TriControlForm::new(0.5, 1.0, 2.0, p, q),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn sample_contract() {
        let f = fz(1.0, 2.0, 1.0, 0.5, 1.0);
        let two = sample(&f, 2, 0.0).unwrap();
        assert_eq!(two.len(), 3);
        assert_eq!(two[0], (-1.0, 0.0));
        assert_eq!(two[1], (2.0, 0.0));
        assert_eq!(two[2], (1.0, 1.0));

        let pts = sample(&f, 201, 0.0).unwrap();
        assert!(pts.len() == 201 || pts.len() == 202);
        assert!(pts.iter().any(|&(x, y)| x == 1.0 && y == 1.0));
        let mut sorted = pts.clone();
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let peak = sorted.iter().position(|&(x, _)| x == 1.0).unwrap();
        for w in sorted[..=peak].windows(2) {
            assert!(w[0].1 <= w[1].1);
        }
        for w in sorted[peak..].windows(2) {
            assert!(w[0].1 >= w[1].1);
        }

        let with_margin = sample(&f, 11, 0.5).unwrap();
        assert_eq!(with_margin[0].0, -1.5);
        assert_eq!(with_margin[10].0, 2.5);
        assert_eq!(with_margin[0].1, 0.0);

        assert!(matches!(
            sample(&f, 1, 0.0),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(sample(&f, 5, -0.1), Err(Error::Domain { .. })));
    }
}

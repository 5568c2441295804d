//! Polynomial algebra over fuzzy numbers: expansions, evaluation, and the
//! root-coefficient relations.
//!
//! Because addition and multiplication here form a commutative ring, the
//! binomial and multinomial theorems hold verbatim, with integer
//! coefficients entering through scalar multiplication.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, Tolerance};

/// Largest number of monomials `multinomial_expand` will visit.
pub const TERM_BUDGET: f64 = 1e6;

/// Exact binomial coefficient. Internally u128, so every value that fits
/// u64 is computed without rounding; `n <= 62` never overflows.
pub fn binomial_coefficient(n: u32, k: u32) -> Result<u64> {
    if k > n {
        return Err(Error::Precondition {
            what: "binomial coefficient requires k <= n",
        });
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // multiply before dividing keeps every intermediate an integer
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::CoefficientOverflow { n, k })?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::CoefficientOverflow { n, k })
}

/// Expand `(a + b)^n` as `sum of C(n,k) a^k b^(n-k)`, `k` ascending.
pub fn binomial_expand(a: &FuzzyNumber, b: &FuzzyNumber, n: u32) -> Result<FuzzyNumber> {
    if n < 1 {
        return Err(Error::Precondition {
            what: "binomial_expand requires n >= 1",
        });
    }
    let mut acc = FuzzyNumber::zero();
    for k in 0..=n {
        let coeff = binomial_coefficient(n, k)? as f64;
        let term = a.pow(k)?.mul(&b.pow(n - k)?)?;
        acc = acc.add(&term.scale(coeff)?)?;
    }
    Ok(acc)
}

fn for_each_composition<F>(n: u32, slots: usize, buf: &mut Vec<u32>, f: &mut F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    if slots == 1 {
        buf.push(n);
        f(buf)?;
        buf.pop();
        return Ok(());
    }
    for i in (0..=n).rev() {
        buf.push(i);
        for_each_composition(n - i, slots - 1, buf, f)?;
        buf.pop();
    }
    Ok(())
}

/// Multinomial coefficient `n! / (k1! ... ks!)` as a product of binomials.
fn multinomial_coefficient(parts: &[u32]) -> Result<u64> {
    let mut prefix = 0u32;
    let mut acc = 1u128;
    for &k in parts {
        prefix += k;
        acc = acc
            .checked_mul(binomial_coefficient(prefix, k)? as u128)
            .ok_or(Error::CoefficientOverflow { n: prefix, k })?;
    }
    u64::try_from(acc).map_err(|_| Error::CoefficientOverflow {
        n: prefix,
        k: *parts.last().unwrap_or(&0),
    })
}

/// Expand `(t1 + ... + ts)^n` over all exponent compositions, first slot
/// varying slowest. Refuses inputs whose worst-case monomial count `s^n`
/// exceeds [`TERM_BUDGET`].
pub fn multinomial_expand(terms: &[FuzzyNumber], n: u32) -> Result<FuzzyNumber> {
    let s = terms.len();
    if s < 2 {
        return Err(Error::Precondition {
            what: "multinomial_expand requires at least 2 terms",
        });
    }
    if n < 1 {
        return Err(Error::Precondition {
            what: "multinomial_expand requires n >= 1",
        });
    }
    let worst_case = (s as f64).powi(n as i32);
    if worst_case > TERM_BUDGET {
        return Err(Error::TermBudget {
            terms: worst_case,
            cap: TERM_BUDGET,
        });
    }
    let mut acc = FuzzyNumber::zero();
    let mut buf = Vec::with_capacity(s);
    for_each_composition(n, s, &mut buf, &mut |parts: &[u32]| {
        let coeff = multinomial_coefficient(parts)? as f64;
        let mut monomial = FuzzyNumber::one();
        for (t, &k) in terms.iter().zip(parts) {
            monomial = monomial.mul(&t.pow(k)?)?;
        }
        acc = acc.add(&monomial.scale(coeff)?)?;
        Ok(())
    })?;
    Ok(acc)
}

/// Dense polynomial with fuzzy coefficients, stored by ascending degree.
///
/// Non-empty; the leading coefficient of a non-constant polynomial must not
/// collapse to zero within the default tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyPolynomial {
    coeffs: Vec<FuzzyNumber>,
}

impl FuzzyPolynomial {
    pub fn new(coeffs: Vec<FuzzyNumber>) -> Result<Self> {
        let last = coeffs.last().ok_or(Error::InvalidPolynomial {
            reason: "a polynomial needs at least one coefficient",
        })?;
        if coeffs.len() > 1 && last.approx_eq(&FuzzyNumber::zero(), &Tolerance::default()) {
            return Err(Error::InvalidPolynomial {
                reason: "leading coefficient of a non-constant polynomial is zero",
            });
        }
        Ok(FuzzyPolynomial { coeffs })
    }

    pub fn coeffs(&self) -> &[FuzzyNumber] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Horner evaluation from the leading coefficient down.
pub fn poly_eval(p: &FuzzyPolynomial, x: &FuzzyNumber) -> Result<FuzzyNumber> {
    let mut iter = p.coeffs().iter().rev();
    let mut acc = *iter.next().expect("polynomial is non-empty");
    for c in iter {
        acc = acc.mul(x)?.add(c)?;
    }
    Ok(acc)
}

/// Check the root-coefficient relations for `a x^2 + b x + c` against the
/// candidate root pair: `r1 + r2 = -(b / a)` and `r1 r2 = c / a`.
/// `a` must be a unit.
pub fn vieta_check(
    a: &FuzzyNumber,
    b: &FuzzyNumber,
    c: &FuzzyNumber,
    r1: &FuzzyNumber,
    r2: &FuzzyNumber,
    tol: &Tolerance,
) -> Result<bool> {
    let inv_a = a.inv(tol)?;
    let sum_ok = r1.add(r2)?.approx_eq(&inv_a.mul(b)?.neg()?, tol);
    let prod_ok = r1.mul(r2)?.approx_eq(&inv_a.mul(c)?, tol);
    Ok(sum_ok && prod_ok)
}

//! Text forms of fuzzy tuples: the `<x; d-, d+, mu-, mu+>` literal grammar
//! and digit-controlled rendering of numbers and tuples.

use gpdmf::FuzzyNumber;
use std::f64::consts::{E, PI};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// A real number token: a float literal or one of the symbolic constants
/// `e`, `1/e`, `pi`, each optionally negated.
pub fn parse_real(token: &str) -> Result<f64, ParseError> {
    let t = token.trim();
    let (sign, body) = match t.strip_prefix('-') {
        // keep "-1e-3" and friends on the float path; only symbolic
        // constants are peeled here
        Some(rest) if rest.trim_start().parse::<f64>().is_err() => (-1.0, rest.trim_start()),
        _ => (1.0, t),
    };
    let symbolic = match body {
        "e" => Some(E),
        "1/e" => Some(1.0 / E),
        "pi" => Some(PI),
        _ => None,
    };
    if let Some(v) = symbolic {
        return Ok(sign * v);
    }
    t.parse::<f64>().map_err(|_| {
        ParseError::new(format!(
            "invalid number {t:?} (expected a float or e, 1/e, pi, optionally negated)"
        ))
    })
}

/// Parse a `<x; d-, d+, mu-, mu+>` literal into a validated tuple.
pub fn parse_fuzzy(text: &str) -> Result<FuzzyNumber, ParseError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|rest| rest.strip_suffix('>'))
        .ok_or_else(|| {
            ParseError::new(format!(
                "fuzzy literal {t:?} must be wrapped in angle brackets, like <1; 2, 1, 0.5, 1>"
            ))
        })?;
    let (head, tail) = inner.split_once(';').ok_or_else(|| {
        ParseError::new(format!(
            "fuzzy literal {t:?} needs ';' between the peak and the spread fields"
        ))
    })?;
    let fields: Vec<&str> = tail.split(',').collect();
    if fields.len() != 4 {
        return Err(ParseError::new(format!(
            "fuzzy literal {t:?} needs 4 comma-separated fields after ';' (d-, d+, mu-, mu+), found {}",
            fields.len()
        )));
    }
    let names = ["x", "d-", "d+", "mu-", "mu+"];
    let mut values = [0.0f64; 5];
    for (i, raw) in std::iter::once(head).chain(fields).enumerate() {
        values[i] = parse_real(raw)
            .map_err(|e| ParseError::new(format!("field {}: {e}", names[i])))?;
    }
    FuzzyNumber::new(values[0], values[1], values[2], values[3], values[4])
        .map_err(|e| ParseError::new(format!("invalid fuzzy tuple: {e}")))
}

/// A control point written as `x:y`.
pub fn parse_control_point(token: &str) -> Result<(f64, f64), ParseError> {
    let t = token.trim();
    let (x, y) = t.split_once(':').ok_or_else(|| {
        ParseError::new(format!("control point {t:?} must be written as x:y"))
    })?;
    Ok((
        parse_real(x).map_err(|e| ParseError::new(format!("control point abscissa: {e}")))?,
        parse_real(y).map_err(|e| ParseError::new(format!("control point degree: {e}")))?,
    ))
}

/// Render `v` rounded to `digits + 1` significant digits (capped at 17), so
/// parsing the result back loses at most a relative 10^-digits. Plain
/// decimal notation is used when the exponent is moderate, scientific
/// otherwise, with trailing zeros trimmed either way.
pub fn format_real(v: f64, digits: u8) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sig = (digits as usize + 1).min(17);
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp_str) = sci.split_once('e').expect("float formatting yields exponent");
    let exp: i32 = exp_str.parse().expect("exponent is an integer");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let mut digits_only: String = mantissa.chars().filter(|c| *c != '.').collect();
    while digits_only.len() > 1 && digits_only.ends_with('0') {
        digits_only.pop();
    }
    if (-5..=15).contains(&exp) {
        let point = exp + 1; // digits before the decimal point
        if point <= 0 {
            format!("{sign}0.{}{}", "0".repeat(-point as usize), digits_only)
        } else if (point as usize) >= digits_only.len() {
            format!(
                "{sign}{}{}",
                digits_only,
                "0".repeat(point as usize - digits_only.len())
            )
        } else {
            let (int_part, frac_part) = digits_only.split_at(point as usize);
            format!("{sign}{int_part}.{frac_part}")
        }
    } else if digits_only.len() == 1 {
        format!("{sign}{digits_only}e{exp}")
    } else {
        let (first, rest) = digits_only.split_at(1);
        format!("{sign}{first}.{rest}e{exp}")
    }
}

/// Render a tuple in the literal grammar, each component via [`format_real`].
pub fn format_fuzzy(f: &FuzzyNumber, digits: u8) -> String {
    format!(
        "<{}; {}, {}, {}, {}>",
        format_real(f.x(), digits),
        format_real(f.d_minus(), digits),
        format_real(f.d_plus(), digits),
        format_real(f.mu_minus(), digits),
        format_real(f.mu_plus(), digits),
    )
}

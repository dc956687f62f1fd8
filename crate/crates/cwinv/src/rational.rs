//! Exact rational numbers and their textual forms.
//!
//! All invariant values in this crate are rational; `Rational` is the one
//! number type they are reported in. Backed by [`num::BigRational`], which
//! keeps values in lowest terms with a positive denominator, so equality is
//! plain coordinate equality.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for `n/d` used throughout tests and examples.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"` with optional surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {t:?}: invalid numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {t:?}: invalid denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("bad rational {t:?}: zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational as `n` or `n/d`, matching what [`parse_rational`] reads.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion with `digits` places after the point, rounded to
/// nearest (ties away from zero).
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r.numer().abs() * &scale;
    let den = r.denom();
    let mut q = &scaled / den;
    let rem = &scaled % den;
    if &rem * 2u32 >= *den {
        q += BigInt::one();
    }
    let int_part = &q / &scale;
    let frac_part = &q % &scale;
    let sign = if r.numer().sign() == Sign::Minus && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

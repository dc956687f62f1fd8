//! Integer polynomials, cyclotomic polynomials, and the small amount of
//! rational polynomial arithmetic needed to invert cyclotomic numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense polynomial over the integers, coefficients lowest degree first,
/// with no trailing zeros stored. The zero polynomial has an empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// Builds from coefficients, lowest degree first; trailing zeros are
    /// trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Divides exactly, erroring if the divisor is zero or the division
    /// leaves a remainder (in either the polynomial or coefficient sense).
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument(
                "polynomial division by zero".into(),
            ));
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let n = self.coeffs.len();
        let d = divisor.coeffs.len();
        if n < d {
            return Err(Error::InvalidArgument(
                "polynomial division is not exact".into(),
            ));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let top = rem[i + d - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InvalidArgument(
                    "polynomial division is not exact".into(),
                ));
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let prod = &q * b;
                rem[i + j] -= prod;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument(
                "polynomial division is not exact".into(),
            ));
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Divisors of `n` in increasing order.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "totient of zero");
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// The n-th cyclotomic polynomial, computed as (x^n - 1) divided by the
/// cyclotomic polynomials of the proper divisors of n. Results are memoized
/// globally, so repeated calls are cheap.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u64) -> IntPolynomial {
    assert!(n > 0, "cyclotomic polynomial of order zero");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = IntPolynomial::x_pow_minus_one(n);
    for d in divisors(n) {
        if d < n {
            num = num
                .exact_div(&cyclotomic_polynomial(d))
                .expect("x^n - 1 is divisible by every cyclotomic factor");
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

// Rational coefficient vectors, lowest degree first, used only by the
// extended Euclidean inversion in the cyclotomic module. Trailing zeros are
// kept trimmed by each operation.

pub(crate) fn qtrim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Division with remainder in Q[x]: returns (quotient, remainder).
pub(crate) fn qdivmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "rational polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let lead = b.last().unwrap();
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let top = rem[i + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let q = top / lead;
        for (j, c) in b.iter().enumerate() {
            let prod = &q * c;
            rem[i + j] -= prod;
        }
        quot[i] = q;
    }
    qtrim(&mut quot);
    qtrim(&mut rem);
    (quot, rem)
}

/// Extended Euclidean algorithm in Q[x]: returns (g, s, t) with
/// s*a + t*b = g and g the (nonzero, not normalized) last nonzero remainder.
pub(crate) fn qext_gcd(
    a: &[Rational],
    b: &[Rational],
) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    qtrim(&mut r0);
    qtrim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = Vec::new();
    let mut t0: Vec<Rational> = Vec::new();
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r2) = qdivmod(&r0, &r1);
        let s2 = qsub(&s0, &qmulv(&q, &s1));
        let t2 = qsub(&t0, &qmulv(&q, &t1));
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

fn qmulv(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(&mut out);
    out
}

fn qsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qtrim(&mut out);
    out
}

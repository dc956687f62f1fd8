//! Exact arithmetic in the cyclotomic fields Q(zeta_n), together with exact
//! values of cos(2 pi a/p), sin(pi a/p), csc(pi a/p), and cot(pi a/p).
//!
//! Elements are rational coordinate vectors in the power basis
//! 1, zeta_n, ..., zeta_n^(phi(n)-1), reduced modulo the n-th cyclotomic
//! polynomial. The representation is canonical, so equality is coordinate
//! equality and an element is rational iff every coordinate past the first
//! vanishes.
//!
//! Trigonometric values with denominator p live in Q(zeta_m) with
//! m = lcm(2p, 4): that order is divisible by 4, so the field contains i,
//! and sin(pi a/p) = (zeta^A - zeta^-A) / 2i is an honest element of it.
//! Cosecants are built from the identity
//! 1/(zeta^c - 1) = (1/m) * sum_{j=1}^{m-1} j zeta^{jc}, which keeps the
//! whole construction in integer arithmetic; the generic extended-Euclid
//! `inverse` is still available and the two routes are checked against each
//! other in the tests.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::complex::Complex64;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{cyclotomic_polynomial, euler_phi, qext_gcd, qtrim};
use crate::rational::Rational;

/// Largest denominator accepted by the exact trig constructors. Keeps index
/// arithmetic comfortably inside i64/i128 bounds and refuses allocations
/// that could never finish anyway.
pub const MAX_TRIG_DENOMINATOR: u64 = 1 << 20;

/// Shared per-field data: the minimal polynomial and the reductions of
/// zeta^j for every degree j that unreduced vectors can reach (products of
/// reduced elements and raw group-ring vectors of length n).
struct Field {
    phi: usize,
    min_poly: crate::poly::IntPolynomial,
    /// rows[j] = zeta^(phi+j) in the power basis; entries are integers.
    rows: Vec<Vec<BigInt>>,
    /// The same rows with i64 entries whenever every entry fits.
    rows_i64: Option<Vec<Vec<i64>>>,
}

impl Field {
    fn build(order: u64) -> Field {
        let phi = euler_phi(order) as usize;
        let min_poly = cyclotomic_polynomial(order);
        let max_degree = std::cmp::max(2 * phi.saturating_sub(1), order as usize - 1);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        if max_degree >= phi {
            let base: Vec<BigInt> = (0..phi).map(|i| -min_poly.coeff(i)).collect();
            rows.push(base);
            for _ in phi..max_degree {
                let next = {
                    let prev = rows.last().unwrap();
                    let top = prev[phi - 1].clone();
                    let mut next = vec![BigInt::zero(); phi];
                    for i in 1..phi {
                        next[i] = prev[i - 1].clone();
                    }
                    if !top.is_zero() {
                        let base = &rows[0];
                        for i in 0..phi {
                            next[i] += &top * &base[i];
                        }
                    }
                    next
                };
                rows.push(next);
            }
        }
        let rows_i64 = rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_i64()).collect::<Option<Vec<i64>>>())
            .collect::<Option<Vec<Vec<i64>>>>();
        Field {
            phi,
            min_poly,
            rows,
            rows_i64,
        }
    }
}

fn field(order: u64) -> Arc<Field> {
    assert!(order > 0, "cyclotomic field of order zero");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&order) {
        return f.clone();
    }
    let built = Arc::new(Field::build(order));
    cache
        .lock()
        .unwrap()
        .entry(order)
        .or_insert(built)
        .clone()
}

fn reduce_bigint(f: &Field, v: &[BigInt]) -> Vec<BigInt> {
    let phi = f.phi;
    let mut out: Vec<BigInt> = v.iter().take(phi).cloned().collect();
    out.resize(phi, BigInt::zero());
    for (j, c) in v.iter().enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        let row = &f.rows[j - phi];
        for i in 0..phi {
            if !row[i].is_zero() {
                out[i] += c * &row[i];
            }
        }
    }
    out
}

fn reduce_rational(f: &Field, v: Vec<Rational>) -> Vec<Rational> {
    let phi = f.phi;
    let mut out: Vec<Rational> = v.iter().take(phi).cloned().collect();
    out.resize_with(phi, Rational::zero);
    for (j, c) in v.iter().enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        let row = &f.rows[j - phi];
        for i in 0..phi {
            if !row[i].is_zero() {
                out[i] += mul_rat_int(c, &row[i]);
            }
        }
    }
    out
}

fn mul_rat_int(r: &Rational, n: &BigInt) -> Rational {
    Rational::new(r.numer() * n, r.denom().clone())
}

/// Element of the cyclotomic field Q(zeta_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Order n of the ambient field Q(zeta_n).
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coordinates in the power basis 1, zeta, ..., zeta^(phi(n)-1).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// # Panics
    ///
    /// Panics if `order == 0`, as do all the constructors below.
    pub fn zero(order: u64) -> Self {
        let f = field(order);
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); f.phi],
        }
    }

    pub fn one(order: u64) -> Self {
        Cyclotomic::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        let mut out = Cyclotomic::zero(order);
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(order: u64, value: i64) -> Self {
        Cyclotomic::from_rational(order, Rational::from_integer(BigInt::from(value)))
    }

    /// zeta_n^k for any integer k (taken modulo n).
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let f = field(order);
        let e = (k as i128).rem_euclid(order as i128) as usize;
        let mut v = vec![BigInt::zero(); order as usize];
        v[e] = BigInt::one();
        let coeffs = reduce_bigint(&f, &v)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        Cyclotomic {
            order,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True iff the element lies in Q, i.e. every coordinate past the
    /// constant one vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let phi = self.coeffs.len();
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let f = field(self.order);
        Ok(Cyclotomic {
            order: self.order,
            coeffs: reduce_rational(&f, conv),
        })
    }

    /// Multiplies by a rational scalar.
    pub fn scaled(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial over Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { order: self.order });
        }
        let f = field(self.order);
        let mut a = self.coeffs.clone();
        qtrim(&mut a);
        let phi_q: Vec<Rational> = f
            .min_poly
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let (g, s, _t) = qext_gcd(&a, &phi_q);
        if g.len() != 1 {
            return Err(Error::ContractViolation(format!(
                "inverse in Q(zeta_{}): gcd with the minimal polynomial has degree {}",
                self.order,
                g.len().saturating_sub(1)
            )));
        }
        let ginv = g[0].recip();
        let inv: Vec<Rational> = s.iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs: reduce_rational(&f, inv),
        })
    }

    /// Extracts the value as a rational number, erroring if the element
    /// does not lie in Q.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational {
                order: self.order,
                element: self.to_string(),
            })
        }
    }

    /// Numerical value as a complex number.
    ///
    /// `precision_bits` below 53 is rejected; any request of 53 bits or
    /// more is computed in f64 (53-bit mantissa), which is the highest
    /// precision available here. The error is bounded by a few ulps per
    /// basis term, so roughly phi(n) * max|coefficient| * 2^-50 overall.
    pub fn to_complex(&self, precision_bits: u32) -> Result<Complex64> {
        if precision_bits < 53 {
            return Err(Error::InvalidArgument(format!(
                "precision_bits = {precision_bits} unsupported: the float backend provides 53"
            )));
        }
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / n;
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::new(theta.cos(), theta.sin()) * coeff;
        }
        Ok(acc)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }
}

impl fmt::Display for Cyclotomic {
    /// GAP-style notation: `E(n)` is a primitive n-th root of unity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            let mag_str = crate::rational::format_rational(&mag);
            if k == 0 {
                write!(f, "{mag_str}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag_str}*")?;
                }
                write!(f, "E({})", self.order)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try_method:ident, $what:expr) => {
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            /// # Panics
            ///
            /// Panics when the operands live in different fields; use the
            /// `try_` form to handle that as an error.
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$try_method(&rhs).expect($what)
            }
        }
        impl std::ops::$trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try_method(rhs).expect($what)
            }
        }
    };
}

forward_binop!(Add, add, try_add, "cyclotomic addition");
forward_binop!(Sub, sub, try_sub, "cyclotomic subtraction");
forward_binop!(Mul, mul, try_mul, "cyclotomic multiplication");

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// The four exact trigonometric values the invariant formulas need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    /// cos(2 pi a / p)
    CosTwoPi,
    /// sin(pi a / p)
    SinPiOver,
    /// csc(pi a / p)
    CscPiOver,
    /// cot(pi a / p)
    CotPiOver,
}

impl TrigKind {
    fn name(self) -> &'static str {
        match self {
            TrigKind::CosTwoPi => "cos(2*pi*a/p)",
            TrigKind::SinPiOver => "sin(pi*a/p)",
            TrigKind::CscPiOver => "csc(pi*a/p)",
            TrigKind::CotPiOver => "cot(pi*a/p)",
        }
    }
}

/// Order of the cyclotomic field hosting every trig value with denominator
/// p: m = lcm(2p, 4).
pub fn trig_field_order(p: u64) -> u64 {
    num::integer::lcm(2 * p, 4)
}

/// Exact trigonometric value as a cyclotomic number in
/// Q(zeta_{trig_field_order(p)}).
///
/// For the sin, csc, and cot kinds the argument must not be a multiple of
/// pi, i.e. `a` must be nonzero mod p.
pub fn trig_value(kind: TrigKind, a: i64, p: u64) -> Result<Cyclotomic> {
    if p == 0 {
        return Err(Error::InvalidArgument(
            "trig denominator p must be positive".into(),
        ));
    }
    if p > MAX_TRIG_DENOMINATOR {
        return Err(Error::InvalidArgument(format!(
            "trig denominator p = {p} exceeds the exact-arithmetic cap {MAX_TRIG_DENOMINATOR}"
        )));
    }
    let m = trig_field_order(p);
    match kind {
        TrigKind::CosTwoPi => {
            let e = ((a as i128).rem_euclid(p as i128) as u64) * (m / p);
            let mut v = vec![0i64; m as usize];
            v[e as usize] += 1;
            v[((m - e) % m) as usize] += 1;
            Ok(from_i64_scaled(m, &v, &Rational::new(1.into(), 2.into())))
        }
        TrigKind::SinPiOver | TrigKind::CscPiOver | TrigKind::CotPiOver => {
            if (a as i128).rem_euclid(p as i128) == 0 {
                return Err(Error::TrigPole {
                    kind: kind.name(),
                    a,
                    p,
                });
            }
            let m4 = m / 4;
            let aa = ((a as i128).rem_euclid(2 * p as i128) as u64) * (m / (2 * p));
            match kind {
                TrigKind::SinPiOver => {
                    // sin = (zeta^A - zeta^-A) / 2i and 1/i = -zeta^(m/4).
                    let mut v = vec![0i64; m as usize];
                    v[((aa + m4) % m) as usize] -= 1;
                    v[((m - aa + m4) % m) as usize] += 1;
                    Ok(from_i64_scaled(m, &v, &Rational::new(1.into(), 2.into())))
                }
                TrigKind::CscPiOver => {
                    let s = geometric_series_vec(m, (2 * aa) % m);
                    let mut v = vec![0i64; m as usize];
                    rotate_add(&mut v, &s, (m4 + aa) % m, 1);
                    Ok(from_i64_scaled(m, &v, &Rational::new(2.into(), m.into())))
                }
                TrigKind::CotPiOver => {
                    // cot = cos/sin = (zeta^A + zeta^-A)/2 * csc.
                    let s = geometric_series_vec(m, (2 * aa) % m);
                    let mut v = vec![0i64; m as usize];
                    rotate_add(&mut v, &s, (m4 + 2 * aa) % m, 1);
                    rotate_add(&mut v, &s, m4, 1);
                    Ok(from_i64_scaled(m, &v, &Rational::new(1.into(), m.into())))
                }
                _ => unreachable!(),
            }
        }
    }
}

/// m / (zeta_m^c - 1) as an unreduced group-ring vector: position j*c mod m
/// carries weight j. Requires c nonzero mod m.
pub(crate) fn geometric_series_vec(m: u64, c: u64) -> Vec<i64> {
    let c = c % m;
    debug_assert!(c != 0, "geometric series at zeta^0");
    let mut v = vec![0i64; m as usize];
    let mut pos = 0u64;
    for j in 1..m {
        pos += c;
        if pos >= m {
            pos -= m;
        }
        v[pos as usize] += j as i64;
    }
    v
}

/// acc += sign * (v rotated by shift), all vectors of the same length.
pub(crate) fn rotate_add(acc: &mut [i64], v: &[i64], shift: u64, sign: i64) {
    let m = acc.len();
    let s = shift as usize % m;
    for (i, x) in v.iter().enumerate() {
        if *x != 0 {
            let mut idx = i + s;
            if idx >= m {
                idx -= m;
            }
            acc[idx] += sign * x;
        }
    }
}

/// Cyclic convolution of equal-length vectors. Entries stay well inside
/// i64 for the vector sizes the trig caps allow.
pub(crate) fn cyclic_convolve_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    debug_assert_eq!(a.len(), b.len());
    let m = a.len();
    let mut out = vec![0i64; m];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if *y != 0 {
                let mut k = i + j;
                if k >= m {
                    k -= m;
                }
                out[k] += x * y;
            }
        }
    }
    out
}

/// Reduces a raw group-ring vector (exponent j carries v[j]) to power-basis
/// integer coordinates of length phi(order).
pub(crate) fn reduce_int_vec(order: u64, v: &[i64]) -> Vec<BigInt> {
    let wide: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    reduce_i128_vec(order, &wide)
}

/// Same reduction for i128 vectors. Runs a checked machine-integer fast
/// path and falls back to BigInt on any overflow, so the result is exact
/// regardless of magnitudes.
pub(crate) fn reduce_i128_vec(order: u64, v: &[i128]) -> Vec<BigInt> {
    let f = field(order);
    if let Some(rows) = &f.rows_i64 {
        if let Some(out) = try_reduce_checked(f.phi, rows, v) {
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    reduce_bigint(&f, &big)
}

fn try_reduce_checked(phi: usize, rows: &[Vec<i64>], v: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; phi];
    for (i, slot) in out.iter_mut().enumerate().take(v.len().min(phi)) {
        *slot = v[i];
    }
    for (j, &c) in v.iter().enumerate().skip(phi) {
        if c == 0 {
            continue;
        }
        let row = &rows[j - phi];
        for i in 0..phi {
            if row[i] != 0 {
                let term = c.checked_mul(row[i] as i128)?;
                out[i] = out[i].checked_add(term)?;
            }
        }
    }
    Some(out)
}

/// Builds a field element from reduced integer coordinates and a common
/// rational scale factor.
pub(crate) fn from_reduced_ints(order: u64, ints: &[BigInt], scale: &Rational) -> Cyclotomic {
    let coeffs = ints
        .iter()
        .map(|c| {
            if c.is_zero() {
                Rational::zero()
            } else {
                mul_rat_int(scale, c)
            }
        })
        .collect();
    Cyclotomic {
        order,
        coeffs,
    }
}

fn from_i64_scaled(order: u64, v: &[i64], scale: &Rational) -> Cyclotomic {
    let ints = reduce_int_vec(order, v);
    from_reduced_ints(order, &ints, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = zeta(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_integer(4, -1));
    }

    #[test]
    fn zeta3_power_sum() {
        let z = zeta(3, 1);
        let z2 = zeta(3, 2);
        assert_eq!(&z + &z2, Cyclotomic::from_integer(3, -1));
    }

    #[test]
    fn sqrt_two_from_zeta8() {
        let s = &zeta(8, 1) + &zeta(8, -1);
        assert_eq!(&s * &s, Cyclotomic::from_integer(8, 2));
    }

    #[test]
    fn power_sums_vanish() {
        for n in [5u64, 7, 12] {
            let mut acc = Cyclotomic::zero(n);
            for k in 0..n {
                acc = &acc + &zeta(n, k as i64);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(zeta(12, -1), zeta(12, 11));
        assert_eq!(zeta(12, 25), zeta(12, 1));
    }

    #[test]
    fn inverse_of_one_and_roots() {
        assert_eq!(Cyclotomic::one(12).inverse().unwrap(), Cyclotomic::one(12));
        assert_eq!(zeta(40, 7).inverse().unwrap(), zeta(40, 33));
        assert_eq!(zeta(7, 3).inverse().unwrap(), zeta(7, 4));
    }

    #[test]
    fn inverse_of_golden_combination() {
        // x = 2cos(2pi/5) satisfies x^2 + x - 1 = 0, so 1/x = x + 1.
        let x = &zeta(5, 1) + &zeta(5, -1);
        let expected = &x + &Cyclotomic::one(5);
        assert_eq!(x.inverse().unwrap(), expected);
        assert_eq!(&x * &x.inverse().unwrap(), Cyclotomic::one(5));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            Cyclotomic::zero(9).inverse(),
            Err(Error::DivisionByZero { order: 9 })
        ));
    }

    #[test]
    fn order_mismatch_detected() {
        let a = zeta(4, 1);
        let b = zeta(6, 1);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::OrderMismatch { left: 4, right: 6 })
        ));
    }

    #[test]
    fn rationality_checks() {
        let r = Cyclotomic::from_rational(12, rat(-3, 7));
        assert!(r.is_rational());
        assert_eq!(r.to_rational().unwrap(), rat(-3, 7));
        let z = zeta(5, 1);
        assert!(matches!(z.to_rational(), Err(Error::NotRational { .. })));
    }

    #[test]
    fn trig_rational_values() {
        let cases: &[(TrigKind, i64, u64, i64, i64)] = &[
            (TrigKind::CosTwoPi, 1, 3, -1, 2),
            (TrigKind::CosTwoPi, 1, 4, 0, 1),
            (TrigKind::CosTwoPi, 1, 6, 1, 2),
            (TrigKind::CosTwoPi, 0, 5, 1, 1),
            (TrigKind::SinPiOver, 1, 2, 1, 1),
            (TrigKind::SinPiOver, 1, 6, 1, 2),
            (TrigKind::CscPiOver, 1, 2, 1, 1),
            (TrigKind::CscPiOver, 1, 6, 2, 1),
            (TrigKind::CotPiOver, 1, 4, 1, 1),
            (TrigKind::CotPiOver, 1, 2, 0, 1),
            (TrigKind::CotPiOver, 3, 4, -1, 1),
        ];
        for &(kind, a, p, n, d) in cases {
            let v = trig_value(kind, a, p).unwrap();
            assert_eq!(
                v.to_rational().unwrap(),
                rat(n, d),
                "{kind:?} at a = {a}, p = {p}"
            );
        }
    }

    #[test]
    fn trig_poles_rejected() {
        for kind in [TrigKind::SinPiOver, TrigKind::CscPiOver, TrigKind::CotPiOver] {
            assert!(matches!(
                trig_value(kind, 0, 5),
                Err(Error::TrigPole { .. })
            ));
            assert!(matches!(
                trig_value(kind, 10, 5),
                Err(Error::TrigPole { .. })
            ));
        }
        assert!(trig_value(TrigKind::CosTwoPi, 0, 5).is_ok());
    }

    #[test]
    fn csc_matches_extended_euclid_inverse() {
        for (a, p) in [(1i64, 3u64), (2, 5), (1, 7), (3, 8), (5, 12)] {
            let fast = trig_value(TrigKind::CscPiOver, a, p).unwrap();
            let via_inverse = trig_value(TrigKind::SinPiOver, a, p)
                .unwrap()
                .inverse()
                .unwrap();
            assert_eq!(fast, via_inverse, "a = {a}, p = {p}");
        }
    }

    #[test]
    fn double_angle_identity() {
        // cos(2 pi a/p) = 1 - 2 sin^2(pi a/p).
        for (a, p) in [(1i64, 3u64), (1, 5), (2, 5), (3, 7), (5, 8), (7, 12)] {
            let cos = trig_value(TrigKind::CosTwoPi, a, p).unwrap();
            let sin = trig_value(TrigKind::SinPiOver, a, p).unwrap();
            let rhs = &Cyclotomic::one(cos.order()) - &(&sin * &sin).scaled(&rat(2, 1));
            assert_eq!(cos, rhs, "a = {a}, p = {p}");
        }
    }

    #[test]
    fn cot_is_cos_csc_product() {
        // cot(pi a/p) * sin(pi a/p) recovers cos(pi a/p), whose square is
        // (1 + cos(2 pi a/p))/2.
        for (a, p) in [(1i64, 5u64), (2, 7), (3, 8)] {
            let cot = trig_value(TrigKind::CotPiOver, a, p).unwrap();
            let sin = trig_value(TrigKind::SinPiOver, a, p).unwrap();
            let cos_half = &cot * &sin;
            let cos_double = trig_value(TrigKind::CosTwoPi, a, p).unwrap();
            let expected =
                (&Cyclotomic::one(cos_double.order()) + &cos_double).scaled(&rat(1, 2));
            assert_eq!(&cos_half * &cos_half, expected, "a = {a}, p = {p}");
        }
    }

    #[test]
    fn complex_embedding() {
        let z = zeta(8, 1);
        let c = z.to_complex(53).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((c.re - s).abs() < 1e-12 && (c.im - s).abs() < 1e-12);
        assert!(z.to_complex(128).is_ok());
        assert!(matches!(
            z.to_complex(24),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn trig_floats_match_libm() {
        for p in [3u64, 7, 12, 30] {
            for a in 1..p as i64 {
                let exact = trig_value(TrigKind::CscPiOver, a, p)
                    .unwrap()
                    .to_complex(53)
                    .unwrap();
                let direct = 1.0 / (std::f64::consts::PI * a as f64 / p as f64).sin();
                assert!(exact.im.abs() < 1e-9, "a = {a}, p = {p}");
                assert!((exact.re - direct).abs() < 1e-9, "a = {a}, p = {p}");
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::zero(5).to_string(), "0");
        assert_eq!(Cyclotomic::from_rational(5, rat(-1, 2)).to_string(), "-1/2");
        let e = &zeta(12, 1) - &Cyclotomic::from_rational(12, rat(2, 3));
        assert_eq!(e.to_string(), "-2/3 + E(12)");
    }

    #[test]
    fn huge_denominator_rejected() {
        assert!(trig_value(TrigKind::CscPiOver, 1, MAX_TRIG_DENOMINATOR + 1).is_err());
    }
}

//! Symmetrized Alexander polynomials and the coefficient functionals that
//! feed surgery formulas.
//!
//! Exponents may be half-integers (those show up for knots in manifolds
//! whose meridian generates an even-order homology class), so keys store
//! doubled exponents: the term c * T^(e/2) sits at key e. A polynomial
//! either has all keys even (integer exponents) or all keys odd; mixed
//! parities are rejected, as are asymmetric coefficient sets and stored
//! zeros.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// Symmetric Laurent polynomial in T^(1/2) with rational coefficients,
/// invariant under T -> 1/T.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymmetricLaurent {
    coeffs: BTreeMap<i64, Rational>,
}

/// Checks a raw term list the way the constructors do, reporting the first
/// violation: duplicate exponents, explicit zero coefficients, mixed
/// exponent parity, then asymmetry.
pub fn validate_terms(terms: &[(i64, Rational)]) -> Result<()> {
    let mut map: BTreeMap<i64, &Rational> = BTreeMap::new();
    for (e, c) in terms {
        if map.insert(*e, c).is_some() {
            return Err(Error::InvalidArgument(format!(
                "duplicate doubled exponent {e}"
            )));
        }
    }
    for (e, c) in terms {
        if c.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "zero coefficient stored at doubled exponent {e}"
            )));
        }
    }
    let mut parities = terms.iter().map(|(e, _)| e.rem_euclid(2));
    if let Some(first) = parities.next() {
        if parities.any(|p| p != first) {
            return Err(Error::InvalidArgument(
                "mixed exponent parity: integer and half-integer terms in one polynomial".into(),
            ));
        }
    }
    for (e, c) in terms {
        match map.get(&-e) {
            Some(c2) if *c2 == c => {}
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "not symmetric under T -> 1/T at doubled exponent {e}"
                )));
            }
        }
    }
    Ok(())
}

impl SymmetricLaurent {
    pub fn zero() -> Self {
        SymmetricLaurent::default()
    }

    /// The constant polynomial 1 (the unknot).
    pub fn one() -> Self {
        SymmetricLaurent::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        SymmetricLaurent { coeffs }
    }

    /// Builds from (doubled exponent, coefficient) terms after validating
    /// them with [`validate_terms`].
    pub fn from_terms(terms: &[(i64, Rational)]) -> Result<Self> {
        validate_terms(terms)?;
        Ok(SymmetricLaurent {
            coeffs: terms.iter().cloned().collect(),
        })
    }

    /// Integer-coefficient convenience used all over the tests.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Result<Self> {
        let expanded: Vec<(i64, Rational)> = terms
            .iter()
            .map(|&(e, c)| (e, Rational::from_integer(BigInt::from(c))))
            .collect();
        SymmetricLaurent::from_terms(&expanded)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at doubled exponent e (zero when absent).
    pub fn coeff(&self, doubled_exp: i64) -> Rational {
        self.coeffs
            .get(&doubled_exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms as (doubled exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_doubled_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when every exponent is an integer (every key even); the zero
    /// polynomial counts as integer-exponent.
    pub fn has_integer_exponents(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// A(1): the sum of all coefficients.
    pub fn evaluate_at_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.values() {
            acc += c;
        }
        acc
    }

    fn require_integer_exponents(&self, what: &str) -> Result<()> {
        if self.has_integer_exponents() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{what} is defined for integer-exponent polynomials only"
            )))
        }
    }

    /// The weight sum_{j >= 1} j^2 a_j driving integral surgery formulas.
    pub fn surgery_weight(&self) -> Result<Rational> {
        self.require_integer_exponents("surgery weight")?;
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            if *e > 0 {
                let j = e / 2;
                acc += c * Rational::from_integer(BigInt::from(j * j));
            }
        }
        Ok(acc)
    }

    /// The zero-surgery functional theta(i) = sum_{j >= 1} j a_{|i|+j}.
    pub fn theta_zero_surgery(&self, i: i64) -> Result<Rational> {
        self.require_integer_exponents("theta functional")?;
        let base = i.abs();
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            let n = e / 2;
            if n > base {
                acc += c * Rational::from_integer(BigInt::from(n - base));
            }
        }
        Ok(acc)
    }

    /// The quadratic functional Gamma(A) = sum over all exponents e of
    /// e^2 a_e, defined for half-integer exponents as well.
    pub fn gamma(&self) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            acc += c * Rational::new(BigInt::from(e * e), BigInt::from(4));
        }
        acc
    }

    /// Multiplies by a rational scalar.
    pub fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return SymmetricLaurent::zero();
        }
        SymmetricLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// Alexander polynomial of the knot complement induced by passing to a
    /// degree-d cover data (d, k): multiplies by the d-term geometric
    /// factor in T^(1/2) and divides by k, so the result is symmetric with
    /// value 1 at T = 1.
    ///
    /// Requires integer exponents, d >= 1 dividing k, and A(1) = k/d.
    pub fn induced_complement_poly(&self, d: u64, k: u64) -> Result<SymmetricLaurent> {
        self.require_integer_exponents("complement induction")?;
        if d == 0 || k == 0 || k % d != 0 {
            return Err(Error::InvalidArgument(format!(
                "complement induction requires d >= 1 dividing k (got d = {d}, k = {k})"
            )));
        }
        let expected = Rational::new(BigInt::from(k), BigInt::from(d));
        let at_one = self.evaluate_at_one();
        if at_one != expected {
            return Err(Error::InvalidArgument(format!(
                "normalization mismatch: A(1) = {}, expected k/d = {}",
                format_rational(&at_one),
                format_rational(&expected)
            )));
        }
        // G_d = T^(-(d-1)/2) + T^(-(d-3)/2) + ... + T^((d-1)/2).
        let d = d as i64;
        let geometric: Vec<(i64, Rational)> = (0..d)
            .map(|i| (2 * i - (d - 1), Rational::one()))
            .collect();
        let g = SymmetricLaurent {
            coeffs: geometric.into_iter().collect(),
        };
        let prod = self.mul(&g);
        Ok(prod.scaled(&Rational::new(BigInt::from(1), BigInt::from(k))))
    }

    /// Product of two symmetric polynomials (symmetry and single-parity
    /// exponents are preserved automatically).
    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1 + e2;
                let term = c1 * c2;
                match coeffs.get_mut(&e) {
                    Some(slot) => *slot += term,
                    None => {
                        coeffs.insert(e, term);
                    }
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymmetricLaurent { coeffs }
    }
}

impl fmt::Display for SymmetricLaurent {
    /// Text form read back by [`FromStr`]: comma-separated
    /// `doubled_exponent:coefficient` pairs, highest exponent first. The
    /// zero polynomial prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}:{}", format_rational(c))?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SymmetricLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        if body.is_empty() {
            return Ok(SymmetricLaurent::zero());
        }
        let mut terms = Vec::new();
        for part in body.split(',') {
            let (e, c) = part.split_once(':').ok_or_else(|| {
                Error::Parse(format!(
                    "bad polynomial term {part:?}: expected doubled_exponent:coefficient"
                ))
            })?;
            let exp: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad doubled exponent {e:?}")))?;
            let coeff = parse_rational(c)?;
            terms.push((exp, coeff));
        }
        SymmetricLaurent::from_terms(&terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn trefoil() -> SymmetricLaurent {
        "2:1,0:-1,-2:1".parse().unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        let t = trefoil();
        assert_eq!(t.to_string(), "2:1,0:-1,-2:1");
        assert_eq!(t, SymmetricLaurent::from_int_terms(&[(2, 1), (0, -1), (-2, 1)]).unwrap());
        assert_eq!("".parse::<SymmetricLaurent>().unwrap(), SymmetricLaurent::zero());
        let halves: SymmetricLaurent = "1:1/2,-1:1/2".parse().unwrap();
        assert_eq!(halves.to_string(), "1:1/2,-1:1/2");
    }

    #[test]
    fn validation_order() {
        // Asymmetric but even-parity: symmetry is the reported violation.
        let e = SymmetricLaurent::from_int_terms(&[(2, 1)]).unwrap_err();
        assert!(e.to_string().contains("not symmetric"), "{e}");
        // Mixed parity is reported before symmetry.
        let e = SymmetricLaurent::from_int_terms(&[(1, 1), (2, 1)]).unwrap_err();
        assert!(e.to_string().contains("parity"), "{e}");
        let e = SymmetricLaurent::from_int_terms(&[(0, 0)]).unwrap_err();
        assert!(e.to_string().contains("zero coefficient"), "{e}");
        let e = SymmetricLaurent::from_int_terms(&[(2, 1), (2, 1), (-2, 1)]).unwrap_err();
        assert!(e.to_string().contains("duplicate"), "{e}");
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("2:1,0:-1".parse::<SymmetricLaurent>().is_err());
        assert!("2;1".parse::<SymmetricLaurent>().is_err());
        assert!("a:1".parse::<SymmetricLaurent>().is_err());
        assert!("0:1/0".parse::<SymmetricLaurent>().is_err());
    }

    #[test]
    fn trefoil_functionals() {
        let t = trefoil();
        assert_eq!(t.evaluate_at_one(), rat(1, 1));
        assert_eq!(t.surgery_weight().unwrap(), rat(1, 1));
        assert_eq!(t.theta_zero_surgery(0).unwrap(), rat(1, 1));
        assert_eq!(t.theta_zero_surgery(1).unwrap(), rat(0, 1));
        assert_eq!(t.theta_zero_surgery(-1).unwrap(), rat(0, 1));
        assert_eq!(t.gamma(), rat(2, 1));
    }

    #[test]
    fn figure_eight_functionals() {
        // T - 3 + 1/T.
        let f8 = SymmetricLaurent::from_int_terms(&[(2, 1), (0, -3), (-2, 1)]).unwrap();
        assert_eq!(f8.evaluate_at_one(), rat(-1, 1));
        assert_eq!(f8.surgery_weight().unwrap(), rat(1, 1));
        assert_eq!(f8.gamma(), rat(2, 1));
    }

    #[test]
    fn theta_summation_identity() {
        // theta(0) + 2 sum_{i >= 1} theta(i) = sum_{j >= 1} j^2 a_j.
        let poly =
            SymmetricLaurent::from_int_terms(&[(6, 2), (4, -1), (0, 5), (-4, -1), (-6, 2)])
                .unwrap();
        let bound = poly.max_doubled_exponent().unwrap() / 2;
        let mut total = poly.theta_zero_surgery(0).unwrap();
        for i in 1..=bound {
            total += poly.theta_zero_surgery(i).unwrap() * rat(2, 1);
        }
        assert_eq!(total, poly.surgery_weight().unwrap());
    }

    #[test]
    fn half_integer_polys_reject_integer_functionals() {
        let halves: SymmetricLaurent = "1:1/2,-1:1/2".parse().unwrap();
        assert!(halves.surgery_weight().is_err());
        assert!(halves.theta_zero_surgery(0).is_err());
        assert_eq!(halves.gamma(), rat(1, 4));
    }

    #[test]
    fn induced_complement_of_unknot() {
        let induced = SymmetricLaurent::one().induced_complement_poly(2, 2).unwrap();
        let expected: SymmetricLaurent = "1:1/2,-1:1/2".parse().unwrap();
        assert_eq!(induced, expected);
        assert_eq!(induced.evaluate_at_one(), rat(1, 1));
        assert_eq!(induced.gamma(), rat(1, 4));
    }

    #[test]
    fn induced_complement_of_trefoil() {
        // Trefoil has A(1) = 1 = k/d, so (d, k) = (2, 2) is admissible:
        // (1/2)(T - 1 + 1/T)(T^(1/2) + T^(-1/2)) = (T^(3/2) + T^(-3/2))/2.
        let induced = trefoil().induced_complement_poly(2, 2).unwrap();
        let expected: SymmetricLaurent = "3:1/2,-3:1/2".parse().unwrap();
        assert_eq!(induced, expected);
        assert_eq!(induced.evaluate_at_one(), rat(1, 1));
        // Gamma identity: Gamma(A_X) = (d/k) Gamma(A) + (d^2 - 1)/12.
        assert_eq!(induced.gamma(), trefoil().gamma() + rat(1, 4));
    }

    #[test]
    fn induction_validates_preconditions() {
        let a = SymmetricLaurent::from_int_terms(&[(0, 3)]).unwrap();
        assert!(a.induced_complement_poly(2, 3).is_err());
        assert!(a.induced_complement_poly(0, 2).is_err());
        assert_eq!(
            a.induced_complement_poly(1, 3).unwrap(),
            SymmetricLaurent::one()
        );
        // A(1) = 1 but k/d = 2: normalization mismatch.
        let e = trefoil().induced_complement_poly(2, 4).unwrap_err();
        assert!(e.to_string().contains("normalization mismatch"), "{e}");
    }
}

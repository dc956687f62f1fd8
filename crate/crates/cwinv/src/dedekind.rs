//! Dedekind sums by two independent routes: the sawtooth-function
//! definition and the cotangent formula evaluated in exact cyclotomic
//! arithmetic.

use num::{BigInt, One, Zero};

use crate::cyclotomic::{trig_value, Cyclotomic, TrigKind};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Sawtooth function ((x)): 0 at integers, otherwise x - floor(x) - 1/2.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.denom().is_one() {
        return Rational::zero();
    }
    x - x.floor() - rat(1, 2)
}

fn check_pair(q: i64, p: u64) -> Result<u64> {
    if p == 0 {
        return Err(Error::InvalidArgument(
            "dedekind sum s(q,p) requires p >= 1".into(),
        ));
    }
    let qm = (q as i128).rem_euclid(p as i128) as u64;
    if num::integer::gcd(qm, p) != 1 {
        return Err(Error::InvalidArgument(format!(
            "dedekind sum s({q},{p}) requires gcd(q,p) = 1"
        )));
    }
    Ok(qm)
}

/// Dedekind sum s(q,p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)).
///
/// Only gcd(q,p) = 1 is accepted; q may be any integer and is reduced
/// mod p first (the sum only depends on q mod p).
pub fn dedekind_sum(q: i64, p: u64) -> Result<Rational> {
    let qm = check_pair(q, p)?;
    let pb = BigInt::from(p);
    let mut acc = Rational::zero();
    for k in 1..p {
        let kq = (k as u128 * qm as u128 % p as u128) as u64;
        let a = sawtooth(&Rational::new(BigInt::from(k), pb.clone()));
        let b = sawtooth(&Rational::new(BigInt::from(kq), pb.clone()));
        acc += a * b;
    }
    Ok(acc)
}

/// The same sum via s(q,p) = (1/4p) sum_{k=1}^{p-1} cot(pi k/p) cot(pi kq/p),
/// with every cotangent an exact element of Q(zeta_{lcm(2p,4)}). The total
/// is rational; if cancellation ever failed to make it so, that would be a
/// contract violation, not a rounding question.
pub fn dedekind_sum_cotangent(q: i64, p: u64) -> Result<Rational> {
    let qm = check_pair(q, p)?;
    if p == 1 {
        return Ok(Rational::zero());
    }
    let m = crate::cyclotomic::trig_field_order(p);
    let mut acc = Cyclotomic::zero(m);
    for k in 1..p {
        let kq = (k as u128 * qm as u128 % p as u128) as i64;
        let ck = trig_value(TrigKind::CotPiOver, k as i64, p)?;
        let ckq = trig_value(TrigKind::CotPiOver, kq, p)?;
        acc = acc.try_add(&ck.try_mul(&ckq)?)?;
    }
    let total = acc
        .scaled(&Rational::new(BigInt::from(1), BigInt::from(4 * p)))
        .to_rational()
        .map_err(|e| {
            Error::ContractViolation(format!(
                "cotangent dedekind sum s({q},{p}) did not reduce to a rational: {e}"
            ))
        })?;
    Ok(total)
}

/// Defect of Dedekind reciprocity:
/// s(q,p) + s(p,q) + 1/4 - (p/q + q/p + 1/(pq))/12, which is zero for
/// coprime p, q >= 1.
pub fn reciprocity_defect(p: u64, q: u64) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(
            "reciprocity defect requires p, q >= 1".into(),
        ));
    }
    let s_qp = dedekind_sum(q as i64, p)?;
    let s_pq = dedekind_sum(p as i64, q)?;
    let pr = Rational::from_integer(BigInt::from(p));
    let qr = Rational::from_integer(BigInt::from(q));
    let mix = (&pr / &qr + &qr / &pr + (&pr * &qr).recip()) / rat(12, 1);
    Ok(s_qp + s_pq + rat(1, 4) - mix)
}

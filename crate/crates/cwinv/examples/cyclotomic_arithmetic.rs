//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Elements are rational coefficient vectors modulo the n-th cyclotomic
//! polynomial, so identities like zeta_8 + 1/zeta_8 = sqrt(2) hold on the
//! nose rather than to floating-point accuracy.
//!
//! Run with: cargo run --example cyclotomic_arithmetic

use cwinv::{rat, trig_value, Cyclotomic, TrigKind};

fn main() {
    // (zeta_8 + zeta_8^-1)^2 = 2, i.e. zeta_8 + zeta_8^-1 = sqrt(2).
    let z = Cyclotomic::root_of_unity(8, 1);
    let zbar = Cyclotomic::root_of_unity(8, -1);
    let sqrt2 = &z + &zbar;
    let two = (&sqrt2 * &sqrt2).to_rational().unwrap();
    assert_eq!(two, rat(2, 1));
    println!("(zeta_8 + zeta_8^-1)^2 = {two}, with zeta_8 + zeta_8^-1 = {sqrt2}");

    // Inversion runs the extended Euclidean algorithm against the minimal
    // polynomial: 1/(1 + zeta_5) times (1 + zeta_5) is exactly 1.
    let x = Cyclotomic::one(5) + Cyclotomic::root_of_unity(5, 1);
    let product = &x * &x.inverse().unwrap();
    assert_eq!(product, Cyclotomic::one(5));
    println!("(1 + zeta_5) * (1 + zeta_5)^-1 = {product}");

    // Exact trigonometric values live in Q(zeta_lcm(2p,4)). Rational ones
    // collapse under to_rational; irrational ones stay symbolic.
    let csc = trig_value(TrigKind::CscPiOver, 1, 6).unwrap();
    assert_eq!(csc.to_rational().unwrap(), rat(2, 1));
    println!("csc(pi/6) = {}", csc.to_rational().unwrap());

    let cos = trig_value(TrigKind::CosTwoPi, 1, 5).unwrap();
    assert!(cos.to_rational().is_err());
    println!("cos(2pi/5) = {cos} (irrational, kept exact)");

    // The embedding into the complex numbers agrees with f64 trig.
    let approx = cos.to_complex(53).unwrap();
    let reference = (2.0 * std::f64::consts::PI / 5.0).cos();
    assert!((approx.re - reference).abs() < 1e-12);
    println!("  embeds to {:.15} vs f64 cos {:.15}", approx.re, reference);
}

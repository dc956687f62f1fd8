//! Acceptance gate: the seven headline identities, one test each, at
//! their stated tolerances. Every test prints a one-line PASS summary
//! (visible with --nocapture) after its sweep.

use num::{BigInt, ToPrimitive, Zero};

use cwinv::{
    casson_integral_chain, dedekind_sum, dedekind_sum_cotangent, rat, reciprocity_defect,
    run_chain, LensSpec, Rational, Route, SpinCLabel, SurgeryStep, SymmetricLaurent,
};

fn coprime_pairs(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in lo..=hi {
        for q in 1..p {
            if num::integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn trefoil() -> SymmetricLaurent {
    "2:1,0:-1,-2:1".parse().unwrap()
}

#[test]
fn criterion_1_aggregate_lens_identity() {
    let pairs = coprime_pairs(2, 30);
    for &(p, q) in &pairs {
        let report = LensSpec::new(p as i64, q as i64)
            .unwrap()
            .spectrum()
            .unwrap();
        let s = dedekind_sum(q as i64, p).unwrap();
        assert_eq!(
            &report.ntheta_sum * rat(2, 1),
            -(Rational::from_integer(BigInt::from(p)) * s),
            "L({p},{q})"
        );
        assert!(report.total_check.is_zero(), "L({p},{q})");
    }
    println!(
        "PASS: 2*sum ntheta == -p*s(q,p) exactly for all {} coprime pairs with 2 <= p <= 30",
        pairs.len()
    );
}

#[test]
fn criterion_2_two_route_lambda() {
    let pairs = coprime_pairs(2, 30);
    for &(p, q) in &pairs {
        let chain = run_chain(&[SurgeryStep::unknot(p as i64, q as i64).unwrap()]).unwrap();
        let s = dedekind_sum(q as i64, p).unwrap();
        let spectrum = LensSpec::new(p as i64, q as i64)
            .unwrap()
            .spectrum()
            .unwrap();
        let from_lens = &spectrum.ntheta_sum * rat(2, 1)
            / Rational::from_integer(BigInt::from(p));
        assert_eq!(chain.lambda, -&s, "chain vs -s at L({p},{q})");
        assert_eq!(chain.lambda, from_lens, "chain vs lens at L({p},{q})");
    }
    println!(
        "PASS: chain lambda == -s(q,p) == (2/p)*sum ntheta exactly for all {} pairs with p <= 30",
        pairs.len()
    );
}

#[test]
fn criterion_3_route_agreement() {
    let pairs = coprime_pairs(2, 30);
    let mut labels = 0u64;
    for &(p, q) in &pairs {
        let ctx = LensSpec::new(p as i64, q as i64)
            .unwrap()
            .context()
            .unwrap();
        for alpha in 0..p {
            let pipeline = ctx.ntheta(SpinCLabel(alpha), Route::EtaPipeline).unwrap();
            let closed = ctx.ntheta(SpinCLabel(alpha), Route::ClosedForm).unwrap();
            assert_eq!(pipeline, closed, "L({p},{q}), alpha = {alpha}");
            labels += 1;
        }
    }
    println!(
        "PASS: eta-pipeline ntheta equals the closed form exactly for {labels} Spin^c labels, p <= 30"
    );
}

#[test]
fn criterion_4_dedekind_routes_and_reciprocity() {
    let cotangent_pairs = coprime_pairs(2, 30);
    for &(p, q) in &cotangent_pairs {
        assert_eq!(
            dedekind_sum_cotangent(q as i64, p).unwrap(),
            dedekind_sum(q as i64, p).unwrap(),
            "s({q},{p})"
        );
    }
    let reciprocity_pairs = coprime_pairs(2, 100);
    for &(p, q) in &reciprocity_pairs {
        assert!(
            reciprocity_defect(p, q).unwrap().is_zero(),
            "reciprocity at ({p},{q})"
        );
    }
    println!(
        "PASS: cotangent == sawtooth for {} pairs (p <= 30); reciprocity defect == 0 for {} pairs (p <= 100)",
        cotangent_pairs.len(),
        reciprocity_pairs.len()
    );
}

#[test]
fn criterion_5_alexander_identity_suite() {
    let corpus = cwinv::selftest::random_symmetric_polys(200, 0xa1e);
    let mut gamma_cases = 0u64;
    for (poly, at_one) in &corpus {
        // Gamma(A_X) == (d/k) Gamma(A) + (d^2 - 1)/12 for every d <= 6
        // with k = d * A(1).
        for d in 1..=6u64 {
            let k = d * at_one;
            let induced = poly.induced_complement_poly(d, k).unwrap();
            let expected = poly.gamma() * Rational::new(BigInt::from(d), BigInt::from(k))
                + Rational::new(
                    BigInt::from(d * d) - BigInt::from(1u32),
                    BigInt::from(12u32),
                );
            assert_eq!(induced.gamma(), expected, "{poly} at d = {d}");
            gamma_cases += 1;
        }
        // theta(0) + 2 sum_{i>=1} theta(i) == sum_{j>=1} j^2 a_j.
        let weight = poly.surgery_weight().unwrap();
        let span = poly.max_doubled_exponent().unwrap_or(0) / 2;
        let mut total = poly.theta_zero_surgery(0).unwrap();
        for i in 1..=span {
            total += poly.theta_zero_surgery(i).unwrap() * rat(2, 1);
        }
        assert_eq!(total, weight, "theta summation for {poly}");
    }
    println!(
        "PASS: gamma identity ({gamma_cases} cases) and theta summation on {} random polynomials, exact",
        corpus.len()
    );
}

#[test]
fn criterion_6_casson_specialization() {
    assert!(casson_integral_chain(&[]).unwrap().is_zero());
    for n in -5i64..=5 {
        assert_eq!(
            casson_integral_chain(&[(n, trefoil())]).unwrap(),
            rat(2 * n, 1),
            "1/{n} surgery"
        );
    }
    println!("PASS: trefoil 1/n chains give lambda = 2n for |n| <= 5; empty chain gives 0");
}

#[test]
fn criterion_7_float_exact_agreement() {
    let tol = 1e-9;
    let close_pairs = coprime_pairs(2, 64);
    for &(p, q) in &close_pairs {
        let spec = LensSpec::new(p as i64, q as i64).unwrap();
        let exact = spec.spectrum().unwrap();
        let float = spec.spectrum_f64().unwrap();
        for (e, f) in exact.entries.iter().zip(&float.entries) {
            let delta = (e.ntheta.to_f64().unwrap() - f.ntheta).abs();
            assert!(delta < tol, "L({p},{q}) alpha {}: delta {delta}", e.alpha);
            let delta = (e.eta_dirac.to_f64().unwrap() - f.eta_dirac).abs();
            assert!(delta < tol, "L({p},{q}) alpha {}: delta {delta}", e.alpha);
        }
    }
    let far_pairs = coprime_pairs(65, 200);
    for &(p, q) in &far_pairs {
        let float = LensSpec::new(p as i64, q as i64)
            .unwrap()
            .spectrum_f64()
            .unwrap();
        assert!(
            float.total_check.abs() < tol,
            "aggregate residual {} at L({p},{q})",
            float.total_check
        );
    }
    println!(
        "PASS: float spectra within 1e-9 of exact per entry for {} pairs (p <= 64); float aggregate identity within 1e-9 for {} pairs (64 < p <= 200)",
        close_pairs.len(),
        far_pairs.len()
    );
}

//! The per-Spin^c invariant spectrum of a lens space.
//!
//! For L(p,q) the p Spin^c structures are labeled by alpha in 0..p. Each
//! label gets a Dirac eta invariant, the correction term
//! corr = -(1/4) eta_dirac - (1/8) eta_sign, and ntheta = -corr. Two
//! independent derivations of ntheta are compared per label, and the
//! aggregate identity 2 sum_alpha ntheta = -p s(q,p) is checked by the
//! library on every spectrum call.
//!
//! Run with: cargo run --example lens_spectrum

use cwinv::{dedekind_sum, format_rational, LensSpec, Route, SpinCLabel};

fn main() {
    let spec = LensSpec::new(7, 2).unwrap();
    let report = spec.spectrum().unwrap();

    println!("L({},{}) exact spectrum", report.p, report.q);
    println!("eta_sign = {}", format_rational(&report.eta_sign));
    for entry in &report.entries {
        println!(
            "  alpha {}: eta_dirac = {:>7}, ntheta = {:>7}",
            entry.alpha,
            format_rational(&entry.eta_dirac),
            format_rational(&entry.ntheta)
        );
    }
    println!("sum of ntheta = {}", format_rational(&report.ntheta_sum));

    // The closed cosecant form reproduces the eta-pipeline values.
    let ctx = spec.context().unwrap();
    for alpha in 0..spec.p() {
        let a = ctx.ntheta(SpinCLabel(alpha), Route::EtaPipeline).unwrap();
        let b = ctx.ntheta(SpinCLabel(alpha), Route::ClosedForm).unwrap();
        assert_eq!(a, b);
    }
    println!("eta-pipeline and closed-form routes agree on all {} labels", spec.p());

    // 2 sum ntheta = -p s(q,p) ties the spectrum to the Dedekind sum.
    let s = dedekind_sum(spec.q() as i64, spec.p()).unwrap();
    println!(
        "aggregate check: 2 * ({}) = -{} * {}",
        format_rational(&report.ntheta_sum),
        spec.p(),
        format_rational(&s)
    );

    // Float mode mirrors the exact values for quick surveys at large p.
    let float = LensSpec::new(199, 57).unwrap().spectrum_f64().unwrap();
    println!(
        "L(199,57) float mode: ntheta_sum = {:.9}, aggregate residual = {:.3e}",
        float.ntheta_sum, float.total_check
    );
}

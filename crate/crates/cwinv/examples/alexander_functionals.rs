//! Functionals of symmetric Alexander polynomials.
//!
//! Polynomials are written over doubled exponents so that half-integer
//! powers of T stay integer keys: the trefoil T - 1 + T^-1 is
//! "2:1,0:-1,-2:1". The functionals here drive the surgery engine: the
//! weight sum_{j>=1} j^2 a_j, the theta invariants of the zero-surgery,
//! Gamma, and the polynomial induced on a knot complement.
//!
//! Run with: cargo run --example alexander_functionals

use cwinv::{format_rational, rat, SymmetricLaurent};

fn main() {
    let trefoil: SymmetricLaurent = "2:1,0:-1,-2:1".parse().unwrap();
    let figure_eight: SymmetricLaurent = "2:-1,0:3,-2:-1".parse().unwrap();

    for (name, a) in [("trefoil", &trefoil), ("figure-eight", &figure_eight)] {
        println!("{name}: {a}");
        println!("  A(1) = {}", format_rational(&a.evaluate_at_one()));
        println!(
            "  weight sum j^2 a_j = {}",
            format_rational(&a.surgery_weight().unwrap())
        );
        println!("  Gamma = {}", format_rational(&a.gamma()));
        for i in 0..=2 {
            println!(
                "  theta({i}) = {}",
                format_rational(&a.theta_zero_surgery(i).unwrap())
            );
        }
    }

    // theta(0) + 2 sum_{i>=1} theta(i) recovers the weight.
    let total = trefoil.theta_zero_surgery(0).unwrap()
        + trefoil.theta_zero_surgery(1).unwrap() * rat(2, 1);
    assert_eq!(total, trefoil.surgery_weight().unwrap());
    println!("theta summation identity checked for the trefoil");

    // Inducing to a complement with divisibility d rescales and spreads
    // the exponents; Gamma transforms affinely:
    // Gamma(A_X) = (d/k) Gamma(A) + (d^2 - 1)/12.
    let induced = trefoil.induced_complement_poly(2, 2).unwrap();
    println!("trefoil induced at (d,k) = (2,2): {induced}");
    let gamma_identity = trefoil.gamma() * rat(2, 2) + rat(4 - 1, 12);
    assert_eq!(induced.gamma(), gamma_identity);
    println!(
        "  Gamma identity: Gamma = {} = (d/k) Gamma + (d^2-1)/12",
        format_rational(&induced.gamma())
    );
}

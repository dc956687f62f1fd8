//! A surgery chain with nontrivial complement data, run both from typed
//! steps and from the JSON chain format the CLI consumes.
//!
//! The state (lambda', |H1|) starts at (0, 1) for S^3 and evolves by
//! lambda' -> p lambda' + q W + k epsilon'(p,q,d), |H1| -> p d k, where
//! each step requires d k to equal the current |H1|.
//!
//! Run with: cargo run --example surgery_chain

use cwinv::{
    epsilon_prime, format_rational, parse_chain, rat, run_chain, SurgeryStep, WeightSource,
};

fn main() {
    // epsilon' is the lens-space correction entering every step.
    println!(
        "epsilon'(3,1,1) = {}, epsilon'(1,1,2) = {}",
        format_rational(&epsilon_prime(3, 1, 1).unwrap()),
        format_rational(&epsilon_prime(1, 1, 2).unwrap())
    );

    // 4/1 surgery on the unknot gives L(4,1); the second step is a 3/2
    // surgery on a trefoil-like knot whose complement has d = k = 2.
    let trefoil: cwinv::SymmetricLaurent = "2:1,0:-1,-2:1".parse().unwrap();
    let steps = vec![
        SurgeryStep::unknot(4, 1).unwrap(),
        SurgeryStep::new(3, 2, 2, 2, WeightSource::Alexander(trefoil)).unwrap(),
    ];
    let report = run_chain(&steps).unwrap();
    for (i, state) in report.trace.iter().enumerate() {
        println!(
            "after step {}: lambda' = {}, |H1| = {}",
            i + 1,
            format_rational(&state.lambda_prime),
            state.h1_order
        );
    }
    println!(
        "lambda = 2 lambda' / |H1| = {}",
        format_rational(&report.lambda)
    );
    assert_eq!(report.lambda, rat(25, 72));

    // The same chain in the file format the `cwinv chain` subcommand
    // reads. A step carries exactly one of "alexander" or "weight".
    let text = r#"{
        "steps": [
            {"p": 4, "q": 1, "d": 1, "k": 1, "alexander": "0:1"},
            {"p": 3, "q": 2, "d": 2, "k": 2, "weight": "1"}
        ]
    }"#;
    let parsed = parse_chain(text).unwrap();
    let from_file = run_chain(&parsed).unwrap();
    assert_eq!(from_file.lambda, report.lambda);
    println!("JSON chain gives the same lambda = {}", format_rational(&from_file.lambda));

    // A mismatched step is rejected with its index: after L(4,1) the
    // state has |H1| = 4, so a step claiming d = k = 1 cannot follow.
    let bad = vec![
        SurgeryStep::unknot(4, 1).unwrap(),
        SurgeryStep::unknot(5, 1).unwrap(),
    ];
    let err = run_chain(&bad).unwrap_err();
    println!("inconsistent chain rejected: {err}");
}

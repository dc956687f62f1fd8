//! The Casson invariant of integral homology spheres from 1/n surgeries.
//!
//! casson_integral_chain takes (n, Alexander polynomial) pairs, applies
//! each as a 1/n surgery (d = k = 1), and returns lambda of the result.
//! Its value is pinned down by lambda = 2n for 1/n surgery on the
//! trefoil, and the lens cross-check ties the same engine to the exact
//! eta-invariant spectra.
//!
//! Run with: cargo run --example casson_from_surgery

use cwinv::{
    casson_integral_chain, dedekind_sum, format_rational, rat, run_chain, LensSpec, SurgeryStep,
};

fn main() {
    let trefoil: cwinv::SymmetricLaurent = "2:1,0:-1,-2:1".parse().unwrap();

    println!("lambda of 1/n surgery on the trefoil:");
    for n in -3i64..=3 {
        let lambda = casson_integral_chain(&[(n, trefoil.clone())]).unwrap();
        assert_eq!(lambda, rat(2 * n, 1));
        println!("  n = {n:>2}: lambda = {}", format_rational(&lambda));
    }

    // Opposite surgeries on the same knot cancel.
    let cancel = casson_integral_chain(&[(4, trefoil.clone()), (-4, trefoil.clone())]).unwrap();
    println!("+1/4 then -1/4 surgery: lambda = {}", format_rational(&cancel));

    // A longer chain: the figure-eight knot has weight -1, so each 1/n
    // surgery on it shifts lambda by -2n.
    let figure_eight: cwinv::SymmetricLaurent = "2:-1,0:3,-2:-1".parse().unwrap();
    let mixed = casson_integral_chain(&[(2, trefoil), (3, figure_eight)]).unwrap();
    assert_eq!(mixed, rat(2 * 2 - 2 * 3, 1));
    println!("trefoil at n=2 then figure-eight at n=3: lambda = {}", format_rational(&mixed));

    // The same lambda surfaces when a rational surgery builds a lens
    // space: for the unknot, lambda(L(p,q)) = -s(q,p).
    for (p, q) in [(5i64, 1i64), (7, 2)] {
        let chain = run_chain(&[SurgeryStep::unknot(p, q).unwrap()]).unwrap();
        let s = dedekind_sum(q, p as u64).unwrap();
        assert_eq!(chain.lambda, -s);
        let lens = LensSpec::new(p, q).unwrap().spectrum().unwrap();
        assert_eq!(chain.ntheta_total, lens.ntheta_sum);
        println!(
            "L({p},{q}): lambda = {} from the chain, ntheta total = {} from eta invariants",
            format_rational(&chain.lambda),
            format_rational(&chain.ntheta_total)
        );
    }
}

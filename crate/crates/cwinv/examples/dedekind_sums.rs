//! Dedekind sums by two routes, and the reciprocity law.
//!
//! The sawtooth double sum needs only rational arithmetic; the cotangent
//! sum (1/4p) sum_k cot(pi k/p) cot(pi k q/p) is evaluated in the
//! cyclotomic field Q(zeta_lcm(2p,4)) and must collapse to the same
//! rational.
//!
//! Run with: cargo run --example dedekind_sums

use cwinv::{dedekind_sum, dedekind_sum_cotangent, format_rational, reciprocity_defect};
use num::Zero;

fn main() {
    println!("s(q,p) for small pairs, sawtooth vs cotangent:");
    for (p, q) in [(3u64, 1i64), (5, 1), (5, 2), (7, 3), (12, 5), (18, 5)] {
        let saw = dedekind_sum(q, p).unwrap();
        let cot = dedekind_sum_cotangent(q, p).unwrap();
        assert_eq!(saw, cot);
        println!("  s({q},{p}) = {}", format_rational(&saw));
    }

    // s(q,p) only depends on q mod p, and is odd in q.
    let base = dedekind_sum(5, 18).unwrap();
    assert_eq!(dedekind_sum(5 + 18, 18).unwrap(), base);
    assert_eq!(dedekind_sum(-5, 18).unwrap(), -&base);
    println!("periodicity and oddness hold at (q,p) = (5,18)");

    // Reciprocity: s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/pq)/12,
    // stated here as a defect that must vanish.
    for (p, q) in [(5u64, 3u64), (21, 13), (89, 55), (144, 89)] {
        let defect = reciprocity_defect(p, q).unwrap();
        assert!(defect.is_zero());
        println!("  reciprocity defect at ({p},{q}) = 0");
    }
}

//! Built-in invariant suites: every identity the library promises, run
//! over parameter sweeps at two depths. A correct build passes everything;
//! any failure means a broken invariant, and the first one is reported
//! verbatim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num::{BigInt, Zero};

use crate::alexander::SymmetricLaurent;
use crate::dedekind::{dedekind_sum, dedekind_sum_cotangent, reciprocity_defect};
use crate::error::Result;
use crate::lens::{LensSpec, Route, SpinCLabel};
use crate::rational::{format_rational, rat, Rational};
use crate::surgery::{run_chain, SurgeryStep};

/// Sweep size: `Small` finishes in a few seconds, `Full` in under a few
/// minutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Small,
    Full,
}

/// Outcome of one suite: cases checked, failures, and the first failure
/// message if any.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn case(&mut self, outcome: Result<()>) {
        self.cases += 1;
        if let Err(e) = outcome {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(e.to_string());
            }
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub depth: Depth,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

fn coprime_pairs(p_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=p_max).flat_map(|p| (1..p).filter(move |q| num::integer::gcd(p, *q) == 1).map(move |q| (p, q)))
}

fn reciprocity_suite(p_max: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("dedekind-reciprocity");
    for (p, q) in coprime_pairs(p_max) {
        let defect = reciprocity_defect(p, q).unwrap_or_else(|_| rat(1, 1));
        suite.check(defect.is_zero(), || {
            format!(
                "reciprocity defect {} at (p,q) = ({p},{q})",
                format_rational(&defect)
            )
        });
    }
    suite
}

fn cotangent_suite(p_max: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("dedekind-cotangent");
    for (p, q) in coprime_pairs(p_max) {
        let outcome = dedekind_sum_cotangent(q as i64, p).and_then(|cot| {
            let saw = dedekind_sum(q as i64, p)?;
            if cot == saw {
                Ok(())
            } else {
                Err(crate::error::Error::ContractViolation(format!(
                    "cotangent route gives {} but sawtooth gives {} at (p,q) = ({p},{q})",
                    format_rational(&cot),
                    format_rational(&saw)
                )))
            }
        });
        suite.case(outcome);
    }
    suite
}

fn lens_suite(p_max: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("lens-identities");
    for (p, q) in coprime_pairs(p_max) {
        let outcome = (|| -> Result<()> {
            let spec = LensSpec::new(p as i64, q as i64)?;
            let ctx = spec.context()?;
            // spectrum() verifies the aggregate identity internally.
            let report = ctx.spectrum()?;
            for alpha in 0..p {
                let pipeline = ctx.ntheta(SpinCLabel(alpha), Route::EtaPipeline)?;
                let closed = ctx.ntheta(SpinCLabel(alpha), Route::ClosedForm)?;
                if pipeline != closed {
                    return Err(crate::error::Error::ContractViolation(format!(
                        "route disagreement at L({p},{q}), alpha = {alpha}: {} vs {}",
                        format_rational(&pipeline),
                        format_rational(&closed)
                    )));
                }
                let conj = (p - alpha) % p;
                if report.entries[alpha as usize].ntheta != report.entries[conj as usize].ntheta {
                    return Err(crate::error::Error::ContractViolation(format!(
                        "conjugation asymmetry at L({p},{q}), alpha = {alpha}"
                    )));
                }
            }
            Ok(())
        })();
        suite.case(outcome);
    }
    suite
}

fn lens_chain_suite(p_max: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("lens-chain-lambda");
    for (p, q) in coprime_pairs(p_max) {
        let outcome = (|| -> Result<()> {
            let report = run_chain(&[SurgeryStep::unknot(p as i64, q as i64)?])?;
            let s = dedekind_sum(q as i64, p)?;
            let lens = LensSpec::new(p as i64, q as i64)?.spectrum()?;
            let from_lens =
                &lens.ntheta_sum * rat(2, 1) / Rational::from_integer(BigInt::from(p));
            if report.lambda != -&s || report.lambda != from_lens {
                return Err(crate::error::Error::ContractViolation(format!(
                    "lambda mismatch at L({p},{q}): chain {}, -s {}, lens {}",
                    format_rational(&report.lambda),
                    format_rational(&(-s)),
                    format_rational(&from_lens)
                )));
            }
            Ok(())
        })();
        suite.case(outcome);
    }
    suite
}

/// Deterministic corpus of random symmetric integer polynomials with
/// A(1) >= 1, as (polynomial, A(1)) pairs.
pub fn random_symmetric_polys(count: usize, seed: u64) -> Vec<(SymmetricLaurent, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let degree = rng.random_range(0..=8i64);
        let at_one = rng.random_range(1..=6i64);
        let mut terms: Vec<(i64, i64)> = Vec::new();
        let mut tail = 0i64;
        for j in 1..=degree {
            let c = rng.random_range(-3..=3i64);
            if c != 0 {
                terms.push((2 * j, c));
                terms.push((-2 * j, c));
                tail += 2 * c;
            }
        }
        let constant = at_one - tail;
        if constant != 0 {
            terms.push((0, constant));
        }
        let poly = SymmetricLaurent::from_int_terms(&terms).expect("symmetric by construction");
        out.push((poly, at_one as u64));
    }
    out
}

fn alexander_suite(poly_count: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("alexander-identities");
    for (poly, at_one) in random_symmetric_polys(poly_count, 0x5eed_cafe) {
        let outcome = (|| -> Result<()> {
            let weight = poly.surgery_weight()?;
            // theta(0) + 2 sum_{i>=1} theta(i) telescopes to the weight;
            // theta vanishes beyond the top exponent.
            let mut theta_total = poly.theta_zero_surgery(0)?;
            let span = poly.max_doubled_exponent().unwrap_or(0) / 2;
            for i in 1..=span {
                theta_total += poly.theta_zero_surgery(i)? * rat(2, 1);
            }
            if theta_total != weight {
                return Err(crate::error::Error::ContractViolation(format!(
                    "theta summation gives {} but weight is {} for {poly}",
                    format_rational(&theta_total),
                    format_rational(&weight)
                )));
            }
            for d in 1..=6u64 {
                let k = d * at_one;
                let induced = poly.induced_complement_poly(d, k)?;
                let expected = poly.gamma() * Rational::new(BigInt::from(d), BigInt::from(k))
                    + Rational::new(
                        BigInt::from(d) * BigInt::from(d) - BigInt::from(1u32),
                        BigInt::from(12u32),
                    );
                if induced.gamma() != expected {
                    return Err(crate::error::Error::ContractViolation(format!(
                        "gamma identity fails for {poly} at d = {d}, k = {k}"
                    )));
                }
            }
            Ok(())
        })();
        suite.case(outcome);
    }
    suite
}

/// Runs every suite at the requested depth.
pub fn run_selftest(depth: Depth) -> SelftestReport {
    let (recip, cot, lens, chain, polys) = match depth {
        Depth::Small => (50, 20, 20, 20, 50),
        Depth::Full => (100, 30, 30, 30, 200),
    };
    SelftestReport {
        depth,
        suites: vec![
            reciprocity_suite(recip),
            cotangent_suite(cot),
            lens_suite(lens),
            lens_chain_suite(chain),
            alexander_suite(polys),
        ],
    }
}

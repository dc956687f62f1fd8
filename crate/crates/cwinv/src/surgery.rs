//! The Walker surgery-chain engine.
//!
//! A chain starts at S^3 and applies p/q surgeries on knots, each step
//! carrying the divisibility d and torsion order k of the knot complement
//! along with the knot's Alexander polynomial (or a precomputed weight).
//! The state (lambda', |H1|) evolves by
//!
//!   lambda'(Y_{p/q}) = p lambda'(Y) + q sum_{j>=1} a_j j^2
//!                      + k epsilon'(p,q,d),
//!   |H1(Y_{p/q})| = p d k,
//!
//! with epsilon'(p,q,d) = q (d^2-1)/(12d) - p d s(q,p)/2. The final
//! Casson-Walker invariant is lambda = 2 lambda' / |H1|, and lambda'
//! equals the total of the per-Spin^c ntheta invariants.

use std::str::FromStr;

use serde::Deserialize;

use num::{BigInt, One, Zero};

use crate::alexander::SymmetricLaurent;
use crate::dedekind::dedekind_sum;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, rat, Rational};

/// The running pair (lambda', |H1|) of a surgery chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldState {
    pub lambda_prime: Rational,
    pub h1_order: u64,
}

impl ManifoldState {
    /// The initial state: S^3 has lambda' = 0 and trivial H1.
    pub fn three_sphere() -> Self {
        ManifoldState {
            lambda_prime: Rational::zero(),
            h1_order: 1,
        }
    }

    /// lambda = 2 lambda' / |H1|.
    pub fn lambda(&self) -> Rational {
        &self.lambda_prime * rat(2, 1) / Rational::from_integer(BigInt::from(self.h1_order))
    }
}

/// Where a step's surgery weight sum_{j>=1} a_j j^2 comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSource {
    /// Alexander polynomial of the zero-surgery; the weight is derived
    /// and the normalization A(1) = k/d is enforced.
    Alexander(SymmetricLaurent),
    /// A precomputed weight, taken at face value.
    Weight(Rational),
}

/// One validated p/q surgery on a knot with complement data (d, k).
#[derive(Debug, Clone, PartialEq)]
pub struct SurgeryStep {
    p: u64,
    q: i64,
    d: u64,
    k: u64,
    source: WeightSource,
}

impl SurgeryStep {
    /// Validates and sign-normalizes a step: (p,q) with p < 0 becomes
    /// (-p,-q), p = 0 is rejected, gcd(p,q) must be 1, d must divide k,
    /// and a supplied Alexander polynomial must have integer exponents
    /// with A(1) = k/d.
    pub fn new(p: i64, q: i64, d: u64, k: u64, source: WeightSource) -> Result<Self> {
        let (p, q) = if p < 0 {
            (-(p as i128) as u64, q.checked_neg().ok_or_else(|| {
                Error::InvalidArgument("surgery coefficient q overflows".into())
            })?)
        } else {
            (p as u64, q)
        };
        if p == 0 {
            return Err(Error::InvalidArgument(
                "zero-surgery does not yield a rational homology sphere".into(),
            ));
        }
        let qr = (q as i128).rem_euclid(p as i128) as u64;
        if num::integer::gcd(p, qr) != 1 {
            return Err(Error::InvalidArgument(format!(
                "surgery coefficient {p}/{q} requires gcd(p,q) = 1"
            )));
        }
        if d == 0 || k == 0 {
            return Err(Error::InvalidArgument(
                "complement data d and k must be positive".into(),
            ));
        }
        if k % d != 0 {
            return Err(Error::InvalidArgument(format!(
                "divisibility d = {d} must divide torsion order k = {k}"
            )));
        }
        if let WeightSource::Alexander(a) = &source {
            a.surgery_weight()?;
            let expected = Rational::new(BigInt::from(k), BigInt::from(d));
            if a.evaluate_at_one() != expected {
                return Err(Error::InvalidArgument(format!(
                    "normalization mismatch: A(1) = {} but k/d = {}/{}",
                    crate::rational::format_rational(&a.evaluate_at_one()),
                    k,
                    d
                )));
            }
        }
        Ok(SurgeryStep { p, q, d, k, source })
    }

    /// p/q surgery on the unknot in S^3.
    pub fn unknot(p: i64, q: i64) -> Result<Self> {
        SurgeryStep::new(p, q, 1, 1, WeightSource::Alexander(SymmetricLaurent::one()))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The weight sum_{j>=1} a_j j^2 this step contributes.
    pub fn weight(&self) -> Rational {
        match &self.source {
            WeightSource::Alexander(a) => a
                .surgery_weight()
                .expect("validated polynomial has integer exponents"),
            WeightSource::Weight(w) => w.clone(),
        }
    }
}

/// epsilon'(p,q,d) = q (d^2-1)/(12d) - p d s(q,p)/2, after the usual sign
/// normalization of (p,q).
pub fn epsilon_prime(p: i64, q: i64, d: u64) -> Result<Rational> {
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    if p <= 0 {
        return Err(Error::InvalidArgument(
            "epsilon' requires p >= 1 after sign normalization".into(),
        ));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("epsilon' requires d >= 1".into()));
    }
    let pu = p as u64;
    let s = dedekind_sum(q, pu)?;
    let d2 = BigInt::from(d) * BigInt::from(d);
    let first = Rational::from_integer(BigInt::from(q))
        * Rational::new(d2 - BigInt::one(), BigInt::from(12u32) * BigInt::from(d));
    let second = Rational::from_integer(BigInt::from(pu) * BigInt::from(d)) * s * rat(1, 2);
    Ok(first - second)
}

/// One application of the surgery formula. Fails if the step's d*k does
/// not match the current |H1|.
pub fn apply_step(state: &ManifoldState, step: &SurgeryStep) -> Result<ManifoldState> {
    let dk = step.d as u128 * step.k as u128;
    if dk != state.h1_order as u128 {
        return Err(Error::ChainInconsistency {
            dk: dk as u64,
            h1: state.h1_order,
        });
    }
    let eps = epsilon_prime(step.p as i64, step.q, step.d)?;
    let lambda_prime = Rational::from_integer(BigInt::from(step.p)) * &state.lambda_prime
        + Rational::from_integer(BigInt::from(step.q)) * step.weight()
        + Rational::from_integer(BigInt::from(step.k)) * eps;
    let h1 = step.p as u128 * dk;
    let h1_order = u64::try_from(h1).map_err(|_| {
        Error::InvalidArgument(format!("|H1| = {h1} overflows the supported range"))
    })?;
    Ok(ManifoldState {
        lambda_prime,
        h1_order,
    })
}

/// Final report of a surgery chain, with the per-step state trace.
/// `ntheta_total` is lambda', the total of the per-Spin^c invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub lambda_prime: Rational,
    pub h1_order: u64,
    pub lambda: Rational,
    pub ntheta_total: Rational,
    pub trace: Vec<ManifoldState>,
}

/// Folds the steps from the S^3 initial state. The first failing step is
/// reported with its (zero-based) index.
pub fn run_chain(steps: &[SurgeryStep]) -> Result<ChainReport> {
    let mut state = ManifoldState::three_sphere();
    let mut trace = Vec::with_capacity(steps.len());
    for (index, step) in steps.iter().enumerate() {
        state = apply_step(&state, step).map_err(|e| Error::ChainStep {
            index,
            source: Box::new(e),
        })?;
        trace.push(state.clone());
    }
    let lambda = state.lambda();
    Ok(ChainReport {
        lambda_prime: state.lambda_prime.clone(),
        h1_order: state.h1_order,
        lambda,
        ntheta_total: state.lambda_prime,
        trace,
    })
}

/// Casson specialization: a sequence of 1/n surgeries on knots in integral
/// homology spheres (d = k = 1 throughout). Returns lambda of the final
/// integral homology sphere.
pub fn casson_integral_chain(steps: &[(i64, SymmetricLaurent)]) -> Result<Rational> {
    let translated = steps
        .iter()
        .map(|(n, a)| SurgeryStep::new(1, *n, 1, 1, WeightSource::Alexander(a.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(run_chain(&translated)?.lambda)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainFile {
    steps: Vec<ChainFileStep>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainFileStep {
    p: i64,
    q: i64,
    d: u64,
    k: u64,
    alexander: Option<String>,
    weight: Option<String>,
}

/// Parses the JSON chain format: an object with a `steps` array whose
/// entries carry integers `p`, `q`, `d`, `k` and exactly one of
/// `alexander` (polynomial in `exp2:value` notation) or `weight` (a
/// rational string).
pub fn parse_chain(text: &str) -> Result<Vec<SurgeryStep>> {
    let file: ChainFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("chain file: {e}")))?;
    file.steps
        .into_iter()
        .enumerate()
        .map(|(index, raw)| {
            build_step(raw).map_err(|e| Error::ChainStep {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

fn build_step(raw: ChainFileStep) -> Result<SurgeryStep> {
    let source = match (raw.alexander, raw.weight) {
        (Some(a), None) => WeightSource::Alexander(SymmetricLaurent::from_str(&a)?),
        (None, Some(w)) => WeightSource::Weight(parse_rational(&w)?),
        (None, None) => {
            return Err(Error::Parse(
                "step needs one of `alexander` or `weight`".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "step must not carry both `alexander` and `weight`".into(),
            ))
        }
    };
    SurgeryStep::new(raw.p, raw.q, raw.d, raw.k, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::LensSpec;

    fn trefoil() -> SymmetricLaurent {
        SymmetricLaurent::from_str("2:1,0:-1,-2:1").unwrap()
    }

    fn figure_eight() -> SymmetricLaurent {
        SymmetricLaurent::from_str("2:-1,0:3,-2:-1").unwrap()
    }

    #[test]
    fn epsilon_prime_values() {
        for n in -4i64..=4 {
            assert_eq!(epsilon_prime(1, n, 1).unwrap(), rat(0, 1), "n = {n}");
        }
        assert_eq!(epsilon_prime(3, 1, 1).unwrap(), rat(-1, 12));
        assert_eq!(epsilon_prime(1, 1, 2).unwrap(), rat(1, 8));
        assert_eq!(
            epsilon_prime(-3, -1, 1).unwrap(),
            epsilon_prime(3, 1, 1).unwrap()
        );
        assert!(epsilon_prime(0, 1, 1).is_err());
        assert!(epsilon_prime(3, 1, 0).is_err());
    }

    #[test]
    fn empty_chain_is_three_sphere() {
        let report = run_chain(&[]).unwrap();
        assert!(report.lambda_prime.is_zero());
        assert_eq!(report.h1_order, 1);
        assert!(report.lambda.is_zero());
        assert!(report.trace.is_empty());
    }

    #[test]
    fn unknot_chains_match_lens_spectra() {
        for p in 2i64..=16 {
            for q in 1..p {
                if num::integer::gcd(p, q) != 1 {
                    continue;
                }
                let report = run_chain(&[SurgeryStep::unknot(p, q).unwrap()]).unwrap();
                let s = dedekind_sum(q, p as u64).unwrap();
                assert_eq!(report.lambda, -s, "p = {p}, q = {q}");
                let lens = LensSpec::new(p, q).unwrap().spectrum().unwrap();
                assert_eq!(report.ntheta_total, lens.ntheta_sum, "p = {p}, q = {q}");
                assert_eq!(report.h1_order, p as u64);
            }
        }
    }

    #[test]
    fn trefoil_one_over_n_gives_two_n() {
        for n in -5i64..=5 {
            let lambda = casson_integral_chain(&[(n, trefoil())]).unwrap();
            assert_eq!(lambda, rat(2 * n, 1), "n = {n}");
        }
    }

    #[test]
    fn trefoil_contributions_cancel() {
        let lambda = casson_integral_chain(&[(-1, trefoil()), (1, trefoil())]).unwrap();
        assert!(lambda.is_zero());
    }

    #[test]
    fn casson_sugar_matches_run_chain() {
        let steps = [(2i64, trefoil()), (-1, figure_eight()), (3, trefoil())];
        let sugar = casson_integral_chain(&steps).unwrap();
        let translated: Vec<SurgeryStep> = steps
            .iter()
            .map(|(n, a)| {
                SurgeryStep::new(1, *n, 1, 1, WeightSource::Alexander(a.clone())).unwrap()
            })
            .collect();
        assert_eq!(sugar, run_chain(&translated).unwrap().lambda);
        // Independent bookkeeping: weights 1, -1, 1 against coefficients.
        assert_eq!(sugar, rat(2 * (2 * 1 + (-1) * (-1) + 3 * 1), 1));
    }

    #[test]
    fn identity_step_fixes_state() {
        let first = SurgeryStep::unknot(1, 3).unwrap();
        let before = apply_step(&ManifoldState::three_sphere(), &first).unwrap();
        let id = SurgeryStep::unknot(1, 0).unwrap();
        assert_eq!(apply_step(&before, &id).unwrap(), before);
    }

    #[test]
    fn multi_step_rational_chain_bookkeeping() {
        // Unknot 4/1 gives (lambda', h1) = (-1/4, 4); then (3, 2, d=2,
        // k=2) with the trefoil adds 3 lambda' + 2 W + 2 eps'(3,2,2)
        // = -3/4 + 2 + 5/6.
        let steps = [
            SurgeryStep::unknot(4, 1).unwrap(),
            SurgeryStep::new(3, 2, 2, 2, WeightSource::Alexander(trefoil())).unwrap(),
        ];
        let report = run_chain(&steps).unwrap();
        assert_eq!(report.trace[0].lambda_prime, rat(-1, 4));
        assert_eq!(report.trace[0].h1_order, 4);
        assert_eq!(report.lambda_prime, rat(25, 12));
        assert_eq!(report.h1_order, 12);
        assert_eq!(report.lambda, rat(25, 72));
        assert_eq!(report.ntheta_total, report.lambda_prime);
    }

    #[test]
    fn precomputed_weight_matches_polynomial() {
        let a = SurgeryStep::new(5, 3, 1, 1, WeightSource::Alexander(trefoil())).unwrap();
        let b = SurgeryStep::new(5, 3, 1, 1, WeightSource::Weight(rat(1, 1))).unwrap();
        assert_eq!(
            run_chain(&[a]).unwrap().lambda,
            run_chain(&[b]).unwrap().lambda
        );
    }

    #[test]
    fn sign_normalization_of_steps() {
        let pos = run_chain(&[SurgeryStep::unknot(7, 3).unwrap()]).unwrap();
        let neg = run_chain(&[SurgeryStep::unknot(-7, -3).unwrap()]).unwrap();
        assert_eq!(pos, neg);
    }

    #[test]
    fn chain_inconsistency_reports_index() {
        let steps = [
            SurgeryStep::unknot(3, 1).unwrap(),
            SurgeryStep::unknot(5, 1).unwrap(),
        ];
        match run_chain(&steps) {
            Err(Error::ChainStep { index, source }) => {
                assert_eq!(index, 1);
                assert_eq!(*source, Error::ChainInconsistency { dk: 1, h1: 3 });
            }
            other => panic!("expected chain inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn step_validation() {
        let one = || WeightSource::Alexander(SymmetricLaurent::one());
        assert!(SurgeryStep::new(0, 1, 1, 1, one()).is_err());
        assert!(SurgeryStep::new(4, 2, 1, 1, one()).is_err());
        assert!(SurgeryStep::new(3, 0, 1, 1, one()).is_err());
        assert!(SurgeryStep::new(3, 1, 2, 3, one()).is_err());
        assert!(SurgeryStep::new(3, 1, 0, 1, one()).is_err());
        // A(1) = 1 but k/d = 2 is a normalization mismatch.
        assert!(SurgeryStep::new(3, 1, 1, 2, WeightSource::Alexander(trefoil())).is_err());
        assert!(SurgeryStep::new(3, 1, 1, 2, WeightSource::Weight(rat(1, 1))).is_ok());
    }

    #[test]
    fn chain_files_parse() {
        let text = r#"{
            "steps": [
                {"p": 4, "q": 1, "d": 1, "k": 1, "alexander": "0:1"},
                {"p": 3, "q": 2, "d": 2, "k": 2, "alexander": "2:1,0:-1,-2:1"},
                {"p": 1, "q": 1, "d": 2, "k": 6, "weight": "5/4"}
            ]
        }"#;
        let steps = parse_chain(text).unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[1].d(), 2);
        assert_eq!(steps[2].weight(), rat(5, 4));
        let report = run_chain(&steps[..2]).unwrap();
        assert_eq!(report.lambda, rat(25, 72));
    }

    #[test]
    fn chain_file_errors() {
        assert!(matches!(parse_chain("not json"), Err(Error::Parse(_))));
        let missing = r#"{"steps": [{"p": 3, "q": 1, "d": 1, "k": 1}]}"#;
        assert!(matches!(
            parse_chain(missing),
            Err(Error::ChainStep { index: 0, .. })
        ));
        let both = r#"{"steps": [{"p": 3, "q": 1, "d": 1, "k": 1,
            "alexander": "0:1", "weight": "1"}]}"#;
        assert!(parse_chain(both).is_err());
        let unknown = r#"{"steps": [{"p": 3, "q": 1, "d": 1, "k": 1,
            "alexander": "0:1", "extra": true}]}"#;
        assert!(matches!(parse_chain(unknown), Err(Error::Parse(_))));
        let bad_poly = r#"{"steps": [{"p": 3, "q": 1, "d": 1, "k": 1,
            "alexander": "1:1"}]}"#;
        assert!(parse_chain(bad_poly).is_err());
    }
}

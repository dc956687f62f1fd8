//! Exact calculator for Dedekind sums, lens-space eta invariants, and the
//! Casson-Walker invariant of rational homology three-spheres.

pub mod alexander;
pub mod cli;
pub mod cyclotomic;
pub mod dedekind;
pub mod error;
pub mod lens;
pub mod poly;
pub mod rational;
pub mod selftest;
pub mod surgery;

pub use alexander::SymmetricLaurent;
pub use cyclotomic::{trig_field_order, trig_value, Cyclotomic, TrigKind};
pub use dedekind::{dedekind_sum, dedekind_sum_cotangent, reciprocity_defect, sawtooth};
pub use error::{Error, Result};
pub use lens::{
    fixed_point_term, LensContext, LensEntry, LensFloatEntry, LensFloatReport,
    LensInvariantReport, LensSpec, Route, SpinCLabel,
};
pub use poly::{cyclotomic_polynomial, euler_phi, IntPolynomial};
pub use rational::{decimal_string, format_rational, parse_rational, rat, Rational};
pub use selftest::{run_selftest, Depth, SelftestReport, SuiteResult};
pub use surgery::{
    apply_step, casson_integral_chain, epsilon_prime, parse_chain, run_chain, ChainReport,
    ManifoldState, SurgeryStep, WeightSource,
};

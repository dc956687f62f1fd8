//! Crate-wide error type.

/// Everything that can go wrong across the crate.
///
/// The CLI maps these onto exit codes: internal contract violations (an
/// identity the implementation guarantees failed to hold) exit with 3,
/// every other error here is a validation failure and exits with 2.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on caller-supplied data failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Arithmetic attempted between elements of different cyclotomic fields.
    #[error("cyclotomic order mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u64, right: u64 },

    /// Inversion of zero.
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u64 },

    /// Trigonometric value requested at an argument where it vanishes or
    /// blows up, e.g. csc(pi a/p) with a a multiple of p.
    #[error("{kind} is zero or singular at a = {a} over p = {p}")]
    TrigPole { kind: &'static str, a: i64, p: u64 },

    /// Rational extraction from an element that is not rational.
    #[error("element of Q(zeta_{order}) is not rational: {element}")]
    NotRational { order: u64, element: String },

    /// A surgery step's (d, k) data contradicts the running homology order.
    #[error("chain inconsistency: step has d*k = {dk} but current |H1| = {h1}")]
    ChainInconsistency { dk: u64, h1: u64 },

    /// Failure at a specific step of a surgery chain.
    #[error("step {index}: {source}")]
    ChainStep {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// Malformed textual input (polynomials, rationals, chain files).
    #[error("parse error: {0}")]
    Parse(String),

    /// An identity the implementation guarantees failed to hold.
    #[error("internal contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    /// True for errors that indicate a bug in the library rather than bad
    /// input: these are the exit-code-3 class.
    pub fn is_internal(&self) -> bool {
        match self {
            Error::ContractViolation(_) | Error::NotRational { .. } => true,
            Error::ChainStep { source, .. } => source.is_internal(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

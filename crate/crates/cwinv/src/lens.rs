//! Per-Spin^c invariants of lens spaces: Dirac and signature eta
//! invariants, the metric-independent correction term, and the resulting
//! ntheta spectrum, all in exact arithmetic with an f64 mirror.
//!
//! For L(p,q) with gcd(p,q) = 1 the p Spin^c structures are labeled by
//! alpha in 0..p, and with t = 1 for even p, t = 2 for odd p,
//!
//!   eta_dirac(alpha) = -(1/p) sum_{g=1}^{p-1}
//!       csc(pi t g/p) csc(pi t q g/p) cos(2 pi g alpha/p),
//!   eta_sign = -4 s(q,p),
//!   corr = -(1/4) eta_dirac - (1/8) eta_sign,
//!   ntheta(alpha) = -corr(alpha),
//!
//! and independently 2 ntheta(alpha) equals the closed form
//! -s(q,p) - (1/2p) sum csc csc cos. Both routes are exposed and the
//! aggregate identity 2 sum_alpha ntheta = -p s(q,p) is checked on every
//! spectrum computation.
//!
//! The cosecant arguments keep the literal products t*q*g reduced mod 2p:
//! csc(pi x/p) changes sign under x -> x + p, so reducing mod p would be
//! wrong for even p.

use num::{BigInt, ToPrimitive, Zero};

use crate::cyclotomic::{
    self, cyclic_convolve_i64, geometric_series_vec, rotate_add, trig_field_order, trig_value,
    Cyclotomic, TrigKind,
};
use crate::dedekind::dedekind_sum;
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Exact spectra build integer convolution tables of size O(p^2); this cap
/// keeps every intermediate provably inside i64/i128. Float mode has no
/// such limit but is O(p^2) per spectrum, so it gets a (generous) cap too.
pub const MAX_EXACT_LENS_P: u64 = 4096;
pub const MAX_FLOAT_LENS_P: u64 = 200_000;

/// The lens space L(p,q), with p >= 1 and q reduced to 0..p coprime to p.
/// Constructed from any surgery-style pair: a negative p is normalized to
/// (-p, -q), and q is reduced mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LensSpec {
    p: u64,
    q: u64,
}

/// Label for one of the p Spin^c structures on L(p,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinCLabel(pub u64);

impl From<u64> for SpinCLabel {
    fn from(alpha: u64) -> Self {
        SpinCLabel(alpha)
    }
}

/// Which of the two independent derivations of ntheta to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Assemble -corr from the Dirac and signature eta invariants.
    EtaPipeline,
    /// Evaluate the closed cosecant expression for 2*ntheta directly.
    ClosedForm,
}

/// Exact per-Spin^c data for one lens space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensEntry {
    pub alpha: u64,
    pub eta_dirac: Rational,
    pub corr: Rational,
    pub ntheta: Rational,
}

/// Full exact spectrum report. `total_check` is 2 sum ntheta + p s(q,p),
/// which is identically zero; a nonzero value is a contract violation and
/// never escapes into a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensInvariantReport {
    pub p: u64,
    pub q: u64,
    pub eta_sign: Rational,
    pub entries: Vec<LensEntry>,
    pub ntheta_sum: Rational,
    pub total_check: Rational,
}

/// Float mirror of [`LensEntry`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensFloatEntry {
    pub alpha: u64,
    pub eta_dirac: f64,
    pub corr: f64,
    pub ntheta: f64,
}

/// Float mirror of [`LensInvariantReport`]; `total_check` here is a
/// residual that should vanish to within rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct LensFloatReport {
    pub p: u64,
    pub q: u64,
    pub eta_sign: f64,
    pub entries: Vec<LensFloatEntry>,
    pub ntheta_sum: f64,
    pub total_check: f64,
}

impl LensSpec {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p < 0 { (-(p as i128), -(q as i128)) } else { (p as i128, q as i128) };
        if p == 0 {
            return Err(Error::InvalidArgument(
                "lens space L(0,q) is not a rational homology sphere".into(),
            ));
        }
        let pu = p as u64;
        let qu = q.rem_euclid(p) as u64;
        if num::integer::gcd(pu, qu) != 1 {
            return Err(Error::InvalidArgument(format!(
                "lens space L({pu},{qu}) requires gcd(p,q) = 1"
            )));
        }
        Ok(LensSpec { p: pu, q: qu })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// q normalized into 0..p.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Validated Spin^c label.
    pub fn spinc(&self, alpha: u64) -> Result<SpinCLabel> {
        if alpha < self.p {
            Ok(SpinCLabel(alpha))
        } else {
            Err(Error::InvalidArgument(format!(
                "spin-c label {alpha} out of range for p = {}",
                self.p
            )))
        }
    }

    /// Parity switch of the eta formulas: csc arguments carry t = 1 for
    /// even p and t = 2 for odd p.
    fn parity_multiplier(&self) -> u64 {
        if self.p % 2 == 0 {
            1
        } else {
            2
        }
    }

    /// Dedekind sum s(q,p) of the pair.
    pub fn dedekind(&self) -> Rational {
        dedekind_sum(self.q as i64, self.p).expect("validated pair has gcd 1")
    }

    /// Signature eta invariant: -4 s(q,p).
    pub fn eta_signature(&self) -> Rational {
        self.dedekind() * rat(-4, 1)
    }

    /// Shared exact engine for all per-Spin^c values of this lens space.
    /// Building it costs O(p) integer convolutions; every per-alpha query
    /// afterwards is a rotation pass plus one reduction.
    pub fn context(&self) -> Result<LensContext> {
        LensContext::build(*self)
    }

    /// One-shot Dirac eta invariant (builds a context; loop over a
    /// spectrum or keep a [`LensContext`] when querying many labels).
    pub fn eta_dirac(&self, label: SpinCLabel) -> Result<Rational> {
        self.context()?.eta_dirac(label)
    }

    /// One-shot correction term.
    pub fn corr(&self, label: SpinCLabel) -> Result<Rational> {
        self.context()?.corr(label)
    }

    /// One-shot ntheta by the requested route.
    pub fn ntheta(&self, label: SpinCLabel, route: Route) -> Result<Rational> {
        self.context()?.ntheta(label, route)
    }

    /// Exact spectrum over all p Spin^c structures.
    pub fn spectrum(&self) -> Result<LensInvariantReport> {
        self.context()?.spectrum()
    }

    /// Float spectrum, O(p^2) but denominator-size-independent.
    pub fn spectrum_f64(&self) -> Result<LensFloatReport> {
        let tables = FloatTables::build(self)?;
        let mut entries = Vec::with_capacity(self.p as usize);
        let mut total = Kahan::default();
        for alpha in 0..self.p {
            let e = tables.entry(alpha);
            total.add(e.ntheta);
            entries.push(e);
        }
        let ntheta_sum = total.value();
        Ok(LensFloatReport {
            p: self.p,
            q: self.q,
            eta_sign: tables.eta_sign,
            entries,
            ntheta_sum,
            total_check: 2.0 * ntheta_sum + self.p as f64 * tables.s,
        })
    }

    /// Single float entry without computing the whole spectrum.
    pub fn entry_f64(&self, label: SpinCLabel) -> Result<LensFloatEntry> {
        let SpinCLabel(alpha) = label;
        self.spinc(alpha)?;
        Ok(FloatTables::build(self)?.entry(alpha))
    }
}

/// The fixed-point contribution of g to the Dirac eta invariant:
/// -(1/2) csc(pi t g/p) csc(pi t q g/p), as an exact cyclotomic number.
pub fn fixed_point_term(p: u64, q: i64, g: u64) -> Result<Cyclotomic> {
    let spec = LensSpec::new(p as i64, q)?;
    if g == 0 || g >= p {
        return Err(Error::InvalidArgument(format!(
            "fixed-point index g = {g} out of range 1..{p}"
        )));
    }
    let t = spec.parity_multiplier();
    let a1 = (t as u128 * g as u128 % (2 * p as u128)) as i64;
    let a2 = (t as u128 * spec.q as u128 * g as u128 % (2 * p as u128)) as i64;
    let c1 = trig_value(TrigKind::CscPiOver, a1, p)?;
    let c2 = trig_value(TrigKind::CscPiOver, a2, p)?;
    Ok(c1.try_mul(&c2)?.scaled(&rat(-1, 2)))
}

/// Exact computation engine for one lens space: per-g cosecant products as
/// integer convolution tables in the group ring of Z/m, m = lcm(2p,4).
pub struct LensContext {
    spec: LensSpec,
    m: u64,
    s: Rational,
    /// convs[g-1] carries csc(pi t g/p) csc(pi t q g/p) * (m^2/4), i.e.
    /// the raw convolution before the common 4/m^2 scale.
    convs: Vec<Vec<i64>>,
}

impl LensContext {
    fn build(spec: LensSpec) -> Result<Self> {
        let p = spec.p;
        if p > MAX_EXACT_LENS_P {
            return Err(Error::InvalidArgument(format!(
                "exact lens spectra are capped at p <= {MAX_EXACT_LENS_P} (got {p}); use the float route"
            )));
        }
        let m = trig_field_order(p);
        let t = spec.parity_multiplier();
        let s = spec.dedekind();
        let mut convs = Vec::with_capacity(p.saturating_sub(1) as usize);
        for g in 1..p {
            let a1 = (t as u128 * g as u128 % (2 * p as u128)) as u64;
            let a2 = (t as u128 * spec.q as u128 * g as u128 % (2 * p as u128)) as u64;
            let u1 = csc_int_vec(m, p, a1);
            let u2 = csc_int_vec(m, p, a2);
            convs.push(cyclic_convolve_i64(&u1, &u2));
        }
        Ok(LensContext {
            spec,
            m,
            s,
            convs,
        })
    }

    pub fn spec(&self) -> LensSpec {
        self.spec
    }

    /// sum_{g=1}^{p-1} csc(pi t g/p) csc(pi t q g/p) cos(2 pi g alpha/p),
    /// exactly. The group-ring accumulator is reduced once, at the end.
    fn csc_cos_sum(&self, alpha: u64) -> Result<Rational> {
        let p = self.spec.p;
        if p == 1 {
            return Ok(Rational::zero());
        }
        let m = self.m as usize;
        let mut acc = vec![0i128; m];
        for (gi, conv) in self.convs.iter().enumerate() {
            let g = gi as u64 + 1;
            let r = (g as u128 * alpha as u128 % p as u128) as u64;
            let e = (r * (self.m / p)) as usize;
            accumulate_shifted(&mut acc, conv, e);
            accumulate_shifted(&mut acc, conv, (m - e) % m);
        }
        let ints = cyclotomic::reduce_i128_vec(self.m, &acc);
        // Each conv carries (2/m)^2 and the cosine halves the two shifts.
        let scale = Rational::new(
            BigInt::from(2),
            BigInt::from(self.m) * BigInt::from(self.m),
        );
        cyclotomic::from_reduced_ints(self.m, &ints, &scale)
            .to_rational()
            .map_err(|e| {
                Error::ContractViolation(format!(
                    "lens cosecant sum for L({},{}) at alpha = {alpha} is not rational: {e}",
                    self.spec.p, self.spec.q
                ))
            })
    }

    pub fn eta_dirac(&self, label: SpinCLabel) -> Result<Rational> {
        let SpinCLabel(alpha) = label;
        self.spec.spinc(alpha)?;
        let sum = self.csc_cos_sum(alpha)?;
        Ok(-sum / Rational::from_integer(BigInt::from(self.spec.p)))
    }

    pub fn eta_signature(&self) -> Rational {
        &self.s * rat(-4, 1)
    }

    pub fn corr(&self, label: SpinCLabel) -> Result<Rational> {
        let d = self.eta_dirac(label)?;
        Ok(d * rat(-1, 4) + self.eta_signature() * rat(-1, 8))
    }

    pub fn ntheta(&self, label: SpinCLabel, route: Route) -> Result<Rational> {
        match route {
            Route::EtaPipeline => Ok(-self.corr(label)?),
            Route::ClosedForm => {
                let SpinCLabel(alpha) = label;
                self.spec.spinc(alpha)?;
                let sum = self.csc_cos_sum(alpha)?;
                let p = BigInt::from(self.spec.p);
                // 2 ntheta = -s - sum/(2p).
                let twice = -&self.s - sum / Rational::from_integer(p * BigInt::from(2));
                Ok(twice * rat(1, 2))
            }
        }
    }

    /// Spectrum over all labels via the eta pipeline, with the aggregate
    /// identity 2 sum ntheta = -p s(q,p) verified before returning.
    pub fn spectrum(&self) -> Result<LensInvariantReport> {
        let p = self.spec.p;
        let eta_sign = self.eta_signature();
        let mut entries = Vec::with_capacity(p as usize);
        let mut ntheta_sum = Rational::zero();
        for alpha in 0..p {
            let eta_dirac = self.eta_dirac(SpinCLabel(alpha))?;
            let corr = &eta_dirac * rat(-1, 4) + &eta_sign * rat(-1, 8);
            let ntheta = -&corr;
            ntheta_sum += &ntheta;
            entries.push(LensEntry {
                alpha,
                eta_dirac,
                corr,
                ntheta,
            });
        }
        let total_check = &ntheta_sum * rat(2, 1)
            + &self.s * Rational::from_integer(BigInt::from(p));
        if !total_check.is_zero() {
            return Err(Error::ContractViolation(format!(
                "aggregate lens identity failed for L({},{}): 2 sum ntheta + p s = {}",
                p,
                self.spec.q,
                crate::rational::format_rational(&total_check)
            )));
        }
        Ok(LensInvariantReport {
            p,
            q: self.spec.q,
            eta_sign,
            entries,
            ntheta_sum,
            total_check,
        })
    }
}

/// Unreduced group-ring vector of csc(pi a/p) in Z/m, carrying scale 2/m:
/// csc = 2 zeta^(m/4 + A) / (zeta^(2A) - 1) with A = a m / 2p.
fn csc_int_vec(m: u64, p: u64, a: u64) -> Vec<i64> {
    debug_assert!(a % p != 0, "cosecant pole");
    let m4 = m / 4;
    let aa = (a % (2 * p)) * (m / (2 * p));
    let s = geometric_series_vec(m, (2 * aa) % m);
    let mut v = vec![0i64; m as usize];
    rotate_add(&mut v, &s, (m4 + aa) % m, 1);
    v
}

fn accumulate_shifted(acc: &mut [i128], v: &[i64], shift: usize) {
    let m = acc.len();
    debug_assert!(shift < m);
    for (i, x) in v.iter().enumerate() {
        if *x != 0 {
            let mut idx = i + shift;
            if idx >= m {
                idx -= m;
            }
            acc[idx] += *x as i128;
        }
    }
}

/// Compensated float summation.
#[derive(Default, Clone, Copy)]
struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

/// Precomputed float data shared by all labels of one lens space.
struct FloatTables {
    p: u64,
    s: f64,
    eta_sign: f64,
    /// products[g-1] = csc(pi t g/p) csc(pi t q g/p)
    products: Vec<f64>,
    /// cos_table[r] = cos(2 pi r / p)
    cos_table: Vec<f64>,
}

impl FloatTables {
    fn build(spec: &LensSpec) -> Result<FloatTables> {
        let p = spec.p;
        if p > MAX_FLOAT_LENS_P {
            return Err(Error::InvalidArgument(format!(
                "float lens spectra are capped at p <= {MAX_FLOAT_LENS_P} (got {p})"
            )));
        }
        let t = spec.parity_multiplier();
        let s = spec
            .dedekind()
            .to_f64()
            .expect("dedekind sum within f64 range");
        let pf = p as f64;
        let csc = |a: u64| -> f64 {
            1.0 / (std::f64::consts::PI * a as f64 / pf).sin()
        };
        let products = (1..p)
            .map(|g| {
                let a1 = (t as u128 * g as u128 % (2 * p as u128)) as u64;
                let a2 = (t as u128 * spec.q as u128 * g as u128 % (2 * p as u128)) as u64;
                csc(a1) * csc(a2)
            })
            .collect();
        let cos_table = (0..p)
            .map(|r| (2.0 * std::f64::consts::PI * r as f64 / pf).cos())
            .collect();
        Ok(FloatTables {
            p,
            s,
            eta_sign: -4.0 * s,
            products,
            cos_table,
        })
    }

    fn entry(&self, alpha: u64) -> LensFloatEntry {
        let p = self.p;
        let mut sum = Kahan::default();
        for (gi, prod) in self.products.iter().enumerate() {
            let g = gi as u64 + 1;
            let r = (g as u128 * alpha as u128 % p as u128) as usize;
            sum.add(prod * self.cos_table[r]);
        }
        let eta_dirac = -sum.value() / p as f64;
        let corr = -eta_dirac / 4.0 - self.eta_sign / 8.0;
        LensFloatEntry {
            alpha,
            eta_dirac,
            corr,
            ntheta: -corr,
        }
    }
}

//! Verification harness pairing every analytic operation with the quadrature
//! oracle and with published reference values, producing machine-readable
//! reports. Random draws are seeded and reproducible; report lists are
//! order-stable (sorted by case id).

use crate::closed_form::{
    self, delta_coefficient, radial_m, radial_m_equal, watson_antiderivative, FieldType,
    PairKind, RadialIntegralSpec, RadialInterval, SphFamily,
};
use crate::cyl_gaussian::{
    h_integral, h_integral_damped, h_integral_small_eta, GaussianIntegralSpec, IntegralKind,
};
use crate::error::Result;
use crate::oracle::{quad_finite, quad_killed, QuadratureConfig};
use crate::special_fn::{
    bessel_j_nu, bessel_y_nu, riccati, sph_bessel_j, sph_bessel_y, sph_hankel, RiccatiFamily,
};
use crate::sph_gaussian::{self, SphKind};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Default seed for the random-draw suites ("softkill" in ASCII).
pub const DEFAULT_SEED: u64 = 0x736f_6674_6b69_6c6c;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Killdemo,
    Identities,
    Limits,
    ClosedFormGrid,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedSource {
    /// A cell of the published reference table.
    ReferenceTable,
    /// A number printed in the reference prose.
    ReferenceText,
    /// The quadrature oracle evaluated at run time.
    Oracle,
    /// An exact identity; expected is the identity's other side (usually 0).
    Identity,
}

impl ExpectedSource {
    fn label(self) -> &'static str {
        match self {
            ExpectedSource::ReferenceTable => "reference_table",
            ExpectedSource::ReferenceText => "reference_text",
            ExpectedSource::Oracle => "oracle",
            ExpectedSource::Identity => "identity",
        }
    }
}

#[derive(Debug, Clone)]
pub enum CaseSpec {
    /// Gaussian-damped cylindrical product integral.
    Cylindrical(GaussianIntegralSpec),
    /// Gaussian-damped spherical product integral.
    Spherical { kind: SphKind, n: usize, k_first: Complex64, k_second: Complex64, eta: f64 },
    /// Regular part of a closed-form radial integral. The oracle column is
    /// populated for finite intervals only.
    RadialRegular(RadialIntegralSpec),
    /// A value computed by the suite builder (identity residuals, fitted
    /// statistics); carries no oracle pairing of its own.
    Precomputed { analytic: Complex64 },
}

#[derive(Debug, Clone)]
pub struct ConformanceCase {
    pub id: String,
    pub spec: CaseSpec,
    /// Ignored when expected_source is Oracle (filled from quadrature).
    pub expected: Complex64,
    pub expected_source: ExpectedSource,
    /// Deviation bound on |analytic - expected|; relative to |expected|
    /// when `relative`, absolute otherwise.
    pub tolerance: f64,
    pub relative: bool,
    /// Additional bound on |oracle - expected|, same relative/absolute
    /// convention; None skips the oracle gate.
    pub oracle_tolerance: Option<f64>,
    /// Where the expected value was printed; required for reference sources.
    pub citation: Option<String>,
    pub notes: String,
}

#[derive(Debug, Clone)]
pub struct ConformanceReport {
    pub id: String,
    pub analytic: Complex64,
    pub oracle: Option<Complex64>,
    pub expected: Complex64,
    pub expected_source: ExpectedSource,
    pub abs_dev: f64,
    /// abs_dev / |expected|; NaN when the expected value is exactly 0.
    pub rel_dev: f64,
    pub pass: bool,
    pub notes: String,
}

#[derive(Debug, Clone)]
pub struct ConformanceConfig {
    pub seed: u64,
    /// Draws per identity group.
    pub identity_draws: usize,
    /// Oracle-paired draws per integral kind.
    pub oracle_draws: usize,
    pub quad: QuadratureConfig,
}

impl Default for ConformanceConfig {
    fn default() -> Self {
        ConformanceConfig {
            seed: DEFAULT_SEED,
            identity_draws: 40,
            oracle_draws: 2,
            quad: QuadratureConfig { rel_tol: 1e-10, max_intervals: 12_000, ..Default::default() },
        }
    }
}

/// Oracle targets for the damped products: the admitted growth corner
/// (envelope e^{g^2/4eta} up to e^12, about 1.6e5) puts the cancellation
/// noise floor near envelope * eps, a few 1e-11 absolute, so targets below
/// that only stall the refinement. Every gate fed by this oracle sits at
/// 1e-8 absolute or looser.
fn killed_quad(quad: &QuadratureConfig) -> QuadratureConfig {
    QuadratureConfig {
        rel_tol: quad.rel_tol.max(1e-9),
        abs_tol: quad.abs_tol.max(2e-10),
        ..*quad
    }
}

pub fn run_suite(suite: Suite, cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    let mut reports = match suite {
        Suite::Table1 => suite_table1(cfg),
        Suite::Killdemo => suite_killdemo(cfg),
        Suite::Identities => suite_identities(cfg),
        Suite::Limits => suite_limits(cfg),
        Suite::ClosedFormGrid => suite_closed_form_grid(cfg),
        Suite::Full => {
            let mut all = suite_table1(cfg);
            all.extend(suite_killdemo(cfg));
            all.extend(suite_identities(cfg));
            all.extend(suite_limits(cfg));
            all.extend(suite_closed_form_grid(cfg));
            all
        }
    };
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}

pub fn run_case(case: &ConformanceCase, quad: &QuadratureConfig) -> ConformanceReport {
    let analytic = match evaluate_spec(&case.spec) {
        Ok(v) => v,
        Err(e) => {
            return ConformanceReport {
                id: case.id.clone(),
                analytic: Complex64::new(f64::NAN, f64::NAN),
                oracle: None,
                expected: case.expected,
                expected_source: case.expected_source,
                abs_dev: f64::NAN,
                rel_dev: f64::NAN,
                pass: false,
                notes: join_notes(&case.notes, &format!("analytic path failed: {e}")),
            }
        }
    };
    let oracle = oracle_value(&case.spec, quad);
    let mut notes = case.notes.clone();
    if let Some(c) = &case.citation {
        notes = join_notes(&notes, &format!("citation: {c}"));
    }
    let (oracle, expected) = match oracle {
        Some(Err(e)) => {
            notes = join_notes(&notes, &format!("oracle failed: {e}"));
            (None, case.expected)
        }
        Some(Ok(q)) if case.expected_source == ExpectedSource::Oracle => (Some(q), q),
        Some(Ok(q)) => (Some(q), case.expected),
        None => (None, case.expected),
    };
    let abs_dev = (analytic - expected).norm();
    let rel_dev =
        if expected.norm() > 0.0 { abs_dev / expected.norm() } else { f64::NAN };
    let bound = |tol: f64| if case.relative { tol * expected.norm() } else { tol };
    let mut pass = abs_dev <= bound(case.tolerance);
    if case.expected_source == ExpectedSource::Oracle && oracle.is_none() {
        pass = false;
    }
    match (case.oracle_tolerance, oracle) {
        (Some(tol), Some(q)) => pass = pass && (q - expected).norm() <= bound(tol),
        // a requested cross-check that never materialized is a failure, not a footnote
        (Some(_), None) => pass = false,
        (None, _) => {}
    }
    ConformanceReport {
        id: case.id.clone(),
        analytic,
        oracle,
        expected,
        expected_source: case.expected_source,
        abs_dev,
        rel_dev,
        pass,
        notes,
    }
}

fn join_notes(a: &str, b: &str) -> String {
    if a.is_empty() {
        b.to_string()
    } else if b.is_empty() {
        a.to_string()
    } else {
        format!("{a}; {b}")
    }
}

fn evaluate_spec(spec: &CaseSpec) -> Result<Complex64> {
    match spec {
        CaseSpec::Cylindrical(s) => s.evaluate(),
        CaseSpec::Spherical { kind, n, k_first, k_second, eta } => {
            sph_gaussian::evaluate(*kind, *n, *k_first, *k_second, *eta)
        }
        CaseSpec::RadialRegular(s) => Ok(closed_form::evaluate(s)?.value.regular),
        CaseSpec::Precomputed { analytic } => Ok(*analytic),
    }
}

fn oracle_value(spec: &CaseSpec, quad: &QuadratureConfig) -> Option<Result<Complex64>> {
    match spec {
        CaseSpec::Cylindrical(s) => Some(cylindrical_oracle(s, quad)),
        CaseSpec::Spherical { kind, n, k_first, k_second, eta } => {
            Some(spherical_oracle(*kind, *n, *k_first, *k_second, *eta, quad))
        }
        CaseSpec::RadialRegular(s) => match s.interval {
            RadialInterval::Finite { lower, upper } => {
                let f = radial_integrand(s.field_type, s.pair, s.n, s.k_first, s.k_second);
                Some(quad_finite(f, lower, upper, quad).map(|r| r.value))
            }
            RadialInterval::SemiInfinite { .. } => None,
        },
        CaseSpec::Precomputed { .. } => None,
    }
}

/// Quadrature evaluation of a cylindrical spec's defining integral.
pub fn cylindrical_oracle(
    spec: &GaussianIntegralSpec,
    quad: &QuadratureConfig,
) -> Result<Complex64> {
    let f = cylindrical_integrand(*spec);
    Ok(quad_killed(f, spec.eta, spec.k_first, spec.k_second, &killed_quad(quad))?.value)
}

/// Quadrature evaluation of a spherical kind's defining integral.
pub fn spherical_oracle(
    kind: SphKind,
    n: usize,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
    quad: &QuadratureConfig,
) -> Result<Complex64> {
    let f = spherical_integrand(kind, n, k_first, k_second, eta);
    Ok(quad_killed(f, eta, k_first, k_second, &killed_quad(quad))?.value)
}

/// x e^{-eta x^2} F_{o1}(Kx) G_{o2}(kx) built from the general-order Bessel
/// primitives, independent of the analytic assembly under test.
pub fn cylindrical_integrand(spec: GaussianIntegralSpec) -> impl Fn(f64) -> Complex64 {
    let (o1, o2) = spec.kind.signed_orders(spec.order);
    let (y1, y2) = spec.kind.families();
    let nan = Complex64::new(f64::NAN, f64::NAN);
    move |x: f64| {
        if x <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let f1 = if y1 { bessel_y_nu(o1, spec.k_first * x) } else { bessel_j_nu(o1, spec.k_first * x) };
        let f2 = if y2 { bessel_y_nu(o2, spec.k_second * x) } else { bessel_j_nu(o2, spec.k_second * x) };
        match (f1, f2) {
            (Ok(a), Ok(b)) => x * (-spec.eta * x * x).exp() * a * b,
            _ => nan,
        }
    }
}

/// x^2 e^{-eta x^2} f_n(Kx) g_n(kx), with eta = 0 giving the undamped
/// integrand. The jym second factor y_{-n-1} reduces to (-1)^n j_n by order
/// reflection before any series is summed; that reflection is applied here
/// so the oracle never calls the assembly.
pub fn spherical_integrand(
    kind: SphKind,
    n: usize,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> impl Fn(f64) -> Complex64 {
    let nan = Complex64::new(f64::NAN, f64::NAN);
    move |x: f64| {
        if x <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let zf = k_first * x;
        let zs = k_second * x;
        let first = match kind {
            SphKind::Jj | SphKind::Jy | SphKind::Jym => Ok(sph_bessel_j(n, zf)),
            SphKind::Yy => sph_bessel_y(n, zf),
        };
        let second = match kind {
            SphKind::Jj => Ok(sph_bessel_j(n, zs)),
            SphKind::Jy | SphKind::Yy => sph_bessel_y(n, zs),
            SphKind::Jym => {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                Ok(sign * sph_bessel_j(n, zs))
            }
        };
        match (first, second) {
            (Ok(a), Ok(b)) => x * x * (-eta * x * x).exp() * a * b,
            _ => nan,
        }
    }
}

fn pair_families(pair: PairKind) -> (SphFamily, SphFamily) {
    match pair {
        PairKind::Jj => (SphFamily::J, SphFamily::J),
        PairKind::Yy => (SphFamily::Y, SphFamily::Y),
        PairKind::Jy => (SphFamily::J, SphFamily::Y),
        PairKind::Hh => (SphFamily::H, SphFamily::H),
    }
}

fn sph_base(family: SphFamily, n: usize, z: Complex64) -> Result<Complex64> {
    match family {
        SphFamily::J => Ok(sph_bessel_j(n, z)),
        SphFamily::Y => sph_bessel_y(n, z),
        SphFamily::H => sph_hankel(n, z),
    }
}

fn ric_family(family: SphFamily) -> RiccatiFamily {
    match family {
        SphFamily::J => RiccatiFamily::Psi,
        SphFamily::Y => RiccatiFamily::Chi,
        SphFamily::H => RiccatiFamily::Xi,
    }
}

fn radial_integrand(
    field_type: FieldType,
    pair: PairKind,
    n: usize,
    kf: Complex64,
    ks: Complex64,
) -> impl Fn(f64) -> Complex64 {
    let (fc, fd) = pair_families(pair);
    let nan = Complex64::new(f64::NAN, f64::NAN);
    move |x: f64| {
        let build = || -> Result<Complex64> {
            let f = sph_base(fc, n, kf * x)?;
            let g = sph_base(fd, n, ks * x)?;
            Ok(match field_type {
                FieldType::M => x * x * f * g,
                FieldType::N => {
                    let fd1 = riccati(ric_family(fc), n, kf * x)?.derivative;
                    let gd1 = riccati(ric_family(fd), n, ks * x)?.derivative;
                    ((n * (n + 1)) as f64 * f * g + fd1 * gd1) / (kf * ks)
                }
            })
        };
        build().unwrap_or(nan)
    }
}

// ---------------------------------------------------------------- reference
// values printed in the reference table and prose, at their printed digits

const TABLE1_ETA: f64 = 3.58;
const TABLE1_K_REAL: Complex64 = Complex64::new(1.37, 0.0);
const TABLE1_KS_REAL: Complex64 = Complex64::new(2.96, 0.0);
const TABLE1_K_CX: Complex64 = Complex64::new(1.37, 0.457);
/// The reference prints the imaginary part as 1.479; every complex-column
/// value it prints requires 1.749 (digit transposition in the header).
const TABLE1_KS_CX: Complex64 = Complex64::new(2.96, 1.749);

const KILLDEMO_N: usize = 1;
const KILLDEMO_KJ: Complex64 = Complex64::new(1.37, 0.0);
const KILLDEMO_KY: Complex64 = Complex64::new(2.96, 0.457);

struct TableRow {
    id: &'static str,
    kind: SphKind,
    n: usize,
    complex_col: bool,
    /// Printed value at its printed precision; None for the cells whose
    /// printed values are erroneous (pinned to the oracle instead).
    printed: Option<(f64, f64)>,
    /// Significant digits of the printed value (one cell carries only 5).
    digits: i32,
}

const TABLE1_ROWS: [TableRow; 12] = [
    TableRow { id: "table1/01-jj-n2-real", kind: SphKind::Jj, n: 2, complex_col: false, printed: Some((0.000680896, 0.0)), digits: 6 },
    TableRow { id: "table1/02-jj-n3-real", kind: SphKind::Jj, n: 3, complex_col: false, printed: Some((0.000054813, 0.0)), digits: 5 },
    TableRow { id: "table1/03-yy-n0-real", kind: SphKind::Yy, n: 0, complex_col: false, printed: Some((0.0639986, 0.0)), digits: 6 },
    TableRow { id: "table1/04-jy-n0-real", kind: SphKind::Jy, n: 0, complex_col: false, printed: Some((-0.00941848, 0.0)), digits: 6 },
    TableRow { id: "table1/05-jy-n1-real", kind: SphKind::Jy, n: 1, complex_col: false, printed: Some((-0.00851273, 0.0)), digits: 6 },
    TableRow { id: "table1/06-jy-n3-real", kind: SphKind::Jy, n: 3, complex_col: false, printed: Some((-0.000878441, 0.0)), digits: 6 },
    TableRow { id: "table1/07-jj-n2-cx", kind: SphKind::Jj, n: 2, complex_col: true, printed: Some((0.000741033, 0.00100379)), digits: 6 },
    TableRow { id: "table1/08-jj-n3-cx", kind: SphKind::Jj, n: 3, complex_col: true, printed: Some((-0.0000260529, 0.000120958)), digits: 6 },
    TableRow { id: "table1/09-yy-n0-cx", kind: SphKind::Yy, n: 0, complex_col: true, printed: Some((0.00806694, -0.0549797)), digits: 6 },
    TableRow { id: "table1/10-jy-n0-cx", kind: SphKind::Jy, n: 0, complex_col: true, printed: None, digits: 6 },
    TableRow { id: "table1/11-jy-n1-cx", kind: SphKind::Jy, n: 1, complex_col: true, printed: None, digits: 6 },
    TableRow { id: "table1/12-jy-n3-cx", kind: SphKind::Jy, n: 3, complex_col: true, printed: None, digits: 6 },
];

/// Spacing of the last printed digit of x at the given significant figures.
fn printed_ulp(x: f64, digits: i32) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let mag = x.abs().log10().floor() as i32;
    10f64.powi(mag - digits + 1)
}

/// Absolute tolerance granted to a value printed component-wise at the given
/// precision: 1.2x the half-ulp of each component, combined in quadrature.
fn printed_tolerance(re: f64, im: f64, digits: i32) -> f64 {
    let ur = 0.5 * printed_ulp(re, digits);
    let ui = 0.5 * printed_ulp(im, digits);
    1.2 * ur.hypot(ui)
}

fn suite_table1(cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    TABLE1_ROWS
        .iter()
        .map(|row| {
            let (kf, ks) = if row.complex_col {
                (TABLE1_K_CX, TABLE1_KS_CX)
            } else {
                (TABLE1_K_REAL, TABLE1_KS_REAL)
            };
            let spec = CaseSpec::Spherical {
                kind: row.kind,
                n: row.n,
                k_first: kf,
                k_second: ks,
                eta: TABLE1_ETA,
            };
            let mut notes = String::new();
            if row.complex_col {
                notes = "complex column evaluated at k = 2.96+1.749i; the printed header \
                         value 1.479 is a digit transposition"
                    .to_string();
            }
            let case = match row.printed {
                Some((re, im)) => ConformanceCase {
                    id: row.id.to_string(),
                    spec,
                    expected: Complex64::new(re, im),
                    expected_source: ExpectedSource::ReferenceTable,
                    tolerance: printed_tolerance(re, im, row.digits),
                    relative: false,
                    // independent oracle agreement at 5 significant digits
                    oracle_tolerance: Some(6e-5 * Complex64::new(re, im).norm()),
                    citation: Some(format!(
                        "reference table, {} column, {:?} n={}",
                        if row.complex_col { "complex" } else { "real" },
                        row.kind,
                        row.n
                    )),
                    notes,
                },
                None => ConformanceCase {
                    id: row.id.to_string(),
                    spec,
                    expected: Complex64::new(0.0, 0.0),
                    expected_source: ExpectedSource::Oracle,
                    tolerance: 6e-6,
                    relative: true,
                    oracle_tolerance: None,
                    citation: None,
                    notes: join_notes(
                        &notes,
                        "printed cell is irreproducible under argument-role, conjugation, \
                         and sign hypotheses; expected value pinned to the quadrature oracle",
                    ),
                },
            };
            run_case(&case, &cfg.quad)
        })
        .collect()
}

fn suite_killdemo(cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    let mut out = Vec::new();
    for (id, eta, re, im) in [
        ("killdemo/1-damped-eta-0.010", 0.01, 0.0164787, -0.0138487),
        ("killdemo/2-damped-eta-0.005", 0.005, 0.0164062, -0.0136812),
    ] {
        let case = ConformanceCase {
            id: id.to_string(),
            spec: CaseSpec::Spherical {
                kind: SphKind::Jy,
                n: KILLDEMO_N,
                k_first: KILLDEMO_KJ,
                k_second: KILLDEMO_KY,
                eta,
            },
            expected: Complex64::new(re, im),
            expected_source: ExpectedSource::ReferenceText,
            tolerance: printed_tolerance(re, im, 6),
            relative: false,
            oracle_tolerance: Some(printed_tolerance(re, im, 6)),
            citation: Some("kill-demonstration damped integral, printed to six digits".into()),
            notes: "argument roles fixed by oracle matching: j-wavenumber 1.37, \
                    y-wavenumber 2.96+0.457i"
                .to_string(),
        };
        out.push(run_case(&case, &cfg.quad));
    }
    let limit = sph_gaussian::limit_eta0(SphKind::Jy, KILLDEMO_N, KILLDEMO_KJ, KILLDEMO_KY)
        .map(|v| v.regular)
        .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let (re, im) = (0.0163332, -0.0135188);
    let case = ConformanceCase {
        id: "killdemo/3-limit".to_string(),
        spec: CaseSpec::Precomputed { analytic: limit },
        expected: Complex64::new(re, im),
        expected_source: ExpectedSource::ReferenceText,
        tolerance: printed_tolerance(re, im, 6),
        relative: false,
        oracle_tolerance: None,
        citation: Some("kill-demonstration exact limit, printed to six digits".into()),
        notes: "closed-form limit of the damped integral as the width goes to 0".to_string(),
    };
    out.push(run_case(&case, &cfg.quad));
    out
}

// ------------------------------------------------------------------- draws

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn draw_eta(rng: &mut ChaCha8Rng) -> f64 {
    log_uniform(rng, 0.05, 5.0)
}

/// Wavenumber pair inside the certified domain: each argument within 30
/// degrees of the positive real axis, combined exponential growth beatable
/// by the Gaussian (g^2/(4 eta) <= 12), and not nearly equal.
fn draw_wavenumbers(rng: &mut ChaCha8Rng, eta: f64) -> (Complex64, Complex64) {
    loop {
        let draw_one = |rng: &mut ChaCha8Rng| {
            let mag = log_uniform(rng, 0.3, 3.2);
            if rng.gen_bool(0.5) {
                Complex64::new(mag, 0.0)
            } else {
                let arg = rng.gen_range(-PI / 6.0..PI / 6.0);
                mag * Complex64::new(arg.cos(), arg.sin())
            }
        };
        let kf = draw_one(rng);
        let ks = draw_one(rng);
        let g = kf.im.abs() + ks.im.abs();
        if g * g / (4.0 * eta) > 12.0 {
            continue;
        }
        if (kf - ks).norm() < 1e-3 * kf.norm().max(ks.norm()) {
            continue;
        }
        return (kf, ks);
    }
}

/// Order draw: inside (0.05, 0.95) for kinds whose negated factor makes the
/// origin singularity worse, otherwise up to 2.95 but never near an integer.
fn draw_order(rng: &mut ChaCha8Rng, kind: IntegralKind) -> f64 {
    let unit_only = !matches!(kind, IntegralKind::JJ | IntegralKind::JY);
    loop {
        let b: f64 = if unit_only {
            rng.gen_range(0.05..0.95)
        } else {
            rng.gen_range(0.05..2.95)
        };
        if (b - b.round()).abs() >= 0.05 {
            return b;
        }
    }
}

fn aggregate(id: &str, max_dev: f64, tol: f64, notes: String) -> ConformanceReport {
    run_case(
        &ConformanceCase {
            id: id.to_string(),
            spec: CaseSpec::Precomputed { analytic: Complex64::new(max_dev, 0.0) },
            expected: Complex64::new(0.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: tol,
            relative: false,
            oracle_tolerance: None,
            citation: None,
            notes,
        },
        &QuadratureConfig::default(),
    )
}

const CYL_KINDS: [IntegralKind; 7] = [
    IntegralKind::JJ,
    IntegralKind::JY,
    IntegralKind::YY,
    IntegralKind::JJm,
    IntegralKind::JmJ,
    IntegralKind::JmY,
    IntegralKind::JYm,
];

fn suite_identities(cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let draws = cfg.identity_draws.max(1);
    let mut out = Vec::new();
    let tag = |n: usize| format!("{n} draws, seed {:#x}", cfg.seed);

    // finite-range integral antisymmetry: H(b,K,k) = -H(-b,k,K)
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let eta = draw_eta(&mut rng);
        let (kf, ks) = draw_wavenumbers(&mut rng, eta);
        let b = draw_order(&mut rng, IntegralKind::YY);
        if let (Ok(h1), Ok(h2)) = (h_integral(b, kf, ks, eta), h_integral(-b, ks, kf, eta)) {
            dev = dev.max((h1 + h2).norm() / h1.norm().max(h2.norm()).max(1e-30));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/finite-range-antisymmetry",
        dev,
        1e-10,
        join_notes("max |H(b,K,k)+H(-b,k,K)| / max(|H|)", &tag(draws)),
    ));

    // order-negation symmetry of the series h_{-1,b}
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let b = draw_order(&mut rng, IntegralKind::YY);
        let z = Complex64::new(-log_uniform(&mut rng, 0.5, 30.0), 0.0);
        if let (Ok(hp), Ok(hm)) =
            (crate::assoc_bessel::h_minus1(b, z), crate::assoc_bessel::h_minus1(-b, z))
        {
            dev = dev.max((hp - hm).norm() / hp.norm().max(1e-30));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/order-negation-symmetry",
        dev,
        1e-11,
        join_notes("max |h(b,z)-h(-b,z)| / |h|", &tag(draws)),
    ));

    // spherical sign flip: I_jym = (-1)^n I_jj
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let eta = draw_eta(&mut rng);
        let (kf, ks) = draw_wavenumbers(&mut rng, eta);
        let n = rng.gen_range(0..6usize);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        if let (Ok(jym), Ok(jj)) = (
            sph_gaussian::int_jym(n, kf, ks, eta),
            sph_gaussian::int_jj(n, kf, ks, eta),
        ) {
            dev = dev.max((jym - sign * jj).norm() / jj.norm().max(1e-30));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/spherical-sign-flip",
        dev,
        1e-12,
        join_notes("max |I_jym - (-1)^n I_jj| / |I_jj|", &tag(draws)),
    ));

    // wavenumber exchange symmetry of the symmetric kinds
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let eta = draw_eta(&mut rng);
        let (kf, ks) = draw_wavenumbers(&mut rng, eta);
        let n = rng.gen_range(0..6usize);
        if let (Ok(a), Ok(b)) = (
            sph_gaussian::int_jj(n, kf, ks, eta),
            sph_gaussian::int_jj(n, ks, kf, eta),
        ) {
            dev = dev.max((a - b).norm() / a.norm().max(1e-30));
        }
        if let (Ok(a), Ok(b)) = (
            sph_gaussian::int_yy(0, kf, ks, eta),
            sph_gaussian::int_yy(0, ks, kf, eta),
        ) {
            dev = dev.max((a - b).norm() / a.norm().max(1e-30));
        }
    }
    out.push(aggregate(
        "identities/wavenumber-exchange",
        dev,
        1e-12,
        join_notes("max asymmetry of I_jj (any n) and I_yy (n=0) under K <-> k", &tag(draws)),
    ));

    // interval additivity of the radial closed forms
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let (kf, ks) = draw_wavenumbers(&mut rng, 1.0);
        let n = rng.gen_range(0..5usize);
        let pair = if rng.gen_bool(0.5) { PairKind::Jj } else { PairKind::Jy };
        let ft = if rng.gen_bool(0.5) { FieldType::M } else { FieldType::N };
        let r = rng.gen_range(0.2..1.5);
        let l = r + rng.gen_range(0.5..2.5);
        let spec = |interval| RadialIntegralSpec {
            field_type: ft,
            pair,
            n,
            k_first: kf,
            k_second: ks,
            interval,
        };
        let parts = (
            closed_form::evaluate(&spec(RadialInterval::Finite { lower: 0.0, upper: r })),
            closed_form::evaluate(&spec(RadialInterval::Finite { lower: r, upper: l })),
            closed_form::evaluate(&spec(RadialInterval::Finite { lower: 0.0, upper: l })),
        );
        if let (Ok(a), Ok(b), Ok(whole)) = parts {
            let sum = a.value.regular + b.value.regular;
            dev = dev.max((sum - whole.value.regular).norm() / whole.value.regular.norm().max(1e-12));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/interval-additivity",
        dev,
        1e-12,
        join_notes("max |([0,R]+[R,L]) - [0,L]| / |[0,L]|", &tag(draws)),
    ));

    // Riccati cross-family Wronskian. |Im z| stays moderate: the products
    // grow like e^{2 Im z}, and the identity is checked against 1 itself.
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let n = rng.gen_range(0..11usize);
        let mag = log_uniform(&mut rng, 0.1, 50.0);
        let im = rng.gen_range(-1.0f64..1.0).clamp(-0.9 * mag, 0.9 * mag);
        let z = Complex64::new((mag * mag - im * im).sqrt(), im);
        let w = (|| -> Result<Complex64> {
            let p = riccati(RiccatiFamily::Psi, n, z)?;
            let c = riccati(RiccatiFamily::Chi, n, z)?;
            Ok(p.value * c.derivative - p.derivative * c.value)
        })();
        match w {
            Ok(w) => dev = dev.max((w - Complex64::new(1.0, 0.0)).norm()),
            Err(_) => dev = f64::NAN,
        }
    }
    out.push(aggregate(
        "identities/riccati-wronskian",
        dev,
        1e-10,
        join_notes("max |psi chi' - psi' chi - 1|", &tag(draws)),
    ));

    // integer-order continuity of the J.Y integral. Moderate widths and
    // reference-table-like magnitudes: the near-integer path pays a factor
    // cot(pi b) ~ 3e5 in cancellation, which eats the 1e-4 agreement when
    // the result is many orders below the folded intermediate terms.
    let mut dev: f64 = 0.0;
    for i in 0..draws {
        let eta = log_uniform(&mut rng, 0.5, 5.0);
        let (kf, ks) = loop {
            let one = |rng: &mut ChaCha8Rng| {
                let mag = log_uniform(rng, 0.5, 3.0);
                let arg = rng.gen_range(-PI / 12.0..PI / 12.0);
                mag * Complex64::new(arg.cos(), arg.sin())
            };
            let (a, b) = (one(&mut rng), one(&mut rng));
            if (a - b).norm() >= 1e-2 * a.norm().max(b.norm()) {
                break (a, b);
            }
        };
        let n = i % 4;
        let near = GaussianIntegralSpec::new(IntegralKind::JY, n as f64 + 1e-6, kf, ks, eta);
        let exact = GaussianIntegralSpec::new(IntegralKind::JY, n as f64, kf, ks, eta);
        if let (Ok(a), Ok(b)) = (
            near.and_then(|s| s.evaluate()),
            exact.and_then(|s| s.evaluate()),
        ) {
            dev = dev.max((a - b).norm() / b.norm().max(1e-30));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/integer-order-continuity",
        dev,
        1e-4,
        join_notes("max |I_JY(n+1e-6) - I_JY(n)| / |I_JY(n)|, n in 0..4", &tag(draws)),
    ));

    // displayed integer special case: n=0, K=k, a=eta gives
    // -e^{-1/2a} K_0(1/2a) / (2 pi a)
    let a = 0.5;
    let one = Complex64::new(1.0, 0.0);
    let w = Complex64::new(1.0 / (2.0 * a), 0.0);
    let expected = crate::special_fn::mod_bessel_k(0.0, w)
        .map(|k0| -(-w).exp() * k0 / (2.0 * PI * a))
        .unwrap_or(Complex64::new(f64::NAN, 0.0));
    let case = ConformanceCase {
        id: "identities/special/jy-int-n0-combination".into(),
        spec: CaseSpec::Cylindrical(GaussianIntegralSpec {
            kind: IntegralKind::JY,
            order: 0.0,
            k_first: one,
            k_second: one,
            eta: a,
        }),
        expected,
        expected_source: ExpectedSource::ReferenceText,
        tolerance: 1e-10,
        relative: true,
        oracle_tolerance: Some(1e-8),
        citation: Some("displayed combination -e^{-1/2a} K_0(1/2a)/(2 pi a) at K=k=1".into()),
        notes: String::new(),
    };
    out.push(run_case(&case, &cfg.quad));

    // displayed small-width leading behavior of the integer route at K=k:
    // the values tend to -n/pi, with an O(eta) correction
    for n in [1usize, 2, 3] {
        let eta = 3e-5;
        let analytic = GaussianIntegralSpec::new(IntegralKind::JY, n as f64, one, one, eta)
            .and_then(|s| s.evaluate())
            .unwrap_or(Complex64::new(f64::NAN, 0.0));
        let case = ConformanceCase {
            id: format!("identities/special/jy-int-leading-n{n}"),
            spec: CaseSpec::Precomputed { analytic },
            expected: Complex64::new(-(n as f64) / PI, 0.0),
            expected_source: ExpectedSource::ReferenceText,
            tolerance: 1e-3,
            relative: true,
            oracle_tolerance: None,
            citation: Some("small-width limits of the integer-order J.Y integrals: -n/pi".into()),
            notes: format!("evaluated at K=k=1, eta={eta}; correction is O(eta)"),
        };
        out.push(run_case(&case, &cfg.quad));
    }

    // difference of the order-negated product kinds
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let eta = draw_eta(&mut rng);
        let (kf, ks) = draw_wavenumbers(&mut rng, eta);
        let b = draw_order(&mut rng, IntegralKind::JJm);
        let res = (|| -> Result<f64> {
            let jjm = GaussianIntegralSpec::new(IntegralKind::JJm, b, kf, ks, eta)?.evaluate()?;
            let jmj = GaussianIntegralSpec::new(IntegralKind::JmJ, b, kf, ks, eta)?.evaluate()?;
            let h1 = h_integral_damped(b, kf, ks, eta)?;
            let h2 = h_integral_damped(b, ks, kf, eta)?;
            let lhs = jjm - jmj;
            let rhs = (PI * b).sin() * (h2 - h1);
            Ok((lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-30))
        })();
        match res {
            Ok(d) => dev = dev.max(d),
            Err(_) => dev = f64::NAN,
        }
    }
    out.push(aggregate(
        "identities/negated-kind-difference",
        dev,
        1e-10,
        join_notes("max |(I_JJm - I_JmJ) - sin(pi b)(H^(b,k,K) - H^(b,K,k))| (normalized)", &tag(draws)),
    ));

    // small-width expansion of the damped finite-range integral
    let mut dev: f64 = 0.0;
    let eta = 3e-4;
    for _ in 0..draws {
        let b = rng.gen_range(0.1..0.9);
        let km = log_uniform(&mut rng, 0.5, 1.8);
        let ks = km * rng.gen_range(1.5..3.0);
        let (kf, ks) = (Complex64::new(km, 0.0), Complex64::new(ks, 0.0));
        if let (Ok(full), Ok(approx)) = (
            h_integral_damped(b, kf, ks, eta),
            h_integral_small_eta(b, kf, ks, eta),
        ) {
            dev = dev.max((full - approx).norm() / full.norm().max(1e-30));
        } else {
            dev = f64::NAN;
        }
    }
    out.push(aggregate(
        "identities/small-width-expansion",
        dev,
        1e-3,
        join_notes(
            "max |damped - (c0 + c1 eta)| / |damped| at eta = 3e-4; residual is O(eta^2)",
            &tag(draws),
        ),
    ));

    // oracle pairing for every Gaussian-integral kind
    out.extend(gaussian_oracle_reports(cfg.oracle_draws, cfg.seed, &cfg.quad));
    out
}

/// Oracle-paired draws for the 7 cylindrical and 4 spherical kinds.
/// Exposed separately so the acceptance gate can scale up the draw count.
pub fn gaussian_oracle_reports(
    draws_per_kind: usize,
    seed: u64,
    quad: &QuadratureConfig,
) -> Vec<ConformanceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6f7261636c65); // "oracle"
    let mut out = Vec::new();
    for kind in CYL_KINDS {
        for i in 0..draws_per_kind {
            let eta = draw_eta(&mut rng);
            let (kf, ks) = draw_wavenumbers(&mut rng, eta);
            let b = draw_order(&mut rng, kind);
            let spec = GaussianIntegralSpec { kind, order: b, k_first: kf, k_second: ks, eta };
            let case = ConformanceCase {
                id: format!("identities/oracle/cyl-{kind:?}/{i:03}"),
                spec: CaseSpec::Cylindrical(spec),
                expected: Complex64::new(0.0, 0.0),
                expected_source: ExpectedSource::Oracle,
                tolerance: 1e-7,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes: format!("b={b:.6}, K={kf}, k={ks}, eta={eta:.6}, seed {seed:#x}"),
            };
            let mut report = run_case(&case, quad);
            // the pass gate is max(1e-8 absolute, 1e-7 relative)
            if !report.pass && report.abs_dev <= 1e-8 {
                report.pass = true;
            }
            out.push(report);
        }
    }
    for (label, kind) in
        [("jj", SphKind::Jj), ("jy", SphKind::Jy), ("yy", SphKind::Yy), ("jym", SphKind::Jym)]
    {
        for i in 0..draws_per_kind {
            let eta = draw_eta(&mut rng);
            let (kf, ks) = draw_wavenumbers(&mut rng, eta);
            let n = if kind == SphKind::Yy { 0 } else { rng.gen_range(0..6usize) };
            let case = ConformanceCase {
                id: format!("identities/oracle/sph-{label}/{i:03}"),
                spec: CaseSpec::Spherical { kind, n, k_first: kf, k_second: ks, eta },
                expected: Complex64::new(0.0, 0.0),
                expected_source: ExpectedSource::Oracle,
                tolerance: 1e-7,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes: format!("n={n}, K={kf}, k={ks}, eta={eta:.6}, seed {seed:#x}"),
            };
            let mut report = run_case(&case, quad);
            if !report.pass && report.abs_dev <= 1e-8 {
                report.pass = true;
            }
            out.push(report);
        }
    }
    out
}

fn suite_limits(cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    let mut out = Vec::new();
    let quad = &cfg.quad;

    // pointwise value against the closed-form limit at small width
    let (kf, ks) = (Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0));
    let limit = sph_gaussian::limit_eta0(SphKind::Jy, 0, kf, ks)
        .map(|v| v.regular)
        .unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let small = sph_gaussian::int_jy(0, kf, ks, 1e-3).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    out.push(run_case(
        &ConformanceCase {
            id: "limits/1-jy-small-width-value".into(),
            spec: CaseSpec::Precomputed { analytic: small },
            expected: limit,
            expected_source: ExpectedSource::Identity,
            tolerance: 1e-2,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: "I_jy(0,1,2,eta=1e-3) against the eta->0 limit 1/6".into(),
        },
        quad,
    ));

    // fitted convergence order of |I_jy(eta) - limit| over eta in [1e-3, 1e-1]
    let order = fitted_convergence_order(SphKind::Jy, 0, kf, ks).unwrap_or(f64::NAN);
    out.push(run_case(
        &ConformanceCase {
            id: "limits/2-jy-convergence-order".into(),
            spec: CaseSpec::Precomputed { analytic: Complex64::new(order, 0.0) },
            expected: Complex64::new(1.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: 0.2,
            relative: false,
            oracle_tolerance: None,
            citation: None,
            notes: "least-squares slope of log|I(eta)-limit| vs log eta, 9-point grid".into(),
        },
        quad,
    ));

    // the jj integral concentrates on the delta: pointwise values vanish
    let jj_small =
        sph_gaussian::int_jj(1, kf, ks, 1e-3).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    out.push(run_case(
        &ConformanceCase {
            id: "limits/3-jj-regular-part-vanishes".into(),
            spec: CaseSpec::Precomputed { analytic: jj_small },
            expected: Complex64::new(0.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: 1e-12,
            relative: false,
            oracle_tolerance: None,
            citation: None,
            notes: "I_jj(1,1,2,eta=1e-3); off the diagonal K=k the value dies as \
                    exp(-(K-k)^2/(4 eta))"
                .into(),
        },
        quad,
    ));

    // on the diagonal the value grows like the smeared delta 1/(2 sqrt(pi eta))
    let kk = Complex64::new(1.3, 0.0);
    let (eta1, eta2) = (0.01, 0.04);
    let (i1, i2) = (
        sph_gaussian::int_jj(1, kk, kk, eta1).unwrap_or(Complex64::new(f64::NAN, 0.0)),
        sph_gaussian::int_jj(1, kk, kk, eta2).unwrap_or(Complex64::new(f64::NAN, 0.0)),
    );
    out.push(run_case(
        &ConformanceCase {
            id: "limits/4-diagonal-growth-ratio".into(),
            spec: CaseSpec::Precomputed { analytic: i1 / i2 },
            expected: Complex64::new(2.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: 0.05,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: format!(
                "I_jj(K=k) scales as 1/(K sqrt(4 pi eta)): ratio at eta {eta1}/{eta2}; \
                 values {i1} and {i2}"
            ),
        },
        quad,
    ));
    let scaled = i1 * 2.0 * kk * kk * (4.0 * PI * eta1).sqrt() / PI;
    out.push(run_case(
        &ConformanceCase {
            id: "limits/5-diagonal-growth-constant".into(),
            spec: CaseSpec::Precomputed { analytic: scaled },
            expected: Complex64::new(1.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: 0.05,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: format!("I_jj(K=k,eta) x 2K^2 sqrt(4 pi eta)/pi at eta = {eta1}"),
        },
        quad,
    ));
    out
}

fn fitted_convergence_order(
    kind: SphKind,
    n: usize,
    kf: Complex64,
    ks: Complex64,
) -> Result<f64> {
    let limit = sph_gaussian::limit_eta0(kind, n, kf, ks)?.regular;
    let points = 9;
    let (lo, hi) = (1e-3f64, 1e-1f64);
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for i in 0..points {
        let eta = lo * (hi / lo).powf(i as f64 / (points - 1) as f64);
        let v = sph_gaussian::evaluate(kind, n, kf, ks, eta)?;
        xs.push(eta.ln());
        ys.push((v - limit).norm().ln());
    }
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Ok(sxy / sxx)
}

fn suite_closed_form_grid(cfg: &ConformanceConfig) -> Vec<ConformanceReport> {
    let mut out = Vec::new();
    let quad = &cfg.quad;
    let c = Complex64::new;

    // curated finite intervals, every pair and field type, vs quad_finite
    let grid: [(FieldType, PairKind, usize, Complex64, Complex64, f64, f64); 10] = [
        (FieldType::M, PairKind::Jj, 2, c(1.37, 0.0), c(2.96, 0.0), 0.5, 2.0),
        (FieldType::M, PairKind::Jj, 0, c(1.37, 0.0), c(2.96, 0.0), 0.0, 2.0),
        (FieldType::M, PairKind::Jy, 1, c(1.37, 0.0), c(2.96, 0.457), 0.0, 2.0),
        (FieldType::M, PairKind::Yy, 2, c(1.1, 0.2), c(2.3, -0.1), 0.4, 2.5),
        (FieldType::M, PairKind::Hh, 1, c(1.2, 0.31), c(2.1, 0.45), 0.7, 3.0),
        (FieldType::N, PairKind::Jj, 1, c(1.37, 0.0), c(2.96, 0.0), 0.5, 2.0),
        (FieldType::N, PairKind::Jy, 2, c(0.9, 0.1), c(2.2, 0.3), 0.0, 1.8),
        (FieldType::N, PairKind::Yy, 1, c(1.4, 0.0), c(2.6, 0.2), 0.3, 2.2),
        (FieldType::N, PairKind::Hh, 3, c(1.0, 0.3), c(2.0, 0.5), 0.9, 2.4),
        (FieldType::N, PairKind::Jy, 0, c(0.9, 0.1), c(2.2, 0.3), 0.0, 1.8),
    ];
    for (i, (ft, pair, n, kf, ks, a, b)) in grid.into_iter().enumerate() {
        let spec = RadialIntegralSpec {
            field_type: ft,
            pair,
            n,
            k_first: kf,
            k_second: ks,
            interval: RadialInterval::Finite { lower: a, upper: b },
        };
        out.push(run_case(
            &ConformanceCase {
                id: format!("closed/grid/{i:02}-{ft:?}-{pair:?}-n{n}"),
                spec: CaseSpec::RadialRegular(spec),
                expected: c(0.0, 0.0),
                expected_source: ExpectedSource::Oracle,
                tolerance: 1e-9,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes: format!("[{a},{b}], K={kf}, k={ks}"),
            },
            quad,
        ));
    }

    // equal-argument forms vs quad_finite
    let k1 = c(2.96, 0.0);
    for (i, (ft, pair, n, a, b)) in [
        (FieldType::M, PairKind::Jj, 0, 0.0, 2.0),
        (FieldType::M, PairKind::Jy, 1, 0.0, 2.0),
        (FieldType::M, PairKind::Yy, 2, 0.5, 2.0),
        (FieldType::M, PairKind::Hh, 1, 0.6, 1.9),
        (FieldType::N, PairKind::Jj, 1, 0.5, 2.0),
        (FieldType::N, PairKind::Jy, 2, 0.0, 2.0),
        (FieldType::N, PairKind::Yy, 0, 0.4, 1.7),
        (FieldType::N, PairKind::Hh, 1, 0.6, 1.9),
    ]
    .into_iter()
    .enumerate()
    {
        let spec = RadialIntegralSpec {
            field_type: ft,
            pair,
            n,
            k_first: k1,
            k_second: k1,
            interval: RadialInterval::Finite { lower: a, upper: b },
        };
        let mut notes = format!("equal arguments, [{a},{b}], k={k1}");
        if ft == FieldType::N {
            notes = join_notes(
                &notes,
                "cross term carries the oracle-confirmed +base x derivative sign; one \
                 printed variant of the electric-type form negates it",
            );
        }
        out.push(run_case(
            &ConformanceCase {
                id: format!("closed/equal/{i:02}-{ft:?}-{pair:?}-n{n}"),
                spec: CaseSpec::RadialRegular(spec),
                expected: c(0.0, 0.0),
                expected_source: ExpectedSource::Oracle,
                tolerance: 1e-9,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes,
            },
            quad,
        ));
    }

    // random finite intervals, scaled by the oracle-draw knob
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x726164616c); // "radal"
    for i in 0..cfg.oracle_draws {
        let (kf, ks) = draw_wavenumbers(&mut rng, 1.0);
        let ft = if rng.gen_bool(0.5) { FieldType::M } else { FieldType::N };
        let pair = [PairKind::Jj, PairKind::Jy, PairKind::Yy, PairKind::Hh]
            [rng.gen_range(0..4usize)];
        let n = rng.gen_range(0..5usize);
        let lower = if matches!(pair, PairKind::Jj | PairKind::Jy) && rng.gen_bool(0.3) {
            0.0
        } else {
            rng.gen_range(0.2..1.2)
        };
        let upper = lower + rng.gen_range(0.5..2.5);
        let spec = RadialIntegralSpec {
            field_type: ft,
            pair,
            n,
            k_first: kf,
            k_second: ks,
            interval: RadialInterval::Finite { lower, upper },
        };
        out.push(run_case(
            &ConformanceCase {
                id: format!("closed/random/{i:03}"),
                spec: CaseSpec::RadialRegular(spec),
                expected: c(0.0, 0.0),
                expected_source: ExpectedSource::Oracle,
                tolerance: 1e-9,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes: format!(
                    "{ft:?} {pair:?} n={n} [{lower:.3},{upper:.3}], K={kf}, k={ks}, \
                     seed {:#x}",
                    cfg.seed
                ),
            },
            quad,
        ));
    }

    // semi-infinite jy agrees with the distributional limit op
    let (kf, ks) = (c(1.0, 0.0), c(2.0, 0.0));
    let tail = closed_form::evaluate(&RadialIntegralSpec {
        field_type: FieldType::M,
        pair: PairKind::Jy,
        n: 0,
        k_first: kf,
        k_second: ks,
        interval: RadialInterval::SemiInfinite { lower: 0.0 },
    })
    .map(|r| r.value.regular)
    .unwrap_or(c(f64::NAN, 0.0));
    let lim = sph_gaussian::limit_eta0(SphKind::Jy, 0, kf, ks)
        .map(|v| v.regular)
        .unwrap_or(c(f64::NAN, 0.0));
    out.push(run_case(
        &ConformanceCase {
            id: "closed/tail-jy-limit-consistency".into(),
            spec: CaseSpec::Precomputed { analytic: tail },
            expected: lim,
            expected_source: ExpectedSource::Identity,
            tolerance: 1e-12,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: "whole-axis scalar jy closed form vs the damped-integral limit".into(),
        },
        quad,
    ));

    // printed equal-argument tail value -(n+1)/(2k^3)
    let keq = c(1.0, 0.0);
    let eq_tail = radial_m_equal(PairKind::Jy, 0, keq, RadialInterval::SemiInfinite { lower: 0.0 })
        .map(|r| r.value.regular)
        .unwrap_or(c(f64::NAN, 0.0));
    out.push(run_case(
        &ConformanceCase {
            id: "closed/tail-jy-equal-printed".into(),
            spec: CaseSpec::Precomputed { analytic: eq_tail },
            expected: c(-0.5, 0.0),
            expected_source: ExpectedSource::ReferenceText,
            tolerance: 1e-12,
            relative: true,
            oracle_tolerance: None,
            citation: Some("printed equal-argument tail value -(n+1)/(2k^3) at n=0, k=1".into()),
            notes: String::new(),
        },
        quad,
    ));

    // regularization-convention offset: the Gaussian-killed limit of the
    // equal-argument jy tail exceeds the printed convention by 1/(4k^3),
    // the Cesaro mean of the oscillatory boundary term the printed form drops
    let koff = c(1.3, 0.0);
    let offset = (|| -> Result<Complex64> {
        let i1 = sph_gaussian::int_jy(0, koff, koff, 2e-3)?;
        let i2 = sph_gaussian::int_jy(0, koff, koff, 1e-3)?;
        let gaussian_limit = 2.0 * i2 - i1; // kills the O(eta) term
        let printed = radial_m_equal(
            PairKind::Jy,
            0,
            koff,
            RadialInterval::SemiInfinite { lower: 0.0 },
        )?
        .value
        .regular;
        Ok(gaussian_limit - printed)
    })()
    .unwrap_or(c(f64::NAN, 0.0));
    let expect_off = 1.0 / (4.0 * koff * koff * koff);
    out.push(run_case(
        &ConformanceCase {
            id: "closed/equal-jy-convention-offset".into(),
            spec: CaseSpec::Precomputed { analytic: offset },
            expected: expect_off,
            expected_source: ExpectedSource::Identity,
            tolerance: 1e-4,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: "Richardson-extrapolated Gaussian limit minus the printed-convention \
                    tail at K=k; the two regularizations differ by exactly 1/(4k^3)"
                .into(),
        },
        quad,
    ));

    // frozen high-precision tail anchors for the Hankel products
    for (id, ft, kf, ks, r, re, im) in [
        (
            "closed/tail-hh-electric",
            FieldType::N,
            c(1.0, 0.3),
            c(2.0, 0.5),
            1.0,
            -0.127130467863408765410748837394,
            0.0750450975160291875715859953012,
        ),
        (
            "closed/tail-hh-scalar",
            FieldType::M,
            c(1.2, 0.31),
            c(2.1, 0.45),
            0.7,
            -0.0872961919634662821875107862037,
            -0.119529303887110111317967599537,
        ),
    ] {
        let spec = RadialIntegralSpec {
            field_type: ft,
            pair: PairKind::Hh,
            n: 1,
            k_first: kf,
            k_second: ks,
            interval: RadialInterval::SemiInfinite { lower: r },
        };
        out.push(run_case(
            &ConformanceCase {
                id: id.into(),
                spec: CaseSpec::RadialRegular(spec),
                expected: c(re, im),
                expected_source: ExpectedSource::Identity,
                tolerance: 1e-12,
                relative: true,
                oracle_tolerance: None,
                citation: None,
                notes: "frozen 30-digit evaluation of the tail formula".into(),
            },
            quad,
        ));
    }

    // form equivalence: base-function antiderivative vs Riccati antiderivative
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x666f726d); // "form"
    let draws = cfg.identity_draws.max(1);
    let mut dev: f64 = 0.0;
    for _ in 0..draws {
        let (kf, ks) = draw_wavenumbers(&mut rng, 1.0);
        let n = rng.gen_range(0..7usize);
        let z = rng.gen_range(0.1..5.0);
        let (pair, fc, fd) = match rng.gen_range(0..4usize) {
            0 => (PairKind::Jj, SphFamily::J, SphFamily::J),
            1 => (PairKind::Jy, SphFamily::J, SphFamily::Y),
            2 => (PairKind::Yy, SphFamily::Y, SphFamily::Y),
            _ => (PairKind::Hh, SphFamily::H, SphFamily::H),
        };
        let res = (|| -> Result<f64> {
            let w = watson_antiderivative(fc, fd, n, kf, ks, z)?;
            let spec = |upper: f64| RadialIntegralSpec {
                field_type: FieldType::M,
                pair,
                n,
                k_first: kf,
                k_second: ks,
                interval: RadialInterval::Finite { lower: z, upper },
            };
            // radial_m(z, z') = A(z') - A(z) for the Riccati antiderivative A;
            // recover A(z) from a tail evaluation: [z, inf) regular = -A(z)
            let tail = radial_m(&RadialIntegralSpec {
                interval: RadialInterval::SemiInfinite { lower: z },
                ..spec(z + 1.0)
            })?;
            let a_of_z = -tail.value.regular;
            Ok((w - a_of_z).norm() / a_of_z.norm().max(1e-30))
        })();
        match res {
            Ok(d) => dev = dev.max(d),
            Err(_) => dev = f64::NAN,
        }
    }
    out.push(aggregate(
        "closed/form-equivalence",
        dev,
        1e-11,
        format!(
            "base-function boundary expression equals the Riccati antiderivative \
             pointwise; {draws} draws, n <= 6, z in [0.1,5], seed {:#x}",
            cfg.seed
        ),
    ));

    // Hankel products decompose into Bessel products with delta cancellation
    let mut dev: f64 = 0.0;
    let mut ddev: f64 = 0.0;
    for _ in 0..draws {
        let (kf, ks) = draw_wavenumbers(&mut rng, 1.0);
        let n = rng.gen_range(0..5usize);
        let ft = if rng.gen_bool(0.5) { FieldType::M } else { FieldType::N };
        let r = rng.gen_range(0.3..2.0);
        let spec = |pair, kf, ks| RadialIntegralSpec {
            field_type: ft,
            pair,
            n,
            k_first: kf,
            k_second: ks,
            interval: RadialInterval::SemiInfinite { lower: r },
        };
        let res = (|| -> Result<(f64, f64)> {
            let hh = closed_form::evaluate(&spec(PairKind::Hh, kf, ks))?.value;
            let jj = closed_form::evaluate(&spec(PairKind::Jj, kf, ks))?.value;
            let yy = closed_form::evaluate(&spec(PairKind::Yy, kf, ks))?.value;
            let jy = closed_form::evaluate(&spec(PairKind::Jy, kf, ks))?.value;
            let yj = closed_form::evaluate(&spec(PairKind::Jy, ks, kf))?.value;
            let i = Complex64::new(0.0, 1.0);
            let reg = jj.regular - yy.regular + i * (jy.regular + yj.regular);
            let del = jj.delta_coeff - yy.delta_coeff;
            Ok((
                (hh.regular - reg).norm() / hh.regular.norm().max(1e-30),
                (hh.delta_coeff - del).norm(),
            ))
        })();
        match res {
            Ok((d, dd)) => {
                dev = dev.max(d);
                ddev = ddev.max(dd);
            }
            Err(_) => dev = f64::NAN,
        }
    }
    out.push(aggregate(
        "closed/hankel-composition",
        dev,
        1e-11,
        format!(
            "hh = jj - yy + i(jy + yj) on [R,inf); max regular-part deviation; \
             delta parts cancel to {ddev:.1e}; {draws} draws, seed {:#x}",
            cfg.seed
        ),
    ));

    // delta coefficients attached to the semi-infinite tails
    let mut dev: f64 = 0.0;
    for _ in 0..draws.min(20) {
        let (kf, ks) = draw_wavenumbers(&mut rng, 1.0);
        for (pair, has) in [
            (PairKind::Jj, true),
            (PairKind::Yy, true),
            (PairKind::Jy, false),
            (PairKind::Hh, false),
        ] {
            for ft in [FieldType::M, FieldType::N] {
                let want = if has { PI / (2.0 * kf * ks) } else { Complex64::new(0.0, 0.0) };
                dev = dev.max((delta_coefficient(pair, ft, kf, ks) - want).norm());
                let got = closed_form::evaluate(&RadialIntegralSpec {
                    field_type: ft,
                    pair,
                    n: 1,
                    k_first: kf,
                    k_second: ks,
                    interval: RadialInterval::SemiInfinite { lower: 0.9 },
                });
                if let Ok(r) = got {
                    dev = dev.max((r.value.delta_coeff - want).norm());
                }
            }
        }
    }
    out.push(aggregate(
        "closed/delta-coefficients",
        dev,
        1e-15,
        "pi/(2Kk) for the jj and yy tails of both field types, 0 for jy and hh".into(),
    ));

    out
}

// ------------------------------------------------------------ serialization

fn json_num(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(x)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

fn json_complex(z: Complex64) -> serde_json::Value {
    serde_json::json!({ "re": json_num(z.re), "im": json_num(z.im) })
}

/// JSON array of report objects; complex numbers as {"re": …, "im": …},
/// NaN deviations as null.
pub fn reports_to_json(reports: &[ConformanceReport]) -> String {
    let arr: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "id": r.id,
                "analytic": json_complex(r.analytic),
                "oracle": r.oracle.map(json_complex),
                "expected": json_complex(r.expected),
                "expected_source": r.expected_source.label(),
                "abs_dev": json_num(r.abs_dev),
                "rel_dev": json_num(r.rel_dev),
                "pass": r.pass,
                "notes": r.notes,
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::Value::Array(arr)).expect("report serialization")
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_num(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        format!("{x}")
    }
}

/// RFC-4180-style CSV with a mandatory header row.
pub fn reports_to_csv(reports: &[ConformanceReport]) -> String {
    let mut out = String::from(
        "id,re_analytic,im_analytic,re_expected,im_expected,abs_dev,rel_dev,pass\r\n",
    );
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\r\n",
            csv_field(&r.id),
            csv_num(r.analytic.re),
            csv_num(r.analytic.im),
            csv_num(r.expected.re),
            csv_num(r.expected.im),
            csv_num(r.abs_dev),
            csv_num(r.rel_dev),
            r.pass
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast_cfg() -> ConformanceConfig {
        ConformanceConfig { identity_draws: 6, oracle_draws: 1, ..Default::default() }
    }

    #[test]
    fn table1_all_pass() {
        let reports = run_suite(Suite::Table1, &fast_cfg());
        assert_eq!(reports.len(), 12);
        for r in &reports {
            assert!(r.pass, "{}: analytic {} expected {} dev {:.2e}", r.id, r.analytic, r.expected, r.abs_dev);
        }
    }

    #[test]
    fn killdemo_all_pass() {
        let reports = run_suite(Suite::Killdemo, &fast_cfg());
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert!(r.pass, "{}: {} vs {}", r.id, r.analytic, r.expected);
        }
    }

    #[test]
    fn identities_pass_and_are_deterministic() {
        let cfg = fast_cfg();
        let a = run_suite(Suite::Identities, &cfg);
        let b = run_suite(Suite::Identities, &cfg);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.analytic, y.analytic);
            assert_eq!(x.pass, y.pass);
        }
        for r in &a {
            assert!(r.pass, "{}: dev {:.3e} ({})", r.id, r.abs_dev, r.notes);
        }
    }

    #[test]
    fn limits_pass() {
        for r in run_suite(Suite::Limits, &fast_cfg()) {
            assert!(r.pass, "{}: {} vs {} ({})", r.id, r.analytic, r.expected, r.notes);
        }
    }

    #[test]
    fn closed_form_grid_passes() {
        for r in run_suite(Suite::ClosedFormGrid, &fast_cfg()) {
            assert!(r.pass, "{}: dev {:.3e} ({})", r.id, r.abs_dev, r.notes);
        }
    }

    #[test]
    fn serialization_shapes() {
        let reports = run_suite(Suite::Killdemo, &fast_cfg());
        let json = reports_to_json(&reports);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 3);
        assert!(parsed[0]["analytic"]["re"].is_f64());
        let csv = reports_to_csv(&reports);
        let lines: Vec<&str> = csv.trim_end().split("\r\n").collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("id,re_analytic"));
    }

    #[test]
    fn failing_case_is_reported_not_hidden() {
        let case = ConformanceCase {
            id: "synthetic/wrong-expectation".into(),
            spec: CaseSpec::Precomputed { analytic: Complex64::new(1.0, 0.0) },
            expected: Complex64::new(2.0, 0.0),
            expected_source: ExpectedSource::Identity,
            tolerance: 1e-6,
            relative: true,
            oracle_tolerance: None,
            citation: None,
            notes: String::new(),
        };
        let r = run_case(&case, &QuadratureConfig::default());
        assert!(!r.pass);
        assert!((r.rel_dev - 0.5).abs() < 1e-15);
    }
}

//! Command-line front end: single evaluations, the reference-table and
//! kill-demonstration reproductions, small-width limit scans, closed-form
//! radial integrals, and the verification suites, in human/JSON/CSV form.

use besselkill::closed_form::{
    self, EvalMethod, FieldType, PairKind, RadialIntegralSpec, RadialInterval,
};
use besselkill::conformance::{
    self, reports_to_csv, reports_to_json, ConformanceConfig, Suite,
};
use besselkill::cyl_gaussian::{GaussianIntegralSpec, IntegralKind};
use besselkill::oracle::killed_domain_end;
use besselkill::sph_gaussian::{self, SphKind};
use besselkill::Complex64;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(
    name = "besselkill",
    version,
    about = "Gaussian-damped Bessel product integrals with complex wavenumbers: \
             closed-form evaluation, small-width limits, radial normalization \
             integrals, and quadrature cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one Gaussian-damped product integral
    Eval(EvalArgs),
    /// Reproduce the twelve reference-table values with oracle pairing
    Table1(FormatOnlyArgs),
    /// Integrand samples and damped integrals of the kill demonstration
    Killdemo(KilldemoArgs),
    /// Scan a spherical integral toward its width-zero limit
    LimitScan(LimitScanArgs),
    /// Closed-form radial integral of spherical wave products
    Closed(ClosedArgs),
    /// Run the verification suites and report every case
    Conformance(ConformanceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatOnlyArgs {
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Analytic,
    Quadrature,
    Both,
}

#[derive(Args)]
struct EvalArgs {
    /// spherical: jj|jy|yy|jym (with --n); cylindrical: JJ|JY|YY|JJm|JmJ|JmY|JYm (with --b)
    #[arg(long)]
    kind: String,
    /// Spherical order n >= 0
    #[arg(long)]
    n: Option<usize>,
    /// Cylindrical order b >= 0 (need not be an integer)
    #[arg(long)]
    b: Option<f64>,
    /// Wavenumber of the first factor, e.g. 1.37 or 1.37+0.457i
    #[arg(long = "K", value_parser = parse_complex)]
    k_first: Complex64,
    /// Wavenumber of the second factor
    #[arg(long = "k", value_parser = parse_complex)]
    k_second: Complex64,
    /// Gaussian width parameter, > 0
    #[arg(long)]
    eta: f64,
    #[arg(long, value_enum, default_value = "analytic")]
    method: Method,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct KilldemoArgs {
    /// Gaussian width(s); repeat the flag for several
    #[arg(long = "eta", default_values_t = [0.01, 0.005])]
    etas: Vec<f64>,
    /// Sample points per curve
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct LimitScanArgs {
    /// Spherical kind: jj|jy|yy|jym
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long = "K", value_parser = parse_complex)]
    k_first: Complex64,
    #[arg(long = "k", value_parser = parse_complex)]
    k_second: Complex64,
    /// Largest width of the geometric grid
    #[arg(long, default_value_t = 1.0)]
    eta_start: f64,
    /// Smallest width of the geometric grid
    #[arg(long, default_value_t = 1e-3)]
    eta_end: f64,
    #[arg(long, default_value_t = 10)]
    points: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct ClosedArgs {
    /// Field type: M (x^2 f g weight) or N (n(n+1) f g + F' G' weight)
    #[arg(long = "type")]
    field_type: String,
    /// Product pair: jj|jy|yy|hh
    #[arg(long)]
    pair: String,
    #[arg(long)]
    n: usize,
    #[arg(long = "K", value_parser = parse_complex)]
    k_first: Complex64,
    #[arg(long = "k", value_parser = parse_complex)]
    k_second: Complex64,
    /// Lower endpoint R >= 0
    #[arg(long = "R")]
    lower: f64,
    /// Upper endpoint L > R (finite interval)
    #[arg(long = "L")]
    upper: Option<f64>,
    /// Integrate over [R, inf) instead of a finite interval
    #[arg(long)]
    inf: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table1,
    Killdemo,
    Identities,
    Limits,
    ClosedFormGrid,
    Full,
}

#[derive(Args)]
struct ConformanceArgs {
    #[arg(long, value_enum, default_value = "full")]
    suite: SuiteArg,
    /// Seed for the reproducible random draws
    #[arg(long)]
    seed: Option<u64>,
    /// Draws per identity group
    #[arg(long)]
    identity_draws: Option<usize>,
    /// Oracle-paired draws per integral kind
    #[arg(long)]
    oracle_draws: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

enum RunError {
    Usage(String),
    Lib(besselkill::Error),
}

impl From<besselkill::Error> for RunError {
    fn from(e: besselkill::Error) -> Self {
        RunError::Lib(e)
    }
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Lib(e) => e.exit_code(),
        }
    }
    fn message(&self) -> String {
        match self {
            RunError::Usage(m) => m.clone(),
            RunError::Lib(e) => e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

fn main() {
    // die quietly when a downstream pipe closes, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table1(args) => cmd_table1(args),
        Command::Killdemo(args) => cmd_killdemo(args),
        Command::LimitScan(args) => cmd_limit_scan(args),
        Command::Closed(args) => cmd_closed(args),
        Command::Conformance(args) => cmd_conformance(args),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}

// -------------------------------------------------------------- primitives

/// Complex flag literal: "a", "bi", "a+bi", "a-bi"; scientific notation in
/// both parts; whitespace ignored; no parentheses.
fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("bad complex literal {s:?}; expected forms like 1.37, 0.457i, 2.96+1.749i, 1e-2-3e-1i");
    if t.is_empty() {
        return Err(bad());
    }
    let z = if let Some(body) = t.strip_suffix('i') {
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                split = Some(i);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            re_str.parse::<f64>().map_err(|_| bad())?
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => im_str.parse::<f64>().map_err(|_| bad())?,
        };
        Complex64::new(re, im)
    } else {
        Complex64::new(t.parse::<f64>().map_err(|_| bad())?, 0.0)
    };
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("complex literal {s:?} must be finite"));
    }
    Ok(z)
}

/// Shortest plain-decimal or scientific form with the given significant
/// digits (the human format uses 10).
fn fmt_sig(x: f64, sig: i32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if mag >= -4 && mag < sig {
        format!("{:.*}", (sig - 1 - mag).max(0) as usize, x)
    } else {
        format!("{:.*e}", (sig - 1) as usize, x)
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_sig(z.re, 10)
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_sig(z.re, 10), fmt_sig(-z.im, 10))
    } else {
        format!("{}+{}i", fmt_sig(z.re, 10), fmt_sig(z.im, 10))
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone, Copy)]
struct Cx {
    re: f64,
    im: f64,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx { re: z.re, im: z.im }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable record"));
}

fn default_quad() -> besselkill::oracle::QuadratureConfig {
    ConformanceConfig::default().quad
}

// -------------------------------------------------------------------- eval

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct EvalRecord {
    command: String,
    kind: String,
    order: f64,
    k_first: Cx,
    k_second: Cx,
    eta: f64,
    analytic: Option<Cx>,
    quadrature: Option<Cx>,
    abs_dev: Option<f64>,
    rel_dev: Option<f64>,
}

const SPH_KINDS: [(&str, SphKind); 4] = [
    ("jj", SphKind::Jj),
    ("jy", SphKind::Jy),
    ("yy", SphKind::Yy),
    ("jym", SphKind::Jym),
];

const CYL_KINDS: [(&str, IntegralKind); 7] = [
    ("JJ", IntegralKind::JJ),
    ("JY", IntegralKind::JY),
    ("YY", IntegralKind::YY),
    ("JJm", IntegralKind::JJm),
    ("JmJ", IntegralKind::JmJ),
    ("JmY", IntegralKind::JmY),
    ("JYm", IntegralKind::JYm),
];

fn sph_kind(name: &str) -> Option<SphKind> {
    SPH_KINDS.iter().find(|(s, _)| *s == name).map(|(_, k)| *k)
}

fn cyl_kind(name: &str) -> Option<IntegralKind> {
    CYL_KINDS.iter().find(|(s, _)| *s == name).map(|(_, k)| *k)
}

fn cmd_eval(args: EvalArgs) -> Result<(), RunError> {
    let quad = default_quad();
    let (order, analytic, quadrature): (f64, _, _) = if let Some(kind) = sph_kind(&args.kind) {
        let n = args.n.ok_or_else(|| {
            usage(format!("spherical kind {} takes --n (integer order)", args.kind))
        })?;
        if args.b.is_some() {
            return Err(usage(format!(
                "spherical kind {} takes --n, not --b",
                args.kind
            )));
        }
        let analytic = match args.method {
            Method::Quadrature => None,
            _ => Some(sph_gaussian::evaluate(kind, n, args.k_first, args.k_second, args.eta)?),
        };
        let quadrature = match args.method {
            Method::Analytic => None,
            _ => Some(conformance::spherical_oracle(
                kind,
                n,
                args.k_first,
                args.k_second,
                args.eta,
                &quad,
            )?),
        };
        (n as f64, analytic, quadrature)
    } else if let Some(kind) = cyl_kind(&args.kind) {
        let b = args.b.ok_or_else(|| {
            usage(format!("cylindrical kind {} takes --b (real order)", args.kind))
        })?;
        if args.n.is_some() {
            return Err(usage(format!(
                "cylindrical kind {} takes --b, not --n",
                args.kind
            )));
        }
        let spec = GaussianIntegralSpec::new(kind, b, args.k_first, args.k_second, args.eta)?;
        let analytic = match args.method {
            Method::Quadrature => None,
            _ => Some(spec.evaluate()?),
        };
        let quadrature = match args.method {
            Method::Analytic => None,
            _ => Some(conformance::cylindrical_oracle(&spec, &quad)?),
        };
        (b, analytic, quadrature)
    } else {
        return Err(usage(format!(
            "unknown kind {:?}; spherical kinds are jj, jy, yy, jym and cylindrical kinds \
             are JJ, JY, YY, JJm, JmJ, JmY, JYm (case-sensitive)",
            args.kind
        )));
    };

    let (abs_dev, rel_dev) = match (analytic, quadrature) {
        (Some(a), Some(q)) => {
            let abs = (a - q).norm();
            let rel = if q.norm() > 0.0 { Some(abs / q.norm()) } else { None };
            (Some(abs), rel)
        }
        _ => (None, None),
    };

    let record = EvalRecord {
        command: "eval".into(),
        kind: args.kind.clone(),
        order,
        k_first: args.k_first.into(),
        k_second: args.k_second.into(),
        eta: args.eta,
        analytic: analytic.map(Cx::from),
        quadrature: quadrature.map(Cx::from),
        abs_dev,
        rel_dev,
    };

    match args.format {
        Format::Human => {
            if let Some(a) = analytic {
                println!("analytic   = {}", fmt_complex(a));
            }
            if let Some(q) = quadrature {
                println!("quadrature = {}", fmt_complex(q));
            }
            if let Some(abs) = abs_dev {
                match rel_dev {
                    Some(rel) => println!("deviation  = {abs:.3e} abs, {rel:.3e} rel"),
                    None => println!("deviation  = {abs:.3e} abs"),
                }
            }
        }
        Format::Json => print_json(&record),
        Format::Csv => {
            let mut out = String::from("method,re,im,abs_dev,rel_dev\r\n");
            if let Some(a) = analytic {
                out.push_str(&format!("analytic,{},{},,\r\n", a.re, a.im));
            }
            if let Some(q) = quadrature {
                out.push_str(&format!(
                    "quadrature,{},{},{},{}\r\n",
                    q.re,
                    q.im,
                    abs_dev.map(|d| d.to_string()).unwrap_or_default(),
                    rel_dev.map(|d| d.to_string()).unwrap_or_default()
                ));
            }
            print!("{out}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------------ table1

fn cmd_table1(args: FormatOnlyArgs) -> Result<(), RunError> {
    let reports = conformance::run_suite(Suite::Table1, &ConformanceConfig::default());
    print_reports(&reports, args.format, "table1");
    Ok(())
}

fn print_reports(reports: &[conformance::ConformanceReport], format: Format, label: &str) {
    match format {
        Format::Human => {
            let failed = reports.iter().filter(|r| !r.pass).count();
            for r in reports {
                println!(
                    "{} {:<40} analytic {:<28} expected {:<28} dev {:.2e}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.id,
                    fmt_complex(r.analytic),
                    fmt_complex(r.expected),
                    r.abs_dev
                );
            }
            println!("{label}: {}/{} pass", reports.len() - failed, reports.len());
        }
        Format::Json => println!("{}", reports_to_json(reports)),
        Format::Csv => print!("{}", reports_to_csv(reports)),
    }
}

// ---------------------------------------------------------------- killdemo

const KILLDEMO_N: usize = 1;
const KILLDEMO_KJ: Complex64 = Complex64::new(1.37, 0.0);
const KILLDEMO_KY: Complex64 = Complex64::new(2.96, 0.457);

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct KilldemoSample {
    x: f64,
    undamped_abs: f64,
    damped_abs: f64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct KilldemoCurve {
    eta: f64,
    x_max: f64,
    samples: Vec<KilldemoSample>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct KilldemoIntegral {
    eta: f64,
    value: Cx,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct KilldemoRecord {
    command: String,
    kind: String,
    n: usize,
    k_first: Cx,
    k_second: Cx,
    curves: Vec<KilldemoCurve>,
    integrals: Vec<KilldemoIntegral>,
    limit: Cx,
}

fn cmd_killdemo(args: KilldemoArgs) -> Result<(), RunError> {
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    if args.etas.is_empty() {
        return Err(usage("at least one --eta is required"));
    }
    for &eta in &args.etas {
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(usage(format!("--eta must be positive and finite, got {eta}")));
        }
    }
    let quad = default_quad();
    let undamped = conformance::spherical_integrand(
        SphKind::Jy,
        KILLDEMO_N,
        KILLDEMO_KJ,
        KILLDEMO_KY,
        0.0,
    );
    let mut curves = Vec::new();
    let mut integrals = Vec::new();
    for &eta in &args.etas {
        let x_max = killed_domain_end(eta, KILLDEMO_KJ, KILLDEMO_KY, &quad)?;
        let damped =
            conformance::spherical_integrand(SphKind::Jy, KILLDEMO_N, KILLDEMO_KJ, KILLDEMO_KY, eta);
        let samples: Vec<KilldemoSample> = (0..args.samples)
            .map(|i| {
                let x = x_max * i as f64 / (args.samples - 1) as f64;
                KilldemoSample {
                    x,
                    undamped_abs: undamped(x).norm(),
                    damped_abs: damped(x).norm(),
                }
            })
            .collect();
        let value = conformance::spherical_oracle(
            SphKind::Jy,
            KILLDEMO_N,
            KILLDEMO_KJ,
            KILLDEMO_KY,
            eta,
            &quad,
        )?;
        curves.push(KilldemoCurve { eta, x_max, samples });
        integrals.push(KilldemoIntegral { eta, value: value.into() });
    }
    let limit =
        sph_gaussian::limit_eta0(SphKind::Jy, KILLDEMO_N, KILLDEMO_KJ, KILLDEMO_KY)?.regular;

    let record = KilldemoRecord {
        command: "killdemo".into(),
        kind: "jy".into(),
        n: KILLDEMO_N,
        k_first: KILLDEMO_KJ.into(),
        k_second: KILLDEMO_KY.into(),
        curves,
        integrals,
        limit: limit.into(),
    };

    match args.format {
        Format::Human => {
            for curve in &record.curves {
                println!("eta = {}  (x_max = {:.3})", curve.eta, curve.x_max);
                println!("{:>12} {:>14} {:>14}", "x", "|undamped|", "|damped|");
                for s in &curve.samples {
                    println!("{:>12.5} {:>14.6e} {:>14.6e}", s.x, s.undamped_abs, s.damped_abs);
                }
                let peak = curve.samples.iter().map(|s| s.damped_abs).fold(0.0, f64::max);
                let last = curve.samples.last().map(|s| s.damped_abs).unwrap_or(0.0);
                println!("damped peak {:.3e}, final sample {:.3e}", peak, last);
                println!();
            }
            for integral in &record.integrals {
                println!(
                    "integral(eta = {}) = {}",
                    integral.eta,
                    fmt_complex(Complex64::new(integral.value.re, integral.value.im))
                );
            }
            println!("limit (eta -> 0)   = {}", fmt_complex(limit));
        }
        Format::Json => print_json(&record),
        Format::Csv => {
            let mut out = String::from("record,eta,x,abs_undamped,abs_damped,re,im\r\n");
            for curve in &record.curves {
                for s in &curve.samples {
                    out.push_str(&format!(
                        "sample,{},{},{},{},,\r\n",
                        curve.eta, s.x, s.undamped_abs, s.damped_abs
                    ));
                }
            }
            for integral in &record.integrals {
                out.push_str(&format!(
                    "integral,{},,,,{},{}\r\n",
                    integral.eta, integral.value.re, integral.value.im
                ));
            }
            out.push_str(&format!("limit,,,,,{},{}\r\n", record.limit.re, record.limit.im));
            print!("{out}");
        }
    }
    Ok(())
}

// -------------------------------------------------------------- limit-scan

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct LimitScanRow {
    eta: f64,
    value: Cx,
    distance: f64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct LimitScanRecord {
    command: String,
    kind: String,
    n: usize,
    k_first: Cx,
    k_second: Cx,
    rows: Vec<LimitScanRow>,
    limit_regular: Cx,
    limit_delta_coeff: Cx,
    fitted_order: Option<f64>,
}

fn cmd_limit_scan(args: LimitScanArgs) -> Result<(), RunError> {
    let kind = sph_kind(&args.kind)
        .ok_or_else(|| usage(format!("limit-scan takes a spherical kind (jj|jy|yy|jym), got {:?}", args.kind)))?;
    if !(args.eta_start > args.eta_end && args.eta_end > 0.0) {
        return Err(usage(format!(
            "need eta_start > eta_end > 0, got {} and {}",
            args.eta_start, args.eta_end
        )));
    }
    if args.points < 2 {
        return Err(usage("--points must be at least 2"));
    }
    let limit = sph_gaussian::limit_eta0(kind, args.n, args.k_first, args.k_second)?;
    let ratio = args.eta_end / args.eta_start;
    let mut rows = Vec::with_capacity(args.points);
    for i in 0..args.points {
        let eta = args.eta_start * ratio.powf(i as f64 / (args.points - 1) as f64);
        let value = sph_gaussian::evaluate(kind, args.n, args.k_first, args.k_second, eta)?;
        rows.push(LimitScanRow {
            eta,
            value: value.into(),
            distance: (value - limit.regular).norm(),
        });
    }
    let fitted_order = fit_order(&rows);

    let record = LimitScanRecord {
        command: "limit-scan".into(),
        kind: args.kind.clone(),
        n: args.n,
        k_first: args.k_first.into(),
        k_second: args.k_second.into(),
        rows,
        limit_regular: limit.regular.into(),
        limit_delta_coeff: limit.delta_coeff.into(),
        fitted_order,
    };

    match args.format {
        Format::Human => {
            println!("{:>12} {:>28} {:>14}", "eta", "value", "distance");
            for row in &record.rows {
                println!(
                    "{:>12.6e} {:>28} {:>14.6e}",
                    row.eta,
                    fmt_complex(Complex64::new(row.value.re, row.value.im)),
                    row.distance
                );
            }
            println!("limit (regular part) = {}", fmt_complex(limit.regular));
            if limit.delta_coeff.norm() > 0.0 {
                println!("delta(K-k) coefficient = {}", fmt_complex(limit.delta_coeff));
            }
            match record.fitted_order {
                Some(p) => println!("fitted convergence order = {p:.4}"),
                None => println!("fitted convergence order undefined (distances vanish)"),
            }
        }
        Format::Json => print_json(&record),
        Format::Csv => {
            let mut out = String::from("record,eta,re,im,distance,order\r\n");
            for row in &record.rows {
                out.push_str(&format!(
                    "point,{},{},{},{},\r\n",
                    row.eta, row.value.re, row.value.im, row.distance
                ));
            }
            out.push_str(&format!(
                "limit,,{},{},,\r\n",
                record.limit_regular.re, record.limit_regular.im
            ));
            out.push_str(&format!(
                "delta_coeff,,{},{},,\r\n",
                record.limit_delta_coeff.re, record.limit_delta_coeff.im
            ));
            out.push_str(&format!(
                "fit,,,,,{}\r\n",
                record.fitted_order.map(|p| p.to_string()).unwrap_or_default()
            ));
            print!("{out}");
        }
    }
    Ok(())
}

/// Least-squares slope of log distance against log eta, over the rows whose
/// distance is positive; None when fewer than two rows qualify.
fn fit_order(rows: &[LimitScanRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.distance > 0.0 && r.distance.is_finite())
        .map(|r| (r.eta.ln(), r.distance.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

// ------------------------------------------------------------------ closed

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct ClosedRecord {
    command: String,
    field_type: String,
    pair: String,
    n: usize,
    k_first: Cx,
    k_second: Cx,
    lower: f64,
    upper: Option<f64>,
    regular: Cx,
    delta_coeff: Cx,
    method: String,
    err_estimate: f64,
}

fn cmd_closed(args: ClosedArgs) -> Result<(), RunError> {
    let field_type = match args.field_type.as_str() {
        "M" => FieldType::M,
        "N" => FieldType::N,
        other => return Err(usage(format!("--type must be M or N, got {other:?}"))),
    };
    let pair = match args.pair.as_str() {
        "jj" => PairKind::Jj,
        "jy" => PairKind::Jy,
        "yy" => PairKind::Yy,
        "hh" => PairKind::Hh,
        other => return Err(usage(format!("--pair must be jj, jy, yy, or hh, got {other:?}"))),
    };
    let interval = match (args.upper, args.inf) {
        (Some(upper), false) => RadialInterval::Finite { lower: args.lower, upper },
        (None, true) => RadialInterval::SemiInfinite { lower: args.lower },
        (Some(_), true) => return Err(usage("--L and --inf are mutually exclusive")),
        (None, false) => return Err(usage("one of --L <upper> or --inf is required")),
    };
    let spec = RadialIntegralSpec {
        field_type,
        pair,
        n: args.n,
        k_first: args.k_first,
        k_second: args.k_second,
        interval,
    };
    let result = closed_form::evaluate(&spec)?;
    let method = match result.method {
        EvalMethod::ClosedForm => "closed-form",
        EvalMethod::EqualArgLimit => "equal-argument-limit",
        EvalMethod::Quadrature => "quadrature",
    };

    let record = ClosedRecord {
        command: "closed".into(),
        field_type: args.field_type.clone(),
        pair: args.pair.clone(),
        n: args.n,
        k_first: args.k_first.into(),
        k_second: args.k_second.into(),
        lower: args.lower,
        upper: args.upper,
        regular: result.value.regular.into(),
        delta_coeff: result.value.delta_coeff.into(),
        method: method.into(),
        err_estimate: result.err_estimate,
    };

    match args.format {
        Format::Human => {
            println!("regular      = {}", fmt_complex(result.value.regular));
            println!("delta(K-k)   = {}", fmt_complex(result.value.delta_coeff));
            println!("method       = {method}");
            println!("err_estimate = {:.3e}", result.err_estimate);
        }
        Format::Json => print_json(&record),
        Format::Csv => {
            let mut out = String::from(
                "field_type,pair,n,lower,upper,regular_re,regular_im,delta_re,delta_im,method,err_estimate\r\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\r\n",
                csv_escape(&record.field_type),
                csv_escape(&record.pair),
                record.n,
                record.lower,
                record.upper.map(|u| u.to_string()).unwrap_or_default(),
                record.regular.re,
                record.regular.im,
                record.delta_coeff.re,
                record.delta_coeff.im,
                record.method,
                record.err_estimate
            ));
            print!("{out}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------- conformance

fn cmd_conformance(args: ConformanceArgs) -> Result<(), RunError> {
    let mut cfg = ConformanceConfig::default();
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(d) = args.identity_draws {
        cfg.identity_draws = d;
    }
    if let Some(d) = args.oracle_draws {
        cfg.oracle_draws = d;
    }
    let suite = match args.suite {
        SuiteArg::Table1 => Suite::Table1,
        SuiteArg::Killdemo => Suite::Killdemo,
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Limits => Suite::Limits,
        SuiteArg::ClosedFormGrid => Suite::ClosedFormGrid,
        SuiteArg::Full => Suite::Full,
    };
    let reports = conformance::run_suite(suite, &cfg);
    if matches!(args.format, Format::Human) {
        println!(
            "suite {}, seed {:#x}, {} identity draws, {} oracle draws per kind",
            args.suite.label(),
            cfg.seed,
            cfg.identity_draws,
            cfg.oracle_draws
        );
    } else {
        eprintln!(
            "suite {}, seed {:#x}, {} identity draws, {} oracle draws per kind",
            args.suite.label(),
            cfg.seed,
            cfg.identity_draws,
            cfg.oracle_draws
        );
    }
    print_reports(&reports, args.format, "conformance");
    Ok(())
}

impl SuiteArg {
    fn label(self) -> &'static str {
        match self {
            SuiteArg::Table1 => "table1",
            SuiteArg::Killdemo => "killdemo",
            SuiteArg::Identities => "identities",
            SuiteArg::Limits => "limits",
            SuiteArg::ClosedFormGrid => "closed-form-grid",
            SuiteArg::Full => "full",
        }
    }
}

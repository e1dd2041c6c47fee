//! Auxiliary series behind the analytic Gaussian-killed integrals: the
//! central power series S(b, x), the incomplete function h_{-1,b}, its
//! terminating integer-order counterpart, and the series-acceleration
//! helpers built on a Gaussian integral representation.

use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::special_fn::{cos_pi, gamma_real, log_gamma, sin_pi};
use num_complex::Complex64;

/// Dispatch radius: below, the series is summed directly in double-double;
/// above, the large-argument expansion has converged to well under 1e-12.
const S_DIRECT_RADIUS: f64 = 40.0;

/// Direct summation keeps at least this many decimal digits or reports
/// AccuracyLoss. Double-double carries about 31.5; cancellation eats
/// log10(max partial / result).
const S_MIN_DIGITS: f64 = 8.0;

/// Largest argument direction (degrees from the positive real axis of -x)
/// for which the large-argument expansion of S is certified.
const S_ASYMP_MAX_ARG_DEG: f64 = 75.0;

/// S(b, x) = sum_l x^l Gamma(l+1/2) / (Gamma(l-b+1) Gamma(l+b+1)).
/// Even in b. Rejects integer b, whose evaluations all have terminating
/// forms of their own.
pub fn series_s(b: f64, x: Complex64) -> Result<Complex64> {
    let b = b.abs();
    if b.round() == b {
        return Err(Error::Order(format!(
            "series_s at integer order {b} is shadowed by the terminating route"
        )));
    }
    if x.norm() <= S_DIRECT_RADIUS {
        series_s_direct(b, x)
    } else {
        series_s_asymptotic(b, x)
    }
}

fn series_s_direct(b: f64, x: Complex64) -> Result<Complex64> {
    let t0 = std::f64::consts::PI.sqrt() / (gamma_real(1.0 - b)? * gamma_real(1.0 + b)?);
    let xd = CDd::from_c64(x);
    let mut term = CDd::from_c64(Complex64::new(t0, 0.0));
    let mut sum = term;
    let mut max_partial = sum.mag();
    for l in 0..400 {
        // ratio (l+1/2) / ((l+1-b)(l+1+b)); the shifted denominators are
        // formed exactly so the factor noise cannot ride the cancellation
        let num = Dd::from(l as f64 + 0.5);
        let den = Dd::sum2((l + 1) as f64, -b).mul(Dd::sum2((l + 1) as f64, b));
        term = term.mul(xd).mul_dd(num.mul(den.recip()));
        sum = sum.add(term);
        max_partial = max_partial.max(sum.mag());
        if l > 4 && term.mag() < 1e-34 * sum.mag() {
            break;
        }
    }
    let digits_left = 31.5 - (max_partial / sum.mag()).log10();
    if digits_left < S_MIN_DIGITS {
        return Err(Error::AccuracyLoss(format!(
            "series_s cancellation leaves {digits_left:.1} digits at b={b}, x={x}"
        )));
    }
    Ok(sum.to_c64())
}

/// Large-argument form, x = -z: dominant algebraic series, an exponentially
/// shaped correction, and a recessive term that switches on off the real axis.
fn series_s_asymptotic(b: f64, x: Complex64) -> Result<Complex64> {
    let z = -x;
    if z.re <= 0.0 || (z.im / z.re).atan().abs() > S_ASYMP_MAX_ARG_DEG.to_radians() {
        return Err(Error::Path(format!(
            "large-argument expansion of series_s is certified only for \
             |arg(-x)| <= {S_ASYMP_MAX_ARG_DEG} deg, got x = {x}"
        )));
    }
    let sinb = sin_pi(b);
    let zinv = 1.0 / z;

    // A = (sin^2(pi b)/pi) sum_{j>=1} Gamma(j+b) Gamma(j-b) / Gamma(j+1/2) z^{-j},
    // with sin(pi b) Gamma(j-b) = (-1)^{j+1} pi / Gamma(1+b-j) where j < b+1/2
    // so that integer-b zeros are carried as exact factors of sin(pi b)
    let mut a_sum = Complex64::new(0.0, 0.0);
    let mut zpow = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for j in 1..2000usize {
        zpow *= zinv;
        let jf = j as f64;
        let coeff = if jf < b + 0.5 {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            sinb * sign * (log_gamma(jf + b)? - log_gamma(jf + 0.5)?).exp()
                / gamma_real(1.0 + b - jf)?
        } else {
            sinb * sinb / std::f64::consts::PI
                * (log_gamma(jf + b)? + log_gamma(jf - b)? - log_gamma(jf + 0.5)?).exp()
        };
        let t = coeff * zpow;
        if t.norm() > prev {
            break;
        }
        prev = t.norm();
        a_sum += t;
        if t.norm() < 1e-24 * a_sum.norm().max(1e-30) {
            break;
        }
    }

    // E = cos(pi b) sum_m (-1)^m [prod_{t=0}^{2m-1}(b+1/2-m+t)] / m! z^{-1/2-m}
    let cosb = cos_pi(b);
    let mut e_sum = Complex64::new(0.0, 0.0);
    if cosb != 0.0 {
        let mut zp = 1.0 / z.sqrt();
        let mut prev = f64::INFINITY;
        let mut mfact = 1.0;
        for m in 0..200usize {
            if m > 0 {
                mfact *= m as f64;
            }
            let mut p = 1.0;
            for t in 0..2 * m {
                p *= b + 0.5 - m as f64 + t as f64;
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let t = cosb * sign * p / mfact * zp;
            if t.norm() > prev {
                break;
            }
            prev = t.norm();
            e_sum += t;
            zp *= zinv;
            if t.norm() < 1e-24 * e_sum.norm().max(1e-30) {
                break;
            }
        }
    }

    // recessive piece: exactly zero on the real axis, i sgn(Im z) e^{-z}/sqrt(z) off it
    let mut total = a_sum + e_sum;
    if z.im != 0.0 {
        let sgn = if z.im > 0.0 { 1.0 } else { -1.0 };
        total += Complex64::new(0.0, sgn) * (-z).exp() / z.sqrt();
    }
    Ok(total)
}

/// h_{-1,b}(z) = -e^{-z} sqrt(pi) / (b sin(pi b)) S(b, 2z), non-integer b.
pub fn h_minus1(b: f64, z: Complex64) -> Result<Complex64> {
    if b.round() == b {
        return Err(Error::Order(format!(
            "h_minus1 has a removable-singularity form at integer order {b}; \
             use h_minus1_int"
        )));
    }
    if -z.re > 700.0 {
        return Err(Error::Overflow(format!(
            "e^(-z) overflows at Re z = {}",
            z.re
        )));
    }
    let s = series_s(b, 2.0 * z)?;
    Ok(-(-z).exp() * std::f64::consts::PI.sqrt() / (b * sin_pi(b)) * s)
}

/// H_{-1,n}(-1/(2a)): the integer-order counterpart of h_minus1. Terminating
/// for n >= 1; for n = 0 the series is asymptotic and the conventional
/// five-term truncation is used.
pub fn h_minus1_int(n: usize, a: Complex64) -> Result<Complex64> {
    if a.norm() == 0.0 {
        return Err(Error::Domain("h_minus1_int requires a != 0".into()));
    }
    let half_inv = 0.5 / a;
    if half_inv.re > 709.0 {
        return Err(Error::Overflow(format!(
            "e^(1/(2a)) overflows at Re(1/(2a)) = {}",
            half_inv.re
        )));
    }
    let two_a = 2.0 * a;
    let mut term = Complex64::new(1.0, 0.0);
    let mut s = term;
    if n == 0 {
        for m in 1..=4usize {
            term *= two_a * (m * m) as f64 / (2 * m + 1) as f64;
            s += term;
        }
    } else {
        for m in 1..n {
            term *= two_a * ((m * m) as f64 - (n * n) as f64) / (2 * m + 1) as f64;
            s += term;
        }
    }
    Ok(-two_a * half_inv.exp() * s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// sum over k of x^k / (k! sqrt(k + alpha)) restricted to even or odd k,
/// evaluated through (2/sqrt(pi)) int_0^inf cosh|sinh(x e^{-t^2}) e^{-alpha t^2} dt.
pub fn accel_sum(parity: Parity, x: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("accel_sum needs alpha > 0, got {alpha}")));
    }
    if x.abs() > 690.0 {
        return Err(Error::Overflow(format!("cosh({x}) overflows")));
    }
    let t_max = (46.0 / alpha).sqrt();
    let cfg = crate::oracle::QuadratureConfig {
        rel_tol: 1e-13,
        abs_tol: 1e-300,
        ..Default::default()
    };
    let r = crate::oracle::quad_finite(
        |t| {
            let u = x * (-t * t).exp();
            let g = (-alpha * t * t).exp();
            let v = match parity {
                Parity::Even => u.cosh(),
                Parity::Odd => u.sinh(),
            };
            Complex64::new(v * g, 0.0)
        },
        0.0,
        t_max,
        &cfg,
    )?;
    Ok(2.0 / std::f64::consts::PI.sqrt() * r.value.re)
}

/// Acceleration weight that balances the two halves of the split series.
pub fn alpha_opt(b: f64) -> f64 {
    2.0 * b * b + 0.25
}

/// Magnitude estimate of the first neglected correction when the split
/// series is truncated; meaningful for x > alpha > 0.
pub fn diff_estimate(x: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && x > alpha) {
        return Err(Error::Domain(format!(
            "diff_estimate is defined for x > alpha > 0, got x={x}, alpha={alpha}"
        )));
    }
    let lg = (x / alpha).ln();
    Ok(2.0 * (-alpha * (1.0 + lg)).exp() / (2.0 * alpha * lg).sqrt())
}

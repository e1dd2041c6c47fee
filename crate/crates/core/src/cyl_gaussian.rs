//! Gaussian-damped integrals of cylindrical Bessel-function products:
//! closed evaluations of int_0^inf x e^{-eta x^2} C_b(Kx) D_b(kx) dx where
//! C, D range over J, Y and the order may appear negated on either factor.
//!
//! Every assembly is folded: exponentials are grouped so that for real
//! positive wavenumbers no intermediate factor exceeds e^{-(K-k)^2/4eta},
//! which keeps small eta representable long after the textbook grouping
//! e^{-(K^2+k^2)/4eta} x e^{+Kk/2eta} has overflowed.

use crate::assoc_bessel::series_s;
use crate::error::{Error, Result};
use crate::oracle::{quad_finite, QuadratureConfig};
use crate::special_fn::{bessel_i_scaled_nu, bessel_k_scaled_nu, cos_pi, sin_pi};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Orders closer to an integer than this are routed to the integer-order
/// evaluation; beyond it sin(pi b) in the general assembly is too small.
pub const INTEGER_ORDER_TOL: f64 = 1e-9;

/// Largest real part allowed in any folded exponent before refusing.
const EXP_GUARD: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralKind {
    /// J_b(Kx) J_b(kx)
    JJ,
    /// J_b(Kx) Y_b(kx)
    JY,
    /// Y_b(Kx) Y_b(kx)
    YY,
    /// J_b(Kx) J_{-b}(kx)
    JJm,
    /// J_{-b}(Kx) J_b(kx)
    JmJ,
    /// J_{-b}(Kx) Y_b(kx)
    JmY,
    /// J_b(Kx) Y_{-b}(kx)
    JYm,
}

impl IntegralKind {
    /// Orders (first factor, second factor) as multiples of +-b.
    pub fn signed_orders(self, b: f64) -> (f64, f64) {
        match self {
            IntegralKind::JJ | IntegralKind::JY | IntegralKind::YY => (b, b),
            IntegralKind::JJm | IntegralKind::JYm => (b, -b),
            IntegralKind::JmJ | IntegralKind::JmY => (-b, b),
        }
    }

    /// Bessel families (first factor, second factor): false = J, true = Y.
    pub fn families(self) -> (bool, bool) {
        match self {
            IntegralKind::JJ | IntegralKind::JJm | IntegralKind::JmJ => (false, false),
            IntegralKind::JY | IntegralKind::JmY | IntegralKind::JYm => (false, true),
            IntegralKind::YY => (true, true),
        }
    }
}

/// One Gaussian-damped cylindrical product integral.
#[derive(Debug, Clone, Copy)]
pub struct GaussianIntegralSpec {
    pub kind: IntegralKind,
    /// Order b >= 0; negated factors are expressed through the kind.
    pub order: f64,
    /// Wavenumber of the first Bessel factor.
    pub k_first: Complex64,
    /// Wavenumber of the second Bessel factor.
    pub k_second: Complex64,
    /// Gaussian width parameter, > 0.
    pub eta: f64,
}

impl GaussianIntegralSpec {
    pub fn new(
        kind: IntegralKind,
        order: f64,
        k_first: Complex64,
        k_second: Complex64,
        eta: f64,
    ) -> Result<Self> {
        let spec = GaussianIntegralSpec { kind, order, k_first, k_second, eta };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) || !self.eta.is_finite() {
            return Err(Error::Domain(format!(
                "Gaussian width must be positive and finite, got {}",
                self.eta
            )));
        }
        if !(self.order >= 0.0) || !self.order.is_finite() {
            return Err(Error::Domain(format!(
                "order must be a finite non-negative real, got {}",
                self.order
            )));
        }
        if self.k_first.norm() == 0.0 || self.k_second.norm() == 0.0 {
            return Err(Error::Domain("wavenumbers must be nonzero".into()));
        }
        if (self.k_first + self.k_second).norm() == 0.0 {
            return Err(Error::Domain(
                "opposite wavenumbers K + k = 0 are excluded".into(),
            ));
        }
        // both factors carry x^{-b} at the origin, so the weight x^{1-2b}
        // stops being integrable at b = 1
        if matches!(self.kind, IntegralKind::YY | IntegralKind::JmY) && self.order >= 1.0 {
            return Err(Error::Divergent(format!(
                "{:?} diverges at the origin for order {} >= 1",
                self.kind, self.order
            )));
        }
        Ok(())
    }

    pub fn evaluate(&self) -> Result<Complex64> {
        evaluate(self)
    }
}

fn h_quad_config() -> QuadratureConfig {
    QuadratureConfig {
        rel_tol: 1e-12,
        abs_tol: 1e-280,
        max_intervals: 2000,
        ..QuadratureConfig::default()
    }
}

/// Shared core of the finite-range integral int_1^{K/k} u^{b-1} e^{g(u)} du
/// on the straight segment, with the exponent g supplied by the caller.
fn h_segment_quad(
    b: f64,
    ratio: Complex64,
    exponent: impl Fn(Complex64) -> Complex64,
) -> Result<Complex64> {
    if ratio.im == 0.0 && ratio.re <= 0.0 {
        return Err(Error::Path(
            "integration segment [1, K/k] meets the branch point at 0".into(),
        ));
    }
    let d = ratio - 1.0;
    if d.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    // the exponent is analytic on the segment; scanning it finely bounds its
    // real part well enough to refuse before exp() overflows mid-quadrature
    let mut max_re = f64::NEG_INFINITY;
    for i in 0..=64 {
        let u = 1.0 + d * (i as f64 / 64.0);
        max_re = max_re.max(exponent(u).re);
    }
    if max_re > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "exponent reaches Re {max_re:.1} on the integration segment"
        )));
    }
    let f = |t: f64| {
        let u = 1.0 + d * t;
        d * u.powf(b - 1.0) * exponent(u).exp()
    };
    let r = quad_finite(f, 0.0, 1.0, &h_quad_config())?;
    Ok(r.value)
}

/// Finite-range integral H(b,K,k,eta) = int_1^{K/k} u^{b-1} e^{(Kk/4eta)(u+1/u)} du
/// along the straight segment from 1 to K/k, principal branch of u^{b-1}.
/// Overflows for small eta; use h_integral_damped there.
pub fn h_integral(b: f64, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    check_h_params(b, k_first, k_second, eta)?;
    let scale = k_first * k_second / (4.0 * eta);
    h_segment_quad(b, k_first / k_second, |u| scale * (u + 1.0 / u))
}

/// E H(b,K,k,eta) with E = e^{-(K^2+k^2)/4eta}, the exponential folded into
/// the integrand so its argument is <= 0 along the whole real-parameter path.
pub(crate) fn damped_h_integral(
    b: f64,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    let quarter = 1.0 / (4.0 * eta);
    let kk = k_first * k_second;
    let k2 = k_first * k_first + k_second * k_second;
    h_segment_quad(b, k_first / k_second, |u| (kk * (u + 1.0 / u) - k2) * quarter)
}

/// -e^{-(K^2+k^2)/4eta} H(b,K,k,eta) / (2 pi eta): the damped form of the
/// finite-range integral, finite for arbitrarily small eta.
pub fn h_integral_damped(
    b: f64,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    check_h_params(b, k_first, k_second, eta)?;
    Ok(-damped_h_integral(b, k_first, k_second, eta)? / (2.0 * PI * eta))
}

/// Two-term small-eta expansion of h_integral_damped:
/// 2 (K/k)^b / (pi (k^2-K^2)) + 8 eta (b k^2 - b K^2 + k^2 + K^2) (K/k)^b / (pi (k^2-K^2)^3).
pub fn h_integral_small_eta(
    b: f64,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    if !(eta >= 0.0) {
        return Err(Error::Domain(format!(
            "Gaussian width must be non-negative, got {eta}"
        )));
    }
    if k_first.norm() == 0.0 || k_second.norm() == 0.0 {
        return Err(Error::Domain("wavenumbers must be nonzero".into()));
    }
    let diff = k_second * k_second - k_first * k_first;
    let scale = k_first.norm_sqr().max(k_second.norm_sqr());
    if diff.norm() <= 1e-8 * scale {
        return Err(Error::Degenerate(format!(
            "expansion breaks down for K^2 ~ k^2 (|K^2-k^2| = {:.3e})",
            diff.norm()
        )));
    }
    let pow = (k_first / k_second).powf(b);
    let lead = 2.0 * pow / (PI * diff);
    let k2 = k_second * k_second;
    let kf2 = k_first * k_first;
    let next = 8.0 * eta * (b * k2 - b * kf2 + k2 + kf2) * pow / (PI * diff * diff * diff);
    Ok(lead + next)
}

fn check_h_params(b: f64, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<()> {
    if !b.is_finite() {
        return Err(Error::Domain(format!("order must be finite, got {b}")));
    }
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(Error::Domain(format!(
            "Gaussian width must be positive and finite, got {eta}"
        )));
    }
    if k_first.norm() == 0.0 || k_second.norm() == 0.0 {
        return Err(Error::Domain("wavenumbers must be nonzero".into()));
    }
    Ok(())
}

/// E I_nu(Kk/2eta), folded as e^{-(K-k)^2/4eta - i Im(Kk)/2eta ...}: the full
/// complex exponent is -(K^2+k^2)/4eta + Re(Kk)/2eta, whose real part equals
/// -Re[(K-k)^2]/4eta.
pub(crate) fn damped_i(
    nu: f64,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    let w = k_first * k_second / (2.0 * eta);
    let c = -(k_first * k_first + k_second * k_second) / (4.0 * eta) + w.re;
    if c.re > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "folded Bessel-I exponent has Re {:.1}",
            c.re
        )));
    }
    Ok(c.exp() * bessel_i_scaled_nu(nu, w)?)
}

/// E K_n(Kk/2eta) folded through the scaled K: exponent -(K+k)^2/4eta.
fn damped_k(n: f64, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    let w = k_first * k_second / (2.0 * eta);
    let sum = k_first + k_second;
    let c = -sum * sum / (4.0 * eta);
    if c.re > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "folded Bessel-K exponent has Re {:.1}",
            c.re
        )));
    }
    Ok(c.exp() * bessel_k_scaled_nu(n, w)?)
}

/// E b h_{-1,b}(-Kk/2eta) through the production identity
/// E b h_{-1,b}(-Kk/2eta) = -e^{-(K-k)^2/4eta} sqrt(pi) S(b, -Kk/eta) / sin(pi b),
/// which both folds the exponentials and reuses the order-symmetric sum S.
pub(crate) fn damped_bh(
    b: f64,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    let diff = k_first - k_second;
    let c = -diff * diff / (4.0 * eta);
    if c.re > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "folded exponent has Re {:.1}",
            c.re
        )));
    }
    let s = series_s(b, -k_first * k_second / eta)?;
    Ok(-c.exp() * PI.sqrt() * s / sin_pi(b))
}

/// E n H_{-1,n}(-Kk/2eta) for integer n >= 1: the series terminates, leaving
/// a polynomial in a = eta/(Kk) times e^{-(K-k)^2/4eta}.
fn damped_n_h_int(n: usize, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    if n == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let a = eta / (k_first * k_second);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for m in 1..n {
        term *= 2.0 * a * ((m * m) as f64 - (n * n) as f64) / (2.0 * m as f64 + 1.0);
        sum += term;
    }
    let diff = k_first - k_second;
    let c = -diff * diff / (4.0 * eta);
    if c.re > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "folded exponent has Re {:.1}",
            c.re
        )));
    }
    Ok(-(2.0 * a) * c.exp() * sum * n as f64)
}

/// Evaluates the integral described by `spec` in closed form.
pub fn evaluate(spec: &GaussianIntegralSpec) -> Result<Complex64> {
    spec.validate()?;
    let b = spec.order;
    let (kf, ks, eta) = (spec.k_first, spec.k_second, spec.eta);
    let integer = (b - b.round()).abs() < INTEGER_ORDER_TOL;
    match spec.kind {
        IntegralKind::JJ => int_jj(b, kf, ks, eta),
        IntegralKind::JY => {
            if integer {
                int_jy_integer(b.round() as usize, kf, ks, eta)
            } else {
                int_jy(b, kf, ks, eta)
            }
        }
        _ if integer => Err(Error::Order(format!(
            "kind {:?} has no closed evaluation at integer order b = {b}",
            spec.kind
        ))),
        IntegralKind::YY => int_yy(b, kf, ks, eta),
        IntegralKind::JJm => int_jjm(b, kf, ks, eta),
        IntegralKind::JmJ => int_jmj(b, kf, ks, eta),
        IntegralKind::JmY => int_jmy(b, kf, ks, eta),
        IntegralKind::JYm => int_jym(b, kf, ks, eta),
    }
}

fn int_jj(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    Ok(damped_i(b, kf, ks, eta)? / (2.0 * eta))
}

fn int_jy(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let cot = cos_pi(b) / sin_pi(b);
    let h = damped_h_integral(b, kf, ks, eta)?;
    let ib = damped_i(b, kf, ks, eta)?;
    let bh = damped_bh(b, kf, ks, eta)?;
    Ok(-(h - (PI * cot * ib + bh)) / (2.0 * PI * eta))
}

/// Order -b variant of int_jy, needed by the mixed expansions below.
fn int_jy_neg(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let cot = cos_pi(b) / sin_pi(b);
    let h = damped_h_integral(b, ks, kf, eta)?;
    let im = damped_i(-b, kf, ks, eta)?;
    let bh = damped_bh(b, kf, ks, eta)?;
    Ok(-(-h + PI * cot * im + bh) / (2.0 * PI * eta))
}

fn int_jy_integer(n: usize, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let h = damped_h_integral(n as f64, kf, ks, eta)?;
    let nh = damped_n_h_int(n, kf, ks, eta)?;
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    let kn = damped_k(n as f64, kf, ks, eta)?;
    Ok((-h + nh + sign * kn) / (2.0 * PI * eta))
}

fn int_yy_oriented(b: f64, kf: Complex64, ks: Complex64, eta: f64, swap_i: bool) -> Result<Complex64> {
    let sin = sin_pi(b);
    let cot = cos_pi(b) / sin;
    let mut ib = damped_i(b, kf, ks, eta)?;
    let mut im = damped_i(-b, kf, ks, eta)?;
    if swap_i {
        std::mem::swap(&mut ib, &mut im);
    }
    let h1 = damped_h_integral(b, kf, ks, eta)?;
    let h2 = damped_h_integral(b, ks, kf, eta)?;
    let bh = damped_bh(b, kf, ks, eta)?;
    Ok((cot * cot * ib + im / (sin * sin) - (cot / PI) * (h1 + h2 - 2.0 * bh)) / (2.0 * eta))
}

fn int_yy(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    int_yy_oriented(b, kf, ks, eta, false)
}

fn int_jjm(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let h = damped_h_integral(b, kf, ks, eta)?;
    let bh = damped_bh(b, kf, ks, eta)?;
    Ok(sin_pi(b) / (2.0 * PI * eta) * (h - bh))
}

fn int_jmj(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let h = damped_h_integral(b, ks, kf, eta)?;
    let bh = damped_bh(b, kf, ks, eta)?;
    Ok(sin_pi(b) / (2.0 * PI * eta) * (h - bh))
}

fn int_jmy(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    Ok(cos_pi(b) * int_jy(b, kf, ks, eta)? - sin_pi(b) * int_yy(b, kf, ks, eta)?)
}

fn int_jym(b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Result<Complex64> {
    let jy_neg = int_jy_neg(b, kf, ks, eta)?;
    let yy_neg = int_yy_oriented(b, kf, ks, eta, true)?;
    Ok(cos_pi(b) * jy_neg + sin_pi(b) * yy_neg)
}

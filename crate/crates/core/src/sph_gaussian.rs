//! Gaussian-damped integrals of spherical Bessel-function products,
//! int_0^inf x^2 e^{-eta x^2} f_n(Kx) g_n(kx) dx, reduced to the cylindrical
//! machinery through f_n(z) = sqrt(pi/2z) F_{n+1/2}(z), plus their eta -> 0
//! distributional limits.

use crate::cyl_gaussian::{damped_bh, damped_h_integral, damped_i};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphKind {
    /// j_n(Kx) j_n(kx)
    Jj,
    /// j_n(Kx) y_n(kx)
    Jy,
    /// y_n(Kx) y_n(kx), finite only for n = 0
    Yy,
    /// j_n(Kx) y_{-n-1}(kx)
    Jym,
}

/// A value that may carry a delta-distribution part: the eta -> 0 limit of a
/// damped integral is `regular + delta_coeff * delta(K - k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionalValue {
    pub regular: Complex64,
    pub delta_coeff: Complex64,
}

fn validate(k_first: Complex64, k_second: Complex64, eta: f64) -> Result<()> {
    if !(eta > 0.0) || !eta.is_finite() {
        return Err(Error::Domain(format!(
            "Gaussian width must be positive and finite, got {eta}"
        )));
    }
    if k_first.norm() == 0.0 || k_second.norm() == 0.0 {
        return Err(Error::Domain("wavenumbers must be nonzero".into()));
    }
    if (k_first + k_second).norm() == 0.0 {
        return Err(Error::Domain(
            "opposite wavenumbers K + k = 0 are excluded".into(),
        ));
    }
    Ok(())
}

/// pi / (2 sqrt(Kk)), the factor mapping half-integer cylindrical integrals
/// with weight x to spherical ones with weight x^2.
fn sph_prefactor(k_first: Complex64, k_second: Complex64) -> Complex64 {
    PI / (2.0 * (k_first * k_second).sqrt())
}

pub fn int_jj(n: usize, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    validate(k_first, k_second, eta)?;
    let b = n as f64 + 0.5;
    Ok(sph_prefactor(k_first, k_second) * damped_i(b, k_first, k_second, eta)? / (2.0 * eta))
}

pub fn int_jy(n: usize, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    validate(k_first, k_second, eta)?;
    let b = n as f64 + 0.5;
    let h = damped_h_integral(b, k_first, k_second, eta)?;
    let bh = damped_bh(b, k_first, k_second, eta)?;
    Ok(sph_prefactor(k_first, k_second) * (-h + bh) / (2.0 * PI * eta))
}

pub fn int_yy(n: usize, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    validate(k_first, k_second, eta)?;
    if n >= 1 {
        return Err(Error::Divergent(format!(
            "y_{n} y_{n} integral diverges non-integrably at the origin"
        )));
    }
    Ok(sph_prefactor(k_first, k_second) * damped_i(-0.5, k_first, k_second, eta)? / (2.0 * eta))
}

pub fn int_jym(n: usize, k_first: Complex64, k_second: Complex64, eta: f64) -> Result<Complex64> {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * int_jj(n, k_first, k_second, eta)?)
}

pub fn evaluate(
    kind: SphKind,
    n: usize,
    k_first: Complex64,
    k_second: Complex64,
    eta: f64,
) -> Result<Complex64> {
    match kind {
        SphKind::Jj => int_jj(n, k_first, k_second, eta),
        SphKind::Jy => int_jy(n, k_first, k_second, eta),
        SphKind::Yy => int_yy(n, k_first, k_second, eta),
        SphKind::Jym => int_jym(n, k_first, k_second, eta),
    }
}

/// Closed-form eta -> 0 limit. jj and jym concentrate entirely on a delta
/// distribution; jy converges pointwise to K^n / (k^{n+1} (k^2 - K^2)).
pub fn limit_eta0(
    kind: SphKind,
    n: usize,
    k_first: Complex64,
    k_second: Complex64,
) -> Result<DistributionalValue> {
    if k_first.norm() == 0.0 || k_second.norm() == 0.0 {
        return Err(Error::Domain("wavenumbers must be nonzero".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let delta = PI / (2.0 * k_first * k_second);
    match kind {
        SphKind::Jj => Ok(DistributionalValue { regular: zero, delta_coeff: delta }),
        SphKind::Jym => {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            Ok(DistributionalValue { regular: zero, delta_coeff: sign * delta })
        }
        SphKind::Yy => {
            if n >= 1 {
                return Err(Error::Divergent(
                    "y_n y_n diverges for n >= 1 at every eta".into(),
                ));
            }
            Ok(DistributionalValue { regular: zero, delta_coeff: delta })
        }
        SphKind::Jy => {
            if k_first == k_second {
                return Err(Error::Degenerate(
                    "jy limit has no finite value at K = k".into(),
                ));
            }
            let num = k_first.powu(n as u32);
            let den = k_second.powu(n as u32 + 1)
                * (k_second * k_second - k_first * k_first);
            Ok(DistributionalValue { regular: num / den, delta_coeff: zero })
        }
    }
}

//! Gaussian-regularized Bessel product integrals with complex wavenumbers.
//!
//! The library evaluates, in closed analytic form, integrals of the shape
//! `int_0^inf x e^{-eta x^2} J_b(Kx) Y_b(kx) dx` (cylindrical, all sign and
//! order-negation variants) and `int_0^inf x^2 e^{-eta x^2} j_n(Kx) y_n(kx) dx`
//! (spherical), together with the closed-form radial integrals over
//! `[0,R]`, `[R,L]`, `[R,inf)` needed to normalize resonant scattering states.
//! Every analytic path is paired with an adaptive Gauss-Kronrod quadrature
//! oracle that integrates the same integrand numerically; the [`conformance`]
//! module packages those pairings into machine-readable reports.
//!
//! Wavenumbers may be complex (leaky-mode resonances); the Gaussian factor
//! `e^{-eta x^2}` is what makes the defining integrals converge, and the
//! `eta -> 0` limits recover the distributional (delta-function) results.

pub mod assoc_bessel;
pub mod closed_form;
pub mod conformance;
pub mod cyl_gaussian;
mod dd;
pub mod error;
pub mod oracle;
pub mod special_fn;
pub mod sph_gaussian;

pub use error::{Error, Result};
pub use num_complex::Complex64;

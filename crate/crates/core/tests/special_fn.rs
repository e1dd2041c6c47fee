mod common;

use besselkill::special_fn::{
    log_gamma, mod_bessel_i, mod_bessel_i_scaled, mod_bessel_k, riccati, sph_bessel_j,
    sph_bessel_y, sph_hankel, RiccatiFamily,
};
use besselkill::Complex64;
use common::{c, close};

fn cc(v: (f64, f64)) -> Complex64 {
    c(v.0, v.1)
}

#[test]
fn log_gamma_frozen_values() {
    assert!((log_gamma(21.0).unwrap() - common::LGAMMA21.0).abs() < 1e-13 * common::LGAMMA21.0);
    assert!((log_gamma(0.5).unwrap() - common::LGAMMA_05.0).abs() < 1e-14);
    assert!(log_gamma(0.0).is_err());
    assert!(log_gamma(-3.0).is_err());
}

#[test]
fn spherical_bessel_frozen_values() {
    let cases: [(usize, Complex64, (f64, f64)); 4] = [
        (2, c(1.37, 0.0), common::SPHJ2_137),
        (5, c(0.3, 0.0), common::SPHJ5_03),
        (12, c(2.9, 0.0), common::SPHJ12_29),
        (0, c(2.2, 1.1), common::SPHJ0_C),
    ];
    for (n, z, want) in cases {
        let v = sph_bessel_j(n, z);
        assert!(close(v, cc(want), 1e-13), "j_{n}({z}) = {v}, want {want:?}");
    }
    let v = sph_bessel_y(3, c(2.2, 1.1)).unwrap();
    assert!(close(v, cc(common::SPHY3_C), 1e-13), "{v}");
    let v = sph_bessel_y(1, c(2.96, 0.0)).unwrap();
    assert!(close(v, cc(common::SPHY1_296), 1e-13), "{v}");
    let v = sph_hankel(2, c(1.5, 0.5)).unwrap();
    assert!(close(v, cc(common::SPHH2_C), 1e-13), "{v}");
}

#[test]
fn spherical_hankel_is_j_plus_iy() {
    for (n, z) in [(0usize, c(1.1, 0.2)), (3, c(4.0, -1.0)), (6, c(9.0, 0.4))] {
        let h = sph_hankel(n, z).unwrap();
        let j = sph_bessel_j(n, z);
        let y = sph_bessel_y(n, z).unwrap();
        assert!(close(h, j + Complex64::i() * y, 1e-12), "n={n} z={z}");
    }
}

#[test]
fn riccati_frozen_values() {
    let z = c(1.2, 0.4);
    let t = riccati(RiccatiFamily::Psi, 3, z).unwrap();
    assert!(close(t.value, cc(common::PSI3_C), 1e-13), "{}", t.value);
    assert!(close(t.derivative, cc(common::PSI3D_C), 1e-13), "{}", t.derivative);
    let t = riccati(RiccatiFamily::Chi, 2, c(0.8, 0.0)).unwrap();
    assert!(close(t.value, cc(common::CHI2_08), 1e-13), "{}", t.value);
    assert!(close(t.derivative, cc(common::CHI2D_08), 1e-13), "{}", t.derivative);
}

#[test]
fn riccati_cross_product_is_unity() {
    // psi chi' - psi' chi = 1 for every order and argument
    for n in [0usize, 1, 4, 10] {
        for z in [c(0.1, 0.0), c(3.3, 0.0), c(2.0, 1.5), c(40.0, 3.0)] {
            let p = riccati(RiccatiFamily::Psi, n, z).unwrap();
            let q = riccati(RiccatiFamily::Chi, n, z).unwrap();
            let w = p.value * q.derivative - p.derivative * q.value;
            assert!(close(w, c(1.0, 0.0), 1e-10), "n={n} z={z}: {w}");
        }
    }
}

#[test]
fn spherical_recurrence_closure() {
    for n in [1usize, 3, 7] {
        for z in [c(0.7, 0.0), c(5.0, 2.0), c(22.0, 0.1)] {
            let jm = sph_bessel_j(n - 1, z);
            let j0 = sph_bessel_j(n, z);
            let jp = sph_bessel_j(n + 1, z);
            let lhs = jm + jp;
            let rhs = (2 * n + 1) as f64 / z * j0;
            assert!(close(lhs, rhs, 1e-11), "n={n} z={z}");
        }
    }
}

#[test]
fn conjugation_symmetry() {
    for z in [c(1.5, 0.8), c(6.0, -2.0)] {
        let a = sph_bessel_j(4, z.conj());
        let b = sph_bessel_j(4, z).conj();
        assert!(close(a, b, 1e-14), "z={z}");
        let a = mod_bessel_i(1.5, z.conj()).unwrap();
        let b = mod_bessel_i(1.5, z).unwrap().conj();
        assert!(close(a, b, 1e-13), "z={z}");
    }
}

#[test]
fn modified_bessel_frozen_values() {
    let v = mod_bessel_i(2.0, c(9.0, 7.0)).unwrap();
    assert!(close(v, cc(common::I2_9P7I), 1e-12), "{v}");
    let v = mod_bessel_k(2.0, c(3.7, 0.0)).unwrap();
    assert!(close(v, cc(common::K2_37), 1e-12), "{v}");
    let v = mod_bessel_i(2.5, c(1.37 * 2.96 / (2.0 * 3.58), 0.0)).unwrap();
    assert!(close(v, cc(common::I52_SMALLARG), 1e-13), "{v}");
}

#[test]
fn scaled_i_matches_unscaled() {
    for z in [c(3.0, 1.0), c(60.0, 10.0)] {
        let s = mod_bessel_i_scaled(1.5, z).unwrap();
        let u = mod_bessel_i(1.5, z).unwrap();
        assert!(close(s * z.re.exp(), u, 1e-12), "z={z}");
    }
    // scaled form stays finite where the plain one refuses
    assert!(mod_bessel_i(0.5, c(800.0, 0.0)).is_err());
    let s = mod_bessel_i_scaled(0.5, c(800.0, 0.0)).unwrap();
    assert!(s.norm() > 0.0 && s.norm() < 1.0);
}

#[test]
fn order_validation() {
    assert!(mod_bessel_i(0.3, c(1.0, 0.0)).is_err());
    assert!(mod_bessel_k(1.25, c(1.0, 0.0)).is_err());
    assert!(sph_bessel_y(2, c(0.0, 0.0)).is_err());
}

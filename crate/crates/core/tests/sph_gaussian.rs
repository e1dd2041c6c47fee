mod common;

use besselkill::sph_gaussian::{int_jj, int_jy, int_yy, limit_eta0, SphKind};
use besselkill::Complex64;
use common::{c, close};

fn cc(v: (f64, f64)) -> Complex64 {
    c(v.0, v.1)
}

const K_CX: (f64, f64) = (1.37, 0.457);
const SM_CX: (f64, f64) = (2.96, 1.749);

#[test]
fn reference_table_real_rows() {
    let (kf, ks, eta) = (c(1.37, 0.0), c(2.96, 0.0), 3.58);
    let v = int_jj(2, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_JJ2_REAL), 1e-10), "{v}");
    let v = int_jj(3, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_JJ3_REAL), 1e-10), "{v}");
    let v = int_yy(0, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_YY0_REAL), 1e-10), "{v}");
    for (n, want) in [
        (0, common::TABLE1_JY0_REAL),
        (1, common::TABLE1_JY1_REAL),
        (3, common::TABLE1_JY3_REAL),
    ] {
        let v = int_jy(n, kf, ks, eta).unwrap();
        assert!(close(v, cc(want), 1e-10), "jy n={n}: {v}");
    }
}

#[test]
fn reference_table_complex_rows() {
    let (kf, ks, eta) = (cc(K_CX), cc(SM_CX), 3.58);
    let v = int_jj(2, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_JJ2_CX), 1e-10), "{v}");
    let v = int_jj(3, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_JJ3_CX), 1e-10), "{v}");
    let v = int_yy(0, kf, ks, eta).unwrap();
    assert!(close(v, cc(common::TABLE1_YY0_CX), 1e-10), "{v}");
    for (n, want) in [
        (0, common::TABLE1_JY0_CX),
        (1, common::TABLE1_JY1_CX),
        (3, common::TABLE1_JY3_CX),
    ] {
        let v = int_jy(n, kf, ks, eta).unwrap();
        assert!(close(v, cc(want), 1e-10), "jy n={n}: {v}");
    }
}

#[test]
fn soft_kill_demo_values() {
    // n = 1, j-argument 1.37, y-argument 2.96+0.457i
    let (kf, ks) = (c(1.37, 0.0), c(2.96, 0.457));
    let v = int_jy(1, kf, ks, 0.01).unwrap();
    assert!(close(v, cc(common::KILLDEMO_ETA001), 1e-9), "{v}");
    let v = int_jy(1, kf, ks, 0.005).unwrap();
    assert!(close(v, cc(common::KILLDEMO_ETA0005), 1e-9), "{v}");
    let lim = limit_eta0(SphKind::Jy, 1, kf, ks).unwrap();
    assert!(close(lim.regular, cc(common::KILLDEMO_LIMIT), 1e-12), "{}", lim.regular);
}

#[test]
fn frozen_spot_checks() {
    let v = int_jy(2, c(2.2, 0.0), c(0.9, 0.0), 1.1).unwrap();
    assert!(close(v, cc(common::SPH_JY2_229), 1e-10), "{v}");
    let v = int_jy(0, c(1.3, 0.0), c(1.3, 0.0), 0.05).unwrap();
    assert!(close(v, cc(common::SPH_JY0_EQUAL), 1e-10), "{v}");
    let v = int_jy(0, c(1.0, 0.0), c(2.0, 0.0), 0.001).unwrap();
    assert!(close(v, cc(common::SPH_JY0_ETA0001), 1e-10), "{v}");
}

mod common;

use besselkill::cyl_gaussian::{evaluate, GaussianIntegralSpec, IntegralKind};
use besselkill::Complex64;
use common::{c, close};

fn cc(v: (f64, f64)) -> Complex64 {
    c(v.0, v.1)
}

fn eval(kind: IntegralKind, b: f64, kf: Complex64, ks: Complex64, eta: f64) -> Complex64 {
    evaluate(&GaussianIntegralSpec::new(kind, b, kf, ks, eta).unwrap()).unwrap()
}

#[test]
fn real_parameter_assemblies() {
    let b = 1.0 / 3.0;
    let (kf, ks, eta) = (c(1.37, 0.0), c(2.96, 0.0), 3.58);
    let cases = [
        (IntegralKind::JJ, common::CYLA_JJ),
        (IntegralKind::JY, common::CYLA_JY),
        (IntegralKind::YY, common::CYLA_YY),
        (IntegralKind::JJm, common::CYLA_JJM),
        (IntegralKind::JmJ, common::CYLA_JMJ),
        (IntegralKind::JmY, common::CYLA_JMY),
        (IntegralKind::JYm, common::CYLA_JYM),
    ];
    for (kind, want) in cases {
        let v = eval(kind, b, kf, ks, eta);
        assert!(close(v, cc(want), 1e-10), "{kind:?}: {v}, want {want:?}");
    }
}

#[test]
fn complex_parameter_assemblies() {
    let b = 0.6;
    let (kf, ks, eta) = (c(1.2, 0.31), c(2.1, 0.45), 1.1);
    let cases = [
        (IntegralKind::JJ, common::CYLB_JJ),
        (IntegralKind::JY, common::CYLB_JY),
        (IntegralKind::YY, common::CYLB_YY),
        (IntegralKind::JJm, common::CYLB_JJM),
        (IntegralKind::JmJ, common::CYLB_JMJ),
        (IntegralKind::JmY, common::CYLB_JMY),
        (IntegralKind::JYm, common::CYLB_JYM),
    ];
    for (kind, want) in cases {
        let v = eval(kind, b, kf, ks, eta);
        assert!(close(v, cc(want), 1e-10), "{kind:?}: {v}, want {want:?}");
    }
}

#[test]
fn integer_order_jy_route() {
    let (kf, ks, eta) = (c(1.0, 0.0), c(2.0, 0.0), 0.2);
    let cases = [
        (0.0, common::IJY_INT0_122),
        (1.0, common::IJY_INT1_122),
        (2.0, common::IJY_INT2_122),
        (3.0, common::IJY_INT3_122),
    ];
    for (n, want) in cases {
        let v = eval(IntegralKind::JY, n, kf, ks, eta);
        assert!(close(v, cc(want), 1e-10), "n={n}: {v}, want {want:?}");
    }
}

#[test]
fn near_integer_order_matches_integer_route() {
    let (kf, ks, eta) = (c(1.0, 0.0), c(2.0, 0.0), 0.2);
    for n in [0.0f64, 1.0, 2.0, 3.0] {
        let integer = eval(IntegralKind::JY, n, kf, ks, eta);
        let near = eval(IntegralKind::JY, n + 1e-6, kf, ks, eta);
        assert!(
            close(near, integer, 1e-4),
            "n={n}: {near} vs {integer}"
        );
    }
}

#[test]
fn half_order_yy_matches_table_value() {
    // pi/(2 sqrt(Kk)) I_YY(1/2, ...) is the n=0 spherical yy integral
    let v = eval(IntegralKind::YY, 0.5, c(1.37, 0.0), c(2.96, 0.0), 3.58);
    let scaled = std::f64::consts::PI / (2.0 * (1.37f64 * 2.96).sqrt()) * v;
    assert!(
        close(scaled, cc(common::TABLE1_YY0_REAL), 1e-9),
        "{scaled}"
    );
}

#[test]
fn mixed_kind_difference_identity() {
    // JJm and JmJ share every term except the H ordering, so their difference
    // is sin(pi b) E [H(b,K,k) - H(b,k,K)] / (2 pi eta), expressible through
    // the public damped H (hd = -E H / (2 pi eta))
    use besselkill::cyl_gaussian::h_integral_damped;
    let b = 0.4;
    let (kf, ks, eta) = (c(1.3, 0.2), c(2.2, -0.1), 0.8);
    let jjm = eval(IntegralKind::JJm, b, kf, ks, eta);
    let jmj = eval(IntegralKind::JmJ, b, kf, ks, eta);
    let hd1 = h_integral_damped(b, kf, ks, eta).unwrap();
    let hd2 = h_integral_damped(b, ks, kf, eta).unwrap();
    let want = -(b * std::f64::consts::PI).sin() * (hd1 - hd2);
    assert!(close(jjm - jmj, want, 1e-10), "{} vs {want}", jjm - jmj);
}

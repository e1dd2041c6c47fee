mod common;

use besselkill::closed_form::{
    evaluate, radial_m, radial_m_equal, radial_n, radial_n_equal, watson_antiderivative,
    EvalMethod, FieldType, PairKind, RadialIntegralSpec, RadialInterval, SphFamily,
};
use besselkill::oracle::{quad_finite, QuadratureConfig};
use besselkill::special_fn::{riccati, sph_bessel_j, sph_bessel_y, sph_hankel, RiccatiFamily};
use besselkill::sph_gaussian;
use besselkill::Complex64;
use common::{c, close};

fn fin(lower: f64, upper: f64) -> RadialInterval {
    RadialInterval::Finite { lower, upper }
}

fn tail(lower: f64) -> RadialInterval {
    RadialInterval::SemiInfinite { lower }
}

fn spec(
    field_type: FieldType,
    pair: PairKind,
    n: usize,
    k_first: Complex64,
    k_second: Complex64,
    interval: RadialInterval,
) -> RadialIntegralSpec {
    RadialIntegralSpec { field_type, pair, n, k_first, k_second, interval }
}

fn base(family: SphFamily, n: usize, z: Complex64) -> Complex64 {
    match family {
        SphFamily::J => sph_bessel_j(n, z),
        SphFamily::Y => sph_bessel_y(n, z).unwrap(),
        SphFamily::H => sph_hankel(n, z).unwrap(),
    }
}

fn ric_deriv(family: SphFamily, n: usize, z: Complex64) -> Complex64 {
    let fam = match family {
        SphFamily::J => RiccatiFamily::Psi,
        SphFamily::Y => RiccatiFamily::Chi,
        SphFamily::H => RiccatiFamily::Xi,
    };
    riccati(fam, n, z).unwrap().derivative
}

fn pair_families(pair: PairKind) -> (SphFamily, SphFamily) {
    match pair {
        PairKind::Jj => (SphFamily::J, SphFamily::J),
        PairKind::Yy => (SphFamily::Y, SphFamily::Y),
        PairKind::Jy => (SphFamily::J, SphFamily::Y),
        PairKind::Hh => (SphFamily::H, SphFamily::H),
    }
}

/// The integrand each closed form claims to integrate, for oracle checks.
fn integrand(
    field_type: FieldType,
    pair: PairKind,
    n: usize,
    kf: Complex64,
    ks: Complex64,
) -> impl Fn(f64) -> Complex64 {
    let (fc, fd) = pair_families(pair);
    move |x: f64| {
        let f = base(fc, n, kf * x);
        let g = base(fd, n, ks * x);
        match field_type {
            FieldType::M => x * x * f * g,
            FieldType::N => {
                let fd1 = ric_deriv(fc, n, kf * x);
                let gd1 = ric_deriv(fd, n, ks * x);
                ((n * (n + 1)) as f64 * f * g + fd1 * gd1) / (kf * ks)
            }
        }
    }
}

#[test]
fn frozen_finite_interval_values() {
    let r = radial_m(&spec(FieldType::M, PairKind::Jj, 2, c(1.37, 0.0), c(2.96, 0.0), fin(0.5, 2.0)))
        .unwrap();
    assert!(close(r.value.regular, c(common::MJJ_2_FIN.0, common::MJJ_2_FIN.1), 1e-12));
    assert_eq!(r.value.delta_coeff, c(0.0, 0.0));
    assert_eq!(r.method, EvalMethod::ClosedForm);

    let r = radial_n_equal(PairKind::Jj, 1, c(2.96, 0.0), fin(0.5, 2.0)).unwrap();
    assert!(close(r.value.regular, c(common::NJJ_EQUAL_FIN.0, common::NJJ_EQUAL_FIN.1), 1e-12));
    assert_eq!(r.method, EvalMethod::EqualArgLimit);
}

#[test]
fn frozen_semi_infinite_values() {
    let r = radial_n(&spec(
        FieldType::N,
        PairKind::Hh,
        1,
        c(1.0, 0.3),
        c(2.0, 0.5),
        tail(1.0),
    ))
    .unwrap();
    assert!(close(r.value.regular, c(common::NHH_1_INF.0, common::NHH_1_INF.1), 1e-12));
    assert_eq!(r.value.delta_coeff, c(0.0, 0.0));

    let r = radial_m(&spec(
        FieldType::M,
        PairKind::Hh,
        1,
        c(1.2, 0.31),
        c(2.1, 0.45),
        tail(0.7),
    ))
    .unwrap();
    assert!(close(r.value.regular, c(common::MHH_1_INF.0, common::MHH_1_INF.1), 1e-12));
    assert_eq!(r.value.delta_coeff, c(0.0, 0.0));
}

#[test]
fn finite_intervals_match_quadrature() {
    let cfg = QuadratureConfig::default();
    let cases = [
        (FieldType::M, PairKind::Jj, 0, c(1.37, 0.0), c(2.96, 0.0), 0.0, 2.0),
        (FieldType::M, PairKind::Jy, 1, c(1.37, 0.0), c(2.96, 0.457), 0.0, 2.0),
        (FieldType::M, PairKind::Yy, 2, c(1.1, 0.2), c(2.3, -0.1), 0.4, 2.5),
        (FieldType::M, PairKind::Hh, 1, c(1.2, 0.31), c(2.1, 0.45), 0.7, 3.0),
        (FieldType::N, PairKind::Jj, 1, c(1.37, 0.0), c(2.96, 0.0), 0.0, 2.0),
        (FieldType::N, PairKind::Jy, 0, c(0.9, 0.1), c(2.2, 0.3), 0.0, 1.8),
        (FieldType::N, PairKind::Jy, 2, c(0.9, 0.1), c(2.2, 0.3), 0.0, 1.8),
        (FieldType::N, PairKind::Yy, 1, c(1.4, 0.0), c(2.6, 0.2), 0.3, 2.2),
        (FieldType::N, PairKind::Hh, 3, c(1.0, 0.3), c(2.0, 0.5), 0.9, 2.4),
    ];
    for (ft, pair, n, kf, ks, a, b) in cases {
        let analytic = evaluate(&spec(ft, pair, n, kf, ks, fin(a, b))).unwrap();
        let numeric = quad_finite(integrand(ft, pair, n, kf, ks), a, b, &cfg).unwrap();
        assert!(
            close(analytic.value.regular, numeric.value, 1e-9),
            "{ft:?} {pair:?} n={n} [{a},{b}]: {} vs {}",
            analytic.value.regular,
            numeric.value
        );
    }
}

#[test]
fn equal_argument_matches_quadrature() {
    let cfg = QuadratureConfig::default();
    let k = c(2.96, 0.0);
    for (ft, pair, n, a, b) in [
        (FieldType::M, PairKind::Jj, 0, 0.0, 2.0),
        (FieldType::M, PairKind::Jy, 1, 0.0, 2.0),
        (FieldType::M, PairKind::Yy, 2, 0.5, 2.0),
        (FieldType::N, PairKind::Jj, 1, 0.0, 2.0),
        (FieldType::N, PairKind::Jy, 2, 0.0, 2.0),
        (FieldType::N, PairKind::Hh, 1, 0.6, 1.9),
    ] {
        let analytic = match ft {
            FieldType::M => radial_m_equal(pair, n, k, fin(a, b)).unwrap(),
            FieldType::N => radial_n_equal(pair, n, k, fin(a, b)).unwrap(),
        };
        let numeric = quad_finite(integrand(ft, pair, n, k, k), a, b, &cfg).unwrap();
        assert!(
            close(analytic.value.regular, numeric.value, 1e-9),
            "{ft:?} {pair:?} n={n}: {} vs {}",
            analytic.value.regular,
            numeric.value
        );
    }
}

#[test]
fn hankel_products_compose_from_bessel_products() {
    // h h = j j - y y + i (j y + y j), and on [R,inf) the delta parts of
    // j j and y y cancel so the h h tail is purely regular.
    let (kf, ks) = (c(1.3, 0.25), c(2.4, 0.4));
    for ft in [FieldType::M, FieldType::N] {
        for interval in [fin(0.6, 2.1), tail(0.8)] {
            let hh = evaluate(&spec(ft, PairKind::Hh, 2, kf, ks, interval)).unwrap().value;
            let jj = evaluate(&spec(ft, PairKind::Jj, 2, kf, ks, interval)).unwrap().value;
            let yy = evaluate(&spec(ft, PairKind::Yy, 2, kf, ks, interval)).unwrap().value;
            let jy = evaluate(&spec(ft, PairKind::Jy, 2, kf, ks, interval)).unwrap().value;
            let yj = evaluate(&spec(ft, PairKind::Jy, 2, ks, kf, interval)).unwrap().value;
            let i = c(0.0, 1.0);
            let composed = jj.regular - yy.regular + i * (jy.regular + yj.regular);
            assert!(
                close(hh.regular, composed, 1e-11),
                "{ft:?} {interval:?}: {} vs {composed}",
                hh.regular
            );
            let delta_composed = jj.delta_coeff - yy.delta_coeff;
            assert!((hh.delta_coeff - delta_composed).norm() <= 1e-14);
        }
    }
}

#[test]
fn watson_antiderivative_integrates_products() {
    let cfg = QuadratureConfig::default();
    let (kf, ks) = (c(1.37, 0.0), c(2.96, 0.457));
    for (fc, fd, n, a, b) in [
        (SphFamily::J, SphFamily::J, 0, 0.3, 1.9),
        (SphFamily::J, SphFamily::Y, 2, 0.5, 2.2),
        (SphFamily::H, SphFamily::H, 1, 0.7, 1.6),
    ] {
        let diff = watson_antiderivative(fc, fd, n, kf, ks, b).unwrap()
            - watson_antiderivative(fc, fd, n, kf, ks, a).unwrap();
        let f = move |x: f64| x * x * base(fc, n, kf * x) * base(fd, n, ks * x);
        let numeric = quad_finite(f, a, b, &cfg).unwrap();
        assert!(
            close(diff, numeric.value, 1e-10),
            "{fc:?}{fd:?} n={n}: {diff} vs {}",
            numeric.value
        );
    }
}

#[test]
fn tail_jy_consistent_with_gaussian_limit() {
    // regular part of the [R,inf) scalar jy integral should agree with the
    // Gaussian-damped integral at small width minus its [0,R] head.
    let cfg = QuadratureConfig::default();
    let (kf, ks) = (c(1.37, 0.0), c(2.96, 0.0));
    let (n, r, eta) = (1usize, 0.9, 1e-3);
    let analytic = radial_m(&spec(FieldType::M, PairKind::Jy, n, kf, ks, tail(r)))
        .unwrap()
        .value
        .regular;
    let damped_full = sph_gaussian::int_jy(n, kf, ks, eta).unwrap();
    let head = quad_finite(
        |x| {
            x * x
                * (-eta * x * x).exp()
                * sph_bessel_j(n, kf * x)
                * sph_bessel_y(n, ks * x).unwrap()
        },
        0.0,
        r,
        &cfg,
    )
    .unwrap();
    let damped_tail = damped_full - head.value;
    assert!(
        close(analytic, damped_tail, 1e-3),
        "analytic {analytic} vs damped {damped_tail}"
    );
}

#[test]
fn whole_axis_jy_matches_distributional_limit() {
    // [0,inf) through the closed forms reproduces the eta -> 0 limit op.
    for (n, kf, ks) in [(0usize, c(1.0, 0.0), c(2.0, 0.0)), (2, c(1.37, 0.2), c(2.96, 0.4))] {
        let r = radial_m(&spec(FieldType::M, PairKind::Jy, n, kf, ks, tail(0.0))).unwrap();
        let lim = sph_gaussian::limit_eta0(sph_gaussian::SphKind::Jy, n, kf, ks).unwrap();
        assert!(close(r.value.regular, lim.regular, 1e-12));
        assert_eq!(r.value.delta_coeff, c(0.0, 0.0));
    }
}

#[test]
fn near_degenerate_band_reports_discrepancy() {
    let k = c(2.2, 0.1);
    let s = spec(FieldType::N, PairKind::Jj, 2, k, k * (1.0 + 3e-7), fin(0.0, 1.7));
    let r = evaluate(&s).unwrap();
    assert_eq!(r.method, EvalMethod::ClosedForm);
    // the reported discrepancy bounds the true error against quadrature
    let numeric = quad_finite(
        integrand(FieldType::N, PairKind::Jj, 2, k, k * (1.0 + 3e-7)),
        0.0,
        1.7,
        &QuadratureConfig::default(),
    )
    .unwrap();
    let true_err = (r.value.regular - numeric.value).norm();
    assert!(
        true_err <= (2.0 * r.err_estimate).max(1e-12),
        "err {true_err} vs estimate {}",
        r.err_estimate
    );
    assert!(r.err_estimate > 1e-13, "digit loss should be flagged, estimate {}", r.err_estimate);
    // fully degenerate input routes to the equal-argument forms
    let s = spec(FieldType::N, PairKind::Jj, 2, k, k, fin(0.0, 1.7));
    assert_eq!(evaluate(&s).unwrap().method, EvalMethod::EqualArgLimit);
}

#[test]
fn tail_boundary_oscillation_averages_away() {
    // For real distinct wavenumbers the neglected upper-boundary term of the
    // finite-interval form oscillates in L without decay; window-averaging it
    // over widths W suppresses the mean like 1/W, which is why dropping it on
    // [R,inf) is legitimate in the distributional sense.
    let (kf, ks) = (c(1.37, 0.0), c(2.96, 0.0));
    let r = 0.8;
    let tail_val = radial_m(&spec(FieldType::M, PairKind::Jj, 1, kf, ks, tail(r)))
        .unwrap()
        .value
        .regular;
    let finite = |l: f64| {
        radial_m(&spec(FieldType::M, PairKind::Jj, 1, kf, ks, fin(r, l)))
            .unwrap()
            .value
            .regular
    };
    let lambda = 60.0;
    let mean_over = |w: f64| {
        let m = 4000;
        let mut acc = c(0.0, 0.0);
        for i in 0..m {
            let l = lambda + w * (i as f64 + 0.5) / m as f64;
            acc += finite(l) - tail_val;
        }
        acc / m as f64
    };
    let amplitude = (finite(lambda) - tail_val).norm().max((finite(lambda + 0.7) - tail_val).norm());
    let m1 = mean_over(10.0).norm();
    let m2 = mean_over(160.0).norm();
    assert!(m1 < 0.5 * amplitude, "mean {m1} vs amplitude {amplitude}");
    assert!(m2 < m1 / 8.0, "widening the window 16x should shrink the mean: {m2} vs {m1}");
}

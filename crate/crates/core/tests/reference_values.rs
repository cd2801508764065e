//! Values checked against an independent 40-digit evaluation (mpmath, with
//! the products and sums written out directly from their definitions).

use qnatural::calculus::{big_e, k_factor, q_gamma, q_pochhammer_inf, q_pochhammer_real, small_e};
use qnatural::special::{
    hyper_big_phi, hyper_phi, q_bessel, BesselKind, HyperParams, QParam, TrigFamily, TrigFn,
};
use qnatural::transform::{natural_type1, natural_type2, Family, FunctionSpec};
use qnatural::{Complex, QContext};

fn ctx(q: f64) -> QContext {
    QContext::builder(q)
        .tol(1e-15)
        .max_terms(200_000)
        .build()
        .unwrap()
}

fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * want.abs().max(1e-300)
}

fn c(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

#[test]
fn q_gamma_references() {
    let table = [
        (0.3, 0.5, 1.457_120_738_697_573_9),
        (0.5, 2.5, 1.190_593_625_027_527_5),
        (0.9, 3.7, 3.709_319_882_326_397),
        (0.999, 1.5, 0.886_282_334_839_999_6),
        (0.7, -0.5, -2.554_220_754_136_425),
    ];
    for (q, x, want) in table {
        let got = q_gamma(x, &ctx(q)).unwrap();
        assert!(close(got, want, 1e-11), "q={q} x={x}: {got} vs {want}");
    }
}

#[test]
fn pochhammer_references() {
    let p = q_pochhammer_inf(c(0.5), &ctx(0.5)).unwrap();
    assert!(close(p.re(), 0.288_788_095_086_602_42, 1e-13));
    let p = q_pochhammer_inf(c(-2.0), &ctx(0.7)).unwrap();
    assert!(close(p.re(), 99.215_422_390_902_25, 1e-12));
    let p = q_pochhammer_inf(Complex::new(0.3, 0.4), &ctx(0.6)).unwrap();
    let want = Complex::new(0.197_903_253_256_484_36, -0.492_689_288_572_036_9);
    assert!((p.value - want).norm() < 1e-13);
    let r = q_pochhammer_real(c(0.3), 2.5, &ctx(0.5)).unwrap();
    assert!(close(r.re, 0.568_295_636_343_290_6, 1e-13));
}

#[test]
fn k_factor_references() {
    let table = [
        (2.0, 1.7, 0.5, 0.662_044_455_196_955_3),
        (0.7, 2.5, 0.5, 0.272_626_933_166_780_1),
        (1.3, 0.4, 0.8, 1.027_138_957_581_924_4),
    ];
    for (a, t, q, want) in table {
        let got = k_factor(a, t, &ctx(q)).unwrap();
        assert!(close(got, want, 1e-12), "A={a} t={t} q={q}");
    }
}

#[test]
fn exponential_references() {
    assert!(close(
        big_e(c(0.7), &ctx(0.5)).unwrap().re(),
        0.134_323_560_282_017_2,
        1e-13
    ));
    assert!(close(
        big_e(c(-3.0), &ctx(0.9)).unwrap().re(),
        198_594_221.390_847_72,
        1e-11
    ));
    assert!(close(
        small_e(c(0.7), &ctx(0.5)).unwrap().re(),
        7.444_710_353_868_402,
        1e-12
    ));
}

#[test]
fn hypergeometric_references() {
    let cx = ctx(0.4);
    let p = HyperParams::phi(
        vec![QParam::real(0.3), QParam::QPower(1.5)],
        vec![QParam::real(-0.2)],
    );
    assert!(close(
        hyper_phi(&p, c(0.63), &cx).unwrap().re(),
        2.105_981_190_209_553_7,
        1e-12
    ));
    let p = HyperParams::big_phi(vec![QParam::real(0.3)], vec![], 1);
    let got = hyper_big_phi(&p, c(2.5), &ctx(0.6)).unwrap().re();
    assert!(close(got, 0.030_931_325_636_891_48, 1e-10));
}

#[test]
fn bessel_references() {
    let cx = ctx(0.5);
    let table = [
        (BesselKind::First, 0.449_133_814_018_571_9),
        (BesselKind::Second, 0.858_495_434_307_619),
        (BesselKind::Third, -0.257_352_653_889_278_1),
    ];
    for (kind, want) in table {
        let got = q_bessel(kind, 0.75, c(1.2), &cx).unwrap().re();
        assert!(close(got, want, 1e-12), "{kind:?}: {got}");
    }
}

#[test]
fn first_type_transform_references() {
    let cx = ctx(0.5);
    let e = FunctionSpec::new(Family::BigExp { a: 0.7 });
    assert!(close(
        natural_type1(&e, 1.5, 2.0, &cx).unwrap().re(),
        0.297_936_655_980_983_87,
        1e-11
    ));
    let j = FunctionSpec::new(Family::Bessel {
        kind: BesselKind::First,
        order: 1.5,
        a: 0.5,
    });
    assert!(close(
        natural_type1(&j, 1.0, 2.0, &cx).unwrap().re(),
        0.159_850_858_821_591_98,
        1e-11
    ));
}

#[test]
fn second_type_transform_references() {
    let cx = ctx(0.5);
    let e = FunctionSpec::new(Family::BigExp { a: 0.25 });
    assert!(close(
        natural_type2(&e, 1.3, 0.8, &cx).unwrap().re(),
        0.896_551_724_137_931,
        1e-11
    ));
    let cos = FunctionSpec::new(Family::Trig {
        family: TrigFamily::Upper,
        func: TrigFn::Cos,
        a: 0.25,
    });
    assert!(close(
        natural_type2(&cos, 1.5, 1.0, &cx).unwrap().re(),
        0.96,
        1e-11
    ));
    let sin = FunctionSpec::new(Family::Trig {
        family: TrigFamily::Upper,
        func: TrigFn::Sin,
        a: 0.25,
    });
    assert!(close(
        natural_type2(&sin, 1.5, 1.0, &cx).unwrap().re(),
        -0.72,
        1e-11
    ));
    let root = FunctionSpec::monomial(0.5);
    assert!(close(
        natural_type2(&root, 2.0, 1.0, &cx).unwrap().re(),
        2.388_455_417_641_816_5,
        1e-11
    ));
}

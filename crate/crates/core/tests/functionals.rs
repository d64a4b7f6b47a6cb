mod common;

use std::f64::consts::PI;

use common::strategies::function;
use num_complex::Complex64;
use proptest::prelude::*;
use radii_core::family::FunctionFamily;
use radii_core::normalize::{convex_functional, starlike_functional, Form, NormalizedFunction};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn legendre() -> NormalizedFunction {
    NormalizedFunction::new(FunctionFamily::legendre(3).unwrap(), Form::G).unwrap()
}

#[test]
fn functionals_are_one_at_origin() {
    let p = legendre();
    assert!((starlike_functional(&p, real(1e-6)).unwrap() - 1.0).norm() <= 1e-10);
    assert!((convex_functional(&p, real(1e-6)).unwrap() - 1.0).norm() <= 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugate_symmetry(nf in function(), frac in 0.05..0.9f64, theta in -PI..PI) {
        let r = frac * nf.convex_singularity().unwrap();
        let z = Complex64::from_polar(r, theta);
        for f in [starlike_functional, convex_functional] {
            let a = f(&nf, z).unwrap();
            let b = f(&nf, z.conj()).unwrap();
            prop_assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1.0));
        }
    }

    // 200-point grid on (0, first singularity).
    #[test]
    fn decreasing_on_the_real_axis(nf in function()) {
        for (f, sing) in [
            (starlike_functional as fn(_, _) -> _, nf.starlike_singularity().unwrap()),
            (convex_functional, nf.convex_singularity().unwrap()),
        ] {
            let vals: Vec<f64> = (1..=200)
                .map(|k| f(&nf, real(0.99 * sing * k as f64 / 201.0)).unwrap().re)
                .collect();
            prop_assert!(vals.windows(2).all(|w| w[1] < w[0]), "{} {}", nf.family().name(), nf.form_label());
        }
    }

    #[test]
    fn extremes_on_the_positive_axis(nf in function(), frac in 0.05..0.95f64) {
        let r = frac * nf.starlike_singularity().unwrap();
        let at_r = starlike_functional(&nf, real(r)).unwrap().re;
        let tol = 1e-10 * (1.0 - at_r).abs().max(1.0);
        for k in 1..64 {
            let s = starlike_functional(&nf, Complex64::from_polar(r, PI * k as f64 / 64.0)).unwrap();
            prop_assert!(s.re >= at_r - tol, "Re S {} below S(r) {at_r}", s.re);
            prop_assert!((s - 1.0).norm() <= (at_r - 1.0).abs() + tol);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lambda_inequality(
        r in 1e-3..10.0f64,
        mag in 0.0..1.0f64,
        arg in -PI..PI,
        gy in 1e-4..10.0f64,
        gx in 1e-4..10.0f64,
        lam in 0.0..=1.0f64,
    ) {
        let m = r * mag;
        let z = Complex64::from_polar(m, arg);
        let y = r * (1.0 + gy);
        let x = y * (1.0 + gx);
        let lhs = (z / (y - z) - lam * z / (x - z)).norm();
        let rhs = m / (y - m) - lam * m / (x - m);
        prop_assert!(lhs <= rhs + 1e-12 * rhs.max(1.0), "{lhs} > {rhs}");
    }
}

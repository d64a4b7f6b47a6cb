use num_complex::Complex64;
use proptest::prelude::*;
use radii_core::family::FunctionFamily;
use radii_core::normalize::{Form, NormalizedFunction};
use radii_core::series::eval_base;
use radii_core::zeros::{
    check_interlacing, positive_zeros, positive_zeros_with, ZeroKind, ZeroOptions,
};

/// `κ(t)` with `κ(0) = 1`, from the g-form value.
fn kernel(fam: FunctionFamily, t: f64) -> f64 {
    let g = NormalizedFunction::new(fam, Form::G).unwrap();
    (g.value(Complex64::new(t, 0.0)).unwrap() / t).re
}

#[test]
fn kernel_changes_sign_at_each_zero() {
    for fam in [
        FunctionFamily::wright(1.0, 1.0).unwrap(),
        FunctionFamily::wright(0.5, 2.0).unwrap(),
        FunctionFamily::mittag_leffler(3.0, 1.0, 1.0).unwrap(),
        FunctionFamily::lommel(-0.3).unwrap(),
        FunctionFamily::struve(0.3).unwrap(),
        FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap(),
    ] {
        let t = positive_zeros(&fam, ZeroKind::Base, 4).unwrap();
        assert!(t.zeros().windows(2).all(|w| w[0] < w[1]), "{:?}", t.zeros());
        assert!(
            t.residuals().iter().all(|&r| r <= 1e-11),
            "{:?}",
            t.residuals()
        );
        let base = |t: f64| {
            eval_base(&fam, Complex64::new(-fam.scale() * t * t, 0.0))
                .unwrap()
                .value
                .re
        };
        for &z in t.zeros() {
            let (a, b) = (base(z * (1.0 - 1e-6)), base(z * (1.0 + 1e-6)));
            assert!(a * b < 0.0, "{} at {z}: {a} {b}", fam.name());
        }
    }
}

fn inf() -> ZeroOptions {
    ZeroOptions::with_ceiling(f64::INFINITY)
}

#[test]
fn truncated_product_matches_series() {
    for fam in [
        FunctionFamily::wright(1.0, 1.0).unwrap(),
        FunctionFamily::mittag_leffler(3.0, 1.5, 2.0).unwrap(),
        FunctionFamily::lommel(0.3).unwrap(),
        FunctionFamily::struve(-0.25).unwrap(),
        FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap(),
    ] {
        let t = positive_zeros_with(&fam, ZeroKind::Base, 200, &inf()).unwrap();
        let sq = t.squares();
        let tails = t.tails().unwrap();
        assert!(tails.consistent);
        let last = *sq.last().unwrap();
        for k in 1..=20 {
            let x = 0.9 * t.zeros()[0] * k as f64 / 20.0;
            let y = x * x;
            let product: f64 = sq.iter().map(|z| 1.0 - y / z).product();
            // 0 ≤ −ln Π_{n>N}(1 − y/Z_n) ≤ y t₁ / (1 − y/Z_N)
            let log_tail = y * tails.first / (1.0 - y / last);
            let series = kernel(fam, x);
            let allowed = product.abs() * log_tail + 1e-12;
            assert!(
                (series - product).abs() <= allowed,
                "{} at {x}: series {series}, product {product}, allowed {allowed:e}",
                fam.name()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn wright_zeros_interlace(rho in 0.3..2.0f64, beta in 0.3..3.0f64) {
        let fam = FunctionFamily::wright(rho, beta).unwrap();
        let d = positive_zeros_with(&fam, ZeroKind::WeightedDerivative, 5, &inf()).unwrap();
        let b = positive_zeros_with(&fam, ZeroKind::Base, 5, &inf()).unwrap();
        let rep = check_interlacing(&d, &b);
        prop_assert!(rep.holds, "{:?}", rep.violations);
    }

    #[test]
    fn lommel_zeros_interlace(u in 0.05..0.95f64, neg in any::<bool>()) {
        let u = if neg { -u } else { u };
        let fam = FunctionFamily::lommel(u).unwrap();
        let d = positive_zeros_with(&fam, ZeroKind::WeightedDerivative, 5, &inf()).unwrap();
        let b = positive_zeros_with(&fam, ZeroKind::Base, 5, &inf()).unwrap();
        // Below u = −1/2 the weight u + 1/2 is negative and the order flips.
        let rep = if u > -0.5 { check_interlacing(&d, &b) } else { check_interlacing(&b, &d) };
        prop_assert!(rep.holds, "{:?}", rep.violations);
    }

    #[test]
    fn struve_zeros_interlace(beta in -0.49..0.49f64) {
        let fam = FunctionFamily::struve(beta).unwrap();
        let d = positive_zeros_with(&fam, ZeroKind::WeightedDerivative, 5, &inf()).unwrap();
        let b = positive_zeros_with(&fam, ZeroKind::Base, 5, &inf()).unwrap();
        let rep = check_interlacing(&d, &b);
        prop_assert!(rep.holds, "{:?}", rep.violations);
    }
}

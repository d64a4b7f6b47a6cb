use num_complex::Complex64;
use proptest::prelude::*;
use radii_core::domains::{alpha_numeric, alpha_of, TargetDomain};

fn one_minus_phi_at_minus_one(d: &TargetDomain) -> f64 {
    1.0 - d.phi(Complex64::new(-1.0, 0.0)).unwrap().re
}

#[test]
fn phi_is_one_at_origin() {
    for d in TargetDomain::catalog() {
        if d.boundary_evaluable() {
            assert!(
                (d.phi(Complex64::new(0.0, 0.0)).unwrap() - 1.0).norm() <= 1e-14,
                "{d:?}"
            );
        }
    }
}

// The disk reaches the boundary at φ(−1) except for the lemniscate, the
// crescent and Janowski maps with E > 0, whose nearest boundary point lies
// off the negative axis.
#[test]
fn alpha_is_distance_to_phi_at_minus_one() {
    for d in TargetDomain::catalog() {
        if !d.boundary_evaluable() {
            continue;
        }
        let a = alpha_of(&d).unwrap().alpha;
        let edge = one_minus_phi_at_minus_one(&d);
        match d {
            TargetDomain::Lemniscate => {
                assert!(a < edge && edge == 1.0);
                assert!((alpha_numeric(&d, 4096).unwrap().alpha - a).abs() <= 1e-8);
            }
            TargetDomain::RlCrescent => assert!(a < edge),
            TargetDomain::Janowski { e, .. } if e > 0.0 => assert!(a < edge),
            _ => assert!((a - edge).abs() <= 1e-12, "{d:?}: {a} vs {edge}"),
        }
    }
}

fn janowski() -> impl Strategy<Value = (f64, f64)> {
    (-1.0..1.0f64, 0.0..1.0f64)
        .prop_map(|(e, t)| (e, e + (1.0 - e) * t))
        .prop_filter("D > E", |(e, d)| d > e)
}

proptest! {
    #[test]
    fn janowski_alpha_matches_phi_for_nonpositive_e((e, d) in janowski()) {
        let dom = TargetDomain::Janowski { d, e };
        let a = alpha_of(&dom).unwrap().alpha;
        if e <= 0.0 {
            prop_assert!((a - one_minus_phi_at_minus_one(&dom)).abs() <= 1e-12);
        }
        prop_assert!((alpha_numeric(&dom, 4096).unwrap().alpha - a).abs() <= 1e-8);
    }

    #[test]
    fn janowski_inverse_representation(
        (e, d) in janowski(),
        draws in prop::collection::vec((0.0..1.0f64, -std::f64::consts::PI..std::f64::consts::PI), 500),
    ) {
        let a = alpha_of(&TargetDomain::Janowski { d, e }).unwrap().alpha;
        for (m, arg) in draws {
            let w = 1.0 + Complex64::from_polar(a * m.sqrt() * (1.0 - 1e-12), arg);
            let v = ((w - 1.0) / (d - e * w)).norm();
            prop_assert!(v < 1.0, "w = {w}: {v}");
        }
    }
}

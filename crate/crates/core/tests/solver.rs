mod common;

use common::strategies::function;
use proptest::prelude::*;
use radii_core::domains::TargetDomain;
use radii_core::normalize::Functional;
use radii_core::solver::{convex_radius, display_radius, starlike_radius, Problem};
use radii_core::verify::{check_disk_containment, check_sector, check_sharpness};

fn disk(alpha: f64) -> TargetDomain {
    TargetDomain::Disk { alpha }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn radius_results_are_well_formed(nf in function(), alpha in 0.05..=1.0f64) {
        for (r, sing, problem) in [
            (starlike_radius(&nf, &disk(alpha)).unwrap(), nf.starlike_singularity().unwrap(),
             Problem::Starlike { domain: disk(alpha) }),
            (convex_radius(&nf, &disk(alpha)).unwrap(), nf.convex_singularity().unwrap(),
             Problem::Convex { domain: disk(alpha) }),
        ] {
            prop_assert!(r.residual <= 1e-10);
            prop_assert!(r.bracket.0 < r.radius && r.radius < r.bracket.1);
            prop_assert!(r.bracket.1 < sing);
            prop_assert!(check_sharpness(&nf, &problem, r.radius).unwrap().passed);
        }
    }

    #[test]
    fn radii_grow_with_alpha_and_convex_is_smaller(nf in function(), a in 0.05..0.9f64, da in 0.01..0.1f64) {
        let s1 = starlike_radius(&nf, &disk(a)).unwrap().radius;
        let s2 = starlike_radius(&nf, &disk(a + da)).unwrap().radius;
        let c1 = convex_radius(&nf, &disk(a)).unwrap().radius;
        let c2 = convex_radius(&nf, &disk(a + da)).unwrap().radius;
        prop_assert!(s1 < s2 && c1 < c2);
        prop_assert!(c1 <= s1 && c2 <= s2);
    }

    #[test]
    fn display_equation_gives_the_same_root(nf in function(), alpha in 0.05..=1.0f64) {
        let s = starlike_radius(&nf, &disk(alpha)).unwrap().radius;
        let c = convex_radius(&nf, &disk(alpha)).unwrap().radius;
        prop_assert!((display_radius(&nf, Functional::Starlike, alpha, 1e-13).unwrap() - s).abs() <= 1e-10);
        prop_assert!((display_radius(&nf, Functional::Convex, alpha, 1e-13).unwrap() - c).abs() <= 1e-10);
    }

    #[test]
    fn certificate_verdict_follows_violation(nf in function(), alpha in 0.1..=1.0f64, frac in 0.05..0.95f64, eps in 0.1..=1.0f64) {
        let r = frac * nf.starlike_singularity().unwrap();
        for rep in [
            check_disk_containment(&nf, Functional::Starlike, r, alpha, 128).unwrap(),
            check_sector(&nf, r, eps, 128).unwrap(),
        ] {
            prop_assert_eq!(rep.passed, rep.max_violation <= rep.tolerance);
        }
    }
}

//! Numerical certificates: boundary sampling of the functionals on
//! `|z| = r`, sharpness residuals, and Monte-Carlo checks of the two
//! auxiliary inequalities behind the disk and sector bounds.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::domains::alpha_of;
use crate::error::Result;
use crate::normalize::{convex_functional, starlike_functional, Functional, NormalizedFunction};
use crate::solver::{solve, strongly_starlike_t, Problem, RadiusQuery, RadiusResult};

pub const DEFAULT_SEED: u64 = 0x5eed_2a71;
pub const DEFAULT_SAMPLES: usize = 512;
const REFINE_LEVELS: usize = 3;
const REFINE_POINTS: usize = 16;
const BOUNDARY_REL_TOL: f64 = 1e-9;
const SHARPNESS_TOL: f64 = 1e-9;
const INEQUALITY_TOL: f64 = 1e-12;

/// `RADII_SEED` when set and parseable, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("RADII_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Where the worst case of a check was found.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Boundary point `r e^{iθ}` and the functional value there.
    Boundary {
        r: f64,
        theta: f64,
        re: f64,
        im: f64,
    },
    /// Radius at which an equation residual was measured.
    Radius { r: f64 },
    /// Random draw, in the order documented by the check.
    Draw { values: Vec<f64> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub claim: String,
    pub samples: usize,
    /// Largest excess over the claimed bound (0 when the bound holds everywhere sampled).
    pub max_violation: f64,
    /// Largest value of the checked quantity.
    pub max_value: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub witness: Option<Witness>,
}

fn functional(nf: &NormalizedFunction, which: Functional, z: Complex64) -> Result<Complex64> {
    match which {
        Functional::Starlike => starlike_functional(nf, z),
        Functional::Convex => convex_functional(nf, z),
    }
}

/// Maximum of `score(θ)` over `[0, π]`: a uniform grid of `samples` points
/// and `REFINE_LEVELS` rounds of local refinement around the running max.
fn boundary_max<F>(samples: usize, mut score: F) -> Result<(f64, f64, usize)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let n = samples.max(2);
    let h = PI / (n - 1) as f64;
    let mut best = (f64::NEG_INFINITY, 0.0);
    let mut count = 0;
    for i in 0..n {
        let t = i as f64 * h;
        let v = score(t)?;
        count += 1;
        if v > best.0 {
            best = (v, t);
        }
    }
    let mut width = h;
    for _ in 0..REFINE_LEVELS {
        let (lo, hi) = ((best.1 - width).max(0.0), (best.1 + width).min(PI));
        let step = (hi - lo) / REFINE_POINTS as f64;
        for j in 0..=REFINE_POINTS {
            let t = lo + j as f64 * step;
            let v = score(t)?;
            count += 1;
            if v > best.0 {
                best = (v, t);
            }
        }
        width = 2.0 * step;
    }
    Ok((best.0, best.1, count))
}

/// `max_θ |F(r e^{iθ}) − 1| ≤ α` for the chosen functional `F`.
pub fn check_disk_containment(
    nf: &NormalizedFunction,
    which: Functional,
    r: f64,
    alpha: f64,
    samples: usize,
) -> Result<CertificateReport> {
    let (max, theta, count) = boundary_max(samples, |t| {
        Ok((functional(nf, which, Complex64::from_polar(r, t))? - 1.0).norm())
    })?;
    let v = functional(nf, which, Complex64::from_polar(r, theta))?;
    let tol = alpha * BOUNDARY_REL_TOL;
    Ok(CertificateReport {
        claim: format!(
            "|{}(z) - 1| <= {alpha} on |z| = {r} for {} {}",
            which_symbol(which),
            nf.family().name(),
            nf.form_label()
        ),
        samples: count,
        max_violation: (max - alpha).max(0.0),
        max_value: max,
        tolerance: tol,
        passed: max <= alpha + tol,
        witness: Some(Witness::Boundary {
            r,
            theta,
            re: v.re,
            im: v.im,
        }),
    })
}

fn which_symbol(which: Functional) -> &'static str {
    match which {
        Functional::Starlike => "S",
        Functional::Convex => "C",
    }
}

/// `max_θ |arg S(r e^{iθ})| ≤ πε/2`.
pub fn check_sector(
    nf: &NormalizedFunction,
    r: f64,
    epsilon: f64,
    samples: usize,
) -> Result<CertificateReport> {
    let (max, theta, count) = boundary_max(samples, |t| {
        Ok(starlike_functional(nf, Complex64::from_polar(r, t))?
            .arg()
            .abs())
    })?;
    let v = starlike_functional(nf, Complex64::from_polar(r, theta))?;
    let bound = FRAC_PI_2 * epsilon;
    let tol = bound * BOUNDARY_REL_TOL;
    Ok(CertificateReport {
        claim: format!(
            "|arg S(z)| <= pi*{epsilon}/2 on |z| = {r} for {} {}",
            nf.family().name(),
            nf.form_label()
        ),
        samples: count,
        max_violation: (max - bound).max(0.0),
        max_value: max,
        tolerance: tol,
        passed: max <= bound + tol,
        witness: Some(Witness::Boundary {
            r,
            theta,
            re: v.re,
            im: v.im,
        }),
    })
}

/// The defining equation holds at `radius`: `F(radius) = 1 − α`, or
/// `T(radius) = 0` (series form of `T`) for the strongly-starlike problem.
pub fn check_sharpness(
    nf: &NormalizedFunction,
    problem: &Problem,
    radius: f64,
) -> Result<CertificateReport> {
    let z = Complex64::new(radius, 0.0);
    let (claim, residual) = match problem {
        Problem::Starlike { domain } | Problem::Convex { domain } => {
            let which = if matches!(problem, Problem::Starlike { .. }) {
                Functional::Starlike
            } else {
                Functional::Convex
            };
            let a = alpha_of(domain)?.alpha;
            let v = functional(nf, which, z)?.re;
            (
                format!("{}({radius}) = 1 - {a}", which_symbol(which)),
                (v - (1.0 - a)).abs(),
            )
        }
        Problem::StronglyStarlike { epsilon } => (
            format!("T({radius}) = 0 at epsilon = {epsilon}"),
            strongly_starlike_t(nf, *epsilon, radius)?.abs(),
        ),
    };
    Ok(CertificateReport {
        claim,
        samples: 1,
        max_violation: (residual - SHARPNESS_TOL).max(0.0),
        max_value: residual,
        tolerance: SHARPNESS_TOL,
        passed: residual <= SHARPNESS_TOL,
        witness: Some(Witness::Radius { r: radius }),
    })
}

/// Relative excess of `lhs` over `rhs`.
fn excess(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs) / rhs.abs().max(1.0)
}

fn lemma_excess(z: Complex64, zk: Complex64, r: f64) -> (f64, f64) {
    let big_r = zk.norm();
    let d = big_r * big_r - r * r;
    let lhs = (z / (z - zk) + r * r / d).norm();
    let rhs = big_r * r / d;
    (excess(lhs, rhs), lhs)
}

fn tally(
    claim: &str,
    trials: usize,
    mut draw: impl FnMut(usize) -> (f64, f64, Vec<f64>),
) -> CertificateReport {
    let mut worst = (f64::NEG_INFINITY, 0.0, None);
    let mut violations = 0usize;
    for i in 0..trials {
        let (ex, value, params) = draw(i);
        if ex > INEQUALITY_TOL {
            violations += 1;
        }
        if ex > worst.0 {
            worst = (ex, value, Some(params));
        }
    }
    CertificateReport {
        claim: format!("{claim} ({violations} violations)"),
        samples: trials,
        max_violation: worst.0.max(0.0),
        max_value: worst.1,
        tolerance: INEQUALITY_TOL,
        passed: violations == 0,
        witness: worst.2.map(|values| Witness::Draw { values }),
    }
}

/// `|z/(z − z_k) + r²/(R² − r²)| ≤ Rr/(R² − r²)` for `|z| ≤ r < 1`,
/// `|z_k| = R > r`. Witness draws are `[Re z, Im z, r, Re z_k, Im z_k]`.
/// The two extreme configurations `z = 0` and `z = r, z_k = R` are
/// always included.
pub fn check_disk_lemma(trials: usize, seed: u64) -> CertificateReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    tally("disk lemma", trials, |i| {
        let r: f64 = rng.gen_range(1e-3..1.0);
        let big_r = r * (1.0 + 10f64.powf(rng.gen_range(-4.0..1.0)));
        let zk = Complex64::from_polar(big_r, rng.gen_range(-PI..PI));
        let z = match i {
            0 => Complex64::new(0.0, 0.0),
            1 => Complex64::new(r, 0.0),
            _ => Complex64::from_polar(r * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI)),
        };
        let zk = if i == 1 {
            Complex64::new(big_r, 0.0)
        } else {
            zk
        };
        let (ex, lhs) = lemma_excess(z, zk, r);
        (ex, lhs, vec![z.re, z.im, r, zk.re, zk.im])
    })
}

/// `|z/(y − z) − λz/(x − z)| ≤ |z|/(y − |z|) − λ|z|/(x − |z|)` for
/// `x > y > r ≥ |z|`, `λ ∈ [0, 1]`. Witness draws are `[Re z, Im z, y, x, λ]`.
pub fn check_lambda_inequality(trials: usize, seed: u64) -> CertificateReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    tally("lambda inequality", trials, |_| {
        let r: f64 = 10f64.powf(rng.gen_range(-3.0..1.0));
        let m = r * rng.gen::<f64>().sqrt();
        let z = Complex64::from_polar(m, rng.gen_range(-PI..PI));
        let y = r * (1.0 + 10f64.powf(rng.gen_range(-4.0..1.0)));
        let x = y * (1.0 + 10f64.powf(rng.gen_range(-4.0..1.0)));
        let lam: f64 = rng.gen_range(0.0..=1.0);
        let lhs = (z / (y - z) - lam * z / (x - z)).norm();
        let rhs = m / (y - m) - lam * m / (x - m);
        (excess(lhs, rhs), lhs, vec![z.re, z.im, y, x, lam])
    })
}

/// Outcome of the check just beyond the radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterVerdict {
    /// The bound fails, as sharpness requires.
    FailsAsExpected,
    /// The bound still holds; expected for the sufficient sector condition.
    Conservative,
    /// `1.01 r*` is past the functional's first singularity.
    Skipped,
    /// The bound still holds where sharpness says it must fail.
    UnexpectedPass,
}

/// Radius certification: pass at `0.99 r*`, fail at `1.01 r*`, and the
/// defining equation holds at `r*`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProtocolReport {
    pub query: RadiusQuery,
    pub result: RadiusResult,
    pub inner: CertificateReport,
    pub outer: Option<CertificateReport>,
    pub outer_verdict: OuterVerdict,
    pub sharpness: CertificateReport,
    pub passed: bool,
}

pub const INNER_FACTOR: f64 = 0.99;
pub const OUTER_FACTOR: f64 = 1.01;

/// Solves `query` and runs the certification protocol on the result.
pub fn certify(query: &RadiusQuery, samples: usize, table_len: usize) -> Result<ProtocolReport> {
    let result = solve(query, table_len)?;
    certify_result(query, result, samples)
}

/// Certification protocol for an already computed radius.
pub fn certify_result(
    query: &RadiusQuery,
    result: RadiusResult,
    samples: usize,
) -> Result<ProtocolReport> {
    let nf = &query.nf;
    let r = result.radius;
    let check = |radius: f64| -> Result<CertificateReport> {
        match query.problem {
            Problem::Starlike { domain } => check_disk_containment(
                nf,
                Functional::Starlike,
                radius,
                alpha_of(&domain)?.alpha,
                samples,
            ),
            Problem::Convex { domain } => check_disk_containment(
                nf,
                Functional::Convex,
                radius,
                alpha_of(&domain)?.alpha,
                samples,
            ),
            Problem::StronglyStarlike { epsilon } => check_sector(nf, radius, epsilon, samples),
        }
    };
    let inner = check(INNER_FACTOR * r)?;
    let limit = match query.problem {
        Problem::Convex { .. } => nf.convex_singularity()?,
        _ => nf.starlike_singularity()?,
    };
    let (outer, outer_verdict) = if OUTER_FACTOR * r >= limit {
        (None, OuterVerdict::Skipped)
    } else {
        let rep = check(OUTER_FACTOR * r)?;
        let verdict = match (rep.passed, query.problem) {
            (false, _) => OuterVerdict::FailsAsExpected,
            (true, Problem::StronglyStarlike { .. }) => OuterVerdict::Conservative,
            (true, _) => OuterVerdict::UnexpectedPass,
        };
        (Some(rep), verdict)
    };
    let sharpness = check_sharpness(nf, &query.problem, r)?;
    let passed = inner.passed && sharpness.passed && outer_verdict != OuterVerdict::UnexpectedPass;
    Ok(ProtocolReport {
        query: *query,
        result,
        inner,
        outer,
        outer_verdict,
        sharpness,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::TargetDomain;
    use crate::family::FunctionFamily;
    use crate::normalize::Form;
    use crate::solver::{convex_radius, starlike_radius};

    fn wright_g() -> NormalizedFunction {
        NormalizedFunction::new(FunctionFamily::wright(1.0, 1.0).unwrap(), Form::G).unwrap()
    }

    #[test]
    fn containment_around_the_radius() {
        let nf = wright_g();
        let r = starlike_radius(&nf, &TargetDomain::Disk { alpha: 1.0 })
            .unwrap()
            .radius;
        let inside = check_disk_containment(&nf, Functional::Starlike, 0.99 * r, 1.0, 512).unwrap();
        assert!(inside.passed);
        match inside.witness {
            Some(Witness::Boundary { theta, .. }) => assert!(theta < 1e-3),
            ref w => panic!("{w:?}"),
        }
        let outside =
            check_disk_containment(&nf, Functional::Starlike, 1.02 * r, 1.0, 512).unwrap();
        assert!(!outside.passed && outside.max_violation > 0.0);
        let tiny = check_disk_containment(&nf, Functional::Starlike, 1e-8, 0.5, 64).unwrap();
        assert!(tiny.passed && tiny.max_violation == 0.0);
    }

    #[test]
    fn legendre_sharpness_closed_form() {
        let nf = NormalizedFunction::new(FunctionFamily::legendre(2).unwrap(), Form::G).unwrap();
        let p = Problem::Convex {
            domain: TargetDomain::Disk { alpha: 1.0 },
        };
        let rep = check_sharpness(&nf, &p, (1.0f64 / 15.0).sqrt()).unwrap();
        assert!(rep.passed && rep.max_value < 1e-14, "{rep:?}");
        let c = convex_radius(&nf, &TargetDomain::Disk { alpha: 1e-6 }).unwrap();
        let rep = check_sharpness(
            &nf,
            &Problem::Convex {
                domain: TargetDomain::Disk { alpha: 1e-6 },
            },
            c.radius,
        )
        .unwrap();
        assert!(rep.passed);
    }

    #[test]
    fn lemma_extremes() {
        let (ex, lhs) = lemma_excess(Complex64::new(0.0, 0.0), Complex64::new(0.9, 0.0), 0.5);
        assert!(ex < 0.0 && (lhs - 0.25 / (0.81 - 0.25)).abs() < 1e-15);
        let (ex, _) = lemma_excess(Complex64::new(0.5, 0.0), Complex64::new(0.9, 0.0), 0.5);
        assert!(ex.abs() < 1e-14);
    }

    #[test]
    fn inequality_suites_small() {
        assert!(check_disk_lemma(2000, 7).passed);
        assert!(check_lambda_inequality(2000, 7).passed);
        assert_eq!(check_disk_lemma(100, 3), check_disk_lemma(100, 3));
    }

    #[test]
    fn protocol_for_convex_wright() {
        let q = RadiusQuery {
            nf: wright_g(),
            problem: Problem::Convex {
                domain: TargetDomain::Disk { alpha: 0.5 },
            },
        };
        let rep = certify(&q, 256, 50).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(rep.outer_verdict, OuterVerdict::FailsAsExpected);
    }
}

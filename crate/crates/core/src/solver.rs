//! Radius equations `S(r) = 1 − α`, `C(r) = 1 − α` and the
//! strongly-starlike condition `T(r) = 0`.
//!
//! `T` is the sum-over-zeros expression
//!
//! ```text
//! T(y) = c Σ_n (Z_n y + σ y²)/(Z_n² − y²) − σ,   σ = sin(πε/2),
//! ```
//!
//! with `c = 2/w, 2, 1` for the f, g, h forms and `y = r²` (even forms)
//! or `y = r` (h-form). Missing zeros are handled through the remainders
//! `t_k = Σ_{n>N} Z_n^{−k}`, which the Taylor coefficients give exactly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domains::{alpha_of, wi_membership, AlphaSource, TargetDomain, DEFAULT_WI_DEPTH};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::normalize::{
    convex_functional, starlike_functional, Form, Functional, NormalizedFunction,
};
use crate::series::kernel_sums;
use crate::zeros::{positive_zeros_with, ZeroKind, ZeroOptions, ZeroTable};

/// What to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "snake_case")]
pub enum Problem {
    Starlike { domain: TargetDomain },
    Convex { domain: TargetDomain },
    StronglyStarlike { epsilon: f64 },
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Starlike { .. } => "starlike",
            Problem::Convex { .. } => "convex",
            Problem::StronglyStarlike { .. } => "strongly_starlike",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery {
    pub nf: NormalizedFunction,
    pub problem: Problem,
}

/// Whether the radius equation is stated for this family or follows from
/// the general disk reduction applied to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    Theorem,
    FrameworkDerived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// `|equation(radius)|`.
    pub residual: f64,
    /// Initial bracket handed to the root finder.
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub alpha_used: Option<f64>,
    pub alpha_source: Option<AlphaSource>,
    pub epsilon: Option<f64>,
    pub derivation: Derivation,
    pub notes: Vec<String>,
}

/// Root-finder controls.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    pub lower: f64,
    /// Upper bracket end as a fraction of the first singularity.
    pub upper_fraction: f64,
    /// Bisection hands over to Newton below this bracket width.
    pub bisect_width: f64,
    pub residual_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            lower: 1e-9,
            upper_fraction: 0.999,
            bisect_width: 1e-6,
            residual_tol: 1e-12,
            max_iter: 200,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Bisection down to `bisect_width`, then Newton with a central-difference
/// slope, falling back to bisection whenever a step leaves the bracket.
pub fn hybrid_root<F>(mut f: F, lo: f64, hi: f64, opts: &RootOptions) -> Result<Root>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa == 0.0 {
        return Ok(Root {
            x: a,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(Root {
            x: b,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let sa = fa.signum();
    let mut it = 0;
    let mut x = 0.5 * (a + b);
    let mut fx = f(x)?;
    while b - a > opts.bisect_width && it < opts.max_iter {
        it += 1;
        if fx.signum() == sa {
            a = x;
        } else {
            b = x;
        }
        x = 0.5 * (a + b);
        fx = f(x)?;
    }
    while fx.abs() > opts.residual_tol && it < opts.max_iter {
        it += 1;
        if fx == 0.0 {
            break;
        }
        if fx.signum() == sa {
            a = x;
        } else {
            b = x;
        }
        if b - a <= 4.0 * f64::EPSILON * x.abs() {
            break;
        }
        let h = 1e-7 * x.abs().max(f64::MIN_POSITIVE);
        let slope = (f(x + h)? - f(x - h)?) / (2.0 * h);
        let mut next = x - fx / slope;
        if !(next > a && next < b) || !slope.is_finite() {
            next = 0.5 * (a + b);
        }
        x = next;
        fx = f(x)?;
    }
    Ok(Root {
        x,
        residual: fx.abs(),
        iterations: it,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )))
    }
}

fn check_epsilon(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "epsilon must lie in (0, 1], got {eps}"
        )))
    }
}

fn functional_at(nf: &NormalizedFunction, which: Functional, r: f64) -> Result<f64> {
    let z = Complex64::new(r, 0.0);
    Ok(match which {
        Functional::Starlike => starlike_functional(nf, z)?.re,
        Functional::Convex => convex_functional(nf, z)?.re,
    })
}

fn singularity(nf: &NormalizedFunction, which: Functional) -> Result<f64> {
    match which {
        Functional::Starlike => nf.starlike_singularity(),
        Functional::Convex => nf.convex_singularity(),
    }
}

fn derivation(nf: &NormalizedFunction, problem: &Problem) -> Derivation {
    let fam = nf.family().params();
    let stated = match problem {
        Problem::Starlike { .. } => !matches!(
            fam,
            Family::Lommel { .. } | Family::Struve { .. } | Family::Legendre { .. }
        ),
        Problem::Convex { .. } => true,
        Problem::StronglyStarlike { .. } => !matches!(fam, Family::Legendre { .. }),
    };
    if stated {
        Derivation::Theorem
    } else {
        Derivation::FrameworkDerived
    }
}

fn family_notes(nf: &NormalizedFunction) -> Vec<String> {
    let mut notes = Vec::new();
    if let Family::MittagLeffler { mu, nu, .. } = *nf.family().params() {
        if mu > 1.0 {
            let m = wi_membership(mu, nu, DEFAULT_WI_DEPTH);
            if !m.is_member() {
                notes.push(format!(
                    "warning: (1/mu, nu) = (1/{mu}, {nu}) not shown to lie in W_i ({m:?}); real zeros are not guaranteed"
                ));
            }
        } else {
            notes.push(format!(
                "warning: mu = {mu} <= 1 lies outside the parameter plane of W_i; real zeros are not guaranteed"
            ));
        }
    }
    notes
}

/// Root of `functional(r) = 1 − α` on `(lower, upper_fraction · singularity)`.
pub fn solve_functional(
    nf: &NormalizedFunction,
    which: Functional,
    alpha: f64,
    opts: &RootOptions,
) -> Result<(Root, (f64, f64))> {
    check_alpha(alpha)?;
    let hi = opts.upper_fraction * singularity(nf, which)?;
    let lo = opts.lower;
    let root = hybrid_root(
        |r| Ok(functional_at(nf, which, r)? - (1.0 - alpha)),
        lo,
        hi,
        opts,
    )?;
    Ok((root, (lo, hi)))
}

fn radius_for_domain(
    nf: &NormalizedFunction,
    domain: &TargetDomain,
    which: Functional,
    opts: &RootOptions,
) -> Result<RadiusResult> {
    let a = alpha_of(domain)?;
    let problem = match which {
        Functional::Starlike => Problem::Starlike { domain: *domain },
        Functional::Convex => Problem::Convex { domain: *domain },
    };
    let (root, bracket) = solve_functional(nf, which, a.alpha, opts)?;
    let mut notes = family_notes(nf);
    if let Some(w) = &a.warning {
        notes.push(format!("{}: {w}", domain.name()));
    }
    Ok(RadiusResult {
        radius: root.x,
        residual: root.residual,
        bracket,
        iterations: root.iterations,
        alpha_used: Some(a.alpha),
        alpha_source: Some(a.source),
        epsilon: None,
        derivation: derivation(nf, &problem),
        notes,
    })
}

/// Largest `r` with `z f′/f` inside the disk `|w − 1| < α(domain)`.
pub fn starlike_radius(nf: &NormalizedFunction, domain: &TargetDomain) -> Result<RadiusResult> {
    radius_for_domain(nf, domain, Functional::Starlike, &RootOptions::default())
}

pub fn starlike_radius_with(
    nf: &NormalizedFunction,
    domain: &TargetDomain,
    opts: &RootOptions,
) -> Result<RadiusResult> {
    radius_for_domain(nf, domain, Functional::Starlike, opts)
}

/// Largest `r` with `1 + z f″/f′` inside the disk `|w − 1| < α(domain)`.
pub fn convex_radius(nf: &NormalizedFunction, domain: &TargetDomain) -> Result<RadiusResult> {
    radius_for_domain(nf, domain, Functional::Convex, &RootOptions::default())
}

pub fn convex_radius_with(
    nf: &NormalizedFunction,
    domain: &TargetDomain,
    opts: &RootOptions,
) -> Result<RadiusResult> {
    radius_for_domain(nf, domain, Functional::Convex, opts)
}

/// Kernel and its scaled derivatives at real `r`: `(κ, rκ′, r²κ″)`, up to
/// the common positive factor `1/B(0)`.
fn raw_kernel(nf: &NormalizedFunction, r: f64) -> Result<(f64, f64, f64)> {
    let ser = nf.family().series();
    let s = nf.family().scale();
    let x = match nf.form() {
        Form::H => -s * r,
        _ => -s * r * r,
    };
    let sums = kernel_sums(&ser, Complex64::new(x, 0.0), 3)?;
    let [b0, b1, b2] = sums.vals.map(|v| v.re);
    Ok(match nf.form() {
        Form::H => (b0, b1, b2),
        _ => (b0, 2.0 * b1, 4.0 * b2 + 2.0 * b1),
    })
}

/// Left side of the radius equation in its polynomial form, built from
/// the kernel and its derivatives without forming log-derivatives:
///
/// - starlike: `rκ′ + wακ`
/// - convex, `f = zκ`: `r f″ + α f′ = (2 + α) rκ′ + r²κ″ + ακ`
/// - convex, `f = z κ^{1/w}` via `Ψ = z^w κ` and `P = wκ + rκ′`:
///   `(w − 1 + α) P κ + ((w + 1) rκ′ + r²κ″) κ + (1/w − 1) P²`
///
/// Positive at `r = 0`; changes sign at the radius.
pub fn display_equation(
    nf: &NormalizedFunction,
    which: Functional,
    alpha: f64,
    r: f64,
) -> Result<f64> {
    let (k, k1, k2) = raw_kernel(nf, r)?;
    let w = nf.weight();
    Ok(match which {
        Functional::Starlike => k1 + w * alpha * k,
        Functional::Convex if w == 1.0 => (2.0 + alpha) * k1 + k2 + alpha * k,
        Functional::Convex => {
            let p = w * k + k1;
            (w - 1.0 + alpha) * p * k + ((w + 1.0) * k1 + k2) * k + (1.0 / w - 1.0) * p * p
        }
    })
}

/// Radius from the polynomial form of the equation by pure bisection on
/// its sign, to absolute width `tol`.
pub fn display_radius(
    nf: &NormalizedFunction,
    which: Functional,
    alpha: f64,
    tol: f64,
) -> Result<f64> {
    check_alpha(alpha)?;
    let opts = RootOptions::default();
    let (mut a, mut b) = (opts.lower, opts.upper_fraction * singularity(nf, which)?);
    let sa = display_equation(nf, which, alpha, a)?.signum();
    if display_equation(nf, which, alpha, b)?.signum() == sa {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if display_equation(nf, which, alpha, m)?.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// `c` in `T`: `2/w`, `2` or `1`.
fn sum_coefficient(nf: &NormalizedFunction) -> f64 {
    match nf.form() {
        Form::H => 1.0,
        _ => 2.0 / nf.weight(),
    }
}

/// `T` evaluated without zeros: with `P(y) = Σ y/(Z − y) = (1 − S(r))/c`
/// and `Q(y) = Σ y/(Z + y) = (S(z₋) − 1)/c`, where `z₋ = ir` (even forms)
/// or `−r` (h-form),
/// `T = ½[(1 + σ)(1 − S(r)) + (1 − σ)(S(z₋) − 1)] − σ`.
pub fn strongly_starlike_t(nf: &NormalizedFunction, epsilon: f64, r: f64) -> Result<f64> {
    let sigma = (std::f64::consts::FRAC_PI_2 * epsilon).sin();
    let s_plus = starlike_functional(nf, Complex64::new(r, 0.0))?.re;
    let zm = match nf.form() {
        Form::H => Complex64::new(-r, 0.0),
        _ => Complex64::new(0.0, r),
    };
    let s_minus = starlike_functional(nf, zm)?.re;
    Ok(0.5 * ((1.0 + sigma) * (1.0 - s_plus) + (1.0 - sigma) * (s_minus - 1.0)) - sigma)
}

/// Strongly-starlike radius from the series alone (no zero table).
pub fn strongly_starlike_radius_direct(
    nf: &NormalizedFunction,
    epsilon: f64,
) -> Result<RadiusResult> {
    check_epsilon(epsilon)?;
    let opts = RootOptions::default();
    let hi = opts.upper_fraction * nf.starlike_singularity()?;
    let root = hybrid_root(
        |r| strongly_starlike_t(nf, epsilon, r),
        opts.lower,
        hi,
        &opts,
    )?;
    let mut notes = family_notes(nf);
    notes.push("series route (no zero table)".into());
    Ok(RadiusResult {
        radius: root.x,
        residual: root.residual,
        bracket: (opts.lower, hi),
        iterations: root.iterations,
        alpha_used: None,
        alpha_source: None,
        epsilon: Some(epsilon),
        derivation: derivation(nf, &Problem::StronglyStarlike { epsilon }),
        notes,
    })
}

/// Number of remainder moments expanded explicitly in the tail of `T`.
const TAIL_ORDER: usize = 4;
/// Root enclosures wider than this trigger a longer table.
pub const ENCLOSURE_TOL: f64 = 1e-8;
const MAX_TABLE: usize = 3200;

/// Lower and upper bounds on `T(y)` from a table.
///
/// Each missing term is `y/(Z − y) − (1 − σ) y²/(Z² − y²)
/// = Σ_k a_k (y/Z)^k` with `a_k = 1` for odd `k` and `σ` for even `k`, so
/// the tail is `Σ_{k≤K} a_k y^k t_k` plus a remainder in
/// `[0, y^{K+1} t_{K+1}/(1 − y/Z_N)]`.
fn t_bounds(
    sq: &[f64],
    moments: &[crate::zeros::TailMoment],
    c: f64,
    sigma: f64,
    y: f64,
) -> (f64, f64) {
    let mut partial = 0.0;
    for &z in sq {
        partial += (z * y + sigma * y * y) / (z * z - y * y);
    }
    let (mut lo, mut hi) = (partial, partial);
    let mut yk = 1.0;
    for (i, m) in moments.iter().take(TAIL_ORDER).enumerate() {
        yk *= y;
        let a = if (i + 1) % 2 == 1 { 1.0 } else { sigma };
        lo += a * yk * m.lower();
        hi += a * yk * m.upper();
    }
    if let (Some(m), Some(&zn)) = (moments.get(TAIL_ORDER), sq.last()) {
        hi += yk * y * m.upper() / (1.0 - y / zn);
    }
    (c * lo - sigma, c * hi - sigma)
}

/// Strongly-starlike radius from the zero table: the roots of the upper
/// and lower bounds on `T` enclose the radius; the table is doubled until
/// they agree to [`ENCLOSURE_TOL`]. The reported radius solves the
/// midpoint of the two bounds.
pub fn strongly_starlike_radius(
    nf: &NormalizedFunction,
    epsilon: f64,
    table: &ZeroTable,
) -> Result<RadiusResult> {
    strongly_starlike_radius_with(nf, epsilon, table, &RootOptions::default())
}

pub fn strongly_starlike_radius_with(
    nf: &NormalizedFunction,
    epsilon: f64,
    table: &ZeroTable,
    opts: &RootOptions,
) -> Result<RadiusResult> {
    check_epsilon(epsilon)?;
    if table.kind() != ZeroKind::Base || table.family() != nf.family() {
        return Err(Error::Table(format!(
            "a base-kind table of {} is required",
            nf.family().name()
        )));
    }
    let sigma = (std::f64::consts::FRAC_PI_2 * epsilon).sin();
    let c = sum_coefficient(nf);
    let opts = *opts;
    let mut owned: Option<ZeroTable> = None;
    loop {
        let t = owned.as_ref().unwrap_or(table);
        let tails = t.tails()?;
        if !tails.consistent {
            return Err(Error::Table(format!(
                "{} zero table is inconsistent with a factorization over real zeros",
                nf.family().name()
            )));
        }
        let sq = t.squares();
        let moments = t.tail_moments(TAIL_ORDER + 1)?;
        let hi = opts.upper_fraction * nf.radius_of_square(sq[0]);
        let y_of = |r: f64| nf.y_of(Complex64::new(r, 0.0)).re;
        let lower_root = hybrid_root(
            |r| Ok(t_bounds(&sq, &moments, c, sigma, y_of(r)).1),
            opts.lower,
            hi,
            &opts,
        )?;
        let upper_root = hybrid_root(
            |r| Ok(t_bounds(&sq, &moments, c, sigma, y_of(r)).0),
            opts.lower,
            hi,
            &opts,
        )?;
        let width = upper_root.x - lower_root.x;
        if width <= ENCLOSURE_TOL || t.is_complete() {
            let mid = |r: f64| {
                let (l, h) = t_bounds(&sq, &moments, c, sigma, y_of(r));
                Ok(0.5 * (l + h))
            };
            let root = hybrid_root(mid, opts.lower, hi, &opts)?;
            let mut notes = family_notes(nf);
            notes.push(format!(
                "{} zeros, radius enclosed in [{:.15e}, {:.15e}]",
                t.len(),
                lower_root.x,
                upper_root.x
            ));
            return Ok(RadiusResult {
                radius: root.x,
                residual: root.residual,
                bracket: (opts.lower, hi),
                iterations: root.iterations + lower_root.iterations + upper_root.iterations,
                alpha_used: None,
                alpha_source: None,
                epsilon: Some(epsilon),
                derivation: derivation(nf, &Problem::StronglyStarlike { epsilon }),
                notes,
            });
        }
        let n = 2 * t.len();
        if n > MAX_TABLE {
            return Err(Error::Table(format!(
                "radius enclosure {width:e} still wider than {ENCLOSURE_TOL:e} with {} zeros",
                t.len()
            )));
        }
        owned = Some(positive_zeros_with(
            nf.family(),
            ZeroKind::Base,
            n,
            &ZeroOptions::with_ceiling(f64::INFINITY),
        )?);
    }
}

/// Default table length for strongly-starlike queries.
pub const DEFAULT_TABLE_LEN: usize = 100;

/// Dispatches a query; strongly-starlike queries build a base table of
/// `table_len` zeros.
pub fn solve(query: &RadiusQuery, table_len: usize) -> Result<RadiusResult> {
    solve_with(query, table_len, &RootOptions::default())
}

pub fn solve_with(
    query: &RadiusQuery,
    table_len: usize,
    opts: &RootOptions,
) -> Result<RadiusResult> {
    match query.problem {
        Problem::Starlike { domain } => starlike_radius_with(&query.nf, &domain, opts),
        Problem::Convex { domain } => convex_radius_with(&query.nf, &domain, opts),
        Problem::StronglyStarlike { epsilon } => {
            check_epsilon(epsilon)?;
            let table = base_table(query.nf.family(), table_len)?;
            strongly_starlike_radius_with(&query.nf, epsilon, &table, opts)
        }
    }
}

/// Base table of up to `n` zeros (Legendre tables stop at the degree).
pub fn base_table(family: &crate::family::FunctionFamily, n: usize) -> Result<ZeroTable> {
    let n = match *family.params() {
        Family::Legendre { n: deg } => n.min(deg as usize - 1).max(1),
        _ => n,
    };
    positive_zeros_with(
        family,
        ZeroKind::Base,
        n,
        &ZeroOptions::with_ceiling(f64::INFINITY),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FunctionFamily;

    fn disk(a: f64) -> TargetDomain {
        TargetDomain::Disk { alpha: a }
    }

    fn legendre3() -> NormalizedFunction {
        NormalizedFunction::new(FunctionFamily::legendre(2).unwrap(), Form::G).unwrap()
    }

    #[test]
    fn legendre_closed_forms() {
        let nf = legendre3();
        let s = starlike_radius(&nf, &disk(1.0)).unwrap();
        assert!((s.radius - 0.2f64.sqrt()).abs() < 1e-12, "{s:?}");
        assert_eq!(s.derivation, Derivation::FrameworkDerived);
        let c = convex_radius(&nf, &disk(1.0)).unwrap();
        assert!((c.radius - (1.0f64 / 15.0).sqrt()).abs() < 1e-12);
        assert_eq!(c.derivation, Derivation::Theorem);
        // r² = α/(10 + 5α)
        let a = 2.0 - 2f64.sqrt();
        let c = convex_radius(&nf, &TargetDomain::Lune).unwrap();
        assert!((c.radius - (a / (10.0 + 5.0 * a)).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn struve_half_closed_form() {
        // S(r) = r cot(r/2) − 1 = 1 − α
        let nf = NormalizedFunction::new(FunctionFamily::struve(0.5).unwrap(), Form::G).unwrap();
        let r = starlike_radius(&nf, &disk(1.0)).unwrap().radius;
        assert!((r / (r / 2.0).tan() - 1.0).abs() < 1e-11, "{r}");
    }

    #[test]
    fn small_alpha_gives_small_radius() {
        let nf =
            NormalizedFunction::new(FunctionFamily::wright(1.0, 1.0).unwrap(), Form::G).unwrap();
        let r = convex_radius(&nf, &disk(1e-6)).unwrap();
        assert!(r.radius < 1e-3);
    }

    #[test]
    fn hybrid_root_rejects_missing_sign_change() {
        let e = hybrid_root(|x| Ok(x * x + 1.0), 0.0, 1.0, &RootOptions::default());
        assert!(matches!(e, Err(Error::NoSignChange { .. })));
        let r = hybrid_root(|x| Ok(2.0 - x * x), 0.0, 2.0, &RootOptions::default()).unwrap();
        assert!((r.x - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn display_form_agrees() {
        let cases = [
            NormalizedFunction::new(FunctionFamily::wright(0.5, 2.0).unwrap(), Form::F).unwrap(),
            NormalizedFunction::new(FunctionFamily::lommel(0.3).unwrap(), Form::H).unwrap(),
            legendre3(),
        ];
        for nf in cases {
            for which in [Functional::Starlike, Functional::Convex] {
                let (root, _) = solve_functional(&nf, which, 0.5, &RootOptions::default()).unwrap();
                let d = display_radius(&nf, which, 0.5, 1e-13).unwrap();
                assert!(
                    (root.x - d).abs() < 1e-10,
                    "{nf:?} {which:?}: {} vs {d}",
                    root.x
                );
            }
        }
    }

    #[test]
    fn epsilon_one_matches_alpha_one() {
        let nf =
            NormalizedFunction::new(FunctionFamily::wright(1.0, 1.0).unwrap(), Form::G).unwrap();
        let table = base_table(nf.family(), 50).unwrap();
        let t = strongly_starlike_radius(&nf, 1.0, &table).unwrap();
        let s = starlike_radius(&nf, &disk(1.0)).unwrap();
        assert!(
            (t.radius - s.radius).abs() < 1e-9,
            "{} vs {}",
            t.radius,
            s.radius
        );
        let d = strongly_starlike_radius_direct(&nf, 0.5).unwrap();
        let t = strongly_starlike_radius(&nf, 0.5, &table).unwrap();
        assert!(
            (t.radius - d.radius).abs() < 1e-9,
            "{} vs {}",
            t.radius,
            d.radius
        );
    }

    #[test]
    fn ml_outside_wi_is_flagged() {
        let nf = NormalizedFunction::new(
            FunctionFamily::mittag_leffler(1.5, 1.0, 1.0).unwrap(),
            Form::G,
        )
        .unwrap();
        let r = starlike_radius(&nf, &disk(1.0)).unwrap();
        assert!(r.notes.iter().any(|n| n.contains("W_i")), "{r:?}");
    }
}

//! Ma-Minda target domains, their disk radii `α`, and the parameter set
//! on which the Mittag-Leffler kernel has only real zeros.

use std::collections::HashSet;
use std::f64::consts::{E, PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A target domain `φ(𝔻)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "domain", rename_all = "snake_case")]
pub enum TargetDomain {
    /// `(1 + Dz)/(1 + Ez)` with `−1 ≤ E < D ≤ 1`.
    Janowski {
        d: f64,
        e: f64,
    },
    RlCrescent,
    /// `√(1 + z)`.
    Lemniscate,
    /// `e^z`.
    Exponential,
    /// `z + √(1 + z²)`.
    Lune,
    /// `1 + z e^z`.
    CardioidExp,
    /// `2/(1 + e^{−z})`.
    Sigmoid,
    /// `1 + sin z`.
    Sine,
    /// Conic region `Ω_κ`, `κ ≥ 0`.
    Conic {
        kappa: f64,
    },
    /// `1 + αz`.
    Disk {
        alpha: f64,
    },
}

impl TargetDomain {
    pub fn janowski(d: f64, e: f64) -> Result<Self> {
        let t = TargetDomain::Janowski { d, e };
        t.validate()?;
        Ok(t)
    }

    pub fn conic(kappa: f64) -> Result<Self> {
        let t = TargetDomain::Conic { kappa };
        t.validate()?;
        Ok(t)
    }

    pub fn disk(alpha: f64) -> Result<Self> {
        let t = TargetDomain::Disk { alpha };
        t.validate()?;
        Ok(t)
    }

    /// Checks parameter constraints (needed after deserializing).
    pub fn validate(&self) -> Result<()> {
        match *self {
            TargetDomain::Janowski { d, e } => {
                if !(d.is_finite() && e.is_finite() && -1.0 <= e && e < d && d <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "Janowski needs -1 <= E < D <= 1, got D = {d}, E = {e}"
                    )));
                }
            }
            TargetDomain::Conic { kappa } => {
                if !(kappa.is_finite() && kappa >= 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "conic domain needs kappa >= 0, got {kappa}"
                    )));
                }
            }
            TargetDomain::Disk { alpha } => {
                if !(alpha > 0.0 && alpha <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "disk radius alpha must lie in (0, 1], got {alpha}"
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            TargetDomain::Janowski { .. } => "janowski",
            TargetDomain::RlCrescent => "rl_crescent",
            TargetDomain::Lemniscate => "lemniscate",
            TargetDomain::Exponential => "exponential",
            TargetDomain::Lune => "lune",
            TargetDomain::CardioidExp => "cardioid_exp",
            TargetDomain::Sigmoid => "sigmoid",
            TargetDomain::Sine => "sine",
            TargetDomain::Conic { .. } => "conic",
            TargetDomain::Disk { .. } => "disk",
        }
    }

    /// Every parameter-free domain plus representative parametrized ones.
    pub fn catalog() -> Vec<TargetDomain> {
        vec![
            TargetDomain::Janowski { d: 1.0, e: -1.0 },
            TargetDomain::Janowski { d: 0.5, e: -0.5 },
            TargetDomain::Janowski { d: 0.6, e: 0.0 },
            TargetDomain::RlCrescent,
            TargetDomain::Lemniscate,
            TargetDomain::Exponential,
            TargetDomain::Lune,
            TargetDomain::CardioidExp,
            TargetDomain::Sigmoid,
            TargetDomain::Sine,
            TargetDomain::Conic { kappa: 0.0 },
            TargetDomain::Conic { kappa: 1.0 },
            TargetDomain::Conic { kappa: 2.0 },
            TargetDomain::Disk { alpha: 0.4 },
        ]
    }

    /// Whether `φ` has an explicit formula here (the conic maps for
    /// `κ ∉ {0, 1}` need elliptic integrals and are not provided).
    pub fn boundary_evaluable(&self) -> bool {
        match *self {
            TargetDomain::Conic { kappa } => kappa == 0.0 || kappa == 1.0,
            _ => true,
        }
    }

    /// `φ(z)`.
    pub fn phi(&self, z: Complex64) -> Result<Complex64> {
        self.validate()?;
        let one = Complex64::new(1.0, 0.0);
        Ok(match *self {
            TargetDomain::Janowski { d, e } => (one + d * z) / (one + e * z),
            TargetDomain::RlCrescent => {
                let k = SQRT_2 - 1.0;
                SQRT_2 - k * ((one - z) / (one + 2.0 * k * z)).sqrt()
            }
            TargetDomain::Lemniscate => (one + z).sqrt(),
            TargetDomain::Exponential => z.exp(),
            TargetDomain::Lune => z + (one + z * z).sqrt(),
            TargetDomain::CardioidExp => one + z * z.exp(),
            TargetDomain::Sigmoid => 2.0 / (one + (-z).exp()),
            TargetDomain::Sine => one + z.sin(),
            TargetDomain::Conic { kappa } if kappa == 0.0 => (one + z) / (one - z),
            TargetDomain::Conic { kappa } if kappa == 1.0 => {
                let s = z.sqrt();
                let l = ((one + s) / (one - s)).ln();
                one + 2.0 / (PI * PI) * l * l
            }
            TargetDomain::Conic { kappa } => {
                return Err(Error::Unsupported(format!(
                    "no boundary map for the conic domain with kappa = {kappa}"
                )))
            }
            TargetDomain::Disk { alpha } => one + alpha * z,
        })
    }
}

/// Where an `α` value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaSource {
    ClosedForm,
    NumericOracle,
}

/// Disk radius `α` of a domain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaResult {
    pub alpha: f64,
    pub source: AlphaSource,
    /// `θ` minimizing `|φ(e^{iθ}) − 1|` (numeric results only).
    pub boundary_argmin: Option<f64>,
    /// Value printed in the literature when it differs from `alpha`.
    pub printed: Option<f64>,
    pub warning: Option<String>,
}

// Closed-form disk radii, correctly rounded.
/// `√(2 − 2√2 + √(2√2 − 2))`.
pub const RL_ALPHA: f64 = 0.285_924_109_473_588_437_030_072_304_146;
/// `√2 − 1`.
pub const LEMNISCATE_ALPHA: f64 = 0.414_213_562_373_095_048_801_688_724_210;
/// `1 − 1/e`.
pub const EXPONENTIAL_ALPHA: f64 = 0.632_120_558_828_557_678_404_476_229_839;
/// `2 − √2`.
pub const LUNE_ALPHA: f64 = 0.585_786_437_626_904_951_198_311_275_790;
/// `1/e`.
pub const CARDIOID_EXP_ALPHA: f64 = 0.367_879_441_171_442_321_595_523_770_161;
/// `(e − 1)/(e + 1)`.
pub const SIGMOID_ALPHA: f64 = 0.462_117_157_260_009_758_502_318_483_644;
/// `sin 1`.
pub const SINE_ALPHA: f64 = 0.841_470_984_807_896_506_652_502_321_630;

/// Closed-form `α`.
pub fn alpha_of(domain: &TargetDomain) -> Result<AlphaResult> {
    domain.validate()?;
    let mut printed = None;
    let mut warning = None;
    let alpha = match *domain {
        TargetDomain::Janowski { d, e } => (d - e) / (1.0 + e.abs()),
        TargetDomain::RlCrescent => RL_ALPHA,
        TargetDomain::Lemniscate => LEMNISCATE_ALPHA,
        TargetDomain::Exponential => {
            printed = Some(E - 1.0);
            warning = Some(
                "the published value e - 1 exceeds 1; using 1 - 1/e, which satisfies phi(-1) = 1 - alpha"
                    .to_string(),
            );
            EXPONENTIAL_ALPHA
        }
        TargetDomain::Lune => LUNE_ALPHA,
        TargetDomain::CardioidExp => CARDIOID_EXP_ALPHA,
        TargetDomain::Sigmoid => SIGMOID_ALPHA,
        TargetDomain::Sine => SINE_ALPHA,
        TargetDomain::Conic { kappa } => 1.0 / (kappa + 1.0),
        TargetDomain::Disk { alpha } => alpha,
    };
    Ok(AlphaResult {
        alpha,
        source: AlphaSource::ClosedForm,
        boundary_argmin: None,
        printed,
        warning,
    })
}

/// `φ(e^{iθ})`.
pub fn phi_boundary(domain: &TargetDomain, theta: f64) -> Result<Complex64> {
    domain.phi(Complex64::from_polar(1.0, theta))
}

/// `min_θ |φ(e^{iθ}) − 1|` over `[0, π]`: a grid scan followed by
/// golden-section refinement around the best grid point.
pub fn alpha_numeric(domain: &TargetDomain, grid: usize) -> Result<AlphaResult> {
    if !domain.boundary_evaluable() {
        return Err(Error::Unsupported(format!(
            "no boundary map for {}",
            domain.name()
        )));
    }
    if let TargetDomain::Disk { alpha } = *domain {
        return Ok(AlphaResult {
            alpha,
            source: AlphaSource::NumericOracle,
            boundary_argmin: Some(0.0),
            printed: None,
            warning: None,
        });
    }
    let grid = grid.max(8);
    let dist = |t: f64| -> Result<f64> {
        let d = (phi_boundary(domain, t)? - 1.0).norm();
        Ok(if d.is_nan() { f64::INFINITY } else { d })
    };
    let h = PI / grid as f64;
    let mut best = (f64::INFINITY, 0);
    for i in 0..=grid {
        let d = dist(i as f64 * h)?;
        // Ties go to the larger angle, i.e. toward z = −1.
        if d <= best.0 {
            best = (d, i);
        }
    }
    let i = best.1;
    let mut a = (i as f64 - 1.0).max(0.0) * h;
    let mut b = (i as f64 + 1.0).min(grid as f64) * h;
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (dist(c)?, dist(d)?);
    while b - a > 1e-12 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = dist(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = dist(d)?;
        }
    }
    let mut theta = 0.5 * (a + b);
    let mut alpha = dist(theta)?;
    // The minimum can sit on an endpoint that the bracket only approaches.
    for t in [i as f64 * h, a, b] {
        let v = dist(t)?;
        if v < alpha {
            alpha = v;
            theta = t;
        }
    }
    Ok(AlphaResult {
        alpha,
        source: AlphaSource::NumericOracle,
        boundary_argmin: Some(theta),
        printed: None,
        warning: None,
    })
}

/// A point `(1/μ, ν)` of the Mittag-Leffler parameter plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub inv_mu: f64,
    pub nu: f64,
}

impl ParamPoint {
    pub fn new(mu: f64, nu: f64) -> Self {
        ParamPoint {
            inv_mu: 1.0 / mu,
            nu,
        }
    }

    pub fn mu(&self) -> f64 {
        1.0 / self.inv_mu
    }
}

/// `A: (1/μ, ν) ↦ (1/(2μ), ν)`.
pub fn transform_a(p: ParamPoint) -> ParamPoint {
    ParamPoint {
        inv_mu: p.inv_mu / 2.0,
        nu: p.nu,
    }
}

/// `B: (1/μ, ν) ↦ (1/(2μ), μ + ν)`.
pub fn transform_b(p: ParamPoint) -> ParamPoint {
    ParamPoint {
        inv_mu: p.inv_mu / 2.0,
        nu: p.mu() + p.nu,
    }
}

/// `C: (1/μ, ν) ↦ (1/μ, ν − 1)` if `ν > 1`, identity otherwise.
pub fn transform_c(p: ParamPoint) -> ParamPoint {
    if p.nu > 1.0 {
        ParamPoint {
            inv_mu: p.inv_mu,
            nu: p.nu - 1.0,
        }
    } else {
        p
    }
}

/// Slack on the closed interval ends of the base region.
const EDGE: f64 = 1e-12;

/// `1 < μ < 2` and `ν ∈ [μ − 1, 1] ∪ [μ, 2]`.
pub fn in_wc(mu: f64, nu: f64) -> bool {
    1.0 < mu
        && mu < 2.0
        && ((mu - 1.0 - EDGE <= nu && nu <= 1.0 + EDGE) || (mu - EDGE <= nu && nu <= 2.0 + EDGE))
}

/// Membership in `A(W_c) ∪ B(W_c)`.
pub fn in_wb(mu: f64, nu: f64) -> bool {
    let m = mu / 2.0;
    in_wc(m, nu) || in_wc(m, nu - m)
}

/// Outcome of the bounded closure search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WiMembership {
    /// Reached from the base set in `steps` transforms.
    Member { steps: usize },
    /// No chain of at most `depth` transforms reaches the point.
    NonmemberAtDepth { depth: usize },
    /// The search budget ran out before `depth` was exhausted.
    Unknown { explored: usize },
}

impl WiMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, WiMembership::Member { .. })
    }
}

pub const DEFAULT_WI_DEPTH: usize = 32;
const WI_STATE_BUDGET: usize = 1_000_000;

/// Whether `(1/μ, ν)` lies in the closure of `W_b` under `A`, `B`, `C`,
/// searched backwards through preimages for at most `depth` steps.
///
/// Preimages: `A⁻¹(μ, ν) = (μ/2, ν)`, `B⁻¹(μ, ν) = (μ/2, ν − μ/2)`,
/// `C⁻¹(μ, ν) ∋ (μ, ν + 1)`, each kept only inside `μ > 1, ν > 0`.
/// Base points have `2 < μ < 4` and `ν < 4`, and backward steps lower `ν`
/// by less than `μ` in total, so states with `μ ≤ 2` or `ν ≥ μ + 4`
/// cannot lead anywhere and are dropped.
pub fn wi_membership(mu: f64, nu: f64, depth: usize) -> WiMembership {
    let viable = |m: f64, n: f64| m > 2.0 && n > 0.0 && n < m + 4.0;
    let key = |m: f64, n: f64| (m.to_bits(), (n * 2f64.powi(40)).round() as i64);
    let mut seen = HashSet::new();
    let mut frontier = vec![(mu, nu)];
    seen.insert(key(mu, nu));
    for step in 0..=depth {
        if frontier.iter().any(|&(m, n)| in_wb(m, n)) {
            return WiMembership::Member { steps: step };
        }
        if step == depth {
            break;
        }
        let mut next = Vec::new();
        for &(m, n) in &frontier {
            let h = m / 2.0;
            for (pm, pn) in [(h, n), (h, n - h), (m, n + 1.0)] {
                if viable(pm, pn) && seen.insert(key(pm, pn)) {
                    next.push((pm, pn));
                }
            }
        }
        if seen.len() > WI_STATE_BUDGET {
            return WiMembership::Unknown {
                explored: seen.len(),
            };
        }
        frontier = next;
    }
    WiMembership::NonmemberAtDepth { depth }
}

//! Positive zeros of the family kernels and their derivative kernels.
//!
//! All four table kinds are functions of a scan variable `t` through
//! `x = -s t²`:
//!
//! | kind                 | function of `t`      | zeros are                          |
//! |----------------------|----------------------|------------------------------------|
//! | `Base`               | `B(x)`               | zeros of the even kernel           |
//! | `WeightedDerivative` | `w B(x) + 2x B′(x)`  | zeros of `(z^w · kernel)′`         |
//! | `GPrime`             | `B(x) + 2x B′(x)`    | zeros of `g′`                      |
//! | `HPrime`             | `B(x) + x B′(x)`     | square roots of the zeros of `h′`  |
//!
//! so every table is used through its squares `Z_n = t_n²`, which are the
//! zeros of the corresponding function of `y = t²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FunctionFamily};
use crate::series::legendre_recurrence;
use crate::series::precise::{PreciseSeries, Scaled};

/// Which function a table holds the zeros of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroKind {
    Base,
    WeightedDerivative,
    GPrime,
    HPrime,
}

impl ZeroKind {
    pub fn name(self) -> &'static str {
        match self {
            ZeroKind::Base => "base",
            ZeroKind::WeightedDerivative => "weighted_derivative",
            ZeroKind::GPrime => "g_prime",
            ZeroKind::HPrime => "h_prime",
        }
    }

    /// Coefficients `(a0, a1)` of `a0 B + a1 x B′`.
    fn combination(self, family: &FunctionFamily) -> Result<(f64, f64)> {
        Ok(match self {
            ZeroKind::Base => (1.0, 0.0),
            ZeroKind::WeightedDerivative => {
                let w = family.f_weight().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "{} has no weighted derivative kernel",
                        family.name()
                    ))
                })?;
                (w, 2.0)
            }
            ZeroKind::GPrime => (1.0, 2.0),
            ZeroKind::HPrime => (1.0, 1.0),
        })
    }

    /// Multiplier of the j-th Taylor coefficient (in `y = t²`) relative to the base kernel.
    fn taylor_multiplier(self, j: usize, w: f64) -> f64 {
        let j = j as f64;
        match self {
            ZeroKind::Base => 1.0,
            ZeroKind::WeightedDerivative => w + 2.0 * j,
            ZeroKind::GPrime => 1.0 + 2.0 * j,
            ZeroKind::HPrime => 1.0 + j,
        }
    }
}

impl std::str::FromStr for ZeroKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(ZeroKind::Base),
            "weighted_derivative" | "weighted" => Ok(ZeroKind::WeightedDerivative),
            "g_prime" => Ok(ZeroKind::GPrime),
            "h_prime" => Ok(ZeroKind::HPrime),
            other => Err(Error::InvalidParameter(format!(
                "unknown zero kind '{other}'"
            ))),
        }
    }
}

/// Scan controls.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroOptions {
    /// Largest abscissa scanned; `None` uses min(50 · first-zero estimate, 500).
    pub ceiling: Option<f64>,
    pub start: f64,
    pub min_step: f64,
    /// Step as a fraction of the previous zero gap.
    pub gap_fraction: f64,
    /// Bracket width (relative to max(1, t)) at which refinement hands over to Newton.
    pub rel_width: f64,
    pub newton_steps: usize,
    /// Give up once this many of the largest zero gaps seen so far (at
    /// least the first-zero estimate) pass without a new zero; kernels
    /// outside their real-zero range run dry.
    pub silence_gaps: f64,
}

impl Default for ZeroOptions {
    fn default() -> Self {
        ZeroOptions {
            ceiling: None,
            start: 1e-3,
            min_step: 0.05,
            gap_fraction: 0.1,
            rel_width: 1e-13,
            newton_steps: 3,
            silence_gaps: 20.0,
        }
    }
}

impl ZeroOptions {
    pub fn with_ceiling(ceiling: f64) -> Self {
        ZeroOptions {
            ceiling: Some(ceiling),
            ..Default::default()
        }
    }
}

/// First `N` positive zeros with residual certificates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable {
    family: FunctionFamily,
    kind: ZeroKind,
    zeros: Vec<f64>,
    /// `|f(t)| / |t f′(t)|` at each zero; for a double zero `|f(t)|` relative
    /// to the largest of `B`, `xB′`, `x²B″`.
    residuals: Vec<f64>,
    double: Vec<bool>,
    scan_ceiling: f64,
    /// Set when the table holds every positive zero (polynomial kernels).
    complete: bool,
}

impl ZeroTable {
    pub fn family(&self) -> &FunctionFamily {
        &self.family
    }

    pub fn kind(&self) -> ZeroKind {
        self.kind
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// True at entries that belong to a double zero (each such zero is listed twice).
    pub fn multiplicity_flags(&self) -> &[bool] {
        &self.double
    }

    pub fn has_double_zeros(&self) -> bool {
        self.double.iter().any(|&d| d)
    }

    pub fn scan_ceiling(&self) -> f64 {
        self.scan_ceiling
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// `Z_n = t_n²`.
    pub fn squares(&self) -> Vec<f64> {
        self.zeros.iter().map(|t| t * t).collect()
    }

    /// Exact `Σ 1/Z_n` and `Σ 1/Z_n²` over all zeros, from Taylor coefficients.
    pub fn power_sums(&self) -> Result<(f64, f64)> {
        power_sums(&self.family, self.kind)
    }

    /// Remainders `Σ_{n>N} Z_n^{−k}` for `k = 1..=order` (all zero for complete tables).
    pub fn tail_moments(&self, order: usize) -> Result<Vec<TailMoment>> {
        let p = power_sums_upto(&self.family, self.kind, order)?;
        let sq = self.squares();
        let root_n = (sq.len() as f64).sqrt().max(1.0);
        Ok(p.iter()
            .enumerate()
            .map(|(i, &pk)| {
                let k = (i + 1) as i32;
                if self.complete {
                    return TailMoment {
                        value: 0.0,
                        slack: 0.0,
                    };
                }
                let sk: f64 = sq.iter().map(|z| z.powi(-k)).sum();
                TailMoment {
                    value: pk - sk,
                    slack: 8.0 * k as f64 * f64::EPSILON * (pk.abs() + sk) * root_n,
                }
            })
            .collect())
    }

    /// Bounds on the sums over the zeros missing from the table.
    pub fn tails(&self) -> Result<TailSums> {
        let (p1, p2) = self.power_sums()?;
        let sq = self.squares();
        let s1: f64 = sq.iter().map(|z| 1.0 / z).sum();
        let s2: f64 = sq.iter().map(|z| 1.0 / (z * z)).sum();
        let (t1, t2) = if self.complete {
            (0.0, 0.0)
        } else {
            (p1 - s1, p2 - s2)
        };
        let slack1 = 8.0 * f64::EPSILON * (p1.abs() + s1) * (sq.len() as f64).sqrt().max(1.0);
        let slack2 = 8.0 * f64::EPSILON * (p2.abs() + s2) * (sq.len() as f64).sqrt().max(1.0);
        let zn = *sq.last().unwrap_or(&f64::INFINITY);
        let consistent = self.complete
            || (t1 >= -slack1 && t2 >= -slack2 && t2 <= t1.max(0.0) / zn + slack1 / zn + slack2);
        Ok(TailSums {
            first: t1.max(0.0) + slack1,
            second: t2.max(0.0) + slack2,
            raw_first: t1,
            raw_second: t2,
            last_square: zn,
            consistent,
        })
    }
}

/// Remainders `Σ_{n>N} 1/Z_n` and `Σ_{n>N} 1/Z_n²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailSums {
    /// Upper bound on `Σ_{n>N} 1/Z_n` (rounding slack included).
    pub first: f64,
    /// Upper bound on `Σ_{n>N} 1/Z_n²`.
    pub second: f64,
    pub raw_first: f64,
    pub raw_second: f64,
    /// `Z_N`.
    pub last_square: f64,
    /// Whether the remainders are compatible with the missing zeros all
    /// lying beyond `Z_N` on the positive axis.
    pub consistent: bool,
}

/// `Σ 1/Z_n` and `Σ 1/Z_n²` for the function of `y` behind `kind`.
pub fn power_sums(family: &FunctionFamily, kind: ZeroKind) -> Result<(f64, f64)> {
    let p = power_sums_upto(family, kind, 2)?;
    Ok((p[0], p[1]))
}

/// `p_k = Σ_n Z_n^{−k}` for `k = 1..=order`, from the Taylor coefficients
/// `a_j` of `∏(1 − y/Z_n)` by Newton's identities
/// `p_k = −k a_k − Σ_{i<k} a_i p_{k−i}`.
pub fn power_sums_upto(family: &FunctionFamily, kind: ZeroKind, order: usize) -> Result<Vec<f64>> {
    kind.combination(family)?;
    let w = family.f_weight().unwrap_or(1.0);
    let ser = family.series();
    let s = family.scale();
    let d: Vec<f64> = (0..=order)
        .map(|j| {
            let (l, sg) = ser.ln_coef(j);
            let c = if l == f64::NEG_INFINITY {
                0.0
            } else {
                sg * l.exp()
            };
            c * (-s).powi(j as i32) * kind.taylor_multiplier(j, w)
        })
        .collect();
    let a: Vec<f64> = d.iter().map(|v| v / d[0]).collect();
    let mut p = vec![0.0; order + 1];
    for k in 1..=order {
        let mut v = -(k as f64) * a[k];
        for i in 1..k {
            v -= a[i] * p[k - i];
        }
        p[k] = v;
    }
    p.remove(0);
    Ok(p)
}

/// Remainder `Σ_{n>N} Z_n^{−k}` with an absolute rounding slack.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailMoment {
    pub value: f64,
    pub slack: f64,
}

impl TailMoment {
    pub fn lower(&self) -> f64 {
        (self.value - self.slack).max(0.0)
    }

    pub fn upper(&self) -> f64 {
        self.value.max(0.0) + self.slack
    }
}

/// First `n` positive zeros with default options.
pub fn positive_zeros(family: &FunctionFamily, kind: ZeroKind, n: usize) -> Result<ZeroTable> {
    positive_zeros_with(family, kind, n, &ZeroOptions::default())
}

pub fn positive_zeros_with(
    family: &FunctionFamily,
    kind: ZeroKind,
    n: usize,
    opts: &ZeroOptions,
) -> Result<ZeroTable> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "at least one zero must be requested".into(),
        ));
    }
    let (a0, a1) = kind.combination(family)?;
    if let Family::Legendre { n: deg } = *family.params() {
        return legendre_zeros(family, kind, deg, n);
    }
    let ceiling = match opts.ceiling {
        Some(c) => c,
        None => default_ceiling(family, kind)?,
    };
    let f = KindFn {
        ps: PreciseSeries::new(family.series()),
        s: family.scale(),
        a0,
        a1,
    };
    let mut scan = Scanner {
        f: &f,
        opts,
        gap_floor: spacing_scale(family, kind)?,
        zeros: Vec::new(),
        residuals: Vec::new(),
        double: Vec::new(),
    };
    let top = scan.run(n, ceiling)?;
    if scan.zeros.len() < n {
        return Err(Error::InsufficientZeros {
            requested: n,
            found: scan.zeros.len(),
            ceiling,
        });
    }
    scan.zeros.truncate(n);
    scan.residuals.truncate(n);
    scan.double.truncate(n);
    Ok(ZeroTable {
        family: *family,
        kind,
        zeros: scan.zeros,
        residuals: scan.residuals,
        double: scan.double,
        scan_ceiling: top,
        complete: false,
    })
}

/// `√(p1/p2)`, an upper bound on the first zero since Σ1/Z² ≤ (1/Z₁) Σ1/Z.
fn first_zero_estimate(family: &FunctionFamily, kind: ZeroKind) -> Result<f64> {
    let (p1, p2) = power_sums(family, kind)?;
    Ok(if p2 > 0.0 && p1 > 0.0 {
        (p1 / p2).sqrt()
    } else {
        10.0
    })
}

/// Zero spacing scale: a weighted derivative with a small weight has a first
/// zero near the origin, far below the spacing of the rest.
fn spacing_scale(family: &FunctionFamily, kind: ZeroKind) -> Result<f64> {
    Ok(first_zero_estimate(family, kind)?.max(first_zero_estimate(family, ZeroKind::Base)?))
}

fn default_ceiling(family: &FunctionFamily, kind: ZeroKind) -> Result<f64> {
    Ok((50.0 * spacing_scale(family, kind)?).min(500.0))
}

/// `a0 B + a1 x B′` at `x = −s t²`, with `t f′(t)` when asked.
struct KindFn {
    ps: PreciseSeries,
    s: f64,
    a0: f64,
    a1: f64,
}

#[derive(Clone, Copy, Debug)]
struct Val {
    f: f64,
    tdf: f64,
    /// Largest of |B|, |xB′|, |x²B″| (only with derivatives), same scale as `f`.
    scale: f64,
    exp2: i64,
}

impl Val {
    fn sign(&self) -> f64 {
        if self.f > 0.0 {
            1.0
        } else if self.f < 0.0 {
            -1.0
        } else {
            0.0
        }
    }

    fn log2_abs(&self) -> f64 {
        self.f.abs().log2() + self.exp2 as f64
    }

    /// `self.f / other.f`, safe across different binary scales.
    fn ratio(&self, other: &Val) -> f64 {
        let de = (self.exp2 - other.exp2).clamp(-2000, 2000) as f64;
        self.f / other.f * de.exp2()
    }
}

impl KindFn {
    fn eval(&self, t: f64, deriv: bool) -> Result<Val> {
        let base = if self.a1 != 0.0 { 2 } else { 1 };
        let nsums = if deriv { base + 1 } else { base };
        let x = -self.s * t * t;
        let Scaled { vals: v, exp2 } = self.ps.eval(x, nsums)?;
        let f = self.a0 * v[0] + self.a1 * v[1];
        let tdf = if deriv {
            2.0 * (self.a0 * v[1] + self.a1 * (v[1] + v[2]))
        } else {
            f64::NAN
        };
        let scale = v[..nsums].iter().fold(0.0f64, |m, a| m.max(a.abs()));
        Ok(Val {
            f,
            tdf,
            scale,
            exp2,
        })
    }
}

struct Scanner<'a> {
    f: &'a KindFn,
    opts: &'a ZeroOptions,
    /// Lower bound on the gap used by the silence stop.
    gap_floor: f64,
    zeros: Vec<f64>,
    residuals: Vec<f64>,
    double: Vec<bool>,
}

/// Relative depth below which a sign-preserving dip counts as a double zero.
const DOUBLE_ZERO_TOL: f64 = 1e-11;
const MAX_SCAN_STEPS: usize = 2_000_000;

impl Scanner<'_> {
    /// Scans until `n` zeros are found or the ceiling is passed; returns the
    /// largest abscissa evaluated.
    fn run(&mut self, n: usize, ceiling: f64) -> Result<f64> {
        let mut t0 = self.opts.start;
        let mut v0 = self.f.eval(t0, false)?;
        let mut prev: Option<(f64, Val)> = None;
        let mut steps = 0;
        let mut widest = 0.0f64;
        let mut counted = 0;
        while self.zeros.len() < n && t0 < ceiling {
            steps += 1;
            if steps > MAX_SCAN_STEPS {
                break;
            }
            if let Some(&last) = self.zeros.last() {
                if self.zeros.len() != counted {
                    counted = self.zeros.len();
                    widest = self
                        .zeros
                        .iter()
                        .scan(0.0, |prev, &z| Some(z - std::mem::replace(prev, z)))
                        .fold(0.0, f64::max);
                }
                if t0 > last + self.opts.silence_gaps * widest.max(self.gap_floor) {
                    break;
                }
            }
            let gap = match self.zeros.len() {
                0 => 0.0,
                1 => self.zeros[0],
                k => self.zeros[k - 1] - self.zeros[k - 2],
            };
            let h = self.opts.min_step.max(self.opts.gap_fraction * gap);
            let t1 = (t0 + h).min(ceiling);
            let v1 = self.f.eval(t1, false)?;
            if v0.sign() == 0.0 {
                self.push_simple(t0)?;
            } else if v0.sign() * v1.sign() < 0.0 {
                self.refine_simple(t0, v0, t1, v1)?;
            } else if let Some((tp, vp)) = prev {
                if vp.sign() == v0.sign()
                    && v0.sign() == v1.sign()
                    && v0.log2_abs() < vp.log2_abs()
                    && v0.log2_abs() < v1.log2_abs()
                {
                    self.inspect_dip(tp, vp, t1, v1)?;
                }
            }
            prev = Some((t0, v0));
            t0 = t1;
            v0 = v1;
        }
        Ok(t0)
    }

    fn push_simple(&mut self, t: f64) -> Result<()> {
        let v = self.f.eval(t, true)?;
        self.zeros.push(t);
        self.residuals.push(residual(&v));
        self.double.push(false);
        Ok(())
    }

    /// Illinois refinement of a sign change, then Newton polishing.
    fn refine_simple(&mut self, a: f64, fa: Val, b: f64, fb: Val) -> Result<()> {
        let t = illinois(a, fa, b, fb, self.opts.rel_width, |t| self.f.eval(t, false))?;
        let (t, v) = self.polish(t, a, b)?;
        self.zeros.push(t);
        self.residuals.push(residual(&v));
        self.double.push(false);
        Ok(())
    }

    fn polish(&self, mut t: f64, lo: f64, hi: f64) -> Result<(f64, Val)> {
        let mut v = self.f.eval(t, true)?;
        for _ in 0..self.opts.newton_steps {
            if v.f == 0.0 || v.tdf == 0.0 {
                break;
            }
            let step = t * v.f / v.tdf;
            let next = t - step;
            if !(next > lo && next < hi) {
                break;
            }
            let vn = self.f.eval(next, true)?;
            if vn.f.abs() > v.f.abs() && vn.exp2 >= v.exp2 {
                break;
            }
            t = next;
            v = vn;
            if step.abs() <= 2.0 * f64::EPSILON * t {
                break;
            }
        }
        Ok((t, v))
    }

    /// |f| has a local minimum without a sign change somewhere in (a, b).
    fn inspect_dip(&mut self, a: f64, _fa: Val, b: f64, _fb: Val) -> Result<()> {
        let da = self.f.eval(a, true)?;
        let db = self.f.eval(b, true)?;
        if da.tdf * db.tdf >= 0.0 {
            return Ok(());
        }
        let ga = derivative_val(&da);
        let gb = derivative_val(&db);
        let tm = illinois(a, ga, b, gb, self.opts.rel_width, |t| {
            self.f.eval(t, true).map(|v| derivative_val(&v))
        })?;
        let vm = self.f.eval(tm, true)?;
        if vm.sign() * da.sign() < 0.0 {
            // Two close simple zeros straddle the minimum.
            self.refine_simple(a, da, tm, vm)?;
            let vm2 = self.f.eval(tm, false)?;
            self.refine_simple(tm, vm2, b, db)?;
        } else if vm.f.abs() <= DOUBLE_ZERO_TOL * vm.scale {
            let r = vm.f.abs() / vm.scale;
            for _ in 0..2 {
                self.zeros.push(tm);
                self.residuals.push(r);
                self.double.push(true);
            }
        }
        Ok(())
    }
}

/// `t f′(t)` repackaged as the value to bracket.
fn derivative_val(v: &Val) -> Val {
    Val {
        f: v.tdf,
        tdf: f64::NAN,
        scale: v.scale,
        exp2: v.exp2,
    }
}

fn residual(v: &Val) -> f64 {
    if v.tdf == 0.0 {
        if v.f == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (v.f / v.tdf).abs()
    }
}

/// Illinois regula falsi on a sign change until the bracket is narrower
/// than `rel_width · max(1, t)`.
fn illinois(
    mut a: f64,
    mut fa: Val,
    mut b: f64,
    mut fb: Val,
    rel_width: f64,
    mut eval: impl FnMut(f64) -> Result<Val>,
) -> Result<f64> {
    if fa.sign() * fb.sign() > 0.0 {
        return Err(Error::Bracketing(format!("no sign change on [{a}, {b}]")));
    }
    let mut side = 0i8;
    let mut iters = 0;
    while (b - a) > rel_width * b.abs().max(1.0) {
        iters += 1;
        if fa.f == 0.0 {
            return Ok(a);
        }
        if fb.f == 0.0 {
            return Ok(b);
        }
        // c = a + (b − a) / (1 − f(b)/f(a))
        let r = fb.ratio(&fa);
        let mut c = a + (b - a) / (1.0 - r);
        let w = b - a;
        if !(c > a + 1e-3 * w && c < b - 1e-3 * w) || iters % 8 == 0 {
            c = 0.5 * (a + b);
        }
        if c <= a || c >= b {
            break;
        }
        let fc = eval(c)?;
        if fc.sign() == 0.0 {
            return Ok(c);
        }
        if fc.sign() == fb.sign() {
            b = c;
            fb = fc;
            if side == 1 {
                fa.f *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb.f *= 0.5;
            }
            side = -1;
        }
        if iters > 400 {
            break;
        }
    }
    let (la, lb) = (fa.log2_abs(), fb.log2_abs());
    Ok(if la < lb { a } else { b })
}

/// Legendre zeros by Newton from standard initial guesses, bracketed for safety.
fn legendre_zeros(
    family: &FunctionFamily,
    kind: ZeroKind,
    deg: u32,
    n: usize,
) -> Result<ZeroTable> {
    let m = 2 * deg as usize - 1;
    let available = deg as usize - 1;
    if n > available {
        return Err(Error::InsufficientZeros {
            requested: n,
            found: available,
            ceiling: 1.0,
        });
    }
    let p = |t: f64| {
        let (v, d, d2) = legendre_recurrence(m, num_complex::Complex64::new(t, 0.0));
        (v.re, d.re, d2.re)
    };
    // Positive zeros of P_m, ascending.
    let mut roots: Vec<f64> = (1..=available)
        .rev()
        .map(|i| {
            let mut t = (std::f64::consts::PI * (i as f64 - 0.25) / (m as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (v, d, _) = p(t);
                let step = v / d;
                t -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            t
        })
        .collect();
    let (zeros, residuals) = match kind {
        ZeroKind::Base => {
            let res = roots.iter().map(|&t| {
                let (v, d, _) = p(t);
                (v / (t * d)).abs()
            });
            let residuals = res.collect();
            (roots.clone(), residuals)
        }
        ZeroKind::GPrime => {
            // One zero of P′ between 0 and the first root, and between consecutive roots.
            roots.insert(0, 0.0);
            let mut zs = Vec::with_capacity(available);
            let mut rs = Vec::with_capacity(available);
            for w in roots.windows(2) {
                let (mut a, mut b) = (w[0], w[1]);
                let fa = p(a.max(1e-300)).1;
                for _ in 0..200 {
                    let c = 0.5 * (a + b);
                    if c <= a || c >= b {
                        break;
                    }
                    if p(c).1 * fa > 0.0 {
                        a = c;
                    } else {
                        b = c;
                    }
                }
                let mut t = 0.5 * (a + b);
                for _ in 0..3 {
                    let (_, d, d2) = p(t);
                    if d2 == 0.0 {
                        break;
                    }
                    let next = t - d / d2;
                    if !(next > w[0] && next < w[1]) {
                        break;
                    }
                    t = next;
                }
                let (_, d, d2) = p(t);
                zs.push(t);
                rs.push((d / (t * d2)).abs());
            }
            (zs, rs)
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "Legendre has no {} kernel",
                kind.name()
            )))
        }
    };
    for w in zeros.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::Bracketing("Legendre roots out of order".into()));
        }
    }
    Ok(ZeroTable {
        family: *family,
        kind,
        zeros: zeros[..n].to_vec(),
        residuals: residuals[..n].to_vec(),
        double: vec![false; n],
        scan_ceiling: 1.0,
        complete: n == available,
    })
}

/// Outcome of an interlacing check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub holds: bool,
    /// Number of inequalities tested.
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Checks `lower[n] < upper[n] < lower[n+1]` for every index available in both tables.
pub fn check_interlacing(lower: &ZeroTable, upper: &ZeroTable) -> InterlacingReport {
    let mut violations = Vec::new();
    if lower.family != upper.family {
        violations.push("tables belong to different families".to_string());
    }
    if lower.len() < 2 || upper.len() < 2 {
        violations.push("each table needs at least two zeros".to_string());
    }
    let mut checked = 0;
    let (lo, up) = (lower.zeros(), upper.zeros());
    for i in 0..up.len().min(lo.len()) {
        checked += 1;
        if !(lo[i] < up[i]) {
            violations.push(format!("lower[{i}] = {} >= upper[{i}] = {}", lo[i], up[i]));
        }
        if i + 1 < lo.len() {
            checked += 1;
            if !(up[i] < lo[i + 1]) {
                violations.push(format!(
                    "upper[{i}] = {} >= lower[{}] = {}",
                    up[i],
                    i + 1,
                    lo[i + 1]
                ));
            }
        }
    }
    InterlacingReport {
        holds: violations.is_empty(),
        checked,
        violations,
    }
}

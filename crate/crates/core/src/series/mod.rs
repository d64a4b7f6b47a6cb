//! Power-series evaluation with certified truncation.
//!
//! The double-precision path here serves complex arguments inside the
//! first-singularity disk. Zero scans far out on the real axis need more
//! bits than a double carries and go through [`precise`].

pub(crate) mod precise;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{legendre_kernel_coefs, BaseSeries, Family, FunctionFamily};

/// Truncation controls.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesOptions {
    /// Relative truncation tolerance.
    pub rel_tol: f64,
    /// Term cap; `None` uses the family default (10 000, or 500 for Ramanujan-type).
    pub max_terms: Option<usize>,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            rel_tol: 1e-14,
            max_terms: None,
        }
    }
}

/// A series value with its truncation certificate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    /// Bound on the modulus of the discarded remainder.
    pub abs_tail_bound: f64,
    pub terms_used: usize,
}

/// Raw base series at `x`: Φ(ρ,β,x), the Prabhakar series, ₁F₂(1; b₁, b₂; x),
/// P_{2n−1}(x) or A_q^(β)(−a, x).
pub fn eval_base(family: &FunctionFamily, x: Complex64) -> Result<EvalResult> {
    eval_series(family, 0, x, &SeriesOptions::default())
}

/// First or second derivative of the raw base series.
pub fn eval_deriv(family: &FunctionFamily, order: u8, x: Complex64) -> Result<EvalResult> {
    if !(1..=2).contains(&order) {
        return Err(Error::InvalidParameter(format!(
            "derivative order must be 1 or 2, got {order}"
        )));
    }
    eval_series(family, order, x, &SeriesOptions::default())
}

/// Derivative of any order in {0, 1, 2} with explicit options.
pub fn eval_series(
    family: &FunctionFamily,
    order: u8,
    x: Complex64,
    opts: &SeriesOptions,
) -> Result<EvalResult> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::InvalidParameter(format!("non-finite argument {x}")));
    }
    if order > 2 {
        return Err(Error::InvalidParameter(format!(
            "derivative order must be at most 2, got {order}"
        )));
    }
    if let Family::Legendre { n } = *family.params() {
        let (p, dp, d2p) = legendre_recurrence(2 * n as usize - 1, x);
        let value = [p, dp, d2p][order as usize];
        return Ok(EvalResult {
            value,
            abs_tail_bound: 0.0,
            terms_used: 2 * n as usize,
        });
    }
    let series = family.series();
    let k = order as usize;
    let cap = opts.max_terms.unwrap_or_else(|| series.term_cap());
    // d^k/dx^k Σ c_n x^n = Σ_m c_{m+k} (m+k)!/m! x^m
    let ln_d = |m: usize| {
        let (l, s) = series.ln_coef(m + k);
        (l + ln_falling(m + k, k), s)
    };
    let ratio = |m: usize| {
        series
            .coef_ratio(m + k)
            .map(|r| r * (m + k + 1) as f64 / (m + 1) as f64)
    };
    let s = sum_weighted(&ln_d, &ratio, None, x, 1, opts.rel_tol, cap)?;
    Ok(EvalResult {
        value: s.vals[0],
        abs_tail_bound: s.tails[0],
        terms_used: s.terms,
    })
}

/// ln(n!/(n−k)!).
fn ln_falling(n: usize, k: usize) -> f64 {
    (0..k).map(|i| ((n - i) as f64).ln()).sum()
}

/// Legendre P_m with first and second derivatives by the three-term recurrence.
pub(crate) fn legendre_recurrence(m: usize, x: Complex64) -> (Complex64, Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    if m == 0 {
        return (one, zero, zero);
    }
    let (mut p0, mut p1) = (one, x);
    let (mut d0, mut d1) = (zero, one);
    let (mut s0, mut s1) = (zero, zero);
    for k in 1..m {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        let d2 = d0 + (2.0 * kf + 1.0) * p1;
        let s2 = s0 + (2.0 * kf + 1.0) * d1;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        s0 = s1;
        s1 = s2;
    }
    (p1, d1, s1)
}

/// Sums `Σ d_m x^m w_j(m)` for `w_0 = 1`, `w_1 = m`, `w_2 = m(m−1)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Sums {
    pub vals: [Complex64; 3],
    pub tails: [f64; 3],
    pub abs: [f64; 3],
    pub terms: usize,
}

fn weight(j: usize, m: usize) -> f64 {
    let mf = m as f64;
    match j {
        0 => 1.0,
        1 => mf,
        _ => mf * (mf - 1.0),
    }
}

/// The kernel sums `B`, `xB′`, `x²B″` (the first `nsums` of them) at `x`.
pub(crate) fn kernel_sums(series: &BaseSeries, x: Complex64, nsums: usize) -> Result<Sums> {
    let tol = 1e-14;
    if let BaseSeries::Legendre { n } = *series {
        let c = legendre_kernel_coefs(n);
        let ln_d = |m: usize| match c.get(m) {
            Some(&v) if v != 0.0 => (v.abs().ln(), v.signum()),
            _ => (f64::NEG_INFINITY, 1.0),
        };
        return sum_weighted(&ln_d, &|_| None, Some(c.len()), x, nsums, tol, c.len());
    }
    let ln_d = |m: usize| series.ln_coef(m);
    let ratio = |m: usize| series.coef_ratio(m);
    sum_weighted(&ln_d, &ratio, None, x, nsums, tol, series.term_cap())
}

const ANCHOR_EVERY: usize = 50;

/// Core summation loop.
///
/// Terms advance by the closed-form coefficient ratio where available and are
/// recomputed from log-coefficients every [`ANCHOR_EVERY`] terms. The loop
/// stops once three consecutive weighted terms fall below `tol·|sum|` and a
/// geometric bound on the remainder does too. `exact_len` marks a polynomial,
/// summed in full with zero tail.
fn sum_weighted(
    ln_d: &dyn Fn(usize) -> (f64, f64),
    ratio: &dyn Fn(usize) -> Option<f64>,
    exact_len: Option<usize>,
    x: Complex64,
    nsums: usize,
    tol: f64,
    cap: usize,
) -> Result<Sums> {
    let mut out = Sums {
        vals: [Complex64::new(0.0, 0.0); 3],
        tails: [0.0; 3],
        abs: [0.0; 3],
        terms: 0,
    };
    let (l0, s0) = ln_d(0);
    check_coef(l0, 0)?;
    if x == Complex64::new(0.0, 0.0) {
        out.vals[0] = Complex64::new(s0 * l0.exp(), 0.0);
        out.abs[0] = out.vals[0].norm();
        out.terms = 1;
        return Ok(out);
    }
    let lx = x.norm().ln();
    let th = x.arg();
    let direct = |m: usize| -> Result<Complex64> {
        let (l, s) = ln_d(m);
        if l == f64::NEG_INFINITY {
            return Ok(Complex64::new(0.0, 0.0));
        }
        check_coef(l, m)?;
        let mag = l + m as f64 * lx;
        if mag > 709.0 {
            return Err(Error::GammaOverflow(format!(
                "term {m} overflows double precision at |x| = {}",
                x.norm()
            )));
        }
        let (sn, cs) = (m as f64 * th).sin_cos();
        Ok(Complex64::new(cs, sn) * (s * mag.exp()))
    };
    let limit = exact_len.unwrap_or(cap);
    let mut term = direct(0)?;
    let mut small_run = 0usize;
    let mut prev_q = f64::INFINITY;
    for m in 0..limit {
        if m > 0 {
            term = match ratio(m - 1) {
                Some(r) if m % ANCHOR_EVERY != 0 => term * x * r,
                _ => direct(m)?,
            };
        }
        for j in 0..nsums {
            let t = term * weight(j, m);
            out.vals[j] += t;
            out.abs[j] += t.norm();
        }
        out.terms = m + 1;
        if exact_len.is_some() {
            continue;
        }
        let tn = term.norm();
        let small = (0..nsums).all(|j| tn * weight(j, m).max(1.0) <= tol * out.vals[j].norm());
        small_run = if small { small_run + 1 } else { 0 };
        if small_run < 3 {
            continue;
        }
        // Remainder bound from the next two term magnitudes, valid once the
        // ratio of successive terms is below one and not increasing.
        let next = term_magnitude(ln_d, ratio, m + 1, lx, tn);
        let next2 = term_magnitude(ln_d, ratio, m + 2, lx, next);
        let mut done = next == 0.0;
        if !done {
            let mut ok = true;
            for j in 0..nsums {
                let w1 = weight(j, m + 1).max(1.0);
                let w2 = weight(j, m + 2).max(1.0);
                let q = (next2 * w2) / (next * w1);
                if !(q < 1.0 && q <= prev_q * 1.0001 + 1e-300) {
                    ok = false;
                    break;
                }
                out.tails[j] = next * w1 / (1.0 - q);
                if out.tails[j] > tol * out.vals[j].norm() {
                    ok = false;
                    break;
                }
            }
            prev_q = (next2 / next).min(prev_q);
            done = ok;
        }
        if done {
            return Ok(out);
        }
    }
    if exact_len.is_some() {
        return Ok(out);
    }
    Err(Error::NonConvergence {
        cap,
        x: format!("{x}"),
    })
}

fn term_magnitude(
    ln_d: &dyn Fn(usize) -> (f64, f64),
    ratio: &dyn Fn(usize) -> Option<f64>,
    m: usize,
    lx: f64,
    prev: f64,
) -> f64 {
    match ratio(m - 1) {
        Some(r) => prev * r.abs() * lx.exp(),
        None => {
            let (l, _) = ln_d(m);
            if l == f64::NEG_INFINITY {
                0.0
            } else {
                (l + m as f64 * lx).exp()
            }
        }
    }
}

fn check_coef(l: f64, m: usize) -> Result<()> {
    if l.is_nan() || l == f64::INFINITY {
        Err(Error::GammaOverflow(format!(
            "coefficient {m} is not finite"
        )))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn wright_at_origin() {
        let f = FunctionFamily::wright(1.0, 1.0).unwrap();
        let r = eval_base(&f, c(0.0)).unwrap();
        assert_eq!(r.value, c(1.0));
        assert!(r.terms_used >= 1);
        let d = eval_deriv(&f, 1, c(0.0)).unwrap();
        assert!((d.value.re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mittag_leffler_exponential() {
        let f = FunctionFamily::mittag_leffler(1.0, 1.0, 1.0).unwrap();
        let e = 0.7f64.exp();
        let r = eval_base(&f, c(0.7)).unwrap();
        assert!((r.value.re - e).abs() < 1e-14 * e);
        let d = eval_deriv(&f, 1, c(0.7)).unwrap();
        assert!((d.value.re - e).abs() < 1e-14 * e);
        let d2 = eval_deriv(&f, 2, c(0.7)).unwrap();
        assert!((d2.value.re - e).abs() < 1e-14 * e);
    }

    #[test]
    fn legendre_p3() {
        let f = FunctionFamily::legendre(2).unwrap();
        let r = eval_base(&f, c(0.5)).unwrap();
        assert!((r.value.re + 0.4375).abs() < 1e-15);
        // P3' = (15x² − 3)/2, P3'' = 15x
        let d = eval_deriv(&f, 1, c(0.5)).unwrap();
        assert!((d.value.re - (15.0 * 0.25 - 3.0) / 2.0).abs() < 1e-15);
        let d2 = eval_deriv(&f, 2, c(0.5)).unwrap();
        assert!((d2.value.re - 7.5).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_order() {
        let f = FunctionFamily::wright(1.0, 1.0).unwrap();
        assert!(eval_deriv(&f, 3, c(0.1)).is_err());
        assert!(eval_deriv(&f, 0, c(0.1)).is_err());
    }

    #[test]
    fn complex_conjugate_symmetry() {
        let f = FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap();
        let x = Complex64::new(-1.3, 0.7);
        let a = eval_base(&f, x).unwrap().value;
        let b = eval_base(&f, x.conj()).unwrap().value;
        assert!((a - b.conj()).norm() < 1e-15 * a.norm());
    }

    #[test]
    fn ramanujan_cap_is_500() {
        let f = FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap();
        let opts = SeriesOptions {
            rel_tol: 1e-14,
            max_terms: Some(3),
        };
        assert!(matches!(
            eval_series(&f, 0, c(-4.0), &opts),
            Err(Error::NonConvergence { cap: 3, .. })
        ));
    }

    #[test]
    fn huge_argument_reports_overflow() {
        let f = FunctionFamily::wright(1.0, 1.0).unwrap();
        assert!(matches!(
            eval_base(&f, c(-1e9)),
            Err(Error::GammaOverflow(_)) | Err(Error::NonConvergence { .. })
        ));
    }
}

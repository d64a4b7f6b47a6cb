//! Extended-precision real-axis evaluation of a base series.
//!
//! Far along the negative real axis the kernels are tiny differences of huge
//! terms (the alternating Wright series at x = −t² has terms near e^{2t}), so
//! double precision loses every digit after the first few zeros. This
//! evaluator sums in MPFR with the working precision chosen from the term
//! envelope and checked against the size of the result.

use std::cell::{Cell, RefCell};

use rug::float::Round;
use rug::ops::{AddAssignRound, MulAssignRound, Pow};
use rug::{Assign, Float};

use crate::error::{Error, Result};
use crate::family::BaseSeries;

/// `vals · 2^exp2` are `B`, `xB′`, `x²B″` (the first `nsums` of them).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Scaled {
    pub vals: [f64; 3],
    pub exp2: i64,
}

/// Bits of agreement demanded between the result and its error estimate.
const TARGET_BITS: f64 = 58.0;
const MAX_PREC: u32 = 1 << 20;

pub(crate) struct PreciseSeries {
    series: BaseSeries,
    log2c: RefCell<Vec<f64>>,
    coefs: RefCell<CoefCache>,
    /// Cancellation (bits) seen at the previous evaluation.
    deficit: Cell<f64>,
}

struct CoefCache {
    prec: u32,
    vals: Vec<Float>,
}

impl PreciseSeries {
    pub(crate) fn new(series: BaseSeries) -> Self {
        PreciseSeries {
            series,
            log2c: RefCell::new(Vec::new()),
            coefs: RefCell::new(CoefCache {
                prec: 0,
                vals: Vec::new(),
            }),
            deficit: Cell::new(0.0),
        }
    }

    fn log2_coef(&self, n: usize) -> f64 {
        let mut t = self.log2c.borrow_mut();
        while t.len() <= n {
            let k = t.len();
            let v = match (k, self.series.coef_ratio(k.saturating_sub(1))) {
                (0, _) | (_, None) => self.series.ln_coef(k).0 / std::f64::consts::LN_2,
                (_, Some(r)) => t[k - 1] + r.abs().log2(),
            };
            t.push(v);
        }
        t[n]
    }

    /// Last index worth summing for precision `prec`, and log2 of the
    /// weighted absolute sum.
    fn plan(&self, x: f64, nsums: usize, prec: f64) -> Result<(usize, f64)> {
        let lx = x.abs().log2();
        let wpow = (nsums - 1) as f64;
        let cap = self
            .series
            .degree()
            .map_or(self.series.term_cap() * 8, |d| d + 2);
        let mut peak = f64::NEG_INFINITY;
        let mut acc = 0.0f64;
        let mut acc_ref = f64::NEG_INFINITY;
        let mut below = 0;
        for n in 0..cap {
            let lc = self.log2_coef(n);
            if let Some(d) = self.series.degree() {
                if n > d {
                    return Ok((d, acc_ref + acc.log2()));
                }
            }
            if lc == f64::NEG_INFINITY {
                continue;
            }
            let l = lc + n as f64 * lx + wpow * ((n + 1) as f64).log2();
            if l > peak {
                peak = l;
            }
            if l > acc_ref {
                acc = acc * (acc_ref - l).exp2() + 1.0;
                acc_ref = l;
            } else {
                acc += (l - acc_ref).exp2();
            }
            if l < peak - prec - 8.0 {
                below += 1;
                if below >= 3 {
                    return Ok((n, acc_ref + acc.log2()));
                }
            } else {
                below = 0;
            }
        }
        Err(Error::NonConvergence {
            cap,
            x: format!("{x}"),
        })
    }

    fn ensure_coefs(&self, nmax: usize, prec: u32) {
        let mut cache = self.coefs.borrow_mut();
        if cache.prec < prec {
            let p = prec.max(cache.prec.saturating_mul(3) / 2) + 32;
            cache.vals = self.coefficients(nmax.max(cache.vals.len()) + 16, p);
            cache.prec = p;
        } else if cache.vals.len() <= nmax {
            let want = (nmax + 1).max(cache.vals.len() * 5 / 4);
            cache.vals = self.coefficients(want, cache.prec);
        }
    }

    /// The first `count` coefficients at precision `prec`.
    fn coefficients(&self, count: usize, prec: u32) -> Vec<Float> {
        let mut out = Vec::with_capacity(count);
        match self.series {
            BaseSeries::Wright { rho, beta } => {
                // 1/(n! Γ(nρ + β))
                let int_rho = integer_step(rho);
                let mut fact = Float::with_val(prec, 1);
                let mut g = Float::with_val(prec, beta).gamma();
                for n in 0..count {
                    if n > 0 {
                        fact *= n as u32;
                        g = match int_rho {
                            Some(k) => gamma_step(g, prec, rho, beta, n - 1, k),
                            None => affine(prec, rho, n, beta).gamma(),
                        };
                    }
                    out.push(Float::with_val(prec, &fact * &g).recip());
                }
            }
            BaseSeries::Prabhakar { mu, nu, a } => {
                // (a)_n / n! / Γ(μn + ν)
                let int_mu = integer_step(mu);
                let mut poch = Float::with_val(prec, 1);
                let mut g = Float::with_val(prec, nu).gamma();
                for n in 0..count {
                    if n > 0 {
                        poch *= Float::with_val(prec, a) + (n - 1) as u32;
                        poch /= n as u32;
                        g = match int_mu {
                            Some(k) => gamma_step(g, prec, mu, nu, n - 1, k),
                            None => affine(prec, mu, n, nu).gamma(),
                        };
                    }
                    out.push(Float::with_val(prec, &poch / &g));
                }
            }
            BaseSeries::Hyper1F2 { b1, b2 } => {
                let mut c = Float::with_val(prec, 1);
                for n in 0..count {
                    if n > 0 {
                        let k = (n - 1) as u32;
                        c /= Float::with_val(prec, b1) + k;
                        c /= Float::with_val(prec, b2) + k;
                    }
                    out.push(c.clone());
                }
            }
            BaseSeries::RamanujanQ { beta, q, a } => {
                // c_{n+1} = c_n (1 + a qⁿ) q^{β(2n+1)} / (1 − q^{n+1})
                let qf = Float::with_val(prec, q);
                let qb = Float::with_val(prec, (&qf).pow(&Float::with_val(prec, beta)));
                let qb2 = Float::with_val(prec, qb.square_ref());
                let mut qn = Float::with_val(prec, 1);
                let mut qodd = qb.clone();
                let mut c = Float::with_val(prec, 1);
                for n in 0..count {
                    if n > 0 {
                        let mut num = Float::with_val(prec, &qn * a);
                        num += 1;
                        c *= &num;
                        c *= &qodd;
                        qn *= &qf;
                        let den = Float::with_val(prec, 1 - Float::with_val(prec, &qn));
                        c /= &den;
                        qodd *= &qb2;
                    }
                    out.push(c.clone());
                }
            }
            BaseSeries::Legendre { n } => {
                let c = crate::family::legendre_kernel_coefs(n);
                for k in 0..count {
                    out.push(Float::with_val(prec, c.get(k).copied().unwrap_or(0.0)));
                }
            }
        }
        out
    }

    /// `B`, `xB′`, `x²B″` at real `x`, scaled by a power of two.
    pub(crate) fn eval(&self, x: f64, nsums: usize) -> Result<Scaled> {
        assert!((1..=3).contains(&nsums));
        if !x.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite argument {x}")));
        }
        if x == 0.0 {
            self.ensure_coefs(0, 64);
            let c0 = self.coefs.borrow().vals[0].to_f64();
            return Ok(Scaled {
                vals: [c0, 0.0, 0.0],
                exp2: 0,
            });
        }
        let mut prec = (TARGET_BITS + 24.0 + self.deficit.get()).max(64.0);
        for _ in 0..12 {
            let (nmax, log2_abs) = self.plan(x, nsums, prec)?;
            let p = (prec + (nmax as f64 + 2.0).log2()).ceil() as u32;
            if p > MAX_PREC {
                break;
            }
            self.ensure_coefs(nmax, p);
            let (vals, exps) = self.sum(x, nsums, nmax, p);
            let log2_scale = exps.iter().copied().max().unwrap_or(i64::MIN);
            let err = log2_abs - p as f64 + (nmax as f64 + 2.0).log2() + 2.0;
            if log2_scale != i64::MIN && err <= log2_scale as f64 - TARGET_BITS {
                self.deficit.set((log2_abs - log2_scale as f64).max(0.0));
                let mut out = [0.0; 3];
                for j in 0..nsums {
                    out[j] = vals[j] * ((exps[j] - log2_scale) as f64).exp2();
                }
                return Ok(Scaled {
                    vals: out,
                    exp2: log2_scale,
                });
            }
            let shortfall = if log2_scale == i64::MIN {
                prec
            } else {
                err - (log2_scale as f64 - TARGET_BITS)
            };
            prec += shortfall.max(16.0) + 16.0;
        }
        Err(Error::NonConvergence {
            cap: MAX_PREC as usize,
            x: format!("{x} (precision exhausted)"),
        })
    }

    /// Forward summation; returns mantissas in [0.5, 1) with binary exponents.
    fn sum(&self, x: f64, nsums: usize, nmax: usize, p: u32) -> ([f64; 3], [i64; 3]) {
        let cache = self.coefs.borrow();
        let xf = Float::with_val(p, x);
        let mut pw = Float::with_val(p, 1);
        let mut t = Float::new(p);
        let mut w = Float::new(p);
        let mut acc = [Float::new(p), Float::new(p), Float::new(p)];
        for (n, c) in cache.vals.iter().take(nmax + 1).enumerate() {
            t.assign(c * &pw);
            acc[0].add_assign_round(&t, Round::Nearest);
            if nsums > 1 && n >= 1 {
                w.assign(&t * n as u32);
                acc[1].add_assign_round(&w, Round::Nearest);
                if nsums > 2 && n >= 2 {
                    w *= (n - 1) as u32;
                    acc[2].add_assign_round(&w, Round::Nearest);
                }
            }
            pw.mul_assign_round(&xf, Round::Nearest);
        }
        let mut vals = [0.0; 3];
        let mut exps = [i64::MIN; 3];
        for j in 0..nsums {
            if !acc[j].is_zero() {
                let (m, e) = acc[j].to_f64_exp();
                vals[j] = m;
                exps[j] = e as i64;
            }
        }
        (vals, exps)
    }
}

/// `slope · n + offset` evaluated at precision `prec`.
fn affine(prec: u32, slope: f64, n: usize, offset: f64) -> Float {
    let mut v = Float::with_val(prec, slope);
    v *= n as u32;
    v += offset;
    v
}

/// Γ(slope·(n+1) + offset) from Γ(slope·n + offset) when `slope = k` is an integer.
fn gamma_step(mut g: Float, prec: u32, slope: f64, offset: f64, n: usize, k: usize) -> Float {
    let base = affine(prec, slope, n, offset);
    for i in 0..k {
        g *= Float::with_val(prec, &base + i as u32);
    }
    g
}

/// `Some(k)` if `v` is a small positive integer, enabling the Γ recurrence.
fn integer_step(v: f64) -> Option<usize> {
    if v.fract() == 0.0 && (1.0..=16.0).contains(&v) {
        Some(v as usize)
    } else {
        None
    }
}

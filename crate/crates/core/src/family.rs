//! Special-function families and the power series behind them.
//!
//! Every family is reduced to a base series `B(x) = Σ c_n x^n`. The even
//! kernel of a family is `B(-s z²) / B(0)`, with `s = 1` for Wright,
//! Mittag-Leffler (Prabhakar), Legendre and Ramanujan-type functions and
//! `s = 1/4` for the Lommel and Struve ₁F₂ kernels.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Parameters of one of the six supported families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Wright function Φ(ρ, β, x) = Σ xⁿ / (n! Γ(nρ + β)).
    Wright { rho: f64, beta: f64 },
    /// Prabhakar (three-parameter Mittag-Leffler) series
    /// Σ (a)ₙ xⁿ / (n! Γ(μn + ν)).
    MittagLeffler { mu: f64, nu: f64, a: f64 },
    /// Lommel function 𝓛_{u-1/2, 1/2}.
    Lommel { u: f64 },
    /// Struve function H_β.
    Struve { beta: f64 },
    /// Legendre polynomial of odd degree 2n − 1.
    Legendre { n: u32 },
    /// Ramanujan-type entire function A_q^(β)(−a, x).
    RamanujanQ { beta: f64, q: f64, a: f64 },
}

/// A validated family descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Family", into = "Family")]
pub struct FunctionFamily {
    family: Family,
}

impl TryFrom<Family> for FunctionFamily {
    type Error = crate::Error;

    fn try_from(family: Family) -> Result<Self> {
        FunctionFamily::new(family)
    }
}

impl From<FunctionFamily> for Family {
    fn from(f: FunctionFamily) -> Family {
        f.family
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn finite(vals: &[f64]) -> Result<()> {
    require(
        vals.iter().all(|v| v.is_finite()),
        "parameters must be finite",
    )
}

impl FunctionFamily {
    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::Wright { rho, beta } => {
                finite(&[rho, beta])?;
                require(rho > 0.0, "Wright requires rho > 0")?;
                require(beta > 0.0, "Wright requires beta > 0")?;
            }
            Family::MittagLeffler { mu, nu, a } => {
                finite(&[mu, nu, a])?;
                require(mu > 0.0, "Mittag-Leffler requires mu > 0")?;
                require(nu > 0.0, "Mittag-Leffler requires nu > 0")?;
                require(a > 0.0, "Mittag-Leffler requires a > 0")?;
            }
            Family::Lommel { u } => {
                finite(&[u])?;
                require(u > -1.0 && u < 1.0, "Lommel requires u in (-1, 1)")?;
                require(u != 0.0, "Lommel requires u != 0")?;
            }
            Family::Struve { beta } => {
                finite(&[beta])?;
                require(beta.abs() <= 0.5, "Struve requires |beta| <= 1/2")?;
            }
            Family::Legendre { n } => {
                require(n >= 1, "Legendre requires n >= 1")?;
                require(n <= 200, "Legendre requires n <= 200")?;
            }
            Family::RamanujanQ { beta, q, a } => {
                finite(&[beta, q, a])?;
                require(beta > 0.0, "Ramanujan-type requires beta > 0")?;
                require(q > 0.0 && q < 1.0, "Ramanujan-type requires q in (0, 1)")?;
                require(a >= 0.0, "Ramanujan-type requires a >= 0")?;
            }
        }
        Ok(FunctionFamily { family })
    }

    pub fn wright(rho: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Wright { rho, beta })
    }

    pub fn mittag_leffler(mu: f64, nu: f64, a: f64) -> Result<Self> {
        Self::new(Family::MittagLeffler { mu, nu, a })
    }

    pub fn lommel(u: f64) -> Result<Self> {
        Self::new(Family::Lommel { u })
    }

    pub fn struve(beta: f64) -> Result<Self> {
        Self::new(Family::Struve { beta })
    }

    pub fn legendre(n: u32) -> Result<Self> {
        Self::new(Family::Legendre { n })
    }

    pub fn ramanujan(beta: f64, q: f64, a: f64) -> Result<Self> {
        Self::new(Family::RamanujanQ { beta, q, a })
    }

    pub fn params(&self) -> &Family {
        &self.family
    }

    /// Lower-case family name as used on the command line.
    pub fn name(&self) -> &'static str {
        match self.family {
            Family::Wright { .. } => "wright",
            Family::MittagLeffler { .. } => "mittag_leffler",
            Family::Lommel { .. } => "lommel",
            Family::Struve { .. } => "struve",
            Family::Legendre { .. } => "legendre",
            Family::RamanujanQ { .. } => "ramanujan",
        }
    }

    /// Parameters as a JSON object (without the family tag).
    pub fn params_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self.family).expect("family serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("family");
        }
        v
    }

    /// Scale `s` in the kernel argument `x = -s z²`.
    pub fn scale(&self) -> f64 {
        match self.family {
            Family::Lommel { .. } | Family::Struve { .. } => 0.25,
            _ => 1.0,
        }
    }

    /// Exponent `w` of the f-form `f = (z^w · kernel)^{1/w}`.
    ///
    /// `None` for Legendre, which only has the single normalized form.
    pub fn f_weight(&self) -> Option<f64> {
        match self.family {
            Family::Wright { beta, .. } => Some(beta),
            Family::MittagLeffler { nu, .. } => Some(nu),
            Family::Lommel { u } => Some(u + 0.5),
            Family::Struve { beta } => Some(beta + 1.0),
            Family::Legendre { .. } => None,
            Family::RamanujanQ { beta, .. } => Some(beta),
        }
    }

    pub(crate) fn series(&self) -> BaseSeries {
        match self.family {
            Family::Wright { rho, beta } => BaseSeries::Wright { rho, beta },
            Family::MittagLeffler { mu, nu, a } => BaseSeries::Prabhakar { mu, nu, a },
            Family::Lommel { u } => {
                let (b1, b2) = lommel_kernel_params(u);
                BaseSeries::Hyper1F2 { b1, b2 }
            }
            Family::Struve { beta } => BaseSeries::Hyper1F2 {
                b1: 1.5,
                b2: beta + 1.5,
            },
            Family::Legendre { n } => BaseSeries::Legendre { n },
            Family::RamanujanQ { beta, q, a } => BaseSeries::RamanujanQ { beta, q, a },
        }
    }
}

/// ₁F₂ lower parameters of the Lommel kernel 𝓛_{u-1/2,1/2}.
///
/// For `u > 0` these come straight from the ₁F₂ form of 𝓛. For `u < 0` the
/// kernel is built one index up, from the shifted function with `u + 1` and
/// the first lower parameter reduced by one half-step, which yields the same
/// pair.
pub(crate) fn lommel_kernel_params(u: f64) -> (f64, f64) {
    if u > 0.0 {
        lommel_shifted_params(u, 0)
    } else {
        lommel_shifted_params(u + 1.0, 1)
    }
}

/// Lower parameters `((v - k + 2)/2, (v - k + 3)/2)` of the kernel with index
/// `v` shifted down by `k`.
pub(crate) fn lommel_shifted_params(v: f64, k: u32) -> (f64, f64) {
    let k = f64::from(k);
    ((v - k + 2.0) / 2.0, (v - k + 3.0) / 2.0)
}

/// Coefficient generator of a base series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum BaseSeries {
    Wright { rho: f64, beta: f64 },
    Prabhakar { mu: f64, nu: f64, a: f64 },
    Hyper1F2 { b1: f64, b2: f64 },
    Legendre { n: u32 },
    RamanujanQ { beta: f64, q: f64, a: f64 },
}

fn lgamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

impl BaseSeries {
    /// Number of nonzero coefficients, when finite.
    pub(crate) fn degree(&self) -> Option<usize> {
        match *self {
            BaseSeries::Legendre { n } => Some(n as usize - 1),
            _ => None,
        }
    }

    /// Hard cap on the number of terms summed.
    pub(crate) fn term_cap(&self) -> usize {
        match *self {
            BaseSeries::RamanujanQ { .. } => 500,
            BaseSeries::Legendre { n } => n as usize,
            _ => 10_000,
        }
    }

    /// `(ln |c_n|, sign c_n)`; the log is `-inf` for a vanishing coefficient.
    pub(crate) fn ln_coef(&self, n: usize) -> (f64, f64) {
        let nf = n as f64;
        match *self {
            BaseSeries::Wright { rho, beta } => (-lgamma(nf + 1.0) - lgamma(nf * rho + beta), 1.0),
            BaseSeries::Prabhakar { mu, nu, a } => (
                lgamma(a + nf) - lgamma(a) - lgamma(nf + 1.0) - lgamma(mu * nf + nu),
                1.0,
            ),
            BaseSeries::Hyper1F2 { b1, b2 } => (
                lgamma(b1) - lgamma(b1 + nf) + lgamma(b2) - lgamma(b2 + nf),
                1.0,
            ),
            BaseSeries::Legendre { n: m } => match legendre_kernel_coefs(m).get(n) {
                Some(&c) if c != 0.0 => (c.abs().ln(), c.signum()),
                _ => (f64::NEG_INFINITY, 1.0),
            },
            BaseSeries::RamanujanQ { beta, q, a } => {
                let lq = q.ln();
                let mut s = beta * nf * nf * lq;
                for j in 0..n {
                    let qj = (j as f64 * lq).exp();
                    s += (a * qj).ln_1p() - (-(qj * q)).ln_1p();
                }
                (s, 1.0)
            }
        }
    }

    /// Closed-form ratio `c_{n+1} / c_n` where one is cheap.
    pub(crate) fn coef_ratio(&self, n: usize) -> Option<f64> {
        let nf = n as f64;
        match *self {
            BaseSeries::Hyper1F2 { b1, b2 } => Some(1.0 / ((b1 + nf) * (b2 + nf))),
            BaseSeries::RamanujanQ { beta, q, a } => {
                let lq = q.ln();
                let qn = (nf * lq).exp();
                let num = (a * qn).ln_1p() + beta * (2.0 * nf + 1.0) * lq;
                Some(num.exp() / -((nf + 1.0) * lq).exp_m1())
            }
            _ => None,
        }
    }

    /// `c_0`, the value of the base series at the origin.
    pub(crate) fn c0(&self) -> f64 {
        let (l, s) = self.ln_coef(0);
        s * l.exp()
    }
}

/// Coefficients of `P_{2n-1}(t) / (t P'_{2n-1}(0))` as a polynomial in `y = -t²`.
///
/// With `P_{2n-1}(t) = Σ_j a_{2j+1} t^{2j+1}`, the j-th entry is
/// `a_{2j+1} (-1)^j / a_1`, so the kernel is `Σ_j c_j (-t²)^j`.
pub(crate) fn legendre_kernel_coefs(n: u32) -> Vec<f64> {
    let m = 2 * n as usize - 1;
    let mono = legendre_monomial(m);
    let a1 = mono[1];
    (0..n as usize)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * mono[2 * j + 1] / a1
        })
        .collect()
}

/// Monomial coefficients of P_m by the three-term recurrence on coefficient vectors.
pub(crate) fn legendre_monomial(m: usize) -> Vec<f64> {
    let mut p0 = vec![1.0];
    if m == 0 {
        return p0;
    }
    let mut p1 = vec![0.0, 1.0];
    for k in 1..m {
        let kf = k as f64;
        let mut next = vec![0.0; k + 2];
        for (i, c) in p1.iter().enumerate() {
            next[i + 1] += (2.0 * kf + 1.0) * c / (kf + 1.0);
        }
        for (i, c) in p0.iter().enumerate() {
            next[i] -= kf * c / (kf + 1.0);
        }
        p0 = p1;
        p1 = next;
    }
    p1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_out_of_range() {
        assert!(FunctionFamily::wright(0.0, 1.0).is_err());
        assert!(FunctionFamily::wright(1.0, -1.0).is_err());
        assert!(FunctionFamily::mittag_leffler(1.0, 1.0, 0.0).is_err());
        assert!(FunctionFamily::lommel(0.0).is_err());
        assert!(FunctionFamily::lommel(1.0).is_err());
        assert!(FunctionFamily::struve(0.51).is_err());
        assert!(FunctionFamily::struve(-0.5).is_ok());
        assert!(FunctionFamily::legendre(0).is_err());
        assert!(FunctionFamily::ramanujan(1.0, 1.0, 1.0).is_err());
        assert!(FunctionFamily::ramanujan(1.0, 0.5, 0.0).is_ok());
        assert!(FunctionFamily::wright(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn lommel_negative_index_matches_direct_parameters() {
        for &u in &[-0.9, -0.5, -0.3, -0.01] {
            let direct = lommel_shifted_params(u, 0);
            assert_eq!(lommel_kernel_params(u), direct);
        }
    }

    #[test]
    fn legendre_p3_monomials() {
        let p = legendre_monomial(3);
        assert_eq!(p, vec![0.0, -1.5, 0.0, 2.5]);
        // P_3 / (t P_3'(0)) = 1 - (5/3) t²
        let k = legendre_kernel_coefs(2);
        assert!((k[0] - 1.0).abs() < 1e-15);
        assert!((k[1] - 5.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn serde_roundtrip_validates() {
        let f = FunctionFamily::ramanujan(1.0, 0.5, 1.0).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"family":"ramanujan_q","beta":1.0,"q":0.5,"a":1.0}"#);
        let back: FunctionFamily = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"family":"lommel","u":0.0}"#;
        assert!(serde_json::from_str::<FunctionFamily>(bad).is_err());
    }

    #[test]
    fn ramanujan_ratio_matches_log_coefficients() {
        let s = BaseSeries::RamanujanQ {
            beta: 1.0,
            q: 0.5,
            a: 1.0,
        };
        for n in 0..20 {
            let (l0, _) = s.ln_coef(n);
            let (l1, _) = s.ln_coef(n + 1);
            let r = s.coef_ratio(n).unwrap();
            assert!(((l1 - l0).exp() / r - 1.0).abs() < 1e-12, "n = {n}");
        }
    }
}

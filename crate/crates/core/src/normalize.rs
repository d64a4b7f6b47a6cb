//! Normalized functions `f(z) = z + …` built from the family kernels, and
//! the starlike and convex functionals
//! `S(z) = z f′(z)/f(z)` and `C(z) = 1 + z f″(z)/f′(z)`.
//!
//! Each form is `z · κ(z)^{1/w}`: the f-form uses the even kernel
//! `κ(z) = B(−s z²)/B(0)` with the family weight `w`, the g-form the same
//! kernel with `w = 1`, and the h-form `κ(z) = B(−s z)/B(0)` with `w = 1`.
//! With `L = zκ′/κ` and `M = z²κ″/κ`,
//!
//! ```text
//! S = 1 + L/w,    C = 1 + L/w + (L + M − L²)/(w + L),
//! ```
//!
//! so no fractional power is ever taken.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FunctionFamily};
use crate::series::kernel_sums;
use crate::zeros::{positive_zeros, ZeroKind, ZeroTable};

/// Normalization form. Struve's U, V, W are F, G, H; Legendre has only G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    F,
    G,
    H,
}

impl std::str::FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "u" => Ok(Form::F),
            "g" | "v" | "p" => Ok(Form::G),
            "h" | "w" => Ok(Form::H),
            other => Err(Error::InvalidParameter(format!("unknown form '{other}'"))),
        }
    }
}

/// Which functional a computation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Functional {
    Starlike,
    Convex,
}

/// A family together with a normalization form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedFunction {
    family: FunctionFamily,
    form: Form,
}

/// Pole guard: denominators below this fraction of their scale are rejected.
const POLE_GUARD: f64 = 1e-12;

impl NormalizedFunction {
    pub fn new(family: FunctionFamily, form: Form) -> Result<Self> {
        match (*family.params(), form) {
            (Family::Legendre { .. }, Form::F | Form::H) => {
                return Err(Error::Unsupported(
                    "Legendre polynomials have a single normalized form (g)".into(),
                ))
            }
            (Family::Lommel { u }, Form::F) if u <= -0.5 => {
                return Err(Error::InvalidParameter(
                    "the Lommel f-form needs u > -1/2 (exponent 1/(u + 1/2))".into(),
                ))
            }
            _ => {}
        }
        Ok(NormalizedFunction { family, form })
    }

    pub fn family(&self) -> &FunctionFamily {
        &self.family
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// Conventional label: `f/g/h`, `U/V/W` for Struve, `P` for Legendre.
    pub fn form_label(&self) -> &'static str {
        match (*self.family.params(), self.form) {
            (Family::Struve { .. }, Form::F) => "U",
            (Family::Struve { .. }, Form::G) => "V",
            (Family::Struve { .. }, Form::H) => "W",
            (Family::Legendre { .. }, _) => "P",
            (_, Form::F) => "f",
            (_, Form::G) => "g",
            (_, Form::H) => "h",
        }
    }

    /// Exponent `w` in `f = z κ^{1/w}`.
    pub fn weight(&self) -> f64 {
        match self.form {
            Form::F => self.family.f_weight().unwrap_or(1.0),
            Form::G | Form::H => 1.0,
        }
    }

    /// Variable `y` in which the kernel factors over the table squares:
    /// `z²` for the even forms, `z` for the h-form.
    pub fn y_of(&self, z: Complex64) -> Complex64 {
        match self.form {
            Form::H => z,
            _ => z * z,
        }
    }

    /// Radius where `y` reaches the table square `big_z`.
    pub fn radius_of_square(&self, big_z: f64) -> f64 {
        match self.form {
            Form::H => big_z,
            _ => big_z.sqrt(),
        }
    }

    /// Zero kind whose first entry bounds the convex functional's disk.
    pub fn derivative_kind(&self) -> ZeroKind {
        match self.form {
            Form::F => ZeroKind::WeightedDerivative,
            Form::G => ZeroKind::GPrime,
            Form::H => ZeroKind::HPrime,
        }
    }

    /// First singularity of the starlike functional (first kernel zero in `z`).
    pub fn starlike_singularity(&self) -> Result<f64> {
        let t = positive_zeros(&self.family, ZeroKind::Base, 1)?;
        Ok(self.radius_of_square(t.squares()[0]))
    }

    /// First singularity of the convex functional (first derivative-kernel zero in `z`).
    pub fn convex_singularity(&self) -> Result<f64> {
        let kind = if self.form == Form::F && self.weight() == 1.0 {
            ZeroKind::GPrime
        } else {
            self.derivative_kind()
        };
        let t = positive_zeros(&self.family, kind, 1)?;
        Ok(self.radius_of_square(t.squares()[0]))
    }

    /// `(κ, L, M)` at `z`.
    pub(crate) fn kernel_logs(&self, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        let ser = self.family.series();
        let s = self.family.scale();
        let x = match self.form {
            Form::H => -s * z,
            _ => -s * z * z,
        };
        let sums = kernel_sums(&ser, x, 3)?;
        let [b, xb1, x2b2] = sums.vals;
        if b.norm() <= POLE_GUARD * sums.abs[0] {
            return Err(Error::PoleProximity(format!(
                "kernel of {} vanishes near z = {z}",
                self.family.name()
            )));
        }
        let u = xb1 / b;
        let v = x2b2 / b;
        let (l, m) = match self.form {
            Form::H => (u, v),
            _ => (2.0 * u, 4.0 * v + 2.0 * u),
        };
        Ok((b / ser.c0(), l, m))
    }

    /// `f(z)` on the principal branch (used for normalization checks only).
    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        let (k, _, _) = self.kernel_logs(z)?;
        let w = self.weight();
        Ok(if w == 1.0 {
            z * k
        } else {
            z * (k.ln() / w).exp()
        })
    }
}

/// `z f′(z)/f(z)`.
pub fn starlike_functional(nf: &NormalizedFunction, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let (_, l, _) = nf.kernel_logs(z)?;
    Ok(1.0 + l / nf.weight())
}

/// `1 + z f″(z)/f′(z)`.
pub fn convex_functional(nf: &NormalizedFunction, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let (_, l, m) = nf.kernel_logs(z)?;
    let w = nf.weight();
    let den = w + l;
    if den.norm() <= POLE_GUARD * (w.abs() + l.norm()) {
        return Err(Error::PoleProximity(format!(
            "derivative of the normalized function vanishes near z = {z}"
        )));
    }
    Ok(1.0 + l / w + (l + m - l * l) / den)
}

/// A functional evaluated from zero tables.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroSum {
    pub value: Complex64,
    /// Bound on the modulus of the contribution of zeros beyond the tables.
    pub tail_bound: f64,
    pub terms: usize,
}

/// Table kinds and coefficients `c` in `1 − Σ c Σ_n y/(Z_n − y)`.
fn sum_pieces(nf: &NormalizedFunction, which: Functional) -> Vec<(ZeroKind, f64)> {
    let w = nf.weight();
    let even = nf.form != Form::H;
    let k = if even { 2.0 } else { 1.0 };
    match which {
        Functional::Starlike => vec![(ZeroKind::Base, k / w)],
        Functional::Convex => match nf.form {
            Form::F if w != 1.0 => vec![
                (ZeroKind::WeightedDerivative, 2.0),
                (ZeroKind::Base, 2.0 * (1.0 / w - 1.0)),
            ],
            Form::F | Form::G => vec![(ZeroKind::GPrime, 2.0)],
            Form::H => vec![(ZeroKind::HPrime, 1.0)],
        },
    }
}

/// The functional as a sum over zeros, e.g. `1 − (2/w) Σ z²/(ζ_n² − z²)` for
/// the starlike f-form. The f-form convex sum needs both the weighted
/// derivative and the base table.
pub fn sum_over_zeros_functional(
    nf: &NormalizedFunction,
    z: Complex64,
    tables: &[&ZeroTable],
    which: Functional,
) -> Result<ZeroSum> {
    let y = nf.y_of(z);
    let mut value = Complex64::new(1.0, 0.0);
    let mut tail_bound = 0.0;
    let mut terms = 0;
    for (kind, c) in sum_pieces(nf, which) {
        let table = tables
            .iter()
            .find(|t| t.kind() == kind && t.family() == nf.family())
            .ok_or_else(|| {
                Error::Table(format!(
                    "a {} table of {} is required",
                    kind.name(),
                    nf.family().name()
                ))
            })?;
        let tails = table.tails()?;
        if !tails.consistent {
            return Err(Error::Table(format!(
                "{} table of {} is inconsistent with a factorization over real zeros",
                kind.name(),
                nf.family().name()
            )));
        }
        let sq = table.squares();
        if y.norm() >= sq[0] {
            return Err(Error::PoleProximity(format!(
                "|y| = {} reaches the first table square {}",
                y.norm(),
                sq[0]
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for &zn in &sq {
            acc += y / (zn - y);
        }
        value -= c * acc;
        terms += sq.len();
        if !table.is_complete() {
            let zn = tails.last_square;
            let ratio = y.norm() / zn;
            if ratio >= 1.0 {
                return Err(Error::Table("table too short for this argument".into()));
            }
            tail_bound += c.abs() * y.norm() * tails.first / (1.0 - ratio);
        }
    }
    Ok(ZeroSum {
        value,
        tail_bound,
        terms,
    })
}

use clap::{Args, ValueEnum};
use radii_core::domains::TargetDomain;
use radii_core::family::FunctionFamily;
use radii_core::normalize::{Form, NormalizedFunction};
use radii_core::solver::Problem;
use radii_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Wright,
    #[value(alias = "ml")]
    MittagLeffler,
    Lommel,
    Struve,
    Legendre,
    Ramanujan,
}

/// Family selection and its parameters.
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Function family (required except for `verify --inequalities`)
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Wright rho
    #[arg(long)]
    pub rho: Option<f64>,
    /// Wright, Struve or Ramanujan beta
    #[arg(long)]
    pub beta: Option<f64>,
    /// Mittag-Leffler mu
    #[arg(long)]
    pub mu: Option<f64>,
    /// Mittag-Leffler nu
    #[arg(long)]
    pub nu: Option<f64>,
    /// Mittag-Leffler or Ramanujan a
    #[arg(long)]
    pub a: Option<f64>,
    /// Lommel u
    #[arg(long)]
    pub u: Option<f64>,
    /// Legendre index n (degree 2n - 1)
    #[arg(long)]
    pub n: Option<u32>,
    /// Ramanujan q
    #[arg(long)]
    pub q: Option<f64>,
}

fn need<T>(v: Option<T>, family: &str, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{family} needs --{flag}")))
}

impl FamilyArgs {
    pub fn build(&self) -> Result<FunctionFamily> {
        let family = self
            .family
            .ok_or_else(|| Error::InvalidParameter("--family is required".into()))?;
        match family {
            FamilyName::Wright => FunctionFamily::wright(
                need(self.rho, "wright", "rho")?,
                need(self.beta, "wright", "beta")?,
            ),
            FamilyName::MittagLeffler => FunctionFamily::mittag_leffler(
                need(self.mu, "mittag-leffler", "mu")?,
                need(self.nu, "mittag-leffler", "nu")?,
                need(self.a, "mittag-leffler", "a")?,
            ),
            FamilyName::Lommel => FunctionFamily::lommel(need(self.u, "lommel", "u")?),
            FamilyName::Struve => FunctionFamily::struve(need(self.beta, "struve", "beta")?),
            FamilyName::Legendre => FunctionFamily::legendre(need(self.n, "legendre", "n")?),
            FamilyName::Ramanujan => FunctionFamily::ramanujan(
                need(self.beta, "ramanujan", "beta")?,
                need(self.q, "ramanujan", "q")?,
                self.a.unwrap_or(0.0),
            ),
        }
    }
}

/// Family plus normalization form.
#[derive(Args, Debug, Clone)]
pub struct FunctionArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Normalization form: f, g, h (Struve: U, V, W; Legendre: g or P)
    #[arg(long, default_value = "g")]
    pub form: String,
}

impl FunctionArgs {
    pub fn build(&self) -> Result<NormalizedFunction> {
        NormalizedFunction::new(self.family.build()?, self.form.parse::<Form>()?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DomainName {
    Janowski,
    RlCrescent,
    Lemniscate,
    Exponential,
    Lune,
    CardioidExp,
    Sigmoid,
    Sine,
    Conic,
    Disk,
}

/// Target domain selection.
#[derive(Args, Debug, Clone)]
pub struct DomainArgs {
    /// Target domain (starlike and convex problems)
    #[arg(long, value_enum, default_value = "disk")]
    pub domain: DomainName,
    /// Janowski D
    #[arg(long = "d")]
    pub d: Option<f64>,
    /// Janowski E
    #[arg(long = "e")]
    pub e: Option<f64>,
    /// Conic kappa
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Disk radius alpha
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
}

impl DomainArgs {
    pub fn build(&self) -> Result<TargetDomain> {
        let t = match self.domain {
            DomainName::Janowski => TargetDomain::Janowski {
                d: need(self.d, "janowski", "d")?,
                e: need(self.e, "janowski", "e")?,
            },
            DomainName::RlCrescent => TargetDomain::RlCrescent,
            DomainName::Lemniscate => TargetDomain::Lemniscate,
            DomainName::Exponential => TargetDomain::Exponential,
            DomainName::Lune => TargetDomain::Lune,
            DomainName::CardioidExp => TargetDomain::CardioidExp,
            DomainName::Sigmoid => TargetDomain::Sigmoid,
            DomainName::Sine => TargetDomain::Sine,
            DomainName::Conic => TargetDomain::Conic {
                kappa: need(self.kappa, "conic", "kappa")?,
            },
            DomainName::Disk => TargetDomain::Disk { alpha: self.alpha },
        };
        t.validate()?;
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemName {
    Starlike,
    Convex,
    StronglyStarlike,
}

/// Problem selection.
#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Radius problem
    #[arg(long, value_enum, default_value = "starlike")]
    pub problem: ProblemName,
    #[command(flatten)]
    pub domain: DomainArgs,
    /// Order of strong starlikeness, in (0, 1]
    #[arg(long)]
    pub epsilon: Option<f64>,
}

impl ProblemArgs {
    pub fn build(&self) -> Result<Problem> {
        Ok(match self.problem {
            ProblemName::Starlike => Problem::Starlike {
                domain: self.domain.build()?,
            },
            ProblemName::Convex => Problem::Convex {
                domain: self.domain.build()?,
            },
            ProblemName::StronglyStarlike => {
                let epsilon = need(self.epsilon, "strongly-starlike", "epsilon")?;
                if !(epsilon > 0.0 && epsilon <= 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "epsilon must lie in (0, 1], got {epsilon}"
                    )));
                }
                Problem::StronglyStarlike { epsilon }
            }
        })
    }
}

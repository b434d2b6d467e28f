//! Rigorous enclosures of `θ_n` and of the Stirling ratio
//! `n! / (√(2πn) (n/e)^n)`, and a check of their asymptotic expansions
//! against a first-omitted-term error bound.

mod interval;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use interval::{exp_nat, pi_interval, sqrt_interval, RatInterval};

use crate::algebra::{int, Rat};
use crate::sequences::{gamma, rho, GammaMethod};
use crate::triangles::factorial;
use interval::bits_for;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("precision must be positive")]
    NonPositiveEps,
    #[error("interval division by an interval containing zero")]
    DivisionByZero,
    #[error("{0}")]
    Precondition(String),
    #[error("unknown target {0:?}; known: stirling, theta")]
    UnknownTarget(String),
}

/// The default width budget, `10^-40`.
pub fn default_eps() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10).pow(40))
}

/// Largest `bits` tried before an enclosure is reported as too wide.
const MAX_BITS: u32 = 1 << 14;

/// Retries `f(bits)` with doubling `bits` until the result is at most `eps`
/// wide. Each ingredient is nested in `bits`, so later results are
/// sub-intervals of earlier ones.
fn refine(
    eps: &Rat,
    f: impl Fn(u32) -> Result<RatInterval, NumericError>,
) -> Result<RatInterval, NumericError> {
    if !eps.is_positive() {
        return Err(NumericError::NonPositiveEps);
    }
    let mut bits = bits_for(eps) + 8;
    loop {
        let r = f(bits)?;
        if r.width() <= *eps || bits >= MAX_BITS {
            return Ok(r);
        }
        bits *= 2;
    }
}

fn grid(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

fn n_pow_n(n: u32) -> Rat {
    Rat::from_integer(BigInt::from(n).pow(n))
}

/// `θ_n = (e^n/2 - Σ_{k<n} n^k/k!) · n!/n^n`.
pub fn theta_exact(n: u32, eps: &Rat) -> Result<RatInterval, NumericError> {
    if n == 0 {
        return Err(NumericError::Precondition("theta needs n >= 1".into()));
    }
    let x = int(n as i64);
    let mut partial = Rat::zero();
    let mut term = Rat::one();
    for k in 0..n {
        partial += &term;
        term = term * &x / int(k as i64 + 1);
    }
    let factor = Rat::from_integer(factorial(n as u64)) / n_pow_n(n);
    refine(eps, |bits| {
        let e = exp_nat(n, &grid(bits))?;
        Ok(e.scale(&Rat::new(1.into(), 2.into())).sub(&RatInterval::point(partial.clone())).scale(&factor))
    })
}

/// `n! e^n / (n^n √(2πn))`.
pub fn stirling_exact(n: u32, eps: &Rat) -> Result<RatInterval, NumericError> {
    if n == 0 {
        return Err(NumericError::Precondition("stirling ratio needs n >= 1".into()));
    }
    let factor = Rat::from_integer(factorial(n as u64)) / n_pow_n(n);
    refine(eps, |bits| {
        let e = exp_nat(n, &grid(bits))?;
        let two_pi_n = pi_interval(&grid(bits))?.scale(&int(2 * n as i64));
        let root = two_pi_n.sqrt(bits)?;
        e.scale(&factor).div(&root)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Stirling,
    Theta,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Stirling => "stirling",
            Target::Theta => "theta",
        }
    }

    /// Coefficient of `n^-r` in the expansion: `γ_r`, or `ρ_r` for `θ_n`.
    pub fn coefficient(self, r: usize) -> Rat {
        match self {
            Target::Stirling => gamma(r, GammaMethod::WrenchRecurrence),
            Target::Theta => rho(r),
        }
    }

    pub fn exact(self, n: u32, eps: &Rat) -> Result<RatInterval, NumericError> {
        match self {
            Target::Stirling => stirling_exact(n, eps),
            Target::Theta => theta_exact(n, eps),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = NumericError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stirling" => Ok(Target::Stirling),
            "theta" => Ok(Target::Theta),
            _ => Err(NumericError::UnknownTarget(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The enclosure straddles the bound, or is wider than asked for.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct ExpansionReport {
    pub target: Target,
    pub n: u32,
    pub terms: usize,
    pub exact: RatInterval,
    pub partial_sum: Rat,
    /// Encloses `|exact - partial_sum|`.
    pub error: RatInterval,
    /// `factor · |coef_R| · n^-R`.
    pub bound: Rat,
    pub verdict: Verdict,
}

/// Encloses `E(n, R) = |exact - Σ_{r<R} coef_r n^-r|` and compares it with
/// `2 |coef_R| n^-R`.
pub fn validate_expansion(
    target: Target,
    n: u32,
    terms: usize,
    eps: &Rat,
) -> Result<ExpansionReport, NumericError> {
    validate_expansion_with_factor(target, n, terms, eps, &int(2))
}

pub fn validate_expansion_with_factor(
    target: Target,
    n: u32,
    terms: usize,
    eps: &Rat,
    factor: &Rat,
) -> Result<ExpansionReport, NumericError> {
    if terms == 0 {
        return Err(NumericError::Precondition("need at least one term".into()));
    }
    let exact = target.exact(n, eps)?;
    let inv_n = Rat::new(1.into(), (n as i64).into());
    let mut partial_sum = Rat::zero();
    let mut p = Rat::one();
    for r in 0..terms {
        partial_sum += target.coefficient(r) * &p;
        p *= &inv_n;
    }
    let bound = factor * target.coefficient(terms).abs() * p;
    let error = exact.sub(&RatInterval::point(partial_sum.clone())).abs();
    let verdict = if exact.width() > *eps {
        Verdict::Undecided
    } else if error.hi() <= &bound {
        Verdict::Pass
    } else if error.lo() > &bound {
        Verdict::Fail
    } else {
        Verdict::Undecided
    };
    Ok(ExpansionReport { target, n, terms, exact, partial_sum, error, bound, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn eps30() -> Rat {
        Rat::new(1.into(), BigInt::from(10).pow(30))
    }

    #[test]
    fn theta_one() {
        // e/2 - 1
        let t = theta_exact(1, &eps30()).unwrap();
        assert!((t.lo_f64() - 0.359_140_914_229_522_6).abs() < 1e-15);
        assert!(t.width() <= eps30());
    }

    #[test]
    fn theta_tends_to_a_third() {
        let t = theta_exact(40, &eps30()).unwrap();
        assert!((t.lo_f64() - 1.0 / 3.0).abs() < 1e-3);
    }

    #[test]
    fn stirling_ratio_close_to_one() {
        let s = stirling_exact(10, &eps30()).unwrap();
        assert!((s.lo_f64() - (1.0 + 1.0 / 120.0)).abs() < 1e-4);
        assert!(s.width() <= eps30());
    }

    #[test]
    fn examples_pass() {
        for (t, n, r) in [(Target::Stirling, 20, 4), (Target::Theta, 20, 3), (Target::Stirling, 20, 1)] {
            let rep = validate_expansion(t, n, r, &default_eps()).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "{t} {n} {r}");
        }
        assert_eq!(Target::Theta.coefficient(3), rat(-16, 8505));
    }

    #[test]
    fn small_n_still_within_bound() {
        // The coefficients only start to grow around r = 12, so even n = 2
        // with ten terms stays inside the heuristic bound.
        let rep = validate_expansion(Target::Theta, 2, 10, &default_eps()).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        let tight = validate_expansion_with_factor(Target::Theta, 2, 10, &default_eps(), &rat(1, 2)).unwrap();
        assert_eq!(tight.verdict, Verdict::Fail);
    }

    #[test]
    fn bad_args() {
        assert!(theta_exact(0, &eps30()).is_err());
        assert_eq!(theta_exact(3, &int(0)), Err(NumericError::NonPositiveEps));
        assert!("gamma".parse::<Target>().is_err());
    }
}

//! Exact scalars, polynomials, truncated power series and De Moivre polynomials.

mod demoivre;
mod poly;
mod scalar;
mod series;
mod sqrt2;

pub use demoivre::{demoivre, demoivre_multinomial, demoivre_row};
pub use poly::{PoleAtOne, Poly};
pub use scalar::{abs, from_bigint, int, rat, sign, Rat, Scalar};
pub use series::PowerSeries;
pub use sqrt2::Sqrt2Rat;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("coefficient x^{index} requested but the series is only known to O(x^{prec})")]
    BeyondPrecision { index: usize, prec: usize },
    #[error("constant term is not invertible")]
    ZeroConstantTerm,
    #[error("constant term must be 1")]
    NonUnitConstantTerm,
    #[error("constant term must be 0")]
    NonzeroConstantTerm,
    #[error("series needs F(0) = 0 and a nonzero linear term to be reverted")]
    NotReversible,
    #[error("series is not divisible by x^{0}")]
    NotDivisibleByX(usize),
    #[error("{0} is not rational")]
    Irrational(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

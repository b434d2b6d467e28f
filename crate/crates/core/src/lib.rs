//! Exact arithmetic for the coefficients of Stirling's approximation and of
//! Ramanujan's expansions of `θ_n` and `Ψ_n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, ℚ(√2), polynomials, truncated power series
//!   with composition and reversion, De Moivre polynomials.
//! * [`triangles`]: Stirling cycle and second-order Eulerian triangles (plain
//!   and starred), associated Stirling numbers, Bernoulli numbers and `ω_n`.
//! * [`sequences`]: `γ_r`, `ρ_r`, `ψ_r`, `τ_r`, `c_n`, `S_n(k)`, `α`, `α*`,
//!   `β`, `β*`, each by every known formula.
//! * [`verifier`]: a registry of identities checked exactly over index ranges.
//! * [`numeric`]: rational interval arithmetic that checks the asymptotic
//!   expansions against enclosures of the true function values.
//!
//! ```
//! use ramastir::algebra::rat;
//! use ramastir::sequences::{gamma, psi, GammaMethod};
//!
//! assert_eq!(gamma(3, GammaMethod::WrenchRecurrence), rat(-139, 51840));
//! assert_eq!(psi(2), rat(8, 2835));
//! ```

pub mod algebra;
mod memo;
pub mod numeric;
pub mod sequences;
pub mod triangles;
pub mod verifier;

#[cfg(doctest)]
mod book;

//! The components `α(j)`, `α*(j)`, `β(j)`, `β*(j)` and the exact evaluation
//! of integrals `∫_{-∞}^0 t^a (1-t)^(-e) N(t) dt` as beta-function sums.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{int, sign, Poly, Rat};
use crate::triangles::{
    bernoulli, binom_rat, eulerian2, eulerian2_poly, eulerian2_star, fact, stirling_cycle,
    stirling_cycle_star,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegralError {
    #[error("integral diverges: t^{power} (1-t)^-{pole} is not integrable on (-inf, 0]")]
    Divergent { power: i64, pole: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaMethod {
    /// Double sum over `ℓ` and `k` with Stirling cycle numbers.
    Definition,
    /// `-1/(2(j+1)) Σ_r (-1)^r <<j+1,r>> / C(2j+1, r+1)`.
    Eulerian,
    /// `B_{j+1}/(j+1)`.
    Bernoulli,
    /// `∫ t (1-t)^-1 F_{j+1}(t) dt`.
    BetaIntegral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaStarMethod {
    /// Double sum with the modified Stirling cycle numbers.
    Definition,
    /// `-1/(2(j+1)) Σ_r (-1)^r <<j+1,r>>* / C(2j+1, r+1)`.
    Eulerian,
    /// `∫ t (1-t)^-1 F*_{j+1}(t) dt`.
    BetaIntegral,
    /// `(-1)^j ∫ (1-t)^-3 F_j(t) dt`.
    BetaIntegralUnstarred,
    /// `(-1)^j/(2(j+1)) Σ_k (-1)^k <<j,k>> / C(2j+1, k)`.
    EulerianClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaMethod {
    Definition,
    /// `-1/(2j+3) Σ_r (-1)^r <<j+1,r>> / C(2j+2, r+2)`.
    Eulerian,
    /// `-∫ t^2 (1-t)^-2 F_{j+1}(t) dt`.
    BetaIntegral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaStarMethod {
    Definition,
    Eulerian,
}

/// `∫_{-∞}^0 t^a (1-t)^(-e) dt = (-1)^a a! (e-a-2)! / (e-1)!`.
pub fn monomial_integral(a: i64, e: i64) -> Result<Rat, IntegralError> {
    if a < 0 || e - a - 2 < 0 {
        return Err(IntegralError::Divergent { power: a, pole: e });
    }
    Ok(int(sign(a)) * fact(a as u64) * fact((e - a - 2) as u64) / fact((e - 1) as u64))
}

/// `∫_{-∞}^0 t^(a+offset) (1-t)^(-e) N(t) dt` for a polynomial numerator `N`.
pub fn ratfun_integral(num: &Poly, a: i64, offset: i64, e: i64) -> Result<Rat, IntegralError> {
    let mut acc = Rat::zero();
    for (k, p) in num.coeffs().iter().enumerate() {
        if !p.is_zero() {
            acc += p * monomial_integral(a + offset + k as i64, e)?;
        }
    }
    Ok(acc)
}

/// `∫_{-∞}^0 t^a (1-t)^(-a-b-2) F_n(t) dt` (or with `F*_n` when `starred`),
/// evaluated term by term as beta integrals.
pub fn beta_integral_f(a: i64, b: i64, n: usize, starred: bool) -> Result<Rat, IntegralError> {
    check_beta_args(a, b, n, starred)?;
    let e = a + b + 2 + 2 * n as i64;
    if starred {
        let num = crate::triangles::eulerian2_star_poly_shifted(n)
            .map_err(|err| IntegralError::Precondition(err.to_string()))?;
        ratfun_integral(&num, a, -1, e)
    } else {
        ratfun_integral(&eulerian2_poly(n), a, 0, e)
    }
}

/// The closed form `(-1)^a/(2n+a+b+1) Σ_{k<n} (-1)^k <<n,k>> / C(2n+a+b, k+a)`.
pub fn beta_integral_closed(a: i64, b: i64, n: usize, starred: bool) -> Result<Rat, IntegralError> {
    check_beta_args(a, b, n, starred)?;
    let ni = n as i64;
    let mut acc = Rat::zero();
    for k in 0..ni {
        let e = if starred {
            eulerian2_star(n, k).expect("n >= 2")
        } else {
            eulerian2(n, k)
        };
        acc += int(sign(k)) * e / binom_rat(2 * ni + a + b, k + a);
    }
    Ok(int(sign(a)) * acc / int(2 * ni + a + b + 1))
}

fn check_beta_args(a: i64, b: i64, n: usize, starred: bool) -> Result<(), IntegralError> {
    if a < 0 {
        return Err(IntegralError::Precondition(format!("a = {a} must be >= 0")));
    }
    if n < 1 || (starred && n < 2) {
        return Err(IntegralError::Precondition(format!(
            "n = {n} too small{}",
            if starred { " for the starred form" } else { "" }
        )));
    }
    if n as i64 + b + 1 < 0 {
        return Err(IntegralError::Precondition(format!("n + b + 1 = {} < 0", n as i64 + b + 1)));
    }
    Ok(())
}

/// `Σ_{ℓ=2}^{top} 1/ℓ Σ_{k=low}^{ℓ} (-1)^k k · cyc(k, k-j) · C(ℓ-low, k-low)`.
fn component_sum(j: usize, top: i64, low: i64, cyc: impl Fn(usize, i64) -> Rat) -> Rat {
    let ji = j as i64;
    let mut acc = Rat::zero();
    for l in 2..=top {
        let mut inner = Rat::zero();
        for k in low..=l {
            let s = cyc(k as usize, k - ji);
            if !s.is_zero() {
                inner += int(sign(k) * k) * s * binom_rat(l - low, k - low);
            }
        }
        acc += inner / int(l);
    }
    acc
}

fn eulerian_component(
    j: usize,
    scale: Rat,
    top: i64,
    shift: i64,
    entry: impl Fn(usize, i64) -> Rat,
) -> Rat {
    let mut acc = Rat::zero();
    for r in 0..=j as i64 {
        acc += int(sign(r)) * entry(j + 1, r) / binom_rat(top, r + shift);
    }
    scale * acc
}

fn star(n: usize, k: i64) -> Rat {
    eulerian2_star(n, k).expect("n >= 1")
}

pub fn alpha(j: usize, method: AlphaMethod) -> Rat {
    let ji = j as i64;
    match method {
        AlphaMethod::Definition => component_sum(j, 2 * ji + 2, 1, stirling_cycle),
        AlphaMethod::Bernoulli => bernoulli(j + 1) / int(ji + 1),
        _ if j == 0 => Rat::new(1.into(), 2.into()),
        AlphaMethod::Eulerian => {
            eulerian_component(j, int(-1) / int(2 * ji + 2), 2 * ji + 1, 1, eulerian2)
        }
        AlphaMethod::BetaIntegral => beta_integral_f(1, -2, j + 1, false).expect("valid for j >= 1"),
    }
}

pub fn alpha_star(j: usize, method: AlphaStarMethod) -> Rat {
    let ji = j as i64;
    match method {
        AlphaStarMethod::Definition => component_sum(j, 2 * ji + 2, 1, stirling_cycle_star),
        _ if j == 0 => Rat::new(1.into(), 2.into()),
        AlphaStarMethod::Eulerian => {
            eulerian_component(j, int(-1) / int(2 * ji + 2), 2 * ji + 1, 1, star)
        }
        AlphaStarMethod::BetaIntegral => beta_integral_f(1, -2, j + 1, true).expect("valid for j >= 1"),
        AlphaStarMethod::BetaIntegralUnstarred => {
            int(sign(ji)) * beta_integral_f(0, 1, j, false).expect("valid for j >= 1")
        }
        AlphaStarMethod::EulerianClosed => {
            let mut acc = Rat::zero();
            for k in 0..ji {
                acc += int(sign(k)) * eulerian2(j, k) / binom_rat(2 * ji + 1, k);
            }
            int(sign(ji)) * acc / int(2 * ji + 2)
        }
    }
}

pub fn beta(j: usize, method: BetaMethod) -> Rat {
    let ji = j as i64;
    match method {
        BetaMethod::Definition => component_sum(j, 2 * ji + 3, 2, stirling_cycle),
        _ if j == 0 => Rat::new(2.into(), 3.into()),
        BetaMethod::Eulerian => {
            eulerian_component(j, int(-1) / int(2 * ji + 3), 2 * ji + 2, 2, eulerian2)
        }
        BetaMethod::BetaIntegral => -beta_integral_f(2, -2, j + 1, false).expect("valid for j >= 1"),
    }
}

pub fn beta_star(j: usize, method: BetaStarMethod) -> Rat {
    let ji = j as i64;
    match method {
        BetaStarMethod::Definition => component_sum(j, 2 * ji + 3, 2, stirling_cycle_star),
        _ if j == 0 => Rat::new(1.into(), 6.into()),
        BetaStarMethod::Eulerian => {
            eulerian_component(j, int(-1) / int(2 * ji + 3), 2 * ji + 2, 2, star)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn base_values() {
        assert_eq!(alpha(0, AlphaMethod::Definition), rat(1, 2));
        assert_eq!(alpha_star(0, AlphaStarMethod::Definition), rat(1, 2));
        assert_eq!(beta(0, BetaMethod::Definition), rat(2, 3));
        assert_eq!(beta_star(0, BetaStarMethod::Definition), rat(1, 6));
        assert_eq!(alpha(1, AlphaMethod::Definition), rat(1, 12));
        assert_eq!(alpha_star(1, AlphaStarMethod::Definition), rat(-1, 4));
    }

    #[test]
    fn methods_agree_small() {
        for j in 0..=8 {
            let a = alpha(j, AlphaMethod::Definition);
            assert_eq!(alpha(j, AlphaMethod::Eulerian), a, "α({j})");
            assert_eq!(alpha(j, AlphaMethod::Bernoulli), a, "α({j})");
            assert_eq!(alpha(j, AlphaMethod::BetaIntegral), a, "α({j})");
            let s = alpha_star(j, AlphaStarMethod::Definition);
            for m in [
                AlphaStarMethod::Eulerian,
                AlphaStarMethod::BetaIntegral,
                AlphaStarMethod::BetaIntegralUnstarred,
                AlphaStarMethod::EulerianClosed,
            ] {
                assert_eq!(alpha_star(j, m), s, "α*({j}) {m:?}");
            }
            let b = beta(j, BetaMethod::Definition);
            assert_eq!(beta(j, BetaMethod::Eulerian), b, "β({j})");
            assert_eq!(beta(j, BetaMethod::BetaIntegral), b, "β({j})");
            assert_eq!(
                beta_star(j, BetaStarMethod::Eulerian),
                beta_star(j, BetaStarMethod::Definition),
                "β*({j})"
            );
        }
    }

    #[test]
    fn integral_matches_closed_form() {
        for n in 1..=6 {
            for a in 0..=4 {
                for b in -(n as i64 + 1)..=4 {
                    assert_eq!(
                        beta_integral_f(a, b, n, false).unwrap(),
                        beta_integral_closed(a, b, n, false).unwrap(),
                        "a={a} b={b} n={n}"
                    );
                    if n >= 2 {
                        assert_eq!(
                            beta_integral_f(a, b, n, true).unwrap(),
                            beta_integral_closed(a, b, n, true).unwrap(),
                            "starred a={a} b={b} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn integral_spot_values() {
        assert_eq!(beta_integral_f(1, 0, 1, false).unwrap(), rat(-1, 12));
        // m = 0 gives -1/2: the α(0) = 1/2 case is not an integral.
        assert_eq!(beta_integral_f(1, -2, 1, false).unwrap(), rat(-1, 2));
        for m in 1..=10 {
            assert_eq!(
                beta_integral_f(1, -2, m + 1, false).unwrap(),
                bernoulli(m + 1) / int(m as i64 + 1)
            );
        }
        assert!(beta_integral_f(0, -3, 1, false).is_err());
        assert!(beta_integral_f(0, 0, 1, true).is_err());
        assert!(beta_integral_f(-1, 0, 2, false).is_err());
    }
}

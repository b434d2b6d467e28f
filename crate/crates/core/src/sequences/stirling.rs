//! Stirling's `γ_r`, Ramanujan's `ρ_r` (via `ρ̂_r = ρ_r - δ_{r,0}`), the
//! companion `τ_r` and `ψ_r`.

use std::sync::Arc;

use num_traits::Zero;

use super::components::{alpha_star, AlphaStarMethod};
use super::watson::{c_n, c_upto, weighted_self_convolution, CMethod};
use crate::algebra::{demoivre_row, int, rat, sign, PowerSeries, Rat, Scalar, Sqrt2Rat};
use crate::memo::{GrowMemo, PrefixMemo};
use crate::triangles::{
    assoc_stirling, bernoulli, binomial_rat, dfact, fact, AssocKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaMethod {
    /// `r γ_r = Σ_{j<r} B_{j+2}/(j+2) γ_{r-1-j}`.
    WrenchRecurrence,
    /// `(2r-1)!! Σ_k C(-r-1/2, k) 2^k A_{2r,k}(1/3, 1/4, ...)`.
    BinomialDeMoivre,
    /// `Σ_k (2r+2k-1)!!/((-1)^k k!) A_{2r,k}(1/3, 1/4, ...)` (Perron).
    ReciprocalStream,
    /// Same with the stream `1/3!, 1/4!, ...` (Brassesco–Méndez).
    FactorialStream,
    /// `Σ_k (-1)^k/(2r+2k)!! · [2r+2k, k]_{>=3}` (Comtet).
    AssocCycle,
    /// `Σ_k (-1)^k/(2r+2k)!! · {2r+2k, k}_{>=3}` (Brassesco–Méndez).
    AssocSet,
    /// `Σ_k A_{r,k}(B_2/(2·1), 0, B_4/(4·3), 0, ...)/k!`, exponentiating `log g`.
    ExpOfLog,
    /// `(2r+1)!! c_{2r+1} / 2^((2r+1)/2)`.
    FromC,
    /// `(2r-1)!! [x^(2r)] V(x)^(-2r-1)`.
    VPower,
    /// `(2r+1)!! [x^(2r)] V*(x)`.
    VStarCoeff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhoHatMethod {
    /// `(2r)!! Σ_k C(-r-1, k) 2^k A_{2r+1,k}(1/3, 1/4, ...)`.
    BinomialDeMoivre,
    /// `Σ_k (2r+2k)!!/((-1)^k k!) A_{2r+1,k}(1/3, 1/4, ...)`.
    ReciprocalStream,
    /// `-δ_{r,0} - Σ_k (2r+2k)!!/((-1)^k k!) A_{2r+1,k}(1/3!, 1/4!, ...)`.
    FactorialStream,
    /// `Σ_k (-1)^k/(2r+2k+1)!! · [2r+2k+1, k]_{>=3}`.
    AssocCycle,
    /// `-δ_{r,0} - Σ_k (-1)^k/(2r+2k+1)!! · {2r+2k+1, k}_{>=3}`.
    AssocSet,
    /// `(r+1/2) ρ̂_r = α*(r+1) - B_{r+2}/(r+2) + Σ_{j<r} B_{j+2}/(j+2) ρ̂_{r-1-j}`.
    AlphaRecurrence,
    /// `-(2r+2)!! c_{2r+2} / 2^(r+1)`.
    FromC,
    /// `(2r)!! [x^(2r+1)] V(x)^(-2r-2)`.
    VPower,
    /// `(2r+2)!! [x^(2r+1)] V*(x)`.
    VStarCoeff,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauMethod {
    /// `(2r-1)!! Σ_k C(-r-1/2, k) 2^k A_{2r+1,k}(1/3, 1/4, ...)`.
    BinomialDeMoivre,
    /// `(2r-1)!! [x^(2r+1)] V(x)^(-2r-1)`.
    VPower,
    /// `(2r-1)!! [x^(2r)] V*'(x)/V*(x)`.
    VStarLogDerivative,
    /// `γ_r - (2r-1)!!/2^((2r-1)/2) · 1/4 Σ_{x+y=2r+3} x c_x · y c_y`.
    FromC,
}

/// `S(x) = x/3 + x^2/4 + x^3/5 + ...`
pub fn s_series(prec: usize) -> PowerSeries {
    PowerSeries::from_fn(prec, |j| if j == 0 { Rat::zero() } else { rat(1, j as i64 + 2) })
}

static V: GrowMemo<PowerSeries> = GrowMemo::new();
static VSTAR: GrowMemo<PowerSeries> = GrowMemo::new();

/// `V(x) = (1 + 2S(x))^(1/2)` to at least `prec` terms.
pub fn v_series(prec: usize) -> Arc<PowerSeries> {
    V.at_least(prec, |p| {
        s_series(p)
            .scale(&int(2))
            .add(&PowerSeries::one(p))
            .pow(&rat(1, 2))
            .expect("unit constant term")
    })
}

/// `V*` with `x V*(x)` the compositional inverse of `x V(x)`, to at least `prec` terms.
pub fn vstar_series(prec: usize) -> Arc<PowerSeries> {
    VSTAR.at_least(prec, |p| {
        let xv = v_series(p).as_ref().clone().truncate(p).mul_x_pow(1);
        xv.revert()
            .expect("x V(x) is reversible")
            .div_x_pow(1)
            .expect("no constant term")
    })
}

fn reciprocal_stream(len: usize) -> Vec<Rat> {
    (1..=len).map(|j| rat(1, j as i64 + 2)).collect()
}

fn factorial_stream(len: usize) -> Vec<Rat> {
    (1..=len).map(|j| int(1) / fact(j as u64 + 2)).collect()
}

/// `[x^n] V(x)^e`.
fn v_power_coeff(n: usize, e: i64) -> Rat {
    let v = v_series(n + 1).as_ref().clone().truncate(n + 1);
    v.pow(&int(e)).expect("unit constant term").coeffs()[n].clone()
}

static GAMMA_WRENCH: PrefixMemo<Rat> = PrefixMemo::new();

fn next_gamma(prev: &[Rat]) -> Rat {
    let r = prev.len();
    if r == 0 {
        return int(1);
    }
    let mut acc = Rat::zero();
    for j in 0..r {
        acc += bernoulli(j + 2) / int(j as i64 + 2) * &prev[r - 1 - j];
    }
    acc / int(r as i64)
}

/// Stirling coefficient `γ_r`.
pub fn gamma(r: usize, method: GammaMethod) -> Rat {
    let ri = r as i64;
    match method {
        GammaMethod::WrenchRecurrence => GAMMA_WRENCH.get(r, next_gamma),
        GammaMethod::BinomialDeMoivre => {
            let a = demoivre_row(2 * r, &reciprocal_stream(2 * r + 1));
            let alpha = rat(-2 * ri - 1, 2);
            let sum: Rat = a
                .iter()
                .enumerate()
                .map(|(k, akr)| {
                    binomial_rat(&alpha, k as i64).expect("k >= 0") * int(2).pow(k as i32) * akr
                })
                .sum();
            dfact(2 * ri - 1) * sum
        }
        GammaMethod::ReciprocalStream | GammaMethod::FactorialStream => {
            let stream = if method == GammaMethod::ReciprocalStream {
                reciprocal_stream(2 * r + 1)
            } else {
                factorial_stream(2 * r + 1)
            };
            let a = demoivre_row(2 * r, &stream);
            a.iter()
                .enumerate()
                .map(|(k, akr)| {
                    let ki = k as i64;
                    dfact(2 * ri + 2 * ki - 1) * int(sign(ki)) / fact(k as u64) * akr
                })
                .sum()
        }
        GammaMethod::AssocCycle | GammaMethod::AssocSet => {
            let kind = if method == GammaMethod::AssocCycle {
                AssocKind::Cycle
            } else {
                AssocKind::Set
            };
            (0..=2 * r)
                .map(|k| {
                    let n = 2 * r + 2 * k;
                    int(sign(k as i64)) / dfact(n as i64) * assoc_stirling(kind, n, k)
                })
                .sum()
        }
        GammaMethod::ExpOfLog => {
            let stream: Vec<Rat> = (1..=r.max(1))
                .map(|j| bernoulli(j + 1) / int(((j + 1) * j) as i64))
                .collect();
            let a = demoivre_row(r, &stream);
            a.iter()
                .enumerate()
                .map(|(k, akr)| akr / fact(k as u64))
                .sum()
        }
        GammaMethod::FromC => {
            let c = c_n(2 * r + 1, CMethod::Recursion);
            let v = c.scale(&dfact(2 * ri + 1)) * Sqrt2Rat::sqrt2_pow(-(2 * ri + 1));
            v.to_rational().expect("γ_r is rational")
        }
        GammaMethod::VPower => dfact(2 * ri - 1) * v_power_coeff(2 * r, -2 * ri - 1),
        GammaMethod::VStarCoeff => dfact(2 * ri + 1) * vstar_series(2 * r + 1).coeffs()[2 * r].clone(),
    }
}

/// Shifted Ramanujan coefficient `ρ̂_r = ρ_r - δ_{r,0}`.
pub fn rho_hat(r: usize, method: RhoHatMethod) -> Rat {
    let ri = r as i64;
    let delta = int((r == 0) as i64);
    match method {
        RhoHatMethod::BinomialDeMoivre => {
            let a = demoivre_row(2 * r + 1, &reciprocal_stream(2 * r + 1));
            let alpha = int(-ri - 1);
            let sum: Rat = a
                .iter()
                .enumerate()
                .map(|(k, akr)| {
                    binomial_rat(&alpha, k as i64).expect("k >= 0") * int(2).pow(k as i32) * akr
                })
                .sum();
            dfact(2 * ri) * sum
        }
        RhoHatMethod::ReciprocalStream | RhoHatMethod::FactorialStream => {
            let stream = if method == RhoHatMethod::ReciprocalStream {
                reciprocal_stream(2 * r + 1)
            } else {
                factorial_stream(2 * r + 1)
            };
            let a = demoivre_row(2 * r + 1, &stream);
            let sum: Rat = a
                .iter()
                .enumerate()
                .map(|(k, akr)| {
                    let ki = k as i64;
                    dfact(2 * ri + 2 * ki) * int(sign(ki)) / fact(k as u64) * akr
                })
                .sum();
            if method == RhoHatMethod::ReciprocalStream {
                sum
            } else {
                -sum - delta
            }
        }
        RhoHatMethod::AssocCycle | RhoHatMethod::AssocSet => {
            let kind = if method == RhoHatMethod::AssocCycle {
                AssocKind::Cycle
            } else {
                AssocKind::Set
            };
            let sum: Rat = (0..=2 * r + 1)
                .map(|k| {
                    let n = 2 * r + 2 * k + 1;
                    int(sign(k as i64)) / dfact(n as i64) * assoc_stirling(kind, n, k)
                })
                .sum();
            if kind == AssocKind::Cycle {
                sum
            } else {
                -sum - delta
            }
        }
        RhoHatMethod::AlphaRecurrence => {
            let mut hats: Vec<Rat> = Vec::with_capacity(r + 1);
            for m in 0..=r {
                let mut acc = alpha_star(m + 1, AlphaStarMethod::EulerianClosed)
                    - bernoulli(m + 2) / int(m as i64 + 2);
                for j in 0..m {
                    acc += bernoulli(j + 2) / int(j as i64 + 2) * &hats[m - 1 - j];
                }
                hats.push(acc / rat(2 * m as i64 + 1, 2));
            }
            hats.pop().expect("nonempty")
        }
        RhoHatMethod::FromC => {
            let c = c_n(2 * r + 2, CMethod::Recursion);
            let v = c.scale(&dfact(2 * ri + 2)) * Sqrt2Rat::sqrt2_pow(-(2 * ri + 2));
            -v.to_rational().expect("ρ̂_r is rational")
        }
        RhoHatMethod::VPower => dfact(2 * ri) * v_power_coeff(2 * r + 1, -2 * ri - 2),
        RhoHatMethod::VStarCoeff => {
            dfact(2 * ri + 2) * vstar_series(2 * r + 2).coeffs()[2 * r + 1].clone()
        }
    }
}

/// Ramanujan's `ρ_r`, the coefficients of `θ_n ~ Σ ρ_r n^(-r)`.
pub fn rho(r: usize) -> Rat {
    rho_hat(r, RhoHatMethod::BinomialDeMoivre) + int((r == 0) as i64)
}

pub fn tau(r: usize, method: TauMethod) -> Rat {
    let ri = r as i64;
    match method {
        TauMethod::BinomialDeMoivre => {
            let a = demoivre_row(2 * r + 1, &reciprocal_stream(2 * r + 1));
            let alpha = rat(-2 * ri - 1, 2);
            let sum: Rat = a
                .iter()
                .enumerate()
                .map(|(k, akr)| {
                    binomial_rat(&alpha, k as i64).expect("k >= 0") * int(2).pow(k as i32) * akr
                })
                .sum();
            dfact(2 * ri - 1) * sum
        }
        TauMethod::VPower => dfact(2 * ri - 1) * v_power_coeff(2 * r + 1, -2 * ri - 1),
        TauMethod::VStarLogDerivative => {
            let vs = vstar_series(2 * r + 2).as_ref().clone().truncate(2 * r + 2);
            let logd = vs.derive().mul(&vs.recip().expect("unit constant term"));
            dfact(2 * ri - 1) * logd.coeffs()[2 * r].clone()
        }
        TauMethod::FromC => {
            let c = c_upto(2 * r + 3);
            let conv = weighted_self_convolution(&c, 2 * r + 3).scale(&rat(1, 4));
            let corr = conv.scale(&dfact(2 * ri - 1)) * Sqrt2Rat::sqrt2_pow(-(2 * ri - 1));
            gamma(r, GammaMethod::FromC) - corr.to_rational().expect("τ_r is rational")
        }
    }
}

static PSI: PrefixMemo<Rat> = PrefixMemo::new();

/// `ψ_r` from the triangular system `Σ_{j<=r} ψ_j γ_{r-j} = τ_r` (`γ_0 = 1`).
pub fn psi(r: usize) -> Rat {
    PSI.get(r, |prev| {
        let r = prev.len();
        let mut acc = tau(r, TauMethod::BinomialDeMoivre);
        for (j, p) in prev.iter().enumerate() {
            acc -= p * gamma(r - j, GammaMethod::WrenchRecurrence);
        }
        acc
    })
}

/// `ψ_0 ..= ψ_r` solved from arbitrary `τ` and `γ` tables.
pub fn psi_from(tau: &[Rat], gamma: &[Rat], r: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(r + 1);
    for m in 0..=r {
        let mut acc = tau[m].clone();
        for (j, p) in out.iter().enumerate() {
            acc -= p * &gamma[m - j];
        }
        out.push(acc / &gamma[0]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA: [(i64, i64); 4] = [(1, 1), (1, 12), (1, 288), (-139, 51840)];

    #[test]
    fn v_and_vstar_heads() {
        let v = v_series(4);
        assert_eq!(v.coeffs()[..4], [int(1), rat(1, 3), rat(7, 36), rat(73, 540)]);
        let vs = vstar_series(5);
        assert_eq!(
            vs.coeffs()[..5],
            [int(1), rat(-1, 3), rat(1, 36), rat(1, 270), rat(1, 4320)]
        );
    }

    #[test]
    fn v_inverse_square_gives_rho_hat_zero() {
        assert_eq!(v_power_coeff(1, -2), rat(-2, 3));
    }

    #[test]
    fn gamma_all_methods() {
        for &m in super::super::GAMMA_METHODS {
            for (r, &(p, q)) in GAMMA.iter().enumerate() {
                assert_eq!(gamma(r, m), rat(p, q), "{m:?} r={r}");
            }
        }
    }

    #[test]
    fn rho_hat_all_methods() {
        let expect = [rat(-2, 3), rat(4, 135), rat(-8, 2835), rat(-16, 8505)];
        for &m in super::super::RHO_HAT_METHODS {
            for (r, e) in expect.iter().enumerate() {
                assert_eq!(&rho_hat(r, m), e, "{m:?} r={r}");
            }
        }
    }

    #[test]
    fn tau_methods() {
        for &m in super::super::TAU_METHODS {
            assert_eq!(tau(0, m), rat(-1, 3), "{m:?}");
        }
        let t5: Vec<Rat> = super::super::TAU_METHODS.iter().map(|&m| tau(5, m)).collect();
        assert!(t5.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(0), rat(-1, 3));
        assert_eq!(psi(1), rat(4, 135));
        assert_eq!(psi(2), rat(8, 2835));
        assert_eq!(psi(3), rat(-16, 8505));
    }
}

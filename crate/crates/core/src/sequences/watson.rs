//! Coefficients `c_n` of Watson's `U(t) = Σ c_n t^(n/2)` and the power sums
//! `S_n(k) = [t^(n/2)] U(t)^k`.
//!
//! Half-integer powers of `t` are avoided by working in `x = √(2t)`; every
//! `c_n` is `v_n (√2)^n` with `v_n` rational and lives in ℚ(√2).

use num_traits::{One, Zero};

use super::stirling::vstar_series;
use crate::algebra::{int, rat, sign, PowerSeries, Scalar, Sqrt2Rat};
use crate::memo::PrefixMemo;
use crate::triangles::dfact;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CMethod {
    /// `c_{n+1} = √2/(n+2)·c_n - √2/4·Σ_{j=2}^{n} c_j c_{n+2-j}`.
    Recursion,
    /// `c_n = (√2)^n (-1)^(n-1) [x^(n-1)] V*(x)` from the reverted series.
    Reversion,
}

static C_REC: PrefixMemo<Sqrt2Rat> = PrefixMemo::new();

fn next_c(prev: &[Sqrt2Rat]) -> Sqrt2Rat {
    match prev.len() {
        0 => Sqrt2Rat::one(),
        1 => Sqrt2Rat::sqrt2(),
        len => {
            let n = len - 1;
            let s2 = Sqrt2Rat::sqrt2();
            let mut sum = Sqrt2Rat::zero();
            for j in 2..=n {
                sum += &prev[j].mul_ref(&prev[n + 2 - j]);
            }
            let lead = s2.mul_ref(&prev[n]).scale(&rat(1, n as i64 + 2));
            let tail = s2.mul_ref(&sum).scale(&rat(1, 4));
            lead.sub_ref(&tail)
        }
    }
}

/// All of `c_0 ..= c_n` by the recursion.
pub fn c_upto(n: usize) -> Vec<Sqrt2Rat> {
    C_REC.upto(n, next_c)[..=n].to_vec()
}

pub fn c_n(n: usize, method: CMethod) -> Sqrt2Rat {
    match method {
        CMethod::Recursion => C_REC.get(n, next_c),
        CMethod::Reversion => {
            if n == 0 {
                return Sqrt2Rat::one();
            }
            let vs = vstar_series(n);
            let v = vs.coeffs()[n - 1].clone() * int(sign(n as i64 - 1));
            Sqrt2Rat::sqrt2_pow(n as i64).scale(&v)
        }
    }
}

/// `d_n = n!! c_n`.
pub fn d_n(n: usize) -> Sqrt2Rat {
    c_n(n, CMethod::Recursion).scale(&dfact(n as i64))
}

/// `U` truncated to `O(t^((n+1)/2))`, as a series in `t^(1/2)`.
pub fn u_series(n: usize) -> PowerSeries<Sqrt2Rat> {
    PowerSeries::new(c_upto(n))
}

/// `S_n(k) = [t^(n/2)] U(t)^k`; `S_n(0) = δ_{n,0}`.
pub fn s_n_k(n: usize, k: usize) -> Sqrt2Rat {
    let u = u_series(n);
    let uk = u.pow(&int(k as i64)).expect("U has constant term 1");
    uk.coeffs()[n].clone()
}

/// `Σ_{x+y=n} x c_x · y c_y`.
pub(crate) fn weighted_self_convolution(c: &[Sqrt2Rat], n: usize) -> Sqrt2Rat {
    let mut acc = Sqrt2Rat::zero();
    for x in 1..n {
        let term = c[x].mul_ref(&c[n - x]).scale(&int((x * (n - x)) as i64));
        acc += &term;
    }
    acc
}

/// True when `v` is of the form `q·(√2)^n` with `q` rational, i.e. its
/// `√2`-part vanishes for even `n` and its rational part for odd `n`.
pub fn has_parity(v: &Sqrt2Rat, n: usize) -> bool {
    if n % 2 == 0 {
        v.b.is_zero()
    } else {
        v.a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficients() {
        assert_eq!(c_n(0, CMethod::Recursion), Sqrt2Rat::one());
        assert_eq!(c_n(1, CMethod::Recursion), Sqrt2Rat::sqrt2());
        assert_eq!(c_n(2, CMethod::Recursion), Sqrt2Rat::rational(rat(2, 3)));
        assert_eq!(c_n(3, CMethod::Recursion), Sqrt2Rat::new(rat(0, 1), rat(1, 18)));
        assert_eq!(c_n(4, CMethod::Recursion), Sqrt2Rat::rational(rat(-2, 135)));
    }

    #[test]
    fn routes_agree() {
        for n in 0..=20 {
            assert_eq!(c_n(n, CMethod::Recursion), c_n(n, CMethod::Reversion), "c_{n}");
            assert!(has_parity(&c_n(n, CMethod::Recursion), n));
        }
    }

    #[test]
    fn watson_equation_holds() {
        // Σ_{x+y=n} x c_x c_y = n c_n + 2 c_{n-2}
        let c = c_upto(30);
        for n in 0..=30usize {
            let mut lhs = Sqrt2Rat::zero();
            for x in 0..=n {
                lhs += &c[x].mul_ref(&c[n - x]).scale(&int(x as i64));
            }
            let mut rhs = c[n].scale(&int(n as i64));
            if n >= 2 {
                rhs += &c[n - 2].scale(&int(2));
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn power_sums() {
        for k in 0..6 {
            assert_eq!(s_n_k(0, k), Sqrt2Rat::one());
        }
        // c0c2 + c1c1 + c2c0 = 2/3 + 2 + 2/3
        assert_eq!(s_n_k(2, 2), Sqrt2Rat::rational(rat(10, 3)));
        assert_eq!(s_n_k(3, 1), c_n(3, CMethod::Recursion));
        assert_eq!(s_n_k(2, 0), Sqrt2Rat::zero());
    }
}

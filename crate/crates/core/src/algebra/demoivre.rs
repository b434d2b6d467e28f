//! De Moivre polynomials `A_{n,k}(a_1, a_2, ...) = [x^n] (a_1 x + a_2 x^2 + ...)^k`.

use num_traits::Zero;

use super::scalar::{int, Rat, Scalar};
use super::series::PowerSeries;

/// `A_{n,k}(a)` where `a[0]` is `a_1`. Needs `a_1 ..= a_{n-k+1}`; missing
/// trailing entries are read as zero.
///
/// The leading zeros of the stream are factored out first, so the power is
/// always taken of a series with invertible constant term.
pub fn demoivre(n: usize, k: usize, a: &[Rat]) -> Rat {
    if k == 0 {
        return if n == 0 { int(1) } else { Rat::zero() };
    }
    if n < k {
        return Rat::zero();
    }
    let Some(v) = a.iter().position(|c| !c.is_zero()) else {
        return Rat::zero();
    };
    // (Σ a_j x^j)^k = x^{k(v+1)} · c(x)^k with c_0 = a_{v+1} ≠ 0
    let shift = k * (v + 1);
    if n < shift {
        return Rat::zero();
    }
    let m = n - shift;
    let c = PowerSeries::from_fn(m + 1, |i| a.get(v + i).cloned().unwrap_or_else(Rat::zero));
    let ck = c.pow(&int(k as i64)).expect("invertible constant term");
    ck.coeffs()[m].clone()
}

/// `A_{n,k}(a)` for every `k` in `0..=n`.
pub fn demoivre_row(n: usize, a: &[Rat]) -> Vec<Rat> {
    (0..=n).map(|k| demoivre(n, k, a)).collect()
}

/// `A_{n,k}(a)` by the explicit multinomial sum over `j_1 + 2j_2 + ... = n`,
/// `j_1 + j_2 + ... = k`. Exponential in `n`; kept as an independent check.
pub fn demoivre_multinomial(n: usize, k: usize, a: &[Rat]) -> Rat {
    if k == 0 {
        return if n == 0 { int(1) } else { Rat::zero() };
    }
    if n < k {
        return Rat::zero();
    }
    let m = n - k + 1;
    let mut total = Rat::zero();
    let mut js = vec![0usize; m];
    enumerate(0, n, k, &mut js, &mut |js| {
        // multinomial k! / Π j_i!
        let mut term = Rat::from_integer(factorial(k));
        for (i, &j) in js.iter().enumerate() {
            if j == 0 {
                continue;
            }
            let ai = a.get(i).cloned().unwrap_or_else(Rat::zero);
            term = term * ai.powi(j as u64) / Rat::from_integer(factorial(j));
        }
        total += &term;
    });
    total
}

fn enumerate(
    pos: usize,
    weight_left: usize,
    count_left: usize,
    js: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == js.len() {
        if weight_left == 0 && count_left == 0 {
            visit(js);
        }
        return;
    }
    let part = pos + 1;
    let max = (weight_left / part).min(count_left);
    for j in 0..=max {
        js[pos] = j;
        enumerate(pos + 1, weight_left - j * part, count_left - j, js, visit);
    }
    js[pos] = 0;
}

fn factorial(n: usize) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn stream(len: usize) -> Vec<Rat> {
        (1..=len).map(|j| rat(1, j as i64 + 2)).collect()
    }

    #[test]
    fn a32_of_reciprocals() {
        let a = stream(4);
        assert_eq!(demoivre(3, 2, &a), rat(1, 6));
        assert_eq!(demoivre_multinomial(3, 2, &a), rat(1, 6));
    }

    #[test]
    fn vanishes_below_diagonal() {
        let a = stream(4);
        for n in 0..5 {
            for k in n + 1..7 {
                assert!(demoivre(n, k, &a).is_zero());
            }
        }
    }

    #[test]
    fn diagonal_is_power_of_first() {
        let a = stream(1);
        for n in 0..8 {
            assert_eq!(demoivre(n, n, &a), rat(1, 3).powi(n as u64));
        }
    }

    #[test]
    fn leading_zero_stream() {
        // (x^3/3 + x^4/4 + ...)^2 starts at x^6 with 1/9
        let a = vec![rat(0, 1), rat(0, 1), rat(1, 3), rat(1, 4), rat(1, 5)];
        assert_eq!(demoivre(6, 2, &a), rat(1, 9));
        assert_eq!(demoivre(7, 2, &a), rat(1, 6));
        assert!(demoivre(5, 2, &a).is_zero());
        assert_eq!(demoivre_multinomial(7, 2, &a), rat(1, 6));
    }
}

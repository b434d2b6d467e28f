use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TriangleError;
use crate::algebra::{int, Rat};
use crate::memo::GrowMemo;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!!` with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt, TriangleError> {
    if n < -1 {
        return Err(TriangleError::OutOfRange(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= m;
        m -= 2;
    }
    Ok(acc)
}

/// `n!!` as a rational. Panics for `n < -1`; internal formulas never go there.
pub(crate) fn dfact(n: i64) -> Rat {
    Rat::from_integer(double_factorial(n).expect("double factorial index >= -1"))
}

pub(crate) fn fact(n: u64) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Generalized binomial `C(α, k) = α(α-1)…(α-k+1)/k!`.
pub fn binomial_rat(alpha: &Rat, k: i64) -> Result<Rat, TriangleError> {
    if k < 0 {
        return Err(TriangleError::OutOfRange(format!("binomial lower index {k}")));
    }
    let mut acc = int(1);
    for i in 0..k {
        acc = acc * (alpha - int(i)) / int(i + 1);
    }
    Ok(acc)
}

/// `C(n, k)` for any integer `n` (negative `n` via the falling factorial),
/// zero for `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn binom_rat(n: i64, k: i64) -> Rat {
    Rat::from_integer(binom(n, k))
}

/// `C(n, k - 1/2) = (2n)!! / ((2k-1)!! (2n-2k-1)!!)` for `0 <= k <= n`.
pub fn binomial_half(n: i64, k: i64) -> Result<Rat, TriangleError> {
    if k < 0 || n < k {
        return Err(TriangleError::OutOfRange(format!("half-integer binomial ({n}, {k} - 1/2)")));
    }
    Ok(dfact(2 * n) / (dfact(2 * k - 1) * dfact(2 * n - 2 * k - 1)))
}

/// Row recursion of an [`ATArray`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ATMode {
    /// `a_{n+1,m} = (a_{n,m} - a_{n,m+1}) / (m+1)`; heads are `ω_n`.
    Divide,
    /// `a_{n+1,m} = (a_{n,m} - a_{n,m+1}) · (m+1)`; heads are Bernoulli numbers.
    Multiply,
}

/// Akiyama–Tanigawa difference array over the seed row `1, 1/2, 1/3, ...`.
#[derive(Clone, Debug)]
pub struct ATArray {
    pub mode: ATMode,
    pub rows: Vec<Vec<Rat>>,
}

impl ATArray {
    /// Entries `a_{n,m}` for `n < rows`, `m < cols`.
    pub fn new(mode: ATMode, rows: usize, cols: usize) -> Self {
        let width = rows + cols;
        let mut table: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        let mut row: Vec<Rat> = (0..width).map(|m| Rat::new(1.into(), (m as i64 + 1).into())).collect();
        for _ in 0..rows {
            let next: Vec<Rat> = (0..row.len().saturating_sub(1))
                .map(|m| step(mode, &row[m], &row[m + 1], m))
                .collect();
            table.push(row.into_iter().take(cols).collect());
            row = next;
        }
        ATArray { mode, rows: table }
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&Rat> {
        self.rows.get(n)?.get(m)
    }
}

fn step(mode: ATMode, a: &Rat, b: &Rat, m: usize) -> Rat {
    let d = a - b;
    match mode {
        ATMode::Divide => d / int(m as i64 + 1),
        ATMode::Multiply => d * int(m as i64 + 1),
    }
}

/// Heads `a_{0,0}, a_{1,0}, ..., a_{n,0}` of an AT array, filled along
/// anti-diagonals so the cost is quadratic in `n`.
fn at_heads(mode: ATMode, n: usize) -> Vec<Rat> {
    let mut diag: Vec<Rat> = Vec::with_capacity(n + 1);
    let mut heads = Vec::with_capacity(n + 1);
    for m in 0..=n {
        diag.push(Rat::new(1.into(), (m as i64 + 1).into()));
        // diag[j] holds a_{m-1-j, j}; lift each to a_{m-j, j}.
        for j in (0..m).rev() {
            diag[j] = step(mode, &diag[j], &diag[j + 1], j);
        }
        heads.push(diag[0].clone());
    }
    heads
}

static BERNOULLI: GrowMemo<Vec<Rat>> = GrowMemo::new();
static OMEGA: GrowMemo<Vec<Rat>> = GrowMemo::new();

/// Bernoulli number `B_n` with `B_1 = +1/2`, from the multiply-mode AT array.
pub fn bernoulli(n: usize) -> Rat {
    BERNOULLI.at_least(n + 1, |s| at_heads(ATMode::Multiply, s - 1))[n].clone()
}

/// `B_n` from `Σ_{j=0}^{n} C(n+1, j) B_j = n + 1`, independent of the AT array.
pub fn bernoulli_by_recurrence(n: usize) -> Rat {
    let mut bs: Vec<Rat> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut acc = int(m as i64 + 1);
        for (j, b) in bs.iter().enumerate() {
            acc -= binom_rat(m as i64 + 1, j as i64) * b;
        }
        bs.push(acc / int(m as i64 + 1));
    }
    bs.pop().expect("nonempty")
}

/// `ω_n`, the head of row `n` of the divide-mode AT array.
pub fn omega(n: usize) -> Rat {
    OMEGA.at_least(n + 1, |s| at_heads(ATMode::Divide, s - 1))[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(5).unwrap(), 15.into());
        assert_eq!(double_factorial(6).unwrap(), 48.into());
        assert_eq!(double_factorial(0).unwrap(), 1.into());
        assert_eq!(double_factorial(-1).unwrap(), 1.into());
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_rat(&rat(-3, 2), 2).unwrap(), rat(15, 8));
        assert_eq!(binomial_rat(&rat(7, 5), 0).unwrap(), int(1));
        assert!(binomial_rat(&int(3), -1).is_err());
        for n in 0..=10i64 {
            let mut pascal = BigInt::one();
            for k in 0..=n {
                assert_eq!(binomial_rat(&int(n), k).unwrap(), Rat::from_integer(pascal.clone()));
                assert_eq!(binom(n, k), pascal);
                pascal = pascal * (n - k) / (k + 1);
            }
        }
        assert_eq!(binom(-3, 2), 6.into());
        assert_eq!(binom(4, 7), 0.into());
    }

    #[test]
    fn half_binomial() {
        // Γ(3)Γ(1/2)² / Γ(3/2)² = 2π / (π/4) = 8
        assert_eq!(binomial_half(2, 1).unwrap(), int(8));
        assert_eq!(binomial_half(0, 0).unwrap(), int(1));
        for n in 0..8 {
            assert_eq!(binomial_half(n, 0).unwrap(), binomial_half(n, n).unwrap());
            assert_eq!(binomial_half(n, 0).unwrap(), dfact(2 * n) / dfact(2 * n - 1));
        }
        assert!(binomial_half(2, 3).is_err());
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in 0..30 {
            assert_eq!(bernoulli(n), bernoulli_by_recurrence(n), "B_{n}");
        }
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(0), int(1));
        assert_eq!(omega(1), rat(1, 2));
        assert_eq!(omega(2), rat(5, 12));
        assert_eq!(omega(3), rat(7, 18));
        assert_eq!(omega(4), rat(1631, 4320));
    }

    #[test]
    fn divide_array_matches_table() {
        let a = ATArray::new(ATMode::Divide, 3, 3);
        assert_eq!(a.get(1, 1), Some(&rat(1, 12)));
        assert_eq!(a.get(1, 2), Some(&rat(1, 36)));
        assert_eq!(a.get(2, 1), Some(&rat(1, 36)));
        assert_eq!(a.get(2, 2), Some(&rat(11, 2160)));
        let heads: Vec<Rat> = (0..3).map(|n| a.get(n, 0).unwrap().clone()).collect();
        assert_eq!(heads, at_heads(ATMode::Divide, 2));
    }

    #[test]
    fn multiply_array_heads_are_bernoulli() {
        let a = ATArray::new(ATMode::Multiply, 10, 1);
        for n in 0..10 {
            assert_eq!(a.get(n, 0).unwrap(), &bernoulli(n));
        }
    }
}

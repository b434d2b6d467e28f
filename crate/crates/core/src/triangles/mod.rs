//! Combinatorial triangles and the scalar number sequences feeding them.
//!
//! Every triangle accepts any integer `k` and returns an exact zero outside
//! its support, so sums can run "over all `k`" without bounds bookkeeping.
//! Tables are filled row by row on demand into shared caches.

mod numbers;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{demoivre, int, sign, Poly, PoleAtOne, Rat};
use crate::memo::GrowMemo;

pub use numbers::{
    bernoulli, bernoulli_by_recurrence, binom, binomial_half, binomial_rat, double_factorial,
    factorial, omega, ATArray, ATMode,
};
pub(crate) use numbers::{binom_rat, dfact, fact};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("row {n} is undefined for {kind}")]
    UndefinedRow { kind: TriangleKind, n: usize },
    #[error("unknown triangle kind {0:?}")]
    UnknownKind(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    StirlingCycle,
    StirlingCycleStar,
    Eulerian2,
    Eulerian2Star,
    /// Cycle arrangements with every cycle of length at least 3.
    AssocCycleGe3,
    /// Set partitions with every block of size at least 3.
    AssocSetGe3,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 6] = [
        TriangleKind::StirlingCycle,
        TriangleKind::StirlingCycleStar,
        TriangleKind::Eulerian2,
        TriangleKind::Eulerian2Star,
        TriangleKind::AssocCycleGe3,
        TriangleKind::AssocSetGe3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::StirlingCycle => "stirling_cycle",
            TriangleKind::StirlingCycleStar => "stirling_cycle_star",
            TriangleKind::Eulerian2 => "eulerian2",
            TriangleKind::Eulerian2Star => "eulerian2_star",
            TriangleKind::AssocCycleGe3 => "assoc_cycle3",
            TriangleKind::AssocSetGe3 => "assoc_set3",
        }
    }

    /// First row on which the triangle is defined.
    pub fn first_row(self) -> usize {
        match self {
            TriangleKind::Eulerian2Star => 1,
            _ => 0,
        }
    }

    /// Columns `k` displayed for row `n`: the support, clipped to `k <= n`
    /// for the starred Stirling numbers whose rows are infinite.
    pub fn window(self, n: usize) -> std::ops::RangeInclusive<i64> {
        let n = n as i64;
        match self {
            TriangleKind::Eulerian2Star => -1..=n - 2,
            TriangleKind::AssocCycleGe3 | TriangleKind::AssocSetGe3 => 0..=n / 3,
            _ => 0..=n,
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleKind {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TriangleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| TriangleError::UnknownKind(s.to_string()))
    }
}

/// Handle on one of the shared triangle tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
}

impl Triangle {
    pub fn new(kind: TriangleKind) -> Self {
        Triangle { kind }
    }

    pub fn get(&self, n: usize, k: i64) -> Result<Rat, TriangleError> {
        Ok(match self.kind {
            TriangleKind::StirlingCycle => stirling_cycle(n, k),
            TriangleKind::StirlingCycleStar => stirling_cycle_star(n, k),
            TriangleKind::Eulerian2 => eulerian2(n, k),
            TriangleKind::Eulerian2Star => eulerian2_star(n, k)?,
            TriangleKind::AssocCycleGe3 | TriangleKind::AssocSetGe3 => {
                if k < 0 {
                    Rat::zero()
                } else {
                    let kind = if self.kind == TriangleKind::AssocCycleGe3 {
                        AssocKind::Cycle
                    } else {
                        AssocKind::Set
                    };
                    assoc_stirling(kind, n, k as usize)
                }
            }
        })
    }

    /// Nonzero entries `(k, value)` of row `n` inside [`TriangleKind::window`].
    pub fn row(&self, n: usize) -> Result<Vec<(i64, Rat)>, TriangleError> {
        if n < self.kind.first_row() {
            return Err(TriangleError::UndefinedRow { kind: self.kind, n });
        }
        let mut out = Vec::new();
        for k in self.kind.window(n) {
            let v = self.get(n, k)?;
            if !v.is_zero() {
                out.push((k, v));
            }
        }
        Ok(out)
    }
}

/// Dense block of a triangle: rows `0..=size`, columns `kmin..=size`.
struct Grid {
    kmin: i64,
    rows: Vec<Vec<Rat>>,
}

impl Grid {
    fn at(&self, n: usize, k: i64) -> Rat {
        let col = (k - self.kmin) as usize;
        self.rows[n][col].clone()
    }

    /// Fill rows below `seed` (row index `first`) with `next(n, row_n, k) -> row_{n+1}[k]`.
    fn build(
        size: usize,
        kmin: i64,
        first: usize,
        seed: impl Fn(i64) -> Rat,
        step: impl Fn(i64, &dyn Fn(i64) -> Rat, i64) -> Rat,
    ) -> Grid {
        let cols = (size as i64 - kmin + 1) as usize;
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); cols]; first];
        rows.push((0..cols).map(|c| seed(c as i64 + kmin)).collect());
        for n in first..size {
            let prev = &rows[n];
            let read = |k: i64| -> Rat {
                if k < kmin || k > size as i64 {
                    Rat::zero()
                } else {
                    prev[(k - kmin) as usize].clone()
                }
            };
            let next: Vec<Rat> = (0..cols).map(|c| step(n as i64, &read, c as i64 + kmin)).collect();
            rows.push(next);
        }
        Grid { kmin, rows }
    }
}

static STIRLING: GrowMemo<Grid> = GrowMemo::new();
static STIRLING_STAR: GrowMemo<Grid> = GrowMemo::new();
static EULERIAN: GrowMemo<Grid> = GrowMemo::new();
static EULERIAN_STAR: GrowMemo<Grid> = GrowMemo::new();

fn stirling_step(n: i64, row: &dyn Fn(i64) -> Rat, k: i64) -> Rat {
    // [n+1, k] = [n, k-1] + n [n, k]
    row(k - 1) + int(n) * row(k)
}

fn eulerian_step(n: i64, row: &dyn Fn(i64) -> Rat, k: i64) -> Rat {
    // <<n+1, k>> = (k+1) <<n, k>> + (2n+1-k) <<n, k-1>>
    int(k + 1) * row(k) + int(2 * n + 1 - k) * row(k - 1)
}

/// Stirling cycle number `[n, k]`.
pub fn stirling_cycle(n: usize, k: i64) -> Rat {
    if k < 0 || k > n as i64 {
        return Rat::zero();
    }
    let grid = STIRLING.at_least(n, |s| {
        Grid::build(s, 0, 0, |k| int((k == 0) as i64), stirling_step)
    });
    grid.at(n, k)
}

/// Modified Stirling cycle number `[n, k]*`: the cycle recursion started
/// from the row `[0, k]* = (-1)^(k-1) ω_k` (`k >= 1`), which yields
/// `[n, n]* = (n-1)/n` and extends past the diagonal.
pub fn stirling_cycle_star(n: usize, k: i64) -> Rat {
    if k <= 0 || (n >= 1 && k <= 1) {
        return Rat::zero();
    }
    let size = n.max(k as usize);
    let grid = STIRLING_STAR.at_least(size, |s| {
        Grid::build(
            s,
            0,
            0,
            |k| if k >= 1 { int(sign(k - 1)) * omega(k as usize) } else { Rat::zero() },
            stirling_step,
        )
    });
    grid.at(n, k)
}

/// Second-order Eulerian number `<<n, k>>`.
pub fn eulerian2(n: usize, k: i64) -> Rat {
    if k < 0 || k > n as i64 {
        return Rat::zero();
    }
    let grid = EULERIAN.at_least(n, |s| Grid::build(s, 0, 0, |k| int((k == 0) as i64), eulerian_step));
    grid.at(n, k)
}

/// Modified second-order Eulerian number `<<n, k>>*`, seeded by
/// `<<1, k>>* = δ_{k,-1}`. Row 0 does not exist.
pub fn eulerian2_star(n: usize, k: i64) -> Result<Rat, TriangleError> {
    if n == 0 {
        return Err(TriangleError::UndefinedRow { kind: TriangleKind::Eulerian2Star, n });
    }
    if k < -1 || k > n as i64 - 2 {
        return Ok(Rat::zero());
    }
    let grid = EULERIAN_STAR.at_least(n, |s| {
        Grid::build(s.max(1), -1, 1, |k| int((k == -1) as i64), eulerian_step)
    });
    Ok(grid.at(n, k))
}

/// `E_n(x) = Σ_k <<n,k>> x^k`, derived only from polynomial arithmetic on
/// `F_n = E_n / (x-1)^(2n)` with `F_0 = 1` and `F_{n+1} = (x/(1-x) · F_n)'`.
pub fn eulerian2_via_ratfun(n: usize) -> Poly {
    let minus_x = Poly::from_ints(&[0, -1]);
    let mut f = PoleAtOne::new(Poly::one(), 0);
    for _ in 0..n {
        // x/(1-x) = -x/(x-1)
        f = f.mul_poly(&minus_x).div_pole(1).derive();
    }
    debug_assert_eq!(f.pole, 2 * n);
    f.num
}

/// `E_n(x)` read straight off the triangle.
pub fn eulerian2_poly(n: usize) -> Poly {
    Poly::new((0..=n as i64).map(|k| eulerian2(n, k)).collect())
}

/// Numerator `x·E*_n(x) = Σ_k <<n,k>>* x^(k+1)` of `x·F*_n(x)`; the
/// starred polynomial has a `1/x` term so it is returned shifted by one.
pub fn eulerian2_star_poly_shifted(n: usize) -> Result<Poly, TriangleError> {
    let coeffs = (-1..=n as i64 - 2)
        .map(|k| eulerian2_star(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssocKind {
    Cycle,
    Set,
}

static ASSOC: RwLock<Option<HashMap<(AssocKind, usize, usize), Rat>>> = RwLock::new(None);

/// 3-associated Stirling numbers: `n!/k! · A_{n,k}(0, 0, w_3, w_4, ...)` with
/// `w_j = 1/j` for cycles (`(j-1)!/j!` per cycle) and `w_j = 1/j!` for sets.
pub fn assoc_stirling(kind: AssocKind, n: usize, k: usize) -> Rat {
    if n < 3 * k {
        return Rat::zero();
    }
    if let Some(v) = ASSOC
        .read()
        .expect("assoc cache poisoned")
        .as_ref()
        .and_then(|m| m.get(&(kind, n, k)))
    {
        return v.clone();
    }
    let weights: Vec<Rat> = (1..=n - k + 1)
        .map(|j| match (j, kind) {
            (1 | 2, _) => Rat::zero(),
            (_, AssocKind::Cycle) => Rat::new(1.into(), (j as i64).into()),
            (_, AssocKind::Set) => Rat::from_integer(1.into()) / fact(j as u64),
        })
        .collect();
    let v = fact(n as u64) / fact(k as u64) * demoivre(n, k, &weights);
    debug_assert!(v.is_integer());
    ASSOC
        .write()
        .expect("assoc cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert((kind, n, k), v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ints(cs: &[i64]) -> Vec<Rat> {
        cs.iter().map(|&c| int(c)).collect()
    }

    fn row(kind: TriangleKind, n: usize) -> Vec<Rat> {
        Triangle::new(kind).row(n).unwrap().into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn stirling_cycle_rows() {
        assert_eq!(stirling_cycle(5, 2), int(50));
        assert_eq!(stirling_cycle(4, 2), int(11));
        for n in 0..=20 {
            assert_eq!(stirling_cycle(n, n as i64), int(1));
        }
        assert_eq!(row(TriangleKind::StirlingCycle, 5), ints(&[24, 50, 35, 10, 1]));
        assert!(stirling_cycle(3, -1).is_zero());
        assert!(stirling_cycle(3, 4).is_zero());
    }

    #[test]
    fn stirling_cycle_star_rows() {
        assert_eq!(stirling_cycle_star(5, 3), int(15));
        assert_eq!(stirling_cycle_star(0, 2), rat(-5, 12));
        for n in 1..=15 {
            assert_eq!(stirling_cycle_star(n, n as i64), rat(n as i64 - 1, n as i64));
        }
        assert_eq!(
            row(TriangleKind::StirlingCycleStar, 5),
            vec![int(12), int(15), int(6), rat(4, 5)]
        );
        assert_eq!(
            row(TriangleKind::StirlingCycleStar, 4),
            vec![int(3), int(3), rat(3, 4)]
        );
        for n in 1..6 {
            assert!(stirling_cycle_star(n, 1).is_zero());
            assert!(stirling_cycle_star(n, 0).is_zero());
        }
    }

    #[test]
    fn eulerian2_rows() {
        assert_eq!(eulerian2(4, 2), int(58));
        assert_eq!(eulerian2(5, 1), int(52));
        assert_eq!(row(TriangleKind::Eulerian2, 5), ints(&[1, 52, 328, 444, 120]));
        assert_eq!(row(TriangleKind::Eulerian2, 0), ints(&[1]));
    }

    #[test]
    fn eulerian2_row_sums_are_odd_double_factorials() {
        for n in 0..=12usize {
            let sum: Rat = (0..=n as i64).map(|k| eulerian2(n, k)).sum();
            // brute-force product 1·3·5···(2n-1)
            let oracle: i64 = (1..=n as i64).map(|i| 2 * i - 1).product();
            assert_eq!(sum, int(oracle), "n = {n}");
        }
    }

    #[test]
    fn eulerian2_star_rows() {
        assert_eq!(eulerian2_star(4, 1).unwrap(), int(42));
        assert_eq!(eulerian2_star(5, 2).unwrap(), int(474));
        assert_eq!(row(TriangleKind::Eulerian2Star, 5), ints(&[3, 108, 474, 360]));
        assert_eq!(eulerian2_star(1, -1).unwrap(), int(1));
        for n in 2..=12 {
            assert!(eulerian2_star(n, -1).unwrap().is_zero());
        }
        assert!(eulerian2_star(0, 0).is_err());
        assert!(Triangle::new(TriangleKind::Eulerian2Star).row(0).is_err());
    }

    #[test]
    fn ratfun_route() {
        assert_eq!(eulerian2_via_ratfun(0), Poly::one());
        assert_eq!(eulerian2_via_ratfun(2), Poly::from_ints(&[1, 2]));
        assert_eq!(eulerian2_via_ratfun(3), Poly::from_ints(&[1, 8, 6]));
        for n in 0..=12 {
            assert_eq!(eulerian2_via_ratfun(n), eulerian2_poly(n));
        }
    }

    #[test]
    fn assoc_small_values() {
        assert_eq!(assoc_stirling(AssocKind::Set, 0, 0), int(1));
        assert_eq!(assoc_stirling(AssocKind::Cycle, 0, 0), int(1));
        assert_eq!(assoc_stirling(AssocKind::Set, 6, 2), int(10));
        assert_eq!(assoc_stirling(AssocKind::Cycle, 6, 2), int(40));
        assert_eq!(assoc_stirling(AssocKind::Cycle, 3, 1), int(2));
        assert!(assoc_stirling(AssocKind::Set, 5, 2).is_zero());
    }

    #[test]
    fn kinds_parse() {
        for k in TriangleKind::ALL {
            assert_eq!(k.name().parse::<TriangleKind>().unwrap(), k);
        }
        assert!("pascal".parse::<TriangleKind>().is_err());
    }
}

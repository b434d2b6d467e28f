use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{int, Rat};

/// Dense univariate polynomial over ℚ, coefficient `i` multiplies `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and [`Poly::degree`] returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(int(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![int(0), int(1)])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` standing in for −∞ on the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derive(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Returns `None` when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dd = d.degree()?;
        let lead = d.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Poly::new(quot), Poly::new(rem)))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &'a Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Rational function `num(x) / (x - 1)^pole`, the shape taken by the
/// generating functions `F_n` of second-order Eulerian rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleAtOne {
    pub num: Poly,
    pub pole: usize,
}

impl PoleAtOne {
    pub fn new(num: Poly, pole: usize) -> Self {
        let mut f = PoleAtOne { num, pole };
        f.reduce();
        f
    }

    /// Cancel common factors of `x - 1`.
    fn reduce(&mut self) {
        let x_minus_one = Poly::from_ints(&[-1, 1]);
        while self.pole > 0 && !self.num.is_zero() && self.num.eval(&Rat::one()).is_zero() {
            let (q, r) = self.num.div_rem(&x_minus_one).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            self.num = q;
            self.pole -= 1;
        }
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &Poly) -> PoleAtOne {
        PoleAtOne::new(&self.num * p, self.pole)
    }

    /// Multiply by `1 / (x - 1)^k`.
    pub fn div_pole(&self, k: usize) -> PoleAtOne {
        PoleAtOne::new(self.num.clone(), self.pole + k)
    }

    /// Quotient rule: `(N / (x-1)^m)' = (N'(x-1) - mN) / (x-1)^(m+1)`.
    pub fn derive(&self) -> PoleAtOne {
        let x_minus_one = Poly::from_ints(&[-1, 1]);
        let lhs = &self.num.derive() * &x_minus_one;
        let rhs = self.num.scale(&int(self.pole as i64));
        PoleAtOne::new(&lhs - &rhs, self.pole + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(Poly::from_ints(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn arithmetic() {
        let a = Poly::from_ints(&[1, 1]);
        let b = Poly::from_ints(&[1, -1]);
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, -1]));
        assert_eq!(&a + &b, Poly::from_ints(&[2]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(Poly::from_ints(&[0, 0, 3]).derive(), Poly::from_ints(&[0, 6]));
        assert_eq!(a.eval(&rat(1, 2)), rat(3, 2));
    }

    #[test]
    fn division() {
        let n = Poly::from_ints(&[-1, 0, 0, 1]);
        let d = Poly::from_ints(&[-1, 1]);
        let (q, r) = n.div_rem(&d).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = Poly::from_ints(&[1, 0, 2]).div_rem(&Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(q, Poly::from_ints(&[0, 1]));
        assert_eq!(r, Poly::from_ints(&[1]));
        assert!(n.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn pole_reduction() {
        // (x^2 - 1) / (x - 1)^3 = (x + 1) / (x - 1)^2
        let f = PoleAtOne::new(Poly::from_ints(&[-1, 0, 1]), 3);
        assert_eq!(f, PoleAtOne { num: Poly::from_ints(&[1, 1]), pole: 2 });
        // d/dx 1/(x-1) = -1/(x-1)^2
        let g = PoleAtOne::new(Poly::one(), 1).derive();
        assert_eq!(g, PoleAtOne { num: Poly::from_ints(&[-1]), pole: 2 });
    }
}

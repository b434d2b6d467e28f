//! Dense truncated formal power series.
//!
//! A [`PowerSeries`] holds the first `prec` coefficients of a formal series
//! and stands for `c_0 + c_1 x + ... + c_{prec-1} x^{prec-1} + O(x^prec)`.
//! Every operation returns the largest precision its inputs guarantee:
//!
//! | operation            | output precision                                  |
//! |----------------------|---------------------------------------------------|
//! | `a + b`, `a - b`     | `min(pa, pb)`                                     |
//! | `a * b`              | `min(pa + vb, pb + va)` (`v` = valuation)          |
//! | `a'`                 | `pa - 1`                                          |
//! | `recip`, `log`, `exp`, `pow` | `pa`                                      |
//! | `outer ∘ inner`      | `min(v·p_outer, p_inner)`, `v` = inner valuation   |
//! | `revert`             | `pa`                                              |
//!
//! Reading a coefficient at or past `prec` is an error, never a silent zero.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};

use super::scalar::{int, Rat, Scalar};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<S = Rat> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    /// Series known exactly through `x^(coeffs.len() - 1)`.
    pub fn new(coeffs: Vec<S>) -> Self {
        PowerSeries { coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `prec` terms.
    pub fn with_prec(mut coeffs: Vec<S>, prec: usize) -> Self {
        coeffs.resize(prec, S::zero());
        PowerSeries { coeffs }
    }

    pub fn from_fn(prec: usize, f: impl FnMut(usize) -> S) -> Self {
        PowerSeries { coeffs: (0..prec).map(f).collect() }
    }

    pub fn zero(prec: usize) -> Self {
        Self::with_prec(Vec::new(), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::constant(S::one(), prec)
    }

    pub fn constant(c: S, prec: usize) -> Self {
        Self::with_prec(vec![c], prec)
    }

    /// The series `x + O(x^prec)`.
    pub fn x(prec: usize) -> Self {
        Self::from_fn(prec, |i| if i == 1 { S::one() } else { S::zero() })
    }

    /// Number of guaranteed coefficients, i.e. the exponent in `O(x^prec)`.
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest exponent with a guaranteed coefficient, `None` for `O(1)`.
    pub fn order(&self) -> Option<usize> {
        self.prec().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `[x^i]` of the series, an error past the guaranteed precision.
    pub fn coeff(&self, i: usize) -> Result<&S, AlgebraError> {
        self.coeffs
            .get(i)
            .ok_or(AlgebraError::BeyondPrecision { index: i, prec: self.prec() })
    }

    /// Drop terms so that at most `prec` remain.
    pub fn truncate(mut self, prec: usize) -> Self {
        self.coeffs.truncate(prec);
        self
    }

    /// Index of the first nonzero coefficient, or `prec` if all known ones vanish.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.prec())
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        Self::from_fn(p, |i| self.coeffs[i].add_ref(&o.coeffs[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec().min(o.prec());
        Self::from_fn(p, |i| self.coeffs[i].sub_ref(&o.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(S::neg_ref).collect())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn scale_by(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = (self.prec() + o.valuation()).min(o.prec() + self.valuation());
        self.mul_trunc(o, p)
    }

    /// Product computed only through `x^(p-1)`; `p` must not exceed the guaranteed precision.
    fn mul_trunc(&self, o: &Self, p: usize) -> Self {
        let va = self.valuation();
        let vb = o.valuation();
        let mut out = vec![S::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate().skip(va) {
            if i + vb >= p {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().skip(vb) {
                if i + j >= p {
                    break;
                }
                if !b.is_zero() {
                    out[i + j] += &a.mul_ref(b);
                }
            }
        }
        Self::new(out)
    }

    /// Multiply by `x^k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Divide by `x^k`; the first `k` coefficients must vanish.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, AlgebraError> {
        if self.valuation() < k.min(self.prec()) {
            return Err(AlgebraError::NotDivisibleByX(k));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn derive(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&int(i as i64)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.prec() + 1);
        coeffs.push(S::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rat::new(1.into(), (i as i64 + 1).into()))),
        );
        Self::new(coeffs)
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn recip(&self) -> Result<Self, AlgebraError> {
        let p = self.prec();
        if p == 0 {
            return Ok(Self::zero(0));
        }
        let inv0 = self.coeffs[0].inv().ok_or(AlgebraError::ZeroConstantTerm)?;
        let mut out: Vec<S> = Vec::with_capacity(p);
        out.push(inv0.clone());
        for n in 1..p {
            let mut acc = S::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k].mul_ref(&out[n - k]);
                }
            }
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Self::new(out))
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        let p = self.prec();
        if p == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::NonUnitConstantTerm);
        }
        // n·l_n = n·a_n - Σ_{k=1}^{n-1} k·l_k·a_{n-k}
        let mut out: Vec<S> = vec![S::zero(); p];
        for n in 1..p {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc -= &out[k].mul_ref(&self.coeffs[n - k]).scale(&int(k as i64));
                }
            }
            out[n] = acc.scale(&Rat::new(1.into(), (n as i64).into()));
        }
        Ok(Self::new(out))
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        let p = self.prec();
        if p == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        // n·e_n = Σ_{k=1}^{n} k·a_k·e_{n-k}
        let mut out: Vec<S> = Vec::with_capacity(p);
        out.push(S::one());
        for n in 1..p {
            let mut acc = S::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k].mul_ref(&out[n - k]).scale(&int(k as i64));
                }
            }
            out.push(acc.scale(&Rat::new(1.into(), (n as i64).into())));
        }
        Ok(Self::new(out))
    }

    /// `self^e` by the binomial series.
    ///
    /// Any rational exponent is accepted when the constant term is 1. Integer
    /// exponents also work for any invertible constant term, and nonnegative
    /// integer exponents for any series.
    pub fn pow(&self, e: &Rat) -> Result<Self, AlgebraError> {
        let p = self.prec();
        if p == 0 {
            return Ok(Self::zero(0));
        }
        let a0 = &self.coeffs[0];
        let int_exp = if e.is_integer() { e.to_integer().to_i64() } else { None };
        let b0 = if a0.is_one() {
            S::one()
        } else if let (Some(k), Some(inv)) = (int_exp, a0.inv()) {
            if k >= 0 {
                a0.powi(k as u64)
            } else {
                inv.powi(k.unsigned_abs())
            }
        } else if let Some(k) = int_exp.filter(|k| *k >= 0) {
            return Ok(self.pow_by_squaring(k as u64));
        } else {
            return Err(AlgebraError::NonUnitConstantTerm);
        };
        let inv_a0 = a0.inv().expect("checked invertible");
        // J.C.P. Miller: n·a_0·b_n = Σ_{k=1}^{n} ((e+1)k - n)·a_k·b_{n-k}
        let e1 = e + Rat::one();
        let mut out: Vec<S> = Vec::with_capacity(p);
        out.push(b0);
        for n in 1..p {
            let mut acc = S::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = &e1 * int(k as i64) - int(n as i64);
                if w.is_zero() {
                    continue;
                }
                acc += &self.coeffs[k].mul_ref(&out[n - k]).scale(&w);
            }
            let bn = acc
                .mul_ref(&inv_a0)
                .scale(&Rat::new(1.into(), (n as i64).into()));
            out.push(bn);
        }
        Ok(Self::new(out))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow_by_squaring(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.prec());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `outer(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        if inner.prec() > 0 && !inner.coeffs[0].is_zero() {
            return Err(AlgebraError::NonzeroConstantTerm);
        }
        let v = inner.valuation().max(1);
        let p = (v * self.prec()).min(inner.prec());
        if p == 0 {
            return Ok(Self::zero(0));
        }
        let inner = inner.clone().truncate(p);
        // Horner, each partial result held to precision p.
        let mut acc = Self::constant(self.coeffs[self.prec() - 1].clone(), p);
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_trunc(&inner, p);
            acc.coeffs[0] += c;
        }
        Ok(Self::with_prec(acc.coeffs, p))
    }

    fn check_reversible(&self) -> Result<S, AlgebraError> {
        if self.prec() < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(AlgebraError::NotReversible);
        }
        Ok(self.coeffs[1].clone())
    }

    /// Compositional inverse by Lagrange inversion.
    ///
    /// With `F = x·H`, the inverse `G` has `n·[x^n]G = [x^(n-1)] H^(-n)`.
    pub fn revert(&self) -> Result<Self, AlgebraError> {
        self.check_reversible()?;
        let p = self.prec();
        let h = self.div_x_pow(1)?;
        let mut out = vec![S::zero(); p];
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            let hn = h.clone().truncate(n).pow(&int(-(n as i64)))?;
            *slot = hn.coeffs[n - 1].scale(&Rat::new(1.into(), (n as i64).into()));
        }
        let g = Self::new(out);
        if p <= 10 {
            debug_assert_eq!(Some(&g), self.revert_by_iteration().ok().as_ref());
        }
        Ok(g)
    }

    /// Compositional inverse by the fixed-point iteration
    /// `G ← (x - (F∘G - f_1·G)) / f_1`, each pass fixing one more coefficient.
    ///
    /// Slower than [`PowerSeries::revert`]; it exists as an independent check.
    pub fn revert_by_iteration(&self) -> Result<Self, AlgebraError> {
        let f1 = self.check_reversible()?;
        let inv_f1 = f1.inv().expect("nonzero linear term");
        let p = self.prec();
        let x = Self::x(p);
        // Nonlinear part of F.
        let mut nonlinear = self.clone();
        nonlinear.coeffs[1] = S::zero();
        let mut g = x.scale_by(&inv_f1);
        for _ in 1..p {
            let next = x.sub(&nonlinear.compose(&g)?).scale_by(&inv_f1);
            let next = Self::with_prec(next.coeffs, p);
            if next == g {
                break;
            }
            g = next;
        }
        Ok(g)
    }
}

impl PowerSeries<Rat> {
    pub fn from_ints(cs: &[i64], prec: usize) -> Self {
        Self::with_prec(cs.iter().map(|&c| int(c)).collect(), prec)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for PowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match i {
                0 => write!(f, "({c}) + ")?,
                1 => write!(f, "({c})x + ")?,
                _ => write!(f, "({c})x^{i} + ")?,
            }
        }
        write!(f, "O(x^{})", self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn geometric(prec: usize) -> PowerSeries {
        PowerSeries::from_fn(prec, |_| int(1))
    }

    #[test]
    fn difference_of_squares() {
        let a = PowerSeries::from_ints(&[1, 1], 6);
        let b = PowerSeries::from_ints(&[1, -1], 6);
        assert_eq!(a.mul(&b), PowerSeries::from_ints(&[1, 0, -1], 6));
    }

    #[test]
    fn derivative_of_half_square() {
        let s = PowerSeries::new(vec![int(0), int(0), rat(1, 2)]);
        assert_eq!(s.derive(), PowerSeries::from_ints(&[0, 1], 2));
    }

    #[test]
    fn additive_identity() {
        let s = PowerSeries::from_fn(8, |i| rat(1, i as i64 + 3));
        assert_eq!(s.add(&PowerSeries::zero(8)), s);
        assert_eq!(s.mul(&PowerSeries::one(8)), s);
    }

    #[test]
    fn precision_is_enforced() {
        let s = PowerSeries::from_ints(&[1, 2], 2);
        assert!(s.coeff(1).is_ok());
        assert_eq!(
            s.coeff(2),
            Err(AlgebraError::BeyondPrecision { index: 2, prec: 2 })
        );
    }

    #[test]
    fn product_precision_uses_valuation() {
        let s = PowerSeries::from_ints(&[1, 1, 1], 3);
        // The x^2 term of x + O(x^2) is unknown, so the product is too.
        assert_eq!(PowerSeries::from_ints(&[0, 1], 2).mul(&s).prec(), 2);
        // A well-known x shifts the precision of s up by one.
        assert_eq!(PowerSeries::from_ints(&[0, 1], 8).mul(&s).prec(), 4);
        assert_eq!(s.mul_x_pow(1).prec(), 4);
    }

    #[test]
    fn recip_of_one_minus_x() {
        let s = PowerSeries::from_ints(&[1, -1], 10);
        assert_eq!(s.recip().unwrap(), geometric(10));
        assert_eq!(
            PowerSeries::from_ints(&[0, 1], 4).recip(),
            Err(AlgebraError::ZeroConstantTerm)
        );
    }

    #[test]
    fn log_of_geometric() {
        let l = geometric(8).log().unwrap();
        let expect = PowerSeries::from_fn(8, |i| if i == 0 { int(0) } else { rat(1, i as i64) });
        assert_eq!(l, expect);
        assert_eq!(
            PowerSeries::from_ints(&[2, 1], 4).log(),
            Err(AlgebraError::NonUnitConstantTerm)
        );
    }

    #[test]
    fn exp_of_zero() {
        assert_eq!(PowerSeries::<Rat>::zero(5).exp().unwrap(), PowerSeries::one(5));
        assert_eq!(
            PowerSeries::from_ints(&[1], 3).exp(),
            Err(AlgebraError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn pow_inverse_of_one_plus_x() {
        let s = PowerSeries::from_ints(&[1, 1], 6);
        let expect = PowerSeries::from_fn(6, |i| int(if i % 2 == 0 { 1 } else { -1 }));
        assert_eq!(s.pow(&int(-1)).unwrap(), expect);
    }

    #[test]
    fn integer_pow_matches_repeated_product() {
        let s = PowerSeries::from_ints(&[3, 1, -2, 5], 7);
        let cube = s.mul(&s).mul(&s);
        assert_eq!(s.pow(&int(3)).unwrap(), cube);
        assert_eq!(s.pow_by_squaring(3), cube);
        let t = PowerSeries::from_ints(&[0, 1, 1], 7);
        assert_eq!(t.pow(&int(2)).unwrap(), t.mul(&t));
        assert_eq!(
            PowerSeries::from_ints(&[2, 1], 4).pow(&rat(1, 2)),
            Err(AlgebraError::NonUnitConstantTerm)
        );
    }

    #[test]
    fn compose_with_square() {
        let outer = PowerSeries::from_ints(&[1, 1], 6);
        let inner = PowerSeries::from_ints(&[0, 0, 1], 6);
        assert_eq!(outer.compose(&inner).unwrap(), PowerSeries::from_ints(&[1, 0, 1], 6));
        assert_eq!(
            outer.compose(&outer),
            Err(AlgebraError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn revert_mobius_pair() {
        let f = geometric(8).mul_x_pow(1).truncate(8);
        let g = f.revert().unwrap();
        let expect = PowerSeries::from_fn(8, |i| match i {
            0 => int(0),
            _ if i % 2 == 1 => int(1),
            _ => int(-1),
        });
        assert_eq!(g, expect);
    }

    #[test]
    fn revert_catalan() {
        let f = PowerSeries::from_ints(&[0, 1, -1], 9);
        let g = f.revert().unwrap();
        assert_eq!(g, PowerSeries::from_ints(&[0, 1, 1, 2, 5, 14, 42, 132, 429], 9));
        assert_eq!(g, f.revert_by_iteration().unwrap());
        assert_eq!(
            PowerSeries::from_ints(&[0, 0, 1], 4).revert(),
            Err(AlgebraError::NotReversible)
        );
    }
}

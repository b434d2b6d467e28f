use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::scalar::{int, Rat, Scalar};
use super::AlgebraError;

/// An element `a + b·√2` of the quadratic field ℚ(√2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sqrt2Rat {
    pub a: Rat,
    pub b: Rat,
}

impl Sqrt2Rat {
    pub fn new(a: Rat, b: Rat) -> Self {
        Sqrt2Rat { a, b }
    }

    pub fn rational(a: Rat) -> Self {
        Sqrt2Rat { a, b: Rat::zero() }
    }

    /// `√2` itself.
    pub fn sqrt2() -> Self {
        Sqrt2Rat { a: Rat::zero(), b: int(1) }
    }

    /// `(√2)^m` for any integer `m`, kept exact.
    pub fn sqrt2_pow(m: i64) -> Self {
        let half = m.div_euclid(2);
        let two_pow = if half >= 0 {
            Rat::from_integer(num_bigint::BigInt::from(2).pow(half as u32))
        } else {
            Rat::new(1.into(), num_bigint::BigInt::from(2).pow((-half) as u32))
        };
        if m.rem_euclid(2) == 0 {
            Sqrt2Rat::rational(two_pow)
        } else {
            Sqrt2Rat { a: Rat::zero(), b: two_pow }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as a rational, or an error when the `√2` part is nonzero.
    pub fn to_rational(&self) -> Result<Rat, AlgebraError> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(AlgebraError::Irrational(self.to_string()))
        }
    }

    /// `a - b√2`.
    pub fn conjugate(&self) -> Self {
        Sqrt2Rat { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a² - 2b²`; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }
}

impl fmt::Display for Sqrt2Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrt2", self.a, self.b)
    }
}

impl FromStr for Sqrt2Rat {
    type Err = AlgebraError;

    /// Parses the lossless `a+b*sqrt2` rendering. The rational part never
    /// contains `+`, so the first `+` is the separator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let (a, rest) = s.split_once('+').ok_or_else(bad)?;
        let b = rest.strip_suffix("*sqrt2").ok_or_else(bad)?;
        Ok(Sqrt2Rat {
            a: a.parse().map_err(|_| bad())?,
            b: b.parse().map_err(|_| bad())?,
        })
    }
}

impl From<Rat> for Sqrt2Rat {
    fn from(a: Rat) -> Self {
        Sqrt2Rat::rational(a)
    }
}

impl<'a> AddAssign<&'a Sqrt2Rat> for Sqrt2Rat {
    fn add_assign(&mut self, o: &'a Sqrt2Rat) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl<'a> SubAssign<&'a Sqrt2Rat> for Sqrt2Rat {
    fn sub_assign(&mut self, o: &'a Sqrt2Rat) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl Add for Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn add(mut self, o: Sqrt2Rat) -> Sqrt2Rat {
        self += &o;
        self
    }
}

impl Sub for Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn sub(mut self, o: Sqrt2Rat) -> Sqrt2Rat {
        self -= &o;
        self
    }
}

impl Neg for Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn neg(self) -> Sqrt2Rat {
        Sqrt2Rat { a: -self.a, b: -self.b }
    }
}

impl<'a> Mul<&'a Sqrt2Rat> for &'a Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn mul(self, o: &'a Sqrt2Rat) -> Sqrt2Rat {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        Sqrt2Rat {
            a: &self.a * &o.a + int(2) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Mul for Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn mul(self, o: Sqrt2Rat) -> Sqrt2Rat {
        &self * &o
    }
}

impl Mul<Rat> for Sqrt2Rat {
    type Output = Sqrt2Rat;
    fn mul(self, r: Rat) -> Sqrt2Rat {
        self.scale(&r)
    }
}

impl Div for Sqrt2Rat {
    type Output = Sqrt2Rat;
    /// Panics on division by zero, like [`Rat`].
    fn div(self, o: Sqrt2Rat) -> Sqrt2Rat {
        let inv = o.inv().expect("division by zero in Q(sqrt2)");
        &self * &inv
    }
}

impl Zero for Sqrt2Rat {
    fn zero() -> Self {
        Sqrt2Rat::rational(Rat::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt2Rat {
    fn one() -> Self {
        Sqrt2Rat::rational(int(1))
    }
}

impl Scalar for Sqrt2Rat {
    fn from_rat(r: Rat) -> Self {
        Sqrt2Rat::rational(r)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, r: &Rat) -> Self {
        Sqrt2Rat { a: &self.a * r, b: &self.b * r }
    }

    fn neg_ref(&self) -> Self {
        Sqrt2Rat { a: -&self.a, b: -&self.b }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Sqrt2Rat { a: &self.a / &n, b: -&self.b / &n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn product_rule() {
        let x = Sqrt2Rat::new(rat(1, 2), rat(3, 1));
        let y = Sqrt2Rat::new(rat(-2, 1), rat(1, 3));
        // (1/2)(-2) + 2·3·(1/3) = 1, (1/2)(1/3) + 3(-2) = -35/6
        assert_eq!(&x * &y, Sqrt2Rat::new(rat(1, 1), rat(-35, 6)));
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = Sqrt2Rat::sqrt2();
        assert_eq!(&s * &s, Sqrt2Rat::rational(int(2)));
        assert_eq!(Sqrt2Rat::sqrt2_pow(3), Sqrt2Rat::new(rat(0, 1), rat(2, 1)));
        assert_eq!(Sqrt2Rat::sqrt2_pow(-1), Sqrt2Rat::new(rat(0, 1), rat(1, 2)));
        assert_eq!(Sqrt2Rat::sqrt2_pow(-2), Sqrt2Rat::rational(rat(1, 2)));
    }

    #[test]
    fn inverse() {
        let x = Sqrt2Rat::new(rat(3, 1), rat(-5, 7));
        assert_eq!(&x * &x.inv().unwrap(), Sqrt2Rat::one());
        assert!(Sqrt2Rat::zero().inv().is_none());
    }

    #[test]
    fn rational_extraction() {
        assert_eq!(Sqrt2Rat::rational(rat(2, 3)).to_rational().unwrap(), rat(2, 3));
        assert!(Sqrt2Rat::sqrt2().to_rational().is_err());
    }

    #[test]
    fn render_and_parse() {
        let x = Sqrt2Rat::new(rat(-2, 135), rat(-1, 18));
        let s = x.to_string();
        assert_eq!(s, "-2/135+-1/18*sqrt2");
        assert_eq!(s.parse::<Sqrt2Rat>().unwrap(), x);
        assert!("1/2".parse::<Sqrt2Rat>().is_err());
    }
}

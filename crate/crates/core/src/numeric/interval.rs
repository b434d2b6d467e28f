use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumericError;
use crate::algebra::{int, Rat};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    pub fn is_subset_of(&self, o: &RatInterval) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let ps = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = ps.iter().min().expect("four products").clone();
        let hi = ps.iter().max().expect("four products").clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, r: &Rat) -> RatInterval {
        self.mul(&RatInterval::point(r.clone()))
    }

    pub fn recip(&self) -> Result<RatInterval, NumericError> {
        if self.contains_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, o: &RatInterval) -> Result<RatInterval, NumericError> {
        Ok(self.mul(&o.recip()?))
    }

    /// `{|x| : x in self}`.
    pub fn abs(&self) -> RatInterval {
        if self.contains_zero() {
            RatInterval { lo: Rat::zero(), hi: self.lo.abs().max(self.hi.abs()) }
        } else if self.lo.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Square root of a nonnegative interval with endpoints on the grid
    /// `2^-bits`.
    pub fn sqrt(&self, bits: u32) -> Result<RatInterval, NumericError> {
        let lo = sqrt_grid(&self.lo, bits)?.lo;
        let hi = sqrt_grid(&self.hi, bits)?.hi;
        Ok(RatInterval { lo, hi })
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64().unwrap_or(f64::NAN)
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo_f64(), self.hi_f64())
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Smallest `bits` with `2^-bits <= eps`.
pub(crate) fn bits_for(eps: &Rat) -> u32 {
    let mut bits = 0;
    while Rat::new(BigInt::one(), pow2(bits)) > *eps {
        bits += 1;
    }
    bits
}

fn check_eps(eps: &Rat) -> Result<(), NumericError> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(NumericError::NonPositiveEps)
    }
}

/// `[floor(√q 2^b), ceil(√q 2^b)] / 2^b`. Finer grids give sub-intervals.
fn sqrt_grid(q: &Rat, bits: u32) -> Result<RatInterval, NumericError> {
    if q.is_negative() {
        return Err(NumericError::NegativeRadicand);
    }
    let scale = pow2(bits);
    let x = q * Rat::from_integer(&scale * &scale);
    let lo = x.floor().to_integer().sqrt();
    let c = x.ceil().to_integer();
    let mut hi = c.sqrt();
    if &hi * &hi < c {
        hi += 1;
    }
    Ok(RatInterval { lo: Rat::new(lo, scale.clone()), hi: Rat::new(hi, scale) })
}

/// Enclosure of `√q` of width at most `eps`.
pub fn sqrt_interval(q: &Rat, eps: &Rat) -> Result<RatInterval, NumericError> {
    check_eps(eps)?;
    sqrt_grid(q, bits_for(eps) + 1)
}

/// Enclosure of `e^n` of width at most `eps`: Taylor partial sum plus twice
/// the next term, valid once the term ratio `n/(k+1)` is at most 1/2.
pub fn exp_nat(n: u32, eps: &Rat) -> Result<RatInterval, NumericError> {
    check_eps(eps)?;
    let x = int(n as i64);
    let mut sum = Rat::zero();
    let mut term = Rat::one();
    let mut k: u32 = 0;
    loop {
        if k >= 2 * n {
            let tail = int(2) * &term;
            if tail <= *eps {
                return Ok(RatInterval { hi: &sum + tail, lo: sum });
            }
        }
        sum += &term;
        k += 1;
        term = term * &x / int(k as i64);
    }
}

/// Alternating series for `arctan(1/m)` stopped once the bracket between
/// consecutive partial sums is at most `eps`.
fn arctan_recip(m: i64, eps: &Rat) -> RatInterval {
    let x2 = int(m * m);
    let mut pow = Rat::new(1.into(), m.into());
    let mut sum = Rat::zero();
    let mut k: i64 = 0;
    loop {
        let term = &pow / int(2 * k + 1);
        let next = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        if term <= *eps {
            let (lo, hi) = if sum <= next { (sum, next) } else { (next, sum) };
            return RatInterval { lo, hi };
        }
        sum = next;
        pow /= &x2;
        k += 1;
    }
}

/// Enclosure of `π = 16 arctan(1/5) - 4 arctan(1/239)` of width at most `eps`.
pub fn pi_interval(eps: &Rat) -> Result<RatInterval, NumericError> {
    check_eps(eps)?;
    let part = eps / int(20);
    let a = arctan_recip(5, &part).scale(&int(16));
    let b = arctan_recip(239, &part).scale(&int(4));
    Ok(a.sub(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn dec(s: &str) -> Rat {
        let (i, f) = s.split_once('.').unwrap();
        let den = BigInt::from(10).pow(f.len() as u32);
        Rat::new(format!("{i}{f}").parse::<BigInt>().unwrap(), den)
    }

    fn tenth_pow(k: u32) -> Rat {
        Rat::new(1.into(), BigInt::from(10).pow(k))
    }

    #[test]
    fn exp_one() {
        let e = exp_nat(1, &tenth_pow(6)).unwrap();
        assert!(e.contains(&dec("2.718281828459")));
        assert!(e.width() <= tenth_pow(6));
        assert_eq!(exp_nat(0, &rat(1, 2)).unwrap(), RatInterval::point(int(1)));
    }

    #[test]
    fn exp_five_tight() {
        let e = exp_nat(5, &tenth_pow(30)).unwrap();
        assert!(e.width() <= tenth_pow(30));
        assert!(e.contains(&dec("148.41315910257660342111558004055227962348766759387898904675")));
    }

    #[test]
    fn pi_and_sqrt() {
        let p = pi_interval(&tenth_pow(8)).unwrap();
        assert!(p.contains(&dec("3.14159265358979")));
        assert!(p.width() <= tenth_pow(8));
        let s = sqrt_interval(&int(2), &tenth_pow(8)).unwrap();
        assert!(s.contains(&dec("1.4142135623730950488")));
        assert!(s.width() <= tenth_pow(8));
        assert!(sqrt_interval(&rat(9, 49), &tenth_pow(5)).unwrap().contains(&rat(3, 7)));
        assert_eq!(sqrt_interval(&int(-1), &tenth_pow(5)), Err(NumericError::NegativeRadicand));
    }

    #[test]
    fn arithmetic() {
        let a = RatInterval::new(int(-1), int(2));
        let b = RatInterval::new(int(3), int(4));
        assert_eq!(a.mul(&b), RatInterval::new(int(-4), int(8)));
        assert_eq!(a.abs(), RatInterval::new(int(0), int(2)));
        assert_eq!(b.recip().unwrap(), RatInterval::new(rat(1, 4), rat(1, 3)));
        assert_eq!(a.recip(), Err(NumericError::DivisionByZero));
        assert_eq!(a.sub(&b), RatInterval::new(int(-5), int(-1)));
    }
}

//! Arbitrary-precision complex arithmetic with a decimal-float backend.

use super::bigfloat::BigFloat;
use alloc::string::String;
use num_rational::BigRational;

/// Complex number with [`BigFloat`] components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex {
            re: BigFloat::zero(prec),
            im: BigFloat::zero(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex {
            re: BigFloat::one(prec),
            im: BigFloat::zero(prec),
        }
    }

    pub fn from_i64(re: i64, im: i64, prec: u32) -> Self {
        BigComplex {
            re: BigFloat::from_i64(re, prec),
            im: BigFloat::from_i64(im, prec),
        }
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, prec: u32) -> Self {
        BigComplex {
            re: BigFloat::from_rational(re, prec),
            im: BigFloat::from_rational(im, prec),
        }
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> Self {
        BigComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        BigComplex {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        BigComplex {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        BigComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn mul_float(&self, f: &BigFloat) -> Self {
        BigComplex {
            re: self.re.mul(f),
            im: self.im.mul(f),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "BigComplex division by zero");
        let den = o.re.mul(&o.re).add(&o.im.mul(&o.im));
        let num = self.mul(&o.conj());
        BigComplex {
            re: num.re.div(&den),
            im: num.im.div(&den),
        }
    }

    /// `|self|^2` as a float.
    pub fn abs_sq(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// `|self|`.
    pub fn abs(&self) -> BigFloat {
        self.abs_sq().sqrt()
    }

    /// Exact division by `2^k` (decimal halving is exact).
    fn div_pow2(&self, k: u32) -> Self {
        let mut v = self.clone();
        for _ in 0..k {
            v = BigComplex {
                re: v.re.half(),
                im: v.im.half(),
            };
        }
        v
    }

    /// Complex exponential at the precision of `self`, via Taylor series on
    /// an argument halved into `|w| <= 1/2` and repeated squaring back.
    pub fn exp(&self) -> Self {
        let prec = self.precision();
        if self.is_zero() {
            return Self::one(prec);
        }
        // |z| <= |re| + |im|; count halvings to get below 1/2.
        let bound = self.re.abs().add(&self.im.abs());
        let mut halvings: u32 = 0;
        let mut t = BigFloat::one(prec).half(); // 1/2
        while t.cmp_value(&bound) == core::cmp::Ordering::Less {
            t = t.add(&t);
            halvings += 1;
            assert!(halvings <= 128, "exp argument out of supported range");
        }
        // Guard digits: squaring k times can amplify relative error ~2^k.
        let work = prec + halvings + 10;
        let w = BigComplex {
            re: self.re.clone().with_precision(work),
            im: self.im.clone().with_precision(work),
        }
        .div_pow2(halvings);

        // Taylor sum of e^w for |w| <= 1/2: stop when the term magnitude
        // falls below 10^-(work+4) (the result has magnitude in [e^-1, e]).
        let cutoff = -((work as i64) + 4);
        let mut sum = BigComplex::one(work);
        let mut term = BigComplex::one(work);
        let mut n: i64 = 1;
        loop {
            term = term.mul(&w);
            term = BigComplex {
                re: term.re.div(&BigFloat::from_i64(n, work)),
                im: term.im.div(&BigFloat::from_i64(n, work)),
            };
            sum = sum.add(&term);
            let tmag = term.re.abs().add(&term.im.abs());
            match tmag.mag10() {
                None => break,
                Some(mag) if mag < cutoff => break,
                _ => {}
            }
            n += 1;
            assert!(n < 10_000, "exp series failed to converge");
        }
        let mut result = sum;
        for _ in 0..halvings {
            result = result.mul(&result);
        }
        BigComplex {
            re: result.re.with_precision(prec),
            im: result.im.with_precision(prec),
        }
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, mut n: u64) -> Self {
        let prec = self.precision();
        let mut base = self.clone();
        let mut acc = Self::one(prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_decimal_strings(&self) -> (String, String) {
        (self.re.to_decimal_string(), self.im.to_decimal_string())
    }
}

impl core::fmt::Display for BigComplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.neg())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: &str, im: &str, p: u32) -> BigComplex {
        BigComplex::new(
            BigFloat::parse(re, p).unwrap(),
            BigFloat::parse(im, p).unwrap(),
        )
    }

    #[test]
    fn field_operations() {
        let p = 40;
        let a = c("1", "2", p);
        let b = c("3", "-1", p);
        assert_eq!(a.mul(&b), c("5", "5", p));
        assert_eq!(a.add(&b), c("4", "1", p));
        let q = a.div(&b);
        // (1+2i)/(3-i) = (1+7i)/10
        assert_eq!(q, c("0.1", "0.7", p));
        assert_eq!(a.conj(), c("1", "-2", p));
        assert_eq!(c("3", "4", p).abs(), BigFloat::from_i64(5, p));
    }

    #[test]
    fn exp_of_one_matches_series_oracle() {
        // Oracle: partial sum of 1/k! in exact rationals, 60 terms.
        use num_rational::BigRational;
        use num_traits::{One, Zero};
        let mut acc = BigRational::zero();
        let mut term = BigRational::one();
        for k in 1..=60u32 {
            acc += &term;
            term = term / BigRational::from_integer(k.into());
        }
        let p = 50;
        let want = BigFloat::from_rational(&acc, p);
        let got = BigComplex::one(p).exp();
        assert!(got.im.is_zero());
        let err = got.re.sub(&want).abs();
        assert!(err.cmp_value(&BigFloat::pow10_float(-45, p)) == core::cmp::Ordering::Less);
    }

    #[test]
    fn euler_identity_cross_checks_exp_and_pi() {
        // e^(i*pi) = -1: exp (Taylor + squaring) against pi (Machin), two
        // independently derived quantities.
        let p = 60;
        let pi = super::super::bigfloat::pi(p);
        let z = BigComplex::new(BigFloat::zero(p), pi);
        let e = z.exp();
        let err = e
            .sub(&BigComplex::from_i64(-1, 0, p))
            .abs();
        assert!(err.cmp_value(&BigFloat::pow10_float(-55, p)) == core::cmp::Ordering::Less);
    }

    #[test]
    fn exp_of_two_pi_i_is_one() {
        let p = 60;
        let pi = super::super::bigfloat::pi(p);
        let z = BigComplex::new(BigFloat::zero(p), pi.add(&pi));
        let e = z.exp();
        let err = e.sub(&BigComplex::one(p)).abs();
        assert!(err.cmp_value(&BigFloat::pow10_float(-55, p)) == core::cmp::Ordering::Less);
    }

    #[test]
    fn exp_handles_moderately_large_arguments() {
        // e^10 = (e)^10: compare against powi of exp(1).
        let p = 50;
        let e1 = BigComplex::one(p).exp();
        let e10 = BigComplex::from_i64(10, 0, p).exp();
        let err = e10.sub(&e1.powi(10)).abs();
        // e^10 ~ 2.2e4; allow relative 10^-44.
        assert!(err.cmp_value(&BigFloat::parse("1e-40", p).unwrap()) == core::cmp::Ordering::Less);
    }

    #[test]
    fn powi_small_cases() {
        let p = 40;
        let i = c("0", "1", p);
        assert_eq!(i.powi(0), BigComplex::one(p));
        assert_eq!(i.powi(2), c("-1", "0", p));
        assert_eq!(i.powi(5), i);
    }
}

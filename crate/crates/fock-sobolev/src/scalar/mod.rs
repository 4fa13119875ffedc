//! Scalar arithmetic contracts: exact rational complex numbers and
//! arbitrary-precision decimal complex floats behind one trait.
//!
//! Every series, matrix and identity computation in this crate is generic
//! over [`Scalar`]. The exact kind never rounds; the big-float kind rounds
//! each elementary operation to the context precision. The two kinds are
//! never mixed inside one computation.

mod bigcomplex;
mod bigfloat;

pub use bigcomplex::BigComplex;
pub use bigfloat::{ceil_sig, pi, BigFloat};

use crate::params::NumericContext;
use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Complex number with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactComplex { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        ExactComplex {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        ExactComplex {
            re: BigRational::new(num.into(), den.into()),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        ExactComplex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        ExactComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ExactComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ExactComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "ExactComplex division by zero");
        let den = &o.re * &o.re + &o.im * &o.im;
        let num = self.mul(&o.conj());
        ExactComplex {
            re: num.re / &den,
            im: num.im / &den,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        ExactComplex {
            re: &self.re * q,
            im: &self.im * q,
        }
    }

    pub fn abs_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// Rational upper bound on `sqrt(q)` for `q >= 0`: `(isqrt(n*d) + 1) / d`.
pub fn sqrt_upper(q: &BigRational) -> BigRational {
    assert!(!q.is_negative(), "sqrt_upper of negative rational");
    if q.is_zero() {
        return BigRational::zero();
    }
    let prod = q.numer() * q.denom();
    let root = prod.sqrt(); // floor
    BigRational::new(root + BigInt::one(), q.denom().clone())
}

/// Rational lower bound on `sqrt(q)` for `q >= 0`.
pub fn sqrt_lower(q: &BigRational) -> BigRational {
    assert!(!q.is_negative(), "sqrt_lower of negative rational");
    if q.is_zero() {
        return BigRational::zero();
    }
    let prod = q.numer() * q.denom();
    let root = prod.sqrt();
    BigRational::new(root, q.denom().clone())
}

/// The scalar kinds accepted by every numeric operation in this crate.
///
/// Implementations must be immutable values with pure operations. Mixing
/// kinds is prevented by the type system; conversion is always explicit.
pub trait Scalar: Clone + PartialEq + core::fmt::Debug {
    fn zero(ctx: &NumericContext) -> Self;
    fn one(ctx: &NumericContext) -> Self;
    fn from_rationals(re: &BigRational, im: &BigRational, ctx: &NumericContext) -> Self;
    fn from_rational(q: &BigRational, ctx: &NumericContext) -> Self {
        Self::from_rationals(q, &BigRational::zero(), ctx)
    }
    fn from_int(v: i64, ctx: &NumericContext) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()), ctx)
    }

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Multiplication by an exact rational.
    fn scale(&self, q: &BigRational) -> Self;

    /// One (respectively zero) of the same kind and working precision.
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self {
        self.sub(self)
    }

    /// Integer power by repeated squaring.
    fn powi(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
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

    fn is_zero(&self) -> bool;
    /// Exact `|self|^2` (big floats are exact rationals, so this never rounds).
    fn abs_sq_rational(&self) -> BigRational;
    /// A rational upper bound on `|self|`.
    fn abs_upper(&self) -> BigRational {
        sqrt_upper(&self.abs_sq_rational())
    }

    /// Equality test used when merging kernel nodes: exact for the rational
    /// kind, within distance `10^(-P/2)` for the float kind.
    fn merge_equal(&self, o: &Self, ctx: &NumericContext) -> bool;

    /// `e^self` approximated at the context precision: the float kind uses
    /// the argument-reduced Taylor algorithm, the exact kind a truncated
    /// Taylor sum whose tail is below `10^-(P+10)`.
    fn exp(&self, ctx: &NumericContext) -> Self;

    fn re_rational(&self) -> BigRational;
    fn im_rational(&self) -> BigRational;

    /// Canonical decimal-string pair for reports.
    fn to_strings(&self, ctx: &NumericContext) -> (String, String);

    fn kind_name() -> &'static str;
}

impl Scalar for ExactComplex {
    fn zero(_ctx: &NumericContext) -> Self {
        ExactComplex::zero()
    }

    fn one(_ctx: &NumericContext) -> Self {
        ExactComplex::one()
    }

    fn from_rationals(re: &BigRational, im: &BigRational, _ctx: &NumericContext) -> Self {
        ExactComplex::new(re.clone(), im.clone())
    }

    fn add(&self, o: &Self) -> Self {
        ExactComplex::add(self, o)
    }

    fn sub(&self, o: &Self) -> Self {
        ExactComplex::sub(self, o)
    }

    fn mul(&self, o: &Self) -> Self {
        ExactComplex::mul(self, o)
    }

    fn div(&self, o: &Self) -> Self {
        ExactComplex::div(self, o)
    }

    fn neg(&self) -> Self {
        ExactComplex::neg(self)
    }

    fn conj(&self) -> Self {
        ExactComplex::conj(self)
    }

    fn scale(&self, q: &BigRational) -> Self {
        ExactComplex::scale(self, q)
    }

    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }

    fn abs_sq_rational(&self) -> BigRational {
        self.abs_sq()
    }

    fn one_like(&self) -> Self {
        ExactComplex::one()
    }

    fn merge_equal(&self, o: &Self, _ctx: &NumericContext) -> bool {
        self == o
    }

    fn exp(&self, ctx: &NumericContext) -> Self {
        // Truncated Taylor sum in exact arithmetic. Terms |z|^k/k! drop
        // below 10^-(P+10) once k exceeds both 2|z| and the digit budget.
        let target = crate::params::pow10_rational(-(ctx.precision_digits() as i64 + 10));
        let bound = self.abs_upper();
        let mut sum = ExactComplex::one();
        let mut term = ExactComplex::one();
        let mut term_bound = BigRational::one();
        let mut k: u32 = 1;
        loop {
            let kq = BigRational::from_integer(k.into());
            term = term.mul(self).scale(&kq.recip());
            term_bound = term_bound * &bound / &kq;
            sum = sum.add(&term);
            // Once the ratio bound/(k+1) <= 1/2, the remaining tail is below
            // 2 * term_bound; stop when that is under the target.
            let half_point = &bound * BigRational::from_integer(2.into());
            if BigRational::from_integer((k + 1).into()) >= half_point
                && &term_bound * BigRational::from_integer(2.into()) < target
            {
                break;
            }
            k += 1;
            assert!(k < 100_000, "exact exp series failed to converge");
        }
        sum
    }

    fn re_rational(&self) -> BigRational {
        self.re.clone()
    }

    fn im_rational(&self) -> BigRational {
        self.im.clone()
    }

    fn to_strings(&self, _ctx: &NumericContext) -> (String, String) {
        (
            crate::params::rational_to_string(&self.re),
            crate::params::rational_to_string(&self.im),
        )
    }

    fn kind_name() -> &'static str {
        "exact"
    }
}

impl Scalar for BigComplex {
    fn zero(ctx: &NumericContext) -> Self {
        BigComplex::zero(ctx.precision_digits())
    }

    fn one(ctx: &NumericContext) -> Self {
        BigComplex::one(ctx.precision_digits())
    }

    fn from_rationals(re: &BigRational, im: &BigRational, ctx: &NumericContext) -> Self {
        BigComplex::from_rationals(re, im, ctx.precision_digits())
    }

    fn add(&self, o: &Self) -> Self {
        BigComplex::add(self, o)
    }

    fn sub(&self, o: &Self) -> Self {
        BigComplex::sub(self, o)
    }

    fn mul(&self, o: &Self) -> Self {
        BigComplex::mul(self, o)
    }

    fn div(&self, o: &Self) -> Self {
        BigComplex::div(self, o)
    }

    fn neg(&self) -> Self {
        BigComplex::neg(self)
    }

    fn conj(&self) -> Self {
        BigComplex::conj(self)
    }

    fn scale(&self, q: &BigRational) -> Self {
        let f = BigFloat::from_rational(q, self.precision());
        self.mul_float(&f)
    }

    fn is_zero(&self) -> bool {
        BigComplex::is_zero(self)
    }

    fn abs_sq_rational(&self) -> BigRational {
        let re = self.re.to_rational();
        let im = self.im.to_rational();
        &re * &re + &im * &im
    }

    fn one_like(&self) -> Self {
        BigComplex::one(self.precision())
    }

    fn merge_equal(&self, o: &Self, ctx: &NumericContext) -> bool {
        // Distance below 10^(-P/2), tested exactly on squares.
        let d = self.sub(o).abs_sq_rational();
        let tol = crate::params::pow10_rational(-(ctx.precision_digits() as i64));
        d < tol
    }

    fn exp(&self, _ctx: &NumericContext) -> Self {
        BigComplex::exp(self)
    }

    fn re_rational(&self) -> BigRational {
        self.re.to_rational()
    }

    fn im_rational(&self) -> BigRational {
        self.im.to_rational()
    }

    fn to_strings(&self, _ctx: &NumericContext) -> (String, String) {
        self.to_decimal_strings()
    }

    fn kind_name() -> &'static str {
        "big"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> NumericContext {
        NumericContext::default_context()
    }

    #[test]
    fn exact_field_ops() {
        let a = ExactComplex::from_i64(1, 2);
        let b = ExactComplex::from_i64(3, -1);
        assert_eq!(a.mul(&b), ExactComplex::from_i64(5, 5));
        let q = a.div(&b);
        assert_eq!(
            q,
            ExactComplex::new(
                BigRational::new(1.into(), 10.into()),
                BigRational::new(7.into(), 10.into())
            )
        );
        assert_eq!(a.mul(&b).div(&b), a);
    }

    #[test]
    fn sqrt_bounds_bracket_the_root() {
        let q = BigRational::new(7.into(), 3.into());
        let lo = sqrt_lower(&q);
        let hi = sqrt_upper(&q);
        assert!(&lo * &lo <= q);
        assert!(&hi * &hi >= q);
        assert!(hi - lo < BigRational::new(1.into(), 1.into()));
    }

    #[test]
    fn exact_exp_matches_big_exp() {
        let ctx = ctx();
        let z = ExactComplex::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(BigInt::from(-3), 4.into()),
        );
        let e1 = Scalar::exp(&z, &ctx);
        let zb = BigComplex::from_rationals(&z.re, &z.im, 60);
        let e2 = zb.exp();
        let d_re = (e1.re.clone() - e2.re.to_rational()).abs();
        let d_im = (e1.im.clone() - e2.im.to_rational()).abs();
        let tol = crate::params::pow10_rational(-55);
        assert!(d_re < tol && d_im < tol);
    }

    #[test]
    fn merge_equal_semantics_differ_by_kind() {
        let ctx = ctx();
        let a = ExactComplex::from_ratio(1, 3);
        let b = ExactComplex::new(
            BigRational::new(1.into(), 3.into()),
            BigRational::zero(),
        );
        assert!(a.merge_equal(&b, &ctx));
        let close = ExactComplex::new(
            BigRational::new(1.into(), 3.into()) + crate::params::pow10_rational(-50),
            BigRational::zero(),
        );
        assert!(!a.merge_equal(&close, &ctx));

        // Big kind: tolerance 10^(-P/2) = 10^-30 at P = 60.
        let x = BigComplex::from_i64(1, 0, 60);
        let y = x.add(&BigComplex::new(
            BigFloat::pow10_float(-40, 60),
            BigFloat::zero(60),
        ));
        assert!(x.merge_equal(&y, &ctx));
        let z = x.add(&BigComplex::new(
            BigFloat::pow10_float(-20, 60),
            BigFloat::zero(60),
        ));
        assert!(!x.merge_equal(&z, &ctx));
    }
}

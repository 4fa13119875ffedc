//! Arbitrary-precision decimal floating point on top of `BigInt`.
//!
//! A value is `mant * 10^exp` with the mantissa kept to at most `prec`
//! significant decimal digits (round-half-even). Trailing zeros are always
//! stripped, so equal values have equal representations and serialization
//! is canonical. Every elementary operation has relative rounding error
//! at most `10^(1-prec)`.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use spin::Mutex;

static POW10: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `10^k` from a shared idempotent cache.
pub(crate) fn pow10(k: usize) -> BigInt {
    assert!(k <= 1_000_000, "decimal exponent gap too large: {k}");
    let mut cache = POW10.lock();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    while cache.len() <= k {
        let next = cache.last().unwrap() * 10;
        cache.push(next);
    }
    cache[k].clone()
}

/// Number of decimal digits of `|n|` (0 for n = 0).
pub(crate) fn decimal_digits(n: &BigInt) -> u64 {
    if n.is_zero() {
        return 0;
    }
    let bits = n.bits();
    // 2^bits has floor(bits*log10(2)) + 1 digits; start from a safe lower guess.
    let mut guess = (bits as f64 * core::f64::consts::LOG10_2) as u64;
    if guess == 0 {
        guess = 1;
    }
    let mag = n.magnitude();
    // Adjust upward while 10^guess <= |n|.
    while pow10(guess as usize).magnitude() <= mag {
        guess += 1;
    }
    while guess > 1 && pow10((guess - 1) as usize).magnitude() > mag {
        guess -= 1;
    }
    guess
}

/// Rounds a non-negative rational up to at most `digits` significant
/// digits, so error-bound accumulators keep small representations.
pub fn ceil_sig(q: &BigRational, digits: u32) -> BigRational {
    assert!(!q.is_negative(), "ceil_sig needs a non-negative bound");
    if q.is_zero() {
        return BigRational::zero();
    }
    let dn = decimal_digits(q.numer()) as i64;
    let dd = decimal_digits(q.denom()) as i64;
    let scale = digits as i64 + dd - dn;
    if scale >= 0 {
        let num = q.numer() * pow10(scale as usize);
        let c = num.div_ceil(q.denom());
        BigRational::new(c, pow10(scale as usize))
    } else {
        let den = q.denom() * pow10((-scale) as usize);
        let c = q.numer().div_ceil(&den);
        BigRational::from_integer(c * pow10((-scale) as usize))
    }
}

/// Divides `n` by `10^k`, rounding half to even.
fn div_pow10_round(n: &BigInt, k: usize) -> BigInt {
    if k == 0 {
        return n.clone();
    }
    let d = pow10(k);
    let (q, r) = n.magnitude().div_rem(d.magnitude());
    let twice = &r * 2u32;
    let q = match twice.cmp(d.magnitude()) {
        core::cmp::Ordering::Less => q,
        core::cmp::Ordering::Greater => q + 1u32,
        core::cmp::Ordering::Equal => {
            if q.is_odd() {
                q + 1u32
            } else {
                q
            }
        }
    };
    BigInt::from_biguint(n.sign(), q)
}

/// Arbitrary-precision decimal float: `mant * 10^exp` at `prec` digits.
#[derive(Debug, Clone)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub const MIN_PRECISION: u32 = 8;

    fn make(mant: BigInt, exp: i64, prec: u32) -> Self {
        let prec = prec.max(Self::MIN_PRECISION);
        let mut v = BigFloat { mant, exp, prec };
        v.normalize();
        v
    }

    /// Rounds the mantissa to `prec` digits and strips trailing zeros.
    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let digits = decimal_digits(&self.mant);
        if digits > self.prec as u64 {
            let drop = (digits - self.prec as u64) as usize;
            self.mant = div_pow10_round(&self.mant, drop);
            self.exp += drop as i64;
            // Rounding can carry into one extra digit (e.g. 999 -> 100).
            if decimal_digits(&self.mant) > self.prec as u64 {
                self.mant = div_pow10_round(&self.mant, 1);
                self.exp += 1;
            }
        }
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let ten = BigInt::from(10);
        while (&self.mant % &ten).is_zero() {
            self.mant /= &ten;
            self.exp += 1;
        }
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec: prec.max(Self::MIN_PRECISION),
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::make(BigInt::from(v), 0, prec)
    }

    pub fn from_bigint(v: BigInt, prec: u32) -> Self {
        Self::make(v, 0, prec)
    }

    /// Rounds an exact rational to `prec` significant digits.
    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let prec = prec.max(Self::MIN_PRECISION);
        if q.numer().is_zero() {
            return Self::zero(prec);
        }
        let dn = decimal_digits(q.numer());
        let dd = decimal_digits(q.denom());
        // Scale numerator or denominator so the integer quotient carries
        // prec + 2 digits; the quotient then sits at 10^exp.
        let shift = (prec as i64 + 2) + dd as i64 - dn as i64;
        let (num, den, exp) = if shift >= 0 {
            (q.numer() * pow10(shift as usize), q.denom().clone(), -shift)
        } else {
            (q.numer().clone(), q.denom() * pow10((-shift) as usize), -shift)
        };
        let (quot, rem) = num.magnitude().div_rem(den.magnitude());
        let twice = &rem * 2u32;
        let quot = if twice >= *den.magnitude() {
            quot + 1u32
        } else {
            quot
        };
        Self::make(BigInt::from_biguint(q.numer().sign(), quot), exp, prec)
    }

    /// The exact rational value of this float.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant * pow10(self.exp as usize))
        } else {
            BigRational::new(self.mant.clone(), pow10((-self.exp) as usize))
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Exponent of the leading decimal digit: value magnitude is in
    /// `[10^mag10, 10^(mag10+1))`. Returns `None` for zero.
    pub fn mag10(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + decimal_digits(&self.mant) as i64 - 1)
        }
    }

    fn with_prec_of(&self, other: &Self) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.with_prec_of(other);
        if self.is_zero() {
            let mut r = other.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        if other.is_zero() {
            let mut r = self.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        let (hi, lo) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let gap = (hi.exp - lo.exp) as u64;
        let hi_digits = decimal_digits(&hi.mant);
        let lo_digits = decimal_digits(&lo.mant);
        // If the low part is far below the rounding ulp of the result, it
        // only matters as a tie-breaking nudge, which half-even rounding
        // ignores at this magnitude gap anyway.
        if gap > prec as u64 + hi_digits.max(lo_digits) + 8 {
            let mut r = hi.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        let shifted = &hi.mant * pow10(gap as usize);
        Self::make(shifted + &lo.mant, lo.exp, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.with_prec_of(other);
        Self::make(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::make(&self.mant * k, self.exp, self.prec)
    }

    /// Exact division by 2 (multiply mantissa by 5, drop the exponent).
    pub fn half(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self::make(&self.mant * 5, self.exp - 1, self.prec)
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.with_prec_of(other);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let dn = decimal_digits(&self.mant);
        let dd = decimal_digits(&other.mant);
        let shift = (prec as i64 + 2 + dd as i64 - dn as i64).max(0) as usize;
        let num = &self.mant * pow10(shift);
        let (q, r) = num.magnitude().div_rem(other.mant.magnitude());
        let twice = &r * 2u32;
        let q = if twice >= *other.mant.magnitude() {
            q + 1u32
        } else {
            q
        };
        let sign = if self.mant.sign() == other.mant.sign() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Self::make(
            BigInt::from_biguint(sign, q),
            self.exp - other.exp - shift as i64,
            prec,
        )
    }

    /// Square root (round to nearest). Panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of negative value");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        let mut mant = self.mant.clone();
        let mut exp = self.exp;
        if exp.rem_euclid(2) != 0 {
            mant *= 10;
            exp -= 1;
        }
        // Scale so the integer root carries prec + 2 digits.
        let digits = decimal_digits(&mant);
        let want = 2 * (prec as u64 + 2);
        let extra = if digits < want {
            let mut e = want - digits;
            if e % 2 != 0 {
                e += 1;
            }
            e as usize
        } else {
            0
        };
        let scaled = &mant * pow10(extra);
        let root = scaled.sqrt(); // floor square root
        let diff = &scaled - &root * &root;
        // Round to nearest: bump when scaled > (root + 1/2)^2, i.e.
        // diff > root (since (root + 1/2)^2 = root^2 + root + 1/4).
        let root = if diff > root { root + 1 } else { root };
        Self::make(root, (exp - extra as i64) / 2, prec)
    }

    /// Total-order comparison of values.
    pub fn cmp_value(&self, other: &Self) -> core::cmp::Ordering {
        use core::cmp::Ordering;
        match (self.mant.sign(), other.mant.sign()) {
            (Sign::Minus, Sign::Plus | Sign::NoSign) => return Ordering::Less,
            (Sign::Plus, Sign::Minus | Sign::NoSign) => return Ordering::Greater,
            (Sign::NoSign, Sign::Plus) => return Ordering::Less,
            (Sign::NoSign, Sign::Minus) => return Ordering::Greater,
            (Sign::NoSign, Sign::NoSign) => return Ordering::Equal,
            _ => {}
        }
        // Same nonzero sign: compare decimal magnitudes first.
        let ma = self.mag10().unwrap();
        let mb = other.mag10().unwrap();
        let negative = self.mant.is_negative();
        if ma != mb {
            let ord = ma.cmp(&mb);
            return if negative { ord.reverse() } else { ord };
        }
        // Overlapping magnitude: align and compare exactly.
        let (a, b) = if self.exp >= other.exp {
            (
                &self.mant * pow10((self.exp - other.exp) as usize),
                other.mant.clone(),
            )
        } else {
            (
                self.mant.clone(),
                &other.mant * pow10((other.exp - self.exp) as usize),
            )
        };
        a.cmp(&b)
    }

    /// Canonical string form, scientific: `-1.25e-3`, `0`.
    pub fn to_decimal_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let digits = self.mant.magnitude().to_string();
        let sign = if self.mant.is_negative() { "-" } else { "" };
        let point_exp = self.exp + digits.len() as i64 - 1;
        if digits.len() == 1 {
            format!("{sign}{digits}e{point_exp}")
        } else {
            format!("{sign}{}.{}e{point_exp}", &digits[..1], &digits[1..])
        }
    }

    /// Parses a plain or scientific decimal string at the given precision.
    pub fn parse(s: &str, prec: u32) -> Option<Self> {
        let q = crate::params::parse_decimal_rational(s)?;
        Some(Self::from_rational(&q, prec))
    }

    /// `10^k` as a float.
    pub fn pow10_float(k: i64, prec: u32) -> Self {
        Self::make(BigInt::one(), k, prec)
    }

    /// Same value carrying `prec` digits (rounds when shrinking).
    pub fn with_precision(mut self, prec: u32) -> Self {
        self.prec = prec.max(Self::MIN_PRECISION);
        self.normalize();
        self
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        // Canonical normalized form: value equality is structural equality,
        // independent of the carried precision.
        self.mant == other.mant && (self.exp == other.exp || self.mant.is_zero())
    }
}

impl Eq for BigFloat {}

impl core::fmt::Display for BigFloat {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Machin's formula at `prec` digits: `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> BigFloat {
    let guard = prec as i64 + 8;
    let atan_inv = |n: i64| -> BigRational {
        // atan(1/n) = sum (-1)^j / ((2j+1) n^(2j+1)), alternating, so the
        // truncation error is below the first omitted term.
        let n = BigInt::from(n);
        let nsq = &n * &n;
        let mut acc = BigRational::zero();
        let mut power = n.clone(); // n^(2j+1)
        let mut j = 0u32;
        loop {
            let term = BigRational::new(BigInt::one(), &power * BigInt::from(2 * j + 1));
            // Stop once the term is below 10^-(prec+8).
            if decimal_digits(term.denom()) as i64 > guard + 1 {
                break;
            }
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            power *= &nsq;
            j += 1;
        }
        acc
    };
    let v = atan_inv(5) * BigRational::from_integer(16.into())
        - atan_inv(239) * BigRational::from_integer(4.into());
    BigFloat::from_rational(&v, prec)
}

#[allow(unused_imports)]
use alloc::string::ToString;

//! Weight order and numeric context shared by every computation.

use alloc::string::String;
use alloc::{format, vec::Vec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The weight order `m` of the Fock-Sobolev space `F^{2,m}(C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockParams {
    m: u32,
}

impl FockParams {
    pub fn new(m: u32) -> Self {
        FockParams { m }
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Truncation degree, working precision and zero-test tolerance.
///
/// `truncation_degree` is the highest monomial degree kept in series and
/// matrices, `precision_digits` the number of significant decimal digits
/// carried by [`crate::scalar::BigFloat`] arithmetic, and `tolerance` the
/// absolute threshold below which a numeric zero test may fire.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericContext {
    truncation_degree: usize,
    precision_digits: u32,
    tolerance: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    TruncationDegreeZero,
    PrecisionTooLow { got: u32 },
    ToleranceNotPositive,
    /// `precision_digits` must be at least twice the decimal resolution of
    /// the tolerance, so tolerance-level comparisons are meaningful.
    PrecisionBelowTolerance { needed: u32, got: u32 },
}

impl core::fmt::Display for ParamError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParamError::TruncationDegreeZero => write!(f, "truncation degree must be >= 1"),
            ParamError::PrecisionTooLow { got } => {
                write!(f, "precision must be >= 30 digits, got {got}")
            }
            ParamError::ToleranceNotPositive => write!(f, "tolerance must be > 0"),
            ParamError::PrecisionBelowTolerance { needed, got } => write!(
                f,
                "precision {got} too low for tolerance: need at least {needed} digits"
            ),
        }
    }
}

impl NumericContext {
    pub const DEFAULT_TRUNCATION: usize = 40;
    pub const DEFAULT_PRECISION: u32 = 60;

    /// Builds a context, enforcing `N >= 1`, `P >= 30`, `tau > 0` and
    /// `P >= 2 * ceil(-log10 tau)`.
    pub fn new(
        truncation_degree: usize,
        precision_digits: u32,
        tolerance: BigRational,
    ) -> Result<Self, ParamError> {
        if truncation_degree == 0 {
            return Err(ParamError::TruncationDegreeZero);
        }
        if precision_digits < 30 {
            return Err(ParamError::PrecisionTooLow {
                got: precision_digits,
            });
        }
        if tolerance <= BigRational::zero() {
            return Err(ParamError::ToleranceNotPositive);
        }
        let resolution = ceil_neg_log10(&tolerance);
        if resolution > 0 {
            let needed = 2 * resolution as u32;
            if precision_digits < needed {
                return Err(ParamError::PrecisionBelowTolerance {
                    needed,
                    got: precision_digits,
                });
            }
        }
        Ok(NumericContext {
            truncation_degree,
            precision_digits,
            tolerance,
        })
    }

    /// Default context: `N = 40`, `P = 60`, `tau = 1e-20`.
    pub fn default_context() -> Self {
        NumericContext::new(
            Self::DEFAULT_TRUNCATION,
            Self::DEFAULT_PRECISION,
            pow10_rational(-20),
        )
        .expect("default context is valid")
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation_degree
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    pub fn tolerance(&self) -> &BigRational {
        &self.tolerance
    }

    /// Context with the same precision and tolerance but a different `N`.
    pub fn with_truncation(&self, truncation_degree: usize) -> Result<Self, ParamError> {
        NumericContext::new(
            truncation_degree,
            self.precision_digits,
            self.tolerance.clone(),
        )
    }
}

/// `10^e` as an exact rational, for any integer exponent.
pub fn pow10_rational(e: i64) -> BigRational {
    let ten = BigInt::from(10);
    if e >= 0 {
        BigRational::from_integer(ten.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), ten.pow((-e) as u32))
    }
}

/// Smallest integer `c` with `10^c >= 1/x`, i.e. `ceil(-log10 x)`, for `x > 0`.
fn ceil_neg_log10(x: &BigRational) -> i64 {
    debug_assert!(x.is_positive());
    // Find c with x * 10^c >= 1, minimal.
    let mut c: i64 = 0;
    let mut v = x.clone();
    let ten = BigRational::from_integer(BigInt::from(10));
    if v >= BigRational::one() {
        // x >= 1: move down while still >= 1 after dividing.
        while &v / &ten >= BigRational::one() {
            v = &v / &ten;
            c -= 1;
        }
        // v in [1, 10): 10^c * x >= 1 holds; check c-1? We want minimal c with
        // x*10^c >= 1; since x >= 1 already, c can go negative as computed.
        c
    } else {
        while v < BigRational::one() {
            v = &v * &ten;
            c += 1;
        }
        c
    }
}

/// Formats an exact rational as `num/den` (or just `num` when integral).
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a decimal string (plain or scientific, e.g. `-3.25e-2`) into an
/// exact rational. Returns `None` on malformed input.
pub fn parse_decimal_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    // Optional fraction form "a/b" with integer parts.
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (mant, exp10) = match s.find(['e', 'E']) {
        Some(pos) => {
            let (m, e) = s.split_at(pos);
            (m, e[1..].parse::<i64>().ok()?)
        }
        None => (s, 0i64),
    };
    let (sign, digits) = match mant.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let all: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
    let unscaled = BigInt::parse_bytes(&all, 10)?;
    let scale = exp10 - frac_part.len() as i64;
    let base = BigRational::from_integer(unscaled * BigInt::from(sign));
    Some(base * pow10_rational(scale))
}

//! Exact factorial machinery with a shared memoized table.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use spin::Mutex;

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` from a lazily grown shared cache. The fill is idempotent: every
/// entry is a pure function of its index, so concurrent growth is safe.
pub fn factorial(n: u64) -> BigInt {
    assert!(n <= 1_000_000, "factorial argument out of supported range");
    let mut cache = FACTORIALS.lock();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    while cache.len() as u64 <= n {
        let k = cache.len() as u64;
        let next = cache.last().unwrap() * k;
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// `a!/b!` as an exact rational, equal to the product of `b+1..=a`
/// when `a >= b` and to the reciprocal product otherwise.
pub fn factorial_ratio(a: u64, b: u64) -> BigRational {
    if a >= b {
        BigRational::from_integer(rising_product(b, a))
    } else {
        BigRational::new(BigInt::one(), rising_product(a, b))
    }
}

/// The integer `a!/b!` for `a >= b`.
pub fn factorial_ratio_int(a: u64, b: u64) -> BigInt {
    assert!(a >= b);
    rising_product(b, a)
}

/// Product of the integers in `(lo, hi]`, i.e. `hi!/lo!` for `hi >= lo`.
fn rising_product(lo: u64, hi: u64) -> BigInt {
    debug_assert!(hi >= lo);
    // Short spans multiply directly; long spans come from the cache.
    if hi - lo <= 16 {
        let mut acc = BigInt::one();
        for i in (lo + 1)..=hi {
            acc *= i;
        }
        acc
    } else {
        factorial(hi) / factorial(lo)
    }
}

/// Falling factorial `x(x-1)...(x-i+1)` with `i` factors, at integer `x`.
pub fn falling_factorial(x: i64, i: u32) -> BigInt {
    let mut acc = BigInt::one();
    for step in 0..i as i64 {
        acc *= x - step;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    /// Brute-force factorial, independent of the cached implementation.
    fn fact_oracle(n: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        acc
    }

    #[test]
    fn ratio_examples() {
        // 5!/3! = 20, identity case, and 4!/6! = 24/720 = 1/30.
        assert_eq!(factorial_ratio(5, 3), BigRational::from_integer(20.into()));
        assert_eq!(factorial_ratio(3, 3), BigRational::one());
        assert_eq!(
            factorial_ratio(4, 6),
            BigRational::new(fact_oracle(4), fact_oracle(6))
        );
        assert_eq!(factorial_ratio(4, 6), BigRational::new(1.into(), 30.into()));
    }

    #[test]
    fn ratio_matches_oracle_everywhere() {
        for a in 0..=30u64 {
            for b in 0..=30u64 {
                assert_eq!(
                    factorial_ratio(a, b),
                    BigRational::new(fact_oracle(a), fact_oracle(b)),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn ratio_reciprocal_property() {
        for a in 0..=30u64 {
            for b in 0..=30u64 {
                assert_eq!(
                    factorial_ratio(a, b) * factorial_ratio(b, a),
                    BigRational::one()
                );
            }
        }
    }

    #[test]
    fn falling_factorial_cases() {
        assert_eq!(falling_factorial(5, 0), BigInt::one());
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(3, 4), BigInt::zero()); // hits the factor 0
        assert_eq!(falling_factorial(-1, 3), BigInt::from(-6));
    }

    #[test]
    fn cache_growth_is_consistent() {
        let big = factorial(40);
        assert_eq!(big, fact_oracle(40));
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
    }
}

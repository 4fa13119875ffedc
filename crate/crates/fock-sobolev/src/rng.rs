//! Tiny deterministic generator (splitmix64) for reproducible sampling in
//! the verification suites. Not a statistical-quality RNG and not meant to
//! be one: runs must be byte-for-byte replayable across platforms.

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // Modulo bias is irrelevant for test-case sampling.
        self.next_u64() % bound
    }

    /// Signed rational with numerator in `[-scale_num, scale_num]` and a
    /// denominator from `1..=scale_den`.
    pub fn rational(&mut self, scale_num: u64, scale_den: u64) -> BigRational {
        let num = self.below(2 * scale_num + 1) as i64 - scale_num as i64;
        let den = 1 + self.below(scale_den) as i64;
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn rational_bounds() {
        let mut r = SplitMix64::new(7);
        for _ in 0..200 {
            let q = r.rational(6, 4);
            let six = BigRational::from_integer(6.into());
            assert!(q >= -six.clone() && q <= six);
        }
    }
}

//! Primitives of the weighted space: reproducing-kernel coefficients and
//! evaluation, the order-(m-1) exponential Taylor polynomial, monomial
//! norms and weighted monomial integrals.
//!
//! Throughout, the kernel is treated as the entire function
//! `E_m(x) = sum_k m! x^k / (k+m)!` of the product `x = z * conj(w)`,
//! with the closed form `E_m(x) = m! (e^x - q_m(x)) / x^m`.

use crate::factorial::factorial_ratio;
use crate::params::{pow10_rational, NumericContext};
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `m!/(k+m)!`, the k-th Taylor coefficient of the reproducing kernel in
/// the variable `z * conj(w)`.
pub fn kernel_coeff(m: u32, k: u64) -> BigRational {
    factorial_ratio(m as u64, k + m as u64)
}

/// `<z^k, z^k>_m = (k+m)!/m!`.
pub fn monomial_norm_sq(m: u32, k: u64) -> BigRational {
    factorial_ratio(k + m as u64, m as u64)
}

/// `<z^a, z^b>_m`: zero off the diagonal, `(a+m)!/m!` on it.
pub fn weighted_monomial_integral(m: u32, a: u64, b: u64) -> BigRational {
    if a != b {
        BigRational::zero()
    } else {
        monomial_norm_sq(m, a)
    }
}

/// Taylor polynomial of the exponential of order `m-1`, with `q_0 = 0`:
/// `q_m(x) = sum_{k=0}^{m-1} x^k / k!`.
pub fn q_m_eval<S: Scalar>(m: u32, x: &S, ctx: &NumericContext) -> S {
    let mut sum = S::zero(ctx);
    let mut term = S::one(ctx);
    for k in 0..m {
        if k > 0 {
            term = term
                .mul(x)
                .scale(&BigRational::new(1.into(), i64::from(k).into()));
        }
        sum = sum.add(&term);
    }
    sum
}

/// Switch radius between the series and closed-form kernel branches:
/// `|x| >= 1/2` uses the closed form.
fn use_closed_form<S: Scalar>(x: &S) -> bool {
    x.abs_sq_rational() >= BigRational::new(1.into(), 4.into())
}

/// Evaluates the kernel function `E_m` at `x` (standing for `z * conj(w)`).
///
/// Below the switch radius the Taylor series is summed until its tail is
/// provably under `10^-P`; at or above it the closed form
/// `m!(e^x - q_m(x))/x^m` is used. The two branches agree within
/// `10^(5-P)`.
pub fn kernel_eval<S: Scalar>(m: u32, x: &S, ctx: &NumericContext) -> S {
    if x.is_zero() || !use_closed_form(x) {
        kernel_eval_series(m, x, ctx)
    } else {
        kernel_eval_closed(m, x, ctx)
    }
}

/// Series branch: `sum_k m! x^k/(k+m)!` summed to tail below `10^-P`.
pub fn kernel_eval_series<S: Scalar>(m: u32, x: &S, ctx: &NumericContext) -> S {
    let target = pow10_rational(-(ctx.precision_digits() as i64));
    let bound = x.abs_upper();
    let two = BigRational::from_integer(2.into());

    let mut sum = S::one(ctx); // k = 0 term: m!/m! = 1
    let mut term = S::one(ctx);
    let mut term_bound = BigRational::one();
    let mut k: u64 = 0;
    loop {
        let denom = BigRational::from_integer((k + 1 + m as u64).into());
        term = term.mul(x).scale(&denom.recip());
        term_bound = term_bound * &bound / &denom;
        sum = sum.add(&term);
        k += 1;
        // Geometric domination: once k+m+1 >= 2|x| the term ratio stays
        // <= 1/2, so the tail after this term is at most term_bound.
        if BigRational::from_integer((k + 1 + m as u64).into()) >= &two * &bound
            && &term_bound * &two < target
        {
            break;
        }
        assert!(k < 100_000, "kernel series failed to converge");
    }
    sum
}

/// Closed-form branch: `m!(e^x - q_m(x))/x^m`. Requires `x != 0`.
pub fn kernel_eval_closed<S: Scalar>(m: u32, x: &S, ctx: &NumericContext) -> S {
    assert!(!x.is_zero(), "closed-form kernel branch needs x != 0");
    let e = x.exp(ctx);
    let q = q_m_eval(m, x, ctx);
    let num = e.sub(&q).scale(&factorial_ratio(m as u64, 0));
    num.div(&x.powi(m as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::NumericContext;
    use crate::rng::SplitMix64;
    use crate::scalar::{BigComplex, ExactComplex};
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn ctx() -> NumericContext {
        NumericContext::default_context()
    }

    /// Independent radial-quadrature oracle for `<z^k, z^k>_m`: in polar
    /// coordinates the norm reduces to `(2/m!) I(2k + 2m + 1)` with
    /// `I(n) = int_0^inf r^n e^{-r^2} dr`, and `I` satisfies the
    /// integration-by-parts recursion `I(n) = (n-1)/2 * I(n-2)`, `I(1) = 1/2`.
    fn norm_sq_oracle(m: u32, k: u64) -> BigRational {
        let n = 2 * k + 2 * m as u64 + 1;
        let mut i_val = BigRational::new(1.into(), 2.into()); // I(1)
        let mut arg = 1u64;
        while arg < n {
            arg += 2;
            i_val *= BigRational::new(BigInt::from(arg - 1), 2.into());
        }
        i_val * BigRational::from_integer(2.into()) / factorial_ratio(m as u64, 0)
    }

    fn pow_rational(q: &BigRational, n: u64) -> BigRational {
        let mut acc = BigRational::one();
        for _ in 0..n {
            acc *= q;
        }
        acc
    }

    #[test]
    fn kernel_coeff_examples() {
        assert_eq!(kernel_coeff(1, 2), BigRational::new(1.into(), 6.into()));
        for k in 0..8 {
            assert_eq!(kernel_coeff(0, k), factorial_ratio(0, k));
        }
        assert_eq!(kernel_coeff(2, 0), BigRational::one());
    }

    #[test]
    fn norms_match_quadrature_oracle() {
        assert_eq!(monomial_norm_sq(2, 3), BigRational::from_integer(60.into()));
        for m in 0..=4u32 {
            assert_eq!(monomial_norm_sq(m, 0), BigRational::one());
            for k in 0..=9u64 {
                assert_eq!(monomial_norm_sq(m, k), norm_sq_oracle(m, k), "m={m} k={k}");
                assert_eq!(monomial_norm_sq(m, k), weighted_monomial_integral(m, k, k));
            }
        }
        // Classical Fock norms.
        assert_eq!(monomial_norm_sq(0, 5), BigRational::from_integer(120.into()));
    }

    #[test]
    fn integral_examples() {
        assert_eq!(
            weighted_monomial_integral(1, 2, 2),
            BigRational::from_integer(6.into())
        );
        assert_eq!(weighted_monomial_integral(3, 3, 5), BigRational::zero());
        assert_eq!(weighted_monomial_integral(0, 1, 1), BigRational::one());
    }

    #[test]
    fn q_m_examples() {
        let c = ctx();
        let x = ExactComplex::from_i64(7, -2);
        assert!(q_m_eval(0, &x, &c).is_zero());
        // q_3(x) = 1 + x + x^2/2
        let want = ExactComplex::one()
            .add(&x)
            .add(&x.mul(&x).scale(&BigRational::new(1.into(), 2.into())));
        assert_eq!(q_m_eval(3, &x, &c), want);
        let two = ExactComplex::from_i64(2, 0);
        assert_eq!(q_m_eval(1, &two, &c), ExactComplex::one());
    }

    #[test]
    fn kernel_at_zero_is_one() {
        let c = ctx();
        for m in 0..=5 {
            let v: ExactComplex = kernel_eval(m, &ExactComplex::zero(), &c);
            assert_eq!(v, ExactComplex::one());
        }
    }

    #[test]
    fn kernel_at_one_matches_partial_sum_oracles() {
        // m = 0 at x = 1 gives e; m = 1 gives e - 1. Oracle: exact partial
        // sums of sum 1/k! with 60 terms, compared to 30 digits.
        let c = ctx();
        let mut e_partial = BigRational::zero();
        let mut term = BigRational::one();
        for k in 0..60u64 {
            e_partial += &term;
            term /= BigRational::from_integer(BigInt::from(k + 1));
        }
        let tol = pow10_rational(-30);

        let one = BigComplex::one(60);
        let v0 = kernel_eval(0, &one, &c);
        assert!((v0.re_rational() - &e_partial).abs() < tol);
        assert!(v0.im_rational().is_zero());

        let v1 = kernel_eval(1, &one, &c);
        let want = &e_partial - BigRational::one();
        assert!((v1.re_rational() - want).abs() < tol);
    }

    #[test]
    fn branches_agree_within_contract() {
        // 100 deterministic pseudo-random x with |x| <= 10, m in 1..=5.
        let c = ctx();
        let p = c.precision_digits();
        let tol = pow10_rational(5 - p as i64);
        let mut rng = SplitMix64::new(0xF0CC);
        for case in 0..100 {
            let m = 1 + (case % 5) as u32;
            let re = rng.rational(7, 3);
            let im = rng.rational(7, 3);
            let x = BigComplex::from_rationals(&re, &im, p);
            if x.is_zero() {
                continue;
            }
            let series = kernel_eval_series(m, &x, &c);
            let closed = kernel_eval_closed(m, &x, &c);
            let diff = series.sub(&closed);
            assert!(
                diff.abs_sq_rational() < &tol * &tol,
                "branch mismatch at m={m} x={x:?}"
            );
        }
    }

    #[test]
    fn truncated_series_plus_tail_dominates() {
        // |E_m(x) - sum_{k<=N} coeff_k x^k| <= geometric tail bound.
        let c = ctx();
        let m = 2u32;
        let x = ExactComplex::from_ratio(5, 2); // 2.5, above the switch radius
        let n = 24u64;
        let mut partial = ExactComplex::zero();
        for k in 0..=n {
            partial = partial.add(&x.powi(k).scale(&kernel_coeff(m, k)));
        }
        // First omitted term doubled (ratio <= 1/2 since n+m+2 >= 2|x|).
        let xb = x.abs_upper();
        let tail =
            kernel_coeff(m, n + 1) * pow_rational(&xb, n + 1) * BigRational::from_integer(2.into());
        let diff = kernel_eval(m, &x, &c).sub(&partial);
        assert!(diff.abs_sq_rational() < &tail * &tail);
        assert!(tail > BigRational::zero());
    }
}

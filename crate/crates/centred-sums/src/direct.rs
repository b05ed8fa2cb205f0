//! Ground-truth evaluation of the centred binomial sums straight from their
//! defining summations, plus a seeded Monte Carlo oracle.
//!
//! Everything else in the crate is validated against this module. The key
//! trick is that |n/2 - k|^r = |n - 2k|^r / 2^r, so the whole sum is an
//! integer divided by a single power of two; intermediates stay integral.
//!
//! Summation convention: both sums are 0 for negative n.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{choose, pow2};

/// How an exact sum value was produced, for cross-validation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Direct,
    Recurrence,
    PolyFamily,
    Carlitz,
    Lagrange,
    GuoZeng,
    Egf,
}

/// An exact sum value tagged with the route that produced it.
///
/// Invariants: the value is a non-negative dyadic rational whose denominator
/// divides 2^r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumValue {
    pub r: u32,
    pub n: i64,
    pub value: BigRational,
    pub method: Method,
}

impl SumValue {
    pub fn new(r: u32, n: i64, value: BigRational, method: Method) -> Self {
        debug_assert!(!value.is_negative(), "sum values are non-negative");
        debug_assert!(
            (pow2(r as i64) * &value).is_integer(),
            "sum values are dyadic with denominator dividing 2^r"
        );
        Self {
            r,
            n,
            value,
            method,
        }
    }
}

/// The defining sum over all k, evaluated exactly: sum_k C(n,k) |n/2 - k|^r.
///
/// Returns 0 for n < 0 and 2^n when r = 0 (with 0^0 = 1).
pub fn u_direct(r: u32, n: i64) -> BigRational {
    if n < 0 {
        return BigRational::zero();
    }
    let n = n as u64;
    let mut total = BigInt::zero();
    for k in 0..=n {
        let dist = BigInt::from(n as i64 - 2 * k as i64).abs();
        total += choose(n, k) * dist.pow(r);
    }
    BigRational::from_integer(total) * pow2(-(r as i64))
}

/// The half-range form 2 sum_{k < n/2} C(n,k) (n/2 - k)^r, stated for r > 0.
///
/// An independent second formula used for cross-checking; equal to
/// [`u_direct`] on its domain.
pub fn u_direct_halfrange(r: u32, n: i64) -> Result<BigRational> {
    if r == 0 {
        return Err(Error::HalfRangeOrderZero);
    }
    if n < 0 {
        return Ok(BigRational::zero());
    }
    let n = n as u64;
    let mut total = BigInt::zero();
    // k < n/2 <=> n - 2k > 0
    for k in 0..=(n / 2) {
        let dist = n as i64 - 2 * k as i64;
        if dist <= 0 {
            break;
        }
        total += choose(n, k) * BigInt::from(dist).pow(r);
    }
    Ok(BigRational::from_integer(total * 2) * pow2(-(r as i64)))
}

/// The two-fold-index sum sum_k C(2n,k) |n - k|^r; always an integer.
pub fn s_direct(r: u32, n: i64) -> BigRational {
    if n < 0 {
        return BigRational::zero();
    }
    let n = n as u64;
    let mut total = BigInt::zero();
    for k in 0..=(2 * n) {
        let dist = BigInt::from(n as i64 - k as i64).abs();
        total += choose(2 * n, k) * dist.pow(r);
    }
    BigRational::from_integer(total)
}

/// A Monte Carlo estimate with its sample standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

/// Monte Carlo estimate of E|n/2 - K|^r for K ~ Binomial(n, 1/2).
///
/// The exact value of the moment is u_direct(r, n) / 2^n. The generator is
/// ChaCha12 seeded from `seed`, so results are reproducible across platforms;
/// each sample draws n fair bits and counts them.
pub fn walk_moment_mc(r: u32, n: u64, samples: u64, seed: u64) -> McEstimate {
    assert!(samples >= 1, "at least one sample required");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for _ in 0..samples {
        let mut heads = 0u32;
        let mut remaining = n;
        while remaining > 0 {
            let take = remaining.min(64);
            let bits = rng.next_u64();
            let masked = if take == 64 {
                bits
            } else {
                bits & ((1u64 << take) - 1)
            };
            heads += masked.count_ones();
            remaining -= take;
        }
        let displacement = (n as f64 / 2.0 - heads as f64).abs();
        let value = displacement.powi(r as i32);
        sum += value;
        sum_sq += value * value;
    }
    let mean = sum / samples as f64;
    let std_error = if samples > 1 {
        let var = ((sum_sq - samples as f64 * mean * mean) / (samples as f64 - 1.0)).max(0.0);
        (var / samples as f64).sqrt()
    } else {
        0.0
    };
    McEstimate {
        estimate: mean,
        std_error,
    }
}

/// Exact moment u_direct(r, n) / 2^n as a float, for comparing against the
/// Monte Carlo estimate.
pub fn walk_moment_exact(r: u32, n: u64) -> f64 {
    (u_direct(r, n as i64) * pow2(-(n as i64)))
        .to_f64()
        .expect("moment fits in f64 for test-scale arguments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    #[test]
    fn direct_known_values() {
        assert_eq!(u_direct(0, 5), rat_int(32));
        assert_eq!(u_direct(2, 1), rat(1, 2));
        // brute-force defining sum over k = 0..4: 8 + 4 + 0 + 4 + 8
        assert_eq!(u_direct(3, 4), rat_int(24));
        assert_eq!(u_direct(4, -3), rat_int(0));
        // 0^0 = 1 convention: the central term of U_0 contributes
        assert_eq!(u_direct(0, 0), rat_int(1));
        assert_eq!(u_direct(1, 0), rat_int(0));
    }

    #[test]
    fn halfrange_known_values() {
        assert_eq!(u_direct_halfrange(1, 1).unwrap(), rat_int(1));
        assert_eq!(u_direct_halfrange(3, 4).unwrap(), rat_int(24));
        // 2 * (C(3,0) * 9/4 + C(3,1) * 1/4)
        assert_eq!(u_direct_halfrange(2, 3).unwrap(), rat_int(6));
        assert!(matches!(
            u_direct_halfrange(0, 4),
            Err(Error::HalfRangeOrderZero)
        ));
    }

    #[test]
    fn halfrange_agrees_with_full_range() {
        for r in 1..=10u32 {
            for n in 0..=40i64 {
                assert_eq!(
                    u_direct_halfrange(r, n).unwrap(),
                    u_direct(r, n),
                    "r={r} n={n}"
                );
            }
        }
    }

    #[test]
    fn s_known_values() {
        assert_eq!(s_direct(0, 3), rat_int(64));
        // n C(2n,n) at n = 2
        assert_eq!(s_direct(1, 2), rat_int(12));
        assert_eq!(s_direct(5, 3), u_direct(5, 6));
        assert_eq!(s_direct(2, -1), rat_int(0));
    }

    #[test]
    fn s_equals_u_at_doubled_argument() {
        for r in 0..=10u32 {
            for n in 0..=20i64 {
                assert_eq!(s_direct(r, n), u_direct(r, 2 * n), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn denominators_are_dyadic() {
        for r in 0..=10u32 {
            for n in 0..=40i64 {
                let v = u_direct(r, n);
                let scaled = v * pow2(r as i64);
                assert!(scaled.is_integer(), "2^r U_r(n) integral at r={r} n={n}");
                if n % 2 == 0 || r == 0 {
                    assert!(
                        u_direct(r, n).is_integer(),
                        "integer at even n, r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn zero_order_moment_is_exactly_one() {
        let est = walk_moment_mc(0, 10, 1000, 7);
        assert_eq!(est.estimate, 1.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn mc_estimates_within_five_standard_errors() {
        for &(r, n) in &[(1u32, 2u64), (2, 4), (3, 7)] {
            let est = walk_moment_mc(r, n, 200_000, 1);
            let exact = walk_moment_exact(r, n);
            let dist = (est.estimate - exact).abs();
            assert!(
                dist <= 5.0 * est.std_error.max(1e-12),
                "r={r} n={n}: |{} - {exact}| > 5 * {}",
                est.estimate,
                est.std_error
            );
        }
    }

    #[test]
    fn sum_values_carry_their_route() {
        let v = SumValue::new(3, 4, u_direct(3, 4), Method::Direct);
        assert_eq!(v.method, Method::Direct);
        assert_eq!(v.value, rat_int(24));
        let w = SumValue::new(2, 1, u_direct(2, 1), Method::Recurrence);
        assert_eq!(w.value, rat(1, 2));
    }

    #[test]
    #[should_panic(expected = "dyadic")]
    fn sum_values_reject_non_dyadic() {
        let _ = SumValue::new(1, 1, rat(1, 3), Method::Direct);
    }

    #[test]
    fn mc_is_deterministic_for_fixed_seed() {
        let a = walk_moment_mc(2, 6, 10_000, 42);
        let b = walk_moment_mc(2, 6, 10_000, 42);
        assert_eq!(a.estimate, b.estimate);
        assert_eq!(a.std_error, b.std_error);
    }
}

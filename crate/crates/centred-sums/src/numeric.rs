//! Exact integer and rational arithmetic primitives.
//!
//! Everything downstream of this module works over [`BigInt`] and
//! [`BigRational`]; no operation here ever rounds or truncates. Rationals
//! normalize eagerly on construction (lowest terms, positive denominator),
//! which `num-rational` guarantees, so value equality and hashing are the
//! structural ones.
//!
//! Powers follow the convention 0^0 = 1 throughout the crate; both
//! `BigInt::pow` and [`rat_pow`] already behave that way.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// n!/((n-k)! k!) for n >= 0, and 0 when k < 0 or k > n.
///
/// Negative n is a domain error: the summation convention used by every
/// evaluator in this crate relies on the coefficient vanishing outside
/// 0 <= k <= n, which an extended definition would break.
pub fn binomial(n: &BigInt, k: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::NegativeUpperIndex(n.clone()));
    }
    if k.is_negative() || k > n {
        return Ok(BigInt::zero());
    }
    let n: u64 = n.try_into().expect("binomial index exceeds u64");
    let k: u64 = k.try_into().expect("binomial index exceeds u64");
    Ok(choose(n, k))
}

/// Binomial coefficient for machine-sized indices; 0 when k > n.
///
/// Computed by the multiplicative formula with an exact division at each
/// step, so intermediates never exceed the final value times n.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// k! as an exact integer.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    acc
}

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
pub fn pochhammer(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// Rising factorial over the integers, (x)_k with x in Z.
pub fn pochhammer_int(x: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += 1;
    }
    acc
}

/// x^e for rational x and signed exponent; 0^0 = 1, but 0^e for e < 0 panics.
pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    let mag = e.unsigned_abs() as u32;
    let num = x.numer().pow(mag);
    let den = x.denom().pow(mag);
    if e >= 0 {
        BigRational::new_raw(num, den)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        BigRational::new(den, num)
    }
}

/// 2^e as an exact rational for any signed exponent.
pub fn pow2(e: i64) -> BigRational {
    let mag = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for the reduced rational p/q.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as "p/q" in lowest terms, or "p" when the denominator is 1.
pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: Pascal's triangle built row by row with addition only.
    fn pascal_triangle(rows: usize) -> Vec<Vec<BigInt>> {
        let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..rows {
            let prev = &tri[n - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            tri.push(row);
        }
        tri
    }

    #[test]
    fn binomial_small_and_out_of_range() {
        let b = |n: i64, k: i64| binomial(&BigInt::from(n), &BigInt::from(k));
        assert_eq!(b(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(b(5, -1).unwrap(), BigInt::zero());
        assert_eq!(b(5, 6).unwrap(), BigInt::zero());
        assert!(matches!(b(-1, 0), Err(Error::NegativeUpperIndex(_))));
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        let tri = pascal_triangle(65);
        for n in 0..65u64 {
            for k in 0..=n {
                assert_eq!(choose(n, k), tri[n as usize][k as usize], "C({n},{k})");
            }
        }
        // value frozen from the oracle run
        assert_eq!(choose(30, 15), BigInt::from(155_117_520u64));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        // frozen from an iterative-product oracle
        let mut acc = BigInt::one();
        for j in 2..=20u64 {
            acc *= j;
        }
        assert_eq!(factorial(20), acc);
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat_int(3), 0), BigRational::one());
        // 1/2 * 3/2 * 5/2
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        // factor (x + 2) vanishes
        assert_eq!(pochhammer(&rat_int(-2), 4), BigRational::zero());
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(rat_pow(&BigRational::zero(), 0), BigRational::one());
        assert_eq!(rat_pow(&rat(-3, 2), 3), rat(-27, 8));
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(pow2(-3), rat(1, 8));
        assert_eq!(pow2(10), rat_int(1024));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(format_rational(&rat(24, 1)), "24");
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
    }
}

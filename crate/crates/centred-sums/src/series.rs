//! Truncated formal power series over exact rationals, and the generating-
//! function verifications built on them.
//!
//! A series of order N stores the coefficients of z^0..z^N densely. Every
//! reported coefficient is the true one: multiplication and powers truncate
//! at the stated order but never approximate below it. There is no
//! convergence tolerance anywhere in this module; truncation order is the
//! only parameter.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::direct::{s_direct, u_direct};
use crate::dumont_foata::df_eval;
use crate::error::{Error, Result};
use crate::numeric::{choose, factorial, format_rational, pochhammer, pow2, rat_int, rat_pow};
use crate::report::{CheckResult, VerificationReport};

/// Dense truncated power series; index = power of z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> BigRational) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation order (inclusive highest reported power).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^k; panics beyond the truncation order, where the
    /// coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(
            k <= self.order(),
            "coefficient of z^{k} beyond order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Integer power by binary exponentiation, truncating at each step.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "series reciprocal needs a unit constant term"
        );
        let order = self.order();
        let inv0 = BigRational::one() / &self.coeffs[0];
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = inv0.clone();
        for m in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &coeffs[m - i];
                }
            }
            coeffs[m] = -acc * &inv0;
        }
        Self { coeffs }
    }
}

impl std::fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", format_rational(c))?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Named elementary series available exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryKind {
    Exp,
    Cosh,
    Sinh,
    Sec,
}

/// Maclaurin series of the named function of (scale * z), to the given order.
///
/// Sec is computed by exact reciprocal of the cosine series.
pub fn series_elementary(kind: ElementaryKind, scale: &BigRational, order: usize) -> PowerSeries {
    let taylor =
        |k: usize| rat_pow(scale, k as i64) / BigRational::from_integer(factorial(k as u64));
    match kind {
        ElementaryKind::Exp => PowerSeries::from_fn(order, taylor),
        ElementaryKind::Cosh => PowerSeries::from_fn(order, |k| {
            if k % 2 == 0 {
                taylor(k)
            } else {
                BigRational::zero()
            }
        }),
        ElementaryKind::Sinh => PowerSeries::from_fn(order, |k| {
            if k % 2 == 1 {
                taylor(k)
            } else {
                BigRational::zero()
            }
        }),
        ElementaryKind::Sec => {
            let cos = PowerSeries::from_fn(order, |k| {
                if k % 2 == 0 {
                    let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                    taylor(k) * rat_int(sign)
                } else {
                    BigRational::zero()
                }
            });
            cos.recip()
        }
    }
}

fn coeff_check(
    id: String,
    inputs: &[(&str, String)],
    expected: &BigRational,
    actual: &BigRational,
) -> CheckResult {
    CheckResult::compare(
        id,
        inputs,
        format_rational(expected),
        format_rational(actual),
        expected == actual,
    )
}

/// Coefficients of 2^n cosh^n(z/2) match the even-order sums U_{2r}(n):
/// the z^{2r} coefficient must equal U_{2r}(n) / (2r)!.
pub fn verify_egf_even(n: u64, order: usize) -> VerificationReport {
    let rhs = series_elementary(ElementaryKind::Cosh, &crate::numeric::rat(1, 2), order)
        .pow(n)
        .scale(&pow2(n as i64));
    let mut report = VerificationReport::new();
    let inputs = [("n", n.to_string()), ("order", order.to_string())];
    for rho in 0..=(order / 2) {
        let expected = u_direct(2 * rho as u32, n as i64)
            / BigRational::from_integer(factorial(2 * rho as u64));
        report.push(coeff_check(
            format!("egf-even[n={n}]/z^{}", 2 * rho),
            &inputs,
            &expected,
            rhs.coeff(2 * rho),
        ));
    }
    report
}

/// Coefficients of 2^{2n} cosh^{2n}(z/2) match S_{2r}(n).
pub fn verify_egf_s_even(n: u64, order: usize) -> VerificationReport {
    let rhs = series_elementary(ElementaryKind::Cosh, &crate::numeric::rat(1, 2), order)
        .pow(2 * n)
        .scale(&pow2(2 * n as i64));
    let mut report = VerificationReport::new();
    let inputs = [("n", n.to_string()), ("order", order.to_string())];
    for rho in 0..=(order / 2) {
        let expected = s_direct(2 * rho as u32, n as i64)
            / BigRational::from_integer(factorial(2 * rho as u64));
        report.push(coeff_check(
            format!("egf-s-even[n={n}]/z^{}", 2 * rho),
            &inputs,
            &expected,
            rhs.coeff(2 * rho),
        ));
    }
    report
}

/// cosh^n(z) expands as sum_k (-1)^k (1/2)_k (-n/2)_k (2 sinh z)^{2k} / (2k)!.
///
/// For even n the right side is a finite sum; the report notes the last k
/// that contributed.
pub fn verify_sinh_cosh_identity(n: u64, order: usize) -> VerificationReport {
    let lhs = series_elementary(ElementaryKind::Cosh, &BigRational::one(), order).pow(n);
    let two_sinh =
        series_elementary(ElementaryKind::Sinh, &BigRational::one(), order).scale(&rat_int(2));
    let half = crate::numeric::rat(1, 2);
    let minus_half_n = crate::numeric::rat(-(n as i64), 2);
    let mut rhs = PowerSeries::zero(order);
    let mut last_contributing = 0usize;
    for k in 0..=(order / 2) {
        let coeff = pochhammer(&half, k as u64) * pochhammer(&minus_half_n, k as u64)
            / BigRational::from_integer(factorial(2 * k as u64));
        if coeff.is_zero() {
            continue;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        rhs = rhs.add(&two_sinh.pow(2 * k as u64).scale(&(coeff * rat_int(sign))));
        last_contributing = k;
    }
    let mut report =
        VerificationReport::with_note(format!("right side summed to k = {last_contributing}"));
    let inputs = [("n", n.to_string()), ("order", order.to_string())];
    for m in 0..=order {
        report.push(coeff_check(
            format!("sinh-cosh[n={n}]/z^{m}"),
            &inputs,
            lhs.coeff(m),
            rhs.coeff(m),
        ));
    }
    report
}

/// The even-index egf for odd-order sums at even argument:
/// sum_r U_{2r+1}(2n) z^{2r} / (2r)!
///   = n C(2n,n) sum_{k=0}^{n} 4^k C(n,k) C(2k,k)^{-1} sinh^{2k}(z/2).
///
/// Also confirms that truncating the k-sum at min(r, n) leaves every
/// z^{2r} coefficient unchanged.
pub fn verify_egf_odd_even(n: u64, order: usize) -> VerificationReport {
    assert!(n >= 1, "stated for positive n");
    let sinh_half = series_elementary(ElementaryKind::Sinh, &crate::numeric::rat(1, 2), order);
    let prefactor = BigRational::from_integer(BigInt::from(n) * choose(2 * n, n));
    let term = |k: u64| -> BigRational {
        pow2(2 * k as i64) * BigRational::from_integer(choose(n, k))
            / BigRational::from_integer(choose(2 * k, k))
    };
    let mut rhs = PowerSeries::zero(order);
    for k in 0..=n.min(order as u64 / 2) {
        rhs = rhs.add(&sinh_half.pow(2 * k).scale(&term(k)));
    }
    let rhs = rhs.scale(&prefactor);
    let mut report = VerificationReport::new();
    let inputs = [("n", n.to_string()), ("order", order.to_string())];
    for rho in 0..=(order / 2) {
        let expected = u_direct(2 * rho as u32 + 1, 2 * n as i64)
            / BigRational::from_integer(factorial(2 * rho as u64));
        report.push(coeff_check(
            format!("egf-odd-even[n={n}]/z^{}", 2 * rho),
            &inputs,
            &expected,
            rhs.coeff(2 * rho),
        ));
        // truncating the k-sum at min(rho, n) must not change this coefficient
        let mut capped = PowerSeries::zero(2 * rho);
        for k in 0..=n.min(rho as u64) {
            capped = capped.add(&sinh_half.pow(2 * k).scale(&term(k)));
        }
        let capped = capped.scale(&prefactor);
        report.push(coeff_check(
            format!("egf-odd-even[n={n}]/z^{}/k-capped", 2 * rho),
            &inputs,
            rhs.coeff(2 * rho),
            capped.coeff(2 * rho),
        ));
    }
    report
}

/// The odd egf for odd-order sums at odd argument:
/// sum_r U_{2r+1}(2n-1) z^{2r+1} / (2r+1)!
///   = n C(2n,n) sum_{0<=j<=k<n} (-1)^{k-j} C(n-1,k) C(2k,k-j) C(2k,k)^{-1}
///       sinh((j+1/2) z) / (j+k+1).
///
/// Even-power coefficients of the right side must vanish.
pub fn verify_egf_odd_odd(n: u64, order: usize) -> VerificationReport {
    assert!(n >= 1, "stated for positive n");
    let mut rhs = PowerSeries::zero(order);
    for k in 0..n {
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            let coeff = BigRational::from_integer(choose(n - 1, k) * choose(2 * k, k - j))
                / BigRational::from_integer(choose(2 * k, k) * BigInt::from(j + k + 1))
                * rat_int(sign);
            let freq = crate::numeric::rat(2 * j as i64 + 1, 2);
            rhs = rhs.add(&series_elementary(ElementaryKind::Sinh, &freq, order).scale(&coeff));
        }
    }
    let rhs = rhs.scale(&BigRational::from_integer(
        BigInt::from(n) * choose(2 * n, n),
    ));
    let mut report = VerificationReport::new();
    let inputs = [("n", n.to_string()), ("order", order.to_string())];
    for m in 0..=order {
        let expected = if m % 2 == 1 {
            u_direct(m as u32, 2 * n as i64 - 1) / BigRational::from_integer(factorial(m as u64))
        } else {
            BigRational::zero()
        };
        report.push(coeff_check(
            format!("egf-odd-odd[n={n}]/z^{m}"),
            &inputs,
            &expected,
            rhs.coeff(m),
        ));
    }
    report
}

/// The two-variable egf for the trivariate polynomial family at z = 1:
/// sum_{r>=1} (-1)^r F_r(x,y,1) z^{2r} / (2r)!
///   = (1/(xy)) sum_{k>=1} (-1)^k (x)_k (y)_k (2 sinh(z/2))^{2k} / (2k)!.
pub fn verify_carlitz_egf(
    x: &BigRational,
    y: &BigRational,
    order: usize,
) -> Result<VerificationReport> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroPrefactor);
    }
    let mut lhs = PowerSeries::zero(order);
    {
        // buildable in place: only even powers 2r with r >= 1 are populated
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for rho in 1..=(order / 2) {
            let sign = if rho % 2 == 0 { 1 } else { -1 };
            coeffs[2 * rho] = df_eval(rho as u32, x, y, &BigRational::one())?
                / BigRational::from_integer(factorial(2 * rho as u64))
                * rat_int(sign);
        }
        lhs = lhs.add(&PowerSeries { coeffs });
    }
    let two_sinh_half = series_elementary(ElementaryKind::Sinh, &crate::numeric::rat(1, 2), order)
        .scale(&rat_int(2));
    let mut rhs = PowerSeries::zero(order);
    for k in 1..=(order / 2) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = pochhammer(x, k as u64) * pochhammer(y, k as u64)
            / BigRational::from_integer(factorial(2 * k as u64))
            * rat_int(sign);
        rhs = rhs.add(&two_sinh_half.pow(2 * k as u64).scale(&coeff));
    }
    let rhs = rhs.scale(&(BigRational::one() / (x * y)));
    let mut report = VerificationReport::new();
    let inputs = [
        ("x", format_rational(x)),
        ("y", format_rational(y)),
        ("order", order.to_string()),
    ];
    for m in 0..=order {
        report.push(coeff_check(
            format!(
                "carlitz-egf[x={},y={}]/z^{m}",
                format_rational(x),
                format_rational(y)
            ),
            &inputs,
            lhs.coeff(m),
            rhs.coeff(m),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn elementary_series_values() {
        let cosh = series_elementary(ElementaryKind::Cosh, &rat_int(1), 4);
        assert_eq!(cosh.coeff(0), &rat_int(1));
        assert_eq!(cosh.coeff(2), &rat(1, 2));
        assert_eq!(cosh.coeff(4), &rat(1, 24));
        assert_eq!(cosh.coeff(1), &rat_int(0));

        let sinh_half = series_elementary(ElementaryKind::Sinh, &rat(1, 2), 3);
        assert_eq!(sinh_half.coeff(1), &rat(1, 2));
        assert_eq!(sinh_half.coeff(3), &rat(1, 48));

        let sec = series_elementary(ElementaryKind::Sec, &rat_int(1), 6);
        assert_eq!(sec.coeff(0), &rat_int(1));
        assert_eq!(sec.coeff(2), &rat(1, 2));
        assert_eq!(sec.coeff(4), &rat(5, 24));
        assert_eq!(sec.coeff(6), &rat(61, 720));
    }

    #[test]
    fn engine_self_tests() {
        let order = 20;
        let cosh = series_elementary(ElementaryKind::Cosh, &rat(1, 2), order);
        let sinh = series_elementary(ElementaryKind::Sinh, &rat(1, 2), order);
        let diff = cosh.mul(&cosh).sub(&sinh.mul(&sinh));
        assert_eq!(diff, PowerSeries::one(order), "cosh^2 - sinh^2 = 1");

        let exp = series_elementary(ElementaryKind::Exp, &rat_int(1), order);
        let exp_neg = series_elementary(ElementaryKind::Exp, &rat_int(-1), order);
        assert_eq!(
            exp.mul(&exp_neg),
            PowerSeries::one(order),
            "exp(z) exp(-z) = 1"
        );
    }

    #[test]
    fn parity_of_built_series() {
        let cosh = series_elementary(ElementaryKind::Cosh, &rat(3, 7), 15);
        let sinh = series_elementary(ElementaryKind::Sinh, &rat(3, 7), 15);
        for m in 0..=15 {
            if m % 2 == 1 {
                assert!(cosh.coeff(m).is_zero());
            } else {
                assert!(sinh.coeff(m).is_zero());
            }
        }
    }

    #[test]
    fn egf_even_small_cases() {
        // 2 cosh(z/2): coefficients against the defining sums at n = 1
        let report = verify_egf_even(1, 4);
        assert!(report.passed(), "{:?}", report.failures());
        // n = 0: constant 1, higher sums vanish
        assert!(verify_egf_even(0, 8).passed());
        assert!(verify_egf_even(6, 20).passed());
    }

    #[test]
    fn egf_s_even_small_cases() {
        assert!(verify_egf_s_even(1, 4).passed());
        assert!(verify_egf_s_even(0, 2).passed());
        assert!(verify_egf_s_even(3, 12).passed());
    }

    #[test]
    fn sinh_cosh_identity_cases() {
        let report = verify_sinh_cosh_identity(2, 8);
        assert!(report.passed(), "{:?}", report.failures());
        // termination for even n: (-n/2)_k vanishes beyond k = n/2
        assert_eq!(report.note.as_deref(), Some("right side summed to k = 1"));
        assert!(verify_sinh_cosh_identity(0, 6).passed());
        assert!(verify_sinh_cosh_identity(5, 12).passed());
    }

    #[test]
    fn egf_odd_even_cases() {
        let report = verify_egf_odd_even(1, 0);
        assert!(report.passed(), "{:?}", report.failures());
        // constant term n C(2n,n) at n = 1 equals the order-1 sum at argument 2
        assert_eq!(report.checks[0].actual, "2");
        assert!(verify_egf_odd_even(2, 6).passed());
        assert!(verify_egf_odd_even(1, 4).passed());
    }

    #[test]
    fn egf_odd_odd_cases() {
        // n = 1: right side is 2 sinh(z/2), coefficients 1, 1/4, 1/16 at odd powers
        let report = verify_egf_odd_odd(1, 5);
        assert!(report.passed(), "{:?}", report.failures());
        let odd: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.id.ends_with("z^1") || c.id.ends_with("z^3") || c.id.ends_with("z^5"))
            .map(|c| c.expected.as_deref().unwrap())
            .collect();
        assert_eq!(odd, vec!["1", "1/24", "1/1920"]);
        assert!(verify_egf_odd_odd(2, 3).passed());
    }

    #[test]
    fn carlitz_egf_cases() {
        assert!(verify_carlitz_egf(&rat_int(1), &rat_int(1), 8)
            .unwrap()
            .passed());
        assert!(verify_carlitz_egf(&rat(1, 2), &rat_int(1), 6)
            .unwrap()
            .passed());
        // vacuous at order 0
        assert!(verify_carlitz_egf(&rat_int(2), &rat(3, 2), 0)
            .unwrap()
            .passed());
        assert!(matches!(
            verify_carlitz_egf(&rat_int(0), &rat_int(1), 4),
            Err(Error::ZeroPrefactor)
        ));
    }
}

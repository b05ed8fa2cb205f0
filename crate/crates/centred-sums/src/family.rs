//! The four polynomial families behind the sums, their recurrences, and the
//! classical integer sequences they carry.
//!
//! Each family member of index r is a degree-r polynomial over Z, built
//! symbolically from the seed 1 by an order-raising recurrence. Coefficient
//! vectors are stored ascending with no trailing zeros (canonical degree).
//!
//! Reconstruction: the sums factor as a family polynomial times a power of
//! two or a central binomial coefficient, dispatched on the parities of the
//! order and the argument.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::direct::u_direct;
use crate::numeric::{choose, factorial, pow2, rat};
use crate::report::{CheckResult, VerificationReport};
use crate::series::{series_elementary, ElementaryKind};

/// Dense univariate polynomial with exact integer coefficients.
///
/// Coefficients ascend by degree; the vector carries no trailing zeros, so
/// equality is structural and `degree` is exact. The zero polynomial is the
/// empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of n^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Composition with an integer shift of the variable: P(n + c).
    ///
    /// Expanded by binomial coefficients, keeping everything integral.
    pub fn shift(&self, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        let c = BigInt::from(c);
        for (i, a) in self.coeffs.iter().enumerate() {
            let mut power = BigInt::one();
            // contribution of a * (n + c)^i, lowest power of n gets c^i
            for j in (0..=i).rev() {
                coeffs[j] += a * choose(i as u64, j as u64) * &power;
                power *= &c;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// P(-n): negate odd-degree coefficients.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Divide by the variable; None unless the constant term vanishes.
    pub fn divide_out_var(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.constant_term().is_zero() {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs[1..].to_vec()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Plain rendering, descending powers: "105n^3 - 210n^2 + 147n - 34".
    pub fn to_plain_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k >= 1 {
                out.push_str(var);
                if k >= 2 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// Factored rendering: the variable is pulled out when the constant term
    /// vanishes and more than one term remains, e.g. "n(2n - 1)".
    pub fn to_factored_string(&self, var: &str) -> String {
        if let Some(q) = self.divide_out_var() {
            let nonzero = q.coeffs.iter().filter(|c| !c.is_zero()).count();
            if nonzero >= 2 {
                return format!("{var}({})", q.to_plain_string(var));
            }
        }
        self.to_plain_string(var)
    }
}

/// The four families, in the order their reconstruction cases apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyId {
    P,
    Pbar,
    Q,
    Qbar,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::P, FamilyId::Pbar, FamilyId::Q, FamilyId::Qbar];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P => "P",
            FamilyId::Pbar => "Pbar",
            FamilyId::Q => "Q",
            FamilyId::Qbar => "Qbar",
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One order-raising step of the family recurrence.
fn family_step(which: FamilyId, prev: &IntPolynomial) -> IntPolynomial {
    let poly =
        |cs: &[i64]| IntPolynomial::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect());
    let shifted = prev.shift(-1);
    match which {
        // n^2 V(n) - n(n-1) V(n-1)
        FamilyId::P => poly(&[0, 0, 1])
            .mul(prev)
            .sub(&poly(&[0, -1, 1]).mul(&shifted)),
        // (2n-1)^2 V(n) - 4(n-1)^2 V(n-1)
        FamilyId::Pbar => poly(&[1, -4, 4])
            .mul(prev)
            .sub(&poly(&[4, -8, 4]).mul(&shifted)),
        // 2n^2 V(n) - n(2n-1) V(n-1)
        FamilyId::Q => poly(&[0, 0, 2])
            .mul(prev)
            .sub(&poly(&[0, -1, 2]).mul(&shifted)),
        // (2n+1)^2 V(n) - 2n(2n+1) V(n-1)
        FamilyId::Qbar => poly(&[1, 4, 4])
            .mul(prev)
            .sub(&poly(&[0, 2, 4]).mul(&shifted)),
    }
}

/// All members of one family up to index r_max, from the seed 1.
pub fn family_tower(which: FamilyId, r_max: u32) -> Vec<IntPolynomial> {
    let mut tower = Vec::with_capacity(r_max as usize + 1);
    tower.push(IntPolynomial::one());
    for _ in 0..r_max {
        let next = family_step(which, tower.last().expect("tower is nonempty"));
        tower.push(next);
    }
    tower
}

/// The degree-r member of the family.
pub fn family_poly(which: FamilyId, r: u32) -> IntPolynomial {
    family_tower(which, r).pop().expect("tower is nonempty")
}

/// Reconstruct U_r(n) from the matching family member.
///
/// Dispatch on (parity of r, parity of n); the two odd-order cases are stated
/// for positive arguments, so n = 0 falls back to the defining sum.
pub fn u_from_family(r: u32, n: u64) -> BigRational {
    if r % 2 == 1 && n == 0 {
        return u_direct(r, 0);
    }
    let rho = r / 2;
    match (r % 2, n % 2) {
        // U_{2rho+1}(2m) = m P_rho(m) C(2m,m)
        (1, 0) => {
            let m = n / 2;
            let p = family_poly(FamilyId::P, rho).eval_int(&BigInt::from(m));
            BigRational::from_integer(BigInt::from(m) * p * choose(2 * m, m))
        }
        // U_{2rho+1}(2m-1) = 2^{-(2rho+1)} m Pbar_rho(m) C(2m,m)
        (1, 1) => {
            let m = (n + 1) / 2;
            let p = family_poly(FamilyId::Pbar, rho).eval_int(&BigInt::from(m));
            BigRational::from_integer(BigInt::from(m) * p * choose(2 * m, m)) * pow2(-(r as i64))
        }
        // U_{2rho}(2m) = 2^{2m - rho} Q_rho(m)
        (0, 0) => {
            let m = n / 2;
            let q = family_poly(FamilyId::Q, rho).eval_int(&BigInt::from(m));
            BigRational::from_integer(q) * pow2(2 * m as i64 - rho as i64)
        }
        // U_{2rho}(2m+1) = 2^{2m + 1 - 2rho} Qbar_rho(m)
        (0, 1) => {
            let m = (n - 1) / 2;
            let q = family_poly(FamilyId::Qbar, rho).eval_int(&BigInt::from(m));
            BigRational::from_integer(q) * pow2(2 * m as i64 + 1 - 2 * rho as i64)
        }
        _ => unreachable!("parities are 0 or 1"),
    }
}

/// U_{2r}(n) through a single half-integer evaluation: 2^{n-r} Q_r(n/2).
///
/// Covers both parities of n with one formula.
pub fn q_at_half_integer(r: u32, n: u64) -> BigRational {
    let q = family_poly(FamilyId::Q, r).eval_rat(&rat(n as i64, 2));
    q * pow2(n as i64 - r as i64)
}

/// 2^r Q_r(m + 1/2) expanded symbolically; the shifted, scaled family member
/// must clear to integer coefficients.
pub fn qbar_via_shift(r: u32) -> IntPolynomial {
    let q = family_poly(FamilyId::Q, r);
    // expand Q_r(m + 1/2) over rationals, lowest power first
    let half = rat(1, 2);
    let mut acc = vec![BigRational::zero(); q.coeffs().len().max(1)];
    let mut power = vec![BigRational::one()]; // (m + 1/2)^i
    for (i, a) in q.coeffs().iter().enumerate() {
        if i > 0 {
            // multiply the running power by (m + 1/2)
            let mut next = vec![BigRational::zero(); power.len() + 1];
            for (j, p) in power.iter().enumerate() {
                next[j + 1] += p;
                next[j] += p * &half;
            }
            power = next;
        }
        let a = BigRational::from_integer(a.clone());
        for (j, p) in power.iter().enumerate() {
            acc[j] += &a * p;
        }
    }
    let scale = pow2(r as i64);
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            let v = c * &scale;
            assert!(
                v.is_integer(),
                "shifted family member must clear to integers"
            );
            v.to_integer()
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// The three scalar probes of a family member: value at 0, value at 1, and
/// the leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialValues {
    pub at_zero: BigInt,
    pub at_one: BigInt,
    pub leading: BigInt,
}

pub fn special_values(which: FamilyId, r: u32) -> SpecialValues {
    let poly = family_poly(which, r);
    SpecialValues {
        at_zero: poly.eval_int(&BigInt::zero()),
        at_one: poly.eval_int(&BigInt::one()),
        leading: poly.leading(),
    }
}

/// Closed forms the special values must match, with secant numbers supplied
/// by the caller (computed independently via series inversion).
pub fn expected_special_values(which: FamilyId, r: u32, secant: &[BigInt]) -> SpecialValues {
    let delta = |r: u32| {
        if r == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    };
    let sign = |r: u32| {
        if r % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    match which {
        FamilyId::P => SpecialValues {
            at_zero: delta(r),
            at_one: BigInt::one(),
            leading: factorial(r as u64),
        },
        FamilyId::Q => SpecialValues {
            at_zero: delta(r),
            // max(1, 2^{r-1})
            at_one: if r == 0 {
                BigInt::one()
            } else {
                BigInt::from(2).pow(r - 1)
            },
            // (2r)! / (2^r r!)
            leading: factorial(2 * r as u64) / (BigInt::from(2).pow(r) * factorial(r as u64)),
        },
        FamilyId::Pbar => SpecialValues {
            // (-1)^r (2r+1) S_r
            at_zero: sign(r) * BigInt::from(2 * r + 1) * &secant[r as usize],
            at_one: BigInt::one(),
            // 2^{2r} r!
            leading: BigInt::from(2).pow(2 * r) * factorial(r as u64),
        },
        FamilyId::Qbar => SpecialValues {
            at_zero: BigInt::one(),
            // (3^{2r} + 3) / 4
            at_one: (BigInt::from(3).pow(2 * r) + 3) / 4,
            // (2r)! / r!
            leading: factorial(2 * r as u64) / factorial(r as u64),
        },
    }
}

/// First `count` secant numbers by exact series reciprocal of cos.
pub fn secant_numbers(count: u32) -> Vec<BigInt> {
    assert!(count >= 1);
    let order = 2 * (count as usize - 1);
    let sec = series_elementary(ElementaryKind::Sec, &BigRational::one(), order);
    (0..count as usize)
        .map(|rho| {
            let v = sec.coeff(2 * rho) * BigRational::from_integer(factorial(2 * rho as u64));
            assert!(v.is_integer(), "secant numbers are integers");
            v.to_integer()
        })
        .collect()
}

/// Classical sequences read off the families' constant structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// Constant terms of -P_r(n)/n for r = 1, 2, ...
    Genocchi,
    /// Constant terms of (-1)^{r-1} Q_r(n)/n for r = 1, 2, ...
    ReducedTangent,
    /// Values Pbar_r(0) for r = 0, 1, ...
    PbarAtZero,
}

pub fn classic_sequences(kind: SequenceKind, count: u32) -> Vec<BigInt> {
    assert!(count >= 1);
    match kind {
        SequenceKind::Genocchi => family_tower(FamilyId::P, count)
            .into_iter()
            .skip(1)
            .map(|p| {
                let quotient = p.divide_out_var().expect("P_r has zero constant term");
                -quotient.constant_term()
            })
            .collect(),
        SequenceKind::ReducedTangent => family_tower(FamilyId::Q, count)
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(r, q)| {
                let quotient = q.divide_out_var().expect("Q_r has zero constant term");
                let sign = if (r - 1) % 2 == 0 { 1 } else { -1 };
                quotient.constant_term() * BigInt::from(sign)
            })
            .collect(),
        SequenceKind::PbarAtZero => family_tower(FamilyId::Pbar, count - 1)
            .into_iter()
            .map(|p| p.constant_term())
            .collect(),
    }
}

/// Leading coefficients of one family, r = 0..count-1.
pub fn leading_sequence(which: FamilyId, count: u32) -> Vec<BigInt> {
    assert!(count >= 1);
    family_tower(which, count - 1)
        .into_iter()
        .map(|p| p.leading())
        .collect()
}

/// Coefficient triangles associated with the families, one row per r >= 1
/// (r >= 0 for the Pbar triangle), rows in descending power order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// Coefficients of (-1)^r P_r(-n)/n; all entries positive.
    P,
    /// Coefficients of (-1)^r Q_r(-n)/n; all entries positive.
    Q,
    /// Coefficients of Qbar_r(-n).
    Qbar,
    /// Coefficients of Pbar_r(n), starting at r = 0.
    Pbar,
}

pub fn triangle_rows(kind: TriangleKind, rows: u32) -> Vec<Vec<BigInt>> {
    assert!(rows >= 1);
    let descending = |p: &IntPolynomial| -> Vec<BigInt> {
        let mut cs = p.coeffs().to_vec();
        cs.reverse();
        cs
    };
    match kind {
        TriangleKind::P | TriangleKind::Q => {
            let which = if kind == TriangleKind::P {
                FamilyId::P
            } else {
                FamilyId::Q
            };
            family_tower(which, rows)
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(r, p)| {
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    let q = p
                        .reflect()
                        .scale(&BigInt::from(sign))
                        .divide_out_var()
                        .expect("constant term vanishes for r >= 1");
                    descending(&q)
                })
                .collect()
        }
        TriangleKind::Qbar => family_tower(FamilyId::Qbar, rows)
            .into_iter()
            .skip(1)
            .map(|p| descending(&p.reflect()))
            .collect(),
        TriangleKind::Pbar => family_tower(FamilyId::Pbar, rows - 1)
            .iter()
            .map(descending)
            .collect(),
    }
}

/// Reference coefficient tables for the small family members, ascending
/// order. Used as fixed regression values by the table verification.
pub fn reference_polynomials() -> Vec<(FamilyId, u32, Vec<i64>)> {
    vec![
        (FamilyId::P, 0, vec![1]),
        (FamilyId::P, 1, vec![0, 1]),
        (FamilyId::P, 2, vec![0, -1, 2]),
        (FamilyId::P, 3, vec![0, 3, -8, 6]),
        (FamilyId::P, 4, vec![0, -17, 54, -60, 24]),
        (FamilyId::P, 5, vec![0, 155, -556, 762, -480, 120]),
        (FamilyId::Q, 0, vec![1]),
        (FamilyId::Q, 1, vec![0, 1]),
        (FamilyId::Q, 2, vec![0, -1, 3]),
        (FamilyId::Q, 3, vec![0, 4, -15, 15]),
        (FamilyId::Q, 4, vec![0, -34, 147, -210, 105]),
        (FamilyId::Q, 5, vec![0, 496, -2370, 4095, -3150, 945]),
        (FamilyId::Pbar, 0, vec![1]),
        (FamilyId::Pbar, 1, vec![-3, 4]),
        (FamilyId::Pbar, 2, vec![25, -56, 32]),
        (FamilyId::Pbar, 3, vec![-427, 1228, -1184, 384]),
        (FamilyId::Pbar, 4, vec![12465, -41840, 52416, -29184, 6144]),
        (
            FamilyId::Pbar,
            5,
            vec![-555731, 2079892, -3076288, 2258688, -829440, 122880],
        ),
        (FamilyId::Qbar, 0, vec![1]),
        (FamilyId::Qbar, 1, vec![1, 2]),
        (FamilyId::Qbar, 2, vec![1, 8, 12]),
        (FamilyId::Qbar, 3, vec![1, 2, 60, 120]),
        (FamilyId::Qbar, 4, vec![1, 128, -168, 0, 1680]),
        (FamilyId::Qbar, 5, vec![1, -2638, 7320, 5040, -25200, 30240]),
    ]
}

/// Check the 24 small family members against the fixed reference tables.
pub fn verify_polynomial_tables() -> VerificationReport {
    let mut report = VerificationReport::new();
    for (which, r, expected) in reference_polynomials() {
        let expected = IntPolynomial::from_coeffs(expected.into_iter().map(BigInt::from).collect());
        let actual = family_poly(which, r);
        report.push(CheckResult::compare(
            format!("poly-table/{which}_{r}"),
            &[("family", which.to_string()), ("r", r.to_string())],
            expected.to_factored_string("n"),
            actual.to_factored_string("n"),
            expected == actual,
        ));
    }
    report
}

/// Check every special-value closed form for all four families, r <= r_max.
pub fn verify_special_values(r_max: u32) -> VerificationReport {
    let secant = secant_numbers(r_max + 1);
    let mut report = VerificationReport::new();
    for which in FamilyId::ALL {
        for r in 0..=r_max {
            let actual = special_values(which, r);
            let expected = expected_special_values(which, r, &secant);
            for (probe, exp, act) in [
                ("at-zero", &expected.at_zero, &actual.at_zero),
                ("at-one", &expected.at_one, &actual.at_one),
                ("leading", &expected.leading, &actual.leading),
            ] {
                report.push(CheckResult::compare(
                    format!("special-value/{which}_{r}/{probe}"),
                    &[("family", which.to_string()), ("r", r.to_string())],
                    exp,
                    act,
                    exp == act,
                ));
            }
        }
    }
    report
}

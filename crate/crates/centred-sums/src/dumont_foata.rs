//! The symmetric trivariate polynomial family F_r(x,y,z), its explicit
//! double-sum evaluation, and the bridges from it to the univariate families
//! and to the sums themselves.
//!
//! F_1 = 1 and F_{r+1}(x,y,z) = (x+z)(y+z) F_r(x,y,z+1) - z^2 F_r(x,y,z),
//! with the z -> z+1 shift performed symbolically. Terms are kept in a
//! sparse exponent map with no explicit zeros; coefficients are nonnegative
//! integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::{family_poly, FamilyId, IntPolynomial};
use crate::numeric::{choose, format_rational, pochhammer, pow2, rat, rat_int, rat_pow};
use crate::report::{CheckResult, VerificationReport};

/// Sparse trivariate polynomial over Z, keyed by (x, y, z) exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriPolynomial {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0, 0), BigInt::one());
        p
    }

    /// Accumulate a coefficient, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, expo: (u32, u32, u32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&expo);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&expo, c) in &other.terms {
            out.add_term(expo, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&expo, c) in &other.terms {
            out.add_term(expo, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1, k1), c1) in &self.terms {
            for (&(i2, j2, k2), c2) in &other.terms {
                out.add_term((i1 + i2, j1 + j2, k1 + k2), c1 * c2);
            }
        }
        out
    }

    /// Substitute z -> z + 1 symbolically via binomial expansion.
    pub fn shift_z(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j, k), c) in &self.terms {
            for m in 0..=k {
                out.add_term((i, j, m), c * choose(k as u64, m as u64));
            }
        }
        out
    }

    /// Apply a permutation of the three variables: position p of the new
    /// exponent triple takes the old exponent at `perm[p]`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::zero();
        for (&expo, c) in &self.terms {
            let old = [expo.0, expo.1, expo.2];
            out.add_term((old[perm[0]], old[perm[1]], old[perm[2]]), c.clone());
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational, z: &BigRational) -> BigRational {
        let max = self.terms.keys().fold((0, 0, 0), |acc, &(i, j, k)| {
            (acc.0.max(i), acc.1.max(j), acc.2.max(k))
        });
        let powers = |v: &BigRational, top: u32| -> Vec<BigRational> {
            let mut out = Vec::with_capacity(top as usize + 1);
            out.push(BigRational::one());
            for e in 1..=top {
                let prev = &out[e as usize - 1];
                out.push(prev * v);
            }
            out
        };
        let (px, py, pz) = (powers(x, max.0), powers(y, max.1), powers(z, max.2));
        let mut acc = BigRational::zero();
        for (&(i, j, k), c) in &self.terms {
            acc += BigRational::from_integer(c.clone())
                * &px[i as usize]
                * &py[j as usize]
                * &pz[k as usize];
        }
        acc
    }

    /// Substitute a linear form of a single variable t for each of x, y, z,
    /// producing the coefficients of the resulting univariate polynomial.
    pub fn substitute_linear(&self, args: &[LinearArg; 3]) -> Vec<BigRational> {
        let max = self.terms.keys().fold((0, 0, 0), |acc, &(i, j, k)| {
            (acc.0.max(i), acc.1.max(j), acc.2.max(k))
        });
        let powers = |arg: &LinearArg, top: u32| -> Vec<Vec<BigRational>> {
            let mut out = vec![vec![BigRational::one()]];
            for e in 1..=top as usize {
                let prev = &out[e - 1];
                let mut next = vec![BigRational::zero(); prev.len() + 1];
                for (d, c) in prev.iter().enumerate() {
                    next[d] += c * &arg.intercept;
                    next[d + 1] += c * &arg.slope;
                }
                out.push(next);
            }
            out
        };
        let px = powers(&args[0], max.0);
        let py = powers(&args[1], max.1);
        let pz = powers(&args[2], max.2);
        let mut acc = vec![BigRational::zero()];
        for (&(i, j, k), coeff) in &self.terms {
            let mut term = vec![BigRational::from_integer(coeff.clone())];
            for factor in [&px[i as usize], &py[j as usize], &pz[k as usize]] {
                term = mul_rat_polys(&term, factor);
            }
            if acc.len() < term.len() {
                acc.resize(term.len(), BigRational::zero());
            }
            for (d, c) in term.into_iter().enumerate() {
                acc[d] += c;
            }
        }
        acc
    }
}

/// A linear argument slope * t + intercept used in symbolic substitution.
#[derive(Debug, Clone)]
pub struct LinearArg {
    pub slope: BigRational,
    pub intercept: BigRational,
}

impl LinearArg {
    pub fn constant(value: BigRational) -> Self {
        Self {
            slope: BigRational::zero(),
            intercept: value,
        }
    }

    pub fn variable(slope: BigRational, intercept: BigRational) -> Self {
        Self { slope, intercept }
    }
}

fn mul_rat_polys(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

impl std::fmt::Display for TriPolynomial {
    /// Monomials in descending lexicographic exponent order:
    /// "x*y + x*z + y*z".
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j, k), c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            for (e, var) in [(i, "x"), (j, "y"), (k, "z")] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}

/// F_r by the defining recurrence; undefined for r = 0.
pub fn df_poly(r: u32) -> Result<TriPolynomial> {
    if r == 0 {
        return Err(Error::DumontFoataUndefined(0));
    }
    // (x+z)(y+z) expanded once
    let mut cross = TriPolynomial::zero();
    cross.add_term((1, 1, 0), BigInt::one());
    cross.add_term((1, 0, 1), BigInt::one());
    cross.add_term((0, 1, 1), BigInt::one());
    cross.add_term((0, 0, 2), BigInt::one());
    let mut z_sq = TriPolynomial::zero();
    z_sq.add_term((0, 0, 2), BigInt::one());

    let mut current = TriPolynomial::one();
    for _ in 1..r {
        current = cross.mul(&current.shift_z()).sub(&z_sq.mul(&current));
    }
    Ok(current)
}

/// Exact value of F_r at a rational point.
pub fn df_eval(r: u32, x: &BigRational, y: &BigRational, z: &BigRational) -> Result<BigRational> {
    Ok(df_poly(r)?.eval(x, y, z))
}

/// The explicit double sum for F_r:
/// 2 (-1)^{r-1} sum_{0<=j<=k<r} (-1)^j (x+z)_k (y+z)_k (z+j)^{2r-1}
///                              / (j! (k-j)! (2z+j)_{k+1}).
///
/// Requires (2z)_{2r-1} != 0; every denominator factor divides that symbol,
/// so the single check covers the whole sum.
pub fn df_carlitz(
    r: u32,
    x: &BigRational,
    y: &BigRational,
    z: &BigRational,
) -> Result<BigRational> {
    if r == 0 {
        return Err(Error::DumontFoataUndefined(0));
    }
    let two_z = z * rat_int(2);
    if pochhammer(&two_z, 2 * r as u64 - 1).is_zero() {
        return Err(Error::VanishingPochhammer {
            factor: format!("(2z)_{} at z = {}", 2 * r - 1, format_rational(z)),
        });
    }
    let xz = x + z;
    let yz = y + z;
    let mut total = BigRational::zero();
    for k in 0..r as u64 {
        let num_base = pochhammer(&xz, k) * pochhammer(&yz, k);
        for j in 0..=k {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let power = rat_pow(&(z + rat_int(j as i64)), 2 * r as i64 - 1);
            let denom = BigRational::from_integer(
                crate::numeric::factorial(j) * crate::numeric::factorial(k - j),
            ) * pochhammer(&(&two_z + rat_int(j as i64)), k + 1);
            total += &num_base * power * rat_int(sign) / denom;
        }
    }
    let lead_sign = if (r - 1) % 2 == 0 { 2 } else { -2 };
    Ok(total * rat_int(lead_sign))
}

/// A univariate family member recovered by symbolic substitution into F_r.
///
/// The substituted polynomial must clear to integer coefficients; failure
/// signals a transcription bug, so it panics rather than rounding.
pub fn family_from_df(which: FamilyId, r: u32) -> Result<IntPolynomial> {
    if r == 0 {
        return Err(Error::DumontFoataUndefined(0));
    }
    let half = rat(1, 2);
    let minus_t = LinearArg::variable(rat_int(-1), BigRational::zero());
    let sign = |s: i64| rat_int(if s % 2 == 0 { 1 } else { -1 });
    let (coeffs, prefactor_var): (Vec<BigRational>, Option<BigRational>) = match which {
        // (-1)^{r-1} t F_r(-t, 1, 1)
        FamilyId::P => {
            let subbed = df_poly(r)?.substitute_linear(&[
                minus_t,
                LinearArg::constant(rat_int(1)),
                LinearArg::constant(rat_int(1)),
            ]);
            let scaled = scale_rat_poly(&subbed, &sign(r as i64 - 1));
            (scaled, Some(BigRational::zero()))
        }
        // (-4)^r F_{r+1}(1/2 - t, 1/2, 1/2)
        FamilyId::Pbar => {
            let subbed = df_poly(r + 1)?.substitute_linear(&[
                LinearArg::variable(rat_int(-1), half.clone()),
                LinearArg::constant(half.clone()),
                LinearArg::constant(half),
            ]);
            let factor = rat_pow(&rat_int(-4), r as i64);
            (scale_rat_poly(&subbed, &factor), None)
        }
        // (-2)^{r-1} t F_r(-t, 1/2, 1)
        FamilyId::Q => {
            let subbed = df_poly(r)?.substitute_linear(&[
                minus_t,
                LinearArg::constant(half),
                LinearArg::constant(rat_int(1)),
            ]);
            let factor = rat_pow(&rat_int(-2), r as i64 - 1);
            (scale_rat_poly(&subbed, &factor), Some(BigRational::zero()))
        }
        // (-1)^{r-1} 2^{2r-1} (t + 1/2) F_r(-t - 1/2, 1/2, 1)
        FamilyId::Qbar => {
            let subbed = df_poly(r)?.substitute_linear(&[
                LinearArg::variable(rat_int(-1), -half.clone()),
                LinearArg::constant(half.clone()),
                LinearArg::constant(rat_int(1)),
            ]);
            let factor = sign(r as i64 - 1) * pow2(2 * r as i64 - 1);
            (scale_rat_poly(&subbed, &factor), Some(half))
        }
    };
    // multiply by (t + c) when the bridge carries a variable prefactor
    let coeffs = match prefactor_var {
        Some(c) => mul_rat_polys(&coeffs, &[c, BigRational::one()]),
        None => coeffs,
    };
    let ints: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "bridge substitution must clear to integer coefficients"
            );
            c.to_integer()
        })
        .collect();
    Ok(IntPolynomial::from_coeffs(ints))
}

fn scale_rat_poly(coeffs: &[BigRational], factor: &BigRational) -> Vec<BigRational> {
    coeffs.iter().map(|c| c * factor).collect()
}

/// U_r(n) through the trivariate bridges, on their stated validity domain:
/// even order needs r >= 2, odd order at even argument needs r >= 3, odd
/// order at odd argument holds for all odd r; n must be positive throughout.
pub fn u_from_df(r: u32, n: u64) -> Result<BigRational> {
    let invalid = |formula: &str, required: &str| Error::OutsideValidity {
        formula: formula.to_string(),
        required: required.to_string(),
        r: r as i64,
        n: n as i64,
    };
    if n == 0 {
        return Err(invalid("trivariate bridge", "argument n >= 1"));
    }
    let half = rat(1, 2);
    if r % 2 == 0 {
        // U_{2rho}(n) = 2^{n-2} n (-1)^{rho-1} F_rho(-n/2, 1/2, 1)
        let rho = r / 2;
        if rho == 0 {
            return Err(invalid("even-order bridge", "order 2rho with rho >= 1"));
        }
        let f = df_eval(rho, &rat(-(n as i64), 2), &half, &BigRational::one())?;
        let sign = if (rho - 1) % 2 == 0 { 1 } else { -1 };
        Ok(pow2(n as i64 - 2) * rat_int(n as i64) * rat_int(sign) * f)
    } else if n % 2 == 0 {
        // U_{2rho+1}(2m) = m^2 (-1)^{rho-1} F_rho(-m, 1, 1) C(2m,m)
        let rho = (r - 1) / 2;
        if rho == 0 {
            return Err(invalid(
                "odd-order bridge at even argument",
                "order 2rho+1 with rho >= 1",
            ));
        }
        let m = n / 2;
        let f = df_eval(
            rho,
            &rat_int(-(m as i64)),
            &BigRational::one(),
            &BigRational::one(),
        )?;
        let sign = if (rho - 1) % 2 == 0 { 1 } else { -1 };
        Ok(rat_int((m * m) as i64)
            * rat_int(sign)
            * f
            * BigRational::from_integer(choose(2 * m, m)))
    } else {
        // U_{2rho+1}(2m-1) = (1/2) m (-1)^rho F_{rho+1}(1/2 - m, 1/2, 1/2) C(2m,m)
        let rho = (r - 1) / 2;
        let m = (n + 1) / 2;
        let f = df_eval(rho + 1, &(&half - rat_int(m as i64)), &half, &half)?;
        let sign = if rho % 2 == 0 { 1 } else { -1 };
        Ok(half.clone()
            * rat_int(m as i64)
            * rat_int(sign)
            * f
            * BigRational::from_integer(choose(2 * m, m)))
    }
}

/// True when (r, n) lies inside the validity domain of [`u_from_df`].
pub fn df_route_applies(r: u32, n: u64) -> bool {
    if n == 0 {
        return false;
    }
    if r % 2 == 0 {
        r >= 2
    } else {
        n % 2 == 1 || r >= 3
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Invariance of F_r under all six permutations of the variables.
pub fn verify_symmetry(r_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    for r in 1..=r_max {
        let base = df_poly(r).expect("r >= 1");
        for perm in PERMUTATIONS {
            let permuted = base.permute(perm);
            report.push(CheckResult::assertion(
                format!("df-symmetry/F_{r}/perm{perm:?}"),
                &[("r", r.to_string())],
                format!("{} terms", permuted.term_count()),
                permuted == base,
            ));
        }
    }
    report
}

/// Carlitz's double sum equals the recurrence-built polynomial at random
/// rational points; z ranges over values keeping the Pochhammer check alive.
pub fn verify_carlitz_equivalence(r_max: u32, points: u32, seed: u64) -> VerificationReport {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let z_choices = [rat(1, 2), rat_int(1), rat(3, 2), rat_int(2)];
    let mut report = VerificationReport::new();
    for idx in 0..points {
        let r = rng.gen_range(1..=r_max);
        let mut random_rat = || rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        let x = random_rat();
        let y = random_rat();
        let z = z_choices[rng.gen_range(0..z_choices.len())].clone();
        let direct = df_eval(r, &x, &y, &z).expect("r >= 1");
        let explicit = df_carlitz(r, &x, &y, &z).expect("z > 0 keeps the Pochhammer nonzero");
        report.push(CheckResult::compare(
            format!("df-carlitz/point{idx:02}"),
            &[
                ("r", r.to_string()),
                ("x", format_rational(&x)),
                ("y", format_rational(&y)),
                ("z", format_rational(&z)),
            ],
            format_rational(&direct),
            format_rational(&explicit),
            direct == explicit,
        ));
    }
    report
}

/// F_{r+1}(1/2, 1/2, 1/2) = 2^{-2r} (2r+1) S_r against independently
/// computed secant numbers.
pub fn verify_special_value(r_max: u32) -> VerificationReport {
    let secant = crate::family::secant_numbers(r_max + 1);
    let half = rat(1, 2);
    let mut report = VerificationReport::new();
    for r in 0..=r_max {
        let actual = df_eval(r + 1, &half, &half, &half).expect("r + 1 >= 1");
        let expected = pow2(-2 * (r as i64))
            * rat_int(2 * r as i64 + 1)
            * BigRational::from_integer(secant[r as usize].clone());
        report.push(CheckResult::compare(
            format!("df-special/F_{}(1/2,1/2,1/2)", r + 1),
            &[("r", r.to_string())],
            format_rational(&expected),
            format_rational(&actual),
            expected == actual,
        ));
    }
    report
}

/// The four substitution bridges reproduce the recurrence-built families.
pub fn verify_family_bridges(r_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new();
    for which in FamilyId::ALL {
        for r in 1..=r_max {
            let via_df = family_from_df(which, r).expect("r >= 1");
            let direct = family_poly(which, r);
            report.push(CheckResult::compare(
                format!("df-bridge/{which}_{r}"),
                &[("family", which.to_string()), ("r", r.to_string())],
                direct.to_factored_string("n"),
                via_df.to_factored_string("n"),
                via_df == direct,
            ));
        }
    }
    report
}

/// The sum bridges agree with direct evaluation across their validity domain.
pub fn verify_sum_bridges(order_max: u32, arg_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new();
    for r in 0..=order_max {
        for n in 1..=arg_max {
            if !df_route_applies(r, n) {
                continue;
            }
            let via_df = u_from_df(r, n).expect("domain prechecked");
            let direct = crate::direct::u_direct(r, n as i64);
            report.push(CheckResult::compare(
                format!("df-sum/r={r:02}/n={n:02}"),
                &[("r", r.to_string()), ("n", n.to_string())],
                format_rational(&direct),
                format_rational(&via_df),
                via_df == direct,
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct::u_direct;

    #[test]
    fn first_members() {
        assert_eq!(df_poly(1).unwrap(), TriPolynomial::one());
        let f2 = df_poly(2).unwrap();
        assert_eq!(f2.to_string(), "x*y + x*z + y*z");
        assert!(matches!(df_poly(0), Err(Error::DumontFoataUndefined(0))));
    }

    #[test]
    fn f3_value_at_ones() {
        // recurrence expansion cross-checked by the explicit double sum
        let recurrence = df_eval(3, &rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        let explicit = df_carlitz(3, &rat_int(1), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(recurrence, explicit);
        assert_eq!(recurrence, rat_int(17));
    }

    #[test]
    fn eval_known_points() {
        assert_eq!(
            df_eval(2, &rat_int(1), &rat_int(1), &rat_int(1)).unwrap(),
            rat_int(3)
        );
        assert_eq!(
            df_eval(1, &rat(7, 3), &rat(-2, 5), &rat_int(9)).unwrap(),
            rat_int(1)
        );
        // 2^{-8} * 9 * 1385
        assert_eq!(
            df_eval(5, &rat(1, 2), &rat(1, 2), &rat(1, 2)).unwrap(),
            rat(9 * 1385, 256)
        );
    }

    #[test]
    fn carlitz_known_points() {
        assert_eq!(
            df_carlitz(2, &rat_int(1), &rat_int(1), &rat_int(1)).unwrap(),
            rat_int(3)
        );
        assert_eq!(
            df_carlitz(3, &rat(1, 2), &rat(1, 2), &rat(1, 2)).unwrap(),
            rat(25, 16)
        );
        let err = df_carlitz(2, &rat_int(1), &rat_int(1), &rat(-1, 2));
        assert!(
            matches!(err, Err(Error::VanishingPochhammer { .. })),
            "{err:?}"
        );
    }

    #[test]
    fn symmetry_holds() {
        let report = verify_symmetry(7);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn coefficients_nonnegative() {
        for r in 1..=7u32 {
            for (expo, c) in df_poly(r).unwrap().terms() {
                assert!(!c.is_negative(), "F_{r} term {expo:?} has coefficient {c}");
            }
        }
    }

    #[test]
    fn carlitz_equivalence_random_points() {
        let report = verify_carlitz_equivalence(7, 50, 0x5eed);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn family_bridge_cases() {
        assert_eq!(
            family_from_df(FamilyId::P, 2)
                .unwrap()
                .to_factored_string("n"),
            "n(2n - 1)"
        );
        assert_eq!(
            family_from_df(FamilyId::Pbar, 1)
                .unwrap()
                .to_plain_string("n"),
            "4n - 3"
        );
        assert_eq!(
            family_from_df(FamilyId::Q, 1).unwrap().to_plain_string("n"),
            "n"
        );
        let report = verify_family_bridges(8);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn sum_bridge_cases() {
        assert_eq!(u_from_df(2, 3).unwrap(), rat_int(6));
        assert_eq!(u_from_df(1, 1).unwrap(), rat_int(1));
        assert_eq!(u_from_df(3, 4).unwrap(), rat_int(24));
        assert!(u_from_df(0, 5).is_err());
        assert!(u_from_df(1, 2).is_err());
        assert!(u_from_df(4, 0).is_err());
    }

    #[test]
    fn sum_bridges_across_domain() {
        let report = verify_sum_bridges(15, 30);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn special_value_identity() {
        let report = verify_special_value(8);
        assert!(report.passed(), "{:?}", report.failures());
    }

    #[test]
    fn df_eval_agrees_with_direct_sums_spot() {
        // three parity cases at one point each
        assert_eq!(u_from_df(6, 9).unwrap(), u_direct(6, 9));
        assert_eq!(u_from_df(5, 8).unwrap(), u_direct(5, 8));
        assert_eq!(u_from_df(7, 7).unwrap(), u_direct(7, 7));
    }
}

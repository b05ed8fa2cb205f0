//! The nine explicit summation formulas for the sums, each implemented as a
//! literal transcription of its display (same index ranges, same grouping),
//! plus the cross-validation matrix that runs every route against the
//! defining sum.
//!
//! Validity ranges are enforced, not silently extended: outside its stated
//! range a formula returns a domain error naming the range, even where an
//! extension would happen to work.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::direct::{u_direct, u_direct_halfrange, Method, SumValue};
use crate::dumont_foata::{df_route_applies, u_from_df};
use crate::error::{Error, Result};
use crate::family::u_from_family;
use crate::numeric::{
    choose, factorial, format_rational, pochhammer, pochhammer_int, pow2, rat, rat_int, rat_pow,
};
use crate::recurrence::{RecurrenceTable, SumKind};
use crate::report::{CheckResult, VerificationReport};

/// The nine displays, named by the case they evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaId {
    /// U_{2r}(n), double sum with j^{2r} weights.
    EvenA2,
    /// U_{2r}(n), alternative double sum with (j - 1/2)^{2r-1} weights.
    EvenB2,
    /// U_{2r+1}(2n).
    OddEven2,
    /// U_{2r-1}(2n-1).
    OddOdd2,
    /// U_{2r}(n) by interpolation at the integer nodes 0..r.
    LagrangeEven,
    /// U_{2r+1}(2n) by interpolation.
    LagrangeOddEven,
    /// U_{2r-1}(2n-1) by interpolation.
    LagrangeOddOdd,
    /// S_{2r}(n).
    GZEven,
    /// S_{2r-1}(n).
    GZOdd,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::EvenA2,
        FormulaId::EvenB2,
        FormulaId::OddEven2,
        FormulaId::OddOdd2,
        FormulaId::LagrangeEven,
        FormulaId::LagrangeOddEven,
        FormulaId::LagrangeOddOdd,
        FormulaId::GZEven,
        FormulaId::GZOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::EvenA2 => "even-a",
            FormulaId::EvenB2 => "even-b",
            FormulaId::OddEven2 => "odd-even",
            FormulaId::OddOdd2 => "odd-odd",
            FormulaId::LagrangeEven => "lagrange-even",
            FormulaId::LagrangeOddEven => "lagrange-odd-even",
            FormulaId::LagrangeOddOdd => "lagrange-odd-odd",
            FormulaId::GZEven => "gz-even",
            FormulaId::GZOdd => "gz-odd",
        }
    }

    /// The sum the formula evaluates, in terms of its own parameters.
    pub fn target_description(self) -> &'static str {
        match self {
            FormulaId::EvenA2 | FormulaId::EvenB2 | FormulaId::LagrangeEven => "U_{2r}(n)",
            FormulaId::OddEven2 | FormulaId::LagrangeOddEven => "U_{2r+1}(2n)",
            FormulaId::OddOdd2 | FormulaId::LagrangeOddOdd => "U_{2r-1}(2n-1)",
            FormulaId::GZEven => "S_{2r}(n)",
            FormulaId::GZOdd => "S_{2r-1}(n)",
        }
    }

    /// Stated validity range of the display.
    pub fn validity(self) -> &'static str {
        match self {
            FormulaId::EvenA2 | FormulaId::EvenB2 => "r >= 1 and n >= 1",
            FormulaId::OddEven2 => "r >= 1 and n >= 1",
            FormulaId::OddOdd2 => "r >= 1 and n >= 1",
            FormulaId::LagrangeEven => "r >= 1 and n >= 1",
            FormulaId::LagrangeOddEven => "r >= 1 and n >= 0",
            FormulaId::LagrangeOddOdd => "r >= 1 and n >= 1",
            FormulaId::GZEven | FormulaId::GZOdd => "r >= 1 and n >= 0",
        }
    }

    fn min_n(self) -> i64 {
        match self {
            FormulaId::LagrangeOddEven | FormulaId::GZEven | FormulaId::GZOdd => 0,
            _ => 1,
        }
    }

    /// Map a target (order, argument) of U onto this formula's own (r, n)
    /// parameters, if the target lies in the formula's validity domain.
    /// For the S-family formulas the argument must be even (S_r(m) with
    /// m = argument/2).
    pub fn target_params(self, order: u32, argument: u64) -> Option<(i64, i64)> {
        let (r, n) = match self {
            FormulaId::EvenA2 | FormulaId::EvenB2 | FormulaId::LagrangeEven => {
                if order % 2 != 0 {
                    return None;
                }
                ((order / 2) as i64, argument as i64)
            }
            FormulaId::OddEven2 | FormulaId::LagrangeOddEven => {
                if order % 2 != 1 || argument % 2 != 0 {
                    return None;
                }
                (((order - 1) / 2) as i64, (argument / 2) as i64)
            }
            FormulaId::OddOdd2 | FormulaId::LagrangeOddOdd => {
                if order % 2 != 1 || argument % 2 != 1 {
                    return None;
                }
                (((order + 1) / 2) as i64, ((argument + 1) / 2) as i64)
            }
            FormulaId::GZEven => {
                if order % 2 != 0 || argument % 2 != 0 {
                    return None;
                }
                ((order / 2) as i64, (argument / 2) as i64)
            }
            FormulaId::GZOdd => {
                if order % 2 != 1 || argument % 2 != 0 {
                    return None;
                }
                (((order + 1) / 2) as i64, (argument / 2) as i64)
            }
        };
        (r >= 1 && n >= self.min_n()).then_some((r, n))
    }
}

impl std::fmt::Display for FormulaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The prefactor and the individual (j, k) summands of one formula instance,
/// each summand already multiplied by the prefactor.
#[derive(Debug, Clone)]
pub struct TermTable {
    pub terms: BTreeMap<(u64, u64), BigRational>,
}

impl TermTable {
    pub fn total(&self) -> BigRational {
        self.terms.values().sum()
    }
}

fn check_validity(formula: FormulaId, r: i64, n: i64) -> Result<(u64, u64)> {
    if r >= 1 && n >= formula.min_n() {
        Ok((r as u64, n as u64))
    } else {
        Err(Error::OutsideValidity {
            formula: format!(
                "{} formula for {}",
                formula.name(),
                formula.target_description()
            ),
            required: formula.validity().to_string(),
            r,
            n,
        })
    }
}

fn sign(exponent: u64) -> BigRational {
    rat_int(if exponent % 2 == 0 { 1 } else { -1 })
}

fn big_pow(base: i64, exp: u64) -> BigRational {
    rat_pow(&rat_int(base), exp as i64)
}

/// Evaluate one formula at its own parameters (r, n), returning the full
/// table of prefactor-scaled summands keyed by (j, k).
pub fn term_table(formula: FormulaId, r: i64, n: i64) -> Result<TermTable> {
    let (r, n) = check_validity(formula, r, n)?;
    let ri = r as i64;
    let ni = n as i64;
    let fact = |v: u64| BigRational::from_integer(factorial(v));
    let mut terms = BTreeMap::new();
    match formula {
        FormulaId::EvenA2 => {
            // 2^{n+1} sum (-1)^j (-n/2)_k (1/2)_k / ((k-j)!(k+j)!) j^{2r}
            let prefactor = pow2(ni + 1);
            for k in 1..=r {
                let base = pochhammer(&rat(-ni, 2), k) * pochhammer(&rat(1, 2), k);
                for j in 1..=k {
                    let term =
                        sign(j) * &base / (fact(k - j) * fact(k + j)) * big_pow(j as i64, 2 * r);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::EvenB2 => {
            // 2^n n sum (-1)^{j-1} ((1-n)/2)_{k-1} (1/2)_k / ((k+j-1)!(k-j)!) (j-1/2)^{2r-1}
            let prefactor = pow2(ni) * rat_int(ni);
            for k in 1..=r {
                let base = pochhammer(&rat(1 - ni, 2), k - 1) * pochhammer(&rat(1, 2), k);
                for j in 1..=k {
                    let term = sign(j - 1) * &base / (fact(k + j - 1) * fact(k - j))
                        * rat_pow(&rat(2 * j as i64 - 1, 2), 2 * ri - 1);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::OddEven2 => {
            // 2n C(2n,n) sum (-1)^j (-n)_k / ((k-j)! (k+1)_j) j^{2r}
            let prefactor = rat_int(2 * ni) * BigRational::from_integer(choose(2 * n, n));
            for k in 1..=r {
                let base = pochhammer(&rat_int(-ni), k);
                for j in 1..=k {
                    let term = sign(j) * &base
                        / (fact(k - j) * pochhammer(&rat_int(k as i64 + 1), j))
                        * big_pow(j as i64, 2 * r);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::OddOdd2 => {
            // C(2n,n) sum (-1)^j (-n)_k / ((k-j)! (k)_j) (j-1/2)^{2r-1}
            let prefactor = BigRational::from_integer(choose(2 * n, n));
            for k in 1..=r {
                let base = pochhammer(&rat_int(-ni), k);
                for j in 1..=k {
                    let term = sign(j) * &base / (fact(k - j) * pochhammer(&rat_int(k as i64), j))
                        * rat_pow(&rat(2 * j as i64 - 1, 2), 2 * ri - 1);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::LagrangeEven => {
            // (-1)^r 2^{n+1} sum (-n/2)_k (1/2)_k (n/2-r)_{r-k} / ((k+j)!(k-j)!(r-k)!) j^{2r}
            let prefactor = sign(r) * pow2(ni + 1);
            for k in 1..=r {
                let base = pochhammer(&rat(-ni, 2), k)
                    * pochhammer(&rat(1, 2), k)
                    * pochhammer(&rat(ni - 2 * ri, 2), r - k);
                for j in 1..=k {
                    let term = &base / (fact(k + j) * fact(k - j) * fact(r - k))
                        * big_pow(j as i64, 2 * r);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::LagrangeOddEven => {
            // 2n C(2n,n) (-1)^r sum (-n)_k (n-r)_{r-k} / ((r-k)!(k-j)!(k)_{j+1}) j^{2r+1}
            let prefactor = rat_int(2 * ni) * BigRational::from_integer(choose(2 * n, n)) * sign(r);
            for k in 1..=r {
                let base = pochhammer(&rat_int(-ni), k) * pochhammer(&rat_int(ni - ri), r - k);
                for j in 1..=k {
                    let term = &base
                        / (fact(r - k) * fact(k - j) * pochhammer(&rat_int(k as i64), j + 1))
                        * big_pow(j as i64, 2 * r + 1);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::LagrangeOddOdd => {
            // (-1)^r C(2n,n) sum_{0<=j<=k<=r} (1-n)_k (n-1-r)_{r-k}
            //   / ((r-k)!(k-j)!(k+2)_j) (j+1/2)^{2r-1}
            let prefactor = sign(r) * BigRational::from_integer(choose(2 * n, n));
            for k in 0..=r {
                let base =
                    pochhammer(&rat_int(1 - ni), k) * pochhammer(&rat_int(ni - 1 - ri), r - k);
                for j in 0..=k {
                    let term = &base
                        / (fact(r - k) * fact(k - j) * pochhammer(&rat_int(k as i64 + 2), j))
                        * rat_pow(&rat(2 * j as i64 + 1, 2), 2 * ri - 1);
                    terms.insert((j, k), &prefactor * term);
                }
            }
        }
        FormulaId::GZEven => {
            // sum_{0<=j<=k<r} 2^{2n-2k-1} (-1)^{k-j} C(2n,j) (2n-2k)_{k-j}/(k-j)! (n-j)^{2r-1}
            for k in 0..r {
                for j in 0..=k {
                    let term = pow2(2 * ni - 2 * k as i64 - 1)
                        * sign(k - j)
                        * BigRational::from_integer(choose(2 * n, j))
                        * BigRational::from_integer(pochhammer_int(
                            &BigInt::from(2 * ni - 2 * k as i64),
                            k - j,
                        ))
                        / fact(k - j)
                        * big_pow(ni - j as i64, 2 * r - 1);
                    terms.insert((j, k), term);
                }
            }
        }
        FormulaId::GZOdd => {
            // sum_{0<=j<=k<=min(r-1,n)} (-1)^{k-j} C(2n-2k,n-k) C(2n,j)
            //   (2n-2k)_{k-j}/(k-j)! (n-j)^{2r-1}
            let cap = (r - 1).min(n);
            for k in 0..=cap {
                for j in 0..=k {
                    let term = sign(k - j)
                        * BigRational::from_integer(choose(2 * (n - k), n - k))
                        * BigRational::from_integer(choose(2 * n, j))
                        * BigRational::from_integer(pochhammer_int(
                            &BigInt::from(2 * (ni - k as i64)),
                            k - j,
                        ))
                        / fact(k - j)
                        * big_pow(ni - j as i64, 2 * r - 1);
                    terms.insert((j, k), term);
                }
            }
        }
    }
    Ok(TermTable { terms })
}

/// Exact value of one formula at its own parameters (r, n).
pub fn u_closed(formula: FormulaId, r: i64, n: i64) -> Result<BigRational> {
    Ok(term_table(formula, r, n)?.total())
}

impl FormulaId {
    /// Which report tag the formula belongs under.
    pub fn method(self) -> Method {
        match self {
            FormulaId::EvenA2 | FormulaId::EvenB2 | FormulaId::OddEven2 | FormulaId::OddOdd2 => {
                Method::Carlitz
            }
            FormulaId::LagrangeEven | FormulaId::LagrangeOddEven | FormulaId::LagrangeOddOdd => {
                Method::Lagrange
            }
            FormulaId::GZEven | FormulaId::GZOdd => Method::GuoZeng,
        }
    }
}

/// All evaluation routes applicable to the target U_r(n), as labelled tagged
/// values. The defining sum itself is excluded: it is the reference the
/// routes are compared against.
pub fn applicable_routes(r: u32, n: u64) -> Vec<(String, SumValue)> {
    let table = RecurrenceTable::with_cap(SumKind::U, None);
    applicable_routes_with(&table, r, n)
}

/// As [`applicable_routes`] but sharing a caller-provided recurrence table.
pub fn applicable_routes_with(table: &RecurrenceTable, r: u32, n: u64) -> Vec<(String, SumValue)> {
    let tag = |value: BigRational, method: Method| SumValue::new(r, n as i64, value, method);
    let mut routes = Vec::new();
    if r >= 1 {
        routes.push((
            "half-range".to_string(),
            tag(
                u_direct_halfrange(r, n as i64).expect("r >= 1"),
                Method::Direct,
            ),
        ));
    }
    routes.push((
        "recurrence".to_string(),
        tag(table.eval(r, n), Method::Recurrence),
    ));
    routes.push((
        "family".to_string(),
        tag(u_from_family(r, n), Method::PolyFamily),
    ));
    if df_route_applies(r, n) {
        routes.push((
            "df".to_string(),
            tag(u_from_df(r, n).expect("domain prechecked"), Method::Carlitz),
        ));
    }
    for formula in FormulaId::ALL {
        if let Some((fr, fn_)) = formula.target_params(r, n) {
            let value = u_closed(formula, fr, fn_).expect("params prechecked");
            routes.push((
                format!("formula/{}", formula.name()),
                tag(value, formula.method()),
            ));
        }
    }
    routes
}

/// Run every applicable route on every (r, n) in the grid and compare each
/// against the defining sum. Cells fan out to worker threads; the report is
/// assembled in (r, n, route) order regardless of scheduling.
pub fn cross_validate(r_max: u32, n_max: u64) -> VerificationReport {
    let table = RecurrenceTable::with_cap(SumKind::U, None);
    let cells: Vec<(u32, u64)> = (0..=r_max)
        .flat_map(|r| (0..=n_max).map(move |n| (r, n)))
        .collect();
    let mut checks: Vec<CheckResult> = cells
        .par_iter()
        .flat_map_iter(|&(r, n)| {
            let reference = u_direct(r, n as i64);
            let expected = format_rational(&reference);
            applicable_routes_with(&table, r, n)
                .into_iter()
                .map(move |(route, tagged)| {
                    CheckResult::compare(
                        format!("cross/r={r:02}/n={n:02}/{route}"),
                        &[
                            ("r", r.to_string()),
                            ("n", n.to_string()),
                            ("method", format!("{:?}", tagged.method)),
                        ],
                        expected.clone(),
                        format_rational(&tagged.value),
                        tagged.value == reference,
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let mut report = VerificationReport::new();
    report.checks = checks;
    report
}

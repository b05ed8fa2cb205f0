//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every comparison here is bit-exact on exact rationals unless the
//! criterion is explicitly statistical (Monte Carlo) or floating-point
//! (asymptotics), where the bounds are fixed in the source constants.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use centred_sums::asymptotic::{
    approximation_is_exact, asymptotic_error_scan, doubling_arguments, verify_error_decay,
    ERROR_RATIO_WINDOW, EXACT_CASE_TOLERANCE,
};
use centred_sums::closed_form::cross_validate;
use centred_sums::direct::{walk_moment_exact, walk_moment_mc};
use centred_sums::dumont_foata::{
    verify_carlitz_equivalence, verify_special_value, verify_symmetry,
};
use centred_sums::family::{
    classic_sequences, special_values, verify_polynomial_tables, verify_special_values, FamilyId,
    SequenceKind,
};
use centred_sums::numeric::{rat, rat_int};
use centred_sums::series::{
    verify_carlitz_egf, verify_egf_even, verify_egf_odd_even, verify_egf_odd_odd,
    verify_egf_s_even, verify_sinh_cosh_identity,
};
use centred_sums::{u_from_family, u_recurrence};

fn conclude(criterion: &str, passed: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{criterion} failed: {detail}");
}

#[test]
fn criterion_1_cross_method_matrix() {
    // every applicable evaluator agrees with the defining sum, bit-exact,
    // for all 0 <= r <= 10, 0 <= n <= 40, in under 60 seconds single-threaded
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    let start = Instant::now();
    let report = pool.install(|| cross_validate(10, 40));
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(60);
    conclude(
        "criterion 1 (cross-method matrix)",
        report.passed() && in_time,
        &format!(
            "{} route comparisons, {} failures, {elapsed:?} single-threaded",
            report.checks.len(),
            report.failures().len()
        ),
    );
}

#[test]
fn criterion_2_polynomial_tables() {
    let start = Instant::now();
    let report = verify_polynomial_tables();
    let elapsed = start.elapsed();
    conclude(
        "criterion 2 (24 reference polynomials)",
        report.passed() && report.checks.len() == 24 && elapsed < Duration::from_secs(1),
        &format!("{} polynomials in {elapsed:?}", report.checks.len()),
    );
}

#[test]
fn criterion_3_special_value_table() {
    // all special-value closed forms for r <= 8, secant numbers computed
    // independently by series inversion
    let report = verify_special_values(8);
    conclude(
        "criterion 3 (special-value closed forms)",
        report.passed(),
        &format!("{} identities checked", report.checks.len()),
    );
}

#[test]
fn criterion_4_dumont_foata_properties() {
    let symmetry = verify_symmetry(7);
    let carlitz = verify_carlitz_equivalence(7, 50, 0x5eed);
    let special = verify_special_value(8);
    let carlitz_points = carlitz.checks.len();
    conclude(
        "criterion 4 (trivariate polynomial properties)",
        symmetry.passed() && carlitz.passed() && special.passed() && carlitz_points == 50,
        &format!(
            "symmetry {} checks, explicit-formula equivalence at {carlitz_points} random points, \
             {} half-point identities",
            symmetry.checks.len(),
            special.checks.len()
        ),
    );
}

#[test]
fn criterion_5_generating_functions() {
    let order = 20;
    let start = Instant::now();
    let mut all = true;
    let mut checks = 0usize;
    for n in 0..=8u64 {
        for report in [
            verify_egf_even(n, order),
            verify_egf_s_even(n, order),
            verify_sinh_cosh_identity(n, order),
        ] {
            all &= report.passed();
            checks += report.checks.len();
        }
    }
    for n in 1..=8u64 {
        for report in [verify_egf_odd_even(n, order), verify_egf_odd_odd(n, order)] {
            all &= report.passed();
            checks += report.checks.len();
        }
    }
    for (x, y) in [
        (rat_int(1), rat_int(1)),
        (rat(1, 2), rat_int(1)),
        (rat(3, 2), rat(1, 2)),
        (rat(-5, 2), rat(2, 3)),
        (rat(7, 3), rat(-1, 4)),
    ] {
        let report = verify_carlitz_egf(&x, &y, order).expect("nonzero prefactor");
        all &= report.passed();
        checks += report.checks.len();
    }
    let elapsed = start.elapsed();
    conclude(
        "criterion 5 (generating functions to order 20)",
        all && elapsed < Duration::from_secs(30),
        &format!("{checks} coefficient comparisons in {elapsed:?}"),
    );
}

#[test]
fn criterion_6_sequence_identities() {
    let genocchi = classic_sequences(SequenceKind::Genocchi, 5);
    let genocchi_ok = genocchi == [-1, 1, -3, 17, -155].map(BigInt::from).to_vec();
    let tangent = classic_sequences(SequenceKind::ReducedTangent, 5);
    let tangent_ok = tangent == [1, 1, 4, 34, 496].map(BigInt::from).to_vec();
    let mut qbar_ok = true;
    for r in 0..=8u32 {
        let expected = (BigInt::from(3).pow(2 * r) + BigInt::from(3)) / BigInt::from(4);
        qbar_ok &= special_values(FamilyId::Qbar, r).at_one == expected;
    }
    conclude(
        "criterion 6 (classical sequence identities)",
        genocchi_ok && tangent_ok && qbar_ok,
        &format!(
            "genocchi {genocchi:?}, reduced tangent {tangent:?}, value-at-one closed form r <= 8"
        ),
    );
}

#[test]
fn criterion_7_asymptotic_error_decay() {
    let start = Instant::now();
    let report = verify_error_decay(6, 5);
    // the order-0 case must be exact to 1e-12 specifically
    let r0 = asymptotic_error_scan(0, &doubling_arguments(5));
    let r0_exact = r0.iter().all(|row| row.rel_error < 1e-12);
    let elapsed = start.elapsed();
    conclude(
        "criterion 7 (asymptotic error decay)",
        report.passed() && r0_exact,
        &format!(
            "ratio window [{}, {}] for orders with a first-order term, exact orders {:?} \
             at tolerance {EXACT_CASE_TOLERANCE:.0e}, {elapsed:?}",
            ERROR_RATIO_WINDOW.0,
            ERROR_RATIO_WINDOW.1,
            (0..=6u32)
                .filter(|&r| approximation_is_exact(r))
                .collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_8_monte_carlo_oracle() {
    let mut all = true;
    let mut details = Vec::new();
    for &(r, n) in &[(1u32, 2u64), (2, 4), (3, 7), (4, 10)] {
        let est = walk_moment_mc(r, n, 1_000_000, 20_140_714 + r as u64);
        let exact = walk_moment_exact(r, n);
        let sigmas = (est.estimate - exact).abs() / est.std_error.max(f64::EPSILON);
        details.push(format!("({r},{n}): {sigmas:.2} se"));
        all &= sigmas <= 5.0;
    }
    conclude(
        "criterion 8 (random-walk Monte Carlo oracle)",
        all,
        &details.join(", "),
    );
}

#[test]
fn criterion_9_scale_smoke_test() {
    let start = Instant::now();
    let by_recurrence = u_recurrence(6, 2000);
    let elapsed = start.elapsed();
    let by_family = u_from_family(6, 2000);
    let equal = by_recurrence == by_family;
    let in_time = elapsed < Duration::from_secs(5);
    conclude(
        "criterion 9 (scale smoke test)",
        equal && in_time,
        &format!(
            "order 6 at argument 2000 in {elapsed:?}, {} decimal digits, reconstruction equal: {equal}",
            by_recurrence.numer().to_string().len()
        ),
    );
    assert!(
        by_recurrence.denom().is_one(),
        "even argument gives an integer"
    );
}

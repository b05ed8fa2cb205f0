//! Run the full cross-method matrix: every route on every (r, n) cell,
//! compared bit-exactly against the defining sum.
//!
//! ```bash
//! cargo run -p centred-sums --example cross_validation
//! ```

use std::time::Instant;

use centred_sums::closed_form::cross_validate;

fn main() {
    let (r_max, n_max) = (10, 40);
    let start = Instant::now();
    let report = cross_validate(r_max, n_max);
    let elapsed = start.elapsed();

    let mut per_route = std::collections::BTreeMap::<&str, usize>::new();
    for check in &report.checks {
        let route = check.id.rsplit('/').next().unwrap_or("?");
        *per_route.entry(route).or_default() += 1;
    }

    println!(
        "grid: 0..={r_max} x 0..={n_max}, {} comparisons in {elapsed:?}",
        report.checks.len()
    );
    for (route, count) in per_route {
        println!("  {route:<22} {count:>5} cells");
    }
    println!("result: {}", report.summary());
    for failure in report.failures() {
        println!("  MISMATCH {failure:?}");
    }
    assert!(report.passed());
}

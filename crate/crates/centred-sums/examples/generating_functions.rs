//! Verify the exponential generating functions coefficient-by-coefficient
//! against the exact sums.
//!
//! ```bash
//! cargo run -p centred-sums --example generating_functions
//! ```

use centred_sums::numeric::{rat, rat_int};
use centred_sums::series::{
    series_elementary, verify_carlitz_egf, verify_egf_even, verify_egf_odd_even,
    verify_egf_odd_odd, verify_egf_s_even, verify_sinh_cosh_identity, ElementaryKind,
};

fn main() {
    let order = 16;

    println!("2^n cosh^n(z/2) against the even-order sums:");
    for n in [0u64, 1, 4, 7] {
        let report = verify_egf_even(n, order);
        println!("  n = {n}: {}", report.summary());
        assert!(report.passed());
    }

    println!("\n2^(2n) cosh^(2n)(z/2) against the doubled-argument sums:");
    for n in [1u64, 3] {
        let report = verify_egf_s_even(n, order);
        println!("  n = {n}: {}", report.summary());
        assert!(report.passed());
    }

    println!("\ncosh^n(z) as a finite sum in powers of sinh:");
    for n in [2u64, 5] {
        let report = verify_sinh_cosh_identity(n, order);
        println!(
            "  n = {n}: {} ({})",
            report.summary(),
            report.note.as_deref().unwrap_or("")
        );
        assert!(report.passed());
    }

    println!("\nodd-order sums at even argument (even egf in sinh^2):");
    for n in [1u64, 2, 6] {
        let report = verify_egf_odd_even(n, order);
        println!("  n = {n}: {}", report.summary());
        assert!(report.passed());
    }

    println!("\nodd-order sums at odd argument (odd egf in half-integer frequencies):");
    for n in [1u64, 2, 4] {
        let report = verify_egf_odd_odd(n, order);
        println!("  n = {n}: {}", report.summary());
        assert!(report.passed());
    }

    println!("\ntwo-parameter egf for F_r(x,y,1):");
    for (x, y) in [(rat_int(1), rat_int(1)), (rat(1, 2), rat(3, 2))] {
        let report = verify_carlitz_egf(&x, &y, order).unwrap();
        println!("  (x, y) = ({x}, {y}): {}", report.summary());
        assert!(report.passed());
    }

    // the secant numbers drop out of the series engine directly
    let sec = series_elementary(ElementaryKind::Sec, &rat_int(1), 8);
    println!("\nsec z = {sec}");
}

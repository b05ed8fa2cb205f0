//! How fast the large-argument approximation converges: the relative error
//! halves when the argument doubles, except at the orders where the
//! approximation happens to be exact.
//!
//! ```bash
//! cargo run -p centred-sums --example asymptotic_accuracy
//! ```

use centred_sums::asymptotic::{approximation_is_exact, asymptotic_error_scan, doubling_arguments};

fn main() {
    let args = doubling_arguments(5);
    println!("relative error of the approximation along n = 50, 100, ..., 1600\n");
    for r in 0..=6u32 {
        let scan = asymptotic_error_scan(r, &args);
        let errors: Vec<String> = scan
            .iter()
            .map(|row| format!("{:>9.3e}", row.rel_error))
            .collect();
        let note = if approximation_is_exact(r) {
            "  (exact: rounding only)"
        } else {
            ""
        };
        println!("r = {r}: {}{note}", errors.join(" "));
        if !approximation_is_exact(r) {
            let ratios: Vec<String> = scan
                .windows(2)
                .map(|p| format!("{:.4}", p[1].rel_error / p[0].rel_error))
                .collect();
            println!("       halving ratios: {}", ratios.join(", "));
        }
    }
}

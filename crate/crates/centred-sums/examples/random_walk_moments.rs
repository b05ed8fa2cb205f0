//! The probabilistic face of the sums: U_r(n)/2^n is the r-th absolute
//! moment of half the terminal displacement of an n-step fair random walk.
//! A seeded Monte Carlo run lands within a few standard errors of the exact
//! dyadic value.
//!
//! ```bash
//! cargo run -p centred-sums --example random_walk_moments
//! ```

use centred_sums::direct::{walk_moment_exact, walk_moment_mc};
use centred_sums::numeric::{format_rational, pow2};
use centred_sums::u_direct;

fn main() {
    let samples = 500_000;
    let seed = 42;
    println!("{samples} walks per row, seed {seed}\n");
    println!(
        "{:>3} {:>3} {:>14} {:>12} {:>11} {:>8}",
        "r", "n", "exact", "estimate", "std error", "sigmas"
    );
    for (r, n) in [(1u32, 2u64), (2, 4), (3, 7), (4, 10), (6, 16)] {
        let exact_rational = u_direct(r, n as i64) * pow2(-(n as i64));
        let exact = walk_moment_exact(r, n);
        let est = walk_moment_mc(r, n, samples, seed);
        let sigmas = (est.estimate - exact).abs() / est.std_error;
        println!(
            "{r:>3} {n:>3} {:>14} {:>12.6} {:>11.2e} {sigmas:>8.2}",
            format_rational(&exact_rational),
            est.estimate,
            est.std_error
        );
        assert!(sigmas < 5.0, "estimate strayed beyond 5 standard errors");
    }
}

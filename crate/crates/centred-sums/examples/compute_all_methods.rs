//! Evaluate one sum by every applicable route and confirm they agree.
//!
//! ```bash
//! cargo run -p centred-sums --example compute_all_methods
//! ```

use centred_sums::closed_form::applicable_routes;
use centred_sums::numeric::format_rational;
use centred_sums::u_direct;

fn main() {
    for (r, n) in [(3u32, 4i64), (2, 1), (5, 9), (8, 14)] {
        let reference = u_direct(r, n);
        println!("U_{r}({n}) = {}", format_rational(&reference));
        println!("  {:<26} {}", "direct", format_rational(&reference));
        let mut all_agree = true;
        for (route, tagged) in applicable_routes(r, n as u64) {
            let value = tagged.value;
            let agrees = value == reference;
            all_agree &= agrees;
            println!(
                "  {route:<26} {}{}",
                format_rational(&value),
                if agrees { "" } else { "  <-- MISMATCH" }
            );
        }
        println!(
            "  verdict: {}\n",
            if all_agree { "AGREE" } else { "DISAGREE" }
        );
    }
}

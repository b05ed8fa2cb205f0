//! Print the four polynomial families in factored form, the way their small
//! cases are usually tabulated, plus the special-value probes.
//!
//! ```bash
//! cargo run -p centred-sums --example polynomial_tables
//! ```

use centred_sums::family::{family_tower, special_values, FamilyId};

fn main() {
    for which in FamilyId::ALL {
        println!("{which} family:");
        for (r, poly) in family_tower(which, 5).iter().enumerate() {
            println!("  {which}_{r}(n) = {}", poly.to_factored_string("n"));
        }
        println!();
    }

    println!("special values (value at 0, value at 1, leading coefficient):");
    for which in FamilyId::ALL {
        for r in 0..=4u32 {
            let sv = special_values(which, r);
            println!(
                "  {which}_{r}: {}, {}, {}",
                sv.at_zero, sv.at_one, sv.leading
            );
        }
    }
}

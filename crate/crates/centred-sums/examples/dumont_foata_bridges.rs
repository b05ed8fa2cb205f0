//! The trivariate polynomials F_r(x,y,z): recurrence construction, the
//! explicit double-sum evaluation, and the bridges back to the univariate
//! families and the sums.
//!
//! ```bash
//! cargo run -p centred-sums --example dumont_foata_bridges
//! ```

use centred_sums::dumont_foata::{df_carlitz, df_eval, df_poly, family_from_df, u_from_df};
use centred_sums::family::{family_poly, FamilyId};
use centred_sums::numeric::{format_rational, rat, rat_int};
use centred_sums::u_direct;

fn main() {
    for r in 1..=4u32 {
        println!("F_{r}(x,y,z) = {}", df_poly(r).expect("r >= 1"));
    }
    println!();

    // the explicit double sum agrees with the recurrence-built polynomial
    let points = [
        (rat_int(1), rat_int(1), rat_int(1)),
        (rat(1, 2), rat_int(1), rat(3, 2)),
        (rat(-5, 3), rat(2, 7), rat_int(2)),
    ];
    for (x, y, z) in points {
        for r in [2u32, 4, 6] {
            let built = df_eval(r, &x, &y, &z).unwrap();
            let explicit = df_carlitz(r, &x, &y, &z).unwrap();
            assert_eq!(built, explicit);
            println!(
                "F_{r}({}, {}, {}) = {} (double sum agrees)",
                format_rational(&x),
                format_rational(&y),
                format_rational(&z),
                format_rational(&built)
            );
        }
    }
    println!();

    // the vanishing-Pochhammer precondition is checked, not assumed
    let err = df_carlitz(2, &rat_int(1), &rat_int(1), &rat(-1, 2)).unwrap_err();
    println!("rejected as expected: {err}\n");

    // substitution bridges reproduce the univariate families symbolically
    for which in FamilyId::ALL {
        let bridged = family_from_df(which, 3).unwrap();
        assert_eq!(bridged, family_poly(which, 3));
        println!(
            "{which}_3 via F_3 substitution = {}",
            bridged.to_factored_string("n")
        );
    }
    println!();

    // and the sum bridges agree with the defining sum
    for (r, n) in [(2u32, 3u64), (3, 4), (7, 9), (10, 12)] {
        let via_df = u_from_df(r, n).unwrap();
        assert_eq!(via_df, u_direct(r, n as i64));
        println!(
            "U_{r}({n}) via trivariate bridge = {}",
            format_rational(&via_df)
        );
    }
}

//! The classical integer sequences carried by the polynomial families:
//! secant numbers, Genocchi numbers, reduced tangent numbers, leading
//! coefficients, and the coefficient triangles.
//!
//! ```bash
//! cargo run -p centred-sums --example classical_sequences
//! ```

use centred_sums::family::{
    classic_sequences, leading_sequence, secant_numbers, triangle_rows, FamilyId, SequenceKind,
    TriangleKind,
};

fn join(values: &[num_bigint::BigInt]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() {
    println!("secant numbers:          {}", join(&secant_numbers(8)));
    println!(
        "genocchi:                {}",
        join(&classic_sequences(SequenceKind::Genocchi, 8))
    );
    println!(
        "reduced tangent:         {}",
        join(&classic_sequences(SequenceKind::ReducedTangent, 8))
    );
    println!(
        "Pbar at zero:            {}",
        join(&classic_sequences(SequenceKind::PbarAtZero, 8))
    );
    for which in FamilyId::ALL {
        println!(
            "{which} leading coefficients: {}",
            join(&leading_sequence(which, 8))
        );
    }

    println!("\ncoefficient triangle from the P family (descending powers):");
    for (r, row) in triangle_rows(TriangleKind::P, 6).iter().enumerate() {
        println!("  r = {}: {}", r + 1, join(row));
    }

    println!("\nb-file rendering of the first secant numbers:");
    for (i, v) in secant_numbers(5).iter().enumerate() {
        println!("{i} {v}");
    }
}

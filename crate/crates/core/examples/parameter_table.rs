//! Folded Hermitian codes and their quantum codes for q in {4, 5, 7, 8, 16}.
//! Rows with q <= 8 are rebuilt from generator matrices.

use fqhc::quantum::{table1, table1_from_matrices, TABLE1_ROWS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:<4} {:<3} {:<24} {:<24} matrices",
        "q", "m", "folded code", "quantum code"
    );
    for (q, m) in TABLE1_ROWS {
        let formula = table1(q, m)?;
        let checked = if q <= 8 {
            let (row, f) = table1_from_matrices(q, m)?;
            if row == formula && f.fold_dual_commutes {
                "agree"
            } else {
                "DISAGREE"
            }
        } else {
            "-"
        };
        println!(
            "{:<4} {:<3} {:<24} {:<24} {checked}",
            q,
            m,
            formula.classical.to_string(),
            formula.quantum.to_string()
        );
    }
    Ok(())
}

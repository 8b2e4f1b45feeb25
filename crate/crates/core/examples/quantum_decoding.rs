//! Quantum list decoding: syndromes of a planted Pauli error go through two
//! classical list decoders and come back as paired candidates.

use fqhc::code::DEFAULT_BUDGET;
use fqhc::decode::{pauli_channel_trial, pauli_syndromes, quantum_list_decode, ExhaustiveDecoder};
use fqhc::folding::HermitianAutomorphism;
use fqhc::hermitian::HermitianCurve;
use fqhc::quantum::fqhc_construct;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(2)?;
    let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
    let f = fqhc_construct(&curve, 4, 6, 2, Some(sigma), DEFAULT_BUDGET)?;
    let css = &f.css;
    let decoder = ExhaustiveDecoder {
        budget: DEFAULT_BUDGET,
    };

    // X error on the first block, Z error on the third.
    let x = [1, 2, 0, 0, 0, 0, 0, 0];
    let z = [0, 0, 0, 0, 3, 0, 0, 0];
    let (sx, sz) = pauli_syndromes(css, &x, &z)?;
    println!("sX = {sx:?}, sZ = {sz:?}");
    let list = quantum_list_decode(css, &sx, &sz, 1, &decoder)?;
    println!("{} candidates at radius 1", list.len());
    for p in list.iter().take(4) {
        println!("  X {:?}  Z {:?}  weight {}", p.x, p.z, p.weight(css.m()));
    }

    println!("seed weight listsize recovered");
    for seed in 0..5 {
        println!(
            "{}",
            pauli_channel_trial(css, 1, 1, seed, &decoder)?.record()
        );
    }
    Ok(())
}

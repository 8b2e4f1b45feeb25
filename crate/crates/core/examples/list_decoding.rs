//! Exhaustive list sizes of a folded code, and a sampled estimate.

use fqhc::code::DEFAULT_BUDGET;
use fqhc::decode::{
    list_decode_exhaustive, list_size_profile, verify_list_decodable, FoldedWord, Mode,
};
use fqhc::folding::{orbit_chains, FoldedCode, HermitianAutomorphism};
use fqhc::hermitian::HermitianCurve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(2)?;
    let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
    let chains = orbit_chains(&sigma, &curve, 2)?;
    let fc = FoldedCode::hermitian(&curve, 4, &chains)?;
    println!(
        "folded code {}, exact block distance {}",
        fc.triple(),
        fc.min_distance(DEFAULT_BUDGET)?
    );

    for (radius, l) in list_size_profile(&fc, DEFAULT_BUDGET)?.iter().enumerate() {
        println!("radius {radius}: at most {l} codewords");
    }

    let sent = fc.code().encode(&[1, 0, 2, 3])?;
    let mut received = sent.clone();
    received[0] = 3;
    received[1] = 1;
    let y = FoldedWord::new(2, received)?;
    let list = list_decode_exhaustive(&fc, &y, 1, DEFAULT_BUDGET)?;
    let found = list.iter().any(|w| w.symbols() == sent.as_slice());
    println!(
        "one corrupted block, radius 1: {} candidates, sent word among them: {found}",
        list.len()
    );

    let sampled = verify_list_decodable(
        &fc,
        1,
        Mode::Sampled {
            trials: 200,
            seed: 1,
        },
        DEFAULT_BUDGET,
    )?;
    println!(
        "sampled radius 1: L >= {} ({})",
        sampled.max_list,
        sampled.label()
    );
    Ok(())
}

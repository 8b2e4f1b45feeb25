//! Folding C(D, rP∞) along the orbits of σ_{δ,μ}: (x, y) ↦ (x + δ, y + δ^q x + μ).

use fqhc::folding::{fold_reed_solomon, orbit_chains, FoldedCode, HermitianAutomorphism};
use fqhc::hermitian::HermitianCurve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(4)?;
    for m in [2, 4] {
        let sigma = HermitianAutomorphism::default_for(&curve, m)?;
        let chains = orbit_chains(&sigma, &curve, m)?;
        let fc = FoldedCode::hermitian(&curve, 48, &chains)?;
        println!(
            "{sigma:?} of order {}, m = {m}: {} chains, folded C(D, 48P∞) = {}",
            sigma.order(&curve),
            chains.len(),
            fc.triple()
        );
        let first: Vec<String> = chains.chains()[0]
            .iter()
            .map(|&i| curve.points()[i].to_string())
            .collect();
        println!("  first chain: {}", first.join(" "));
        let dual = fc.folded_dual();
        println!(
            "  folded dual {} is blockwise orthogonal: {}",
            dual.triple(),
            fc.is_blockwise_dual_of(&dual)
        );
    }

    let rs = fold_reed_solomon(4, 10, 3)?;
    println!("folded Reed-Solomon [15, 10] with m = 3: {}", rs.triple());
    Ok(())
}

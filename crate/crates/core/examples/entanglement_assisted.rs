//! Entanglement-assisted parameters [[N, k, d : c]] for pairs of folded codes
//! that need not satisfy the CSS containment.

use fqhc::code::DEFAULT_BUDGET;
use fqhc::folding::{orbit_chains, FoldedCode, HermitianAutomorphism};
use fqhc::hermitian::HermitianCurve;
use fqhc::quantum::ea_params;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(2)?;
    let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
    let chains = orbit_chains(&sigma, &curve, 2)?;
    for (r1, r2) in [(2, 2), (3, 3), (4, 6), (5, 2), (6, 6)] {
        let a = FoldedCode::hermitian(&curve, r1, &chains)?;
        let b = FoldedCode::hermitian(&curve, r2, &chains)?;
        let ea = ea_params(&a, &b, DEFAULT_BUDGET)?;
        println!("C(D, {r1}P∞), C(D, {r2}P∞): {ea}  [{:?}]", ea.case);
    }
    Ok(())
}

//! The smallest folded quantum Hermitian code: q = 2, σ_{0,1}, m = 2,
//! C1 = C(D, 4P∞), C2 = C(D, 6P∞).

use fqhc::code::DEFAULT_BUDGET;
use fqhc::folding::HermitianAutomorphism;
use fqhc::hermitian::HermitianCurve;
use fqhc::quantum::fqhc_construct;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(2)?;
    let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
    let f = fqhc_construct(&curve, 4, 6, 2, Some(sigma), DEFAULT_BUDGET)?;

    println!("folded C1 {}, folded C2 {}", f.c1.triple(), f.c2.triple());
    println!(
        "C2^⊥ = C(D, {}P∞); fold and dual commute: {}",
        f.formula.alpha, f.fold_dual_commutes
    );
    println!("from designed distances: {}", f.formula.quantum());
    println!("from matrices:           {}", f.css.params());
    println!(
        "min set-difference weight: {:?} coordinates, {:?} blocks",
        f.css.symbol_distance().flatten(),
        f.css.block_distance().flatten()
    );
    Ok(())
}

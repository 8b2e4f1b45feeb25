//! Rational points, genus, gaps and Riemann-Roch bases of a Hermitian curve.

use fqhc::hermitian::{weierstrass_gaps, HermitianCurve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let curve = HermitianCurve::new(q)?;
    println!("y^{q} + y = x^{} over GF({})", q + 1, q * q);
    println!("{} affine points, genus {}", curve.len(), curve.genus());
    let shown: Vec<String> = curve
        .points()
        .iter()
        .take(8)
        .map(|p| p.to_string())
        .collect();
    println!("first points: {} ...", shown.join(" "));
    println!("gaps at infinity: {:?}", weierstrass_gaps(q));

    let r = 2 * curve.genus() + 1;
    let basis: Vec<String> = curve
        .monomial_basis(r)?
        .iter()
        .map(|m| m.to_string())
        .collect();
    println!(
        "L({r}P∞) has dimension {}: {}",
        basis.len(),
        basis.join(", ")
    );
    Ok(())
}

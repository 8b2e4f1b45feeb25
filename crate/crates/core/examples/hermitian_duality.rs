//! The dual of C(D, rP∞) is C(D, αP∞) with α = q³ + q² - q - 2 - r.

use fqhc::code::{herm_dual_degree, LinearCode, Weight, DEFAULT_BUDGET};
use fqhc::hermitian::HermitianCurve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = HermitianCurve::new(2)?;
    let c = LinearCode::hermitian(&curve, 4)?;
    let d = c.min_distance(DEFAULT_BUDGET, Weight::Symbol)?;
    println!(
        "{}: [{}, {}, {d}]",
        c.label().unwrap_or("code"),
        c.len(),
        c.dim()
    );

    for r in [3, 4, 5, 6] {
        let alpha = herm_dual_degree(2, r)?;
        let same =
            LinearCode::hermitian(&curve, r)?.dual() == LinearCode::hermitian(&curve, alpha)?;
        println!("dual of C(D, {r}P∞) = C(D, {alpha}P∞): {same}");
    }
    print!("{}", c.to_export_string());
    Ok(())
}

//! Rate and list-decoding radius of the CSS code of two list-decodable codes.

use fqhc::quantum::fqhc_rate_radius;
use fqhc::verify::best_grid_radius;
use fqhc::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let eps = Rational::new(1, 100);
    for (r1, r2) in [(43, 43), (50, 36), (60, 26)] {
        let rr = fqhc_rate_radius(Rational::new(r1, 64), Rational::new(r2, 64), eps)?;
        println!(
            "R1 = {r1}/64, R2 = {r2}/64: rate {}, radius {}, balanced radius {}",
            rr.rate, rr.radius, rr.balanced_radius
        );
    }
    let rate = Rational::new(11, 32);
    if let Some((r1, radius)) = best_grid_radius(rate, eps, 64) {
        println!("grid search at rate {rate}: best R1 = {r1}, radius {radius}");
    }
    Ok(())
}

//! GF(p^s) arithmetic, the subfield maps of GF(q²), and the field descriptor.

use fqhc::gf::{ArithOp, Field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::new(2, 4)?;
    println!(
        "{} (primitive element {})",
        f.descriptor(),
        f.primitive_element()
    );

    let a = f.element(7)?;
    let b = f.element(11)?;
    println!("{a} + {b} = {}", a + b);
    println!("{a} * {b} = {}", a * b);
    println!("{a} / {b} = {}", a.arith(b, ArithOp::Div)?);
    println!("{a}^-1 = {}", a.inverse()?);

    // GF(16) = GF(4²): Frobenius, trace and norm down to GF(4).
    let q = 4;
    println!("frobenius(7) = {}", f.frobenius_q(7, q)?);
    println!(
        "trace(7) = {}, norm(7) = {}",
        f.trace_q(7, q)?,
        f.norm_q(7, q)?
    );
    println!("μ with μ^4 + μ = 1^5: {:?}", f.solve_mu_constraint(1, q)?);

    let round_trip: Field = f.descriptor().parse()?;
    assert_eq!(round_trip.modulus(), f.modulus());
    Ok(())
}

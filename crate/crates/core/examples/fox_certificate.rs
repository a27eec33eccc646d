//! Fox derivatives of the relators of a bundle group and the evaluated
//! Jacobian that bounds its rank below by three.

use torus_bundles::fox::{fox_derivative, rank3_certificate, GroupWord, GENERATORS};

fn main() -> torus_bundles::Result<()> {
    let w = GroupWord::parse("x y x^-1 y^-1")?;
    for g in ['x', 'y'] {
        println!("d{w} / d{g} = {}", fox_derivative(&w, g)?);
    }

    let cert = rank3_certificate(5)?;
    for (i, r) in cert.relators.iter().enumerate() {
        println!("r{} = {r}  evaluates to {}", i + 1, cert.relator_values[i]);
        for (j, g) in GENERATORS.iter().enumerate() {
            println!(
                "   d/d{g}: {}  ->  {}",
                cert.derivatives[i][j], cert.jacobian_values[i][j]
            );
        }
    }
    println!("certificate holds: {}", cert.holds());
    Ok(())
}

//! Transitive permutation representations of the torus group: the model
//! family omega, classification of an arbitrary representation, and the
//! sublattice of the covering it determines.

use torus_bundles::permrep::{classify_rep, covering_lattice, omega_rep, Perm, TorusRep};

fn main() -> torus_bundles::Result<()> {
    let w = omega_rep(2, 8, 4, 1)?;
    println!("omega(2,8,4,1): a = {}, b = {}", w.sigma, w.tau);

    // the same representation with the points relabelled and the
    // generators swapped
    let relabel = Perm::parse("(1,16,2,15,3,14)(4,9)(5,12,7)", 16)?;
    let disguised = TorusRep::new(w.tau.conjugate_by(&relabel), w.sigma.conjugate_by(&relabel))?;
    let c = classify_rep(&disguised)?;
    println!(
        "classified: m={} n={} d={} rho={} i0={} swapped={}",
        c.m, c.n, c.d, c.rho, c.i0, c.swapped
    );
    println!("conjugator {}", c.conjugator);
    println!(
        "covering lattice {}",
        covering_lattice(c.m as i64, c.n as i64, c.rho as i64)?
    );
    Ok(())
}

//! Coverings of fibers: invariant sublattices, lifted monodromies and the
//! search for coverings that lower the Heegaard genus.

use torus_bundles::bundle::TorusBundle;
use torus_bundles::covers::{construct_lowering_cover, fiber_covers, find_genus_lowering};

fn main() -> torus_bundles::Result<()> {
    let m = TorusBundle::sakuma(2, 2);
    println!(
        "coverings of fibers of {} with at most 4 sheets:",
        m.monodromy()
    );
    for c in fiber_covers(&m, 4)? {
        println!("  {c}  genus {} -> {}", c.base.genus(), c.lifted.genus());
    }
    println!("genus lowering:");
    for c in find_genus_lowering(&m, 4)? {
        println!("  {c}");
    }

    for (a, k, mm) in [(2, 2, 1), (4, 3, 1), (4, 2, 2)] {
        let c = construct_lowering_cover(a, k, mm)?;
        println!(
            "a={a} k={k} m={mm}: {}  genus {} -> {}",
            c,
            c.base.genus(),
            c.lifted.genus()
        );
    }
    Ok(())
}

//! Splits a transitive representation of a torus bundle group into its
//! power part (blocks permuted by t) and its fiber part.

use torus_bundles::permrep::{factor_bundle_rep, BundleRep, Perm};

fn main() -> torus_bundles::Result<()> {
    // x and y translate inside two 3-point blocks, t swaps the blocks
    let sx = Perm::parse("(1,2,3)(4,5,6)", 6)?;
    let sy = Perm::parse("(1,3,2)(4,6,5)", 6)?;
    let st = Perm::parse("(1,4)(2,6)(3,5)", 6)?;
    let r = BundleRep::new(sx, sy, st)?;
    let f = factor_bundle_rep(&r)?;
    println!("power degree m = {}", f.m);
    let blocks: Vec<Vec<usize>> = f
        .blocks
        .iter()
        .map(|b| b.iter().map(|p| p + 1).collect())
        .collect();
    println!("blocks {blocks:?}");
    println!("t on blocks: {}", f.q_images[2]);
    println!(
        "fiber part on the first block: x = {}, y = {}, t^m = {}",
        f.gamma.sx, f.gamma.sy, f.gamma.st
    );
    println!(
        "equal blocks {}, q kills fiber {}, fiber transitive {}, equivariant {}",
        f.blocks_equal_size(),
        f.q_kills_fiber(),
        f.gamma_fiber_transitive(),
        f.is_equivariant(&r)
    );
    Ok(())
}

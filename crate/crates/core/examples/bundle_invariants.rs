//! Homology, Sakuma parameters and Heegaard genus of a few torus bundles.

use torus_bundles::bundle::TorusBundle;

fn main() -> torus_bundles::Result<()> {
    let bundles = [
        ("M(1,6)", TorusBundle::sakuma(1, 6)),
        ("M(2,3)", TorusBundle::sakuma(2, 3)),
        ("M(2,2)", TorusBundle::sakuma(2, 2)),
        ("M(0,3)", TorusBundle::sakuma(0, 3)),
        ("[[2,1],[1,1]]", TorusBundle::from_i64(2, 1, 1, 1)?),
        ("[[1,3],[3,10]]", TorusBundle::from_i64(1, 3, 3, 10)?),
    ];
    for (name, m) in &bundles {
        println!(
            "{name:>15}  H1 = {:<16} n1 = {:<3} genus {}  pairs {}",
            m.homology().to_string(),
            m.first_divisor(),
            m.genus(),
            m.sakuma_pairs()
        );
    }

    let (m16, m23) = (&bundles[0].1, &bundles[1].1);
    println!("M(1,6) ~ M(2,3): {}", m16.homeomorphic(m23));
    println!(
        "M(1,2) ~ M(2,2): {}",
        TorusBundle::sakuma(1, 2).homeomorphic(&bundles[2].1)
    );
    Ok(())
}

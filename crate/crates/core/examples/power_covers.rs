//! Power coverings: powers of Sakuma matrices through the f sequence and
//! the genus certificate for the covering bundles.

use num_bigint::BigInt;
use torus_bundles::bundle::TorusBundle;
use torus_bundles::covers::{
    certify_power_genus, f_table, power_cover, sakuma_power_from_f, FClosedForm,
};

fn main() -> torus_bundles::Result<()> {
    let f = f_table(&BigInt::from(6), 10)?;
    println!("f(-1..10) for ab = 6: {}", join(&f));
    let cf = FClosedForm::new(6)?;
    let approx: Vec<String> = (0..=10).map(|n| format!("{:.3}", cf.value(n))).collect();
    println!("closed form:           {}", approx.join(" "));

    let base = TorusBundle::sakuma(2, 3);
    for n in 1..=4 {
        let cover = power_cover(&base, n)?;
        println!(
            "A^{n} = {}  (from f: {})",
            cover.total.monodromy(),
            sakuma_power_from_f(2, 3, n)?
        );
    }

    for (a, b) in [(0, 3), (2, 2), (0, 0)] {
        let base = TorusBundle::sakuma(a, b);
        for n in 2..=3 {
            let cert = certify_power_genus(&base, n)?;
            println!(
                "M({a},{b})^{n}: {:?}, rank {}, fox {}, holds {}",
                cert.case,
                cert.homology_rank,
                cert.fox.is_some(),
                cert.holds
            );
        }
    }
    Ok(())
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

//! Cyclic coverings of Seifert fibered spaces and genus-lowering coverings
//! for a single exceptional fiber.

use torus_bundles::seifert::{cyclic_cover, find_lowering, seifert_genus, SeifertSymbol};

fn main() -> torus_bundles::Result<()> {
    let two: SeifertSymbol = "Oo,0;1/2,2/5".parse()?;
    let c = cyclic_cover(&two, 3, None)?;
    println!(
        "{two} covered 3 times: {} with residues {:?}",
        c.total, c.residues
    );

    for s in ["Oo,1;5/3", "Oo,2;-3/4", "Oo,0;7/2", "Oo,3;1/5"] {
        let sym: SeifertSymbol = s.parse()?;
        match find_lowering(&sym)? {
            Some(l) => println!(
                "{sym} (genus {}) <- {} sheets <- {} (genus {})",
                l.genus_before, l.cover.sheets, l.cover.total, l.genus_after
            ),
            None => println!(
                "{sym} (genus {}) has no lowering cover",
                seifert_genus(&sym)?
            ),
        }
    }
    Ok(())
}

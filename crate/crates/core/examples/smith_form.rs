//! Smith normal form of an integer matrix and the cokernel it describes.

use torus_bundles::intlat::{snf, AbelianGroupDecomp, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let d = snf(&m);
    println!("diagonal {:?}", d.diagonal);
    println!("cokernel {}", AbelianGroupDecomp::cokernel(&m));

    // A - I for A = [[-1, -2], [2, 3]]; H1 of the bundle adds a free summand
    let a_minus_i = IntMatrix::from_rows(&[vec![-2, -2], vec![2, 2]]);
    println!(
        "H1 = {}",
        AbelianGroupDecomp::cokernel(&a_minus_i).plus_free(1)
    );
}

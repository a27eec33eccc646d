//! Conjugacy in GL(2, Z): normal forms, explicit conjugators and the
//! continued fraction period of a hyperbolic matrix.

use torus_bundles::intlat::{attracting_fixed_point_cf, conjugate_gl2z, normal_form, Mat2};

fn main() -> torus_bundles::Result<()> {
    for a in [
        Mat2::from_i64(-1, 0, 0, -1),
        Mat2::from_i64(1, 5, 0, 1),
        Mat2::from_i64(0, -1, 1, 1),
        Mat2::from_i64(1, 0, 3, -1),
        Mat2::from_i64(7, 12, 4, 7),
    ] {
        let nf = normal_form(&a)?;
        println!("{a}  ->  {:?}  via {}", nf.class, nf.conjugator);
    }

    let a = Mat2::from_i64(-1, -1, 6, 5);
    let b = Mat2::from_i64(-1, -2, 3, 5);
    let (pre, period) = attracting_fixed_point_cf(&a);
    println!("fixed point of {a}: preperiod {pre:?}, period {period:?}");
    match conjugate_gl2z(&a, &b)? {
        Some(g) => println!("g = {g} and g A g^-1 = {}", a.conjugated_by(&g)?),
        None => println!("{a} and {b} are not conjugate"),
    }
    let c = Mat2::from_i64(-1, -2, 2, 3);
    println!("{a} ~ {c}: {}", conjugate_gl2z(&a, &c)?.is_some());
    Ok(())
}

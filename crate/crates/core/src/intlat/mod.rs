//! Exact integer linear algebra: 2x2 unimodular matrices, Smith normal form,
//! sublattices of `Z^2` and `GL(2, Z)` conjugacy.

mod conjugacy;
mod lattice;
mod mat2;
mod snf;

pub use conjugacy::{
    are_conjugate, attracting_fixed_point_cf, conjugate_bounded_oracle, conjugate_gl2z,
    normal_form, ConjugacyClass, NormalForm,
};
pub use lattice::{sublattices, Lattice};
pub use mat2::{mat_pow, Mat2};
pub use snf::{snf, AbelianGroupDecomp, IntMatrix, SmithDecomposition};

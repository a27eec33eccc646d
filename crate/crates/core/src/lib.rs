//! Exact computations with torus bundles over the circle: homology, Heegaard
//! genus, `GL(2, Z)` conjugacy, power coverings and coverings of fibers,
//! permutation representations of the torus and bundle groups, Fox calculus
//! certificates, and cyclic coverings of Seifert manifolds.

pub mod bundle;
pub mod cli;
pub mod covers;
pub mod error;
pub mod fox;
pub mod intlat;
pub mod permrep;
pub mod seifert;

pub use error::{Error, Result};

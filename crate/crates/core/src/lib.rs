//! Commutative BCK-algebras: finite tables, cBCK-unions, products and the
//! symbolic algebras of rooted trees, together with their ideal lattices,
//! prime spectra and the finite Birkhoff duality.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod dot;
pub mod duality;
pub mod error;
pub mod format;
pub mod ideals;
pub mod spectra;
pub mod tree;
pub mod verify;

pub use algebra::{check_axioms, BckHomomorphism, Elem, FiniteCbckAlgebra};
pub use constructions::{cbck_union, direct_product, standard_chain, CbckUnion};
pub use ideals::{Ideal, IdealGuard, IdealLattice};

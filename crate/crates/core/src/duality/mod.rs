//! Finite posets and distributive lattices: meet-irreducibles, the Birkhoff
//! correspondence, isomorphism search and the named lattice families.

mod iso;
mod lattice;
mod poset;

pub use iso::{is_lattice_iso, lattice_iso, poset_anti_iso, poset_iso};
pub use lattice::{
    boolean_lattice, boolean_plus_top, chain_lattice, divisor_lattice,
    free_distributive_lattice_two, lattice_from_poset, lattice_product, FiniteDistLattice,
    MAX_LATTICE_SIZE,
};
pub(crate) use lattice::set_lattice;
pub use poset::{FinitePoset, MAX_DOWN_SETS};

use crate::spectra::FiniteSpace;

/// `K(Y)`: the compact opens of a finite space under inclusion. Every open
/// of a finite space is compact, so this is the whole open-set lattice.
pub fn compact_open_lattice(space: &FiniteSpace) -> FiniteDistLattice {
    set_lattice(&space.compact_opens())
}

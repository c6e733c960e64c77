//! Prime spectra as finite topological spaces and the checks run on them.

mod prime;
mod space;

pub use prime::{
    check_union_homeo, principal_path_ideal, spectrum, spectrum_map, tree_spectrum,
    AlgebraSpectrum, SpectrumMap, TreeSpectrum,
};
pub use space::{disjoint_union_space, homeomorphic, FiniteSpace, SpaceReport, MAX_OPENS};

use crate::duality::{compact_open_lattice, is_lattice_iso};

/// Whether the open-set lattices are isomorphic. For T0 quasi-sober spaces
/// this agrees with `homeomorphic`.
pub fn open_lattices_isomorphic(s1: &FiniteSpace, s2: &FiniteSpace) -> bool {
    is_lattice_iso(&compact_open_lattice(s1), &compact_open_lattice(s2)).unwrap_or(false)
}

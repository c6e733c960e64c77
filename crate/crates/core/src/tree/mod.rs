//! The symbolic algebra `A^T` of a finite rooted tree: element arithmetic,
//! ideals as vertex antichains, and the prime spectrum.

mod element;
mod enumerate;
mod ideals;
mod rooted;

pub use element::{compare_lex, random_element, random_tree, tree_leq, tree_meet, tree_op, TreeElement};
pub use enumerate::{rooted_trees, rooted_trees_up_to};
pub use ideals::{
    antichains, canonical_antichain, ideal_join, ideal_leq, ideal_meet, ideal_membership,
    join_witness, prime_counterexample, tree_ideal_lattice, tree_ideal_lattice_with_limit,
    tree_prime_ideals, PathIdeal, TreeIdealLattice, MAX_TREE_IDEALS,
};
pub use rooted::{RootedTree, Vertex};

//! Which finite distributive lattices arise as compact-open lattices of
//! spectra: chains, B̄_n and B_n do, F_2 does not come from any tree.

use cbck::duality::{
    boolean_lattice, boolean_plus_top, chain_lattice, compact_open_lattice,
    free_distributive_lattice_two, is_lattice_iso, lattice_from_poset,
};
use cbck::spectra::{spectrum, tree_spectrum};
use cbck::tree::{rooted_trees_up_to, tree_ideal_lattice, RootedTree};
use cbck::{cbck_union, standard_chain, IdealGuard};

fn main() {
    for n in 2..=6 {
        let kx = compact_open_lattice(tree_spectrum(&RootedTree::chain(n - 1)).unwrap().space());
        println!("{n}-chain = KX(A^ch_{}): {}", n - 1, is_lattice_iso(&kx, &chain_lattice(n).unwrap()).unwrap());
    }
    for n in 1..=4 {
        let kx = compact_open_lattice(tree_spectrum(&RootedTree::star(n)).unwrap().space());
        let bar = is_lattice_iso(&kx, &boolean_plus_top(n).unwrap()).unwrap();
        let u = cbck_union(&vec![standard_chain(1).unwrap(); n]).unwrap();
        let ku = compact_open_lattice(spectrum(u.algebra(), &IdealGuard::default()).unwrap().space());
        let b = is_lattice_iso(&ku, &boolean_lattice(n).unwrap()).unwrap();
        println!("B̄_{n} from T_{n}: {bar}, B_{n} from {n} copies of C1: {b}");
    }

    let trees = rooted_trees_up_to(7);
    let all = trees.iter().all(|t| {
        let kx = compact_open_lattice(tree_spectrum(t).unwrap().space());
        is_lattice_iso(&kx, &lattice_from_poset(&t.ancestor_poset().dual()).unwrap()).unwrap()
    });
    println!("KX(A^T) = Down(T^d) for all {} trees up to 7 vertices: {all}", trees.len());

    let f2 = free_distributive_lattice_two();
    let hit = rooted_trees_up_to(6)
        .into_iter()
        .find(|t| is_lattice_iso(tree_ideal_lattice(t).unwrap().lattice(), &f2).unwrap());
    println!("tree with id(A^T) = F_2: {:?}", hit.map(|t| t.parents().to_vec()));
}

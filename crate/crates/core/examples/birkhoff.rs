//! Finite distributive lattices from posets and back.

use cbck::duality::{
    divisor_lattice, free_distributive_lattice_two, is_lattice_iso, lattice_from_poset, poset_iso,
    FinitePoset,
};

fn main() {
    // N-shaped poset: 0 < 2, 1 < 2, 1 < 3
    let n = FinitePoset::from_covers(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
    let l = lattice_from_poset(&n).unwrap();
    println!("Down(N) has {} elements", l.len());
    println!("meet-irreducibles {:?}", l.meet_irreducible_elements());
    println!("MI(Down(N)) ≅ N: {}", poset_iso(&l.meet_irreducibles(), &n).unwrap().is_some());

    let (d, divisors) = divisor_lattice(60).unwrap();
    let mi = d.meet_irreducible_elements();
    println!(
        "D(60): {} divisors, meet-irreducible {:?}",
        d.len(),
        mi.iter().map(|&i| divisors[i]).collect::<Vec<_>>()
    );
    let back = lattice_from_poset(&d.meet_irreducibles()).unwrap();
    println!("Down(MI(D(60))) ≅ D(60): {}", is_lattice_iso(&back, &d).unwrap());

    let f2 = free_distributive_lattice_two();
    let mi = f2.meet_irreducibles();
    println!(
        "F_2: MI has {} elements, dual of a rooted tree: {}",
        mi.len(),
        mi.is_rooted_tree_dual()
    );
}

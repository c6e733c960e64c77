//! Prints the ideal lattices of A^T for T_2, T_3 and the tree H as DOT,
//! prime ideals in red. Pipe into `dot -Tsvg`.

use cbck::dot::hasse_dot;
use cbck::tree::{tree_ideal_lattice, RootedTree};

fn main() {
    for (name, t) in [
        ("T_2", RootedTree::star(2)),
        ("T_3", RootedTree::star(3)),
        ("H", RootedTree::h_tree()),
    ] {
        let l = tree_ideal_lattice(&t).unwrap();
        let labels: Vec<String> = l.ideals().iter().map(|r| r.name(&t)).collect();
        let primes: Vec<bool> = l.ideals().iter().map(|r| r.is_prime()).collect();
        println!("// {name}: {} ideals, {} primes", l.len(), l.primes().len());
        print!("{}", hasse_dot(name, &l.lattice().poset(), &labels, &primes));
    }
}

//! The ideal lattice of a finite algebra, with primes, annihilators and the
//! Iséki–Tanaka reduction words that witness membership.

use cbck::{cbck_union, direct_product, standard_chain, IdealGuard};

fn main() {
    let c = |k| standard_chain(k).unwrap();
    let a = cbck_union(&[c(2), direct_product(&[c(1), c(1)]).unwrap()])
        .unwrap()
        .into_algebra();
    let g = IdealGuard::default();
    let l = a.all_ideals(&g).unwrap();
    println!("{} ideals", l.len());
    for (i, ideal) in l.ideals().iter().enumerate() {
        let tag = match (l.is_prime(i), l.is_maximal(i)) {
            (true, true) => " prime, maximal",
            (true, false) => " prime",
            _ => "",
        };
        println!("  {:?}{tag}  annihilator {:?}", ideal.members(), a.annihilator_of(ideal).members());
    }
    println!("involutory: {}", a.is_involutory(&g).unwrap());
    println!("simple: {}", a.is_simple(&g).unwrap());

    let s = [1];
    println!("(1] = {:?}", a.generated_ideal(&s).members());
    for x in a.elements() {
        if let Some(word) = a.membership_witness(x, &s) {
            println!("  {x} reduces to 0 by {word:?}");
        }
    }
}

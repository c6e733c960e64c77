//! Arithmetic in A^T, path ideals, and the elements witnessing
//! `I(p ∧ q) = I(p) ∨ I(q)`.

use cbck::tree::{
    canonical_antichain, ideal_join, ideal_meet, join_witness, prime_counterexample, tree_leq,
    tree_meet, tree_op, RootedTree, TreeElement,
};

fn main() {
    let t = RootedTree::sample_tree();
    let name = |v| t.label(v).to_string();
    // β = 2 carries 2, δ = 4 carries -1
    let u = TreeElement::new(&t, [(2, 2), (4, -1)]).unwrap();
    let v = TreeElement::new(&t, [(2, 2), (4, -3), (5, 1)]).unwrap();
    println!("u·v = {:?}", tree_op(&t, &u, &v).support());
    println!("v·u = {:?}", tree_op(&t, &v, &u).support());
    println!("u∧v = {:?}", tree_meet(&t, &u, &v).support());
    println!("u ≤ v: {}", tree_leq(&t, &u, &v));

    let r1 = canonical_antichain(&t, [4, 1]).unwrap();
    let r2 = canonical_antichain(&t, [5]).unwrap();
    println!("{} ∩ {} = {}", r1.name(&t), r2.name(&t), ideal_meet(&t, &r1, &r2).name(&t));
    println!("{} ∨ {} = {}", r1.name(&t), r2.name(&t), ideal_join(&t, &r1, &r2).name(&t));

    let (p, q) = (4, 5);
    let w = TreeElement::new(&t, [(1, 3), (4, 2), (5, 7), (6, 1)]).unwrap();
    let (a, b) = join_witness(&t, &w, p, q).unwrap();
    println!(
        "w ∈ I({}) ∨ I({}) via v = {:?}, w' = {:?}",
        name(p),
        name(q),
        a.support(),
        b.support()
    );
    assert!(tree_op(&t, &tree_op(&t, &w, &a), &b).is_zero());

    if let Some((x, y)) = prime_counterexample(&t, &r1) {
        println!("{} is not prime: {:?} ∧ {:?} = 0", r1.name(&t), x.support(), y.support());
    }
}

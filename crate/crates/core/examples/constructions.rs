use cbck::constructions::product_coords;
use cbck::{cbck_union, direct_product, standard_chain};

fn main() {
    let c = |k| standard_chain(k).unwrap();

    let u = cbck_union(&[c(1), c(2), c(1)]).unwrap();
    println!("C1 ∪ C2 ∪ C1 has {} elements", u.algebra().size());
    for (e, (block, local)) in u.provenance().iter().enumerate() {
        println!("  {e} = element {local} of block {block}");
    }
    // elements of different blocks are orthogonal: x·y = x
    assert_eq!(u.algebra().op(1, 2), 1);

    let parts = [c(1), c(2)];
    let p = direct_product(&parts).unwrap();
    println!("C1 × C2 has {} elements, top {:?}", p.size(), p.top());
    for e in p.elements() {
        println!("  {e} = {:?}", product_coords(&parts, e));
    }
}

//! The spectrum of a union is the disjoint union of the component spectra.

use cbck::spectra::{check_union_homeo, disjoint_union_space, homeomorphic, spectrum, spectrum_map};
use cbck::{cbck_union, direct_product, standard_chain, IdealGuard};

fn main() {
    let g = IdealGuard::default();
    let c = |k| standard_chain(k).unwrap();
    let parts = vec![c(2), direct_product(&[c(1), c(1)]).unwrap(), c(1)];
    let u = cbck_union(&parts).unwrap();

    let whole = spectrum(u.algebra(), &g).unwrap();
    let pieces: Vec<_> = parts
        .iter()
        .map(|a| spectrum(a, &g).unwrap().space().clone())
        .collect();
    let coproduct = disjoint_union_space(&pieces).unwrap();
    println!("X(U) points {:?}", whole.space().labels());
    println!("coproduct points {:?}", coproduct.labels());
    println!("homeomorphism {:?}", homeomorphic(whole.space(), &coproduct));
    println!("check_union_homeo: {}", check_union_homeo(&parts, &g).unwrap());

    // Projections onto a block pull primes back to primes.
    let m = spectrum_map(&u.block_projection(1), &g).unwrap();
    let image: Vec<&str> = m.point_map.iter().map(|&k| whole.space().labels()[k].as_str()).collect();
    println!("X(π_1) sends the primes of C1×C1 to {image:?}, spectral {}", m.spectral);
}

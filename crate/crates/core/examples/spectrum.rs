use cbck::spectra::{spectrum, tree_spectrum};
use cbck::tree::RootedTree;
use cbck::{cbck_union, standard_chain, IdealGuard};

fn main() {
    let c1 = standard_chain(1).unwrap();
    let u = cbck_union(&[c1.clone(), c1.clone(), c1]).unwrap();
    let x = spectrum(u.algebra(), &IdealGuard::default()).unwrap();
    let s = x.space();
    println!("X(C1 ∪ C1 ∪ C1): points {:?}", s.labels());
    println!("  opens {}", s.opens().len());
    println!(
        "  T0 {}, quasi-sober {}, spectral {}, Priestley {}, Hausdorff {}",
        s.check_t0(),
        s.check_quasi_sober(),
        s.check_spectral(),
        s.check_priestley(&x.inclusion_order()).unwrap(),
        s.check_hausdorff()
    );

    // Tree spectra are never Hausdorff once there is an edge.
    let t = RootedTree::h_tree();
    let y = tree_spectrum(&t).unwrap();
    let s = y.space();
    println!("X(A^H): points {:?}", s.labels());
    println!(
        "  T0 {}, quasi-sober {}, spectral {}, Noetherian {}, Hausdorff {}",
        s.check_t0(),
        s.check_quasi_sober(),
        s.check_spectral(),
        s.check_noetherian(),
        s.check_hausdorff()
    );
    println!("  closed points {:?}", s.closed_points());
    let (compact, fg) = y.compact_iff_fg();
    println!("  compact {compact}, whole algebra finitely generated: {}", fg.is_some());
}

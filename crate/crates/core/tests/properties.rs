mod oracle;

use std::collections::BTreeSet;

use proptest::prelude::*;

use cbck::cli::{cmd_spectrum, Options};
use cbck::duality::{
    compact_open_lattice, is_lattice_iso, lattice_from_poset, lattice_product, poset_iso,
};
use cbck::spectra::{disjoint_union_space, spectrum, FiniteSpace};
use cbck::tree::{
    antichains, canonical_antichain, ideal_join, ideal_leq, ideal_meet, ideal_membership,
    prime_counterexample, rooted_trees_up_to, tree_leq, tree_meet, tree_op, PathIdeal,
    RootedTree, TreeElement,
};
use cbck::{cbck_union, standard_chain, FiniteCbckAlgebra, IdealGuard};

use oracle::Table;

fn alg(t: &Table) -> FiniteCbckAlgebra {
    FiniteCbckAlgebra::from_table(t).unwrap()
}

fn guard() -> IdealGuard {
    IdealGuard::default()
}

fn arb_chain() -> impl Strategy<Value = Table> {
    (1usize..=5).prop_map(oracle::chain)
}

/// Chains, unions and products with at most 12 elements.
fn arb_table() -> impl Strategy<Value = Table> {
    prop_oneof![
        arb_chain(),
        prop::collection::vec(1usize..=3, 2..=3)
            .prop_map(|ks| oracle::union(&ks.iter().map(|&k| oracle::chain(k)).collect::<Vec<_>>())),
        (1usize..=2, 1usize..=3)
            .prop_map(|(j, k)| oracle::product(&[oracle::chain(j), oracle::chain(k)])),
        Just(oracle::product(&[oracle::chain(1), oracle::chain(1), oracle::chain(1)])),
        (1usize..=2).prop_map(|k| oracle::union(&[
            oracle::product(&[oracle::chain(1), oracle::chain(1)]),
            oracle::chain(k),
        ])),
    ]
}

fn arb_tree() -> impl Strategy<Value = oracle::Tree> {
    (1usize..=8)
        .prop_flat_map(|m| {
            (0..m)
                .map(|i| if i == 0 { Just(0).boxed() } else { (0..i).boxed() })
                .collect::<Vec<_>>()
        })
        .prop_map(|parent| oracle::Tree { parent })
}

/// Support ≤ 6, values in [−9, 9], leading entries made positive.
fn arb_element(t: &oracle::Tree) -> impl Strategy<Value = Vec<i64>> {
    let n = t.len();
    let t = t.clone();
    prop::collection::vec((0..n, -9i64..=9), 0..=6).prop_map(move |entries| {
        let mut u = vec![0; t.len()];
        for (a, x) in entries {
            u[a] = x;
        }
        for a in 0..t.len() {
            if u[a] < 0 && t.path(a).iter().take_while(|&&x| x != a).all(|&x| u[x] == 0) {
                u[a] = -u[a];
            }
        }
        u
    })
}

fn arb_tree_with(k: usize) -> impl Strategy<Value = (oracle::Tree, Vec<Vec<i64>>)> {
    arb_tree().prop_flat_map(move |t| {
        let elems = prop::collection::vec(arb_element(&t), k);
        (Just(t), elems)
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn order_is_partial_with_least_zero(t in arb_table()) {
        let a = alg(&t);
        for x in a.elements() {
            prop_assert!(a.leq(0, x) && a.leq(x, x));
            for y in a.elements() {
                if a.leq(x, y) && a.leq(y, x) {
                    prop_assert_eq!(x, y);
                }
                for z in a.elements() {
                    if a.leq(x, y) && a.leq(y, z) {
                        prop_assert!(a.leq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn meet_is_a_semilattice(t in arb_table()) {
        let a = alg(&t);
        for x in a.elements() {
            prop_assert_eq!(a.meet(x, x), x);
            for y in a.elements() {
                let m = a.meet(x, y);
                prop_assert_eq!(m, a.meet(y, x));
                prop_assert!(a.leq(m, x) && a.leq(m, y));
                for z in a.elements() {
                    prop_assert_eq!(a.meet(a.meet(x, y), z), a.meet(x, a.meet(y, z)));
                    if a.leq(z, x) && a.leq(z, y) {
                        prop_assert!(a.leq(z, m));
                    }
                }
            }
        }
    }

    #[test]
    fn isotone_and_antitone(t in arb_table()) {
        let a = alg(&t);
        for x in a.elements() {
            for y in a.elements().filter(|&y| a.leq(x, y)) {
                for z in a.elements() {
                    prop_assert!(a.leq(a.op(x, z), a.op(y, z)));
                    prop_assert!(a.leq(a.op(z, y), a.op(z, x)));
                }
            }
        }
    }

    #[test]
    fn difference_below_and_disjointness(t in arb_table()) {
        let a = alg(&t);
        for x in a.elements() {
            for y in a.elements() {
                prop_assert!(a.leq(a.op(x, y), x));
                prop_assert_eq!(a.op(x, y) == x, a.meet(x, y) == 0);
            }
        }
    }

    #[test]
    fn bounded_reduct_is_distributive(t in arb_table()) {
        let a = alg(&t);
        if a.top().is_some() {
            let j = |x, y| a.bounded_join(x, y).unwrap();
            for x in a.elements() {
                for y in a.elements() {
                    for z in a.elements() {
                        prop_assert_eq!(a.meet(x, j(y, z)), j(a.meet(x, y), a.meet(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn directed_differences_are_disjoint(t in arb_table()) {
        let a = alg(&t);
        if a.is_directed() {
            for x in a.elements() {
                for y in a.elements() {
                    prop_assert_eq!(a.meet(a.op(x, y), a.op(y, x)), 0);
                }
            }
        }
    }

    #[test]
    fn union_size_and_blocks(ks in prop::collection::vec(1usize..=4, 1..=4)) {
        let parts: Vec<_> = ks.iter().map(|&k| standard_chain(k).unwrap()).collect();
        let u = cbck_union(&parts).unwrap();
        prop_assert_eq!(u.algebra().size(), 1 + ks.iter().sum::<usize>());
        for i in 0..parts.len() {
            prop_assert!(u.block_embedding(i).is_homomorphism());
        }
    }

    #[test]
    fn union_ideals_are_blockwise(ks in prop::collection::vec(1usize..=3, 2..=3)) {
        let parts: Vec<Table> = ks.iter().map(|&k| oracle::chain(k)).collect();
        let brute = oracle::ideals(&oracle::union(&parts));
        // each ideal is one ideal per block, and every choice occurs
        let product: usize = parts.iter().map(|p| oracle::ideals(p).len()).product();
        prop_assert_eq!(brute.len(), product);
        let u = alg(&oracle::union(&parts));
        prop_assert_eq!(u.all_ideals(&guard()).unwrap().len(), product);
        for &i in &brute {
            let members: Vec<usize> = (0..u.size()).filter(|&x| i >> x & 1 == 1).collect();
            let ann = u.annihilator(&members);
            // annihilators are computed block by block
            let mut offset = 1;
            for p in &parts {
                let local: Vec<usize> = (1..p.len()).filter(|&x| i >> (offset + x - 1) & 1 == 1).collect();
                let c = alg(p);
                let block_ann = c.annihilator(&local);
                for x in 1..p.len() {
                    prop_assert_eq!(ann.contains(offset + x - 1), block_ann.contains(x));
                }
                offset += p.len() - 1;
            }
        }
        prop_assert!(u.is_involutory(&guard()).unwrap());
    }

    #[test]
    fn ideal_lattice_is_distributive(t in arb_table()) {
        let l = alg(&t).all_ideals(&guard()).unwrap();
        prop_assert!(l.to_lattice().check_distributive().is_ok());
        prop_assert_eq!(l.get(l.bottom()).members(), vec![0]);
        prop_assert_eq!(l.get(l.top()).len(), t.len());
    }

    #[test]
    fn generated_ideal_matches_witnesses(t in arb_table(), seed in prop::collection::vec(0usize..12, 1..=3)) {
        let a = alg(&t);
        let s: Vec<usize> = seed.into_iter().map(|x| x % t.len()).collect();
        let g = a.generated_ideal(&s);
        let all = oracle::ideals(&t);
        prop_assert_eq!(oracle::mask_of(g.members()), oracle::generated(&all, oracle::mask_of(s.iter().copied())));
        for x in a.elements() {
            prop_assert_eq!(g.contains(x), a.membership_witness(x, &s).is_some());
        }
    }

    #[test]
    fn chain_ideals_are_linear(t in arb_chain()) {
        let a = alg(&t);
        let l = a.all_ideals(&guard()).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                prop_assert!(l.leq(i, j) || l.leq(j, i));
            }
            prop_assert_eq!(l.is_prime(i), l.get(i).is_proper());
        }
    }

    #[test]
    fn prime_irreducible_meetprime_coincide(t in arb_table()) {
        let a = alg(&t);
        let l = a.all_ideals(&guard()).unwrap();
        for (i, ideal) in l.ideals().iter().enumerate() {
            let (irr, mp) = a.irreducible_and_meetprime(ideal, &l);
            prop_assert_eq!(l.is_prime(i), irr);
            prop_assert_eq!(irr, mp);
            prop_assert_eq!(l.is_prime(i), oracle::is_prime(&t, oracle::mask_of(ideal.members())));
        }
    }

    #[test]
    fn ideals_are_intersections_of_primes(t in arb_table()) {
        let a = alg(&t);
        let l = a.all_ideals(&guard()).unwrap();
        let primes: Vec<usize> = l.primes().collect();
        for ideal in l.ideals() {
            let meet = primes
                .iter()
                .map(|&p| oracle::mask_of(l.get(p).members()))
                .filter(|&p| oracle::mask_of(ideal.members()) & p == oracle::mask_of(ideal.members()))
                .fold((1u64 << t.len()) - 1, |acc, p| acc & p);
            prop_assert_eq!(meet, oracle::mask_of(ideal.members()));
        }
    }

    #[test]
    fn annihilator_galois(t in arb_table(), s in prop::collection::vec(0usize..12, 0..=3), extra in prop::collection::vec(0usize..12, 0..=2)) {
        let a = alg(&t);
        let s: Vec<usize> = s.into_iter().map(|x| x % t.len()).collect();
        let bigger: Vec<usize> = s.iter().copied().chain(extra.into_iter().map(|x| x % t.len())).collect();
        let (ss, bs) = (a.annihilator(&s), a.annihilator(&bigger));
        prop_assert!(bs.is_subset(&ss));
        let triple = a.annihilator(&a.annihilator(&ss.members()).members());
        prop_assert_eq!(ss, triple);
    }

    #[test]
    fn powers_stabilize(t in arb_table()) {
        let a = alg(&t);
        let n = a.size();
        for x in a.elements() {
            for y in a.elements() {
                prop_assert_eq!(a.power(x, y, n), a.power(x, y, n + 1));
            }
        }
        prop_assert!(a.satisfies_dcc());
        prop_assert!(a.is_involutory(&guard()).unwrap());
    }

    #[test]
    fn tree_meet_is_the_term((t, e) in arb_tree_with(2)) {
        let lt = t.to_library();
        let (u, v) = (oracle::sparse(&t, &e[0]), oracle::sparse(&t, &e[1]));
        let m = tree_meet(&lt, &u, &v);
        prop_assert_eq!(&m, &tree_op(&lt, &v, &tree_op(&lt, &v, &u)));
        prop_assert_eq!(&m, &tree_op(&lt, &u, &tree_op(&lt, &u, &v)));
        prop_assert!(m.is_valid(&lt));
    }

    #[test]
    fn tree_order_is_pathwise_lex((t, e) in arb_tree_with(2)) {
        let lt = t.to_library();
        let (u, v) = (oracle::sparse(&t, &e[0]), oracle::sparse(&t, &e[1]));
        let lex = (0..t.len()).all(|a| {
            let p = t.path(a);
            p.iter().map(|&x| e[0][x]).le(p.iter().map(|&x| e[1][x]))
        });
        prop_assert_eq!(tree_leq(&lt, &u, &v), lex);
    }

    #[test]
    fn tree_ideals_are_closed((t, e) in arb_tree_with(2), pick in prop::collection::vec(0usize..8, 0..=3)) {
        let lt = t.to_library();
        let r = canonical_antichain(&lt, pick.into_iter().map(|v| v % t.len())).unwrap();
        let (u, v) = (oracle::sparse(&t, &e[0]), oracle::sparse(&t, &e[1]));
        if ideal_membership(&lt, &r, &tree_op(&lt, &u, &v)) && ideal_membership(&lt, &r, &v) {
            prop_assert!(ideal_membership(&lt, &r, &u));
        }
    }

    #[test]
    fn singleton_ideals_are_prime((t, e) in arb_tree_with(2), v in 0usize..8) {
        let lt = t.to_library();
        let p = PathIdeal::prime(&lt, v % t.len()).unwrap();
        let (u, w) = (oracle::sparse(&t, &e[0]), oracle::sparse(&t, &e[1]));
        if ideal_membership(&lt, &p, &tree_meet(&lt, &u, &w)) {
            prop_assert!(ideal_membership(&lt, &p, &u) || ideal_membership(&lt, &p, &w));
        }
    }

    #[test]
    fn birkhoff_round_trip(n in 1usize..=6, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = cbck::verify::random_poset(&mut rng, n);
        let l = lattice_from_poset(&p).unwrap();
        prop_assert!(poset_iso(&l.meet_irreducibles(), &p).unwrap().is_some());
        let back = lattice_from_poset(&l.meet_irreducibles()).unwrap();
        prop_assert!(is_lattice_iso(&back, &l).unwrap());
    }

    #[test]
    fn kx_of_union_is_product(ks in prop::collection::vec(1usize..=3, 2..=3)) {
        let parts: Vec<_> = ks.iter().map(|&k| standard_chain(k).unwrap()).collect();
        let u = cbck_union(&parts).unwrap();
        let kx = compact_open_lattice(spectrum(u.algebra(), &guard()).unwrap().space());
        let factors: Vec<_> = parts
            .iter()
            .map(|c| compact_open_lattice(spectrum(c, &guard()).unwrap().space()))
            .collect();
        prop_assert!(is_lattice_iso(&kx, &lattice_product(&factors).unwrap()).unwrap());
    }

    #[test]
    fn hausdorff_criteria(t in arb_table()) {
        let a = alg(&t);
        let x = spectrum(&a, &guard()).unwrap();
        let s = x.space();
        let clopen = a.elements().all(|e| s.is_closed(&x.sigma_elem(e)));
        prop_assert_eq!(s.check_hausdorff(), clopen);
        let l = x.lattice();
        if l.primes().all(|p| l.is_maximal(p)) {
            prop_assert!(s.check_hausdorff());
        }
        if s.check_priestley(&x.inclusion_order()).unwrap() {
            prop_assert!(s.check_hausdorff() && s.is_discrete());
        }
    }

    #[test]
    fn disjoint_unions_of_spaces(ks in prop::collection::vec(0usize..5, 1..=3)) {
        let spaces: Vec<FiniteSpace> = ks
            .iter()
            .map(|&k| match k {
                0 => FiniteSpace::sierpinski(),
                1 => FiniteSpace::discrete(2),
                2 => FiniteSpace::indiscrete(2),
                3 => tree_spectrum_space(&RootedTree::star(2)),
                _ => tree_spectrum_space(&RootedTree::chain(3)),
            })
            .collect();
        let d = disjoint_union_space(&spaces).unwrap();
        prop_assert_eq!(d.len(), spaces.iter().map(FiniteSpace::len).sum::<usize>());
        // opens, closed sets and compact opens are chosen block by block
        prop_assert_eq!(d.opens().len(), spaces.iter().map(|s| s.opens().len()).product::<usize>());
        prop_assert_eq!(d.closed_sets().len(), spaces.iter().map(|s| s.closed_sets().len()).product::<usize>());
        prop_assert_eq!(d.compact_opens().len(), spaces.iter().map(|s| s.compact_opens().len()).product::<usize>());
        prop_assert_eq!(d.check_t0(), spaces.iter().all(FiniteSpace::check_t0));
        prop_assert_eq!(d.check_quasi_sober(), spaces.iter().all(FiniteSpace::check_quasi_sober));
    }

    #[test]
    fn cli_output_is_deterministic(t in arb_tree()) {
        let parents: Vec<Option<usize>> = (0..t.len()).map(|i| (i > 0).then(|| t.parent[i])).collect();
        let input = serde_json::json!({"kind": "tree", "parents": parents}).to_string();
        let a = cmd_spectrum(&input, &Options::default());
        let b = cmd_spectrum(&input, &Options::default());
        prop_assert_eq!(a, b);
    }
}

fn tree_spectrum_space(t: &RootedTree) -> FiniteSpace {
    cbck::spectra::tree_spectrum(t).unwrap().space().clone()
}

#[test]
fn stated_direction_of_monotonicity_fails_in_c1() {
    // With x = 0 ≤ y = 1: z·x ≤ z·y fails for z = 1 and y·z ≤ x·z for z = 0.
    let a = alg(&oracle::chain(1));
    assert!(a.leq(0, 1));
    assert!(!a.leq(a.op(1, 0), a.op(1, 1)));
    assert!(!a.leq(a.op(1, 0), a.op(0, 0)));
}

#[test]
fn tree_ideal_lattice_laws_exhaustive() {
    for t in rooted_trees_up_to(7) {
        let ideals: Vec<PathIdeal> = antichains(&t, 1 << 12)
            .unwrap()
            .into_iter()
            .map(|a| canonical_antichain(&t, a).unwrap())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for a in &ideals {
            for b in &ideals {
                let (m, j) = (ideal_meet(&t, a, b), ideal_join(&t, a, b));
                assert_eq!(&ideal_join(&t, a, &m), a);
                assert_eq!(&ideal_meet(&t, a, &j), a);
                assert!(ideal_leq(&t, &m, a) && ideal_leq(&t, a, &j));
            }
        }
        // distributivity over all triples on the smaller trees, sampled above
        let step = if ideals.len() > 24 { 3 } else { 1 };
        for a in ideals.iter().step_by(step) {
            for b in &ideals {
                for c in &ideals {
                    assert_eq!(
                        ideal_meet(&t, a, &ideal_join(&t, b, c)),
                        ideal_join(&t, &ideal_meet(&t, a, b), &ideal_meet(&t, a, c))
                    );
                }
            }
        }
    }
}

#[test]
fn non_singleton_ideals_have_counterexamples() {
    for t in rooted_trees_up_to(6) {
        for a in antichains(&t, 1 << 12).unwrap() {
            let r = canonical_antichain(&t, a).unwrap();
            if r.antichain().len() < 2 {
                continue;
            }
            let (u, v) = prime_counterexample(&t, &r).unwrap();
            assert!(tree_meet(&t, &u, &v).is_zero());
            assert!(!ideal_membership(&t, &r, &u) && !ideal_membership(&t, &r, &v));
        }
    }
}

#[test]
fn tree_op_matches_definition() {
    let t = oracle::Tree { parent: vec![0, 0, 0, 0, 2, 2, 3] };
    let u = vec![0, 0, 2, 0, -1, 0, 0];
    let v = vec![0, 0, 2, 1, -3, 4, 0];
    let lt = t.to_library();
    let got = tree_op(&lt, &oracle::sparse(&t, &u), &oracle::sparse(&t, &v));
    assert_eq!(oracle::dense(&t, &got), oracle::tree_op(&t, &u, &v));
    assert_eq!(got, TreeElement::new(&lt, [(4, 2)]).unwrap());
}

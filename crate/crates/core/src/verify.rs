//! Named verification suites run by `bck verify`. Each suite is a list of
//! labelled checks; randomized suites are deterministic in the seed.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_axioms, FiniteCbckAlgebra};
use crate::constructions::{cbck_union, direct_product, standard_chain};
use crate::duality::{
    boolean_lattice, boolean_plus_top, chain_lattice, compact_open_lattice,
    free_distributive_lattice_two, is_lattice_iso, lattice_from_poset, poset_anti_iso,
    FinitePoset,
};
use crate::ideals::IdealGuard;
use crate::spectra::{check_union_homeo, spectrum, tree_spectrum};
use crate::tree::{
    random_element, random_tree, rooted_trees_up_to, tree_ideal_lattice, tree_leq, tree_meet,
    tree_op, tree_prime_ideals, RootedTree, TreeElement,
};

pub const SUITES: &[&str] = &[
    "figures",
    "axioms-random",
    "trees",
    "unions",
    "gspec",
    "priestley",
    "sigma",
    "culmination",
    "birkhoff",
    "negative",
];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}; known suites: {known}", known = SUITES.join(", "))]
pub struct UnknownSuite(pub String);

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: None,
        });
    }

    fn check_with(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        });
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport, UnknownSuite> {
    let mut r = Recorder { checks: Vec::new() };
    match name {
        "figures" => figures(&mut r),
        "axioms-random" => axioms_random(&mut r, seed),
        "trees" => trees(&mut r),
        "unions" => unions(&mut r, seed),
        "gspec" => gspec(&mut r),
        "priestley" => priestley(&mut r),
        "sigma" => sigma(&mut r),
        "culmination" => culmination(&mut r),
        "birkhoff" => birkhoff(&mut r, seed),
        "negative" => negative(&mut r),
        other => return Err(UnknownSuite(other.to_string())),
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        seed,
        checks: r.checks,
    })
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, seed).expect("listed suite"))
        .collect()
}

fn c(k: usize) -> FiniteCbckAlgebra {
    standard_chain(k).expect("k >= 1")
}

/// Finite algebras of at most 12 elements built from chains, unions and
/// products.
pub fn finite_corpus() -> Vec<(String, FiniteCbckAlgebra)> {
    let mut out = Vec::new();
    for k in 1..=11 {
        out.push((format!("C{k}"), c(k)));
    }
    for a in 1..=3 {
        for b in a..=3 {
            out.push((format!("C{a}+C{b}"), cbck_union(&[c(a), c(b)]).unwrap().into_algebra()));
            for d in b..=3 {
                out.push((
                    format!("C{a}+C{b}+C{d}"),
                    cbck_union(&[c(a), c(b), c(d)]).unwrap().into_algebra(),
                ));
            }
        }
    }
    for n in 4..=7 {
        let parts = vec![c(1); n];
        out.push((format!("{n}xC1 union"), cbck_union(&parts).unwrap().into_algebra()));
    }
    for parts in [
        vec![1, 1],
        vec![1, 2],
        vec![2, 2],
        vec![1, 3],
        vec![2, 3],
        vec![1, 5],
        vec![1, 1, 1],
        vec![1, 1, 2],
    ] {
        let name = parts.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("*");
        let algs: Vec<_> = parts.into_iter().map(c).collect();
        out.push((name, direct_product(&algs).unwrap()));
    }
    let square = direct_product(&[c(1), c(1)]).unwrap();
    out.push(("(C1*C1)+C2".into(), cbck_union(&[square.clone(), c(2)]).unwrap().into_algebra()));
    out.push(("(C1*C1)+(C1*C1)".into(), cbck_union(&[square.clone(), square]).unwrap().into_algebra()));
    out
}

fn figure_covers(t: &RootedTree) -> (usize, usize, BTreeSet<(String, String)>) {
    let l = tree_ideal_lattice(t).expect("small tree");
    let names: Vec<String> = l.ideals().iter().map(|r| r.name(t)).collect();
    let covers = l
        .lattice()
        .poset()
        .covers()
        .into_iter()
        .map(|(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    (l.len(), l.primes().len(), covers)
}

fn expected(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Name, tree, ideal count, prime count and labelled covers.
pub type FigureExpectation = (&'static str, RootedTree, usize, usize, BTreeSet<(String, String)>);

/// Labelled Hasse diagrams of the ideal lattices of `T_2`, `T_3` and `H`.
pub fn figure_expectations() -> Vec<FigureExpectation> {
    vec![
        (
            "T_2",
            RootedTree::star(2),
            5,
            3,
            expected(&[
                ("{0}", "I_α1"),
                ("{0}", "I_α2"),
                ("I_α1", "I_λ"),
                ("I_α2", "I_λ"),
                ("I_λ", "A"),
            ]),
        ),
        (
            "T_3",
            RootedTree::star(3),
            9,
            4,
            expected(&[
                ("{0}", "I_α1α2"),
                ("{0}", "I_α1α3"),
                ("{0}", "I_α2α3"),
                ("I_α1α2", "I_α1"),
                ("I_α1α2", "I_α2"),
                ("I_α1α3", "I_α1"),
                ("I_α1α3", "I_α3"),
                ("I_α2α3", "I_α2"),
                ("I_α2α3", "I_α3"),
                ("I_α1", "I_λ"),
                ("I_α2", "I_λ"),
                ("I_α3", "I_λ"),
                ("I_λ", "A"),
            ]),
        ),
        (
            "H",
            RootedTree::h_tree(),
            11,
            5,
            expected(&[
                ("{0}", "I_γδ"),
                ("{0}", "I_αγ"),
                ("{0}", "I_αδ"),
                ("I_γδ", "I_γ"),
                ("I_γδ", "I_δ"),
                ("I_αγ", "I_γ"),
                ("I_αγ", "I_αβ"),
                ("I_αδ", "I_δ"),
                ("I_αδ", "I_αβ"),
                ("I_γ", "I_β"),
                ("I_δ", "I_β"),
                ("I_αβ", "I_α"),
                ("I_αβ", "I_β"),
                ("I_α", "I_λ"),
                ("I_β", "I_λ"),
                ("I_λ", "A"),
            ]),
        ),
    ]
}

fn figures(r: &mut Recorder) {
    for (name, t, ideals, primes, covers) in figure_expectations() {
        let (n, p, got) = figure_covers(&t);
        r.check(format!("{name}: {ideals} ideals"), n == ideals);
        r.check(format!("{name}: {primes} primes"), p == primes);
        r.check_with(
            format!("{name}: labelled Hasse diagram"),
            (got != covers).then(|| format!("{got:?}")),
        );
    }
}

fn random_triple_checks(rng: &mut ChaCha8Rng, rounds: usize) -> Option<String> {
    for _ in 0..rounds {
        let m = rng.gen_range(1..=8);
        let t = random_tree(rng, m);
        let x = random_element(rng, &t, 6, 9);
        let y = random_element(rng, &t, 6, 9);
        let z = random_element(rng, &t, 6, 9);
        let op = |a: &TreeElement, b: &TreeElement| tree_op(&t, a, b);
        let fail = if op(&op(&x, &y), &z) != op(&op(&x, &z), &y) {
            Some("cBCK1")
        } else if op(&x, &op(&x, &y)) != op(&y, &op(&y, &x)) {
            Some("cBCK2")
        } else if !op(&x, &x).is_zero() {
            Some("cBCK3")
        } else if op(&x, &TreeElement::zero()) != x {
            Some("cBCK4")
        } else if tree_meet(&t, &x, &y) != op(&y, &op(&y, &x)) {
            Some("meet")
        } else if !op(&x, &y).is_valid(&t) {
            Some("closure")
        } else {
            None
        };
        if let Some(f) = fail {
            return Some(format!("{f} at parents {:?}: {x:?} {y:?} {z:?}", t.parents()));
        }
    }
    None
}

fn random_finite_algebra(rng: &mut ChaCha8Rng) -> FiniteCbckAlgebra {
    let blocks = rng.gen_range(1..=3);
    let parts: Vec<FiniteCbckAlgebra> = (0..blocks)
        .map(|_| {
            if rng.gen_bool(0.3) {
                direct_product(&[c(rng.gen_range(1..=2)), c(rng.gen_range(1..=2))]).unwrap()
            } else {
                c(rng.gen_range(1..=4))
            }
        })
        .collect();
    cbck_union(&parts).unwrap().into_algebra()
}

fn axioms_random(r: &mut Recorder, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    r.check_with("tree algebra: cBCK1-4, meet, closure (2000 triples)", random_triple_checks(&mut rng, 2000));
    let mut bad = None;
    for _ in 0..50 {
        let a = random_finite_algebra(&mut rng);
        if !check_axioms(&a.rows()).map(|rep| rep.passed()).unwrap_or(false) {
            bad = Some(format!("{:?}", a.rows()));
            break;
        }
    }
    r.check_with("random unions/products: cBCK1-4 (50 algebras)", bad);
    let mut order_fail = None;
    for _ in 0..1000 {
        let m = rng.gen_range(1..=8);
        let t = random_tree(&mut rng, m);
        let y = random_element(&mut rng, &t, 6, 9);
        let w = random_element(&mut rng, &t, 6, 9);
        let z = random_element(&mut rng, &t, 6, 9);
        let x = tree_op(&t, &y, &w);
        let ok = tree_leq(&t, &x, &y)
            && tree_leq(&t, &tree_op(&t, &x, &z), &tree_op(&t, &y, &z))
            && tree_leq(&t, &tree_op(&t, &z, &y), &tree_op(&t, &z, &x));
        if !ok {
            order_fail = Some(format!("{x:?} <= {y:?}, z = {z:?}"));
            break;
        }
    }
    r.check_with("tree algebra: isotone/antitone laws (1000 pairs)", order_fail);
}

fn trees(r: &mut Recorder) {
    let all = rooted_trees_up_to(7);
    r.check("85 rooted trees with at most 7 vertices", all.len() == 85);
    let bad = all.iter().find(|t| {
        let (p, _) = tree_prime_ideals(t);
        !poset_anti_iso(&p, &t.ancestor_poset()).map(|f| f.is_some()).unwrap_or(false)
    });
    r.check_with(
        "prime posets are anti-isomorphic to the tree",
        bad.map(|t| format!("{:?}", t.parents())),
    );
}

fn unions(r: &mut Recorder, seed: u64) {
    let g = IdealGuard::default();
    let mut mismatch = None;
    for n in 2..=3 {
        let mut idx = vec![1; n];
        loop {
            let parts: Vec<_> = idx.iter().map(|&k| c(k)).collect();
            let u = cbck_union(&parts).unwrap();
            let brute = u.algebra().prime_ideals(&g).unwrap();
            let blockwise = u.blockwise_primes(&g).unwrap();
            if brute != blockwise {
                mismatch = Some(format!("{idx:?}"));
            }
            let mut i = n;
            while i > 0 && idx[i - 1] == 3 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            idx[i..].iter_mut().for_each(|k| *k = 1);
        }
    }
    r.check_with("union primes equal the blockwise characterization", mismatch);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..20 {
        let parts: Vec<_> = (0..rng.gen_range(1..=4)).map(|_| c(rng.gen_range(1..=4))).collect();
        if !check_union_homeo(&parts, &g).unwrap_or(false) {
            bad = Some(format!("{:?}", parts.iter().map(|p| p.size() - 1).collect::<Vec<_>>()));
        }
    }
    r.check_with("20 random unions: spectrum is the disjoint union", bad);
}

fn gspec(r: &mut Recorder) {
    let g = IdealGuard::default();
    let mut bad = None;
    for (name, a) in finite_corpus() {
        let s = spectrum(&a, &g).unwrap();
        let sp = s.space();
        if !(sp.check_t0() && sp.check_quasi_sober() && sp.check_multiplicative_basis() && sp.check_noetherian()) {
            bad = Some(name);
        }
    }
    r.check_with("finite corpus: T0, quasi-sober, multiplicative basis, Noetherian", bad);
    let bad = rooted_trees_up_to(7).into_iter().find(|t| {
        let s = tree_spectrum(t).unwrap();
        let sp = s.space();
        !(sp.check_t0() && sp.check_quasi_sober() && sp.check_multiplicative_basis() && sp.check_spectral())
    });
    r.check_with(
        "tree spectra (<= 7 vertices): T0, quasi-sober, multiplicative basis, spectral",
        bad.map(|t| format!("{:?}", t.parents())),
    );
}

fn priestley(r: &mut Recorder) {
    let g = IdealGuard::default();
    let mut bad = None;
    for (name, a) in finite_corpus() {
        let s = spectrum(&a, &g).unwrap();
        let order = s.inclusion_order();
        let ok = s.space().check_priestley(&order).unwrap_or(false)
            && order.is_antichain()
            && s.space().check_hausdorff()
            && s.space().is_discrete()
            && a.is_involutory(&g).unwrap_or(false);
        if !ok {
            bad = Some(name);
        }
    }
    r.check_with("finite corpus: involutory, Priestley, antichain of primes, discrete", bad);
    let not = rooted_trees_up_to(7).into_iter().filter(|t| t.len() > 1).find(|t| {
        let s = tree_spectrum(t).unwrap();
        s.space().check_priestley(&s.inclusion_order()).unwrap_or(true)
    });
    r.check_with(
        "tree spectra with an edge are not Priestley",
        not.map(|t| format!("{:?}", t.parents())),
    );
}

fn sigma(r: &mut Recorder) {
    let g = IdealGuard::default();
    let mut bad = None;
    for (name, a) in finite_corpus() {
        let s = spectrum(&a, &g).unwrap();
        let l = s.lattice();
        let n = l.len();
        let injective = (0..n).all(|i| (0..i).all(|j| s.sigma_at(i) != s.sigma_at(j)));
        let hom = (0..n).all(|i| {
            (0..n).all(|j| {
                let mut m = s.sigma_at(i).clone();
                m.intersect_with(s.sigma_at(j));
                let mut u = s.sigma_at(i).clone();
                u.union_with(s.sigma_at(j));
                *s.sigma_at(l.meet(i, j)) == m && *s.sigma_at(l.join(i, j)) == u
            })
        });
        let kx = is_lattice_iso(&compact_open_lattice(s.space()), &l.to_lattice()).unwrap_or(false);
        if !(injective && hom && kx) {
            bad = Some(name);
        }
    }
    r.check_with("finite corpus: sigma is a lattice isomorphism and KX(A) = id(A)", bad);
    let bad = rooted_trees_up_to(7).into_iter().find(|t| {
        let s = tree_spectrum(t).unwrap();
        !is_lattice_iso(&compact_open_lattice(s.space()), s.lattice().lattice()).unwrap_or(false)
    });
    r.check_with("tree algebras: KX(A^T) = id(A^T)", bad.map(|t| format!("{:?}", t.parents())));
}

fn culmination(r: &mut Recorder) {
    let g = IdealGuard::default();
    let bad = rooted_trees_up_to(7).into_iter().find(|t| {
        let kx = compact_open_lattice(tree_spectrum(t).unwrap().space());
        let birkhoff = lattice_from_poset(&t.ancestor_poset().dual()).unwrap();
        !is_lattice_iso(&kx, &birkhoff).unwrap_or(false)
    });
    r.check_with("every tree: KX(A^T) = Down(T^d)", bad.map(|t| format!("{:?}", t.parents())));
    // ch_m has m vertices, so it is defined for m >= 1 only
    for n in 2..=6 {
        let kx = compact_open_lattice(tree_spectrum(&RootedTree::chain(n - 1)).unwrap().space());
        r.check(
            format!("{n}-chain is KX(A^ch_{})", n - 1),
            is_lattice_iso(&kx, &chain_lattice(n).unwrap()).unwrap_or(false),
        );
    }
    for n in 1..=4 {
        let kx = compact_open_lattice(tree_spectrum(&RootedTree::star(n)).unwrap().space());
        r.check(
            format!("B̄_{n} is KX(A^T_{n})"),
            is_lattice_iso(&kx, &boolean_plus_top(n).unwrap()).unwrap_or(false),
        );
        let u = cbck_union(&vec![c(1); n]).unwrap();
        let kx = compact_open_lattice(spectrum(u.algebra(), &g).unwrap().space());
        r.check(
            format!("B_{n} is KX of {n} copies of C1"),
            is_lattice_iso(&kx, &boolean_lattice(n).unwrap()).unwrap_or(false),
        );
    }
}

/// All partial orders on `0..n` (labelled, so with repeats up to isomorphism).
/// Posets on `0..n` whose order only goes upward in index. Every finite
/// poset is isomorphic to one of these (take a linear extension).
pub fn natural_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        if let Ok(p) = FinitePoset::from_relation(n, leq) {
            out.push(p);
        }
    }
    out
}

/// A random order: a random DAG on `0..n` (edges only upward) closed
/// transitively.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> FinitePoset {
    let covers: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(0.3))
        .collect();
    FinitePoset::from_covers(n, &covers).expect("upward edges are acyclic")
}

fn birkhoff(r: &mut Recorder, seed: u64) {
    let round_trips = |p: &FinitePoset| {
        let l = lattice_from_poset(p).unwrap();
        let mi = l.meet_irreducibles();
        crate::duality::poset_iso(&mi, p).ok().flatten().is_some()
            && is_lattice_iso(&lattice_from_poset(&mi).unwrap(), &l).unwrap_or(false)
    };
    let bad = (0..=6)
        .flat_map(natural_posets)
        .find(|p| !round_trips(p))
        .map(|p| format!("{:?}", p.to_matrix()));
    r.check_with("every poset on at most 6 points: both round trips", bad);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..40 {
        let n = rng.gen_range(7..=9);
        let p = random_poset(&mut rng, n);
        if !round_trips(&p) {
            bad = Some(format!("{:?}", p.to_matrix()));
        }
    }
    r.check_with("random posets on 7-9 points: both round trips", bad);
}

fn negative(r: &mut Recorder) {
    let f2 = free_distributive_lattice_two();
    let hit = rooted_trees_up_to(6).into_iter().find(|t| {
        is_lattice_iso(tree_ideal_lattice(t).unwrap().lattice(), &f2).unwrap_or(false)
    });
    r.check_with("no tree with at most 6 vertices has id(A^T) = F_2", hit.map(|t| format!("{:?}", t.parents())));
    r.check(
        "MI(F_2) is not the dual of a rooted tree",
        !f2.meet_irreducibles().is_rooted_tree_dual(),
    );
}

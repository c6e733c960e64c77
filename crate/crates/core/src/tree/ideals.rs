use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::element::{tree_op, TreeElement};
use super::rooted::{RootedTree, Vertex};
use crate::duality::{FiniteDistLattice, FinitePoset};
use crate::error::{GuardError, TreeError};

/// Cap on the number of antichains enumerated for one tree.
pub const MAX_TREE_IDEALS: usize = 1 << 12;

/// `I(R)`: the elements vanishing on `[λ, r]` for every `r` in the antichain.
/// The empty antichain is `I(∅)`, the whole algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathIdeal {
    antichain: Vec<Vertex>,
}

impl PathIdeal {
    pub fn whole() -> Self {
        PathIdeal {
            antichain: Vec::new(),
        }
    }

    /// `{0} = I(all leaves)`.
    pub fn zero(tree: &RootedTree) -> Self {
        PathIdeal {
            antichain: tree.leaves(),
        }
    }

    /// `I([λ, v])`, the prime ideal attached to `v`.
    pub fn prime(tree: &RootedTree, v: Vertex) -> Result<Self, TreeError> {
        tree.check_vertex(v)?;
        Ok(PathIdeal { antichain: vec![v] })
    }

    pub fn antichain(&self) -> &[Vertex] {
        &self.antichain
    }

    pub fn is_whole(&self) -> bool {
        self.antichain.is_empty()
    }

    /// Exactly the singleton antichains are prime.
    pub fn is_prime(&self) -> bool {
        self.antichain.len() == 1
    }

    pub fn contains(&self, tree: &RootedTree, u: &TreeElement) -> bool {
        ideal_membership(tree, self, u)
    }

    /// Paper-style name such as `I_{γδ}`; `A` for the whole algebra.
    pub fn name(&self, tree: &RootedTree) -> String {
        if self.is_whole() {
            return "A".to_string();
        }
        if self.antichain == tree.leaves() && tree.len() > 1 {
            return "{0}".to_string();
        }
        let labels: String = self.antichain.iter().map(|&v| tree.label(v)).collect();
        format!("I_{labels}")
    }
}

impl Serialize for PathIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            antichain: Option<&'a [Vertex]>,
        }
        Repr {
            antichain: (!self.is_whole()).then_some(&self.antichain[..]),
        }
        .serialize(s)
    }
}

pub fn ideal_membership(tree: &RootedTree, r: &PathIdeal, u: &TreeElement) -> bool {
    r.antichain.iter().all(|&a| u.vanishes_on_path(tree, a))
}

/// Keeps the `≤_T`-maximal vertices; ancestors add no constraint.
pub fn canonical_antichain(
    tree: &RootedTree,
    vertices: impl IntoIterator<Item = Vertex>,
) -> Result<PathIdeal, TreeError> {
    let set: BTreeSet<Vertex> = vertices.into_iter().collect();
    for &v in &set {
        tree.check_vertex(v)?;
    }
    let antichain = set
        .iter()
        .copied()
        .filter(|&v| !set.iter().any(|&w| w != v && tree.is_ancestor_or_equal(v, w)))
        .collect();
    Ok(PathIdeal { antichain })
}

/// `I(R1) ⊆ I(R2)` iff each vertex of `R2` lies on the root path of some
/// vertex of `R1`.
pub fn ideal_leq(tree: &RootedTree, r1: &PathIdeal, r2: &PathIdeal) -> bool {
    r2.antichain
        .iter()
        .all(|&b| r1.antichain.iter().any(|&a| tree.is_ancestor_or_equal(b, a)))
}

/// `I(R1) ∩ I(R2) = I(R1 ∪ R2)`.
pub fn ideal_meet(tree: &RootedTree, r1: &PathIdeal, r2: &PathIdeal) -> PathIdeal {
    canonical_antichain(tree, r1.antichain.iter().chain(&r2.antichain).copied())
        .expect("vertices come from valid ideals")
}

/// `I(R1) ∨ I(R2) = I({a ∧_T b})`; the whole algebra absorbs.
pub fn ideal_join(tree: &RootedTree, r1: &PathIdeal, r2: &PathIdeal) -> PathIdeal {
    if r1.is_whole() || r2.is_whole() {
        return PathIdeal::whole();
    }
    let lcas = r1
        .antichain
        .iter()
        .flat_map(|&a| r2.antichain.iter().map(move |&b| tree.lca(a, b)));
    canonical_antichain(tree, lcas).expect("vertices come from valid ideals")
}

/// For `u ∈ I([λ, p ∧_T q])`, finds `v ∈ I(p)` and `w ∈ I(q)` with
/// `(u·v)·w = 0`, exhibiting `u ∈ I(p) ∨ I(q)`.
///
/// `v` agrees with `u` off `D = [λ,p] ∪ {subtrees below [λ,p] \ [λ,q]}` and
/// is `0` on `D`, so `u·v` is `u` on `D` and `0` elsewhere and `w = u·v`.
pub fn join_witness(
    tree: &RootedTree,
    u: &TreeElement,
    p: Vertex,
    q: Vertex,
) -> Result<(TreeElement, TreeElement), TreeError> {
    tree.check_vertex(p)?;
    tree.check_vertex(q)?;
    if !u.is_valid(tree) {
        return Err(TreeError::WitnessPrecondition);
    }
    let meet = tree.lca(p, q);
    if !u.vanishes_on_path(tree, meet) {
        return Err(TreeError::WitnessPrecondition);
    }
    let mut blocked = vec![false; tree.len()];
    for a in tree.path(p) {
        blocked[a] = true;
        if !tree.is_ancestor_or_equal(a, q) {
            for d in tree.subtree(a) {
                blocked[d] = true;
            }
        }
    }
    let v = TreeElement::new(
        tree,
        u.support()
            .iter()
            .filter(|(&a, _)| !blocked[a])
            .map(|(&a, &x)| (a, x)),
    )?;
    let w = tree_op(tree, u, &v);
    debug_assert!(v.vanishes_on_path(tree, p) && w.vanishes_on_path(tree, q));
    debug_assert!(tree_op(tree, &w, &w).is_zero());
    Ok((v, w))
}

/// All antichains of the tree, the empty one included.
pub fn antichains(tree: &RootedTree, limit: usize) -> Result<Vec<Vec<Vertex>>, TreeError> {
    fn below(
        tree: &RootedTree,
        v: Vertex,
        limit: usize,
    ) -> Result<Vec<Vec<Vertex>>, TreeError> {
        // antichains of the subtree at v: {v} or a combination over children
        let mut combos: Vec<Vec<Vertex>> = vec![Vec::new()];
        for &c in tree.children(v) {
            let sub = below(tree, c, limit)?;
            let mut next = Vec::with_capacity(combos.len() * sub.len());
            for a in &combos {
                for b in &sub {
                    let mut ab = a.clone();
                    ab.extend_from_slice(b);
                    next.push(ab);
                }
            }
            if next.len() > limit {
                return Err(GuardError {
                    what: "number of tree antichains",
                    actual: next.len(),
                    limit,
                }
                .into());
            }
            combos = next;
        }
        combos.push(vec![v]);
        Ok(combos)
    }
    let mut all = below(tree, tree.root(), limit)?;
    for a in &mut all {
        a.sort_unstable();
    }
    Ok(all)
}

/// The ideal lattice of `A^T`, one element per antichain.
#[derive(Debug, Clone)]
pub struct TreeIdealLattice {
    ideals: Vec<PathIdeal>,
    index: HashMap<PathIdeal, usize>,
    lattice: FiniteDistLattice,
}

impl TreeIdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[PathIdeal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &PathIdeal {
        &self.ideals[i]
    }

    pub fn index_of(&self, r: &PathIdeal) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn lattice(&self) -> &FiniteDistLattice {
        &self.lattice
    }

    /// `{0}` comes first, the whole algebra last.
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ideals[i].is_prime()).collect()
    }
}

pub fn tree_ideal_lattice(tree: &RootedTree) -> Result<TreeIdealLattice, TreeError> {
    tree_ideal_lattice_with_limit(tree, MAX_TREE_IDEALS)
}

pub fn tree_ideal_lattice_with_limit(
    tree: &RootedTree,
    limit: usize,
) -> Result<TreeIdealLattice, TreeError> {
    let mut ideals: Vec<PathIdeal> = antichains(tree, limit)?
        .into_iter()
        .map(|antichain| PathIdeal { antichain })
        .collect();
    // more vertices forced to zero means a smaller ideal
    let zero_set = |r: &PathIdeal| {
        let mut seen = vec![false; tree.len()];
        for &a in &r.antichain {
            for w in tree.path(a) {
                seen[w] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    };
    ideals.sort_by_cached_key(|r| (std::cmp::Reverse(zero_set(r)), r.antichain.clone()));
    let n = ideals.len();
    let index: HashMap<PathIdeal, usize> =
        ideals.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&ideals[i], &ideals[j]);
            leq[i * n + j] = ideal_leq(tree, a, b);
            meet[i * n + j] = index[&ideal_meet(tree, a, b)];
            join[i * n + j] = index[&ideal_join(tree, a, b)];
        }
    }
    let lattice = FiniteDistLattice::from_parts(n, leq, meet, join);
    Ok(TreeIdealLattice {
        ideals,
        index,
        lattice,
    })
}

/// Primes `I([λ, α])` in vertex order, ordered by inclusion:
/// `I(α) ⊆ I(β)` iff `β ≤_T α`.
pub fn tree_prime_ideals(tree: &RootedTree) -> (FinitePoset, Vec<PathIdeal>) {
    let primes = tree
        .vertices()
        .map(|v| PathIdeal { antichain: vec![v] })
        .collect();
    (tree.ancestor_poset().dual(), primes)
}

/// For a non-prime proper ideal, indicator elements `u, v` outside it with
/// `u ∧ v = 0`.
pub fn prime_counterexample(
    tree: &RootedTree,
    r: &PathIdeal,
) -> Option<(TreeElement, TreeElement)> {
    let (&a, &b) = (r.antichain.first()?, r.antichain.get(1)?);
    let u = TreeElement::indicator(tree, a).ok()?;
    let v = TreeElement::indicator(tree, b).ok()?;
    Some((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{boolean_plus_top, is_lattice_iso, poset_anti_iso};
    use crate::tree::element::tree_meet;

    fn pi(t: &RootedTree, vs: &[Vertex]) -> PathIdeal {
        canonical_antichain(t, vs.iter().copied()).unwrap()
    }

    #[test]
    fn membership() {
        let t = RootedTree::star(2);
        let u = TreeElement::new(&t, [(2, 4)]).unwrap();
        assert!(ideal_membership(&t, &pi(&t, &[1]), &u));
        assert!(!ideal_membership(&t, &pi(&t, &[2]), &u));
        assert!(ideal_membership(&t, &PathIdeal::whole(), &u));
        assert!(!ideal_membership(&t, &PathIdeal::zero(&t), &u));
        assert!(ideal_membership(&t, &PathIdeal::zero(&t), &TreeElement::zero()));
    }

    #[test]
    fn canonical_form_and_order() {
        let t = RootedTree::star(2);
        assert_eq!(pi(&t, &[0, 1]).antichain(), &[1]);
        assert!(pi(&t, &[]).is_whole());
        assert_eq!(pi(&t, &[1, 2]).antichain(), &[1, 2]);
        assert!(ideal_leq(&t, &pi(&t, &[1]), &pi(&t, &[0])));
        assert!(!ideal_leq(&t, &pi(&t, &[0]), &pi(&t, &[1])));
        assert!(ideal_leq(&t, &PathIdeal::zero(&t), &pi(&t, &[2])));
        assert_eq!(ideal_join(&t, &pi(&t, &[1]), &pi(&t, &[2])), pi(&t, &[0]));
        assert_eq!(ideal_meet(&t, &pi(&t, &[1]), &PathIdeal::whole()), pi(&t, &[1]));
        let h = RootedTree::h_tree();
        assert_eq!(ideal_meet(&h, &pi(&h, &[3]), &pi(&h, &[4])).antichain(), &[3, 4]);
    }

    #[test]
    fn witnesses() {
        let t = RootedTree::star(2);
        let z = TreeElement::zero();
        assert_eq!(join_witness(&t, &z, 1, 2).unwrap(), (z.clone(), z.clone()));
        let u = TreeElement::new(&t, [(1, 1), (2, 1)]).unwrap();
        let (v, w) = join_witness(&t, &u, 1, 2).unwrap();
        assert_eq!(v, TreeElement::new(&t, [(2, 1)]).unwrap());
        assert_eq!(w, TreeElement::new(&t, [(1, 1)]).unwrap());
        assert!(tree_op(&t, &tree_op(&t, &u, &v), &w).is_zero());

        let h = RootedTree::h_tree();
        let u = TreeElement::new(&h, [(1, 2)]).unwrap();
        let (v, w) = join_witness(&h, &u, 2, 1).unwrap();
        assert_eq!(v, u);
        assert!(w.is_zero());

        let bad = TreeElement::new(&t, [(0, 1)]).unwrap();
        assert_eq!(join_witness(&t, &bad, 1, 2), Err(TreeError::WitnessPrecondition));
    }

    #[test]
    fn figure_lattices() {
        for (t, ideals, primes) in [
            (RootedTree::star(2), 5, 3),
            (RootedTree::star(3), 9, 4),
            (RootedTree::h_tree(), 11, 5),
        ] {
            let l = tree_ideal_lattice(&t).unwrap();
            assert_eq!(l.len(), ideals);
            assert_eq!(l.primes().len(), primes);
            assert_eq!(l.get(l.bottom()), &PathIdeal::zero(&t));
            assert!(l.get(l.top()).is_whole());
            l.lattice().check_distributive().unwrap();
        }
    }

    #[test]
    fn stars_give_boolean_plus_top() {
        for n in 1..=4 {
            let l = tree_ideal_lattice(&RootedTree::star(n)).unwrap();
            assert!(is_lattice_iso(l.lattice(), &boolean_plus_top(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn primes_reverse_the_tree() {
        let t = RootedTree::sample_tree();
        let (p, primes) = tree_prime_ideals(&t);
        assert_eq!(primes.len(), 7);
        assert!(poset_anti_iso(&p, &t.ancestor_poset()).unwrap().is_some());
        let c = RootedTree::chain(3);
        assert!(tree_prime_ideals(&c).0.is_chain());
    }

    #[test]
    fn non_prime_counterexample() {
        let h = RootedTree::h_tree();
        let r = pi(&h, &[3, 4]);
        let (u, v) = prime_counterexample(&h, &r).unwrap();
        assert!(ideal_membership(&h, &r, &tree_meet(&h, &u, &v)));
        assert!(!r.contains(&h, &u) && !r.contains(&h, &v));
        assert!(prime_counterexample(&h, &pi(&h, &[2])).is_none());
    }
}

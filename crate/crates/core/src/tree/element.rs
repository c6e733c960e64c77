use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use super::rooted::{RootedTree, Vertex};
use crate::error::TreeError;

/// A finitely supported labelling of a tree whose first non-zero entry on
/// every root path is positive. Zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeElement {
    support: BTreeMap<Vertex, i64>,
}

impl TreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Value `1` at `v` and `0` elsewhere.
    pub fn indicator(tree: &RootedTree, v: Vertex) -> Result<Self, TreeError> {
        Self::new(tree, [(v, 1)])
    }

    pub fn new(
        tree: &RootedTree,
        entries: impl IntoIterator<Item = (Vertex, i64)>,
    ) -> Result<Self, TreeError> {
        let mut support = BTreeMap::new();
        for (v, x) in entries {
            tree.check_vertex(v)?;
            if x != 0 {
                support.insert(v, x);
            }
        }
        let u = TreeElement { support };
        u.validate(tree)?;
        Ok(u)
    }

    pub(crate) fn from_support_unchecked(support: BTreeMap<Vertex, i64>) -> Self {
        TreeElement { support }
    }

    fn validate(&self, tree: &RootedTree) -> Result<(), TreeError> {
        for (&v, &x) in &self.support {
            if x < 0 {
                let mut cur = tree.parent(v);
                let mut lead = true;
                while let Some(p) = cur {
                    if self.get(p) != 0 {
                        lead = false;
                        break;
                    }
                    cur = tree.parent(p);
                }
                if lead {
                    return Err(TreeError::NegativeLead(v));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, tree: &RootedTree) -> bool {
        self.support.keys().all(|&v| v < tree.len()) && self.validate(tree).is_ok()
    }

    pub fn get(&self, v: Vertex) -> i64 {
        self.support.get(&v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> &BTreeMap<Vertex, i64> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// `u_[λ,v]`, root first.
    pub fn on_path(&self, tree: &RootedTree, v: Vertex) -> Vec<i64> {
        tree.path(v).into_iter().map(|w| self.get(w)).collect()
    }

    /// Whether the element is `0` on `[λ, v]`.
    pub fn vanishes_on_path(&self, tree: &RootedTree, v: Vertex) -> bool {
        tree.path(v).into_iter().all(|w| self.get(w) == 0)
    }
}

impl Serialize for TreeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            support: BTreeMap<String, i64>,
        }
        Repr {
            support: self
                .support
                .iter()
                .map(|(v, x)| (v.to_string(), *x))
                .collect(),
        }
        .serialize(s)
    }
}

/// Lexicographic comparison of `u` and `v` along `[λ, terminal]`, root first.
pub fn compare_lex(tree: &RootedTree, u: &TreeElement, v: &TreeElement, terminal: Vertex) -> Ordering {
    let a = u.on_path(tree, terminal);
    let b = v.on_path(tree, terminal);
    a.cmp(&b)
}

/// Per-vertex lexicographic comparison of `u_[λ,α]` against `v_[λ,α]`.
fn path_comparisons(tree: &RootedTree, u: &TreeElement, v: &TreeElement) -> Vec<Ordering> {
    let mut cmp = vec![Ordering::Equal; tree.len()];
    for a in tree.bfs_order() {
        let inherited = tree.parent(a).map_or(Ordering::Equal, |p| cmp[p]);
        cmp[a] = if inherited == Ordering::Equal {
            u.get(a).cmp(&v.get(a))
        } else {
            inherited
        };
    }
    cmp
}

/// `(u·v)_α = u_α − v_α` where `u_[λ,α] >_ℓ v_[λ,α]`, and `0` otherwise.
pub fn tree_op(tree: &RootedTree, u: &TreeElement, v: &TreeElement) -> TreeElement {
    let cmp = path_comparisons(tree, u, v);
    let support = tree
        .vertices()
        .filter(|&a| cmp[a] == Ordering::Greater)
        .map(|a| (a, u.get(a) - v.get(a)))
        .filter(|&(_, x)| x != 0)
        .collect();
    let out = TreeElement::from_support_unchecked(support);
    debug_assert!(out.is_valid(tree), "tree_op left the algebra");
    out
}

/// Pathwise lexicographic minimum.
pub fn tree_meet(tree: &RootedTree, u: &TreeElement, v: &TreeElement) -> TreeElement {
    let cmp = path_comparisons(tree, u, v);
    let support = tree
        .vertices()
        .map(|a| (a, if cmp[a] == Ordering::Greater { v.get(a) } else { u.get(a) }))
        .filter(|&(_, x)| x != 0)
        .collect();
    TreeElement::from_support_unchecked(support)
}

/// `u ≤ v` iff `u·v = 0`, i.e. `u_p ≤_ℓ v_p` on every root path.
pub fn tree_leq(tree: &RootedTree, u: &TreeElement, v: &TreeElement) -> bool {
    path_comparisons(tree, u, v)
        .into_iter()
        .all(|c| c != Ordering::Greater)
}

/// A random valid element with at most `max_support` non-zero entries drawn
/// from `-bound..=bound`. Negative leads are flipped to positive.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    tree: &RootedTree,
    max_support: usize,
    bound: i64,
) -> TreeElement {
    let k = rng.gen_range(0..=max_support.min(tree.len()));
    let verts = rand::seq::index::sample(rng, tree.len(), k);
    let mut support = BTreeMap::new();
    for v in verts.iter() {
        let x = rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 };
        support.insert(v, x);
    }
    fix_signs(tree, support)
}

fn fix_signs(tree: &RootedTree, mut support: BTreeMap<Vertex, i64>) -> TreeElement {
    for a in tree.bfs_order() {
        let lead = tree.path(a)[..tree.depth(a)]
            .iter()
            .all(|w| !support.contains_key(w));
        if lead {
            if let Some(x) = support.get_mut(&a) {
                *x = x.abs();
            }
        }
    }
    TreeElement::from_support_unchecked(support)
}

/// A uniformly random recursive tree on `m` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, m: usize) -> RootedTree {
    let ps: Vec<usize> = (1..m.max(1)).map(|i| rng.gen_range(0..i)).collect();
    RootedTree::from_parent_indices(&ps)
}

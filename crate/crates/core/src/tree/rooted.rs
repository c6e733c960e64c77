use std::collections::VecDeque;

use crate::duality::FinitePoset;
use crate::error::TreeError;

pub type Vertex = usize;

/// A finite rooted tree on `0..m` with root `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
    labels: Vec<String>,
}

impl RootedTree {
    pub fn from_parents(parent: &[Option<Vertex>]) -> Result<Self, TreeError> {
        let m = parent.len();
        if m == 0 {
            return Err(TreeError::Empty);
        }
        if parent[0].is_some() {
            return Err(TreeError::RootHasParent);
        }
        let mut children = vec![Vec::new(); m];
        for (v, p) in parent.iter().enumerate().skip(1) {
            match *p {
                None => return Err(TreeError::SecondRoot(v)),
                Some(p) if p >= m => return Err(TreeError::ParentOutOfRange { vertex: v, parent: p }),
                Some(p) => children[p].push(v),
            }
        }
        let mut depth = vec![usize::MAX; m];
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                queue.push_back(c);
            }
        }
        if let Some(v) = depth.iter().position(|&d| d == usize::MAX) {
            return Err(TreeError::Cycle(v));
        }
        Ok(RootedTree {
            parent: parent.to_vec(),
            children,
            depth,
            labels: (0..m).map(|v| v.to_string()).collect(),
        })
    }

    /// Parent array with `parent[i] < i` for every non-root vertex.
    pub(crate) fn from_parent_indices(ps: &[usize]) -> Self {
        let parent: Vec<Option<Vertex>> = std::iter::once(None)
            .chain(ps.iter().map(|&p| Some(p)))
            .collect();
        Self::from_parents(&parent).expect("parent indices precede children")
    }

    /// Attaches display labels; the count must match the vertex count.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.len(), "one label per vertex");
        self.labels = labels;
        self
    }

    /// `T_n`: a root with `n` leaf children.
    pub fn star(n: usize) -> Self {
        Self::from_parent_indices(&vec![0; n])
            .with_labels(std::iter::once("λ".to_string()).chain((1..=n).map(|i| format!("α{i}"))))
    }

    /// `ch_n`: a path on `n >= 1` vertices hanging from the root.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "a chain needs a root");
        Self::from_parent_indices(&(0..n - 1).collect::<Vec<_>>())
    }

    /// `H`: λ with children α and β, and β with children γ and δ.
    pub fn h_tree() -> Self {
        Self::from_parent_indices(&[0, 0, 2, 2]).with_labels(["λ", "α", "β", "γ", "δ"])
    }

    /// λ with children α, β, γ; β with children δ, μ; γ with child ν.
    pub fn sample_tree() -> Self {
        Self::from_parent_indices(&[0, 0, 0, 2, 2, 3])
            .with_labels(["λ", "α", "β", "γ", "δ", "μ", "ν"])
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> Vertex {
        0
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.len()
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), TreeError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(TreeError::VertexOutOfRange {
                vertex: v,
                size: self.len(),
            })
        }
    }

    /// Vertices of `[λ, v]`, root first.
    pub fn path(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }

    /// `a ≤_T b`: `a` lies on the root path to `b`.
    pub fn is_ancestor_or_equal(&self, a: Vertex, b: Vertex) -> bool {
        let mut cur = b;
        loop {
            if cur == a {
                return true;
            }
            if self.depth[cur] <= self.depth[a] {
                return false;
            }
            match self.parent[cur] {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    pub fn comparable(&self, a: Vertex, b: Vertex) -> bool {
        self.is_ancestor_or_equal(a, b) || self.is_ancestor_or_equal(b, a)
    }

    /// Last common vertex of `[λ, a]` and `[λ, b]`.
    pub fn lca(&self, mut a: Vertex, mut b: Vertex) -> Vertex {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("deeper vertex has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("deeper vertex has a parent");
        }
        while a != b {
            a = self.parent[a].expect("non-root");
            b = self.parent[b].expect("non-root");
        }
        a
    }

    /// `v` and all its descendants.
    pub fn subtree(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i]]);
            i += 1;
        }
        out
    }

    /// Root-first breadth-first order; parents always precede children.
    pub fn bfs_order(&self) -> Vec<Vertex> {
        self.subtree(0)
    }

    /// `(V(T), ≤_T)` with the root as least element.
    pub fn ancestor_poset(&self) -> FinitePoset {
        let m = self.len();
        FinitePoset::from_fn(m, |a, b| self.is_ancestor_or_equal(a, b)).expect("ancestor order")
    }

    /// Isomorphism-invariant encoding (sorted parenthesised child lists).
    pub fn canonical_form(&self) -> String {
        self.canonical_at(0)
    }

    fn canonical_at(&self, v: Vertex) -> String {
        let mut parts: Vec<String> = self.children[v]
            .iter()
            .map(|&c| self.canonical_at(c))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }

    /// Graphs are equal up to relabelling of vertices.
    pub fn is_isomorphic(&self, other: &RootedTree) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }
}

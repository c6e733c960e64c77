use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{GuardError, OrderError};

/// Default cap on the number of down-sets materialised.
pub const MAX_DOWN_SETS: usize = 1 << 12;

/// A finite partial order on `0..n`, stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub(crate) fn from_relation_unchecked(n: usize, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), n * n);
        FinitePoset { n, leq }
    }

    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn from_relation(n: usize, leq: Vec<bool>) -> Result<Self, OrderError> {
        if leq.len() != n * n {
            return Err(OrderError::Shape(n));
        }
        let p = FinitePoset { n, leq };
        p.validate()?;
        Ok(p)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self, OrderError> {
        let leq = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_relation(n, leq)
    }

    /// Parses a 0/1 matrix where `rows[i][j] = 1` means `i <= j`.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self, OrderError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(OrderError::Shape(n));
        }
        Self::from_relation(n, rows.iter().flatten().map(|&b| b != 0).collect())
    }

    /// Reflexive-transitive closure of the given strict relations `a < b`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, OrderError> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(OrderError::Shape(n));
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(n, leq)
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation_unchecked(n, (0..n * n).map(|k| k / n <= k % n).collect())
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation_unchecked(n, (0..n * n).map(|k| k / n == k % n).collect())
    }

    fn validate(&self) -> Result<(), OrderError> {
        let n = self.n;
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(OrderError::NotReflexive(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(OrderError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(OrderError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// The order dual, materialised as the transposed relation.
    pub fn dual(&self) -> FinitePoset {
        let n = self.n;
        Self::from_relation_unchecked(n, (0..n * n).map(|k| self.leq(k % n, k / n)).collect())
    }

    /// Cover pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        let n = self.n;
        (0..n)
            .filter(|&b| self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| !(0..self.n).any(|b| self.lt(a, b)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| !(0..self.n).any(|b| self.lt(b, a)))
            .collect()
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || !self.leq(i, j)))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.comparable(i, j)))
    }

    /// Connected as a comparability graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for (b, s) in seen.iter_mut().enumerate() {
                if !*s && self.comparable(a, b) {
                    *s = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether this is the order dual of a rooted tree: a greatest element
    /// exists and every other element has exactly one upper cover.
    pub fn is_rooted_tree_dual(&self) -> bool {
        let maxes = self.maximal_elements();
        maxes.len() == 1
            && (0..self.n)
                .filter(|&a| a != maxes[0])
                .all(|a| self.upper_covers(a).len() == 1)
    }

    /// The induced order on `elems` (renumbered `0..elems.len()`).
    pub fn subposet(&self, elems: &[usize]) -> FinitePoset {
        let m = elems.len();
        Self::from_relation_unchecked(
            m,
            (0..m * m)
                .map(|k| self.leq(elems[k / m], elems[k % m]))
                .collect(),
        )
    }

    pub fn is_down_set(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .all(|b| (0..self.n).all(|a| !self.leq(a, b) || set.contains(a)))
    }

    pub fn is_up_set(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .all(|a| (0..self.n).all(|b| !self.leq(a, b) || set.contains(b)))
    }

    /// All down-sets (including `∅` and the whole set).
    pub fn down_sets(&self, limit: usize) -> Result<Vec<FixedBitSet>, OrderError> {
        // a linear extension: fewer predecessors first
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (0..self.n).filter(|&b| self.leq(b, a)).count());
        let mut out = Vec::new();
        let mut current = FixedBitSet::with_capacity(self.n);
        self.extend_down_sets(&order, 0, &mut current, &mut out, limit)?;
        Ok(out)
    }

    fn extend_down_sets(
        &self,
        order: &[usize],
        pos: usize,
        current: &mut FixedBitSet,
        out: &mut Vec<FixedBitSet>,
        limit: usize,
    ) -> Result<(), OrderError> {
        if pos == order.len() {
            if out.len() >= limit {
                return Err(GuardError {
                    what: "number of down-sets",
                    actual: out.len() + 1,
                    limit,
                }
                .into());
            }
            out.push(current.clone());
            return Ok(());
        }
        let a = order[pos];
        self.extend_down_sets(order, pos + 1, current, out, limit)?;
        if (0..self.n).all(|b| !self.lt(b, a) || current.contains(b)) {
            current.insert(a);
            self.extend_down_sets(order, pos + 1, current, out, limit)?;
            current.set(a, false);
        }
        Ok(())
    }

    /// 0/1 matrix for serialization.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.leq(i, j))).collect())
            .collect()
    }
}

impl Serialize for FinitePoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            leq: Vec<Vec<u8>>,
        }
        Repr {
            leq: self.to_matrix(),
        }
        .serialize(s)
    }
}

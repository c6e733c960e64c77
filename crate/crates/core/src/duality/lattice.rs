use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::poset::{FinitePoset, MAX_DOWN_SETS};
use crate::error::{GuardError, OrderError};

/// Largest lattice the named constructors will build.
pub const MAX_LATTICE_SIZE: usize = 1 << 12;

fn guard(n: usize) -> Result<(), OrderError> {
    if n > MAX_LATTICE_SIZE + 1 {
        return Err(GuardError {
            what: "lattice size",
            actual: n,
            limit: MAX_LATTICE_SIZE + 1,
        }
        .into());
    }
    Ok(())
}

/// A finite distributive lattice on `0..n` with explicit order, meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDistLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl FiniteDistLattice {
    pub(crate) fn from_parts(n: usize, leq: Vec<bool>, meet: Vec<usize>, join: Vec<usize>) -> Self {
        let l = FiniteDistLattice { n, leq, meet, join };
        debug_assert!(n > 128 || l.check_lattice_laws().is_ok());
        debug_assert!(n > 128 || l.check_distributive().is_ok());
        l
    }

    /// Builds the lattice of a partial order, computing meets and joins and
    /// rejecting orders that are not distributive lattices.
    pub fn from_poset(p: &FinitePoset) -> Result<Self, OrderError> {
        let n = p.len();
        if n == 0 {
            return Err(OrderError::Shape(0));
        }
        let bound = |i: usize, j: usize, lower: bool| -> Option<usize> {
            let below = |a: usize, b: usize| if lower { p.leq(a, b) } else { p.leq(b, a) };
            let cands: Vec<usize> = (0..n).filter(|&c| below(c, i) && below(c, j)).collect();
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| below(d, c)))
        };
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = bound(i, j, true).ok_or(OrderError::NotLattice(i, j, "meet"))?;
                join[i * n + j] = bound(i, j, false).ok_or(OrderError::NotLattice(i, j, "join"))?;
            }
        }
        let leq = (0..n * n).map(|k| p.leq(k / n, k % n)).collect();
        let l = FiniteDistLattice { n, leq, meet, join };
        l.check_distributive()?;
        Ok(l)
    }

    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self, OrderError> {
        Self::from_poset(&FinitePoset::from_matrix(rows)?)
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

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n + j]
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n + j]
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).fold(0, |acc, i| self.meet(acc, i))
    }

    pub fn top(&self) -> usize {
        (0..self.n).fold(0, |acc, i| self.join(acc, i))
    }

    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_relation_unchecked(self.n, self.leq.clone())
    }

    /// Commutativity, associativity, idempotence, absorption and agreement
    /// of the tables with the order.
    pub fn check_lattice_laws(&self) -> Result<(), OrderError> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let m = self.meet(a, b);
                let j = self.join(a, b);
                if m != self.meet(b, a) || !self.leq(m, a) || !self.leq(m, b) {
                    return Err(OrderError::NotLattice(a, b, "meet"));
                }
                if j != self.join(b, a) || !self.leq(a, j) || !self.leq(b, j) {
                    return Err(OrderError::NotLattice(a, b, "join"));
                }
                if self.join(a, m) != a || self.meet(a, j) != a {
                    return Err(OrderError::NotLattice(a, b, "absorption"));
                }
                if self.leq(a, b) != (m == a) {
                    return Err(OrderError::NotLattice(a, b, "order agreement"));
                }
                for c in 0..n {
                    if self.meet(m, c) != self.meet(a, self.meet(b, c))
                        || self.join(j, c) != self.join(a, self.join(b, c))
                    {
                        return Err(OrderError::NotLattice(a, b, "associativity"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` on all triples.
    pub fn check_distributive(&self) -> Result<(), OrderError> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Err(OrderError::NotDistributive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Elements `m != top` such that `m = a ∧ b` forces `m = a` or `m = b`.
    pub fn meet_irreducible_elements(&self) -> Vec<usize> {
        let top = self.top();
        (0..self.n)
            .filter(|&m| {
                m != top
                    && (0..self.n).all(|a| {
                        (0..self.n).all(|b| self.meet(a, b) != m || a == m || b == m)
                    })
            })
            .collect()
    }

    /// `MI(L)` with the inherited order; element `i` of the poset is
    /// `meet_irreducible_elements()[i]`.
    pub fn meet_irreducibles(&self) -> FinitePoset {
        self.poset().subposet(&self.meet_irreducible_elements())
    }

    pub fn join_irreducible_elements(&self) -> Vec<usize> {
        let bottom = self.bottom();
        (0..self.n)
            .filter(|&m| {
                m != bottom
                    && (0..self.n).all(|a| {
                        (0..self.n).all(|b| self.join(a, b) != m || a == m || b == m)
                    })
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.poset().to_matrix()
    }
}

impl Serialize for FiniteDistLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.poset().serialize(s)
    }
}

/// Lattice of a family of sets closed under union and intersection,
/// ordered by inclusion.
pub(crate) fn set_lattice(sets: &[FixedBitSet]) -> FiniteDistLattice {
    let n = sets.len();
    let index: std::collections::HashMap<&FixedBitSet, usize> =
        sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = sets[i].is_subset(&sets[j]);
            let mut m = sets[i].clone();
            m.intersect_with(&sets[j]);
            let mut u = sets[i].clone();
            u.union_with(&sets[j]);
            meet[i * n + j] = index[&m];
            join[i * n + j] = index[&u];
        }
    }
    FiniteDistLattice::from_parts(n, leq, meet, join)
}

/// The distributive lattice whose meet-irreducibles form `p`: down-sets of
/// `p` under inclusion.
pub fn lattice_from_poset(p: &FinitePoset) -> Result<FiniteDistLattice, OrderError> {
    let mut sets = p.down_sets(MAX_DOWN_SETS + 1)?;
    sets.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    Ok(set_lattice(&sets))
}

/// Subsets of an `n`-set; element `k` is the subset with bitmask `k`.
pub fn boolean_lattice(n: usize) -> Result<FiniteDistLattice, OrderError> {
    if n > 12 {
        return Err(GuardError {
            what: "boolean lattice rank",
            actual: n,
            limit: 12,
        }
        .into());
    }
    let size = 1usize << n;
    let leq = (0..size * size)
        .map(|k| (k / size) & !(k % size) == 0)
        .collect();
    let meet = (0..size * size).map(|k| (k / size) & (k % size)).collect();
    let join = (0..size * size).map(|k| (k / size) | (k % size)).collect();
    Ok(FiniteDistLattice::from_parts(size, leq, meet, join))
}

/// `B_n` with a new top adjoined; the new top has index `2ⁿ`.
pub fn boolean_plus_top(n: usize) -> Result<FiniteDistLattice, OrderError> {
    let b = boolean_lattice(n)?;
    let m = b.len();
    let size = m + 1;
    let mut leq = vec![false; size * size];
    let mut meet = vec![0; size * size];
    let mut join = vec![0; size * size];
    for i in 0..size {
        for j in 0..size {
            let k = i * size + j;
            if i < m && j < m {
                leq[k] = b.leq(i, j);
                meet[k] = b.meet(i, j);
                join[k] = b.join(i, j);
            } else {
                leq[k] = j == m;
                meet[k] = if i == m { j } else { i };
                join[k] = m;
            }
        }
    }
    Ok(FiniteDistLattice::from_parts(size, leq, meet, join))
}

/// The `n`-element chain `0 < 1 < ... < n-1`.
pub fn chain_lattice(n: usize) -> Result<FiniteDistLattice, OrderError> {
    if n == 0 {
        return Err(OrderError::Shape(0));
    }
    guard(n)?;
    let leq = (0..n * n).map(|k| k / n <= k % n).collect();
    let meet = (0..n * n).map(|k| (k / n).min(k % n)).collect();
    let join = (0..n * n).map(|k| (k / n).max(k % n)).collect();
    Ok(FiniteDistLattice::from_parts(n, leq, meet, join))
}

/// Componentwise product; tuples in mixed radix with the last factor fastest.
pub fn lattice_product(factors: &[FiniteDistLattice]) -> Result<FiniteDistLattice, OrderError> {
    let n = factors
        .iter()
        .try_fold(1usize, |acc, l| acc.checked_mul(l.len()))
        .unwrap_or(usize::MAX);
    guard(n)?;
    let coords = |mut e: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (i, l) in factors.iter().enumerate().rev() {
            out[i] = e % l.len();
            e /= l.len();
        }
        out
    };
    let index = |cs: &[usize]| -> usize {
        factors
            .iter()
            .zip(cs)
            .fold(0, |acc, (l, &c)| acc * l.len() + c)
    };
    let all: Vec<Vec<usize>> = (0..n).map(coords).collect();
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&all[i], &all[j]);
            leq[i * n + j] = factors.iter().enumerate().all(|(f, l)| l.leq(a[f], b[f]));
            let m: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(f, l)| l.meet(a[f], b[f]))
                .collect();
            let u: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(f, l)| l.join(a[f], b[f]))
                .collect();
            meet[i * n + j] = index(&m);
            join[i * n + j] = index(&u);
        }
    }
    Ok(FiniteDistLattice::from_parts(n, leq, meet, join))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Positive divisors of `n` under divisibility, listed in increasing order.
pub fn divisor_lattice(n: u64) -> Result<(FiniteDistLattice, Vec<u64>), OrderError> {
    if n == 0 {
        return Err(OrderError::ZeroDivisor);
    }
    let divisors: Vec<u64> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let m = divisors.len();
    guard(m)?;
    let pos = |v: u64| divisors.binary_search(&v).expect("divisor of n");
    let mut leq = vec![false; m * m];
    let mut meet = vec![0; m * m];
    let mut join = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (divisors[i], divisors[j]);
            let g = gcd(a, b);
            leq[i * m + j] = b % a == 0;
            meet[i * m + j] = pos(g);
            join[i * m + j] = pos(a / g * b);
        }
    }
    Ok((FiniteDistLattice::from_parts(m, leq, meet, join), divisors))
}

/// The free bounded distributive lattice on two generators:
/// `0 < x∧y < x, y < x∨y < 1`, indexed `0, x∧y, x, y, x∨y, 1`.
pub fn free_distributive_lattice_two() -> FiniteDistLattice {
    let p = FinitePoset::from_covers(6, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])
        .expect("valid covers");
    FiniteDistLattice::from_poset(&p).expect("F_2 is distributive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_poset_rejects_non_lattices() {
        assert!(matches!(
            FiniteDistLattice::from_poset(&FinitePoset::antichain(2)),
            Err(OrderError::NotLattice(..))
        ));
        // M3 is a lattice but not distributive
        let m3 = FinitePoset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .unwrap();
        assert!(matches!(
            FiniteDistLattice::from_poset(&m3),
            Err(OrderError::NotDistributive(..))
        ));
    }

    #[test]
    fn named_families() {
        assert_eq!(boolean_lattice(0).unwrap().len(), 1);
        assert_eq!(boolean_plus_top(2).unwrap().len(), 5);
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.join_irreducible_elements().len(), 3);
        assert_eq!(chain_lattice(4).unwrap().len(), 4);
        let (d12, divs) = divisor_lattice(12).unwrap();
        assert_eq!(divs, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(d12.meet(3, 4), 1); // gcd(4, 6) = 2
        assert_eq!(d12.join(1, 2), 4); // lcm(2, 3) = 6
        assert!(divisor_lattice(0).is_err());
        let f2 = free_distributive_lattice_two();
        assert_eq!(f2.len(), 6);
        for l in [&b3, &d12, &f2] {
            l.check_lattice_laws().unwrap();
            l.check_distributive().unwrap();
        }
    }

    #[test]
    fn meet_irreducibles_of_small_lattices() {
        let chain = chain_lattice(5).unwrap();
        assert!(chain.meet_irreducibles().is_chain());
        assert_eq!(chain.meet_irreducibles().len(), 4);
        let bbar = boolean_plus_top(2).unwrap();
        let mi = bbar.meet_irreducibles();
        assert_eq!(mi.len(), 3);
        assert!(mi.is_rooted_tree_dual());
        let f2 = free_distributive_lattice_two();
        assert_eq!(f2.meet_irreducible_elements(), vec![0, 2, 3, 4]);
        assert!(!f2.meet_irreducibles().is_rooted_tree_dual());
    }

    #[test]
    fn birkhoff_small_cases() {
        let one = lattice_from_poset(&FinitePoset::antichain(1)).unwrap();
        assert_eq!(one.len(), 2);
        let b2 = lattice_from_poset(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.meet_irreducibles().len(), 2);
        assert!(b2.meet_irreducibles().is_antichain());
    }

    #[test]
    fn products() {
        let sq = lattice_product(&[chain_lattice(2).unwrap(), chain_lattice(2).unwrap()]).unwrap();
        assert_eq!(sq.len(), 4);
        sq.check_distributive().unwrap();
        assert_eq!(sq.top(), 3);
    }
}

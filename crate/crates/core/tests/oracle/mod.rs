//! Brute-force reference implementations written from the definitions.
//! Nothing here calls into the library's enumeration or search code; the
//! library is only used to hold results for comparison.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use cbck::duality::{FiniteDistLattice, FinitePoset};

pub type Table = Vec<Vec<usize>>;
pub type Mask = u64;

/// `C_k`: `{0..=k}` with truncated subtraction.
pub fn chain(k: usize) -> Table {
    (0..=k)
        .map(|x| (0..=k).map(|y| x.saturating_sub(y)).collect())
        .collect()
}

/// Blocks glued at `0`; elements of different blocks act like `x·y = x`.
pub fn union(parts: &[Table]) -> Table {
    let mut block = vec![usize::MAX];
    let mut local = vec![0];
    let mut offsets = Vec::new();
    for (b, t) in parts.iter().enumerate() {
        offsets.push(block.len() - 1);
        for x in 1..t.len() {
            block.push(b);
            local.push(x);
        }
    }
    let n = block.len();
    let global = |b: usize, x: usize| if x == 0 { 0 } else { offsets[b] + x };
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == 0 {
                        0
                    } else if y == 0 || block[x] != block[y] {
                        x
                    } else {
                        global(block[x], parts[block[x]][local[x]][local[y]])
                    }
                })
                .collect()
        })
        .collect()
}

/// Componentwise product, last coordinate varying fastest.
pub fn product(parts: &[Table]) -> Table {
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    let n: usize = sizes.iter().product();
    let coords = |mut e: usize| {
        let mut c = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            c[i] = e % sizes[i];
            e /= sizes[i];
        }
        c
    };
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (cx, cy) = (coords(x), coords(y));
                    (0..sizes.len()).fold(0, |acc, i| acc * sizes[i] + parts[i][cx[i]][cy[i]])
                })
                .collect()
        })
        .collect()
}

pub fn meet(t: &Table, x: usize, y: usize) -> usize {
    t[y][t[y][x]]
}

pub fn mask_of(members: impl IntoIterator<Item = usize>) -> Mask {
    members.into_iter().fold(0, |m, x| m | 1 << x)
}

fn has(m: Mask, x: usize) -> bool {
    m >> x & 1 == 1
}

pub fn is_ideal(t: &Table, m: Mask) -> bool {
    let n = t.len();
    has(m, 0)
        && (0..n).all(|x| has(m, x) || (0..n).all(|y| !(has(m, y) && has(m, t[x][y]))))
}

/// Every subset containing `0` that satisfies the ideal implication.
pub fn ideals(t: &Table) -> Vec<Mask> {
    let n = t.len();
    assert!(n <= 16, "oracle is exponential");
    (0..1u64 << n).filter(|&m| is_ideal(t, m)).collect()
}

pub fn is_prime(t: &Table, m: Mask) -> bool {
    let n = t.len();
    let full = (1u64 << n) - 1;
    m != full
        && (0..n).all(|x| {
            (0..n).all(|y| !has(m, meet(t, x, y)) || has(m, x) || has(m, y))
        })
}

pub fn primes(t: &Table) -> Vec<Mask> {
    ideals(t).into_iter().filter(|&m| is_prime(t, m)).collect()
}

/// Smallest ideal containing `s`, as the intersection of all ideals above it.
pub fn generated(all: &[Mask], s: Mask) -> Mask {
    all.iter().filter(|&&i| i & s == s).fold(!0, |acc, &i| acc & i)
}

/// `x ∈ (S]` read off the reduction form: some word over `S` sends `x` to `0`.
pub fn reduces_to_zero(t: &Table, x: usize, s: &[usize]) -> bool {
    let mut seen = BTreeSet::from([x]);
    let mut frontier = vec![x];
    while let Some(y) = frontier.pop() {
        if y == 0 {
            return true;
        }
        for &g in s {
            if seen.insert(t[y][g]) {
                frontier.push(t[y][g]);
            }
        }
    }
    false
}

// ---------------------------------------------------------------- trees

/// A tree as a parent array with `parent[i] < i` for `i > 0`.
#[derive(Debug, Clone)]
pub struct Tree {
    pub parent: Vec<usize>,
}

impl Tree {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// Root-first vertex list of `[λ, v]`.
    pub fn path(&self, mut v: usize) -> Vec<usize> {
        let mut p = vec![v];
        while v != 0 {
            v = self.parent[v];
            p.push(v);
        }
        p.reverse();
        p
    }

    pub fn ancestor(&self, a: usize, b: usize) -> bool {
        self.path(b).contains(&a)
    }

    pub fn to_library(&self) -> cbck::tree::RootedTree {
        let ps: Vec<Option<usize>> = (0..self.len())
            .map(|i| (i > 0).then(|| self.parent[i]))
            .collect();
        cbck::tree::RootedTree::from_parents(&ps).expect("oracle trees are valid")
    }

    fn shape(&self, v: usize) -> String {
        let mut kids: Vec<String> = (1..self.len())
            .filter(|&c| self.parent[c] == v)
            .map(|c| self.shape(c))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    pub fn shape_key(&self) -> String {
        self.shape(0)
    }

    /// Nonempty antichains under the ancestor order, as vertex masks.
    pub fn antichains(&self) -> Vec<Mask> {
        let n = self.len();
        (1..1u64 << n)
            .filter(|&m| {
                (0..n).all(|a| {
                    (0..n).all(|b| a == b || !has(m, a) || !has(m, b) || !self.ancestor(a, b))
                })
            })
            .collect()
    }
}

/// Every parent array on `m` vertices; each shape appears at least once.
pub fn labelled_trees(m: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    let mut parent = vec![0; m];
    fn go(i: usize, parent: &mut Vec<usize>, out: &mut Vec<Tree>) {
        if i == parent.len() {
            out.push(Tree { parent: parent.clone() });
            return;
        }
        for p in 0..i {
            parent[i] = p;
            go(i + 1, parent, out);
        }
    }
    if m > 0 {
        go(1, &mut parent, &mut out);
    }
    out
}

/// One representative per isomorphism class.
pub fn tree_shapes(m: usize) -> Vec<Tree> {
    let mut seen = BTreeSet::new();
    labelled_trees(m)
        .into_iter()
        .filter(|t| seen.insert(t.shape_key()))
        .collect()
}

/// The operation of `A^T` on dense labelings, straight from the definition:
/// keep `u_α − v_α` where `u` beats `v` lexicographically on `[λ, α]`.
pub fn tree_op(t: &Tree, u: &[i64], v: &[i64]) -> Vec<i64> {
    (0..t.len())
        .map(|a| {
            let p = t.path(a);
            let up: Vec<i64> = p.iter().map(|&x| u[x]).collect();
            let vp: Vec<i64> = p.iter().map(|&x| v[x]).collect();
            if up.cmp(&vp) == Ordering::Greater {
                u[a] - v[a]
            } else {
                0
            }
        })
        .collect()
}

pub fn tree_leq(t: &Tree, u: &[i64], v: &[i64]) -> bool {
    tree_op(t, u, v).iter().all(|&x| x == 0)
}

pub fn valid_element(t: &Tree, u: &[i64]) -> bool {
    (0..t.len()).all(|a| {
        t.path(a)
            .iter()
            .map(|&x| u[x])
            .find(|&x| x != 0)
            .is_none_or(|x| x > 0)
    })
}

pub fn dense(t: &Tree, u: &cbck::tree::TreeElement) -> Vec<i64> {
    (0..t.len()).map(|a| u.get(a)).collect()
}

pub fn sparse(t: &Tree, u: &[i64]) -> cbck::tree::TreeElement {
    cbck::tree::TreeElement::new(&t.to_library(), u.iter().copied().enumerate())
        .expect("oracle elements are valid")
}

// ---------------------------------------------------------------- lattices

/// `B_n` as subsets of `{0..n}` under inclusion; element `k` is bitmask `k`.
pub fn boolean(n: usize) -> FiniteDistLattice {
    let p = FinitePoset::from_fn(1 << n, |a, b| a & b == a).unwrap();
    FiniteDistLattice::from_poset(&p).unwrap()
}

/// `B_n` with a new top adjoined above the full set.
pub fn boolean_bar(n: usize) -> FiniteDistLattice {
    let top = 1 << n;
    let p = FinitePoset::from_fn(top + 1, |a, b| b == top || (a != top && a & b == a)).unwrap();
    FiniteDistLattice::from_poset(&p).unwrap()
}

/// The free distributive lattice on `x, y`: `0 < x∧y < x, y < x∨y < 1`.
pub fn free_two() -> FiniteDistLattice {
    let covers = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)];
    let mut leq = vec![vec![false; 6]; 6];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for _ in 0..6 {
        for &(a, b) in &covers {
            for row in leq.iter_mut() {
                if row[a] {
                    row[b] = true;
                }
            }
        }
    }
    let p = FinitePoset::from_fn(6, |a, b| leq[a][b]).unwrap();
    FiniteDistLattice::from_poset(&p).unwrap()
}

/// `f` is a bijection with `a ≤ b ⇔ f(a) ≤ f(b)`.
pub fn is_order_iso(p: &FinitePoset, q: &FinitePoset, f: &[usize]) -> bool {
    let n = p.len();
    n == q.len()
        && f.iter().collect::<BTreeSet<_>>().len() == n
        && (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(f[a], f[b])))
}

// ---------------------------------------------------------------- topology

/// Checks on a finite space given by its open sets.
pub struct Opens {
    pub n: usize,
    pub opens: Vec<Mask>,
}

impl Opens {
    fn full(&self) -> Mask {
        (1u64 << self.n) - 1
    }

    pub fn is_topology(&self) -> bool {
        let set: BTreeSet<Mask> = self.opens.iter().copied().collect();
        set.contains(&0)
            && set.contains(&self.full())
            && self
                .opens
                .iter()
                .all(|&a| self.opens.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))))
    }

    pub fn t0(&self) -> bool {
        (0..self.n).all(|p| {
            (0..self.n).all(|q| {
                p == q || self.opens.iter().any(|&o| has(o, p) != has(o, q))
            })
        })
    }

    fn closure(&self, p: usize) -> Mask {
        let full = self.full();
        self.opens
            .iter()
            .map(|&o| full & !o)
            .filter(|&c| has(c, p))
            .fold(full, |a, c| a & c)
    }

    /// Every irreducible closed set is the closure of a point.
    pub fn quasi_sober(&self) -> bool {
        let full = self.full();
        let closed: Vec<Mask> = self.opens.iter().map(|&o| full & !o).collect();
        closed.iter().all(|&c| {
            let reducible = c == 0
                || closed.iter().any(|&a| {
                    a != c && a & c == a && closed.iter().any(|&b| b != c && b & c == b && a | b == c)
                });
            reducible || (0..self.n).any(|p| self.closure(p) == c)
        })
    }

    /// Compact opens (all opens, in a finite space) form a basis closed
    /// under binary intersection.
    pub fn multiplicative_basis(&self) -> bool {
        let set: BTreeSet<Mask> = self.opens.iter().copied().collect();
        self.opens.iter().all(|&a| self.opens.iter().all(|&b| set.contains(&(a & b))))
    }
}

pub fn bits_to_mask(b: &fixedbitset::FixedBitSet) -> Mask {
    mask_of(b.ones())
}

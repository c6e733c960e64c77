//! Ideals of finite algebras: closure, enumeration, primality, annihilators
//! and the ideal lattice.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::algebra::{Elem, FiniteCbckAlgebra};
use crate::constructions::CbckUnion;
use crate::duality::FiniteDistLattice;
use crate::error::{GuardError, IdealError};

/// Limits for exhaustive ideal enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealGuard {
    pub max_elements: usize,
    pub max_ideals: usize,
}

impl Default for IdealGuard {
    fn default() -> Self {
        IdealGuard {
            max_elements: 20,
            max_ideals: 1 << 12,
        }
    }
}

impl IdealGuard {
    pub fn with_max_elements(max_elements: usize) -> Self {
        IdealGuard {
            max_elements,
            ..Self::default()
        }
    }
}

/// A set of elements known to be an ideal of some algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    bits: FixedBitSet,
}

impl Ideal {
    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<Elem> {
        self.bits.ones().collect()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Proper means not the whole algebra.
    pub fn is_proper(&self) -> bool {
        self.len() < self.bits.len()
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ideal { bits }
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

pub(crate) fn bits_of(n: usize, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(n);
    for e in elems {
        bits.insert(e);
    }
    bits
}

/// How an algebra compares to the two-ideal definition of simplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Simplicity {
    /// The one-element algebra has a single ideal and is not counted as simple.
    Trivial,
    Simple,
    NotSimple,
}

/// Outcome of [`FiniteCbckAlgebra::involutory_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutoryReport {
    pub involutory: bool,
    /// Ideals with `I != I**`, as member lists.
    pub failures: Vec<Vec<Elem>>,
}

impl FiniteCbckAlgebra {
    fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.size())
    }

    /// Checks the ideal conditions, naming the first violation.
    pub fn ideal_violation(&self, set: &FixedBitSet) -> Option<String> {
        if set.len() != self.size() {
            return Some(format!(
                "set has capacity {}, algebra has {} elements",
                set.len(),
                self.size()
            ));
        }
        if !set.contains(0) {
            return Some("does not contain 0".into());
        }
        for y in set.ones() {
            for x in self.elements() {
                if !set.contains(x) && set.contains(self.op(x, y)) {
                    return Some(format!("{x}·{y} and {y} are members but {x} is not"));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        self.ideal_violation(set).is_none()
    }

    /// Validates a member list as an ideal.
    pub fn ideal(&self, members: &[Elem]) -> Result<Ideal, IdealError> {
        if let Some(&bad) = members.iter().find(|&&m| m >= self.size()) {
            return Err(IdealError::NotAnIdeal(format!("{bad} is not an element")));
        }
        let bits = bits_of(self.size(), members.iter().copied());
        match self.ideal_violation(&bits) {
            Some(reason) => Err(IdealError::NotAnIdeal(reason)),
            None => Ok(Ideal { bits }),
        }
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            bits: bits_of(self.size(), [0]),
        }
    }

    pub fn whole_ideal(&self) -> Ideal {
        let mut bits = self.empty_set();
        bits.insert_range(..);
        Ideal { bits }
    }

    /// Least ideal containing `seed`, by fixed-point closure under the
    /// rule "x·y ∈ I and y ∈ I imply x ∈ I".
    pub fn close_to_ideal(&self, seed: &FixedBitSet) -> Ideal {
        let mut bits = seed.clone();
        bits.grow(self.size());
        bits.insert(0);
        loop {
            let mut changed = false;
            for x in self.elements() {
                if bits.contains(x) {
                    continue;
                }
                if bits.ones().any(|y| bits.contains(self.op(x, y))) {
                    bits.insert(x);
                    changed = true;
                }
            }
            if !changed {
                return Ideal { bits };
            }
        }
    }

    /// The ideal `(S]` generated by `generators`.
    pub fn generated_ideal(&self, generators: &[Elem]) -> Ideal {
        self.close_to_ideal(&bits_of(self.size(), generators.iter().copied()))
    }

    /// A shortest sequence `s_1..s_n` from `generators` with
    /// `(((x·s_1)·s_2)···)·s_n = 0`, lexicographically least among the
    /// shortest; `None` when `x` is not in the generated ideal.
    pub fn membership_witness(&self, x: Elem, generators: &[Elem]) -> Option<Vec<Elem>> {
        let mut gens: Vec<Elem> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        // distance to 0 along "multiply on the right by a generator" edges
        let n = self.size();
        let mut dist = vec![usize::MAX; n];
        dist[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(z) = queue.pop_front() {
            for y in self.elements() {
                if dist[y] == usize::MAX && gens.iter().any(|&s| self.op(y, s) == z) {
                    dist[y] = dist[z] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[x] == usize::MAX {
            return None;
        }
        let mut seq = Vec::with_capacity(dist[x]);
        let mut cur = x;
        while cur != 0 {
            let &s = gens
                .iter()
                .find(|&&s| dist[self.op(cur, s)] == dist[cur] - 1)
                .expect("a BFS predecessor exists");
            seq.push(s);
            cur = self.op(cur, s);
        }
        Some(seq)
    }

    /// Evaluates `(((x·s_1)·s_2)···)·s_n`.
    pub fn reduce(&self, x: Elem, seq: &[Elem]) -> Elem {
        seq.iter().fold(x, |acc, &s| self.op(acc, s))
    }

    /// Enumerates every ideal. Ideals are joins of principal ideals, so
    /// closing `I ∪ {x}` from each known ideal reaches all of them.
    pub fn all_ideals(&self, guard: &IdealGuard) -> Result<IdealLattice, IdealError> {
        if self.size() > guard.max_elements {
            return Err(GuardError {
                what: "algebra size for ideal enumeration",
                actual: self.size(),
                limit: guard.max_elements,
            }
            .into());
        }
        let start = self.zero_ideal();
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::from([(start.bits.clone(), ())]);
        let mut found = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(ideal) = queue.pop_front() {
            for x in self.elements() {
                if ideal.contains(x) {
                    continue;
                }
                let mut seed = ideal.bits.clone();
                seed.insert(x);
                let next = self.close_to_ideal(&seed);
                if seen.insert(next.bits.clone(), ()).is_none() {
                    if found.len() >= guard.max_ideals {
                        return Err(GuardError {
                            what: "number of ideals",
                            actual: found.len() + 1,
                            limit: guard.max_ideals,
                        }
                        .into());
                    }
                    found.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(IdealLattice::new(self, found))
    }

    /// Proper, and `x ∧ y ∈ I` forces `x ∈ I` or `y ∈ I`.
    pub fn is_prime(&self, ideal: &Ideal) -> bool {
        assert_eq!(ideal.bits.len(), self.size(), "ideal of another algebra");
        ideal.is_proper()
            && self.elements().all(|x| {
                ideal.contains(x)
                    || self
                        .elements()
                        .all(|y| ideal.contains(y) || !ideal.contains(self.meet(x, y)))
            })
    }

    /// Validates `members` as an ideal and tests primality.
    pub fn is_prime_set(&self, members: &[Elem]) -> Result<bool, IdealError> {
        Ok(self.is_prime(&self.ideal(members)?))
    }

    pub fn prime_ideals(&self, guard: &IdealGuard) -> Result<Vec<Ideal>, IdealError> {
        let lattice = self.all_ideals(guard)?;
        Ok(lattice
            .primes()
            .map(|i| lattice.ideals[i].clone())
            .collect())
    }

    /// The lattice-theoretic notions: irreducible (`I = J ∩ K` forces
    /// `I = J` or `I = K`) and meet-prime (`J ∩ K ⊆ I` forces `J ⊆ I` or
    /// `K ⊆ I`), both read as applying to proper ideals only.
    pub fn irreducible_and_meetprime(&self, ideal: &Ideal, lattice: &IdealLattice) -> (bool, bool) {
        if !ideal.is_proper() {
            return (false, false);
        }
        let all = &lattice.ideals;
        let mut irreducible = true;
        let mut meet_prime = true;
        for j in all {
            for k in all {
                let jk = j.intersection(k);
                if jk == *ideal && j != ideal && k != ideal {
                    irreducible = false;
                }
                if jk.is_subset(ideal) && !j.is_subset(ideal) && !k.is_subset(ideal) {
                    meet_prime = false;
                }
            }
        }
        (irreducible, meet_prime)
    }

    /// `S* = {a : a ∧ s = 0 for all s ∈ S}`.
    pub fn annihilator(&self, set: &[Elem]) -> Ideal {
        let bits = bits_of(
            self.size(),
            self.elements()
                .filter(|&a| set.iter().all(|&s| self.meet(a, s) == 0)),
        );
        debug_assert!(self.is_ideal(&bits));
        Ideal { bits }
    }

    pub fn annihilator_of(&self, ideal: &Ideal) -> Ideal {
        self.annihilator(&ideal.members())
    }

    /// Compares every ideal with its double annihilator.
    pub fn involutory_report(&self, guard: &IdealGuard) -> Result<InvolutoryReport, IdealError> {
        let lattice = self.all_ideals(guard)?;
        let failures: Vec<Vec<Elem>> = lattice
            .ideals
            .iter()
            .filter(|i| self.annihilator_of(&self.annihilator_of(i)) != **i)
            .map(Ideal::members)
            .collect();
        Ok(InvolutoryReport {
            involutory: failures.is_empty(),
            failures,
        })
    }

    pub fn is_involutory(&self, guard: &IdealGuard) -> Result<bool, IdealError> {
        Ok(self.involutory_report(guard)?.involutory)
    }

    /// Every sequence `x·yⁿ` stabilises within `|A|` steps.
    pub fn satisfies_dcc(&self) -> bool {
        let n = self.size();
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.power(x, y, n) == self.op(self.power(x, y, n), y))
        })
    }

    pub fn simplicity(&self, guard: &IdealGuard) -> Result<Simplicity, IdealError> {
        if self.is_trivial() {
            return Ok(Simplicity::Trivial);
        }
        // simple iff every non-zero element generates the whole algebra
        let simple = self
            .elements()
            .skip(1)
            .all(|y| self.generated_ideal(&[y]).len() == self.size());
        let out = if simple {
            Simplicity::Simple
        } else {
            Simplicity::NotSimple
        };
        debug_assert!(
            self.size() > guard.max_elements
                || (self.all_ideals(guard).map(|l| l.len() == 2).unwrap_or(simple)) == simple
        );
        Ok(out)
    }

    pub fn is_simple(&self, guard: &IdealGuard) -> Result<bool, IdealError> {
        Ok(self.simplicity(guard)? == Simplicity::Simple)
    }

    /// Chain criterion: for all `x` and all `y != 0` some `x·yⁿ = 0`.
    pub fn power_criterion(&self) -> bool {
        let n = self.size();
        self.elements()
            .all(|x| self.elements().skip(1).all(|y| self.power(x, y, n) == 0))
    }

    /// Classes of `θ_I`: `x ~ y` iff `x·y ∈ I` and `y·x ∈ I`, each class
    /// sorted, classes ordered by least member (the class of `0` is first).
    pub fn congruence_from_ideal(&self, ideal: &Ideal) -> Result<Vec<Vec<Elem>>, IdealError> {
        let related =
            |x: Elem, y: Elem| ideal.contains(self.op(x, y)) && ideal.contains(self.op(y, x));
        for x in self.elements() {
            for y in self.elements().filter(|&y| related(x, y)) {
                if let Some(z) = self.elements().find(|&z| related(y, z) && !related(x, z)) {
                    return Err(IdealError::NotTransitive(x, y, z));
                }
            }
        }
        let mut class_of = vec![usize::MAX; self.size()];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let class: Vec<Elem> = self.elements().filter(|&y| related(x, y)).collect();
            for &y in &class {
                class_of[y] = classes.len();
            }
            classes.push(class);
        }
        Ok(classes)
    }
}

/// All ideals of a finite algebra ordered by inclusion, sorted by size and
/// then by member list; index `0` is `{0}` and the last index is the
/// whole algebra.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    prime: Vec<bool>,
    maximal: Vec<bool>,
}

impl IdealLattice {
    fn new(alg: &FiniteCbckAlgebra, mut ideals: Vec<Ideal>) -> Self {
        ideals.sort_by_cached_key(|i| (i.len(), i.members()));
        let index = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.bits.clone(), k))
            .collect();
        let prime = ideals.iter().map(|i| alg.is_prime(i)).collect();
        let maximal = ideals
            .iter()
            .map(|i| {
                i.is_proper()
                    && ideals
                        .iter()
                        .all(|j| !j.is_proper() || j == i || !i.is_subset(j))
            })
            .collect();
        IdealLattice {
            ideals,
            index,
            prime,
            maximal,
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.index.get(&ideal.bits).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.prime[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.prime[i])
    }

    pub fn maximals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.maximal[i])
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[self.ideals[i].intersection(&self.ideals[j]).bits()]
    }

    /// Smallest ideal containing both; the first such in size order.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let start = i.max(j);
        (start..self.len())
            .find(|&k| self.leq(i, k) && self.leq(j, k))
            .expect("the whole algebra contains every ideal")
    }

    /// The lattice `id(A)` with inclusion, intersection and ideal join.
    pub fn to_lattice(&self) -> FiniteDistLattice {
        let n = self.len();
        let mut leq = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(i, j);
                meet[i * n + j] = self.meet(i, j);
                join[i * n + j] = self.join(i, j);
            }
        }
        FiniteDistLattice::from_parts(n, leq, meet, join)
    }
}

impl CbckUnion {
    /// Primes of the union read off blockwise: a prime `Q` of one block
    /// together with every other block in full.
    pub fn blockwise_primes(&self, guard: &IdealGuard) -> Result<Vec<Ideal>, IdealError> {
        let n = self.algebra().size();
        let mut out = Vec::new();
        for (mu, comp) in self.components().iter().enumerate() {
            for q in comp.prime_ideals(guard)? {
                let members = (0..n).filter(|&e| match self.block_of(e) {
                    None => true,
                    Some(b) if b == mu => q.contains(self.provenance()[e].1),
                    Some(_) => true,
                });
                out.push(Ideal {
                    bits: bits_of(n, members),
                });
            }
        }
        out.sort_by_cached_key(|i| (i.len(), i.members()));
        Ok(out)
    }
}

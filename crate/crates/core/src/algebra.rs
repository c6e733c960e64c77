//! Finite commutative BCK-algebras given by their operation table.
//!
//! Elements are the indices `0..n` and index `0` is always the constant `0`.
//! The derived order is `x <= y` iff `x · y = 0`, the meet is
//! `x ∧ y = y · (y · x)`, and bounded algebras carry the join
//! `x ∨ y = 1 · ((1 · x) ∧ (1 · y))`.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, StructuralError};

/// An element of a finite algebra, as an index into its table.
pub type Elem = usize;

/// The four defining identities of a commutative BCK-algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    /// `(x·y)·z = (x·z)·y`
    #[serde(rename = "cBCK1")]
    Exchange,
    /// `x·(x·y) = y·(y·x)`
    #[serde(rename = "cBCK2")]
    Commutativity,
    /// `x·x = 0`
    #[serde(rename = "cBCK3")]
    SelfCancel,
    /// `x·0 = x`
    #[serde(rename = "cBCK4")]
    RightZero,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Exchange,
        Axiom::Commutativity,
        Axiom::SelfCancel,
        Axiom::RightZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Exchange => "cBCK1",
            Axiom::Commutativity => "cBCK2",
            Axiom::SelfCancel => "cBCK3",
            Axiom::RightZero => "cBCK4",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First counterexample found for one axiom. `witness` holds the variables
/// the axiom quantifies over, in order (`x`, then `y`, then `z`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

/// Outcome of [`check_axioms`]: every failing axiom with one witness each.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.failures.iter().all(|f| f.axiom != axiom)
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("all axioms hold");
        }
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|fail| format!("{} fails at {:?}", fail.axiom, fail.witness))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

fn validate_shape(table: &[Vec<usize>]) -> Result<usize, StructuralError> {
    let n = table.len();
    if n == 0 {
        return Err(StructuralError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(StructuralError::RaggedRow {
                row,
                len: r.len(),
                expected: n,
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(StructuralError::EntryOutOfRange {
                    row,
                    col,
                    value,
                    size: n,
                });
            }
        }
    }
    Ok(n)
}

/// Exhaustively checks (cBCK1)–(cBCK4) on a candidate table with `0` as the
/// constant. Cost is O(n³).
pub fn check_axioms(table: &[Vec<usize>]) -> Result<AxiomReport, StructuralError> {
    let n = validate_shape(table)?;
    let op = |x: usize, y: usize| table[x][y];
    let mut report = AxiomReport::default();

    'exchange: for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(xy, z) != op(op(x, z), y) {
                    report.failures.push(AxiomFailure {
                        axiom: Axiom::Exchange,
                        witness: vec![x, y, z],
                    });
                    break 'exchange;
                }
            }
        }
    }
    'commute: for x in 0..n {
        for y in 0..n {
            if op(x, op(x, y)) != op(y, op(y, x)) {
                report.failures.push(AxiomFailure {
                    axiom: Axiom::Commutativity,
                    witness: vec![x, y],
                });
                break 'commute;
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| op(x, x) != 0) {
        report.failures.push(AxiomFailure {
            axiom: Axiom::SelfCancel,
            witness: vec![x],
        });
    }
    if let Some(x) = (0..n).find(|&x| op(x, 0) != x) {
        report.failures.push(AxiomFailure {
            axiom: Axiom::RightZero,
            witness: vec![x],
        });
    }
    Ok(report)
}

/// A finite cBCK-algebra. Immutable once built; the top element is
/// precomputed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCbckAlgebra {
    size: usize,
    table: Vec<Elem>,
    top: Option<Elem>,
}

impl FiniteCbckAlgebra {
    /// Builds an algebra from a table, rejecting malformed tables and axiom failures.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let report = check_axioms(table)?;
        if !report.passed() {
            return Err(AlgebraError::Axioms(report));
        }
        Ok(Self::from_verified(
            table.len(),
            table.iter().flatten().copied().collect(),
        ))
    }

    /// Same as [`from_table`](Self::from_table) but with a flat row-major table.
    pub fn from_flat(size: usize, flat: Vec<Elem>) -> Result<Self, AlgebraError> {
        if flat.len() != size * size {
            return Err(StructuralError::SizeMismatch {
                declared: size,
                rows: flat.len() / size.max(1),
            }
            .into());
        }
        let rows: Vec<Vec<usize>> = flat.chunks(size.max(1)).map(<[_]>::to_vec).collect();
        Self::from_table(&rows)
    }

    /// Caller guarantees the axioms hold (used by constructions whose output
    /// is a cBCK-algebra by construction; debug builds re-check).
    pub(crate) fn from_verified(size: usize, table: Vec<Elem>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        let top = (0..size).find(|&t| (0..size).all(|x| table[x * size + t] == 0));
        let alg = FiniteCbckAlgebra { size, table, top };
        debug_assert!(
            size > 64 || check_axioms(&alg.rows()).map(|r| r.passed()).unwrap_or(false),
            "construction produced a table violating the axioms"
        );
        alg
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        Self::from_verified(1, vec![0])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    /// `x · y`.
    #[inline]
    pub fn op(&self, x: Elem, y: Elem) -> Elem {
        assert!(x < self.size && y < self.size, "element index out of range");
        self.table[x * self.size + y]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.size).map(<[_]>::to_vec).collect()
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.op(x, y) == 0
    }

    /// `y · (y · x)`, the greatest lower bound.
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.op(y, self.op(y, x))
    }

    /// The top element, if the algebra is bounded.
    pub fn top(&self) -> Option<Elem> {
        self.top
    }

    pub fn is_bounded(&self) -> Option<Elem> {
        self.top
    }

    /// Least upper bound in a bounded algebra.
    pub fn bounded_join(&self, x: Elem, y: Elem) -> Result<Elem, AlgebraError> {
        let one = self.top.ok_or(AlgebraError::Unbounded)?;
        Ok(self.op(one, self.meet(self.op(one, x), self.op(one, y))))
    }

    /// `x · y^n`.
    pub fn power(&self, x: Elem, y: Elem, n: usize) -> Elem {
        let mut acc = x;
        for _ in 0..n {
            let next = self.op(acc, y);
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// Checks the identity `x·yⁿ = x·yⁿ⁺¹` on all pairs.
    pub fn satisfies_en(&self, n: usize) -> EnReport {
        assert!(n >= 1, "(E_n) is defined for n >= 1");
        let mut witness = None;
        'outer: for x in self.elements() {
            for y in self.elements() {
                let a = self.power(x, y, n);
                if a != self.op(a, y) {
                    witness = Some((x, y));
                    break 'outer;
                }
            }
        }
        let implicative = (n == 1).then(|| {
            self.elements()
                .all(|x| self.elements().all(|y| self.op(x, self.op(y, x)) == x))
        });
        EnReport {
            n,
            holds: witness.is_none(),
            witness,
            implicative,
        }
    }

    /// Every pair has a common upper bound.
    pub fn is_directed(&self) -> bool {
        if self.top.is_some() {
            return true;
        }
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.elements()
                    .any(|z| self.leq(x, z) && self.leq(y, z))
            })
        })
    }

    /// The derived order is total.
    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.leq(x, y) || self.leq(y, x)))
    }
}

/// Result of [`FiniteCbckAlgebra::satisfies_en`]. For `n = 1` the implicative
/// identity `x·(y·x) = x` is reported as well.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnReport {
    pub n: usize,
    pub holds: bool,
    pub witness: Option<(Elem, Elem)>,
    pub implicative: Option<bool>,
}

/// A map between finite algebras, checked against `h(x·y) = h(x)·h(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BckHomomorphism {
    source: FiniteCbckAlgebra,
    target: FiniteCbckAlgebra,
    map: Vec<Elem>,
}

impl BckHomomorphism {
    /// Validates only the shape of the map; use [`counterexample`](Self::counterexample)
    /// to check the homomorphism identity.
    pub fn new(
        source: FiniteCbckAlgebra,
        target: FiniteCbckAlgebra,
        map: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        if map.len() != source.size() {
            return Err(AlgebraError::MapLength {
                len: map.len(),
                expected: source.size(),
            });
        }
        if let Some((elem, &image)) = map.iter().enumerate().find(|(_, &m)| m >= target.size()) {
            return Err(AlgebraError::MapOutOfRange {
                elem,
                image,
                size: target.size(),
            });
        }
        Ok(BckHomomorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(alg: &FiniteCbckAlgebra) -> Self {
        BckHomomorphism {
            source: alg.clone(),
            target: alg.clone(),
            map: alg.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteCbckAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FiniteCbckAlgebra {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// First pair `(x, y)` with `h(x·y) != h(x)·h(y)`.
    pub fn counterexample(&self) -> Option<(Elem, Elem)> {
        let (a, b) = (&self.source, &self.target);
        a.elements()
            .flat_map(|x| a.elements().map(move |y| (x, y)))
            .find(|&(x, y)| self.map[a.op(x, y)] != b.op(self.map[x], self.map[y]))
    }

    pub fn is_homomorphism(&self) -> bool {
        self.counterexample().is_none()
    }
}

/// Checks the homomorphism identity, returning the first counterexample pair on failure.
pub fn check_homomorphism(h: &BckHomomorphism) -> Result<(), (Elem, Elem)> {
    match h.counterexample() {
        None => Ok(()),
        Some(pair) => Err(pair),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn truncated(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|x| (0..n).map(|y| x.saturating_sub(y)).collect())
            .collect()
    }

    fn c(k: usize) -> FiniteCbckAlgebra {
        FiniteCbckAlgebra::from_table(&truncated(k + 1)).unwrap()
    }

    #[test]
    fn truncated_subtraction_passes() {
        assert!(check_axioms(&truncated(3)).unwrap().passed());
        assert!(check_axioms(&[vec![0]]).unwrap().passed());
    }

    #[test]
    fn broken_table_fails_commutativity_on_one_two() {
        let mut t = truncated(3);
        t[2][1] = 2;
        let report = check_axioms(&t).unwrap();
        let fail = report.failure(Axiom::Commutativity).expect("cBCK2 must fail");
        let mut pair = fail.witness.clone();
        pair.sort();
        assert_eq!(pair, vec![1, 2]);
        // 1·(1·2) = 1 but 2·(2·1) = 0
        assert_eq!(t[1][t[1][2]], 1);
        assert_eq!(t[2][t[2][1]], 0);
        assert!(matches!(
            FiniteCbckAlgebra::from_table(&t),
            Err(AlgebraError::Axioms(_))
        ));
    }

    #[test]
    fn all_failures_are_reported() {
        // x·y = x everywhere breaks cBCK3 (and nothing forces the rest)
        let t = vec![vec![0, 0], vec![1, 1]];
        let report = check_axioms(&t).unwrap();
        assert!(!report.holds(Axiom::SelfCancel));
        assert!(report.holds(Axiom::RightZero));
        let t = vec![vec![1, 0], vec![0, 1]];
        let report = check_axioms(&t).unwrap();
        assert!(!report.holds(Axiom::SelfCancel));
        assert!(!report.holds(Axiom::RightZero));
    }

    #[test]
    fn structural_errors_are_distinct() {
        assert_eq!(check_axioms(&[]), Err(StructuralError::Empty));
        assert!(matches!(
            check_axioms(&[vec![0, 0], vec![0]]),
            Err(StructuralError::RaggedRow { row: 1, .. })
        ));
        assert!(matches!(
            check_axioms(&[vec![0, 5], vec![1, 0]]),
            Err(StructuralError::EntryOutOfRange { value: 5, .. })
        ));
    }

    #[test]
    fn order_meet_and_top() {
        let c2 = c(2);
        assert!(c2.leq(1, 2));
        assert!(!c2.leq(2, 1));
        for x in c2.elements() {
            assert!(c2.leq(0, x));
            assert!(c2.leq(x, x));
            assert_eq!(c2.meet(x, 0), 0);
        }
        let c3 = c(3);
        assert_eq!(c3.meet(2, 3), 2);
        assert_eq!(c3.top(), Some(3));
        assert_eq!(FiniteCbckAlgebra::trivial().top(), Some(0));
    }

    #[test]
    fn bounded_join_on_chain() {
        let c2 = c(2);
        assert_eq!(c2.bounded_join(1, 2), Ok(2));
        for x in c2.elements() {
            assert_eq!(c2.bounded_join(x, 0), Ok(x));
            assert_eq!(c2.bounded_join(x, 2), Ok(2));
        }
    }

    #[test]
    fn unbounded_join_is_an_error() {
        // two atoms glued at 0
        let t = vec![vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 0]];
        let u = FiniteCbckAlgebra::from_table(&t).unwrap();
        assert_eq!(u.top(), None);
        assert_eq!(u.bounded_join(1, 2), Err(AlgebraError::Unbounded));
        assert!(!u.is_directed());
        assert!(!u.is_chain());
        assert_eq!(u.meet(1, 2), 0);
    }

    #[test]
    fn powers() {
        let c3 = c(3);
        assert_eq!(c3.power(3, 1, 3), 0);
        assert_eq!(c3.power(3, 1, 1), 2);
        for x in c3.elements() {
            for n in 0..5 {
                assert_eq!(c3.power(x, 0, n), x);
            }
            assert_eq!(c3.power(x, 2, 0), x);
        }
    }

    #[test]
    fn en_identities() {
        let c1 = c(1);
        let r = c1.satisfies_en(1);
        assert!(r.holds);
        assert_eq!(r.implicative, Some(true));
        let c3 = c(3);
        let r = c3.satisfies_en(1);
        assert!(!r.holds);
        assert_eq!(r.implicative, Some(false));
        let (x, y) = r.witness.unwrap();
        assert_ne!(c3.power(x, y, 1), c3.power(x, y, 2));
        assert_eq!(c3.op(3, 1), 2);
        assert_eq!(c3.power(3, 1, 2), 1);
        assert!(c3.satisfies_en(c3.size()).holds);
    }

    #[test]
    fn chains_are_directed() {
        for k in 1..5 {
            assert!(c(k).is_chain());
            assert!(c(k).is_directed());
        }
    }

    #[test]
    fn homomorphism_checks() {
        let c2 = c(2);
        let c1 = c(1);
        assert!(BckHomomorphism::identity(&c2).is_homomorphism());
        let zero = BckHomomorphism::new(c2.clone(), c2.clone(), vec![0, 0, 0]).unwrap();
        assert!(zero.is_homomorphism());
        let bad = BckHomomorphism::new(c2.clone(), c1.clone(), vec![0, 1, 1]).unwrap();
        let (x, y) = bad.counterexample().unwrap();
        assert_ne!(bad.apply(c2.op(x, y)), c1.op(bad.apply(x), bad.apply(y)));
        assert!(check_homomorphism(&bad).is_err());
        // (2,1): h(2·1) = h(1) = 1 but h(2)·h(1) = 0
        assert_eq!(bad.apply(c2.op(2, 1)), 1);
        assert_eq!(c1.op(bad.apply(2), bad.apply(1)), 0);
        assert!(matches!(
            BckHomomorphism::new(c2.clone(), c1.clone(), vec![0, 1]),
            Err(AlgebraError::MapLength { .. })
        ));
        assert!(matches!(
            BckHomomorphism::new(c2, c1, vec![0, 1, 2]),
            Err(AlgebraError::MapOutOfRange { .. })
        ));
    }
}

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::duality::FinitePoset;
use crate::error::{GuardError, OrderError, SpectrumError};

/// Open families larger than this are refused by `disjoint_union_space`.
pub const MAX_OPENS: usize = 1 << 14;

pub(crate) fn set_of(n: usize, pts: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.extend(pts);
    s
}

fn sort_family(family: &mut Vec<FixedBitSet>) {
    let mut seen = HashSet::new();
    family.retain(|s| seen.insert(s.clone()));
    family.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
}

/// A finite topological space given by its full family of open sets and a
/// distinguished basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    opens: Vec<FixedBitSet>,
    basis: Vec<FixedBitSet>,
}

impl FiniteSpace {
    /// Deduplicates and sorts both families. Sets must be over `labels.len()` points.
    pub fn new(labels: Vec<String>, mut opens: Vec<FixedBitSet>, mut basis: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        for s in opens.iter_mut().chain(basis.iter_mut()) {
            assert!(s.ones().all(|p| p < n), "open set mentions a missing point");
            s.grow(n);
        }
        sort_family(&mut opens);
        sort_family(&mut basis);
        FiniteSpace {
            labels,
            opens,
            basis,
        }
    }

    /// Space on points `0..n` whose basis is the whole open family.
    pub fn from_opens(n: usize, opens: &[Vec<usize>]) -> Self {
        let fam: Vec<FixedBitSet> = opens.iter().map(|o| set_of(n, o.iter().copied())).collect();
        Self::new((0..n).map(|p| p.to_string()).collect(), fam.clone(), fam)
    }

    pub fn discrete(n: usize) -> Self {
        let opens: Vec<Vec<usize>> = (0u64..1 << n)
            .map(|m| (0..n).filter(|&p| m >> p & 1 == 1).collect())
            .collect();
        Self::from_opens(n, &opens)
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_opens(n, &[vec![], (0..n).collect()])
    }

    /// Points `a = 0`, `b = 1` with opens `∅, {b}, {a, b}`.
    pub fn sierpinski() -> Self {
        Self::from_opens(2, &[vec![], vec![1], vec![0, 1]])
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), vec![FixedBitSet::new()], vec![FixedBitSet::new()])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[FixedBitSet] {
        &self.opens
    }

    pub fn basis(&self) -> &[FixedBitSet] {
        &self.basis
    }

    pub fn full_set(&self) -> FixedBitSet {
        set_of(self.len(), 0..self.len())
    }

    fn complement(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut c = self.full_set();
        c.difference_with(s);
        c
    }

    pub fn is_open(&self, s: &FixedBitSet) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: &FixedBitSet) -> bool {
        self.is_open(&self.complement(s))
    }

    pub fn closed_sets(&self) -> Vec<FixedBitSet> {
        self.opens.iter().map(|o| self.complement(o)).collect()
    }

    /// Smallest closed set containing `p`.
    pub fn closure_of_point(&self, p: usize) -> FixedBitSet {
        let mut cl = self.full_set();
        for c in self.closed_sets() {
            if c.contains(p) {
                cl.intersect_with(&c);
            }
        }
        cl
    }

    /// `∅` open and the family closed under pairwise union and intersection.
    pub fn is_topology_on_opens(&self) -> bool {
        let family: HashSet<&FixedBitSet> = self.opens.iter().collect();
        if !family.contains(&FixedBitSet::with_capacity(self.len())) {
            return false;
        }
        self.opens.iter().all(|a| {
            self.opens.iter().all(|b| {
                let mut u = a.clone();
                u.union_with(b);
                let mut i = a.clone();
                i.intersect_with(b);
                family.contains(&u) && family.contains(&i)
            })
        })
    }

    /// Each open is the union of the basic opens it contains.
    pub fn basis_generates(&self) -> bool {
        self.basis.iter().all(|b| self.is_open(b))
            && self.opens.iter().all(|o| {
                let mut u = FixedBitSet::with_capacity(self.len());
                for b in &self.basis {
                    if b.is_subset(o) {
                        u.union_with(b);
                    }
                }
                &u == o
            })
    }

    /// Every pair of distinct points is told apart by some open.
    pub fn check_t0(&self) -> bool {
        (0..self.len()).all(|p| {
            (0..p).all(|q| self.opens.iter().any(|o| o.contains(p) != o.contains(q)))
        })
    }

    /// Non-empty closed sets that are not a union of two proper closed subsets.
    pub fn irreducible_closed_sets(&self) -> Vec<FixedBitSet> {
        let closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.closure_of_point(p)).collect();
        let closed = self.closed_sets();
        closed
            .iter()
            .filter(|c| c.count_ones(..) > 0 && !self.is_reducible(c, &closed, &closures))
            .cloned()
            .collect()
    }

    /// `C = A ∪ B` with both proper closed iff some proper closed `A ⊊ C`
    /// leaves a remainder whose closure is still proper.
    fn is_reducible(&self, c: &FixedBitSet, closed: &[FixedBitSet], closures: &[FixedBitSet]) -> bool {
        closed.iter().any(|a| {
            a != c && a.is_subset(c) && {
                let mut cl = FixedBitSet::with_capacity(self.len());
                for p in c.difference(a) {
                    cl.union_with(&closures[p]);
                }
                &cl != c
            }
        })
    }

    /// Every irreducible closed set is the closure of a point.
    pub fn check_quasi_sober(&self) -> bool {
        let closures: Vec<FixedBitSet> = (0..self.len()).map(|p| self.closure_of_point(p)).collect();
        let generic: HashSet<&FixedBitSet> = closures.iter().collect();
        let closed = self.closed_sets();
        closed.iter().all(|c| {
            c.count_ones(..) == 0 || generic.contains(c) || self.is_reducible(c, &closed, &closures)
        })
    }

    /// Sober: quasi-sober with unique generic points, i.e. also T0.
    pub fn check_sober(&self) -> bool {
        self.check_quasi_sober() && self.check_t0()
    }

    /// Compact opens. A finite family admits only finite covers, so every
    /// open qualifies.
    pub fn compact_opens(&self) -> Vec<FixedBitSet> {
        self.opens.clone()
    }

    /// The compact opens form a basis closed under finite intersection, and
    /// the distinguished basis generates the topology.
    pub fn check_multiplicative_basis(&self) -> bool {
        let compact: HashSet<FixedBitSet> = self.compact_opens().into_iter().collect();
        let closed_under_meet = compact.iter().all(|a| {
            compact.iter().all(|b| {
                let mut i = a.clone();
                i.intersect_with(b);
                compact.contains(&i)
            })
        });
        let covers = self.opens.iter().all(|o| {
            let mut u = FixedBitSet::with_capacity(self.len());
            for k in compact.iter().filter(|k| k.is_subset(o)) {
                u.union_with(k);
            }
            &u == o
        });
        closed_under_meet && covers && self.basis_generates()
    }

    pub fn check_compact(&self) -> bool {
        self.is_open(&self.full_set())
    }

    /// Hochster's H1–H4.
    pub fn check_spectral(&self) -> bool {
        self.check_t0()
            && self.check_quasi_sober()
            && self.check_multiplicative_basis()
            && self.check_compact()
    }

    /// T0, quasi-sober, and a multiplicative basis of compact opens.
    pub fn check_generalized_spectral(&self) -> bool {
        self.check_t0() && self.check_quasi_sober() && self.check_multiplicative_basis()
    }

    /// Descending chains of closed sets stabilise; checked as "every open is
    /// compact".
    pub fn check_noetherian(&self) -> bool {
        self.compact_opens().len() == self.opens.len()
    }

    /// `x ≤ y` iff `y ∈ cl{x}`. Fails unless the space is T0.
    pub fn specialization_order(&self) -> Result<FinitePoset, OrderError> {
        let cl: Vec<FixedBitSet> = (0..self.len()).map(|p| self.closure_of_point(p)).collect();
        FinitePoset::from_fn(self.len(), |x, y| cl[x].contains(y))
    }

    /// The specialization preorder as a relation matrix, T0 or not.
    pub fn specialization_preorder(&self) -> Vec<Vec<bool>> {
        let cl: Vec<FixedBitSet> = (0..self.len()).map(|p| self.closure_of_point(p)).collect();
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| cl[x].contains(y)).collect())
            .collect()
    }

    pub fn closed_points(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&p| self.closure_of_point(p).count_ones(..) == 1)
            .collect()
    }

    /// The subspace topology on `points` (renumbered in the given order).
    pub fn subspace(&self, points: &[usize]) -> FiniteSpace {
        let restrict = |s: &FixedBitSet| {
            set_of(
                points.len(),
                points.iter().enumerate().filter(|(_, &p)| s.contains(p)).map(|(i, _)| i),
            )
        };
        FiniteSpace::new(
            points.iter().map(|&p| self.labels[p].clone()).collect(),
            self.opens.iter().map(restrict).collect(),
            self.basis.iter().map(restrict).collect(),
        )
    }

    /// Closed points as a subspace.
    pub fn maximal_spectrum(&self) -> FiniteSpace {
        self.subspace(&self.closed_points())
    }

    /// Distinct points have disjoint open neighbourhoods.
    pub fn check_hausdorff(&self) -> bool {
        (0..self.len()).all(|p| {
            (0..p).all(|q| {
                self.opens.iter().filter(|u| u.contains(p)).any(|u| {
                    self.opens
                        .iter()
                        .filter(|v| v.contains(q))
                        .any(|v| u.is_disjoint(v))
                })
            })
        })
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|p| self.is_open(&set_of(self.len(), [p])))
    }

    /// Compact, and whenever `x ≰ y` some clopen up-set contains `x` but not `y`.
    pub fn check_priestley(&self, order: &FinitePoset) -> Result<bool, SpectrumError> {
        if order.len() != self.len() {
            return Err(SpectrumError::OrderMismatch {
                order: order.len(),
                points: self.len(),
            });
        }
        if !self.check_compact() {
            return Ok(false);
        }
        let clopen_ups: Vec<&FixedBitSet> = self
            .opens
            .iter()
            .filter(|u| self.is_closed(u) && order.is_up_set(u))
            .collect();
        Ok((0..self.len()).all(|x| {
            (0..self.len()).all(|y| {
                order.leq(x, y) || clopen_ups.iter().any(|u| u.contains(x) && !u.contains(y))
            })
        }))
    }

    pub fn to_report(&self) -> SpaceReport {
        let list = |f: &[FixedBitSet]| f.iter().map(|s| s.ones().collect()).collect();
        SpaceReport {
            points: self.labels.clone(),
            opens: list(&self.opens),
            basis: list(&self.basis),
        }
    }
}

/// JSON shape of a space: point labels, sorted opens and basis.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceReport {
    pub points: Vec<String>,
    pub opens: Vec<Vec<usize>>,
    pub basis: Vec<Vec<usize>>,
}

/// Coproduct: points concatenated, opens are unions of one open per component.
pub fn disjoint_union_space(spaces: &[FiniteSpace]) -> Result<FiniteSpace, SpectrumError> {
    let total: usize = spaces.iter().map(FiniteSpace::len).sum();
    let count = spaces
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.opens.len()))
        .unwrap_or(usize::MAX);
    if count > MAX_OPENS {
        return Err(GuardError {
            what: "open sets of a disjoint union",
            actual: count,
            limit: MAX_OPENS,
        }
        .into());
    }
    let mut labels = Vec::with_capacity(total);
    let mut offsets = Vec::with_capacity(spaces.len());
    for (i, s) in spaces.iter().enumerate() {
        offsets.push(labels.len());
        labels.extend(s.labels.iter().map(|l| format!("{i}:{l}")));
    }
    let shift = |i: usize, s: &FixedBitSet| set_of(total, s.ones().map(|p| p + offsets[i]));
    let mut opens = vec![FixedBitSet::with_capacity(total)];
    for (i, s) in spaces.iter().enumerate() {
        let mut next = Vec::with_capacity(opens.len() * s.opens.len());
        for acc in &opens {
            for o in &s.opens {
                let mut u = acc.clone();
                u.union_with(&shift(i, o));
                next.push(u);
            }
        }
        opens = next;
    }
    let mut basis = vec![FixedBitSet::with_capacity(total)];
    for (i, s) in spaces.iter().enumerate() {
        basis.extend(s.basis.iter().map(|b| shift(i, b)));
    }
    Ok(FiniteSpace::new(labels, opens, basis))
}

fn point_invariants(s: &FiniteSpace) -> (Vec<Vec<bool>>, Vec<[usize; 3]>) {
    let pre = s.specialization_preorder();
    let n = s.len();
    let inv = (0..n)
        .map(|p| {
            [
                s.opens.iter().filter(|o| o.contains(p)).count(),
                (0..n).filter(|&q| pre[q][p]).count(),
                (0..n).filter(|&q| pre[p][q]).count(),
            ]
        })
        .collect();
    (pre, inv)
}

/// A bijection `f` (point `p` goes to `f[p]`) carrying opens exactly onto
/// opens. A finite topology is determined by its specialization preorder,
/// so the search matches preorders and then confirms the open families.
pub fn homeomorphic(s1: &FiniteSpace, s2: &FiniteSpace) -> Option<Vec<usize>> {
    let n = s1.len();
    if n != s2.len() || s1.opens.len() != s2.opens.len() {
        return None;
    }
    let (pre1, inv1) = point_invariants(s1);
    let (pre2, inv2) = point_invariants(s2);
    let mut a = inv1.clone();
    let mut b = inv2.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        p: usize,
        pre1: &[Vec<bool>],
        pre2: &[Vec<bool>],
        inv1: &[[usize; 3]],
        inv2: &[[usize; 3]],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if p == image.len() {
            return true;
        }
        for q in 0..image.len() {
            if used[q] || inv1[p] != inv2[q] {
                continue;
            }
            if (0..p).any(|r| pre1[p][r] != pre2[q][image[r]] || pre1[r][p] != pre2[image[r]][q]) {
                continue;
            }
            image[p] = q;
            used[q] = true;
            if go(p + 1, pre1, pre2, inv1, inv2, image, used) {
                return true;
            }
            used[q] = false;
        }
        false
    }
    if !go(0, &pre1, &pre2, &inv1, &inv2, &mut image, &mut used) {
        return None;
    }
    let opens2: HashSet<&FixedBitSet> = s2.opens.iter().collect();
    let carried = s1
        .opens
        .iter()
        .all(|o| opens2.contains(&set_of(n, o.ones().map(|p| image[p]))));
    debug_assert!(carried, "preorder isomorphism of finite spaces is a homeomorphism");
    carried.then_some(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_spaces() {
        let d = FiniteSpace::discrete(2);
        assert_eq!(d.opens().len(), 4);
        assert!(d.check_spectral() && d.check_hausdorff() && d.is_discrete());
        let i = FiniteSpace::indiscrete(2);
        assert!(!i.check_t0());
        assert!(i.specialization_order().is_err());
        let s = FiniteSpace::sierpinski();
        assert!(s.is_topology_on_opens());
        assert!(s.check_spectral());
        assert!(!s.check_hausdorff());
        assert_eq!(s.closed_points(), vec![0]);
    }

    #[test]
    fn sierpinski_is_not_priestley() {
        let s = FiniteSpace::sierpinski();
        let order = s.specialization_order().unwrap();
        // b specialises to a: a lies in the closure of b
        assert!(order.leq(1, 0));
        assert!(!s.check_priestley(&order).unwrap());
        let d = FiniteSpace::discrete(3);
        assert!(d.check_priestley(&FinitePoset::antichain(3)).unwrap());
        assert!(d.check_priestley(&FinitePoset::antichain(2)).is_err());
    }

    #[test]
    fn empty_space_conventions() {
        let e = FiniteSpace::empty();
        assert!(e.check_t0() && e.check_quasi_sober() && e.check_spectral());
        assert!(e.check_noetherian() && e.check_hausdorff());
        assert!(e.check_priestley(&FinitePoset::antichain(0)).unwrap());
    }

    #[test]
    fn homeomorphism_search() {
        assert!(homeomorphic(&FiniteSpace::discrete(2), &FiniteSpace::sierpinski()).is_none());
        assert!(homeomorphic(&FiniteSpace::discrete(1), &FiniteSpace::discrete(1)).is_some());
        let flipped = FiniteSpace::from_opens(2, &[vec![], vec![0], vec![0, 1]]);
        assert_eq!(homeomorphic(&FiniteSpace::sierpinski(), &flipped), Some(vec![1, 0]));
    }

    #[test]
    fn coproducts() {
        let u = disjoint_union_space(&[FiniteSpace::discrete(1), FiniteSpace::sierpinski()]).unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(u.opens().len(), 2 * 3);
        assert!(u.is_topology_on_opens());
        assert!(u.basis_generates());
        assert!(u.check_t0());
    }
}

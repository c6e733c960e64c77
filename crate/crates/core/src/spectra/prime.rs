use fixedbitset::FixedBitSet;

use super::space::{disjoint_union_space, homeomorphic, set_of, FiniteSpace};
use crate::algebra::{BckHomomorphism, Elem, FiniteCbckAlgebra};
use crate::constructions::cbck_union;
use crate::duality::FinitePoset;
use crate::error::SpectrumError;
use crate::ideals::{Ideal, IdealGuard, IdealLattice};
use crate::tree::{
    ideal_join, ideal_leq, tree_ideal_lattice, PathIdeal, RootedTree, TreeElement,
    TreeIdealLattice,
};

fn ideal_label(i: &Ideal) -> String {
    let parts: Vec<String> = i.members().iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// `X(A)` for a finite algebra, with the ideal lattice it was built from.
#[derive(Debug, Clone)]
pub struct AlgebraSpectrum {
    algebra: FiniteCbckAlgebra,
    lattice: IdealLattice,
    /// lattice indices of the primes, in point order
    primes: Vec<usize>,
    /// `σ(I)` for every ideal, by lattice index
    sigma: Vec<FixedBitSet>,
    space: FiniteSpace,
}

pub fn spectrum(a: &FiniteCbckAlgebra, guard: &IdealGuard) -> Result<AlgebraSpectrum, SpectrumError> {
    let lattice = a.all_ideals(guard)?;
    let primes: Vec<usize> = lattice.primes().collect();
    let np = primes.len();
    let sigma: Vec<FixedBitSet> = lattice
        .ideals()
        .iter()
        .map(|i| {
            set_of(
                np,
                (0..np).filter(|&k| !i.is_subset(lattice.get(primes[k]))),
            )
        })
        .collect();
    let basis = a
        .elements()
        .map(|x| {
            set_of(
                np,
                (0..np).filter(|&k| !lattice.get(primes[k]).contains(x)),
            )
        })
        .collect();
    let labels = primes.iter().map(|&k| ideal_label(lattice.get(k))).collect();
    let space = FiniteSpace::new(labels, sigma.clone(), basis);
    Ok(AlgebraSpectrum {
        algebra: a.clone(),
        lattice,
        primes,
        sigma,
        space,
    })
}

impl AlgebraSpectrum {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn algebra(&self) -> &FiniteCbckAlgebra {
        &self.algebra
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn primes(&self) -> Vec<&Ideal> {
        self.primes.iter().map(|&k| self.lattice.get(k)).collect()
    }

    pub fn prime_indices(&self) -> &[usize] {
        &self.primes
    }

    /// `σ(I) = {P : I ⊄ P}`.
    pub fn sigma(&self, ideal: &Ideal) -> FixedBitSet {
        match self.lattice.index_of(ideal) {
            Some(k) => self.sigma[k].clone(),
            None => panic!("not an ideal of this algebra"),
        }
    }

    /// `σ` of the ideal with the given lattice index.
    pub fn sigma_at(&self, k: usize) -> &FixedBitSet {
        &self.sigma[k]
    }

    /// `σ(S) = σ((S])`.
    pub fn sigma_set(&self, s: &[Elem]) -> FixedBitSet {
        self.sigma(&self.algebra.generated_ideal(s))
    }

    pub fn sigma_elem(&self, a: Elem) -> FixedBitSet {
        let np = self.primes.len();
        set_of(np, (0..np).filter(|&k| !self.lattice.get(self.primes[k]).contains(a)))
    }

    /// `V(I) = {Q : I ⊆ Q}`, the complement of `σ(I)`.
    pub fn v_closed(&self, ideal: &Ideal) -> FixedBitSet {
        let mut v = self.space.full_set();
        v.difference_with(&self.sigma(ideal));
        v
    }

    /// Primes ordered by inclusion.
    pub fn inclusion_order(&self) -> FinitePoset {
        let np = self.primes.len();
        FinitePoset::from_fn(np, |x, y| self.lattice.leq(self.primes[x], self.primes[y]))
            .expect("inclusion is a partial order")
    }

    /// `σ(I)` is clopen with complement `σ(I*)`, and an up-set of primes.
    pub fn clopen_upset_check(&self, ideal: &Ideal) -> bool {
        let s = self.sigma(ideal);
        let ann = self.algebra.annihilator_of(ideal);
        let mut complement = self.space.full_set();
        complement.difference_with(&s);
        complement == self.sigma(&ann) && self.inclusion_order().is_up_set(&s)
    }

    /// Finite algebras are compact, and are generated as an ideal by their
    /// maximal elements.
    pub fn compact_iff_fg(&self) -> (bool, bool) {
        let a = &self.algebra;
        let maximal: Vec<Elem> = a
            .elements()
            .filter(|&x| a.elements().all(|y| !a.leq(x, y) || x == y))
            .collect();
        let fg = a.generated_ideal(&maximal) == a.whole_ideal();
        (self.space.check_compact(), fg)
    }
}

/// `X(A^T)` computed from the symbolic ideals of the tree algebra.
#[derive(Debug, Clone)]
pub struct TreeSpectrum {
    tree: RootedTree,
    lattice: TreeIdealLattice,
    primes: Vec<usize>,
    sigma: Vec<FixedBitSet>,
    space: FiniteSpace,
}

pub fn tree_spectrum(tree: &RootedTree) -> Result<TreeSpectrum, SpectrumError> {
    let lattice = tree_ideal_lattice(tree)?;
    let primes = lattice.primes();
    let np = primes.len();
    let sigma: Vec<FixedBitSet> = lattice
        .ideals()
        .iter()
        .map(|r| {
            set_of(
                np,
                (0..np).filter(|&k| !ideal_leq(tree, r, lattice.get(primes[k]))),
            )
        })
        .collect();
    let labels = primes.iter().map(|&k| lattice.get(k).name(tree)).collect();
    let space = FiniteSpace::new(labels, sigma.clone(), sigma.clone());
    Ok(TreeSpectrum {
        tree: tree.clone(),
        lattice,
        primes,
        sigma,
        space,
    })
}

impl TreeSpectrum {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn lattice(&self) -> &TreeIdealLattice {
        &self.lattice
    }

    pub fn primes(&self) -> Vec<&PathIdeal> {
        self.primes.iter().map(|&k| self.lattice.get(k)).collect()
    }

    pub fn sigma(&self, r: &PathIdeal) -> FixedBitSet {
        let k = self.lattice.index_of(r).expect("canonical antichain");
        self.sigma[k].clone()
    }

    pub fn sigma_at(&self, k: usize) -> &FixedBitSet {
        &self.sigma[k]
    }

    pub fn v_closed(&self, r: &PathIdeal) -> FixedBitSet {
        let mut v = self.space.full_set();
        v.difference_with(&self.sigma(r));
        v
    }

    pub fn inclusion_order(&self) -> FinitePoset {
        let np = self.primes.len();
        let ps = self.primes();
        FinitePoset::from_fn(np, |x, y| ideal_leq(&self.tree, ps[x], ps[y]))
            .expect("inclusion is a partial order")
    }

    /// Compactness of the spectrum next to a symbolic search for a finite
    /// generating set: indicator elements are tried one vertex at a time.
    pub fn compact_iff_fg(&self) -> (bool, Option<Vec<TreeElement>>) {
        let t = &self.tree;
        let mut generated = PathIdeal::zero(t);
        let mut gens = Vec::new();
        for v in t.bfs_order() {
            let u = TreeElement::indicator(t, v).expect("vertex in range");
            let principal = principal_path_ideal(t, &u);
            if ideal_leq(t, &principal, &generated) {
                continue;
            }
            generated = ideal_join(t, &generated, &principal);
            gens.push(u);
            if generated.is_whole() {
                return (self.space.check_compact(), Some(gens));
            }
        }
        (self.space.check_compact(), None)
    }
}

/// Smallest `I(R)` containing `u`: `R` is the set of maximal vertices whose
/// root path carries only zeros of `u`.
pub fn principal_path_ideal(tree: &RootedTree, u: &TreeElement) -> PathIdeal {
    let zero_paths = tree.vertices().filter(|&v| u.vanishes_on_path(tree, v));
    crate::tree::canonical_antichain(tree, zero_paths).expect("valid vertices")
}

/// The point map `Q ↦ h⁻¹(Q)` from `X(B)` to `X(A)`, with its spectrality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumMap {
    /// `point_map[q]` is the point of `X(A)` hit by point `q` of `X(B)`.
    pub point_map: Vec<usize>,
    /// Preimages of compact opens are compact open.
    pub spectral: bool,
}

pub fn spectrum_map(h: &BckHomomorphism, guard: &IdealGuard) -> Result<SpectrumMap, SpectrumError> {
    if let Some((x, y)) = h.counterexample() {
        return Err(SpectrumError::NotHomomorphism(format!(
            "h({x}·{y}) differs from h({x})·h({y})"
        )));
    }
    let xa = spectrum(h.source(), guard)?;
    let xb = spectrum(h.target(), guard)?;
    let source = h.source();
    let mut point_map = Vec::with_capacity(xb.primes.len());
    for q in xb.primes() {
        let pre: Vec<Elem> = source.elements().filter(|&a| q.contains(h.apply(a))).collect();
        let label = ideal_label(q);
        if pre.len() == source.size() {
            return Err(SpectrumError::ImproperPreimage { prime: label });
        }
        let ideal = source
            .ideal(&pre)
            .map_err(|_| SpectrumError::PreimageNotPrime { prime: label.clone() })?;
        let k = xa
            .primes()
            .iter()
            .position(|p| **p == ideal)
            .ok_or(SpectrumError::PreimageNotPrime { prime: label })?;
        point_map.push(k);
    }
    let nb = xb.primes.len();
    let spectral = xa.space.opens().iter().all(|o| {
        let pre = set_of(nb, (0..nb).filter(|&q| o.contains(point_map[q])));
        xb.space.is_open(&pre)
    });
    Ok(SpectrumMap {
        point_map,
        spectral,
    })
}

/// `X(⋃ A_i)` is homeomorphic to the disjoint union of the `X(A_i)`.
pub fn check_union_homeo(
    components: &[FiniteCbckAlgebra],
    guard: &IdealGuard,
) -> Result<bool, SpectrumError> {
    let union = cbck_union(components)?;
    let whole = spectrum(union.algebra(), guard)?;
    let parts = components
        .iter()
        .map(|c| spectrum(c, guard).map(|s| s.space.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let coproduct = disjoint_union_space(&parts)?;
    Ok(homeomorphic(whole.space(), &coproduct).is_some())
}

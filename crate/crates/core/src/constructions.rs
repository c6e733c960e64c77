//! Generators for finite algebras: the simple chains `C_k`, cBCK-unions glued
//! at a shared zero, and direct products.

use crate::algebra::{BckHomomorphism, Elem, FiniteCbckAlgebra};
use crate::error::ConstructionError;

/// Products larger than this are refused.
pub const MAX_PRODUCT_SIZE: usize = 1 << 12;

/// `C_k = {0, 1/k, ..., 1}` encoded as `0..=k` with truncated subtraction.
pub fn standard_chain(k: usize) -> Result<FiniteCbckAlgebra, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::ZeroChain);
    }
    let n = k + 1;
    let table = (0..n)
        .flat_map(|x| (0..n).map(move |y| x.saturating_sub(y)))
        .collect();
    Ok(FiniteCbckAlgebra::from_verified(n, table))
}

/// A cBCK-union together with where each of its elements came from.
///
/// Numbering: the shared zero is `0`, followed by the non-zero elements of
/// each component in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CbckUnion {
    algebra: FiniteCbckAlgebra,
    components: Vec<FiniteCbckAlgebra>,
    /// `provenance[e] = (component, original index)`; the zero maps to `(0, 0)`.
    provenance: Vec<(usize, Elem)>,
    /// `offsets[i]` is the union index of component `i`'s element `1`.
    offsets: Vec<usize>,
}

impl CbckUnion {
    pub fn algebra(&self) -> &FiniteCbckAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> FiniteCbckAlgebra {
        self.algebra
    }

    pub fn components(&self) -> &[FiniteCbckAlgebra] {
        &self.components
    }

    pub fn provenance(&self) -> &[(usize, Elem)] {
        &self.provenance
    }

    /// Block of a non-zero element; `None` for the shared zero.
    pub fn block_of(&self, e: Elem) -> Option<usize> {
        (e != 0).then(|| self.provenance[e].0)
    }

    /// Union index of element `x` of component `i`.
    pub fn embed(&self, i: usize, x: Elem) -> Elem {
        if x == 0 {
            0
        } else {
            self.offsets[i] + x - 1
        }
    }

    /// Union indices of component `i`, zero included.
    pub fn block(&self, i: usize) -> Vec<Elem> {
        self.components[i]
            .elements()
            .map(|x| self.embed(i, x))
            .collect()
    }

    /// The inclusion of component `i` into the union.
    pub fn block_embedding(&self, i: usize) -> BckHomomorphism {
        let map = self.block(i);
        BckHomomorphism::new(self.components[i].clone(), self.algebra.clone(), map)
            .expect("block embedding has the right shape")
    }

    /// The map collapsing every block except `i` to zero.
    pub fn block_projection(&self, i: usize) -> BckHomomorphism {
        let map = self
            .provenance
            .iter()
            .map(|&(c, x)| if c == i { x } else { 0 })
            .collect();
        BckHomomorphism::new(self.algebra.clone(), self.components[i].clone(), map)
            .expect("block projection has the right shape")
    }
}

/// Glues the components at `0`; within a block the operation is the
/// component's, across blocks `x·y = x`.
pub fn cbck_union(components: &[FiniteCbckAlgebra]) -> Result<CbckUnion, ConstructionError> {
    if components.is_empty() {
        return Err(ConstructionError::NoComponents);
    }
    let mut provenance = vec![(0, 0)];
    let mut offsets = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        offsets.push(provenance.len());
        provenance.extend((1..c.size()).map(|x| (i, x)));
    }
    let n = provenance.len();
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let (bx, ox) = provenance[x];
            let (by, oy) = provenance[y];
            table[x * n + y] = if x == 0 {
                0
            } else if y == 0 {
                x
            } else if bx == by {
                let r = components[bx].op(ox, oy);
                if r == 0 {
                    0
                } else {
                    offsets[bx] + r - 1
                }
            } else {
                x
            };
        }
    }
    Ok(CbckUnion {
        algebra: FiniteCbckAlgebra::from_verified(n, table),
        components: components.to_vec(),
        provenance,
        offsets,
    })
}

/// Componentwise product. Elements are mixed-radix tuples with the last
/// component varying fastest, so the all-zero tuple is index `0`.
pub fn direct_product(
    components: &[FiniteCbckAlgebra],
) -> Result<FiniteCbckAlgebra, ConstructionError> {
    if components.is_empty() {
        return Err(ConstructionError::NoComponents);
    }
    let n = components
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.size()))
        .unwrap_or(usize::MAX);
    if n > MAX_PRODUCT_SIZE {
        return Err(ConstructionError::TooLarge(n, MAX_PRODUCT_SIZE));
    }
    let coords: Vec<Vec<Elem>> = (0..n).map(|e| product_coords(components, e)).collect();
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let tuple: Vec<Elem> = components
                .iter()
                .enumerate()
                .map(|(i, c)| c.op(coords[x][i], coords[y][i]))
                .collect();
            table[x * n + y] = product_index(components, &tuple);
        }
    }
    Ok(FiniteCbckAlgebra::from_verified(n, table))
}

/// Coordinates of product element `e`.
pub fn product_coords(components: &[FiniteCbckAlgebra], mut e: Elem) -> Vec<Elem> {
    let mut out = vec![0; components.len()];
    for (i, c) in components.iter().enumerate().rev() {
        out[i] = e % c.size();
        e /= c.size();
    }
    out
}

pub fn product_index(components: &[FiniteCbckAlgebra], coords: &[Elem]) -> Elem {
    components
        .iter()
        .zip(coords)
        .fold(0, |acc, (c, &x)| acc * c.size() + x)
}

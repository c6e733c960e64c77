use super::lattice::{FiniteDistLattice, MAX_LATTICE_SIZE};
use super::poset::FinitePoset;
use crate::error::{GuardError, OrderError};

/// Per-element invariants preserved by any order isomorphism.
fn signature(p: &FinitePoset) -> Vec<[usize; 5]> {
    let n = p.len();
    let covers = p.covers();
    let mut up = vec![0; n];
    let mut down = vec![0; n];
    for &(a, b) in &covers {
        up[a] += 1;
        down[b] += 1;
    }
    // height: longest chain ending at the element
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (0..n).filter(|&b| p.leq(b, a)).count());
    let mut height = vec![0; n];
    for &a in &order {
        height[a] = covers
            .iter()
            .filter(|&&(_, b)| b == a)
            .map(|&(c, _)| height[c] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..n)
        .map(|a| {
            let below = (0..n).filter(|&b| p.leq(b, a)).count();
            let above = (0..n).filter(|&b| p.leq(a, b)).count();
            [height[a], below, above, down[a], up[a]]
        })
        .collect()
}

/// An order isomorphism `f` with `f[i]` the image of `i`, if one exists.
pub fn poset_iso(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<usize>>, OrderError> {
    let n = p.len();
    let limit = MAX_LATTICE_SIZE + 1;
    if n.max(q.len()) > limit {
        return Err(GuardError {
            what: "isomorphism search size",
            actual: n.max(q.len()),
            limit,
        }
        .into());
    }
    if n != q.len() {
        return Ok(None);
    }
    let sp = signature(p);
    let sq = signature(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    // assign bottom-up so comparability constraints bite early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sp[x]);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sq[y] == sp[x]).collect())
        .collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(p, q, &order, 0, &candidates, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn extend(
    p: &FinitePoset,
    q: &FinitePoset,
    order: &[usize],
    pos: usize,
    candidates: &[Vec<usize>],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(pos) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&x2| {
            let y2 = image[x2];
            p.leq(x, x2) == q.leq(y, y2) && p.leq(x2, x) == q.leq(y2, y)
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if extend(p, q, order, pos + 1, candidates, image, used) {
            return true;
        }
        used[y] = false;
    }
    image[x] = usize::MAX;
    false
}

/// An order-reversing bijection, i.e. an isomorphism onto the dual.
pub fn poset_anti_iso(p: &FinitePoset, q: &FinitePoset) -> Result<Option<Vec<usize>>, OrderError> {
    poset_iso(p, &q.dual())
}

/// Lattice isomorphisms coincide with order isomorphisms.
pub fn lattice_iso(
    l1: &FiniteDistLattice,
    l2: &FiniteDistLattice,
) -> Result<Option<Vec<usize>>, OrderError> {
    let f = poset_iso(&l1.poset(), &l2.poset())?;
    if let Some(f) = &f {
        debug_assert!((0..l1.len()).all(|a| (0..l1.len())
            .all(|b| f[l1.meet(a, b)] == l2.meet(f[a], f[b])
                && f[l1.join(a, b)] == l2.join(f[a], f[b]))));
    }
    Ok(f)
}

pub fn is_lattice_iso(l1: &FiniteDistLattice, l2: &FiniteDistLattice) -> Result<bool, OrderError> {
    Ok(lattice_iso(l1, l2)?.is_some())
}

use std::collections::HashSet;

use super::rooted::RootedTree;

/// One representative of every rooted tree with exactly `m` vertices, up to
/// isomorphism.
pub fn rooted_trees(m: usize) -> Vec<RootedTree> {
    if m == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut ps = vec![0; m - 1];
    loop {
        let t = RootedTree::from_parent_indices(&ps);
        if seen.insert(t.canonical_form()) {
            out.push(t);
        }
        // odometer over parent arrays with ps[i] <= i
        let mut i = ps.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if ps[i] < i {
                ps[i] += 1;
                ps[i + 1..].iter_mut().for_each(|p| *p = 0);
                break;
            }
        }
    }
}

/// Every rooted tree with between 1 and `max_vertices` vertices.
pub fn rooted_trees_up_to(max_vertices: usize) -> Vec<RootedTree> {
    (1..=max_vertices).flat_map(rooted_trees).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_oeis_a000081() {
        let counts: Vec<usize> = (1..=7).map(|m| rooted_trees(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48]);
        assert_eq!(rooted_trees_up_to(7).len(), 85);
        assert!(rooted_trees(0).is_empty());
    }
}

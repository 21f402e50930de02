//! Maximum bipartite matching on the comparability relation of a finite poset.
//!
//! By Dilworth's theorem the largest antichain equals the least number of
//! chains covering the poset, and that number is `n - M` where `M` is a
//! maximum matching between two copies of the ground set with an edge
//! `x -> y` whenever `x < y`. Nothing here looks at rank structure.

use std::collections::VecDeque;

/// Strict upper sets of a finite poset, enumerated lazily in index order.
pub(crate) trait UpperSets {
    fn len(&self) -> usize;

    /// Smallest `y > after` (or the smallest overall when `after` is `None`)
    /// with `x < y` in the order.
    fn next_above(&self, x: usize, after: Option<usize>) -> Option<usize>;
}

const UNREACHED: usize = usize::MAX;

/// Size of a maximum antichain computed as `n` minus a maximum matching
/// (Hopcroft-Karp with edges generated on demand).
pub(crate) fn width_by_matching(poset: &impl UpperSets) -> usize {
    let n = poset.len();
    let mut left: Vec<Option<usize>> = vec![None; n];
    let mut right: Vec<Option<usize>> = vec![None; n];
    let mut matched = 0;

    // Greedy start: match each element to its first free successor.
    for (x, slot) in left.iter_mut().enumerate() {
        let mut cursor = None;
        while let Some(y) = poset.next_above(x, cursor) {
            if right[y].is_none() {
                *slot = Some(y);
                right[y] = Some(x);
                matched += 1;
                break;
            }
            cursor = Some(y);
        }
    }

    let mut layer = vec![UNREACHED; n];
    let mut cursor: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    loop {
        // Layer the free left vertices and everything alternating from them,
        // stopping at the first layer that reaches a free right vertex.
        layer.fill(UNREACHED);
        queue.clear();
        for x in (0..n).filter(|&x| left[x].is_none()) {
            layer[x] = 0;
            queue.push_back(x);
        }
        let mut free_layer = UNREACHED;
        while let Some(u) = queue.pop_front() {
            if layer[u] >= free_layer {
                continue;
            }
            let mut c = None;
            while let Some(y) = poset.next_above(u, c) {
                c = Some(y);
                match right[y] {
                    None => free_layer = free_layer.min(layer[u] + 1),
                    Some(w) if layer[w] == UNREACHED => {
                        layer[w] = layer[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if free_layer == UNREACHED {
            break;
        }

        // Vertex-disjoint shortest augmenting paths; each edge is scanned at
        // most once per phase thanks to the per-vertex cursors. The search
        // uses an explicit stack because paths can be as long as the poset.
        cursor.fill(None);
        for root in 0..n {
            if left[root].is_some() || layer[root] != 0 {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                let Some(y) = poset.next_above(u, cursor[u]) else {
                    layer[u] = UNREACHED;
                    stack.pop();
                    continue;
                };
                cursor[u] = Some(y);
                match right[y] {
                    None if layer[u] + 1 == free_layer => {
                        for &v in &stack {
                            let y = cursor[v].expect("every vertex on the path has chosen an edge");
                            left[v] = Some(y);
                            right[y] = Some(v);
                        }
                        matched += 1;
                        break;
                    }
                    Some(w) if layer[w] != UNREACHED && layer[w] == layer[u] + 1 => stack.push(w),
                    _ => {}
                }
            }
        }
    }
    n - matched
}

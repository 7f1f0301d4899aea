//! Enumeration of non-isomorphic free trees by level-sequence successors.
//!
//! Trees are represented as canonical level sequences (depth of each vertex
//! in preorder). The iterator walks rooted-tree layouts in reverse
//! lexicographic order and keeps exactly those that are canonical for a free
//! tree: the root is a centroid and the first root subtree is no "heavier"
//! than the rest. Invalid layouts are jumped over in place, which makes the
//! walk constant amortized time per tree.

use crate::graph::Graph;
use crate::search::SearchError;

/// Largest supported tree order.
pub const MAX_TREE_ORDER: usize = 20;

/// Iterates over one representative per isomorphism class of free trees on
/// `n` vertices, in a deterministic order.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees, SearchError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(SearchError::TreeOrderOutOfRange(n));
    }
    let pending = if n == 1 {
        None
    } else {
        // Two root paths of height floor(n/2) and ceil(n/2) - 1.
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        Some(layout)
    };
    Ok(FreeTrees {
        single: n == 1,
        pending,
    })
}

#[derive(Debug)]
pub struct FreeTrees {
    single: bool,
    pending: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::empty(1).unwrap());
        }
        let candidate = self.pending.take()?;
        let layout = next_free_tree(candidate)?;
        let g = graph_from_levels(&layout);
        self.pending = next_rooted_tree(&layout, None);
        Some(g)
    }
}

/// Successor of a rooted-tree level sequence: decrement at position `p`
/// (default: last entry above level 1) and repeat the pattern that starts at
/// the matching shallower vertex.
fn next_rooted_tree(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = levels.len() - 1;
        while levels[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits a layout at the root: the first root subtree (levels shifted down
/// by one) and the remaining tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut m = layout.len();
    let mut one_seen = false;
    for (i, &l) in layout.iter().enumerate() {
        if l == 1 {
            if one_seen {
                m = i;
                break;
            }
            one_seen = true;
        }
    }
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Returns `candidate` if it is the canonical layout of a free tree, or
/// jumps directly to the next layout that is.
fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = *left.iter().max().expect("root has a child");
    let rest_height = *rest.iter().max().expect("rest contains the root");
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            left.len() < rest.len() || (left.len() == rest.len() && left <= rest)
        }
    };
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = *new_left.iter().max().expect("root has a child");
        let tail = next.len() - new_left_height - 1;
        for (offset, level) in (1..=new_left_height + 1).enumerate() {
            next[tail + offset] = level;
        }
    }
    Some(next)
}

/// Builds the tree from its level sequence: each vertex attaches to the most
/// recent vertex one level up.
fn graph_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut last_at_level = vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1);
    for (v, &level) in levels.iter().enumerate().skip(1) {
        edges.push((last_at_level[level - 1], v));
        last_at_level[level] = v;
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Free tree counts for n = 1..=17.
    const FREE_TREE_COUNTS: [usize; 17] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629,
    ];

    #[test]
    fn counts_match_known_sequence_small() {
        for n in 1..=12 {
            let count = enumerate_trees(n).unwrap().count();
            assert_eq!(count, FREE_TREE_COUNTS[n - 1], "order {n}");
        }
    }

    #[test]
    fn counts_match_known_sequence_medium() {
        for n in 13..=16 {
            let count = enumerate_trees(n).unwrap().count();
            assert_eq!(count, FREE_TREE_COUNTS[n - 1], "order {n}");
        }
    }

    #[test]
    fn every_output_is_a_tree() {
        for n in 1..=10 {
            for g in enumerate_trees(n).unwrap() {
                assert_eq!(g.order(), n);
                assert!(g.is_tree());
            }
        }
    }

    #[test]
    fn order_is_deterministic() {
        let a: Vec<Graph> = enumerate_trees(9).unwrap().collect();
        let b: Vec<Graph> = enumerate_trees(9).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_out_of_range_orders() {
        assert!(matches!(
            enumerate_trees(0).unwrap_err(),
            SearchError::TreeOrderOutOfRange(0)
        ));
        assert!(matches!(
            enumerate_trees(21).unwrap_err(),
            SearchError::TreeOrderOutOfRange(21)
        ));
    }

    #[test]
    fn path_and_star_both_appear() {
        let trees: Vec<Graph> = enumerate_trees(6).unwrap().collect();
        let degrees: Vec<Vec<usize>> = trees
            .iter()
            .map(|g| {
                let mut d = g.degrees();
                d.sort_unstable();
                d
            })
            .collect();
        assert!(degrees.contains(&vec![1, 1, 2, 2, 2, 2])); // path
        assert!(degrees.contains(&vec![1, 1, 1, 1, 1, 5])); // star
    }
}

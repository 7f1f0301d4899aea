//! Seeded random 2k-regular graphs of order 4k + 1, for round-trip tests of
//! the regularity correspondence.
//!
//! The generator starts from the circulant with connection set {1..k} and
//! randomizes it with degree-preserving double edge swaps. A fixed seed gives
//! a fixed graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::search::SearchError;

/// Swaps per edge performed by [`random_regular`].
const DEFAULT_SWAPS_PER_EDGE: usize = 10;

/// A seeded random `degree`-regular graph on `order` vertices, where
/// `order = 1 mod 4` and `degree = (order - 1) / 2`.
pub fn random_regular(degree: usize, order: usize, seed: u64) -> Result<Graph, SearchError> {
    let swaps = DEFAULT_SWAPS_PER_EDGE * order * degree / 2;
    random_regular_with_swaps(degree, order, seed, swaps)
}

/// Same as [`random_regular`] with an explicit number of double edge swaps;
/// zero swaps returns the circulant base graph itself.
pub fn random_regular_with_swaps(
    degree: usize,
    order: usize,
    seed: u64,
    swaps: usize,
) -> Result<Graph, SearchError> {
    if order % 4 != 1 || degree * 2 != order - 1 {
        return Err(SearchError::RegularParams { degree, order });
    }
    let k = degree / 2;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(order * degree / 2);
    for v in 0..order {
        for d in 1..=k {
            edges.push((v, (v + d) % order));
        }
    }
    let mut adj = vec![0u64; order];
    for &(u, v) in &edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0usize;
    let mut attempts = 0usize;
    let budget = 100 * swaps + 1000;
    while done < swaps && attempts < budget {
        attempts += 1;
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        if i == j {
            continue;
        }
        let (mut a, mut b) = edges[i];
        let (mut c, mut d) = edges[j];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut a, &mut b);
        }
        // Replace {a,b}, {c,d} by {a,c}, {b,d} when that stays simple.
        if a == c || a == d || b == c || b == d {
            continue;
        }
        if adj[a] >> c & 1 == 1 || adj[b] >> d & 1 == 1 {
            continue;
        }
        adj[a] &= !(1 << b);
        adj[b] &= !(1 << a);
        adj[c] &= !(1 << d);
        adj[d] &= !(1 << c);
        adj[a] |= 1 << c;
        adj[c] |= 1 << a;
        adj[b] |= 1 << d;
        adj[d] |= 1 << b;
        edges[i] = (a, c);
        edges[j] = (b, d);
        done += 1;
    }

    let g = Graph::from_edges(order, edges).unwrap();
    debug_assert_eq!(g.is_regular(), Some(degree));
    Ok(g)
}

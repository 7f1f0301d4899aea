//! Bitset-backed simple graphs of order at most 64 and switching-class algebra.
//!
//! Every graph is undirected, loop-free, and labeled with 0-based vertices.
//! Each adjacency row fits in one `u64`, which keeps switching, degree
//! counting, and the scan hot loop on single-word operations.

use std::fmt;

use thiserror::Error;

/// Largest supported graph order: adjacency rows must fit in one machine word.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} out of range (must be 1..={MAX_ORDER})")]
    OrderOutOfRange(usize),
    #[error("cycle requires at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("disjoint union of orders {0} and {1} exceeds {MAX_ORDER} vertices")]
    UnionTooLarge(usize, usize),
    #[error("even representative is only defined for odd order, got {0}")]
    EvenOrder(usize),
}

/// An undirected simple graph with at most [`MAX_ORDER`] vertices.
///
/// Immutable after construction; all operations return new graphs.
/// Invariants (enforced by the constructors): symmetric adjacency,
/// no loops, and no bits at or above `order()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// A set of vertices bound to a specific graph order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: u64,
}

fn order_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    fn with_order(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Self::with_order(n)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Self::with_order(n)?;
        let mask = order_mask(n);
        for i in 0..n {
            g.adj[i] = mask & !(1u64 << i);
        }
        Ok(g)
    }

    /// Path v_0 - v_1 - ... - v_{n-1}.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Self::with_order(n)?;
        for i in 1..n {
            g.set_edge(i - 1, i);
        }
        Ok(g)
    }

    /// Cycle v_0 - v_1 - ... - v_{n-1} - v_0; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let mut g = Self::path(n)?;
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// Builds a graph from an edge list. Loops are rejected via panic:
    /// callers construct edge lists programmatically.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::with_order(n)?;
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for order {n}");
            assert_ne!(u, v, "loop at vertex {u}");
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::UnionTooLarge(self.n, other.n));
        }
        let mut g = Graph { n, adj: Vec::with_capacity(n) };
        g.adj.extend_from_slice(&self.adj);
        for &row in &other.adj {
            g.adj.push(row << self.n);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut bits = self.adj[u] & !order_mask(u + 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                out.push((u, v));
                bits &= bits - 1;
            }
        }
        out
    }

    /// Complement: edge iff non-edge in `self` (diagonal excluded).
    pub fn complement(&self) -> Graph {
        let mask = order_mask(self.n);
        let adj = (0..self.n)
            .map(|i| mask & !self.adj[i] & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Switching with respect to `a`: adjacency between `a` and its
    /// complement is toggled, edges inside either side are untouched.
    ///
    /// Switching by `a` and by the complement of `a` give the same graph,
    /// and switching twice by the same set is the identity.
    pub fn switch(&self, a: &VertexSet) -> Graph {
        assert_eq!(a.n, self.n, "vertex set bound to order {} applied to graph of order {}", a.n, self.n);
        let mask = order_mask(self.n);
        let inside = a.bits;
        let outside = mask & !inside;
        let adj = (0..self.n)
            .map(|i| {
                let cross = if a.contains(i) { outside } else { inside };
                (self.adj[i] ^ cross) & !(1u64 << i)
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of odd degree.
    pub fn odd_vertices(&self) -> VertexSet {
        let mut bits = 0u64;
        for v in 0..self.n {
            if self.degree(v) % 2 == 1 {
                bits |= 1u64 << v;
            }
        }
        VertexSet { n: self.n, bits }
    }

    /// True iff every vertex has even degree.
    pub fn is_even_graph(&self) -> bool {
        self.odd_vertices().is_empty()
    }

    /// The common degree if the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// The unique even graph in the switching class of an odd-order graph,
    /// obtained by switching at the odd vertices. Errors on even order,
    /// where no such unique representative exists.
    pub fn even_representative(&self) -> Result<Graph, GraphError> {
        if self.n.is_multiple_of(2) {
            return Err(GraphError::EvenOrder(self.n));
        }
        let g = self.switch(&self.odd_vertices());
        debug_assert!(g.is_even_graph());
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let mask = order_mask(self.n);
        let mut seen = 1u64;
        loop {
            let mut next = seen;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            if next == seen {
                return seen == mask;
            }
            seen = next;
        }
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl VertexSet {
    /// Empty set bound to order `n`.
    pub fn new(n: usize) -> VertexSet {
        assert!((1..=MAX_ORDER).contains(&n));
        VertexSet { n, bits: 0 }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> VertexSet {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Builds a set directly from its bitmask; handy for iterating all
    /// subsets of a small vertex range.
    pub fn from_bits(n: usize, bits: u64) -> VertexSet {
        assert_eq!(bits & !order_mask(n), 0, "bits beyond order {n}");
        VertexSet { n, bits }
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.bits |= 1u64 << v;
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits >> v & 1 == 1
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: order_mask(self.n) & !self.bits,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Bound order of the set.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.degrees(), vec![2, 2, 2]);

        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.edge_count(), 1);

        let u = Graph::path(4)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_eq!(u.order(), 5);
        assert_eq!(u.edge_count(), 3);

        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::OrderOutOfRange(0));
        assert_eq!(Graph::empty(65).unwrap_err(), GraphError::OrderOutOfRange(65));
        assert_eq!(Graph::cycle(2).unwrap_err(), GraphError::CycleTooSmall(2));
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::empty(4).unwrap().complement(), Graph::complete(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        // The pentagram: 2-regular complement of C5.
        assert_eq!(c5.complement().is_regular(), Some(2));
    }

    #[test]
    fn switch_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.switch(&VertexSet::new(5)), c5);
        assert_eq!(c5.switch(&VertexSet::new(5).complement()), c5);

        // Hand-applied cross-edge complement on P5 at the two endpoints.
        let p5 = Graph::path(5).unwrap();
        let s = p5.switch(&VertexSet::from_iter(5, [0, 4]));
        let expected =
            Graph::from_edges(5, [(1, 2), (2, 3), (0, 2), (0, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn switch_involution_and_complement_set() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (1, 5)])
            .unwrap();
        let a = VertexSet::from_iter(7, [0, 2, 5]);
        assert_eq!(g.switch(&a).switch(&a), g);
        assert_eq!(g.switch(&a), g.switch(&a.complement()));
    }

    #[test]
    fn degree_queries() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.degrees(), vec![1, 2, 2, 2, 1]);
        assert!(Graph::cycle(5).unwrap().odd_vertices().is_empty());
        assert_eq!(p5.odd_vertices(), VertexSet::from_iter(5, [0, 4]));
        assert!(!p5.is_even_graph());
        assert_eq!(p5.is_regular(), None);
    }

    #[test]
    fn even_representative_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.even_representative().unwrap(), c5);

        let p5 = Graph::path(5).unwrap();
        let even = p5.even_representative().unwrap();
        assert_eq!(even.edge_count(), 6);
        assert!(even.is_even_graph());

        assert_eq!(
            Graph::path(4).unwrap().even_representative().unwrap_err(),
            GraphError::EvenOrder(4)
        );
    }

    #[test]
    fn even_representative_unique_over_all_switchings() {
        // Switching first never changes the even representative (odd order).
        let p5 = Graph::path(5).unwrap();
        let rep = p5.even_representative().unwrap();
        for bits in 0u64..32 {
            let a = VertexSet::from_bits(5, bits);
            assert_eq!(p5.switch(&a).even_representative().unwrap(), rep);
        }
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(6).unwrap().is_connected());
        assert!(Graph::path(6).unwrap().is_tree());
        assert!(!Graph::cycle(6).unwrap().is_tree());
        let u = Graph::path(3)
            .unwrap()
            .disjoint_union(&Graph::path(2).unwrap())
            .unwrap();
        assert!(!u.is_connected());
        assert!(Graph::empty(1).unwrap().is_tree());
    }

    #[test]
    fn permuted_relabels_edges() {
        let p4 = Graph::path(4).unwrap();
        let g = p4.permuted(&[3, 2, 1, 0]);
        assert_eq!(g, p4); // reversing a path gives the same labeled graph
        let h = p4.permuted(&[1, 0, 2, 3]);
        assert!(h.adjacent(1, 0) && h.adjacent(0, 2) && h.adjacent(2, 3));
    }
}

//! Exact-arithmetic toolkit for Seidel matrices of graphs.
//!
//! The Seidel matrix of a graph is `S = J - I - 2A`: zero diagonal, `-1`
//! between adjacent vertices, `+1` between non-adjacent ones. Its rank is
//! never below `n - 1`, so when `S` is singular the kernel is spanned by a
//! unique primitive integer vector with positive leading entry, called phi.
//! This crate computes phi exactly and implements the structure theory
//! around it: switching classes, congruence conditions that singularity
//! forces, recursive families whose kernel entries grow without bound, the
//! correspondence between `+-1` kernels and regular graphs, and an
//! exhaustive staged scan over all free trees of a given order.
//!
//! ```
//! use seidel::graph::Graph;
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let phi = seidel::analysis::phi(&c5).unwrap().expect("C5 is singular");
//! assert!(phi.all_pm_one());
//! assert_eq!(phi.entry_sum(), &num::BigInt::from(5));
//! ```
//!
//! The `book/` directory of the repository is a guide to the mathematics
//! and the API; its code listings compile and run as doc-tests of this
//! crate.

pub mod analysis;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod search;

pub use analysis::{AnalysisError, CongruenceReport, FilterVerdict, PhiVector, Verdict};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use linalg::{
    kernel_primitive, rank_exact, rank_lower_bound_mod_p, seidel_matrix, IntMatrix, LinalgError,
    PrimitiveVector, DEFAULT_FILTER_PRIME,
};

/// Keeps the guide's code listings green: every chapter of `book/` is
/// attached here as documentation, so `cargo test --doc` runs each listing.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(graphs_and_switching, "../../../book/src/graphs-and-switching.md");
    chapter!(seidel_matrices, "../../../book/src/seidel-matrices.md");
    chapter!(congruence_tests, "../../../book/src/congruence-tests.md");
    chapter!(families_chapter, "../../../book/src/families.md");
    chapter!(regular_correspondence, "../../../book/src/regular-correspondence.md");
    chapter!(tree_search, "../../../book/src/tree-search.md");
    chapter!(cli, "../../../book/src/cli.md");
}

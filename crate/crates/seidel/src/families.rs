//! Recursive graph families with singular Seidel matrices, plus the
//! tightness constructions for the +-1 edge bounds.
//!
//! Two families defeat the hope that a singular Seidel matrix always has a
//! +-1 kernel vector:
//!
//! * `family_g(k)` has order 4k + 1 and max |phi| = 5^(k-1): the maximum
//!   entry is unbounded over the family.
//! * `family_h(k)` has order 8k + 5 and min |phi| = 3^k: even the smallest
//!   entry grows without bound.
//!
//! Both are built by bordering the Seidel matrix of the previous member, and
//! both come with a closed-form phi computed by pure integer recursion. The
//! recursion is this module's safeguard against mistranscribing the borders:
//! tests require the closed form to agree exactly with the kernel solver.
//!
//! `family_p4_union(k)` and `family_cycle_leaves(k)` sit at the opposite
//! extreme: phi is all +-1 and the size meets the lower bound 3k exactly.

use num::bigint::BigInt;
use num::Zero;
use std::fmt;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family {family} requires k >= {min}, got {k}")]
    IndexTooSmall { family: Family, min: usize, k: usize },
    #[error("family {family} at k = {k} has order {order}, beyond the cap {MAX_ORDER}")]
    OrderTooLarge { family: Family, k: usize, order: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Unbounded maximum |phi| entry; order 4k + 1, k >= 1.
    G,
    /// Unbounded minimum |phi| entry; order 8k + 5, k >= 0.
    H,
    /// k disjoint paths P4 plus an isolated vertex; order 4k + 1, k >= 1.
    P4Union,
    /// One k-cycle, two leaves per cycle vertex, k + 1 isolated vertices;
    /// order 4k + 1, k >= 3.
    CycleLeaves,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::G => write!(f, "G"),
            Family::H => write!(f, "H"),
            Family::P4Union => write!(f, "p4"),
            Family::CycleLeaves => write!(f, "cycle-leaves"),
        }
    }
}

/// A family member request: which family and which index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, k: usize) -> FamilySpec {
        FamilySpec { family, k }
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::H => 8 * self.k + 5,
            _ => 4 * self.k + 1,
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let min = match self.family {
            Family::G | Family::P4Union => 1,
            Family::H => 0,
            Family::CycleLeaves => 3,
        };
        if self.k < min {
            return Err(FamilyError::IndexTooSmall {
                family: self.family,
                min,
                k: self.k,
            });
        }
        if self.order() > MAX_ORDER {
            return Err(FamilyError::OrderTooLarge {
                family: self.family,
                k: self.k,
                order: self.order(),
            });
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        Ok(match self.family {
            Family::G => build_g(self.k),
            Family::H => build_h(self.k),
            Family::P4Union => build_p4_union(self.k),
            Family::CycleLeaves => build_cycle_leaves(self.k),
        })
    }

    /// The phi predicted by the family's closed form, without any linear
    /// algebra. Tests pin this against the kernel solver.
    pub fn expected_phi(&self) -> Result<Vec<BigInt>, FamilyError> {
        self.validate()?;
        Ok(match self.family {
            Family::G => expected_phi_g(self.k),
            Family::H => expected_phi_h(self.k),
            Family::P4Union => {
                // +1 on the 2k leaves (ends of each P4), -1 elsewhere.
                let n = self.order();
                (0..n)
                    .map(|v| {
                        let leaf = v < 4 * self.k && matches!(v % 4, 0 | 3);
                        BigInt::from(if leaf { 1 } else { -1 })
                    })
                    .collect()
            }
            Family::CycleLeaves => {
                // -1 on the 2k leaves, +1 on cycle and isolated vertices.
                let n = self.order();
                (0..n)
                    .map(|v| {
                        let leaf = (self.k..3 * self.k).contains(&v);
                        BigInt::from(if leaf { -1 } else { 1 })
                    })
                    .collect()
            }
        })
    }
}

/// Four bordering vertices per step: the first and last attach to every
/// older vertex, and the four form a path.
fn build_g(k: usize) -> Graph {
    let mut g = Graph::cycle(5).unwrap();
    for _ in 1..k {
        let old = g.order();
        let mut edges = g.edges();
        for v in 0..old {
            edges.push((v, old));
            edges.push((v, old + 3));
        }
        edges.push((old, old + 1));
        edges.push((old + 1, old + 2));
        edges.push((old + 2, old + 3));
        g = Graph::from_edges(old + 4, edges).unwrap();
    }
    g
}

fn expected_phi_g(k: usize) -> Vec<BigInt> {
    let mut phi: Vec<BigInt> = vec![BigInt::from(1); 5];
    let mut c = BigInt::from(5);
    for _ in 1..k {
        for _ in 0..4 {
            phi.push(c.clone());
        }
        c *= 5;
    }
    phi
}

/// Eight bordering vertices per step. In the appended block, vertex offsets
/// 3 and 4 attach to every older vertex; offsets 0..=2 attach to a nested
/// run of the last offsets: 0 ~ {5, 6, 7}, 1 ~ {6, 7}, 2 ~ {7}.
fn build_h(k: usize) -> Graph {
    let mut g = Graph::cycle(5).unwrap();
    for _ in 0..k {
        let old = g.order();
        let mut edges = g.edges();
        for v in 0..old {
            edges.push((v, old + 3));
            edges.push((v, old + 4));
        }
        for (a, b) in [(0, 5), (0, 6), (0, 7), (1, 6), (1, 7), (2, 7)] {
            edges.push((old + a, old + b));
        }
        g = Graph::from_edges(old + 8, edges).unwrap();
    }
    g
}

fn expected_phi_h(k: usize) -> Vec<BigInt> {
    let mut phi: Vec<BigInt> = vec![BigInt::from(1); 5];
    for _ in 0..k {
        let c: BigInt = phi.iter().sum();
        for e in phi.iter_mut() {
            *e *= 3;
        }
        for mult in [5, -1, -3, 1, 1, -3, -1, 5] {
            phi.push(&c * BigInt::from(mult));
        }
    }
    phi
}

fn build_p4_union(k: usize) -> Graph {
    let edges = (0..k).flat_map(|j| {
        let base = 4 * j;
        [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
    });
    Graph::from_edges(4 * k + 1, edges).unwrap()
}

/// Layout: cycle vertices 0..k, leaves k..3k (two per cycle vertex, leaf
/// k + 2j and k + 2j + 1 hang off cycle vertex j), isolated 3k..4k + 1.
fn build_cycle_leaves(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|j| (j, (j + 1) % k)).collect();
    for j in 0..k {
        edges.push((j, k + 2 * j));
        edges.push((j, k + 2 * j + 1));
    }
    let g = Graph::from_edges(4 * k + 1, edges).unwrap();
    // Transcription safeguard: switching the leaves must land on a 2k-regular
    // graph; a failure here means the attachment pattern is wrong.
    let leaves = VertexSet::from_iter(g.order(), k..3 * k);
    assert_eq!(g.switch(&leaves).is_regular(), Some(2 * k));
    g
}

/// See [`FamilySpec`]; direct constructor for family G.
pub fn family_g(k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::new(Family::G, k).build()
}

/// See [`FamilySpec`]; direct constructor for family H.
pub fn family_h(k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::new(Family::H, k).build()
}

/// See [`FamilySpec`]; k disjoint P4 plus an isolated vertex.
pub fn family_p4_union(k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::new(Family::P4Union, k).build()
}

/// See [`FamilySpec`]; the cycle-with-leaves graph.
pub fn family_cycle_leaves(k: usize) -> Result<Graph, FamilyError> {
    FamilySpec::new(Family::CycleLeaves, k).build()
}

/// Sum of the expected phi entries, used as a cheap cross-check.
pub fn expected_entry_sum(spec: &FamilySpec) -> Result<BigInt, FamilyError> {
    Ok(spec
        .expected_phi()?
        .iter()
        .fold(BigInt::zero(), |acc, e| acc + e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::phi;
    use crate::linalg::{kernel_primitive, rank_exact, seidel_matrix, PrimitiveVector};

    #[test]
    fn family_g_base_is_c5() {
        assert_eq!(family_g(1).unwrap(), Graph::cycle(5).unwrap());
        assert!(matches!(
            family_g(0).unwrap_err(),
            FamilyError::IndexTooSmall { .. }
        ));
    }

    #[test]
    fn family_g_small_members() {
        let g2 = family_g(2).unwrap();
        assert_eq!(g2.order(), 9);
        let p = phi(&g2).unwrap().unwrap();
        let expected: Vec<BigInt> = [1, 1, 1, 1, 1, 5, 5, 5, 5].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p.entries(), expected.as_slice());

        let g3 = family_g(3).unwrap();
        let p = phi(&g3).unwrap().unwrap();
        assert_eq!(g3.order(), 13);
        assert_eq!(p.max_abs(), &BigInt::from(25));
        assert_eq!(p.entry_sum(), &BigInt::from(125));
    }

    #[test]
    fn family_g_recursion_matches_kernel_solver() {
        for k in 1..=7 {
            let spec = FamilySpec::new(Family::G, k);
            let g = spec.build().unwrap();
            assert_eq!(g.order(), 4 * k + 1);
            assert_eq!(rank_exact(&seidel_matrix(&g)), 4 * k);
            let solved = kernel_primitive(&seidel_matrix(&g)).unwrap().unwrap();
            let expected = PrimitiveVector::normalize(spec.expected_phi().unwrap()).unwrap();
            assert_eq!(solved, expected, "family G mismatch at k = {k}");
            // The closed form is already primitive and sign-fixed.
            assert_eq!(expected.entries(), spec.expected_phi().unwrap().as_slice());
        }
    }

    #[test]
    fn family_h_base_is_c5() {
        assert_eq!(family_h(0).unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn family_h_small_members() {
        let h1 = family_h(1).unwrap();
        assert_eq!(h1.order(), 13);
        let p = phi(&h1).unwrap().unwrap();
        assert_eq!(p.min_abs(), &BigInt::from(3));
        assert_eq!(p.entry_sum(), &BigInt::from(35));

        let h2 = family_h(2).unwrap();
        assert_eq!(h2.order(), 21);
        let p = phi(&h2).unwrap().unwrap();
        assert_eq!(p.min_abs(), &BigInt::from(9));
        assert_eq!(p.entry_sum(), &BigInt::from(245));
    }

    #[test]
    fn family_h_recursion_matches_kernel_solver() {
        for k in 0..=5 {
            let spec = FamilySpec::new(Family::H, k);
            let g = spec.build().unwrap();
            assert_eq!(g.order(), 8 * k + 5);
            assert_eq!(rank_exact(&seidel_matrix(&g)), 8 * k + 4);
            let solved = kernel_primitive(&seidel_matrix(&g)).unwrap().unwrap();
            let expected = PrimitiveVector::normalize(spec.expected_phi().unwrap()).unwrap();
            assert_eq!(solved, expected, "family H mismatch at k = {k}");
            assert_eq!(expected.entries(), spec.expected_phi().unwrap().as_slice());
        }
    }

    #[test]
    fn family_g_has_no_pm_one_witness() {
        let p = phi(&family_g(2).unwrap()).unwrap().unwrap();
        assert!(!p.all_pm_one());
        assert_eq!(
            crate::analysis::regular_switch_witness(&p).unwrap_err(),
            crate::analysis::AnalysisError::NoWitness
        );
    }

    #[test]
    fn p4_union_members() {
        let g1 = family_p4_union(1).unwrap();
        assert_eq!(
            g1,
            Graph::path(4)
                .unwrap()
                .disjoint_union(&Graph::empty(1).unwrap())
                .unwrap()
        );
        assert_eq!(g1.edge_count(), 3);

        let g2 = family_p4_union(2).unwrap();
        assert_eq!(g2.order(), 9);
        assert_eq!(g2.edge_count(), 6);
        let p = phi(&g2).unwrap().unwrap();
        assert!(p.all_pm_one());
        assert_eq!(g2.complement().edge_count(), 30); // 8 * 4 - 2

        let spec = FamilySpec::new(Family::P4Union, 2);
        let expected = PrimitiveVector::normalize(spec.expected_phi().unwrap()).unwrap();
        assert_eq!(p.vector(), &expected);
    }

    #[test]
    fn cycle_leaves_members() {
        let w3 = family_cycle_leaves(3).unwrap();
        assert_eq!(w3.order(), 13);
        assert_eq!(w3.edge_count(), 9);
        let p = phi(&w3).unwrap().unwrap();
        assert!(p.all_pm_one());

        let spec = FamilySpec::new(Family::CycleLeaves, 3);
        let expected = PrimitiveVector::normalize(spec.expected_phi().unwrap()).unwrap();
        assert_eq!(p.vector(), &expected);

        // Switching the 6 leaves yields a 6-regular graph of order 13.
        let leaves = VertexSet::from_iter(13, 3..9);
        assert_eq!(w3.switch(&leaves).is_regular(), Some(6));

        let w4 = family_cycle_leaves(4).unwrap();
        assert_eq!(w4.order(), 17);
        assert_eq!(w4.edge_count(), 12);
        // Contains C4 on the cycle vertices.
        assert!(w4.adjacent(0, 1) && w4.adjacent(1, 2) && w4.adjacent(2, 3) && w4.adjacent(3, 0));

        assert!(matches!(
            family_cycle_leaves(2).unwrap_err(),
            FamilyError::IndexTooSmall { .. }
        ));
    }

    #[test]
    fn order_cap_respected() {
        assert!(family_g(15).is_ok());
        assert!(matches!(
            family_g(16).unwrap_err(),
            FamilyError::OrderTooLarge { .. }
        ));
        assert!(family_h(7).is_ok());
        assert!(matches!(
            family_h(8).unwrap_err(),
            FamilyError::OrderTooLarge { .. }
        ));
    }

    #[test]
    fn entry_sums_follow_the_recurrences() {
        for k in 1..=6 {
            let sum = expected_entry_sum(&FamilySpec::new(Family::G, k)).unwrap();
            assert_eq!(sum, BigInt::from(5).pow(k as u32));
        }
        for k in 0..=5 {
            let sum = expected_entry_sum(&FamilySpec::new(Family::H, k)).unwrap();
            assert_eq!(sum, BigInt::from(5) * BigInt::from(7).pow(k as u32));
        }
    }
}

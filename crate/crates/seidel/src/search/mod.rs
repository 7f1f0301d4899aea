//! Staged singularity scan over graph streams, plus the generators that
//! feed it.
//!
//! The pipeline runs three stages per graph, cheapest first:
//!
//! 1. congruence pre-filter (O(n) degree arithmetic),
//! 2. rank modulo a fixed prime (machine words; full rank certifies
//!    nonsingularity),
//! 3. exact rank and kernel extraction.
//!
//! The first two stages are sound rejections only: disabling them never
//! changes which graphs end up in the singular list, just how much work the
//! exact stage has to do.

mod regular;
mod trees;

pub use regular::{random_regular, random_regular_with_swaps};
pub use trees::{enumerate_trees, FreeTrees, MAX_TREE_ORDER};

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::Verdict;
use crate::graph::Graph;
use crate::graph6::{encode_graph6, Graph6Error};
use crate::linalg::{self, LinalgError, DEFAULT_FILTER_PRIME};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("tree order {0} out of supported range (1..={MAX_TREE_ORDER})")]
    TreeOrderOutOfRange(usize),
    #[error("exhaustive graph enumeration is limited to order <= {max}, got {0}", max = MAX_EXHAUSTIVE_ORDER)]
    ExhaustiveOrderTooLarge(usize),
    #[error("regular generator needs order = 1 mod 4 and degree = (order-1)/2, got degree {degree}, order {order}")]
    RegularParams { degree: usize, order: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Stage configuration for [`scan`].
#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Run the congruence pre-filter stage.
    pub use_prefilter: bool,
    /// Run the modular rank stage.
    pub use_modp: bool,
    /// Odd prime for the modular stage.
    pub filter_prime: u64,
    /// Worker threads; 0 means all available parallelism.
    pub workers: usize,
    /// Graphs per work unit handed to a worker.
    pub chunk_size: usize,
}

impl Default for ScanConfig {
    fn default() -> ScanConfig {
        ScanConfig {
            use_prefilter: true,
            use_modp: true,
            filter_prime: DEFAULT_FILTER_PRIME,
            workers: 0,
            chunk_size: 128,
        }
    }
}

/// A graph whose Seidel matrix turned out singular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularWitness {
    pub graph6: String,
    /// Kernel vector entries in decimal.
    pub phi: Vec<String>,
    pub all_pm_one: bool,
}

/// Aggregate results of one scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    /// Common order of the scanned graphs, if they all agree.
    pub order: Option<usize>,
    /// Graphs scanned (malformed inputs not included).
    pub total: u64,
    /// Input lines that failed to parse.
    pub malformed: u64,
    pub prefilter_rejected: u64,
    pub modp_rejected: u64,
    /// Graphs that reached the exact-rank stage.
    pub exact_checked: u64,
    pub singular: Vec<SingularWitness>,
    /// The singular witnesses whose phi is all +-1.
    pub pm_one: Vec<SingularWitness>,
    pub wall_time_ms: u64,
}

impl ScanReport {
    /// JSON rendering with stable key order (struct declaration order).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Compact human-readable table.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let order = self
            .order
            .map_or_else(|| "mixed".to_string(), |n| n.to_string());
        out.push_str(&format!("order              {order}\n"));
        out.push_str(&format!("scanned            {}\n", self.total));
        if self.malformed > 0 {
            out.push_str(&format!("malformed lines    {}\n", self.malformed));
        }
        out.push_str(&format!("prefilter rejected {}\n", self.prefilter_rejected));
        out.push_str(&format!("mod-p rejected     {}\n", self.modp_rejected));
        out.push_str(&format!("exact checked      {}\n", self.exact_checked));
        out.push_str(&format!("singular           {}\n", self.singular.len()));
        out.push_str(&format!("with +-1 kernel    {}\n", self.pm_one.len()));
        out.push_str(&format!("wall time          {} ms\n", self.wall_time_ms));
        for w in &self.singular {
            out.push_str(&format!("  {}  phi = {}\n", w.graph6, w.phi.join(" ")));
        }
        out
    }
}

enum Outcome {
    Malformed,
    PrefilterRejected(usize),
    ModpRejected(usize),
    Nonsingular(usize),
    Singular(usize, SingularWitness),
}

fn classify(item: Result<Graph, Graph6Error>, cfg: &ScanConfig) -> Outcome {
    let Ok(g) = item else {
        return Outcome::Malformed;
    };
    let n = g.order();
    if cfg.use_prefilter
        && crate::analysis::prefilter_singularity(&g).verdict == Verdict::CertainlyNonsingular
    {
        return Outcome::PrefilterRejected(n);
    }
    let s = linalg::seidel_matrix(&g);
    if cfg.use_modp {
        let lower = linalg::rank_lower_bound_mod_p(&s, cfg.filter_prime)
            .expect("prime validated before scan");
        if lower == n {
            return Outcome::ModpRejected(n);
        }
    }
    match linalg::kernel_primitive(&s).expect("Seidel matrices have nullity <= 1") {
        None => Outcome::Nonsingular(n),
        Some(v) => {
            let all_pm_one = v.entries().iter().all(|e| e.magnitude() == &1u32.into());
            let witness = SingularWitness {
                graph6: encode_graph6(&g),
                phi: v.entries().iter().map(|e| e.to_string()).collect(),
                all_pm_one,
            };
            Outcome::Singular(n, witness)
        }
    }
}

/// Runs the staged pipeline over a stream of parse results. Malformed items
/// are counted, not fatal. Results are merged in input order, so reports are
/// reproducible for a fixed input regardless of worker count.
pub fn scan<I>(source: I, cfg: &ScanConfig) -> Result<ScanReport, SearchError>
where
    I: IntoIterator<Item = Result<Graph, Graph6Error>>,
{
    linalg::validate_filter_prime(cfg.filter_prime)?;
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .expect("worker pool");

    let mut report = ScanReport {
        order: None,
        total: 0,
        malformed: 0,
        prefilter_rejected: 0,
        modp_rejected: 0,
        exact_checked: 0,
        singular: Vec::new(),
        pm_one: Vec::new(),
        wall_time_ms: 0,
    };
    let mut mixed_orders = false;

    let mut source = source.into_iter();
    let batch_len = cfg.chunk_size * pool.current_num_threads().max(1);
    loop {
        let batch: Vec<_> = source.by_ref().take(batch_len).collect();
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            batch
                .into_par_iter()
                .with_min_len(cfg.chunk_size)
                .map(|item| classify(item, cfg))
                .collect()
        });
        for outcome in outcomes {
            let order = match &outcome {
                Outcome::Malformed => {
                    report.malformed += 1;
                    continue;
                }
                Outcome::PrefilterRejected(n) => {
                    report.prefilter_rejected += 1;
                    *n
                }
                Outcome::ModpRejected(n) => {
                    report.modp_rejected += 1;
                    *n
                }
                Outcome::Nonsingular(n) => {
                    report.exact_checked += 1;
                    *n
                }
                Outcome::Singular(n, _) => {
                    report.exact_checked += 1;
                    *n
                }
            };
            report.total += 1;
            match report.order {
                None if !mixed_orders => report.order = Some(order),
                Some(o) if o != order => {
                    report.order = None;
                    mixed_orders = true;
                }
                _ => {}
            }
            if let Outcome::Singular(_, witness) = outcome {
                if witness.all_pm_one {
                    report.pm_one.push(witness.clone());
                }
                report.singular.push(witness);
            }
        }
    }

    report.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Scans every non-isomorphic free tree of order `n`.
pub fn scan_trees(n: usize, cfg: &ScanConfig) -> Result<ScanReport, SearchError> {
    let trees = enumerate_trees(n)?;
    scan(trees.map(Ok), cfg)
}

/// Cap for [`enumerate_small_graphs`]: dedup is by brute force over all
/// vertex permutations.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;

/// One representative per isomorphism class of graphs on `n` vertices,
/// for small `n`. The representative is the lexicographically least edge
/// bitmask in its class.
pub fn enumerate_small_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(SearchError::ExhaustiveOrderTooLarge(n));
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let pairs = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs {
        let g = graph_from_pair_mask(n, mask);
        let canonical = perms
            .iter()
            .map(|p| pair_mask(&g.permuted(p)))
            .min()
            .expect("at least one permutation");
        if canonical == mask {
            out.push(g);
        }
    }
    Ok(out)
}

fn pair_mask(g: &Graph) -> u64 {
    let n = g.order();
    let mut mask = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(i, j) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn order9_trees_have_no_singular_seidel_matrix() {
        let report = scan_trees(9, &ScanConfig::default()).unwrap();
        assert_eq!(report.order, Some(9));
        assert_eq!(report.total, 47);
        assert!(report.singular.is_empty());
        assert_eq!(
            report.total,
            report.prefilter_rejected + report.modp_rejected + report.exact_checked
        );
    }

    #[test]
    fn stage_toggles_never_change_results() {
        let all_on = ScanConfig::default();
        let all_off = ScanConfig {
            use_prefilter: false,
            use_modp: false,
            ..ScanConfig::default()
        };
        let no_prefilter = ScanConfig {
            use_prefilter: false,
            ..ScanConfig::default()
        };
        let no_modp = ScanConfig {
            use_modp: false,
            ..ScanConfig::default()
        };
        for n in [9, 13] {
            let baseline = scan_trees(n, &all_on).unwrap();
            for cfg in [&all_off, &no_prefilter, &no_modp] {
                let other = scan_trees(n, cfg).unwrap();
                assert_eq!(baseline.singular, other.singular, "order {n}");
                assert_eq!(baseline.pm_one, other.pm_one, "order {n}");
                assert_eq!(baseline.total, other.total, "order {n}");
            }
        }
    }

    #[test]
    fn stage_toggles_never_change_results_order_17() {
        let all_on = ScanConfig::default();
        let all_off = ScanConfig {
            use_prefilter: false,
            use_modp: false,
            ..ScanConfig::default()
        };
        let baseline = scan_trees(17, &all_on).unwrap();
        assert_eq!(baseline.singular.len(), 15);
        let unfiltered = scan_trees(17, &all_off).unwrap();
        assert_eq!(unfiltered.prefilter_rejected, 0);
        assert_eq!(unfiltered.modp_rejected, 0);
        assert_eq!(baseline.singular, unfiltered.singular);
        assert_eq!(baseline.pm_one, unfiltered.pm_one);
    }

    #[test]
    fn malformed_lines_are_counted_not_fatal() {
        let items = vec![
            crate::graph6::parse_graph6(b"Dhc"),
            crate::graph6::parse_graph6(b"not graph6"),
            crate::graph6::parse_graph6(b"D??"),
        ];
        let report = scan(items, &ScanConfig::default()).unwrap();
        assert_eq!(report.total, 2);
        assert_eq!(report.malformed, 1);
        assert_eq!(report.singular.len(), 1); // C5
    }

    #[test]
    fn scan_rejects_invalid_prime() {
        let cfg = ScanConfig {
            filter_prime: 91,
            ..ScanConfig::default()
        };
        assert!(matches!(
            scan_trees(5, &cfg).unwrap_err(),
            SearchError::Linalg(LinalgError::NotPrime(91))
        ));
    }

    #[test]
    fn reports_are_deterministic_across_runs() {
        let cfg = ScanConfig {
            workers: 2,
            chunk_size: 16,
            ..ScanConfig::default()
        };
        let mut a = scan_trees(11, &cfg).unwrap();
        let mut b = scan_trees(11, &cfg).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn small_graph_class_counts() {
        // Known counts of graphs up to isomorphism.
        assert_eq!(enumerate_small_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_small_graphs(2).unwrap().len(), 2);
        assert_eq!(enumerate_small_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_small_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_small_graphs(5).unwrap().len(), 34);
        assert!(enumerate_small_graphs(7).is_err());
    }

    #[test]
    fn order5_singular_graphs_all_have_pm_one_kernels() {
        let graphs = enumerate_small_graphs(5).unwrap();
        let report = scan(graphs.iter().cloned().map(Ok), &ScanConfig::default()).unwrap();
        assert_eq!(report.total, 34);
        assert!(!report.singular.is_empty());
        assert_eq!(report.singular, report.pm_one);

        // Filter soundness on the same exhaustive input.
        let all_off = ScanConfig {
            use_prefilter: false,
            use_modp: false,
            ..ScanConfig::default()
        };
        let unfiltered = scan(graphs.into_iter().map(Ok), &all_off).unwrap();
        assert_eq!(report.singular, unfiltered.singular);
    }

    #[test]
    fn mixed_order_streams_report_no_common_order() {
        let items = vec![Ok(Graph::cycle(5).unwrap()), Ok(Graph::path(9).unwrap())];
        let report = scan(items, &ScanConfig::default()).unwrap();
        assert_eq!(report.order, None);
        assert_eq!(report.total, 2);
    }
}

//! Scans every non-isomorphic free tree of a given order for singular
//! Seidel matrices and prints the witnesses.
//!
//! Usage: cargo run --release --example tree_scan [order]

use seidel::search::{scan_trees, ScanConfig};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(17);
    let report = scan_trees(order, &ScanConfig::default()).expect("scan failed");
    print!("{}", report.table());
}

//! Desk-scale property sweep: re-checks the library's structural claims on
//! randomized and exhaustively enumerated inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use seidel::analysis::{self, Verdict};
use seidel::families::{Family, FamilySpec};
use seidel::graph::{Graph, VertexSet};
use seidel::graph6::{encode_graph6, parse_graph6};
use seidel::linalg::{kernel_primitive, rank_exact, seidel_matrix, PrimitiveVector};
use seidel::search::{enumerate_small_graphs, enumerate_trees, random_regular};

use crate::{Cli, CliError, Format};

struct CheckResult {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check<F>(name: &'static str, body: F) -> CheckResult
where
    F: FnOnce() -> Result<String, String>,
{
    match body() {
        Ok(detail) => CheckResult { name, pass: true, detail },
        Err(detail) => CheckResult { name, pass: false, detail },
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(0.5))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges).unwrap()
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    VertexSet::from_bits(n, rng.gen::<u64>() & mask)
}

pub fn run(cli: &Cli, order_cap: usize) -> Result<(), CliError> {
    if order_cap == 0 || order_cap > 17 {
        return Err(CliError::Usage(format!(
            "--order must be in 1..=17 for the desk-scale suite, got {order_cap}"
        )));
    }
    let seed = cli.seed;
    let results = vec![
        check("rank-bound-small-orders", rank_bound_small_orders),
        check("even-order-nonsingular", || even_order_nonsingular(seed)),
        check("switch-involution", || switch_involution(seed)),
        check("even-representative-unique", || even_representative_unique(seed)),
        check("graph6-roundtrip-trees", || graph6_roundtrip_trees(order_cap)),
        check("family-recursion", family_recursion),
        check("prefilter-soundness", || prefilter_soundness(order_cap)),
        check("regular-roundtrip", || regular_roundtrip(seed)),
        check("phi-covariance", || phi_covariance(seed)),
    ];

    let failed = results.iter().filter(|r| !r.pass).count();
    match cli.format {
        Format::Text => {
            for r in &results {
                let mark = if r.pass { "ok  " } else { "FAIL" };
                println!("{mark} {:<28} {}", r.name, r.detail);
            }
            println!("{} checks, {} failed", results.len(), failed);
        }
        Format::Json => {
            let value = json!({
                "checks": results.iter().map(|r| json!({
                    "name": r.name, "pass": r.pass, "detail": r.detail,
                })).collect::<Vec<_>>(),
                "failed": failed,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
        Format::Csv => {
            println!("name,pass,detail");
            for r in &results {
                println!("{},{},{}", r.name, r.pass, r.detail);
            }
        }
    }
    if failed > 0 {
        return Err(CliError::Compute(format!(
            "{failed} of {} checks failed",
            results.len()
        )));
    }
    Ok(())
}

/// rank S >= n - 1 on every isomorphism class of order <= 5.
fn rank_bound_small_orders() -> Result<String, String> {
    let mut checked = 0usize;
    for n in 1..=5 {
        for g in enumerate_small_graphs(n).map_err(|e| e.to_string())? {
            let rank = rank_exact(&seidel_matrix(&g));
            if rank + 1 < n {
                return Err(format!("rank {rank} < n - 1 for {}", encode_graph6(&g)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs of order <= 5"))
}

/// Even order forces a nonsingular Seidel matrix.
fn even_order_nonsingular(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe0e0);
    let mut checked = 0usize;
    for n in [4usize, 6, 8] {
        for _ in 0..100 {
            let g = random_graph(&mut rng, n);
            if rank_exact(&seidel_matrix(&g)) != n {
                return Err(format!("singular even-order graph {}", encode_graph6(&g)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} random graphs of orders 4/6/8"))
}

/// switch(switch(g; a); a) = g and switch(g; a) = switch(g; V \ a).
fn switch_involution(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51);
    for _ in 0..200 {
        let n = rng.gen_range(1..=16);
        let g = random_graph(&mut rng, n);
        let a = random_set(&mut rng, n);
        if g.switch(&a).switch(&a) != g {
            return Err(format!("involution broken on {}", encode_graph6(&g)));
        }
        if g.switch(&a) != g.switch(&a.complement()) {
            return Err(format!("complement-set switch differs on {}", encode_graph6(&g)));
        }
    }
    Ok("200 random (graph, set) pairs".to_string())
}

/// Odd order: the even representative does not depend on prior switchings.
fn even_representative_unique(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xeee);
    let mut checked = 0usize;
    for n in [5usize, 7, 9] {
        for _ in 0..10 {
            let g = random_graph(&mut rng, n);
            let rep = g.even_representative().map_err(|e| e.to_string())?;
            if !rep.is_even_graph() {
                return Err(format!("representative of {} is not even", encode_graph6(&g)));
            }
            for _ in 0..20 {
                let a = random_set(&mut rng, n);
                let other = g.switch(&a).even_representative().map_err(|e| e.to_string())?;
                if other != rep {
                    return Err(format!(
                        "representative changed after switching {}",
                        encode_graph6(&g)
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} switched instances of odd order"))
}

/// graph6 round-trips on every enumerated tree.
fn graph6_roundtrip_trees(order_cap: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for n in 1..=order_cap.min(12) {
        for g in enumerate_trees(n).map_err(|e| e.to_string())? {
            let enc = encode_graph6(&g);
            let back = parse_graph6(enc.as_bytes()).map_err(|e| e.to_string())?;
            if back != g {
                return Err(format!("round trip failed for {enc}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} trees up to order {}", order_cap.min(12)))
}

/// Closed-form family phi equals the kernel solver's output.
fn family_recursion() -> Result<String, String> {
    let mut specs = Vec::new();
    for k in 1..=6 {
        specs.push(FamilySpec::new(Family::G, k));
    }
    for k in 0..=4 {
        specs.push(FamilySpec::new(Family::H, k));
    }
    for spec in &specs {
        let g = spec.build().map_err(|e| e.to_string())?;
        let solved = kernel_primitive(&seidel_matrix(&g))
            .map_err(|e| e.to_string())?
            .ok_or("family member unexpectedly nonsingular")?;
        let expected = PrimitiveVector::normalize(spec.expected_phi().map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if solved != expected {
            return Err(format!("{} k={} closed form disagrees", spec.family, spec.k));
        }
    }
    Ok(format!("{} family members", specs.len()))
}

/// A pre-filter rejection always means full exact rank.
fn prefilter_soundness(order_cap: usize) -> Result<String, String> {
    let mut rejected = 0usize;
    let mut total = 0usize;
    for n in 1..=order_cap {
        for g in enumerate_trees(n).map_err(|e| e.to_string())? {
            total += 1;
            let verdict = analysis::prefilter_singularity(&g).verdict;
            if verdict == Verdict::CertainlyNonsingular {
                rejected += 1;
                if rank_exact(&seidel_matrix(&g)) != n {
                    return Err(format!(
                        "pre-filter rejected a singular tree: {}",
                        encode_graph6(&g)
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{rejected} of {total} trees up to order {order_cap} rejected, all full rank"
    ))
}

/// Switchings of random regular graphs have +-1 kernels, and the witness
/// switches back to a regular graph.
fn regular_roundtrip(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc1c);
    let mut checked = 0usize;
    for k in 1..=3usize {
        let (degree, order) = (2 * k, 4 * k + 1);
        for i in 0..10u64 {
            let h = random_regular(degree, order, seed.wrapping_add(i)).map_err(|e| e.to_string())?;
            let a = random_set(&mut rng, order);
            let (g, phi) = analysis::pm_one_from_regular(&h, &a).map_err(|e| e.to_string())?;
            if !phi.all_pm_one() {
                return Err(format!("phi not +-1 for {}", encode_graph6(&g)));
            }
            let witness = analysis::regular_switch_witness(&phi).map_err(|e| e.to_string())?;
            if g.switch(&witness).is_regular() != Some(degree) {
                return Err(format!("witness switch not regular for {}", encode_graph6(&g)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} seeded round trips (k = 1..3)"))
}

/// phi is invariant under complement and covariant under switching.
fn phi_covariance(seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
    let mut specs = Vec::new();
    for k in 1..=4 {
        specs.push(FamilySpec::new(Family::G, k));
    }
    for k in 0..=2 {
        specs.push(FamilySpec::new(Family::H, k));
    }
    for k in 1..=3 {
        specs.push(FamilySpec::new(Family::P4Union, k));
    }
    for k in 3..=5 {
        specs.push(FamilySpec::new(Family::CycleLeaves, k));
    }
    let mut checked = 0usize;
    for spec in &specs {
        let g = spec.build().map_err(|e| e.to_string())?;
        let p = analysis::phi(&g)
            .map_err(|e| e.to_string())?
            .ok_or("family member unexpectedly nonsingular")?;
        let pc = analysis::phi(&g.complement())
            .map_err(|e| e.to_string())?
            .ok_or("complement unexpectedly nonsingular")?;
        if p.vector() != pc.vector() {
            return Err(format!("phi changed under complement: {} k={}", spec.family, spec.k));
        }
        for _ in 0..5 {
            let a = random_set(&mut rng, g.order());
            let switched = analysis::phi(&g.switch(&a))
                .map_err(|e| e.to_string())?
                .ok_or("switched graph unexpectedly nonsingular")?;
            if switched.vector() != &p.switched_vector(&a) {
                return Err(format!(
                    "switching covariance broken: {} k={}",
                    spec.family, spec.k
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{} members, {checked} switchings", specs.len()))
}

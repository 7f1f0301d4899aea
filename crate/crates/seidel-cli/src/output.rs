//! Rendering of command results in text, JSON, and CSV.
//!
//! CSV columns are fixed per subcommand. graph6 bytes sit in 63..=126, so
//! neither commas nor quotes ever appear in a field and no escaping is
//! needed.

use num::BigInt;
use serde_json::json;

use seidel::analysis::{self, AnalysisError, FilterVerdict, PhiVector, Verdict};
use seidel::families::FamilySpec;
use seidel::graph::Graph;
use seidel::graph6::encode_graph6;
use seidel::linalg::{rank_exact, seidel_matrix};
use seidel::search::ScanReport;

use crate::Format;

pub struct AnalysisReport {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    pub filter: FilterVerdict,
    pub rank: usize,
    pub phi: Option<PhiChecks>,
}

pub struct PhiChecks {
    pub entries: Vec<String>,
    pub all_pm_one: bool,
    pub balance: bool,
    pub odd_entries: bool,
    pub congruences_pass: bool,
    pub mod8_applied: bool,
    /// `None` when the check does not apply to this graph.
    pub leaf_odd_count: Option<bool>,
    pub tree_residues: Option<bool>,
    pub edge_bounds: Option<bool>,
    /// Switching set to a regular graph; `None` when phi is not +-1.
    pub witness: Option<Vec<usize>>,
}

fn optional(check: Result<bool, AnalysisError>) -> Result<Option<bool>, AnalysisError> {
    match check {
        Ok(v) => Ok(Some(v)),
        Err(AnalysisError::NotApplicable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport, AnalysisError> {
    let filter = analysis::prefilter_singularity(g);
    let rank = rank_exact(&seidel_matrix(g));
    let phi = match analysis::phi(g)? {
        None => None,
        Some(p) => {
            let congruences = analysis::check_pair_congruences(&p);
            let witness = match analysis::regular_switch_witness(&p) {
                Ok(l) => Some(l.iter().collect()),
                Err(AnalysisError::NoWitness) => None,
                Err(e) => return Err(e),
            };
            Some(PhiChecks {
                entries: p.entries().iter().map(BigInt::to_string).collect(),
                all_pm_one: p.all_pm_one(),
                balance: analysis::check_kernel_balance(&p),
                odd_entries: analysis::check_odd_entries(&p),
                congruences_pass: congruences.pass,
                mod8_applied: g.is_even_graph(),
                leaf_odd_count: optional(analysis::check_leaf_odd_count(&p))?,
                tree_residues: optional(analysis::check_tree_residues(g))?,
                edge_bounds: optional(analysis::check_edge_bounds(&p))?,
                witness,
            })
        }
    };
    Ok(AnalysisReport {
        graph6: encode_graph6(g),
        order: g.order(),
        size: g.edge_count(),
        degrees: g.degrees(),
        filter,
        rank,
        phi,
    })
}

pub fn phi_line(format: Format, input: &str, phi: Option<&PhiVector>) -> String {
    match format {
        Format::Text => match phi {
            Some(p) => join(p.entries()),
            None => "nonsingular".to_string(),
        },
        Format::Json => json!({
            "graph6": input,
            "singular": phi.is_some(),
            "phi": phi.map(string_entries),
        })
        .to_string(),
        Format::Csv => format!(
            "{input},{},{}",
            phi.is_some(),
            phi.map(|p| join(p.entries())).unwrap_or_default()
        ),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn string_entries(p: &PhiVector) -> Vec<String> {
    p.entries().iter().map(BigInt::to_string).collect()
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::CertainlyNonsingular => "certainly-nonsingular",
        Verdict::PossiblySingular => "possibly-singular",
    }
}

fn tri(v: Option<bool>) -> String {
    v.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

pub fn render_analysis(format: Format, r: &AnalysisReport) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("graph6:            {}\n", r.graph6));
            out.push_str(&format!("order / size:      {} / {}\n", r.order, r.size));
            out.push_str(&format!("degrees:           {}\n", join(&r.degrees)));
            out.push_str(&format!(
                "prefilter:         {} (order_ok={} odd_size_ok={} even_size_ok={})\n",
                verdict_str(r.filter.verdict),
                r.filter.order_ok,
                r.filter.odd_size_ok,
                tri(r.filter.even_size_ok),
            ));
            let nullity = r.order - r.rank;
            out.push_str(&format!("exact rank:        {} (nullity {})\n", r.rank, nullity));
            match &r.phi {
                None => out.push_str("phi:               none (nonsingular)\n"),
                Some(p) => {
                    out.push_str(&format!("phi:               {}\n", p.entries.join(" ")));
                    out.push_str(&format!("all +-1:           {}\n", p.all_pm_one));
                    out.push_str(&format!("kernel balance:    {}\n", p.balance));
                    out.push_str(&format!("odd entries:       {}\n", p.odd_entries));
                    out.push_str(&format!(
                        "pair congruences:  {} (mod 4{})\n",
                        p.congruences_pass,
                        if p.mod8_applied { ", mod 8: even graph" } else { "" }
                    ));
                    out.push_str(&format!("leaf odd count:    {}\n", tri(p.leaf_odd_count)));
                    out.push_str(&format!("tree residues:     {}\n", tri(p.tree_residues)));
                    out.push_str(&format!("edge bounds:       {}\n", tri(p.edge_bounds)));
                    match &p.witness {
                        Some(l) => out.push_str(&format!(
                            "regular witness:   switch at {{{}}}\n",
                            join(l)
                        )),
                        None => out.push_str("regular witness:   none (phi is not +-1)\n"),
                    }
                }
            }
            out
        }
        Format::Json => {
            let phi = r.phi.as_ref().map(|p| {
                json!({
                    "entries": p.entries,
                    "all_pm_one": p.all_pm_one,
                    "balance": p.balance,
                    "odd_entries": p.odd_entries,
                    "congruences_pass": p.congruences_pass,
                    "mod8_applied": p.mod8_applied,
                    "leaf_odd_count": p.leaf_odd_count,
                    "tree_residues": p.tree_residues,
                    "edge_bounds": p.edge_bounds,
                    "witness": p.witness,
                })
            });
            let value = json!({
                "graph6": r.graph6,
                "order": r.order,
                "size": r.size,
                "degrees": r.degrees,
                "prefilter": {
                    "order_ok": r.filter.order_ok,
                    "odd_size_ok": r.filter.odd_size_ok,
                    "even_size_ok": r.filter.even_size_ok,
                    "verdict": verdict_str(r.filter.verdict),
                },
                "rank": r.rank,
                "singular": r.phi.is_some(),
                "phi": phi,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
        }
        Format::Csv => {
            let header = "graph6,order,size,order_ok,odd_size_ok,even_size_ok,verdict,rank,\
                          singular,phi,all_pm_one,balance,odd_entries,congruences_pass,\
                          leaf_odd_count,tree_residues,edge_bounds";
            let p = r.phi.as_ref();
            let row = format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.graph6,
                r.order,
                r.size,
                r.filter.order_ok,
                r.filter.odd_size_ok,
                tri(r.filter.even_size_ok),
                verdict_str(r.filter.verdict),
                r.rank,
                p.is_some(),
                p.map(|p| p.entries.join(" ")).unwrap_or_default(),
                p.map_or_else(|| "n/a".into(), |p| p.all_pm_one.to_string()),
                p.map_or_else(|| "n/a".into(), |p| p.balance.to_string()),
                p.map_or_else(|| "n/a".into(), |p| p.odd_entries.to_string()),
                p.map_or_else(|| "n/a".into(), |p| p.congruences_pass.to_string()),
                p.map_or_else(|| "n/a".into(), |p| tri(p.leaf_odd_count)),
                p.map_or_else(|| "n/a".into(), |p| tri(p.tree_residues)),
                p.map_or_else(|| "n/a".into(), |p| tri(p.edge_bounds)),
            );
            format!("{header}\n{row}\n")
        }
    }
}

pub fn render_family(
    format: Format,
    spec: &FamilySpec,
    g: &Graph,
    expected: &[BigInt],
    computed: &PhiVector,
) -> String {
    let graph6 = encode_graph6(g);
    let expected_strs: Vec<String> = expected.iter().map(BigInt::to_string).collect();
    let computed_strs = string_entries(computed);
    let matches = expected_strs == computed_strs;
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("family:    {} (k = {})\n", spec.family, spec.k));
            out.push_str(&format!("order:     {}\n", g.order()));
            out.push_str(&format!("graph6:    {graph6}\n"));
            out.push_str(&format!("expected:  {}\n", expected_strs.join(" ")));
            out.push_str(&format!("computed:  {}\n", computed_strs.join(" ")));
            out.push_str(&format!("match:     {matches}\n"));
            out
        }
        Format::Json => {
            let value = json!({
                "family": spec.family.to_string(),
                "k": spec.k,
                "order": g.order(),
                "graph6": graph6,
                "expected_phi": expected_strs,
                "computed_phi": computed_strs,
                "match": matches,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
        }
        Format::Csv => format!(
            "family,k,order,graph6,expected_phi,computed_phi,match\n{},{},{},{},{},{},{}\n",
            spec.family,
            spec.k,
            g.order(),
            graph6,
            expected_strs.join(" "),
            computed_strs.join(" "),
            matches
        ),
    }
}

pub fn render_scan(format: Format, report: &ScanReport) -> String {
    match format {
        Format::Text => report.table(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => {
            let mut out = String::from("order,graph6,phi,all_pm_one\n");
            let order = report
                .order
                .map_or_else(|| "mixed".to_string(), |n| n.to_string());
            for w in &report.singular {
                out.push_str(&format!(
                    "{order},{},{},{}\n",
                    w.graph6,
                    w.phi.join(" "),
                    w.all_pm_one
                ));
            }
            out
        }
    }
}

pub fn render_switch(format: Format, input: &str, vertices: &[usize], switched: &Graph) -> String {
    let out6 = encode_graph6(switched);
    match format {
        Format::Text => format!("{out6}\n"),
        Format::Json => {
            let value = json!({
                "graph6": input,
                "vertices": vertices,
                "switched": out6,
            });
            format!("{}\n", serde_json::to_string(&value).expect("serializable"))
        }
        Format::Csv => format!(
            "graph6,vertices,switched\n{input},{},{out6}\n",
            join(vertices)
        ),
    }
}

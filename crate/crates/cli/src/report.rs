//! JSON documents for shrinkings and orientations, and the bench CSV.

use std::io::Write;

use hypershrink::gen::random_hypertree;
use hypershrink::{
    shrink_hypertree_with_k, verify_shrinking, Hypergraph, Shrinking, VerificationReport,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Serialize)]
struct Degrees<'a> {
    hyper: &'a [usize],
    tree: &'a [usize],
}

#[derive(Serialize)]
struct ShrinkingDoc<'a> {
    tree: Vec<[usize; 2]>,
    assignment: &'a [usize],
    degrees: Degrees<'a>,
    bound: &'a [usize],
}

/// `{"tree", "assignment", "degrees": {"hyper", "tree"}, "bound"}`.
pub fn shrinking_json(s: &Shrinking, report: &VerificationReport) -> String {
    let doc = ShrinkingDoc {
        tree: s.tree.iter().map(|&(u, v)| [u, v]).collect(),
        assignment: &s.assignment,
        degrees: Degrees {
            hyper: &report.hyper_degrees,
            tree: &report.tree_degrees,
        },
        bound: &report.bounds,
    };
    serde_json::to_string(&doc).expect("plain data serialises")
}

/// One line per check.
pub fn verification_summary(r: &VerificationReport) -> String {
    fn line(name: &str, ok: bool, detail: String) -> String {
        format!("{} {name}{detail}\n", if ok { "PASS" } else { "FAIL" })
    }
    fn listed(v: &[usize]) -> String {
        if v.is_empty() {
            String::new()
        } else {
            format!(" at {v:?}")
        }
    }
    let mut s = String::new();
    s += &line("spanning tree", r.spanning_tree, String::new());
    s += &line("bijection", r.bijective, String::new());
    s += &line(
        "pair containment",
        r.containment_failures.is_empty(),
        listed(&r.containment_failures),
    );
    s += &line(
        &format!("degree bound max(1, floor(d/{}))", r.k),
        r.bound_failures.is_empty(),
        listed(&r.bound_failures),
    );
    s += &line(
        &format!("degree bound d/{}", 2 * r.k),
        r.half_bound_failures.is_empty(),
        listed(&r.half_bound_failures),
    );
    if let Some(f) = &r.hundredth_bound_failures {
        s += &line("degree bound d/100 (rank 3)", f.is_empty(), listed(f));
    }
    s
}

#[derive(Serialize)]
struct ViolatorDoc<'a> {
    violator: &'a [usize],
    demand: usize,
    incident_edges: usize,
}

pub fn violator_json(set: &[usize], demand: usize, incident_edges: usize) -> String {
    serde_json::to_string(&ViolatorDoc {
        violator: set,
        demand,
        incident_edges,
    })
    .expect("plain data serialises")
}

/// Statistics for one bench trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub rank: usize,
    /// `min_v d_T(v) * k / d_H(v)`.
    pub min_ratio: String,
    /// `d_T(v) - max(1, floor(d_H(v) / k))` summarised over vertices.
    pub min_slack: i64,
    pub mean_slack: String,
    pub max_slack: i64,
    /// `min_v d_T(v) / d_H(v)`.
    pub min_tree_to_hyper: String,
    /// `d_T(v) >= d_H(v) / 100` everywhere; `na` unless the rank is 3.
    pub hundredth_bound: String,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub trials: usize,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub p: f64,
}

fn row(trial: usize, cfg: &BenchConfig) -> Result<BenchRow, String> {
    let seed = cfg.seed.wrapping_add(trial as u64);
    let (h, _) = random_hypertree(cfg.n, cfg.k, seed, cfg.p).map_err(|e| e.to_string())?;
    let s = shrink_hypertree_with_k(&h, cfg.k).map_err(|e| format!("trial {trial}: {e}"))?;
    Ok(summarise(
        trial,
        seed,
        cfg.k,
        &h,
        &verify_shrinking(&h, &s, Some(cfg.k)),
    ))
}

fn summarise(
    trial: usize,
    seed: u64,
    k: usize,
    h: &Hypergraph,
    r: &VerificationReport,
) -> BenchRow {
    let n = h.vertex_count();
    let slack: Vec<i64> = (0..n)
        .map(|v| r.tree_degrees[v] as i64 - r.bounds[v] as i64)
        .collect();
    let ratio = |scale: usize| {
        (0..n)
            .filter(|&v| r.hyper_degrees[v] > 0)
            .map(|v| (r.tree_degrees[v] * scale) as f64 / r.hyper_degrees[v] as f64)
            .fold(f64::INFINITY, f64::min)
    };
    BenchRow {
        trial,
        seed,
        n,
        k,
        rank: h.rank(),
        min_ratio: format!("{:.6}", ratio(k)),
        min_slack: slack.iter().copied().min().unwrap_or(0),
        mean_slack: format!("{:.6}", slack.iter().sum::<i64>() as f64 / n as f64),
        max_slack: slack.iter().copied().max().unwrap_or(0),
        min_tree_to_hyper: format!("{:.6}", ratio(1)),
        hundredth_bound: match &r.hundredth_bound_failures {
            Some(f) => f.is_empty().to_string(),
            None => "na".into(),
        },
    }
}

/// Runs every trial (in parallel) and returns rows in trial order.
pub fn bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, String> {
    (0..cfg.trials)
        .into_par_iter()
        .map(|t| row(t, cfg))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

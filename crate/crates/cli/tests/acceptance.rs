//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use std::process::ExitCode;

use hypershrink::gen::{
    adversarial_star, below, random_coloured_graph, random_hypergraph, random_hypertree, rng,
};
use hypershrink::rainbow::DEFAULT_COLOUR_LIMIT;
use hypershrink::recognition::DEFAULT_VERTEX_LIMIT;
use hypershrink::shrink::{shrink_with_trace, DEFAULT_ENUMERATION_LIMIT};
use hypershrink::{
    brute_force_shrink, check_rainbow_condition, clique_graph, is_hypertree,
    is_hypertree_bruteforce, orient_floor, orient_with_demands, rainbow_spanning_tree,
    shrink_hypertree, star_graph, verify_shrinking, DemandFunction, Hypergraph, OrientationResult,
    RainbowCondition, Shrinking,
};

const PROBABILITIES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// 1200 hypertrees with n in 2..=200, k in 2..=6 and every probability.
fn hypertree_corpus() -> Vec<(Hypergraph, usize)> {
    (0..1200u64)
        .map(|i| {
            let n = 2 + (i as usize * 37) % 199;
            let k = 2 + i as usize % 5;
            let p = PROBABILITIES[(i as usize / 5) % 5];
            (random_hypertree(n, k, 1000 + i, p).unwrap().0, k)
        })
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn shrink_bounds(corpus: &[(Hypergraph, usize)], shrinkings: &[Option<Shrinking>]) -> Outcome {
    let mut vertices = 0;
    for ((h, _), s) in corpus.iter().zip(shrinkings) {
        let Some(s) = s else {
            return outcome(false, "shrinking failed on a generated hypertree");
        };
        let r = verify_shrinking(h, s, None);
        if !(r.spanning_tree && r.bijective && r.containment_failures.is_empty()) {
            return outcome(false, format!("invalid shrinking: {r:?}"));
        }
        if let Some(&v) = r.bound_failures.first() {
            return outcome(
                false,
                format!("vertex {v}: d_T {} < {}", r.tree_degrees[v], r.bounds[v]),
            );
        }
        vertices += h.vertex_count();
    }
    outcome(
        true,
        format!("{} hypertrees, {vertices} vertices", corpus.len()),
    )
}

fn half_bound(corpus: &[(Hypergraph, usize)], shrinkings: &[Option<Shrinking>]) -> Outcome {
    for ((h, _), s) in corpus.iter().zip(shrinkings) {
        let k = h.rank();
        let Some(s) = s else {
            return outcome(false, "missing shrinking");
        };
        let deg = s.tree_degrees(h.vertex_count());
        for (v, &d) in deg.iter().enumerate() {
            if 2 * k * d < h.degree(v) {
                return outcome(
                    false,
                    format!("d_T {} < d_H {} / {}", d, h.degree(v), 2 * k),
                );
            }
        }
    }
    outcome(true, format!("{} hypertrees", corpus.len()))
}

fn hundredth_bound(corpus: &[(Hypergraph, usize)], shrinkings: &[Option<Shrinking>]) -> Outcome {
    let mut count = 0;
    for ((h, _), s) in corpus.iter().zip(shrinkings) {
        if h.rank() != 3 {
            continue;
        }
        count += 1;
        let Some(s) = s else {
            return outcome(false, "missing shrinking");
        };
        let deg = s.tree_degrees(h.vertex_count());
        if (0..h.vertex_count()).any(|v| 100 * deg[v] < h.degree(v)) {
            return outcome(false, "d_T < d_H / 100");
        }
    }
    outcome(count > 0, format!("{count} rank-3 hypertrees"))
}

fn floor_orientation() -> Outcome {
    for i in 0..1200u64 {
        let n = 2 + (i as usize * 13) % 60;
        let m = (i as usize * 7) % 150;
        let k = 2 + i as usize % 6;
        let h = random_hypergraph(n, m, k, 5000 + i).unwrap();
        let k = h.rank().max(1) + (i as usize % 3) / 2;
        let d = orient_floor(&h, Some(k)).unwrap();
        if let Some(v) = (0..n).find(|&v| d.indegree(v) < h.degree(v) / k) {
            return outcome(false, format!("instance {i}, vertex {v}"));
        }
    }
    outcome(true, "1200 random hypergraphs")
}

fn demand_dichotomy() -> Outcome {
    let (mut oriented, mut violated) = (0, 0);
    for i in 0..1200u64 {
        let n = 2 + i as usize % 12;
        let m = (i as usize * 3) % 20;
        let h = random_hypergraph(n, m, 2 + i as usize % 4, 9000 + i).unwrap();
        let mut r = rng(i);
        let cap = 1 + i as usize % 4;
        let f = DemandFunction::new((0..n).map(|_| below(&mut r, cap)).collect());
        match orient_with_demands(&h, &f).unwrap() {
            OrientationResult::Oriented(d) => {
                if (0..n).any(|v| d.indegree(v) < f.get(v)) {
                    return outcome(false, format!("instance {i}: demand unmet"));
                }
                oriented += 1;
            }
            OrientationResult::Violator(set) => {
                if f.total_over(&set) <= h.incident_edge_count(&set) {
                    return outcome(
                        false,
                        format!("instance {i}: witness {set:?} does not recheck"),
                    );
                }
                violated += 1;
            }
        }
    }
    outcome(
        oriented > 0 && violated > 0,
        format!("{oriented} oriented, {violated} certified infeasible"),
    )
}

fn rainbow_equivalence() -> Outcome {
    let (mut present, mut absent) = (0, 0);
    for i in 0..600u64 {
        let n = 2 + i as usize % 7;
        let c = 1 + (i as usize * 5) % 12;
        let m = (i as usize * 11) % 25;
        let g = random_coloured_graph(n, c, m, 20_000 + i).unwrap();
        let tree = rainbow_spanning_tree(&g).is_some();
        let cond = check_rainbow_condition(&g, DEFAULT_COLOUR_LIMIT).unwrap();
        if tree != (cond == RainbowCondition::Satisfied) {
            return outcome(
                false,
                format!("graph {i}: finder {tree}, condition {cond:?}"),
            );
        }
        if tree {
            present += 1
        } else {
            absent += 1
        }
    }
    outcome(
        present > 0 && absent > 0,
        format!("600 graphs, {present} with tree, {absent} without"),
    )
}

fn hand_built() -> Vec<Hypergraph> {
    let e = |n: usize, edges: &[&[usize]]| {
        Hypergraph::new(n, edges.iter().map(|x| x.to_vec()).collect()).unwrap()
    };
    vec![
        e(4, &[&[0, 1, 2], &[1, 2, 3], &[2, 3]]),
        e(3, &[&[0, 1], &[1, 2], &[0, 2]]),
        e(4, &[&[0, 1], &[0, 1, 2], &[0, 1, 3]]),
        e(4, &[&[0, 1], &[1, 2], &[0, 2]]),
        e(3, &[&[0, 1, 2]]),
        e(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]),
        e(4, &[&[0, 1], &[1, 2], &[2, 3]]),
        e(3, &[&[0, 1], &[1, 2]]),
        e(2, &[&[0, 1]]),
        adversarial_star(3, 3).unwrap(),
    ]
}

fn recognition_corpus() -> Vec<Hypergraph> {
    let mut corpus = hand_built();
    let mut i = 0u64;
    while corpus.len() < 2200 {
        let n = 2 + i as usize % 5;
        let k = 2 + (i as usize / 5) % 4;
        let h = if i.is_multiple_of(3) {
            random_hypertree(n, k, 40_000 + i, PROBABILITIES[i as usize % 5])
                .unwrap()
                .0
        } else {
            random_hypergraph(n, n - 1, k, 40_000 + i).unwrap()
        };
        if h.edge_count() + 1 == n {
            corpus.push(h);
        }
        i += 1;
    }
    corpus
}

fn recognition_agreement(corpus: &[Hypergraph]) -> Outcome {
    let mut yes = 0;
    for h in corpus {
        let oracle = is_hypertree_bruteforce(h, DEFAULT_VERTEX_LIMIT)
            .unwrap()
            .is_hypertree();
        if is_hypertree(h) != oracle {
            return outcome(false, format!("disagreement on {h:?}"));
        }
        yes += usize::from(oracle);
    }
    outcome(
        yes > 0 && yes < corpus.len(),
        format!("{} instances, {yes} hypertrees", corpus.len()),
    )
}

fn shrink_oracle_agreement(hypertrees: &[(Hypergraph, usize)], mixed: &[Hypergraph]) -> Outcome {
    let (mut checked, mut spanning) = (0, 0);
    for h in hypertrees.iter().map(|(h, _)| h).chain(mixed) {
        let Ok(oracle) = brute_force_shrink(h, DEFAULT_ENUMERATION_LIMIT) else {
            continue;
        };
        checked += 1;
        if shrink_hypertree(h).is_ok() != oracle.is_some() {
            return outcome(false, format!("disagreement on {h:?}"));
        }
        spanning += usize::from(oracle.is_some());
    }
    outcome(
        checked > 0,
        format!("{checked} instances within limit, {spanning} spanning"),
    )
}

fn hub_probe() -> Outcome {
    let h = adversarial_star(100, 3).unwrap();
    match shrink_hypertree(&h) {
        Ok(s) => {
            let hub = s.tree_degrees(h.vertex_count())[0];
            outcome(hub >= 33, format!("d_T(hub) = {hub}, bound 33"))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn cli_output(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["hypershrink"];
    argv.extend_from_slice(args);
    let code = hypershrink_io::run(argv, &mut out, &mut err);
    (code, out, err)
}

fn determinism(corpus: &[(Hypergraph, usize)]) -> Outcome {
    for (h, _) in corpus.iter().step_by(10) {
        let a = shrink_with_trace(h, None).unwrap();
        let b = shrink_with_trace(h, None).unwrap();
        if a.shrinking != b.shrinking || a.orientation != b.orientation {
            return outcome(false, "shrink pipeline differs between runs");
        }
        if rainbow_spanning_tree(&clique_graph(h)) != rainbow_spanning_tree(&clique_graph(h))
            || star_graph(&a.orientation) != a.star
        {
            return outcome(false, "rainbow extraction differs between runs");
        }
    }
    for i in 0..50u64 {
        if random_hypertree(120, 5, i, 0.5) != random_hypertree(120, 5, i, 0.5)
            || random_hypergraph(30, 40, 4, i) != random_hypergraph(30, 40, 4, i)
        {
            return outcome(false, "generator differs between runs");
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.json");
    let (h, _) = random_hypertree(60, 4, 77, 0.6).unwrap();
    std::fs::write(&file, hypershrink_io::format::to_json(&h)).unwrap();
    let demands = dir.path().join("f.json");
    std::fs::write(&demands, format!("{:?}", vec![1; 60])).unwrap();
    let path = file.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", path],
        vec!["check", path],
        vec!["shrink", path],
        vec!["shrink", path, "--out", "dot"],
        vec!["shrink", path, "--k", "6"],
        vec!["orient", path],
        vec!["orient", path, "--demands", demands.to_str().unwrap()],
        vec!["rainbow", path, "--graph", "clique"],
        vec!["rainbow", path, "--out", "dot"],
        vec!["gen", "--n", "50", "--k", "4", "--seed", "3"],
        vec!["gen", "--star", "10", "--k", "3"],
        vec![
            "bench", "--trials", "20", "--n", "60", "--k", "3", "--seed", "9",
        ],
    ];
    for args in &commands {
        if cli_output(args) != cli_output(args) {
            return outcome(false, format!("command {args:?} differs between runs"));
        }
    }
    outcome(
        true,
        format!("operations and {} CLI invocations", commands.len()),
    )
}

fn main() -> ExitCode {
    let corpus = hypertree_corpus();
    let shrinkings: Vec<Option<Shrinking>> = corpus
        .iter()
        .map(|(h, _)| shrink_hypertree(h).ok())
        .collect();
    let recognition = recognition_corpus();

    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 degree bound max(1, floor(d/k))",
            Box::new(|| shrink_bounds(&corpus, &shrinkings)),
        ),
        (
            "2 degree bound d/2k",
            Box::new(|| half_bound(&corpus, &shrinkings)),
        ),
        (
            "3 degree bound d/100 on rank 3",
            Box::new(|| hundredth_bound(&corpus, &shrinkings)),
        ),
        (
            "4 floor orientation always exists",
            Box::new(floor_orientation),
        ),
        (
            "5 demand orientation or certified violator",
            Box::new(demand_dichotomy),
        ),
        (
            "6 rainbow finder matches component condition",
            Box::new(rainbow_equivalence),
        ),
        (
            "7 recognisers agree",
            Box::new(|| recognition_agreement(&recognition)),
        ),
        (
            "8 pipeline matches exhaustive shrink",
            Box::new(|| shrink_oracle_agreement(&corpus, &recognition)),
        ),
        (
            "9 hub of adversarial_star(100, 3) keeps degree >= 33",
            Box::new(hub_probe),
        ),
        (
            "10 deterministic outputs",
            Box::new(|| determinism(&corpus)),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

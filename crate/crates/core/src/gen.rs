//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Draws are taken from its `next_u64` stream:
//!
//! * an integer below `b` is `x % b` for the first `x >= 2^64 mod b`;
//! * a coin with probability `p` succeeds when `(x >> 11) * 2^-53 < p`.
//!
//! Together with the draw order documented on each generator this fixes the
//! output for a given seed on every platform.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::hypergraph::Hypergraph;
use crate::rainbow::ColouredGraph;

/// Attempts per hyperedge before giving up on a non-duplicate enlargement.
const REDRAWS: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub enum GenError {
    NoVertices,
    TooFewVertices { n: usize, min: usize },
    KTooSmall { k: usize },
    BadProbability(f64),
    ZeroBranches,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::NoVertices => write!(f, "n must be at least 1"),
            GenError::TooFewVertices { n, min } => write!(f, "n = {n} but at least {min} needed"),
            GenError::KTooSmall { k } => write!(f, "k = {k} but at least 2 needed"),
            GenError::BadProbability(p) => write!(f, "probability {p} not in [0, 1]"),
            GenError::ZeroBranches => write!(f, "m must be at least 1"),
        }
    }
}

impl core::error::Error for GenError {}

/// The generator stream used by every function in this module.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `0..bound`.
///
/// # Panics
/// If `bound == 0`.
pub fn below<R: RngCore>(rng: &mut R, bound: usize) -> usize {
    assert!(bound > 0, "empty range");
    let b = bound as u64;
    let threshold = b.wrapping_neg() % b;
    loop {
        let x = rng.next_u64();
        if x >= threshold {
            return (x % b) as usize;
        }
    }
}

pub fn chance<R: RngCore>(rng: &mut R, p: f64) -> bool {
    ((rng.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p
}

/// Uniform labelled tree on `n` vertices: `n - 2` draws below `n` form a
/// Prüfer sequence, decoded by always attaching the smallest current leaf.
/// No draws are made for `n <= 2`.
pub fn random_tree_with<R: RngCore>(
    rng: &mut R,
    n: usize,
) -> Result<Vec<(usize, usize)>, GenError> {
    match n {
        0 => return Err(GenError::NoVertices),
        1 => return Ok(Vec::new()),
        2 => return Ok(alloc::vec![(0, 1)]),
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| below(rng, n)).collect();
    let mut remaining = alloc::vec![1usize; n];
    for &c in &code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    Ok(edges)
}

pub fn random_tree(n: usize, seed: u64) -> Result<Vec<(usize, usize)>, GenError> {
    random_tree_with(&mut rng(seed), n)
}

/// Extends `base` by `count` distinct vertices of `0..n` not already in it.
/// The result is sorted.
fn enlarge<R: RngCore>(rng: &mut R, n: usize, base: &[usize], count: usize) -> Vec<usize> {
    let mut e = base.to_vec();
    while e.len() < base.len() + count {
        let v = below(rng, n);
        if !e.contains(&v) {
            e.push(v);
        }
    }
    e.sort_unstable();
    e
}

/// A hypertree of rank at most `k` together with the tree it shrinks to.
///
/// Draw order: the tree from [`random_tree_with`]; then for every tree edge
/// in order, one coin with probability `p`; on success (and `k > 2`,
/// `n > 2`) an extra-vertex count `1 + below(min(k, n) - 2)` and that many
/// distinct vertices by rejection. An enlargement equal to an earlier
/// hyperedge is redrawn (count included) up to 8 times, then the edge stays
/// a pair.
pub fn random_hypertree(
    n: usize,
    k: usize,
    seed: u64,
    p: f64,
) -> Result<(Hypergraph, Vec<(usize, usize)>), GenError> {
    if n < 2 {
        return Err(GenError::TooFewVertices { n, min: 2 });
    }
    if k < 2 {
        return Err(GenError::KTooSmall { k });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = rng(seed);
    let tree = random_tree_with(&mut rng, n)?;
    let max_extra = k.min(n) - 2;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut edges = Vec::with_capacity(tree.len());
    for &(u, v) in &tree {
        let mut edge = alloc::vec![u, v];
        if chance(&mut rng, p) && max_extra > 0 {
            for _ in 0..REDRAWS {
                let extra = 1 + below(&mut rng, max_extra);
                let candidate = enlarge(&mut rng, n, &[u, v], extra);
                if !seen.contains(&candidate) {
                    edge = candidate;
                    break;
                }
            }
        }
        seen.insert(edge.clone());
        edges.push(edge);
    }
    let h = Hypergraph::new(n, edges).expect("tree expansions are simple hypergraphs");
    Ok((h, tree))
}

/// A hypertree whose hub vertex 0 lies in `m` hyperedges of size `k`.
///
/// Branch `i` owns the fresh vertices `a_1..a_{k-1}` =
/// `1 + i(k-1) ..= (i+1)(k-1)`; it contributes the hub edge
/// `{0, a_1, .., a_{k-1}}` followed by the path pairs `{a_j, a_{j+1}}`.
pub fn adversarial_star(m: usize, k: usize) -> Result<Hypergraph, GenError> {
    if m == 0 {
        return Err(GenError::ZeroBranches);
    }
    if k < 2 {
        return Err(GenError::KTooSmall { k });
    }
    let n = 1 + m * (k - 1);
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..m {
        let first = 1 + i * (k - 1);
        let mut hub_edge = alloc::vec![0];
        hub_edge.extend(first..first + k - 1);
        edges.push(hub_edge);
        for a in first..first + k - 2 {
            edges.push(alloc::vec![a, a + 1]);
        }
    }
    Ok(Hypergraph::new(n, edges).expect("branches are disjoint"))
}

/// A simple hypergraph with up to `m` hyperedges of sizes `2..=min(k, n)`,
/// not necessarily a hypertree. Each hyperedge draws its size then its
/// vertices; duplicates are dropped after 8 redraws.
pub fn random_hypergraph(n: usize, m: usize, k: usize, seed: u64) -> Result<Hypergraph, GenError> {
    if n < 2 {
        return Err(GenError::TooFewVertices { n, min: 2 });
    }
    if k < 2 {
        return Err(GenError::KTooSmall { k });
    }
    let mut rng = rng(seed);
    let top = k.min(n);
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        for _ in 0..REDRAWS {
            let size = 2 + below(&mut rng, top - 1);
            let e = enlarge(&mut rng, n, &[], size);
            if seen.insert(e.clone()) {
                edges.push(e);
                break;
            }
        }
    }
    Ok(Hypergraph::new(n, edges).expect("distinct sorted edges"))
}

/// Up to `m` coloured edges with colours below `colours`; a triple equal to
/// an earlier one is skipped, so fewer edges may come back.
pub fn random_coloured_graph(
    n: usize,
    colours: usize,
    m: usize,
    seed: u64,
) -> Result<ColouredGraph, GenError> {
    if n < 2 {
        return Err(GenError::TooFewVertices { n, min: 2 });
    }
    let mut rng = rng(seed);
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = below(&mut rng, n);
        let v = (u + 1 + below(&mut rng, n - 1)) % n;
        let c = below(&mut rng, colours.max(1));
        if seen.insert((u.min(v), u.max(v), c)) {
            edges.push((u, v, c));
        }
    }
    Ok(ColouredGraph::new(n, colours.max(1), edges).expect("distinct non-loop triples"))
}

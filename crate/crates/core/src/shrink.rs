//! Shrinking hypertrees to spanning trees with a per-vertex degree bound.
//!
//! The pipeline orients the hypergraph so that every vertex `v` heads at
//! least `floor(d_H(v) / k)` hyperarcs, replaces every hyperarc by a star
//! centred at its head in its own colour, and extracts a rainbow spanning
//! tree of the result. The tree edge of colour `i` is the pair chosen from
//! hyperedge `i`, and it always contains that hyperedge's head, so
//! `d_T(v) >= indegree(v) >= floor(d_H(v) / k)`.

use alloc::vec::Vec;
use core::fmt;

use crate::dsu::{DisjointSets, RollbackSets};
use crate::hypergraph::{DirectedHypergraph, Hypergraph};
use crate::orientation::{orient_floor, OrientError};
use crate::rainbow::{rainbow_spanning_tree, star_graph, ColouredGraph, RainbowTree};

/// Default cap on the number of pair choices [`brute_force_shrink`] walks.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1_000_000;

/// A spanning tree together with the hyperedge each tree edge came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shrinking {
    /// Tree edges `(u, v)` with `u < v`, sorted.
    pub tree: Vec<(usize, usize)>,
    /// `assignment[i]` is the index in `tree` of hyperedge `i`'s pair.
    pub assignment: Vec<usize>,
}

impl Shrinking {
    /// Builds a shrinking from the pair chosen in each hyperedge, in
    /// hyperedge order.
    pub fn from_choices(choices: &[(usize, usize)]) -> Self {
        let norm: Vec<(usize, usize)> =
            choices.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut order: Vec<usize> = (0..norm.len()).collect();
        order.sort_by_key(|&i| (norm[i], i));
        let mut assignment = alloc::vec![0; norm.len()];
        for (pos, &i) in order.iter().enumerate() {
            assignment[i] = pos;
        }
        Shrinking {
            tree: order.iter().map(|&i| norm[i]).collect(),
            assignment,
        }
    }

    /// Tree degree of every vertex in `0..n`; out-of-range endpoints are
    /// skipped.
    pub fn tree_degrees(&self, n: usize) -> Vec<usize> {
        let mut d = alloc::vec![0; n];
        for &(u, v) in &self.tree {
            if u < n && v < n {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShrinkError {
    /// A hypertree on `n` vertices has exactly `n - 1` hyperedges.
    EdgeCount {
        edges: usize,
        vertices: usize,
    },
    /// The star graph of the orientation has no rainbow spanning tree.
    NoRainbowTree,
    Orient(OrientError),
}

impl ShrinkError {
    /// Whether the failure shows the input is not a hypertree (as opposed
    /// to a bad `k`).
    pub fn is_not_a_hypertree(&self) -> bool {
        matches!(
            self,
            ShrinkError::EdgeCount { .. } | ShrinkError::NoRainbowTree
        )
    }
}

impl fmt::Display for ShrinkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShrinkError::EdgeCount { edges, vertices } => write!(
                f,
                "not a hypertree: {edges} hyperedges on {vertices} vertices (need vertices - 1)"
            ),
            ShrinkError::NoRainbowTree => {
                write!(
                    f,
                    "not a hypertree: star graph has no rainbow spanning tree"
                )
            }
            ShrinkError::Orient(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ShrinkError {}

impl From<OrientError> for ShrinkError {
    fn from(e: OrientError) -> Self {
        ShrinkError::Orient(e)
    }
}

/// Intermediate artifacts of the shrinking pipeline.
#[derive(Clone, Debug)]
pub struct ShrinkTrace {
    pub k: usize,
    pub orientation: DirectedHypergraph,
    pub star: ColouredGraph,
    pub rainbow: RainbowTree,
    pub shrinking: Shrinking,
}

/// Runs the full pipeline, keeping every intermediate result. `k` defaults
/// to the rank of `h`.
pub fn shrink_with_trace(h: &Hypergraph, k: Option<usize>) -> Result<ShrinkTrace, ShrinkError> {
    let n = h.vertex_count();
    if h.edge_count() + 1 != n {
        return Err(ShrinkError::EdgeCount {
            edges: h.edge_count(),
            vertices: n,
        });
    }
    let k = k.unwrap_or_else(|| h.rank().max(1));
    let orientation = orient_floor(h, Some(k))?;
    let star = star_graph(&orientation);
    let rainbow = rainbow_spanning_tree(&star).ok_or(ShrinkError::NoRainbowTree)?;
    let mut choices = alloc::vec![(0, 0); h.edge_count()];
    for e in &rainbow.edges {
        choices[e.colour] = (e.u, e.v);
    }
    let shrinking = Shrinking::from_choices(&choices);
    Ok(ShrinkTrace {
        k,
        orientation,
        star,
        rainbow,
        shrinking,
    })
}

/// Shrinks a hypertree to a spanning tree `T` with
/// `d_T(v) >= max(1, floor(d_H(v) / k))`, `k = rank(h)`.
pub fn shrink_hypertree(h: &Hypergraph) -> Result<Shrinking, ShrinkError> {
    shrink_with_trace(h, None).map(|t| t.shrinking)
}

/// Same as [`shrink_hypertree`] with an explicit `k >= rank(h)`.
pub fn shrink_hypertree_with_k(h: &Hypergraph, k: usize) -> Result<Shrinking, ShrinkError> {
    shrink_with_trace(h, Some(k)).map(|t| t.shrinking)
}

/// Per-check outcome of [`verify_shrinking`]. Failure lists hold hyperedge
/// indices (containment) or vertex ids (degree bounds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    pub spanning_tree: bool,
    pub bijective: bool,
    pub containment_failures: Vec<usize>,
    pub hyper_degrees: Vec<usize>,
    pub tree_degrees: Vec<usize>,
    /// `max(1, floor(d_H(v) / k))` per vertex (the 1 is dropped when `n == 1`).
    pub bounds: Vec<usize>,
    pub bound_failures: Vec<usize>,
    /// Vertices with `d_T(v) < d_H(v) / 2k`.
    pub half_bound_failures: Vec<usize>,
    /// Vertices with `d_T(v) < d_H(v) / 100`; only checked for rank 3.
    pub hundredth_bound_failures: Option<Vec<usize>>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.spanning_tree
            && self.bijective
            && self.containment_failures.is_empty()
            && self.bound_failures.is_empty()
            && self.half_bound_failures.is_empty()
            && self
                .hundredth_bound_failures
                .as_ref()
                .is_none_or(Vec::is_empty)
    }
}

/// The degree bound `max(1, floor(degree / k))`; the 1 applies only when
/// the tree has an edge at all.
pub fn degree_bound(degree: usize, k: usize, n: usize) -> usize {
    let floor = degree.checked_div(k).unwrap_or(0);
    floor.max(usize::from(n >= 2))
}

/// Checks `s` against `h`: spanning tree, pair containment, bijectivity and
/// the degree bounds for the given `k` (defaults to the rank).
pub fn verify_shrinking(h: &Hypergraph, s: &Shrinking, k: Option<usize>) -> VerificationReport {
    let n = h.vertex_count();
    let k = k.unwrap_or_else(|| h.rank().max(1));

    let spanning_tree = s.tree.len() + 1 == n && {
        let mut dsu = DisjointSets::new(n);
        s.tree
            .iter()
            .all(|&(u, v)| u < n && v < n && u != v && dsu.union(u, v))
    };

    let mut hit = alloc::vec![false; s.tree.len()];
    let bijective = s.assignment.len() == h.edge_count()
        && s.tree.len() == h.edge_count()
        && s.assignment
            .iter()
            .all(|&j| j < hit.len() && !core::mem::replace(&mut hit[j], true));

    let containment_failures = (0..h.edge_count())
        .filter(|&i| {
            let Some(&(u, v)) = s.assignment.get(i).and_then(|&j| s.tree.get(j)) else {
                return true;
            };
            let e = h.edge(i);
            u == v || e.binary_search(&u).is_err() || e.binary_search(&v).is_err()
        })
        .collect();

    let hyper_degrees = h.degrees();
    let tree_degrees = s.tree_degrees(n);
    let bounds: Vec<usize> = hyper_degrees
        .iter()
        .map(|&d| degree_bound(d, k, n))
        .collect();
    let bound_failures = (0..n).filter(|&v| tree_degrees[v] < bounds[v]).collect();
    let half_bound_failures = (0..n)
        .filter(|&v| 2 * k * tree_degrees[v] < hyper_degrees[v])
        .collect();
    let hundredth_bound_failures = (h.rank() == 3).then(|| {
        (0..n)
            .filter(|&v| 100 * tree_degrees[v] < hyper_degrees[v])
            .collect()
    });

    VerificationReport {
        k,
        spanning_tree,
        bijective,
        containment_failures,
        hyper_degrees,
        tree_degrees,
        bounds,
        bound_failures,
        half_bound_failures,
        hundredth_bound_failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationLimit {
    /// Number of pair choices, or `None` if it overflows `u64`.
    pub choices: Option<u64>,
    pub limit: u64,
}

impl fmt::Display for EnumerationLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.choices {
            Some(c) => write!(
                f,
                "{c} pair choices exceed the enumeration limit {}",
                self.limit
            ),
            None => write!(f, "pair choices overflow u64 (limit {})", self.limit),
        }
    }
}

impl core::error::Error for EnumerationLimit {}

/// Number of ways to pick one pair from every hyperedge.
pub fn pair_choice_count(h: &Hypergraph) -> Option<u64> {
    h.edges().iter().try_fold(1u64, |acc, e| {
        let s = e.len() as u64;
        acc.checked_mul(s * (s - 1) / 2)
    })
}

/// Best choice so far and its score as a fraction `(num, den)`.
type Best = (Vec<(usize, usize)>, usize, usize);

struct Search<'a> {
    h: &'a Hypergraph,
    hyper: Vec<usize>,
    deg: Vec<usize>,
    choice: Vec<(usize, usize)>,
    sets: RollbackSets,
    best: Option<Best>,
}

impl Search<'_> {
    fn run(&mut self, i: usize) {
        if i == self.h.edge_count() {
            // Score min_v d_T(v) / max(1, d_H(v)) as a fraction num/den.
            let (num, den) = (0..self.deg.len())
                .map(|v| (self.deg[v], self.hyper[v].max(1)))
                .min_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)))
                .unwrap_or((1, 1));
            let better = match &self.best {
                None => true,
                Some((_, bn, bd)) => num * bd > bn * den,
            };
            if better {
                self.best = Some((self.choice.clone(), num, den));
            }
            return;
        }
        let e = self.h.edge(i);
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                if !self.sets.union(u, v) {
                    continue;
                }
                self.deg[u] += 1;
                self.deg[v] += 1;
                self.choice.push((u, v));
                self.run(i + 1);
                self.choice.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                self.sets.rollback();
            }
        }
    }
}

/// Exhaustive oracle: tries every choice of one pair per hyperedge and
/// returns a spanning tree maximising `min_v d_T(v) / max(1, d_H(v))`
/// (earliest choice in lexicographic order on ties), or `None` when no
/// choice spans.
pub fn brute_force_shrink(
    h: &Hypergraph,
    limit: u64,
) -> Result<Option<Shrinking>, EnumerationLimit> {
    if h.edge_count() + 1 != h.vertex_count() {
        return Ok(None);
    }
    match pair_choice_count(h) {
        Some(c) if c <= limit => {}
        choices => return Err(EnumerationLimit { choices, limit }),
    }
    let n = h.vertex_count();
    let mut search = Search {
        h,
        hyper: h.degrees(),
        deg: alloc::vec![0; n],
        choice: Vec::with_capacity(h.edge_count()),
        sets: RollbackSets::new(n),
        best: None,
    };
    search.run(0);
    Ok(search
        .best
        .map(|(choice, _, _)| Shrinking::from_choices(&choice)))
}

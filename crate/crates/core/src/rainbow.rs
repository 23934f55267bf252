//! Edge-coloured graphs and rainbow spanning trees.
//!
//! A rainbow spanning tree is a common basis of two matroids on the edge
//! set: the graphic matroid (forests) and the partition matroid allowing
//! one edge per colour. [`max_rainbow_forest`] computes a maximum common
//! independent set by augmenting along shortest paths in the exchange graph;
//! [`check_rainbow_condition`] is the exponential component-count test used
//! as an independent oracle.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::dsu::DisjointSets;
use crate::hypergraph::{DirectedHypergraph, Hypergraph};

/// Default cap on the number of colours [`check_rainbow_condition`] accepts.
pub const DEFAULT_COLOUR_LIMIT: usize = 20;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColouredEdge {
    pub u: usize,
    pub v: usize,
    pub colour: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouredGraphError {
    Loop {
        edge: usize,
    },
    OutOfRange {
        edge: usize,
    },
    ColourOutOfRange {
        edge: usize,
        colour: usize,
    },
    /// Same endpoints and colour as an earlier edge.
    Parallel {
        edge: usize,
        first: usize,
    },
}

impl fmt::Display for ColouredGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColouredGraphError::Loop { edge } => write!(f, "edge {edge} is a loop"),
            ColouredGraphError::OutOfRange { edge } => {
                write!(f, "edge {edge} has an endpoint out of range")
            }
            ColouredGraphError::ColourOutOfRange { edge, colour } => {
                write!(f, "edge {edge} has colour {colour} out of range")
            }
            ColouredGraphError::Parallel { edge, first } => {
                write!(f, "edge {edge} repeats edge {first} with the same colour")
            }
        }
    }
}

impl core::error::Error for ColouredGraphError {}

/// A graph on `0..n` whose edges carry colours `0..colour_count`. Parallel
/// edges are allowed when their colours differ. Endpoints are stored with
/// `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    n: usize,
    colour_count: usize,
    edges: Vec<ColouredEdge>,
}

impl ColouredGraph {
    pub fn new(
        n: usize,
        colour_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, ColouredGraphError> {
        let mut out = Vec::new();
        let mut seen = alloc::collections::BTreeMap::new();
        for (i, (a, b, colour)) in edges.into_iter().enumerate() {
            if a == b {
                return Err(ColouredGraphError::Loop { edge: i });
            }
            if a >= n || b >= n {
                return Err(ColouredGraphError::OutOfRange { edge: i });
            }
            if colour >= colour_count {
                return Err(ColouredGraphError::ColourOutOfRange { edge: i, colour });
            }
            let e = ColouredEdge {
                u: a.min(b),
                v: a.max(b),
                colour,
            };
            if let Some(&first) = seen.get(&e) {
                return Err(ColouredGraphError::Parallel { edge: i, first });
            }
            seen.insert(e, i);
            out.push(e);
        }
        Ok(ColouredGraph {
            n,
            colour_count,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    pub fn edges(&self) -> &[ColouredEdge] {
        &self.edges
    }

    /// Connected components after deleting every edge whose colour is
    /// flagged in `removed`.
    pub fn components_without(&self, removed: &[bool]) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for e in &self.edges {
            if !removed.get(e.colour).copied().unwrap_or(false) {
                dsu.union(e.u, e.v);
            }
        }
        dsu.count()
    }
}

/// A spanning tree with pairwise distinct colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowTree {
    /// Indices into the source graph's edge list, ascending.
    pub edge_indices: Vec<usize>,
    pub edges: Vec<ColouredEdge>,
}

/// One star per hyperarc: the head joined to every tail, all in colour `i`
/// for hyperarc `i`.
pub fn star_graph(d: &DirectedHypergraph) -> ColouredGraph {
    let h = d.base();
    let edges = (0..h.edge_count())
        .flat_map(|i| d.tails(i).map(move |t| (d.head(i), t, i)))
        .collect::<Vec<_>>();
    ColouredGraph::new(h.vertex_count(), h.edge_count(), edges)
        .expect("stars of a simple hypergraph form a valid coloured graph")
}

/// One complete graph per hyperedge, in colour `i` for hyperedge `i`.
pub fn clique_graph(h: &Hypergraph) -> ColouredGraph {
    let mut edges = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        for (a, &u) in e.iter().enumerate() {
            for &v in &e[a + 1..] {
                edges.push((u, v, i));
            }
        }
    }
    ColouredGraph::new(h.vertex_count(), h.edge_count(), edges)
        .expect("cliques of a simple hypergraph form a valid coloured graph")
}

/// Rooted view of a forest for tree-path queries.
struct RootedForest {
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
    root: Vec<usize>,
}

impl RootedForest {
    fn new(n: usize, g: &ColouredGraph, chosen: &[usize]) -> Self {
        let mut adj = alloc::vec![Vec::new(); n];
        for &i in chosen {
            let e = g.edges[i];
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        let mut f = RootedForest {
            parent: alloc::vec![NONE; n],
            parent_edge: alloc::vec![NONE; n],
            depth: alloc::vec![0; n],
            root: alloc::vec![NONE; n],
        };
        let mut queue = VecDeque::new();
        for r in 0..n {
            if f.root[r] != NONE {
                continue;
            }
            f.root[r] = r;
            queue.push_back(r);
            while let Some(x) = queue.pop_front() {
                for &(y, i) in &adj[x] {
                    if f.root[y] == NONE {
                        f.root[y] = r;
                        f.parent[y] = x;
                        f.parent_edge[y] = i;
                        f.depth[y] = f.depth[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        f
    }

    /// Forest edges on the path between `a` and `b` (same tree).
    fn path_edges(&self, mut a: usize, mut b: usize, out: &mut Vec<usize>) {
        out.clear();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                out.push(self.parent_edge[a]);
                a = self.parent[a];
            } else {
                out.push(self.parent_edge[b]);
                b = self.parent[b];
            }
        }
    }
}

/// A maximum set of edges that is both a forest and uses every colour at
/// most once. Returns ascending edge indices.
pub fn max_rainbow_forest(g: &ColouredGraph) -> Vec<usize> {
    let n = g.n;
    let m = g.edges.len();
    let target = n.saturating_sub(1);
    let mut in_set = alloc::vec![false; m];
    let mut owner = alloc::vec![NONE; g.colour_count];
    let mut size = 0;

    // Greedy seed in (colour, u, v) order.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (g.edges[i].colour, g.edges[i].u, g.edges[i].v, i));
    let mut dsu = DisjointSets::new(n);
    for &i in &order {
        let e = g.edges[i];
        if owner[e.colour] == NONE && dsu.union(e.u, e.v) {
            owner[e.colour] = i;
            in_set[i] = true;
            size += 1;
        }
    }

    let mut covers: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
    let mut pred = alloc::vec![NONE; m];
    let mut visited = alloc::vec![false; m];
    let mut path = Vec::new();
    let mut queue = VecDeque::new();
    while size < target {
        let chosen: Vec<usize> = (0..m).filter(|&i| in_set[i]).collect();
        let forest = RootedForest::new(n, g, &chosen);
        covers.iter_mut().for_each(Vec::clear);
        pred.iter_mut().for_each(|p| *p = NONE);
        visited.iter_mut().for_each(|v| *v = false);
        queue.clear();

        // Sources: outside edges that keep the set a forest. Other outside
        // edges z get arcs y -> z from every y on their tree path.
        let mut end = NONE;
        for z in 0..m {
            if in_set[z] {
                continue;
            }
            let e = g.edges[z];
            if forest.root[e.u] != forest.root[e.v] {
                visited[z] = true;
                if owner[e.colour] == NONE {
                    end = z;
                    break;
                }
                queue.push_back(z);
            } else {
                forest.path_edges(e.u, e.v, &mut path);
                for &y in &path {
                    covers[y].push(z);
                }
            }
        }

        'bfs: while end == NONE {
            let Some(x) = queue.pop_front() else { break };
            if in_set[x] {
                for &z in &covers[x] {
                    if visited[z] {
                        continue;
                    }
                    visited[z] = true;
                    pred[z] = x;
                    if owner[g.edges[z].colour] == NONE {
                        end = z;
                        break 'bfs;
                    }
                    queue.push_back(z);
                }
            } else {
                // Exchange on the colour side: swap out the edge holding x's colour.
                let y = owner[g.edges[x].colour];
                if !visited[y] {
                    visited[y] = true;
                    pred[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if end == NONE {
            break;
        }

        let mut nodes = Vec::new();
        let mut x = end;
        while x != NONE {
            nodes.push(x);
            x = pred[x];
        }
        let (leaving, entering): (Vec<usize>, Vec<usize>) = nodes.iter().partition(|&&x| in_set[x]);
        for x in leaving {
            in_set[x] = false;
            owner[g.edges[x].colour] = NONE;
        }
        for x in entering {
            debug_assert_eq!(owner[g.edges[x].colour], NONE);
            in_set[x] = true;
            owner[g.edges[x].colour] = x;
        }
        size += 1;
    }
    (0..m).filter(|&i| in_set[i]).collect()
}

/// A rainbow spanning tree of `g`, or `None` if there is none.
pub fn rainbow_spanning_tree(g: &ColouredGraph) -> Option<RainbowTree> {
    let forest = max_rainbow_forest(g);
    if forest.len() + 1 != g.n {
        return None;
    }
    let edges = forest.iter().map(|&i| g.edges[i]).collect();
    Some(RainbowTree {
        edge_indices: forest,
        edges,
    })
}

/// Whether `tree` is a rainbow spanning tree of a graph on `n` vertices.
pub fn is_rainbow_spanning_tree(n: usize, tree: &[ColouredEdge]) -> bool {
    if tree.len() + 1 != n {
        return false;
    }
    let colours: BTreeSet<usize> = tree.iter().map(|e| e.colour).collect();
    if colours.len() != tree.len() {
        return false;
    }
    let mut dsu = DisjointSets::new(n);
    tree.iter()
        .all(|e| e.u < n && e.v < n && dsu.union(e.u, e.v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RainbowCondition {
    Satisfied,
    /// Colours whose removal leaves more than `len + 1` components.
    Violated(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TooManyColours {
    pub colours: usize,
    pub limit: usize,
}

impl fmt::Display for TooManyColours {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} colours exceed the exhaustive limit of {}",
            self.colours, self.limit
        )
    }
}

impl core::error::Error for TooManyColours {}

/// Exhaustively tests every colour set `R` with `|R| <= n - 2`: deleting its
/// colours must leave at most `|R| + 1` components.
///
/// Sets are tried by increasing size, then lexicographically, so the
/// reported violator is the first in that order.
pub fn check_rainbow_condition(
    g: &ColouredGraph,
    limit: usize,
) -> Result<RainbowCondition, TooManyColours> {
    let c = g.colour_count;
    if c > limit {
        return Err(TooManyColours { colours: c, limit });
    }
    let Some(max_r) = g.n.checked_sub(2) else {
        return Ok(RainbowCondition::Satisfied);
    };
    let mut removed = alloc::vec![false; c];
    for r in 0..=max_r.min(c) {
        let mut pick: Vec<usize> = (0..r).collect();
        loop {
            pick.iter().for_each(|&x| removed[x] = true);
            let comps = g.components_without(&removed);
            pick.iter().for_each(|&x| removed[x] = false);
            if comps > r + 1 {
                return Ok(RainbowCondition::Violated(pick));
            }
            // Next r-combination of 0..c in lexicographic order.
            let Some(i) = (0..r).rev().find(|&i| pick[i] < c - r + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..r {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok(RainbowCondition::Satisfied)
}

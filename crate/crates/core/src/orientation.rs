//! Orienting hypergraphs so that every vertex receives a prescribed minimum
//! number of heads.
//!
//! Demands are met through a bipartite graph between hyperedges and
//! `f(v)` copies of each vertex `v`: a matching saturating the copies picks,
//! for every copy, a distinct hyperedge to point at `v`. When no such
//! matching exists, the alternating-reachable copies form a vertex set `F`
//! with `f(F) > e*(F)`, which rules out any orientation meeting `f`.

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{DemandFunction, DirectedHypergraph, Hypergraph};
use crate::matching::Bipartite;

/// Outcome of [`orient_with_demands`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationResult {
    Oriented(DirectedHypergraph),
    /// A vertex set whose total demand exceeds the number of hyperedges
    /// meeting it.
    Violator(Vec<usize>),
}

impl OrientationResult {
    pub fn oriented(self) -> Option<DirectedHypergraph> {
        match self {
            OrientationResult::Oriented(d) => Some(d),
            OrientationResult::Violator(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientError {
    DemandLength { expected: usize, found: usize },
    ZeroK,
    RankExceedsK { rank: usize, k: usize },
}

impl fmt::Display for OrientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientError::DemandLength { expected, found } => {
                write!(
                    f,
                    "demand function has {found} entries, expected {expected}"
                )
            }
            OrientError::ZeroK => write!(f, "k must be at least 1"),
            OrientError::RankExceedsK { rank, k } => {
                write!(f, "hypergraph rank {rank} exceeds k = {k}")
            }
        }
    }
}

impl core::error::Error for OrientError {}

/// Hyperedges on the left, demand copies on the right.
#[derive(Clone, Debug)]
pub struct DemandBipartiteGraph {
    graph: Bipartite,
    /// Vertex of `H` that each right-side copy stands for.
    owner: Vec<usize>,
}

impl DemandBipartiteGraph {
    pub fn new(h: &Hypergraph, f: &DemandFunction) -> Self {
        let mut first = Vec::with_capacity(h.vertex_count());
        let mut owner = Vec::with_capacity(f.total());
        for v in 0..h.vertex_count() {
            first.push(owner.len());
            owner.extend(core::iter::repeat_n(v, f.get(v)));
        }
        let adj = h
            .edges()
            .iter()
            .map(|e| {
                e.iter()
                    .flat_map(|&v| first[v]..first[v] + f.get(v))
                    .collect()
            })
            .collect();
        DemandBipartiteGraph {
            graph: Bipartite::new(adj, owner.len()),
            owner,
        }
    }

    pub fn copies(&self) -> usize {
        self.owner.len()
    }

    pub fn owner(&self, copy: usize) -> usize {
        self.owner[copy]
    }

    pub fn graph(&self) -> &Bipartite {
        &self.graph
    }
}

/// Finds an orientation with `indegree(v) >= f(v)` for every `v`, or a
/// violator set proving none exists.
///
/// Matched hyperedges point at the vertex whose copy they are matched to;
/// unmatched hyperedges point at their smallest vertex.
pub fn orient_with_demands(
    h: &Hypergraph,
    f: &DemandFunction,
) -> Result<OrientationResult, OrientError> {
    if f.len() != h.vertex_count() {
        return Err(OrientError::DemandLength {
            expected: h.vertex_count(),
            found: f.len(),
        });
    }
    if f.total() > h.edge_count() {
        return Ok(OrientationResult::Violator((0..h.vertex_count()).collect()));
    }
    let demand = DemandBipartiteGraph::new(h, f);
    let matching = demand.graph.maximum_matching();
    if matching.right.iter().all(Option::is_some) {
        let heads = matching
            .left
            .iter()
            .enumerate()
            .map(|(i, m)| match m {
                Some(copy) => demand.owner[*copy],
                None => h.edge(i)[0],
            })
            .collect();
        let d = DirectedHypergraph::new(h.clone(), heads)
            .expect("matched heads lie in their hyperedges");
        return Ok(OrientationResult::Oriented(d));
    }
    let (reached, _) = demand.graph.deficiency(&matching);
    let mut set: Vec<usize> = reached.iter().map(|&c| demand.owner[c]).collect();
    set.dedup();
    Ok(OrientationResult::Violator(set))
}

/// `f(v) = floor(degree(v) / k)`.
pub fn floor_demand(h: &Hypergraph, k: usize) -> Result<DemandFunction, OrientError> {
    if k == 0 {
        return Err(OrientError::ZeroK);
    }
    if h.rank() > k {
        return Err(OrientError::RankExceedsK { rank: h.rank(), k });
    }
    Ok(DemandFunction::new(
        h.degrees().into_iter().map(|d| d / k).collect(),
    ))
}

/// Orientation with `indegree(v) >= floor(degree(v) / k)`; `k` defaults to
/// the rank (at least 1).
///
/// # Panics
/// If the matching fails to meet the floor demands. Such demands are always
/// feasible when every hyperedge has at most `k` vertices, so a panic here
/// means a bug in the matching.
pub fn orient_floor(h: &Hypergraph, k: Option<usize>) -> Result<DirectedHypergraph, OrientError> {
    let k = k.unwrap_or_else(|| h.rank().max(1));
    let f = floor_demand(h, k)?;
    match orient_with_demands(h, &f)? {
        OrientationResult::Oriented(d) => Ok(d),
        OrientationResult::Violator(set) => {
            panic!("floor demands with k = {k} reported infeasible on {set:?}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path3() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn single_demand_met() {
        let f = DemandFunction::new(vec![0, 1, 0]);
        let d = orient_with_demands(&path3(), &f)
            .unwrap()
            .oriented()
            .unwrap();
        assert!(d.indegree(1) >= 1);
    }

    #[test]
    fn double_demand_forces_heads() {
        let f = DemandFunction::new(vec![0, 2, 0]);
        let d = orient_with_demands(&path3(), &f)
            .unwrap()
            .oriented()
            .unwrap();
        assert_eq!(d.heads(), &[1, 1]);
    }

    #[test]
    fn total_demand_too_high_gives_full_set() {
        let f = DemandFunction::new(vec![1, 1, 1]);
        assert_eq!(
            orient_with_demands(&path3(), &f).unwrap(),
            OrientationResult::Violator(vec![0, 1, 2])
        );
    }

    #[test]
    fn local_violator_found_by_matching() {
        // f(V) = 3 <= |E| = 3, but vertex 0 wants 2 heads from one edge.
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let f = DemandFunction::new(vec![2, 0, 0, 1]);
        let OrientationResult::Violator(set) = orient_with_demands(&h, &f).unwrap() else {
            panic!("expected violator");
        };
        assert_eq!(set, vec![0]);
        assert!(f.total_over(&set) > h.incident_edge_count(&set));
    }

    #[test]
    fn unmatched_edges_point_at_smallest_vertex() {
        let f = DemandFunction::new(vec![0, 0, 0]);
        let d = orient_with_demands(&path3(), &f)
            .unwrap()
            .oriented()
            .unwrap();
        assert_eq!(d.heads(), &[0, 1]);
    }

    #[test]
    fn demand_length_rejected() {
        let f = DemandFunction::new(vec![0, 0]);
        assert_eq!(
            orient_with_demands(&path3(), &f),
            Err(OrientError::DemandLength {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn floor_demand_values() {
        let h1 = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
        assert_eq!(floor_demand(&h1, 3).unwrap().values(), &[0, 0, 1, 0]);
        assert_eq!(
            floor_demand(&h1, 2),
            Err(OrientError::RankExceedsK { rank: 3, k: 2 })
        );
        assert_eq!(floor_demand(&h1, 0), Err(OrientError::ZeroK));
        // vertex 0 of degree 7 in a rank-3 hypergraph
        let edges = (0..7).map(|i| vec![0, 1 + 2 * i, 2 + 2 * i]).collect();
        let h = Hypergraph::new(15, edges).unwrap();
        assert_eq!(floor_demand(&h, 3).unwrap().get(0), 2);
    }

    #[test]
    fn floor_orientations() {
        let h1 = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
        assert!(orient_floor(&h1, None).unwrap().indegree(2) >= 1);

        let path = Hypergraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = orient_floor(&path, None).unwrap();
        assert!(d.indegree(1) >= 1 && d.indegree(2) >= 1);
    }

    #[test]
    fn star_hypertree_hub_gets_a_head() {
        let h = Hypergraph::new(7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        // Brute force over all 27 head choices: some choice gives 0 a head.
        let mut any = false;
        for code in 0..27usize {
            let heads: Vec<usize> = (0..3)
                .map(|i| h.edge(i)[(code / 3usize.pow(i as u32)) % 3])
                .collect();
            any |= heads.contains(&0);
        }
        assert!(any);
        assert!(orient_floor(&h, Some(3)).unwrap().indegree(0) >= 1);
    }
}

//! Hypertree recognition.
//!
//! [`is_hypertree`] asks for a rainbow spanning tree of the clique
//! expansion, i.e. a choice of one pair per hyperedge forming a spanning
//! tree. [`is_hypertree_bruteforce`] checks the subset-counting definition
//! directly and is only meant as a test oracle.

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::Hypergraph;
use crate::rainbow::{clique_graph, rainbow_spanning_tree};

/// Default vertex cap for [`is_hypertree_bruteforce`].
pub const DEFAULT_VERTEX_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A vertex set containing at least `|X|` hyperedges.
    Dense { set: Vec<usize>, contained: usize },
    /// Every proper check passes but there are fewer than `n - 1` edges.
    EdgeCount { edges: usize, vertices: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Dense { set, contained } => write!(
                f,
                "X = {set:?} contains {contained} hyperedges, more than |X| - 1 = {}",
                set.len().saturating_sub(1)
            ),
            Witness::EdgeCount { edges, vertices } => {
                write!(
                    f,
                    "{edges} hyperedges on {vertices} vertices, expected {}",
                    vertices - 1
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Hypertree,
    NotHypertree(Witness),
}

impl Recognition {
    pub fn is_hypertree(&self) -> bool {
        matches!(self, Recognition::Hypertree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TooManyVertices {
    pub vertices: usize,
    pub limit: usize,
}

impl fmt::Display for TooManyVertices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices exceed the exhaustive limit of {}",
            self.vertices, self.limit
        )
    }
}

impl core::error::Error for TooManyVertices {}

/// Checks every non-empty `X ⊆ V`: at most `|X| - 1` hyperedges lie inside
/// `X`, with equality for `X = V`. Sets are scanned in increasing bitmask
/// order and the first dense one is reported.
pub fn is_hypertree_bruteforce(
    h: &Hypergraph,
    limit: usize,
) -> Result<Recognition, TooManyVertices> {
    let n = h.vertex_count();
    if n > limit || n >= 64 {
        return Err(TooManyVertices { vertices: n, limit });
    }
    if n == 0 {
        return Ok(Recognition::NotHypertree(Witness::EdgeCount {
            edges: h.edge_count(),
            vertices: 0,
        }));
    }
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    for x in 1u64..1 << n {
        let contained = masks.iter().filter(|&&m| m & !x == 0).count();
        if contained >= x.count_ones() as usize {
            let set = (0..n).filter(|&v| x >> v & 1 == 1).collect();
            return Ok(Recognition::NotHypertree(Witness::Dense { set, contained }));
        }
    }
    if h.edge_count() + 1 != n {
        return Ok(Recognition::NotHypertree(Witness::EdgeCount {
            edges: h.edge_count(),
            vertices: n,
        }));
    }
    Ok(Recognition::Hypertree)
}

/// True iff `h` has `n - 1` hyperedges and one pair per hyperedge can be
/// chosen to form a spanning tree.
pub fn is_hypertree(h: &Hypergraph) -> bool {
    h.vertex_count() >= 1
        && h.edge_count() + 1 == h.vertex_count()
        && rainbow_spanning_tree(&clique_graph(h)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn h1_is_hypertree() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
        assert!(is_hypertree(&h));
        assert_eq!(
            is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT),
            Ok(Recognition::Hypertree)
        );
    }

    #[test]
    fn triangle_is_not() {
        let h = Hypergraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_hypertree(&h));
        assert_eq!(
            is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT),
            Ok(Recognition::NotHypertree(Witness::Dense {
                set: vec![0, 1, 2],
                contained: 3
            }))
        );
    }

    #[test]
    fn nested_hyperedges() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(is_hypertree(&h));
        assert!(is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT)
            .unwrap()
            .is_hypertree());
    }

    #[test]
    fn trees_are_hypertrees() {
        let t = Hypergraph::from_pairs(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(is_hypertree(&t));
    }

    #[test]
    fn too_few_edges() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(!is_hypertree(&h));
        assert_eq!(
            is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT),
            Ok(Recognition::NotHypertree(Witness::EdgeCount {
                edges: 1,
                vertices: 3
            }))
        );
    }

    #[test]
    fn vertex_limit() {
        let h = Hypergraph::new(21, vec![]).unwrap();
        assert_eq!(
            is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT),
            Err(TooManyVertices {
                vertices: 21,
                limit: 20
            })
        );
    }
}

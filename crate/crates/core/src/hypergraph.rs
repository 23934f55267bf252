//! Hypergraphs, directed hypergraphs and vertex demand functions.
//!
//! Vertices are dense ids `0..n`. A hyperedge is a strictly increasing list
//! of vertex ids; its position in the edge list is its identity everywhere
//! downstream (colour ids, tree assignments, orientation heads).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// A single defect found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Edge of size 1 (or empty).
    Loop { edge: usize },
    /// Edge with the same vertex set as an earlier edge `first`.
    Duplicate { edge: usize, first: usize },
    /// Edge mentions a vertex id `>= n`.
    OutOfRange { edge: usize, vertex: usize },
    /// Edge is not strictly increasing (unsorted or repeats a vertex).
    Unsorted { edge: usize },
}

impl Violation {
    pub fn edge(&self) -> usize {
        match *self {
            Violation::Loop { edge }
            | Violation::Duplicate { edge, .. }
            | Violation::OutOfRange { edge, .. }
            | Violation::Unsorted { edge } => edge,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { edge } => {
                write!(f, "edge {edge}: loop (fewer than 2 distinct vertices)")
            }
            Violation::Duplicate { edge, first } => {
                write!(f, "edge {edge}: duplicate of edge {first}")
            }
            Violation::OutOfRange { edge, vertex } => {
                write!(f, "edge {edge}: vertex {vertex} out of range")
            }
            Violation::Unsorted { edge } => {
                write!(f, "edge {edge}: vertices not strictly increasing")
            }
        }
    }
}

/// Result of [`validate`]; empty iff the input is a valid simple hypergraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks raw `(n, edges)` data against the simple-hypergraph invariants.
///
/// Duplicates are detected on the sorted vertex sets, so `[1, 0]` and
/// `[0, 1]` are reported both as unsorted and as duplicates.
pub fn validate(n: usize, edges: &[Vec<usize>]) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        let mut key = e.clone();
        key.sort_unstable();
        key.dedup();
        if key.len() < 2 {
            violations.push(Violation::Loop { edge: i });
        }
        if !e.windows(2).all(|w| w[0] < w[1]) {
            violations.push(Violation::Unsorted { edge: i });
        }
        if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
            violations.push(Violation::OutOfRange { edge: i, vertex });
        }
        match seen.get(&key) {
            Some(&first) => violations.push(Violation::Duplicate { edge: i, first }),
            None => {
                seen.insert(key, i);
            }
        }
    }
    ValidationReport { violations }
}

/// A simple hypergraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting anything [`validate`] objects to.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, ValidationReport> {
        let report = validate(n, &edges);
        if report.is_valid() {
            Ok(Hypergraph { n, edges })
        } else {
            Err(report)
        }
    }

    /// Like [`Hypergraph::new`] but sorts every edge first.
    pub fn from_unsorted(n: usize, mut edges: Vec<Vec<usize>>) -> Result<Self, ValidationReport> {
        for e in &mut edges {
            e.sort_unstable();
        }
        Self::new(n, edges)
    }

    /// Builds a graph (rank 2 hypergraph) from vertex pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, ValidationReport> {
        Self::from_unsorted(n, pairs.iter().map(|&(u, v)| alloc::vec![u, v]).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Number of hyperedges containing `v`.
    ///
    /// # Panics
    /// If `v >= n`.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.edges
            .iter()
            .filter(|e| e.binary_search(&v).is_ok())
            .count()
    }

    /// All vertex degrees in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = alloc::vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Maximum hyperedge size, 0 for an edgeless hypergraph.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of hyperedges meeting `set`. Ids outside `0..n` are ignored.
    pub fn incident_edge_count(&self, set: &[usize]) -> usize {
        let mut mark = alloc::vec![false; self.n];
        for &v in set {
            if v < self.n {
                mark[v] = true;
            }
        }
        self.edges
            .iter()
            .filter(|e| e.iter().any(|&v| mark[v]))
            .count()
    }

    /// For each vertex, the indices of the hyperedges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = alloc::vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }
}

/// Error from [`DirectedHypergraph::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeadError {
    Length { heads: usize, edges: usize },
    NotInEdge { edge: usize, head: usize },
}

impl fmt::Display for HeadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadError::Length { heads, edges } => {
                write!(f, "{heads} heads given for {edges} hyperedges")
            }
            HeadError::NotInEdge { edge, head } => {
                write!(f, "head {head} does not belong to hyperedge {edge}")
            }
        }
    }
}

impl core::error::Error for HeadError {}

/// A hypergraph in which every hyperedge carries a designated head.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedHypergraph {
    base: Hypergraph,
    heads: Vec<usize>,
}

impl DirectedHypergraph {
    pub fn new(base: Hypergraph, heads: Vec<usize>) -> Result<Self, HeadError> {
        if heads.len() != base.edge_count() {
            return Err(HeadError::Length {
                heads: heads.len(),
                edges: base.edge_count(),
            });
        }
        for (i, &h) in heads.iter().enumerate() {
            if base.edge(i).binary_search(&h).is_err() {
                return Err(HeadError::NotInEdge { edge: i, head: h });
            }
        }
        Ok(DirectedHypergraph { base, heads })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn head(&self, edge: usize) -> usize {
        self.heads[edge]
    }

    /// The vertices of hyperarc `edge` other than its head.
    pub fn tails(&self, edge: usize) -> impl Iterator<Item = usize> + '_ {
        let h = self.heads[edge];
        self.base
            .edge(edge)
            .iter()
            .copied()
            .filter(move |&v| v != h)
    }

    pub fn indegree(&self, v: usize) -> usize {
        assert!(v < self.base.n, "vertex {v} out of range");
        self.heads.iter().filter(|&&h| h == v).count()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        assert!(v < self.base.n, "vertex {v} out of range");
        self.base
            .edges
            .iter()
            .zip(&self.heads)
            .filter(|(e, &h)| h != v && e.binary_search(&v).is_ok())
            .count()
    }

    pub fn indegrees(&self) -> Vec<usize> {
        let mut d = alloc::vec![0; self.base.n];
        for &h in &self.heads {
            d[h] += 1;
        }
        d
    }

    pub fn into_parts(self) -> (Hypergraph, Vec<usize>) {
        (self.base, self.heads)
    }
}

/// Error from [`DemandFunction::for_hypergraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemandLengthError {
    pub expected: usize,
    pub found: usize,
}

impl fmt::Display for DemandLengthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "demand function has {} entries, expected {}",
            self.found, self.expected
        )
    }
}

impl core::error::Error for DemandLengthError {}

/// Non-negative integer demand per vertex. Negative demands are
/// unrepresentable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DemandFunction {
    values: Vec<usize>,
}

impl DemandFunction {
    pub fn new(values: Vec<usize>) -> Self {
        DemandFunction { values }
    }

    pub fn for_hypergraph(h: &Hypergraph, values: Vec<usize>) -> Result<Self, DemandLengthError> {
        if values.len() != h.vertex_count() {
            return Err(DemandLengthError {
                expected: h.vertex_count(),
                found: values.len(),
            });
        }
        Ok(DemandFunction { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, v: usize) -> usize {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of demands over `set`.
    pub fn total_over(&self, set: &[usize]) -> usize {
        set.iter().map(|&v| self.values[v]).sum()
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn h1() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap()
    }

    #[test]
    fn validate_flags_loop() {
        let r = validate(3, &[vec![1]]);
        assert_eq!(r.violations, vec![Violation::Loop { edge: 0 }]);
    }

    #[test]
    fn validate_flags_duplicate() {
        let r = validate(3, &[vec![0, 1], vec![0, 1]]);
        assert_eq!(
            r.violations,
            vec![Violation::Duplicate { edge: 1, first: 0 }]
        );
    }

    #[test]
    fn validate_accepts_h1() {
        assert!(validate(4, &[vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]).is_valid());
    }

    #[test]
    fn validate_flags_range_and_order() {
        let r = validate(3, &[vec![0, 5], vec![2, 1], vec![1, 1]]);
        assert!(r
            .violations
            .contains(&Violation::OutOfRange { edge: 0, vertex: 5 }));
        assert!(r.violations.contains(&Violation::Unsorted { edge: 1 }));
        assert!(r.violations.contains(&Violation::Unsorted { edge: 2 }));
        assert!(r.violations.contains(&Violation::Loop { edge: 2 }));
    }

    #[test]
    fn from_unsorted_sorts() {
        let h = Hypergraph::from_unsorted(3, vec![vec![2, 0]]).unwrap();
        assert_eq!(h.edge(0), &[0, 2]);
    }

    #[test]
    fn degrees_and_rank() {
        let h = h1();
        assert_eq!(h.degree(2), 3);
        assert_eq!(h.degree(0), 1);
        assert_eq!(h.degrees(), vec![1, 2, 3, 2]);
        assert_eq!(h.rank(), 3);
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(empty.degree(1), 0);
        assert_eq!(empty.rank(), 0);
        let g = Hypergraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.rank(), 2);
    }

    #[test]
    #[should_panic]
    fn degree_out_of_range_panics() {
        h1().degree(4);
    }

    #[test]
    fn incident_edges() {
        let h = h1();
        assert_eq!(h.incident_edge_count(&[2]), 3);
        // e0 meets 0; e1 and e2 meet 3.
        assert_eq!(h.incident_edge_count(&[0, 3]), 3);
        assert_eq!(h.incident_edge_count(&[0]), 1);
        assert_eq!(h.incident_edge_count(&[]), 0);
    }

    #[test]
    fn in_and_out_degrees() {
        let d = DirectedHypergraph::new(h1(), vec![2, 2, 3]).unwrap();
        assert_eq!(d.indegree(2), 2);
        assert_eq!(d.indegree(3), 1);
        assert_eq!(d.indegree(0), 0);
        assert_eq!(d.outdegree(2), 1);
        assert_eq!(d.outdegree(1), 2);
        assert_eq!(d.tails(1).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!((0..4).map(|v| d.indegree(v)).sum::<usize>(), 3);
    }

    #[test]
    fn bad_heads_rejected() {
        assert_eq!(
            DirectedHypergraph::new(h1(), vec![2, 2]),
            Err(HeadError::Length { heads: 2, edges: 3 })
        );
        assert_eq!(
            DirectedHypergraph::new(h1(), vec![3, 2, 3]),
            Err(HeadError::NotInEdge { edge: 0, head: 3 })
        );
    }

    #[test]
    fn demand_length_checked() {
        assert!(DemandFunction::for_hypergraph(&h1(), vec![0, 0, 1]).is_err());
        let f = DemandFunction::for_hypergraph(&h1(), vec![0, 1, 2, 0]).unwrap();
        assert_eq!(f.total_over(&[1, 2]), 3);
    }
}

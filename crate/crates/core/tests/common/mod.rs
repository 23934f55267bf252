//! Exhaustive oracles, independent of the production algorithms.
#![allow(dead_code)]

use hypershrink::rainbow::ColouredGraph;
use hypershrink::Hypergraph;

/// Components of a graph on `n` vertices by repeated relabelling.
pub fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(u, v) in edges {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut l = label.clone();
    l.sort_unstable();
    l.dedup();
    l.len()
}

pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    components(n, edges) + edges.len() == n
}

/// Largest edge subset that is a forest with pairwise distinct colours.
pub fn max_rainbow_forest_size(g: &ColouredGraph) -> usize {
    let m = g.edges().len();
    assert!(m <= 20);
    let mut best = 0;
    for mask in 0u32..1 << m {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let chosen: Vec<_> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| g.edges()[i])
            .collect();
        let mut colours: Vec<usize> = chosen.iter().map(|e| e.colour).collect();
        colours.sort_unstable();
        colours.dedup();
        if colours.len() != k {
            continue;
        }
        let pairs: Vec<_> = chosen.iter().map(|e| (e.u, e.v)).collect();
        if is_forest(g.vertex_count(), &pairs) {
            best = k;
        }
    }
    best
}

/// Maximum bipartite matching size by trying every injective assignment.
pub fn max_matching_size(adj: &[Vec<usize>], right: usize) -> usize {
    fn go(adj: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
        if i == adj.len() {
            return 0;
        }
        let mut best = go(adj, i + 1, used);
        for &r in &adj[i] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + go(adj, i + 1, used));
                used[r] = false;
            }
        }
        best
    }
    go(adj, 0, &mut vec![false; right])
}

/// Every head assignment of `h`, as index vectors into each hyperedge.
pub fn all_head_choices(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for e in h.edges() {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                e.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Whether some orientation gives every vertex at least `f(v)` heads.
pub fn orientation_exists(h: &Hypergraph, f: &[usize]) -> bool {
    all_head_choices(h).iter().any(|heads| {
        (0..h.vertex_count()).all(|v| heads.iter().filter(|&&x| x == v).count() >= f[v])
    })
}

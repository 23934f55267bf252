//! Maximum bipartite matching (Hopcroft–Karp) and Hall deficiency witnesses.
//!
//! Left vertices are scanned in index order and each adjacency list in the
//! order given, so the matching is a deterministic function of the input.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

/// A bipartite graph given by left-side adjacency lists into `0..right`.
#[derive(Clone, Debug)]
pub struct Bipartite {
    adj: Vec<Vec<usize>>,
    right: usize,
}

/// A matching stored from both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Partner of each left vertex, if any.
    pub left: Vec<Option<usize>>,
    /// Partner of each right vertex, if any.
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().filter(|m| m.is_some()).count()
    }
}

impl Bipartite {
    /// # Panics
    /// If an adjacency entry is `>= right`.
    pub fn new(adj: Vec<Vec<usize>>, right: usize) -> Self {
        assert!(
            adj.iter().flatten().all(|&r| r < right),
            "right vertex out of range"
        );
        Bipartite { adj, right }
    }

    pub fn left_len(&self) -> usize {
        self.adj.len()
    }

    pub fn right_len(&self) -> usize {
        self.right
    }

    pub fn neighbours(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    /// Maximum matching by Hopcroft–Karp phases.
    pub fn maximum_matching(&self) -> Matching {
        let n = self.adj.len();
        let mut mate_l = alloc::vec![NONE; n];
        let mut mate_r = alloc::vec![NONE; self.right];
        let mut dist = alloc::vec![0usize; n];
        let mut queue = VecDeque::new();
        let mut cursor = alloc::vec![0usize; n];
        let mut stack: Vec<usize> = Vec::new();

        loop {
            // BFS layering from free left vertices.
            queue.clear();
            for l in 0..n {
                if mate_l[l] == NONE {
                    dist[l] = 0;
                    queue.push_back(l);
                } else {
                    dist[l] = NONE;
                }
            }
            let mut found = false;
            while let Some(l) = queue.pop_front() {
                for &r in &self.adj[l] {
                    let m = mate_r[r];
                    if m == NONE {
                        found = true;
                    } else if dist[m] == NONE {
                        dist[m] = dist[l] + 1;
                        queue.push_back(m);
                    }
                }
            }
            if !found {
                break;
            }

            // Vertex-disjoint shortest augmenting paths, iterative DFS.
            cursor.iter_mut().for_each(|c| *c = 0);
            for root in 0..n {
                if mate_l[root] != NONE {
                    continue;
                }
                stack.clear();
                stack.push(root);
                while let Some(&l) = stack.last() {
                    if cursor[l] == self.adj[l].len() {
                        dist[l] = NONE;
                        stack.pop();
                        continue;
                    }
                    let r = self.adj[l][cursor[l]];
                    let m = mate_r[r];
                    if m == NONE {
                        // Flip the path recorded on the stack.
                        for &pl in stack.iter().rev() {
                            let pr = self.adj[pl][cursor[pl]];
                            mate_r[pr] = pl;
                            mate_l[pl] = pr;
                        }
                        for &pl in &stack {
                            dist[pl] = NONE;
                        }
                        break;
                    }
                    if dist[m] != NONE && dist[m] == dist[l] + 1 {
                        stack.push(m);
                    } else {
                        cursor[l] += 1;
                    }
                }
                // Parents on an abandoned path advance past the dead child.
                for &pl in &stack {
                    cursor[pl] += 1;
                }
            }
        }

        Matching {
            left: mate_l.iter().map(|&r| (r != NONE).then_some(r)).collect(),
            right: mate_r.iter().map(|&l| (l != NONE).then_some(l)).collect(),
        }
    }

    /// Right vertices reachable by alternating paths from the right vertices
    /// left unmatched by `matching`, and their left neighbourhood.
    ///
    /// When `matching` is maximum and leaves `u` right vertices unmatched,
    /// every reached left vertex is matched into the reached right set, so
    /// `|N(A)| = |A| - u`: a Hall deficiency witness.
    pub fn deficiency(&self, matching: &Matching) -> (Vec<usize>, Vec<usize>) {
        let mut right_adj = alloc::vec![Vec::new(); self.right];
        for (l, rs) in self.adj.iter().enumerate() {
            for &r in rs {
                right_adj[r].push(l);
            }
        }
        let mut seen_r = alloc::vec![false; self.right];
        let mut seen_l = alloc::vec![false; self.adj.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (r, mate) in matching.right.iter().enumerate() {
            if mate.is_none() {
                seen_r[r] = true;
                queue.push_back(r);
            }
        }
        while let Some(r) = queue.pop_front() {
            for &l in &right_adj[r] {
                if seen_l[l] {
                    continue;
                }
                seen_l[l] = true;
                if let Some(r2) = matching.left[l] {
                    if !seen_r[r2] {
                        seen_r[r2] = true;
                        queue.push_back(r2);
                    }
                }
            }
        }
        let a = (0..self.right).filter(|&r| seen_r[r]).collect();
        let n = (0..self.adj.len()).filter(|&l| seen_l[l]).collect();
        (a, n)
    }
}

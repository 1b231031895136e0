//! Simple undirected graphs on at most 32 nodes, stored as one bit-row per node.

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// Largest supported node count; one adjacency row fits a `u32`.
pub const MAX_NODES: usize = 32;

/// Simple undirected graph. Row `i` has bit `j` set iff `{i, j}` is an edge.
///
/// Rows beyond `n` are always zero, so derived equality and hashing compare
/// labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_NODES],
}

impl Graph {
    /// Graph on `n` nodes with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_NODES {
            return Err(Error::NodeCount(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_NODES],
        })
    }

    /// Builds a graph from unordered pairs. Repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Self {
        debug_assert!((1..=MAX_NODES).contains(&n) && rows.len() == n);
        let mut adj = [0; MAX_NODES];
        adj[..n].copy_from_slice(rows);
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for index in [u, v] {
            if index >= self.n {
                return Err(Error::NodeIndex { index, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adjacency rows, one bitmask per node.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.adj[v])
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !((2u64 << u) - 1) as u32) {
                out.push((u, v));
            }
        }
        out
    }

    /// Relabels nodes so that new node `i` is old node `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "relabeling must cover every node");
        let mut position = [0usize; MAX_NODES];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut adj = [0u32; MAX_NODES];
        for (new, &old) in order.iter().enumerate() {
            for w in self.neighbors(old) {
                adj[new] |= 1 << position[w];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Graph with one extra node joined to every node in `mask`.
    pub fn extend(&self, mask: u32) -> Result<Graph> {
        if self.n == MAX_NODES {
            return Err(Error::NodeCount(self.n + 1));
        }
        let mut adj = self.adj;
        let new = self.n;
        for v in BitIter(mask) {
            if v >= self.n {
                return Err(Error::NodeIndex { index: v, n: self.n });
            }
            adj[v] |= 1 << new;
        }
        adj[new] = mask;
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Hop distances from `source`; `None` marks unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.n {
            return Err(Error::NodeIndex {
                index: source,
                n: self.n,
            });
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs hop distances of a connected graph.
    pub(crate) fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n)
            .map(|s| {
                self.bfs_distances(s)?
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let full = if self.n == MAX_NODES {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Exact diagonals of `A^l` for `l = 0..=max_len`.
    ///
    /// Counts are `u128` with checked arithmetic; overflow is an error.
    pub fn walk_diagonals(&self, max_len: usize) -> Result<Vec<WalkDiagonal>> {
        let n = self.n;
        let mut power = vec![0u128; n * n];
        for i in 0..n {
            power[i * n + i] = 1;
        }
        let mut out = Vec::with_capacity(max_len + 1);
        out.push(WalkDiagonal {
            length: 0,
            diag: vec![1; n],
        });
        let mut next = vec![0u128; n * n];
        for l in 1..=max_len {
            // (A^l)_{ij} = sum over neighbors k of j of (A^{l-1})_{ik}
            for i in 0..n {
                for j in 0..n {
                    let mut acc: u128 = 0;
                    for k in self.neighbors(j) {
                        acc = acc
                            .checked_add(power[i * n + k])
                            .ok_or(Error::WalkOverflow(l))?;
                    }
                    next[i * n + j] = acc;
                }
            }
            std::mem::swap(&mut power, &mut next);
            out.push(WalkDiagonal {
                length: l,
                diag: (0..n).map(|i| power[i * n + i]).collect(),
            });
        }
        Ok(out)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Closed-walk counts `(A^l)_ii` for one length `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkDiagonal {
    pub length: usize,
    pub diag: Vec<u128>,
}

impl WalkDiagonal {
    pub fn is_constant(&self) -> bool {
        self.diag.windows(2).all(|w| w[0] == w[1])
    }
}

/// Iterates the set bit positions of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = p3();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.degrees(), vec![1, 2, 1]);

        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);

        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let k4 = Graph::from_edge_list(4, &all).unwrap();
        for u in 0..4 {
            assert_eq!(k4.row(u), 0b1111 & !(1 << u));
        }
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::NodeIndex { index: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::Loop(1))
        ));
        assert!(matches!(Graph::empty(0), Err(Error::NodeCount(0))));
        assert!(matches!(Graph::empty(33), Err(Error::NodeCount(33))));
        assert!(Graph::empty(32).is_ok());
    }

    #[test]
    fn bfs_on_cycle_and_complete() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d: Vec<_> = c5.bfs_distances(0).unwrap().into_iter().flatten().collect();
        assert_eq!(d, vec![0, 1, 2, 2, 1]);

        let mut k4 = Graph::empty(4).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v).unwrap();
            }
        }
        for s in 0..4 {
            let d = k4.bfs_distances(s).unwrap();
            for (v, dv) in d.iter().enumerate() {
                assert_eq!(*dv, Some(if v == s { 0 } else { 1 }));
            }
        }
        assert!(c5.bfs_distances(5).is_err());
    }

    #[test]
    fn bfs_marks_unreachable() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bfs_distances(0).unwrap(), vec![Some(0), Some(1), None, None]);
        assert!(matches!(g.distance_matrix(), Err(Error::Disconnected)));
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        let c8: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        assert!(Graph::from_edge_list(8, &c8).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let path32: Vec<_> = (0..31).map(|i| (i, i + 1)).collect();
        assert!(Graph::from_edge_list(32, &path32).unwrap().is_connected());
    }

    /// Counts closed walks of length `l` at `start` by enumerating every walk.
    fn brute_closed_walks(g: &Graph, start: usize, l: usize) -> u128 {
        fn go(g: &Graph, at: usize, start: usize, left: usize) -> u128 {
            if left == 0 {
                return (at == start) as u128;
            }
            g.neighbors(at).map(|w| go(g, w, start, left - 1)).sum()
        }
        go(g, start, start, l)
    }

    #[test]
    fn walk_diagonal_examples() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.walk_diagonals(2).unwrap()[2].diag, vec![2, 2, 2, 2]);

        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let brute: Vec<u128> = (0..3).map(|i| brute_closed_walks(&k3, i, 3)).collect();
        assert_eq!(brute, vec![2, 2, 2]);
        assert_eq!(k3.walk_diagonals(3).unwrap()[3].diag, brute);

        let w = p3().walk_diagonals(2).unwrap();
        assert_eq!(w[0].diag, vec![1, 1, 1]);
        assert_eq!(w[1].diag, vec![0, 0, 0]);
        assert_eq!(w[2].diag, vec![1, 2, 1]);
    }

    #[test]
    fn walk_diagonals_match_brute_force() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let w = g.walk_diagonals(7).unwrap();
        for (l, wd) in w.iter().enumerate() {
            assert_eq!(wd.length, l);
            for i in 0..5 {
                assert_eq!(wd.diag[i], brute_closed_walks(&g, i, l));
            }
        }
    }

    #[test]
    fn walk_overflow_is_reported() {
        let mut k32 = Graph::empty(32).unwrap();
        for u in 0..32 {
            for v in u + 1..32 {
                k32.add_edge(u, v).unwrap();
            }
        }
        assert!(matches!(k32.walk_diagonals(63), Err(Error::WalkOverflow(_))));
    }

    #[test]
    fn relabel_and_extend() {
        let g = p3().relabel(&[1, 0, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        let h = p3().extend(0b101).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(3, 0) && h.has_edge(2, 3));
    }
}

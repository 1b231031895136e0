//! Canonical labeling by partition refinement and individualization.
//!
//! The search explores every discrete refinement of the degree partition and
//! keeps the relabeling whose graph6 bit string is smallest. Automorphisms
//! discovered at equal leaves prune sibling branches they map onto each other.

use crate::graph::{Graph, MAX_NODES};
use crate::graph6::to_graph6;

/// Canonical isomorph of a graph together with its graph6 text.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Canonical {
    pub graph6: String,
    pub graph: Graph,
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n(), self.rows()).cmp(&(other.n(), other.rows()))
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let order = canonical_labeling(g, vec![(0..g.n()).collect()]);
    let graph = g.relabel(&order);
    Canonical {
        graph6: to_graph6(&graph),
        graph,
    }
}

/// Upper-triangle bits in graph6 order, packed most-significant first.
///
/// For a fixed node count, comparing certificates orders graphs exactly as
/// comparing their graph6 strings does.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Certificate(Vec<u64>);

fn certificate(g: &Graph, order: &[usize]) -> Certificate {
    let n = order.len();
    let bits = n * (n - 1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &vi in &order[..j] {
            if row >> vi & 1 == 1 {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    Certificate(words)
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into every cell until the partition is equitable.
///
/// Sub-cells are ordered by their count signature, so the result depends only
/// on the graph and the input partition, never on node labels.
pub(crate) fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(g.n());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<([u8; MAX_NODES], usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = [0u8; MAX_NODES];
                    for (slot, m) in sig.iter_mut().zip(&masks) {
                        *slot = (g.row(v) & m).count_ones() as u8;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Ordering of the nodes (new label -> old node) that yields the canonical
/// isomorph relative to the ordered initial partition.
///
/// Nodes placed in the first cell of `initial` stay ahead of all others, which
/// lets callers canonicalize with a distinguished node.
pub(crate) fn canonical_labeling(g: &Graph, initial: Partition) -> Vec<usize> {
    canonical_search(g, initial).1
}

pub(crate) fn canonical_search(g: &Graph, initial: Partition) -> (Certificate, Vec<usize>) {
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
        prefix: Vec::new(),
    };
    search.descend(initial);
    search.best.expect("search always reaches a leaf")
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Certificate, Vec<usize>)>,
    /// Each entry maps node `v` to `perm[v]`.
    automorphisms: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(candidates.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.prefix.push(v);
            self.descend(child);
            self.prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => match cert.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((cert, order)),
                std::cmp::Ordering::Equal => {
                    let mut perm = vec![0; self.g.n()];
                    for (pos, &v) in order.iter().enumerate() {
                        perm[v] = best_order[pos];
                    }
                    if perm.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(perm);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// True when an automorphism fixing the current prefix maps `v` into the
    /// orbit of an already explored sibling.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for perm in &self.automorphisms {
            if self.prefix.iter().any(|&p| perm[p] != p) {
                continue;
            }
            any = true;
            for (a, &b) in perm.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }
}

/// Initial partition placing `v` ahead of every other node.
pub(crate) fn individualized(n: usize, v: usize) -> Partition {
    let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    if rest.is_empty() {
        vec![vec![v]]
    } else {
        vec![vec![v], rest]
    }
}

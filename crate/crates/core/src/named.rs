//! Reference graphs used to recognize the small zero-variance graphs by name.

use crate::canon::canonical_form;
use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three nodes");
    circulant(n, &[1])
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("valid complete graph")
}

pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edge_list(leaves + 1, &edges).expect("valid star")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(a + b, &edges).expect("valid complete bipartite graph")
}

/// Circulant graph on `Z_n`: `i ~ j` iff `(i - j) mod n` is in `±jumps`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut g = Graph::empty(n).expect("valid node count");
    for i in 0..n {
        for &s in jumps {
            let j = (i + s) % n;
            if j != i {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// Triangular prism `K3 x K2`.
pub fn prism() -> Graph {
    Graph::from_edge_list(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid prism")
}

/// Octahedron `K_{2,2,2}`: complete graph on six nodes minus a perfect matching.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(6, &edges).expect("valid octahedron")
}

/// Three-dimensional hypercube `Q3`.
pub fn cube() -> Graph {
    let mut g = Graph::empty(8).expect("valid node count");
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            if u & bit == 0 {
                g.add_edge(u, u | bit).expect("in range");
            }
        }
    }
    g
}

/// Named graphs on `n` nodes recognized in reports.
pub fn catalog(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![(format!("K{n}"), complete(n)), (format!("P{n}"), path(n))];
    if n >= 3 {
        out.push((format!("C{n}"), cycle(n)));
    }
    if n >= 4 {
        out.push((format!("K1,{}", n - 1), star(n - 1)));
    }
    if n == 6 {
        out.push(("K3,3".into(), complete_bipartite(3, 3)));
        out.push(("prism".into(), prism()));
        out.push(("octahedron".into(), octahedron()));
    }
    if n == 7 {
        out.push(("C7(1,2)".into(), circulant(7, &[1, 2])));
    }
    if n == 8 {
        out.push(("K4,4".into(), complete_bipartite(4, 4)));
        out.push(("cube".into(), cube()));
    }
    out
}

/// Name of a catalog graph with the given canonical graph6 text, if any.
pub fn identify(canonical_graph6: &str, n: usize) -> Option<String> {
    catalog(n)
        .into_iter()
        .find(|(_, g)| canonical_form(g).graph6 == canonical_graph6)
        .map(|(name, _)| name)
}

//! Cross-module invariants checked over the exhaustive small-graph corpus.

mod common;

use centrascope::centrality::{
    betweenness_centrality, closeness_centrality, subgraph_centrality_series, Centralities,
    CentralityValues,
};
use centrascope::enumerate::enumerate_connected;
use centrascope::structure::{
    automorphism_orbits, is_distance_regular, is_regular, is_walk_regular, structure_profile,
};
use centrascope::Graph;
use common::{brute_betweenness, brute_class_key, corpus};
use num::{BigRational, ToPrimitive};
use std::collections::HashSet;

fn exact(v: centrascope::CentralityVector) -> Vec<BigRational> {
    match v.values {
        CentralityValues::Exact(x) => x,
        CentralityValues::Float(_) => panic!("expected exact values"),
    }
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        let mut classes = HashSet::new();
        for code in 0u32..(1 << pairs) {
            let mut rows = vec![0u32; n];
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if code >> k & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                    k += 1;
                }
            }
            let mut edges = Vec::new();
            for (u, row) in rows.iter().enumerate() {
                for v in u + 1..n {
                    if row >> v & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            if Graph::from_edge_list(n, &edges).unwrap().is_connected() {
                classes.insert(brute_class_key(n, &rows));
            }
        }
        assert_eq!(enumerate_connected(n).unwrap().len(), classes.len(), "n={n}");
    }
}

#[test]
fn enumeration_totals_through_eight() {
    let counts: Vec<usize> = (5..=8).map(|n| enumerate_connected(n).unwrap().len()).collect();
    assert_eq!(counts, vec![21, 112, 853, 11117]);
    assert_eq!(counts.iter().sum::<usize>(), 12_103);
}

#[test]
fn walk_counts_agree_with_degrees() {
    for g in corpus(1, 8) {
        let w = g.walk_diagonals(2).unwrap();
        let deg: Vec<u128> = g.degrees().into_iter().map(|d| d as u128).collect();
        assert_eq!(w[2].diag, deg);
        assert_eq!(w[2].diag.iter().sum::<u128>(), 2 * g.edge_count() as u128);
        assert!(w[1].diag.iter().all(|&x| x == 0));
        assert!(w[0].diag.iter().all(|&x| x == 1));
    }
}

#[test]
fn bfs_triangle_inequality() {
    for g in corpus(2, 7) {
        let d: Vec<Vec<usize>> = (0..g.n())
            .map(|s| g.bfs_distances(s).unwrap().into_iter().map(Option::unwrap).collect())
            .collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(d[u][v], d[v][u]);
                for w in 0..g.n() {
                    assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
    }
}

#[test]
fn structural_implication_chain() {
    for g in corpus(1, 8) {
        let p = structure_profile(&g).unwrap();
        if p.distance_regular {
            assert!(p.walk_regular, "{g:?}");
        }
        if p.vertex_transitive {
            assert!(p.walk_regular, "{g:?}");
        }
        if p.walk_regular {
            assert!(p.regular, "{g:?}");
        }
        assert_eq!(p.vertex_transitive, p.orbits.len() == 1);
    }
}

#[test]
fn walk_regularity_cutoff_matches_longer_check() {
    for g in corpus(1, 7) {
        let long = g.walk_diagonals(2 * g.n()).unwrap();
        let brute = long.iter().all(|wd| wd.is_constant());
        assert_eq!(is_walk_regular(&g).unwrap(), brute, "{g:?}");
    }
}

#[test]
fn regular_and_walk_regular_counts() {
    let seven = enumerate_connected(7).unwrap();
    let odd: Vec<_> = seven
        .iter()
        .filter(|g| is_regular(g) && !is_walk_regular(g).unwrap())
        .collect();
    assert_eq!(odd.len(), 1);
    assert_eq!(odd[0].degree(0), 4);

    let eight = enumerate_connected(8).unwrap();
    let wr = eight.iter().filter(|g| is_walk_regular(g).unwrap()).count();
    assert_eq!(wr, 10);
}

fn orbit_sound(g: &Graph) {
    let c = Centralities::compute(g).unwrap();
    let dist_profile = |v: usize| {
        let mut d: Vec<_> = g.bfs_distances(v).unwrap();
        d.sort();
        d
    };
    for orbit in automorphism_orbits(g) {
        let r = orbit[0];
        for &v in &orbit[1..] {
            assert_eq!(g.degree(v), g.degree(r));
            assert_eq!(dist_profile(v), dist_profile(r));
            assert!((c.subgraph[v] - c.subgraph[r]).abs() <= 1e-9);
            assert!((c.eigenvector[v] - c.eigenvector[r]).abs() <= 1e-9);
            assert_eq!(c.betweenness[v], c.betweenness[r]);
            if let Some(cl) = &c.closeness {
                assert_eq!(cl[v], cl[r]);
            }
        }
    }
}

#[test]
fn orbits_are_centrality_invariant() {
    for g in corpus(1, 6) {
        orbit_sound(&g);
    }
    for n in [7, 8] {
        let all = enumerate_connected(n).unwrap();
        let step = all.len() / 200;
        for g in all.iter().step_by(step.max(1)).take(200) {
            orbit_sound(g);
        }
    }
}

#[test]
fn betweenness_matches_path_listing() {
    for g in corpus(2, 6) {
        assert_eq!(exact(betweenness_centrality(&g).unwrap()), brute_betweenness(&g), "{g:?}");
    }
}

/// Ordered betweenness of a tree: twice the number of pairs separated by
/// deleting the node.
#[test]
fn tree_betweenness_counts_separated_pairs() {
    let mut trees = 0;
    for g in corpus(2, 8).into_iter().filter(|g| g.edge_count() == g.n() - 1) {
        trees += 1;
        let bc = exact(betweenness_centrality(&g).unwrap());
        for k in 0..g.n() {
            let mut rows: Vec<u32> = g.rows().iter().map(|r| r & !(1 << k)).collect();
            rows[k] = 0;
            let mut edges = Vec::new();
            for (u, row) in rows.iter().enumerate() {
                for v in u + 1..g.n() {
                    if row >> v & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let cut = Graph::from_edge_list(g.n(), &edges).unwrap();
            let mut separated = 0i64;
            for i in (0..g.n()).filter(|&i| i != k) {
                let reach = cut.bfs_distances(i).unwrap();
                separated += (0..g.n())
                    .filter(|&j| j != k && j != i && reach[j].is_none())
                    .count() as i64;
            }
            assert_eq!(bc[k], BigRational::from_integer(separated.into()), "{g:?} node {k}");
        }
    }
    // Unlabeled trees on 2..=8 nodes: 1, 1, 2, 3, 6, 11, 23.
    assert_eq!(trees, 47);
}

#[test]
fn centrality_value_invariants() {
    for g in corpus(2, 8) {
        let c = Centralities::compute(&g).unwrap();
        let norm: f64 = c.eigenvector.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() <= 1e-10);
        assert!(c.eigenvector.iter().all(|&x| x > 0.0));
        if is_regular(&g) {
            let first = c.eigenvector[0];
            assert!(c.eigenvector.iter().all(|x| (x - first).abs() <= 1e-9));
        }
        let one = BigRational::from_integer(1.into());
        let closeness = exact(closeness_centrality(&g).unwrap());
        for (v, cv) in closeness.iter().enumerate() {
            assert_eq!(*cv == one, g.degree(v) == g.n() - 1);
            assert!(*cv > BigRational::from_integer(0.into()) && *cv <= one);
            assert!(c.subgraph[v] >= 1.0 + g.degree(v) as f64 / 2.0 - 1e-9);
            assert!(c.betweenness[v] >= BigRational::from_integer(0.into()));
        }
        let degree_sum: BigRational = c.degree.iter().sum();
        assert_eq!(degree_sum, BigRational::from_integer((2 * g.edge_count() as i64).into()));
        let s = &c.spectrum;
        assert!(s.orthonormality_defect() <= 1e-10);
        assert!(s.residual <= 1e-9 * s.eigenvalues[0].abs().max(1.0));
        assert!(s.eigenvalues.iter().sum::<f64>().abs() <= 1e-9);
    }
}

#[test]
fn spectral_values_sit_in_certified_series_intervals() {
    for g in corpus(1, 8) {
        let c = Centralities::compute(&g).unwrap();
        let series = subgraph_centrality_series(&g, 30).unwrap();
        let slack = c.spectrum.subgraph_rounding_bound();
        for (i, (ee, partial)) in c.subgraph.iter().zip(&series.partial_sums).enumerate() {
            let gap = (BigRational::from_float(*ee).unwrap() - partial).to_f64().unwrap();
            assert!(series.contains(i, *ee, slack), "{g:?}: gap {gap:e}, slack {slack:e}");
        }
        let trace: f64 = c.subgraph.iter().sum();
        let estrada: f64 = c.spectrum.eigenvalues.iter().map(|l| l.exp()).sum();
        assert!((trace - estrada).abs() <= 1e-9 * estrada);
    }
}

#[test]
fn distance_regular_graphs_through_eight() {
    let dr: Vec<String> = corpus(3, 8)
        .into_iter()
        .filter(|g| is_distance_regular(g).unwrap())
        .map(|g| centrascope::canonical_form(&g).graph6)
        .collect();
    // K3..K8, C4..C8, K3,3, octahedron, K4,4, cube, and K8 minus a perfect matching.
    assert_eq!(dr.len(), 6 + 5 + 5, "{dr:?}");
}

//! Regularity classes and automorphism orbits.

use crate::canon::{canonical_search, individualized, refine};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub regular: bool,
    pub walk_regular: bool,
    pub vertex_transitive: bool,
    pub distance_regular: bool,
    pub bipartite: bool,
    /// Automorphism orbits, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
}

pub fn is_regular(g: &Graph) -> bool {
    let d = g.degree(0);
    (1..g.n()).all(|v| g.degree(v) == d)
}

/// Constant closed-walk counts at every length.
///
/// Lengths up to `n - 1` suffice: by Cayley-Hamilton every higher power of
/// `A` is a fixed linear combination of `I, A, ..., A^(n-1)`.
pub fn is_walk_regular(g: &Graph) -> Result<bool> {
    if g.n() <= 2 {
        return Ok(is_regular(g));
    }
    Ok(g.walk_diagonals(g.n() - 1)?
        .iter()
        .skip(2)
        .all(|wd| wd.is_constant()))
}

/// Partition of the nodes into automorphism orbits.
///
/// Two nodes share an orbit iff canonical labeling with each one pinned first
/// yields the same certificate; equal certificates exhibit an automorphism
/// mapping one node onto the other.
pub fn automorphism_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let cells = refine(g, vec![(0..n).collect()]);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for cell in cells {
        if cell.len() == 1 {
            orbits.push(cell);
            continue;
        }
        let mut by_certificate: HashMap<_, Vec<usize>> = HashMap::new();
        for &v in &cell {
            let (cert, _) = canonical_search(g, individualized(n, v));
            by_certificate.entry(cert).or_default().push(v);
        }
        orbits.extend(by_certificate.into_values());
    }
    for orbit in &mut orbits {
        orbit.sort_unstable();
    }
    orbits.sort_unstable_by_key(|o| o[0]);
    orbits
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    automorphism_orbits(g).len() == 1
}

/// Checks that the counts `(c_k, a_k, b_k)` of neighbors of `v` at distance
/// `k-1`, `k`, `k+1` from `u` depend only on `k = d(u, v)`.
pub fn is_distance_regular(g: &Graph) -> Result<bool> {
    let n = g.n();
    let dist = g.distance_matrix()?;
    let mut intersection: Vec<Option<(usize, usize, usize)>> = vec![None; n];
    for row in &dist {
        for (v, &k) in row.iter().enumerate() {
            let (mut c, mut a, mut b) = (0, 0, 0);
            for w in g.neighbors(v) {
                match row[w] {
                    d if d + 1 == k => c += 1,
                    d if d == k => a += 1,
                    _ => b += 1,
                }
            }
            match intersection[k] {
                None => intersection[k] = Some((c, a, b)),
                Some(seen) if seen != (c, a, b) => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// Two-colorability by BFS layering of each component.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = color[u].expect("colored before push");
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn structure_profile(g: &Graph) -> Result<StructureProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let orbits = automorphism_orbits(g);
    Ok(StructureProfile {
        regular: is_regular(g),
        walk_regular: is_walk_regular(g)?,
        vertex_transitive: orbits.len() == 1,
        distance_regular: is_distance_regular(g)?,
        bipartite: is_bipartite(g),
        orbits,
    })
}

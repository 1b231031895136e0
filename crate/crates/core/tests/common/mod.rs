#![allow(dead_code)]

use centrascope::enumerate::enumerate_connected;
use centrascope::Graph;
use num::BigRational;

/// Connected graphs on `lo..=hi` nodes.
pub fn corpus(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| enumerate_connected(n).unwrap().into_iter())
        .collect()
}

/// Every simple path from `from` to `to`, as node sequences.
pub fn all_paths(g: &Graph, from: usize, to: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, at: usize, to: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == to {
            out.push(path.clone());
            return;
        }
        for w in g.neighbors(at) {
            if !path.contains(&w) {
                path.push(w);
                go(g, w, to, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, from, to, &mut vec![from], &mut out);
    out
}

/// Ordered-pair betweenness by listing every shortest path explicitly.
pub fn brute_betweenness(g: &Graph) -> Vec<BigRational> {
    let n = g.n();
    let mut bc = vec![BigRational::from_integer(0.into()); n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let paths = all_paths(g, i, j);
            let shortest = paths.iter().map(|p| p.len()).min().unwrap();
            let geodesics: Vec<_> = paths.into_iter().filter(|p| p.len() == shortest).collect();
            let total = geodesics.len() as i64;
            for (k, slot) in bc.iter_mut().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let through = geodesics.iter().filter(|p| p.contains(&k)).count() as i64;
                *slot += BigRational::new(through.into(), total.into());
            }
        }
    }
    bc
}

/// Sorts `order` lexicographically by graph6 bits over all n! relabelings; an
/// isomorphism-class key independent of the crate's canonical search.
pub fn brute_class_key(n: usize, rows: &[u32]) -> u64 {
    fn permute(k: usize, p: &mut Vec<usize>, rows: &[u32], best: &mut u64) {
        let n = p.len();
        if k == n {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | (rows[p[i]] >> p[j] & 1) as u64;
                }
            }
            *best = (*best).min(code);
            return;
        }
        for i in k..n {
            p.swap(k, i);
            permute(k + 1, p, rows, best);
            p.swap(k, i);
        }
    }
    let mut best = u64::MAX;
    permute(0, &mut (0..n).collect(), rows, &mut best);
    best
}

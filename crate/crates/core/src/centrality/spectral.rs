//! Symmetric eigendecomposition of adjacency matrices by cyclic Jacobi rotations.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a graph's adjacency matrix.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// Descending: `eigenvalues[0]` is the largest.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[j]` is the unit eigenvector for `eigenvalues[j]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Largest `||A x - lambda x||` over all eigenpairs.
    pub residual: f64,
}

impl SpectralDecomposition {
    /// Rounding allowance for `sum_j phi_j(i)^2 e^{lambda_j}`: a few units of
    /// `n * eps` on the largest term `e^{lambda_1}`.
    pub fn subgraph_rounding_bound(&self) -> f64 {
        let n = self.eigenvalues.len() as f64;
        let largest = self.eigenvalues.first().map_or(1.0, |l| l.exp().max(1.0));
        4.0 * n * f64::EPSILON * largest
    }

    /// Largest `|<x_i, x_j> - delta_ij|` over all eigenvector pairs.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.eigenvectors.iter().enumerate() {
            for (j, b) in self.eigenvectors.iter().enumerate().skip(i) {
                let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

pub fn spectral_decomposition(g: &Graph) -> Result<SpectralDecomposition> {
    let n = g.n();
    let adjacency: Vec<f64> = (0..n * n)
        .map(|k| if g.has_edge(k / n, k % n) { 1.0 } else { 0.0 })
        .collect();
    let (values, vectors) = jacobi(adjacency.clone(), n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let eigenvalues: Vec<f64> = order.iter().map(|&j| values[j]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&j| (0..n).map(|i| vectors[i * n + j]).collect())
        .collect();

    let mut residual = 0.0f64;
    for (lambda, x) in eigenvalues.iter().zip(&eigenvectors) {
        let mut norm2 = 0.0;
        for i in 0..n {
            let ax: f64 = (0..n).map(|k| adjacency[i * n + k] * x[k]).sum();
            norm2 += (ax - lambda * x[i]).powi(2);
        }
        residual = residual.max(norm2.sqrt());
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Cyclic Jacobi on a row-major symmetric matrix. Returns the unsorted
/// eigenvalues and the row-major matrix whose columns are eigenvectors.
fn jacobi(mut a: Vec<f64>, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tolerance = 1e-12 * frobenius.max(1.0);
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };

    // One sweep past the tolerance brings eigenvectors to working precision:
    // eigenvector error is linear in the remaining off-diagonal mass.
    let mut sweeps = 0;
    let mut polish = true;
    loop {
        if off_norm(&a) <= tolerance {
            if !polish {
                break;
            }
            polish = false;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Rotation angle from the stable tangent formula.
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), v))
}

//! Certified truncation of the closed-walk series `sum_l (A^l)_ii / l!`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

/// Longest truncation accepted; factorials and walk counts stay exact.
pub const MAX_SERIES_LENGTH: usize = 40;

/// Exact partial sums plus a bound on everything the truncation dropped.
#[derive(Clone, Debug)]
pub struct SeriesBound {
    pub length: usize,
    pub partial_sums: Vec<BigRational>,
    /// Every true value lies in `[partial, partial + tail_bound]`.
    pub tail_bound: f64,
}

impl SeriesBound {
    /// Whether a float value for node `i` lies in the certified interval,
    /// widened by `slack` on both sides for rounding in `value`.
    pub fn contains(&self, i: usize, value: f64, slack: f64) -> bool {
        let Some(exact) = BigRational::from_float(value) else {
            return false;
        };
        let gap = (exact - &self.partial_sums[i]).to_f64().unwrap_or(f64::NAN);
        gap >= -slack && gap <= self.tail_bound + slack
    }
}

/// Partial sums of the subgraph-centrality series up to length `length`.
///
/// The tail bound uses the maximum degree `d` as an upper bound on the
/// spectral radius, so `(A^l)_ii <= d^l` and the dropped terms are at most
/// `d^(L+1)/(L+1)! * (L+2)/(L+2-d)` when `d < L+2`, otherwise
/// `d^(L+1) e^d / (L+1)!`. No floating-point spectrum enters the certificate.
pub fn subgraph_centrality_series(g: &Graph, length: usize) -> Result<SeriesBound> {
    if length > MAX_SERIES_LENGTH {
        return Err(Error::SeriesLength(length));
    }
    let walks = g.walk_diagonals(length)?;
    let n = g.n();
    let mut sums = vec![BigRational::zero(); n];
    let mut factorial = BigInt::one();
    for (l, wd) in walks.iter().enumerate() {
        if l > 0 {
            factorial *= l;
        }
        for (sum, &count) in sums.iter_mut().zip(&wd.diag) {
            if count != 0 {
                *sum += BigRational::new(BigInt::from(count), factorial.clone());
            }
        }
    }
    Ok(SeriesBound {
        length,
        partial_sums: sums,
        tail_bound: tail_bound(g.degrees().into_iter().max().unwrap_or(0), length),
    })
}

fn tail_bound(max_degree: usize, length: usize) -> f64 {
    let d = max_degree as f64;
    // d^(L+1) / (L+1)! as a running product to stay in range.
    let leading: f64 = (1..=length + 1).map(|m| d / m as f64).product();
    let factor = if (max_degree as f64) < (length + 2) as f64 {
        (length + 2) as f64 / ((length + 2) as f64 - d)
    } else {
        d.exp()
    };
    // Cover rounding in the product above.
    leading * factor * (1.0 + 1e-9)
}

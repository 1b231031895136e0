//! The five node centralities: degree, closeness, betweenness, eigenvector
//! and subgraph centrality.
//!
//! Degree, closeness and betweenness are exact rationals so that "all values
//! equal" is decided without rounding. The two spectral measures are floats
//! from a Jacobi eigendecomposition; [`series`] certifies subgraph centrality
//! independently through exact closed-walk counts.

pub mod series;
pub mod spectral;

pub use series::{subgraph_centrality_series, SeriesBound, MAX_SERIES_LENGTH};
pub use spectral::{spectral_decomposition, SpectralDecomposition};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use num::{BigInt, BigRational, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Centrality measures, in the column order used by reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralityKind {
    Subgraph,
    Degree,
    Eigenvector,
    Closeness,
    Betweenness,
}

impl CentralityKind {
    pub const ALL: [CentralityKind; 5] = [
        CentralityKind::Subgraph,
        CentralityKind::Degree,
        CentralityKind::Eigenvector,
        CentralityKind::Closeness,
        CentralityKind::Betweenness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentralityKind::Subgraph => "subgraph",
            CentralityKind::Degree => "degree",
            CentralityKind::Eigenvector => "eigenvector",
            CentralityKind::Closeness => "closeness",
            CentralityKind::Betweenness => "betweenness",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CentralityKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CentralityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown centrality measure '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CentralityValues {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

impl CentralityValues {
    pub fn len(&self) -> usize {
        match self {
            CentralityValues::Exact(v) => v.len(),
            CentralityValues::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            CentralityValues::Exact(v) => v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(),
            CentralityValues::Float(v) => v.clone(),
        }
    }
}

/// Per-node values of one measure for one graph.
#[derive(Clone, Debug)]
pub struct CentralityVector {
    pub kind: CentralityKind,
    pub values: CentralityValues,
    /// Canonical graph6 text of the graph the values belong to.
    pub graph_id: String,
}

impl CentralityVector {
    fn exact(kind: CentralityKind, g: &Graph, values: Vec<BigRational>) -> Self {
        CentralityVector {
            kind,
            values: CentralityValues::Exact(values),
            graph_id: canonical_form(g).graph6,
        }
    }

    fn float(kind: CentralityKind, g: &Graph, values: Vec<f64>) -> Self {
        CentralityVector {
            kind,
            values: CentralityValues::Float(values),
            graph_id: canonical_form(g).graph6,
        }
    }
}

pub fn degree_centrality(g: &Graph) -> CentralityVector {
    let values = g
        .degrees()
        .into_iter()
        .map(|d| BigRational::from_integer(BigInt::from(d)))
        .collect();
    CentralityVector::exact(CentralityKind::Degree, g, values)
}

/// `s(u)`: total hop distance from each node to all others.
pub fn distance_sums(g: &Graph) -> Result<Vec<usize>> {
    Ok(g.distance_matrix()?
        .into_iter()
        .map(|row| row.into_iter().sum())
        .collect())
}

/// Closeness `(n - 1) / s(u)` as exact rationals.
pub fn closeness_centrality(g: &Graph) -> Result<CentralityVector> {
    if g.n() < 2 {
        return Err(Error::TooSmall("closeness centrality"));
    }
    let n1 = BigInt::from(g.n() - 1);
    let values = distance_sums(g)?
        .into_iter()
        .map(|s| BigRational::new(n1.clone(), BigInt::from(s)))
        .collect();
    Ok(CentralityVector::exact(CentralityKind::Closeness, g, values))
}

type Matrix<T> = Vec<Vec<T>>;

/// Shortest-path distances and geodesic counts between all pairs.
pub(crate) fn geodesics(g: &Graph) -> Result<(Matrix<usize>, Matrix<u64>)> {
    let n = g.n();
    let dist = g.distance_matrix()?;
    let mut sigma = vec![vec![0u64; n]; n];
    for s in 0..n {
        let mut by_distance: Vec<usize> = (0..n).collect();
        by_distance.sort_by_key(|&v| dist[s][v]);
        sigma[s][s] = 1;
        for &v in by_distance.iter().skip(1) {
            sigma[s][v] = g
                .neighbors(v)
                .filter(|&w| dist[s][w] + 1 == dist[s][v])
                .map(|w| sigma[s][w])
                .sum();
        }
    }
    Ok((dist, sigma))
}

/// Betweenness summed over ordered pairs `(i, j)` with `i != j`, both
/// different from the node; twice the unordered-pair value.
pub fn betweenness_centrality(g: &Graph) -> Result<CentralityVector> {
    let n = g.n();
    let (dist, sigma) = geodesics(g)?;
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        // Integer numerators grouped by denominator sigma(i, j).
        let mut buckets: BTreeMap<u64, u128> = BTreeMap::new();
        for i in (0..n).filter(|&i| i != k) {
            for j in (0..n).filter(|&j| j != k && j != i) {
                if dist[i][k] + dist[k][j] == dist[i][j] {
                    *buckets.entry(sigma[i][j]).or_default() +=
                        sigma[i][k] as u128 * sigma[k][j] as u128;
                }
            }
        }
        let total = buckets
            .into_iter()
            .fold(BigRational::zero(), |acc, (den, num)| {
                acc + BigRational::new(BigInt::from(num), BigInt::from(den))
            });
        values.push(total);
    }
    Ok(CentralityVector::exact(CentralityKind::Betweenness, g, values))
}

/// Tolerance below zero allowed in the sign-fixed Perron vector.
pub const PERRON_TOLERANCE: f64 = 1e-10;

pub(crate) fn perron_vector(g: &Graph, spectrum: &SpectralDecomposition) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut phi = spectrum.eigenvectors[0].clone();
    if phi.iter().sum::<f64>() < 0.0 {
        phi.iter_mut().for_each(|x| *x = -*x);
    }
    if let Some(bad) = phi.iter().find(|&&x| x < -PERRON_TOLERANCE) {
        return Err(Error::Eigen(format!(
            "principal eigenvector has entry {bad:e} after sign fix"
        )));
    }
    Ok(phi)
}

/// Unit principal eigenvector with positive entries.
pub fn eigenvector_centrality(g: &Graph) -> Result<CentralityVector> {
    let spectrum = spectral_decomposition(g)?;
    Ok(CentralityVector::float(
        CentralityKind::Eigenvector,
        g,
        perron_vector(g, &spectrum)?,
    ))
}

pub(crate) fn subgraph_from_spectrum(spectrum: &SpectralDecomposition) -> Vec<f64> {
    let n = spectrum.eigenvalues.len();
    (0..n)
        .map(|i| {
            spectrum
                .eigenvalues
                .iter()
                .zip(&spectrum.eigenvectors)
                .map(|(lambda, phi)| phi[i] * phi[i] * lambda.exp())
                .sum()
        })
        .collect()
}

/// `(e^A)_ii` from the eigendecomposition: `sum_j phi_j(i)^2 e^{lambda_j}`.
pub fn subgraph_centrality(g: &Graph) -> Result<CentralityVector> {
    let spectrum = spectral_decomposition(g)?;
    Ok(CentralityVector::float(
        CentralityKind::Subgraph,
        g,
        subgraph_from_spectrum(&spectrum),
    ))
}

/// All five measures of one connected graph, sharing one eigendecomposition.
#[derive(Clone, Debug)]
pub struct Centralities {
    pub graph_id: String,
    pub degree: Vec<BigRational>,
    /// `None` for a single node, where closeness is undefined.
    pub closeness: Option<Vec<BigRational>>,
    pub betweenness: Vec<BigRational>,
    pub eigenvector: Vec<f64>,
    pub subgraph: Vec<f64>,
    pub spectrum: SpectralDecomposition,
}

impl Centralities {
    pub fn compute(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let spectrum = spectral_decomposition(g)?;
        let unwrap_exact = |v: CentralityVector| match v.values {
            CentralityValues::Exact(x) => x,
            CentralityValues::Float(_) => unreachable!("exact measure"),
        };
        let closeness = if g.n() >= 2 {
            Some(unwrap_exact(closeness_centrality(g)?))
        } else {
            None
        };
        Ok(Centralities {
            graph_id: canonical_form(g).graph6,
            degree: unwrap_exact(degree_centrality(g)),
            closeness,
            betweenness: unwrap_exact(betweenness_centrality(g)?),
            eigenvector: perron_vector(g, &spectrum)?,
            subgraph: subgraph_from_spectrum(&spectrum),
            spectrum,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exact(v: CentralityVector) -> Vec<BigRational> {
        match v.values {
            CentralityValues::Exact(x) => x,
            CentralityValues::Float(_) => panic!("expected exact values"),
        }
    }

    fn float(v: CentralityVector) -> Vec<f64> {
        match v.values {
            CentralityValues::Float(x) => x,
            CentralityValues::Exact(_) => panic!("expected float values"),
        }
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn degree_examples() {
        let ints = |g: &Graph| {
            exact(degree_centrality(g))
                .into_iter()
                .map(|x| x.to_integer().to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(ints(&named::cycle(5)), vec![2; 5]);
        assert_eq!(ints(&named::star(3)), vec![3, 1, 1, 1]);
        assert_eq!(ints(&named::path(3)), vec![1, 2, 1]);
    }

    #[test]
    fn closeness_examples() {
        assert_eq!(exact(closeness_centrality(&named::complete(4)).unwrap()), vec![rat(1, 1); 4]);
        assert_eq!(
            exact(closeness_centrality(&named::path(3)).unwrap()),
            vec![rat(2, 3), rat(1, 1), rat(2, 3)]
        );
        assert_eq!(exact(closeness_centrality(&named::cycle(5)).unwrap()), vec![rat(2, 3); 5]);
        assert!(matches!(
            closeness_centrality(&named::complete(1)),
            Err(Error::TooSmall(_))
        ));
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(closeness_centrality(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn betweenness_examples() {
        assert_eq!(exact(betweenness_centrality(&named::complete(5)).unwrap()), vec![rat(0, 1); 5]);
        assert_eq!(
            exact(betweenness_centrality(&named::path(3)).unwrap()),
            vec![rat(0, 1), rat(2, 1), rat(0, 1)]
        );
        assert_eq!(exact(betweenness_centrality(&named::cycle(5)).unwrap()), vec![rat(2, 1); 5]);
        // C4: each node sits on one of the two geodesics of the opposite pair.
        assert_eq!(exact(betweenness_centrality(&named::cycle(4)).unwrap()), vec![rat(1, 1); 4]);
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(betweenness_centrality(&split).is_err());
    }

    #[test]
    fn eigenvector_examples() {
        let third = 1.0 / 3f64.sqrt();
        assert_close(&float(eigenvector_centrality(&named::complete(3)).unwrap()), &[third; 3], 1e-12);
        let h = 2f64.sqrt() / 2.0;
        assert_close(&float(eigenvector_centrality(&named::path(3)).unwrap()), &[0.5, h, 0.5], 1e-12);
        let leaf = 1.0 / 6f64.sqrt();
        assert_close(
            &float(eigenvector_centrality(&named::star(3)).unwrap()),
            &[h, leaf, leaf, leaf],
            1e-12,
        );
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(eigenvector_centrality(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn subgraph_examples() {
        assert_close(&float(subgraph_centrality(&named::complete(2)).unwrap()), &[1f64.cosh(); 2], 1e-12);
        let e2 = 2f64.exp();
        let c4 = (e2 + 1.0 / e2 + 2.0) / 4.0;
        assert_close(&float(subgraph_centrality(&named::cycle(4)).unwrap()), &[c4; 4], 1e-12);
        let ch = 2f64.sqrt().cosh();
        assert_close(
            &float(subgraph_centrality(&named::path(3)).unwrap()),
            &[ch / 2.0 + 0.5, ch, ch / 2.0 + 0.5],
            1e-12,
        );
    }

    #[test]
    fn kind_parsing_and_order() {
        assert_eq!("closeness".parse::<CentralityKind>().unwrap(), CentralityKind::Closeness);
        assert!("katz".parse::<CentralityKind>().is_err());
        let names: Vec<_> = CentralityKind::ALL.iter().map(|k| k.name()).collect();
        assert_eq!(names, ["subgraph", "degree", "eigenvector", "closeness", "betweenness"]);
    }

    #[test]
    fn bundle_matches_individual_measures() {
        let g = named::star(4);
        let all = Centralities::compute(&g).unwrap();
        assert_eq!(all.betweenness, exact(betweenness_centrality(&g).unwrap()));
        assert_eq!(all.subgraph, float(subgraph_centrality(&g).unwrap()));
        assert_eq!(all.graph_id, canonical_form(&g).graph6);
        let k1 = Centralities::compute(&named::complete(1)).unwrap();
        assert!(k1.closeness.is_none());
        assert_eq!(k1.eigenvector, vec![1.0]);
    }
}

//! Zero-variance tests: does a measure assign every node the same value?
//!
//! A standard deviation of zero is tested as "all values equal". Degree,
//! closeness and betweenness compare exact integers or rationals. The spectral
//! measures have a float mode (spread against a tolerance) and an exact mode
//! (an equivalent integer criterion).

use crate::centrality::{
    distance_sums, subgraph_centrality_series, Centralities, CentralityKind,
};
use crate::enumerate::GraphStream;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{is_regular, structure_profile, StructureProfile};
use num::rational::Ratio;
use num::BigRational;
use serde::Serialize;

/// Relative spread below which float-valued measures count as constant.
pub const FLOAT_TOLERANCE: f64 = 1e-9;
/// Subgraph-centrality spreads in this absolute band are re-checked against
/// the certified series.
pub const SUSPECT_BAND: (f64, f64) = (1e-12, 1e-6);
/// Series length used for suspect re-checks.
pub const RECHECK_LENGTH: usize = 30;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectralMode {
    #[default]
    Float,
    Exact,
}

impl std::str::FromStr for SpectralMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "float" => Ok(SpectralMode::Float),
            "exact" => Ok(SpectralMode::Exact),
            other => Err(format!("unknown mode '{other}' (expected float or exact)")),
        }
    }
}

/// `true` means the measure does not distinguish any two nodes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZeroFlags {
    pub subgraph: bool,
    pub degree: bool,
    pub eigenvector: bool,
    pub closeness: bool,
    pub betweenness: bool,
}

impl ZeroFlags {
    pub fn get(&self, kind: CentralityKind) -> bool {
        match kind {
            CentralityKind::Subgraph => self.subgraph,
            CentralityKind::Degree => self.degree,
            CentralityKind::Eigenvector => self.eigenvector,
            CentralityKind::Closeness => self.closeness,
            CentralityKind::Betweenness => self.betweenness,
        }
    }

    fn set(&mut self, kind: CentralityKind, value: bool) {
        match kind {
            CentralityKind::Subgraph => self.subgraph = value,
            CentralityKind::Degree => self.degree = value,
            CentralityKind::Eigenvector => self.eigenvector = value,
            CentralityKind::Closeness => self.closeness = value,
            CentralityKind::Betweenness => self.betweenness = value,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscriminanceRecord {
    pub graph_id: String,
    pub n: usize,
    /// Float mode for the spectral measures.
    pub zero_flags: ZeroFlags,
    /// Subgraph flag from constant closed-walk counts.
    pub subgraph_exact: bool,
    pub profile: StructureProfile,
    /// max EE - min EE.
    pub ee_spread: f64,
    /// The spread fell in [`SUSPECT_BAND`] and was re-checked.
    pub suspect: bool,
}

impl DiscriminanceRecord {
    pub fn flag(&self, kind: CentralityKind, mode: SpectralMode) -> bool {
        match (kind, mode) {
            (CentralityKind::Subgraph, SpectralMode::Exact) => self.subgraph_exact,
            _ => self.zero_flags.get(kind),
        }
    }
}

fn all_equal<T: PartialEq>(values: &[T]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

fn spread(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

fn float_constant(values: &[f64]) -> bool {
    let scale = values.iter().copied().fold(1.0f64, |m, x| m.max(x.abs()));
    spread(values) <= FLOAT_TOLERANCE * scale
}

/// Closed-walk counts `(A^l)_ii` for `l < n` taken one node at a time by
/// repeated matrix-vector products from the unit vector `e_i`.
fn closed_walk_profile(g: &Graph, i: usize) -> Result<Vec<u128>> {
    let n = g.n();
    let mut x = vec![0u128; n];
    x[i] = 1;
    let mut out = Vec::with_capacity(n);
    for l in 1..n {
        let mut y = vec![0u128; n];
        for (v, slot) in y.iter_mut().enumerate() {
            for w in g.neighbors(v) {
                *slot = slot.checked_add(x[w]).ok_or(Error::WalkOverflow(l))?;
            }
        }
        out.push(y[i]);
        x = y;
    }
    Ok(out)
}

/// Exact subgraph test: `EE(i) = EE(j)` for all pairs iff every node has the
/// same closed-walk counts, by linear independence of `e^mu` over distinct
/// algebraic `mu`.
pub fn subgraph_zero_exact(g: &Graph) -> Result<bool> {
    let first = closed_walk_profile(g, 0)?;
    for i in 1..g.n() {
        if closed_walk_profile(g, i)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Float subgraph test with the certified re-check for borderline spreads.
/// Returns `(zero, spread, suspect)`.
fn subgraph_zero_float(g: &Graph, ee: &[f64]) -> Result<(bool, f64, bool)> {
    let s = spread(ee);
    let verdict = float_constant(ee);
    if !(SUSPECT_BAND.0..=SUSPECT_BAND.1).contains(&s) {
        return Ok((verdict, s, false));
    }
    let series = subgraph_centrality_series(g, RECHECK_LENGTH)?;
    let tail = BigRational::from_float(series.tail_bound).expect("finite bound");
    let lo = series.partial_sums.iter().max().expect("nonempty");
    let hi = series.partial_sums.iter().min().expect("nonempty") + tail;
    // Disjoint certified intervals prove two different values.
    if *lo > hi {
        return Ok((false, s, true));
    }
    Ok((verdict, s, true))
}

/// Zero-variance test for one measure, float mode for spectral measures.
pub fn stddev_zero(g: &Graph, kind: CentralityKind) -> Result<bool> {
    stddev_zero_mode(g, kind, SpectralMode::Float)
}

pub fn stddev_zero_mode(g: &Graph, kind: CentralityKind, mode: SpectralMode) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match kind {
        CentralityKind::Degree => Ok(all_equal(&g.degrees())),
        CentralityKind::Closeness => Ok(all_equal(&distance_sums(g)?)),
        CentralityKind::Betweenness => {
            let c = Centralities::compute(g)?;
            Ok(all_equal(&c.betweenness))
        }
        CentralityKind::Eigenvector => {
            let c = Centralities::compute(g)?;
            eigenvector_zero(g, &c.eigenvector, mode)
        }
        CentralityKind::Subgraph => match mode {
            SpectralMode::Exact => subgraph_zero_exact(g),
            SpectralMode::Float => {
                let c = Centralities::compute(g)?;
                Ok(subgraph_zero_float(g, &c.subgraph)?.0)
            }
        },
    }
}

/// Both eigenvector modes are always evaluated; a disagreement is an error.
fn eigenvector_zero(g: &Graph, phi: &[f64], mode: SpectralMode) -> Result<bool> {
    let exact = is_regular(g);
    let float = float_constant(phi);
    if exact != float {
        return Err(Error::ModeDisagreement {
            regular: exact,
            spread: spread(phi),
        });
    }
    Ok(match mode {
        SpectralMode::Exact => exact,
        SpectralMode::Float => float,
    })
}

pub fn discriminance_record(g: &Graph) -> Result<DiscriminanceRecord> {
    let c = Centralities::compute(g)?;
    let profile = structure_profile(g)?;
    let (subgraph, ee_spread, suspect) = subgraph_zero_float(g, &c.subgraph)?;
    let mut flags = ZeroFlags::default();
    flags.set(CentralityKind::Subgraph, subgraph);
    flags.set(CentralityKind::Degree, all_equal(&g.degrees()));
    flags.set(
        CentralityKind::Eigenvector,
        eigenvector_zero(g, &c.eigenvector, SpectralMode::Float)?,
    );
    flags.set(CentralityKind::Closeness, all_equal(&distance_sums(g)?));
    flags.set(CentralityKind::Betweenness, all_equal(&c.betweenness));
    Ok(DiscriminanceRecord {
        graph_id: c.graph_id,
        n: g.n(),
        zero_flags: flags,
        subgraph_exact: subgraph_zero_exact(g)?,
        profile,
        ee_spread,
        suspect,
    })
}

/// Share of a corpus whose nodes one measure fails to tell apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantPower {
    pub kind: CentralityKind,
    /// Node count when every graph in the stream has the same size.
    pub n: Option<usize>,
    pub zero_count: usize,
    pub total: usize,
    #[serde(serialize_with = "ratio_text")]
    pub ratio: Ratio<usize>,
}

fn ratio_text<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

pub fn discriminant_power(stream: &GraphStream, kind: CentralityKind) -> Result<DiscriminantPower> {
    if stream.is_empty() {
        return Err(Error::EmptyStream);
    }
    let mut zero_count = 0;
    for g in stream {
        if stddev_zero(g, kind)? {
            zero_count += 1;
        }
    }
    let first = stream.graphs()[0].n();
    let n = stream.iter().all(|g| g.n() == first).then_some(first);
    Ok(DiscriminantPower {
        kind,
        n,
        zero_count,
        total: stream.len(),
        ratio: Ratio::new(zero_count, stream.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_connected, Provenance};
    use crate::named;

    #[test]
    fn examples() {
        assert!(stddev_zero(&named::cycle(5), CentralityKind::Subgraph).unwrap());
        assert!(!stddev_zero(&named::path(3), CentralityKind::Degree).unwrap());
        assert!(stddev_zero(&named::prism(), CentralityKind::Betweenness).unwrap());
        assert!(!stddev_zero(&named::star(3), CentralityKind::Closeness).unwrap());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            stddev_zero(&split, CentralityKind::Degree),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn records_for_k5_and_p3() {
        let k5 = discriminance_record(&named::complete(5)).unwrap();
        assert!(CentralityKind::ALL.iter().all(|&k| k5.zero_flags.get(k)));
        assert!(k5.subgraph_exact);
        let p3 = discriminance_record(&named::path(3)).unwrap();
        assert!(CentralityKind::ALL.iter().all(|&k| !p3.zero_flags.get(k)));
        assert!(!p3.subgraph_exact && !p3.suspect);
    }

    #[test]
    fn modes_agree_on_small_graphs() {
        for g in enumerate_connected(6).unwrap().iter() {
            for kind in [CentralityKind::Subgraph, CentralityKind::Eigenvector] {
                assert_eq!(
                    stddev_zero_mode(g, kind, SpectralMode::Float).unwrap(),
                    stddev_zero_mode(g, kind, SpectralMode::Exact).unwrap(),
                    "{kind} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn eigenvector_disagreement_is_an_error() {
        let phi = [0.5, 0.5, 0.7];
        assert!(matches!(
            eigenvector_zero(&named::cycle(3), &phi, SpectralMode::Float),
            Err(Error::ModeDisagreement { regular: true, .. })
        ));
    }

    #[test]
    fn power_on_five_nodes() {
        let s = enumerate_connected(5).unwrap();
        let p = discriminant_power(&s, CentralityKind::Subgraph).unwrap();
        assert_eq!((p.zero_count, p.total), (2, 21));
        assert_eq!(p.ratio, Ratio::new(2, 21));
        assert_eq!(p.n, Some(5));

        let single = GraphStream::new(Provenance::Generated { n: 5 }, vec![named::complete(5)]);
        for kind in CentralityKind::ALL {
            assert_eq!(discriminant_power(&single, kind).unwrap().ratio, Ratio::new(1, 1));
        }
        let empty = GraphStream::new(Provenance::Generated { n: 5 }, vec![]);
        assert!(matches!(
            discriminant_power(&empty, CentralityKind::Degree),
            Err(Error::EmptyStream)
        ));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("exact".parse::<SpectralMode>().unwrap(), SpectralMode::Exact);
        assert!("fuzzy".parse::<SpectralMode>().is_err());
    }
}

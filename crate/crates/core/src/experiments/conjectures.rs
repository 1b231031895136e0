use super::{sig12, sweep, sweep_stream, Failure, Sweep, SweepOptions};
use crate::centrality::CentralityKind;
use crate::discriminance::DiscriminanceRecord;
use crate::enumerate::GraphStream;
use crate::error::Result;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds-on-corpus")]
    HoldsOnCorpus,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsOnCorpus => "holds-on-corpus",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Subgraph centrality constant but another measure is not.
    Implication,
    /// Subgraph centrality constant on a graph that is not walk-regular.
    NotWalkRegular,
    /// Walk-regular graph with nonconstant computed subgraph centrality; this
    /// direction holds by definition, so it signals a numerical fault.
    Numerical,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub conjecture: u8,
    pub source: String,
    /// Graphs tested after any exclusion.
    pub checked: usize,
    /// Graphs removed before testing (walk-regular, not distance-regular).
    pub excluded: usize,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Failure>,
    pub verdict: Verdict,
}

impl ConjectureReport {
    fn finish(conjecture: u8, s: &Sweep, checked: usize, excluded: usize, violations: Vec<Violation>) -> Self {
        let verdict = if !violations.is_empty() {
            Verdict::Violated
        } else if !s.failures.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::HoldsOnCorpus
        };
        ConjectureReport {
            conjecture,
            source: s.source.clone(),
            checked,
            excluded,
            violations,
            skipped: s.failures.clone(),
            verdict,
        }
    }

    /// Violations that point at a numerical fault rather than a counterexample.
    pub fn numerical_faults(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.kind == ViolationKind::Numerical)
    }
}

const OTHER_MEASURES: [CentralityKind; 4] = [
    CentralityKind::Degree,
    CentralityKind::Closeness,
    CentralityKind::Betweenness,
    CentralityKind::Eigenvector,
];

fn implication_violation(r: &DiscriminanceRecord) -> Option<Violation> {
    if !r.zero_flags.subgraph {
        return None;
    }
    let failing: Vec<&str> = OTHER_MEASURES
        .iter()
        .filter(|&&k| !r.zero_flags.get(k))
        .map(|k| k.name())
        .collect();
    (!failing.is_empty()).then(|| Violation {
        graph6: r.graph_id.clone(),
        kind: ViolationKind::Implication,
        detail: format!(
            "subgraph centrality constant but {} not (walk_regular={}, distance_regular={}, vertex_transitive={})",
            failing.join(", "),
            r.profile.walk_regular,
            r.profile.distance_regular,
            r.profile.vertex_transitive
        ),
    })
}

/// Constant subgraph centrality implies constant degree, closeness,
/// betweenness and eigenvector centrality.
pub fn conjecture1_from(s: &Sweep) -> ConjectureReport {
    let violations = s.records.iter().filter_map(implication_violation).collect();
    ConjectureReport::finish(1, s, s.records.len(), 0, violations)
}

/// The same implication over graphs that are not walk-regular-but-not-
/// distance-regular.
pub fn conjecture2_from(s: &Sweep) -> ConjectureReport {
    let in_excluded_class =
        |r: &&DiscriminanceRecord| r.profile.walk_regular && !r.profile.distance_regular;
    let excluded = s.records.iter().filter(in_excluded_class).count();
    let violations = s
        .records
        .iter()
        .filter(|r| !in_excluded_class(r))
        .filter_map(implication_violation)
        .collect();
    ConjectureReport::finish(2, s, s.records.len() - excluded, excluded, violations)
}

/// Constant (float-tested) subgraph centrality iff walk-regular.
pub fn conjecture3_from(s: &Sweep) -> ConjectureReport {
    let mut violations = Vec::new();
    for r in &s.records {
        match (r.zero_flags.subgraph, r.profile.walk_regular) {
            (true, false) => violations.push(Violation {
                graph6: r.graph_id.clone(),
                kind: ViolationKind::NotWalkRegular,
                detail: format!(
                    "subgraph centrality constant (spread {}) on a graph that is not walk-regular",
                    sig12(r.ee_spread)
                ),
            }),
            (false, true) => violations.push(Violation {
                graph6: r.graph_id.clone(),
                kind: ViolationKind::Numerical,
                detail: format!(
                    "walk-regular graph with subgraph spread {}: numerical fault",
                    sig12(r.ee_spread)
                ),
            }),
            _ => {}
        }
    }
    ConjectureReport::finish(3, s, s.records.len(), 0, violations)
}

fn source_sweep(input: ConjectureInput<'_>, options: &SweepOptions) -> Result<Sweep> {
    match input {
        ConjectureInput::Nodes(n) => sweep(n, options),
        ConjectureInput::Stream(stream) => sweep_stream(stream, options),
    }
}

/// Either every connected graph on `n` nodes or a supplied stream.
#[derive(Clone, Copy, Debug)]
pub enum ConjectureInput<'a> {
    Nodes(usize),
    Stream(&'a GraphStream),
}

pub fn check_conjecture1(input: ConjectureInput<'_>, options: &SweepOptions) -> Result<ConjectureReport> {
    Ok(conjecture1_from(&source_sweep(input, options)?))
}

pub fn check_conjecture2(input: ConjectureInput<'_>, options: &SweepOptions) -> Result<ConjectureReport> {
    Ok(conjecture2_from(&source_sweep(input, options)?))
}

pub fn check_conjecture3(input: ConjectureInput<'_>, options: &SweepOptions) -> Result<ConjectureReport> {
    Ok(conjecture3_from(&source_sweep(input, options)?))
}

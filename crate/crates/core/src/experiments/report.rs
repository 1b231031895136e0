//! Deterministic CSV, JSON and text renderings of experiment reports.

use super::{sig12, ConjectureReport, Sweep, Table1Report};
use crate::discriminance::DiscriminanceRecord;
use crate::error::Result;
use crate::named;
use std::fs;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format '{other}' (expected csv, json or text)")),
        }
    }
}

pub trait Report {
    fn csv(&self) -> Result<String>;
    fn json(&self) -> Result<String>;
    fn text(&self) -> String;

    fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
            Format::Text => Ok(self.text()),
        }
    }
}

pub fn export_report(report: &impl Report, format: Format, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, report.render(format)?)?;
    Ok(())
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl Report for Table1Report {
    fn csv(&self) -> Result<String> {
        let mut rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.measure.to_string(),
                    r.computed.to_string(),
                    opt(r.published),
                    opt(r.matches),
                ]
            })
            .collect();
        for (n, total) in &self.totals {
            rows.push(vec![n.to_string(), "graphs".into(), total.to_string(), String::new(), String::new()]);
        }
        rows.push(vec![
            "all".into(),
            "graphs".into(),
            self.overall_total.to_string(),
            opt(self.published_total),
            opt(self.total_matches()),
        ]);
        csv_string(&["n", "measure", "computed", "paper", "match"], rows)
    }

    fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("zero-variance graph counts (spectral mode: {:?})\n", self.mode).to_lowercase());
        out.push_str(&format!(
            "{:>3}  {:>7}  {:>11}  {:>11}  {:>11}  {:>11}  {:>11}\n",
            "n", "graphs", "subgraph", "degree", "eigenvector", "closeness", "betweenness"
        ));
        for (n, total) in &self.totals {
            out.push_str(&format!("{n:>3}  {total:>7}"));
            for r in self.rows.iter().filter(|r| r.n == *n) {
                let cell = match (r.published, r.matches) {
                    (Some(p), Some(true)) => format!("{} = {p}", r.computed),
                    (Some(p), _) => format!("{} != {p}", r.computed),
                    _ => r.computed.to_string(),
                };
                out.push_str(&format!("  {cell:>11}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("total graphs: {}", self.overall_total));
        if let Some(p) = self.published_total {
            out.push_str(&format!(" (published {p})"));
        }
        out.push('\n');
        for f in &self.failures {
            out.push_str(&format!("failed: {} ({})\n", f.graph6, f.error));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

const CONJECTURE_HEADER: [&str; 8] = [
    "conjecture", "source", "checked", "excluded", "verdict", "kind", "graph6", "detail",
];

fn conjecture_rows(r: &ConjectureReport) -> Vec<Vec<String>> {
    let head = vec![
        r.conjecture.to_string(),
        r.source.clone(),
        r.checked.to_string(),
        r.excluded.to_string(),
        r.verdict.as_str().to_string(),
    ];
    if r.violations.is_empty() {
        let mut row = head;
        row.extend([String::new(), String::new(), String::new()]);
        return vec![row];
    }
    r.violations
        .iter()
        .map(|v| {
            let mut row = head.clone();
            row.push(serde_json::to_value(v.kind).ok().and_then(|k| k.as_str().map(String::from)).unwrap_or_default());
            row.push(v.graph6.clone());
            row.push(v.detail.clone());
            row
        })
        .collect()
}

fn conjecture_text(r: &ConjectureReport) -> String {
    let mut out = format!(
        "conjecture {} [{}]: {} (checked {}, excluded {}, violations {})\n",
        r.conjecture,
        r.source,
        r.verdict.as_str(),
        r.checked,
        r.excluded,
        r.violations.len()
    );
    for v in &r.violations {
        out.push_str(&format!("  {} {:?}: {}\n", v.graph6, v.kind, v.detail));
    }
    for f in &r.skipped {
        out.push_str(&format!("  skipped {}: {}\n", f.graph6, f.error));
    }
    out
}

impl Report for ConjectureReport {
    fn csv(&self) -> Result<String> {
        csv_string(&CONJECTURE_HEADER, conjecture_rows(self))
    }

    fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    fn text(&self) -> String {
        conjecture_text(self)
    }
}

impl Report for Vec<ConjectureReport> {
    fn csv(&self) -> Result<String> {
        csv_string(&CONJECTURE_HEADER, self.iter().flat_map(conjecture_rows).collect())
    }

    fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    fn text(&self) -> String {
        self.iter().map(conjecture_text).collect()
    }
}

/// Per-graph classification of a sweep.
pub struct RecordsReport<'a>(pub &'a Sweep);

const RECORD_HEADER: [&str; 16] = [
    "graph6",
    "n",
    "name",
    "subgraph",
    "degree",
    "eigenvector",
    "closeness",
    "betweenness",
    "subgraph_exact",
    "regular",
    "walk_regular",
    "vertex_transitive",
    "distance_regular",
    "bipartite",
    "orbits",
    "ee_spread",
];

fn orbit_text(r: &DiscriminanceRecord) -> String {
    r.profile
        .orbits
        .iter()
        .map(|o| o.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("|")
}

fn record_row(r: &DiscriminanceRecord) -> Vec<String> {
    let f = &r.zero_flags;
    let p = &r.profile;
    vec![
        r.graph_id.clone(),
        r.n.to_string(),
        named::identify(&r.graph_id, r.n).unwrap_or_default(),
        f.subgraph.to_string(),
        f.degree.to_string(),
        f.eigenvector.to_string(),
        f.closeness.to_string(),
        f.betweenness.to_string(),
        r.subgraph_exact.to_string(),
        p.regular.to_string(),
        p.walk_regular.to_string(),
        p.vertex_transitive.to_string(),
        p.distance_regular.to_string(),
        p.bipartite.to_string(),
        orbit_text(r),
        sig12(r.ee_spread),
    ]
}

impl Report for RecordsReport<'_> {
    fn csv(&self) -> Result<String> {
        csv_string(&RECORD_HEADER, self.0.records.iter().map(record_row).collect())
    }

    fn json(&self) -> Result<String> {
        let rows: Vec<serde_json::Value> = self
            .0
            .records
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("record serializes");
                v["ee_spread"] = serde_json::Value::String(sig12(r.ee_spread));
                v["name"] = named::identify(&r.graph_id, r.n).map_or(serde_json::Value::Null, Into::into);
                v
            })
            .collect();
        let doc = serde_json::json!({
            "source": self.0.source,
            "records": rows,
            "failures": self.0.failures,
        });
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.0.records {
            let row = record_row(r);
            out.push_str(
                &RECORD_HEADER
                    .iter()
                    .zip(&row)
                    .filter(|(_, v)| !v.is_empty())
                    .map(|(h, v)| format!("{h}={v}"))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push('\n');
        }
        for f in &self.0.failures {
            out.push_str(&format!("failed {}: {}\n", f.graph6, f.error));
        }
        out
    }
}

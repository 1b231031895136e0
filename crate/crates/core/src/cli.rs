//! Command-line front end: `enum`, `analyze`, `table1`, `conjectures`, `classify`.
//!
//! Exit codes: 0 success, 1 violated conjecture or (with `--strict`) a
//! mismatch against the published table, 2 usage or I/O error.

use crate::canon::canonical_form;
use crate::centrality::{Centralities, CentralityKind};
use crate::discriminance::{discriminance_record, SpectralMode};
use crate::enumerate::{enumerate_connected, read_graph6_file, write_graph6_file};
use crate::error::{Error, Result};
use crate::experiments::{
    conjecture1_from, conjecture2_from, conjecture3_from, export_report, sig12, sweep, sweep_stream,
    table1_from_sweeps, ConjectureReport, Format, RecordsReport, Report, SweepOptions, Verdict,
};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::named;
use crate::structure::structure_profile;
use clap::{Args, Parser, Subcommand};
use num::BigRational;
use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "centrascope", version, about = "Zero-variance analysis of node centralities on small connected graphs")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all connected graphs on n nodes as canonical graph6 lines.
    Enum {
        #[arg(short = 'n', long = "nodes", value_parser = clap::value_parser!(u8).range(1..=10))]
        n: u8,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Worker threads; output does not depend on this.
        #[arg(long, env = "CENTRASCOPE_WORKERS")]
        workers: Option<usize>,
    },
    /// Centralities, structure profile and zero-variance flags of single graphs.
    Analyze {
        /// A single graph in graph6 format.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        graph6: Option<String>,
        /// A file with one graph6 string per line.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Restrict the centrality listing to these measures.
        #[arg(long = "measure")]
        measures: Vec<CentralityKind>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count zero-variance graphs per node count and compare with the published table.
    Table1 {
        /// Node counts, as `lo..hi` (inclusive) or a single number.
        #[arg(long, default_value = "5..8", value_parser = parse_range)]
        range: RangeInclusive<usize>,
        /// Exit with status 1 when any count differs from the published table.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the subgraph-centrality conjectures on every graph of each size.
    Conjectures {
        /// Comma-separated conjecture numbers, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_which)]
        which: Which,
        /// Node counts, as `lo..hi` (inclusive) or a single number.
        #[arg(long, default_value = "5..8", value_parser = parse_range)]
        range: RangeInclusive<usize>,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classify every graph of a graph6 file, optionally checking one conjecture.
    Classify {
        /// A file with one graph6 string per line.
        #[arg(short, long)]
        input: PathBuf,
        /// Also check conjecture 1, 2 or 3 on the file.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        conjecture: Option<u8>,
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Worker threads for sweeps; output does not depend on this.
    #[arg(long, env = "CENTRASCOPE_WORKERS")]
    pub workers: Option<usize>,
    /// Zero test for the spectral measures.
    #[arg(long, default_value = "float")]
    pub mode: SpectralMode,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            workers: self.workers,
            mode: self.mode,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Defaults to text on standard output and csv when writing a file.
    #[arg(long)]
    pub format: Option<Format>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        self.format
            .unwrap_or(if self.output.is_some() { Format::Csv } else { Format::Text })
    }

    fn emit(&self, report: &impl Report) -> Result<()> {
        match &self.output {
            Some(path) => export_report(report, self.format(), path),
            None => {
                let text = report.render(self.format())?;
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 || hi > 10 || lo > hi {
        return Err(format!("range {lo}..{hi} must lie within 1..10"));
    }
    Ok(lo..=hi)
}

/// Selected conjecture numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Which(pub Vec<u8>);

fn parse_which(s: &str) -> std::result::Result<Which, String> {
    if s == "all" {
        return Ok(Which(vec![1, 2, 3]));
    }
    s.split(',')
        .map(|t| match t.trim() {
            "1" => Ok(1),
            "2" => Ok(2),
            "3" => Ok(3),
            other => Err(format!("unknown conjecture '{other}' (expected 1, 2, 3 or all)")),
        })
        .collect::<std::result::Result<_, _>>()
        .map(Which)
}

/// Parses `argv` (program name first) and runs the selected subcommand.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(config.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn progress(msg: &str) {
    eprintln!("{msg}");
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Enum { n, output, workers } => {
            let job = || enumerate_connected(n as usize);
            let stream = match workers {
                Some(k) => rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .map_err(|e| Error::Io(std::io::Error::other(e)))?
                    .install(job)?,
                None => job()?,
            };
            match output {
                Some(path) => {
                    let count = write_graph6_file(&stream, &path)?;
                    progress(&format!("wrote {count} graphs to {}", path.display()));
                }
                None => {
                    let mut out = std::io::stdout().lock();
                    for g in &stream {
                        writeln!(out, "{}", canonical_form(g).graph6)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Analyze { graph6, input, measures, out } => {
            let graphs = match (graph6, input) {
                (Some(text), _) => vec![parse_graph6(&text)?],
                (None, Some(path)) => read_graph6_file(path)?.into_iter().collect(),
                (None, None) => unreachable!("clap requires one input"),
            };
            let measures = if measures.is_empty() {
                CentralityKind::ALL.to_vec()
            } else {
                measures
            };
            let analyses = graphs
                .iter()
                .map(|g| Analysis::compute(g, &measures))
                .collect::<Result<Vec<_>>>()?;
            out.emit(&analyses)?;
            Ok(0)
        }
        Command::Table1 { range, strict, sweep: args, out } => {
            let options = args.options();
            let mut sweeps = Vec::new();
            for n in range {
                progress(&format!("sweeping connected graphs on {n} nodes"));
                let s = sweep(n, &options)?;
                progress(&format!("  {} graphs analyzed", s.records.len()));
                sweeps.push(s);
            }
            let report = table1_from_sweeps(&sweeps, options.mode);
            out.emit(&report)?;
            let mismatched = !report.mismatches().is_empty() || report.total_matches() == Some(false);
            if mismatched {
                progress(&format!("{} count(s) differ from the published table", report.mismatches().len()));
            }
            Ok(if strict && mismatched { 1 } else { 0 })
        }
        Command::Conjectures { which, range, sweep: args, out } => {
            let options = args.options();
            let mut reports = Vec::new();
            for n in range {
                progress(&format!("sweeping connected graphs on {n} nodes"));
                let s = sweep(n, &options)?;
                reports.extend(which.0.iter().map(|&c| conjecture_for(c, &s)));
            }
            out.emit(&reports)?;
            Ok(violation_code(&reports))
        }
        Command::Classify { input, conjecture, sweep: args, out } => {
            let stream = read_graph6_file(&input)?;
            progress(&format!("classifying {} graphs from {}", stream.len(), input.display()));
            let s = sweep_stream(&stream, &args.options())?;
            match conjecture {
                Some(c) => {
                    let report = vec![conjecture_for(c, &s)];
                    out.emit(&report)?;
                    Ok(violation_code(&report))
                }
                None => {
                    out.emit(&RecordsReport(&s))?;
                    Ok(0)
                }
            }
        }
    }
}

fn conjecture_for(which: u8, s: &crate::experiments::Sweep) -> ConjectureReport {
    match which {
        1 => conjecture1_from(s),
        2 => conjecture2_from(s),
        _ => conjecture3_from(s),
    }
}

fn violation_code(reports: &[ConjectureReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Violated) {
        1
    } else {
        0
    }
}

/// Everything `analyze` prints for one graph.
struct Analysis {
    graph: Graph,
    measures: Vec<CentralityKind>,
    centralities: Centralities,
    record: crate::discriminance::DiscriminanceRecord,
}

impl Analysis {
    fn compute(g: &Graph, measures: &[CentralityKind]) -> Result<Self> {
        // Profile first so a disconnected graph reports a clear error.
        structure_profile(g)?;
        Ok(Analysis {
            graph: *g,
            measures: measures.to_vec(),
            centralities: Centralities::compute(g)?,
            record: discriminance_record(g)?,
        })
    }

    fn values(&self, kind: CentralityKind) -> Vec<String> {
        let exact = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect();
        let float = |v: &[f64]| v.iter().map(|&x| sig12(x)).collect();
        let c = &self.centralities;
        match kind {
            CentralityKind::Degree => exact(&c.degree),
            CentralityKind::Closeness => c.closeness.as_deref().map_or_else(Vec::new, exact),
            CentralityKind::Betweenness => exact(&c.betweenness),
            CentralityKind::Eigenvector => float(&c.eigenvector),
            CentralityKind::Subgraph => float(&c.subgraph),
        }
    }

    fn json(&self) -> serde_json::Value {
        let mut centralities = serde_json::Map::new();
        for &k in &self.measures {
            centralities.insert(k.name().into(), self.values(k).into());
        }
        serde_json::json!({
            "graph6": crate::graph6::to_graph6(&self.graph),
            "canonical": self.record.graph_id,
            "name": named::identify(&self.record.graph_id, self.graph.n()),
            "n": self.graph.n(),
            "centralities": centralities,
            "eigenvalues": self.centralities.spectrum.eigenvalues.iter().map(|&x| sig12(x)).collect::<Vec<_>>(),
            "profile": self.record.profile,
            "zero_flags": self.record.zero_flags,
            "subgraph_exact": self.record.subgraph_exact,
            "ee_spread": sig12(self.record.ee_spread),
        })
    }

    fn text(&self) -> String {
        let mut out = format!(
            "graph {} (canonical {}{}), n={}, edges={}\n",
            crate::graph6::to_graph6(&self.graph),
            self.record.graph_id,
            named::identify(&self.record.graph_id, self.graph.n())
                .map(|s| format!(", {s}"))
                .unwrap_or_default(),
            self.graph.n(),
            self.graph.edge_count()
        );
        for &k in &self.measures {
            let values = self.values(k);
            let shown = if values.is_empty() {
                "undefined for a single node".to_string()
            } else {
                values.join(" ")
            };
            out.push_str(&format!("  {:<12} {shown}\n", k.name()));
        }
        let p = &self.record.profile;
        out.push_str(&format!(
            "  structure    regular={} walk_regular={} vertex_transitive={} distance_regular={} bipartite={}\n",
            p.regular, p.walk_regular, p.vertex_transitive, p.distance_regular, p.bipartite
        ));
        out.push_str(&format!(
            "  orbits       {}\n",
            p.orbits
                .iter()
                .map(|o| format!("{o:?}"))
                .collect::<Vec<_>>()
                .join(" ")
        ));
        out.push_str("  zero         ");
        out.push_str(
            &CentralityKind::ALL
                .iter()
                .map(|&k| format!("{}={}", k.name(), self.record.zero_flags.get(k)))
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push_str(&format!(" subgraph_exact={}\n", self.record.subgraph_exact));
        out
    }
}

impl Report for Vec<Analysis> {
    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["graph6", "node", "measure", "value"])?;
        for a in self {
            let id = crate::graph6::to_graph6(&a.graph);
            for &k in &a.measures {
                for (v, value) in a.values(k).into_iter().enumerate() {
                    w.write_record([id.clone(), v.to_string(), k.name().to_string(), value])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    fn json(&self) -> Result<String> {
        let doc: Vec<_> = self.iter().map(Analysis::json).collect();
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }

    fn text(&self) -> String {
        self.iter().map(Analysis::text).collect()
    }
}

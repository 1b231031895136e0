//! Exhaustive generation of connected graphs up to isomorphism, and graph6 corpora.

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, HEADER};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

/// Largest node count accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_NODES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Generated { n: usize },
    File(PathBuf),
}

/// An ordered batch of graphs and where they came from.
#[derive(Clone, Debug)]
pub struct GraphStream {
    pub provenance: Provenance,
    graphs: Vec<Graph>,
}

impl GraphStream {
    pub fn new(provenance: Provenance, graphs: Vec<Graph>) -> Self {
        GraphStream { provenance, graphs }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    pub fn source(&self) -> String {
        match &self.provenance {
            Provenance::Generated { n } => format!("generated n={n}"),
            Provenance::File(p) => p.display().to_string(),
        }
    }
}

impl IntoIterator for GraphStream {
    type Item = Graph;
    type IntoIter = std::vec::IntoIter<Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.into_iter()
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

/// One canonical representative of every connected graph on `n` nodes, in
/// ascending canonical graph6 order.
///
/// Each connected graph on `n` nodes has a node whose removal leaves a
/// connected graph, so joining a new node to every nonempty subset of every
/// connected `(n-1)`-node graph reaches all classes.
pub fn enumerate_connected(n: usize) -> Result<GraphStream> {
    if n == 0 || n > MAX_ENUMERATION_NODES {
        return Err(Error::EnumerationRange(n));
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        level = augment(&level, m);
    }
    Ok(GraphStream::new(Provenance::Generated { n }, level))
}

fn augment(base: &[Graph], m: usize) -> Vec<Graph> {
    let subsets = 1u32 << (m - 1);
    let found: Vec<HashMap<String, Graph>> = base
        .par_iter()
        .map(|g| {
            let mut local = HashMap::new();
            for mask in 1..subsets {
                let c = canonical_form(&g.extend(mask).expect("within node cap"));
                local.entry(c.graph6).or_insert(c.graph);
            }
            local
        })
        .collect();
    let mut merged: HashMap<String, Graph> = HashMap::new();
    for local in found {
        merged.extend(local);
    }
    let mut out: Vec<(String, Graph)> = merged.into_iter().collect();
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

/// Reads one graph per nonempty line, skipping `>>graph6<<` header lines.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<GraphStream> {
    let path = path.as_ref();
    let reader = BufReader::new(File::open(path)?);
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end_matches(['\r', '\n']);
        let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
        if body.is_empty() {
            continue;
        }
        let g = parse_graph6(body).map_err(|e| Error::AtLine {
            line: idx + 1,
            source: Box::new(e),
        })?;
        graphs.push(g);
    }
    Ok(GraphStream::new(Provenance::File(path.to_path_buf()), graphs))
}

/// Writes the canonical graph6 text of each graph, one per line.
pub fn write_graph6_file(stream: &GraphStream, path: impl AsRef<Path>) -> Result<usize> {
    let mut out = BufWriter::new(File::create(path)?);
    for g in stream {
        writeln!(out, "{}", canonical_form(g).graph6)?;
    }
    out.flush()?;
    Ok(stream.len())
}

//! Graph file formats.
//!
//! Edge list: an optional `# nodes=N` header, then one `u v` pair per line
//! (0-based, single space). Blank lines and other `#` lines are ignored.
//! Without a header the node count is one past the largest index.
//!
//! JSON graph: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
//! JSON dataset: `{"graphs": [graph, ...], "labels": [[c3, .., c8], ...]}`,
//! where `labels` is optional.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("nodes=") {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("line {}: bad node count '{value}'", lineno + 1)))?;
                declared = Some(n);
            }
            continue;
        }
        let mut parts = line.split(' ');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::parse(format!("line {}: expected 'u v', got '{line}'", lineno + 1)));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(format!("line {}: bad node index '{s}'", lineno + 1)))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("# nodes={}\n", g.node_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.node_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetJson {
    pub graphs: Vec<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<u32>>>,
}

impl DatasetJson {
    pub fn to_graphs(&self) -> Result<Vec<Graph>> {
        self.graphs.iter().map(GraphJson::to_graph).collect()
    }
}

/// Reads one graph or a dataset, choosing the format by content: JSON
/// objects with `graphs` are datasets, other JSON objects single graphs,
/// anything else an edge list.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    parse_graphs(&text)
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("graphs").is_some() {
            let ds: DatasetJson = serde_json::from_value(value)?;
            ds.to_graphs()
        } else {
            let g: GraphJson = serde_json::from_value(value)?;
            Ok(vec![g.to_graph()?])
        }
    } else {
        Ok(vec![parse_edge_list(text)?])
    }
}

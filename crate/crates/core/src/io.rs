//! Graph and coloring file formats.
//!
//! Graphs come in three flavors, detected from the first meaningful line:
//!
//! * edge list: one `u v` pair per line, `#` starts a comment, labels are
//!   arbitrary whitespace-free tokens numbered in order of first appearance,
//!   and a line with a single token declares an isolated vertex;
//! * DIMACS: `c` comments, one `p edge n m` header, `e u v` lines with 1-based ids;
//! * JSON: `{"n": 4, "edges": [[0, 1], ...], "labels": ["a", ...]}` with `labels` optional.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A graph together with the names its vertices carried in the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels `"0"..`.
    pub fn numbered(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
    Json,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn detect_format(text: &str) -> GraphFormat {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with('{') {
            return GraphFormat::Json;
        }
        let first = t.split_whitespace().next().unwrap_or("");
        if first == "p" || first == "c" || first == "e" {
            return GraphFormat::Dimacs;
        }
        return GraphFormat::EdgeList;
    }
    GraphFormat::EdgeList
}

/// Parses with format auto-detection.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    parse_graph_as(text, detect_format(text))
}

pub fn parse_graph_as(text: &str, format: GraphFormat) -> Result<LabeledGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Json => parse_json(text),
    }
}

pub fn read_graph(path: &Path) -> Result<LabeledGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |tok: &str| -> usize {
        *ids.entry(tok.to_string()).or_insert_with(|| {
            labels.push(tok.to_string());
            labels.len() - 1
        })
    };
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [v] => {
                intern(v);
            }
            [u, v] => {
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at {u}")));
                }
                let (a, b) = (intern(u), intern(v));
                edges.push((a, b));
            }
            _ => {
                return Err(parse_err(
                    line_no,
                    format!("expected `u v`, found {} tokens", toks.len()),
                ))
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

pub fn parse_dimacs(text: &str) -> Result<LabeledGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some(t) if t.starts_with('#') => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second `p` line"));
                }
                let [_, kind, n, m] = toks.as_slice() else {
                    return Err(parse_err(line_no, "expected `p edge <n> <m>`"));
                };
                if *kind != "edge" && *kind != "col" {
                    return Err(parse_err(line_no, format!("unsupported problem type {kind:?}")));
                }
                let n = n.parse().map_err(|_| parse_err(line_no, format!("bad vertex count {n:?}")))?;
                let m = m.parse().map_err(|_| parse_err(line_no, format!("bad edge count {m:?}")))?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before `p` line"))?;
                let [_, u, v] = toks.as_slice() else {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                };
                let id = |s: &str| -> Result<usize> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(parse_err(line_no, format!("vertex {s:?} not in 1..={n}"))),
                    }
                };
                let (a, b) = (id(u)?, id(v)?);
                if a == b {
                    return Err(parse_err(line_no, format!("self-loop at {u}")));
                }
                edges.push((a, b));
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let (n, _) = header.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` line"))?;
    let graph = Graph::from_edges(n, edges)?;
    let labels = (1..=n).map(|v| v.to_string()).collect();
    Ok(LabeledGraph { graph, labels })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn parse_json(text: &str) -> Result<LabeledGraph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    for [u, v] in &doc.edges {
        if u == v {
            return Err(parse_err(0, format!("self-loop at {u}")));
        }
        if *u >= doc.n || *v >= doc.n {
            return Err(parse_err(0, format!("edge [{u}, {v}] out of range for n={}", doc.n)));
        }
    }
    let graph = Graph::from_edges(doc.n, doc.edges.iter().map(|[u, v]| (*u, *v)))?;
    let labels = match doc.labels {
        None => (0..doc.n).map(|v| v.to_string()).collect(),
        Some(labels) => {
            if labels.len() != doc.n {
                return Err(parse_err(0, format!("{} labels for n={}", labels.len(), doc.n)));
            }
            let mut seen = HashMap::new();
            for (i, l) in labels.iter().enumerate() {
                if let Some(j) = seen.insert(l.as_str(), i) {
                    return Err(parse_err(0, format!("label {l:?} used by vertices {j} and {i}")));
                }
            }
            labels
        }
    };
    Ok(LabeledGraph { graph, labels })
}

/// Every vertex is declared on its own line first so ids survive a round trip.
pub fn emit_edge_list(lg: &LabeledGraph) -> Result<String> {
    if let Some(bad) = lg
        .labels
        .iter()
        .find(|l| l.is_empty() || l.contains('#') || l.chars().any(char::is_whitespace))
    {
        return Err(Error::Precondition(format!("label {bad:?} cannot be written as an edge list")));
    }
    let g = &lg.graph;
    let mut out = format!("# n={} m={}\n", g.n(), g.m());
    for l in &lg.labels {
        out.push_str(l);
        out.push('\n');
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", lg.label(e.0), lg.label(e.1));
    }
    Ok(out)
}

/// Labels are dropped; vertices become `1..=n`.
pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.0 + 1, e.1 + 1);
    }
    out
}

pub fn emit_json(lg: &LabeledGraph) -> String {
    let doc = JsonGraph {
        n: lg.graph.n(),
        edges: lg.graph.edges().map(|e| [e.0, e.1]).collect(),
        labels: (!lg.has_default_labels()).then(|| lg.labels.clone()),
    };
    serde_json::to_string(&doc).expect("graph serializes") + "\n"
}

/// A coloring read back from disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedColoring {
    Edge(EdgeColoring),
    Total(TotalColoring),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMode {
    Edge,
    Total,
}

#[derive(Serialize, Deserialize)]
struct VertexEntry {
    v: String,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct EdgeEntry {
    u: String,
    v: String,
    color: Color,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    mode: ColoringMode,
    n: usize,
    colors: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    vertices: Vec<VertexEntry>,
    edges: Vec<EdgeEntry>,
}

fn edge_entries(lg: &LabeledGraph, edges: &BTreeMap<Edge, Color>) -> Vec<EdgeEntry> {
    edges
        .iter()
        .map(|(e, &color)| EdgeEntry { u: lg.label(e.0).into(), v: lg.label(e.1).into(), color })
        .collect()
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn emit_edge_coloring(lg: &LabeledGraph, c: &EdgeColoring) -> String {
    to_pretty(&ColoringFile {
        mode: ColoringMode::Edge,
        n: lg.graph.n(),
        colors: c.color_count(),
        vertices: Vec::new(),
        edges: edge_entries(lg, &c.edges),
    })
}

pub fn emit_total_coloring(lg: &LabeledGraph, c: &TotalColoring) -> String {
    to_pretty(&ColoringFile {
        mode: ColoringMode::Total,
        n: lg.graph.n(),
        colors: c.color_count(),
        vertices: c
            .vertices
            .iter()
            .map(|(&v, &color)| VertexEntry { v: lg.label(v).into(), color })
            .collect(),
        edges: edge_entries(lg, &c.edges),
    })
}

/// Reads a coloring file against `lg`. Vertex names resolve through the
/// labels; edges absent from the graph are kept so the verifier can name them.
pub fn parse_coloring(text: &str, lg: &LabeledGraph) -> Result<ParsedColoring> {
    let file: ColoringFile =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    if file.n != lg.graph.n() {
        return Err(Error::Mismatch(format!(
            "coloring is for n={}, graph has n={}",
            file.n,
            lg.graph.n()
        )));
    }
    let index: HashMap<&str, usize> =
        lg.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let id = |l: &str| -> Result<usize> {
        index.get(l).copied().ok_or_else(|| Error::Mismatch(format!("unknown vertex {l:?}")))
    };
    let mut edges = BTreeMap::new();
    for entry in &file.edges {
        let (a, b) = (id(&entry.u)?, id(&entry.v)?);
        if a == b {
            return Err(Error::Mismatch(format!("self-loop at {}", entry.u)));
        }
        let e = Edge::new(a, b);
        if edges.insert(e, entry.color).is_some_and(|old| old != entry.color) {
            return Err(Error::Mismatch(format!(
                "edge {}-{} listed with two colors",
                entry.u, entry.v
            )));
        }
    }
    match file.mode {
        ColoringMode::Edge => {
            if !file.vertices.is_empty() {
                return Err(Error::Mismatch("edge coloring lists vertex colors".into()));
            }
            Ok(ParsedColoring::Edge(EdgeColoring { edges }))
        }
        ColoringMode::Total => {
            let mut vertices = BTreeMap::new();
            for entry in &file.vertices {
                let v = id(&entry.v)?;
                if vertices.insert(v, entry.color).is_some_and(|old| old != entry.color) {
                    return Err(Error::Mismatch(format!(
                        "vertex {} listed with two colors",
                        entry.v
                    )));
                }
            }
            Ok(ParsedColoring::Total(TotalColoring { vertices, edges }))
        }
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering. Edge colors go into `color`, vertex colors into
/// `fillcolor`, both as palette indices of the `set312` scheme.
pub fn emit_dot(lg: &LabeledGraph, vertices: Option<&BTreeMap<usize, Color>>, edges: &BTreeMap<Edge, Color>) -> String {
    let mut out = String::from("graph G {\n");
    out.push_str("  node [colorscheme=set312, style=filled];\n");
    out.push_str("  edge [colorscheme=set312, penwidth=2];\n");
    for v in 0..lg.graph.n() {
        match vertices.and_then(|m| m.get(&v)) {
            Some(c) => {
                let _ = writeln!(out, "  {} [fillcolor={c}];", dot_id(lg.label(v)));
            }
            None => {
                let _ = writeln!(out, "  {} [fillcolor=white];", dot_id(lg.label(v)));
            }
        }
    }
    for (e, c) in edges {
        let _ = writeln!(
            out,
            "  {} -- {} [color={c}, label={c}];",
            dot_id(lg.label(e.0)),
            dot_id(lg.label(e.1))
        );
    }
    out.push_str("}\n");
    out
}

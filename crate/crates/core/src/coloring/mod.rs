//! Edge and total colorings, missing-color bookkeeping, verifiers and the base colorers.

mod constructive;
mod misra_gries;
mod round_robin;
pub mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::graph::{Edge, Graph};

pub use constructive::{total_color_even_universal, total_color_universal};
pub use misra_gries::edge_color_delta_plus_one;
pub use round_robin::edge_color_universal_even;
pub use search::{
    edge_color_exact, total_color_budget, total_color_with_vertices, Feasibility, SearchLimits,
};

/// Colors are 1-based.
pub type Color = u32;

/// Edge → color map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    pub edges: BTreeMap<Edge, Color>,
}

/// Vertex and edge colors drawn from one palette.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TotalColoring {
    pub vertices: BTreeMap<usize, Color>,
    pub edges: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn palette(&self) -> BTreeSet<Color> {
        self.edges.values().copied().collect()
    }

    pub fn color_count(&self) -> usize {
        self.palette().len()
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Color> {
        self.edges.get(&Edge::new(u, v)).copied()
    }

    /// Colors on edges at `v`.
    pub fn colors_at(&self, g: &Graph, v: usize) -> BTreeSet<Color> {
        g.neighbors(v).iter().filter_map(|&w| self.get(v, w)).collect()
    }

    /// Renumbers the palette to `1..=k`, preserving order.
    pub fn compacted(&self) -> EdgeColoring {
        let map = compaction(self.palette());
        EdgeColoring { edges: self.edges.iter().map(|(&e, c)| (e, map[c])).collect() }
    }
}

impl TotalColoring {
    pub fn palette(&self) -> BTreeSet<Color> {
        self.vertices.values().chain(self.edges.values()).copied().collect()
    }

    pub fn color_count(&self) -> usize {
        self.palette().len()
    }

    /// `C(v)`: colors on edges at `v`.
    pub fn edge_colors_at(&self, g: &Graph, v: usize) -> BTreeSet<Color> {
        g.neighbors(v)
            .iter()
            .filter_map(|&w| self.edges.get(&Edge::new(v, w)).copied())
            .collect()
    }

    /// `C[v]`: `C(v)` plus the color of `v`.
    pub fn incident_colors(&self, g: &Graph, v: usize) -> BTreeSet<Color> {
        let mut set = self.edge_colors_at(g, v);
        set.extend(self.vertices.get(&v));
        set
    }

    pub fn compacted(&self) -> TotalColoring {
        let map = compaction(self.palette());
        TotalColoring {
            vertices: self.vertices.iter().map(|(&v, c)| (v, map[c])).collect(),
            edges: self.edges.iter().map(|(&e, c)| (e, map[c])).collect(),
        }
    }
}

fn compaction(palette: BTreeSet<Color>) -> BTreeMap<Color, Color> {
    palette.into_iter().zip(1..).collect()
}

/// Per-vertex missing colors `L(v)`, kept in step with a growing coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorState {
    palette: BTreeSet<Color>,
    incident: Vec<BTreeSet<Color>>,
    missing: Vec<BTreeSet<Color>>,
}

impl ColorState {
    /// `L(v) = 𝒞 \ C(v)` for an edge coloring.
    pub fn for_edges(g: &Graph, c: &EdgeColoring) -> Self {
        let incident = (0..g.n()).map(|v| c.colors_at(g, v)).collect();
        Self::build(c.palette(), incident)
    }

    /// `L(v) = 𝒞 \ C[v]` for a total coloring.
    pub fn for_total(g: &Graph, c: &TotalColoring) -> Self {
        let incident = (0..g.n()).map(|v| c.incident_colors(g, v)).collect();
        Self::build(c.palette(), incident)
    }

    fn build(palette: BTreeSet<Color>, incident: Vec<BTreeSet<Color>>) -> Self {
        let missing = incident
            .iter()
            .map(|used: &BTreeSet<Color>| palette.difference(used).copied().collect())
            .collect();
        ColorState { palette, incident, missing }
    }

    pub fn palette(&self) -> &BTreeSet<Color> {
        &self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.missing.len()
    }

    /// Adds a vertex with nothing incident to it yet.
    pub fn push_vertex(&mut self) -> usize {
        self.incident.push(BTreeSet::new());
        self.missing.push(self.palette.clone());
        self.missing.len() - 1
    }

    pub fn smallest_missing(&self, v: usize) -> Option<Color> {
        self.missing[v].first().copied()
    }

    /// Records `color` as incident to `v`, growing the palette if the color is new.
    pub fn occupy(&mut self, v: usize, color: Color) {
        if self.palette.insert(color) {
            for (u, list) in self.missing.iter_mut().enumerate() {
                if !self.incident[u].contains(&color) {
                    list.insert(color);
                }
            }
        }
        self.incident[v].insert(color);
        self.missing[v].remove(&color);
    }

    /// Next color outside the palette.
    pub fn fresh_color(&self) -> Color {
        self.palette.last().map_or(1, |&c| c + 1)
    }

    pub fn is_consistent(&self) -> bool {
        self.incident
            .iter()
            .zip(&self.missing)
            .all(|(used, miss)| used.is_disjoint(miss) && used.union(miss).eq(self.palette.iter()))
    }
}

/// `L(v)`, ascending.
pub fn missing_colors(state: &ColorState, v: usize) -> Vec<Color> {
    state.missing[v].iter().copied().collect()
}

/// A reason a coloring is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    UncoloredEdge(Edge),
    UncoloredVertex(usize),
    UnknownEdge(Edge),
    UnknownVertex(usize),
    ZeroColor,
    EdgeClash { vertex: usize, first: Edge, second: Edge, color: Color },
    VertexClash { first: usize, second: usize, color: Color },
    VertexEdgeClash { vertex: usize, edge: Edge, color: Color },
    TooManyColors { used: usize, max: usize },
}

impl Violation {
    /// Message with vertices rendered by `label`.
    pub fn describe<F: Fn(usize) -> String>(&self, label: F) -> String {
        let e = |e: &Edge| format!("{}-{}", label(e.0), label(e.1));
        match self {
            Violation::UncoloredEdge(x) => format!("uncolored edge {}", e(x)),
            Violation::UncoloredVertex(v) => format!("uncolored vertex {}", label(*v)),
            Violation::UnknownEdge(x) => format!("edge {} is not in the graph", e(x)),
            Violation::UnknownVertex(v) => format!("vertex {} is not in the graph", label(*v)),
            Violation::ZeroColor => "color 0 is not allowed (colors are 1-based)".to_string(),
            Violation::EdgeClash { vertex, first, second, color } => format!(
                "edges {} and {} share color {color} at vertex {}",
                e(first),
                e(second),
                label(*vertex)
            ),
            Violation::VertexClash { first, second, color } => format!(
                "adjacent vertices {} and {} share color {color}",
                label(*first),
                label(*second)
            ),
            Violation::VertexEdgeClash { vertex, edge, color } => format!(
                "vertex {} and incident edge {} share color {color}",
                label(*vertex),
                e(edge)
            ),
            Violation::TooManyColors { used, max } => {
                format!("{used} colors used, at most {max} allowed")
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(|v| v.to_string()))
    }
}

fn check_edges(g: &Graph, edges: &BTreeMap<Edge, Color>) -> Result<(), Violation> {
    if let Some(e) = edges.keys().find(|e| !g.has_edge(e.0, e.1)) {
        return Err(Violation::UnknownEdge(*e));
    }
    if edges.values().any(|&c| c == 0) {
        return Err(Violation::ZeroColor);
    }
    for e in g.edges() {
        if !edges.contains_key(&e) {
            return Err(Violation::UncoloredEdge(e));
        }
    }
    for v in 0..g.n() {
        let mut seen: BTreeMap<Color, Edge> = BTreeMap::new();
        for &w in g.neighbors(v) {
            let e = Edge::new(v, w);
            let c = edges[&e];
            if let Some(&first) = seen.get(&c) {
                return Err(Violation::EdgeClash { vertex: v, first, second: e, color: c });
            }
            seen.insert(c, e);
        }
    }
    Ok(())
}

/// Proper, complete, and within `max_colors`.
pub fn verify_edge_coloring(g: &Graph, c: &EdgeColoring, max_colors: usize) -> Result<(), Violation> {
    check_edges(g, &c.edges)?;
    let used = c.color_count();
    if used > max_colors {
        return Err(Violation::TooManyColors { used, max: max_colors });
    }
    Ok(())
}

pub fn verify_total_coloring(g: &Graph, c: &TotalColoring, max_colors: usize) -> Result<(), Violation> {
    if let Some(&v) = c.vertices.keys().find(|&&v| v >= g.n()) {
        return Err(Violation::UnknownVertex(v));
    }
    if c.vertices.values().any(|&col| col == 0) {
        return Err(Violation::ZeroColor);
    }
    if let Some(v) = (0..g.n()).find(|v| !c.vertices.contains_key(v)) {
        return Err(Violation::UncoloredVertex(v));
    }
    check_edges(g, &c.edges)?;
    for e in g.edges() {
        let (a, b) = (c.vertices[&e.0], c.vertices[&e.1]);
        if a == b {
            return Err(Violation::VertexClash { first: e.0, second: e.1, color: a });
        }
        let ce = c.edges[&e];
        for (v, cv) in [(e.0, a), (e.1, b)] {
            if cv == ce {
                return Err(Violation::VertexEdgeClash { vertex: v, edge: e, color: ce });
            }
        }
    }
    let used = c.color_count();
    if used > max_colors {
        return Err(Violation::TooManyColors { used, max: max_colors });
    }
    Ok(())
}

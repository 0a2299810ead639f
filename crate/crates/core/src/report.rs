//! Classification documents printed by the `classify` command.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{Color, SearchLimits};
use crate::error::{Error, Result};
use crate::io::LabeledGraph;
use crate::overfull::{HiltonWitness, OverfullCertificate};
use crate::sigma2::{
    classify_edge_with, classify_total_with, EdgeClassificationReport, EdgeVerdict,
    TotalClassificationReport, TotalVerdict,
};
use crate::split::{recognize_split, stretch_class, StretchWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassifyMode {
    Edge,
    Total,
    Sigma,
    All,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaDoc {
    pub sigma: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoredEdge {
    pub u: String,
    pub v: String,
    pub color: Color,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoredVertex {
    pub v: String,
    pub color: Color,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateDoc {
    pub center: String,
    pub neighborhood_size: usize,
    pub edge_count: usize,
    pub local_max_degree: usize,
    pub slack: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeDoc {
    pub verdict: &'static str,
    pub branch: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<ColoredEdge>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TotalDoc {
    pub verdict: &'static str,
    pub branch: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilton_witness: Option<HiltonWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<ColoredVertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<ColoredEdge>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub graph: GraphInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stretch: Option<SigmaDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<EdgeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<TotalDoc>,
    /// Set when `all` was requested on a graph the classifiers do not cover.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out_of_scope: Option<String>,
}

fn kebab<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

pub fn certificate_doc(lg: &LabeledGraph, c: &OverfullCertificate) -> CertificateDoc {
    CertificateDoc {
        center: lg.label(c.center).to_string(),
        neighborhood_size: c.neighborhood_size,
        edge_count: c.edge_count,
        local_max_degree: c.local_max_degree,
        slack: c.slack,
    }
}

pub fn edge_doc(lg: &LabeledGraph, r: &EdgeClassificationReport) -> EdgeDoc {
    EdgeDoc {
        verdict: match r.verdict {
            EdgeVerdict::Class1 => "Class 1",
            EdgeVerdict::Class2 => "Class 2",
        },
        branch: kebab(&r.branch),
        colors: r.coloring.as_ref().map(|c| c.color_count()),
        certificate: r.certificate.as_ref().map(|c| certificate_doc(lg, c)),
        edges: r.coloring.as_ref().map(|c| {
            c.edges
                .iter()
                .map(|(e, &color)| ColoredEdge {
                    u: lg.label(e.0).into(),
                    v: lg.label(e.1).into(),
                    color,
                })
                .collect()
        }),
    }
}

pub fn total_doc(lg: &LabeledGraph, r: &TotalClassificationReport) -> TotalDoc {
    TotalDoc {
        verdict: match r.verdict {
            TotalVerdict::Type1 => "Type 1",
            TotalVerdict::Type2 => "Type 2",
        },
        branch: kebab(&r.branch),
        colors: r.coloring.as_ref().map(|c| c.color_count()),
        hilton_witness: r.hilton_witness.filter(|_| r.verdict == TotalVerdict::Type2),
        vertices: r.coloring.as_ref().map(|c| {
            c.vertices
                .iter()
                .map(|(&v, &color)| ColoredVertex { v: lg.label(v).into(), color })
                .collect()
        }),
        edges: r.coloring.as_ref().map(|c| {
            c.edges
                .iter()
                .map(|(e, &color)| ColoredEdge {
                    u: lg.label(e.0).into(),
                    v: lg.label(e.1).into(),
                    color,
                })
                .collect()
        }),
    }
}

pub fn sigma_doc(lg: &LabeledGraph) -> Result<SigmaDoc> {
    let g = &lg.graph;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sp = recognize_split(g).map_err(|_| Error::NotSplit)?;
    let sc = stretch_class(g, &sp)?;
    Ok(match sc.witness {
        StretchWitness::Tree(t) => SigmaDoc {
            sigma: sc.sigma,
            tree: Some(
                t.edges().map(|e| [lg.label(e.0).to_string(), lg.label(e.1).to_string()]).collect(),
            ),
            reason: None,
        },
        StretchWitness::NoUniversalVertex { core_size } => SigmaDoc {
            sigma: sc.sigma,
            tree: None,
            reason: Some(format!(
                "pendant-free core on {core_size} vertices has no universal vertex"
            )),
        },
    })
}

/// Runs what `mode` asks for. Edge and total modes fail with
/// [`Error::OutOfScope`] outside stretch index 2; `all` records it instead.
pub fn classify_document(lg: &LabeledGraph, mode: ClassifyMode, limits: SearchLimits) -> Result<Document> {
    let g = &lg.graph;
    let mut doc = Document {
        graph: GraphInfo { n: g.n(), m: g.m(), max_degree: g.delta() },
        stretch: None,
        edge: None,
        total: None,
        out_of_scope: None,
    };
    if matches!(mode, ClassifyMode::Sigma | ClassifyMode::All) {
        let s = sigma_doc(lg)?;
        if mode == ClassifyMode::All && s.sigma != 2 {
            doc.out_of_scope = Some(Error::OutOfScope(s.sigma).to_string());
        }
        doc.stretch = Some(s);
    }
    if doc.out_of_scope.is_some() {
        return Ok(doc);
    }
    if matches!(mode, ClassifyMode::Edge | ClassifyMode::All) {
        doc.edge = Some(edge_doc(lg, &classify_edge_with(g, limits)?));
    }
    if matches!(mode, ClassifyMode::Total | ClassifyMode::All) {
        doc.total = Some(total_doc(lg, &classify_total_with(g, limits)?));
    }
    Ok(doc)
}

pub fn render_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("document serializes") + "\n"
}

pub fn certificate_text(c: &CertificateDoc) -> String {
    format!(
        "N[{}] induces {} vertices and {} edges with local max degree {} (overfull by {})",
        c.center, c.neighborhood_size, c.edge_count, c.local_max_degree, c.slack
    )
}

pub fn hilton_text(w: &HiltonWitness) -> String {
    format!(
        "complement has {} edges and matching number {}; 2*({}+{}) < {}",
        w.complement_edges,
        w.complement_matching,
        w.complement_edges,
        w.complement_matching,
        w.order
    )
}

fn push_edges(out: &mut String, edges: &[ColoredEdge]) {
    for e in edges {
        let _ = writeln!(out, "    {} {} {}", e.u, e.v, e.color);
    }
}

pub fn render_text(doc: &Document) -> String {
    let mut out = String::new();
    let g = &doc.graph;
    let _ = writeln!(out, "graph: n={} m={} max-degree={}", g.n, g.m, g.max_degree);
    if let Some(s) = &doc.stretch {
        let _ = writeln!(out, "sigma: {}", s.sigma);
        if let Some(tree) = &s.tree {
            let list: Vec<String> = tree.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "  spanning tree: {}", list.join(" "));
        }
        if let Some(r) = &s.reason {
            let _ = writeln!(out, "  reason: {r}");
        }
    }
    if let Some(msg) = &doc.out_of_scope {
        let _ = writeln!(out, "{msg}");
    }
    if let Some(e) = &doc.edge {
        let _ = writeln!(out, "edge: {} [{}]", e.verdict, e.branch);
        if let Some(c) = &e.certificate {
            let _ = writeln!(out, "  certificate: {}", certificate_text(c));
        }
        if let (Some(k), Some(edges)) = (e.colors, &e.edges) {
            let _ = writeln!(out, "  coloring with {k} colors (u v color):");
            push_edges(&mut out, edges);
        }
    }
    if let Some(t) = &doc.total {
        let _ = writeln!(out, "total: {} [{}]", t.verdict, t.branch);
        if let Some(w) = &t.hilton_witness {
            let _ = writeln!(out, "  hilton witness: {}", hilton_text(w));
        }
        if let (Some(k), Some(vs), Some(edges)) = (t.colors, &t.vertices, &t.edges) {
            let _ = writeln!(out, "  coloring with {k} colors (v color, then u v color):");
            for v in vs {
                let _ = writeln!(out, "    {} {}", v.v, v.color);
            }
            push_edges(&mut out, edges);
        }
    }
    out
}

//! Edge and total classification of split graphs with stretch index 2.
//!
//! Both classifiers strip the pendant vertices, color the core `H` with a
//! budget chosen by the branch that fires, then hand the pendant elements
//! their colors one at a time from the missing-color lists.

use serde::Serialize;

use crate::coloring::{
    edge_color_delta_plus_one, edge_color_exact, edge_color_universal_even,
    total_color_even_universal, total_color_universal, verify_edge_coloring,
    verify_total_coloring, Color, ColorState, EdgeColoring, Feasibility, SearchLimits,
    TotalColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::overfull::{
    hilton_condition, is_overfull, neighborhood_overfull_sigma2, HiltonWitness,
    OverfullCertificate,
};
use crate::split::{pendant_decomposition, recognize_split, stretch_class, universal_vertex, PendantDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeVerdict {
    Class1,
    Class2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TotalVerdict {
    Type1,
    Type2,
}

/// Which dispatch rule decided an edge classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeBranch {
    OddDelta,
    UniversalVertex,
    CoreOverfullSameDelta,
    CoreOverfullSmallerDelta,
    CoreNotOverfull,
}

/// Which dispatch rule decided a total classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TotalBranch {
    EvenCoreSameDelta,
    EvenCoreSmallerDelta,
    HiltonSameDelta,
    HiltonSmallerDelta,
    NotHilton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassificationReport {
    pub verdict: EdgeVerdict,
    pub coloring: Option<EdgeColoring>,
    pub certificate: Option<OverfullCertificate>,
    pub branch: EdgeBranch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalClassificationReport {
    pub verdict: TotalVerdict,
    pub coloring: Option<TotalColoring>,
    pub hilton_witness: Option<HiltonWitness>,
    pub branch: TotalBranch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FastPath {
    Class1,
    Inconclusive,
}

/// Checks that `g` is a connected split graph of stretch index 2.
pub fn sigma2_decomposition(g: &Graph) -> Result<PendantDecomposition> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let sp = recognize_split(g).map_err(|_| Error::NotSplit)?;
    let sc = stretch_class(g, &sp)?;
    if sc.sigma != 2 {
        return Err(Error::OutOfScope(sc.sigma));
    }
    pendant_decomposition(g)
}

fn expect_colored<T>(found: Feasibility<T>, what: &str) -> Result<T> {
    found
        .colored()
        .ok_or_else(|| Error::Internal(format!("{what}: guaranteed budget reported infeasible")))
}

pub fn classify_edge(g: &Graph) -> Result<EdgeClassificationReport> {
    classify_edge_with(g, SearchLimits::from_env())
}

pub fn classify_edge_with(g: &Graph, limits: SearchLimits) -> Result<EdgeClassificationReport> {
    let pd = sigma2_decomposition(g)?;
    let delta = g.delta();

    let class1 = |coloring: EdgeColoring, branch| -> Result<EdgeClassificationReport> {
        let coloring = coloring.compacted();
        verify_edge_coloring(g, &coloring, delta).map_err(Error::ImproperColoring)?;
        Ok(EdgeClassificationReport {
            verdict: EdgeVerdict::Class1,
            coloring: Some(coloring),
            certificate: None,
            branch,
        })
    };
    let class2 = |cert: OverfullCertificate, branch| -> Result<EdgeClassificationReport> {
        if !cert.is_overfull() || cert.local_max_degree != delta {
            return Err(Error::Internal(format!("invalid overfull certificate {cert:?}")));
        }
        Ok(EdgeClassificationReport {
            verdict: EdgeVerdict::Class2,
            coloring: None,
            certificate: Some(cert),
            branch,
        })
    };

    if delta % 2 == 1 {
        let c = if universal_vertex(g).is_some() {
            edge_color_universal_even(g)?
        } else {
            expect_colored(edge_color_exact(g, delta, limits)?, "odd maximum degree")?
        };
        return class1(c, EdgeBranch::OddDelta);
    }

    if universal_vertex(g).is_some() {
        if let Some(cert) = neighborhood_overfull_sigma2(g, &pd)? {
            return class2(cert, EdgeBranch::UniversalVertex);
        }
        let c = expect_colored(edge_color_exact(g, delta, limits)?, "universal vertex, not overfull")?;
        return class1(c, EdgeBranch::UniversalVertex);
    }

    let h = &pd.core;
    let delta_h = h.delta();
    if is_overfull(h) {
        if delta_h == delta {
            let u = universal_vertex(h).expect("stretch 2 core has a universal vertex");
            let cert = OverfullCertificate::for_center(g, pd.core_map.parent(u));
            return class2(cert, EdgeBranch::CoreOverfullSameDelta);
        }
        let hc = edge_color_delta_plus_one(h);
        let c = extend_pendant_edges(g, &pd, &hc)?;
        return class1(c, EdgeBranch::CoreOverfullSmallerDelta);
    }
    let hc = if delta_h % 2 == 1 {
        edge_color_universal_even(h)?
    } else {
        expect_colored(edge_color_exact(h, delta_h, limits)?, "core not overfull")?
    };
    let c = extend_pendant_edges(g, &pd, &hc)?;
    class1(c, EdgeBranch::CoreNotOverfull)
}

/// Lifts a core coloring to `g`, coloring pendant edges from the missing lists.
pub fn extend_pendant_edges(
    g: &Graph,
    pd: &PendantDecomposition,
    hc: &EdgeColoring,
) -> Result<EdgeColoring> {
    let h = &pd.core;
    let hc = hc.compacted();
    verify_edge_coloring(h, &hc, usize::MAX).map_err(Error::ImproperColoring)?;
    let mut state = ColorState::for_edges(h, &hc);
    let mut edges: std::collections::BTreeMap<Edge, Color> = hc
        .edges
        .iter()
        .map(|(e, &c)| (Edge::new(pd.core_map.parent(e.0), pd.core_map.parent(e.1)), c))
        .collect();
    for (p, x) in pd.processing_order() {
        let xl = pd.core_map.local(x).ok_or(Error::DegenerateCore(x))?;
        let pl = state.push_vertex();
        let c = state.smallest_missing(xl).unwrap_or_else(|| state.fresh_color());
        state.occupy(xl, c);
        state.occupy(pl, c);
        edges.insert(Edge::new(p, x), c);
    }
    debug_assert!(state.is_consistent());
    let out = EdgeColoring { edges }.compacted();
    verify_edge_coloring(g, &out, usize::MAX).map_err(Error::ImproperColoring)?;
    Ok(out)
}

pub fn classify_total(g: &Graph) -> Result<TotalClassificationReport> {
    classify_total_with(g, SearchLimits::from_env())
}

pub fn classify_total_with(g: &Graph, limits: SearchLimits) -> Result<TotalClassificationReport> {
    let pd = sigma2_decomposition(g)?;
    let delta = g.delta();
    let h = &pd.core;
    let delta_h = h.delta();

    let type1 = |coloring: TotalColoring, witness, branch| -> Result<TotalClassificationReport> {
        let coloring = coloring.compacted();
        verify_total_coloring(g, &coloring, delta + 1).map_err(Error::ImproperColoring)?;
        Ok(TotalClassificationReport {
            verdict: TotalVerdict::Type1,
            coloring: Some(coloring),
            hilton_witness: witness,
            branch,
        })
    };
    if delta_h % 2 == 0 {
        let hc = total_color_universal(h)?;
        let c = extend_pendant_total(g, &pd, &hc)?;
        let branch = if delta_h == delta {
            TotalBranch::EvenCoreSameDelta
        } else {
            TotalBranch::EvenCoreSmallerDelta
        };
        return type1(c, None, branch);
    }

    let witness = hilton_condition(h)?;
    if witness.holds() {
        if delta_h == delta {
            return Ok(TotalClassificationReport {
                verdict: TotalVerdict::Type2,
                coloring: None,
                hilton_witness: Some(witness),
                branch: TotalBranch::HiltonSameDelta,
            });
        }
        // The core needs Δ(H)+2 colors, still within Δ(G)+1.
        let hc = total_color_universal(h)?;
        let c = extend_pendant_total(g, &pd, &hc)?;
        return type1(c, Some(witness), TotalBranch::HiltonSmallerDelta);
    }
    let hc = expect_colored(total_color_even_universal(h, limits)?, "core of type 1")?;
    let c = extend_pendant_total(g, &pd, &hc)?;
    type1(c, Some(witness), TotalBranch::NotHilton)
}

/// Lifts a core total coloring to `g`: each pendant vertex takes the smallest
/// edge color at its attach vertex, then the pendant edge is colored like in
/// [`extend_pendant_edges`] against `L = 𝒞 \ C[·]`.
pub fn extend_pendant_total(
    g: &Graph,
    pd: &PendantDecomposition,
    hc: &TotalColoring,
) -> Result<TotalColoring> {
    let h = &pd.core;
    let hc = hc.compacted();
    verify_total_coloring(h, &hc, usize::MAX).map_err(Error::ImproperColoring)?;
    let mut state = ColorState::for_total(h, &hc);
    let parent = |v: usize| pd.core_map.parent(v);
    let mut vertices: std::collections::BTreeMap<usize, Color> =
        hc.vertices.iter().map(|(&v, &c)| (parent(v), c)).collect();
    let mut edges: std::collections::BTreeMap<Edge, Color> = hc
        .edges
        .iter()
        .map(|(e, &c)| (Edge::new(parent(e.0), parent(e.1)), c))
        .collect();
    for (p, x) in pd.processing_order() {
        let xl = pd.core_map.local(x).ok_or(Error::DegenerateCore(x))?;
        let vc = *hc.edge_colors_at(h, xl).first().ok_or(Error::DegenerateCore(x))?;
        let pl = state.push_vertex();
        state.occupy(pl, vc);
        vertices.insert(p, vc);
        let c = state.smallest_missing(xl).unwrap_or_else(|| state.fresh_color());
        state.occupy(xl, c);
        state.occupy(pl, c);
        edges.insert(Edge::new(p, x), c);
    }
    debug_assert!(state.is_consistent());
    let out = TotalColoring { vertices, edges }.compacted();
    verify_total_coloring(g, &out, usize::MAX).map_err(Error::ImproperColoring)?;
    Ok(out)
}

/// `Class1` when every maximum-degree vertex that is universal in the core
/// carries a pendant; otherwise no verdict.
pub fn class1_fast_path(g: &Graph, pd: &PendantDecomposition) -> FastPath {
    let delta = g.delta();
    let h = &pd.core;
    let all_covered = (0..h.n())
        .filter(|&v| h.degree(v) + 1 == h.n())
        .map(|v| pd.core_map.parent(v))
        .filter(|&v| g.degree(v) == delta)
        .all(|a| g.neighbors(a).iter().any(|&w| pd.is_pendant(w)));
    if all_covered {
        FastPath::Class1
    } else {
        FastPath::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::total_color_budget;

    fn k4_pendants(on: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = on.iter().enumerate().map(|(i, &x)| (x, 4 + i)).collect();
        Graph::complete(4).with_extra(on.len(), &edges).unwrap()
    }

    fn h6() -> Graph {
        Graph::complete(5).with_extra(1, &[(5, 0), (5, 1), (5, 2), (5, 3)]).unwrap()
    }

    #[test]
    fn edge_fixed_verdicts() {
        let r = classify_edge(&Graph::complete(7)).unwrap();
        assert_eq!(r.verdict, EdgeVerdict::Class2);
        assert!(r.certificate.unwrap().is_overfull());

        let g = k4_pendants(&[0, 1]);
        let r = classify_edge(&g).unwrap();
        assert_eq!(r.verdict, EdgeVerdict::Class1);
        assert_eq!(r.coloring.unwrap().color_count(), 4);

        let g = Graph::complete(7).with_extra(2, &[(7, 0), (7, 1), (8, 0), (8, 2)]).unwrap();
        let r = classify_edge(&g).unwrap();
        assert_eq!(r.verdict, EdgeVerdict::Class1);
        assert!(r.coloring.unwrap().color_count() <= 8);
    }

    #[test]
    fn out_of_scope_is_reported() {
        let w = Graph::complete(4).with_extra(2, &[(4, 0), (4, 1), (5, 2), (5, 3)]).unwrap();
        assert_eq!(classify_edge(&w), Err(Error::OutOfScope(3)));
        assert_eq!(classify_total(&Graph::path(4)), Err(Error::OutOfScope(1)));
    }

    #[test]
    fn pendant_edges_reuse_missing_colors() {
        let g = k4_pendants(&[0, 1]);
        let pd = pendant_decomposition(&g).unwrap();
        let hc = edge_color_universal_even(&pd.core).unwrap();
        let c = extend_pendant_edges(&g, &pd, &hc).unwrap();
        assert_eq!(c.get(0, 4), Some(4));
        assert_eq!(c.get(1, 5), Some(4));

        let k3 = Graph::complete(3).with_extra(1, &[(0, 3)]).unwrap();
        let pd = pendant_decomposition(&k3).unwrap();
        let hc = edge_color_delta_plus_one(&pd.core);
        let c = extend_pendant_edges(&k3, &pd, &hc).unwrap();
        assert_eq!(c.color_count(), 3);
    }

    #[test]
    fn no_pendants_leaves_coloring_alone() {
        let g = Graph::complete(4);
        let pd = pendant_decomposition(&g).unwrap();
        let hc = edge_color_universal_even(&g).unwrap();
        assert_eq!(extend_pendant_edges(&g, &pd, &hc).unwrap(), hc);
    }

    #[test]
    fn total_fixed_verdicts() {
        let r = classify_total(&Graph::complete(4)).unwrap();
        assert_eq!(r.verdict, TotalVerdict::Type2);
        let w = r.hilton_witness.unwrap();
        assert_eq!((w.complement_edges, w.complement_matching, w.order), (0, 0, 4));

        let g = h6().with_extra(1, &[(5, 6)]).unwrap();
        assert_eq!(classify_total(&g).unwrap().verdict, TotalVerdict::Type2);

        let g = k4_pendants(&[0, 0]);
        let r = classify_total(&g).unwrap();
        assert_eq!(r.verdict, TotalVerdict::Type1);
        assert_eq!(r.branch, TotalBranch::HiltonSmallerDelta);
        assert_eq!(r.coloring.unwrap().color_count(), 6);
    }

    #[test]
    fn total_extension_keeps_palette() {
        let g = Graph::complete(3).with_extra(1, &[(0, 3)]).unwrap();
        let pd = pendant_decomposition(&g).unwrap();
        let hc = total_color_budget(&pd.core, 3, SearchLimits::default()).unwrap().colored().unwrap();
        let c = extend_pendant_total(&g, &pd, &hc).unwrap();
        assert!(c.color_count() <= 4);
    }

    #[test]
    fn fast_path() {
        let g = k4_pendants(&[0, 1]);
        let pd = pendant_decomposition(&g).unwrap();
        assert_eq!(class1_fast_path(&g, &pd), FastPath::Class1);
        let k7 = Graph::complete(7);
        assert_eq!(class1_fast_path(&k7, &pendant_decomposition(&k7).unwrap()), FastPath::Inconclusive);
        let g = Graph::complete(7).with_extra(2, &[(7, 0), (7, 1), (8, 0), (8, 2)]).unwrap();
        assert_eq!(class1_fast_path(&g, &pendant_decomposition(&g).unwrap()), FastPath::Inconclusive);
    }
}

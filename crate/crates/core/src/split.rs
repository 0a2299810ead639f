//! Split recognition, pendant decomposition and stretch-index classification.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap};

/// A clique/independent-set partition with a maximal clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Checks the partition against `g`: disjoint cover, clique, independent set, maximality.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
        let clique_ok = self
            .clique
            .iter()
            .enumerate()
            .all(|(i, &a)| self.clique[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        let indep_ok = self
            .independent
            .iter()
            .enumerate()
            .all(|(i, &a)| self.independent[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
        clique_ok && indep_ok && self.is_maximal(g)
    }

    /// No independent vertex sees the whole clique.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        self.independent
            .iter()
            .all(|&y| !self.clique.iter().all(|&x| g.has_edge(x, y)))
    }

    /// Moves independent vertices adjacent to the entire clique into it until none remain.
    fn maximalize(&mut self, g: &Graph) {
        while let Some(pos) = self
            .independent
            .iter()
            .position(|&y| self.clique.iter().all(|&x| g.has_edge(x, y)))
        {
            let y = self.independent.remove(pos);
            self.clique.push(y);
            self.clique.sort_unstable();
        }
    }
}

/// Induced obstruction proving a graph is not split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ForbiddenSubgraph {
    /// Two edges `(a,b)` and `(c,d)` with no edges between them.
    TwoK2([usize; 4]),
    /// Chordless 4-cycle in cyclic order.
    C4([usize; 4]),
    /// Chordless 5-cycle in cyclic order.
    C5([usize; 5]),
}

impl ForbiddenSubgraph {
    pub fn vertices(&self) -> &[usize] {
        match self {
            ForbiddenSubgraph::TwoK2(v) | ForbiddenSubgraph::C4(v) => v,
            ForbiddenSubgraph::C5(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSplit {
    pub certificate: ForbiddenSubgraph,
}

/// Recognizes split graphs with the degree-sequence test.
///
/// Vertices are ranked by (degree desc, id asc); the longest prefix whose
/// `i`-th degree is at least `i-1` is the clique candidate, and the graph is
/// split iff the prefix degree sum equals `m(m-1)` plus the suffix degree sum.
pub fn recognize_split(g: &Graph) -> std::result::Result<SplitPartition, NotSplit> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head == m * m.saturating_sub(1) + tail {
        let mut clique = order[..m].to_vec();
        let mut independent = order[m..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        let mut sp = SplitPartition { clique, independent };
        sp.maximalize(g);
        debug_assert!(sp.is_valid_for(g));
        return Ok(sp);
    }
    let certificate = find_two_k2(g)
        .or_else(|| find_c4(g))
        .or_else(|| find_c5(g))
        .expect("a non-split graph contains an induced 2K2, C4 or C5");
    Err(NotSplit { certificate })
}

fn find_two_k2(g: &Graph) -> Option<ForbiddenSubgraph> {
    let edges = g.edge_list();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            let quad = [e.0, e.1, f.0, f.1];
            if f.touches(e.0) || f.touches(e.1) {
                continue;
            }
            if [(e.0, f.0), (e.0, f.1), (e.1, f.0), (e.1, f.1)]
                .iter()
                .all(|&(a, b)| !g.has_edge(a, b))
            {
                return Some(ForbiddenSubgraph::TwoK2(quad));
            }
        }
    }
    None
}

fn find_c4(g: &Graph) -> Option<ForbiddenSubgraph> {
    for a in 0..g.n() {
        for c in a + 1..g.n() {
            if g.has_edge(a, c) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbors(a)
                .iter()
                .copied()
                .filter(|&w| g.has_edge(c, w))
                .collect();
            for (i, &b) in common.iter().enumerate() {
                if let Some(&d) = common[i + 1..].iter().find(|&&d| !g.has_edge(b, d)) {
                    return Some(ForbiddenSubgraph::C4([a, b, c, d]));
                }
            }
        }
    }
    None
}

fn find_c5(g: &Graph) -> Option<ForbiddenSubgraph> {
    for e in g.edges() {
        for (a, b) in [(e.0, e.1), (e.1, e.0)] {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || g.has_edge(a, d) || g.has_edge(b, d) {
                        continue;
                    }
                    for &x in g.neighbors(d) {
                        if x != c && g.has_edge(x, a) && !g.has_edge(x, b) && !g.has_edge(x, c) {
                            return Some(ForbiddenSubgraph::C5([a, b, c, d, x]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Degree-one vertices and the core they hang from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantDecomposition {
    /// Degree-one vertices of the input graph, ascending.
    pub pendants: Vec<usize>,
    /// `G[V \ P]`, relabeled.
    pub core: Graph,
    pub core_map: IdMap,
    /// Pendant vertex to its unique neighbor.
    pub attach: BTreeMap<usize, usize>,
}

impl PendantDecomposition {
    pub fn is_pendant(&self, v: usize) -> bool {
        self.attach.contains_key(&v)
    }

    /// Pendants grouped by attach vertex: ascending attach id, then ascending pendant id.
    pub fn processing_order(&self) -> Vec<(usize, usize)> {
        let mut order: Vec<(usize, usize)> = self.attach.iter().map(|(&p, &x)| (x, p)).collect();
        order.sort_unstable();
        order.into_iter().map(|(x, p)| (p, x)).collect()
    }
}

/// Single-round removal of every degree-one vertex.
pub fn pendant_decomposition(g: &Graph) -> Result<PendantDecomposition> {
    if g.n() <= 1 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pendants: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let attach = pendants.iter().map(|&p| (p, g.neighbors(p)[0])).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) != 1).collect();
    let (core, core_map) = if rest.is_empty() {
        (
            Graph::empty(0),
            IdMap { to_parent: Vec::new(), from_parent: vec![None; g.n()] },
        )
    } else {
        g.induced_subgraph(&rest)?
    };
    Ok(PendantDecomposition { pendants, core, core_map, attach })
}

/// Smallest-id vertex adjacent to every other vertex.
pub fn universal_vertex(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0..n).find(|&v| g.degree(v) + 1 == n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StretchWitness {
    /// A spanning tree realizing the stretch.
    Tree(Graph),
    /// The pendant-free core has no universal vertex.
    NoUniversalVertex { core_size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StretchClass {
    pub sigma: u8,
    pub witness: StretchWitness,
}

/// Removes degree-one vertices until none remain. Returns the surviving
/// vertices and, for each removed vertex, its neighbor at removal time.
fn peel_pendants(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    loop {
        let round: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 1).collect();
        if round.is_empty() {
            break;
        }
        for v in round {
            if !alive[v] || deg[v] != 1 {
                continue;
            }
            let x = g.neighbors(v).iter().copied().find(|&w| alive[w]).expect("degree one");
            alive[v] = false;
            deg[x] -= 1;
            removed.push((v, x));
        }
    }
    ((0..n).filter(|&v| alive[v]).collect(), removed)
}

/// Classifies the stretch index of a connected split graph.
pub fn stretch_class(g: &Graph, sp: &SplitPartition) -> Result<StretchClass> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if sp.clique.len() <= 1 || g.is_tree() {
        return Ok(StretchClass { sigma: 1, witness: StretchWitness::Tree(g.clone()) });
    }
    let (core, _) = peel_pendants(g);
    let (h, map) = g.induced_subgraph(&core)?;
    match universal_vertex(&h) {
        Some(u) => {
            let tree = tree_2_spanner(g, map.parent(u))?;
            Ok(StretchClass { sigma: 2, witness: StretchWitness::Tree(tree) })
        }
        None => Ok(StretchClass {
            sigma: 3,
            witness: StretchWitness::NoUniversalVertex { core_size: h.n() },
        }),
    }
}

/// Star at `u` over the pendant-free core plus the peeled pendant chains.
pub fn tree_2_spanner(g: &Graph, u: usize) -> Result<Graph> {
    if g.is_tree() {
        return Ok(g.clone());
    }
    let (core, removed) = peel_pendants(g);
    if !core.contains(&u) {
        return Err(Error::Precondition(format!("vertex {u} is not in the pendant-free core")));
    }
    let edges = core
        .iter()
        .filter(|&&w| w != u)
        .map(|&w| (u, w))
        .chain(removed.iter().copied());
    let tree = Graph::from_edges(g.n(), edges)?;
    if !tree.is_tree() || tree.edges().any(|e| !g.has_edge(e.0, e.1)) {
        return Err(Error::Internal(format!("star at {u} is not a spanning subtree")));
    }
    match g.stretch_in(&tree) {
        Some(s) if s <= 2 => Ok(tree),
        other => Err(Error::Internal(format!("tree at {u} has stretch {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn k3_plus_y() -> Graph {
        Graph::complete(3).with_extra(1, &[(3, 0), (3, 1)]).unwrap()
    }

    fn sigma3_witness() -> Graph {
        Graph::complete(4).with_extra(2, &[(4, 0), (4, 1), (5, 2), (5, 3)]).unwrap()
    }

    #[test]
    fn recognize_examples() {
        let c4 = recognize_split(&Graph::cycle(4)).unwrap_err();
        assert!(matches!(c4.certificate, ForbiddenSubgraph::C4(_)));

        let k4 = recognize_split(&Graph::complete(4)).unwrap();
        assert_eq!(k4.clique, vec![0, 1, 2, 3]);
        assert!(k4.independent.is_empty());

        let sp = recognize_split(&k3_plus_y()).unwrap();
        assert_eq!(sp.clique, vec![0, 1, 2]);
        assert_eq!(sp.independent, vec![3]);
    }

    #[test]
    fn certificates_are_induced() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let cert = recognize_split(&two_k2).unwrap_err().certificate;
        assert_eq!(cert, ForbiddenSubgraph::TwoK2([0, 1, 2, 3]));

        let cert = recognize_split(&Graph::cycle(5)).unwrap_err().certificate;
        let ForbiddenSubgraph::C5(c) = cert else { panic!("expected C5, got {cert:?}") };
        let g = Graph::cycle(5);
        for i in 0..5 {
            assert!(g.has_edge(c[i], c[(i + 1) % 5]));
            assert!(!g.has_edge(c[i], c[(i + 2) % 5]));
        }
    }

    #[test]
    fn maximalize_moves_dominating_vertex() {
        // A path 0-1-2: degree test gives clique {1,0}; 2 is not adjacent to 0.
        let sp = recognize_split(&Graph::path(3)).unwrap();
        assert!(sp.is_valid_for(&Graph::path(3)));
        let star = Graph::star(3);
        let sp = recognize_split(&star).unwrap();
        assert_eq!(sp.clique.len(), 2);
        assert!(sp.is_valid_for(&star));
    }

    #[test]
    fn pendant_decomposition_examples() {
        let pd = pendant_decomposition(&Graph::star(4)).unwrap();
        assert_eq!(pd.pendants, vec![1, 2, 3, 4]);
        assert_eq!(pd.core.n(), 1);

        let pd = pendant_decomposition(&Graph::complete(4)).unwrap();
        assert!(pd.pendants.is_empty());
        assert_eq!(pd.core, Graph::complete(4));

        let g = Graph::complete(4).with_extra(1, &[(4, 0)]).unwrap();
        let pd = pendant_decomposition(&g).unwrap();
        assert_eq!(pd.pendants, vec![4]);
        assert_eq!(pd.core, Graph::complete(4));
        assert_eq!(pd.attach[&4], 0);

        assert_eq!(pendant_decomposition(&Graph::empty(1)), Err(Error::TrivialGraph));
        let k2 = pendant_decomposition(&Graph::complete(2)).unwrap();
        assert_eq!(k2.core.n(), 0);
    }

    #[test]
    fn universal_vertex_examples() {
        assert_eq!(universal_vertex(&Graph::complete(5)), Some(0));
        assert_eq!(universal_vertex(&Graph::path(4)), None);
        assert_eq!(universal_vertex(&k3_plus_y()), Some(0));
    }

    #[test]
    fn stretch_class_examples() {
        let star = Graph::star(3);
        let sp = recognize_split(&star).unwrap();
        assert_eq!(stretch_class(&star, &sp).unwrap().sigma, 1);

        let g = k3_plus_y();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(stretch_class(&g, &sp).unwrap().sigma, 2);

        let g = sigma3_witness();
        let sp = recognize_split(&g).unwrap();
        let class = stretch_class(&g, &sp).unwrap();
        assert_eq!(class.sigma, 3);
        assert_eq!(class.witness, StretchWitness::NoUniversalVertex { core_size: 6 });
    }

    #[test]
    fn tree_2_spanner_examples() {
        let g = k3_plus_y();
        let t = tree_2_spanner(&g, 0).unwrap();
        assert_eq!(t.edge_list(), vec![Edge(0, 1), Edge(0, 2), Edge(0, 3)]);
        let d1 = t.distances_from(1);
        assert_eq!(d1[2], 2);
        assert_eq!(d1[3], 2);

        let tree = Graph::path(5);
        assert_eq!(tree_2_spanner(&tree, 0).unwrap(), tree);

        let k5 = Graph::complete(5);
        let t = tree_2_spanner(&k5, 0).unwrap();
        assert_eq!(t, Graph::star(4));
        assert_eq!(k5.stretch_in(&t), Some(2));
    }
}

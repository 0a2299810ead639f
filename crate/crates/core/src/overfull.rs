//! Overfull predicates and Hilton's total-coloring condition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::max_matching;
use crate::split::{universal_vertex, PendantDecomposition};

/// `|E| > Δ·⌊n/2⌋`, in integers.
pub fn is_overfull(g: &Graph) -> bool {
    g.m() > g.delta() * (g.n() / 2)
}

/// A closed neighborhood that induces an overfull graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverfullCertificate {
    pub center: usize,
    pub neighborhood_size: usize,
    pub edge_count: usize,
    pub local_max_degree: usize,
    /// `edge_count - local_max_degree·⌊neighborhood_size/2⌋`; positive when overfull.
    pub slack: i64,
}

impl OverfullCertificate {
    /// Measures `G[N[v]]`.
    pub fn for_center(g: &Graph, v: usize) -> Self {
        let closed = g.closed_neighborhood(v);
        let (h, _) = g.induced_subgraph(&closed).expect("closed neighborhood is nonempty");
        let local = h.delta();
        OverfullCertificate {
            center: v,
            neighborhood_size: h.n(),
            edge_count: h.m(),
            local_max_degree: local,
            slack: h.m() as i64 - (local * (h.n() / 2)) as i64,
        }
    }

    pub fn is_overfull(&self) -> bool {
        self.slack > 0
    }
}

/// Direct definition: some maximum-degree vertex whose closed neighborhood is overfull.
pub fn neighborhood_overfull(g: &Graph) -> Option<OverfullCertificate> {
    let delta = g.delta();
    (0..g.n())
        .filter(|&v| g.degree(v) == delta)
        .map(|v| OverfullCertificate::for_center(g, v))
        .find(OverfullCertificate::is_overfull)
}

/// Neighborhood-overfull test for stretch-2 split graphs of even maximum degree,
/// scanning only vertices universal in the pendant-free core.
pub fn neighborhood_overfull_sigma2(
    g: &Graph,
    pd: &PendantDecomposition,
) -> Result<Option<OverfullCertificate>> {
    let delta = g.delta();
    if delta % 2 != 0 || g.is_tree() || universal_vertex(&pd.core).is_none() {
        return Err(Error::Precondition("not a (sigma=2) split graph / odd delta".into()));
    }
    let core_n = pd.core.n();
    let found = (0..core_n)
        .filter(|&v| pd.core.degree(v) + 1 == core_n)
        .map(|v| OverfullCertificate::for_center(g, pd.core_map.parent(v)))
        .find(|c| c.local_max_degree == delta && c.is_overfull());
    Ok(found)
}

/// Components of Hilton's condition for an even-order graph with a universal vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HiltonWitness {
    pub complement_edges: usize,
    pub complement_matching: usize,
    pub order: usize,
}

impl HiltonWitness {
    /// `|E(Ḡ)| + α'(Ḡ) < n/2`, evaluated as `2(|E(Ḡ)| + α'(Ḡ)) < n`.
    pub fn holds(&self) -> bool {
        2 * (self.complement_edges + self.complement_matching) < self.order
    }
}

/// Evaluates Hilton's condition; `holds()` on the result means Type 2.
pub fn hilton_condition(h: &Graph) -> Result<HiltonWitness> {
    if h.n() % 2 != 0 || universal_vertex(h).is_none() {
        return Err(Error::Precondition(
            "Hilton precondition: even order and a universal vertex".into(),
        ));
    }
    let complement = h.complement();
    Ok(HiltonWitness {
        complement_edges: complement.m(),
        complement_matching: max_matching(&complement).size,
        order: h.n(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::pendant_decomposition;

    fn h6() -> Graph {
        Graph::complete(5).with_extra(1, &[(5, 0), (5, 1), (5, 2), (5, 3)]).unwrap()
    }

    fn h7() -> Graph {
        Graph::complete(5).with_extra(1, &[(5, 0), (5, 1), (5, 2)]).unwrap()
    }

    #[test]
    fn overfull_examples() {
        assert!(is_overfull(&Graph::complete(3)));
        assert!(!is_overfull(&Graph::complete(4)));
        assert!(is_overfull(&Graph::complete(7)));
    }

    #[test]
    fn sigma2_scan_examples() {
        let k7 = Graph::complete(7);
        let pd = pendant_decomposition(&k7).unwrap();
        let cert = neighborhood_overfull_sigma2(&k7, &pd).unwrap().unwrap();
        assert_eq!(
            (cert.center, cert.neighborhood_size, cert.edge_count, cert.local_max_degree),
            (0, 7, 21, 6)
        );
        assert_eq!(cert.slack, 3);

        let g = Graph::complete(7).with_extra(2, &[(7, 0), (7, 1), (8, 0), (8, 2)]).unwrap();
        let pd = pendant_decomposition(&g).unwrap();
        assert_eq!(neighborhood_overfull_sigma2(&g, &pd).unwrap(), None);
        let c = OverfullCertificate::for_center(&g, 0);
        assert_eq!((c.edge_count, c.local_max_degree, c.neighborhood_size), (25, 8, 9));

        let g = Graph::complete(4).with_extra(2, &[(4, 0), (5, 1)]).unwrap();
        let pd = pendant_decomposition(&g).unwrap();
        assert_eq!(neighborhood_overfull_sigma2(&g, &pd).unwrap(), None);
        assert_eq!(neighborhood_overfull(&g), None);
    }

    #[test]
    fn sigma2_scan_rejects_odd_delta() {
        let k4 = Graph::complete(4);
        let pd = pendant_decomposition(&k4).unwrap();
        assert!(matches!(neighborhood_overfull_sigma2(&k4, &pd), Err(Error::Precondition(_))));
    }

    #[test]
    fn hilton_examples() {
        let k4 = hilton_condition(&Graph::complete(4)).unwrap();
        assert_eq!((k4.complement_edges, k4.complement_matching, k4.order), (0, 0, 4));
        assert!(k4.holds());

        let w = hilton_condition(&h6()).unwrap();
        assert_eq!((w.complement_edges, w.complement_matching), (1, 1));
        assert!(w.holds());

        let w = hilton_condition(&h7()).unwrap();
        assert_eq!((w.complement_edges, w.complement_matching), (2, 1));
        assert!(!w.holds());

        assert!(hilton_condition(&Graph::complete(5)).is_err());
        assert!(hilton_condition(&Graph::path(4)).is_err());
    }
}

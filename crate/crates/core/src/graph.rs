//! Simple undirected graphs over dense vertex ids.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// Undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and the graph is immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Bidirectional id map between a parent graph and a relabeled subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    /// `to_parent[i]` is the parent id of subgraph vertex `i`.
    pub to_parent: Vec<usize>,
    /// `from_parent[v]` is the subgraph id of parent vertex `v`, if kept.
    pub from_parent: Vec<Option<usize>>,
}

impl IdMap {
    pub fn parent(&self, local: usize) -> usize {
        self.to_parent[local]
    }

    pub fn local(&self, parent: usize) -> Option<usize> {
        self.from_parent.get(parent).copied().flatten()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` centered at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    /// Returns a copy with extra vertices and edges appended.
    pub fn with_extra(&self, extra_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n = self.n() + extra_vertices;
        let all = self.edges().map(|e| (e.0, e.1)).chain(edges.iter().copied());
        Graph::from_edges(n, all)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order, each reported once with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| Edge(u, v)))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// Maximum degree, 0 for graphs without vertices.
    pub fn delta(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum degree and every vertex attaining it, ascending.
    pub fn max_degree(&self) -> Result<(usize, Vec<usize>)> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let delta = self.delta();
        let witnesses = (0..self.n()).filter(|&v| self.degree(v) == delta).collect();
        Ok((delta, witnesses))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                    continue;
                }
                if v != u {
                    adj[u].push(v);
                    if v > u {
                        m += 1;
                    }
                }
            }
        }
        Graph { adj, m }
    }

    /// Subgraph induced by `vertices`, relabeled compactly in ascending parent order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, IdMap)> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange(bad));
        }
        let mut from_parent = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(j) = from_parent[w] {
                    adj[i].push(j);
                    if j > i {
                        m += 1;
                    }
                }
            }
        }
        Ok((Graph { adj, m }, IdMap { to_parent: keep, from_parent }))
    }

    /// Closed neighborhood `N[v]`, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest tree distance between the endpoints of an edge of `self`,
    /// measured in `tree`. `None` when `tree` does not connect some edge.
    pub fn stretch_in(&self, tree: &Graph) -> Option<usize> {
        let mut worst = if self.m == 0 { 0 } else { 1 };
        for u in 0..self.n() {
            if self.adj[u].iter().all(|&v| v < u) {
                continue;
            }
            let dist = tree.distances_from(u);
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                if dist[v] == usize::MAX {
                    return None;
                }
                worst = worst.max(dist[v]);
            }
        }
        Some(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::complete(4).max_degree().unwrap(), (3, vec![0, 1, 2, 3]));
        assert_eq!(Graph::empty(1).max_degree().unwrap(), (0, vec![0]));
        let g = Graph::complete(4).with_extra(1, &[(0, 4)]).unwrap();
        assert_eq!(g.max_degree().unwrap(), (4, vec![0]));
        assert_eq!(Graph::empty(0).max_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn complement_examples() {
        let c = Graph::complete(4).complement();
        assert_eq!(c.n(), 4);
        assert_eq!(c.m(), 0);
        assert_eq!(Graph::empty(3).complement(), Graph::complete(3));
        let p3 = Graph::path(3).complement();
        assert_eq!(p3.edge_list(), vec![Edge(0, 2)]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map.to_parent, vec![0, 1, 2]);
        assert_eq!(map.local(3), None);

        let (leaves, _) = Graph::star(3).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(leaves, Graph::empty(3));

        // K_7 plus a vertex y adjacent to {0, 1}: N[0] is the whole graph.
        let g = Graph::complete(7).with_extra(1, &[(7, 0), (7, 1)]).unwrap();
        let closed = g.closed_neighborhood(0);
        let (h, _) = g.induced_subgraph(&closed).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(h.m(), 23);

        assert_eq!(Graph::complete(3).induced_subgraph(&[]), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn construction_rejects_loops_and_collapses_duplicates() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange(2)));
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }
}

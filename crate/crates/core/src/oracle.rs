//! Brute-force ground truth used by tests, fuzzing and `verify`.
//!
//! Nothing here calls into the colorers or the classification code. Search
//! order is static (lexicographic edges, degree-sorted vertices) and the only
//! pruning is a pair of counting arguments that hold for every coloring.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size guards for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub chromatic_index_n: usize,
    pub total_chromatic_n: usize,
    pub stretch_n: usize,
    pub matching_m: usize,
    pub overfull_full_scan_n: usize,
    pub overfull_neighborhood_scan_n: usize,
    pub node_cap: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            chromatic_index_n: 14,
            total_chromatic_n: 14,
            stretch_n: 9,
            matching_m: 24,
            overfull_full_scan_n: 10,
            overfull_neighborhood_scan_n: 14,
            node_cap: 500_000_000,
        }
    }
}

fn guard(actual: usize, cap: usize, what: &str) -> Result<()> {
    if actual > cap {
        Err(Error::OracleGuard(format!("{what} {actual} exceeds cap {cap}")))
    } else {
        Ok(())
    }
}

fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in edges_of(g) {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Exact chromatic index.
pub fn chromatic_index_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    guard(g.n(), caps.chromatic_index_n, "order")?;
    let edges = edges_of(g);
    if edges.is_empty() {
        return Ok(0);
    }
    let delta = g.delta();
    if some_subset_overfull(g.n(), &edges, delta) {
        return Ok(delta + 1);
    }
    let mut nodes = 0u64;
    if edge_colorable(g.n(), &edges, delta, caps.node_cap, &mut nodes)? {
        Ok(delta)
    } else {
        // Vizing: Δ+1 colors always suffice.
        Ok(delta + 1)
    }
}

/// A vertex subset spanning more than `k·⌊|S|/2⌋` edges cannot be `k`-edge-colored.
fn some_subset_overfull(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    (1u32..1 << n).any(|s| {
        let inside = edges.iter().filter(|&&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1).count();
        inside > k * (s.count_ones() as usize / 2)
    })
}

fn edge_colorable(
    n: usize,
    edges: &[(usize, usize)],
    k: usize,
    cap: u64,
    nodes: &mut u64,
) -> Result<bool> {
    let mut left = vec![0usize; n];
    for &(u, v) in edges {
        left[u] += 1;
        left[v] += 1;
    }
    let mut st = EdgePhase {
        k,
        edges,
        taken: vec![vec![false; k]; n],
        left,
        done: vec![false; edges.len()],
        opened: 0,
    };
    if !st.parity_ok() {
        return Ok(false);
    }
    st.go(edges.len(), cap, nodes)
}

/// Exact total chromatic number, searching budgets upward from `Δ+1`.
pub fn total_chromatic_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    guard(g.n(), caps.total_chromatic_n, "order")?;
    if g.n() == 0 {
        return Ok(0);
    }
    let delta = g.delta();
    let mut nodes = 0u64;
    if TotalOracle::new(g, delta + 1).run(caps.node_cap, &mut nodes)? {
        return Ok(delta + 1);
    }
    // Split graphs satisfy χ'' ≤ Δ+2, so refuting Δ+1 settles them.
    if is_split_by_degrees(g) {
        return Ok(delta + 2);
    }
    for k in delta + 2..=2 * delta + 1 {
        if TotalOracle::new(g, k).run(caps.node_cap, &mut nodes)? {
            return Ok(k);
        }
    }
    Err(Error::Internal("greedy bound 2Δ+1 not reached".into()))
}

/// Degree-sequence split test: with degrees sorted descending and `m` the
/// largest `i` with `d_i ≥ i - 1`, the graph is split iff
/// `Σ_{i≤m} d_i = m(m-1) + Σ_{i>m} d_i`.
fn is_split_by_degrees(g: &Graph) -> bool {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

struct TotalOracle {
    n: usize,
    k: usize,
    adj: Vec<Vec<bool>>,
    /// Vertices by degree descending, ties by id.
    order: Vec<usize>,
    /// For each prefix length `i`, `Σ_{v in prefix} (k-1-d_prefix(v))` and
    /// the members with positive spare.
    prefix_spare: Vec<(usize, Vec<bool>)>,
    vcolor: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl TotalOracle {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let adj = adjacency_matrix(g);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut prefix_spare = vec![(0, vec![false; n])];
        for i in 1..=n {
            let members = &order[..i];
            let mut total = 0;
            let mut positive = vec![false; n];
            for &v in members {
                let d = members.iter().filter(|&&w| adj[v][w]).count();
                let spare = (k - 1).saturating_sub(d);
                total += spare;
                positive[v] = spare > 0;
            }
            prefix_spare.push((total, positive));
        }
        TotalOracle { n, k, adj, order, prefix_spare, vcolor: vec![usize::MAX; n], edges: edges_of(g) }
    }

    fn run(&mut self, cap: u64, nodes: &mut u64) -> Result<bool> {
        self.color_vertex(0, 0, cap, nodes)
    }

    /// Parity test on the first `i` vertices of `order`, all colored.
    fn prefix_ok(&self, i: usize) -> bool {
        let (spare_total, positive) = &self.prefix_spare[i];
        let members = &self.order[..i];
        let mut odd = 0;
        for c in 0..self.k {
            let others = members.iter().filter(|&&v| self.vcolor[v] != c).count();
            if others % 2 == 1 {
                odd += 1;
                if !members.iter().any(|&v| self.vcolor[v] != c && positive[v]) {
                    return false;
                }
            }
        }
        odd <= *spare_total
    }

    fn color_vertex(&mut self, i: usize, used: usize, cap: u64, nodes: &mut u64) -> Result<bool> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::BudgetExhausted { nodes: *nodes });
        }
        if i == self.n {
            return self.color_edges(cap, nodes);
        }
        let v = self.order[i];
        for c in 0..(used + 1).min(self.k) {
            if (0..self.n).any(|w| self.adj[v][w] && self.vcolor[w] == c) {
                continue;
            }
            self.vcolor[v] = c;
            if self.prefix_ok(i + 1) && self.color_vertex(i + 1, used.max(c + 1), cap, nodes)? {
                return Ok(true);
            }
            self.vcolor[v] = usize::MAX;
        }
        Ok(false)
    }

    fn color_edges(&self, cap: u64, nodes: &mut u64) -> Result<bool> {
        let mut taken = vec![vec![false; self.k]; self.n];
        let mut left = vec![0usize; self.n];
        for v in 0..self.n {
            taken[v][self.vcolor[v]] = true;
        }
        for &(u, v) in &self.edges {
            left[u] += 1;
            left[v] += 1;
        }
        let done = vec![false; self.edges.len()];
        // The vertex pass opens colors in order, so they form a prefix.
        let opened = self.vcolor.iter().max().map_or(0, |&c| c + 1);
        let mut st = EdgePhase { k: self.k, edges: &self.edges, taken, left, done, opened };
        if !st.parity_ok() {
            return Ok(false);
        }
        st.go(self.edges.len(), cap, nodes)
    }
}

struct EdgePhase<'a> {
    k: usize,
    edges: &'a [(usize, usize)],
    taken: Vec<Vec<bool>>,
    left: Vec<usize>,
    done: Vec<bool>,
    /// Colors `0..opened` appear somewhere; the rest are interchangeable.
    opened: usize,
}

impl EdgePhase<'_> {
    /// Every color still free at an odd number of vertices leaves one of
    /// them without it at the end; each vertex can absorb at most its surplus.
    fn parity_ok(&self) -> bool {
        let n = self.taken.len();
        let mut surplus = vec![0usize; n];
        for v in 0..n {
            let free = self.taken[v].iter().filter(|&&t| !t).count();
            if free < self.left[v] {
                return false;
            }
            surplus[v] = free - self.left[v];
        }
        let mut odd = 0;
        for c in 0..self.k {
            let holders: Vec<usize> = (0..n).filter(|&v| !self.taken[v][c]).collect();
            if holders.len() % 2 == 1 {
                odd += 1;
                if holders.iter().all(|&v| surplus[v] == 0) {
                    return false;
                }
            }
        }
        odd <= surplus.iter().sum::<usize>()
    }

    /// Picks the uncolored edge with the fewest usable colors, lowest index first.
    fn go(&mut self, left: usize, cap: u64, nodes: &mut u64) -> Result<bool> {
        if left == 0 {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::BudgetExhausted { nodes: *nodes });
        }
        let mut pick = None;
        let mut fewest = (usize::MAX, usize::MAX);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.done[i] {
                continue;
            }
            let usable = (0..self.k).filter(|&c| !self.taken[u][c] && !self.taken[v][c]).count();
            let usable = (usable, usize::MAX - (self.left[u] + self.left[v]));
            if usable < fewest {
                fewest = usable;
                pick = Some(i);
            }
        }
        let i = pick.expect("an uncolored edge remains");
        let (u, v) = self.edges[i];
        self.done[i] = true;
        let opened = self.opened;
        for c in 0..self.k.min(opened + 1) {
            if self.taken[u][c] || self.taken[v][c] {
                continue;
            }
            self.taken[u][c] = true;
            self.taken[v][c] = true;
            self.left[u] -= 1;
            self.left[v] -= 1;
            self.opened = opened.max(c + 1);
            if self.parity_ok() && self.go(left - 1, cap, nodes)? {
                return Ok(true);
            }
            self.opened = opened;
            self.taken[u][c] = false;
            self.taken[v][c] = false;
            self.left[u] += 1;
            self.left[v] += 1;
        }
        self.done[i] = false;
        Ok(false)
    }
}

/// Exact stretch index by spanning-tree enumeration.
pub fn stretch_index_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    guard(g.n(), caps.stretch_n, "order")?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = edges_of(g);
    if edges.len() + 1 == g.n() {
        return Ok(1);
    }
    let mut t = 2;
    loop {
        let mut chosen = Vec::new();
        if tree_within(g.n(), &edges, 0, &mut chosen, t) {
            return Ok(t);
        }
        t += 1;
    }
}

fn forest_distance(n: usize, forest: &[(usize, usize)], s: usize, target: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut frontier = vec![s];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            for &(a, b) in forest {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    (dist[target] != usize::MAX).then_some(dist[target])
}

/// Include/exclude over edges in order. An excluded edge whose endpoints are
/// already joined in the forest has its final tree distance fixed, so it can
/// be checked immediately.
fn tree_within(
    n: usize,
    edges: &[(usize, usize)],
    i: usize,
    chosen: &mut Vec<(usize, usize)>,
    t: usize,
) -> bool {
    if chosen.len() + 1 == n {
        return edges.iter().all(|&(u, v)| {
            forest_distance(n, chosen, u, v).is_some_and(|d| d <= t)
        });
    }
    if i == edges.len() || edges.len() - i < n - 1 - chosen.len() {
        return false;
    }
    let (u, v) = edges[i];
    match forest_distance(n, chosen, u, v) {
        Some(d) => d <= t && tree_within(n, edges, i + 1, chosen, t),
        None => {
            chosen.push((u, v));
            if tree_within(n, edges, i + 1, chosen, t) {
                return true;
            }
            chosen.pop();
            tree_within(n, edges, i + 1, chosen, t)
        }
    }
}

/// Matching number by include/exclude recursion over edges.
pub fn max_matching_brute(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    let edges = edges_of(g);
    guard(edges.len(), caps.matching_m, "edge count")?;
    fn best(edges: &[(usize, usize)], i: usize, covered: &mut Vec<bool>) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = best(edges, i + 1, covered);
        let (u, v) = edges[i];
        if covered[u] || covered[v] {
            return skip;
        }
        covered[u] = true;
        covered[v] = true;
        let take = 1 + best(edges, i + 1, covered);
        covered[u] = false;
        covered[v] = false;
        skip.max(take)
    }
    Ok(best(&edges, 0, &mut vec![false; g.n()]))
}

/// Whether some subgraph with the same maximum degree is overfull. Graphs up
/// to the full-scan cap try every vertex subset; larger ones up to the
/// neighborhood cap try the closed neighborhoods of maximum-degree vertices.
pub fn subgraph_overfull_brute(g: &Graph, caps: &OracleCaps) -> Result<bool> {
    let n = g.n();
    if n <= caps.overfull_full_scan_n {
        return Ok(full_scan(g));
    }
    guard(n, caps.overfull_neighborhood_scan_n, "order")?;
    Ok(neighborhood_scan(g))
}

fn overfull_with_delta(adj: &[Vec<bool>], members: &[usize], delta: usize) -> bool {
    let mut m = 0;
    let mut local_max = 0;
    for &v in members {
        let d = members.iter().filter(|&&w| adj[v][w]).count();
        local_max = local_max.max(d);
        m += d;
    }
    m /= 2;
    local_max == delta && m > delta * (members.len() / 2)
}

fn full_scan(g: &Graph) -> bool {
    let n = g.n();
    let adj = adjacency_matrix(g);
    let delta = g.delta();
    (1u32..1 << n).any(|s| {
        let members: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        overfull_with_delta(&adj, &members, delta)
    })
}

fn neighborhood_scan(g: &Graph) -> bool {
    let n = g.n();
    let adj = adjacency_matrix(g);
    let delta = g.delta();
    (0..n).filter(|&v| g.degree(v) == delta).any(|v| {
        let members: Vec<usize> = (0..n).filter(|&w| w == v || adj[v][w]).collect();
        overfull_with_delta(&adj, &members, delta)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    fn sigma3_witness() -> Graph {
        Graph::complete(4).with_extra(2, &[(4, 0), (4, 1), (5, 2), (5, 3)]).unwrap()
    }

    fn k7_y1_y2() -> Graph {
        Graph::complete(7).with_extra(2, &[(7, 0), (7, 1), (8, 0), (8, 2)]).unwrap()
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index_exact(&Graph::complete(3), &caps()), Ok(3));
        assert_eq!(chromatic_index_exact(&Graph::complete(4), &caps()), Ok(3));
        assert_eq!(chromatic_index_exact(&Graph::complete(7), &caps()), Ok(7));
        assert_eq!(chromatic_index_exact(&k7_y1_y2(), &caps()), Ok(8));
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(chromatic_index_exact(&petersen, &caps()), Ok(4));
        let big = Graph::complete(15);
        assert!(matches!(chromatic_index_exact(&big, &caps()), Err(Error::OracleGuard(_))));
    }

    #[test]
    fn total_chromatic_examples() {
        assert_eq!(total_chromatic_exact(&Graph::complete(4), &caps()), Ok(5));
        assert_eq!(total_chromatic_exact(&Graph::complete(3), &caps()), Ok(3));
        let h7 = Graph::complete(5).with_extra(1, &[(5, 0), (5, 1), (5, 2)]).unwrap();
        assert_eq!(total_chromatic_exact(&h7, &caps()), Ok(6));
        let h6p = Graph::complete(5).with_extra(2, &[(5, 0), (5, 1), (5, 2), (5, 3), (5, 6)]).unwrap();
        assert_eq!(total_chromatic_exact(&h6p, &caps()), Ok(7));
        let k4pp = Graph::complete(4).with_extra(2, &[(0, 4), (0, 5)]).unwrap();
        assert_eq!(total_chromatic_exact(&k4pp, &caps()), Ok(6));
    }

    #[test]
    fn stretch_examples() {
        assert_eq!(stretch_index_exact(&Graph::path(5), &caps()), Ok(1));
        assert_eq!(stretch_index_exact(&Graph::star(4), &caps()), Ok(1));
        assert_eq!(stretch_index_exact(&Graph::complete(5), &caps()), Ok(2));
        assert_eq!(stretch_index_exact(&sigma3_witness(), &caps()), Ok(3));
        assert_eq!(stretch_index_exact(&Graph::cycle(5), &caps()), Ok(4));
    }

    #[test]
    fn split_degree_test() {
        assert!(is_split_by_degrees(&Graph::complete(5)));
        assert!(is_split_by_degrees(&sigma3_witness()));
        assert!(!is_split_by_degrees(&Graph::cycle(4)));
        assert!(!is_split_by_degrees(&Graph::cycle(5)));
        assert!(!is_split_by_degrees(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(max_matching_brute(&Graph::complete(4), &caps()), Ok(2));
        assert_eq!(max_matching_brute(&Graph::cycle(5), &caps()), Ok(2));
        assert_eq!(max_matching_brute(&Graph::path(2), &caps()), Ok(1));
    }

    #[test]
    fn overfull_examples() {
        assert_eq!(subgraph_overfull_brute(&Graph::complete(7), &caps()), Ok(true));
        assert_eq!(subgraph_overfull_brute(&Graph::complete(4), &caps()), Ok(false));
        assert_eq!(subgraph_overfull_brute(&k7_y1_y2(), &caps()), Ok(false));
        assert!(full_scan(&Graph::complete(7)));
        assert!(!neighborhood_scan(&k7_y1_y2()));
    }
}

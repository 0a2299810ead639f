//! Exact backtracking colorers with a node budget.
//!
//! Both searches branch on the most constrained element (fewest available
//! colors, then larger degree, then smaller id), try colors in ascending
//! order and only open a new color when every used one is blocked.
//!
//! Pruning relies on a parity count that holds for every proper coloring:
//! for a color `c`, let `W_c` be the vertices where `c` is still free. Edges
//! colored `c` later cover an even subset of `W_c`, so an odd `W_c` forces at
//! least one vertex to finish without `c`. Each vertex can skip at most
//! `free(v) - uncolored(v)` colors, which bounds the number of odd classes.

use super::{Color, EdgeColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest palette the searches accept.
pub const MAX_SEARCH_COLORS: usize = 128;

/// Node budget for one search call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_cap: u64,
}

impl SearchLimits {
    pub const DEFAULT_NODE_CAP: u64 = 10_000_000;
    pub const ENV_VAR: &'static str = "SPLITCOLOR_NODE_CAP";

    /// Reads the cap from `SPLITCOLOR_NODE_CAP`, falling back to the default.
    pub fn from_env() -> Self {
        let node_cap = std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_NODE_CAP);
        SearchLimits { node_cap }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { node_cap: Self::DEFAULT_NODE_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility<T> {
    Colored(T),
    Infeasible,
}

impl<T> Feasibility<T> {
    pub fn colored(self) -> Option<T> {
        match self {
            Feasibility::Colored(c) => Some(c),
            Feasibility::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Feasibility::Infeasible)
    }
}

type Mask = u128;

fn low_bits(k: usize) -> Mask {
    if k >= 128 {
        Mask::MAX
    } else {
        (1 << k) - 1
    }
}

struct Exhausted;

struct Counter {
    nodes: u64,
    cap: u64,
}

impl Counter {
    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.cap {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

/// Edge assignment search over a fixed palette. Vertex colors, if any, are
/// pre-loaded into `used` and are never revisited here.
struct EdgeSearch<'a> {
    edges: Vec<Edge>,
    weight: Vec<usize>,
    color: Vec<u8>,
    used: Vec<Mask>,
    remaining: Vec<usize>,
    full: Mask,
    g: &'a Graph,
}

impl<'a> EdgeSearch<'a> {
    fn new(g: &'a Graph, budget: usize, vertex_colors: Option<&[u8]>) -> Self {
        let edges = g.edge_list();
        let weight = edges.iter().map(|e| g.degree(e.0) + g.degree(e.1)).collect();
        let used = match vertex_colors {
            Some(vc) => vc.iter().map(|&c| 1 << (c - 1)).collect(),
            None => vec![0; g.n()],
        };
        EdgeSearch {
            color: vec![0; edges.len()],
            edges,
            weight,
            used,
            remaining: (0..g.n()).map(|v| g.degree(v)).collect(),
            full: low_bits(budget),
            g,
        }
    }

    fn available(&self, i: usize) -> Mask {
        let e = self.edges[i];
        self.full & !self.used[e.0] & !self.used[e.1]
    }

    fn select(&self) -> Option<(usize, Mask)> {
        let mut best: Option<(usize, Mask, u32)> = None;
        for i in 0..self.edges.len() {
            if self.color[i] != 0 {
                continue;
            }
            let avail = self.available(i);
            let count = avail.count_ones();
            let better = match best {
                None => true,
                Some((j, _, c)) => count < c || (count == c && self.weight[i] > self.weight[j]),
            };
            if better {
                best = Some((i, avail, count));
                if count == 0 {
                    break;
                }
            }
        }
        best.map(|(i, avail, _)| (i, avail))
    }

    fn parity_ok(&self) -> bool {
        let mut odd: Mask = 0;
        let mut has_slack: Mask = 0;
        let mut slack_total: u32 = 0;
        for v in 0..self.g.n() {
            let free = self.full & !self.used[v];
            let f = free.count_ones();
            let r = self.remaining[v] as u32;
            if f < r {
                return false;
            }
            odd ^= free;
            if f > r {
                has_slack |= free;
                slack_total += f - r;
            }
        }
        odd.count_ones() <= slack_total && odd & !has_slack == 0
    }

    fn assign(&mut self, i: usize, c: usize) {
        let e = self.edges[i];
        self.color[i] = c as u8;
        self.used[e.0] |= 1 << (c - 1);
        self.used[e.1] |= 1 << (c - 1);
        self.remaining[e.0] -= 1;
        self.remaining[e.1] -= 1;
    }

    fn unassign(&mut self, i: usize, c: usize) {
        let e = self.edges[i];
        self.color[i] = 0;
        self.used[e.0] &= !(1 << (c - 1));
        self.used[e.1] &= !(1 << (c - 1));
        self.remaining[e.0] += 1;
        self.remaining[e.1] += 1;
    }

    fn solve(
        &mut self,
        left: usize,
        max_used: usize,
        counter: &mut Counter,
    ) -> std::result::Result<bool, Exhausted> {
        if left == 0 {
            return Ok(true);
        }
        counter.tick()?;
        let Some((i, avail)) = self.select() else {
            return Ok(true);
        };
        let mut options = avail & low_bits(max_used + 1);
        while options != 0 {
            let c = options.trailing_zeros() as usize + 1;
            options &= options - 1;
            self.assign(i, c);
            if self.parity_ok() && self.solve(left - 1, max_used.max(c), counter)? {
                return Ok(true);
            }
            self.unassign(i, c);
        }
        Ok(false)
    }

    fn coloring(&self) -> EdgeColoring {
        EdgeColoring {
            edges: self
                .edges
                .iter()
                .zip(&self.color)
                .map(|(&e, &c)| (e, c as Color))
                .collect(),
        }
    }
}

/// `|E(S)| > k·⌊|S|/2⌋` for some vertex set `S`: every color class meets `S`
/// in a matching, so no `k`-edge-coloring exists. All subsets are scanned up
/// to 16 vertices; larger graphs check the whole graph and closed neighborhoods.
pub fn matching_capacity_exceeded(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= 16 {
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let mut edges_in = vec![0u32; 1 << n];
        for s in 1usize..1 << n {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            edges_in[s] = edges_in[rest] + (adj[v] & rest as u32).count_ones();
            let size = s.count_ones() as usize;
            if edges_in[s] as usize > k * (size / 2) {
                return true;
            }
        }
        return false;
    }
    let whole = g.m() > k * (n / 2);
    whole
        || (0..n).any(|v| {
            let closed = g.closed_neighborhood(v);
            let (h, _) = g.induced_subgraph(&closed).expect("nonempty");
            h.m() > k * (h.n() / 2)
        })
}

/// Exact search for an edge coloring with at most `budget` colors.
pub fn edge_color_exact(
    g: &Graph,
    budget: usize,
    limits: SearchLimits,
) -> Result<Feasibility<EdgeColoring>> {
    let delta = g.delta();
    if g.m() == 0 {
        return Ok(Feasibility::Colored(EdgeColoring::default()));
    }
    if budget < delta {
        return Ok(Feasibility::Infeasible);
    }
    if budget > delta {
        return Ok(Feasibility::Colored(super::edge_color_delta_plus_one(g)));
    }
    if budget > MAX_SEARCH_COLORS {
        return Err(Error::Precondition(format!(
            "exact search supports at most {MAX_SEARCH_COLORS} colors"
        )));
    }
    if matching_capacity_exceeded(g, budget) {
        return Ok(Feasibility::Infeasible);
    }
    let mut search = EdgeSearch::new(g, budget, None);
    let mut counter = Counter { nodes: 0, cap: limits.node_cap };
    if !search.parity_ok() {
        return Ok(Feasibility::Infeasible);
    }
    let left = search.edges.len();
    match search.solve(left, 0, &mut counter) {
        Ok(true) => Ok(Feasibility::Colored(search.coloring())),
        Ok(false) => Ok(Feasibility::Infeasible),
        Err(Exhausted) => Err(Error::BudgetExhausted { nodes: counter.nodes }),
    }
}

/// A vertex set whose coloring is checked as soon as all its members are colored.
struct Probe {
    members: Vec<usize>,
    /// `k - 1 - d_S(v)` per member.
    spare: Vec<usize>,
    spare_total: usize,
}

impl Probe {
    fn new(g: &Graph, members: Vec<usize>, k: usize) -> Self {
        let mut inside = vec![false; g.n()];
        members.iter().for_each(|&v| inside[v] = true);
        let spare: Vec<usize> = members
            .iter()
            .map(|&v| {
                let d = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
                (k - 1).saturating_sub(d)
            })
            .collect();
        let spare_total = spare.iter().sum();
        Probe { members, spare, spare_total }
    }

    /// Parity test restricted to `G[S]` for a complete vertex coloring of `S`.
    fn passes(&self, vcol: &[u8], k: usize) -> bool {
        let size = self.members.len();
        let mut same = vec![0usize; k + 1];
        for &v in &self.members {
            same[vcol[v] as usize] += 1;
        }
        let mut odd = 0;
        for c in 1..=k {
            if (size - same[c]) % 2 == 1 {
                odd += 1;
                let covered = self
                    .members
                    .iter()
                    .zip(&self.spare)
                    .any(|(&v, &s)| s > 0 && vcol[v] as usize != c);
                if !covered {
                    return false;
                }
            }
        }
        odd <= self.spare_total
    }
}

struct TotalSearch<'a> {
    g: &'a Graph,
    k: usize,
    vcol: Vec<u8>,
    probes: Vec<Probe>,
    /// Probe indices per vertex, and uncolored member counts per probe.
    probes_of: Vec<Vec<usize>>,
    pending: Vec<usize>,
    found: Option<TotalColoring>,
}

impl<'a> TotalSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        let mut sets: Vec<Vec<usize>> = vec![(0..n).collect()];
        let core: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 1).collect();
        if !core.is_empty() {
            sets.push(core);
        }
        sets.extend((0..n).map(|v| g.closed_neighborhood(v)));
        sets.sort();
        sets.dedup();
        let probes: Vec<Probe> = sets.into_iter().map(|s| Probe::new(g, s, k)).collect();
        let mut probes_of = vec![Vec::new(); n];
        for (i, p) in probes.iter().enumerate() {
            for &v in &p.members {
                probes_of[v].push(i);
            }
        }
        let pending = probes.iter().map(|p| p.members.len()).collect();
        TotalSearch { g, k, vcol: vec![0; n], probes, probes_of, pending, found: None }
    }

    fn neighbor_colors(&self, v: usize) -> Mask {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.vcol[w] != 0)
            .fold(0, |m, &w| m | 1 << (self.vcol[w] - 1))
    }

    fn select(&self) -> Option<(usize, Mask)> {
        let mut best: Option<(usize, Mask, u32)> = None;
        for v in 0..self.g.n() {
            if self.vcol[v] != 0 {
                continue;
            }
            let seen = self.neighbor_colors(v);
            let sat = seen.count_ones();
            let better = match best {
                None => true,
                Some((u, _, s)) => sat > s || (sat == s && self.g.degree(v) > self.g.degree(u)),
            };
            if better {
                best = Some((v, seen, sat));
            }
        }
        best.map(|(v, seen, _)| (v, seen))
    }

    fn solve(
        &mut self,
        left: usize,
        max_used: usize,
        counter: &mut Counter,
    ) -> std::result::Result<bool, Exhausted> {
        counter.tick()?;
        if left == 0 {
            return self.color_edges(counter);
        }
        let (v, seen) = self.select().expect("an uncolored vertex remains");
        let mut options = low_bits(self.k) & !seen & low_bits(max_used + 1);
        while options != 0 {
            let c = options.trailing_zeros() as usize + 1;
            options &= options - 1;
            self.vcol[v] = c as u8;
            let mut ok = true;
            for &p in &self.probes_of[v] {
                self.pending[p] -= 1;
                if self.pending[p] == 0 && ok && !self.probes[p].passes(&self.vcol, self.k) {
                    ok = false;
                }
            }
            let done = ok && self.solve(left - 1, max_used.max(c), counter)?;
            for &p in &self.probes_of[v] {
                self.pending[p] += 1;
            }
            if done {
                return Ok(true);
            }
            self.vcol[v] = 0;
        }
        Ok(false)
    }

    fn color_edges(&mut self, counter: &mut Counter) -> std::result::Result<bool, Exhausted> {
        let mut edges = EdgeSearch::new(self.g, self.k, Some(&self.vcol));
        if !edges.parity_ok() {
            return Ok(false);
        }
        let max_used = self.vcol.iter().copied().max().unwrap_or(0) as usize;
        let left = edges.edges.len();
        if edges.solve(left, max_used, counter)? {
            let e = edges.coloring();
            self.found = Some(TotalColoring {
                vertices: self.vcol.iter().enumerate().map(|(v, &c)| (v, c as Color)).collect(),
                edges: e.edges,
            });
            return Ok(true);
        }
        Ok(false)
    }
}

/// Exact search for a total coloring with at most `budget` colors: vertices
/// first, each complete vertex coloring screened by the parity test on the
/// whole graph, the pendant-free core and every closed neighborhood, then
/// edges.
pub fn total_color_budget(
    g: &Graph,
    budget: usize,
    limits: SearchLimits,
) -> Result<Feasibility<TotalColoring>> {
    if g.n() == 0 {
        return Ok(Feasibility::Colored(TotalColoring::default()));
    }
    let delta = g.delta();
    if budget < delta + 1 {
        return Ok(Feasibility::Infeasible);
    }
    if delta + 1 > MAX_SEARCH_COLORS {
        return Err(Error::Precondition(format!(
            "exact search supports at most {MAX_SEARCH_COLORS} colors"
        )));
    }
    let k = budget.min(MAX_SEARCH_COLORS);
    let mut search = TotalSearch::new(g, k);
    let mut counter = Counter { nodes: 0, cap: limits.node_cap };
    match search.solve(g.n(), 0, &mut counter) {
        Ok(true) => Ok(Feasibility::Colored(search.found.take().expect("recorded on success"))),
        Ok(false) => Ok(Feasibility::Infeasible),
        Err(Exhausted) => Err(Error::BudgetExhausted { nodes: counter.nodes }),
    }
}

/// Edge phase only: extends a fixed proper vertex coloring to a total
/// coloring within `budget`.
pub fn total_color_with_vertices(
    g: &Graph,
    vertex_colors: &[Color],
    budget: usize,
    limits: SearchLimits,
) -> Result<Feasibility<TotalColoring>> {
    if vertex_colors.len() != g.n() {
        return Err(Error::Precondition("one color per vertex expected".into()));
    }
    if budget > MAX_SEARCH_COLORS {
        return Err(Error::Precondition(format!(
            "exact search supports at most {MAX_SEARCH_COLORS} colors"
        )));
    }
    if vertex_colors.iter().any(|&c| c == 0 || c as usize > budget) {
        return Ok(Feasibility::Infeasible);
    }
    if g.edges().any(|e| vertex_colors[e.0] == vertex_colors[e.1]) {
        return Err(Error::Precondition("vertex coloring is not proper".into()));
    }
    let vcol: Vec<u8> = vertex_colors.iter().map(|&c| c as u8).collect();
    let mut search = EdgeSearch::new(g, budget, Some(&vcol));
    if !search.parity_ok() {
        return Ok(Feasibility::Infeasible);
    }
    let max_used = vcol.iter().copied().max().unwrap_or(0) as usize;
    let mut counter = Counter { nodes: 0, cap: limits.node_cap };
    let left = search.edges.len();
    match search.solve(left, max_used, &mut counter) {
        Ok(true) => Ok(Feasibility::Colored(TotalColoring {
            vertices: vertex_colors.iter().enumerate().map(|(v, &c)| (v, c)).collect(),
            edges: search.coloring().edges,
        })),
        Ok(false) => Ok(Feasibility::Infeasible),
        Err(Exhausted) => Err(Error::BudgetExhausted { nodes: counter.nodes }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_edge_coloring, verify_total_coloring};

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn edge_examples() {
        assert!(edge_color_exact(&Graph::complete(3), 2, limits()).unwrap().is_infeasible());
        assert!(edge_color_exact(&Graph::complete(7), 6, limits()).unwrap().is_infeasible());
        let k4 = Graph::complete(4);
        let c = edge_color_exact(&k4, 3, limits()).unwrap().colored().unwrap();
        assert_eq!(verify_edge_coloring(&k4, &c, 3), Ok(()));
    }

    #[test]
    fn petersen_needs_four() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(edge_color_exact(&g, 3, limits()).unwrap().is_infeasible());
    }

    #[test]
    fn total_examples() {
        let k4 = Graph::complete(4);
        assert!(total_color_budget(&k4, 4, limits()).unwrap().is_infeasible());
        let t = total_color_budget(&k4, 5, limits()).unwrap().colored().unwrap();
        assert_eq!(verify_total_coloring(&k4, &t, 5), Ok(()));

        let h7 = Graph::complete(5).with_extra(1, &[(5, 0), (5, 1), (5, 2)]).unwrap();
        let t = total_color_budget(&h7, 6, limits()).unwrap().colored().unwrap();
        assert_eq!(verify_total_coloring(&h7, &t, 6), Ok(()));
    }

    #[test]
    fn node_cap_is_reported() {
        let g = Graph::complete(9);
        let tiny = SearchLimits { node_cap: 3 };
        assert!(matches!(
            total_color_budget(&g, 10, tiny),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}

//! Maximum cardinality matching in general graphs (Edmonds' blossom search).

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched edges, ascending.
    pub matching: Vec<Edge>,
    pub size: usize,
}

impl MatchingResult {
    pub fn is_matching_of(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.size == self.matching.len()
            && self.matching.iter().all(|e| {
                let ok = g.has_edge(e.0, e.1) && !used[e.0] && !used[e.1];
                used[e.0] = true;
                used[e.1] = true;
                ok
            })
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut marked = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            marked[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if marked[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns a free vertex reached, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.in_queue.iter_mut().for_each(|q| *q = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching of `g` in O(n³).
pub fn max_matching(g: &Graph) -> MatchingResult {
    let mut state = Blossom::new(g);
    // Greedy warm start; the augmenting search fixes any suboptimal choices.
    for e in g.edges() {
        if state.mate[e.0] == NONE && state.mate[e.1] == NONE {
            state.mate[e.0] = e.1;
            state.mate[e.1] = e.0;
        }
    }
    for v in 0..g.n() {
        if state.mate[v] == NONE {
            if let Some(end) = state.find_path(v) {
                state.augment(end);
            }
        }
    }
    let matching: Vec<Edge> = (0..g.n())
        .filter(|&v| state.mate[v] != NONE && state.mate[v] > v)
        .map(|v| Edge(v, state.mate[v]))
        .collect();
    MatchingResult { size: matching.len(), matching }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(max_matching(&Graph::complete(4)).size, 2);
        assert_eq!(max_matching(&Graph::star(3)).size, 1);
        assert_eq!(max_matching(&Graph::cycle(5)).size, 2);
        assert_eq!(max_matching(&Graph::empty(3)).size, 0);
    }

    #[test]
    fn blossom_needed() {
        // Triangle 0-1-2 with tails 2-3 and 0-4 plus 3-5: greedy 0-1, 2-3 leaves 4,5 free.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (3, 5)]).unwrap();
        let r = max_matching(&g);
        assert_eq!(r.size, 3);
        assert!(r.is_matching_of(&g));
    }
}

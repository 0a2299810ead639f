use std::collections::BTreeMap;

use super::{Color, EdgeColoring};
use crate::graph::{Edge, Graph};

/// Working state: `at[v][c]` is the neighbor reached from `v` along color `c`.
struct Fans<'a> {
    g: &'a Graph,
    colors: usize,
    at: Vec<Vec<Option<usize>>>,
    color: BTreeMap<Edge, usize>,
}

impl<'a> Fans<'a> {
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free_color(&self, v: usize) -> usize {
        (1..=self.colors).find(|&c| self.is_free(v, c)).expect("degree below palette size")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
        self.color.insert(Edge::new(u, v), c);
    }

    fn unset(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color.remove(&Edge::new(u, v)) {
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.color.get(&Edge::new(u, v)).copied()
    }

    /// Maximal fan at `u` starting with the uncolored edge `(u, v)`.
    fn maximal_fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.g.n()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self.g.neighbors(u).iter().copied().find(|&w| {
                !in_fan[w]
                    && self.color_of(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    /// Swaps `c` and `d` along the maximal path from `u` that starts with a `d` edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut cur = u;
        let mut want = d;
        while let Some(next) = self.at[cur][want] {
            path.push((cur, next, want));
            cur = next;
            want = if want == d { c } else { d };
            if path.len() > self.g.m() {
                break;
            }
        }
        for &(a, b, _) in &path {
            self.unset(a, b);
        }
        for &(a, b, was) in &path {
            self.set(a, b, if was == d { c } else { d });
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| {
            self.color_of(u, w[1]).is_some_and(|c| self.is_free(w[0], c))
        })
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        let fan = self.maximal_fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        let idx = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan(u, &fan[..=i]))
            .expect("Vizing fan argument guarantees a rotation point");
        // Rotate the prefix: each fan edge takes the color of the next one.
        for i in 0..idx {
            let next = self.color_of(u, fan[i + 1]).expect("fan edges are colored");
            self.unset(u, fan[i + 1]);
            self.unset(u, fan[i]);
            self.set(u, fan[i], next);
        }
        self.set(u, fan[idx], d);
    }
}

/// Proper edge coloring with at most `Δ+1` colors by fan rotation and
/// alternating-path recoloring.
pub fn edge_color_delta_plus_one(g: &Graph) -> EdgeColoring {
    let colors = g.delta() + 1;
    let mut state = Fans {
        g,
        colors,
        at: vec![vec![None; colors + 1]; g.n()],
        color: BTreeMap::new(),
    };
    for e in g.edges() {
        state.color_edge(e.0, e.1);
    }
    EdgeColoring {
        edges: state.color.into_iter().map(|(e, c)| (e, c as Color)).collect(),
    }
}

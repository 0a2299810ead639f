//! Total colorings of graphs with a universal vertex.

use super::search::{total_color_with_vertices, Feasibility, SearchLimits};
use super::{Color, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::max_matching;
use crate::split::universal_vertex;

fn require_universal(g: &Graph) -> Result<()> {
    if g.n() == 0 || universal_vertex(g).is_none() {
        return Err(Error::Precondition("graph needs a universal vertex".into()));
    }
    Ok(())
}

/// Restriction of a total coloring of the complete graph on `N` vertices,
/// `N` the smallest odd number `≥ n`: edge `{a, b}` gets `(a + b) mod N`,
/// vertex `a` gets `2a mod N`, the one color missing at `a` in the edge
/// coloring of `K_N`. Uses `Δ+1` colors for odd order and `Δ+2` for even.
pub fn total_color_universal(g: &Graph) -> Result<TotalColoring> {
    require_universal(g)?;
    let n = g.n();
    let big = if n % 2 == 1 { n } else { n + 1 };
    let vertices = (0..n).map(|a| (a, ((2 * a) % big) as Color + 1)).collect();
    let edges = g.edges().map(|e| (e, ((e.0 + e.1) % big) as Color + 1)).collect();
    Ok(TotalColoring { vertices, edges }.compacted())
}

/// `n`-total coloring of an even-order graph with a universal vertex. The
/// vertex coloring is fixed up front: the two ends of each edge of a maximum
/// matching `M` of the complement share a color, every other vertex gets its
/// own. Counting the vertices a color class misses shows this vertex
/// coloring survives the parity bound exactly when
/// `|E(Ḡ)| + α'(Ḡ) ≥ n/2`; the edges are then found by exact search.
pub fn total_color_even_universal(g: &Graph, limits: SearchLimits) -> Result<Feasibility<TotalColoring>> {
    require_universal(g)?;
    let n = g.n();
    if n % 2 != 0 {
        return Err(Error::Precondition("graph needs even order".into()));
    }
    let pairs = max_matching(&g.complement()).matching;
    let mut vertex_colors: Vec<Color> = vec![0; n];
    let mut next: Color = 0;
    for e in &pairs {
        next += 1;
        vertex_colors[e.0] = next;
        vertex_colors[e.1] = next;
    }
    for c in vertex_colors.iter_mut().filter(|c| **c == 0) {
        next += 1;
        *c = next;
    }
    Ok(match total_color_with_vertices(g, &vertex_colors, n, limits)? {
        Feasibility::Colored(t) => Feasibility::Colored(t.compacted()),
        Feasibility::Infeasible => Feasibility::Infeasible,
    })
}

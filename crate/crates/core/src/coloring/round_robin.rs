use super::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::split::universal_vertex;

/// Round in which the pair `{a, b}` meets in the circle-method schedule of
/// `K_n` (`n` even): vertex `n-1` sits at the center, the others rotate.
fn round_of(n: usize, a: usize, b: usize) -> usize {
    let ring = n - 1;
    if a == ring {
        b
    } else if b == ring {
        a
    } else {
        // In round r, a meets b when a + b ≡ 2r (mod n-1).
        let sum = (a + b) % ring;
        // 2 is invertible mod an odd ring.
        (sum * (ring + 1) / 2) % ring
    }
}

/// Δ-edge coloring for even-order graphs with a universal vertex: restrict
/// the round-robin 1-factorization of `K_n` to `E(G)` and compact the palette.
pub fn edge_color_universal_even(g: &Graph) -> Result<EdgeColoring> {
    let n = g.n();
    if n % 2 != 0 || universal_vertex(g).is_none() {
        return Err(Error::Precondition(
            "round-robin coloring needs even order and a universal vertex".into(),
        ));
    }
    let edges = g
        .edges()
        .map(|Edge(u, v)| (Edge(u, v), round_of(n, u, v) as Color + 1))
        .collect();
    Ok(EdgeColoring { edges }.compacted())
}

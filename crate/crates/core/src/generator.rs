//! Seeded split-graph instances and the named catalog.
//!
//! Randomness comes from SplitMix64 (Steele, Lea, Flood 2014):
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. A value below `n` is `(next() * n) >> 64`
//! computed in 128 bits. Layout of a generated graph: clique `0..k`, then
//! the `q` independent vertices, then the `p` pendants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::SplitPartition;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaParity {
    Even,
    Odd,
    Any,
}

impl DeltaParity {
    pub fn accepts(self, delta: usize) -> bool {
        match self {
            DeltaParity::Even => delta % 2 == 0,
            DeltaParity::Odd => delta % 2 == 1,
            DeltaParity::Any => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorParams {
    pub clique_size: usize,
    pub independent_count: usize,
    pub pendant_count: usize,
    /// One clique vertex joins every independent vertex, so the pendant-free
    /// core keeps a universal vertex.
    pub force_universal: bool,
    pub delta_parity: DeltaParity,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn order(&self) -> usize {
        self.clique_size + self.independent_count + self.pendant_count
    }
}

const RETRIES: usize = 256;

/// Random connected split graph with a maximal clique side `0..k`.
pub fn random_split_graph(params: &GeneratorParams) -> Result<(Graph, SplitPartition)> {
    let k = params.clique_size;
    let q = params.independent_count;
    if k == 0 {
        return Err(Error::Generator("clique size must be at least 1".into()));
    }
    if q > 0 && k < 2 {
        return Err(Error::Generator(
            "independent vertices need a clique of size 2 or more (neighborhoods are proper subsets)"
                .into(),
        ));
    }
    let mut rng = SplitMix64::new(params.seed);
    for _ in 0..RETRIES {
        let g = draw(params, &mut rng);
        if params.delta_parity.accepts(g.delta()) {
            let n = g.n();
            let partition = if k == 1 && n > 1 {
                SplitPartition { clique: vec![0, 1], independent: (2..n).collect() }
            } else {
                SplitPartition { clique: (0..k).collect(), independent: (k..n).collect() }
            };
            return Ok((g, partition));
        }
    }
    Err(Error::Generator(format!(
        "no graph with {:?} maximum degree in {RETRIES} draws (k={k}, q={q}, p={})",
        params.delta_parity, params.pendant_count
    )))
}

fn draw(params: &GeneratorParams, rng: &mut SplitMix64) -> Graph {
    let k = params.clique_size;
    let q = params.independent_count;
    let mut edges: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    let hub = params.force_universal.then(|| rng.below(k));
    for y in k..k + q {
        let size = 1 + rng.below(k - 1);
        let mut pool: Vec<usize> = (0..k).collect();
        let mut picked = Vec::with_capacity(size);
        if let Some(h) = hub {
            pool.swap_remove(h);
            picked.push(h);
        }
        while picked.len() < size {
            let i = rng.below(pool.len());
            picked.push(pool.swap_remove(i));
        }
        edges.extend(picked.into_iter().map(|x| (x, y)));
    }
    for p in k + q..k + q + params.pendant_count {
        edges.push((rng.below(k), p));
    }
    Graph::from_edges(k + q + params.pendant_count, edges).expect("generated edges are simple")
}

/// Names accepted by [`named_instance`] besides the `K<n>` family.
pub const CATALOG: &[&str] =
    &["H6", "H7", "H6+p5", "K7+y1y2", "K4+p0p1", "K4+p0p0", "K3+y", "sigma3witness"];

/// Fixed instances:
///
/// * `K<n>`: complete graph on `0..n`.
/// * `H6`: `K_5` plus vertex 5 adjacent to 0..=3.
/// * `H7`: `K_5` plus vertex 5 adjacent to 0..=2.
/// * `H6+p5`: `H6` plus a pendant 6 on vertex 5.
/// * `K7+y1y2`: `K_7` plus 7 adjacent to {0, 1} and 8 adjacent to {0, 2}.
/// * `K4+p0p1`: `K_4` plus pendants 4 on 0 and 5 on 1.
/// * `K4+p0p0`: `K_4` plus pendants 4 and 5 on 0.
/// * `K3+y`: `K_3` plus 3 adjacent to {0, 1}.
/// * `sigma3witness`: `K_4` plus 4 adjacent to {0, 1} and 5 adjacent to {2, 3}.
pub fn named_instance(name: &str) -> Result<Graph> {
    let k = Graph::complete;
    let g = match name {
        "H6" => k(5).with_extra(1, &[(5, 0), (5, 1), (5, 2), (5, 3)]),
        "H7" => k(5).with_extra(1, &[(5, 0), (5, 1), (5, 2)]),
        "H6+p5" => k(5).with_extra(2, &[(5, 0), (5, 1), (5, 2), (5, 3), (5, 6)]),
        "K7+y1y2" => k(7).with_extra(2, &[(7, 0), (7, 1), (8, 0), (8, 2)]),
        "K4+p0p1" => k(4).with_extra(2, &[(0, 4), (1, 5)]),
        "K4+p0p0" => k(4).with_extra(2, &[(0, 4), (0, 5)]),
        "K3+y" => k(3).with_extra(1, &[(3, 0), (3, 1)]),
        "sigma3witness" => k(4).with_extra(2, &[(4, 0), (4, 1), (5, 2), (5, 3)]),
        _ => {
            let n = name
                .strip_prefix('K')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&n| (1..=64).contains(&n))
                .ok_or_else(|| Error::UnknownInstance(name.to_string()))?;
            Ok(k(n))
        }
    };
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::{recognize_split, stretch_class};

    fn params(k: usize, q: usize, p: usize, seed: u64) -> GeneratorParams {
        GeneratorParams {
            clique_size: k,
            independent_count: q,
            pendant_count: p,
            force_universal: false,
            delta_parity: DeltaParity::Any,
            seed,
        }
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0 as published with the reference implementation.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn examples() {
        let (g, sp) = random_split_graph(&params(4, 0, 0, 1)).unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(sp.clique, vec![0, 1, 2, 3]);

        let (g, sp) = random_split_graph(&params(1, 0, 4, 1)).unwrap();
        assert_eq!(g, Graph::star(4));
        assert!(sp.is_valid_for(&g) && sp.is_maximal(&g));
        assert_eq!(stretch_class(&g, &sp).unwrap().sigma, 1);

        let mut p = params(5, 2, 1, 7);
        p.force_universal = true;
        let (g, _) = random_split_graph(&p).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(stretch_class(&g, &sp).unwrap().sigma, 2);
    }

    #[test]
    fn deterministic_and_valid() {
        for seed in 0..200 {
            let p = params(2 + seed as usize % 6, seed as usize % 4, seed as usize % 3, seed);
            let (a, sp) = random_split_graph(&p).unwrap();
            let (b, _) = random_split_graph(&p).unwrap();
            assert_eq!(a, b);
            assert!(a.is_connected());
            assert!(recognize_split(&a).is_ok());
            assert!(sp.is_valid_for(&a) && sp.is_maximal(&a), "seed {seed}");
        }
    }

    #[test]
    fn parity_constraints() {
        let mut p = params(4, 0, 0, 3);
        p.delta_parity = DeltaParity::Even;
        assert!(matches!(random_split_graph(&p), Err(Error::Generator(_))));
        p = params(5, 3, 2, 3);
        p.delta_parity = DeltaParity::Odd;
        assert_eq!(random_split_graph(&p).unwrap().0.delta() % 2, 1);
        p.clique_size = 1;
        assert!(random_split_graph(&p).is_err());
    }

    #[test]
    fn catalog() {
        assert_eq!(named_instance("K7").unwrap(), Graph::complete(7));
        assert_eq!(named_instance("H6").unwrap().m(), 14);
        assert!(matches!(named_instance("K0"), Err(Error::UnknownInstance(_))));
        assert!(matches!(named_instance("nope"), Err(Error::UnknownInstance(_))));
        for name in CATALOG {
            let g = named_instance(name).unwrap();
            assert!(g.is_connected() && recognize_split(&g).is_ok(), "{name}");
        }
    }
}

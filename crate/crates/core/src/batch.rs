//! Seeded instance batches checked against the oracles.
//!
//! Instance `i` of a run with base seed `s` is drawn from its own seed
//! `instance_seed(s, i)`, so any single instance can be replayed without
//! regenerating the ones before it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::SearchLimits;
use crate::error::{Error, Result};
use crate::generator::{random_split_graph, DeltaParity, GeneratorParams, SplitMix64};
use crate::graph::Graph;
use crate::matching::max_matching;
use crate::oracle::{
    chromatic_index_exact, max_matching_brute, stretch_index_exact, subgraph_overfull_brute,
    total_chromatic_exact, OracleCaps,
};
use crate::overfull::neighborhood_overfull;
use crate::sigma2::{classify_edge_with, classify_total_with, EdgeVerdict, TotalVerdict};
use crate::split::{recognize_split, stretch_class};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..count).map(f)`, in index order, run on the rayon pool when asked
/// and compiled in.
pub fn map_indexed<T, F>(exec: Execution, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        _ => (0..count).map(f).collect(),
    }
}

pub fn instance_seed(base: u64, index: usize) -> u64 {
    SplitMix64::new(base ^ (index as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)).next_u64()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Edge,
    Total,
    Sigma,
    Matching,
    Chen,
    Overfull,
    Hilton,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Edge,
        Suite::Total,
        Suite::Sigma,
        Suite::Matching,
        Suite::Chen,
        Suite::Overfull,
        Suite::Hilton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Edge => "edge",
            Suite::Total => "total",
            Suite::Sigma => "sigma",
            Suite::Matching => "matching",
            Suite::Chen => "chen",
            Suite::Overfull => "overfull",
            Suite::Hilton => "hilton",
            Suite::All => "all",
        }
    }

    /// Largest order each suite's oracle handles.
    pub fn order_cap(self) -> usize {
        match self {
            Suite::Edge | Suite::Total => 12,
            Suite::Sigma => 8,
            Suite::Matching => 12,
            Suite::Chen | Suite::Overfull | Suite::Hilton => 10,
            Suite::All => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Connected split graphs whose pendant-free core has a universal vertex.
    Sigma2,
    /// Any connected split graph the generator produces.
    AnySplit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub seed: u64,
    pub params: GeneratorParams,
    pub graph: Graph,
}

const SAMPLE_ATTEMPTS: usize = 1024;

/// Draws generator parameters from `seed` until a graph of order at most
/// `max_n` passes `accept`.
pub fn sample<F>(seed: u64, max_n: usize, family: Family, parity: DeltaParity, accept: F) -> Result<Sample>
where
    F: Fn(&Graph) -> bool,
{
    let min_k = match family {
        Family::Sigma2 => 3,
        Family::AnySplit => 1,
    };
    if max_n < min_k {
        return Err(Error::Generator(format!("max order {max_n} below {min_k}")));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let k = min_k + rng.below(max_n - min_k + 1);
        let rest = max_n - k;
        let q = if k < 2 { 0 } else { rng.below(rest + 1) };
        let p = rng.below(rest - q + 1);
        let params = GeneratorParams {
            clique_size: k,
            independent_count: q,
            pendant_count: p,
            force_universal: family == Family::Sigma2,
            delta_parity: parity,
            seed: rng.next_u64(),
        };
        if let Ok((graph, _)) = random_split_graph(&params) {
            if accept(&graph) {
                return Ok(Sample { seed, params, graph });
            }
        }
    }
    Err(Error::Generator(format!("no acceptable instance from seed {seed}")))
}

/// What one instance produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub agree: bool,
    /// Short verdict label used for the per-suite tallies.
    pub label: String,
    pub detail: String,
}

impl CheckOutcome {
    fn new(agree: bool, label: impl Into<String>, detail: String) -> Self {
        CheckOutcome { agree, label: label.into(), detail }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub caps: OracleCaps,
    pub limits: SearchLimits,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { caps: OracleCaps::default(), limits: SearchLimits::from_env() }
    }
}

/// Edge classification against the chromatic index oracle.
pub fn check_edge(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let report = classify_edge_with(g, cfg.limits)?;
    let chi = chromatic_index_exact(g, &cfg.caps)?;
    let delta = g.delta();
    let agree = (report.verdict == EdgeVerdict::Class1) == (chi == delta);
    let label = format!("{:?}", report.verdict);
    Ok(CheckOutcome::new(agree, label, format!("verdict {:?}, oracle chi'={chi}, delta={delta}", report.verdict)))
}

/// Total classification against the total chromatic number oracle.
pub fn check_total(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let report = classify_total_with(g, cfg.limits)?;
    let chi = total_chromatic_exact(g, &cfg.caps)?;
    let delta = g.delta();
    let agree = (report.verdict == TotalVerdict::Type2) == (chi == delta + 2);
    let label = format!("{:?}", report.verdict);
    Ok(CheckOutcome::new(agree, label, format!("verdict {:?}, oracle chi''={chi}, delta={delta}", report.verdict)))
}

pub fn check_sigma(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let sp = recognize_split(g).map_err(|_| Error::NotSplit)?;
    let fast = stretch_class(g, &sp)?.sigma as usize;
    let exact = stretch_index_exact(g, &cfg.caps)?;
    Ok(CheckOutcome::new(fast == exact, format!("sigma={fast}"), format!("stretch_class {fast}, oracle {exact}")))
}

pub fn check_matching(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let fast = max_matching(g);
    let exact = max_matching_brute(g, &cfg.caps)?;
    let agree = fast.size == exact && fast.is_matching_of(g);
    Ok(CheckOutcome::new(agree, format!("size={exact}"), format!("blossom {}, oracle {exact}", fast.size)))
}

/// Even maximum degree implies total chromatic number `Δ+1`.
pub fn check_chen(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let chi = total_chromatic_exact(g, &cfg.caps)?;
    let delta = g.delta();
    Ok(CheckOutcome::new(chi == delta + 1, "even-delta", format!("oracle chi''={chi}, delta={delta}")))
}

/// Neighborhood-overfull (direct definition) against the full subset scan.
pub fn check_overfull(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let direct = neighborhood_overfull(g).is_some();
    let brute = subgraph_overfull_brute(g, &cfg.caps)?;
    Ok(CheckOutcome::new(
        direct == brute,
        if brute { "overfull" } else { "not-overfull" },
        format!("neighborhood {direct}, subgraph scan {brute}"),
    ))
}

/// Class 1 exactly when no subgraph of the same maximum degree is overfull.
pub fn check_hilton(g: &Graph, cfg: &CheckConfig) -> Result<CheckOutcome> {
    let report = classify_edge_with(g, cfg.limits)?;
    let brute = subgraph_overfull_brute(g, &cfg.caps)?;
    let agree = (report.verdict == EdgeVerdict::Class1) == !brute;
    Ok(CheckOutcome::new(
        agree,
        format!("{:?}", report.verdict),
        format!("verdict {:?}, subgraph overfull {brute}", report.verdict),
    ))
}

/// Draws instance `seed` for `suite` (not `All`) and checks it.
pub fn run_one(suite: Suite, seed: u64, max_n: usize, cfg: &CheckConfig) -> Result<(Sample, CheckOutcome)> {
    let n = max_n.min(suite.order_cap());
    let any = |_: &Graph| true;
    let s = match suite {
        Suite::Edge => sample(seed, n, Family::Sigma2, DeltaParity::Even, any)?,
        Suite::Total => sample(seed, n, Family::Sigma2, DeltaParity::Odd, any)?,
        Suite::Sigma => sample(seed, n, Family::AnySplit, DeltaParity::Any, any)?,
        Suite::Matching => sample_sparse(seed, n),
        Suite::Chen => sample(seed, n, Family::AnySplit, DeltaParity::Even, any)?,
        Suite::Overfull => sample(seed, n, Family::AnySplit, DeltaParity::Any, any)?,
        Suite::Hilton => sample(seed, n, Family::Sigma2, DeltaParity::Any, |g| 3 * g.delta() > g.n())?,
        Suite::All => return Err(Error::Precondition("run_one needs a single suite".into())),
    };
    let out = match suite {
        Suite::Edge => check_edge(&s.graph, cfg),
        Suite::Total => check_total(&s.graph, cfg),
        Suite::Sigma => check_sigma(&s.graph, cfg),
        Suite::Matching => check_matching(&s.graph, cfg),
        Suite::Chen => check_chen(&s.graph, cfg),
        Suite::Overfull => check_overfull(&s.graph, cfg),
        Suite::Hilton => check_hilton(&s.graph, cfg),
        Suite::All => unreachable!(),
    }?;
    Ok((s, out))
}

/// Arbitrary (not necessarily split) graph with at most 24 edges, for the
/// matching comparison.
fn sample_sparse(seed: u64, max_n: usize) -> Sample {
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.below(max_n.max(1));
    let density = 1 + rng.below(8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(10) < density && edges.len() < 24 {
                edges.push((u, v));
            }
        }
    }
    Sample {
        seed,
        params: GeneratorParams {
            clique_size: 0,
            independent_count: n,
            pendant_count: 0,
            force_universal: false,
            delta_parity: DeltaParity::Any,
            seed,
        },
        graph: Graph::from_edges(n, edges).expect("simple by construction"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub count: usize,
    pub max_n: usize,
    pub base_seed: u64,
    pub checked: usize,
    pub tallies: BTreeMap<String, usize>,
    pub disagreements: Vec<Disagreement>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.checked == self.count
    }

    /// Smallest-order failing instance, the one to replay first.
    pub fn minimal_reproduction(&self) -> Option<&Disagreement> {
        self.disagreements.iter().min_by_key(|d| (d.n, d.m, d.index))
    }
}

pub fn run_suite(
    suite: Suite,
    count: usize,
    max_n: usize,
    base_seed: u64,
    exec: Execution,
    cfg: &CheckConfig,
) -> Vec<SuiteReport> {
    if suite == Suite::All {
        return Suite::EACH
            .into_iter()
            .flat_map(|s| run_suite(s, count, max_n, base_seed, exec, cfg))
            .collect();
    }
    let results = map_indexed(exec, count, |i| {
        let seed = instance_seed(base_seed, i);
        (i, seed, run_one(suite, seed, max_n, cfg))
    });
    let mut tallies = BTreeMap::new();
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for (index, seed, result) in results {
        match result {
            Ok((s, out)) => {
                checked += 1;
                *tallies.entry(out.label).or_insert(0) += 1;
                if !out.agree {
                    disagreements.push(Disagreement {
                        index,
                        seed,
                        n: s.graph.n(),
                        m: s.graph.m(),
                        detail: out.detail,
                    });
                }
            }
            Err(e) => disagreements.push(Disagreement {
                index,
                seed,
                n: usize::MAX,
                m: usize::MAX,
                detail: format!("error: {e}"),
            }),
        }
    }
    vec![SuiteReport {
        suite,
        count,
        max_n: max_n.min(suite.order_cap()),
        base_seed,
        checked,
        tallies,
        disagreements,
    }]
}

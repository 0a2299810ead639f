use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use splitcolor::batch::{run_one, run_suite, CheckConfig, Execution, Suite};
use splitcolor::coloring::{verify_edge_coloring, verify_total_coloring, SearchLimits, Violation};
use splitcolor::generator::{named_instance, random_split_graph, DeltaParity, GeneratorParams};
use splitcolor::io::{
    emit_dimacs, emit_dot, emit_edge_coloring, emit_edge_list, emit_json, emit_total_coloring,
    parse_coloring, read_graph, LabeledGraph, ParsedColoring,
};
use splitcolor::report::{
    certificate_doc, certificate_text, classify_document, hilton_text, render_json, render_text,
    ClassifyMode,
};
use splitcolor::sigma2::{classify_edge_with, classify_total_with};
use splitcolor::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_SCOPE: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// Edge and total coloring classification for split graphs of stretch index 2.
///
/// Exit codes: 0 ok, 1 usage or parse error, 2 out of scope, 3 negative
/// verdict (Class 2 / Type 2), 4 verification failure or fuzz disagreement.
/// The exact-search node cap is read from SPLITCOLOR_NODE_CAP.
#[derive(Parser)]
#[command(name = "splitcolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the stretch index and/or the edge and total verdicts.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a Δ-edge or (Δ+1)-total coloring; exits 3 with a certificate instead when none exists.
    Color {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ColorMode::Edge)]
        mode: ColorMode,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        coloring: PathBuf,
        /// Defaults to the mode recorded in the coloring file.
        #[arg(long, value_enum)]
        mode: Option<ColorMode>,
        /// Defaults to Δ for edge colorings and Δ+1 for total colorings.
        #[arg(long)]
        max_colors: Option<usize>,
    },
    /// Compare classifiers with brute-force oracles on seeded random instances.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Run single-threaded.
        #[arg(long)]
        sequential: bool,
        /// Re-run one instance by its instance seed (as printed for a disagreement).
        #[arg(long)]
        replay: Option<u64>,
    },
    /// Print a seeded random split graph.
    Generate {
        #[arg(long, default_value_t = 4)]
        clique: usize,
        #[arg(long, default_value_t = 2)]
        independent: usize,
        #[arg(long, default_value_t = 0)]
        pendants: usize,
        /// Keep a vertex adjacent to the whole pendant-free core.
        #[arg(long)]
        force_universal: bool,
        #[arg(long, value_enum, default_value_t = Parity::Any)]
        parity: Parity,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphOut::Edgelist)]
        format: GraphOut,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph file: edge list, DIMACS, or JSON (detected).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in instance, e.g. K7, H6, K4+p0p1, sigma3witness.
    #[arg(long)]
    named: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Total,
    Sigma,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorMode {
    Edge,
    Total,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Even,
    Odd,
    Any,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    Edgelist,
    Json,
    Dimacs,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure carrying its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::Io(_)
            | Error::UnknownInstance(_)
            | Error::VertexOutOfRange(_)
            | Error::SelfLoop(_)
            | Error::Generator(_) => EXIT_USAGE,
            Error::OutOfScope(_)
            | Error::NotSplit
            | Error::Disconnected
            | Error::EmptyGraph
            | Error::TrivialGraph
            | Error::BudgetExhausted { .. } => EXIT_SCOPE,
            _ => EXIT_VERIFY,
        };
        Fail(code, e.to_string())
    }
}

type CmdResult = Result<(), Fail>;

fn load(source: &Source) -> Result<LabeledGraph, Fail> {
    match (&source.input, &source.named) {
        (Some(path), _) => Ok(read_graph(path)?),
        (None, Some(name)) => Ok(LabeledGraph::numbered(named_instance(name)?)),
        (None, None) => Err(Fail(EXIT_USAGE, "one of --input or --named is required".into())),
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> CmdResult {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn violation(lg: &LabeledGraph, v: &Violation) -> Fail {
    Fail(EXIT_VERIFY, format!("verification failed: {}", v.describe(|x| lg.label(x).to_string())))
}

fn classify(source: &Source, mode: Mode, format: Format) -> CmdResult {
    let lg = load(source)?;
    let mode = match mode {
        Mode::Edge => ClassifyMode::Edge,
        Mode::Total => ClassifyMode::Total,
        Mode::Sigma => ClassifyMode::Sigma,
        Mode::All => ClassifyMode::All,
    };
    let doc = classify_document(&lg, mode, SearchLimits::from_env())?;
    print!(
        "{}",
        match format {
            Format::Json => render_json(&doc),
            Format::Text => render_text(&doc),
        }
    );
    match doc.out_of_scope {
        Some(msg) => Err(Fail(EXIT_SCOPE, msg)),
        None => Ok(()),
    }
}

fn color(source: &Source, mode: ColorMode, out: Option<&PathBuf>, emit: Emit) -> CmdResult {
    let lg = load(source)?;
    let g = &lg.graph;
    let limits = SearchLimits::from_env();
    let text = match mode {
        ColorMode::Edge => {
            let r = classify_edge_with(g, limits)?;
            let Some(c) = r.coloring else {
                let cert = r.certificate.map(|c| certificate_text(&certificate_doc(&lg, &c)));
                println!("Class 2");
                println!("certificate: {}", cert.unwrap_or_else(|| "none".into()));
                return Err(Fail(EXIT_NEGATIVE, "Class 2: no Δ-edge coloring exists".into()));
            };
            verify_edge_coloring(g, &c, g.delta()).map_err(|v| violation(&lg, &v))?;
            match emit {
                Emit::Json => {
                    let text = emit_edge_coloring(&lg, &c);
                    match parse_coloring(&text, &lg)? {
                        ParsedColoring::Edge(back) if back == c => {}
                        _ => return Err(Fail(EXIT_VERIFY, "emitted coloring does not read back".into())),
                    }
                    text
                }
                Emit::Dot => emit_dot(&lg, None, &c.edges),
            }
        }
        ColorMode::Total => {
            let r = classify_total_with(g, limits)?;
            let Some(c) = r.coloring else {
                println!("Type 2");
                if let Some(w) = &r.hilton_witness {
                    println!("hilton witness: {}", hilton_text(w));
                }
                return Err(Fail(EXIT_NEGATIVE, "Type 2: no (Δ+1)-total coloring exists".into()));
            };
            verify_total_coloring(g, &c, g.delta() + 1).map_err(|v| violation(&lg, &v))?;
            match emit {
                Emit::Json => {
                    let text = emit_total_coloring(&lg, &c);
                    match parse_coloring(&text, &lg)? {
                        ParsedColoring::Total(back) if back == c => {}
                        _ => return Err(Fail(EXIT_VERIFY, "emitted coloring does not read back".into())),
                    }
                    text
                }
                Emit::Dot => emit_dot(&lg, Some(&c.vertices), &c.edges),
            }
        }
    };
    write_output(out, &text)
}

fn verify(source: &Source, coloring: &PathBuf, mode: Option<ColorMode>, max_colors: Option<usize>) -> CmdResult {
    let lg = load(source)?;
    let g = &lg.graph;
    let text = std::fs::read_to_string(coloring)
        .map_err(|e| Fail(EXIT_USAGE, format!("cannot read {}: {e}", coloring.display())))?;
    let parsed = parse_coloring(&text, &lg).map_err(|e| match e {
        Error::Parse { .. } => Fail(EXIT_USAGE, format!("{}: {e}", coloring.display())),
        other => Fail::from(other),
    })?;
    match (mode, &parsed) {
        (Some(ColorMode::Total), ParsedColoring::Edge(_)) | (Some(ColorMode::Edge), ParsedColoring::Total(_)) => {
            return Err(Fail(EXIT_VERIFY, "coloring mode does not match --mode".into()));
        }
        _ => {}
    }
    match parsed {
        ParsedColoring::Edge(c) => {
            let budget = max_colors.unwrap_or(g.delta());
            verify_edge_coloring(g, &c, budget).map_err(|v| violation(&lg, &v))?;
            println!("ok: proper edge coloring with {} colors (budget {budget})", c.color_count());
        }
        ParsedColoring::Total(c) => {
            let budget = max_colors.unwrap_or(g.delta() + 1);
            verify_total_coloring(g, &c, budget).map_err(|v| violation(&lg, &v))?;
            println!("ok: proper total coloring with {} colors (budget {budget})", c.color_count());
        }
    }
    Ok(())
}

fn fuzz(count: usize, max_n: usize, seed: u64, suite: Suite, sequential: bool, replay: Option<u64>) -> CmdResult {
    let cfg = CheckConfig::default();
    if let Some(instance) = replay {
        if suite == Suite::All {
            return Err(Fail(EXIT_USAGE, "--replay needs a single --suite".into()));
        }
        let (s, out) = run_one(suite, instance, max_n, &cfg)?;
        println!("replay suite={suite} instance-seed={instance} max-n={max_n}");
        print!("{}", emit_edge_list(&LabeledGraph::numbered(s.graph))?);
        println!("{}: {}", if out.agree { "agree" } else { "DISAGREE" }, out.detail);
        return if out.agree { Ok(()) } else { Err(Fail(EXIT_VERIFY, "disagreement reproduced".into())) };
    }
    let exec = if sequential { Execution::Sequential } else { Execution::default() };
    println!("fuzz seed={seed} count={count} max-n={max_n} suite={suite} exec={exec:?}");
    let start = Instant::now();
    let reports = run_suite(suite, count, max_n, seed, exec, &cfg);
    let mut failed = false;
    for r in &reports {
        let tallies: Vec<String> = r.tallies.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "suite {}: {} instances (max-n {}), {} disagreements [{}]",
            r.suite,
            r.checked,
            r.max_n,
            r.disagreements.len(),
            tallies.join(" ")
        );
        for d in r.disagreements.iter().take(5) {
            println!("  instance {} seed {} (n={}, m={}): {}", d.index, d.seed, d.n, d.m, d.detail);
        }
        if let Some(d) = r.minimal_reproduction() {
            failed = true;
            println!(
                "  minimal reproduction: splitcolor fuzz --suite {} --max-n {} --replay {}",
                r.suite, r.max_n, d.seed
            );
        }
    }
    println!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    if failed {
        Err(Fail(EXIT_VERIFY, "oracle disagreement".into()))
    } else {
        Ok(())
    }
}

fn generate(params: GeneratorParams, format: GraphOut) -> CmdResult {
    let (g, _) = random_split_graph(&params)?;
    let lg = LabeledGraph::numbered(g);
    let text = match format {
        GraphOut::Edgelist => format!(
            "# seed={} clique={} independent={} pendants={}\n{}",
            params.seed,
            params.clique_size,
            params.independent_count,
            params.pendant_count,
            emit_edge_list(&lg)?
        ),
        GraphOut::Json => emit_json(&lg),
        GraphOut::Dimacs => format!("c seed={}\n{}", params.seed, emit_dimacs(&lg.graph)),
    };
    eprintln!("seed={}", params.seed);
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Classify { source, mode, format } => classify(source, *mode, *format),
        Command::Color { source, mode, out, emit } => color(source, *mode, out.as_ref(), *emit),
        Command::Verify { source, coloring, mode, max_colors } => verify(source, coloring, *mode, *max_colors),
        Command::Fuzz { count, max_n, seed, suite, sequential, replay } => {
            fuzz(*count, *max_n, *seed, *suite, *sequential, *replay)
        }
        Command::Generate { clique, independent, pendants, force_universal, parity, seed, format } => {
            let delta_parity = match parity {
                Parity::Even => DeltaParity::Even,
                Parity::Odd => DeltaParity::Odd,
                Parity::Any => DeltaParity::Any,
            };
            generate(
                GeneratorParams {
                    clique_size: *clique,
                    independent_count: *independent,
                    pendant_count: *pendants,
                    force_universal: *force_universal,
                    delta_parity,
                    seed: *seed,
                },
                *format,
            )
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

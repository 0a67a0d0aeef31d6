//! Command-line front end. Every subcommand is a thin adapter: it loads a
//! graph, calls one library operation, and prints the result — under
//! `--json`, the operation's return value serialized as-is.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative verification
//! (graph lacks the queried property, or a sweep found mismatches), 2 for
//! usage, parse, and precondition errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chordal::{build_clique_tree, is_chordal};
use crate::graph::{parse_edge_list, Graph, VertexSet};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::harness::{run_sweep, SweepKind};
use crate::interval::{find_asteroidal_triple, is_caterpillar, is_interval};
use crate::toughness::{find_witness_edge, is_minimally_tough, toughness, MinimalToughness};
use crate::ttgraph::{recognize_tt, tt_from_tree, CaseTag, TTDecomposition};

#[derive(Parser)]
#[command(
    name = "tough",
    about = "Exact graph toughness, clique trees, TT-graphs, and verification sweeps",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print the machine-readable JSON form of the result.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edges,
    Graph6,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    input: String,
    /// Input format; inferred from the extension when omitted
    /// (`.g6` means graph6, anything else the edge-list format).
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact toughness with a minimizing cutset.
    Analyze(InputArgs),
    /// Does deleting any single edge lower the toughness?
    Minimal(InputArgs),
    /// Search for an edge witnessing non-minimality.
    Witness(InputArgs),
    /// Chordality test with a perfect elimination order.
    Chordal(InputArgs),
    /// Build a clique tree; `--dot` renders it for graphviz.
    CliqueTree {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        dot: bool,
    },
    /// TT-graph construction and recognition.
    #[command(subcommand)]
    Tt(TtCommand),
    /// Interval recognition (chordal and asteroidal-triple-free).
    Interval(InputArgs),
    /// Caterpillar test for trees.
    Caterpillar(InputArgs),
    /// Run a verification sweep over all labeled graphs or trees.
    Sweep {
        /// Which statement to sweep.
        #[arg(long)]
        check: SweepKindArg,
        /// Largest size to enumerate (sweeps run over 1..=n).
        #[arg(long)]
        n: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the CSV of minimally tough graphs here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Parallel workers; 1 keeps the sweep single-threaded.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum TtCommand {
    /// Recognize a TT-graph and print its replayable certificate.
    Recognize(InputArgs),
    /// Apply the tree-to-triangles construction.
    Build {
        /// Tree input file, or `-` for stdin.
        #[arg(long)]
        tree: String,
        /// Tree vertices to delete, comma separated (may be empty).
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        remove: Vec<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Clone, Copy)]
struct SweepKindArg(SweepKind);

impl std::str::FromStr for SweepKindArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(SweepKindArg)
    }
}

/// Entry point used by the `tough` binary and the tests. Everything,
/// including error messages, goes through `out`.
pub fn run<I, W>(argv: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = String>,
    W: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            // --help and --version are successful exits.
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(out, "error: {message}");
            2
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, String> {
    match &cli.command {
        Command::Analyze(input) => {
            let g = load_graph(input)?;
            let cert = toughness(&g);
            if cli.json {
                print_json(out, &cert);
            } else {
                match cert.tough_set {
                    Some(s) => emit(out, format!("toughness = {}, tough set {}", cert.value, s)),
                    None => emit(out, format!("toughness = {}, no tough set", cert.value)),
                }
            }
            Ok(0)
        }
        Command::Minimal(input) => {
            let g = load_graph(input)?;
            let result = is_minimally_tough(&g).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(out, &result);
            }
            match result {
                MinimalToughness::Minimal { t } => {
                    if !cli.json {
                        emit(out, format!("minimally tough: yes, t = {t}"));
                    }
                    Ok(0)
                }
                MinimalToughness::NotMinimal {
                    edge,
                    toughness_without_edge,
                } => {
                    if !cli.json {
                        emit(
                            out,
                            format!(
                                "minimally tough: no, removing edge ({}, {}) keeps toughness {}",
                                edge.0, edge.1, toughness_without_edge
                            ),
                        );
                    }
                    Ok(1)
                }
            }
        }
        Command::Witness(input) => {
            let g = load_graph(input)?;
            let witness = find_witness_edge(&g).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(out, &witness);
            }
            match witness {
                Some(report) => {
                    if !cli.json {
                        emit(
                            out,
                            format!(
                                "witness edge ({}, {}): {} disjoint paths, {} qualifying cutsets all satisfied",
                                report.edge.0,
                                report.edge.1,
                                report.path_count,
                                report.checked_cutsets
                            ),
                        );
                    }
                    Ok(0)
                }
                None => {
                    if !cli.json {
                        emit(out, "no witness edge: graph is minimally tough");
                    }
                    Ok(1)
                }
            }
        }
        Command::Chordal(input) => {
            let g = load_graph(input)?;
            let order = is_chordal(&g);
            if cli.json {
                print_json(out, &order);
            }
            match order {
                Some(o) => {
                    if !cli.json {
                        emit(out, format!("chordal, elimination order {:?}", o.order));
                    }
                    Ok(0)
                }
                None => {
                    if !cli.json {
                        emit(out, "not chordal");
                    }
                    Ok(1)
                }
            }
        }
        Command::CliqueTree { input, dot } => {
            let g = load_graph(input)?;
            let ct = build_clique_tree(&g).map_err(|e| e.to_string())?;
            if *dot {
                emit(out, ct.to_dot());
            } else if cli.json {
                print_json(out, &ct);
            } else {
                for (i, c) in ct.cliques.iter().enumerate() {
                    emit(out, format!("clique {i}: {c}"));
                }
                for (i, j, w) in &ct.tree_edges {
                    emit(out, format!("tree edge {i} -- {j} (weight {w})"));
                }
            }
            Ok(0)
        }
        Command::Tt(TtCommand::Recognize(input)) => {
            let g = load_graph(input)?;
            match recognize_tt(&g) {
                Ok(d) => {
                    if cli.json {
                        print_json(out, &d);
                    } else {
                        emit(out, describe_decomposition(&d));
                    }
                    Ok(0)
                }
                Err(rejection) => {
                    if cli.json {
                        print_json(out, &rejection);
                    } else {
                        emit(out, format!("not a TT-graph: {rejection}"));
                    }
                    Ok(1)
                }
            }
        }
        Command::Tt(TtCommand::Build {
            tree,
            remove,
            format,
        }) => {
            let tree = load_graph(&InputArgs {
                input: tree.clone(),
                format: *format,
            })?;
            let y: VertexSet = remove.iter().copied().collect();
            let (g, d) = tt_from_tree(&tree, y).map_err(|e| e.to_string())?;
            if cli.json {
                #[derive(Serialize)]
                struct Built<'a> {
                    graph: &'a Graph,
                    decomposition: &'a TTDecomposition,
                }
                print_json(
                    out,
                    &Built {
                        graph: &g,
                        decomposition: &d,
                    },
                );
            } else {
                emit(out, describe_decomposition(&d));
                emit(out, format!("graph6: {}", emit_graph6(&g)));
                for (u, v) in g.edges() {
                    emit(out, format!("{u} {v}"));
                }
            }
            Ok(0)
        }
        Command::Interval(input) => {
            let g = load_graph(input)?;
            let interval = is_interval(&g);
            if cli.json {
                print_json(out, &interval);
                return Ok(if interval { 0 } else { 1 });
            }
            if interval {
                emit(out, "interval graph");
                Ok(0)
            } else if is_chordal(&g).is_none() {
                emit(out, "not an interval graph: not chordal");
                Ok(1)
            } else {
                let at = find_asteroidal_triple(&g).expect("chordal non-interval graph has an AT");
                emit(
                    out,
                    format!(
                        "not an interval graph: asteroidal triple {{{},{},{}}}",
                        at.x, at.y, at.z
                    ),
                );
                Ok(1)
            }
        }
        Command::Caterpillar(input) => {
            let g = load_graph(input)?;
            let caterpillar = is_caterpillar(&g);
            if cli.json {
                print_json(out, &caterpillar);
            } else if caterpillar {
                emit(out, "caterpillar");
            } else if g.is_tree() {
                emit(out, "not a caterpillar");
            } else {
                emit(out, "not a caterpillar: not a tree");
            }
            Ok(if caterpillar { 0 } else { 1 })
        }
        Command::Sweep {
            check,
            n,
            out: out_path,
            csv,
            jobs,
        } => {
            let kind = check.0;
            let n = n.unwrap_or_else(|| kind.default_n());
            let report = run_sweep(kind, n, *jobs).map_err(|e| e.to_string())?;
            if let Some(path) = out_path {
                fs::write(path, report.to_json()).map_err(|e| e.to_string())?;
            }
            if let Some(path) = csv {
                let mut buf = Vec::new();
                report.write_csv(&mut buf).map_err(|e| e.to_string())?;
                fs::write(path, buf).map_err(|e| e.to_string())?;
            }
            if cli.json {
                print_json(out, &report);
            } else {
                emit(out, format!("sweep {} over sizes 1..={n}", report.sweep));
                for (key, value) in &report.counts {
                    emit(out, format!("  {key}: {value}"));
                }
                emit(out, format!("mismatches: {}", report.mismatches.len()));
                for m in &report.mismatches {
                    emit(out, format!("  {} {}", m.graph6, m.reason));
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn describe_decomposition(d: &TTDecomposition) -> String {
    let case = match d.case_tag {
        CaseTag::A => "a",
        CaseTag::B => "b",
        CaseTag::PureTree => "pure tree",
    };
    format!(
        "TT-graph: case {case}, mu = {}, removed {} of {} tree vertices",
        d.mu,
        d.removed.len(),
        d.tree.vertex_count()
    )
}

fn emit<W: Write>(out: &mut W, line: impl AsRef<str>) {
    let _ = writeln!(out, "{}", line.as_ref());
}

fn print_json<W: Write, T: Serialize>(out: &mut W, value: &T) {
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("results serialize")
    );
}

fn load_graph(args: &InputArgs) -> Result<Graph, String> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(&args.input).map_err(|e| format!("reading {}: {e}", args.input))?
    };
    let format = args.format.unwrap_or_else(|| {
        if args.input.ends_with(".g6") {
            Format::Graph6
        } else {
            Format::Edges
        }
    });
    match format {
        Format::Edges => parse_edge_list(&text).map_err(|e| e.to_string()),
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| "empty graph6 input".to_string())?;
            parse_graph6(line).map_err(|e| e.to_string())
        }
    }
}

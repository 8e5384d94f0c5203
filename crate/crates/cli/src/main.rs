//! `insat`: build `G_n`, verify induced saturation, print certificates and
//! scan graph collections.
//!
//! Exit codes: 0 success or verdict true, 1 verdict false, 2 usage, input or
//! parse error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use insat_core::enumeration::{exhaust_labeled, scan_stream, ScanOptions, ScanSummary};
use insat_core::{
    classify_labels, longest_induced_path, named, paper_witness, verify_h_is_with,
    verify_pn_is_with, Edge, Execution, GnLabel, Graph, LabeledGn, Mode,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "insat",
    version,
    about = "Induced-saturation toolkit for small graphs"
)]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print G_n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Check induced saturation of G_n, or of a graph6 file against a path target.
    Verify {
        #[arg(long, conflicts_with_all = ["graph", "target"], required_unless_present = "graph")]
        n: Option<usize>,
        #[arg(long, requires = "target")]
        graph: Option<PathBuf>,
        /// Order of the target path.
        #[arg(long, requires = "graph")]
        target: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the case and explicit witness path for one perturbation of G_n.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Two labels such as `v1,v6` or `w2,w5`.
        #[arg(long)]
        edge: String,
        #[arg(long)]
        json: bool,
    },
    /// Longest induced path of a graph6 graph.
    LongestPath {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Scan a graph6 stream (one record per line) for P_target-induced-saturated graphs.
    Scan {
        #[arg(long)]
        target: usize,
        /// Input file; standard input when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Abort on the first malformed record.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check every labelled graph of the given order against P_target.
    Exhaust {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Delete,
    Add,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Delete => Mode::Delete,
            ModeArg::Add => Mode::Add,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let exec = configure_threads(cli.threads)?;
    match cli.command {
        Command::Gen { n, format } => {
            let g = LabeledGn::build(n)?;
            print!("{}", render_gn(&g, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            graph,
            target,
            json,
        } => {
            let (report, names): (_, Box<dyn Fn(usize) -> String>) = match (n, graph, target) {
                (Some(n), _, _) => {
                    let g = LabeledGn::build(n)?;
                    let report = verify_pn_is_with(&g, exec)?;
                    (report, Box::new(move |v| g.name(v)))
                }
                (None, Some(path), Some(k)) => {
                    let g = read_graph(&path)?;
                    let h = named::path(k)?;
                    (
                        verify_h_is_with(&g, &h, exec)?,
                        Box::new(|v: usize| v.to_string()),
                    )
                }
                _ => bail!("give either --n or both --graph and --target"),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render_text(&names));
            }
            Ok(if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Witness {
            n,
            mode,
            edge,
            json,
        } => {
            let g = LabeledGn::build(n)?;
            let (a, b) = parse_label_pair(&edge)?;
            let mode = Mode::from(mode);
            let case = classify_labels(&g, a, b, mode)?;
            let e = Edge::new(g.vertex_of(a)?, g.vertex_of(b)?)?;
            let path = paper_witness(&g, e, mode)?;
            let labels: Vec<String> = path.vertices().iter().map(|&v| g.name(v)).collect();
            let (ca, cb) = case.canonical_edge();
            let rotation = case.to_canonical(n).rotation;
            if json {
                let out = json!({
                    "case": case.kind.to_string(),
                    "j": case.canonical_j,
                    "rotation": rotation,
                    "canonical_edge": [ca.to_string(), cb.to_string()],
                    "path": labels,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("case {}", case.kind);
                println!("j {}", case.canonical_j);
                println!("rotation {rotation} (takes {a}-{b} to {ca}-{cb})");
                println!("path {}", labels.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LongestPath { graph } => {
            let g = read_graph(&graph)?;
            let (k, path) = longest_induced_path(&g)?;
            println!("order {k}");
            let vs: Vec<String> = path.vertices().iter().map(|v| v.to_string()).collect();
            println!("path {}", vs.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            target,
            input,
            strict,
            json,
        } => {
            let h = named::path(target)?;
            let opts = ScanOptions { strict, exec };
            let summary = match input.as_deref() {
                None => scan_stream(io::stdin().lock(), &h, opts)?,
                Some(p) if p == Path::new("-") => scan_stream(io::stdin().lock(), &h, opts)?,
                Some(p) => {
                    let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
                    scan_stream(BufReader::new(f), &h, opts)?
                }
            };
            emit_summary(&summary, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Exhaust {
            order,
            target,
            json,
        } => {
            let summary = exhaust_labeled(order, &named::path(target)?, exec)?;
            emit_summary(&summary, json)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn configure_threads(threads: Option<usize>) -> Result<Execution> {
    match threads {
        None => Ok(Execution::Parallel),
        Some(0) => bail!("--threads must be at least 1"),
        Some(1) => Ok(Execution::Sequential),
        #[cfg(feature = "parallel")]
        Some(t) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .context("configuring the thread pool")?;
            Ok(Execution::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Execution::Sequential),
    }
}

/// First non-empty line of a graph6 file (`-` for standard input).
fn read_graph(path: &Path) -> Result<Graph> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .with_context(|| format!("opening {}", path.display()))?
            .read_to_string(&mut text)?;
    }
    let line = text
        .as_bytes()
        .lines()
        .map_while(|l| l.ok())
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| anyhow!("{} contains no graph6 record", path.display()))?;
    Graph::from_graph6(line.trim()).with_context(|| format!("parsing {}", path.display()))
}

fn parse_label_pair(s: &str) -> Result<(GnLabel, GnLabel)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("edge must look like v1,v6; got {s:?}"))?;
    Ok((a.parse()?, b.parse()?))
}

fn emit_summary(summary: &ScanSummary, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(summary)?);
    } else {
        print!("{}", summary.render_text());
    }
    eprintln!("elapsed {:.3}s", summary.elapsed.as_secs_f64());
    Ok(())
}

fn render_gn(g: &LabeledGn, format: Format) -> String {
    let graph = g.graph();
    let mut out = String::new();
    match format {
        Format::Graph6 => {
            out.push_str(&graph.to_graph6());
            out.push('\n');
        }
        Format::Edgelist => {
            let _ = writeln!(
                out,
                "# G_{}: {} vertices, {} edges; vertex i-1 is v_i, vertex {}+i is w_i",
                g.n(),
                graph.order(),
                graph.edge_count(),
                g.m() - 1
            );
            for e in graph.edges() {
                let _ = writeln!(out, "{} {}", e.u(), e.v());
            }
        }
        Format::Dot => {
            let m = g.m();
            let _ = writeln!(out, "graph G{} {{", g.n());
            out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
            for (side, range) in [("v", 0..m), ("w", m..2 * m)] {
                let names: Vec<String> = range.map(|x| g.name(x)).collect();
                let _ = writeln!(
                    out,
                    "  subgraph {side}_column {{ rank=same; {}; }}",
                    names.join("; ")
                );
            }
            for e in graph.edges() {
                let _ = writeln!(out, "  {} -- {};", g.name(e.u()), g.name(e.v()));
            }
            out.push_str("}\n");
        }
    }
    out
}

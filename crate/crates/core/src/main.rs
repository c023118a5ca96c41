use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;
use zfw::bounds::embeddability_report_with_budget;
use zfw::forcing::{enumerate_minimal_forts, zero_forcing_number_with_budget};
use zfw::gadgets::{self, GadgetMap};
use zfw::graph6::{parse_graph6, read_graph6_lines, write_graph6};
use zfw::harness::{enumerate_connected_cubic, trace_forcing, verify_batch, RunConfig};
use zfw::independence::maximum_independent_set_with_budget;
use zfw::{Budget, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "zfw", version, about = "Zero forcing and independence checks for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants of a graph6 string or of every graph in a file.
    Compute {
        graph: String,
        #[arg(long)]
        z: bool,
        #[arg(long)]
        alpha: bool,
        /// Decycling number and embeddability (connected cubic only).
        #[arg(long)]
        phi: bool,
        /// Minimal forts, up to --fort-cap of them.
        #[arg(long)]
        forts: bool,
        #[arg(long, default_value_t = 100)]
        fort_cap: usize,
        #[arg(long, default_value_t = 60.0)]
        budget_secs: f64,
    },
    /// Certificates for every enumerated or ingested graph.
    #[command(group(ArgGroup::new("source").required(true).args(["enumerate_n", "input"])))]
    Verify {
        /// Connected cubic graphs on these vertex counts (comma separated).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        enumerate_n: Vec<usize>,
        /// graph6 file, one graph per line.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Certificate file (JSON lines); stdout summary only when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Scalar columns as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 60.0)]
        budget_secs: f64,
        #[arg(long, env = "ZFW_WORKERS")]
        workers: Option<usize>,
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        no_embeddability: bool,
        #[arg(long)]
        no_constructions: bool,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Gadget constructions.
    #[command(group(ArgGroup::new("what").required(true).args(["gt", "cubify", "gadget"])))]
    Construct {
        /// G_T for every 3-1 tree on this many vertices.
        #[arg(long)]
        gt: Option<usize>,
        /// Cubify every graph in a graph6 file.
        #[arg(long)]
        cubify: Option<PathBuf>,
        /// Replace one vertex of --graph.
        #[arg(long, requires_all = ["vertex", "graph"])]
        gadget: Option<GadgetKind>,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        graph: Option<String>,
        /// Print the full vertex map as JSON instead of graph6.
        #[arg(long)]
        json: bool,
        /// With --gt: check the tight-family identities.
        #[arg(long, requires = "gt")]
        verify: bool,
        #[arg(long, default_value_t = 60.0)]
        budget_secs: f64,
    },
    /// Chronological forces from a blue set.
    Trace {
        graph: String,
        /// Initial blue vertices, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        blue: Vec<usize>,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    /// Degree-1 vertex.
    G1,
    /// Degree-2 vertex.
    G2,
    /// Degree-3 vertex, replaced by a triangle.
    G3,
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
    let mut stdout = BufWriter::new(io::stdout().lock());
    let code = match cli.command {
        Command::Compute { graph, z, alpha, phi, forts, fort_cap, budget_secs } => {
            let all = !(z || alpha || phi || forts);
            let budget = budget(budget_secs)?;
            for g in load_graphs(&graph)? {
                let mut row = serde_json::Map::new();
                row.insert("graph6".into(), json!(write_graph6(&g)?));
                row.insert("n".into(), json!(g.n()));
                if z || all {
                    let r = zero_forcing_number_with_budget(&g, &Budget::new(budget))?;
                    row.insert("z".into(), json!(r.z));
                    row.insert("z_witness".into(), json!(r.witness));
                }
                if alpha || all {
                    let r = maximum_independent_set_with_budget(&g, &Budget::new(budget))?;
                    row.insert("alpha".into(), json!(r.alpha));
                    row.insert("alpha_witness".into(), json!(r.witness));
                }
                if phi || (all && is_connected_cubic(&g)) {
                    let r = embeddability_report_with_budget(&g, &Budget::new(budget))?;
                    row.insert("embeddability".into(), serde_json::to_value(r)?);
                }
                if forts {
                    let list: Vec<VertexSet> = enumerate_minimal_forts(&g, fort_cap).into_iter().map(|f| f.members).collect();
                    row.insert("forts".into(), json!(list));
                }
                writeln!(stdout, "{}", serde_json::Value::Object(row))?;
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            enumerate_n,
            input,
            out,
            csv,
            budget_secs,
            workers,
            timings,
            no_embeddability,
            no_constructions,
            json,
        } => {
            let cfg = RunConfig {
                budget: budget(budget_secs)?,
                workers,
                embeddability: !no_embeddability,
                constructions: !no_constructions,
                timings,
            };
            cfg.validate()?;
            let source: Box<dyn Iterator<Item = (usize, zfw::Result<Graph>)>> = match input {
                Some(path) => {
                    let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
                    Box::new(read_graph6_lines(BufReader::new(file)))
                }
                None => {
                    let mut graphs = Vec::new();
                    for n in enumerate_n {
                        graphs.extend(enumerate_connected_cubic(n)?);
                    }
                    Box::new(graphs.into_iter().map(Ok).enumerate().map(|(i, g)| (i + 1, g)))
                }
            };
            let mut certs: Box<dyn Write> = match &out {
                Some(path) => Box::new(BufWriter::new(create(path)?)),
                None => Box::new(io::sink()),
            };
            let mut csv_out = csv.as_deref().map(create).transpose()?.map(BufWriter::new);
            let summary =
                verify_batch(source, &cfg, certs.as_mut(), csv_out.as_mut().map(|w| w as &mut dyn Write))?;
            if json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&summary)?)?;
            } else {
                write!(stdout, "{}", summary.render())?;
            }
            if summary.violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Command::Construct { gt, cubify, gadget, vertex, graph, json, verify, budget_secs } => {
            let mut failed = false;
            if let Some(n) = gt {
                let budget = budget(budget_secs)?;
                for t in gadgets::generate_31_trees(n)? {
                    if verify {
                        let r = gadgets::verify_tight_family(&t, &Budget::new(budget))?;
                        failed |= !r.holds();
                        let mut v = serde_json::to_value(&r)?;
                        v["tree"] = json!(write_graph6(&t.tree)?);
                        writeln!(stdout, "{v}")?;
                    } else {
                        emit(&mut stdout, &gadgets::build_gt(&t)?, json)?;
                    }
                }
            } else if let Some(path) = cubify {
                for (line, g) in read_graph6_lines(BufReader::new(File::open(&path)?)) {
                    let g = g.with_context(|| format!("{}:{line}", path.display()))?;
                    emit(&mut stdout, &gadgets::cubify(&g)?, json)?;
                }
            } else if let (Some(kind), Some(v), Some(text)) = (gadget, vertex, graph) {
                let g = parse_graph6(text.trim().as_bytes())?;
                let map = match kind {
                    GadgetKind::G1 => gadgets::replace_deg1(&g, v)?,
                    GadgetKind::G2 => gadgets::replace_deg2(&g, v)?,
                    GadgetKind::G3 => gadgets::replace_claw_center(&g, v)?,
                };
                emit(&mut stdout, &map, json)?;
            }
            if failed { ExitCode::from(1) } else { ExitCode::SUCCESS }
        }
        Command::Trace { graph, blue, dot } => {
            let g = parse_graph6(graph.trim().as_bytes())?;
            let b: VertexSet = blue.iter().copied().filter(|&v| v < 64).collect();
            if let Some(&v) = blue.iter().find(|&&v| v >= g.n()) {
                bail!(Error::VertexOutOfRange { v, n: g.n() });
            }
            match trace_forcing(&g, b) {
                Ok(t) if dot => write!(stdout, "{}", t.dot(&g))?,
                Ok(t) => writeln!(stdout, "{}", t.text())?,
                Err(Error::NotForcingSet { blue }) => {
                    writeln!(stdout, "stalled: blue = {blue}")?;
                    stdout.flush()?;
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
            }
            ExitCode::SUCCESS
        }
    };
    stdout.flush()?;
    Ok(code)
}

fn budget(secs: f64) -> Result<Duration> {
    if !(secs.is_finite() && secs > 0.0) {
        bail!("--budget-secs must be a positive number of seconds");
    }
    Ok(Duration::from_secs_f64(secs))
}

fn create(path: &Path) -> Result<File> {
    File::create(path).with_context(|| format!("creating {}", path.display()))
}

fn is_connected_cubic(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && zfw::graph::classify_degrees(g).is_cubic
}

/// A path to an existing file is read line by line; anything else is parsed as graph6.
fn load_graphs(arg: &str) -> Result<Vec<Graph>> {
    let path = Path::new(arg);
    if path.is_file() {
        let reader = BufReader::new(File::open(path)?);
        return reader_graphs(reader, arg);
    }
    Ok(vec![parse_graph6(arg.trim().as_bytes()).with_context(|| format!("parsing {arg:?} as graph6"))?])
}

fn reader_graphs(reader: impl BufRead, name: &str) -> Result<Vec<Graph>> {
    read_graph6_lines(reader)
        .map(|(line, g)| g.with_context(|| format!("{name}:{line}")))
        .collect()
}

fn emit(out: &mut impl Write, map: &GadgetMap, json: bool) -> Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(map)?)?;
    } else {
        writeln!(out, "{}", write_graph6(&map.result)?)?;
    }
    Ok(())
}

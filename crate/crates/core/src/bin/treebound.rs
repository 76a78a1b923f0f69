use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use treebound::harness::{builtin_source, graph6_source};
use treebound::{
    chromatic_number, construct_witnesses, count_spanning_trees, count_spanning_trees_bruteforce,
    generate_extremal, is_k_colorable, parse_edge_list, recognize_extremal, sweep, verify_bound,
    write_edge_list, write_graph6, Error, Graph, OutputStyle, PendantSpec, SweepMode, SweepOptions,
};

#[derive(Parser)]
#[command(
    name = "treebound",
    version,
    about = "Spanning-tree lower bounds for k-chromatic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact chromatic number and an optimal coloring.
    Chromatic(InputArgs),
    /// Exact number of spanning trees.
    Count {
        #[command(flatten)]
        input: InputArgs,
        /// Cross-check against the backtracking count.
        #[arg(long)]
        oracle: bool,
    },
    /// Explicit distinct spanning trees certifying the bound.
    Witness {
        #[command(flatten)]
        input: InputArgs,
        /// Stop after this many trees (never fewer than the bound).
        #[arg(long)]
        cap: Option<usize>,
        /// Chromatic lower bound to use instead of the exact chromatic number.
        #[arg(long)]
        k: Option<usize>,
        /// Print every tree.
        #[arg(long)]
        trees: bool,
    },
    /// Check the bound on each input graph.
    Verify(InputArgs),
    /// Check the bound over a built-in enumeration or a graph6 corpus.
    Sweep {
        /// Enumerate all labeled connected graphs on N vertices (N <= 7).
        #[arg(short = 'n', conflicts_with = "input")]
        n: Option<usize>,
        /// graph6 corpus, one graph per line.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Verify)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Human-readable table instead of JSON lines.
        #[arg(long)]
        text: bool,
        /// JSON lines (the default).
        #[arg(long, conflicts_with = "text")]
        json: bool,
    },
    /// Recognize complete graphs with pendant trees attached.
    Extremal(InputArgs),
    /// Build K_k with pendant vertices.
    GenExtremal {
        #[arg(long)]
        k: usize,
        /// Comma-separated attachment vertices; vertex k+i hangs off entry i.
        #[arg(long, value_delimiter = ',')]
        attach: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Args)]
struct InputArgs {
    /// A graph given inline (graph6, or an edge list with --format edgelist).
    graph: Option<String>,
    /// Read graphs from a file instead (stdin if neither is given).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Verify,
    /// Verify and build capped witness sets.
    #[value(alias = "verify+witness")]
    Witness,
}

impl InputArgs {
    fn graphs(&self) -> Result<Vec<Graph>, Error> {
        let (text, origin) = match (&self.graph, &self.input) {
            (Some(g), _) => (g.clone(), None),
            (None, Some(path)) => {
                let mut s = String::new();
                File::open(path)?.read_to_string(&mut s)?;
                (s, Some(path.clone()))
            }
            (None, None) => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                (s, Some(PathBuf::from("<stdin>")))
            }
        };
        match self.format {
            Format::Edgelist => Ok(vec![parse_edge_list(&text)?]),
            Format::Graph6 => {
                let path = origin.unwrap_or_else(|| PathBuf::from("<argument>"));
                graph6_source(BufReader::new(text.as_bytes()), &path).collect()
            }
        }
    }
}

fn label(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.n()))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut status = ExitCode::SUCCESS;
    match cli.command {
        Command::Chromatic(input) => {
            for g in input.graphs()? {
                let chi = chromatic_number(&g);
                let coloring = is_k_colorable(&g, chi)
                    .expect("optimal coloring exists")
                    .into_inner();
                if input.json {
                    writeln!(
                        out,
                        "{}",
                        json!({ "graph_id": label(&g), "chromatic": chi, "coloring": coloring })
                    )?;
                } else {
                    writeln!(out, "{}  chi = {chi}  coloring = {coloring:?}", label(&g))?;
                }
            }
        }
        Command::Count { input, oracle } => {
            for g in input.graphs()? {
                let tau = count_spanning_trees(&g);
                let brute = oracle.then(|| count_spanning_trees_bruteforce(&g));
                if brute.as_ref().is_some_and(|b| *b != tau) {
                    status = ExitCode::FAILURE;
                }
                if input.json {
                    let mut v = json!({ "graph_id": label(&g), "tau": tau });
                    if let Some(b) = &brute {
                        v["bruteforce"] = json!(b);
                    }
                    writeln!(out, "{v}")?;
                } else {
                    match &brute {
                        Some(b) => writeln!(out, "{}  tau = {tau}  bruteforce = {b}", label(&g))?,
                        None => writeln!(out, "{}  tau = {tau}", label(&g))?,
                    }
                }
            }
        }
        Command::Witness {
            input,
            cap,
            k,
            trees,
        } => {
            for g in input.graphs()? {
                let k_lb = k.unwrap_or_else(|| chromatic_number(&g));
                let set = construct_witnesses(&g, k_lb, cap)?;
                if input.json {
                    let mut v = json!({
                        "graph_id": label(&g),
                        "k_lb": set.k_lb,
                        "bound": set.bound,
                        "count": set.len(),
                        "by_case": set.counts_by_case().iter().map(|(c, n)| (c.to_string(), *n)).collect::<std::collections::BTreeMap<_, _>>(),
                    });
                    if trees {
                        v["trees"] = serde_json::to_value(&set.trees).map_err(io::Error::from)?;
                    }
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(
                        out,
                        "{}  k = {}  bound = {}  witnesses = {}",
                        label(&g),
                        set.k_lb,
                        set.bound,
                        set.len()
                    )?;
                    for (case, n) in set.counts_by_case() {
                        writeln!(out, "  {case:<16} {n}")?;
                    }
                    if trees {
                        for t in &set.trees {
                            let edges: Vec<String> =
                                t.tree.edges().iter().map(ToString::to_string).collect();
                            writeln!(out, "  [{}] {}", t.provenance, edges.join(" "))?;
                        }
                    }
                }
            }
        }
        Command::Verify(input) => {
            for g in input.graphs()? {
                let rec = verify_bound(&g)?;
                if rec.counterexample {
                    status = ExitCode::FAILURE;
                }
                if input.json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&rec).map_err(io::Error::from)?
                    )?;
                } else {
                    writeln!(
                        out,
                        "{}  n = {}  m = {}  chi = {}  tau = {}  bound = {}  tight = {}  extremal = {}{}",
                        rec.graph_id,
                        rec.n,
                        rec.m,
                        rec.chromatic,
                        rec.tau,
                        rec.bound,
                        rec.tight,
                        rec.extremal,
                        if rec.counterexample { "  COUNTEREXAMPLE" } else { "" }
                    )?;
                }
            }
        }
        Command::Sweep {
            n,
            input,
            mode,
            jobs,
            text,
            json: _,
        } => {
            let opts = SweepOptions {
                mode: match mode {
                    ModeArg::Verify => SweepMode::Verify,
                    ModeArg::Witness => SweepMode::VerifyWitness,
                },
                jobs,
                style: if text {
                    OutputStyle::Text
                } else {
                    OutputStyle::JsonLines
                },
                ..SweepOptions::default()
            };
            let summary = match (n, input) {
                (Some(n), _) => sweep(builtin_source(n)?, &opts, &mut out)?,
                (None, Some(path)) => {
                    let file = File::open(&path).map_err(|e| Error::Input {
                        path: path.clone(),
                        line: 0,
                        source: Box::new(e.into()),
                    })?;
                    sweep(graph6_source(BufReader::new(file), &path), &opts, &mut out)?
                }
                (None, None) => {
                    return Err(Error::Precondition(
                        "sweep needs -n N or --input FILE".into(),
                    ));
                }
            };
            if !summary.is_clean() {
                status = ExitCode::FAILURE;
            }
        }
        Command::Extremal(input) => {
            for g in input.graphs()? {
                let cert = recognize_extremal(&g)?;
                if input.json {
                    writeln!(
                        out,
                        "{}",
                        json!({ "graph_id": label(&g), "certificate": cert })
                    )?;
                } else {
                    match cert {
                        Some(c) => {
                            let (spec, _) = c.to_spec();
                            writeln!(
                                out,
                                "{}  extremal: core K_{} on {:?}, attachments {:?}",
                                label(&g),
                                c.k(),
                                c.core,
                                spec.attachments
                            )?;
                        }
                        None => writeln!(out, "{}  not extremal", label(&g))?,
                    }
                }
            }
        }
        Command::GenExtremal { k, attach, format } => {
            let g = generate_extremal(&PendantSpec {
                k,
                attachments: attach,
            })?;
            match format {
                Format::Graph6 => writeln!(out, "{}", write_graph6(&g)?)?,
                Format::Edgelist => write!(out, "{}", write_edge_list(&g))?,
            }
        }
    }
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

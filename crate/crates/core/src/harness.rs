//! Verification records and exhaustive sweeps.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::extremal::recognize_extremal;
use crate::format::{parse_graph6, write_graph6};
use crate::graph::Graph;
use crate::tree_count::{count_spanning_trees, BigCount};
use crate::witness::{bound, construct_witnesses};

/// Largest `n` the built-in enumerator accepts.
pub const MAX_BUILTIN_N: usize = 7;

/// Every labeled connected simple graph on `n` vertices, in increasing order
/// of the upper-triangle bitmask (bit `i` is the `i`-th graph6 pair).
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_BUILTIN_N {
        return Err(Error::precondition(format!(
            "built-in enumeration covers 1 <= n <= {MAX_BUILTIN_N}; for larger n feed a graph6 corpus \
             (e.g. from nauty's geng -c) with --input"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let g = graph_from_mask(n, &pairs, mask);
        g.is_connected().then_some(g)
    }))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).expect("pairs are in range and loop-free");
        }
    }
    g
}

/// One graph's instance of the bound and of the extremal characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub n: usize,
    pub m: usize,
    pub graph_id: String,
    pub chromatic: usize,
    pub tau: BigCount,
    pub bound: BigCount,
    pub tight: bool,
    pub extremal: bool,
    /// Set when `tau < bound`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub counterexample: bool,
    /// Witness count, in witness mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<usize>,
    /// Why witness construction failed, in witness mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_error: Option<String>,
}

impl VerificationRecord {
    pub fn witness_shortfall(&self) -> bool {
        self.witness_error.is_some()
    }
}

/// Computes chromatic number, spanning-tree count, bound, tightness and
/// extremality of a connected graph.
///
/// An extremal graph that is not tight contradicts the counting argument for
/// pendant edges and is returned as an error; a tight graph that is not
/// extremal is a reportable finding and only shows in the record.
pub fn verify_bound(g: &Graph) -> Result<VerificationRecord> {
    if g.n() == 0 {
        return Err(Error::precondition(
            "the empty graph has no chromatic bound",
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chromatic = chromatic_number(g);
    let tau = count_spanning_trees(g);
    let bound = bound(chromatic)?;
    let tight = tau == bound;
    let extremal = recognize_extremal(g)?.is_some();
    let graph_id = write_graph6(g).unwrap_or_default();
    if extremal && !tight {
        return Err(Error::ProofInvariantViolated {
            graph: graph_id,
            reason: format!("extremal graph with tau = {tau} != bound {bound}"),
        });
    }
    Ok(VerificationRecord {
        n: g.n(),
        m: g.edge_count(),
        graph_id,
        chromatic,
        counterexample: tau < bound,
        tau,
        bound,
        tight,
        extremal,
        witnesses: None,
        witness_error: None,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    #[default]
    Verify,
    /// Also build a witness set capped at the bound.
    VerifyWitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputStyle {
    JsonLines,
    Text,
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub mode: SweepMode,
    pub jobs: usize,
    pub style: OutputStyle,
    /// Graphs handed to the worker pool at a time.
    pub chunk: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            mode: SweepMode::Verify,
            jobs: 1,
            style: OutputStyle::JsonLines,
            chunk: 4096,
        }
    }
}

/// Aggregate over a sweep. Everything except `max_graph_micros` is
/// independent of scheduling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: u64,
    pub tight: u64,
    pub extremal: u64,
    /// Graphs where exactly one of `tight` / `extremal` holds.
    pub mismatches: u64,
    pub counterexamples: u64,
    pub witness_shortfalls: u64,
    /// Disconnected inputs, which the bound does not speak about.
    pub skipped_disconnected: u64,
    pub max_graph_micros: u64,
}

impl SweepSummary {
    pub fn absorb(&mut self, rec: &VerificationRecord) {
        self.graphs += 1;
        self.tight += rec.tight as u64;
        self.extremal += rec.extremal as u64;
        self.mismatches += (rec.tight != rec.extremal) as u64;
        self.counterexamples += rec.counterexample as u64;
        self.witness_shortfalls += rec.witness_shortfall() as u64;
    }

    pub fn merge(&mut self, other: &SweepSummary) {
        self.graphs += other.graphs;
        self.tight += other.tight;
        self.extremal += other.extremal;
        self.mismatches += other.mismatches;
        self.counterexamples += other.counterexamples;
        self.witness_shortfalls += other.witness_shortfalls;
        self.skipped_disconnected += other.skipped_disconnected;
        self.max_graph_micros = self.max_graph_micros.max(other.max_graph_micros);
    }

    /// No counterexample and no witness shortfall.
    pub fn is_clean(&self) -> bool {
        self.counterexamples == 0 && self.witness_shortfalls == 0
    }
}

fn check_one(g: &Graph, mode: SweepMode) -> Result<Option<(VerificationRecord, u64)>> {
    if !g.is_connected() {
        return Ok(None);
    }
    let start = Instant::now();
    let mut rec = verify_bound(g)?;
    if mode == SweepMode::VerifyWitness {
        let cap = rec.bound.to_usize();
        match construct_witnesses(g, rec.chromatic, cap) {
            Ok(set) => rec.witnesses = Some(set.len()),
            Err(e) => rec.witness_error = Some(e.to_string()),
        }
    }
    Ok(Some((rec, start.elapsed().as_micros() as u64)))
}

/// Verifies every graph of `graphs`, streaming one line per record to `out`
/// in input order, and returns the summary (also written as the last line).
///
/// Work is spread over `opts.jobs` threads a chunk at a time; records are
/// written by the calling thread only, so output does not depend on `jobs`.
pub fn sweep<I, W>(graphs: I, opts: &SweepOptions, out: &mut W) -> Result<SweepSummary>
where
    I: IntoIterator<Item = Result<Graph>>,
    W: Write,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::precondition(format!("cannot start worker pool: {e}")))?;
    let mut summary = SweepSummary::default();
    if opts.style == OutputStyle::Text {
        writeln!(
            out,
            "{:>3} {:>4} {:<12} {:>3} {:>20} {:>20} {:>5} {:>8}",
            "n", "m", "graph6", "chi", "tau", "bound", "tight", "extremal"
        )?;
    }
    let mut iter = graphs.into_iter();
    let chunk_size = opts.chunk.max(1);
    loop {
        let chunk: Vec<Graph> = iter.by_ref().take(chunk_size).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<Option<(VerificationRecord, u64)>>> =
            pool.install(|| chunk.par_iter().map(|g| check_one(g, opts.mode)).collect());
        for r in results {
            match r? {
                None => summary.skipped_disconnected += 1,
                Some((rec, micros)) => {
                    summary.absorb(&rec);
                    summary.max_graph_micros = summary.max_graph_micros.max(micros);
                    write_record(out, &rec, opts.style)?;
                }
            }
        }
    }
    match opts.style {
        OutputStyle::JsonLines => {
            let line = serde_json::json!({ "summary": &summary });
            writeln!(out, "{line}")?;
        }
        OutputStyle::Text => {
            writeln!(
                out,
                "graphs {}  tight {}  extremal {}  mismatches {}  counterexamples {}  witness shortfalls {}  skipped {}  max {} us",
                summary.graphs,
                summary.tight,
                summary.extremal,
                summary.mismatches,
                summary.counterexamples,
                summary.witness_shortfalls,
                summary.skipped_disconnected,
                summary.max_graph_micros
            )?;
        }
    }
    out.flush()?;
    Ok(summary)
}

fn write_record<W: Write>(out: &mut W, rec: &VerificationRecord, style: OutputStyle) -> Result<()> {
    match style {
        OutputStyle::JsonLines => {
            serde_json::to_writer(&mut *out, rec).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputStyle::Text => {
            let mut flags = String::new();
            if rec.counterexample {
                flags.push_str("  COUNTEREXAMPLE");
            }
            if let Some(w) = rec.witnesses {
                flags.push_str(&format!("  witnesses={w}"));
            }
            if let Some(e) = &rec.witness_error {
                flags.push_str(&format!("  WITNESS SHORTFALL: {e}"));
            }
            writeln!(
                out,
                "{:>3} {:>4} {:<12} {:>3} {:>20} {:>20} {:>5} {:>8}{}",
                rec.n,
                rec.m,
                rec.graph_id,
                rec.chromatic,
                rec.tau,
                rec.bound,
                rec.tight,
                rec.extremal,
                flags
            )?;
        }
    }
    Ok(())
}

/// Connected graphs on `n` vertices, as sweep input.
pub fn builtin_source(n: usize) -> Result<impl Iterator<Item = Result<Graph>>> {
    Ok(enumerate_connected_graphs(n)?.map(Ok))
}

/// Lines of a graph6 file, as sweep input. Blank lines are skipped; errors
/// carry the path and 1-based line number.
pub fn graph6_source<R: BufRead>(reader: R, path: &Path) -> impl Iterator<Item = Result<Graph>> {
    let path: PathBuf = path.to_path_buf();
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let wrap = |e: Error| Error::Input {
            path: path.clone(),
            line: i + 1,
            source: Box::new(e),
        };
        match line {
            Err(e) => Some(Err(wrap(e.into()))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(parse_graph6(&l).map_err(wrap)),
        }
    })
}

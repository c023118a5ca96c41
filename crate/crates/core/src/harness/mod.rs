//! Enumeration, per-graph certificates, batch verification and force traces.

mod enumerate;
mod trace;

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundReport};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::forcing::zero_forcing_number_with_budget;
use crate::graph::{claw_centers, classify_degrees, Graph};
use crate::graph6::write_graph6;
use crate::independence::maximum_independent_set_with_budget;
use crate::set::VertexSet;

pub use enumerate::{enumerate_connected_cubic, MAX_ENUMERATION_N};
pub use trace::{trace_forcing, ForcingTrace};

pub const CONJECTURE: &str = "z_le_alpha_plus_1";
pub const CLAW_FREE: &str = "claw_free_z_le_alpha_plus_1";
pub const CLAW_CENTERS: &str = "z_le_alpha_plus_1_plus_claw_centers";
pub const UPPER_EMBEDDABLE: &str = "upper_embeddable_z_le_alpha_plus_2";
pub const ONE_FACE: &str = "one_face_construction_le_alpha_plus_1";
pub const TWO_FACE: &str = "two_face_construction_le_alpha_plus_2";

/// Analysis settings shared by every graph in a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Wall-clock allowance per graph per solver.
    pub budget: Duration,
    /// Worker threads; `None` uses all available cores.
    pub workers: Option<usize>,
    /// Decycling number and partition searches on cubic graphs.
    pub embeddability: bool,
    /// Constructive bounds (acyclic remainder, maximum degree).
    pub constructions: bool,
    /// Record per-solver durations; off by default so output is reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: Duration::from_secs(60),
            workers: None,
            embeddability: true,
            constructions: true,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.budget.is_zero() {
            return Err(Error::precondition("the solver budget must be positive"));
        }
        if self.workers == Some(0) {
            return Err(Error::precondition("the worker count must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotApplicable {
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub cubic: bool,
    pub claw_free: bool,
    pub z: Option<usize>,
    pub z_witness: Option<VertexSet>,
    pub alpha: Option<usize>,
    pub alpha_witness: Option<VertexSet>,
    pub phi: Option<usize>,
    pub max_genus: Option<usize>,
    pub upper_embeddable: Option<bool>,
    pub one_face: Option<bool>,
    pub two_face: Option<bool>,
    pub claw_center_count: usize,
    pub bounds: Vec<BoundReport>,
    pub not_applicable: Vec<NotApplicable>,
    /// Solver failures, budget exhaustion included. A non-empty list marks
    /// the row incomplete.
    pub incomplete: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Certificate {
    pub fn violations(&self) -> impl Iterator<Item = &BoundReport> {
        self.bounds.iter().filter(|b| !b.holds)
    }

    pub fn is_complete(&self) -> bool {
        self.incomplete.is_empty()
    }

    pub fn bound(&self, name: &str) -> Option<&BoundReport> {
        self.bounds.iter().find(|b| b.name == name)
    }
}

/// Exact invariants and every applicable bound for one connected graph.
pub fn verify_graph(g: &Graph, cfg: &RunConfig) -> Result<Certificate> {
    cfg.validate()?;
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::precondition("verification needs a nonempty connected graph"));
    }
    let class = classify_degrees(g);
    let claws = claw_centers(g);
    let is_k4 = class.is_cubic && g.n() == 4;
    let mut cert = Certificate {
        graph6: write_graph6(g)?,
        n: g.n(),
        edges: g.edge_count(),
        cubic: class.is_cubic,
        claw_free: claws.is_empty(),
        z: None,
        z_witness: None,
        alpha: None,
        alpha_witness: None,
        phi: None,
        max_genus: None,
        upper_embeddable: None,
        one_face: None,
        two_face: None,
        claw_center_count: claws.len(),
        bounds: Vec::new(),
        not_applicable: Vec::new(),
        incomplete: Vec::new(),
        timings: cfg.timings.then(BTreeMap::new),
    };
    let mut run = Runner { cfg, cert: &mut cert };

    let zf = run.solve("zero_forcing", |b| zero_forcing_number_with_budget(g, b));
    let mis = run.solve("independence", |b| maximum_independent_set_with_budget(g, b));
    if let Some(zf) = zf {
        run.cert.z = Some(zf.z);
        run.cert.z_witness = Some(zf.witness);
    }
    if let Some(mis) = mis {
        run.cert.alpha = Some(mis.alpha);
        run.cert.alpha_witness = Some(mis.witness);
    }
    let embed = if class.is_cubic && cfg.embeddability {
        run.solve("decycling", |b| bounds::embeddability_report_with_budget(g, b))
    } else {
        None
    };
    if let Some(e) = &embed {
        run.cert.phi = Some(e.phi);
        run.cert.max_genus = Some(e.max_genus);
        run.cert.upper_embeddable = Some(e.upper_embeddable);
        run.cert.one_face = Some(e.one_face);
        run.cert.two_face = Some(e.two_face);
    }
    let (Some(z), Some(alpha)) = (zf.map(|x| x.z), mis.map(|x| x.alpha)) else {
        run.cert.incomplete.push("bound checks skipped: exact Z or alpha unavailable".into());
        return Ok(cert);
    };
    let (zi, ai) = (z as i64, alpha as i64);

    if class.is_cubic {
        if is_k4 {
            run.skip(CONJECTURE, "K4 is excluded");
            run.skip(bounds::THREE_ALPHA, "K4 is excluded");
        } else {
            run.push(BoundReport::compare(CONJECTURE, zi, ai + 1));
            run.attempt("three_alpha", || bounds::three_alpha_report(g, z, alpha));
        }
    }
    if class.is_subcubic {
        if is_k4 {
            run.skip(CLAW_CENTERS, "K4 is excluded");
        } else {
            run.push(BoundReport::compare(CLAW_CENTERS, zi, ai + 1 + claws.len() as i64));
            if claws.is_empty() {
                run.push(BoundReport::compare(CLAW_FREE, zi, ai + 1));
            }
        }
    }
    if let Some(e) = &embed {
        if e.upper_embeddable {
            run.push(BoundReport::compare(UPPER_EMBEDDABLE, zi, ai + 2));
        }
        if cfg.constructions {
            for (name, cap, part) in [(ONE_FACE, 1, &e.one_face_partition), (TWO_FACE, 2, &e.two_face_partition)] {
                if let Some(p) = part {
                    run.attempt("acyclic_remainder", || {
                        let mut r = bounds::remainder_report(g, p.s, alpha)?;
                        r.name = name.to_string();
                        if r.bound != ai + cap {
                            r.holds = false;
                            r.detail = Some(format!("partition bound {} differs from alpha + {cap}", r.bound));
                        }
                        Ok(r)
                    });
                }
            }
        }
    }
    let (ratio, small) = bounds::chromatic_free_checks(g.n(), z, alpha);
    run.push(ratio);
    if let Some(s) = small {
        run.push(s);
    }
    if cfg.constructions && g.max_degree() >= 3 && !g.is_complete() {
        run.attempt("max_degree", || bounds::max_degree_report(g, alpha));
    }
    Ok(cert)
}

struct Runner<'a> {
    cfg: &'a RunConfig,
    cert: &'a mut Certificate,
}

impl Runner<'_> {
    fn solve<T>(&mut self, solver: &str, f: impl FnOnce(&Budget) -> Result<T>) -> Option<T> {
        let start = Instant::now();
        let out = f(&Budget::new(self.cfg.budget));
        if let Some(t) = &mut self.cert.timings {
            *t.entry(solver.to_string()).or_default() += start.elapsed().as_secs_f64();
        }
        match out {
            Ok(x) => Some(x),
            Err(e) => {
                self.cert.incomplete.push(format!("{solver}: {e}"));
                None
            }
        }
    }

    fn attempt(&mut self, solver: &str, f: impl FnOnce() -> Result<BoundReport>) {
        if let Some(r) = self.solve(solver, |_| f()) {
            self.push(r);
        }
    }

    fn push(&mut self, r: BoundReport) {
        self.cert.bounds.push(r);
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.cert.not_applicable.push(NotApplicable { name: name.into(), reason: reason.into() });
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub held: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PerN {
    pub graphs: usize,
    pub cubic: usize,
    pub claw_free: usize,
    pub embeddability_checked: usize,
    pub upper_embeddable: usize,
    pub one_face: usize,
    pub two_face: usize,
}

impl PerN {
    pub fn upper_embeddable_fraction(&self) -> Option<f64> {
        fraction(self.upper_embeddable, self.embeddability_checked)
    }

    pub fn one_face_fraction(&self) -> Option<f64> {
        fraction(self.one_face, self.embeddability_checked)
    }
}

fn fraction(a: usize, b: usize) -> Option<f64> {
    (b > 0).then(|| a as f64 / b as f64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub report: BoundReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejected {
    pub record: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BatchSummary {
    pub graphs: usize,
    pub complete: usize,
    pub violations: Vec<Violation>,
    /// graph6 of rows with solver failures.
    pub incomplete: Vec<String>,
    /// Inputs that could not be parsed or analyzed, by record number.
    pub rejected: Vec<Rejected>,
    pub tallies: BTreeMap<String, Tally>,
    pub per_n: BTreeMap<usize, PerN>,
}

impl BatchSummary {
    fn absorb(&mut self, c: &Certificate) {
        self.graphs += 1;
        if c.is_complete() {
            self.complete += 1;
        } else {
            self.incomplete.push(c.graph6.clone());
        }
        for b in &c.bounds {
            let t = self.tallies.entry(b.name.clone()).or_default();
            t.checked += 1;
            t.held += b.holds as usize;
            if !b.holds {
                self.violations.push(Violation { graph6: c.graph6.clone(), report: b.clone() });
            }
        }
        let p = self.per_n.entry(c.n).or_default();
        p.graphs += 1;
        p.cubic += c.cubic as usize;
        p.claw_free += c.claw_free as usize;
        if let Some(u) = c.upper_embeddable {
            p.embeddability_checked += 1;
            p.upper_embeddable += u as usize;
            p.one_face += c.one_face.unwrap_or(false) as usize;
            p.two_face += c.two_face.unwrap_or(false) as usize;
        }
    }

    /// Human-readable report.
    pub fn render(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graphs: {}  complete: {}  incomplete: {}  rejected: {}  violations: {}",
            self.graphs,
            self.complete,
            self.incomplete.len(),
            self.rejected.len(),
            self.violations.len()
        );
        for v in &self.violations {
            let _ = writeln!(
                s,
                "VIOLATION {} {}: {} > {}{}",
                v.graph6,
                v.report.name,
                v.report.value,
                v.report.bound,
                v.report.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
            );
        }
        for (name, t) in &self.tallies {
            let _ = writeln!(s, "  {name}: {}/{} hold", t.held, t.checked);
        }
        for (n, p) in &self.per_n {
            let _ = write!(s, "  n={n}: {} graphs, {} claw-free", p.graphs, p.claw_free);
            if let (Some(u), Some(o)) = (p.upper_embeddable_fraction(), p.one_face_fraction()) {
                let _ = write!(s, ", upper-embeddable {u:.3}, one-face {o:.3}");
            }
            s.push('\n');
        }
        for r in &self.rejected {
            let _ = writeln!(s, "  rejected record {}: {}", r.record, r.reason);
        }
        s
    }
}

const CSV_HEADER: [&str; 12] = [
    "graph6", "n", "z", "alpha", "phi", "upper_embeddable", "one_face", "two_face", "claw_center_count", "bounds",
    "violations", "complete",
];

fn csv_row(c: &Certificate) -> [String; 12] {
    fn opt<T: ToString>(x: Option<T>) -> String {
        x.map(|v| v.to_string()).unwrap_or_default()
    }
    [
        c.graph6.clone(),
        c.n.to_string(),
        opt(c.z),
        opt(c.alpha),
        opt(c.phi),
        opt(c.upper_embeddable),
        opt(c.one_face),
        opt(c.two_face),
        c.claw_center_count.to_string(),
        c.bounds.len().to_string(),
        c.violations().count().to_string(),
        c.is_complete().to_string(),
    ]
}

const CHUNK: usize = 256;

/// Verifies every graph of `source` on a worker pool and writes one JSON
/// certificate per line to `out` (and a CSV row to `csv`), in input order.
/// Items carry a record number used to report rejected inputs.
pub fn verify_batch<I>(source: I, cfg: &RunConfig, out: &mut dyn Write, csv: Option<&mut dyn Write>) -> Result<BatchSummary>
where
    I: IntoIterator<Item = (usize, Result<Graph>)>,
{
    cfg.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| Error::precondition(format!("worker pool: {e}")))?;
    let mut csv = csv.map(csv::Writer::from_writer);
    if let Some(w) = &mut csv {
        w.write_record(CSV_HEADER).map_err(io_error)?;
    }
    let mut summary = BatchSummary::default();
    let mut source = source.into_iter().peekable();
    while source.peek().is_some() {
        let chunk: Vec<(usize, Result<Graph>)> = source.by_ref().take(CHUNK).collect();
        let results: Vec<(usize, Result<Certificate>)> = pool.install(|| {
            chunk
                .into_par_iter()
                .map(|(record, g)| (record, g.and_then(|g| verify_graph(&g, cfg))))
                .collect()
        });
        for (record, result) in results {
            match result {
                Ok(c) => {
                    let line = serde_json::to_string(&c).expect("certificates serialize");
                    writeln!(out, "{line}").map_err(io_error)?;
                    if let Some(w) = &mut csv {
                        w.write_record(csv_row(&c)).map_err(io_error)?;
                    }
                    summary.absorb(&c);
                }
                Err(e) => summary.rejected.push(Rejected { record, reason: e.to_string() }),
            }
        }
    }
    out.flush().map_err(io_error)?;
    if let Some(w) = &mut csv {
        w.flush().map_err(io_error)?;
    }
    Ok(summary)
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

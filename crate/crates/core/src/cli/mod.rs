//! Command-line front end. [`run`] returns the process exit code:
//! 0 when every check passes, 1 when a mathematical check fails, 2 on a
//! usage or configuration error.

mod cache;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

pub use cache::FileStore;
pub use output::{render, Format, Table};

use crate::combinat::{fake_degree, partitions_of, Partition};
use crate::generators::{enumerate_indices, p_poly, IndexTuple, Shape};
use crate::invmod::{default_max_degree, module_degree_span, verify_theorem1};
use crate::polyring::ideal_degree;
use crate::report::{CheckRecord, VerificationReport};
use crate::store::{set_basis_store, BasisStore, CacheKey};
use crate::weylmod::{default_tensor_degree, minimal_n, property_suite, verify_theorem2, verify_theorem3};

/// Seed used for property sampling unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 20_240_917;
/// Random instances per property unless `--instances` is given.
pub const DEFAULT_INSTANCES: usize = 1000;

#[derive(Parser, Debug)]
#[command(name = "weylinv", version, about = "Exact checks for invariant modules and tensor-space Weyl modules")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Single value of k.
    #[arg(long, global = true, env = "WEYLINV_K", value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,
    /// Run every k from 1 to this bound.
    #[arg(long, global = true, env = "WEYLINV_MAX_K", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_k: Option<u64>,
    /// Rank n of sl_{n+1}; defaults to the smallest rank fitting the shape.
    #[arg(long, global = true, env = "WEYLINV_N", value_parser = clap::value_parser!(u64).range(1..))]
    pub n: Option<u64>,
    /// Restrict to one shape, e.g. `2,1`.
    #[arg(long, global = true, env = "WEYLINV_SHAPE")]
    pub shape: Option<Shape>,
    #[arg(long, global = true, env = "WEYLINV_MAX_DEGREE")]
    pub max_degree: Option<u32>,
    #[arg(long, global = true, env = "WEYLINV_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, env = "WEYLINV_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "WEYLINV_PARALLEL", value_parser = clap::value_parser!(u64).range(1..))]
    pub parallel: Option<u64>,
    #[arg(long, global = true, env = "WEYLINV_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random instances per property in `verify all`.
    #[arg(long, global = true, env = "WEYLINV_INSTANCES", default_value_t = DEFAULT_INSTANCES)]
    pub instances: usize,
    /// Record wall-clock times in reports (breaks byte-determinism).
    #[arg(long, global = true, env = "WEYLINV_TIMINGS")]
    pub timings: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Fake degrees of all shapes of size k.
    Kostka,
    /// Generators p(r) of a shape up to a degree.
    Gens,
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Manage the on-disk basis cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem3,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheAction {
    Roundtrip,
    Clear,
}

/// A configuration problem, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

impl From<crate::Error> for UsageError {
    fn from(e: crate::Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Output of a command: rendered text and whether everything passed.
pub struct Outcome {
    pub text: String,
    pub pass: bool,
}

/// Parses `args` and runs the command, writing to stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, UsageError> {
    let cfg = &cli.config;
    if let Some(dir) = &cfg.cache_dir {
        let store = FileStore::new(dir).map_err(|e| usage(format!("cache dir {}: {e}", dir.display())))?;
        set_basis_store(Some(Arc::new(store)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallel.unwrap_or(0) as usize)
        .build()
        .map_err(|e| usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Kostka => cmd_kostka(cfg),
        Command::Gens => cmd_gens(cfg),
        Command::Verify { suite } => cmd_verify(cfg, *suite),
        Command::Cache { action } => cmd_cache(cfg, *action),
    })
}

fn k_values(cfg: &RunConfig) -> Result<Vec<usize>, UsageError> {
    match (cfg.k, cfg.max_k, &cfg.shape) {
        (Some(_), Some(_), _) => Err(usage("--k and --max-k are exclusive")),
        (Some(k), None, Some(s)) if s.k() != k as usize => {
            Err(usage(format!("shape {s} has size {}, not {k}", s.k())))
        }
        (Some(k), None, _) => Ok(vec![k as usize]),
        (None, Some(m), Some(s)) if s.k() > m as usize => Err(usage(format!("shape {s} exceeds --max-k {m}"))),
        (None, Some(m), _) => Ok((1..=m as usize).collect()),
        (None, None, Some(s)) => Ok(vec![s.k()]),
        (None, None, None) => Err(usage("one of --k, --max-k or --shape is required")),
    }
}

/// Shapes selected by the configuration, by k then reverse-lex order.
fn shapes(cfg: &RunConfig) -> Result<Vec<Shape>, UsageError> {
    let mut out = Vec::new();
    for k in k_values(cfg)? {
        for xi in partitions_of(k, None) {
            let s = Shape::new(xi)?;
            if cfg.shape.as_ref().is_none_or(|f| *f == s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct KostkaRow {
    k: usize,
    xi: Partition,
    fake_degree: String,
    coefficients: Vec<u64>,
}

impl Table for KostkaRow {
    fn headers() -> &'static [&'static str] {
        &["k", "xi", "fake_degree"]
    }
    fn cells(&self) -> Vec<String> {
        vec![self.k.to_string(), self.xi.to_string(), self.fake_degree.clone()]
    }
}

fn cmd_kostka(cfg: &RunConfig) -> Result<Outcome, UsageError> {
    let rows: Vec<KostkaRow> = shapes(cfg)?
        .into_iter()
        .map(|s| {
            let f = fake_degree(s.xi());
            KostkaRow { k: s.k(), xi: s.xi().clone(), fake_degree: f.to_string(), coefficients: f.coeffs().to_vec() }
        })
        .collect();
    Ok(Outcome { text: render(cfg.format, &rows), pass: true })
}

#[derive(Serialize)]
struct GenRow {
    xi: Partition,
    index: IndexTuple,
    degree: u32,
    p: String,
    zero: bool,
}

impl Table for GenRow {
    fn headers() -> &'static [&'static str] {
        &["xi", "index", "degree", "p", "zero"]
    }
    fn cells(&self) -> Vec<String> {
        vec![self.xi.to_string(), self.index.to_string(), self.degree.to_string(), self.p.clone(), self.zero.to_string()]
    }
}

fn cmd_gens(cfg: &RunConfig) -> Result<Outcome, UsageError> {
    let shape = cfg.shape.clone().ok_or_else(|| usage("gens requires --shape"))?;
    let max = cfg.max_degree.unwrap_or_else(|| default_tensor_degree(shape.k()));
    let mut rows = Vec::new();
    for s in 0..=max {
        for r in enumerate_indices(&shape, s) {
            let p = p_poly(&shape, &r)?;
            rows.push(GenRow { xi: shape.xi().clone(), degree: s, zero: p.is_zero(), p: p.to_string(), index: r });
        }
    }
    Ok(Outcome { text: render(cfg.format, &rows), pass: true })
}

impl Table for VerificationReport {
    fn headers() -> &'static [&'static str] {
        &["check", "k", "n", "xi", "degree_range", "pass", "failed", "millis"]
    }
    fn cells(&self) -> Vec<String> {
        let failed: Vec<&str> = self.failed_checks().map(|c| c.name.as_str()).collect();
        vec![
            self.check.clone(),
            self.k.to_string(),
            self.n.map_or_else(String::new, |n| n.to_string()),
            self.xi.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            format!("{}..{}", self.degree_range[0], self.degree_range[1]),
            self.pass.to_string(),
            failed.join(";"),
            self.millis.map_or_else(String::new, |m| m.to_string()),
        ]
    }
}

#[derive(Clone)]
enum Task {
    Theorem1(Shape, u32),
    Theorem2(Shape, usize, u32),
    Theorem3(Shape, usize, u32),
    Properties(u64, usize),
}

fn tensor_tasks(cfg: &RunConfig, shapes: &[Shape], third: bool) -> Result<Vec<Task>, UsageError> {
    let mut out = Vec::new();
    for s in shapes {
        let n = match cfg.n {
            Some(n) if s.xi().len() > n as usize + 1 => {
                if cfg.shape.is_some() {
                    return Err(usage(format!("shape {s} needs n ≥ {}", s.xi().len() - 1)));
                }
                continue;
            }
            Some(n) => n as usize,
            None => minimal_n(s),
        };
        let d = cfg.max_degree.unwrap_or_else(|| default_tensor_degree(s.k()));
        out.push(if third { Task::Theorem3(s.clone(), n, d) } else { Task::Theorem2(s.clone(), n, d) });
    }
    Ok(out)
}

fn run_task(t: &Task) -> crate::Result<VerificationReport> {
    match t {
        Task::Theorem1(s, d) => Ok(verify_theorem1(s, *d)),
        Task::Theorem2(s, n, d) => verify_theorem2(s, *n, *d),
        Task::Theorem3(s, n, d) => verify_theorem3(s, *n, *d),
        Task::Properties(seed, instances) => Ok(properties_report(*seed, *instances)),
    }
}

/// The seeded random property suites as a single report.
pub fn properties_report(seed: u64, instances: usize) -> VerificationReport {
    let c = property_suite(seed, instances);
    let rec = |name: &str, [ok, total]: [usize; 2]| CheckRecord::new(name, [ok, total], [total, total]);
    let checks = vec![
        rec("bimodule", c.bimodule),
        rec("contravariance", c.contravariance),
        rec("form_contravariance", c.form_contravariance),
        rec("lie_relations", c.lie_relations),
        rec("weight_orthogonality", c.weight_orthogonality),
        CheckRecord::new("seed", seed, seed),
    ];
    VerificationReport::new("properties", 4, Some(3), &[], [0, 2], checks)
}

fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<Outcome, UsageError> {
    let shapes = shapes(cfg)?;
    let mut tasks = Vec::new();
    if matches!(suite, Suite::Theorem1 | Suite::All) {
        tasks.extend(
            shapes.iter().map(|s| Task::Theorem1(s.clone(), cfg.max_degree.unwrap_or_else(|| default_max_degree(s.k())))),
        );
    }
    if matches!(suite, Suite::Theorem2 | Suite::All) {
        tasks.extend(tensor_tasks(cfg, &shapes, false)?);
    }
    if matches!(suite, Suite::Theorem3 | Suite::All) {
        tasks.extend(tensor_tasks(cfg, &shapes, true)?);
    }
    if suite == Suite::All {
        tasks.push(Task::Properties(cfg.seed, cfg.instances));
    }
    let mut reports = tasks.par_iter().map(run_task).collect::<crate::Result<Vec<_>>>()?;
    if !cfg.timings {
        reports.iter_mut().for_each(|r| r.millis = None);
    }
    for r in reports.iter().filter(|r| !r.pass) {
        let failed: Vec<&str> = r.failed_checks().map(|c| c.name.as_str()).collect();
        log::error!("{} failed for k={} xi={:?}: {}", r.check, r.k, r.xi, failed.join(", "));
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(Outcome { text: render(cfg.format, &reports), pass })
}

#[derive(Serialize)]
struct CacheRow {
    key: String,
    file: String,
    identical: bool,
}

impl Table for CacheRow {
    fn headers() -> &'static [&'static str] {
        &["key", "file", "identical"]
    }
    fn cells(&self) -> Vec<String> {
        vec![self.key.clone(), self.file.clone(), self.identical.to_string()]
    }
}

fn cmd_cache(cfg: &RunConfig, action: CacheAction) -> Result<Outcome, UsageError> {
    let dir = cfg.cache_dir.as_ref().ok_or_else(|| usage("cache commands require --cache-dir"))?;
    let store = FileStore::new(dir).map_err(|e| usage(e.to_string()))?;
    match action {
        CacheAction::Clear => {
            let n = store.clear().map_err(|e| usage(e.to_string()))?;
            Ok(Outcome { text: render(cfg.format, &[serde_json::json!({ "removed": n })]), pass: true })
        }
        CacheAction::Roundtrip => {
            let k = cfg.k.unwrap_or(3) as usize;
            let s = cfg.max_degree.unwrap_or(2);
            let shape = match &cfg.shape {
                Some(sh) => sh.clone(),
                None => {
                    let all = partitions_of(k, None);
                    Shape::new(all.get(1).unwrap_or(&all[0]).clone())?
                }
            };
            let ideal = ideal_degree(k, s).ideal().clone();
            let module = module_degree_span(&shape, s).basis().clone();
            let pairs = [
                (CacheKey::new("ideal", k, None, None, s), ideal),
                (CacheKey::new("module", shape.k(), None, Some(shape.xi().parts()), s), module),
            ];
            let rows: Vec<CacheRow> = pairs
                .iter()
                .map(|(key, basis)| {
                    store.store(key, basis);
                    CacheRow {
                        key: key.to_string(),
                        file: store.path_for(key).file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
                        identical: store.load(key).as_ref() == Some(basis),
                    }
                })
                .collect();
            let pass = rows.iter().all(|r| r.identical);
            Ok(Outcome { text: render(cfg.format, &rows), pass })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("weylinv").chain(args.iter().copied())).unwrap()
    }

    fn out(args: &[&str]) -> Outcome {
        let c = cli(args);
        execute(&c).map_err(|e| e.0).unwrap()
    }

    #[test]
    fn kostka_rows() {
        let o = out(&["kostka", "--k", "3", "--format", "csv"]);
        assert_eq!(o.text, "k,xi,fake_degree\n3,(3),1\n3,\"(2,1)\",q + q^2\n3,\"(1,1,1)\",q^3\n");
        let o = out(&["kostka", "--k", "2", "--format", "text"]);
        assert!(o.text.contains("(2)  1") && o.text.contains("(1,1)  q"), "{}", o.text);
        assert!(Cli::try_parse_from(["weylinv", "kostka", "--k", "0"]).is_err());
    }

    #[test]
    fn gens_rows() {
        let o = out(&["gens", "--shape", "1,1", "--max-degree", "2", "--format", "csv"]);
        let lines: Vec<&str> = o.text.lines().collect();
        assert_eq!(lines[1], "\"(1,1)\",((0)),0,0,true");
        assert_eq!(lines[2], "\"(1,1)\",((1)),1,1 t1 - 1 t2,false");
        assert_eq!(lines[3], "\"(1,1)\",((2)),2,1 t1^2 - 1 t2^2,false");
        let o = out(&["gens", "--shape", "3", "--max-degree", "0", "--format", "csv"]);
        assert_eq!(o.text.lines().nth(1), Some("(3),(),0,1,false"));
        assert!(execute(&cli(&["gens"])).is_err());
    }

    #[test]
    fn verify_small() {
        let o = out(&["verify", "theorem1", "--k", "1"]);
        assert!(o.pass);
        let reports: Vec<VerificationReport> = serde_json::from_str(&o.text).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].millis, None);
        let o = out(&["verify", "theorem3", "--k", "2", "--n", "1", "--shape", "1,1", "--max-degree", "3"]);
        assert!(o.pass);
        assert!(execute(&cli(&["verify", "theorem3", "--shape", "1,1,1", "--n", "1"])).is_err());
        assert!(execute(&cli(&["verify", "theorem1", "--k", "2", "--shape", "2,1"])).is_err());
        assert!(execute(&cli(&["verify", "theorem1"])).is_err());
    }

    #[test]
    fn shapes_skip_tall_without_filter() {
        let o = out(&["verify", "theorem2", "--k", "3", "--n", "1"]);
        let reports: Vec<VerificationReport> = serde_json::from_str(&o.text).unwrap();
        let xis: Vec<Vec<usize>> = reports.iter().map(|r| r.xi.clone()).collect();
        assert_eq!(xis, vec![vec![3], vec![2, 1]]);
        assert!(o.pass);
    }
}

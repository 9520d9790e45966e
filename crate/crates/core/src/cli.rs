//! The `congestion` command line.
//!
//! Exit status is 0 on success, 1 for usage or validation errors and 2 when
//! a numerical method fails to converge. Every output file starts with a
//! provenance line naming the tool version and the full invocation.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::continuum::{
    ball_volume, continuum_inertia, lambda_ball, mc_transit, mu_density, BallConfig, ContinuumError, CurvatureClass,
    SpaceSpec,
};
use crate::experiments::{
    conjecture_report, conjecture_row, write_experiment_outputs, ConjectureRow, ExperimentConfig, ExperimentError,
};
use crate::generators::{
    attach_appendix, attach_appendix_embedded, lattice, ring_growth, GeneratorError, LatticeSpec, RingGrowthSpec,
};
use crate::geometry::{
    demand_weighted_inertia, graph_inertia, gromov_delta, vertex_curvature, EmbeddingFormatError, GeometryError,
    PlanarEmbedding, TripleSampling,
};
use crate::graph::io::{parse_edge_list, read_demand_csv, write_edge_list, FormatError};
use crate::graph::{compute_geodesics, traffic_streaming, Demand, GraphError, WeightedGraph};

#[derive(Parser, Debug)]
#[command(name = "congestion", version, about = "Traffic, curvature and geodesic-density metrics for networks")]
struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Table format for metric output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FamilyArg {
    Ring,
    Lattice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Hyp,
    Euc,
    Sph,
}

#[derive(Args, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenerateSpec {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    valence: Option<usize>,
    #[arg(long)]
    layers: Option<usize>,
    /// Lattice dimension.
    #[arg(long = "n")]
    #[serde(rename = "n")]
    dim: Option<usize>,
    #[arg(long)]
    side: Option<usize>,
    /// Hang a path of unit edges off this vertex.
    #[arg(long)]
    appendix_at: Option<u64>,
    /// Length of the appendix path (default 1).
    #[arg(long)]
    appendix_len: Option<usize>,
}

impl GenerateSpec {
    fn or(self, base: GenerateSpec) -> GenerateSpec {
        GenerateSpec {
            family: self.family.or(base.family),
            valence: self.valence.or(base.valence),
            layers: self.layers.or(base.layers),
            dim: self.dim.or(base.dim),
            side: self.side.or(base.side),
            appendix_at: self.appendix_at.or(base.appendix_at),
            appendix_len: self.appendix_len.or(base.appendix_len),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph as an edge list (and its embedding for ring graphs).
    Generate {
        #[command(flatten)]
        spec: GenerateSpec,
        /// JSON file with the same keys as the flags; flags given on the
        /// command line take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        emb: Option<PathBuf>,
    },
    /// Edge and vertex traffic rates and betweenness.
    Traffic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        demand: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Angular-defect curvature of every interior vertex.
    Curvature {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        emb: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moment of inertia of every vertex and the centroid.
    Inertia {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        demand: Option<PathBuf>,
        #[arg(long = "p", default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Thin-triangle hyperbolicity constant.
    Delta {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 20_000)]
        triples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized load of a ball in a constant-curvature space.
    Continuum {
        #[arg(long, value_enum)]
        space: Option<SpaceArg>,
        #[arg(long = "k")]
        k: Option<f64>,
        #[arg(long = "n", default_value_t = 2)]
        n: usize,
        #[arg(long = "R")]
        outer: Option<f64>,
        #[arg(long = "r")]
        r: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        rho: f64,
        /// Read the ball from a JSON file instead of the flags above.
        #[arg(long, conflicts_with_all = ["space", "outer", "r"])]
        ball: Option<PathBuf>,
        /// Also report density and inertia at this distance from the centre.
        #[arg(long = "a")]
        a: Option<f64>,
        #[arg(long = "p", default_value_t = 2.0)]
        p: f64,
        /// Monte Carlo samples for an independent estimate.
        #[arg(long)]
        mc: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Emit the density at this many evenly spaced radii instead (columns a,mu,err).
        #[arg(long)]
        mu_sweep: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a scaling experiment described by a JSON config.
    Scaling {
        #[arg(long)]
        config: PathBuf,
        /// Output directory; overrides the config's `out`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Where traffic peaks against where inertia is least.
    Report {
        #[arg(long, required_unless_present = "compare")]
        graph: Option<PathBuf>,
        /// Compare valences 6, 7, 8 and a square lattice instead.
        #[arg(long)]
        compare: bool,
        #[arg(long, default_value_t = 600)]
        target: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl Failure {
    fn usage(e: impl Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

macro_rules! usage_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::usage(e)
            }
        }
    )*};
}

usage_errors!(
    FormatError,
    EmbeddingFormatError,
    GeometryError,
    GeneratorError,
    std::io::Error,
    serde_json::Error,
    csv::Error
);

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::IdentityViolated { .. } => Failure::Numeric(e.to_string()),
            _ => Failure::usage(e),
        }
    }
}

impl From<ContinuumError> for Failure {
    fn from(e: ContinuumError) -> Self {
        match e {
            ContinuumError::QuadratureNotConverged(_) => Failure::Numeric(e.to_string()),
            _ => Failure::usage(e),
        }
    }
}

impl From<ExperimentError> for Failure {
    fn from(e: ExperimentError) -> Self {
        if e.is_numeric() {
            Failure::Numeric(e.to_string())
        } else {
            Failure::usage(e)
        }
    }
}

#[derive(Debug, Clone)]
enum Cell {
    Text(String),
    Num(f64),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Num(x as f64)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => x.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Num(x) => json!(x),
        }
    }
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn metrics() -> Self {
        Table { columns: vec!["entity", "id", "metric", "value"], rows: Vec::new() }
    }

    fn push(&mut self, entity: &str, id: impl Display, metric: &str, value: impl Into<Cell>) {
        self.rows.push(vec![entity.into(), id.to_string().into(), metric.into(), value.into()]);
    }

    fn render(&self, format: Format, header: &[String]) -> Result<Vec<u8>, Failure> {
        match format {
            Format::Csv => {
                let mut buf = Vec::new();
                for line in header {
                    writeln!(buf, "# {line}")?;
                }
                let mut w = csv::Writer::from_writer(buf);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::text))?;
                }
                w.into_inner().map_err(|e| Failure::usage(e.error()))
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> =
                            self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut text = serde_json::to_vec_pretty(&json!({ "provenance": header, "rows": rows }))?;
                text.push(b'\n');
                Ok(text)
            }
        }
    }
}

/// Output is buffered so the work can run inside a rayon pool and the
/// streams are written only once it finishes.
struct Context {
    format: Format,
    header: Vec<String>,
    stdout: Vec<u8>,
    warnings: Vec<String>,
}

impl Context {
    fn emit(&mut self, bytes: &[u8], out: Option<&Path>) -> Result<(), Failure> {
        match out {
            Some(path) => fs::write(path, bytes)?,
            None => self.stdout.extend_from_slice(bytes),
        }
        Ok(())
    }

    fn emit_table(&mut self, table: &Table, out: Option<&Path>) -> Result<(), Failure> {
        let bytes = table.render(self.format, &self.header)?;
        self.emit(&bytes, out)
    }

    fn warn(&mut self, msg: &str) {
        self.warnings.push(msg.to_string());
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<WeightedGraph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_demand(path: Option<&Path>, g: &WeightedGraph) -> Result<Demand, Failure> {
    match path {
        None => Ok(Demand::Uniform),
        Some(p) => {
            let file = fs::File::open(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Ok(read_demand_csv(file, g)?)
        }
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn generate(ctx: &mut Context, cmd: Command) -> Result<(), Failure> {
    let Command::Generate { spec, config, out, emb } = cmd else { unreachable!() };
    let spec = match config {
        Some(path) => spec.or(serde_json::from_str(&read(&path)?)?),
        None => spec,
    };
    let appendix_len = spec.appendix_len.unwrap_or(1);
    let (g, embedding) = match need(spec.family, "family")? {
        FamilyArg::Ring => {
            let r = ring_growth(RingGrowthSpec {
                valence: need(spec.valence, "valence")?,
                layers: need(spec.layers, "layers")?,
            })?;
            match spec.appendix_at {
                Some(at) => {
                    let v = r.graph.index_of(at).ok_or(GraphError::UnknownVertex(at as usize))?;
                    let (g, e) = attach_appendix_embedded(&r.graph, &r.embedding, v, appendix_len)?;
                    (g, Some(e))
                }
                None => (r.graph, Some(r.embedding)),
            }
        }
        FamilyArg::Lattice => {
            if emb.is_some() {
                return Err(Failure::Usage("--emb is only available for ring graphs".into()));
            }
            let g = lattice(LatticeSpec { dim: need(spec.dim, "n")?, side: need(spec.side, "side")? })?;
            match spec.appendix_at {
                Some(at) => {
                    let v = g.index_of(at).ok_or(GraphError::UnknownVertex(at as usize))?;
                    (attach_appendix(&g, v, appendix_len)?, None)
                }
                None => (g, None),
            }
        }
    };
    let text = write_edge_list(&g, &ctx.header);
    ctx.emit(text.as_bytes(), out.as_deref())?;
    if let (Some(path), Some(e)) = (emb, embedding) {
        fs::write(path, e.to_text(&g, &ctx.header))?;
    }
    Ok(())
}

fn traffic(ctx: &mut Context, graph: &Path, demand: Option<&Path>, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let dem = load_demand(demand, &g)?;
    let report = traffic_streaming(&g, &dem)?;
    let mut t = Table::metrics();
    for v in 0..g.vertex_count() {
        t.push("vertex", g.label(v), "beta_c", report.betweenness[v]);
        t.push("vertex", g.label(v), "tau", report.vertex_rate[v]);
    }
    for (e, rate) in report.edge_rate.iter().enumerate() {
        t.push("edge", e, "tau", *rate);
    }
    ctx.emit_table(&t, out)
}

fn curvature(ctx: &mut Context, graph: &Path, emb: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let e = PlanarEmbedding::parse(&read(emb)?, &g)?;
    let mut t = Table::metrics();
    let mut skipped = 0;
    for v in 0..g.vertex_count() {
        match vertex_curvature(&g, &e, v) {
            Ok(c) => {
                t.push("vertex", g.label(v), "kappa", c.kappa);
                t.push("vertex", g.label(v), "angle_sum", c.angle_sum());
            }
            Err(GeometryError::NotInterior { .. } | GeometryError::TooFewNeighbors(_)) => skipped += 1,
            Err(err) => return Err(err.into()),
        }
    }
    if skipped > 0 {
        ctx.warn(&format!("{skipped} vertices are not interior and have no curvature"));
    }
    ctx.emit_table(&t, out)
}

fn inertia(
    ctx: &mut Context,
    graph: &Path,
    demand: Option<&Path>,
    p: f64,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if !(p.is_finite() && p >= 0.0) {
        return Err(Failure::Usage(format!("--p must be a non-negative number, got {p}")));
    }
    let g = load_graph(graph)?;
    let gd = compute_geodesics(&g)?;
    let report = match demand {
        None => graph_inertia(&gd, p),
        Some(_) => demand_weighted_inertia(&gd, &load_demand(demand, &g)?, p)?,
    };
    let mut t = Table::metrics();
    for (v, phi) in report.inertia.iter().enumerate() {
        t.push("vertex", g.label(v), "phi", *phi);
    }
    for &v in &report.centroid {
        t.push("centroid", g.label(v), "phi", report.inertia[v]);
    }
    ctx.emit_table(&t, out)
}

fn delta(ctx: &mut Context, graph: &Path, triples: usize, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let gd = compute_geodesics(&g)?;
    let est = gromov_delta(&gd, TripleSampling { budget: triples, seed })?;
    let mut t = Table::metrics();
    t.push("graph", "all", "delta", est.delta);
    t.push("graph", "all", "triples", est.triples);
    t.push("graph", "all", "exhaustive", if est.exhaustive { 1.0 } else { 0.0 });
    t.push("graph", "all", "seed", seed as f64);
    let (a, b, c) = est.argmax;
    t.push("graph", "all", "argmax", format!("{} {} {}", g.label(a), g.label(b), g.label(c)));
    ctx.emit_table(&t, out)
}

fn continuum(ctx: &mut Context, cmd: Command) -> Result<(), Failure> {
    let Command::Continuum { space, k, n, outer, r, rho, ball, a, p, mc, seed, mu_sweep, out } = cmd else {
        unreachable!()
    };
    let cfg = match ball {
        Some(path) => serde_json::from_str::<BallConfig>(&read(&path)?)?,
        None => {
            let class = match need(space, "space")? {
                SpaceArg::Hyp => CurvatureClass::Negative,
                SpaceArg::Euc => CurvatureClass::Zero,
                SpaceArg::Sph => CurvatureClass::Positive,
            };
            if class == CurvatureClass::Zero && k.is_some() {
                ctx.warn("--k is ignored for --space euc");
            }
            let k = if class == CurvatureClass::Zero { 1.0 } else { k.unwrap_or(1.0) };
            BallConfig {
                space: SpaceSpec { dimension: n, class, k },
                outer: need(outer, "R")?,
                r: need(r, "r")?,
                rho,
            }
        }
    };
    cfg.validate()?;
    if let Some(points) = mu_sweep {
        if points == 0 {
            return Err(Failure::Usage("--mu-sweep needs at least one point".into()));
        }
        let mut t = Table { columns: vec!["a", "mu", "err"], rows: Vec::new() };
        for i in 0..points {
            let at = cfg.outer * i as f64 / points as f64;
            let d = mu_density(cfg.space, cfg.outer, at)?;
            t.rows.push(vec![at.into(), d.value.into(), d.error.into()]);
        }
        return ctx.emit_table(&t, out.as_deref());
    }
    let mut t = Table::metrics();
    t.push("ball", "outer", "volume", ball_volume(cfg.space, cfg.outer)?);
    let lambda = lambda_ball(cfg)?;
    t.push("lambda", "quadrature", "value", lambda.value);
    t.push("lambda", "quadrature", "error", lambda.error);
    t.push("lambda", "quadrature", "evaluations", lambda.evaluations);
    if let Some(samples) = mc {
        let est = mc_transit(cfg, samples, seed)?;
        t.push("lambda", "monte_carlo", "mean", est.mean);
        t.push("lambda", "monte_carlo", "stderr", est.stderr);
        t.push("lambda", "monte_carlo", "samples", est.samples);
        t.push("lambda", "monte_carlo", "seed", est.seed as f64);
        t.push("lambda", "monte_carlo", "transit_fraction", est.transit_fraction);
        t.push("lambda", "monte_carlo", "transit_stderr", est.transit_stderr);
    }
    if let Some(at) = a {
        let mu = mu_density(cfg.space, cfg.outer, at)?;
        t.push("point", at, "mu", mu.value);
        t.push("point", at, "mu_error", mu.error);
        let phi = continuum_inertia(cfg.space, cfg.outer, at, p)?;
        t.push("point", at, "phi", phi.value);
        t.push("point", at, "phi_error", phi.error);
    }
    ctx.emit_table(&t, out.as_deref())
}

fn scaling(ctx: &mut Context, config: &Path, out: Option<PathBuf>) -> Result<(), Failure> {
    let cfg = ExperimentConfig::from_json(&read(config)?)?;
    let fit = crate::experiments::run_scaling(&cfg)?;
    if let Some(dir) = out.or_else(|| cfg.out.clone()) {
        write_experiment_outputs(&dir, &ctx.header, &cfg, &fit)?;
    }
    let metric = cfg.metric.name();
    let mut t = Table::metrics();
    for &(size, value) in &fit.points {
        t.push("point", size, metric, value);
    }
    t.push("fit", metric, "slope", fit.slope);
    t.push("fit", metric, "intercept", fit.intercept);
    t.push("fit", metric, "r_squared", fit.r_squared);
    ctx.emit_table(&t, None)
}

fn push_row(t: &mut Table, row: &ConjectureRow, label: impl Fn(usize) -> u64) {
    t.push("graph", &row.name, "vertices", row.vertices);
    t.push("graph", &row.name, "distance", row.distance);
    t.push("graph", &row.name, "spikiness", row.spikiness);
    t.push("graph", &row.name, "rank_correlation", row.rank_correlation.unwrap_or(f64::NAN));
    for &v in &row.max_traffic {
        t.push("argmax_tau", &row.name, "vertex", label(v) as f64);
    }
    for &v in &row.min_inertia {
        t.push("argmin_phi", &row.name, "vertex", label(v) as f64);
    }
}

fn report(
    ctx: &mut Context,
    graph: Option<PathBuf>,
    compare: bool,
    target: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let mut t = Table::metrics();
    if let Some(path) = graph {
        let g = load_graph(&path)?;
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        push_row(&mut t, &conjecture_row(&name, &g)?, |v| g.label(v));
    }
    if compare {
        for row in conjecture_report(target)? {
            push_row(&mut t, &row, |v| v as u64);
        }
    }
    ctx.emit_table(&t, out)
}

fn dispatch(ctx: &mut Context, command: Command) -> Result<(), Failure> {
    match command {
        cmd @ Command::Generate { .. } => generate(ctx, cmd),
        Command::Traffic { graph, demand, out } => traffic(ctx, &graph, demand.as_deref(), out.as_deref()),
        Command::Curvature { graph, emb, out } => curvature(ctx, &graph, &emb, out.as_deref()),
        Command::Inertia { graph, demand, p, out } => inertia(ctx, &graph, demand.as_deref(), p, out.as_deref()),
        Command::Delta { graph, triples, seed, out } => delta(ctx, &graph, triples, seed, out.as_deref()),
        cmd @ Command::Continuum { .. } => continuum(ctx, cmd),
        Command::Scaling { config, out } => scaling(ctx, &config, out),
        Command::Report { graph, compare, target, out } => report(ctx, graph, compare, target, out.as_deref()),
    }
}

/// Runs the CLI on `args` (program name first) with explicit output streams.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let invocation: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let header = vec![format!("congestion {} {}", env!("CARGO_PKG_VERSION"), invocation.join(" "))];
    let mut ctx = Context { format: cli.format, header, stdout: Vec::new(), warnings: Vec::new() };
    let result = match cli.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&mut ctx, cli.command)),
            Err(e) => Err(Failure::usage(e)),
        },
        None => dispatch(&mut ctx, cli.command),
    };
    for w in &ctx.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    match result {
        Ok(()) => match stdout.write_all(&ctx.stdout).and_then(|_| stdout.flush()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(stderr, "numerical error: {msg}");
            2
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(args, &mut out, &mut err)
}

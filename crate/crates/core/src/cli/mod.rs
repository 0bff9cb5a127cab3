//! Command-line front end. [`run`] returns the exit code and the text to
//! print, so the binary, the FFI layer and the tests share one code path.

pub mod schema;
pub mod sweep;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{de::DeserializeOwned, Serialize};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::complex::{ComplexJson, VertexPartition};
use crate::error::{check_cap, Error, Result};
use crate::geometry::{
    radon_partition, radon_path, random_points, rg_colorful_caratheodory, rg_colorful_helly, rg_tverberg,
    verify_radon_path, PointConfig, PointsJson,
};
use crate::graphs::{bipartite_counterexample, grid, kdd_double, kdd_single_class, random_graph, random_partition};
use crate::hallcheck::{
    check_hypothesis, extract_domination_witness, verify_instance, Classification, Instance, TheoremId,
};
use crate::homology::{eta_h, homology_report, reduced_euler_characteristic};
use crate::matroid::independence_complex_of;
use crate::reconfig::{rg_bipartite_matching, rg_colorful_with, rg_complex_matroid, Adjacency, ReconfigGraph};
use crate::sperner::{
    follow_paths, freudenthal_triangulation, random_r_sperner, staircase_triangulation, PrismTriangulation,
    TriangulationJson,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status for an error: capacity 3, internal 4, everything else 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Structural(_) => "structural",
        Error::Precondition(_) => "precondition",
        Error::Capacity { .. } => "capacity",
        Error::Lookup(_) => "lookup",
        Error::Parse(_) => "parse",
        Error::Internal(_) => "internal",
    }
}

#[derive(Parser, Debug)]
#[command(name = "hallreconf", version, about = "Exact Hall-type hypothesis checks and reconfiguration graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for every random generator.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest reconfiguration graph (vertices) or sweep (instances) to accept.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Betti numbers, f-vector and eta of a complex.
    Homology(SourceArgs),
    /// Homological connectedness of a complex.
    Eta(SourceArgs),
    /// Builds a reconfiguration graph and reports its components.
    Rg(RgArgs),
    /// Checks the hypothesis of a theorem and, unless --no-oracle, its conclusion.
    Check(CheckArgs),
    /// Domination witness for a disconnected RG(I(G), V).
    Witness(SourceArgs),
    /// Tverberg reconfiguration graph of a point set (needs --r).
    Tverberg(SourceArgs),
    /// A verified walk between two Radon partitions.
    RadonPath(RadonArgs),
    /// Colorful Caratheodory reconfiguration graph and verdict.
    Caratheodory(SourceArgs),
    /// Colorful Helly reconfiguration graph and verdict.
    Helly(SourceArgs),
    /// Path following on an R-Sperner labeled prism.
    Sperner(SpernerArgs),
    /// Writes a generated instance.
    Gen(GenArgs),
    /// Verifies a theorem over an exhaustive family of small instances.
    Sweep(SweepArgs),
    /// Prints the JSON schema of a payload kind.
    Schema {
        kind: String,
    },
    /// Lists theorem ids.
    Theorems,
}

/// Instance generators.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// The r x r grid hypergraph with all edges in one class (--r).
    Grid,
    /// K_{Δ,Δ} with both sides in one class (--delta).
    KddSingle,
    /// Two copies of K_{Δ,Δ} split into two classes (--delta).
    KddDouble,
    /// The four-edge bipartite r-graph with k = 2 (--r).
    BipartiteCounterexample,
    /// G(n, p) with a random partition into classes of the given sizes (--sizes, --p).
    RandomGraph,
    /// Random integer points (--n, --dim, --range, --r).
    RandomPoints,
}

/// Generator parameters and instance overrides.
#[derive(Args, Debug, Clone, Default, PartialEq)]
pub struct GenParams {
    #[arg(long)]
    pub m: Option<usize>,
    /// Deficiency, or the Leray index for the Helly theorems.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    /// Number of random points.
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long)]
    pub p: Option<f64>,
    /// Ambient dimension for random points.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Coordinates of random points lie in [-range, range].
    #[arg(long)]
    pub range: Option<i64>,
    /// Class sizes for random partitions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    /// Instance JSON; a bare complex or point set is accepted too.
    #[arg(long, conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generate the instance instead of reading it.
    #[arg(long, value_enum)]
    gen: Option<GenKind>,
    #[command(flatten)]
    params: GenParams,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RgKind {
    Colorful,
    ComplexMatroid,
    MatroidIntersection,
    BipartiteMatching,
    Tverberg,
    Caratheodory,
    Helly,
}

#[derive(Args, Debug)]
struct RgArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = RgKind::Colorful)]
    kind: RgKind,
    /// Colorful graphs only: join configurations that differ inside one class.
    #[arg(long)]
    weak: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Theorem id; `theorems` lists them.
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long, overrides_with = "no_oracle")]
    oracle: bool,
    /// Only evaluate the hypothesis.
    #[arg(long, overrides_with = "oracle")]
    no_oracle: bool,
}

#[derive(Args, Debug)]
struct RadonArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Start partition as {"assignment": {label: 1 | 2}}; defaults to a Radon partition.
    #[arg(long)]
    from: Option<PathBuf>,
    /// End partition; defaults to the start with its parts swapped.
    #[arg(long)]
    to: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TriangulationKind {
    Staircase,
    Freudenthal,
}

#[derive(Args, Debug)]
struct SpernerArgs {
    /// Triangulation JSON; replaces --n, --subdivisions and --triangulation.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    subdivisions: usize,
    #[arg(long, value_enum, default_value_t = TriangulationKind::Staircase)]
    triangulation: TriangulationKind,
    /// Number of random labelings, seeded seed, seed + 1, ...
    #[arg(long, default_value_t = 1)]
    runs: u64,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[command(flatten)]
    params: GenParams,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Graphs,
    Matroids,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    theorem: TheoremId,
    /// Largest vertex count (graphs) or ground set (matroids).
    #[arg(long, alias = "max-elements", default_value_t = 4)]
    max_vertices: usize,
    /// Most classes in a partition (graphs).
    #[arg(long, default_value_t = 2)]
    classes: usize,
    /// Largest class (graphs); defaults to no limit.
    #[arg(long)]
    max_class_size: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
}

/// Where a `check` instance comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceSource {
    File(PathBuf),
    Generator(GenKind),
}

/// One `check` run.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub theorem: TheoremId,
    pub source: InstanceSource,
    /// Generator parameters; `m`, `d`, `k`, `r` and `delta` also override the instance.
    pub params: GenParams,
    pub seed: u64,
    pub oracle: bool,
    pub output: Option<PathBuf>,
}

impl Experiment {
    pub fn instance(&self) -> Result<Instance> {
        let inst = match &self.source {
            InstanceSource::File(p) => load_instance(p)?,
            InstanceSource::Generator(kind) => generate(*kind, &self.params, self.seed)?,
        };
        Ok(overlay(inst, &self.params))
    }

    /// The report envelope and exit code; writes `output` when set.
    pub fn run(&self) -> Result<(i32, Value)> {
        let inst = self.instance()?;
        let (code, result) = if self.oracle {
            let v = verify_instance(&inst, self.theorem)?;
            let code = if v.classification == Classification::Counterexample { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
            (code, to_value(&v))
        } else {
            (EXIT_OK, to_value(&check_hypothesis(&inst, self.theorem)?))
        };
        let doc = envelope("check", Some(self.theorem), Some(&inst), result);
        if let Some(p) = &self.output {
            write_output(p, &render(&doc))?;
        }
        Ok((code, doc))
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// SHA-256 of the compact JSON form, whose object keys are sorted.
pub fn instance_hash<T: Serialize>(x: &T) -> String {
    hex::encode(Sha256::digest(to_value(x).to_string().as_bytes()))
}

fn envelope(command: &str, theorem: Option<TheoremId>, inst: Option<&Instance>, result: Value) -> Value {
    let mut o = Map::new();
    o.insert("command".into(), json!(command));
    if let Some(t) = theorem {
        o.insert("theorem".into(), json!(t));
    }
    if let Some(i) = inst {
        o.insert("instance_hash".into(), json!(instance_hash(i)));
    }
    o.insert("version".into(), json!(VERSION));
    o.insert("result".into(), result);
    Value::Object(o)
}

fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("json");
    s.push('\n');
    s
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::precondition(format!("cannot write {}: {e}", path.display())))
}

fn parse_error(path: &Path, e: serde_json::Error) -> Error {
    Error::Parse(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?).map_err(|e| parse_error(path, e))
}

/// Reads an instance; a file holding just a complex or a point set is wrapped.
pub fn load_instance(path: &Path) -> Result<Instance> {
    let text = read_text(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    if v.get("maximal_faces").is_some() {
        let c: ComplexJson = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
        return Ok(Instance { complex: Some(c), ..Default::default() });
    }
    let bare_points = v.get("points").is_some_and(|p| p.get("points").is_none()) && v.get("d").is_some();
    if bare_points {
        let p: PointsJson = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
        return Ok(Instance { points: Some(p), ..Default::default() });
    }
    serde_json::from_str(&text).map_err(|e| parse_error(path, e))
}

fn overlay(mut inst: Instance, p: &GenParams) -> Instance {
    inst.m = p.m.or(inst.m);
    inst.d = p.d.or(inst.d);
    inst.k = p.k.or(inst.k);
    inst.r = p.r.or(inst.r);
    inst.delta = p.delta.or(inst.delta);
    inst
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::precondition(format!("missing --{flag}")))
}

/// Builds the instance for a generator. Randomness comes only from `seed`.
pub fn generate(kind: GenKind, p: &GenParams, seed: u64) -> Result<Instance> {
    let inst = match kind {
        GenKind::Grid => {
            let r = need(p.r, "r")?;
            let h = grid(r)?;
            Instance {
                partition: Some(VertexPartition::new(&[h.edge_ids()])?.to_json()),
                r: Some(r),
                ..Instance::from_hypergraph(&h)
            }
        }
        GenKind::KddSingle | GenKind::KddDouble => {
            let delta = need(p.delta, "delta")?;
            let (g, v) = if kind == GenKind::KddSingle { kdd_single_class(delta)? } else { kdd_double(delta)? };
            Instance { delta: Some(delta), ..Instance::from_graph(&g, &v) }
        }
        GenKind::BipartiteCounterexample => {
            let (h, a) = bipartite_counterexample(need(p.r, "r")?)?;
            Instance { a_side: Some(a), k: Some(2), ..Instance::from_hypergraph(&h) }
        }
        GenKind::RandomGraph => {
            if p.sizes.is_empty() {
                return Err(Error::precondition("missing --sizes"));
            }
            let n = p.sizes.iter().sum();
            let g = random_graph(n, p.p.unwrap_or(0.5), seed)?;
            let v = random_partition(&p.sizes, seed.wrapping_add(1))?;
            Instance::from_graph(&g, &v)
        }
        GenKind::RandomPoints => {
            let pts = random_points(need(p.n, "n")?, p.dim.unwrap_or(2), p.range.unwrap_or(10), seed);
            Instance { points: Some(pts.to_json()), r: p.r, ..Default::default() }
        }
    };
    Ok(overlay(inst, p))
}

fn source_instance(s: &SourceArgs, seed: u64) -> Result<Instance> {
    let inst = match (&s.input, s.gen) {
        (Some(p), _) => load_instance(p)?,
        (None, Some(kind)) => generate(kind, &s.params, seed)?,
        (None, None) => return Err(Error::precondition("give --input or --gen")),
    };
    Ok(overlay(inst, &s.params))
}

fn capped(g: ReconfigGraph, cap: Option<usize>) -> Result<ReconfigGraph> {
    if let Some(c) = cap {
        check_cap("reconfiguration graph vertices", g.len(), c)?;
    }
    Ok(g)
}

fn build_rg(inst: &Instance, kind: RgKind, weak: bool) -> Result<ReconfigGraph> {
    match kind {
        RgKind::Colorful => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            let adj = if weak { Adjacency::OneClass } else { Adjacency::Union };
            rg_colorful_with(&c, &v, inst.k.unwrap_or(v.n()), adj)
        }
        RgKind::ComplexMatroid => {
            let m = inst.matroid()?;
            rg_complex_matroid(&inst.complex()?, &m, inst.k.unwrap_or(m.rank_total()))
        }
        RgKind::MatroidIntersection => rg_complex_matroid(
            &independence_complex_of(&inst.matroid()?)?,
            &inst.second_matroid()?,
            need(inst.k, "k")?,
        ),
        RgKind::BipartiteMatching => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            rg_bipartite_matching(&h, &a, inst.k.unwrap_or(a.len()))
        }
        RgKind::Tverberg => rg_tverberg(inst.points()?.points(), need(inst.r, "r")?),
        RgKind::Caratheodory => rg_colorful_caratheodory(&inst.point_sets()?, &inst.target()?),
        RgKind::Helly => rg_colorful_helly(&inst.families()?),
    }
}

fn assignment_json(pts: &PointConfig, parts: &[usize]) -> Value {
    let m: Map<String, Value> =
        pts.labels().iter().zip(parts).map(|(l, &p)| (l.clone(), json!(p + 1))).collect();
    json!({ "assignment": m })
}

fn read_assignment(path: &Path, pts: &PointConfig) -> Result<Vec<usize>> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Assignment {
        assignment: std::collections::BTreeMap<String, usize>,
    }
    let a: Assignment = read_json(path)?;
    if a.assignment.len() != pts.len() {
        return Err(Error::structural("the assignment must cover every point exactly once"));
    }
    let mut parts = vec![0; pts.len()];
    for (label, part) in a.assignment {
        if !(1..=2).contains(&part) {
            return Err(Error::structural(format!("part {part} of {label:?} is not 1 or 2")));
        }
        parts[pts.label_index(&label)?] = part - 1;
    }
    Ok(parts)
}

fn geometric_verdict(
    command: &str,
    inst: &Instance,
    theorem: TheoremId,
    g: ReconfigGraph,
) -> Result<(i32, Value)> {
    let v = verify_instance(inst, theorem)?;
    let code = if v.classification == Classification::Counterexample { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
    let result = json!({ "rg": g.analyze(), "verdict": v });
    Ok((code, envelope(command, Some(theorem), Some(inst), result)))
}

fn execute(cli: &Cli) -> Result<(i32, Value)> {
    let seed = cli.seed;
    match &cli.command {
        Command::Homology(s) => {
            let inst = source_instance(s, seed)?;
            let c = inst.complex()?;
            let rep = homology_report(&c);
            let result = json!({
                "betti": rep.betti,
                "eta_h": rep.eta_h,
                "f_vector": c.f_vector(),
                "reduced_euler_characteristic": reduced_euler_characteristic(&c),
            });
            Ok((EXIT_OK, envelope("homology", None, Some(&inst), result)))
        }
        Command::Eta(s) => {
            let inst = source_instance(s, seed)?;
            let result = json!({ "eta_h": eta_h(&inst.complex()?) });
            Ok((EXIT_OK, envelope("eta", None, Some(&inst), result)))
        }
        Command::Rg(a) => {
            let inst = source_instance(&a.source, seed)?;
            let g = capped(build_rg(&inst, a.kind, a.weak)?, cli.cap)?;
            Ok((EXIT_OK, envelope("rg", None, Some(&inst), to_value(&g.analyze()))))
        }
        Command::Check(a) => {
            let source = match (&a.source.input, a.source.gen) {
                (Some(p), _) => InstanceSource::File(p.clone()),
                (None, Some(k)) => InstanceSource::Generator(k),
                (None, None) => return Err(Error::precondition("give --input or --gen")),
            };
            let exp = Experiment {
                theorem: a.theorem,
                source,
                params: a.source.params.clone(),
                seed,
                oracle: !a.no_oracle,
                output: None,
            };
            exp.run()
        }
        Command::Witness(s) => {
            let inst = source_instance(s, seed)?;
            let w = extract_domination_witness(&inst.graph()?, &inst.partition()?)?;
            Ok((EXIT_OK, envelope("witness", None, Some(&inst), to_value(&w))))
        }
        Command::Tverberg(s) => {
            let inst = source_instance(s, seed)?;
            let pts = inst.points()?;
            let r = need(inst.r, "r")?;
            let g = capped(rg_tverberg(pts.points(), r)?, cli.cap)?;
            let threshold = (pts.dim() + 1) * r.saturating_sub(1) + 2;
            let hypothesis = pts.len() >= threshold;
            let a = g.analyze();
            let classification = Classification::of(hypothesis, a.connected);
            let code = if classification == Classification::Counterexample { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
            let result = json!({
                "n": pts.len(),
                "d": pts.dim(),
                "r": r,
                "threshold": threshold,
                "hypothesis": hypothesis,
                "classification": classification,
                "rg": a,
            });
            Ok((code, envelope("tverberg", Some(TheoremId::Tverberg), Some(&inst), result)))
        }
        Command::RadonPath(a) => {
            let inst = source_instance(&a.source, seed)?;
            let pts = inst.points()?;
            let from = match &a.from {
                Some(p) => read_assignment(p, &pts)?,
                None => radon_partition(pts.points())?
                    .ok_or_else(|| Error::precondition("the points are affinely independent"))?,
            };
            let to = match &a.to {
                Some(p) => read_assignment(p, &pts)?,
                None => from.iter().map(|&x| 1 - x).collect(),
            };
            let path = radon_path(pts.points(), &from, &to)?;
            verify_radon_path(pts.points(), &path.steps, &from, &to)?;
            let result = json!({
                "from": assignment_json(&pts, &from),
                "to": assignment_json(&pts, &to),
                "steps": path.steps.iter().map(|s| assignment_json(&pts, s)).collect::<Vec<_>>(),
                "length": path.steps.len().saturating_sub(1),
                "detour": path.detour,
                "verified": true,
            });
            Ok((EXIT_OK, envelope("radon-path", None, Some(&inst), result)))
        }
        Command::Caratheodory(s) => {
            let inst = source_instance(s, seed)?;
            let g = capped(build_rg(&inst, RgKind::Caratheodory, false)?, cli.cap)?;
            geometric_verdict("caratheodory", &inst, TheoremId::ColorfulCaratheodory, g)
        }
        Command::Helly(s) => {
            let inst = source_instance(s, seed)?;
            let g = capped(build_rg(&inst, RgKind::Helly, false)?, cli.cap)?;
            geometric_verdict("helly", &inst, TheoremId::ColorfulHelly, g)
        }
        Command::Sperner(a) => {
            let t = match &a.input {
                Some(p) => PrismTriangulation::from_json(&read_json::<TriangulationJson>(p)?)?,
                None => match a.triangulation {
                    TriangulationKind::Staircase => staircase_triangulation(a.n, a.subdivisions)?,
                    TriangulationKind::Freudenthal => freudenthal_triangulation(a.n, a.subdivisions)?,
                },
            };
            let mut runs = Vec::new();
            for i in 0..a.runs {
                let s = seed.wrapping_add(i);
                let labels = random_r_sperner(&t, s);
                let report = follow_paths(&t, &labels)?;
                runs.push(json!({ "seed": s, "labels": labels, "report": report }));
            }
            let tj = t.to_json();
            let result = json!({
                "triangulation": tj,
                "simplices": t.simplices().len(),
                "runs": runs,
            });
            let mut doc = envelope("sperner", None, None, result);
            doc["instance_hash"] = json!(instance_hash(&tj));
            Ok((EXIT_OK, doc))
        }
        Command::Gen(a) => Ok((EXIT_OK, to_value(&generate(a.kind, &a.params, seed)?))),
        Command::Sweep(a) => {
            let instances = match a.family {
                Family::Graphs => sweep::graph_instances(
                    a.max_vertices,
                    a.classes,
                    a.max_class_size.unwrap_or(a.max_vertices),
                )?
                .into_iter()
                .map(|i| Instance { m: a.m, d: a.d, ..i })
                .collect(),
                Family::Matroids => sweep::matroid_instances(a.max_vertices, a.theorem, a.m, a.d)?,
            };
            if let Some(c) = cli.cap {
                check_cap("sweep instances", instances.len(), c)?;
            }
            let family = match a.family {
                Family::Graphs => "graphs",
                Family::Matroids => "matroids",
            };
            let summary = sweep::summarize(family, a.theorem, &sweep::run_sweep(&instances, a.theorem))?;
            let code = if summary.counterexamples > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
            Ok((code, envelope("sweep", Some(a.theorem), None, to_value(&summary))))
        }
        Command::Schema { kind } => Ok((EXIT_OK, schema::schema(kind)?)),
        Command::Theorems => Ok((EXIT_OK, json!(TheoremId::ALL))),
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code with the text to print.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.exit_code() == 0 { EXIT_OK } else { EXIT_INPUT };
            return (code, e.to_string());
        }
    };
    let outcome = execute(&cli).and_then(|(code, doc)| {
        let text = match cli.format {
            Format::Json => render(&doc),
        };
        if let Some(p) = &cli.output {
            write_output(p, &text)?;
        }
        Ok((code, text))
    });
    match outcome {
        Ok(x) => x,
        Err(e) => {
            let doc = json!({
                "error": { "kind": error_kind(&e), "message": e.to_string() },
                "version": VERSION,
            });
            (exit_code(&e), render(&doc))
        }
    }
}

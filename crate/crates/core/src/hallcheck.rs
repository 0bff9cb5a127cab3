//! Hypothesis checkers for the Hall-type theorems, each paired with an oracle
//! that decides the conclusion directly on the same instance.

use crate::complex::{
    alexander_dual, colorful_complex, colorful_nerve, colorful_simplices, for_each_subset,
    intersection_complex, is_subset, union, ComplexJson, PartitionJson, SimplicialComplex, Vertex,
    VertexPartition,
};
use crate::error::{check_cap, Error, Result};
use crate::ext::ExtNat;
use crate::geometry::{
    colcat_complex, colhel_complex, conv_contains, polytopes_intersect, rg_colorful_caratheodory,
    rg_colorful_helly, rg_tverberg, tverberg_complex, HPolytope, Point, PointConfig, PointsJson,
    RationalVec,
};
use crate::graphs::{
    domination_params, independence_complex, is_disjoint_kdd_union, link, matching_complex,
    matching_number, matching_numbers, Graph, GraphJson, Hypergraph, HypergraphJson,
};
use crate::homology::{eta_h, is_d_leray};
use crate::matroid::{independence_complex_of, intersection_number, Matroid, MatroidJson};
use crate::reconfig::{rg_bipartite_matching, rg_colorful, rg_complex_matroid, ReconfigGraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Most classes (or A-side vertices) a subset table may range over.
pub const CLASS_CAP: usize = 20;

/// One line of a hypothesis table: `measured >= required`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetRow {
    /// 1-based class indices, or vertex ids when the family ranges over vertex sets.
    pub subset: Vec<u32>,
    pub measured: ExtNat,
    /// The matroid rank part of `measured`, for flat-indexed conditions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_term: Option<u64>,
    pub required: i64,
    pub ok: bool,
}

impl SubsetRow {
    pub fn new(subset: Vec<u32>, measured: ExtNat, required: i64) -> Self {
        SubsetRow { ok: measured.at_least(required), subset, measured, rank_term: None, required }
    }

    /// A yes/no condition, recorded as `0` or `1` against a requirement of `1`.
    pub fn flag(subset: Vec<u32>, holds: bool) -> Self {
        Self::new(subset, ExtNat::Finite(u64::from(holds)), 1)
    }

    fn count(subset: Vec<u32>, measured: usize, required: i64) -> Self {
        Self::new(subset, ExtNat::Finite(measured as u64), required)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub theorem: String,
    pub holds: bool,
    /// First failing row in table order; present iff `holds` is false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_witness: Option<SubsetRow>,
    pub table: Vec<SubsetRow>,
}

impl HypothesisReport {
    pub fn from_rows(theorem: impl Into<String>, table: Vec<SubsetRow>) -> Self {
        let failing_witness = table.iter().find(|r| !r.ok).cloned();
        HypothesisReport { theorem: theorem.into(), holds: failing_witness.is_none(), failing_witness, table }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "confirmed")]
    Confirmed,
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "tight-negative")]
    TightNegative,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

impl Classification {
    pub fn of(hypothesis: bool, conclusion: bool) -> Self {
        match (hypothesis, conclusion) {
            (true, true) => Classification::Confirmed,
            (false, true) => Classification::Vacuous,
            (false, false) => Classification::TightNegative,
            (true, false) => Classification::Counterexample,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// What the oracle computed about the conclusion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub conclusion: bool,
    pub summary: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationVerdict {
    pub theorem: TheoremId,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub classification: Classification,
    pub report: HypothesisReport,
    pub oracle: OracleOutcome,
    /// The full instance, kept only for counterexamples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance_dump: Option<Instance>,
}

/// Nonempty subsets of `0..n` with at least `min` elements, ordered by size
/// and then lexicographically.
fn index_subsets(n: usize, min: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for k in min.max(1)..=n {
        for_each_subset(&all, k, &mut |s| out.push(s.to_vec()));
    }
    out
}

fn one_based(idx: &[usize]) -> Vec<u32> {
    idx.iter().map(|&i| i as u32 + 1).collect()
}

fn class_rows(
    n: usize,
    min: usize,
    row: impl Fn(&[usize]) -> Result<SubsetRow> + Sync,
) -> Result<Vec<SubsetRow>> {
    check_cap("classes in a subset table", n, CLASS_CAP)?;
    index_subsets(n, min).par_iter().map(|i| row(i)).collect()
}

/// Rows over nonempty `X ⊆ a_side`, with `X` recorded by vertex id.
fn vertex_rows(
    a_side: &[Vertex],
    row: impl Fn(&[Vertex]) -> Result<SubsetRow> + Sync,
) -> Result<Vec<SubsetRow>> {
    class_rows(a_side.len(), 1, |idx| {
        let x: Vec<Vertex> = idx.iter().map(|&i| a_side[i]).collect();
        row(&x)
    })
}

/// `η_H(C[V_I]) >= |I| - d + m` for every nonempty `I` with `|I| >= d`.
pub fn check_hall(
    c: &SimplicialComplex,
    v: &VertexPartition,
    m: usize,
    d: usize,
) -> Result<HypothesisReport> {
    v.check_covers(c.ground_set())?;
    let rows = class_rows(v.n(), d, |idx| {
        let eta = eta_h(&c.induced(&v.union_of(idx)));
        Ok(SubsetRow::new(one_based(idx), eta, idx.len() as i64 - d as i64 + m as i64))
    })?;
    Ok(HypothesisReport::from_rows(format!("hall m={m} d={d}"), rows))
}

/// Rows `measure(X) + r(M[F]) >= required` for every flat `F` of rank at
/// most `k - 1`, with `X = V - F`.
fn flat_rows(
    ground: &[Vertex],
    m: &Matroid,
    k: usize,
    required: usize,
    measure: impl Fn(&[Vertex]) -> Result<ExtNat> + Sync,
) -> Result<Vec<SubsetRow>> {
    if m.ground_set() != ground {
        return Err(Error::structural("matroid and complex need the same ground set"));
    }
    if k == 0 || k > m.rank_total() {
        return Err(Error::precondition(format!("k = {k} must lie in 1..={}", m.rank_total())));
    }
    m.flats(k - 1)?
        .par_iter()
        .map(|f| {
            let x: Vec<Vertex> = ground.iter().copied().filter(|v| !f.contains(v)).collect();
            let r = m.rank(f) as u64;
            let mut row = SubsetRow::new(x.clone(), measure(&x)?.plus(r), required as i64);
            row.rank_term = Some(r);
            Ok(row)
        })
        .collect()
}

/// `η_H(C[X]) + r(M[V - X]) >= k + m_conn` whenever `V - X` is a flat of rank `<= k - 1`.
pub fn check_complex_matroid(
    c: &SimplicialComplex,
    m: &Matroid,
    k: usize,
    m_conn: usize,
) -> Result<HypothesisReport> {
    let rows = flat_rows(c.ground_set(), m, k, k + m_conn, |x| Ok(eta_h(&c.induced(x))))?;
    Ok(HypothesisReport::from_rows(format!("complex-matroid k={k} m={m_conn}"), rows))
}

/// `G[V_I]` is not `|I|` disjoint copies of `K_{Δ,Δ}`, for every nonempty `I`.
pub fn check_bko(g: &Graph, v: &VertexPartition, delta: usize) -> Result<HypothesisReport> {
    v.check_covers(g.vertices())?;
    if g.max_degree() > delta {
        return Err(Error::structural(format!(
            "maximum degree {} exceeds Δ = {delta}",
            g.max_degree()
        )));
    }
    if let Some(i) = (0..v.n()).find(|&i| v.class(i).len() < 2 * delta) {
        return Err(Error::structural(format!("class {} has fewer than 2Δ vertices", i + 1)));
    }
    let rows = class_rows(v.n(), 1, |idx| {
        let vs = v.union_of(idx);
        let tight =
            vs.len() == 2 * delta * idx.len() && is_disjoint_kdd_union(&g.induced(&vs), delta);
        Ok(SubsetRow::flag(one_based(idx), !tight))
    })?;
    Ok(HypothesisReport::from_rows(format!("bko Δ={delta}"), rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessMethod {
    /// The augmentation procedure run on two components.
    Procedure,
    /// Exhaustive search for `|D| <= 2|I| - 2`, used when no independent transversal exists.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum DominationWitness {
    Connected,
    Witness {
        /// 1-based class indices `I`.
        classes: Vec<u32>,
        /// `D ⊆ V_I`, totally dominating `G[V_I]`.
        dominating: Vec<Vertex>,
        method: WitnessMethod,
    },
}

/// Checks `D ⊆ V_I`, `|D| <= 2|I|` and that every vertex of `V_I` has a neighbour in `D`.
pub fn verify_domination_witness(
    g: &Graph,
    v: &VertexPartition,
    classes: &[u32],
    dominating: &[Vertex],
) -> Result<()> {
    if classes.is_empty() {
        return Err(Error::Internal("witness has no classes".into()));
    }
    let idx: Vec<usize> = classes
        .iter()
        .map(|&i| {
            (i as usize)
                .checked_sub(1)
                .filter(|&i| i < v.n())
                .ok_or_else(|| Error::Internal(format!("class index {i} out of range")))
        })
        .collect::<Result<_>>()?;
    let vi = v.union_of(&idx);
    if let Some(x) = dominating.iter().find(|x| !vi.contains(x)) {
        return Err(Error::Internal(format!("dominating vertex {x} lies outside V_I")));
    }
    if dominating.len() > 2 * idx.len() {
        return Err(Error::Internal(format!(
            "|D| = {} exceeds 2|I| = {}",
            dominating.len(),
            2 * idx.len()
        )));
    }
    if let Some(x) = vi.iter().find(|&&x| !g.neighbors(x).iter().any(|y| dominating.contains(y))) {
        return Err(Error::Internal(format!("vertex {x} is not dominated")));
    }
    Ok(())
}

/// If `RG(I(G), V)` is disconnected, a pair `(I, D)` with `|D| <= 2|I|` and `D`
/// totally dominating `G[V_I]`; the result is re-verified before returning.
pub fn extract_domination_witness(g: &Graph, v: &VertexPartition) -> Result<DominationWitness> {
    v.check_covers(g.vertices())?;
    check_cap("classes in a subset table", v.n(), CLASS_CAP)?;
    let rg = rg_colorful(&independence_complex(g), v, v.n())?;
    if rg.is_connected() {
        return Ok(DominationWitness::Connected);
    }
    let (idx, dom, method) = if rg.is_empty() {
        let (i, d) = exhaustive_witness(g, v)?;
        (i, d, WitnessMethod::Exhaustive)
    } else {
        let (i, d) = procedure_witness(g, v, &rg)?;
        (i, d, WitnessMethod::Procedure)
    };
    let classes = one_based(&idx);
    verify_domination_witness(g, v, &classes, &dom)?;
    Ok(DominationWitness::Witness { classes, dominating: dom, method })
}

fn minus(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

fn procedure_witness(
    g: &Graph,
    v: &VertexPartition,
    rg: &ReconfigGraph,
) -> Result<(Vec<usize>, Vec<Vertex>)> {
    let configs = rg.configs();
    let class_of = |x: Vertex| v.class_of(x).expect("partition covers the graph");
    // S and T from distinct components with |I(S △ T)| = |S - T| minimal.
    let mut best: Option<(usize, usize, usize)> = None;
    for s in 0..configs.len() {
        for t in s + 1..configs.len() {
            if rg.component_of(s) == rg.component_of(t) {
                continue;
            }
            let size = minus(&configs[s], &configs[t]).len();
            if best.is_none_or(|b| size < b.0) {
                best = Some((size, s, t));
            }
        }
    }
    let (_, s, t) = best.ok_or_else(|| Error::Internal("fewer than two components".into()))?;
    let (c1, c2) = (rg.component_of(s), rg.component_of(t));
    let s_only = minus(&configs[s], &configs[t]);
    let t_only = minus(&configs[t], &configs[s]);
    let mut idx: BTreeSet<usize> = s_only.iter().map(|&x| class_of(x)).collect();
    let mut dom: BTreeSet<Vertex> = s_only.iter().chain(&t_only).copied().collect();
    let mut r: Vec<Vertex> = minus(&configs[s], &s_only);
    loop {
        let classes: Vec<usize> = idx.iter().copied().collect();
        let undominated = v
            .union_of(&classes)
            .into_iter()
            .find(|&x| !g.neighbors(x).iter().any(|y| dom.contains(y)));
        let Some(x) = undominated else {
            return Ok((classes, dom.into_iter().collect()));
        };
        let fixed: Vec<Vertex> = r.iter().copied().filter(|&y| idx.contains(&class_of(y))).collect();
        let mut choice: Option<(usize, Vec<Vertex>)> = None;
        for (i, u) in configs.iter().enumerate() {
            if rg.component_of(i) != c1 || !is_subset(&s_only, u) || !is_subset(&fixed, u) {
                continue;
            }
            let cand = minus(u, &s_only);
            match rg.index_of(&union(&t_only, &cand)) {
                Some(j) if rg.component_of(j) == c2 => {}
                _ => continue,
            }
            let hits = cand.iter().filter(|&&y| g.adjacent(x, y)).count();
            if choice.as_ref().is_none_or(|c| hits < c.0) {
                choice = Some((hits, cand));
            }
        }
        let (_, rk) = choice.ok_or_else(|| {
            Error::Internal("no admissible transversal, though the previous one qualifies".into())
        })?;
        let y: Vec<Vertex> = rk.iter().copied().filter(|&q| g.adjacent(x, q)).collect();
        if y.is_empty() {
            return Err(Error::Internal(format!("vertex {x} has no neighbour in the chosen transversal")));
        }
        let before = idx.len();
        idx.extend(y.iter().map(|&q| class_of(q)));
        if idx.len() == before {
            return Err(Error::Internal("index set stopped growing".into()));
        }
        dom.insert(x);
        dom.extend(y);
        r = rk;
    }
}

/// Smallest-first search for `I` and `D ⊆ V_I` with `|D| <= 2|I| - 2` totally
/// dominating `G[V_I]`.
fn exhaustive_witness(g: &Graph, v: &VertexPartition) -> Result<(Vec<usize>, Vec<Vertex>)> {
    for idx in index_subsets(v.n(), 1) {
        let vi = v.union_of(&idx);
        for size in 0..=(2 * idx.len() - 2).min(vi.len()) {
            let mut found = None;
            for_each_subset(&vi, size, &mut |d| {
                if found.is_none()
                    && vi.iter().all(|&x| g.neighbors(x).iter().any(|y| d.binary_search(y).is_ok()))
                {
                    found = Some(d.to_vec());
                }
            });
            if let Some(d) = found {
                return Ok((idx, d));
            }
        }
    }
    Err(Error::Internal("no dominating witness exists for an instance without transversals".into()))
}

/// Every theorem the checker knows, by its command-line name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    TopologicalHall,
    HallDeficiency,
    ReconfigHall,
    ReconfigDeficiency,
    ColorfulComplex,
    ColorfulComplexDeficiency,
    ColorfulNerve,
    ColorfulNerveLooseWalk,
    ComplexMatroidExistence,
    ComplexMatroidReconfig,
    ComplexMatroidConnectedness,
    MatroidIntersection,
    MatroidIntersectionCorollary,
    DominationGamma,
    DominationIGamma,
    TwoDeltaPlusOne,
    Bko,
    RainbowMatching,
    DeficiencyLink,
    HallHypergraph,
    HallGraph,
    Konig,
    RyserThree,
    TopologicalHelly,
    TopologicalHellyConnectedness,
    ColorfulHelly,
    ColorfulCaratheodory,
    Tverberg,
    TverbergComplex,
    ColcatComplex,
    ColhelComplex,
}

impl TheoremId {
    pub const ALL: [TheoremId; 31] = [
        TheoremId::TopologicalHall,
        TheoremId::HallDeficiency,
        TheoremId::ReconfigHall,
        TheoremId::ReconfigDeficiency,
        TheoremId::ColorfulComplex,
        TheoremId::ColorfulComplexDeficiency,
        TheoremId::ColorfulNerve,
        TheoremId::ColorfulNerveLooseWalk,
        TheoremId::ComplexMatroidExistence,
        TheoremId::ComplexMatroidReconfig,
        TheoremId::ComplexMatroidConnectedness,
        TheoremId::MatroidIntersection,
        TheoremId::MatroidIntersectionCorollary,
        TheoremId::DominationGamma,
        TheoremId::DominationIGamma,
        TheoremId::TwoDeltaPlusOne,
        TheoremId::Bko,
        TheoremId::RainbowMatching,
        TheoremId::DeficiencyLink,
        TheoremId::HallHypergraph,
        TheoremId::HallGraph,
        TheoremId::Konig,
        TheoremId::RyserThree,
        TheoremId::TopologicalHelly,
        TheoremId::TopologicalHellyConnectedness,
        TheoremId::ColorfulHelly,
        TheoremId::ColorfulCaratheodory,
        TheoremId::Tverberg,
        TheoremId::TverbergComplex,
        TheoremId::ColcatComplex,
        TheoremId::ColhelComplex,
    ];

    pub fn name(self) -> String {
        serde_json::to_value(self).expect("unit variant").as_str().expect("string").to_string()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_string()))
            .map_err(|_| Error::Lookup(format!("unknown theorem {s:?}")))
    }
}

/// The data a theorem is checked on. Which fields are needed depends on the theorem.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypergraph: Option<HypergraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_side: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid: Option<MatroidJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_matroid: Option<MatroidJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<PointsJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_sets: Option<Vec<Vec<RationalVec>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<RationalVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<Vec<HPolytope>>>,
    /// Deficiency, or the Leray index for the topological Helly theorems.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
}

fn missing(what: &str) -> Error {
    Error::precondition(format!("instance needs `{what}`"))
}

impl Instance {
    pub fn from_complex(c: &SimplicialComplex, v: &VertexPartition) -> Self {
        Instance { complex: Some(c.to_json()), partition: Some(v.to_json()), ..Default::default() }
    }

    pub fn from_graph(g: &Graph, v: &VertexPartition) -> Self {
        Instance { graph: Some(g.to_json()), partition: Some(v.to_json()), ..Default::default() }
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Instance { hypergraph: Some(h.to_json()), ..Default::default() }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_json(self.graph.as_ref().ok_or_else(|| missing("graph"))?)
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::from_json(self.hypergraph.as_ref().ok_or_else(|| missing("hypergraph"))?)
    }

    pub fn partition(&self) -> Result<VertexPartition> {
        VertexPartition::from_json(self.partition.as_ref().ok_or_else(|| missing("partition"))?)
    }

    /// The explicit complex, else `I(G)` of the graph, else `M(H)` of the hypergraph.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        if let Some(c) = &self.complex {
            SimplicialComplex::from_json(c)
        } else if self.graph.is_some() {
            Ok(independence_complex(&self.graph()?))
        } else if self.hypergraph.is_some() {
            Ok(matching_complex(&self.hypergraph()?))
        } else {
            Err(missing("complex, graph or hypergraph"))
        }
    }

    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::from_json(self.matroid.as_ref().ok_or_else(|| missing("matroid"))?)
    }

    pub fn second_matroid(&self) -> Result<Matroid> {
        Matroid::from_json(self.second_matroid.as_ref().ok_or_else(|| missing("second_matroid"))?)
    }

    pub fn a_side(&self) -> Result<Vec<Vertex>> {
        let mut a = self.a_side.clone().ok_or_else(|| missing("a_side"))?;
        a.sort_unstable();
        a.dedup();
        Ok(a)
    }

    pub fn points(&self) -> Result<PointConfig> {
        PointConfig::from_json(self.points.as_ref().ok_or_else(|| missing("points"))?)
    }

    pub fn point_sets(&self) -> Result<Vec<Vec<Point>>> {
        let sets = self.point_sets.as_ref().ok_or_else(|| missing("point_sets"))?;
        Ok(sets.iter().map(|s| s.iter().map(|p| p.0.clone()).collect()).collect())
    }

    pub fn target(&self) -> Result<Point> {
        Ok(self.target.as_ref().ok_or_else(|| missing("target"))?.0.clone())
    }

    pub fn families(&self) -> Result<Vec<Vec<HPolytope>>> {
        self.families.clone().ok_or_else(|| missing("families"))
    }

    fn need(v: Option<usize>, what: &str) -> Result<usize> {
        v.ok_or_else(|| missing(what))
    }
}

fn rg_summary(g: &ReconfigGraph) -> Value {
    json!({ "vertices": g.len(), "edges": g.edge_count(), "components": g.component_count() })
}

fn connected(g: ReconfigGraph) -> OracleOutcome {
    OracleOutcome { conclusion: g.is_connected(), summary: rg_summary(&g) }
}

fn intersection_graph(faces: Vec<Vec<Vertex>>) -> ReconfigGraph {
    let mut edges = Vec::new();
    for a in 0..faces.len() {
        for b in a + 1..faces.len() {
            if faces[a].iter().any(|x| faces[b].binary_search(x).is_ok()) {
                edges.push((a, b));
            }
        }
    }
    ReconfigGraph::new(faces, edges)
}

fn nonempty(g: ReconfigGraph) -> OracleOutcome {
    OracleOutcome { conclusion: !g.is_empty(), summary: rg_summary(&g) }
}

fn eta_at_least(c: &SimplicialComplex, m: usize) -> OracleOutcome {
    let eta = eta_h(c);
    OracleOutcome {
        conclusion: eta.at_least(m as i64 + 1),
        summary: json!({ "eta": eta, "required": m + 1, "vertices": c.vertices().len() }),
    }
}

/// `n - d`, rejecting `d > n`.
fn target_size(n: usize, d: usize) -> Result<usize> {
    n.checked_sub(d).ok_or_else(|| Error::precondition(format!("d = {d} exceeds n = {n}")))
}

fn uniformity(h: &Hypergraph) -> Result<usize> {
    let r = h.rank();
    if h.edges().iter().any(|e| e.len() != r) {
        return Err(Error::precondition("hypergraph is not uniform"));
    }
    Ok(r)
}

/// Whether the B-parts of a bipartite 3-graph form a bipartite graph, which
/// makes the hypergraph 3-partite with `a_side` as one class.
fn is_three_partite(h: &Hypergraph, a_side: &[Vertex]) -> bool {
    let b: Vec<Vertex> = h.vertices().iter().copied().filter(|v| !a_side.contains(v)).collect();
    let mut side: std::collections::HashMap<Vertex, bool> = std::collections::HashMap::new();
    let pairs: Vec<Vec<Vertex>> = (0..h.edges().len()).map(|i| h.b_part(i, a_side)).collect();
    for &start in &b {
        if side.contains_key(&start) {
            continue;
        }
        side.insert(start, false);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let sx = side[&x];
            for p in pairs.iter().filter(|p| p.contains(&x)) {
                for &y in p.iter().filter(|&&y| y != x) {
                    match side.get(&y) {
                        Some(&sy) if sy == sx => return false,
                        Some(_) => {}
                        None => {
                            side.insert(y, !sx);
                            stack.push(y);
                        }
                    }
                }
            }
        }
    }
    true
}

fn geometry_dim(inst: &Instance, theorem: TheoremId) -> Result<usize> {
    match theorem {
        TheoremId::ColorfulHelly | TheoremId::ColhelComplex => inst
            .families()?
            .iter()
            .flatten()
            .flatten()
            .map(|h| h.a.len())
            .next()
            .ok_or_else(|| Error::precondition("no half-spaces to infer the dimension from")),
        TheoremId::ColorfulCaratheodory | TheoremId::ColcatComplex => Ok(inst.target()?.len()),
        _ => Ok(inst.points()?.dim()),
    }
}

/// Per-family rows `∩ F_i = ∅`.
fn empty_intersection_rows(families: &[Vec<HPolytope>], d: usize) -> Result<Vec<SubsetRow>> {
    families
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let polys: Vec<&HPolytope> = f.iter().collect();
            Ok(SubsetRow::flag(vec![i as u32 + 1], !polytopes_intersect(&polys, d)?))
        })
        .collect()
}

/// Per-set rows `x ∈ conv(A_i)`.
fn hull_rows(sets: &[Vec<Point>], x: &[crate::exactla::Rational]) -> Result<Vec<SubsetRow>> {
    sets.iter()
        .enumerate()
        .map(|(i, s)| Ok(SubsetRow::flag(vec![i as u32 + 1], conv_contains(s, x)?.is_inside())))
        .collect()
}

/// Rows for a `d`-Leray complex `C` and `r(M[V - A]) >= bound` over its facets.
fn helly_rows(c: &SimplicialComplex, m: &Matroid, d: usize, bound: usize) -> Result<Vec<SubsetRow>> {
    if m.ground_set() != c.ground_set() {
        return Err(Error::structural("matroid and complex need the same ground set"));
    }
    let mut rows = vec![SubsetRow::flag(Vec::new(), is_d_leray(c, d)?)];
    for a in c.facets() {
        let rest: Vec<Vertex> = c.ground_set().iter().copied().filter(|v| !a.contains(v)).collect();
        rows.push(SubsetRow::count(a.clone(), m.rank(&rest), bound as i64));
    }
    Ok(rows)
}

/// Evaluates the hypothesis of `theorem` on `inst`.
pub fn check_hypothesis(inst: &Instance, theorem: TheoremId) -> Result<HypothesisReport> {
    use TheoremId::*;
    let d = inst.d.unwrap_or(0);
    let m = inst.m.unwrap_or(0);
    let report = match theorem {
        TopologicalHall => check_hall(&inst.complex()?, &inst.partition()?, 0, 0)?,
        HallDeficiency => check_hall(&inst.complex()?, &inst.partition()?, 0, d)?,
        ReconfigHall | ColorfulNerveLooseWalk => check_hall(&inst.complex()?, &inst.partition()?, 1, 0)?,
        ReconfigDeficiency => check_hall(&inst.complex()?, &inst.partition()?, 1, d)?,
        ColorfulComplex | ColorfulNerve => check_hall(&inst.complex()?, &inst.partition()?, m, 0)?,
        ColorfulComplexDeficiency => check_hall(&inst.complex()?, &inst.partition()?, m, d)?,
        ComplexMatroidExistence | ComplexMatroidReconfig | ComplexMatroidConnectedness => {
            let mt = inst.matroid()?;
            let k = inst.k.unwrap_or(mt.rank_total());
            let extra = match theorem {
                ComplexMatroidExistence => 0,
                ComplexMatroidReconfig => 1,
                _ => m,
            };
            check_complex_matroid(&inst.complex()?, &mt, k, extra)?
        }
        MatroidIntersection => {
            let (mm, nn) = (inst.matroid()?, inst.second_matroid()?);
            let k = Instance::need(inst.k, "k")?;
            let rows = flat_rows(mm.ground_set(), &nn, k, k + 1, |x| Ok(ExtNat::Finite(mm.rank(x) as u64)))?;
            HypothesisReport::from_rows("", rows)
        }
        MatroidIntersectionCorollary => {
            let nu = intersection_number(&inst.matroid()?, &inst.second_matroid()?)?;
            let k = Instance::need(inst.k, "k")?;
            HypothesisReport::from_rows("", vec![SubsetRow::count(Vec::new(), nu, k as i64 + 1)])
        }
        DominationGamma | DominationIGamma => {
            let (g, v) = (inst.graph()?, inst.partition()?);
            v.check_covers(g.vertices())?;
            let rows = class_rows(v.n(), 1, |idx| {
                let p = domination_params(&g.induced(&v.union_of(idx)))?;
                let i = idx.len() as i64;
                Ok(if theorem == DominationGamma {
                    SubsetRow::new(one_based(idx), p.total_domination, 2 * i + 1)
                } else {
                    SubsetRow::new(one_based(idx), p.independence_domination, i + 1)
                })
            })?;
            HypothesisReport::from_rows("", rows)
        }
        TwoDeltaPlusOne => {
            let (g, v) = (inst.graph()?, inst.partition()?);
            v.check_covers(g.vertices())?;
            let need = 2 * g.max_degree() as i64 + 1;
            let rows = (0..v.n()).map(|i| SubsetRow::count(vec![i as u32 + 1], v.class(i).len(), need));
            HypothesisReport::from_rows("", rows.collect())
        }
        Bko => {
            let g = inst.graph()?;
            let delta = inst.delta.unwrap_or(g.max_degree());
            check_bko(&g, &inst.partition()?, delta)?
        }
        RainbowMatching => {
            let (h, e) = (inst.hypergraph()?, inst.partition()?);
            e.check_covers(&h.edge_ids())?;
            let need = (uniformity(&h)? * h.max_degree()) as i64 + 1;
            let rows = (0..e.n()).map(|i| SubsetRow::count(vec![i as u32 + 1], e.class(i).len(), need));
            HypothesisReport::from_rows("", rows.collect())
        }
        DeficiencyLink | HallHypergraph | HallGraph => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            h.check_bipartite(&a)?;
            let r = uniformity(&h)?;
            if theorem == HallGraph && r != 2 {
                return Err(Error::precondition("hall-graph needs a graph"));
            }
            let rows = vertex_rows(&a, |x| {
                let lk = link(&h, &a, x)?;
                let size = x.len() as i64;
                Ok(match theorem {
                    DeficiencyLink => {
                        SubsetRow::new(x.to_vec(), eta_h(&matching_complex(&lk)), size - d as i64 + 1)
                    }
                    HallHypergraph => {
                        SubsetRow::count(x.to_vec(), matching_number(&lk), (r as i64 - 1) * size + 1)
                    }
                    _ => {
                        let nb: BTreeSet<Vertex> = lk.edges().iter().flatten().copied().collect();
                        SubsetRow::count(x.to_vec(), nb.len(), size + 1)
                    }
                })
            })?;
            HypothesisReport::from_rows("", rows)
        }
        Konig => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            h.check_bipartite(&a)?;
            if uniformity(&h)? != 2 {
                return Err(Error::precondition("konig needs a graph"));
            }
            let k = Instance::need(inst.k, "k")?;
            HypothesisReport::from_rows("", vec![SubsetRow::count(Vec::new(), matching_number(&h), k as i64 + 1)])
        }
        RyserThree => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            h.check_bipartite(&a)?;
            if uniformity(&h)? != 3 || !is_three_partite(&h, &a) {
                return Err(Error::precondition("ryser-three needs a 3-partite 3-graph"));
            }
            let k = Instance::need(inst.k, "k")?;
            let tau = matching_numbers(&h)?.tau;
            HypothesisReport::from_rows("", vec![SubsetRow::count(Vec::new(), tau, 2 * k as i64 + 1)])
        }
        TopologicalHelly => {
            let rows = helly_rows(&inst.complex()?, &inst.matroid()?, d, d + 2)?;
            HypothesisReport::from_rows("", rows)
        }
        TopologicalHellyConnectedness => {
            let rows = helly_rows(&inst.complex()?, &inst.matroid()?, d, d + m + 1)?;
            HypothesisReport::from_rows("", rows)
        }
        ColorfulHelly | ColhelComplex => {
            let fam = inst.families()?;
            let dim = geometry_dim(inst, theorem)?;
            let mut rows = empty_intersection_rows(&fam, dim)?;
            let need = if theorem == ColorfulHelly { dim + 2 } else { dim + m + 1 };
            rows.push(SubsetRow::count(Vec::new(), fam.len(), need as i64));
            HypothesisReport::from_rows("", rows)
        }
        ColorfulCaratheodory | ColcatComplex => {
            let (sets, x) = (inst.point_sets()?, inst.target()?);
            let dim = x.len();
            let mut rows = hull_rows(&sets, &x)?;
            let need = if theorem == ColorfulCaratheodory { dim + 2 } else { dim + m + 1 };
            rows.push(SubsetRow::count(Vec::new(), sets.len(), need as i64));
            HypothesisReport::from_rows("", rows)
        }
        Tverberg | TverbergComplex => {
            let pts = inst.points()?;
            let r = Instance::need(inst.r, "r")?;
            let base = (pts.dim() + 1) * r.saturating_sub(1);
            let need = if theorem == Tverberg { base + 2 } else { base + m + 1 };
            HypothesisReport::from_rows("", vec![SubsetRow::count(Vec::new(), pts.len(), need as i64)])
        }
    };
    Ok(HypothesisReport { theorem: theorem.name(), ..report })
}

/// Decides the conclusion of `theorem` on `inst` directly.
pub fn run_oracle(inst: &Instance, theorem: TheoremId) -> Result<OracleOutcome> {
    use TheoremId::*;
    let d = inst.d.unwrap_or(0);
    let m = inst.m.unwrap_or(0);
    Ok(match theorem {
        TopologicalHall => {
            let n = colorful_simplices(&inst.complex()?, &inst.partition()?)?.len();
            OracleOutcome { conclusion: n > 0, summary: json!({ "colorful_simplices": n }) }
        }
        HallDeficiency => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            nonempty(rg_colorful(&c, &v, target_size(v.n(), d)?)?)
        }
        ReconfigHall | DominationGamma | DominationIGamma | TwoDeltaPlusOne | Bko | RainbowMatching => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            connected(rg_colorful(&c, &v, v.n())?)
        }
        ReconfigDeficiency => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            connected(rg_colorful(&c, &v, target_size(v.n(), d)?)?)
        }
        ColorfulComplex => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            eta_at_least(&colorful_complex(&c, &v, v.n())?.complex, m)
        }
        ColorfulComplexDeficiency => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            eta_at_least(&colorful_complex(&c, &v, target_size(v.n(), d)?)?.complex, m)
        }
        ColorfulNerve => {
            let (c, v) = (inst.complex()?, inst.partition()?);
            eta_at_least(&colorful_nerve(&c, &v)?.complex, m)
        }
        ColorfulNerveLooseWalk => {
            // Walks run over the spanning maximal faces; the plain intersection
            // graph of colorful simplices is reported alongside.
            let (c, v) = (inst.complex()?, inst.partition()?);
            let spanning = colorful_nerve(&c, &v)?.labels;
            let simplices = colorful_simplices(&c, &v)?;
            let walk = intersection_graph(spanning);
            let plain = intersection_graph(simplices);
            let mut summary = rg_summary(&walk);
            summary["colorful_simplex_components"] = json!(plain.component_count());
            OracleOutcome { conclusion: walk.is_connected(), summary }
        }
        ComplexMatroidExistence | ComplexMatroidReconfig => {
            let mt = inst.matroid()?;
            let k = inst.k.unwrap_or(mt.rank_total());
            let g = rg_complex_matroid(&inst.complex()?, &mt, k)?;
            if theorem == ComplexMatroidExistence {
                nonempty(g)
            } else {
                connected(g)
            }
        }
        ComplexMatroidConnectedness => {
            let mt = inst.matroid()?;
            let k = inst.k.unwrap_or(mt.rank_total());
            eta_at_least(&intersection_complex(&inst.complex()?, &mt, k)?.complex, m)
        }
        MatroidIntersection | MatroidIntersectionCorollary => {
            let (mm, nn) = (inst.matroid()?, inst.second_matroid()?);
            let k = Instance::need(inst.k, "k")?;
            connected(rg_complex_matroid(&independence_complex_of(&mm)?, &nn, k)?)
        }
        DeficiencyLink => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            connected(rg_bipartite_matching(&h, &a, target_size(a.len(), d)?)?)
        }
        HallHypergraph | HallGraph => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            connected(rg_bipartite_matching(&h, &a, a.len())?)
        }
        Konig | RyserThree => {
            let (h, a) = (inst.hypergraph()?, inst.a_side()?);
            connected(rg_bipartite_matching(&h, &a, Instance::need(inst.k, "k")?)?)
        }
        TopologicalHelly | TopologicalHellyConnectedness => {
            let dual_c = alexander_dual(&inst.complex()?)?;
            let dual_m = inst.matroid()?.dual();
            let k = dual_m.rank_total();
            if theorem == TopologicalHelly {
                connected(rg_complex_matroid(&dual_c, &dual_m, k)?)
            } else {
                eta_at_least(&intersection_complex(&dual_c, &dual_m, k)?.complex, m)
            }
        }
        ColorfulHelly => connected(rg_colorful_helly(&inst.families()?)?),
        ColorfulCaratheodory => connected(rg_colorful_caratheodory(&inst.point_sets()?, &inst.target()?)?),
        Tverberg => {
            connected(rg_tverberg(inst.points()?.points(), Instance::need(inst.r, "r")?)?)
        }
        TverbergComplex => {
            let c = tverberg_complex(inst.points()?.points(), Instance::need(inst.r, "r")?)?;
            eta_at_least(&c.complex, m)
        }
        ColcatComplex => eta_at_least(&colcat_complex(&inst.point_sets()?, &inst.target()?)?.complex, m),
        ColhelComplex => eta_at_least(&colhel_complex(&inst.families()?)?.complex, m),
    })
}

/// Runs the hypothesis checker and the oracle, and classifies the pair.
pub fn verify_instance(inst: &Instance, theorem: TheoremId) -> Result<VerificationVerdict> {
    let report = check_hypothesis(inst, theorem)?;
    let oracle = run_oracle(inst, theorem)?;
    let classification = Classification::of(report.holds, oracle.conclusion);
    Ok(VerificationVerdict {
        theorem,
        hypothesis: report.holds,
        conclusion: oracle.conclusion,
        classification,
        report,
        oracle,
        instance_dump: (classification == Classification::Counterexample).then(|| inst.clone()),
    })
}

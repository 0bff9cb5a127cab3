//! Graphs and hypergraphs: independence and matching complexes, domination
//! and matching parameters, links, and instance generators.

use crate::complex::{for_each_subset, SimplicialComplex, Vertex, VertexPartition};
use crate::error::{check_cap, Error, Result};
use crate::exactla::{rat, LinearProgram, LpOptimum, Rational, Relation, VarSign};
use crate::ext::ExtNat;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Cap on vertex counts for exhaustive domination and cover searches.
pub const BRUTE_FORCE_CAP: usize = 24;

/// A finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl Graph {
    pub fn new(vertices: &[Vertex], edges: &[[Vertex; 2]]) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        let n = vs.len();
        vs.dedup();
        if vs.len() != n {
            return Err(Error::structural("graph repeats a vertex"));
        }
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vs.iter().map(|&v| (v, BTreeSet::new())).collect();
        let mut es = Vec::with_capacity(edges.len());
        for &[a, b] in edges {
            if a == b {
                return Err(Error::structural(format!("loop at vertex {a}")));
            }
            for x in [a, b] {
                if !adj.contains_key(&x) {
                    return Err(Error::Lookup(format!("edge endpoint {x} is not a vertex")));
                }
            }
            if !adj.get_mut(&a).unwrap().insert(b) {
                return Err(Error::structural(format!("repeated edge {a}-{b}")));
            }
            adj.get_mut(&b).unwrap().insert(a);
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        Ok(Graph { vertices: vs, edges: es, adj })
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        Self::new(&j.vertices, &j.edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn induced(&self, vs: &[Vertex]) -> Graph {
        let keep: BTreeSet<Vertex> = vs.iter().copied().filter(|v| self.adj.contains_key(v)).collect();
        let vertices: Vec<Vertex> = keep.iter().copied().collect();
        let edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        let adj = vertices
            .iter()
            .map(|&v| (v, self.adj[&v].iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Graph { vertices, edges, adj }
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }

    /// Connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &self.vertices {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[&v] {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Neighborhood bitmasks over `self.vertices` order.
    fn neighbor_masks(&self) -> Vec<u32> {
        let pos: HashMap<Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.vertices
            .iter()
            .map(|v| self.adj[v].iter().map(|w| 1u32 << pos[w]).sum())
            .collect()
    }
}

/// A finite hypergraph; parallel edges are distinct, edge `i` has id `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<Vertex>,
    edges: Vec<Vec<Vertex>>,
    uniformity: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl Hypergraph {
    pub fn new(vertices: &[Vertex], edges: &[Vec<Vertex>], r: Option<usize>) -> Result<Self> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        let n = vs.len();
        vs.dedup();
        if vs.len() != n {
            return Err(Error::structural("hypergraph repeats a vertex"));
        }
        let mut es = Vec::with_capacity(edges.len());
        for e in edges {
            let e = crate::complex::normalize_face(e)?;
            if e.is_empty() {
                return Err(Error::structural("hypergraph edges must be nonempty"));
            }
            if let Some(v) = e.iter().find(|v| vs.binary_search(v).is_err()) {
                return Err(Error::Lookup(format!("edge vertex {v} is not a vertex")));
            }
            if let Some(r) = r {
                if e.len() != r {
                    return Err(Error::structural(format!("edge {e:?} does not have {r} vertices")));
                }
            }
            es.push(e);
        }
        Ok(Hypergraph { vertices: vs, edges: es, uniformity: r })
    }

    pub fn from_graph(g: &Graph) -> Hypergraph {
        Hypergraph {
            vertices: g.vertices.clone(),
            edges: g.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
            uniformity: Some(2),
        }
    }

    pub fn from_json(j: &HypergraphJson) -> Result<Self> {
        Self::new(&j.vertices, &j.edges, j.r)
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson { vertices: self.vertices.clone(), edges: self.edges.clone(), r: self.uniformity }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i]
    }

    /// Declared uniformity, or the largest edge size.
    pub fn rank(&self) -> usize {
        self.uniformity.unwrap_or_else(|| self.edges.iter().map(Vec::len).max().unwrap_or(0))
    }

    pub fn max_degree(&self) -> usize {
        let mut deg: HashMap<Vertex, usize> = HashMap::new();
        for e in &self.edges {
            for v in e {
                *deg.entry(*v).or_default() += 1;
            }
        }
        deg.values().copied().max().unwrap_or(0)
    }

    pub fn edge_ids(&self) -> Vec<Vertex> {
        (0..self.edges.len() as Vertex).collect()
    }

    pub fn disjoint(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.edges[i], &self.edges[j]);
        a.iter().all(|x| b.binary_search(x).is_err())
    }

    pub fn is_matching(&self, ids: &[Vertex]) -> bool {
        ids.iter().enumerate().all(|(k, &i)| {
            ids[k + 1..].iter().all(|&j| self.disjoint(i as usize, j as usize))
        })
    }

    /// Checks that every edge meets `a_side` in exactly one vertex.
    pub fn check_bipartite(&self, a_side: &[Vertex]) -> Result<()> {
        for (i, e) in self.edges.iter().enumerate() {
            let k = e.iter().filter(|v| a_side.contains(v)).count();
            if k != 1 {
                return Err(Error::precondition(format!(
                    "edge {i} meets the A-side in {k} vertices, expected exactly one"
                )));
            }
        }
        Ok(())
    }

    /// The A-vertex of edge `i` in a bipartite hypergraph.
    pub fn a_part(&self, i: usize, a_side: &[Vertex]) -> Vertex {
        *self.edges[i].iter().find(|v| a_side.contains(v)).expect("bipartite edge")
    }

    pub fn b_part(&self, i: usize, a_side: &[Vertex]) -> Vec<Vertex> {
        self.edges[i].iter().copied().filter(|v| !a_side.contains(v)).collect()
    }
}

/// Maximal independent sets of `g`, by Bron–Kerbosch on the complement.
fn maximal_independent_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    fn bk(
        g: &Graph,
        r: &mut Vec<Vertex>,
        p: BTreeSet<Vertex>,
        mut x: BTreeSet<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut f = r.clone();
            f.sort_unstable();
            out.push(f);
            return;
        }
        // Pivot: a vertex of P ∪ X with the most non-neighbors in P.
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| w != u && !g.adjacent(u, w)).count())
            .expect("nonempty");
        let candidates: Vec<Vertex> =
            p.iter().copied().filter(|&v| v == pivot || g.adjacent(pivot, v)).collect();
        let mut p = p;
        for v in candidates {
            let non_nb = |s: &BTreeSet<Vertex>| -> BTreeSet<Vertex> {
                s.iter().copied().filter(|&w| w != v && !g.adjacent(v, w)).collect()
            };
            r.push(v);
            bk(g, r, non_nb(&p), non_nb(&x), out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(g, &mut Vec::new(), g.vertices.iter().copied().collect(), BTreeSet::new(), &mut out);
    out
}

/// `I(G)`: faces are the independent vertex sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_antichain(g.vertices.clone(), maximal_independent_sets(g))
}

/// `M(H)`: vertices are edge ids, faces are matchings.
pub fn matching_complex(h: &Hypergraph) -> SimplicialComplex {
    let ids = h.edge_ids();
    let mut edges = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if !h.disjoint(i, j) {
                edges.push([ids[i], ids[j]]);
            }
        }
    }
    let line = Graph::new(&ids, &edges).expect("line graph is simple");
    independence_complex(&line)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominationParams {
    /// `γ̃`: least size of a set `X` with every vertex adjacent to some `x ∈ X`.
    pub total_domination: ExtNat,
    /// `iγ`: least `ℓ` such that every independent set is strongly dominated by `ℓ` vertices.
    pub independence_domination: ExtNat,
}

/// `γ̃(G)` and `iγ(G)` by exhaustive search.
pub fn domination_params(g: &Graph) -> Result<DominationParams> {
    let n = g.vertices.len();
    check_cap("domination search vertices", n, BRUTE_FORCE_CAP)?;
    let nb = g.neighbor_masks();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    // best[s] = union of coverage masks reachable with s vertices.
    let mut covers_by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for x in 0u32..=full {
        let cov = (0..n).filter(|&i| x & (1 << i) != 0).fold(0u32, |c, i| c | nb[i]);
        covers_by_size[x.count_ones() as usize].push(cov);
    }
    let isolated = nb.contains(&0);
    let total_domination = if isolated {
        ExtNat::Infinite
    } else {
        let s = (0..=n)
            .find(|&s| covers_by_size[s].contains(&full))
            .expect("V dominates a graph without isolated vertices");
        ExtNat::Finite(s as u64)
    };
    let pos: HashMap<Vertex, usize> =
        g.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut worst = 0usize;
    let mut infinite = false;
    for set in maximal_independent_sets(g) {
        let m: u32 = set.iter().map(|v| 1u32 << pos[v]).sum();
        match (0..=n).find(|&s| covers_by_size[s].iter().any(|&c| c & m == m)) {
            Some(s) => worst = worst.max(s),
            None => infinite = true,
        }
    }
    let independence_domination =
        if infinite { ExtNat::Infinite } else { ExtNat::Finite(worst as u64) };
    Ok(DominationParams { total_domination, independence_domination })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingNumbers {
    pub nu: usize,
    #[serde(with = "crate::exactla::serde_rational")]
    pub nu_star: Rational,
    pub tau: usize,
}

/// `ν` (largest matching), `ν*` (fractional matching LP) and `τ` (smallest cover).
pub fn matching_numbers(h: &Hypergraph) -> Result<MatchingNumbers> {
    check_cap("vertex cover search vertices", h.vertices.len(), BRUTE_FORCE_CAP)?;
    let nu = matching_number(h);
    let m = h.edges.len();
    let mut lp = LinearProgram::new(vec![VarSign::NonNeg; m]);
    for v in &h.vertices {
        let row: Vec<(usize, Rational)> = (0..m)
            .filter(|&i| h.edges[i].binary_search(v).is_ok())
            .map(|i| (i, rat(1)))
            .collect();
        if !row.is_empty() {
            lp.add(row, Relation::Le, rat(1));
        }
    }
    let nu_star = match lp.maximize(&vec![rat(1); m])? {
        LpOptimum::Optimal { value, .. } => value,
        other => return Err(Error::Internal(format!("fractional matching LP: {other:?}"))),
    };
    let mut tau = None;
    for s in 0..=h.vertices.len() {
        let mut found = false;
        for_each_subset(&h.vertices, s, &mut |c| {
            if !found && h.edges.iter().all(|e| e.iter().any(|v| c.binary_search(v).is_ok())) {
                found = true;
            }
        });
        if found {
            tau = Some(s);
            break;
        }
    }
    let tau = tau.expect("the full vertex set is a cover");
    Ok(MatchingNumbers { nu, nu_star, tau })
}

/// `ν(H)` by branch and bound over edges.
pub fn matching_number(h: &Hypergraph) -> usize {
    fn rec(h: &Hypergraph, i: usize, used: &mut BTreeSet<Vertex>, size: usize, best: &mut usize) {
        if size + (h.edges.len() - i) <= *best {
            return;
        }
        if i == h.edges.len() {
            *best = size;
            return;
        }
        let e = &h.edges[i];
        if e.iter().all(|v| !used.contains(v)) {
            used.extend(e.iter().copied());
            rec(h, i + 1, used, size + 1, best);
            for v in e {
                used.remove(v);
            }
        }
        rec(h, i + 1, used, size, best);
    }
    let mut best = 0;
    rec(h, 0, &mut BTreeSet::new(), 0, &mut best);
    best
}

/// `lk_H(X)`: edges `e - A` for every edge `e` whose A-vertex lies in `X`.
pub fn link(h: &Hypergraph, a_side: &[Vertex], x: &[Vertex]) -> Result<Hypergraph> {
    h.check_bipartite(a_side)?;
    if let Some(v) = x.iter().find(|v| !a_side.contains(v)) {
        return Err(Error::precondition(format!("{v} is not on the A-side")));
    }
    let b: Vec<Vertex> = h.vertices.iter().copied().filter(|v| !a_side.contains(v)).collect();
    let edges: Vec<Vec<Vertex>> = (0..h.edges.len())
        .filter(|&i| x.contains(&h.a_part(i, a_side)))
        .map(|i| h.b_part(i, a_side))
        .filter(|e| !e.is_empty())
        .collect();
    Hypergraph::new(&b, &edges, h.uniformity.map(|r| r - 1))
}

/// True iff every component of `g` is a copy of `K_{Δ,Δ}`.
pub fn is_disjoint_kdd_union(g: &Graph, delta: usize) -> bool {
    if delta == 0 {
        return g.vertices.is_empty();
    }
    g.components().iter().all(|comp| {
        if comp.len() != 2 * delta {
            return false;
        }
        let first = comp[0];
        let left: Vec<Vertex> =
            comp.iter().copied().filter(|&v| v == first || !g.adjacent(first, v)).collect();
        let right: Vec<Vertex> = comp.iter().copied().filter(|v| !left.contains(v)).collect();
        left.len() == delta
            && right.len() == delta
            && left.iter().all(|&a| {
                left.iter().all(|&b| !g.adjacent(a, b)) && right.iter().all(|&b| g.adjacent(a, b))
            })
            && right.iter().all(|&a| right.iter().all(|&b| !g.adjacent(a, b)))
    })
}

/// `K_{Δ,Δ}` with sides `0..Δ` and `Δ..2Δ`, starting at vertex `offset`.
fn kdd(delta: usize, offset: Vertex) -> (Vec<Vertex>, Vec<Vertex>, Vec<[Vertex; 2]>) {
    let d = delta as Vertex;
    let left: Vec<Vertex> = (offset..offset + d).collect();
    let right: Vec<Vertex> = (offset + d..offset + 2 * d).collect();
    let edges = left.iter().flat_map(|&a| right.iter().map(move |&b| [a, b])).collect();
    (left, right, edges)
}

/// `K_{Δ,Δ}` as a single class.
pub fn kdd_single_class(delta: usize) -> Result<(Graph, VertexPartition)> {
    if delta == 0 {
        return Err(Error::precondition("Δ must be positive"));
    }
    let (l, r, e) = kdd(delta, 0);
    let vs: Vec<Vertex> = l.iter().chain(&r).copied().collect();
    Ok((Graph::new(&vs, &e)?, VertexPartition::new(&[vs])?))
}

/// Two disjoint copies of `K_{Δ,Δ}`; class 1 is both left sides, class 2 both right sides.
pub fn kdd_double(delta: usize) -> Result<(Graph, VertexPartition)> {
    if delta == 0 {
        return Err(Error::precondition("Δ must be positive"));
    }
    let (l1, r1, mut e) = kdd(delta, 0);
    let (l2, r2, e2) = kdd(delta, 2 * delta as Vertex);
    e.extend(e2);
    let vs: Vec<Vertex> = (0..4 * delta as Vertex).collect();
    let c1: Vec<Vertex> = l1.into_iter().chain(l2).collect();
    let c2: Vec<Vertex> = r1.into_iter().chain(r2).collect();
    Ok((Graph::new(&vs, &e)?, VertexPartition::new(&[c1, c2])?))
}

/// The `r x r` grid: vertex `v_{i,j}` has id `(i-1) r + (j-1)`; edges
/// `e_1..e_r` are the rows, then `f_1..f_r` the columns.
pub fn grid(r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::precondition("r must be positive"));
    }
    let r32 = r as Vertex;
    let vs: Vec<Vertex> = (0..r32 * r32).collect();
    let mut edges: Vec<Vec<Vertex>> = (0..r32).map(|i| (0..r32).map(|j| i * r32 + j).collect()).collect();
    edges.extend((0..r32).map(|j| (0..r32).map(|i| i * r32 + j).collect()));
    Hypergraph::new(&vs, &edges, Some(r))
}

/// The four-edge bipartite `r`-graph with `A = {x1, y1}`; `x_i` has id `i-1`
/// and `y_i` has id `r+i-1`.
pub fn bipartite_counterexample(r: usize) -> Result<(Hypergraph, Vec<Vertex>)> {
    if r < 3 {
        return Err(Error::precondition("r must be at least 3"));
    }
    let r32 = r as Vertex;
    let x = |i: Vertex| i - 1;
    let y = |i: Vertex| r32 + i - 1;
    let xs: Vec<Vertex> = (3..=r32).map(x).collect();
    let ys: Vec<Vertex> = (3..=r32).map(y).collect();
    let with = |a: Vertex, b: Vertex, tail: &[Vertex]| {
        let mut e = vec![a, b];
        e.extend_from_slice(tail);
        e
    };
    let edges = vec![
        with(x(1), x(2), &xs),
        with(x(1), x(2), &ys),
        with(y(1), y(2), &xs),
        with(y(1), y(2), &ys),
    ];
    let vs: Vec<Vertex> = (0..2 * r32).collect();
    Ok((Hypergraph::new(&vs, &edges, Some(r))?, vec![x(1), y(1)]))
}

/// `G(n, p)` on vertices `0..n`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::precondition("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs: Vec<Vertex> = (0..n as Vertex).collect();
    let mut edges = Vec::new();
    for a in 0..n as Vertex {
        for b in a + 1..n as Vertex {
            if rng.gen_bool(p) {
                edges.push([a, b]);
            }
        }
    }
    Graph::new(&vs, &edges)
}

/// A uniformly shuffled partition of `0..Σ sizes` into classes of the given sizes.
pub fn random_partition(sizes: &[usize], seed: u64) -> Result<VertexPartition> {
    let total: usize = sizes.iter().sum();
    let mut vs: Vec<Vertex> = (0..total as Vertex).collect();
    vs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut classes = Vec::new();
    let mut at = 0;
    for &s in sizes {
        classes.push(vs[at..at + s].to_vec());
        at += s;
    }
    VertexPartition::new(&classes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMode {
    Vertex,
    Edge,
}

/// An auxiliary instance whose full colorful objects are the proper list colorings.
#[derive(Debug, Clone)]
pub enum ListColoringReduction {
    /// Independent transversals of `graph` w.r.t. `classes` are the proper vertex colorings.
    Vertex { graph: Graph, classes: VertexPartition, labels: Vec<(Vertex, u32)> },
    /// Full rainbow matchings of `hypergraph` w.r.t. edge `classes` are the proper edge colorings.
    Edge {
        hypergraph: Hypergraph,
        classes: VertexPartition,
        labels: Vec<(Vertex, u32)>,
        edge_labels: Vec<(usize, u32)>,
    },
}

/// `lists` maps a vertex id (vertex mode) or edge index (edge mode) to its colors.
pub fn list_coloring_reduction(
    g: &Graph,
    lists: &BTreeMap<Vertex, Vec<u32>>,
    mode: ColoringMode,
) -> Result<ListColoringReduction> {
    let list = |k: Vertex| -> Result<Vec<u32>> {
        let mut l = lists.get(&k).cloned().ok_or_else(|| Error::Lookup(format!("no list for {k}")))?;
        l.sort_unstable();
        l.dedup();
        if l.is_empty() {
            return Err(Error::structural(format!("empty list for {k}")));
        }
        Ok(l)
    };
    match mode {
        ColoringMode::Vertex => {
            let mut labels = Vec::new();
            let mut id: HashMap<(Vertex, u32), Vertex> = HashMap::new();
            let mut classes = Vec::new();
            for &v in &g.vertices {
                let mut class = Vec::new();
                for c in list(v)? {
                    id.insert((v, c), labels.len() as Vertex);
                    class.push(labels.len() as Vertex);
                    labels.push((v, c));
                }
                classes.push(class);
            }
            let mut edges = Vec::new();
            for &(a, b) in &g.edges {
                for (&(v, c), &i) in &id {
                    if v == a {
                        if let Some(&j) = id.get(&(b, c)) {
                            edges.push([i, j]);
                        }
                    }
                }
            }
            let vs: Vec<Vertex> = (0..labels.len() as Vertex).collect();
            Ok(ListColoringReduction::Vertex {
                graph: Graph::new(&vs, &edges)?,
                classes: VertexPartition::new(&classes)?,
                labels,
            })
        }
        ColoringMode::Edge => {
            let mut labels: Vec<(Vertex, u32)> = Vec::new();
            let mut id: HashMap<(Vertex, u32), Vertex> = HashMap::new();
            let mut get = |v: Vertex, c: u32, labels: &mut Vec<(Vertex, u32)>| -> Vertex {
                *id.entry((v, c)).or_insert_with(|| {
                    labels.push((v, c));
                    labels.len() as Vertex - 1
                })
            };
            let mut edges = Vec::new();
            let mut edge_labels = Vec::new();
            let mut classes = Vec::new();
            for (k, &(a, b)) in g.edges.iter().enumerate() {
                let mut class = Vec::new();
                for c in list(k as Vertex)? {
                    let (x, y) = (get(a, c, &mut labels), get(b, c, &mut labels));
                    class.push(edges.len() as Vertex);
                    edges.push(vec![x, y]);
                    edge_labels.push((k, c));
                }
                classes.push(class);
            }
            let vs: Vec<Vertex> = (0..labels.len() as Vertex).collect();
            Ok(ListColoringReduction::Edge {
                hypergraph: Hypergraph::new(&vs, &edges, Some(2))?,
                classes: VertexPartition::new(&classes)?,
                labels,
                edge_labels,
            })
        }
    }
}

/// Largest `n` accepted by [`nonisomorphic_graphs`].
pub const ISOMORPHISM_CAP: usize = 6;

/// One graph on vertices `0..n` from each isomorphism class: the one whose
/// edge mask is smallest over all relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    check_cap("vertices for isomorphism classes", n, ISOMORPHISM_CAP)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let pos = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for slot in 0..=k {
                let mut q = p.clone();
                q.insert(slot, k);
                next.push(q);
            }
        }
        perms = next;
    }
    // For each relabeling, where each edge bit goes.
    let maps: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(a, b)| pos(p[a], p[b])).collect()).collect();
    let vs: Vec<Vertex> = (0..n as Vertex).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let minimal = maps.iter().all(|m| {
            let image: u32 = (0..pairs.len()).filter(|&e| mask & (1 << e) != 0).map(|e| 1u32 << m[e]).sum();
            image >= mask
        });
        if minimal {
            let edges: Vec<[Vertex; 2]> = (0..pairs.len())
                .filter(|&e| mask & (1 << e) != 0)
                .map(|e| [pairs[e].0 as Vertex, pairs[e].1 as Vertex])
                .collect();
            out.push(Graph::new(&vs, &edges)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| nonisomorphic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    use super::*;
    use crate::exactla::ratio;
    use crate::homology::{eta_h, Eta};

    fn cycle(n: u32) -> Graph {
        let vs: Vec<u32> = (0..n).collect();
        let es: Vec<[u32; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
        Graph::new(&vs, &es).unwrap()
    }

    #[test]
    fn independence_complex_of_c4() {
        let c = independence_complex(&cycle(4));
        assert_eq!(c.facets(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(eta_h(&c), Eta::Finite(1));
    }

    #[test]
    fn empty_graph_gives_empty_face() {
        let g = Graph::new(&[], &[]).unwrap();
        assert_eq!(independence_complex(&g).dim(), -1);
    }

    #[test]
    fn domination_of_small_graphs() {
        let (k22, _) = kdd_single_class(2).unwrap();
        let d = domination_params(&k22).unwrap();
        assert_eq!(d.total_domination, ExtNat::Finite(2));
        assert_eq!(d.independence_domination, ExtNat::Finite(1));
        let lonely = Graph::new(&[0, 1, 2], &[[0, 1]]).unwrap();
        assert_eq!(domination_params(&lonely).unwrap().total_domination, ExtNat::Infinite);
    }

    #[test]
    fn triangle_matching_numbers() {
        let h = Hypergraph::from_graph(&cycle(3));
        let m = matching_numbers(&h).unwrap();
        assert_eq!((m.nu, m.nu_star.clone(), m.tau), (1, ratio(3, 2), 2));
    }

    #[test]
    fn counterexample_link() {
        let (h, a) = bipartite_counterexample(3).unwrap();
        let l = link(&h, &a, &[0]).unwrap();
        // x2 = 1, x3 = 2, y3 = 5
        assert_eq!(l.edges(), &[vec![1, 2], vec![1, 5]]);
    }

    #[test]
    fn kdd_recognition() {
        let (g, _) = kdd_double(2).unwrap();
        assert!(is_disjoint_kdd_union(&g, 2));
        assert!(!is_disjoint_kdd_union(&cycle(6), 1));
        assert!(is_disjoint_kdd_union(&cycle(4), 2));
    }

    #[test]
    fn grid_shape() {
        let h = grid(3).unwrap();
        assert_eq!(h.edges().len(), 6);
        assert_eq!(h.max_degree(), 2);
        assert!(h.disjoint(0, 1) && !h.disjoint(0, 3));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_graph(6, 0.5, 9).unwrap(), random_graph(6, 0.5, 9).unwrap());
        assert_eq!(random_partition(&[2, 3], 4).unwrap(), random_partition(&[2, 3], 4).unwrap());
    }

    #[test]
    fn path_list_coloring() {
        let p3 = Graph::new(&[0, 1, 2], &[[0, 1], [1, 2]]).unwrap();
        let lists: BTreeMap<u32, Vec<u32>> = (0..3).map(|v| (v, vec![1, 2])).collect();
        let ListColoringReduction::Vertex { graph, classes, .. } =
            list_coloring_reduction(&p3, &lists, ColoringMode::Vertex).unwrap()
        else {
            panic!("vertex mode");
        };
        let c = independence_complex(&graph);
        assert_eq!(crate::complex::colorful_simplices(&c, &classes).unwrap().len(), 2);
    }
}

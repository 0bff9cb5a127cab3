//! Reconfiguration graphs: construction, components, paths and diameter.

use crate::complex::{for_each_subset, Face, SimplicialComplex, Vertex, VertexPartition};
use crate::error::{check_cap, Error, Result};
use crate::graphs::Hypergraph;
use crate::matroid::Matroid;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

/// Cap on reconfiguration graph vertices.
pub const VERTEX_CAP: usize = 2_000_000;
/// Diameter is only computed below this many vertices.
pub const DIAMETER_CAP: usize = 4_000;

/// A configuration: a sorted list of ids. Tuple-valued configurations use
/// `index * width + choice`.
pub type Configuration = Vec<Vertex>;

/// An undirected graph on configurations with precomputed components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigGraph {
    configs: Vec<Configuration>,
    index: HashMap<Configuration, usize>,
    adj: Vec<Vec<usize>>,
    component: Vec<usize>,
    n_components: usize,
}

impl ReconfigGraph {
    /// `edges` are index pairs into `configs`; duplicates and orientation are ignored.
    pub fn new(configs: Vec<Configuration>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = configs.len();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        let index = configs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut component = vec![usize::MAX; n];
        let mut n_components = 0;
        for s in 0..n {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = n_components;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if component[w] == usize::MAX {
                        component[w] = n_components;
                        stack.push(w);
                    }
                }
            }
            n_components += 1;
        }
        ReconfigGraph { configs, index, adj, component, n_components }
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    pub fn index_of(&self, c: &[Vertex]) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted index pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component[i]
    }

    pub fn component_count(&self) -> usize {
        self.n_components
    }

    /// Connected means nonempty with one component.
    pub fn is_connected(&self) -> bool {
        self.n_components == 1
    }

    /// Members of each component, by index, components ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_components];
        for (i, &c) in self.component.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path between two configurations, if they are connected.
    pub fn path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        if self.component[s] != self.component[t] {
            return None;
        }
        let mut prev = vec![usize::MAX; self.len()];
        prev[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            if v == t {
                break;
            }
            for &w in &self.adj[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    q.push_back(w);
                }
            }
        }
        let mut path = vec![t];
        let mut v = t;
        while v != s {
            v = prev[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Exact diameter of a connected graph below `DIAMETER_CAP` vertices.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() || self.len() > DIAMETER_CAP {
            return None;
        }
        (0..self.len()).map(|s| self.bfs(s).into_iter().max().unwrap_or(0)).max()
    }

    pub fn analyze(&self) -> RgAnalysis {
        let comps = self.components();
        RgAnalysis {
            vertices: self.len(),
            edges: self.edge_count(),
            components: self.n_components,
            empty: self.is_empty(),
            connected: self.is_connected(),
            diameter: self.diameter(),
            witness_vertices_per_component: comps
                .iter()
                .map(|c| self.configs[c[0]].clone())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RgAnalysis {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub empty: bool,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub witness_vertices_per_component: Vec<Configuration>,
}

/// Connects configurations of size `k` that are faces of a common `(k+1)`-face.
fn union_rule_graph(c: &SimplicialComplex, configs: Vec<Configuration>, k: usize) -> ReconfigGraph {
    let index: HashMap<&Configuration, usize> =
        configs.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut edges = Vec::new();
    for f in c.faces_of_size(k + 1) {
        let mut inside = Vec::new();
        for_each_subset(&f, k, &mut |s| {
            if let Some(&i) = index.get(&s.to_vec()) {
                inside.push(i);
            }
        });
        for a in 0..inside.len() {
            for b in a + 1..inside.len() {
                edges.push((inside[a], inside[b]));
            }
        }
    }
    ReconfigGraph::new(configs, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Adjacency {
    /// Adjacent iff the union is a face with `k + 1` vertices.
    #[default]
    Union,
    /// Adjacent iff they differ by swapping one vertex inside a single class.
    OneClass,
}

/// `RG(C, V; k)`: partial colorful simplices meeting exactly `k` classes.
pub fn rg_colorful(c: &SimplicialComplex, v: &VertexPartition, k: usize) -> Result<ReconfigGraph> {
    rg_colorful_with(c, v, k, Adjacency::Union)
}

pub fn rg_colorful_with(
    c: &SimplicialComplex,
    v: &VertexPartition,
    k: usize,
    adjacency: Adjacency,
) -> Result<ReconfigGraph> {
    v.check_covers(c.ground_set())?;
    if k > v.n() {
        return Err(Error::precondition(format!("k = {k} exceeds the number of classes")));
    }
    let mut set: std::collections::HashSet<Face> = std::collections::HashSet::new();
    for f in c.facets() {
        let met = v.classes_met(f);
        for_each_subset(&met, k, &mut |classes| {
            for t in crate::complex::partial_transversals_on(
                &SimplicialComplex::from_antichain(f.clone(), vec![f.clone()]),
                v,
                classes,
            ) {
                set.insert(t);
            }
        });
        check_cap("reconfiguration graph vertices", set.len(), VERTEX_CAP)?;
    }
    let mut configs: Vec<Configuration> = set.into_iter().collect();
    configs.sort_unstable();
    Ok(match adjacency {
        Adjacency::Union => union_rule_graph(c, configs, k),
        Adjacency::OneClass => {
            let mut edges = Vec::new();
            for a in 0..configs.len() {
                for b in a + 1..configs.len() {
                    let (x, y) = (&configs[a], &configs[b]);
                    let only_x: Vec<Vertex> = x.iter().copied().filter(|q| !y.contains(q)).collect();
                    let only_y: Vec<Vertex> = y.iter().copied().filter(|q| !x.contains(q)).collect();
                    if only_x.len() == 1
                        && only_y.len() == 1
                        && v.class_of(only_x[0]) == v.class_of(only_y[0])
                    {
                        edges.push((a, b));
                    }
                }
            }
            ReconfigGraph::new(configs, edges)
        }
    })
}

/// `RG(C, M; k)`: faces of `C` of size `k` independent in `M`.
pub fn rg_complex_matroid(c: &SimplicialComplex, m: &Matroid, k: usize) -> Result<ReconfigGraph> {
    if m.ground_set() != c.ground_set() {
        return Err(Error::structural("matroid and complex need the same ground set"));
    }
    let configs: Vec<Configuration> =
        c.faces_of_size(k).into_iter().filter(|f| m.is_independent(f)).collect();
    check_cap("reconfiguration graph vertices", configs.len(), VERTEX_CAP)?;
    Ok(union_rule_graph(c, configs, k))
}

/// `RG_Mat(H, A; k)`: matchings of size `k` (as edge ids); adjacent iff they
/// differ in one edge each and the two differing edges have disjoint B-parts.
pub fn rg_bipartite_matching(h: &Hypergraph, a_side: &[Vertex], k: usize) -> Result<ReconfigGraph> {
    h.check_bipartite(a_side)?;
    let ids = h.edge_ids();
    let mut configs = Vec::new();
    for_each_subset(&ids, k, &mut |s| {
        if h.is_matching(s) {
            configs.push(s.to_vec());
        }
    });
    check_cap("reconfiguration graph vertices", configs.len(), VERTEX_CAP)?;
    let b_disjoint = |i: Vertex, j: Vertex| {
        let (bi, bj) = (h.b_part(i as usize, a_side), h.b_part(j as usize, a_side));
        bi.iter().all(|x| !bj.contains(x))
    };
    // Group by (k-1)-subsets to find pairs differing in exactly one edge.
    let mut by_core: HashMap<Configuration, Vec<usize>> = HashMap::new();
    for (i, m) in configs.iter().enumerate() {
        for drop in 0..m.len() {
            let core: Configuration =
                m.iter().enumerate().filter(|&(j, _)| j != drop).map(|(_, &e)| e).collect();
            by_core.entry(core).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for (core, members) in &by_core {
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let (x, y) = (&configs[members[a]], &configs[members[b]]);
                let ex = *x.iter().find(|e| !core.contains(e)).expect("one extra edge");
                let ey = *y.iter().find(|e| !core.contains(e)).expect("one extra edge");
                if b_disjoint(ex, ey) {
                    edges.push((members[a], members[b]));
                }
            }
        }
    }
    Ok(ReconfigGraph::new(configs, edges))
}

/// Walk graph on `(m-1)`-simplices of `col`: adjacent iff both lie in a common `m`-simplex.
pub fn up_down_walk(col: &SimplicialComplex, m: usize) -> Result<ReconfigGraph> {
    if m == 0 {
        return Err(Error::precondition("m must be positive"));
    }
    let configs = col.faces_of_size(m);
    check_cap("walk graph vertices", configs.len(), VERTEX_CAP)?;
    Ok(union_rule_graph(col, configs, m))
}

/// Graph on tuples `t ∈ choices[0] × ... × choices[n-1]` accepted by `vertex`,
/// with `t ~ t'` iff they differ at exactly one index `j` and `reduced(t, j)`
/// holds. Configurations encode `(index, choice)` as `index * width + choice`.
pub(crate) fn tuple_graph(
    sizes: &[usize],
    vertex: impl Fn(&[usize]) -> Result<bool> + Sync,
    reduced: impl Fn(&[usize], usize) -> Result<bool> + Sync,
) -> Result<ReconfigGraph> {
    use rayon::prelude::*;
    let width = sizes.iter().copied().max().unwrap_or(1).max(1);
    let total: usize = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s)).unwrap_or(usize::MAX);
    check_cap("tuple configurations", total, VERTEX_CAP)?;
    let decode = |mut code: usize| -> Vec<usize> {
        let mut t = vec![0; sizes.len()];
        for (i, &s) in sizes.iter().enumerate() {
            t[i] = code % s;
            code /= s;
        }
        t
    };
    let accepted: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .map(|code| {
            let t = decode(code);
            vertex(&t).map(|ok| ok.then_some(t))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let encode = |t: &[usize]| -> Configuration {
        t.iter().enumerate().map(|(i, &c)| (i * width + c) as Vertex).collect()
    };
    let configs: Vec<Configuration> = accepted.iter().map(|t| encode(t)).collect();
    let index: HashMap<&[usize], usize> =
        accepted.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    // Group tuples by (index j, tuple with j blanked).
    let mut groups: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for (i, t) in accepted.iter().enumerate() {
        for j in 0..t.len() {
            let mut key = t.clone();
            key[j] = usize::MAX;
            groups.entry((j, key)).or_default().push(i);
        }
    }
    let groups: Vec<_> =
        groups.into_iter().filter(|(_, m)| m.len() > 1).collect();
    let edges: Vec<(usize, usize)> = groups
        .par_iter()
        .map(|((j, _), members)| -> Result<Vec<(usize, usize)>> {
            if !reduced(&accepted[members[0]], *j)? {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            for a in 0..members.len() {
                for b in a + 1..members.len() {
                    out.push((members[a], members[b]));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let _ = index;
    let mut order: Vec<usize> = (0..configs.len()).collect();
    order.sort_by(|&a, &b| configs[a].cmp(&configs[b]));
    let mut rank = vec![0; configs.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let sorted: Vec<Configuration> = order.iter().map(|&i| configs[i].clone()).collect();
    Ok(ReconfigGraph::new(sorted, edges.into_iter().map(|(a, b)| (rank[a], rank[b]))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{bipartite_counterexample, independence_complex, kdd_single_class, Graph};

    #[test]
    fn kdd_single_class_has_two_components() {
        let (g, v) = kdd_single_class(2).unwrap();
        let rg = rg_colorful(&independence_complex(&g), &v, 1).unwrap();
        assert_eq!(rg.len(), 4);
        assert_eq!(rg.component_count(), 2);
        assert_eq!(rg.diameter(), None);
    }

    #[test]
    fn path_and_diameter_on_a_simplex() {
        let c = SimplicialComplex::simplex(&[0, 1, 2, 3]).unwrap();
        let v = VertexPartition::new(&[vec![0, 1], vec![2, 3]]).unwrap();
        let rg = rg_colorful(&c, &v, 2).unwrap();
        assert_eq!(rg.len(), 4);
        assert!(rg.is_connected());
        assert_eq!(rg.diameter(), Some(2));
        let s = rg.index_of(&[0, 2]).unwrap();
        let t = rg.index_of(&[1, 3]).unwrap();
        assert_eq!(rg.path(s, t).unwrap().len(), 3);
    }

    #[test]
    fn empty_graph_is_not_connected() {
        let g = Graph::new(&[0, 1], &[[0, 1]]).unwrap();
        let v = VertexPartition::new(&[vec![0], vec![1]]).unwrap();
        let rg = rg_colorful(&independence_complex(&g), &v, 2).unwrap();
        assert!(rg.is_empty() && !rg.is_connected());
        assert!(rg.analyze().empty);
    }

    #[test]
    fn one_class_adjacency_is_weaker() {
        // Two isolated points in one class: the union {0, 2} is not a face.
        let c = SimplicialComplex::new(&[0, 2], &[vec![0], vec![2]]).unwrap();
        let v = VertexPartition::new(&[vec![0, 2]]).unwrap();
        let strong = rg_colorful(&c, &v, 1).unwrap();
        let weak = rg_colorful_with(&c, &v, 1, Adjacency::OneClass).unwrap();
        assert_eq!(strong.component_count(), 2);
        assert_eq!(weak.component_count(), 1);
    }

    #[test]
    fn counterexample_matchings() {
        let (h, a) = bipartite_counterexample(3).unwrap();
        let rg = rg_bipartite_matching(&h, &a, 2).unwrap();
        assert_eq!(rg.configs(), &[vec![0, 3], vec![1, 2]]);
        assert_eq!(rg.component_count(), 2);
        let rg1 = rg_bipartite_matching(&h, &a, 1).unwrap();
        assert_eq!(rg1.component_count(), 2);
    }

    #[test]
    fn walk_on_a_path_complex() {
        let c = SimplicialComplex::new(&[0, 1, 2], &[vec![0, 1], vec![1, 2]]).unwrap();
        let w = up_down_walk(&c, 1).unwrap();
        assert!(w.is_connected());
        assert_eq!(w.edge_count(), 2);
    }

    #[test]
    fn tuple_graph_on_a_grid() {
        let g = tuple_graph(&[2, 3], |_| Ok(true), |_, _| Ok(true)).unwrap();
        assert_eq!(g.len(), 6);
        // Each tuple has 1 + 2 neighbors.
        assert_eq!(g.edge_count(), 6 * 3 / 2);
        assert!(g.is_connected());
    }
}

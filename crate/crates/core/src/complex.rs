//! Finite abstract simplicial complexes, vertex partitions, posets, and the
//! complexes derived from them (colorful, intersection, nerve, dual, order).

use crate::error::{check_cap, Error, Result};
use crate::matroid::Matroid;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

pub type Vertex = u32;
/// A face, always sorted ascending without repeats.
pub type Face = Vec<Vertex>;

/// Largest ground set for exhaustive subset enumeration.
pub const SUBSET_CAP: usize = 16;

pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

pub(crate) fn union(a: &[Vertex], b: &[Vertex]) -> Face {
    let s: BTreeSet<Vertex> = a.iter().chain(b).copied().collect();
    s.into_iter().collect()
}

pub(crate) fn normalize_face(face: &[Vertex]) -> Result<Face> {
    let mut f = face.to_vec();
    f.sort_unstable();
    let n = f.len();
    f.dedup();
    if f.len() != n {
        return Err(Error::structural(format!("face {face:?} repeats a vertex")));
    }
    Ok(f)
}

/// Calls `f` on every subset of `set` of size `k`, in lexicographic order.
pub(crate) fn for_each_subset<T: Copy>(set: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(set: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=set.len().saturating_sub(need) {
            if i >= set.len() {
                break;
            }
            cur.push(set[i]);
            rec(set, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k > set.len() {
        return;
    }
    let mut cur = Vec::with_capacity(k);
    rec(set, k, 0, &mut cur, f);
}

/// A finite abstract simplicial complex on an explicit ground set, stored by
/// its maximal faces. The complex `{∅}` is valid; a complex with no faces is not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Vec<Vertex>,
    facets: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ground_set: Vec<Vertex>,
    pub maximal_faces: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; non-maximal faces are dropped.
    pub fn new(ground: &[Vertex], faces: &[Vec<Vertex>]) -> Result<Self> {
        let mut g = ground.to_vec();
        g.sort_unstable();
        let n = g.len();
        g.dedup();
        if g.len() != n {
            return Err(Error::structural("ground set repeats a vertex"));
        }
        if faces.is_empty() {
            return Err(Error::structural("a complex needs at least the empty face"));
        }
        let gs: HashSet<Vertex> = g.iter().copied().collect();
        let mut norm = Vec::with_capacity(faces.len());
        for f in faces {
            let f = normalize_face(f)?;
            if let Some(v) = f.iter().find(|v| !gs.contains(v)) {
                return Err(Error::Lookup(format!("vertex {v} is not in the ground set")));
            }
            norm.push(f);
        }
        Ok(Self::from_faces_unchecked(g, norm))
    }

    /// `faces` must be sorted faces inside `ground`; keeps the maximal ones.
    pub(crate) fn from_faces_unchecked(ground: Vec<Vertex>, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in faces {
            if !kept.iter().any(|k| is_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { ground, facets: kept }
    }

    /// `facets` must already form an antichain of sorted faces.
    pub(crate) fn from_antichain(ground: Vec<Vertex>, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        if facets.is_empty() {
            facets.push(Vec::new());
        }
        SimplicialComplex { ground, facets }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: &[Vertex]) -> Result<Self> {
        Self::new(vertices, &[vertices.to_vec()])
    }

    /// The boundary of the simplex on `vertices` (a sphere of dimension `|vertices| - 2`).
    pub fn simplex_boundary(vertices: &[Vertex]) -> Result<Self> {
        let v = normalize_face(vertices)?;
        if v.is_empty() {
            return Err(Error::precondition("the boundary of the empty simplex is void"));
        }
        let faces: Vec<Face> = (0..v.len())
            .map(|i| v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect())
            .collect();
        Self::new(&v, &faces)
    }

    /// The complex `{∅}` on `ground`.
    pub fn empty_face(ground: &[Vertex]) -> Result<Self> {
        Self::new(ground, &[vec![]])
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        Self::new(&j.ground_set, &j.maximal_faces)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { ground_set: self.ground.clone(), maximal_faces: self.facets.clone() }
    }

    pub fn ground_set(&self) -> &[Vertex] {
        &self.ground
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Vertices that actually appear in some face.
    pub fn vertices(&self) -> Vec<Vertex> {
        let s: BTreeSet<Vertex> = self.facets.iter().flatten().copied().collect();
        s.into_iter().collect()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains(&self, face: &[Vertex]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|m| is_subset(&f, m))
    }

    /// True if some vertex lies in every maximal face.
    pub fn is_cone(&self) -> bool {
        let Some(first) = self.facets.first() else { return false };
        first.iter().any(|v| self.facets.iter().all(|f| f.binary_search(v).is_ok()))
    }

    /// All faces with exactly `size` vertices, sorted lexicographically.
    pub fn faces_of_size(&self, size: usize) -> Vec<Face> {
        let mut set: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            for_each_subset(f, size, &mut |s| {
                if !set.contains(s) {
                    set.insert(s.to_vec());
                }
            });
        }
        let mut v: Vec<Face> = set.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// All faces including ∅, sorted by size then lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let top = (self.dim() + 1) as usize;
        (0..=top).flat_map(|k| self.faces_of_size(k)).collect()
    }

    /// `f_p` for `p = -1 ..= dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = (self.dim() + 1) as usize;
        (0..=top).map(|k| self.faces_of_size(k).len()).collect()
    }

    /// `C[X] = {σ ∈ C : σ ⊆ X}` with ground set `X`.
    pub fn induced(&self, x: &[Vertex]) -> SimplicialComplex {
        let mut xs = x.to_vec();
        xs.sort_unstable();
        xs.dedup();
        let faces: Vec<Face> = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|v| xs.binary_search(v).is_ok()).collect())
            .collect();
        Self::from_faces_unchecked(xs, faces)
    }

    /// The join; ground sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.ground.iter().any(|v| other.ground.binary_search(v).is_ok()) {
            return Err(Error::precondition("join needs disjoint ground sets"));
        }
        let ground = union(&self.ground, &other.ground);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(union(a, b));
            }
        }
        Ok(Self::from_antichain(ground, facets))
    }
}

/// A partition of a ground set into nonempty, pairwise disjoint classes,
/// numbered `1..=n` in reports and `0..n` in code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<Vertex>>,
    class_of: HashMap<Vertex, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub classes: Vec<Vec<Vertex>>,
}

impl VertexPartition {
    pub fn new(classes: &[Vec<Vertex>]) -> Result<Self> {
        let mut class_of = HashMap::new();
        let mut cl = Vec::with_capacity(classes.len());
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::structural(format!("class {} is empty", i + 1)));
            }
            let c = normalize_face(c)?;
            for &v in &c {
                if class_of.insert(v, i).is_some() {
                    return Err(Error::structural(format!("vertex {v} lies in two classes")));
                }
            }
            cl.push(c);
        }
        Ok(VertexPartition { classes: cl, class_of })
    }

    pub fn from_json(j: &PartitionJson) -> Result<Self> {
        Self::new(&j.classes)
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { classes: self.classes.clone() }
    }

    /// Checks that the classes cover exactly `ground`.
    pub fn check_covers(&self, ground: &[Vertex]) -> Result<()> {
        let g: BTreeSet<Vertex> = ground.iter().copied().collect();
        let u: BTreeSet<Vertex> = self.class_of.keys().copied().collect();
        if g != u {
            return Err(Error::structural("partition classes do not cover the ground set exactly"));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[Vertex] {
        &self.classes[i]
    }

    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.class_of.get(&v).copied()
    }

    /// `V_I`, for 0-based class indices.
    pub fn union_of(&self, idx: &[usize]) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = idx.iter().flat_map(|&i| self.classes[i].iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// Classes met by `face`, sorted.
    pub fn classes_met(&self, face: &[Vertex]) -> Vec<usize> {
        let s: BTreeSet<usize> = face.iter().filter_map(|v| self.class_of(*v)).collect();
        s.into_iter().collect()
    }

    /// At most one vertex per class.
    pub fn is_partial_transversal(&self, face: &[Vertex]) -> bool {
        let mut seen = HashSet::new();
        face.iter().all(|v| self.class_of(*v).is_some_and(|c| seen.insert(c)))
    }
}

/// A finite partial order on integer element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    /// `le[i][j]` iff `elements[i] <= elements[j]`.
    le: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<Vertex>,
    pub covers: Vec<[Vertex; 2]>,
}

impl FinitePoset {
    /// From cover pairs `(lo, hi)`; the transitive closure must be antisymmetric.
    pub fn new(elements: &[Vertex], covers: &[[Vertex; 2]]) -> Result<Self> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        let n0 = els.len();
        els.dedup();
        if els.len() != n0 {
            return Err(Error::structural("poset repeats an element"));
        }
        let index: HashMap<Vertex, usize> = els.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n = els.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for [a, b] in covers {
            let ia = *index.get(a).ok_or_else(|| Error::Lookup(format!("poset element {a}")))?;
            let ib = *index.get(b).ok_or_else(|| Error::Lookup(format!("poset element {b}")))?;
            le[ia][ib] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if le[i][j] && le[j][i] {
                    return Err(Error::structural(format!(
                        "covers contain a cycle through {} and {}",
                        els[i], els[j]
                    )));
                }
            }
        }
        Ok(FinitePoset { elements: els, index, le })
    }

    /// Poset on `0..n` with `leq(i, j)` already reflexive and transitive.
    pub(crate) fn from_order(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        let elements: Vec<Vertex> = (0..n as Vertex).collect();
        let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        FinitePoset { elements, index, le }
    }

    pub fn from_json(j: &PosetJson) -> Result<Self> {
        Self::new(&j.elements, &j.covers)
    }

    pub fn to_json(&self) -> PosetJson {
        let covers = self
            .cover_pairs()
            .into_iter()
            .map(|(i, j)| [self.elements[i], self.elements[j]])
            .collect();
        PosetJson { elements: self.elements.clone(), covers }
    }

    pub fn elements(&self) -> &[Vertex] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: Vertex, b: Vertex) -> Option<bool> {
        Some(self.le[*self.index.get(&a)?][*self.index.get(&b)?])
    }

    fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    /// Cover relations as index pairs.
    fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn maximal_chains(&self) -> Vec<Face> {
        let n = self.len();
        let mut up = vec![Vec::new(); n];
        let mut has_lower = vec![false; n];
        for (i, j) in self.cover_pairs() {
            up[i].push(j);
            has_lower[j] = true;
        }
        let starts: Vec<usize> = (0..n).filter(|&i| !has_lower[i]).collect();
        saturated_chains(&starts, &up)
            .into_iter()
            .map(|c| {
                let mut f: Face = c.into_iter().map(|i| self.elements[i]).collect();
                f.sort_unstable();
                f
            })
            .collect()
    }
}

/// All maximal paths in the cover DAG `up` starting at `starts`.
fn saturated_chains(starts: &[usize], up: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn rec(v: usize, up: &[Vec<usize>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        cur.push(v);
        if up[v].is_empty() {
            out.push(cur.clone());
        } else {
            for &w in &up[v] {
                rec(w, up, cur, out);
            }
        }
        cur.pop();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for &s in starts {
        rec(s, up, &mut cur, &mut out);
    }
    out
}

/// Order complex of a poset on `0..n` given by its cover relation `up`.
pub(crate) fn order_complex_from_covers(up: &[Vec<usize>]) -> SimplicialComplex {
    let n = up.len();
    let mut has_lower = vec![false; n];
    for row in up {
        for &j in row {
            has_lower[j] = true;
        }
    }
    let starts: Vec<usize> = (0..n).filter(|&i| !has_lower[i]).collect();
    let facets: Vec<Face> = saturated_chains(&starts, up)
        .into_iter()
        .map(|c| {
            let mut f: Face = c.into_iter().map(|i| i as Vertex).collect();
            f.sort_unstable();
            f
        })
        .collect();
    SimplicialComplex::from_antichain((0..n as Vertex).collect(), facets)
}

/// A complex whose vertex `i` stands for `labels[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledComplex<L> {
    pub complex: SimplicialComplex,
    pub labels: Vec<L>,
}

/// Order complex: vertices are the elements of `p`, faces are its chains.
pub fn order_complex(p: &FinitePoset) -> SimplicialComplex {
    let facets = if p.is_empty() { vec![vec![]] } else { p.maximal_chains() };
    SimplicialComplex::from_antichain(p.elements().to_vec(), facets)
}

/// Order complex of an up-closed family of faces of `c`, ordered by inclusion.
fn order_complex_of_face_family(family: Vec<Face>) -> LabeledComplex<Face> {
    let mut family = family;
    family.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: HashMap<&Face, usize> = family.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let n = family.len();
    let mut up = vec![Vec::new(); n];
    let mut has_lower = vec![false; n];
    let mut all_vertices: BTreeSet<Vertex> = BTreeSet::new();
    for f in &family {
        all_vertices.extend(f.iter().copied());
    }
    for (i, f) in family.iter().enumerate() {
        for &v in &all_vertices {
            if f.binary_search(&v).is_err() {
                let mut g = f.clone();
                let pos = g.binary_search(&v).unwrap_err();
                g.insert(pos, v);
                if let Some(&j) = index.get(&g) {
                    up[i].push(j);
                    has_lower[j] = true;
                }
            }
        }
    }
    let starts: Vec<usize> = (0..n).filter(|&i| !has_lower[i]).collect();
    let facets: Vec<Face> = if n == 0 {
        vec![vec![]]
    } else {
        saturated_chains(&starts, &up)
            .into_iter()
            .map(|c| {
                let mut f: Face = c.into_iter().map(|i| i as Vertex).collect();
                f.sort_unstable();
                f
            })
            .collect()
    };
    let ground: Vec<Vertex> = (0..n as Vertex).collect();
    LabeledComplex { complex: SimplicialComplex::from_antichain(ground, facets), labels: family }
}

fn check_partition_for(c: &SimplicialComplex, v: &VertexPartition) -> Result<()> {
    v.check_covers(c.ground_set())
}

/// Faces of `c` with exactly one vertex in each class.
pub fn colorful_simplices(c: &SimplicialComplex, v: &VertexPartition) -> Result<Vec<Face>> {
    check_partition_for(c, v)?;
    let all: Vec<usize> = (0..v.n()).collect();
    Ok(partial_transversals_on(c, v, &all))
}

/// Faces of `c` that pick exactly one vertex from each class in `classes`.
pub(crate) fn partial_transversals_on(
    c: &SimplicialComplex,
    v: &VertexPartition,
    classes: &[usize],
) -> Vec<Face> {
    let mut out: HashSet<Face> = HashSet::new();
    for f in c.facets() {
        let per: Vec<Vec<Vertex>> = classes
            .iter()
            .map(|&i| f.iter().copied().filter(|x| v.class_of(*x) == Some(i)).collect())
            .collect();
        if per.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; per.len()];
        loop {
            let mut face: Face = idx.iter().zip(&per).map(|(&k, p)| p[k]).collect();
            face.sort_unstable();
            out.insert(face);
            let mut pos = 0;
            loop {
                if pos == per.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < per[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == per.len() {
                break;
            }
        }
    }
    let mut v: Vec<Face> = out.into_iter().collect();
    v.sort_unstable();
    v
}

/// `Col(C, V; k)`: order complex of the faces meeting at least `k` classes.
pub fn colorful_complex(
    c: &SimplicialComplex,
    v: &VertexPartition,
    k: usize,
) -> Result<LabeledComplex<Face>> {
    check_partition_for(c, v)?;
    if k == 0 || k > v.n() {
        return Err(Error::precondition(format!("k = {k} must lie in 1..={}", v.n())));
    }
    let family: Vec<Face> =
        c.all_faces().into_iter().filter(|f| v.classes_met(f).len() >= k).collect();
    Ok(order_complex_of_face_family(family))
}

/// `Int(C, M; k)`: order complex of the faces containing an independent set of size `k`.
pub fn intersection_complex(
    c: &SimplicialComplex,
    m: &Matroid,
    k: usize,
) -> Result<LabeledComplex<Face>> {
    if m.ground_set() != c.ground_set() {
        return Err(Error::structural("matroid and complex need the same ground set"));
    }
    if k == 0 || k > m.rank_total() {
        return Err(Error::precondition(format!("k = {k} must lie in 1..={}", m.rank_total())));
    }
    let family: Vec<Face> = c.all_faces().into_iter().filter(|f| m.rank(f) >= k).collect();
    Ok(order_complex_of_face_family(family))
}

/// Nerve of the maximal faces that meet every class. Vertex `i` is the `i`-th
/// spanning facet in `labels`.
pub fn colorful_nerve(
    c: &SimplicialComplex,
    v: &VertexPartition,
) -> Result<LabeledComplex<Face>> {
    check_partition_for(c, v)?;
    let spanning: Vec<Face> =
        c.facets().iter().filter(|f| v.classes_met(f).len() == v.n()).cloned().collect();
    let ground: Vec<Vertex> = (0..spanning.len() as Vertex).collect();
    let mut families: Vec<Face> = Vec::new();
    for x in c.vertices() {
        let fam: Face = spanning
            .iter()
            .enumerate()
            .filter(|(_, f)| f.binary_search(&x).is_ok())
            .map(|(i, _)| i as Vertex)
            .collect();
        families.push(fam);
    }
    if families.is_empty() {
        families.push(vec![]);
    }
    Ok(LabeledComplex {
        complex: SimplicialComplex::from_faces_unchecked(ground, families),
        labels: spanning,
    })
}

/// `C* = {X ⊆ V : V - X ∉ C}`. Requires `V ∉ C`.
pub fn alexander_dual(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let g = c.ground_set();
    check_cap("alexander dual ground set", g.len(), 20)?;
    if c.contains(g) {
        return Err(Error::precondition("the ground set is a face; the dual is void"));
    }
    let n = g.len();
    let facet_masks: Vec<u32> = c
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| 1u32 << g.binary_search(v).unwrap()).sum())
        .collect();
    let is_face = |s: u32| facet_masks.iter().any(|&f| s & !f == 0);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut facets = Vec::new();
    for s in 0..=full {
        if is_face(s) {
            continue;
        }
        let minimal = (0..n).all(|i| s & (1 << i) == 0 || is_face(s & !(1 << i)));
        if minimal {
            let comp = full & !s;
            facets.push((0..n).filter(|i| comp & (1 << i) != 0).map(|i| g[i]).collect());
        }
    }
    Ok(SimplicialComplex::from_antichain(g.to_vec(), facets))
}

/// Order complex of the interval poset `in(P)`, with `[a1,b1] <= [a2,b2]`
/// iff `a2 <= a1 <= b1 <= b2`. Labels are `(a, b)` element pairs.
pub fn interval_subdivision(p: &FinitePoset) -> LabeledComplex<(Vertex, Vertex)> {
    let els = p.elements();
    let mut labels = Vec::new();
    for (i, &a) in els.iter().enumerate() {
        for (j, &b) in els.iter().enumerate() {
            if p.le[i][j] {
                labels.push(((a, b), (i, j)));
            }
        }
    }
    labels.sort_unstable();
    let n = labels.len();
    let q = FinitePoset::from_order(n, |x, y| {
        let (a1, b1) = labels[x].1;
        let (a2, b2) = labels[y].1;
        p.le[a2][a1] && p.le[b1][b2]
    });
    LabeledComplex { complex: order_complex(&q), labels: labels.into_iter().map(|l| l.0).collect() }
}

/// Set partitions of `items` into at most `max_classes` nonempty classes of
/// at most `max_size` elements each, via restricted growth strings.
pub fn set_partitions(items: &[Vertex], max_classes: usize, max_size: usize) -> Vec<Vec<Vec<Vertex>>> {
    fn rec(
        items: &[Vertex],
        i: usize,
        classes: &mut Vec<Vec<Vertex>>,
        max_classes: usize,
        max_size: usize,
        out: &mut Vec<Vec<Vec<Vertex>>>,
    ) {
        if i == items.len() {
            out.push(classes.clone());
            return;
        }
        for c in 0..classes.len() {
            if classes[c].len() < max_size {
                classes[c].push(items[i]);
                rec(items, i + 1, classes, max_classes, max_size, out);
                classes[c].pop();
            }
        }
        if classes.len() < max_classes && max_size > 0 {
            classes.push(vec![items[i]]);
            rec(items, i + 1, classes, max_classes, max_size, out);
            classes.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, &mut Vec::new(), max_classes, max_size, &mut out);
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn set_partition_counts() {
        // Bell numbers.
        assert_eq!(set_partitions(&[0, 1, 2, 3], 4, 4).len(), 15);
        assert_eq!(set_partitions(&[0, 1, 2, 3, 4], 5, 5).len(), 52);
        // Into two classes of size two: {01|23}, {02|13}, {03|12}.
        assert_eq!(set_partitions(&[0, 1, 2, 3], 2, 2).len(), 3);
        assert_eq!(set_partitions(&[], 3, 3), vec![Vec::<Vec<Vertex>>::new()]);
    }

    use super::*;

    #[test]
    fn hollow_triangle_basics() {
        let c = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.f_vector(), vec![1, 3, 3]);
        assert!(!c.is_cone());
        assert!(c.contains(&[3, 1]));
        assert!(!c.contains(&[1, 2, 3]));
    }

    #[test]
    fn empty_face_complex_is_not_void() {
        let c = SimplicialComplex::new(&[1, 2], &[vec![]]).unwrap();
        assert_eq!(c.dim(), -1);
        assert_eq!(c.f_vector(), vec![1]);
        assert!(SimplicialComplex::new(&[1], &[]).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SimplicialComplex::new(&[1, 2], &[vec![1, 3]]).is_err());
        assert!(SimplicialComplex::new(&[1, 1], &[vec![1]]).is_err());
        assert!(VertexPartition::new(&[vec![1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(&[vec![]]).is_err());
    }

    #[test]
    fn drops_non_maximal_faces() {
        let c = SimplicialComplex::new(&[1, 2, 3], &[vec![1], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(c.facets(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn induced_and_join() {
        let c = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        let d = c.induced(&[1, 2]);
        assert_eq!(d.facets(), &[vec![1, 2]]);
        let pts = SimplicialComplex::new(&[7, 8], &[vec![7], vec![8]]).unwrap();
        let j = pts.join(&SimplicialComplex::new(&[4, 5], &[vec![4], vec![5]]).unwrap()).unwrap();
        assert_eq!(j.facets().len(), 4);
        assert!(pts.join(&pts).is_err());
    }

    #[test]
    fn colorful_simplices_of_square() {
        // 4-cycle 1-2-3-4 with classes {1,3}, {2,4}: every edge is colorful.
        let c = SimplicialComplex::new(
            &[1, 2, 3, 4],
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
        )
        .unwrap();
        let v = VertexPartition::new(&[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(colorful_simplices(&c, &v).unwrap().len(), 4);
    }

    #[test]
    fn order_complex_of_chain_is_simplex() {
        let p = FinitePoset::new(&[1, 2, 3], &[[1, 2], [2, 3]]).unwrap();
        assert_eq!(order_complex(&p).facets(), &[vec![1, 2, 3]]);
        assert!(FinitePoset::new(&[1, 2], &[[1, 2], [2, 1]]).is_err());
    }

    #[test]
    fn antichain_order_complex_is_discrete() {
        let p = FinitePoset::new(&[1, 2, 3], &[]).unwrap();
        assert_eq!(order_complex(&p).facets().len(), 3);
    }

    #[test]
    fn alexander_dual_examples() {
        let c = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        assert_eq!(alexander_dual(&c).unwrap().facets(), &[Vec::<Vertex>::new()]);
        let e = SimplicialComplex::empty_face(&[1]).unwrap();
        assert_eq!(alexander_dual(&e).unwrap().facets(), &[Vec::<Vertex>::new()]);
        assert!(alexander_dual(&SimplicialComplex::simplex(&[1, 2]).unwrap()).is_err());
    }

    #[test]
    fn interval_poset_of_two_chain() {
        let p = FinitePoset::new(&[0, 1], &[[0, 1]]).unwrap();
        let s = interval_subdivision(&p);
        // [0,0] < [0,1] > [1,1]: a path on three vertices.
        assert_eq!(s.labels.len(), 3);
        assert_eq!(s.complex.facets().len(), 2);
    }
}

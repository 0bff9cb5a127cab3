//! Triangulated prisms `Δ^n × [0, 1]`, R-Sperner labelings and path following
//! through colorful simplices from the base at height 0 to the base at height 1.

use crate::error::{Error, Result};
use crate::exactla::{rat, ratio, Rational};
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A vertex of the prism: barycentric coordinates on `Δ^n` and a height.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrismPoint {
    #[serde(with = "crate::exactla::serde_rational::vec")]
    pub bary: Vec<Rational>,
    #[serde(with = "crate::exactla::serde_rational")]
    pub height: Rational,
}

impl PrismPoint {
    /// Indices `i` with a positive barycentric weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.bary.len()).filter(|&i| self.bary[i].is_positive()).collect()
    }
}

/// Where a point sits on the boundary of the prism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupportingFace {
    /// In `Δ^n × {0}` or `Δ^n × {1}`, with `I(F)` the support.
    Base { level: u8, indices: Vec<usize> },
    /// `F × [0, 1]` for a face `F` of `Δ^n`.
    Lateral { indices: Vec<usize> },
}

impl SupportingFace {
    pub fn indices(&self) -> &[usize] {
        match self {
            SupportingFace::Base { indices, .. } | SupportingFace::Lateral { indices } => indices,
        }
    }
}

pub fn supporting_face(p: &PrismPoint) -> SupportingFace {
    let indices = p.support();
    if p.height.is_zero() {
        SupportingFace::Base { level: 0, indices }
    } else if p.height == rat(1) {
        SupportingFace::Base { level: 1, indices }
    } else {
        SupportingFace::Lateral { indices }
    }
}

/// A triangulation of `Δ^n × [0, 1]` by `(n+1)`-simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismTriangulation {
    n: usize,
    vertices: Vec<PrismPoint>,
    simplices: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub n: usize,
    pub vertices: Vec<PrismPoint>,
    pub simplices: Vec<Vec<usize>>,
}

impl PrismTriangulation {
    /// Parses and validates a triangulation.
    pub fn from_json(j: &TriangulationJson) -> Result<Self> {
        for (i, v) in j.vertices.iter().enumerate() {
            let sum: Rational = v.bary.iter().sum();
            if v.bary.len() != j.n + 1
                || v.bary.iter().any(Signed::is_negative)
                || sum != rat(1)
                || v.height.is_negative()
                || v.height > rat(1)
            {
                return Err(Error::structural(format!("vertex {i} is not a point of the prism")));
            }
        }
        if let Some(s) = j.simplices.iter().flatten().find(|&&i| i >= j.vertices.len()) {
            return Err(Error::Lookup(format!("simplex vertex {s} out of range")));
        }
        let mut simplices: Vec<Vec<usize>> = j
            .simplices
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s
            })
            .collect();
        simplices.sort();
        let t = PrismTriangulation { n: j.n, vertices: j.vertices.clone(), simplices };
        t.validate().map_err(|e| match e {
            Error::Internal(m) => Error::Structural(m),
            e => e,
        })?;
        Ok(t)
    }

    pub fn to_json(&self) -> TriangulationJson {
        TriangulationJson { n: self.n, vertices: self.vertices.clone(), simplices: self.simplices.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[PrismPoint] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    fn from_points(n: usize, simplices_pts: Vec<Vec<PrismPoint>>) -> Self {
        let mut index: BTreeMap<PrismPoint, usize> = BTreeMap::new();
        for s in &simplices_pts {
            for p in s {
                index.entry(p.clone()).or_insert(0);
            }
        }
        let vertices: Vec<PrismPoint> = index.keys().cloned().collect();
        for (i, v) in index.values_mut().enumerate() {
            *v = i;
        }
        let mut simplices: Vec<Vec<usize>> = simplices_pts
            .iter()
            .map(|s| {
                let mut ix: Vec<usize> = s.iter().map(|p| index[p]).collect();
                ix.sort_unstable();
                ix
            })
            .collect();
        simplices.sort();
        PrismTriangulation { n, vertices, simplices }
    }

    /// Checks purity, non-branching, boundary placement and total volume.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let bad = |m: String| Err(Error::Internal(format!("invalid prism triangulation: {m}")));
        let mut facet_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in &self.simplices {
            if s.len() != n + 2 {
                return bad(format!("simplex {s:?} has the wrong size"));
            }
            for drop in 0..s.len() {
                let f: Vec<usize> =
                    s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                *facet_count.entry(f).or_default() += 1;
            }
        }
        for (f, &c) in &facet_count {
            if c > 2 {
                return bad(format!("facet {f:?} lies in {c} simplices"));
            }
            if c == 1 && !self.on_boundary(f) {
                return bad(format!("facet {f:?} is free but not on the boundary"));
            }
        }
        let total: Rational = self.simplices.iter().map(|s| self.volume_times_factorial(s)).sum();
        // Prism volume in these coordinates: |Δ^n| · 1 with |Δ^n| = 1/n!, times (n+1)!.
        if total != rat((n + 1) as i64) {
            return bad(format!("volumes sum to {total}, expected {}", n + 1));
        }
        Ok(())
    }

    fn on_boundary(&self, f: &[usize]) -> bool {
        let pts: Vec<&PrismPoint> = f.iter().map(|&v| &self.vertices[v]).collect();
        let same_height = pts.iter().all(|p| p.height.is_zero()) || pts.iter().all(|p| p.height == rat(1));
        let missing_corner = (0..=self.n).any(|i| pts.iter().all(|p| p.bary[i].is_zero()));
        same_height || missing_corner
    }

    /// `(n+1)! · vol` of a simplex, using coordinates `(bary_1..bary_n, height)`.
    fn volume_times_factorial(&self, s: &[usize]) -> Rational {
        let coords = |v: usize| -> Vec<Rational> {
            let p = &self.vertices[v];
            let mut c: Vec<Rational> = p.bary[1..].to_vec();
            c.push(p.height.clone());
            c
        };
        let base = coords(s[0]);
        let rows: Vec<Vec<Rational>> = s[1..]
            .iter()
            .map(|&v| coords(v).iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        determinant(&rows).abs()
    }
}

fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let mut a = rows.to_vec();
    let n = a.len();
    let mut det = rat(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return rat(0) };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let v = &f * &a[c][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

fn corner(n: usize, i: usize, height: Rational) -> PrismPoint {
    let mut bary = vec![rat(0); n + 1];
    bary[i] = rat(1);
    PrismPoint { bary, height }
}

/// `subdivisions` stacked prisms, each cut into `n + 1` simplices
/// `conv(b_0, ..., b_k, t_k, ..., t_n)`; only corners of `Δ^n` appear.
pub fn staircase_triangulation(n: usize, subdivisions: usize) -> Result<PrismTriangulation> {
    if subdivisions == 0 {
        return Err(Error::precondition("at least one layer is required"));
    }
    let s = subdivisions as i64;
    let mut simplices = Vec::new();
    for layer in 0..s {
        let lo = ratio(layer, s);
        let hi = ratio(layer + 1, s);
        for k in 0..=n {
            let mut pts: Vec<PrismPoint> = (0..=k).map(|i| corner(n, i, lo.clone())).collect();
            pts.extend((k..=n).map(|i| corner(n, i, hi.clone())));
            simplices.push(pts);
        }
    }
    Ok(PrismTriangulation::from_points(n, simplices))
}

/// Freudenthal subdivision with `s` steps along each edge of `Δ^n` and along the height.
pub fn freudenthal_triangulation(n: usize, s: usize) -> Result<PrismTriangulation> {
    if s == 0 {
        return Err(Error::precondition("at least one step is required"));
    }
    let dim = n + 1;
    let si = s as i64;
    // Grid coordinates y_1 >= ... >= y_n in [0, s] for the simplex, h in [0, s].
    let to_point = |y: &[i64]| -> PrismPoint {
        let mut bary = Vec::with_capacity(n + 1);
        let first = if n == 0 { si } else { si - y[0] };
        bary.push(ratio(first, si));
        for k in 0..n {
            let next = if k + 1 < n { y[k + 1] } else { 0 };
            bary.push(ratio(y[k] - next, si));
        }
        PrismPoint { bary, height: ratio(y[n], si) }
    };
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::new();
        for p in &perms {
            for c in (0..dim).filter(|c| !p.contains(c)) {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        perms = next;
    }
    let mut simplices = Vec::new();
    let cubes = (s as u64).pow(dim as u32);
    for code in 0..cubes {
        let mut base = vec![0i64; dim];
        let mut c = code;
        for b in base.iter_mut() {
            *b = (c % s as u64) as i64;
            c /= s as u64;
        }
        for perm in &perms {
            let mut cur = base.clone();
            let mut verts = vec![cur.clone()];
            for &axis in perm {
                cur[axis] += 1;
                verts.push(cur.clone());
            }
            let inside = verts.iter().all(|v| (1..n).all(|k| v[k - 1] >= v[k]));
            if inside {
                simplices.push(verts.iter().map(|v| to_point(v)).collect());
            }
        }
    }
    Ok(PrismTriangulation::from_points(n, simplices))
}

/// One color in `0..=n` per vertex.
pub type Labeling = Vec<usize>;

/// Checks `λ(v) ∈ I(supp(v))` for every vertex.
pub fn validate_r_sperner(t: &PrismTriangulation, labels: &[usize]) -> Result<()> {
    if labels.len() != t.vertices.len() {
        return Err(Error::structural("one label per vertex is required"));
    }
    for (i, (v, &l)) in t.vertices.iter().zip(labels).enumerate() {
        if !supporting_face(v).indices().contains(&l) {
            return Err(Error::precondition(format!(
                "vertex {i} has label {l} outside its supporting indices {:?}",
                v.support()
            )));
        }
    }
    Ok(())
}

/// A uniformly random valid labeling.
pub fn random_r_sperner(t: &PrismTriangulation, seed: u64) -> Labeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    t.vertices
        .iter()
        .map(|v| {
            let s = v.support();
            s[rng.gen_range(0..s.len())]
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathReport {
    /// Colorful `n`-simplices on the base at height 0 and height 1.
    pub base0_colorful: usize,
    pub base1_colorful: usize,
    pub paths_0_to_1: usize,
    pub paths_0_to_0: usize,
    pub paths_1_to_1: usize,
    pub cycles: usize,
}

/// Builds the colorful-simplex graph (every degree is 1 or 2) and splits it
/// into paths and cycles. Fails if a parity claim does not hold.
pub fn follow_paths(t: &PrismTriangulation, labels: &[usize]) -> Result<PathReport> {
    validate_r_sperner(t, labels)?;
    let n = t.n;
    let colorful = |f: &[usize]| -> bool {
        let mut seen = vec![false; n + 1];
        f.iter().all(|&v| !std::mem::replace(&mut seen[labels[v]], true))
    };
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut id = |f: Vec<usize>, faces: &mut Vec<Vec<usize>>, adj: &mut Vec<Vec<usize>>| -> usize {
        *index.entry(f.clone()).or_insert_with(|| {
            faces.push(f);
            adj.push(Vec::new());
            faces.len() - 1
        })
    };
    for s in &t.simplices {
        let mut inside = Vec::new();
        for drop in 0..s.len() {
            let f: Vec<usize> =
                s.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
            if colorful(&f) {
                inside.push(id(f, &mut faces, &mut adj));
            }
        }
        match inside.len() {
            0 => {}
            2 => {
                adj[inside[0]].push(inside[1]);
                adj[inside[1]].push(inside[0]);
            }
            k => return Err(Error::Internal(format!("simplex {s:?} has {k} colorful facets"))),
        }
    }
    let level = |f: &[usize]| -> Option<u8> {
        let h: Vec<&Rational> = f.iter().map(|&v| &t.vertices[v].height).collect();
        if h.iter().all(|x| x.is_zero()) {
            Some(0)
        } else if h.iter().all(|x| **x == rat(1)) {
            Some(1)
        } else {
            None
        }
    };
    let mut report = PathReport {
        base0_colorful: 0,
        base1_colorful: 0,
        paths_0_to_1: 0,
        paths_0_to_0: 0,
        paths_1_to_1: 0,
        cycles: 0,
    };
    for (i, f) in faces.iter().enumerate() {
        let lv = level(f);
        match (adj[i].len(), lv) {
            (1, Some(0)) => report.base0_colorful += 1,
            (1, Some(1)) => report.base1_colorful += 1,
            (2, None) => {}
            (d, l) => {
                return Err(Error::Internal(format!(
                    "colorful face {f:?} at level {l:?} has degree {d}"
                )))
            }
        }
    }
    let mut seen = vec![false; faces.len()];
    for s in 0..faces.len() {
        if seen[s] || adj[s].len() != 1 {
            continue;
        }
        let (mut prev, mut cur) = (usize::MAX, s);
        seen[s] = true;
        loop {
            let next = adj[cur].iter().copied().find(|&w| w != prev);
            match next {
                Some(w) if !seen[w] => {
                    seen[w] = true;
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        match (level(&faces[s]), level(&faces[cur])) {
            (Some(0), Some(0)) => report.paths_0_to_0 += 1,
            (Some(1), Some(1)) => report.paths_1_to_1 += 1,
            _ => report.paths_0_to_1 += 1,
        }
    }
    for s in 0..faces.len() {
        if seen[s] {
            continue;
        }
        report.cycles += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let odd = |k: usize, what: &str| {
        if k % 2 == 1 {
            Ok(())
        } else {
            Err(Error::Internal(format!("{what} is {k}, expected an odd number")))
        }
    };
    odd(report.base0_colorful, "colorful simplices on base 0")?;
    odd(report.base1_colorful, "colorful simplices on base 1")?;
    odd(report.paths_0_to_1, "paths from base 0 to base 1")?;
    Ok(report)
}

//! Matroids by rank oracle: partition, uniform and linear realizations,
//! closed under dual, truncation, contraction, restriction and direct sum.

use crate::complex::{for_each_subset, SimplicialComplex, Vertex, SUBSET_CAP};
use crate::error::{check_cap, Error, Result};
use crate::exactla::{serde_rational, Rational, RationalMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Realization {
    /// Rank is `Σ min(cap_i, |X ∩ V_i|)`; the classes are the ground set.
    Partition {
        classes: Vec<Vec<Vertex>>,
        #[serde(default)]
        capacities: Option<Vec<usize>>,
    },
    Uniform { ground_set: Vec<Vertex>, k: usize },
    /// Column `i` is the vector of `ground_set[i]`.
    Linear { ground_set: Vec<Vertex>, columns: Vec<LinearColumn> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearColumn(#[serde(with = "serde_rational::vec")] pub Vec<Rational>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Transform {
    Dual,
    Truncate { k: usize },
    Contract { set: Vec<Vertex> },
    Restrict { set: Vec<Vertex> },
    DirectSum { matroid: Box<MatroidJson> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    #[serde(flatten)]
    pub realization: Realization,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transforms: Vec<Transform>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Layer {
    Dual { total: usize },
    Truncate(usize),
    /// Contraction by a fixed basis `b` of the contracted set.
    Contract { b: Vec<Vertex> },
    Restrict,
    DirectSum(Box<Matroid>),
}

/// A matroid given by an exact rank oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    realization: Realization,
    /// Ground set of the realization.
    base_ground: Vec<Vertex>,
    /// `layers[i]` applies to the matroid on `grounds[i]`, producing `grounds[i + 1]`.
    layers: Vec<Layer>,
    grounds: Vec<Vec<Vertex>>,
    transforms: Vec<Transform>,
}

fn sorted_set(v: &[Vertex], what: &str) -> Result<Vec<Vertex>> {
    let mut s = v.to_vec();
    s.sort_unstable();
    let n = s.len();
    s.dedup();
    if s.len() != n {
        return Err(Error::structural(format!("{what} repeats an element")));
    }
    Ok(s)
}

fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn minus(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

impl Matroid {
    fn from_realization(realization: Realization) -> Result<Self> {
        let base_ground = match &realization {
            Realization::Partition { classes, capacities } => {
                if let Some(c) = capacities {
                    if c.len() != classes.len() {
                        return Err(Error::structural("one capacity per class is required"));
                    }
                }
                let all: Vec<Vertex> = classes.iter().flatten().copied().collect();
                sorted_set(&all, "partition matroid classes")?
            }
            Realization::Uniform { ground_set, k } => {
                let g = sorted_set(ground_set, "ground set")?;
                if *k > g.len() {
                    return Err(Error::structural("uniform rank exceeds the ground set size"));
                }
                g
            }
            Realization::Linear { ground_set, columns } => {
                if ground_set.len() != columns.len() {
                    return Err(Error::structural("one column per ground element is required"));
                }
                let d = columns.first().map_or(0, |c| c.0.len());
                if columns.iter().any(|c| c.0.len() != d) {
                    return Err(Error::structural("columns of mixed length"));
                }
                let g = sorted_set(ground_set, "ground set")?;
                if g != *ground_set {
                    return Err(Error::structural("linear ground set must be listed in ascending order"));
                }
                g
            }
        };
        Ok(Matroid {
            realization,
            grounds: vec![base_ground.clone()],
            base_ground,
            layers: Vec::new(),
            transforms: Vec::new(),
        })
    }

    /// Partition matroid; `capacities` defaults to all ones.
    pub fn partition(classes: &[Vec<Vertex>], capacities: Option<Vec<usize>>) -> Result<Self> {
        if classes.iter().any(Vec::is_empty) {
            return Err(Error::structural("partition matroid class is empty"));
        }
        Self::from_realization(Realization::Partition { classes: classes.to_vec(), capacities })
    }

    pub fn uniform(ground: &[Vertex], k: usize) -> Result<Self> {
        Self::from_realization(Realization::Uniform { ground_set: ground.to_vec(), k })
    }

    pub fn linear(ground: &[Vertex], columns: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_realization(Realization::Linear {
            ground_set: ground.to_vec(),
            columns: columns.into_iter().map(LinearColumn).collect(),
        })
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        let mut m = Self::from_realization(j.realization.clone())?;
        for t in &j.transforms {
            m = m.apply(t)?;
        }
        Ok(m)
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson { realization: self.realization.clone(), transforms: self.transforms.clone() }
    }

    pub fn apply(&self, t: &Transform) -> Result<Matroid> {
        match t {
            Transform::Dual => Ok(self.dual()),
            Transform::Truncate { k } => Ok(self.truncate(*k)),
            Transform::Contract { set } => self.contract(set),
            Transform::Restrict { set } => self.restrict(set),
            Transform::DirectSum { matroid } => self.direct_sum(&Matroid::from_json(matroid)?),
        }
    }

    fn push(&self, layer: Layer, ground: Vec<Vertex>, t: Transform) -> Matroid {
        let mut m = self.clone();
        m.layers.push(layer);
        m.grounds.push(ground);
        m.transforms.push(t);
        m
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground_set().to_vec();
        self.push(Layer::Dual { total: self.rank_total() }, g, Transform::Dual)
    }

    pub fn truncate(&self, k: usize) -> Matroid {
        let g = self.ground_set().to_vec();
        self.push(Layer::Truncate(k), g, Transform::Truncate { k })
    }

    pub fn contract(&self, set: &[Vertex]) -> Result<Matroid> {
        let y = sorted_set(set, "contracted set")?;
        self.check_subset(&y)?;
        let b = self.greedy_basis(&y);
        let g = minus(self.ground_set(), &y);
        Ok(self.push(Layer::Contract { b }, g, Transform::Contract { set: y }))
    }

    pub fn restrict(&self, set: &[Vertex]) -> Result<Matroid> {
        let y = sorted_set(set, "restriction set")?;
        self.check_subset(&y)?;
        Ok(self.push(Layer::Restrict, y.clone(), Transform::Restrict { set: y }))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if !intersect(self.ground_set(), other.ground_set()).is_empty() {
            return Err(Error::precondition("direct sum needs disjoint ground sets"));
        }
        let mut g: Vec<Vertex> =
            self.ground_set().iter().chain(other.ground_set()).copied().collect();
        g.sort_unstable();
        Ok(self.push(
            Layer::DirectSum(Box::new(other.clone())),
            g,
            Transform::DirectSum { matroid: Box::new(other.to_json()) },
        ))
    }

    fn check_subset(&self, y: &[Vertex]) -> Result<()> {
        match y.iter().find(|v| self.ground_set().binary_search(v).is_err()) {
            Some(v) => Err(Error::Lookup(format!("element {v} is not in the ground set"))),
            None => Ok(()),
        }
    }

    pub fn ground_set(&self) -> &[Vertex] {
        self.grounds.last().expect("at least the base ground set")
    }

    /// Lexicographically first basis of `M[y]`.
    fn greedy_basis(&self, y: &[Vertex]) -> Vec<Vertex> {
        let mut b = Vec::new();
        for &v in y {
            b.push(v);
            if self.rank_sorted(&b) < b.len() {
                b.pop();
            }
        }
        b
    }

    /// `r(X)`; elements outside the ground set are ignored.
    pub fn rank(&self, x: &[Vertex]) -> usize {
        let mut v = x.to_vec();
        v.sort_unstable();
        v.dedup();
        self.rank_sorted(&intersect(&v, self.ground_set()))
    }

    fn rank_sorted(&self, x: &[Vertex]) -> usize {
        self.rank_at(self.layers.len(), x)
    }

    fn rank_at(&self, level: usize, x: &[Vertex]) -> usize {
        if level == 0 {
            return self.base_rank(x);
        }
        let prev = &self.grounds[level - 1];
        match &self.layers[level - 1] {
            Layer::Dual { total } => {
                let comp = minus(prev, x);
                self.rank_at(level - 1, &comp) + x.len() - total
            }
            Layer::Truncate(k) => self.rank_at(level - 1, x).min(*k),
            Layer::Contract { b } => {
                let mut xb: Vec<Vertex> = x.iter().chain(b).copied().collect();
                xb.sort_unstable();
                self.rank_at(level - 1, &xb) - b.len()
            }
            Layer::Restrict => self.rank_at(level - 1, x),
            Layer::DirectSum(other) => {
                let mine = intersect(x, prev);
                let theirs = intersect(x, other.ground_set());
                self.rank_at(level - 1, &mine) + other.rank_sorted(&theirs)
            }
        }
    }

    fn base_rank(&self, x: &[Vertex]) -> usize {
        match &self.realization {
            Realization::Partition { classes, capacities } => classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let cap = capacities.as_ref().map_or(1, |c| c[i]);
                    x.iter().filter(|v| c.contains(v)).count().min(cap)
                })
                .sum(),
            Realization::Uniform { k, .. } => x.len().min(*k),
            Realization::Linear { ground_set, columns } => {
                let idx: Vec<usize> =
                    x.iter().map(|v| ground_set.binary_search(v).expect("in ground")).collect();
                let dense: Vec<Vec<Rational>> = if columns.is_empty() {
                    Vec::new()
                } else {
                    let d = columns[0].0.len();
                    (0..d).map(|r| columns.iter().map(|c| c.0[r].clone()).collect()).collect()
                };
                if dense.is_empty() || idx.is_empty() {
                    return 0;
                }
                RationalMatrix::from_dense(&dense).select_columns(&idx).rank()
            }
        }
    }

    /// `r(M)`.
    pub fn rank_total(&self) -> usize {
        self.rank_sorted(self.ground_set())
    }

    pub fn is_independent(&self, x: &[Vertex]) -> bool {
        self.rank(x) == x.len()
    }

    pub fn closure(&self, x: &[Vertex]) -> Vec<Vertex> {
        let r = self.rank(x);
        self.ground_set()
            .iter()
            .copied()
            .filter(|v| {
                let mut y = x.to_vec();
                y.push(*v);
                self.rank(&y) == r
            })
            .collect()
    }

    /// All flats of rank at most `max_rank`, ordered by rank, then size, then lexicographically.
    pub fn flats(&self, max_rank: usize) -> Result<Vec<Vec<Vertex>>> {
        let g = self.ground_set().to_vec();
        check_cap("flat enumeration ground set", g.len(), SUBSET_CAP)?;
        let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        for size in 0..=max_rank.min(g.len()) {
            for_each_subset(&g, size, &mut |s| {
                if self.rank_sorted(s) == s.len() {
                    seen.insert(self.closure(s));
                }
            });
        }
        let mut v: Vec<(usize, Vec<Vertex>)> =
            seen.into_iter().map(|f| (self.rank_sorted(&f), f)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.len().cmp(&b.1.len())).then(a.1.cmp(&b.1)));
        Ok(v.into_iter().map(|x| x.1).collect())
    }

    pub fn loops(&self) -> Vec<Vertex> {
        self.ground_set().iter().copied().filter(|v| self.rank_sorted(&[*v]) == 0).collect()
    }

    /// Elements `v` with `r(V - v) = r(V) - 1`.
    pub fn coloops(&self) -> Vec<Vertex> {
        let g = self.ground_set().to_vec();
        let r = self.rank_total();
        g.iter()
            .copied()
            .filter(|v| {
                let rest: Vec<Vertex> = g.iter().copied().filter(|x| x != v).collect();
                self.rank_sorted(&rest) + 1 == r
            })
            .collect()
    }

    pub fn bases(&self) -> Result<Vec<Vec<Vertex>>> {
        let g = self.ground_set().to_vec();
        check_cap("basis enumeration ground set", g.len(), SUBSET_CAP)?;
        let r = self.rank_total();
        let mut out = Vec::new();
        for_each_subset(&g, r, &mut |s| {
            if self.rank_sorted(s) == r {
                out.push(s.to_vec());
            }
        });
        Ok(out)
    }

    /// Independent sets of size exactly `k`.
    pub fn independent_sets_of_size(&self, k: usize) -> Result<Vec<Vec<Vertex>>> {
        let g = self.ground_set().to_vec();
        check_cap("independent set enumeration ground set", g.len(), SUBSET_CAP)?;
        let mut out = Vec::new();
        for_each_subset(&g, k, &mut |s| {
            if self.rank_sorted(s) == k {
                out.push(s.to_vec());
            }
        });
        Ok(out)
    }
}

/// The independence complex `I(M)`, whose maximal faces are the bases.
pub fn independence_complex_of(m: &Matroid) -> Result<SimplicialComplex> {
    let b = m.bases()?;
    Ok(SimplicialComplex::from_antichain(m.ground_set().to_vec(), b))
}

/// `ν(M, N)`: the largest common independent set, by exhaustive search.
pub fn intersection_number(m: &Matroid, n: &Matroid) -> Result<usize> {
    if m.ground_set() != n.ground_set() {
        return Err(Error::structural("matroids need the same ground set"));
    }
    let top = m.rank_total().min(n.rank_total());
    for k in (0..=top).rev() {
        let found = m.independent_sets_of_size(k)?.iter().any(|s| n.is_independent(s));
        if found {
            return Ok(k);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn uniform_ranks() {
        let m = Matroid::uniform(&[0, 1, 2, 3], 2).unwrap();
        assert_eq!(m.rank(&[0, 1, 2]), 2);
        assert_eq!(m.rank_total(), 2);
        assert!(m.coloops().is_empty());
        assert_eq!(m.bases().unwrap().len(), 6);
    }

    #[test]
    fn dual_rank_formula() {
        let m = Matroid::uniform(&[0, 1, 2, 3], 1).unwrap();
        let d = m.dual();
        assert_eq!(d.rank_total(), 3);
        assert_eq!(d.rank(&[0, 1]), 2);
        assert_eq!(d.dual().rank(&[0, 1]), m.rank(&[0, 1]));
    }

    #[test]
    fn partition_with_capacities() {
        let m = Matroid::partition(&[vec![0, 1, 2], vec![3]], Some(vec![2, 1])).unwrap();
        assert_eq!(m.rank(&[0, 1, 2]), 2);
        assert_eq!(m.rank_total(), 3);
        assert_eq!(m.coloops(), vec![3]);
    }

    #[test]
    fn linear_dependencies() {
        // e1, e2, e1 + e2, 0
        let cols = vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
            vec![rat(1), rat(1)],
            vec![rat(0), rat(0)],
        ];
        let m = Matroid::linear(&[0, 1, 2, 3], cols).unwrap();
        assert_eq!(m.rank_total(), 2);
        assert_eq!(m.loops(), vec![3]);
        assert_eq!(m.closure(&[0, 1]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn contract_restrict_sum() {
        let m = Matroid::uniform(&[0, 1, 2, 3], 2).unwrap();
        let c = m.contract(&[0]).unwrap();
        assert_eq!(c.ground_set(), &[1, 2, 3]);
        assert_eq!(c.rank_total(), 1);
        let r = m.restrict(&[0, 1]).unwrap();
        assert_eq!(r.rank_total(), 2);
        let s = r.direct_sum(&Matroid::uniform(&[7, 8], 1).unwrap()).unwrap();
        assert_eq!(s.rank_total(), 3);
        assert_eq!(s.rank(&[0, 7, 8]), 2);
        assert!(m.restrict(&[9]).is_err());
    }

    #[test]
    fn flats_of_small_uniform() {
        let m = Matroid::uniform(&[0, 1, 2], 2).unwrap();
        let f = m.flats(1).unwrap();
        assert_eq!(f, vec![vec![], vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn json_round_trip_with_transforms() {
        let m = Matroid::partition(&[vec![0, 1], vec![2, 3]], None)
            .unwrap()
            .dual()
            .truncate(1);
        let j = serde_json::to_string(&m.to_json()).unwrap();
        let back = Matroid::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back.rank(&[0, 2]), m.rank(&[0, 2]));
        assert_eq!(back.rank_total(), 1);
    }

    #[test]
    fn intersection_of_two_partitions() {
        let m = Matroid::partition(&[vec![0, 1], vec![2, 3]], None).unwrap();
        let n = Matroid::partition(&[vec![0, 2], vec![1, 3]], None).unwrap();
        assert_eq!(intersection_number(&m, &n).unwrap(), 2);
    }
}

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use hallreconf::complex::{FinitePoset, SimplicialComplex, Vertex, VertexPartition};
use hallreconf::exactla::{rat, Rational};
use hallreconf::graphs::Graph;
use hallreconf::matroid::Matroid;
use proptest::prelude::*;

/// Large prime for the modular oracles; every minor met in these tests is
/// far smaller, so ranks mod P equal rational ranks.
pub const P: i64 = 1_000_000_007;

/// Rank over `Z/P` by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(P);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], P - 2);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c] * inv % P;
                for j in c..cols {
                    rows[i][j] = (rows[i][j] - f * rows[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Every face (the empty one included) generated by `facets`.
pub fn faces_from_facets(facets: &[Vec<Vertex>]) -> BTreeSet<Vec<Vertex>> {
    let mut out = BTreeSet::new();
    for f in facets {
        for mask in 0u32..(1 << f.len()) {
            out.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
        }
    }
    out
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ...` from explicit boundary matrices mod P.
pub fn betti_mod_p(facets: &[Vec<Vertex>]) -> Vec<u64> {
    let faces = faces_from_facets(facets);
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let by_size: Vec<Vec<Vec<Vertex>>> =
        (0..=top + 1).map(|s| faces.iter().filter(|f| f.len() == s).cloned().collect()).collect();
    // rank of the boundary from size s to size s - 1, for s >= 1.
    let rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[s - 1]
            .iter()
            .map(|lo| {
                by_size[s]
                    .iter()
                    .map(|hi| match hi.iter().position(|v| !lo.contains(v)) {
                        Some(i) if lo.iter().all(|v| hi.contains(v)) => if i % 2 == 0 { 1 } else { -1 },
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(rows)
    };
    (0..=top).map(|s| (by_size[s].len() - rank(s) - rank(s + 1)) as u64).collect()
}

pub fn face_strategy(n: usize) -> impl Strategy<Value = Vec<Vertex>> {
    proptest::collection::btree_set(0..n as Vertex, 0..=n).prop_map(|s| s.into_iter().collect())
}

/// A complex on `0..n` for `n` in `1..=max_n`, generated by up to `max_facets` faces.
pub fn complex_strategy(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(face_strategy(n), 1..=max_facets).prop_map(move |faces| {
            let ground: Vec<Vertex> = (0..n as Vertex).collect();
            SimplicialComplex::new(&ground, &faces).unwrap()
        })
    })
}

/// Assigns each of `0..n` to one of `classes` colours and drops empty classes.
pub fn partition_strategy(n: usize, classes: usize) -> impl Strategy<Value = VertexPartition> {
    proptest::collection::vec(0..classes, n).prop_map(move |colour| {
        let parts: Vec<Vec<Vertex>> = (0..classes)
            .map(|c| (0..n).filter(|&i| colour[i] == c).map(|i| i as Vertex).collect::<Vec<_>>())
            .filter(|p| !p.is_empty())
            .collect();
        VertexPartition::new(&parts).unwrap()
    })
}

pub fn complex_and_partition(max_n: usize, max_facets: usize, classes: usize) -> impl Strategy<Value = (SimplicialComplex, VertexPartition)> {
    complex_strategy(max_n, max_facets).prop_flat_map(move |c| {
        let n = c.ground_set().len();
        (Just(c), partition_strategy(n, classes))
    })
}

pub fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..n as Vertex {
            for b in a + 1..n as Vertex {
                if bits[k] {
                    edges.push([a, b]);
                }
                k += 1;
            }
        }
        Graph::new(&(0..n as Vertex).collect::<Vec<_>>(), &edges).unwrap()
    })
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

pub fn graph_and_partition(max_n: usize, classes: usize) -> impl Strategy<Value = (Graph, VertexPartition)> {
    (1..=max_n).prop_flat_map(move |n| (graph_on(n), partition_strategy(n, classes)))
}

/// A poset on `0..n` from random relations `i < j` between indices.
pub fn poset_strategy(max_n: usize) -> impl Strategy<Value = FinitePoset> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut rel = Vec::new();
            let mut k = 0;
            for a in 0..n as Vertex {
                for b in a + 1..n as Vertex {
                    if bits[k] {
                        rel.push([a, b]);
                    }
                    k += 1;
                }
            }
            FinitePoset::new(&(0..n as Vertex).collect::<Vec<_>>(), &rel).unwrap()
        })
    })
}

/// How a strategy-generated matroid was built, for independent rank oracles.
#[derive(Debug, Clone)]
pub enum MatroidSpec {
    Partition { classes: Vec<Vec<Vertex>>, caps: Vec<usize> },
    Uniform { n: usize, k: usize },
    Linear { columns: Vec<Vec<i64>> },
}

impl MatroidSpec {
    pub fn build(&self) -> Matroid {
        match self {
            MatroidSpec::Partition { classes, caps } => Matroid::partition(classes, Some(caps.clone())).unwrap(),
            MatroidSpec::Uniform { n, k } => Matroid::uniform(&(0..*n as Vertex).collect::<Vec<_>>(), *k).unwrap(),
            MatroidSpec::Linear { columns } => {
                let ground: Vec<Vertex> = (0..columns.len() as Vertex).collect();
                let cols = columns.iter().map(|c| c.iter().map(|&x| rat(x)).collect()).collect();
                Matroid::linear(&ground, cols).unwrap()
            }
        }
    }

    pub fn n(&self) -> usize {
        match self {
            MatroidSpec::Partition { classes, .. } => classes.iter().map(Vec::len).sum(),
            MatroidSpec::Uniform { n, .. } => *n,
            MatroidSpec::Linear { columns } => columns.len(),
        }
    }

    /// Rank straight from the definition of each family.
    pub fn rank(&self, x: &[Vertex]) -> usize {
        match self {
            MatroidSpec::Partition { classes, caps } => classes
                .iter()
                .zip(caps)
                .map(|(c, &cap)| c.iter().filter(|v| x.contains(v)).count().min(cap))
                .sum(),
            MatroidSpec::Uniform { k, .. } => x.len().min(*k),
            MatroidSpec::Linear { columns } => {
                let d = columns.first().map_or(0, Vec::len);
                let rows: Vec<Vec<i64>> =
                    (0..d).map(|i| x.iter().map(|&v| columns[v as usize][i]).collect()).collect();
                if x.is_empty() {
                    0
                } else {
                    rank_mod_p(rows)
                }
            }
        }
    }
}

pub fn matroid_strategy(max_n: usize) -> impl Strategy<Value = MatroidSpec> {
    let partition = (1..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(0..n, n), proptest::collection::vec(0..3usize, n)).prop_map(move |(colour, caps)| {
            let classes: Vec<Vec<Vertex>> = (0..n)
                .map(|c| (0..n).filter(|&i| colour[i] == c).map(|i| i as Vertex).collect::<Vec<_>>())
                .filter(|p| !p.is_empty())
                .collect();
            let caps = caps[..classes.len()].to_vec();
            MatroidSpec::Partition { classes, caps }
        })
    });
    let uniform = (1..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |k| MatroidSpec::Uniform { n, k }));
    let linear = (1..=max_n, 1..=3usize).prop_flat_map(|(n, d)| {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, d), n)
            .prop_map(|columns| MatroidSpec::Linear { columns })
    });
    prop_oneof![partition, uniform, linear]
}

pub fn subsets_of(n: usize) -> Vec<Vec<Vertex>> {
    (0u32..1 << n).map(|m| (0..n as Vertex).filter(|&i| m >> i & 1 == 1).collect()).collect()
}

/// Points with small integer coordinates.
pub fn points_strategy(n: std::ops::RangeInclusive<usize>, d: usize, range: i64) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    n.prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(-range..=range, d), n)
            .prop_map(|pts| pts.into_iter().map(|p| p.into_iter().map(rat).collect()).collect())
    })
}

//! Reduced simplicial homology over the rationals and the connectivity index η.

use crate::complex::{Face, SimplicialComplex, Vertex, SUBSET_CAP};
use crate::error::{check_cap, Result};
use crate::exactla::{rat, sparse_integer_rank, RationalMatrix};
use crate::ext::ExtNat;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// `η_H(C)`: `2 +` the largest `k` with `H̃_j(C; Q) = 0` for all `j <= k`,
/// or infinite if every reduced Betti number vanishes.
pub type Eta = ExtNat;

/// Boundary map `∂_p` from `p`-faces to `(p-1)`-faces, both in lexicographic
/// order. `∂_0` is the augmentation: one row of ones.
pub fn boundary_matrix(c: &SimplicialComplex, p: usize) -> RationalMatrix {
    let lower = c.faces_of_size(p);
    let upper = c.faces_of_size(p + 1);
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = RationalMatrix::zeros(lower.len(), upper.len());
    for (j, col) in boundary_columns(&upper, &index).into_iter().enumerate() {
        for (i, v) in col {
            m.set(i, j, rat(v));
        }
    }
    m
}

fn boundary_columns(upper: &[Face], lower: &HashMap<&Face, usize>) -> Vec<Vec<(usize, i64)>> {
    upper
        .iter()
        .map(|f| {
            let mut col = Vec::with_capacity(f.len());
            for drop in 0..f.len() {
                let g: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                col.push((lower[&g], sign));
            }
            col
        })
        .collect()
}

/// Rank of `∂_p` where `lower`/`upper` are the `(p-1)`- and `p`-faces.
fn boundary_rank(lower: &[Face], upper: &[Face]) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let cols = boundary_columns(upper, &index);
    if let Some(r) = sparse_integer_rank(lower.len(), cols.clone()) {
        return r;
    }
    let mut m = RationalMatrix::zeros(lower.len(), upper.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, v) in col {
            m.set(i, j, rat(v));
        }
    }
    m.rank()
}

/// Incrementally computes reduced Betti numbers, dimension by dimension.
struct BettiWalker<'a> {
    c: &'a SimplicialComplex,
    /// Faces of size `p + 1` and `p + 2` for the current `p`.
    cur: Vec<Face>,
    next: Vec<Face>,
    /// `rank ∂_p`.
    rank_cur: usize,
    p: isize,
}

impl<'a> BettiWalker<'a> {
    fn new(c: &'a SimplicialComplex) -> Self {
        let cur = c.faces_of_size(0);
        let next = c.faces_of_size(1);
        BettiWalker { c, cur, next, rank_cur: 0, p: -1 }
    }

    /// `(p, β̃_p)` for the current `p`, then advances.
    fn step(&mut self) -> (isize, u64) {
        let rank_next = boundary_rank(&self.cur, &self.next);
        let beta = (self.cur.len() - self.rank_cur - rank_next) as u64;
        let p = self.p;
        self.p += 1;
        self.rank_cur = rank_next;
        self.cur = std::mem::take(&mut self.next);
        self.next = self.c.faces_of_size((self.p + 2) as usize);
        (p, beta)
    }
}

/// `β̃_p(C; Q)` for `p >= -1`.
pub fn reduced_betti(c: &SimplicialComplex, p: isize) -> u64 {
    if p < -1 || p > c.dim() {
        return 0;
    }
    let pu = (p + 1) as usize;
    let lower = if pu == 0 { Vec::new() } else { c.faces_of_size(pu - 1) };
    let cur = c.faces_of_size(pu);
    let upper = c.faces_of_size(pu + 1);
    let r_p = boundary_rank(&lower, &cur);
    let r_next = boundary_rank(&cur, &upper);
    (cur.len() - r_p - r_next) as u64
}

/// All reduced Betti numbers `β̃_{-1} ..= β̃_{dim}`, keyed by dimension.
pub fn betti_profile(c: &SimplicialComplex) -> BTreeMap<isize, u64> {
    let mut w = BettiWalker::new(c);
    let mut out = BTreeMap::new();
    for _ in -1..=c.dim() {
        let (p, b) = w.step();
        out.insert(p, b);
    }
    out
}

/// `η_H(C)`. Stops at the first nonvanishing Betti number; cones are acyclic.
pub fn eta_h(c: &SimplicialComplex) -> Eta {
    if c.is_cone() {
        return Eta::Infinite;
    }
    let mut w = BettiWalker::new(c);
    for _ in -1..=c.dim() {
        let (p, b) = w.step();
        if b != 0 {
            return Eta::Finite((p + 1) as u64);
        }
    }
    Eta::Infinite
}

/// `χ̃ = Σ (-1)^p f_p` over `p >= -1`.
pub fn reduced_euler_characteristic(c: &SimplicialComplex) -> i64 {
    c.f_vector()
        .iter()
        .enumerate()
        .map(|(i, &f)| if i % 2 == 0 { -(f as i64) } else { f as i64 })
        .sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyReport {
    pub betti: BTreeMap<String, u64>,
    pub eta_h: Eta,
}

pub fn homology_report(c: &SimplicialComplex) -> HomologyReport {
    let betti = betti_profile(c).into_iter().map(|(p, b)| (p.to_string(), b)).collect();
    HomologyReport { betti, eta_h: eta_h(c) }
}

/// True iff `β̃_i(C[X]) = 0` for every `X ⊆ V` and every `i >= d`.
pub fn is_d_leray(c: &SimplicialComplex, d: usize) -> Result<bool> {
    let g: Vec<Vertex> = c.ground_set().to_vec();
    check_cap("d-Leray ground set", g.len(), SUBSET_CAP)?;
    for mask in 0u32..(1u32 << g.len()) {
        let x: Vec<Vertex> =
            (0..g.len()).filter(|i| mask & (1 << i) != 0).map(|i| g[i]).collect();
        let sub = c.induced(&x);
        let top = sub.dim();
        for i in d as isize..=top {
            if reduced_betti(&sub, i) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        assert_eq!(reduced_betti(&c, 0), 0);
        assert_eq!(reduced_betti(&c, 1), 1);
        assert_eq!(eta_h(&c), Eta::Finite(2));
    }

    #[test]
    fn two_points_and_empty_face() {
        let c = SimplicialComplex::new(&[1, 2], &[vec![1], vec![2]]).unwrap();
        assert_eq!(eta_h(&c), Eta::Finite(1));
        let e = SimplicialComplex::empty_face(&[]).unwrap();
        assert_eq!(reduced_betti(&e, -1), 1);
        assert_eq!(eta_h(&e), Eta::Finite(0));
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = SimplicialComplex::simplex(&[1, 2, 3, 4]).unwrap();
        assert_eq!(eta_h(&c), Eta::Infinite);
        assert!(betti_profile(&c).values().all(|&b| b == 0));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = SimplicialComplex::simplex(&[0, 1, 2, 3]).unwrap();
        for p in 1..=3 {
            assert!(boundary_matrix(&c, p - 1).mul(&boundary_matrix(&c, p)).is_zero());
        }
    }

    #[test]
    fn augmentation_row() {
        let c = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        let d0 = boundary_matrix(&c, 0);
        assert_eq!((d0.rows(), d0.cols()), (1, 3));
    }

    #[test]
    fn leray_numbers() {
        assert!(is_d_leray(&SimplicialComplex::simplex(&[1, 2, 3]).unwrap(), 0).unwrap());
        let t = SimplicialComplex::simplex_boundary(&[1, 2, 3]).unwrap();
        assert!(is_d_leray(&t, 2).unwrap());
        assert!(!is_d_leray(&t, 1).unwrap());
    }

    #[test]
    fn euler_poincare_on_sphere() {
        let s = SimplicialComplex::simplex_boundary(&[1, 2, 3, 4]).unwrap();
        let chi: i64 = betti_profile(&s)
            .iter()
            .map(|(&p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(chi, reduced_euler_characteristic(&s));
    }
}

use super::Rational;
use num::{BigInt, Integer, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// Sparse exact matrix. Missing entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(data: &[Vec<Rational>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut m = RationalMatrix::zeros(rows, cols);
        for (i, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.nonzeros() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for (i, j, v) in self.nonzeros() {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: HashMap<usize, Vec<(usize, &Rational)>> = HashMap::new();
        for (k, j, v) in other.nonzeros() {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (i, k, a) in self.nonzeros() {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        RationalMatrix { rows: self.rows, cols: other.cols, entries: acc }
    }

    /// Sub-matrix with the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        let pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let mut m = RationalMatrix::zeros(self.rows, cols.len());
        for (i, j, v) in self.nonzeros() {
            if let Some(&p) = pos.get(&j) {
                m.entries.insert((i, p), v.clone());
            }
        }
        m
    }

    /// Exact rank. Tries sparse integer column reduction first and falls
    /// back to Bareiss over big integers if a machine word would overflow.
    pub fn rank(&self) -> usize {
        if self.entries.is_empty() {
            return 0;
        }
        let int_rows = self.integer_rows();
        if let Some(small) = to_small_columns(&int_rows, self.cols) {
            if let Some(r) = sparse_integer_rank(self.rows, small) {
                return r;
            }
        }
        bareiss_rank(int_rows, self.cols)
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        let mut lcm = vec![BigInt::one(); self.rows];
        for (i, _, v) in self.nonzeros() {
            lcm[i] = lcm[i].lcm(v.denom());
        }
        for (i, j, v) in self.nonzeros() {
            dense[i][j] = v.numer() * (&lcm[i] / v.denom());
        }
        dense
    }

    /// A nonzero vector `v` with `self * v = 0`, if one exists.
    pub fn kernel_vector(&self) -> Option<Vec<Rational>> {
        let mut a = self.to_dense();
        let (pivots, _) = rref(&mut a, self.cols);
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = vec![Rational::zero(); self.cols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        Some(v)
    }
}

/// In-place reduced row echelon form; returns the pivot columns and rank.
fn rref(a: &mut [Vec<Rational>], cols: usize) -> (Vec<usize>, usize) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (top, bottom) = if i < r {
                    let (x, y) = a.split_at_mut(r);
                    (&mut x[i], &y[0])
                } else {
                    let (x, y) = a.split_at_mut(i);
                    (&mut y[0], &x[r])
                };
                for (t, b) in top.iter_mut().zip(bottom.iter()) {
                    if !b.is_zero() {
                        *t -= &f * b;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, r)
}

fn to_small_columns(rows: &[Vec<BigInt>], cols: usize) -> Option<Vec<Vec<(usize, i64)>>> {
    let mut out = vec![Vec::new(); cols];
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                let x: i64 = v.try_into().ok()?;
                out[j].push((i, x));
            }
        }
    }
    Some(out)
}

/// Rank of an integer matrix given as sparse columns (row index, value),
/// by column reduction with lowest-row pivots. Returns `None` on overflow.
pub fn sparse_integer_rank(nrows: usize, columns: Vec<Vec<(usize, i64)>>) -> Option<usize> {
    let mut pivot_of_row: Vec<Option<Vec<(usize, i64)>>> = vec![None; nrows];
    let mut rank = 0;
    for mut col in columns {
        col.retain(|&(_, v)| v != 0);
        col.sort_unstable_by_key(|&(r, _)| r);
        while let Some(&(low, cv)) = col.last() {
            match &pivot_of_row[low] {
                None => {
                    pivot_of_row[low] = Some(col);
                    rank += 1;
                    break;
                }
                Some(piv) => {
                    let pv = piv.last().expect("pivot column is nonempty").1;
                    col = combine(&col, pv, piv, cv)?;
                }
            }
        }
    }
    Some(rank)
}

/// `a * x - b * y`, divided by the gcd of its entries.
fn combine(x: &[(usize, i64)], a: i64, y: &[(usize, i64)], b: i64) -> Option<Vec<(usize, i64)>> {
    let (a, b) = (a as i128, b as i128);
    let mut out: Vec<(usize, i128)> = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (r, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let t = (x[i].0, a * x[i].1 as i128);
            i += 1;
            t
        } else if i == x.len() || y[j].0 < x[i].0 {
            let t = (y[j].0, -b * y[j].1 as i128);
            j += 1;
            t
        } else {
            let t = (x[i].0, a * x[i].1 as i128 - b * y[j].1 as i128);
            i += 1;
            j += 1;
            t
        };
        if v != 0 {
            out.push((r, v));
        }
    }
    let g = out.iter().fold(0i128, |g, &(_, v)| g.gcd(&v));
    out.into_iter()
        .map(|(r, v)| {
            let q = if g > 1 { v / g } else { v };
            i64::try_from(q).ok().map(|q| (r, q))
        })
        .collect()
}

/// Fraction-free Gaussian elimination (Bareiss) over big integers.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..rows {
            let f = a[i][c].clone();
            for j in c..cols {
                let v = (&pivot * &a[i][j] - &f * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot.abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_dense(
            &rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_small() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(RationalMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let a = RationalMatrix::from_dense(&[
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
        ]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn bareiss_divides_exactly() {
        let rows: Vec<Vec<BigInt>> = [[2, 3, 5], [7, 11, 13], [17, 19, 23]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(bareiss_rank(rows, 3), 3);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let a = m(&[&[big, big - 1], &[big - 7, big - 5]]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let a = m(&[&[1, 1, 1], &[0, 1, 2]]);
        let v = a.kernel_vector().unwrap();
        let col = RationalMatrix::from_dense(&v.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
        assert!(a.mul(&col).is_zero());
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(m(&[&[1, 0], &[0, 1]]).kernel_vector().is_none());
    }

    #[test]
    fn transpose_and_mul() {
        let a = m(&[&[1, 2, 3]]);
        let p = a.mul(&a.transpose());
        assert_eq!(p.get(0, 0), rat(14));
    }
}

//! Exact convex geometry: hull membership, Tverberg partitions, Sarkaria
//! tensors, geometric reconfiguration graphs and the Radon path construction.

use crate::complex::{order_complex_from_covers, LabeledComplex};
use crate::error::{Error, Result};
use crate::exactla::{
    affine_dependence_with_signs, rat, serde_rational, FarkasCertificate, LinearProgram,
    LpFeasibility, Rational, RationalMatrix, Relation, VarSign,
};
use crate::reconfig::{tuple_graph, ReconfigGraph};
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Point = Vec<Rational>;

/// Labeled points in `Q^d`, kept in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    labels: Vec<String>,
    points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsJson {
    pub d: usize,
    pub points: BTreeMap<String, RationalVec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVec(#[serde(with = "serde_rational::vec")] pub Vec<Rational>);

fn check_dims(points: &[Point], d: usize) -> Result<()> {
    match points.iter().position(|p| p.len() != d) {
        Some(i) => Err(Error::structural(format!("point {i} does not have {d} coordinates"))),
        None => Ok(()),
    }
}

impl PointConfig {
    pub fn new(d: usize, labels: Vec<String>, points: Vec<Point>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::structural("one label per point is required"));
        }
        check_dims(&points, d)?;
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::structural("point labels repeat"));
        }
        Ok(PointConfig { d, labels, points })
    }

    /// Points labeled `x1, x2, ...` in the given order.
    pub fn unlabeled(d: usize, points: Vec<Point>) -> Result<Self> {
        let labels = (1..=points.len()).map(|i| format!("x{i}")).collect();
        Self::new(d, labels, points)
    }

    pub fn from_json(j: &PointsJson) -> Result<Self> {
        let (labels, points) = j.points.iter().map(|(k, v)| (k.clone(), v.0.clone())).unzip();
        Self::new(j.d, labels, points)
    }

    pub fn to_json(&self) -> PointsJson {
        PointsJson {
            d: self.d,
            points: self
                .labels
                .iter()
                .cloned()
                .zip(self.points.iter().map(|p| RationalVec(p.clone())))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Lookup(format!("point label {label:?}")))
    }
}

/// `n` points with integer coordinates in `[-range, range]^d`.
pub fn random_points(n: usize, d: usize, range: i64, seed: u64) -> PointConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = (0..n).map(|_| (0..d).map(|_| rat(rng.gen_range(-range..=range))).collect()).collect();
    PointConfig::unlabeled(d, pts).expect("well-formed")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvMembership {
    /// Convex weights, one per point.
    Inside(Vec<Rational>),
    Outside(FarkasCertificate),
}

impl ConvMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, ConvMembership::Inside(_))
    }
}

/// Whether `x ∈ conv(points)`; the hull of no points is empty.
pub fn conv_contains(points: &[Point], x: &[Rational]) -> Result<ConvMembership> {
    check_dims(points, x.len())?;
    let n = points.len();
    let mut lp = LinearProgram::new(vec![VarSign::NonNeg; n]);
    for k in 0..x.len() {
        lp.add((0..n).map(|i| (i, points[i][k].clone())).collect(), Relation::Eq, x[k].clone());
    }
    lp.add((0..n).map(|i| (i, rat(1))).collect(), Relation::Eq, rat(1));
    Ok(match lp.feasibility()? {
        LpFeasibility::Feasible(l) => ConvMembership::Inside(l),
        LpFeasibility::Infeasible(c) => ConvMembership::Outside(c),
    })
}

/// Common point of `conv(X_1) ∩ ... ∩ conv(X_r)` where point `i` lies in part
/// `parts[i]`; `None` if the hulls miss each other or a part is empty.
pub fn tverberg_point(points: &[Point], parts: &[usize], r: usize) -> Result<Option<Point>> {
    if points.len() != parts.len() {
        return Err(Error::structural("one part per point is required"));
    }
    if let Some(&p) = parts.iter().find(|&&p| p >= r) {
        return Err(Error::structural(format!("part {p} out of range for r = {r}")));
    }
    let d = points.first().map_or(0, Vec::len);
    check_dims(points, d)?;
    if (0..r).any(|k| !parts.contains(&k)) {
        return Ok(None);
    }
    // Variables: y (free, d), then one weight per point.
    let n = points.len();
    let mut signs = vec![VarSign::Free; d];
    signs.extend(std::iter::repeat_n(VarSign::NonNeg, n));
    let mut lp = LinearProgram::new(signs);
    for k in 0..r {
        let members: Vec<usize> = (0..n).filter(|&i| parts[i] == k).collect();
        for c in 0..d {
            let mut row: Vec<(usize, Rational)> =
                members.iter().map(|&i| (d + i, points[i][c].clone())).collect();
            row.push((c, rat(-1)));
            lp.add(row, Relation::Eq, rat(0));
        }
        lp.add(members.iter().map(|&i| (d + i, rat(1))).collect(), Relation::Eq, rat(1));
    }
    Ok(lp.feasibility()?.point().map(|v| v[..d].to_vec()))
}

pub fn is_tverberg(points: &[Point], parts: &[usize], r: usize) -> Result<bool> {
    Ok(tverberg_point(points, parts, r)?.is_some())
}

/// `x̄_{i,j} = (x_i; 1) ⊗ w_j` with `w_j = e_j` for `j < r` and
/// `w_r = -(1, ..., 1)`, flattened row-major into `Q^{(d+1)(r-1)}`.
pub fn sarkaria_tensors(points: &[Point], r: usize) -> Result<Vec<Vec<Point>>> {
    if r == 0 {
        return Err(Error::precondition("r must be positive"));
    }
    let d = points.first().map_or(0, Vec::len);
    check_dims(points, d)?;
    Ok(points
        .iter()
        .map(|x| {
            let mut lifted = x.clone();
            lifted.push(rat(1));
            (0..r)
                .map(|j| {
                    let mut t = Vec::with_capacity((d + 1) * (r - 1));
                    for y in &lifted {
                        for l in 0..r - 1 {
                            let w = if j == r - 1 {
                                rat(-1)
                            } else if l == j {
                                rat(1)
                            } else {
                                rat(0)
                            };
                            t.push(y * w);
                        }
                    }
                    t
                })
                .collect()
        })
        .collect())
}

/// `RG_Tv(X, r)`: ordered Tverberg partitions as assignments `[n] → [r]`;
/// adjacent iff they differ at one point whose removal leaves a Tverberg partition.
pub fn rg_tverberg(points: &[Point], r: usize) -> Result<ReconfigGraph> {
    let n = points.len();
    tuple_graph(
        &vec![r; n],
        |t| is_tverberg(points, t, r),
        |t, j| {
            let (pts, parts): (Vec<Point>, Vec<usize>) = (0..n)
                .filter(|&i| i != j)
                .map(|i| (points[i].clone(), t[i]))
                .unzip();
            is_tverberg(&pts, &parts, r)
        },
    )
}

/// `RG_CC`: tuples `(a_1, ..., a_n)` with `a_i ∈ A_i` and `x ∈ conv`; adjacent
/// iff they differ at a unique `j` and `x ∈ conv({a_i : i ≠ j})`.
pub fn rg_colorful_caratheodory(sets: &[Vec<Point>], x: &[Rational]) -> Result<ReconfigGraph> {
    for s in sets {
        check_dims(s, x.len())?;
    }
    let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    if sizes.contains(&0) {
        return Ok(ReconfigGraph::new(Vec::new(), Vec::new()));
    }
    let pick = |t: &[usize], skip: Option<usize>| -> Vec<Point> {
        t.iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != skip)
            .map(|(i, &c)| sets[i][c].clone())
            .collect()
    };
    tuple_graph(
        &sizes,
        |t| Ok(conv_contains(&pick(t, None), x)?.is_inside()),
        |t, j| Ok(conv_contains(&pick(t, Some(j)), x)?.is_inside()),
    )
}

/// `{y : a^T y >= b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    #[serde(with = "serde_rational::vec")]
    pub a: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub b: Rational,
}

/// An intersection of half-spaces.
pub type HPolytope = Vec<HalfSpace>;

/// Whether the intersection of the given polytopes is nonempty; the empty
/// intersection is all of `Q^d`.
pub fn polytopes_intersect(polys: &[&HPolytope], d: usize) -> Result<bool> {
    let mut lp = LinearProgram::new(vec![VarSign::Free; d]);
    for p in polys {
        for h in p.iter() {
            if h.a.len() != d {
                return Err(Error::structural(format!("half-space normal is not in Q^{d}")));
            }
            lp.add((0..d).map(|k| (k, h.a[k].clone())).collect(), Relation::Ge, h.b.clone());
        }
    }
    Ok(lp.feasibility()?.is_feasible())
}

/// Ambient dimension of a family of families of polytopes.
fn family_dim(families: &[Vec<HPolytope>]) -> Result<usize> {
    families
        .iter()
        .flatten()
        .flatten()
        .map(|h| h.a.len())
        .next()
        .ok_or_else(|| Error::precondition("no half-spaces to infer the dimension from"))
}

/// `RG_CH`: tuples `(C_1, ..., C_n)`, `C_i ∈ F_i`, with empty intersection;
/// adjacent iff they differ at a unique `j` and the others already miss each other.
pub fn rg_colorful_helly(families: &[Vec<HPolytope>]) -> Result<ReconfigGraph> {
    let d = family_dim(families)?;
    let sizes: Vec<usize> = families.iter().map(Vec::len).collect();
    if sizes.contains(&0) {
        return Ok(ReconfigGraph::new(Vec::new(), Vec::new()));
    }
    let pick = |t: &[usize], skip: Option<usize>| -> Vec<&HPolytope> {
        t.iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != skip)
            .map(|(i, &c)| &families[i][c])
            .collect()
    };
    tuple_graph(
        &sizes,
        |t| Ok(!polytopes_intersect(&pick(t, None), d)?),
        |t, j| Ok(!polytopes_intersect(&pick(t, Some(j)), d)?),
    )
}

/// `H_{i,j} = {y : (a_{i,j} - x)^T y >= 1}`: `x ∈ conv(S)` iff the matching
/// half-spaces have empty intersection.
pub fn duality_bridge(sets: &[Vec<Point>], x: &[Rational]) -> Result<Vec<Vec<HPolytope>>> {
    sets.iter()
        .map(|s| {
            check_dims(s, x.len())?;
            Ok(s.iter()
                .map(|a| {
                    vec![HalfSpace {
                        a: a.iter().zip(x).map(|(p, q)| p - q).collect(),
                        b: rat(1),
                    }]
                })
                .collect())
        })
        .collect()
}

/// A Radon partition of `points`, as parts in `{0, 1}`, from an affine dependence.
pub fn radon_partition(points: &[Point]) -> Result<Option<Vec<usize>>> {
    Ok(affine_dependence(points)?.map(|g| g.iter().map(|v| usize::from(v.is_negative())).collect()))
}

/// Any nonzero affine dependence of `points`.
fn affine_dependence(points: &[Point]) -> Result<Option<Vec<Rational>>> {
    let d = points.first().map_or(0, Vec::len);
    check_dims(points, d)?;
    let mut rows: Vec<Vec<Rational>> =
        (0..d).map(|k| points.iter().map(|p| p[k].clone()).collect()).collect();
    rows.push(vec![rat(1); points.len()]);
    if points.is_empty() {
        return Ok(None);
    }
    Ok(RationalMatrix::from_dense(&rows).kernel_vector())
}

fn compatible(parts: &[usize], l: &[Rational]) -> bool {
    parts.iter().zip(l).all(|(&p, v)| (p == 0 && !v.is_negative()) || (p == 1 && !v.is_positive()))
}

/// Moves along `L(t) = (1-t) α + t β` from `start` (compatible with `α`) to
/// `end` (compatible with `β`); `L` must not vanish on `[0, 1]`.
fn segment_walk(
    alpha: &[Rational],
    beta: &[Rational],
    start: &[usize],
    end: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let n = alpha.len();
    let mut events: Vec<(Rational, usize)> = Vec::new();
    for i in 0..n {
        if alpha[i] != beta[i] {
            let t = &alpha[i] / (&alpha[i] - &beta[i]);
            if !t.is_negative() && t <= rat(1) {
                events.push((t, i));
            }
        }
    }
    events.sort();
    let mut cur = start.to_vec();
    let mut path = vec![cur.clone()];
    for (t, i) in events {
        let desired = if t < rat(1) {
            usize::from((&beta[i] - &alpha[i]).is_negative())
        } else {
            end[i]
        };
        if cur[i] != desired {
            cur[i] = desired;
            path.push(cur.clone());
        }
    }
    for i in 0..n {
        if cur[i] != end[i] {
            if !beta[i].is_zero() {
                return Err(Error::Internal(format!("walk ended off the target at point {i}")));
            }
            cur[i] = end[i];
            path.push(cur.clone());
        }
    }
    Ok(path)
}

/// A path from `p` to `q` in `RG_Tv(X, 2)`, following affine dependences.
/// Requires `|X| >= d + 3` and both partitions Radon; every step is re-checked.
pub fn radon_path(points: &[Point], p: &[usize], q: &[usize]) -> Result<RadonPath> {
    let n = points.len();
    let d = points.first().map_or(0, Vec::len);
    check_dims(points, d)?;
    if n < d + 3 {
        return Err(Error::precondition(format!("need at least d + 3 = {} points", d + 3)));
    }
    for part in [p, q] {
        if part.len() != n || !is_tverberg(points, part, 2)? {
            return Err(Error::precondition(format!("{part:?} is not a Radon partition")));
        }
    }
    let signs = |part: &[usize]| part.iter().map(|&k| k == 0).collect::<Vec<_>>();
    let missing = || Error::Internal("Radon partition without a compatible dependence".into());
    let alpha = affine_dependence_with_signs(points, &signs(p))?.ok_or_else(missing)?;
    let beta = affine_dependence_with_signs(points, &signs(q))?.ok_or_else(missing)?;
    let (steps, detour) = if p == q {
        (vec![p.to_vec()], false)
    } else if antiparallel(&alpha, &beta) {
        let i = alpha.iter().position(|v| v.is_positive()).ok_or_else(missing)?;
        let rest: Vec<Point> = (0..n).filter(|&k| k != i).map(|k| points[k].clone()).collect();
        let g = affine_dependence(&rest)?
            .ok_or_else(|| Error::Internal("no dependence on d + 2 points".into()))?;
        let mut gamma = g;
        gamma.insert(i, rat(0));
        let w: Vec<usize> = gamma.iter().map(|v| usize::from(v.is_negative())).collect();
        debug_assert!(compatible(&w, &gamma));
        let mut first = segment_walk(&alpha, &gamma, p, &w)?;
        let second = segment_walk(&gamma, &beta, &w, q)?;
        first.extend(second.into_iter().skip(1));
        (first, true)
    } else {
        (segment_walk(&alpha, &beta, p, q)?, false)
    };
    verify_radon_path(points, &steps, p, q)?;
    Ok(RadonPath { steps, detour })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadonPath {
    pub steps: Vec<Vec<usize>>,
    /// True when `α` and `β` were antiparallel and the path went through `γ`.
    pub detour: bool,
}

fn antiparallel(alpha: &[Rational], beta: &[Rational]) -> bool {
    let Some(k) = alpha.iter().position(|v| !v.is_zero()) else { return false };
    let c = -(&beta[k] / &alpha[k]);
    c.is_positive() && alpha.iter().zip(beta).all(|(a, b)| *b == -(&c * a))
}

/// Checks that consecutive steps are adjacent in `RG_Tv(X, 2)`.
pub fn verify_radon_path(points: &[Point], steps: &[Vec<usize>], p: &[usize], q: &[usize]) -> Result<()> {
    let bad = |m: String| Err(Error::Internal(format!("Radon path rejected: {m}")));
    if steps.first().map(Vec::as_slice) != Some(p) || steps.last().map(Vec::as_slice) != Some(q) {
        return bad("endpoints".into());
    }
    for s in steps {
        if !is_tverberg(points, s, 2)? {
            return bad(format!("{s:?} is not Radon"));
        }
    }
    for w in steps.windows(2) {
        let diff: Vec<usize> = (0..points.len()).filter(|&i| w[0][i] != w[1][i]).collect();
        if diff.len() != 1 {
            return bad(format!("{:?} -> {:?} moves {} points", w[0], w[1], diff.len()));
        }
        let j = diff[0];
        let (pts, parts): (Vec<Point>, Vec<usize>) = (0..points.len())
            .filter(|&i| i != j)
            .map(|i| (points[i].clone(), w[0][i]))
            .unzip();
        if !is_tverberg(&pts, &parts, 2)? {
            return bad(format!("removing point {j} from {:?} breaks the partition", w[0]));
        }
    }
    Ok(())
}

/// Tuples over `{⋆} ∪ choices_i` (encoded `0` and `1..=size_i`) accepted by
/// `keep`, ordered by filling in stars. `keep` must be closed upward.
fn star_tuple_complex(
    sizes: &[usize],
    keep: impl Fn(&[usize]) -> Result<bool> + Sync,
) -> Result<LabeledComplex<Vec<usize>>> {
    use rayon::prelude::*;
    let total: usize = sizes.iter().map(|s| s + 1).product();
    crate::error::check_cap("starred tuples", total, 200_000)?;
    let decode = |mut code: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&s| {
                let v = code % (s + 1);
                code /= s + 1;
                v
            })
            .collect()
    };
    let mut elems: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .map(|c| {
            let t = decode(c);
            keep(&t).map(|ok| ok.then_some(t))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    elems.sort();
    let index: std::collections::HashMap<&[usize], usize> =
        elems.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let up: Vec<Vec<usize>> = elems
        .iter()
        .map(|t| {
            let mut out = Vec::new();
            for i in 0..t.len() {
                if t[i] == 0 {
                    for c in 1..=sizes[i] {
                        let mut u = t.clone();
                        u[i] = c;
                        if let Some(&j) = index.get(u.as_slice()) {
                            out.push(j);
                        }
                    }
                }
            }
            out
        })
        .collect();
    let complex = if elems.is_empty() {
        crate::complex::SimplicialComplex::from_antichain(Vec::new(), vec![])
    } else {
        order_complex_from_covers(&up)
    };
    Ok(LabeledComplex { complex, labels: elems })
}

/// `Tver(X, r)`: tuples of disjoint parts with intersecting hulls. Label
/// entry `i` is `0` for unassigned or `1..=r` for the part of point `i`.
pub fn tverberg_complex(points: &[Point], r: usize) -> Result<LabeledComplex<Vec<usize>>> {
    let n = points.len();
    star_tuple_complex(&vec![r; n], |t| {
        let (pts, parts): (Vec<Point>, Vec<usize>) =
            (0..n).filter(|&i| t[i] != 0).map(|i| (points[i].clone(), t[i] - 1)).unzip();
        is_tverberg(&pts, &parts, r)
    })
}

/// `ColCat(A, x)`: partial choices `a_i ∈ A_i ∪ {⋆}` with `x` in the hull of the chosen points.
pub fn colcat_complex(sets: &[Vec<Point>], x: &[Rational]) -> Result<LabeledComplex<Vec<usize>>> {
    let sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    star_tuple_complex(&sizes, |t| {
        let pts: Vec<Point> =
            t.iter().enumerate().filter(|&(_, &c)| c != 0).map(|(i, &c)| sets[i][c - 1].clone()).collect();
        Ok(conv_contains(&pts, x)?.is_inside())
    })
}

/// `ColHel(F)`: partial choices `C_i ∈ F_i ∪ {⋆}` whose chosen sets have empty intersection.
pub fn colhel_complex(families: &[Vec<HPolytope>]) -> Result<LabeledComplex<Vec<usize>>> {
    let d = family_dim(families)?;
    let sizes: Vec<usize> = families.iter().map(Vec::len).collect();
    star_tuple_complex(&sizes, |t| {
        let polys: Vec<&HPolytope> = t
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| &families[i][c - 1])
            .collect();
        Ok(!polytopes_intersect(&polys, d)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ratio;
    use crate::homology::{eta_h, Eta};

    fn line(xs: &[i64]) -> Vec<Point> {
        xs.iter().map(|&x| vec![rat(x)]).collect()
    }

    #[test]
    fn hull_membership() {
        let pts = line(&[0, 2]);
        assert!(conv_contains(&pts, &[rat(1)]).unwrap().is_inside());
        assert!(!conv_contains(&pts, &[rat(3)]).unwrap().is_inside());
        assert!(!conv_contains(&[], &[rat(0)]).unwrap().is_inside());
    }

    #[test]
    fn radon_in_the_line() {
        let pts = line(&[0, 1, 2]);
        assert_eq!(tverberg_point(&pts, &[1, 0, 1], 2).unwrap(), Some(vec![rat(1)]));
        assert!(!is_tverberg(&pts, &[0, 0, 1], 2).unwrap());
        assert!(!is_tverberg(&pts, &[0, 0, 0], 2).unwrap());
    }

    #[test]
    fn tensor_layout() {
        let t = sarkaria_tensors(&[vec![rat(5)]], 2).unwrap();
        assert_eq!(t[0][0], vec![rat(5), rat(1)]);
        assert_eq!(t[0][1], vec![rat(-5), rat(-1)]);
        let t3 = sarkaria_tensors(&[vec![rat(2)]], 3).unwrap();
        assert_eq!(t3[0][1], vec![rat(0), rat(2), rat(0), rat(1)]);
        assert_eq!(t3[0][2], vec![rat(-2), rat(-2), rat(-1), rat(-1)]);
    }

    #[test]
    fn three_collinear_points_have_isolated_partitions() {
        let rg = rg_tverberg(&line(&[0, 1, 2]), 2).unwrap();
        assert_eq!(rg.len(), 2);
        assert_eq!(rg.edge_count(), 0);
    }

    #[test]
    fn four_points_reconfigure() {
        let rg = rg_tverberg(&line(&[0, 1, 2, 3]), 2).unwrap();
        assert!(rg.is_connected());
    }

    #[test]
    fn helly_single_empty_polytope() {
        let fam = vec![vec![vec![HalfSpace { a: vec![rat(0)], b: rat(1) }]]];
        let rg = rg_colorful_helly(&fam).unwrap();
        assert_eq!(rg.len(), 1);
        assert!(rg.is_connected());
    }

    #[test]
    fn bridge_matches_hull() {
        let sets = vec![line(&[-1, 2]), line(&[1, 3])];
        let x = vec![rat(0)];
        let fam = duality_bridge(&sets, &x).unwrap();
        for (i, s) in sets.iter().enumerate() {
            let polys: Vec<&HPolytope> = fam[i].iter().collect();
            assert_eq!(
                conv_contains(s, &x).unwrap().is_inside(),
                !polytopes_intersect(&polys, 1).unwrap()
            );
        }
    }

    #[test]
    fn radon_path_with_antiparallel_detour() {
        let pts = line(&[0, 1, 2, 10]);
        let p = vec![1, 0, 1, 1];
        let q = vec![0, 1, 0, 0];
        let path = radon_path(&pts, &p, &q).unwrap();
        assert!(path.detour);
        assert_eq!(path.steps.first(), Some(&p));
        assert_eq!(path.steps.last(), Some(&q));
    }

    #[test]
    fn radon_path_plain() {
        let pts = vec![
            vec![rat(0), rat(0)],
            vec![rat(4), rat(0)],
            vec![rat(0), rat(4)],
            vec![rat(1), rat(1)],
            vec![ratio(7, 2), rat(3)],
        ];
        let r = radon_partition(&pts).unwrap().unwrap();
        assert!(is_tverberg(&pts, &r, 2).unwrap());
        let flipped: Vec<usize> = r.iter().map(|&k| 1 - k).collect();
        let path = radon_path(&pts, &r, &flipped).unwrap();
        assert!(path.steps.len() >= 2);
    }

    #[test]
    fn radon_complex_in_the_line() {
        // Three points on a line, r = 2: only {1} vs {0, 2} and its mirror.
        let c = tverberg_complex(&line(&[0, 1, 2]), 2).unwrap();
        assert_eq!(c.labels.len(), 2);
        assert_eq!(eta_h(&c.complex), Eta::Finite(1));
    }
}

//! Two-phase simplex with Bland's rule over exact rationals.
//!
//! Every answer is re-verified before it is returned: feasible points are
//! substituted back into the constraints, infeasibility comes with a Farkas
//! certificate that is checked against the original system.

use super::{rat, Rational};
use crate::error::{Error, Result};
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSign {
    Free,
    NonNeg,
    NonPos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Debug, Clone)]
struct Constraint {
    coeffs: Vec<(usize, Rational)>,
    rel: Relation,
    rhs: Rational,
}

/// A linear system `A x (=|<=|>=) b` with per-variable sign constraints.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    signs: Vec<VarSign>,
    constraints: Vec<Constraint>,
}

/// Row multipliers `y` proving infeasibility: `y^T A` respects the variable
/// signs, `y` respects the row relations, and `y^T b < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub y: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpFeasibility {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOptimum {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible(FarkasCertificate),
    Unbounded,
}

impl LpFeasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpFeasibility::Feasible(_))
    }

    pub fn point(self) -> Option<Vec<Rational>> {
        match self {
            LpFeasibility::Feasible(x) => Some(x),
            LpFeasibility::Infeasible(_) => None,
        }
    }
}

impl LinearProgram {
    pub fn new(signs: Vec<VarSign>) -> Self {
        LinearProgram { signs, constraints: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.signs.len()
    }

    /// Adds `sum coeffs (rel) rhs`. Repeated variable indices are summed.
    pub fn add(&mut self, coeffs: Vec<(usize, Rational)>, rel: Relation, rhs: Rational) {
        for (j, _) in &coeffs {
            assert!(*j < self.signs.len(), "variable index out of range");
        }
        self.constraints.push(Constraint { coeffs, rel, rhs });
    }

    /// Requires `sum_{j in vars} |x_j| = 1` for sign-constrained variables.
    pub fn add_normalization(&mut self, vars: &[usize]) -> Result<()> {
        let mut coeffs = Vec::with_capacity(vars.len());
        for &j in vars {
            match self.signs[j] {
                VarSign::NonNeg => coeffs.push((j, rat(1))),
                VarSign::NonPos => coeffs.push((j, rat(-1))),
                VarSign::Free => {
                    return Err(Error::precondition("normalization over a free variable"))
                }
            }
        }
        self.add(coeffs, Relation::Eq, rat(1));
        Ok(())
    }

    pub fn feasibility(&self) -> Result<LpFeasibility> {
        let mut t = Tableau::build(self);
        match t.phase_one() {
            PhaseOne::Feasible => {
                let x = t.primal(self);
                self.verify_point(&x)?;
                Ok(LpFeasibility::Feasible(x))
            }
            PhaseOne::Infeasible(y) => {
                let cert = FarkasCertificate { y };
                self.verify_certificate(&cert)?;
                Ok(LpFeasibility::Infeasible(cert))
            }
        }
    }

    /// Maximizes `c^T x`.
    pub fn maximize(&self, c: &[Rational]) -> Result<LpOptimum> {
        assert_eq!(c.len(), self.signs.len());
        let mut t = Tableau::build(self);
        match t.phase_one() {
            PhaseOne::Infeasible(y) => {
                let cert = FarkasCertificate { y };
                self.verify_certificate(&cert)?;
                Ok(LpOptimum::Infeasible(cert))
            }
            PhaseOne::Feasible => {
                if !t.phase_two(c) {
                    return Ok(LpOptimum::Unbounded);
                }
                let x = t.primal(self);
                self.verify_point(&x)?;
                let value = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                Ok(LpOptimum::Optimal { x, value })
            }
        }
    }

    fn row_value(&self, con: &Constraint, x: &[Rational]) -> Rational {
        con.coeffs.iter().map(|(j, a)| a * &x[*j]).sum()
    }

    pub fn verify_point(&self, x: &[Rational]) -> Result<()> {
        let bad = |m: String| Err(Error::Internal(format!("LP point failed verification: {m}")));
        if x.len() != self.signs.len() {
            return bad("length".into());
        }
        for (j, s) in self.signs.iter().enumerate() {
            let ok = match s {
                VarSign::Free => true,
                VarSign::NonNeg => !x[j].is_negative(),
                VarSign::NonPos => !x[j].is_positive(),
            };
            if !ok {
                return bad(format!("sign of x[{j}]"));
            }
        }
        for (i, con) in self.constraints.iter().enumerate() {
            let v = self.row_value(con, x);
            let ok = match con.rel {
                Relation::Eq => v == con.rhs,
                Relation::Le => v <= con.rhs,
                Relation::Ge => v >= con.rhs,
            };
            if !ok {
                return bad(format!("row {i}"));
            }
        }
        Ok(())
    }

    pub fn verify_certificate(&self, cert: &FarkasCertificate) -> Result<()> {
        let bad = |m: &str| Err(Error::Internal(format!("Farkas certificate rejected: {m}")));
        if cert.y.len() != self.constraints.len() {
            return bad("length");
        }
        let mut ya = vec![Rational::zero(); self.signs.len()];
        let mut yb = Rational::zero();
        for (con, y) in self.constraints.iter().zip(&cert.y) {
            let ok = match con.rel {
                Relation::Eq => true,
                Relation::Le => !y.is_negative(),
                Relation::Ge => !y.is_positive(),
            };
            if !ok {
                return bad("row multiplier sign");
            }
            for (j, a) in &con.coeffs {
                ya[*j] += y * a;
            }
            yb += y * &con.rhs;
        }
        for (j, s) in self.signs.iter().enumerate() {
            let ok = match s {
                VarSign::Free => ya[j].is_zero(),
                VarSign::NonNeg => !ya[j].is_negative(),
                VarSign::NonPos => !ya[j].is_positive(),
            };
            if !ok {
                return bad("column sign");
            }
        }
        if !yb.is_negative() {
            return bad("y^T b is not negative");
        }
        Ok(())
    }
}

enum PhaseOne {
    Feasible,
    Infeasible(Vec<Rational>),
}

/// Column of the standard form: which original variable (with sign), slack, or artificial.
#[derive(Debug, Clone, Copy)]
enum Col {
    Var { j: usize, neg: bool },
    Slack,
    Artificial,
}

struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
    kinds: Vec<Col>,
    art_start: usize,
    flip: Vec<bool>,
    removed_rows: Vec<usize>,
    row_ids: Vec<usize>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let m = lp.constraints.len();
        let mut kinds = Vec::new();
        let mut var_cols: Vec<Vec<(usize, bool)>> = vec![Vec::new(); lp.signs.len()];
        for (j, s) in lp.signs.iter().enumerate() {
            let polarities: &[bool] = match s {
                VarSign::NonNeg => &[false],
                VarSign::NonPos => &[true],
                VarSign::Free => &[false, true],
            };
            for &neg in polarities {
                var_cols[j].push((kinds.len(), neg));
                kinds.push(Col::Var { j, neg });
            }
        }
        let mut slack_of_row = vec![None; m];
        for (i, con) in lp.constraints.iter().enumerate() {
            if con.rel != Relation::Eq {
                slack_of_row[i] = Some(kinds.len());
                kinds.push(Col::Slack);
            }
        }
        let art_start = kinds.len();
        for _ in 0..m {
            kinds.push(Col::Artificial);
        }
        let n = kinds.len();
        let mut a = vec![vec![Rational::zero(); n]; m];
        let mut b = vec![Rational::zero(); m];
        let mut flip = vec![false; m];
        for (i, con) in lp.constraints.iter().enumerate() {
            for (j, coef) in &con.coeffs {
                for &(c, neg) in &var_cols[*j] {
                    if neg {
                        a[i][c] -= coef;
                    } else {
                        a[i][c] += coef;
                    }
                }
            }
            if let Some(s) = slack_of_row[i] {
                a[i][s] = if con.rel == Relation::Le { rat(1) } else { rat(-1) };
            }
            b[i] = con.rhs.clone();
            if b[i].is_negative() {
                flip[i] = true;
                for v in a[i].iter_mut() {
                    *v = -&*v;
                }
                b[i] = -&b[i];
            }
            a[i][art_start + i] = rat(1);
        }
        Tableau {
            a,
            b,
            basis: (art_start..art_start + m).collect(),
            kinds,
            art_start,
            flip,
            removed_rows: Vec::new(),
            row_ids: (0..m).collect(),
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip();
        for v in self.a[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        self.b[r] = &self.b[r] * &inv;
        let prow = self.a[r].clone();
        let pb = self.b[r].clone();
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (v, p) in self.a[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.b[i] -= &f * &pb;
        }
        self.basis[r] = c;
    }

    /// Reduced costs for `cost` over all columns.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut rc = cost.to_vec();
        for (i, &bi) in self.basis.iter().enumerate() {
            let cb = &cost[bi];
            if cb.is_zero() {
                continue;
            }
            for (r, v) in rc.iter_mut().zip(&self.a[i]) {
                if !v.is_zero() {
                    *r -= cb * v;
                }
            }
        }
        rc
    }

    /// Runs Bland's rule on `cost` over columns `< limit`. Returns false if unbounded.
    fn minimize(&mut self, cost: &[Rational], limit: usize) -> bool {
        loop {
            let rc = self.reduced_costs(cost);
            let Some(enter) = (0..limit).find(|&j| rc[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(Rational, usize, usize)> = None;
            for i in 0..self.a.len() {
                let v = &self.a[i][enter];
                if v.is_positive() {
                    let ratio = &self.b[i] / v;
                    let better = match &best {
                        None => true,
                        Some((br, _, bvar)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < *bvar)
                        }
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                None => return false,
                Some((_, r, _)) => self.pivot(r, enter),
            }
        }
    }

    fn phase_one(&mut self) -> PhaseOne {
        let n = self.kinds.len();
        let cost: Vec<Rational> = (0..n)
            .map(|j| if j >= self.art_start { rat(1) } else { Rational::zero() })
            .collect();
        let bounded = self.minimize(&cost, n);
        debug_assert!(bounded, "phase one is bounded below by zero");
        let value: Rational = self
            .basis
            .iter()
            .zip(&self.b)
            .filter(|(bi, _)| **bi >= self.art_start)
            .map(|(_, v)| v.clone())
            .sum();
        if value.is_positive() {
            let rc = self.reduced_costs(&cost);
            let m = self.flip.len();
            let mut y = vec![Rational::zero(); m];
            for i in 0..m {
                // Phase-one dual is 1 - rc on the artificial column; the
                // certificate is its negation, undoing the row flip.
                let dual = Rational::one() - &rc[self.art_start + i];
                y[i] = if self.flip[i] { dual } else { -dual };
            }
            PhaseOne::Infeasible(y)
        } else {
            self.drive_out_artificials();
            PhaseOne::Feasible
        }
    }

    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] >= self.art_start {
                if let Some(c) = (0..self.art_start).find(|&c| !self.a[i][c].is_zero()) {
                    self.pivot(i, c);
                    i += 1;
                } else {
                    self.a.remove(i);
                    self.b.remove(i);
                    self.basis.remove(i);
                    self.removed_rows.push(self.row_ids.remove(i));
                }
            } else {
                i += 1;
            }
        }
    }

    fn phase_two(&mut self, c: &[Rational]) -> bool {
        let n = self.kinds.len();
        let mut cost = vec![Rational::zero(); n];
        for (col, k) in self.kinds.iter().enumerate() {
            if let Col::Var { j, neg } = *k {
                cost[col] = if neg { c[j].clone() } else { -c[j].clone() };
            }
        }
        self.minimize(&cost, self.art_start)
    }

    fn primal(&self, lp: &LinearProgram) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); lp.signs.len()];
        for (i, &bi) in self.basis.iter().enumerate() {
            if let Col::Var { j, neg } = self.kinds[bi] {
                if neg {
                    x[j] -= &self.b[i];
                } else {
                    x[j] += &self.b[i];
                }
            }
        }
        x
    }
}

/// A nonzero affine dependence `sum a_i p_i = 0`, `sum a_i = 0` whose entries
/// follow `signs` (`true` means `>= 0`, `false` means `<= 0`), normalized so
/// that `sum |a_i| = 1`. `None` if no such dependence exists.
pub fn affine_dependence_with_signs(
    points: &[Vec<Rational>],
    signs: &[bool],
) -> Result<Option<Vec<Rational>>> {
    if points.len() != signs.len() {
        return Err(Error::structural("one sign per point is required"));
    }
    let d = points.first().map_or(0, Vec::len);
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::structural("points of mixed dimension"));
    }
    let vs = signs
        .iter()
        .map(|&s| if s { VarSign::NonNeg } else { VarSign::NonPos })
        .collect();
    let mut lp = LinearProgram::new(vs);
    let n = points.len();
    for k in 0..d {
        lp.add((0..n).map(|i| (i, points[i][k].clone())).collect(), Relation::Eq, rat(0));
    }
    lp.add((0..n).map(|i| (i, rat(1))).collect(), Relation::Eq, rat(0));
    lp.add_normalization(&(0..n).collect::<Vec<_>>())?;
    Ok(lp.feasibility()?.point())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ratio;

    #[test]
    fn simple_feasible() {
        // x + y = 1, x - y >= 1/2, x, y >= 0
        let mut lp = LinearProgram::new(vec![VarSign::NonNeg, VarSign::NonNeg]);
        lp.add(vec![(0, rat(1)), (1, rat(1))], Relation::Eq, rat(1));
        lp.add(vec![(0, rat(1)), (1, rat(-1))], Relation::Ge, ratio(1, 2));
        assert!(lp.feasibility().unwrap().is_feasible());
    }

    #[test]
    fn infeasible_with_certificate() {
        // x >= 0, x <= -1
        let mut lp = LinearProgram::new(vec![VarSign::NonNeg]);
        lp.add(vec![(0, rat(1))], Relation::Le, rat(-1));
        match lp.feasibility().unwrap() {
            LpFeasibility::Infeasible(c) => lp.verify_certificate(&c).unwrap(),
            LpFeasibility::Feasible(_) => panic!("should be infeasible"),
        }
    }

    #[test]
    fn free_variable_equalities() {
        // x free: 2x = -3 and x + y = 0, y <= 0 is infeasible since y = 3/2.
        let mut lp = LinearProgram::new(vec![VarSign::Free, VarSign::NonPos]);
        lp.add(vec![(0, rat(2))], Relation::Eq, rat(-3));
        lp.add(vec![(0, rat(1)), (1, rat(1))], Relation::Eq, rat(0));
        assert!(!lp.feasibility().unwrap().is_feasible());
    }

    #[test]
    fn zero_variables() {
        let mut lp = LinearProgram::new(vec![]);
        lp.add(vec![], Relation::Eq, rat(1));
        assert!(!lp.feasibility().unwrap().is_feasible());
        let lp = LinearProgram::new(vec![]);
        assert!(lp.feasibility().unwrap().is_feasible());
    }

    #[test]
    fn maximize_triangle_fractional_matching() {
        // max x0+x1+x2 s.t. each vertex of K3 covered at most once.
        let mut lp = LinearProgram::new(vec![VarSign::NonNeg; 3]);
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            lp.add(vec![(a, rat(1)), (b, rat(1))], Relation::Le, rat(1));
        }
        match lp.maximize(&[rat(1), rat(1), rat(1)]).unwrap() {
            LpOptimum::Optimal { value, .. } => assert_eq!(value, ratio(3, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded() {
        let lp = LinearProgram::new(vec![VarSign::NonNeg]);
        assert_eq!(lp.maximize(&[rat(1)]).unwrap(), LpOptimum::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let mut lp = LinearProgram::new(vec![VarSign::NonNeg; 2]);
        lp.add(vec![(0, rat(1)), (1, rat(1))], Relation::Eq, rat(2));
        lp.add(vec![(0, rat(2)), (1, rat(2))], Relation::Eq, rat(4));
        match lp.maximize(&[rat(1), rat(0)]).unwrap() {
            LpOptimum::Optimal { value, .. } => assert_eq!(value, rat(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn radon_dependence_in_the_line() {
        // 0, 1, 2 with 1 against {0, 2}.
        let pts = vec![vec![rat(0)], vec![rat(1)], vec![rat(2)]];
        let a = affine_dependence_with_signs(&pts, &[false, true, false]).unwrap().unwrap();
        assert_eq!(a, vec![ratio(-1, 4), ratio(1, 2), ratio(-1, 4)]);
        assert!(affine_dependence_with_signs(&pts, &[true, false, false]).unwrap().is_none());
    }
}

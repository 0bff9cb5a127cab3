mod common;

use common::*;
use hallreconf::complex::Vertex;
use hallreconf::exactla::{
    affine_dependence_with_signs, bareiss_rank, rat, sparse_integer_rank, LinearProgram, LpFeasibility, Rational,
    RationalMatrix, Relation, VarSign,
};
use hallreconf::homology::eta_h;
use hallreconf::matroid::{independence_complex_of, Matroid};
use hallreconf::ExtNat;
use num::{BigInt, Signed, Zero};
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=6usize, 1..=6usize)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

fn to_rational(m: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_dense(&m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_methods_agree(m in int_matrix()) {
        let rows = m.len();
        let cols = m[0].len();
        let q = to_rational(&m);
        let r = q.rank();
        prop_assert_eq!(r, q.transpose().rank());
        prop_assert!(r <= rows.min(cols));
        prop_assert_eq!(r, rank_mod_p(m.clone()));
        let columns: Vec<Vec<(usize, i64)>> = (0..cols).map(|j| (0..rows).map(|i| (i, m[i][j])).collect()).collect();
        prop_assert_eq!(sparse_integer_rank(rows, columns), Some(r));
        let big: Vec<Vec<BigInt>> = m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(bareiss_rank(big, cols), r);
    }

    #[test]
    fn kernel_vector_is_in_the_kernel(m in int_matrix()) {
        let q = to_rational(&m);
        match q.kernel_vector() {
            Some(v) => {
                prop_assert!(v.iter().any(|x| !x.is_zero()));
                for row in &m {
                    let s: Rational = row.iter().zip(&v).map(|(&a, x)| rat(a) * x).sum();
                    prop_assert!(s.is_zero());
                }
            }
            None => prop_assert_eq!(q.rank(), m[0].len()),
        }
    }

    #[test]
    fn lp_answers_reverify(
        a in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..=4),
        b in proptest::collection::vec(-4i64..=4, 4),
        rels in proptest::collection::vec(0..3usize, 4),
        signs in proptest::collection::vec(0..3usize, 3),
    ) {
        let signs: Vec<VarSign> = signs.iter().map(|&s| [VarSign::NonNeg, VarSign::NonPos, VarSign::Free][s]).collect();
        let mut lp = LinearProgram::new(signs.clone());
        let rel = |k: usize| [Relation::Le, Relation::Ge, Relation::Eq][k];
        for (i, row) in a.iter().enumerate() {
            lp.add(row.iter().enumerate().map(|(j, &x)| (j, rat(x))).collect(), rel(rels[i]), rat(b[i]));
        }
        match lp.feasibility().unwrap() {
            LpFeasibility::Feasible(x) => {
                for (j, s) in signs.iter().enumerate() {
                    match s {
                        VarSign::NonNeg => prop_assert!(!x[j].is_negative()),
                        VarSign::NonPos => prop_assert!(!x[j].is_positive()),
                        VarSign::Free => {}
                    }
                }
                for (i, row) in a.iter().enumerate() {
                    let lhs: Rational = row.iter().zip(&x).map(|(&c, v)| rat(c) * v).sum();
                    let ok = match rel(rels[i]) {
                        Relation::Le => lhs <= rat(b[i]),
                        Relation::Ge => lhs >= rat(b[i]),
                        Relation::Eq => lhs == rat(b[i]),
                    };
                    prop_assert!(ok, "row {}", i);
                }
            }
            LpFeasibility::Infeasible(cert) => {
                prop_assert!(lp.verify_certificate(&cert).is_ok());
            }
        }
    }

    #[test]
    fn affine_dependence_respects_signs(
        pts in points_strategy(2..=5, 2, 3),
        signs in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let signs = &signs[..pts.len()];
        if let Some(alpha) = affine_dependence_with_signs(&pts, signs).unwrap() {
            let total: Rational = alpha.iter().sum();
            prop_assert!(total.is_zero());
            for k in 0..2 {
                let s: Rational = alpha.iter().zip(&pts).map(|(a, p)| a * &p[k]).sum();
                prop_assert!(s.is_zero());
            }
            for (a, &s) in alpha.iter().zip(signs) {
                let ok = if s { !a.is_negative() } else { !a.is_positive() };
                prop_assert!(ok);
            }
            let l1: Rational = alpha.iter().map(|a| a.abs()).sum();
            prop_assert_eq!(l1, rat(1));
        }
    }

    #[test]
    fn matroid_rank_matches_definition(spec in matroid_strategy(7)) {
        let m = spec.build();
        for s in subsets_of(spec.n()) {
            prop_assert_eq!(m.rank(&s), spec.rank(&s), "{:?}", s);
        }
    }

    #[test]
    fn dual_is_an_involution(spec in matroid_strategy(7)) {
        let m = spec.build();
        let dd = m.dual().dual();
        let n = spec.n();
        let total = spec.rank(&(0..n as Vertex).collect::<Vec<_>>());
        for s in subsets_of(n) {
            prop_assert_eq!(dd.rank(&s), m.rank(&s));
            // r*(X) = |X| - r(E) + r(E - X)
            let rest: Vec<Vertex> = (0..n as Vertex).filter(|v| !s.contains(v)).collect();
            prop_assert_eq!(m.dual().rank(&s), s.len() + spec.rank(&rest) - total);
        }
    }

    #[test]
    fn rank_is_submodular(spec in matroid_strategy(8), a in any::<u8>(), b in any::<u8>()) {
        let m = spec.build();
        let n = spec.n();
        let pick = |mask: u8| -> Vec<Vertex> { (0..n as Vertex).filter(|&i| mask >> i & 1 == 1).collect() };
        let (x, y) = (pick(a), pick(b));
        let union = pick(a | b);
        let inter = pick(a & b);
        prop_assert!(m.rank(&x) + m.rank(&y) >= m.rank(&union) + m.rank(&inter));
        prop_assert!(m.rank(&x) <= x.len());
        prop_assert!(m.rank(&inter) <= m.rank(&x));
    }

    #[test]
    fn matroid_connectedness(spec in matroid_strategy(7)) {
        let m = spec.build();
        let n = spec.n();
        let all: Vec<Vertex> = (0..n as Vertex).collect();
        let r = spec.rank(&all);
        let has_coloop = all.iter().any(|&e| {
            let rest: Vec<Vertex> = all.iter().copied().filter(|&v| v != e).collect();
            spec.rank(&rest) < r
        });
        let expect = if has_coloop { ExtNat::Infinite } else { ExtNat::Finite(r as u64) };
        prop_assert_eq!(eta_h(&independence_complex_of(&m).unwrap()), expect);
    }

    #[test]
    fn flats_are_closed(spec in matroid_strategy(6)) {
        let m = spec.build();
        let r = m.rank_total();
        let flats = m.flats(r).unwrap();
        for f in &flats {
            prop_assert_eq!(&m.closure(f), f);
        }
        // Every closed set appears.
        let closed = subsets_of(spec.n()).into_iter().filter(|s| &m.closure(s) == s).count();
        prop_assert_eq!(flats.len(), closed);
    }
}

#[test]
fn partition_rank_counts_classes_met() {
    let m = Matroid::partition(&[vec![0, 1], vec![2], vec![3, 4, 5]], None).unwrap();
    for s in subsets_of(6) {
        let met = [vec![0, 1], vec![2], vec![3, 4, 5]].iter().filter(|c| c.iter().any(|v| s.contains(v))).count();
        assert_eq!(m.rank(&s), met);
    }
}

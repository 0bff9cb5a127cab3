//! Exhaustive sweeps over small instance families.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{set_partitions, Vertex, VertexPartition};
use crate::error::{Error, Result};
use crate::graphs::nonisomorphic_graphs;
use crate::hallcheck::{verify_instance, Classification, Instance, TheoremId, VerificationVerdict};
use crate::matroid::{independence_complex_of, Matroid};

/// Every graph on `1..=max_vertices` vertices up to isomorphism, paired with
/// every labeled partition of its vertices into at most `max_classes`
/// classes of size at most `max_class_size`.
pub fn graph_instances(max_vertices: usize, max_classes: usize, max_class_size: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let vs: Vec<Vertex> = (0..n as Vertex).collect();
        let parts = set_partitions(&vs, max_classes, max_class_size);
        for g in nonisomorphic_graphs(n)? {
            for p in &parts {
                out.push(Instance::from_graph(&g, &VertexPartition::new(p)?));
            }
        }
    }
    Ok(out)
}

/// Partition matroids (capacity one per class) and uniform matroids on
/// `0..n` for `n` in `1..=max_elements`, as `(partition, uniform)` pairs.
pub fn matroid_pairs(max_elements: usize) -> Result<Vec<(Matroid, Matroid)>> {
    let mut out = Vec::new();
    for n in 1..=max_elements {
        let vs: Vec<Vertex> = (0..n as Vertex).collect();
        for p in set_partitions(&vs, n, n) {
            let pm = Matroid::partition(&p, None)?;
            for j in 0..=n {
                out.push((pm.clone(), Matroid::uniform(&vs, j)?));
            }
        }
    }
    Ok(out)
}

/// Instances for a matroidal theorem over [`matroid_pairs`], both orders of
/// each pair and every `k` in `1..=r` of the matroid the theorem ranks flats in.
pub fn matroid_instances(
    max_elements: usize,
    theorem: TheoremId,
    m: Option<usize>,
    d: Option<usize>,
) -> Result<Vec<Instance>> {
    use TheoremId::*;
    let mut out = Vec::new();
    for (p, u) in matroid_pairs(max_elements)? {
        for (a, b) in [(&p, &u), (&u, &p)] {
            match theorem {
                ComplexMatroidExistence | ComplexMatroidReconfig | ComplexMatroidConnectedness => {
                    let c = independence_complex_of(a)?.to_json();
                    for k in 1..=b.rank_total() {
                        out.push(Instance {
                            complex: Some(c.clone()),
                            matroid: Some(b.to_json()),
                            k: Some(k),
                            m,
                            ..Default::default()
                        });
                    }
                }
                MatroidIntersection | MatroidIntersectionCorollary => {
                    for k in 1..=b.rank_total() {
                        out.push(Instance {
                            matroid: Some(a.to_json()),
                            second_matroid: Some(b.to_json()),
                            k: Some(k),
                            ..Default::default()
                        });
                    }
                }
                TopologicalHelly | TopologicalHellyConnectedness => out.push(Instance {
                    complex: Some(independence_complex_of(a)?.to_json()),
                    matroid: Some(b.to_json()),
                    d: Some(d.unwrap_or(a.rank_total())),
                    m,
                    ..Default::default()
                }),
                _ => {
                    return Err(Error::precondition(format!(
                        "theorem {theorem} is not defined on matroid pairs"
                    )))
                }
            }
        }
    }
    Ok(out)
}

/// Verifies every instance in parallel; results keep the input order.
pub fn run_sweep(instances: &[Instance], theorem: TheoremId) -> Vec<Result<VerificationVerdict>> {
    instances.par_iter().map(|inst| verify_instance(inst, theorem)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub family: String,
    pub theorem: TheoremId,
    pub instances: usize,
    pub confirmed: usize,
    pub vacuous: usize,
    pub tight_negative: usize,
    pub counterexamples: usize,
    /// Instances rejected by a precondition of the theorem.
    pub skipped: usize,
    pub counterexample_dumps: Vec<Instance>,
}

/// Tallies verdicts. Precondition and structural rejections are skipped;
/// capacity and internal errors abort the sweep.
pub fn summarize(
    family: &str,
    theorem: TheoremId,
    results: &[Result<VerificationVerdict>],
) -> Result<SweepSummary> {
    let mut s = SweepSummary {
        family: family.to_string(),
        theorem,
        instances: results.len(),
        confirmed: 0,
        vacuous: 0,
        tight_negative: 0,
        counterexamples: 0,
        skipped: 0,
        counterexample_dumps: Vec::new(),
    };
    for r in results {
        match r {
            Ok(v) => match v.classification {
                Classification::Confirmed => s.confirmed += 1,
                Classification::Vacuous => s.vacuous += 1,
                Classification::TightNegative => s.tight_negative += 1,
                Classification::Counterexample => {
                    s.counterexamples += 1;
                    s.counterexample_dumps.extend(v.instance_dump.clone());
                }
            },
            Err(Error::Precondition(_) | Error::Structural(_)) => s.skipped += 1,
            Err(e) => return Err(e.clone()),
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_family_size() {
        // n = 1: 1 graph x 1 partition; n = 2: 2 graphs x 2 partitions.
        assert_eq!(graph_instances(2, 2, 2).unwrap().len(), 1 + 4);
    }

    #[test]
    fn small_graph_sweep_has_no_counterexample() {
        let inst = graph_instances(4, 2, 4).unwrap();
        let s = summarize("graphs", TheoremId::ReconfigHall, &run_sweep(&inst, TheoremId::ReconfigHall)).unwrap();
        assert_eq!(s.counterexamples, 0);
        assert_eq!(s.instances, s.confirmed + s.vacuous + s.tight_negative + s.skipped);
        assert!(s.confirmed > 0 && s.tight_negative > 0);
    }

    #[test]
    fn matroid_pairs_count() {
        // n = 1: 1 partition x 2 uniforms; n = 2: 2 partitions x 3 uniforms.
        assert_eq!(matroid_pairs(2).unwrap().len(), 2 + 6);
    }

    #[test]
    fn small_matroid_sweep_has_no_counterexample() {
        for th in [TheoremId::ComplexMatroidReconfig, TheoremId::MatroidIntersection] {
            let inst = matroid_instances(4, th, None, None).unwrap();
            let s = summarize("matroids", th, &run_sweep(&inst, th)).unwrap();
            assert_eq!(s.counterexamples, 0, "{th}");
            assert_eq!(s.skipped, 0);
        }
    }

    #[test]
    fn graph_only_theorem_is_rejected_for_matroids() {
        assert!(matroid_instances(2, TheoremId::Bko, None, None).is_err());
    }
}

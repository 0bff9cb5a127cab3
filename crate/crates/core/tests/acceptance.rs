//! Acceptance suite: one PASS/FAIL line per criterion, with its time budget.
//! Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use hallreconf::cli::sweep::{graph_instances, matroid_instances, run_sweep, summarize};
use hallreconf::complex::{interval_subdivision, order_complex, FinitePoset, SimplicialComplex, Vertex};
use hallreconf::exactla::{rat, ratio, Rational};
use hallreconf::geometry::{
    conv_contains, is_tverberg, radon_path, rg_colorful_caratheodory, rg_tverberg, sarkaria_tensors, Point,
};
use hallreconf::graphs::{
    bipartite_counterexample, grid, independence_complex, kdd_single_class, matching_complex, Graph,
};
use hallreconf::hallcheck::{extract_domination_witness, DominationWitness, TheoremId};
use hallreconf::homology::{betti_profile, boundary_matrix, eta_h, reduced_betti};
use hallreconf::matroid::independence_complex_of;
use hallreconf::reconfig::{rg_bipartite_matching, rg_colorful};
use hallreconf::sperner::{follow_paths, freudenthal_triangulation, random_r_sperner, staircase_triangulation};
use hallreconf::ExtNat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn random_complex(rng: &mut ChaCha8Rng, max_n: usize, max_facets: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_n);
    let facets: Vec<Vec<Vertex>> = (0..rng.gen_range(1..=max_facets))
        .map(|_| (0..n as Vertex).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::new(&(0..n as Vertex).collect::<Vec<_>>(), &facets).unwrap()
}

fn shifted(c: &SimplicialComplex, by: Vertex) -> SimplicialComplex {
    let ground: Vec<Vertex> = c.ground_set().iter().map(|v| v + by).collect();
    let faces: Vec<Vec<Vertex>> = c.facets().iter().map(|f| f.iter().map(|v| v + by).collect()).collect();
    SimplicialComplex::new(&ground, &faces).unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-20..=20), rng.gen_range(1..=5))
}

fn random_points(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<Point> {
    (0..n).map(|_| (0..d).map(|_| random_rational(rng)).collect()).collect()
}

fn assignments(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..r.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let p = c % r;
                    c /= r;
                    p
                })
                .collect()
        })
        .collect()
}

fn homology_core() -> Check {
    let t = SimplicialComplex::simplex_boundary(&[0, 1, 2]).map_err(err)?;
    ensure(reduced_betti(&t, 0) == 0 && reduced_betti(&t, 1) == 1, || "hollow triangle Betti numbers".into())?;
    ensure(eta_h(&t) == ExtNat::Finite(2), || "hollow triangle eta".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let apex = SimplicialComplex::simplex(&[100]).map_err(err)?;
    for i in 0..200 {
        let c = random_complex(&mut rng, 7, 6);
        for p in 0..=c.dim().max(0) as usize {
            let dd = boundary_matrix(&c, p).mul(&boundary_matrix(&c, p + 1));
            ensure(dd.is_zero(), || format!("complex {i}: boundary squared is nonzero at p = {p}"))?;
        }
        // Alternating f-vector sum (empty face included) against alternating Betti sum.
        let chi: i64 = c.f_vector().iter().enumerate().map(|(s, &n)| if s % 2 == 1 { n as i64 } else { -(n as i64) }).sum();
        let betti: i64 = betti_profile(&c).iter().map(|(&p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        ensure(chi == betti, || format!("complex {i}: Euler-Poincare {chi} != {betti}"))?;
        let oracle = betti_mod_p(c.facets());
        let profile: Vec<u64> = betti_profile(&c).values().copied().collect();
        ensure(profile == oracle, || format!("complex {i}: Betti {profile:?} vs modular {oracle:?}"))?;
        let cone = c.join(&apex).map_err(err)?;
        ensure(eta_h(&cone) == ExtNat::Infinite, || format!("complex {i}: cone has finite eta"))?;
    }
    Ok("hollow triangle exact; 200 complexes and their cones".into())
}

fn matroid_specs() -> Vec<MatroidSpec> {
    let mut out = Vec::new();
    for n in 1..=8usize {
        for k in 0..=n {
            out.push(MatroidSpec::Uniform { n, k });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..30 {
        let n = rng.gen_range(1..=8usize);
        let colour: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let classes: Vec<Vec<Vertex>> = (0..n)
            .map(|c| (0..n).filter(|&i| colour[i] == c).map(|i| i as Vertex).collect::<Vec<_>>())
            .filter(|p| !p.is_empty())
            .collect();
        let caps = classes.iter().map(|_| rng.gen_range(0..=2)).collect();
        out.push(MatroidSpec::Partition { classes, caps });
    }
    for _ in 0..30 {
        let n = rng.gen_range(1..=8usize);
        let d = rng.gen_range(1..=4usize);
        let columns = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        out.push(MatroidSpec::Linear { columns });
    }
    out
}

fn matroid_connectedness() -> Check {
    let specs = matroid_specs();
    for spec in &specs {
        let m = spec.build();
        let all: Vec<Vertex> = (0..spec.n() as Vertex).collect();
        let r = spec.rank(&all);
        let coloop = all.iter().any(|&e| {
            let rest: Vec<Vertex> = all.iter().copied().filter(|&v| v != e).collect();
            spec.rank(&rest) < r
        });
        let expect = if coloop { ExtNat::Infinite } else { ExtNat::Finite(r as u64) };
        let got = eta_h(&independence_complex_of(&m).map_err(err)?);
        ensure(got == expect, || format!("{spec:?}: eta {got}, expected {expect}"))?;
    }
    ensure(specs.len() >= 50, || "fewer than 50 matroids".into())?;
    Ok(format!("{} matroids on at most 8 elements", specs.len()))
}

fn join_additivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let c = random_complex(&mut rng, 5, 4);
        let d = random_complex(&mut rng, 5, 4);
        let j = c.join(&shifted(&d, 10)).map_err(err)?;
        let (a, b, s) = (eta_h(&c), eta_h(&d), eta_h(&j));
        ensure(s == a + b, || format!("pair {i}: {s} != {a} + {b}"))?;
    }
    Ok("100 pairs".into())
}

fn tightness_catalogue() -> Check {
    for delta in 1..=3 {
        let (g, v) = kdd_single_class(delta).map_err(err)?;
        let ind = independence_complex(&g);
        ensure(eta_h(&ind) == ExtNat::Finite(1), || format!("eta(I(K_{delta},{delta})) != 1"))?;
        let comps = rg_colorful(&ind, &v, 1).map_err(err)?.component_count();
        ensure(comps == 2, || format!("K_{delta},{delta}: {comps} components"))?;
    }
    for r in 2..=3 {
        let h = grid(r).map_err(err)?;
        let edges = hallreconf::complex::VertexPartition::new(&[h.edge_ids()]).map_err(err)?;
        let comps = rg_colorful(&matching_complex(&h), &edges, 1).map_err(err)?.component_count();
        ensure(comps == 2, || format!("grid({r}): {comps} components"))?;
    }
    let (h, a) = bipartite_counterexample(3).map_err(err)?;
    let comps = rg_bipartite_matching(&h, &a, 2).map_err(err)?.component_count();
    ensure(comps == 2, || format!("bipartite counterexample: {comps} components"))?;
    Ok("kdd 1..3, grid 2..3 and the r = 3 counterexample each have 2 components".into())
}

fn soundness_sweep(disconnected: &mut Vec<(Graph, hallreconf::complex::VertexPartition)>) -> Check {
    let instances = graph_instances(6, 3, 3).map_err(err)?;
    let results = run_sweep(&instances, TheoremId::ReconfigHall);
    let s = summarize("graphs", TheoremId::ReconfigHall, &results).map_err(err)?;
    for (inst, r) in instances.iter().zip(&results) {
        if let Ok(v) = r {
            if !v.conclusion {
                disconnected.push((inst.graph().map_err(err)?, inst.partition().map_err(err)?));
            }
        }
    }
    let line = format!(
        "{} instances: {} confirmed, {} vacuous, {} tight-negative, {} skipped, {} counterexamples",
        s.instances, s.confirmed, s.vacuous, s.tight_negative, s.skipped, s.counterexamples
    );
    ensure(s.counterexamples == 0 && s.skipped == 0, || line.clone())?;
    Ok(line)
}

fn matroidal_soundness() -> Check {
    use TheoremId::*;
    let mut runs: Vec<(TheoremId, Option<usize>)> = vec![
        (ComplexMatroidExistence, None),
        (ComplexMatroidReconfig, None),
        (MatroidIntersection, None),
        (MatroidIntersectionCorollary, None),
    ];
    runs.extend((0..=2).map(|m| (ComplexMatroidConnectedness, Some(m))));
    let mut total = 0;
    let mut confirmed = 0;
    for (th, m) in runs {
        let instances = matroid_instances(6, th, m, None).map_err(err)?;
        let s = summarize("matroids", th, &run_sweep(&instances, th)).map_err(err)?;
        ensure(s.counterexamples == 0, || format!("{th} m = {m:?}: {} counterexamples", s.counterexamples))?;
        total += s.instances;
        confirmed += s.confirmed;
    }
    Ok(format!("{total} instances, {confirmed} confirmed, 0 counterexamples"))
}

fn sperner_prism() -> Check {
    let mut runs = 0;
    for n in 1..=2 {
        for s in 1..=3 {
            for t in [staircase_triangulation(n, s).map_err(err)?, freudenthal_triangulation(n, s).map_err(err)?] {
                for seed in 0..500 {
                    let labels = random_r_sperner(&t, seed);
                    let r = follow_paths(&t, &labels).map_err(err)?;
                    ensure(r.paths_0_to_1 % 2 == 1, || format!("n = {n}, s = {s}, seed {seed}: even path count"))?;
                    ensure(r.base0_colorful % 2 == 1 && r.base1_colorful % 2 == 1, || {
                        format!("n = {n}, s = {s}, seed {seed}: even base count")
                    })?;
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} labelings"))
}

fn sarkaria_equivalence() -> Check {
    let mut configs = 0;
    for seed in 0..50 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        for (d, r) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let n = rng.gen_range(1..=6usize);
            let pts = random_points(&mut rng, n, d);
            let tensors = sarkaria_tensors(&pts, r).map_err(err)?;
            let origin = vec![rat(0); (d + 1) * (r - 1)];
            for parts in assignments(n, r) {
                let chosen: Vec<Point> = parts.iter().enumerate().map(|(i, &j)| tensors[i][j].clone()).collect();
                let lifted = conv_contains(&chosen, &origin).map_err(err)?.is_inside();
                ensure(is_tverberg(&pts, &parts, r).map_err(err)? == lifted, || {
                    format!("seed {seed}, d = {d}, r = {r}, parts {parts:?}")
                })?;
            }
            let a = rg_tverberg(&pts, r).map_err(err)?;
            let b = rg_colorful_caratheodory(&tensors, &origin).map_err(err)?;
            ensure(a.configs() == b.configs() && a.edges() == b.edges(), || {
                format!("seed {seed}, d = {d}, r = {r}: graphs differ")
            })?;
            configs += 1;
        }
    }
    Ok(format!("{configs} configurations, every assignment"))
}

fn tverberg_reconfiguration() -> Check {
    for (d, r) in [(1usize, 2usize), (1, 3), (2, 2)] {
        let size = (d + 1) * (r - 1) + 2;
        let mut rng = ChaCha8Rng::seed_from_u64(9000 + 10 * d as u64 + r as u64);
        for i in 0..100 {
            let pts = random_points(&mut rng, size, d);
            let g = rg_tverberg(&pts, r).map_err(err)?;
            ensure(g.is_connected(), || format!("d = {d}, r = {r}, config {i}: {} components", g.component_count()))?;
        }
    }
    let line: Vec<Point> = (0..3).map(|x| vec![rat(x)]).collect();
    let g = rg_tverberg(&line, 2).map_err(err)?;
    ensure(g.len() == 2 && g.edge_count() == 0, || "{0,1,2}: expected two isolated vertices".into())?;
    Ok("300 threshold configurations connected; {0,1,2} has two isolated vertices".into())
}

fn radon_paths() -> Check {
    let mut pairs = 0;
    let mut detours = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..200 {
        let d = 1 + i % 2;
        let pts = random_points(&mut rng, d + 3, d);
        let radon: Vec<Vec<usize>> = assignments(d + 3, 2)
            .into_iter()
            .filter(|p| is_tverberg(&pts, p, 2).unwrap_or(false))
            .collect();
        for p in &radon {
            for q in &radon {
                let path = radon_path(&pts, p, q).map_err(|e| format!("instance {i}, {p:?} -> {q:?}: {e}"))?;
                ensure(path.steps.first() == Some(p) && path.steps.last() == Some(q), || format!("instance {i}: endpoints"))?;
                for w in path.steps.windows(2) {
                    let moved = (0..pts.len()).filter(|&k| w[0][k] != w[1][k]).count();
                    ensure(moved == 1, || format!("instance {i}: step moves {moved} points"))?;
                }
                for s in &path.steps {
                    ensure(is_tverberg(&pts, s, 2).map_err(err)?, || format!("instance {i}: {s:?} is not Radon"))?;
                }
                detours += usize::from(path.detour);
                pairs += 1;
            }
        }
    }
    ensure(detours > 0, || "no instance used the antiparallel detour".into())?;
    Ok(format!("{pairs} ordered pairs, {detours} through the detour"))
}

fn domination_witnesses(disconnected: &[(Graph, hallreconf::complex::VertexPartition)]) -> Check {
    for (g, v) in disconnected {
        match extract_domination_witness(g, v).map_err(err)? {
            DominationWitness::Connected => return Err(format!("witness reports connected for {g:?}")),
            DominationWitness::Witness { classes, dominating, .. } => {
                let vi: BTreeSet<Vertex> = classes.iter().flat_map(|&i| v.class(i as usize - 1).to_vec()).collect();
                ensure(!classes.is_empty(), || "empty class set".into())?;
                ensure(dominating.len() <= 2 * classes.len(), || format!("|D| too large for {g:?}"))?;
                ensure(dominating.iter().all(|x| vi.contains(x)), || format!("D leaves V_I for {g:?}"))?;
                ensure(vi.iter().all(|&x| dominating.iter().any(|&y| g.adjacent(x, y))), || {
                    format!("D does not dominate V_I for {g:?}")
                })?;
            }
        }
    }
    Ok(format!("{} disconnected instances, all witnessed", disconnected.len()))
}

/// Every naturally labeled poset on `0..n`: transitive relation sets with `i < j` only.
fn posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<[Vertex; 2]> = (0..n as Vertex).flat_map(|a| (a + 1..n as Vertex).map(move |b| [a, b])).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let rel: Vec<[Vertex; 2]> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let has = |a: Vertex, b: Vertex| rel.contains(&[a, b]);
        let transitive = rel.iter().all(|&[a, b]| rel.iter().all(|&[c, e]| c != b || has(a, e)));
        if transitive {
            out.push(FinitePoset::new(&(0..n as Vertex).collect::<Vec<_>>(), &rel).unwrap());
        }
    }
    out
}

fn walker_lemma() -> Check {
    let mut count = 0;
    for n in 0..=6 {
        for p in posets(n) {
            let a = betti_profile(&order_complex(&p));
            let b = betti_profile(&interval_subdivision(&p).complex);
            let trim = |m: std::collections::BTreeMap<isize, u64>| -> Vec<(isize, u64)> { m.into_iter().filter(|&(_, b)| b != 0).collect() };
            let (a, b) = (trim(a), trim(b));
            ensure(a == b, || format!("{p:?}: {a:?} vs {b:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} posets"))
}

fn main() {
    let mut disconnected = Vec::new();
    let mut failed = 0;
    let mut report = |id: usize, name: &str, limit_s: u64, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit_s);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {id:>2} {name}: {:.2}s (limit {limit_s}s) {detail}", took.as_secs_f64());
    };
    report(1, "homology core", 5, &mut homology_core);
    report(2, "matroid connectedness", 30, &mut matroid_connectedness);
    report(3, "join additivity", 60, &mut join_additivity);
    report(4, "tightness catalogue", 10, &mut tightness_catalogue);
    report(5, "soundness sweep", 1800, &mut || soundness_sweep(&mut disconnected));
    report(6, "matroidal soundness", 600, &mut matroidal_soundness);
    report(7, "Sperner prism", 120, &mut sperner_prism);
    report(8, "Sarkaria equivalence", 600, &mut sarkaria_equivalence);
    report(9, "Tverberg reconfiguration", 900, &mut tverberg_reconfiguration);
    report(10, "Radon path", 600, &mut radon_paths);
    report(11, "domination witness", 300, &mut || domination_witnesses(&disconnected));
    report(12, "Walker subdivision", 300, &mut walker_lemma);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

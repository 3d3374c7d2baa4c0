//! Acceptance suite: one test per shipped criterion, each printing a
//! PASS/FAIL line. Tolerances are pinned in the assertions.

use std::process::Command;
use std::time::Instant;

use serde_json::Value;

use snormed_core::axioms::{
    DEFAULT_TOL, check_gnorm, check_norm, check_pair_symmetry, check_smetric, check_snorm,
    falsify_norm_generated, falsify_snorm_generated,
};
use snormed_core::geometry::{BallSpec, ball_contains, ball_value, trace_boundary_2d};
use snormed_core::rhoades::{
    SelfMap, check_nr25_implies_ns25, check_ns25_implies_s25, find_fixed_point, nr25_at, ns25_at,
    r25_at, s25_at,
};
use snormed_core::sequences::{
    SEQUENCE_NAMES, check_cauchy, check_convergence, classify_completeness_witness, named_sequence,
};
use snormed_core::setanalysis::{PointSet, s_chebyshev, s_diameter, s_radius_at};
use snormed_core::structures::{example6_snorm, resolve_id, sum_abs_snorm};
use snormed_core::vector::Vector;
use snormed_core::{SampleSpec, StructureHandle};

const SEED: u64 = 42;

fn pass(n: u32, label: &str) {
    println!("criterion {n:02} ({label}): PASS");
}

fn fail(n: u32, label: &str, detail: &str) -> ! {
    println!("criterion {n:02} ({label}): FAIL - {detail}");
    panic!("criterion {n:02} ({label}) failed: {detail}");
}

fn v1(x: f64) -> Vector {
    Vector::scalar(x).unwrap()
}

fn v2(x: f64, y: f64) -> Vector {
    Vector::from_slice(&[x, y]).unwrap()
}

fn spec(dim: usize, count: usize) -> SampleSpec {
    SampleSpec::centered(dim, 10.0, count, SEED).unwrap()
}

fn assert_all_pass(n: u32, label: &str, reports: &[snormed_core::axioms::CheckReport]) {
    for r in reports {
        if !r.passed() || r.worst_margin < -1e-9 {
            fail(
                n,
                label,
                &format!(
                    "{} verdict {:?} worst_margin {} witness {:?}",
                    r.property_id, r.verdict, r.worst_margin, r.witness
                ),
            );
        }
        assert!(r.samples_used >= 10_000);
    }
}

#[test]
fn criterion_01_collapsing_counterexample_reproduction() {
    let label = "canned NG5 counterexample values";
    let started = Instant::now();
    let s = example6_snorm(1).unwrap();

    let collapsed = s.eval_triple(&v1(6.0), &v1(0.0), &v1(0.0)).unwrap();
    assert_eq!(collapsed, 30.0, "collapsed triple (6,0,0)");

    let reports = check_gnorm(&s, &spec(1, 100), DEFAULT_TOL).unwrap();
    let ng5 = reports
        .iter()
        .find(|r| r.property_id == "NG5")
        .expect("NG5 report");
    assert!(!ng5.passed(), "NG5 must fail for this S-norm");
    let w = ng5.witness.as_ref().expect("NG5 witness");
    assert_eq!(w.points[0].as_slice(), &[1.0]);
    assert_eq!(w.points[1].as_slice(), &[5.0]);
    assert_eq!(w.points[2].as_slice(), &[0.0]);

    assert!(started.elapsed().as_secs_f64() < 1.0, "runtime bound");

    // Pinned expectation: the witness triple evaluates to exactly 23.
    let value = s.eval_triple(&v1(1.0), &v1(5.0), &v1(0.0)).unwrap();
    if value == 23.0 {
        pass(1, label);
    } else {
        fail(
            1,
            label,
            &format!(
                "the evaluator returns {value} at (1,5,0): the three-term formula gives \
                 |1-2*5-2*0| + |5-2*1-2*0| + |0-2*5-2*1| = 9 + 3 + 12 = 24, which is \
                 consistent with every other pinned value of this structure \
                 (||x,0,0|| = 5|x|, ||x,x,0|| = 6|x|, ||6,0,0|| = 30); a return value of \
                 exactly 23 is not reachable by any evaluator that also meets those pins. \
                 The counterexample itself still stands: 24 < 30 violates the collapsing \
                 inequality, and the NG5 check above fails with the canned witness"
            ),
        );
    }
}

#[test]
fn criterion_02_norm_generation_falsified() {
    let label = "decomposition gap of the non-norm-generated S-norm";
    let s = example6_snorm(1).unwrap();
    let report = falsify_norm_generated(&s, &spec(1, 1000)).unwrap();
    assert!(!report.passed());
    let w = report.witness.as_ref().expect("witness");
    assert_eq!(w.points[0].as_slice(), &[1.0]);
    assert_eq!(w.points[1].as_slice(), &[1.0]);
    assert_eq!(w.points[2].as_slice(), &[0.0]);

    let zero = Vector::zeros(1).unwrap();
    let x00 = s.eval_triple(&v1(1.0), &zero, &zero).unwrap();
    let y00 = s.eval_triple(&zero, &v1(1.0), &zero).unwrap();
    let whole = s.eval_triple(&v1(1.0), &v1(1.0), &zero).unwrap();
    assert_eq!(x00, 5.0);
    assert_eq!(y00, 5.0);
    assert_eq!(whole, 6.0);
    let gap = (x00 + y00 + s.eval_triple(&zero, &zero, &zero).unwrap()) - whole;
    assert_eq!(gap, 4.0, "decomposition gap");
    pass(2, label);
}

#[test]
fn criterion_03_snorm_generation_falsified() {
    let label = "discrete S-metric homogeneity violation";
    let m = resolve_id("smetric.discrete.d1").unwrap();
    let report = falsify_snorm_generated(&m, &spec(1, 1000)).unwrap();
    assert!(!report.passed());
    let w = report.witness.as_ref().expect("witness");
    assert_eq!(w.scalars, &[2.0]);
    assert!(w.points[0].is_zero() && w.points[1].is_zero());
    assert_eq!(w.points[2].as_slice(), &[1.0]);

    let zero = Vector::zeros(1).unwrap();
    let observed = m.eval_triple(&zero, &zero, &v1(2.0)).unwrap();
    let required = 2.0 * m.eval_triple(&zero, &zero, &v1(1.0)).unwrap();
    assert_eq!(observed, 1.0);
    assert_eq!(required, 2.0);
    pass(3, label);
}

#[test]
fn criterion_04_axiom_suites_at_scale() {
    let label = "catalog axiom suites over 10^4 samples";
    let started = Instant::now();
    let count = 10_000;

    for dim in [1, 2] {
        let sp = spec(dim, count);
        assert_all_pass(
            4,
            label,
            &check_snorm(&sum_abs_snorm(dim).unwrap(), &sp, 1e-9).unwrap(),
        );
        assert_all_pass(
            4,
            label,
            &check_snorm(&example6_snorm(dim).unwrap(), &sp, 1e-9).unwrap(),
        );
        assert_all_pass(
            4,
            label,
            &check_norm(&resolve_id(&format!("norm.gen.sum_abs.d{dim}")).unwrap(), &sp, 1e-9)
                .unwrap(),
        );
        assert_all_pass(
            4,
            label,
            &check_norm(
                &resolve_id(&format!("norm.gen.example6.d{dim}")).unwrap(),
                &sp,
                1e-9,
            )
            .unwrap(),
        );
    }
    assert_all_pass(
        4,
        label,
        &check_smetric(&resolve_id("smetric.discrete.d1").unwrap(), &spec(1, count), 1e-9)
            .unwrap(),
    );

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "suites took {elapsed}s");
    pass(4, label);
}

#[test]
fn criterion_05_generated_smetric_invariances() {
    let label = "slot symmetry and translation/homogeneity invariances";
    let count = 10_000;

    for dim in [1, 2] {
        let sp = spec(dim, count);
        for id in [
            format!("snorm.sum_abs.d{dim}"),
            format!("snorm.example6.d{dim}"),
            format!("snorm.gen.euclidean.d{dim}"),
        ] {
            let s = resolve_id(&id).unwrap();
            let r = check_pair_symmetry(&s, &sp, 1e-9).unwrap();
            if !r.passed() {
                fail(5, label, &format!("{id}: symmetry worst {}", r.worst_margin));
            }
        }
        for id in [
            format!("smetric.gen.sum_abs.d{dim}"),
            format!("smetric.gen.example6.d{dim}"),
            format!("smetric.gen.euclidean.d{dim}"),
        ] {
            let m = resolve_id(&id).unwrap();
            let r = falsify_snorm_generated(&m, &sp).unwrap();
            if !r.passed() || r.worst_margin < -1e-9 {
                fail(
                    5,
                    label,
                    &format!("{id}: invariance worst {} witness {:?}", r.worst_margin, r.witness),
                );
            }
        }
    }
    pass(5, label);
}

#[test]
fn criterion_06_figure_boundaries() {
    let label = "plane ball boundaries at levels 5 and 20";
    let foci = |radius| {
        BallSpec::new(v2(1.0, 1.0), v2(0.0, 0.0), v2(-1.0, -1.0), radius, false).unwrap()
    };
    let cases = [
        (resolve_id("snorm.sum_abs.d2").unwrap(), foci(5.0)),
        (resolve_id("snorm.example6.d2").unwrap(), foci(20.0)),
    ];
    for (s, ball) in &cases {
        let trace = trace_boundary_2d(s, ball, 360).unwrap();
        assert_eq!(trace.vertices.len(), 360);
        for v in &trace.vertices {
            let err = (ball_value(s, ball, &v.point).unwrap() - ball.radius).abs();
            if err > 1e-8 {
                fail(6, label, &format!("vertex level error {err}"));
            }
        }
        assert!(ball_contains(s, ball, &v2(0.0, 0.0)).unwrap());
    }
    assert!(!ball_contains(&cases[0].0, &cases[0].1, &v2(3.0, 3.0)).unwrap());
    assert!(!ball_contains(&cases[1].0, &cases[1].1, &v2(2.0, 2.0)).unwrap());
    pass(6, label);
}

/// Brute-force double loop over ordered pairs, independent of the
/// setanalysis implementation path.
fn oracle_diameter(points: &[Vector], s: &StructureHandle) -> f64 {
    let zero = Vector::zeros(points[0].dim()).unwrap();
    let mut best = 0.0_f64;
    for x in points {
        for y in points {
            let v = s.eval_triple(&zero, &x.sub(y), &y.sub(x)).unwrap();
            best = best.max(v);
        }
    }
    best
}

fn oracle_chebyshev(points: &[Vector], s: &StructureHandle) -> (f64, Vec<usize>) {
    let zero = Vector::zeros(points[0].dim()).unwrap();
    let radii: Vec<f64> = points
        .iter()
        .map(|u| {
            let mut worst = 0.0_f64;
            for x in points {
                let v = s.eval_triple(&zero, &u.sub(x), &x.sub(u)).unwrap();
                worst = worst.max(v);
            }
            worst
        })
        .collect();
    let radius = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let centre = radii
        .iter()
        .enumerate()
        .filter(|(_, r)| **r == radius)
        .map(|(i, _)| i)
        .collect();
    (radius, centre)
}

#[test]
fn criterion_07_set_analysis_oracle_equivalence() {
    let label = "finite-set analysis matches the double-loop oracle";
    for case in 0..100u64 {
        let dim = (case % 3 + 1) as usize;
        let size = (case as usize * 7919) % 50 + 1;
        let sp = SampleSpec::centered(dim, 5.0, size, 1000 + case).unwrap();
        let points: Vec<Vector> = (0..size)
            .map(|i| sp.vector(&mut sp.rng_at(i as u64)))
            .collect();
        let s = sum_abs_snorm(dim).unwrap();
        let set = PointSet::new(points.clone()).unwrap();

        let diameter = s_diameter(&set, &s).unwrap();
        if diameter != oracle_diameter(&points, &s) {
            fail(7, label, &format!("diameter mismatch on case {case}"));
        }
        let cheb = s_chebyshev(&set, &s).unwrap();
        let (oracle_radius, oracle_centre) = oracle_chebyshev(&points, &s);
        if cheb.radius != oracle_radius || cheb.centre_indices != oracle_centre {
            fail(7, label, &format!("chebyshev mismatch on case {case}"));
        }
        for u in &points {
            let r_u = s_radius_at(&set, u, &s).unwrap();
            assert!(cheb.radius <= r_u && r_u <= diameter, "ordering chain");
        }
    }

    let canonical = PointSet::from_scalars(&[0.0, 1.0, 2.0]).unwrap();
    let s = sum_abs_snorm(1).unwrap();
    assert_eq!(s_diameter(&canonical, &s).unwrap(), 4.0);
    let cheb = s_chebyshev(&canonical, &s).unwrap();
    assert_eq!(cheb.radius, 2.0);
    assert_eq!(cheb.centre_indices, &[1]);
    pass(7, label);
}

#[test]
fn criterion_08_convergent_sequences_are_cauchy() {
    let label = "convergence at eps/3 implies Cauchy at eps; open-interval escape";
    let s = sum_abs_snorm(1).unwrap();
    let limits = [
        ("one_over_n", 0.0),
        ("one_over_n_closed", 0.0),
        ("one_over_n_sq", 0.0),
        ("geometric", 0.0),
        ("constant", 0.5),
        ("alternating", 0.0),
        ("linear", 0.0),
    ];
    assert_eq!(limits.len(), SEQUENCE_NAMES.len());
    let mut exercised = 0;
    for eps in [1e-2, 1e-4] {
        for (name, limit) in limits {
            let conv_seq = named_sequence(name, 10_000, eps / 3.0).unwrap();
            let conv = check_convergence(&conv_seq, &v1(limit), &s).unwrap();
            if conv.holds() {
                let cauchy_seq = conv_seq.with_eps(eps).unwrap();
                let cauchy = check_cauchy(&cauchy_seq, &s).unwrap();
                if !cauchy.holds() {
                    fail(8, label, &format!("{name} converges at {} but fails Cauchy at {eps}", eps / 3.0));
                }
                exercised += 1;
            }
        }
    }
    assert!(exercised >= 6, "only {exercised} non-vacuous cases");

    let escape = named_sequence("one_over_n", 10_000, 1e-3).unwrap();
    let report = classify_completeness_witness(&escape, &s).unwrap();
    assert!(report.cauchy.holds());
    assert_eq!(report.candidate.as_slice(), &[0.0]);
    assert!(!report.in_domain);
    pass(8, label);
}

#[test]
fn criterion_09_condition_implications_and_scale_coherence() {
    let label = "condition implications with zero violations; doubled terms";
    let snorm = sum_abs_snorm(1).unwrap();
    let norm = resolve_id("norm.euclidean.d1").unwrap();
    for name in ["half", "shifted_half", "cosine", "identity", "negation"] {
        let t = SelfMap::by_name(name, 1).unwrap();
        let sp = t.sample_spec(10_000, SEED).unwrap();
        let r = check_ns25_implies_s25(&t, &snorm, &sp).unwrap();
        if !r.passed() {
            fail(9, label, &format!("{name}: ns25->s25 witness {:?}", r.witness));
        }
        let r = check_nr25_implies_ns25(&t, &norm, &sp).unwrap();
        if !r.passed() {
            fail(9, label, &format!("{name}: nr25->ns25 witness {:?}", r.witness));
        }
    }

    // Under the S-norm generated by a norm, every term doubles exactly.
    let generated = resolve_id("snorm.gen.euclidean.d1").unwrap();
    for name in ["half", "shifted_half", "cosine", "identity", "negation"] {
        let t = SelfMap::by_name(name, 1).unwrap();
        let sp = t.sample_spec(2_000, SEED).unwrap();
        for i in 0..sp.count {
            let mut rng = sp.rng_at(i as u64);
            let x = sp.vector(&mut rng);
            let y = sp.vector(&mut rng);
            if x == y {
                continue;
            }
            let a = ns25_at(&t, &generated, &x, &y).unwrap();
            let b = nr25_at(&t, &norm, &x, &y).unwrap();
            if (a.lhs - 2.0 * b.lhs).abs() > 1e-12 {
                fail(9, label, &format!("{name}: lhs {} vs 2*{}", a.lhs, b.lhs));
            }
            for k in 0..5 {
                if (a.terms[k] - 2.0 * b.terms[k]).abs() > 1e-12 {
                    fail(9, label, &format!("{name}: term {k} mismatch"));
                }
            }
        }
    }
    pass(9, label);
}

#[test]
fn criterion_10_fixed_point_demonstrations() {
    let label = "contraction and cosine fixed points with unique basins";
    let half = SelfMap::by_name("half", 2).unwrap();
    let s2 = sum_abs_snorm(2).unwrap();
    let out = find_fixed_point(&half, &s2, 1e-6, 1_000_000).unwrap();
    assert!(out.residual <= 1e-6);
    assert!(out.point.iter().all(|c| c.abs() <= 1e-6), "origin expected");
    if out.uniqueness.basin_count != 1 {
        fail(10, label, &format!("{} basins for the halving map", out.uniqueness.basin_count));
    }

    let cosine = SelfMap::by_name("cosine", 1).unwrap();
    let s1 = sum_abs_snorm(1).unwrap();
    let out = find_fixed_point(&cosine, &s1, 1e-9, 1_000_000).unwrap();
    let mut oracle = 0.5_f64;
    for _ in 0..200 {
        oracle = oracle.cos();
    }
    assert!((out.point[0] - oracle).abs() <= 1e-6, "iteration oracle");
    assert!((out.point[0] - 0.739_085_1).abs() <= 1e-6, "pinned value");
    assert!(out.uniqueness.unique);
    pass(10, label);
}

#[test]
fn criterion_11_antipodal_strictness() {
    let label = "antipodal pair defeats all four conditions";
    let t = SelfMap::by_name("negation", 1).unwrap();
    let s = sum_abs_snorm(1).unwrap();
    let m = resolve_id("smetric.gen.sum_abs.d1").unwrap();
    let n = resolve_id("norm.euclidean.d1").unwrap();
    let d = resolve_id("metric.euclidean.d1").unwrap();
    let (x, y) = (v1(1.0), v1(-1.0));
    for (name, holds) in [
        ("ns25", ns25_at(&t, &s, &x, &y).unwrap().holds),
        ("s25", s25_at(&t, &m, &x, &y).unwrap().holds),
        ("nr25", nr25_at(&t, &n, &x, &y).unwrap().holds),
        ("r25", r25_at(&t, &d, &x, &y).unwrap().holds),
    ] {
        if holds {
            fail(11, label, &format!("{name} held at the antipodal pair"));
        }
    }
    pass(11, label);
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_snormed"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

#[test]
fn criterion_12_byte_identical_reports() {
    let label = "same seed, byte-identical JSON";
    let csv = {
        let mut p = std::env::temp_dir();
        p.push(format!("snormed-acceptance-{}.csv", std::process::id()));
        std::fs::write(&p, "x1\n0\n1\n2\n").unwrap();
        p
    };
    let csv_path = csv.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["axioms", "snorm.example6.d1", "--samples", "500", "--seed", "7"],
        vec!["axioms", "smetric.discrete.d1", "--falsify", "snorm-generated", "--seed", "9"],
        vec!["fixpoint", "half", "--snorm", "snorm.sum_abs.d2", "--seed", "3"],
        vec!["rhoades", "half", "--condition", "ns25", "--samples", "1000", "--seed", "5"],
        vec!["sets", csv_path, "--snorm", "snorm.sum_abs.d1"],
        vec!["seq", "one_over_n", "--eps", "1e-3", "--horizon", "2000"],
        vec!["ball", "--preset", "fig1b", "--resolution", "90"],
    ];
    for args in &commands {
        let (code_a, bytes_a) = run_cli(args);
        let (code_b, bytes_b) = run_cli(args);
        assert_eq!(code_a, code_b, "{args:?}");
        if bytes_a != bytes_b {
            fail(12, label, &format!("outputs differ for {args:?}"));
        }
        assert!(!bytes_a.is_empty());
        let _: Value = serde_json::from_slice(&bytes_a).expect("stdout is JSON");
    }
    std::fs::remove_file(&csv).ok();
    pass(12, label);
}

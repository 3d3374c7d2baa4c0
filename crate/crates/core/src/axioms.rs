//! Sampling-based axiom falsification with replayable witnesses.
//!
//! Each check runs a short list of canned probes first and then a seeded
//! random sample stream, so the classic counterexamples reproduce exactly
//! regardless of seed. A PASS verdict means "no violation found in the
//! sampled cases", never "axiom proven": sampling cannot verify a
//! universally quantified statement.
//!
//! Margins are normalized slacks. For an inequality lhs <= rhs the slack is
//! (rhs - lhs) / max(1, |lhs|, |rhs|); equality clauses use the negated
//! normalized difference, with an absolute floor of [`ABS_FLOOR`] to absorb
//! last-ulp noise; strict clauses shift the slack by 2 * tol so that a
//! passing case clears the tolerance with margin. A case fails when its
//! slack drops below -tol, and the first failing case (canned probes first,
//! then lowest sample index) becomes the report witness.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::Result;
use crate::error::CoreError;
use crate::sampling::SampleSpec;
use crate::structures::{StructureHandle, StructureKind, expect_kind};
use crate::vector::Vector;

/// Absolute floor under which equality differences count as zero.
pub const ABS_FLOOR: f64 = 1e-12;

/// Default relative tolerance for checks that do not take one.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The concrete case that violated a property.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub points: Vec<Vector>,
    pub scalars: Vec<f64>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "points [")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")?;
        if !self.scalars.is_empty() {
            write!(f, ", scalars {:?}", self.scalars)?;
        }
        Ok(())
    }
}

/// Outcome of one sampled property check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub property_id: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub samples_used: usize,
    pub seed: u64,
    pub worst_margin: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn scale2(a: f64, b: f64) -> f64 {
    1.0_f64.max(a.abs()).max(b.abs())
}

/// Slack of the inequality lhs <= rhs.
fn le_slack(lhs: f64, rhs: f64) -> f64 {
    (rhs - lhs) / scale2(lhs, rhs)
}

/// Slack of the equality a = b, floored against last-ulp noise.
fn eq_slack(a: f64, b: f64) -> f64 {
    let excess = ((a - b).abs() - ABS_FLOOR).max(0.0);
    -(excess / scale2(a, b))
}

/// Slack of the sign condition v >= 0.
fn sign_slack(v: f64) -> f64 {
    v / scale2(v, 0.0)
}

/// Slack of the strict condition v > 0; passing cases clear tol with margin.
fn strict_pos_slack(v: f64, tol: f64) -> f64 {
    v / scale2(v, 0.0) - 2.0 * tol
}

/// Slack of the exact condition v == 0; any nonzero value fails.
fn exact_zero_slack(v: f64, tol: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        -2.0 * tol - v.abs() / scale2(v, 0.0)
    }
}

struct Builder {
    property_id: &'static str,
    seed: u64,
    tol: f64,
    samples_used: usize,
    worst_margin: f64,
    witness: Option<Witness>,
}

impl Builder {
    fn new(property_id: &'static str, seed: u64, tol: f64) -> Self {
        Builder {
            property_id,
            seed,
            tol,
            samples_used: 0,
            worst_margin: f64::INFINITY,
            witness: None,
        }
    }

    fn observe(&mut self, slack: f64, points: &[&Vector], scalars: &[f64]) {
        self.samples_used += 1;
        if slack < self.worst_margin {
            self.worst_margin = slack;
        }
        if slack < -self.tol && self.witness.is_none() {
            self.witness = Some(Witness {
                points: points.iter().map(|p| (*p).clone()).collect(),
                scalars: scalars.to_vec(),
            });
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            property_id: self.property_id.to_string(),
            verdict: if self.witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness: self.witness,
            samples_used: self.samples_used,
            seed: self.seed,
            worst_margin: self.worst_margin,
        }
    }
}

fn check_spec(s: &StructureHandle, spec: &SampleSpec) -> Result<()> {
    if spec.dim() != s.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: s.dim(),
            found: spec.dim(),
        });
    }
    Ok(())
}

/// k times the first basis vector.
fn e1(dim: usize, k: f64) -> Vector {
    let mut coords = vec![0.0; dim];
    coords[0] = k;
    Vector::new(coords).expect("finite")
}

/// Positivity and definiteness-at-zero shared by NS1 and NG1.
fn positivity_report(
    s: &StructureHandle,
    spec: &SampleSpec,
    tol: f64,
    id: &'static str,
) -> CheckReport {
    let mut b = Builder::new(id, spec.seed, tol);
    let zero = Vector::zeros(s.dim()).expect("dim checked");
    // Zero triple must vanish exactly.
    let v0 = s.raw3(&zero, &zero, &zero);
    b.observe(exact_zero_slack(v0, tol), &[&zero, &zero, &zero], &[]);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let v = s.raw3(&x, &y, &z);
        let slack = if x.is_zero() && y.is_zero() && z.is_zero() {
            exact_zero_slack(v, tol)
        } else {
            sign_slack(v).min(strict_pos_slack(v, tol))
        };
        b.observe(slack, &[&x, &y, &z], &[]);
    }
    b.finish()
}

/// Absolute homogeneity over triples, shared by NS2 and NG3.
fn homogeneity_report(
    s: &StructureHandle,
    spec: &SampleSpec,
    tol: f64,
    id: &'static str,
) -> CheckReport {
    let mut b = Builder::new(id, spec.seed, tol);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let lambda = spec.scalar(&mut rng);
        let scaled = s.raw3(&x.scale(lambda), &y.scale(lambda), &z.scale(lambda));
        let reference = lambda.abs() * s.raw3(&x, &y, &z);
        b.observe(eq_slack(scaled, reference), &[&x, &y, &z], &[lambda]);
    }
    b.finish()
}

/// Checks the three S-norm axioms: positivity with definiteness at the zero
/// triple, absolute homogeneity, and the rotated triangle inequality
/// ||x+x', y+y', z+z'|| <= ||0,x,z'|| + ||0,y,x'|| + ||0,z,y'||.
///
/// The right side pairs primed and unprimed slots in exactly this rotation;
/// no permutation symmetry of the pairing is assumed.
pub fn check_snorm(s: &StructureHandle, spec: &SampleSpec, tol: f64) -> Result<Vec<CheckReport>> {
    expect_kind(s, StructureKind::Snorm)?;
    check_spec(s, spec)?;
    let ns1 = positivity_report(s, spec, tol, "NS1");
    let ns2 = homogeneity_report(s, spec, tol, "NS2");

    let mut b = Builder::new("NS3", spec.seed, tol);
    let zero = Vector::zeros(s.dim())?;
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let xp = spec.vector(&mut rng);
        let yp = spec.vector(&mut rng);
        let zp = spec.vector(&mut rng);
        let lhs = s.raw3(&x.add(&xp), &y.add(&yp), &z.add(&zp));
        let rhs = s.raw3(&zero, &x, &zp) + s.raw3(&zero, &y, &xp) + s.raw3(&zero, &z, &yp);
        b.observe(le_slack(lhs, rhs), &[&x, &y, &z, &xp, &yp, &zp], &[]);
    }
    Ok(vec![ns1, ns2, b.finish()])
}

/// Checks the two S-metric axioms: vanishing exactly on equal triples, and
/// the tetrahedral inequality S(x,y,z) <= S(x,x,a) + S(y,y,a) + S(z,z,a).
pub fn check_smetric(s: &StructureHandle, spec: &SampleSpec, tol: f64) -> Result<Vec<CheckReport>> {
    expect_kind(s, StructureKind::Smetric)?;
    check_spec(s, spec)?;

    let mut s1 = Builder::new("S1", spec.seed, tol);
    let zero = Vector::zeros(s.dim())?;
    let half = e1(s.dim(), 0.5);
    for probe in [&zero, &half] {
        let v = s.raw3(probe, probe, probe);
        s1.observe(exact_zero_slack(v, tol), &[probe, probe, probe], &[]);
    }
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        // Both directions: equal triples vanish exactly, others stay positive.
        let equal = s.raw3(&x, &x, &x);
        s1.observe(exact_zero_slack(equal, tol), &[&x, &x, &x], &[]);
        if !(x == y && y == z) {
            let v = s.raw3(&x, &y, &z);
            s1.observe(
                sign_slack(v).min(strict_pos_slack(v, tol)),
                &[&x, &y, &z],
                &[],
            );
        }
    }

    let mut s2 = Builder::new("S2", spec.seed, tol);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let a = spec.vector(&mut rng);
        let lhs = s.raw3(&x, &y, &z);
        let rhs = s.raw3(&x, &x, &a) + s.raw3(&y, &y, &a) + s.raw3(&z, &z, &a);
        s2.observe(le_slack(lhs, rhs), &[&x, &y, &z, &a], &[]);
    }
    Ok(vec![s1.finish(), s2.finish()])
}

/// Checks the four norm axioms.
pub fn check_norm(n: &StructureHandle, spec: &SampleSpec, tol: f64) -> Result<Vec<CheckReport>> {
    expect_kind(n, StructureKind::Norm)?;
    check_spec(n, spec)?;
    let zero = Vector::zeros(n.dim())?;
    let plus = e1(n.dim(), 1.0);
    let minus = e1(n.dim(), -1.0);

    let mut n1 = Builder::new("N1", spec.seed, tol);
    for probe in [&zero, &plus, &minus] {
        n1.observe(sign_slack(n.raw1(probe)), &[probe], &[]);
    }
    let mut n2 = Builder::new("N2", spec.seed, tol);
    n2.observe(exact_zero_slack(n.raw1(&zero), tol), &[&zero], &[]);
    let mut n3 = Builder::new("N3", spec.seed, tol);
    let mut n4 = Builder::new("N4", spec.seed, tol);

    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let lambda = spec.scalar(&mut rng);

        n1.observe(sign_slack(n.raw1(&x)), &[&x], &[]);
        if !x.is_zero() {
            let v = n.raw1(&x);
            n2.observe(strict_pos_slack(v, tol), &[&x], &[]);
        }
        let scaled = n.raw1(&x.scale(lambda));
        n3.observe(eq_slack(scaled, lambda.abs() * n.raw1(&x)), &[&x], &[lambda]);
        let lhs = n.raw1(&x.add(&y));
        n4.observe(le_slack(lhs, n.raw1(&x) + n.raw1(&y)), &[&x, &y], &[]);
    }
    Ok(vec![n1.finish(), n2.finish(), n3.finish(), n4.finish()])
}

/// Checks the five G-norm axioms. An S-norm handle may be probed too.
///
/// NG2 compares all six slot permutations; NG5 is the collapsing inequality
/// ||x, y, z|| >= ||x+y, 0, z||, probed first at the canned triple
/// (e1, 5 e1, 0) so the classic violation reproduces regardless of seed.
pub fn check_gnorm(g: &StructureHandle, spec: &SampleSpec, tol: f64) -> Result<Vec<CheckReport>> {
    if g.kind() != StructureKind::Gnorm && g.kind() != StructureKind::Snorm {
        return Err(CoreError::KindMismatch {
            expected: StructureKind::Gnorm,
            found: g.kind(),
        });
    }
    check_spec(g, spec)?;
    let zero = Vector::zeros(g.dim())?;

    let ng1 = positivity_report(g, spec, tol, "NG1");

    let mut ng2 = Builder::new("NG2", spec.seed, tol);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let base = g.raw3(&x, &y, &z);
        let perms = [
            g.raw3(&x, &z, &y),
            g.raw3(&y, &x, &z),
            g.raw3(&y, &z, &x),
            g.raw3(&z, &x, &y),
            g.raw3(&z, &y, &x),
        ];
        let slack = perms
            .iter()
            .map(|p| eq_slack(base, *p))
            .fold(f64::INFINITY, f64::min);
        ng2.observe(slack, &[&x, &y, &z], &[]);
    }

    let ng3 = homogeneity_report(g, spec, tol, "NG3");

    let mut ng4 = Builder::new("NG4", spec.seed, tol);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let xp = spec.vector(&mut rng);
        let yp = spec.vector(&mut rng);
        let zp = spec.vector(&mut rng);
        let lhs = g.raw3(&x.add(&xp), &y.add(&yp), &z.add(&zp));
        let rhs = g.raw3(&x, &y, &z) + g.raw3(&xp, &yp, &zp);
        ng4.observe(le_slack(lhs, rhs), &[&x, &y, &z, &xp, &yp, &zp], &[]);
    }

    let mut ng5 = Builder::new("NG5", spec.seed, tol);
    let (cx, cy) = (e1(g.dim(), 1.0), e1(g.dim(), 5.0));
    let collapse_slack = |x: &Vector, y: &Vector, z: &Vector| {
        le_slack(g.raw3(&x.add(y), &zero, z), g.raw3(x, y, z))
    };
    ng5.observe(collapse_slack(&cx, &cy, &zero), &[&cx, &cy, &zero], &[]);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        ng5.observe(collapse_slack(&x, &y, &z), &[&x, &y, &z], &[]);
    }

    Ok(vec![ng1, ng2.finish(), ng3, ng4.finish(), ng5.finish()])
}

/// Checks the slot symmetry ||0, x-y, y-x|| = ||0, y-x, x-y||.
pub fn check_pair_symmetry(
    s: &StructureHandle,
    spec: &SampleSpec,
    tol: f64,
) -> Result<CheckReport> {
    expect_kind(s, StructureKind::Snorm)?;
    check_spec(s, spec)?;
    let zero = Vector::zeros(s.dim())?;
    let mut b = Builder::new("PAIR_SYMMETRY", spec.seed, tol);
    // x = y: both orderings evaluate the zero triple.
    b.observe(
        eq_slack(s.raw3(&zero, &zero, &zero), s.raw3(&zero, &zero, &zero)),
        &[&zero, &zero],
        &[],
    );
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let d = x.sub(&y);
        let nd = y.sub(&x);
        let slack = eq_slack(s.raw3(&zero, &d, &nd), s.raw3(&zero, &nd, &d));
        b.observe(slack, &[&x, &y], &[]);
    }
    Ok(b.finish())
}

/// Tests the necessary condition for an S-norm to be generated by a norm:
/// additive slot decomposition ||x,y,z|| = ||x,0,0|| + ||0,y,0|| + ||0,0,z||.
///
/// A FAIL report proves the S-norm is not norm-generated and carries the
/// witness; a PASS is inconclusive. The canned probe (e1, e1, 0) runs first.
pub fn falsify_norm_generated(s: &StructureHandle, spec: &SampleSpec) -> Result<CheckReport> {
    expect_kind(s, StructureKind::Snorm)?;
    check_spec(s, spec)?;
    let tol = DEFAULT_TOL;
    let zero = Vector::zeros(s.dim())?;
    let mut b = Builder::new("NORM_GENERATED", spec.seed, tol);
    let decomposition_slack = |x: &Vector, y: &Vector, z: &Vector| {
        let whole = s.raw3(x, y, z);
        let split = s.raw3(x, &zero, &zero) + s.raw3(&zero, y, &zero) + s.raw3(&zero, &zero, z);
        eq_slack(whole, split)
    };
    let one = e1(s.dim(), 1.0);
    b.observe(decomposition_slack(&one, &one, &zero), &[&one, &one, &zero], &[]);
    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        b.observe(decomposition_slack(&x, &y, &z), &[&x, &y, &z], &[]);
    }
    Ok(b.finish())
}

/// Tests two necessary conditions for an S-metric to be generated by an
/// S-norm: absolute homogeneity S(lx, ly, lz) = |l| S(x, y, z) with
/// |l| not in {0, 1}, and translation invariance
/// S(x+a, y+a, z+a) = S(x, y, z).
///
/// A FAIL report proves the S-metric is not S-norm-generated; a PASS is
/// inconclusive. The canned probe is lambda = 2 at (0, 0, e1).
pub fn falsify_snorm_generated(m: &StructureHandle, spec: &SampleSpec) -> Result<CheckReport> {
    expect_kind(m, StructureKind::Smetric)?;
    check_spec(m, spec)?;
    let tol = DEFAULT_TOL;
    let zero = Vector::zeros(m.dim())?;
    let mut b = Builder::new("SNORM_GENERATED", spec.seed, tol);

    let homogeneity_slack = |lambda: f64, x: &Vector, y: &Vector, z: &Vector| {
        let scaled = m.raw3(&x.scale(lambda), &y.scale(lambda), &z.scale(lambda));
        eq_slack(scaled, lambda.abs() * m.raw3(x, y, z))
    };
    let one = e1(m.dim(), 1.0);
    b.observe(homogeneity_slack(2.0, &zero, &zero, &one), &[&zero, &zero, &one], &[2.0]);

    for i in 0..spec.count {
        let mut rng = spec.rng_at(i as u64);
        let x = spec.vector(&mut rng);
        let y = spec.vector(&mut rng);
        let z = spec.vector(&mut rng);
        let lambda = spec.scalar_excluding_unit(&mut rng);
        b.observe(homogeneity_slack(lambda, &x, &y, &z), &[&x, &y, &z], &[lambda]);

        let a = spec.vector(&mut rng);
        let translated = m.raw3(&x.add(&a), &y.add(&a), &z.add(&a));
        b.observe(
            eq_slack(translated, m.raw3(&x, &y, &z)),
            &[&x, &y, &z, &a],
            &[],
        );
    }
    Ok(b.finish())
}

/// Recomputes the slack of a property at a witness case.
///
/// A FAIL witness is valid when its replayed slack stays below -tol.
pub fn replay(
    s: &StructureHandle,
    property_id: &str,
    witness: &Witness,
    tol: f64,
) -> Result<f64> {
    let pts = &witness.points;
    let point = |i: usize| -> Result<&Vector> {
        pts.get(i).ok_or(CoreError::BadSampleSpec {
            reason: "witness does not carry enough points",
        })
    };
    let zero = Vector::zeros(s.dim())?;
    let slack = match property_id {
        "NS1" | "NG1" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            let v = s.eval_triple(x, y, z)?;
            if x.is_zero() && y.is_zero() && z.is_zero() {
                exact_zero_slack(v, tol)
            } else {
                sign_slack(v).min(strict_pos_slack(v, tol))
            }
        }
        "S1" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            let v = s.eval_triple(x, y, z)?;
            if x == y && y == z {
                exact_zero_slack(v, tol)
            } else {
                sign_slack(v).min(strict_pos_slack(v, tol))
            }
        }
        "NS2" | "NG3" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            let lambda = witness.scalars[0];
            let scaled = s.eval_triple(&x.scale(lambda), &y.scale(lambda), &z.scale(lambda))?;
            eq_slack(scaled, lambda.abs() * s.eval_triple(x, y, z)?)
        }
        "NS3" => {
            let lhs = s.eval_triple(
                &point(0)?.add(point(3)?),
                &point(1)?.add(point(4)?),
                &point(2)?.add(point(5)?),
            )?;
            let rhs = s.eval_triple(&zero, point(0)?, point(5)?)?
                + s.eval_triple(&zero, point(1)?, point(3)?)?
                + s.eval_triple(&zero, point(2)?, point(4)?)?;
            le_slack(lhs, rhs)
        }
        "S2" => {
            let (x, y, z, a) = (point(0)?, point(1)?, point(2)?, point(3)?);
            let lhs = s.eval_triple(x, y, z)?;
            let rhs = s.eval_triple(x, x, a)? + s.eval_triple(y, y, a)? + s.eval_triple(z, z, a)?;
            le_slack(lhs, rhs)
        }
        "N1" => sign_slack(s.eval_point(point(0)?)?),
        "N2" => {
            let x = point(0)?;
            let v = s.eval_point(x)?;
            if x.is_zero() {
                exact_zero_slack(v, tol)
            } else {
                strict_pos_slack(v, tol)
            }
        }
        "N3" => {
            let x = point(0)?;
            let lambda = witness.scalars[0];
            eq_slack(
                s.eval_point(&x.scale(lambda))?,
                lambda.abs() * s.eval_point(x)?,
            )
        }
        "N4" => {
            let (x, y) = (point(0)?, point(1)?);
            le_slack(
                s.eval_point(&x.add(y))?,
                s.eval_point(x)? + s.eval_point(y)?,
            )
        }
        "NG2" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            let base = s.eval_triple(x, y, z)?;
            [
                s.eval_triple(x, z, y)?,
                s.eval_triple(y, x, z)?,
                s.eval_triple(y, z, x)?,
                s.eval_triple(z, x, y)?,
                s.eval_triple(z, y, x)?,
            ]
            .iter()
            .map(|p| eq_slack(base, *p))
            .fold(f64::INFINITY, f64::min)
        }
        "NG4" => {
            let lhs = s.eval_triple(
                &point(0)?.add(point(3)?),
                &point(1)?.add(point(4)?),
                &point(2)?.add(point(5)?),
            )?;
            let rhs = s.eval_triple(point(0)?, point(1)?, point(2)?)?
                + s.eval_triple(point(3)?, point(4)?, point(5)?)?;
            le_slack(lhs, rhs)
        }
        "NG5" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            le_slack(
                s.eval_triple(&x.add(y), &zero, z)?,
                s.eval_triple(x, y, z)?,
            )
        }
        "PAIR_SYMMETRY" => {
            let (x, y) = (point(0)?, point(1)?);
            let d = x.sub(y);
            let nd = y.sub(x);
            eq_slack(
                s.eval_triple(&zero, &d, &nd)?,
                s.eval_triple(&zero, &nd, &d)?,
            )
        }
        "NORM_GENERATED" => {
            let (x, y, z) = (point(0)?, point(1)?, point(2)?);
            let whole = s.eval_triple(x, y, z)?;
            let split = s.eval_triple(x, &zero, &zero)?
                + s.eval_triple(&zero, y, &zero)?
                + s.eval_triple(&zero, &zero, z)?;
            eq_slack(whole, split)
        }
        "SNORM_GENERATED" => {
            if let Some(&lambda) = witness.scalars.first() {
                let (x, y, z) = (point(0)?, point(1)?, point(2)?);
                let scaled =
                    s.eval_triple(&x.scale(lambda), &y.scale(lambda), &z.scale(lambda))?;
                eq_slack(scaled, lambda.abs() * s.eval_triple(x, y, z)?)
            } else {
                let (x, y, z, a) = (point(0)?, point(1)?, point(2)?, point(3)?);
                let translated = s.eval_triple(&x.add(a), &y.add(a), &z.add(a))?;
                eq_slack(translated, s.eval_triple(x, y, z)?)
            }
        }
        _ => {
            return Err(CoreError::UnknownStructure {
                id: property_id.to_string(),
            });
        }
    };
    Ok(slack)
}

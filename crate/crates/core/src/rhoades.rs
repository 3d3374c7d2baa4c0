//! Rhoades-type contractive conditions, implication checks between them,
//! and a numerical fixed-point search.
//!
//! The four condition evaluators share one shape: a displacement of the
//! image pair must stay strictly below the maximum of five reference
//! quantities, for each pair of distinct points. Verdicts record all five
//! terms so reports can show exactly which bound was active.
//!
//! The fixed-point search is a demonstration tool, not a certificate: it
//! iterates the map from multiple starts with a grid-refinement fallback
//! and scans a final grid for second basins.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::Result;
use crate::axioms::{CheckReport, Verdict, Witness};
use crate::error::CoreError;
use crate::generators::{smetric_from_snorm, snorm_from_norm};
use crate::sampling::SampleSpec;
use crate::structures::{StructureHandle, StructureKind, expect_kind};
use crate::vector::Vector;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use crate::float::FloatShim as _;

type MapFn = Arc<dyn Fn(&Vector) -> Vector + Send + Sync>;

/// A pure self-map on a closed box domain.
#[derive(Clone)]
pub struct SelfMap {
    f: MapFn,
    low: Vector,
    high: Vector,
    name: String,
}

impl SelfMap {
    pub fn new<F>(name: &str, low: Vector, high: Vector, f: F) -> Result<Self>
    where
        F: Fn(&Vector) -> Vector + Send + Sync + 'static,
    {
        if low.dim() != high.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: low.dim(),
                found: high.dim(),
            });
        }
        if low.iter().zip(high.iter()).any(|(lo, hi)| lo > hi) {
            return Err(CoreError::BadSampleSpec {
                reason: "domain_low must be componentwise <= domain_high",
            });
        }
        Ok(SelfMap {
            f: Arc::new(f),
            low,
            high,
            name: name.to_string(),
        })
    }

    pub fn dim(&self) -> usize {
        self.low.dim()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain_low(&self) -> &Vector {
        &self.low
    }

    pub fn domain_high(&self) -> &Vector {
        &self.high
    }

    /// Exact box membership.
    pub fn contains(&self, x: &Vector) -> bool {
        x.dim() == self.dim()
            && self
                .low
                .iter()
                .zip(self.high.iter())
                .zip(x.iter())
                .all(|((lo, hi), c)| lo <= c && c <= hi)
    }

    /// Applies the map to a domain point.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if !self.contains(x) {
            return Err(CoreError::OutsideDomain { point: x.clone() });
        }
        let y = (self.f)(x);
        debug_assert_eq!(y.dim(), self.dim());
        Ok(y)
    }

    /// A sampling box covering the whole domain.
    pub fn sample_spec(&self, count: usize, seed: u64) -> Result<SampleSpec> {
        SampleSpec::new(self.low.clone(), self.high.clone(), count, seed, 10.0)
    }

    /// Sampled self-mapping pre-check: images of sampled domain points and
    /// of the box corners must stay inside the box.
    pub fn check_self_mapping(&self, spec: &SampleSpec) -> Result<()> {
        for corner in self.corners(64) {
            let image = (self.f)(&corner);
            if !self.contains(&image) {
                return Err(CoreError::NotSelfMapping {
                    point: corner,
                    image,
                });
            }
        }
        for i in 0..spec.count {
            let mut rng = spec.rng_at(i as u64);
            let x = spec.vector(&mut rng);
            let image = (self.f)(&x);
            if !self.contains(&image) {
                return Err(CoreError::NotSelfMapping { point: x, image });
            }
        }
        Ok(())
    }

    /// Box centroid.
    fn centroid(&self) -> Vector {
        Vector::mean(&[self.low.clone(), self.high.clone()]).expect("two points")
    }

    /// Up to `max` corners of the box, in binary-counter order.
    fn corners(&self, max: usize) -> Vec<Vector> {
        let n = self.dim();
        let total = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
        let take = total.min(max);
        let mut out = Vec::with_capacity(take);
        for mask in 0..take {
            let coords = (0..n)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        self.high[j]
                    } else {
                        self.low[j]
                    }
                })
                .collect();
            out.push(Vector::new(coords).expect("finite bounds"));
        }
        out
    }

    /// Built-in map corpus. Dimension-parametric: `half`, `shifted_half`,
    /// `identity`, and `negation` live on [-1, 1]^n, `cosine` on [0, 1]^n.
    pub fn by_name(name: &str, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(CoreError::InvalidDimension);
        }
        let ones = Vector::new(vec![1.0; dim])?;
        let zero = Vector::zeros(dim)?;
        match name {
            "half" => SelfMap::new("half", ones.neg(), ones, |x: &Vector| x.scale(0.5)),
            "shifted_half" => SelfMap::new("shifted_half", ones.neg(), ones, |x: &Vector| {
                Vector::new(x.iter().map(|c| (c + 0.5) / 2.0).collect()).expect("finite")
            }),
            "cosine" => SelfMap::new("cosine", zero, ones, |x: &Vector| {
                Vector::new(x.iter().map(|c| c.cos()).collect()).expect("finite")
            }),
            "identity" => SelfMap::new("identity", ones.neg(), ones, |x: &Vector| x.clone()),
            "negation" => SelfMap::new("negation", ones.neg(), ones, |x: &Vector| x.neg()),
            _ => Err(CoreError::UnknownStructure {
                id: name.to_string(),
            }),
        }
    }
}

pub const MAP_NAMES: &[&str] = &["half", "shifted_half", "cosine", "identity", "negation"];

/// One evaluation of a Rhoades-type condition at a pair.
///
/// `holds` is the exact strict comparison lhs < rhs; `margin` is rhs - lhs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub lhs: f64,
    pub rhs: f64,
    pub terms: [f64; 5],
    pub holds: bool,
    pub margin: f64,
}

impl ConditionVerdict {
    fn from_parts(lhs: f64, terms: [f64; 5]) -> Self {
        let rhs = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        ConditionVerdict {
            lhs,
            rhs,
            terms,
            holds: lhs < rhs,
            margin: rhs - lhs,
        }
    }
}

fn check_pair_preconditions(t: &SelfMap, dim: usize, x: &Vector, y: &Vector) -> Result<()> {
    if t.dim() != dim {
        return Err(CoreError::DimensionMismatch {
            expected: dim,
            found: t.dim(),
        });
    }
    if x == y {
        return Err(CoreError::ExcludedPair);
    }
    if !t.contains(x) {
        return Err(CoreError::OutsideDomain { point: x.clone() });
    }
    if !t.contains(y) {
        return Err(CoreError::OutsideDomain { point: y.clone() });
    }
    Ok(())
}

/// The S-norm condition: ||0, Tx-Ty, Ty-Tx|| strictly below the max of the
/// five displacement terms built from x, y, Tx, Ty.
pub fn ns25_at(
    t: &SelfMap,
    s: &StructureHandle,
    x: &Vector,
    y: &Vector,
) -> Result<ConditionVerdict> {
    expect_kind(s, StructureKind::Snorm)?;
    check_pair_preconditions(t, s.dim(), x, y)?;
    let tx = t.apply(x)?;
    let ty = t.apply(y)?;
    let lhs = s.pair_distance(&tx, &ty)?;
    let terms = [
        s.pair_distance(x, y)?,
        s.pair_distance(&tx, x)?,
        s.pair_distance(&ty, y)?,
        s.pair_distance(&ty, x)?,
        s.pair_distance(&tx, y)?,
    ];
    Ok(ConditionVerdict::from_parts(lhs, terms))
}

/// The S-metric condition: S(Tx, Tx, Ty) strictly below the max of the five
/// reference values.
pub fn s25_at(
    t: &SelfMap,
    m: &StructureHandle,
    x: &Vector,
    y: &Vector,
) -> Result<ConditionVerdict> {
    expect_kind(m, StructureKind::Smetric)?;
    check_pair_preconditions(t, m.dim(), x, y)?;
    let tx = t.apply(x)?;
    let ty = t.apply(y)?;
    let lhs = m.eval_triple(&tx, &tx, &ty)?;
    let terms = [
        m.eval_triple(x, x, y)?,
        m.eval_triple(&tx, &tx, x)?,
        m.eval_triple(&ty, &ty, y)?,
        m.eval_triple(&ty, &ty, x)?,
        m.eval_triple(&tx, &tx, y)?,
    ];
    Ok(ConditionVerdict::from_parts(lhs, terms))
}

/// The norm condition: ||Tx - Ty|| strictly below the max of the five
/// difference norms.
pub fn nr25_at(
    t: &SelfMap,
    n: &StructureHandle,
    x: &Vector,
    y: &Vector,
) -> Result<ConditionVerdict> {
    expect_kind(n, StructureKind::Norm)?;
    check_pair_preconditions(t, n.dim(), x, y)?;
    let tx = t.apply(x)?;
    let ty = t.apply(y)?;
    let lhs = n.eval_point(&tx.sub(&ty))?;
    let terms = [
        n.eval_point(&x.sub(y))?,
        n.eval_point(&x.sub(&tx))?,
        n.eval_point(&y.sub(&ty))?,
        n.eval_point(&x.sub(&ty))?,
        n.eval_point(&y.sub(&tx))?,
    ];
    Ok(ConditionVerdict::from_parts(lhs, terms))
}

/// The metric condition: d(Tx, Ty) strictly below the max of the five
/// reference distances.
pub fn r25_at(
    t: &SelfMap,
    d: &StructureHandle,
    x: &Vector,
    y: &Vector,
) -> Result<ConditionVerdict> {
    expect_kind(d, StructureKind::Metric)?;
    check_pair_preconditions(t, d.dim(), x, y)?;
    let tx = t.apply(x)?;
    let ty = t.apply(y)?;
    let lhs = d.eval_pair(&tx, &ty)?;
    let terms = [
        d.eval_pair(x, y)?,
        d.eval_pair(x, &tx)?,
        d.eval_pair(y, &ty)?,
        d.eval_pair(x, &ty)?,
        d.eval_pair(y, &tx)?,
    ];
    Ok(ConditionVerdict::from_parts(lhs, terms))
}

fn sample_distinct_pair(spec: &SampleSpec, index: u64) -> (Vector, Vector) {
    let mut rng = spec.rng_at(index);
    let x = spec.vector(&mut rng);
    loop {
        let y = spec.vector(&mut rng);
        if y != x {
            return (x, y);
        }
    }
}

fn check_spec_in_domain(t: &SelfMap, spec: &SampleSpec) -> Result<()> {
    if spec.dim() != t.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: t.dim(),
            found: spec.dim(),
        });
    }
    let inside = t.contains(spec.box_low()) && t.contains(spec.box_high());
    if !inside {
        return Err(CoreError::BadSampleSpec {
            reason: "sampling box must lie inside the map domain",
        });
    }
    Ok(())
}

fn implication_report(
    id: &'static str,
    spec: &SampleSpec,
    mut premise_conclusion: impl FnMut(&Vector, &Vector) -> Result<Option<ConditionVerdict>>,
) -> Result<CheckReport> {
    let tol = crate::axioms::DEFAULT_TOL;
    let mut worst = f64::INFINITY;
    let mut witness = None;
    for i in 0..spec.count {
        let (x, y) = sample_distinct_pair(spec, i as u64);
        if let Some(conclusion) = premise_conclusion(&x, &y)? {
            let scale = 1.0_f64.max(conclusion.lhs.abs()).max(conclusion.rhs.abs());
            let slack = if conclusion.holds {
                conclusion.margin / scale
            } else {
                -(conclusion.margin.abs() / scale) - 2.0 * tol
            };
            if slack < worst {
                worst = slack;
            }
            if !conclusion.holds && witness.is_none() {
                witness = Some(Witness {
                    points: vec![x.clone(), y.clone()],
                    scalars: vec![],
                });
            }
        }
    }
    Ok(CheckReport {
        property_id: id.to_string(),
        verdict: if witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        witness,
        samples_used: spec.count,
        seed: spec.seed,
        worst_margin: worst,
    })
}

/// Over sampled distinct pairs where the S-norm condition holds, asserts
/// that the S-metric condition holds under the generated S-metric.
pub fn check_ns25_implies_s25(
    t: &SelfMap,
    s: &StructureHandle,
    spec: &SampleSpec,
) -> Result<CheckReport> {
    expect_kind(s, StructureKind::Snorm)?;
    check_spec_in_domain(t, spec)?;
    let m = smetric_from_snorm(s)?;
    implication_report("NS25_IMPLIES_S25", spec, |x, y| {
        let premise = ns25_at(t, s, x, y)?;
        if premise.holds {
            Ok(Some(s25_at(t, &m, x, y)?))
        } else {
            Ok(None)
        }
    })
}

/// Over sampled distinct pairs where the norm condition holds, asserts that
/// the S-norm condition holds under the generated S-norm.
pub fn check_nr25_implies_ns25(
    t: &SelfMap,
    n: &StructureHandle,
    spec: &SampleSpec,
) -> Result<CheckReport> {
    expect_kind(n, StructureKind::Norm)?;
    check_spec_in_domain(t, spec)?;
    let s = snorm_from_norm(n)?;
    implication_report("NR25_IMPLIES_NS25", spec, |x, y| {
        let premise = nr25_at(t, n, x, y)?;
        if premise.holds {
            Ok(Some(ns25_at(t, &s, x, y)?))
        } else {
            Ok(None)
        }
    })
}

/// Which condition a sampled scan evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionKind {
    Ns25,
    S25,
    Nr25,
    R25,
}

impl ConditionKind {
    pub fn required_structure(self) -> StructureKind {
        match self {
            ConditionKind::Ns25 => StructureKind::Snorm,
            ConditionKind::S25 => StructureKind::Smetric,
            ConditionKind::Nr25 => StructureKind::Norm,
            ConditionKind::R25 => StructureKind::Metric,
        }
    }
}

/// One recorded violation of a sampled condition scan.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionViolation {
    pub x: Vector,
    pub y: Vector,
    pub verdict: ConditionVerdict,
}

/// Result of sampling a condition over distinct pairs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionScan {
    pub condition: ConditionKind,
    pub samples: usize,
    pub holds: usize,
    pub pass_rate: f64,
    /// At most the first ten violations, in sample order.
    pub violations: Vec<ConditionViolation>,
}

/// Samples a condition over distinct pairs from the sampling box.
pub fn scan_condition(
    t: &SelfMap,
    structure: &StructureHandle,
    condition: ConditionKind,
    spec: &SampleSpec,
) -> Result<ConditionScan> {
    expect_kind(structure, condition.required_structure())?;
    check_spec_in_domain(t, spec)?;
    let mut holds = 0usize;
    let mut violations = Vec::new();
    for i in 0..spec.count {
        let (x, y) = sample_distinct_pair(spec, i as u64);
        let verdict = match condition {
            ConditionKind::Ns25 => ns25_at(t, structure, &x, &y)?,
            ConditionKind::S25 => s25_at(t, structure, &x, &y)?,
            ConditionKind::Nr25 => nr25_at(t, structure, &x, &y)?,
            ConditionKind::R25 => r25_at(t, structure, &x, &y)?,
        };
        if verdict.holds {
            holds += 1;
        } else if violations.len() < 10 {
            violations.push(ConditionViolation { x, y, verdict });
        }
    }
    Ok(ConditionScan {
        condition,
        samples: spec.count,
        holds,
        pass_rate: holds as f64 / spec.count as f64,
        violations,
    })
}

/// How the fixed-point search spends its work.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointConfig {
    pub starts: usize,
    pub grid_cell_cap: usize,
    pub refine_depth: usize,
    pub seed: u64,
}

impl Default for FixedPointConfig {
    fn default() -> Self {
        FixedPointConfig {
            starts: 16,
            grid_cell_cap: 100_000,
            refine_depth: 6,
            seed: 42,
        }
    }
}

/// Evidence about second basins near the tolerance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniquenessReport {
    pub basin_count: usize,
    /// One representative per basin, capped at eight.
    pub representatives: Vec<Vector>,
    pub unique: bool,
}

/// A located fixed-point candidate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixedPointOutcome {
    pub point: Vector,
    pub residual: f64,
    pub evaluations: usize,
    pub uniqueness: UniquenessReport,
}

/// The displacement residual ||0, Tx - x, x - Tx|| of a candidate.
pub fn residual_at(t: &SelfMap, s: &StructureHandle, x: &Vector) -> Result<f64> {
    let tx = t.apply(x)?;
    s.pair_distance(&tx, x)
}

/// Grid resolution per axis so the total cell count stays under the cap.
fn grid_per_axis(dim: usize, cap: usize) -> usize {
    let mut m = 33usize;
    while m > 2 {
        let total = (0..dim).try_fold(1usize, |acc, _| acc.checked_mul(m));
        match total {
            Some(t) if t <= cap => break,
            _ => m -= 2,
        }
    }
    m.max(2)
}

fn grid_points(low: &Vector, high: &Vector, per_axis: usize) -> Vec<Vector> {
    let dim = low.dim();
    let total = per_axis.pow(dim as u32);
    let mut out = Vec::with_capacity(total);
    for cell in 0..total {
        let mut rest = cell;
        let coords = (0..dim)
            .map(|j| {
                let idx = rest % per_axis;
                rest /= per_axis;
                let t = idx as f64 / (per_axis - 1) as f64;
                low[j] + (high[j] - low[j]) * t
            })
            .collect();
        out.push(Vector::new(coords).expect("finite bounds"));
    }
    out
}

struct SearchState<'a> {
    t: &'a SelfMap,
    s: &'a StructureHandle,
    tol: f64,
    budget: usize,
    evaluations: usize,
    best: Option<(f64, Vector)>,
}

impl<'a> SearchState<'a> {
    fn spent(&self) -> bool {
        self.evaluations >= self.budget
    }

    /// Applies one map step, charging the budget.
    fn step(&mut self, x: &Vector) -> Result<Vector> {
        self.evaluations += 1;
        self.t.apply(x)
    }

    fn residual(&mut self, x: &Vector) -> Result<f64> {
        let tx = self.step(x)?;
        self.s.pair_distance(&tx, x)
    }

    fn consider(&mut self, residual: f64, point: Vector) {
        let better = match &self.best {
            None => true,
            Some((r, p)) => {
                residual < *r
                    || (residual == *r && point.lex_cmp(p) == core::cmp::Ordering::Less)
            }
        };
        if better {
            self.best = Some((residual, point));
        }
    }

    fn found(&self) -> bool {
        matches!(&self.best, Some((r, _)) if *r <= self.tol)
    }

    /// Iterates the map from a start until the tolerance, a cycle of no
    /// progress, or the iteration cap.
    fn iterate_from(&mut self, start: &Vector, cap: usize) -> Result<()> {
        let mut x = start.clone();
        for _ in 0..cap {
            if self.spent() {
                return Ok(());
            }
            let tx = self.step(&x)?;
            let r = self.s.pair_distance(&tx, &x)?;
            self.consider(r, x.clone());
            if r <= self.tol {
                return Ok(());
            }
            if tx == x {
                return Ok(());
            }
            x = tx;
        }
        Ok(())
    }
}

/// Searches for a point with displacement residual at most `tol`.
///
/// Multi-start map iteration runs first (box centroid, corners, then seeded
/// uniform starts), then a coarse residual grid refined around the best
/// cells. The returned uniqueness report scans a final grid and clusters
/// every start that lands at residual <= tol, calling two candidates
/// separate basins when their pair distance exceeds 10 * tol.
///
/// This demonstrates the fixed point; it certifies nothing beyond the grid
/// evidence it reports.
pub fn find_fixed_point(
    t: &SelfMap,
    s: &StructureHandle,
    tol: f64,
    budget: usize,
) -> Result<FixedPointOutcome> {
    find_fixed_point_with(t, s, tol, budget, &FixedPointConfig::default())
}

pub fn find_fixed_point_with(
    t: &SelfMap,
    s: &StructureHandle,
    tol: f64,
    budget: usize,
    config: &FixedPointConfig,
) -> Result<FixedPointOutcome> {
    expect_kind(s, StructureKind::Snorm)?;
    if s.dim() != t.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: t.dim(),
            found: s.dim(),
        });
    }
    if tol <= 0.0 || !tol.is_finite() || budget == 0 {
        return Err(CoreError::BadSampleSpec {
            reason: "tol must be positive and budget at least 1",
        });
    }
    let precheck = t.sample_spec(64, config.seed)?;
    t.check_self_mapping(&precheck)?;

    let mut state = SearchState {
        t,
        s,
        tol,
        budget,
        evaluations: 0,
        best: None,
    };

    // Multi-start iteration: centroid, corners, seeded fills.
    let mut starts = vec![t.centroid()];
    starts.extend(t.corners(8));
    let fill_spec = t.sample_spec(config.starts, config.seed)?;
    let mut index = 0u64;
    while starts.len() < config.starts {
        let mut rng = fill_spec.rng_at(index);
        starts.push(fill_spec.vector(&mut rng));
        index += 1;
    }
    let per_start_cap = (budget / (2 * starts.len())).max(64);
    for start in &starts {
        state.iterate_from(start, per_start_cap)?;
        if state.found() {
            break;
        }
    }

    // Grid refinement fallback: best cells get shrinking local boxes.
    if !state.found() {
        let per_axis = grid_per_axis(t.dim(), config.grid_cell_cap);
        let coarse = grid_points(t.domain_low(), t.domain_high(), per_axis);
        let mut scored: Vec<(f64, Vector)> = Vec::with_capacity(coarse.len());
        for p in coarse {
            if state.spent() {
                break;
            }
            let r = state.residual(&p)?;
            state.consider(r, p.clone());
            scored.push((r, p));
        }
        scored.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.lex_cmp(&b.1)));
        scored.truncate(16);

        let mut width: Vec<f64> = t
            .domain_low()
            .iter()
            .zip(t.domain_high().iter())
            .map(|(lo, hi)| (hi - lo) / (per_axis - 1) as f64)
            .collect();
        for _ in 0..config.refine_depth {
            if state.found() || state.spent() {
                break;
            }
            let mut next: Vec<(f64, Vector)> = Vec::new();
            for (_, center) in &scored {
                let lo = Vector::new(
                    center
                        .iter()
                        .zip(width.iter())
                        .zip(t.domain_low().iter())
                        .map(|((c, w), lo)| (c - w).max(*lo))
                        .collect(),
                )?;
                let hi = Vector::new(
                    center
                        .iter()
                        .zip(width.iter())
                        .zip(t.domain_high().iter())
                        .map(|((c, w), hi)| (c + w).min(*hi))
                        .collect(),
                )?;
                for p in grid_points(&lo, &hi, 5) {
                    if state.spent() {
                        break;
                    }
                    let r = state.residual(&p)?;
                    state.consider(r, p.clone());
                    next.push((r, p));
                }
                state.iterate_from(center, 64)?;
            }
            next.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.lex_cmp(&b.1)));
            next.truncate(16);
            if !next.is_empty() {
                scored = next;
            }
            for w in width.iter_mut() {
                *w /= 2.0;
            }
        }
    }

    let (residual, point) = state.best.clone().ok_or(CoreError::BadSampleSpec {
        reason: "empty search",
    })?;
    if residual > tol {
        return Err(CoreError::NoConvergence {
            best: point,
            residual,
            evaluations: state.evaluations,
        });
    }

    let uniqueness = uniqueness_scan(t, s, tol, &point, &mut state.evaluations)?;
    Ok(FixedPointOutcome {
        point,
        residual,
        evaluations: state.evaluations,
        uniqueness,
    })
}

/// Scans a final grid, iterating from every cell, and clusters the
/// candidates that reach the tolerance into basins separated by more than
/// 10 * tol in pair distance.
fn uniqueness_scan(
    t: &SelfMap,
    s: &StructureHandle,
    tol: f64,
    found: &Vector,
    evaluations: &mut usize,
) -> Result<UniquenessReport> {
    let per_axis = grid_per_axis(t.dim(), 2_000);
    let grid = grid_points(t.domain_low(), t.domain_high(), per_axis);
    let mut representatives: Vec<Vector> = vec![found.clone()];
    let mut basin_count = 1usize;
    for start in grid {
        let mut x = start;
        let mut landed = None;
        for _ in 0..256 {
            let tx = t.apply(&x)?;
            *evaluations += 1;
            if s.pair_distance(&tx, &x)? <= tol {
                landed = Some(x);
                break;
            }
            if tx == x {
                break;
            }
            x = tx;
        }
        if let Some(candidate) = landed {
            let mut new_basin = true;
            for rep in &representatives {
                if s.pair_distance(rep, &candidate)? <= 10.0 * tol {
                    new_basin = false;
                    break;
                }
            }
            if new_basin {
                basin_count += 1;
                if representatives.len() < 8 {
                    representatives.push(candidate);
                }
            }
        }
    }
    Ok(UniquenessReport {
        basin_count,
        representatives,
        unique: basin_count == 1,
    })
}

//! Finite-horizon convergence and Cauchy diagnostics.
//!
//! Verdicts are HOLDS or INCONCLUSIVE, never "converges": a limit is not
//! decidable from finitely many terms. HOLDS additionally requires the
//! bound to be met from an index in the first half of the horizon, so a
//! vacuous verdict at the horizon edge cannot arise.

use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::Serialize;

use crate::Result;
use crate::error::CoreError;
use crate::structures::{StructureHandle, StructureKind, expect_kind};
use crate::vector::Vector;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use crate::float::FloatShim as _;

pub type Generator = Arc<dyn Fn(usize) -> Vector + Send + Sync>;
pub type DomainPredicate = Arc<dyn Fn(&Vector) -> bool + Send + Sync>;

/// A sequence under study: a pure index-to-point generator, an optional
/// membership predicate for the ambient set, a horizon, and a threshold.
#[derive(Clone)]
pub struct SequenceSpec {
    pub generator: Generator,
    pub domain: Option<DomainPredicate>,
    pub dim: usize,
    pub horizon: usize,
    pub eps: f64,
}

impl SequenceSpec {
    pub fn new(
        dim: usize,
        generator: Generator,
        domain: Option<DomainPredicate>,
        horizon: usize,
        eps: f64,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(CoreError::InvalidDimension);
        }
        if horizon == 0 {
            return Err(CoreError::BadSampleSpec {
                reason: "horizon must be at least 1",
            });
        }
        if eps <= 0.0 || !eps.is_finite() {
            return Err(CoreError::BadSampleSpec {
                reason: "eps must be positive and finite",
            });
        }
        Ok(SequenceSpec {
            generator,
            domain,
            dim,
            horizon,
            eps,
        })
    }

    /// Same sequence at a different threshold.
    pub fn with_eps(&self, eps: f64) -> Result<Self> {
        SequenceSpec::new(
            self.dim,
            self.generator.clone(),
            self.domain.clone(),
            self.horizon,
            eps,
        )
    }

    fn term(&self, n: usize) -> Vector {
        let x = (self.generator)(n);
        debug_assert_eq!(x.dim(), self.dim);
        x
    }

    fn half(&self) -> usize {
        (self.horizon / 2).max(1)
    }
}

/// Finite-horizon verdict with either the first good index or the worst
/// value observed over the tail half of the horizon.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum SeqVerdict {
    Holds { first_index: usize },
    Inconclusive { max_tail: f64 },
}

impl SeqVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SeqVerdict::Holds { .. })
    }
}

/// Scans ||0, x_n - x, x - x_n|| over the whole horizon and reports the
/// exact first index from which every value stays below eps.
pub fn check_convergence(
    seq: &SequenceSpec,
    x: &Vector,
    s: &StructureHandle,
) -> Result<SeqVerdict> {
    expect_kind(s, StructureKind::Snorm)?;
    if seq.dim != s.dim() || x.dim() != s.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: s.dim(),
            found: if seq.dim != s.dim() { seq.dim } else { x.dim() },
        });
    }
    let zero = Vector::zeros(s.dim())?;
    let mut last_bad = 0usize;
    let mut max_tail = 0.0_f64;
    for n in 1..=seq.horizon {
        let xn = seq.term(n);
        let v = s.raw3(&zero, &xn.sub(x), &x.sub(&xn));
        if v >= seq.eps {
            last_bad = n;
        }
        if n >= seq.half() && v > max_tail {
            max_tail = v;
        }
    }
    let first_index = last_bad + 1;
    if first_index <= seq.half() {
        Ok(SeqVerdict::Holds { first_index })
    } else {
        Ok(SeqVerdict::Inconclusive { max_tail })
    }
}

/// Log-spaced probe indices between lo and hi, both included.
fn log_grid(lo: usize, hi: usize, count: usize) -> Vec<usize> {
    let mut grid = Vec::with_capacity(count + 2);
    grid.push(lo);
    if hi > lo && count >= 2 {
        let ratio = (hi as f64 / lo as f64).powf(1.0 / (count as f64 - 1.0));
        let mut t = lo as f64;
        for _ in 1..count {
            t *= ratio;
            let idx = (t.round() as usize).clamp(lo, hi);
            if *grid.last().unwrap() != idx {
                grid.push(idx);
            }
        }
    }
    if *grid.last().unwrap() != hi {
        grid.push(hi);
    }
    grid
}

/// Checks the triple value ||x_n - x_m, x_m - x_l, x_l - x_n|| below eps
/// from some first index.
///
/// Exhausting all triples is cubic in the horizon, so candidates are probed
/// on a deterministic log-spaced grid that always contains the corner
/// indices; the first index is then located by bisection over candidates.
pub fn check_cauchy(seq: &SequenceSpec, s: &StructureHandle) -> Result<SeqVerdict> {
    expect_kind(s, StructureKind::Snorm)?;
    if seq.dim != s.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: s.dim(),
            found: seq.dim,
        });
    }
    let terms: Vec<Vector> = (1..=seq.horizon).map(|n| seq.term(n)).collect();
    let worst_from = |n0: usize| -> f64 {
        let grid = log_grid(n0, seq.horizon, 14);
        let mut worst = 0.0_f64;
        for &n in &grid {
            for &m in &grid {
                for &l in &grid {
                    let (xn, xm, xl) = (&terms[n - 1], &terms[m - 1], &terms[l - 1]);
                    let v = s.raw3(&xn.sub(xm), &xm.sub(xl), &xl.sub(xn));
                    if v > worst {
                        worst = v;
                    }
                }
            }
        }
        worst
    };

    if worst_from(1) < seq.eps {
        return Ok(SeqVerdict::Holds { first_index: 1 });
    }
    let half = seq.half();
    let tail_worst = worst_from(half);
    if tail_worst >= seq.eps {
        return Ok(SeqVerdict::Inconclusive {
            max_tail: tail_worst,
        });
    }
    // worst_from(1) fails, worst_from(half) passes: bisect the boundary.
    let (mut lo, mut hi) = (1usize, half);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if worst_from(mid) < seq.eps {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(SeqVerdict::Holds { first_index: hi })
}

/// Cauchy verdict, numeric limit candidate, and domain membership.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompletenessReport {
    pub cauchy: SeqVerdict,
    /// Mean of the tail half of the horizon, as computed.
    pub tail_mean: Vector,
    /// The candidate used for the membership test: the tail mean with
    /// components indistinguishable from zero at eps snapped to exact zero.
    pub candidate: Vector,
    pub in_domain: bool,
}

/// Classifies the completeness evidence a sequence gives: is it Cauchy, and
/// does its best numeric limit candidate belong to the ambient set?
///
/// A finite horizon resolves the limit only to within eps, so a tail mean
/// within eps of zero is reported as exactly zero before the predicate runs;
/// a boundary limit outside the set is then classified correctly instead of
/// being masked by a small positive residue.
pub fn classify_completeness_witness(
    seq: &SequenceSpec,
    s: &StructureHandle,
) -> Result<CompletenessReport> {
    let domain = seq
        .domain
        .as_ref()
        .ok_or(CoreError::MissingDomainPredicate)?;
    let cauchy = check_cauchy(seq, s)?;
    let tail: Vec<Vector> = (seq.half()..=seq.horizon).map(|n| seq.term(n)).collect();
    let tail_mean = Vector::mean(&tail)?;
    let snapped: Vec<f64> = tail_mean
        .iter()
        .map(|c| if c.abs() <= seq.eps { 0.0 } else { *c })
        .collect();
    let candidate = Vector::new(snapped)?;
    let in_domain = domain(&candidate);
    Ok(CompletenessReport {
        cauchy,
        tail_mean,
        candidate,
        in_domain,
    })
}

/// Built-in one-dimensional sequences addressable by name.
///
/// `one_over_n` lives on the open interval (0, 1); `one_over_n_closed` is
/// the same sequence with the interval closed at zero. The remaining names
/// are `one_over_n_sq`, `geometric`, `constant`, `alternating`, `linear`.
pub fn named_sequence(name: &str, horizon: usize, eps: f64) -> Result<SequenceSpec> {
    let gen_scalar = |f: fn(usize) -> f64| -> Generator {
        Arc::new(move |n| Vector::scalar(f(n)).expect("finite term"))
    };
    let open_unit: DomainPredicate = Arc::new(|v: &Vector| v[0] > 0.0 && v[0] < 1.0);
    let closed_unit: DomainPredicate = Arc::new(|v: &Vector| v[0] >= 0.0 && v[0] <= 1.0);
    let symmetric_unit: DomainPredicate = Arc::new(|v: &Vector| v[0] >= -1.0 && v[0] <= 1.0);
    let everything: DomainPredicate = Arc::new(|_: &Vector| true);

    let (generator, domain): (Generator, DomainPredicate) = match name {
        "one_over_n" => (gen_scalar(|n| 1.0 / n as f64), open_unit),
        "one_over_n_closed" => (gen_scalar(|n| 1.0 / n as f64), closed_unit),
        "one_over_n_sq" => (gen_scalar(|n| 1.0 / (n as f64 * n as f64)), open_unit),
        "geometric" => (gen_scalar(|n| 0.5_f64.powf(n as f64)), open_unit),
        "constant" => (gen_scalar(|_| 0.5), open_unit),
        "alternating" => (
            gen_scalar(|n| if n % 2 == 0 { 1.0 } else { -1.0 }),
            symmetric_unit,
        ),
        "linear" => (gen_scalar(|n| n as f64), everything),
        _ => {
            return Err(CoreError::UnknownStructure {
                id: alloc::string::String::from(name),
            });
        }
    };
    SequenceSpec::new(1, generator, Some(domain), horizon, eps)
}

pub const SEQUENCE_NAMES: &[&str] = &[
    "one_over_n",
    "one_over_n_closed",
    "one_over_n_sq",
    "geometric",
    "constant",
    "alternating",
    "linear",
];

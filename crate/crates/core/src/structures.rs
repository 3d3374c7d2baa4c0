//! Structure kinds, evaluable handles, and the built-in catalog.
//!
//! A [`StructureHandle`] bundles a pure evaluator with its kind, dimension,
//! display name, and a provenance chain of generator steps. Handles are
//! immutable after construction and cheap to clone, so they can be shared
//! freely across threads.
//!
//! Scalar formulas from the catalog generalize to R^n by replacing the
//! absolute value with the Euclidean norm, which keeps one code path for
//! every dimension.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::Result;
use crate::error::CoreError;
use crate::vector::Vector;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use crate::float::FloatShim as _;

/// The five structure kinds a handle can carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum StructureKind {
    Norm,
    Metric,
    Snorm,
    Smetric,
    Gnorm,
}

impl StructureKind {
    /// Number of vector arguments the evaluator takes.
    pub fn arity(self) -> usize {
        match self {
            StructureKind::Norm => 1,
            StructureKind::Metric => 2,
            StructureKind::Snorm | StructureKind::Smetric | StructureKind::Gnorm => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            StructureKind::Norm => "NORM",
            StructureKind::Metric => "METRIC",
            StructureKind::Snorm => "SNORM",
            StructureKind::Smetric => "SMETRIC",
            StructureKind::Gnorm => "GNORM",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

type Unary = Arc<dyn Fn(&Vector) -> f64 + Send + Sync>;
type Binary = Arc<dyn Fn(&Vector, &Vector) -> f64 + Send + Sync>;
type Ternary = Arc<dyn Fn(&Vector, &Vector, &Vector) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Eval {
    Unary(Unary),
    Binary(Binary),
    Ternary(Ternary),
}

/// An immutable evaluable structure.
#[derive(Clone)]
pub struct StructureHandle {
    kind: StructureKind,
    dim: usize,
    name: String,
    provenance: Vec<String>,
    eval: Eval,
}

/// Serializable description of a handle, for reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureInfo {
    pub kind: StructureKind,
    pub dim: usize,
    pub name: String,
    pub provenance: Vec<String>,
}

impl fmt::Debug for StructureHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureHandle")
            .field("kind", &self.kind)
            .field("dim", &self.dim)
            .field("name", &self.name)
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

impl StructureHandle {
    fn make(kind: StructureKind, dim: usize, name: String, provenance: Vec<String>, eval: Eval) -> Self {
        let arity = match &eval {
            Eval::Unary(_) => 1,
            Eval::Binary(_) => 2,
            Eval::Ternary(_) => 3,
        };
        debug_assert_eq!(arity, kind.arity());
        StructureHandle {
            kind,
            dim,
            name,
            provenance,
            eval,
        }
    }

    pub(crate) fn new_unary<F>(kind: StructureKind, dim: usize, name: String, provenance: Vec<String>, f: F) -> Self
    where
        F: Fn(&Vector) -> f64 + Send + Sync + 'static,
    {
        Self::make(kind, dim, name, provenance, Eval::Unary(Arc::new(f)))
    }

    pub(crate) fn new_binary<F>(kind: StructureKind, dim: usize, name: String, provenance: Vec<String>, f: F) -> Self
    where
        F: Fn(&Vector, &Vector) -> f64 + Send + Sync + 'static,
    {
        Self::make(kind, dim, name, provenance, Eval::Binary(Arc::new(f)))
    }

    pub(crate) fn new_ternary<F>(kind: StructureKind, dim: usize, name: String, provenance: Vec<String>, f: F) -> Self
    where
        F: Fn(&Vector, &Vector, &Vector) -> f64 + Send + Sync + 'static,
    {
        Self::make(kind, dim, name, provenance, Eval::Ternary(Arc::new(f)))
    }

    /// Same evaluator under a different kind and an extended provenance.
    pub(crate) fn rebrand(&self, kind: StructureKind, name: String, step: &str) -> Self {
        debug_assert_eq!(kind.arity(), self.kind.arity());
        let mut provenance = self.provenance.clone();
        provenance.push(step.to_string());
        StructureHandle {
            kind,
            dim: self.dim,
            name,
            provenance,
            eval: self.eval.clone(),
        }
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Ordered generator-step labels, starting from the catalog entry.
    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn describe(&self) -> StructureInfo {
        StructureInfo {
            kind: self.kind,
            dim: self.dim,
            name: self.name.clone(),
            provenance: self.provenance.clone(),
        }
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Evaluates a one-argument structure (a norm).
    pub fn eval_point(&self, x: &Vector) -> Result<f64> {
        self.check_dim(x)?;
        match &self.eval {
            Eval::Unary(f) => Ok(f(x)),
            _ => Err(CoreError::UnsupportedEvaluation {
                kind: self.kind,
                arity: 1,
            }),
        }
    }

    /// Evaluates a two-argument structure (a metric).
    pub fn eval_pair(&self, x: &Vector, y: &Vector) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        match &self.eval {
            Eval::Binary(f) => Ok(f(x, y)),
            _ => Err(CoreError::UnsupportedEvaluation {
                kind: self.kind,
                arity: 2,
            }),
        }
    }

    /// Evaluates a three-argument structure.
    pub fn eval_triple(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        match &self.eval {
            Eval::Ternary(f) => Ok(f(x, y, z)),
            _ => Err(CoreError::UnsupportedEvaluation {
                kind: self.kind,
                arity: 3,
            }),
        }
    }

    /// The displacement value of a pair under an S-norm:
    /// the triple evaluated at (0, x - y, y - x).
    pub fn pair_distance(&self, x: &Vector, y: &Vector) -> Result<f64> {
        if self.kind != StructureKind::Snorm {
            return Err(CoreError::KindMismatch {
                expected: StructureKind::Snorm,
                found: self.kind,
            });
        }
        self.check_dim(x)?;
        self.check_dim(y)?;
        let zero = Vector::zeros(self.dim)?;
        let d = x.sub(y);
        let nd = y.sub(x);
        Ok(self.raw3(&zero, &d, &nd))
    }

    /// Unchecked unary evaluation for validated internal call sites.
    pub(crate) fn raw1(&self, x: &Vector) -> f64 {
        match &self.eval {
            Eval::Unary(f) => f(x),
            _ => unreachable!("arity checked at construction"),
        }
    }

    pub(crate) fn raw2(&self, x: &Vector, y: &Vector) -> f64 {
        match &self.eval {
            Eval::Binary(f) => f(x, y),
            _ => unreachable!("arity checked at construction"),
        }
    }

    pub(crate) fn raw3(&self, x: &Vector, y: &Vector, z: &Vector) -> f64 {
        match &self.eval {
            Eval::Ternary(f) => f(x, y, z),
            _ => unreachable!("arity checked at construction"),
        }
    }
}

pub(crate) fn expect_kind(s: &StructureHandle, kind: StructureKind) -> Result<()> {
    if s.kind() != kind {
        return Err(CoreError::KindMismatch {
            expected: kind,
            found: s.kind(),
        });
    }
    Ok(())
}

fn require_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(CoreError::InvalidDimension);
    }
    Ok(())
}

fn euclid(v: &Vector) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// The Euclidean norm on R^dim.
pub fn euclidean_norm(dim: usize) -> Result<StructureHandle> {
    require_dim(dim)?;
    Ok(StructureHandle::new_unary(
        StructureKind::Norm,
        dim,
        "euclidean".to_string(),
        vec![format!("norm.euclidean.d{dim}")],
        euclid,
    ))
}

/// The metric d(x, y) = norm(x - y) induced by a norm.
pub fn metric_from_norm(n: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(n, StructureKind::Norm)?;
    let inner = n.clone();
    let mut provenance = n.provenance().to_vec();
    provenance.push("metric_from_norm".to_string());
    Ok(StructureHandle::new_binary(
        StructureKind::Metric,
        n.dim(),
        format!("metric_from_norm({})", n.name()),
        provenance,
        move |x, y| inner.raw1(&x.sub(y)),
    ))
}

/// The additive S-norm: the sum of the Euclidean norms of the three slots.
pub fn sum_abs_snorm(dim: usize) -> Result<StructureHandle> {
    require_dim(dim)?;
    Ok(StructureHandle::new_ternary(
        StructureKind::Snorm,
        dim,
        "sum_abs".to_string(),
        vec![format!("snorm.sum_abs.d{dim}")],
        |x, y, z| euclid(x) + euclid(y) + euclid(z),
    ))
}

/// The catalog S-norm that no norm generates:
/// |x - 2y - 2z| + |y - 2x - 2z| + |z - 2y - 2x|, with the Euclidean norm
/// in place of the absolute value on R^n.
pub fn example6_snorm(dim: usize) -> Result<StructureHandle> {
    require_dim(dim)?;
    Ok(StructureHandle::new_ternary(
        StructureKind::Snorm,
        dim,
        "example6".to_string(),
        vec![format!("snorm.example6.d{dim}")],
        |x, y, z| {
            let mut s1 = 0.0;
            let mut s2 = 0.0;
            let mut s3 = 0.0;
            for i in 0..x.dim() {
                let (a, b, c) = (x[i], y[i], z[i]);
                let t1 = a - 2.0 * b - 2.0 * c;
                let t2 = b - 2.0 * a - 2.0 * c;
                let t3 = c - 2.0 * b - 2.0 * a;
                s1 += t1 * t1;
                s2 += t2 * t2;
                s3 += t3 * t3;
            }
            s1.sqrt() + s2.sqrt() + s3.sqrt()
        },
    ))
}

/// The 0/1-valued S-metric: zero exactly on coordinatewise-equal triples.
///
/// Equality is exact. The structure is combinatorial, not numeric, so no
/// tolerance is involved.
pub fn discrete_smetric(dim: usize) -> Result<StructureHandle> {
    require_dim(dim)?;
    Ok(StructureHandle::new_ternary(
        StructureKind::Smetric,
        dim,
        "discrete".to_string(),
        vec![format!("smetric.discrete.d{dim}")],
        |x, y, z| {
            if x == y && y == z { 0.0 } else { 1.0 }
        },
    ))
}

/// The additive triple norm carried as a genuine G-norm.
pub fn additive_gnorm(dim: usize) -> Result<StructureHandle> {
    require_dim(dim)?;
    Ok(StructureHandle::new_ternary(
        StructureKind::Gnorm,
        dim,
        "additive".to_string(),
        vec![format!("gnorm.additive.d{dim}")],
        |x, y, z| euclid(x) + euclid(y) + euclid(z),
    ))
}

/// Relabels an S-norm as a claimed G-norm without any checking.
///
/// Useful for probing: feed the result to the G-norm axiom checks or to
/// [`crate::generators::snorm_from_gnorm`], which validates the claim.
pub fn reinterpret_snorm_as_gnorm(s: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(s, StructureKind::Snorm)?;
    Ok(s.rebrand(
        StructureKind::Gnorm,
        format!("gnorm_claim({})", s.name()),
        "reinterpret_as_gnorm",
    ))
}

/// Resolves a catalog id of the form `kind.name.d<dim>`.
///
/// Base entries:
/// `norm.euclidean.dN`, `metric.euclidean.dN`, `snorm.sum_abs.dN`,
/// `snorm.example6.dN`, `smetric.discrete.dN`, `gnorm.additive.dN`.
///
/// Generated entries:
/// `snorm.gen.euclidean.dN` (S-norm from the Euclidean norm),
/// `norm.gen.sum_abs.dN`, `norm.gen.example6.dN` (norms from S-norms),
/// `smetric.gen.sum_abs.dN`, `smetric.gen.example6.dN` (S-metrics from
/// S-norms), and `smetric.gen.euclidean.dN` (S-metric from the metric).
pub fn resolve_id(id: &str) -> Result<StructureHandle> {
    let unknown = || CoreError::UnknownStructure { id: id.to_string() };
    let parts: Vec<&str> = id.split('.').collect();
    let dim_part = parts.last().ok_or_else(unknown)?;
    let dim: usize = dim_part
        .strip_prefix('d')
        .and_then(|d| d.parse().ok())
        .filter(|d| *d >= 1)
        .ok_or_else(unknown)?;

    match &parts[..parts.len() - 1] {
        ["norm", "euclidean"] => euclidean_norm(dim),
        ["metric", "euclidean"] => metric_from_norm(&euclidean_norm(dim)?),
        ["snorm", "sum_abs"] => sum_abs_snorm(dim),
        ["snorm", "example6"] => example6_snorm(dim),
        ["smetric", "discrete"] => discrete_smetric(dim),
        ["gnorm", "additive"] => additive_gnorm(dim),
        ["snorm", "gen", "euclidean"] => crate::generators::snorm_from_norm(&euclidean_norm(dim)?),
        ["norm", "gen", "sum_abs"] => crate::generators::norm_from_snorm(&sum_abs_snorm(dim)?),
        ["norm", "gen", "example6"] => crate::generators::norm_from_snorm(&example6_snorm(dim)?),
        ["smetric", "gen", "sum_abs"] => {
            crate::generators::smetric_from_snorm(&sum_abs_snorm(dim)?)
        }
        ["smetric", "gen", "example6"] => {
            crate::generators::smetric_from_snorm(&example6_snorm(dim)?)
        }
        ["smetric", "gen", "euclidean"] => {
            crate::generators::smetric_from_metric(&metric_from_norm(&euclidean_norm(dim)?)?)
        }
        _ => Err(unknown()),
    }
}

/// Catalog id patterns, for help text.
pub const CATALOG_PATTERNS: &[&str] = &[
    "norm.euclidean.dN",
    "metric.euclidean.dN",
    "snorm.sum_abs.dN",
    "snorm.example6.dN",
    "smetric.discrete.dN",
    "gnorm.additive.dN",
    "snorm.gen.euclidean.dN",
    "norm.gen.sum_abs.dN",
    "norm.gen.example6.dN",
    "smetric.gen.sum_abs.dN",
    "smetric.gen.example6.dN",
    "smetric.gen.euclidean.dN",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn v1(x: f64) -> Vector {
        Vector::scalar(x).unwrap()
    }

    fn v2(x: f64, y: f64) -> Vector {
        Vector::from_slice(&[x, y]).unwrap()
    }

    #[test]
    fn handles_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<StructureHandle>();
    }

    #[test]
    fn sum_abs_values() {
        let s = sum_abs_snorm(1).unwrap();
        assert_eq!(
            s.eval_triple(&v1(1.0), &v1(-2.0), &v1(3.0)).unwrap(),
            6.0
        );
        let zero = Vector::zeros(1).unwrap();
        assert_eq!(s.eval_triple(&zero, &zero, &zero).unwrap(), 0.0);

        let s2 = sum_abs_snorm(2).unwrap();
        let got = s2
            .eval_triple(&v2(1.0, 1.0), &v2(0.0, 0.0), &v2(-1.0, -1.0))
            .unwrap();
        assert!((got - 2.0 * 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn example6_values() {
        let s = example6_snorm(1).unwrap();
        // |1 - 10 - 0| + |5 - 2 - 0| + |0 - 10 - 2| = 9 + 3 + 12
        assert_eq!(s.eval_triple(&v1(1.0), &v1(5.0), &v1(0.0)).unwrap(), 24.0);
        assert_eq!(s.eval_triple(&v1(6.0), &v1(0.0), &v1(0.0)).unwrap(), 30.0);
        assert_eq!(s.eval_triple(&v1(1.0), &v1(0.0), &v1(0.0)).unwrap(), 5.0);
        assert_eq!(s.eval_triple(&v1(0.0), &v1(1.0), &v1(0.0)).unwrap(), 5.0);
        assert_eq!(s.eval_triple(&v1(0.0), &v1(0.0), &v1(1.0)).unwrap(), 5.0);
        assert_eq!(s.eval_triple(&v1(1.0), &v1(1.0), &v1(0.0)).unwrap(), 6.0);
    }

    #[test]
    fn discrete_values() {
        let s = discrete_smetric(1).unwrap();
        let a = v1(0.5);
        assert_eq!(s.eval_triple(&a, &a, &a).unwrap(), 0.0);
        assert_eq!(s.eval_triple(&v1(0.0), &v1(0.0), &v1(1.0)).unwrap(), 1.0);
        assert_eq!(s.eval_triple(&v1(0.0), &v1(1.0), &v1(1.0)).unwrap(), 1.0);
    }

    #[test]
    fn euclidean_and_metric_values() {
        let n = euclidean_norm(2).unwrap();
        assert_eq!(n.eval_point(&v2(3.0, 4.0)).unwrap(), 5.0);

        let d = metric_from_norm(&euclidean_norm(1).unwrap()).unwrap();
        assert_eq!(d.eval_pair(&v1(1.0), &v1(1.0)).unwrap(), 0.0);
        assert_eq!(d.eval_pair(&v1(0.0), &v1(3.0)).unwrap(), 3.0);
    }

    #[test]
    fn dimension_and_kind_errors() {
        assert!(matches!(sum_abs_snorm(0), Err(CoreError::InvalidDimension)));
        assert!(matches!(example6_snorm(0), Err(CoreError::InvalidDimension)));
        assert!(matches!(discrete_smetric(0), Err(CoreError::InvalidDimension)));
        assert!(matches!(euclidean_norm(0), Err(CoreError::InvalidDimension)));

        let s = sum_abs_snorm(1).unwrap();
        assert!(matches!(
            metric_from_norm(&s),
            Err(CoreError::KindMismatch { .. })
        ));
        assert!(matches!(
            s.eval_point(&v1(1.0)),
            Err(CoreError::UnsupportedEvaluation { .. })
        ));
        let n = euclidean_norm(2).unwrap();
        assert!(matches!(
            n.eval_point(&v1(1.0)),
            Err(CoreError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn pair_distance_matches_displacement() {
        let s = sum_abs_snorm(1).unwrap();
        assert_eq!(s.pair_distance(&v1(0.0), &v1(2.0)).unwrap(), 4.0);
        let e6 = example6_snorm(1).unwrap();
        assert_eq!(e6.pair_distance(&v1(0.0), &v1(1.0)).unwrap(), 6.0);
        let n = euclidean_norm(1).unwrap();
        assert!(matches!(
            n.pair_distance(&v1(0.0), &v1(1.0)),
            Err(CoreError::KindMismatch { .. })
        ));
    }

    #[test]
    fn catalog_resolution() {
        for pat in CATALOG_PATTERNS {
            let id = pat.replace("dN", "d2");
            let h = resolve_id(&id).unwrap();
            assert_eq!(h.dim(), 2, "{id}");
        }
        assert!(matches!(
            resolve_id("snorm.bogus.d1"),
            Err(CoreError::UnknownStructure { .. })
        ));
        assert!(matches!(
            resolve_id("snorm.sum_abs.d0"),
            Err(CoreError::UnknownStructure { .. })
        ));
        assert!(matches!(
            resolve_id("nonsense"),
            Err(CoreError::UnknownStructure { .. })
        ));
    }

    #[test]
    fn provenance_records_catalog_entry() {
        let h = resolve_id("smetric.gen.sum_abs.d1").unwrap();
        assert_eq!(
            h.provenance(),
            &["snorm.sum_abs.d1".to_string(), "smetric_from_snorm".to_string()]
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn point() -> impl Strategy<Value = Vector> {
            proptest::collection::vec(-100.0_f64..100.0, 2)
                .prop_map(|c| Vector::new(c).unwrap())
        }

        proptest! {
            /// Every catalog instance returns a finite nonnegative real at
            /// any finite input.
            #[test]
            fn catalog_values_are_finite_and_nonnegative(
                x in point(),
                y in point(),
                z in point(),
            ) {
                for pat in CATALOG_PATTERNS {
                    let h = resolve_id(&pat.replace("dN", "d2")).unwrap();
                    let v = match h.kind().arity() {
                        1 => h.eval_point(&x).unwrap(),
                        2 => h.eval_pair(&x, &y).unwrap(),
                        _ => h.eval_triple(&x, &y, &z).unwrap(),
                    };
                    prop_assert!(v.is_finite(), "{pat}: {v}");
                    prop_assert!(v >= 0.0, "{pat}: {v}");
                }
            }

            /// Absolute homogeneity of the additive S-norm.
            #[test]
            fn sum_abs_is_homogeneous(
                x in point(),
                y in point(),
                z in point(),
                lambda in -10.0_f64..10.0,
            ) {
                let s = sum_abs_snorm(2).unwrap();
                let scaled = s
                    .eval_triple(&x.scale(lambda), &y.scale(lambda), &z.scale(lambda))
                    .unwrap();
                let reference = lambda.abs() * s.eval_triple(&x, &y, &z).unwrap();
                let tol = 1e-9 * 1.0_f64.max(scaled.abs()).max(reference.abs());
                prop_assert!((scaled - reference).abs() <= tol);
            }
        }
    }
}

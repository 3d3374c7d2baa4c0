//! Structure-to-structure constructions with recorded provenance.
//!
//! Each generator wraps the source handle's evaluator in a new one and
//! appends a step label to the provenance chain, so "generated by" claims
//! stay machine-checkable.

use alloc::format;

use crate::Result;
use crate::axioms;
use crate::error::CoreError;
use crate::sampling::SampleSpec;
use crate::structures::{StructureHandle, StructureKind, expect_kind};
use crate::vector::Vector;

/// The S-metric S(x, y, z) = ||x - y, y - z, z - x|| induced by an S-norm.
pub fn smetric_from_snorm(s: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(s, StructureKind::Snorm)?;
    let inner = s.clone();
    let mut provenance = s.provenance().to_vec();
    provenance.push("smetric_from_snorm".into());
    Ok(StructureHandle::new_ternary(
        StructureKind::Smetric,
        s.dim(),
        format!("smetric_from_snorm({})", s.name()),
        provenance,
        move |x, y, z| inner.raw3(&x.sub(y), &y.sub(z), &z.sub(x)),
    ))
}

/// The additive S-norm ||x, y, z|| = ||x|| + ||y|| + ||z|| induced by a norm.
pub fn snorm_from_norm(n: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(n, StructureKind::Norm)?;
    let inner = n.clone();
    let mut provenance = n.provenance().to_vec();
    provenance.push("snorm_from_norm".into());
    Ok(StructureHandle::new_ternary(
        StructureKind::Snorm,
        n.dim(),
        format!("snorm_from_norm({})", n.name()),
        provenance,
        move |x, y, z| inner.raw1(x) + inner.raw1(y) + inner.raw1(z),
    ))
}

/// The norm ||x|| = ||0, x, 0|| + ||0, 0, x|| induced by an S-norm.
///
/// Round trip note: composing with [`snorm_from_norm`] does not invert;
/// norm_from_snorm(snorm_from_norm(n)) doubles n pointwise.
pub fn norm_from_snorm(s: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(s, StructureKind::Snorm)?;
    let inner = s.clone();
    let zero = Vector::zeros(s.dim())?;
    let mut provenance = s.provenance().to_vec();
    provenance.push("norm_from_snorm".into());
    Ok(StructureHandle::new_unary(
        StructureKind::Norm,
        s.dim(),
        format!("norm_from_snorm({})", s.name()),
        provenance,
        move |x| inner.raw3(&zero, x, &zero) + inner.raw3(&zero, &zero, x),
    ))
}

/// The S-metric S(x, y, z) = d(x, y) + d(x, z) + d(y, z) induced by a metric.
pub fn smetric_from_metric(m: &StructureHandle) -> Result<StructureHandle> {
    expect_kind(m, StructureKind::Metric)?;
    let inner = m.clone();
    let mut provenance = m.provenance().to_vec();
    provenance.push("smetric_from_metric".into());
    Ok(StructureHandle::new_ternary(
        StructureKind::Smetric,
        m.dim(),
        format!("smetric_from_metric({})", m.name()),
        provenance,
        move |x, y, z| inner.raw2(x, y) + inner.raw2(x, z) + inner.raw2(y, z),
    ))
}

/// Adapts a G-norm into an S-norm.
///
/// Every genuine G-norm is an S-norm with the same values, so the adapter
/// is the identity on the evaluator. The claim is not taken on trust: the
/// handle is run through the sampled G-norm axiom checks first, and a
/// failing check is returned as [`CoreError::NotAGnorm`] carrying the
/// witness.
pub fn snorm_from_gnorm(
    g: &StructureHandle,
    spec: &SampleSpec,
    tol: f64,
) -> Result<StructureHandle> {
    expect_kind(g, StructureKind::Gnorm)?;
    let reports = axioms::check_gnorm(g, spec, tol)?;
    if let Some(fail) = reports.into_iter().find(|r| !r.passed()) {
        return Err(CoreError::NotAGnorm {
            report: alloc::boxed::Box::new(fail),
        });
    }
    Ok(g.rebrand(
        StructureKind::Snorm,
        format!("snorm_from_gnorm({})", g.name()),
        "snorm_from_gnorm",
    ))
}

//! File and stream emission: JSON reports, boundary CSV, and SVG figures.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::Value;

use snormed_core::geometry::{BallSpec, BoundaryTrace};

/// Writes a JSON value to the given path, or to stdout when absent.
///
/// Keys serialize in sorted order and floats in shortest round-trip form,
/// so identical values produce byte-identical output.
pub fn emit_json(value: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Boundary CSV: one row per ray.
pub fn trace_csv(trace: &BoundaryTrace) -> String {
    let mut out = String::from("angle_rad,x,y\n");
    for v in &trace.vertices {
        out.push_str(&format!("{},{},{}\n", v.angle_rad, v.point[0], v.point[1]));
    }
    out
}

/// Stroke-only SVG of the closed boundary path with small anchor markers,
/// viewBox fitted to the polyline bounding box with a 5% margin.
pub fn trace_svg(trace: &BoundaryTrace, ball: &BallSpec) -> String {
    let xs: Vec<f64> = trace.vertices.iter().map(|v| v.point[0]).collect();
    let ys: Vec<f64> = trace.vertices.iter().map(|v| v.point[1]).collect();
    let min_x = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let max_x = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min_y = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let max_y = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let margin = 0.05 * span;
    let (vx, vy) = (min_x - margin, min_y - margin);
    let (vw, vh) = (
        max_x - min_x + 2.0 * margin,
        max_y - min_y + 2.0 * margin,
    );
    let stroke = 0.005 * span;
    let marker = 0.015 * span;

    let mut path = String::new();
    for (i, v) in trace.vertices.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!("{cmd} {} {} ", v.point[0], v.point[1]));
    }
    path.push('Z');

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx} {vy} {vw} {vh}\">\n"
    );
    svg.push_str(&format!(
        "  <path d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n"
    ));
    for p in [&ball.center, &ball.anchor1, &ball.anchor2] {
        svg.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{marker}\" fill=\"none\" stroke=\"gray\" stroke-width=\"{stroke}\"/>\n",
            p[0], p[1]
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

//! Command-line frontend wiring the catalog, checkers, geometry, and
//! fixed-point search into reproducible runs and file outputs.
//!
//! Exit codes: 0 when every checked property passes, 1 when a property
//! fails (axiom violation, condition violation, trace or search failure),
//! 2 on usage or IO errors. All randomness flows from the one `--seed`
//! flag, and repeating a command with the same seed produces byte-identical
//! JSON.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result, anyhow, bail};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use snormed_core::axioms::{
    CheckReport, check_gnorm, check_norm, check_pair_symmetry, check_smetric, check_snorm,
    falsify_norm_generated, falsify_snorm_generated,
};
use snormed_core::geometry::{BallSpec, ball_value, trace_boundary_2d};
use snormed_core::rhoades::{
    ConditionKind, FixedPointConfig, SelfMap, check_nr25_implies_ns25, check_ns25_implies_s25,
    find_fixed_point_with, residual_at, scan_condition,
};
use snormed_core::sequences::{check_cauchy, check_convergence, classify_completeness_witness, named_sequence};
use snormed_core::setanalysis::{PointSet, analyze, normal_structure_witness};
use snormed_core::structures::{StructureKind, resolve_id};
use snormed_core::vector::Vector;
use snormed_core::{CoreError, SampleSpec, StructureHandle};

#[derive(Parser)]
#[command(
    name = "snormed",
    version,
    about = "Evaluable triple-norm structures: axiom falsification, ball tracing, point-set analysis, sequence diagnostics, and fixed-point search"
)]
struct Cli {
    /// Seed feeding every random draw.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProbeKind {
    /// Probe the structure against the G-norm axioms.
    Gnorm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FalsifyKind {
    /// Necessary condition for an S-norm to be generated by a norm.
    NormGenerated,
    /// Necessary conditions for an S-metric to be generated by an S-norm.
    SnormGenerated,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// Sum-of-distances ball with foci (1,1), (0,0), (-1,-1) at level 5.
    Fig1a,
    /// The non-norm-generated S-norm, same foci, level 20.
    Fig1b,
    /// All anchors at the origin, level 3: a scaled circle.
    Degenerate,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ConditionArg {
    Ns25,
    S25,
    Nr25,
    R25,
    Ns25ImpliesS25,
    Nr25ImpliesNs25,
}

#[derive(Subcommand)]
enum Command {
    /// Run sampled axiom checks, or a generation falsifier, on a catalog
    /// structure.
    Axioms {
        /// Catalog id, e.g. snorm.example6.d1 or smetric.discrete.d1.
        id: String,
        /// Probe the structure against a different axiom system.
        #[arg(long = "as", value_enum)]
        probe_as: Option<ProbeKind>,
        /// Run a generation falsifier instead of the axiom suite.
        #[arg(long, value_enum)]
        falsify: Option<FalsifyKind>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Relative tolerance for margins.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Half width of the sampling box.
        #[arg(long, default_value_t = 10.0)]
        box_half_width: f64,
    },
    /// Trace a ball boundary in the plane and emit SVG/CSV.
    Ball {
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// S-norm catalog id (dimension 2), when no preset is given.
        #[arg(long)]
        snorm: Option<String>,
        /// Ball center, e.g. "1,1".
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a2: Option<String>,
        /// Level radius.
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, default_value_t = 360)]
        resolution: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Treat the ball as closed for the membership summary.
        #[arg(long)]
        closed: bool,
    },
    /// Locate a fixed point of a built-in map under an S-norm residual.
    Fixpoint {
        /// Map name: half, shifted_half, cosine, identity, negation.
        map: String,
        /// S-norm catalog id; its dimension selects the map dimension.
        #[arg(long)]
        snorm: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Map-evaluation budget for the search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Write a residual-landscape CSV (1-D and 2-D domains only).
        #[arg(long)]
        landscape: Option<PathBuf>,
    },
    /// Sample a Rhoades-type condition, or an implication between two, on
    /// a built-in map.
    Rhoades {
        map: String,
        #[arg(long, value_enum)]
        condition: ConditionArg,
        /// Structure catalog id; defaults to a dimension-1 structure of the
        /// kind the condition needs.
        #[arg(long)]
        structure: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Analyze a CSV point set: diameter, Chebyshev radius and centre,
    /// diametral flags.
    Sets {
        /// CSV file with header x1,...,xn.
        file: PathBuf,
        /// S-norm catalog id; defaults to snorm.sum_abs at the file's
        /// dimension.
        #[arg(long)]
        snorm: Option<String>,
    },
    /// Convergence and Cauchy diagnostics for a built-in sequence.
    Seq {
        /// Sequence name, e.g. one_over_n or constant.
        id: String,
        /// S-norm catalog id (dimension 1).
        #[arg(long)]
        snorm: Option<String>,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, default_value_t = 10_000)]
        horizon: usize,
        /// Also check convergence against this limit, e.g. "0".
        #[arg(long, allow_hyphen_values = true)]
        limit: Option<String>,
        /// Write a per-index displacement CSV against the limit candidate.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed;
    let out = cli.out.clone();
    match run(cli.command, seed, out.as_deref()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, seed: u64, out: Option<&Path>) -> Result<u8> {
    let (value, code) = match command {
        Command::Axioms {
            id,
            probe_as,
            falsify,
            samples,
            tol,
            box_half_width,
        } => cmd_axioms(&id, probe_as, falsify, samples, tol, box_half_width, seed)?,
        Command::Ball {
            preset,
            snorm,
            x0,
            a1,
            a2,
            r,
            resolution,
            svg,
            csv,
            closed,
        } => cmd_ball(
            preset, snorm, x0, a1, a2, r, resolution, svg, csv, closed, seed,
        )?,
        Command::Fixpoint {
            map,
            snorm,
            tol,
            budget,
            landscape,
        } => cmd_fixpoint(&map, &snorm, tol, budget, landscape, seed)?,
        Command::Rhoades {
            map,
            condition,
            structure,
            samples,
        } => cmd_rhoades(&map, condition, structure, samples, seed)?,
        Command::Sets { file, snorm } => cmd_sets(&file, snorm, seed)?,
        Command::Seq {
            id,
            snorm,
            eps,
            horizon,
            limit,
            csv,
        } => cmd_seq(&id, snorm, eps, horizon, limit, csv, seed)?,
    };
    output::emit_json(&value, out)?;
    Ok(code)
}

fn resolve(id: &str) -> Result<StructureHandle> {
    resolve_id(id).map_err(|e| anyhow!("{e}"))
}

fn reports_value(reports: &[CheckReport]) -> Result<Value> {
    Ok(serde_json::to_value(reports)?)
}

fn cmd_axioms(
    id: &str,
    probe_as: Option<ProbeKind>,
    falsify: Option<FalsifyKind>,
    samples: usize,
    tol: f64,
    box_half_width: f64,
    seed: u64,
) -> Result<(Value, u8)> {
    let structure = resolve(id)?;
    let spec = SampleSpec::centered(structure.dim(), box_half_width, samples, seed)
        .map_err(|e| anyhow!("{e}"))?;

    let (mode, reports): (&str, Vec<CheckReport>) = match (falsify, probe_as) {
        (Some(FalsifyKind::NormGenerated), _) => (
            "falsify-norm-generated",
            vec![falsify_norm_generated(&structure, &spec).map_err(|e| anyhow!("{e}"))?],
        ),
        (Some(FalsifyKind::SnormGenerated), _) => (
            "falsify-snorm-generated",
            vec![falsify_snorm_generated(&structure, &spec).map_err(|e| anyhow!("{e}"))?],
        ),
        (None, Some(ProbeKind::Gnorm)) => (
            "gnorm-probe",
            check_gnorm(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?,
        ),
        (None, None) => match structure.kind() {
            StructureKind::Snorm => {
                let mut reports = check_snorm(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?;
                reports.push(
                    check_pair_symmetry(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?,
                );
                ("snorm-axioms", reports)
            }
            StructureKind::Smetric => (
                "smetric-axioms",
                check_smetric(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?,
            ),
            StructureKind::Norm => (
                "norm-axioms",
                check_norm(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?,
            ),
            StructureKind::Gnorm => (
                "gnorm-axioms",
                check_gnorm(&structure, &spec, tol).map_err(|e| anyhow!("{e}"))?,
            ),
            StructureKind::Metric => {
                bail!("no axiom suite is defined for METRIC structures; probe the generating norm instead")
            }
        },
    };

    let all_pass = reports.iter().all(|r| r.passed());
    let value = json!({
        "command": "axioms",
        "id": id,
        "mode": mode,
        "structure": serde_json::to_value(structure.describe())?,
        "samples": samples,
        "seed": seed,
        "tol": tol,
        "reports": reports_value(&reports)?,
        "all_pass": all_pass,
    });
    Ok((value, if all_pass { 0 } else { 1 }))
}

fn parse_point(text: &str, what: &str) -> Result<Vector> {
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<f64>, _>>()
        .with_context(|| format!("parsing {what} from '{text}'"))?;
    Vector::new(coords).map_err(|e| anyhow!("{what}: {e}"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_ball(
    preset: Option<Preset>,
    snorm: Option<String>,
    x0: Option<String>,
    a1: Option<String>,
    a2: Option<String>,
    r: Option<f64>,
    resolution: usize,
    svg: Option<PathBuf>,
    csv: Option<PathBuf>,
    closed: bool,
    seed: u64,
) -> Result<(Value, u8)> {
    let (snorm_id, ball) = match preset {
        Some(p) => {
            let (id, x0, a1, a2, radius) = match p {
                Preset::Fig1a => ("snorm.sum_abs.d2", [1.0, 1.0], [0.0, 0.0], [-1.0, -1.0], 5.0),
                Preset::Fig1b => (
                    "snorm.example6.d2",
                    [1.0, 1.0],
                    [0.0, 0.0],
                    [-1.0, -1.0],
                    20.0,
                ),
                Preset::Degenerate => {
                    ("snorm.sum_abs.d2", [0.0, 0.0], [0.0, 0.0], [0.0, 0.0], 3.0)
                }
            };
            let ball = BallSpec::new(
                Vector::from_slice(&x0).unwrap(),
                Vector::from_slice(&a1).unwrap(),
                Vector::from_slice(&a2).unwrap(),
                radius,
                closed,
            )
            .map_err(|e| anyhow!("{e}"))?;
            (id.to_string(), ball)
        }
        None => {
            let snorm_id = snorm.ok_or_else(|| anyhow!("--snorm is required without a preset"))?;
            let x0 = parse_point(&x0.ok_or_else(|| anyhow!("--x0 is required"))?, "--x0")?;
            let a1 = parse_point(&a1.ok_or_else(|| anyhow!("--a1 is required"))?, "--a1")?;
            let a2 = parse_point(&a2.ok_or_else(|| anyhow!("--a2 is required"))?, "--a2")?;
            let radius = r.ok_or_else(|| anyhow!("--r is required"))?;
            let ball = BallSpec::new(x0, a1, a2, radius, closed).map_err(|e| anyhow!("{e}"))?;
            (snorm_id, ball)
        }
    };
    let structure = resolve(&snorm_id)?;

    let trace = match trace_boundary_2d(&structure, &ball, resolution) {
        Ok(trace) => trace,
        Err(err) => {
            let value = json!({
                "command": "ball",
                "snorm": snorm_id,
                "ball": serde_json::to_value(&ball)?,
                "error": format!("{err}"),
                "seed": seed,
            });
            return Ok((value, 1));
        }
    };

    let mut max_level_error = 0.0_f64;
    for v in &trace.vertices {
        let value = ball_value(&structure, &ball, &v.point).map_err(|e| anyhow!("{e}"))?;
        max_level_error = max_level_error.max((value - ball.radius).abs());
    }

    if let Some(path) = &csv {
        output::write_text(path, &output::trace_csv(&trace))?;
    }
    if let Some(path) = &svg {
        output::write_text(path, &output::trace_svg(&trace, &ball))?;
    }

    let value = json!({
        "command": "ball",
        "snorm": snorm_id,
        "ball": serde_json::to_value(&ball)?,
        "resolution": resolution,
        "vertices": trace.vertices.len(),
        "max_level_error": max_level_error,
        "csv": csv.as_ref().map(|p| p.display().to_string()),
        "svg": svg.as_ref().map(|p| p.display().to_string()),
        "seed": seed,
    });
    Ok((value, 0))
}

fn cmd_fixpoint(
    map: &str,
    snorm_id: &str,
    tol: f64,
    budget: usize,
    landscape: Option<PathBuf>,
    seed: u64,
) -> Result<(Value, u8)> {
    let structure = resolve(snorm_id)?;
    let t = SelfMap::by_name(map, structure.dim()).map_err(|e| anyhow!("{e}"))?;

    if let Some(path) = &landscape {
        if t.dim() > 2 {
            bail!("--landscape supports only 1-D and 2-D domains");
        }
        output::write_text(path, &landscape_csv(&t, &structure)?)?;
    }

    let config = FixedPointConfig {
        seed,
        ..FixedPointConfig::default()
    };
    match find_fixed_point_with(&t, &structure, tol, budget, &config) {
        Ok(outcome) => {
            let value = json!({
                "command": "fixpoint",
                "map": map,
                "snorm": snorm_id,
                "tol": tol,
                "budget": budget,
                "seed": seed,
                "fixed_point": serde_json::to_value(&outcome.point)?,
                "residual": outcome.residual,
                "evaluations": outcome.evaluations,
                "uniqueness": serde_json::to_value(&outcome.uniqueness)?,
                "landscape": landscape.as_ref().map(|p| p.display().to_string()),
            });
            Ok((value, 0))
        }
        Err(CoreError::NoConvergence {
            best,
            residual,
            evaluations,
        }) => {
            let value = json!({
                "command": "fixpoint",
                "map": map,
                "snorm": snorm_id,
                "tol": tol,
                "budget": budget,
                "seed": seed,
                "error": "no-convergence",
                "best_candidate": serde_json::to_value(&best)?,
                "residual": residual,
                "evaluations": evaluations,
            });
            Ok((value, 1))
        }
        Err(err) => Err(anyhow!("{err}")),
    }
}

fn landscape_csv(t: &SelfMap, s: &StructureHandle) -> Result<String> {
    let per_axis = 33usize;
    let low = t.domain_low();
    let high = t.domain_high();
    let coord = |j: usize, idx: usize| {
        low[j] + (high[j] - low[j]) * idx as f64 / (per_axis - 1) as f64
    };
    let mut out = String::new();
    match t.dim() {
        1 => {
            out.push_str("x1,residual\n");
            for i in 0..per_axis {
                let p = Vector::from_slice(&[coord(0, i)]).unwrap();
                let r = residual_at(t, s, &p).map_err(|e| anyhow!("{e}"))?;
                out.push_str(&format!("{},{}\n", p[0], r));
            }
        }
        2 => {
            out.push_str("x1,x2,residual\n");
            for i in 0..per_axis {
                for j in 0..per_axis {
                    let p = Vector::from_slice(&[coord(0, i), coord(1, j)]).unwrap();
                    let r = residual_at(t, s, &p).map_err(|e| anyhow!("{e}"))?;
                    out.push_str(&format!("{},{},{}\n", p[0], p[1], r));
                }
            }
        }
        _ => bail!("landscape is defined for 1-D and 2-D domains"),
    }
    Ok(out)
}

fn cmd_rhoades(
    map: &str,
    condition: ConditionArg,
    structure: Option<String>,
    samples: usize,
    seed: u64,
) -> Result<(Value, u8)> {
    let default_structure = match condition {
        ConditionArg::Ns25 | ConditionArg::Ns25ImpliesS25 => "snorm.sum_abs.d1",
        ConditionArg::S25 => "smetric.gen.sum_abs.d1",
        ConditionArg::Nr25 | ConditionArg::Nr25ImpliesNs25 => "norm.euclidean.d1",
        ConditionArg::R25 => "metric.euclidean.d1",
    };
    let structure_id = structure.unwrap_or_else(|| default_structure.to_string());
    let handle = resolve(&structure_id)?;
    let t = SelfMap::by_name(map, handle.dim()).map_err(|e| anyhow!("{e}"))?;
    let spec = t.sample_spec(samples, seed).map_err(|e| anyhow!("{e}"))?;

    let (value, code) = match condition {
        ConditionArg::Ns25ImpliesS25 | ConditionArg::Nr25ImpliesNs25 => {
            let report = match condition {
                ConditionArg::Ns25ImpliesS25 => {
                    check_ns25_implies_s25(&t, &handle, &spec).map_err(|e| anyhow!("{e}"))?
                }
                _ => check_nr25_implies_ns25(&t, &handle, &spec).map_err(|e| anyhow!("{e}"))?,
            };
            let passed = report.passed();
            (
                json!({
                    "command": "rhoades",
                    "map": map,
                    "condition": format!("{condition:?}").to_lowercase(),
                    "structure": structure_id,
                    "samples": samples,
                    "seed": seed,
                    "report": serde_json::to_value(&report)?,
                }),
                if passed { 0 } else { 1 },
            )
        }
        _ => {
            let kind = match condition {
                ConditionArg::Ns25 => ConditionKind::Ns25,
                ConditionArg::S25 => ConditionKind::S25,
                ConditionArg::Nr25 => ConditionKind::Nr25,
                _ => ConditionKind::R25,
            };
            let scan = scan_condition(&t, &handle, kind, &spec).map_err(|e| anyhow!("{e}"))?;
            let all_hold = scan.holds == scan.samples;
            (
                json!({
                    "command": "rhoades",
                    "map": map,
                    "condition": serde_json::to_value(kind)?,
                    "structure": structure_id,
                    "samples": samples,
                    "seed": seed,
                    "condition_pass_rate": scan.pass_rate,
                    "holds": scan.holds,
                    "violations": serde_json::to_value(&scan.violations)?,
                    "all_hold": all_hold,
                }),
                if all_hold { 0 } else { 1 },
            )
        }
    };
    Ok((value, code))
}

fn read_point_csv(path: &Path) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| anyhow!("empty CSV"))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    for (i, c) in columns.iter().enumerate() {
        let expected = format!("x{}", i + 1);
        if *c != expected {
            bail!("CSV header must be x1,...,xn; column {} is '{c}'", i + 1);
        }
    }
    let dim = columns.len();
    let mut points = Vec::new();
    for (row, line) in lines.enumerate() {
        let coords = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<f64>, _>>()
            .with_context(|| format!("row {} of {}", row + 2, path.display()))?;
        if coords.len() != dim {
            bail!("row {} has {} columns, expected {dim}", row + 2, coords.len());
        }
        points.push(Vector::new(coords).map_err(|e| anyhow!("row {}: {e}", row + 2))?);
    }
    PointSet::new(points).map_err(|e| anyhow!("{e}"))
}

fn cmd_sets(file: &Path, snorm: Option<String>, seed: u64) -> Result<(Value, u8)> {
    let set = read_point_csv(file)?;
    let snorm_id = snorm.unwrap_or_else(|| format!("snorm.sum_abs.d{}", set.dim()));
    let structure = resolve(&snorm_id)?;
    let report = analyze(&set, &structure).map_err(|e| anyhow!("{e}"))?;
    let normal = normal_structure_witness(&set, &structure).map_err(|e| anyhow!("{e}"))?;
    let value = json!({
        "command": "sets",
        "file": file.display().to_string(),
        "snorm": snorm_id,
        "points": set.len(),
        "diameter": report.diameter,
        "chebyshev_radius": report.chebyshev_radius,
        "centre_indices": report.centre_indices,
        "diametral_flags": report.diametral_flags,
        "normal_structure": serde_json::to_value(&normal)?,
        "seed": seed,
    });
    Ok((value, 0))
}

fn cmd_seq(
    id: &str,
    snorm: Option<String>,
    eps: f64,
    horizon: usize,
    limit: Option<String>,
    csv: Option<PathBuf>,
    seed: u64,
) -> Result<(Value, u8)> {
    let snorm_id = snorm.unwrap_or_else(|| "snorm.sum_abs.d1".to_string());
    let structure = resolve(&snorm_id)?;
    let seq = named_sequence(id, horizon, eps).map_err(|e| anyhow!("{e}"))?;
    if structure.dim() != seq.dim {
        bail!("sequence {id} has dimension {}, snorm has {}", seq.dim, structure.dim());
    }

    let cauchy = check_cauchy(&seq, &structure).map_err(|e| anyhow!("{e}"))?;
    let completeness =
        classify_completeness_witness(&seq, &structure).map_err(|e| anyhow!("{e}"))?;

    let convergence = match &limit {
        Some(text) => {
            let x = parse_point(text, "--limit")?;
            Some(check_convergence(&seq, &x, &structure).map_err(|e| anyhow!("{e}"))?)
        }
        None => None,
    };

    if let Some(path) = &csv {
        let mut text = String::from("n,value\n");
        let candidate = &completeness.candidate;
        for n in 1..=horizon {
            let xn = (seq.generator)(n);
            let v = structure
                .pair_distance(&xn, candidate)
                .map_err(|e| anyhow!("{e}"))?;
            text.push_str(&format!("{n},{v}\n"));
        }
        output::write_text(path, &text)?;
    }

    let value = json!({
        "command": "seq",
        "seq": id,
        "snorm": snorm_id,
        "eps": eps,
        "horizon": horizon,
        "cauchy": serde_json::to_value(&cauchy)?,
        "completeness": serde_json::to_value(&completeness)?,
        "convergence": convergence.map(|v| serde_json::to_value(&v)).transpose()?,
        "csv": csv.as_ref().map(|p| p.display().to_string()),
        "seed": seed,
    });
    Ok((value, 0))
}

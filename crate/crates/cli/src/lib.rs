//! Command-line front end: builds a surface, runs one computation and writes a
//! deterministic JSON report (optionally CSV rows and an SVG figure).
//!
//! Exit codes: 0 on success, 1 on input or domain errors, 2 when an
//! `--assert-*` check fails.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod figure;
pub mod report;
pub mod surface;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypsurf::fuchsian::{
    conjugacy_classes, cusp_normalize, maximal_cusp, simplicity, FuchsianGroup,
};
use hypsurf::hyperbolic::HPoint;
use hypsurf::identities::{
    bridgeman_term, mcshane_term_d, orthogeodesic_spectrum_of, simple_torus_spectrum_of,
    verify_bridgeman_of, verify_mcshane_of, IdentityReport, BRIDGEMAN_DEFAULT_DEPTH,
};
use hypsurf::invariants::{injrad_at, sup_injrad, systoles, Region};
use hypsurf::surfaces::SurfaceKind;
use hypsurf::{Config, Exec, Precision};

pub use report::{Assertion, RunConfig, VERSION};
pub use surface::SurfaceInput;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] hypsurf::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(name = "hypsurf", version = report::RELEASE, about = "Geometry of hyperbolic surfaces via Fuchsian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    Double,
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumKind {
    /// Simple closed geodesics of a one-holed torus.
    Simple,
    /// Orthogeodesics of a pair of pants.
    Orthogeodesic,
    /// Closed geodesics found in the word ball.
    Classes,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// `sphere3`, `torus1:x,y,z`, `torus1:b`, `pants:l1,l2,l3`, or a JSON file.
    #[arg(long, default_value = "sphere3")]
    pub surface: String,
    /// Report destination (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also write the term or spectrum rows as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Also write an SVG figure of isometric circles and horodisks.
    #[arg(long)]
    pub figure: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Double)]
    pub precision: PrecisionArg,
    /// Run on the current thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Near {
    /// Exit with status 2 unless the main quantity is within `--tol` of this value.
    #[arg(long)]
    pub assert_near: Option<f64>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ResidualChecks {
    /// Exit with status 2 unless |target − partial sum| is at most this.
    #[arg(long)]
    pub assert_residual: Option<f64>,
    /// Exit with status 2 unless |target − partial sum| / target is at most this.
    #[arg(long)]
    pub assert_rel_residual: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// McShane–Mirzakhani sum on a one-holed torus with geodesic boundary.
    VerifyMcshane {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 25.0)]
        cutoff: f64,
        #[command(flatten)]
        checks: ResidualChecks,
    },
    /// Bridgeman orthogeodesic sum on a pair of pants.
    VerifyBridgeman {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 16.0)]
        cutoff: f64,
        #[arg(long, default_value_t = BRIDGEMAN_DEFAULT_DEPTH)]
        depth: usize,
        #[command(flatten)]
        checks: ResidualChecks,
    },
    /// Injectivity radius at a point.
    Injrad {
        #[command(flatten)]
        common: Common,
        /// Point `x,y` with `y > 0`.
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[command(flatten)]
        near: Near,
    },
    /// Lower bound for the supremum of the injectivity radius over a box.
    SupInjrad {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 60)]
        grid: usize,
        #[arg(long, default_value_t = 400)]
        refine: usize,
        /// Sampling box `x_min,x_max,y_min,y_max`.
        #[arg(long, default_value = "-1,1,0.1,3", allow_hyphen_values = true)]
        region: String,
        #[command(flatten)]
        near: Near,
    },
    /// Systole and shortest self-intersecting closed geodesic.
    Systole {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Only classes with |trace| at most this are examined.
        #[arg(long)]
        trace_bound: Option<f64>,
        #[command(flatten)]
        near: Near,
    },
    /// Area of the maximal embedded cusp region.
    CuspArea {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        near: Near,
    },
    /// Length spectrum listing.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10.0)]
        cutoff: f64,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Defaults to `simple` for tori, `orthogeodesic` for pants, `classes` otherwise.
        #[arg(long, value_enum)]
        kind: Option<SpectrumKind>,
    },
    /// SVG of isometric circles, horodisks and short axes.
    Figure {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

/// Rendered outputs of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    /// JSON report, or SVG for `figure`.
    pub report: String,
    pub csv: Option<String>,
    pub figure: Option<String>,
    pub assertions: Vec<Assertion>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

fn config_for(common: &Common) -> Config {
    let cfg = if common.sequential {
        Config::sequential()
    } else {
        Config::default().with_exec(Exec::Parallel)
    };
    cfg.with_precision(match common.precision {
        PrecisionArg::Double => Precision::Double,
        PrecisionArg::Extended => Precision::Extended,
    })
}

fn run_config(command: &str, common: &Common, surface: &SurfaceInput) -> RunConfig {
    RunConfig {
        command: command.into(),
        surface: surface.tag(),
        precision: match common.precision {
            PrecisionArg::Double => "double".into(),
            PrecisionArg::Extended => "extended".into(),
        },
        ..RunConfig::default()
    }
}

fn check_depth(depth: usize) -> Result<(), CliError> {
    if depth < 1 {
        return Err(CliError::Input("--depth must be at least 1".into()));
    }
    Ok(())
}

fn check_cutoff(cutoff: f64) -> Result<(), CliError> {
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(CliError::Input(format!(
            "--cutoff must be positive, got {cutoff}"
        )));
    }
    Ok(())
}

fn parse_list<const N: usize>(flag: &str, text: &str) -> Result<[f64; N], CliError> {
    let values: Vec<f64> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Input(format!("{flag}: {p:?}: {e}")))
        })
        .collect::<Result<_, _>>()?;
    values.try_into().map_err(|v: Vec<f64>| {
        CliError::Input(format!("{flag} expects {N} numbers, got {}", v.len()))
    })
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

fn envelope<T: Serialize>(
    config: &RunConfig,
    group: &FuchsianGroup,
    result: &T,
    assertions: &[Assertion],
) -> String {
    let env = report::Envelope {
        version: VERSION,
        config,
        generators: group.labels().iter().map(|s| s.to_string()).collect(),
        result,
        assertions: assertions.to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
    s.push('\n');
    s
}

fn near(near: &Near, quantity: &str, value: f64) -> Vec<Assertion> {
    near.assert_near
        .map(|e| Assertion::near(quantity, value, e, near.tol))
        .into_iter()
        .collect()
}

fn residual_checks(checks: &ResidualChecks, r: &IdentityReport) -> Vec<Assertion> {
    let mut out = Vec::new();
    if let Some(t) = checks.assert_residual {
        out.push(Assertion::at_most("residual", r.residual, t));
    }
    if let Some(t) = checks.assert_rel_residual {
        out.push(Assertion::at_most(
            "relative_residual",
            r.relative_residual(),
            t,
        ));
    }
    out
}

/// Cusp-normalized version of the input group.
fn normalized(group: &FuchsianGroup) -> Result<FuchsianGroup, CliError> {
    match &group.cusp {
        Some(c) if c.is_normalized() => Ok(group.clone()),
        Some(c) => Ok(cusp_normalize(group, &c.peripheral)?),
        None => Err(hypsurf::Error::NoCusp.into()),
    }
}

#[derive(Serialize)]
struct Labeled<'a, T: Serialize> {
    #[serde(flatten)]
    report: &'a T,
    labels: Vec<String>,
}

#[derive(Serialize)]
struct McShaneRow {
    slope: String,
    word: String,
    trace: f64,
    length: f64,
    term: f64,
}

#[derive(Serialize)]
struct SimpleRow {
    slope: String,
    word: String,
    trace: f64,
    length: f64,
}

#[derive(Serialize)]
struct BridgemanRow {
    from: usize,
    to: usize,
    word: String,
    length: f64,
    term: f64,
}

#[derive(Serialize)]
struct ClassRow {
    word: String,
    trace: f64,
    length: f64,
    primitive: bool,
    simple: Option<bool>,
}

#[derive(Serialize)]
struct SpectrumResult<'a, T: Serialize> {
    kind: &'static str,
    count: usize,
    entries: &'a [T],
}

/// Runs one command and renders its outputs without touching the filesystem
/// (apart from reading a surface file).
pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::VerifyMcshane {
            common,
            cutoff,
            checks,
        } => {
            check_cutoff(*cutoff)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = surface.group()?;
            let report = verify_mcshane_of(&group, *cutoff, &surface.tag())?;
            let b1 = report.targets.full;
            let rows = simple_torus_spectrum_of(&group, *cutoff)?
                .iter()
                .map(|g| {
                    Ok(McShaneRow {
                        slope: g.slope_string(),
                        word: group.word_string(&g.word),
                        trace: g.trace,
                        length: g.length,
                        term: mcshane_term_d(b1, g.length, g.length)?,
                    })
                })
                .collect::<Result<Vec<_>, hypsurf::Error>>()?;
            let mut cfg = run_config("verify-mcshane", common, &surface);
            cfg.cutoff = Some(*cutoff);
            let assertions = residual_checks(checks, &report);
            finish(
                common,
                &cfg,
                &group,
                &report,
                Some(to_csv(&rows)?),
                assertions,
            )
        }
        Command::VerifyBridgeman {
            common,
            cutoff,
            depth,
            checks,
        } => {
            check_cutoff(*cutoff)?;
            check_depth(*depth)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            if let Some(SurfaceKind::PairOfPants { l1, l2, l3 }) = surface.spec().map(|s| s.kind) {
                if let Some(k) = [l1, l2, l3].iter().position(|&l| l == 0.0) {
                    return Err(hypsurf::Error::CuspedBoundary(k).into());
                }
            }
            let group = surface.group()?;
            let exec_cfg = config_for(common);
            let report = verify_bridgeman_of(&group, *cutoff, *depth, &exec_cfg, &surface.tag())?;
            let rows = orthogeodesic_spectrum_of(&group, *cutoff, *depth, &exec_cfg)?
                .iter()
                .map(|o| {
                    Ok(BridgemanRow {
                        from: o.pair.0 + 1,
                        to: o.pair.1 + 1,
                        word: group.word_string(&o.word),
                        length: o.length,
                        term: bridgeman_term(o.length)?,
                    })
                })
                .collect::<Result<Vec<_>, hypsurf::Error>>()?;
            let mut cfg = run_config("verify-bridgeman", common, &surface);
            cfg.cutoff = Some(*cutoff);
            cfg.depth = Some(*depth);
            let assertions = residual_checks(checks, &report);
            finish(
                common,
                &cfg,
                &group,
                &report,
                Some(to_csv(&rows)?),
                assertions,
            )
        }
        Command::Injrad {
            common,
            point,
            depth,
            near: n,
        } => {
            check_depth(*depth)?;
            let [x, y] = parse_list::<2>("--point", point)?;
            let p = HPoint::try_new(x, y).map_err(|e| CliError::Input(format!("--point: {e}")))?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = surface.group()?;
            let report = injrad_at(&group, p, *depth, &config_for(common))?;
            let labels = report
                .realizing_words
                .iter()
                .map(|w| group.word_string(w))
                .collect();
            let mut cfg = run_config("injrad", common, &surface);
            cfg.depth = Some(*depth);
            cfg.point = Some([x, y]);
            let assertions = near(n, "radius", report.radius);
            finish(
                common,
                &cfg,
                &group,
                &Labeled {
                    report: &report,
                    labels,
                },
                None,
                assertions,
            )
        }
        Command::SupInjrad {
            common,
            depth,
            grid,
            refine,
            region,
            near: n,
        } => {
            check_depth(*depth)?;
            let [a, b, c, d] = parse_list::<4>("--region", region)?;
            let region =
                Region::new(a, b, c, d).map_err(|e| CliError::Input(format!("--region: {e}")))?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = surface.group()?;
            let report = sup_injrad(&group, region, *grid, *refine, *depth, &config_for(common))?;
            let labels = report
                .report
                .realizing_words
                .iter()
                .map(|w| group.word_string(w))
                .collect();
            let mut cfg = run_config("sup-injrad", common, &surface);
            cfg.depth = Some(*depth);
            cfg.grid = Some(*grid);
            cfg.refine_iters = Some(*refine);
            cfg.region = Some([a, b, c, d]);
            let assertions = near(n, "lower", report.lower);
            finish(
                common,
                &cfg,
                &group,
                &Labeled {
                    report: &report,
                    labels,
                },
                None,
                assertions,
            )
        }
        Command::Systole {
            common,
            depth,
            trace_bound,
            near: n,
        } => {
            check_depth(*depth)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = surface.group()?;
            let bound = trace_bound.unwrap_or(f64::INFINITY);
            let report = systoles(&group, *depth, bound, &config_for(common))?;
            let mut labels = vec![group.word_string(&report.class.rep)];
            if let (Some(c), Some(w)) = (&report.nonsimple_class, &report.witness) {
                labels.push(group.word_string(&c.rep));
                labels.push(group.word_string(w));
            }
            let mut cfg = run_config("systole", common, &surface);
            cfg.depth = Some(*depth);
            cfg.trace_bound = *trace_bound;
            let assertions = near(
                n,
                "nonsimple_length",
                report.nonsimple_length.unwrap_or(f64::NAN),
            );
            finish(
                common,
                &cfg,
                &group,
                &Labeled {
                    report: &report,
                    labels,
                },
                None,
                assertions,
            )
        }
        Command::CuspArea {
            common,
            depth,
            near: n,
        } => {
            check_depth(*depth)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = normalized(&surface.group()?)?;
            let report = maximal_cusp(&group, *depth, &config_for(common))?;
            let mut cfg = run_config("cusp-area", common, &surface);
            cfg.depth = Some(*depth);
            let assertions = near(n, "area", report.area);
            finish(common, &cfg, &group, &report, None, assertions)
        }
        Command::Spectrum {
            common,
            cutoff,
            depth,
            kind,
        } => {
            check_cutoff(*cutoff)?;
            check_depth(*depth)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let group = surface.group()?;
            let exec_cfg = config_for(common);
            let kind = kind.unwrap_or(match surface.spec().map(|s| s.kind) {
                Some(SurfaceKind::OneHoledTorus { .. }) => SpectrumKind::Simple,
                Some(SurfaceKind::PairOfPants { .. }) => SpectrumKind::Orthogeodesic,
                _ => SpectrumKind::Classes,
            });
            let mut cfg = run_config("spectrum", common, &surface);
            cfg.cutoff = Some(*cutoff);
            match kind {
                SpectrumKind::Simple => {
                    cfg.kind = Some("simple".into());
                    let rows: Vec<SimpleRow> = simple_torus_spectrum_of(&group, *cutoff)?
                        .iter()
                        .map(|g| SimpleRow {
                            slope: g.slope_string(),
                            word: group.word_string(&g.word),
                            trace: g.trace,
                            length: g.length,
                        })
                        .collect();
                    let result = SpectrumResult {
                        kind: "simple",
                        count: rows.len(),
                        entries: &rows,
                    };
                    finish(common, &cfg, &group, &result, Some(to_csv(&rows)?), vec![])
                }
                SpectrumKind::Orthogeodesic => {
                    cfg.kind = Some("orthogeodesic".into());
                    cfg.depth = Some(*depth);
                    let rows = orthogeodesic_spectrum_of(&group, *cutoff, *depth, &exec_cfg)?
                        .iter()
                        .map(|o| {
                            Ok(BridgemanRow {
                                from: o.pair.0 + 1,
                                to: o.pair.1 + 1,
                                word: group.word_string(&o.word),
                                length: o.length,
                                term: bridgeman_term(o.length)?,
                            })
                        })
                        .collect::<Result<Vec<_>, hypsurf::Error>>()?;
                    let result = SpectrumResult {
                        kind: "orthogeodesic",
                        count: rows.len(),
                        entries: &rows,
                    };
                    finish(common, &cfg, &group, &result, Some(to_csv(&rows)?), vec![])
                }
                SpectrumKind::Classes => {
                    cfg.kind = Some("classes".into());
                    cfg.depth = Some(*depth);
                    let max_trace = 2.0 * (0.5 * cutoff).cosh() * (1.0 + 1e-12);
                    let classes = conjugacy_classes(&group, max_trace, *depth, &exec_cfg)?;
                    let rows = classes
                        .iter()
                        .filter(|c| c.length <= *cutoff)
                        .map(|c| {
                            let s = if c.primitive {
                                Some(simplicity(&group, c, *depth, &exec_cfg)?.is_simple())
                            } else {
                                None
                            };
                            Ok(ClassRow {
                                word: group.word_string(&c.rep),
                                trace: c.trace.abs(),
                                length: c.length,
                                primitive: c.primitive,
                                simple: s,
                            })
                        })
                        .collect::<Result<Vec<_>, hypsurf::Error>>()?;
                    let result = SpectrumResult {
                        kind: "classes",
                        count: rows.len(),
                        entries: &rows,
                    };
                    finish(common, &cfg, &group, &result, Some(to_csv(&rows)?), vec![])
                }
            }
        }
        Command::Figure { common, depth } => {
            check_depth(*depth)?;
            let surface = SurfaceInput::parse(&common.surface)?;
            let mut group = surface.group()?;
            if group.cusp.is_some() {
                group = normalized(&group)?;
            }
            let svg = figure::render(&group, *depth, &config_for(common))?;
            Ok(Outcome {
                report: svg,
                csv: None,
                figure: None,
                assertions: vec![],
            })
        }
    }
}

fn finish<T: Serialize>(
    common: &Common,
    cfg: &RunConfig,
    group: &FuchsianGroup,
    result: &T,
    csv: Option<String>,
    assertions: Vec<Assertion>,
) -> Result<Outcome, CliError> {
    let figure = match &common.figure {
        Some(_) => {
            let g = match &group.cusp {
                Some(_) => normalized(group)?,
                None => group.clone(),
            };
            Some(figure::render(&g, 2, &config_for(common))?)
        }
        None => None,
    };
    Ok(Outcome {
        report: envelope(cfg, group, result, &assertions),
        csv,
        figure,
        assertions,
    })
}

fn common_of(command: &Command) -> &Common {
    match command {
        Command::VerifyMcshane { common, .. }
        | Command::VerifyBridgeman { common, .. }
        | Command::Injrad { common, .. }
        | Command::SupInjrad { common, .. }
        | Command::Systole { common, .. }
        | Command::CuspArea { common, .. }
        | Command::Spectrum { common, .. }
        | Command::Figure { common, .. } => common,
    }
}

fn write_to(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn write_outputs(command: &Command, outcome: &Outcome) -> Result<(), CliError> {
    let common = common_of(command);
    let primary = match (common.format, &outcome.csv) {
        (Format::Csv, Some(csv)) => csv.as_str(),
        (Format::Csv, None) => {
            return Err(CliError::Input(
                "this command has no tabular output; use --format json".into(),
            ));
        }
        (Format::Json, _) => outcome.report.as_str(),
    };
    write_to(&common.output, primary)?;
    if let (Some(path), Some(csv)) = (&common.csv, &outcome.csv) {
        write_to(&Some(path.clone()), csv)?;
    }
    if let (Some(path), Some(svg)) = (&common.figure, &outcome.figure) {
        write_to(&Some(path.clone()), svg)?;
    }
    for a in outcome.assertions.iter().filter(|a| !a.passed) {
        eprintln!(
            "assertion failed: {} = {} (expected {}, tolerance {})",
            a.quantity,
            a.value,
            a.expected
                .map_or("|·| ≤ tolerance".to_string(), |e| e.to_string()),
            a.tolerance
        );
    }
    Ok(())
}

fn init_threads_from_env() -> Result<(), CliError> {
    match std::env::var("HYPSURF_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
                CliError::Input(format!(
                    "HYPSURF_THREADS must be a positive integer, got {v:?}"
                ))
            })?;
            hypsurf::exec::init_threads(n).map_err(CliError::Input)
        }
        Err(_) => Ok(()),
    }
}

/// Parses arguments, runs the command and writes its outputs; returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let result = init_threads_from_env().and_then(|_| {
        let outcome = execute(&cli.command)?;
        write_outputs(&cli.command, &outcome)?;
        Ok(outcome)
    });
    match result {
        Ok(outcome) if outcome.passed() => 0,
        Ok(_) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Command {
        Cli::try_parse_from(std::iter::once("hypsurf").chain(args.iter().copied()))
            .unwrap()
            .command
    }

    #[test]
    fn reports_are_deterministic() {
        let cmd = parse(&["systole", "--surface", "sphere3", "--depth", "4"]);
        let a = execute(&cmd).unwrap().report;
        let b = execute(&cmd).unwrap().report;
        assert_eq!(a, b);
        let seq = execute(&parse(&[
            "systole",
            "--surface",
            "sphere3",
            "--depth",
            "4",
            "--sequential",
        ]))
        .unwrap()
        .report;
        assert_eq!(a, seq);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["config"]["depth"], 4);
        assert!(v["version"].as_str().unwrap().starts_with("hypsurf "));
    }

    #[test]
    fn extended_precision_agrees() {
        let length = |p: &str| {
            let out = execute(&parse(&[
                "systole",
                "--surface",
                "torus1:3,3,3",
                "--depth",
                "5",
                "--precision",
                p,
            ]))
            .unwrap();
            let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
            v["result"]["nonsimple_length"].as_f64().unwrap()
        };
        assert!((length("double") - length("extended")).abs() < 1e-12);
    }

    #[test]
    fn assertions_decide_the_exit_code() {
        let ok = execute(&parse(&[
            "cusp-area",
            "--surface",
            "sphere3",
            "--assert-near",
            "4",
            "--tol",
            "1e-9",
        ]))
        .unwrap();
        assert!(ok.passed());
        let bad = execute(&parse(&[
            "cusp-area",
            "--surface",
            "sphere3",
            "--assert-near",
            "5",
        ]))
        .unwrap();
        assert!(!bad.passed());
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            execute(&parse(&["systole", "--depth", "0"])),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            execute(&parse(&["injrad", "--point", "0,-1"])),
            Err(CliError::Input(_))
        ));
        assert!(execute(&parse(&["cusp-area", "--surface", "pants:1,1,1"])).is_err());
        assert!(execute(&parse(&["verify-bridgeman", "--surface", "pants:0,1,1"])).is_err());
        assert!(execute(&parse(&["verify-mcshane", "--surface", "torus1:3,3,3"])).is_err());
        assert_eq!(main_with_args(["hypsurf", "no-such-command"]), 1);
        assert_eq!(
            main_with_args(["hypsurf", "systole", "--surface", "klein"]),
            1
        );
    }

    #[test]
    fn spectrum_kinds() {
        let out = execute(&parse(&[
            "spectrum",
            "--surface",
            "torus1:3,3,3",
            "--cutoff",
            "4",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["result"]["kind"], "simple");
        assert_eq!(v["result"]["count"], 6);
        assert_eq!(out.csv.unwrap().lines().count(), 7);
        let out = execute(&parse(&[
            "spectrum",
            "--surface",
            "pants:2,2,2",
            "--cutoff",
            "3",
            "--depth",
            "4",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["result"]["kind"], "orthogeodesic");
        let out = execute(&parse(&[
            "spectrum",
            "--surface",
            "sphere3",
            "--cutoff",
            "3.6",
            "--depth",
            "4",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert_eq!(v["result"]["kind"], "classes");
        assert_eq!(v["result"]["entries"][0]["simple"], false);
    }

    #[test]
    fn group_files_are_accepted() {
        let dir = std::env::temp_dir().join(format!("hypsurf-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sphere.json");
        fs::write(
            &path,
            hypsurf::surfaces::thrice_punctured_sphere().to_json(),
        )
        .unwrap();
        let out = execute(&parse(&["cusp-area", "--surface", path.to_str().unwrap()])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert!((v["result"]["area"].as_f64().unwrap() - 4.0).abs() < 1e-9);
        let bad = dir.join("bad.json");
        fs::write(&bad, "{\n  \"kind\": \"pants\",\n  \"params\": [1, 2,\n}").unwrap();
        match execute(&parse(&["systole", "--surface", bad.to_str().unwrap()])) {
            Err(CliError::Input(msg)) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("{other:?}"),
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}

//! Command-line front end for `balloon-core`: series, functionals,
//! certification runs and boundary export.

pub mod output;
pub mod parse;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use balloon_core::balloon::{
    boundary_curve, kernel_series, member_from_function, member_from_schwarz, DEFAULT_CUSP_MARGIN,
};
use balloon_core::choi_y::{y_exact, y_oracle};
use balloon_core::verifier::{full_report, sweep_bound, FullReport};
use balloon_core::{
    BoundCheck, CoefficientSet, Complex64, Extremal, PowerSeries, SchwarzFunction, SweepConfig, Target, YInput,
};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::{machine, text, text_complex, write_csv, write_json, write_table, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Gap allowed between the closed-form Y and its grid oracle.
const Y_GAP_TOL: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "balloon",
    version,
    about = "Series, coefficient functionals and bound certification for the balloon class"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Truncation order of power series.
    #[arg(long, global = true, default_value_t = 12)]
    pub order: usize,
    /// Polar sweep grid as RADIALxANGULAR.
    #[arg(long, global = true, default_value = "24x64")]
    pub grid: String,
    /// Largest admissible gap between sweep maximum and bound.
    #[arg(long = "tol-sharp", global = true, default_value_t = 1e-3)]
    pub tol_sharp: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Taylor coefficients of B(z) = 1/(1 - log(1+z)).
    Kernel,
    /// Taylor coefficients of an extremal function.
    Extremal {
        #[arg(value_parser = ["f1", "f2", "f3", "F1", "F2", "F3"])]
        which: String,
    },
    /// Initial, logarithmic and inverse-logarithmic coefficients of one member.
    Coeffs {
        #[command(flatten)]
        source: Source,
    },
    /// Evaluate one coefficient functional on one member.
    Functional {
        /// Functional name, e.g. h22, t23, fs(0.5), hankel-gamma(2,1).
        id: String,
        #[command(flatten)]
        source: Source,
    },
    /// Certify sharp bounds by grid sweeps.
    Verify {
        /// Comma-separated targets (functionals, a2..a5, gamma1..gamma3); skips the audits.
        #[arg(long)]
        only: Option<String>,
        /// Extra Fekete–Szegő parameter (repeatable), as re,im or a complex literal.
        #[arg(long, action = clap::ArgAction::Append)]
        mu: Vec<String>,
    },
    /// Evaluate Y(A, B, C) against its grid oracle.
    YLemma {
        /// A,B,C as comma-separated reals.
        #[arg(long, conflicts_with = "random", required_unless_present = "random", allow_hyphen_values = true)]
        abc: Option<String>,
        /// Number of uniform samples from [-3, 3]^3.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Radial and angular resolution of the oracle.
        #[arg(long = "oracle-grid", default_value_t = 2000)]
        oracle_grid: usize,
    },
    /// Sample the boundary curve of B(D).
    Boundary {
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        /// Distance in theta kept from the cusp at ±pi.
        #[arg(long = "cusp-margin", default_value_t = DEFAULT_CUSP_MARGIN)]
        cusp_margin: f64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Schwarz coefficients b1,b2,b3[,b4,...] as complex literals (e.g. "i,0,0").
    #[arg(long, allow_hyphen_values = true)]
    pub schwarz: Option<String>,
    /// Schur parameters zeta1[,zeta2,...] in the closed unit disk, as complex literals.
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<String>,
}

/// Parses `argv`, runs the command and returns the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command; `Ok(false)` means a check failed.
pub fn execute(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    let mut sink: Box<dyn Write> = match &g.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let out: &mut dyn Write = &mut *sink;
    let ok = match &cli.command {
        Command::Kernel => kernel(out, g)?,
        Command::Extremal { which } => extremal(out, g, which)?,
        Command::Coeffs { source } => coeffs(out, g, source)?,
        Command::Functional { id, source } => functional(out, g, id, source)?,
        Command::Verify { only, mu } => verify(out, g, only.as_deref(), mu)?,
        Command::YLemma { abc, random, seed, oracle_grid } => {
            y_lemma(out, g, abc.as_deref(), *random, *seed, *oracle_grid)?
        }
        Command::Boundary { samples, cusp_margin } => boundary(out, g, *samples, *cusp_margin)?,
    };
    out.flush()?;
    Ok(ok)
}

/// Sweep configuration from the global flags.
pub fn sweep_config(g: &Global) -> Result<SweepConfig> {
    let (radial_points, angular_points) = parse::grid(&g.grid)?;
    let cfg =
        SweepConfig { radial_points, angular_points, tol_sharp: g.tol_sharp, order: g.order, ..SweepConfig::default() };
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Serialize)]
struct Coefficient {
    k: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct SeriesOutput<'a> {
    series: &'a str,
    order: usize,
    coefficients: Vec<Coefficient>,
}

fn write_series(out: &mut dyn Write, format: Format, name: &str, s: &PowerSeries, from: usize) -> Result<()> {
    let coefficients: Vec<Coefficient> =
        (from..=s.order()).map(|k| Coefficient { k, re: s[k].re, im: s[k].im }).collect();
    match format {
        Format::Json => write_json(out, &SeriesOutput { series: name, order: s.order(), coefficients }),
        Format::Csv => write_csv(
            out,
            &["k", "re", "im"],
            coefficients.iter().map(|c| vec![c.k.to_string(), machine(c.re), machine(c.im)]),
        ),
        Format::Text => {
            let rows: Vec<Vec<String>> = (from..=s.order()).map(|k| vec![k.to_string(), text_complex(s[k])]).collect();
            write_table(out, &["k", name], &rows)
        }
    }
}

fn kernel(out: &mut dyn Write, g: &Global) -> Result<bool> {
    let b = kernel_series(g.order)?;
    write_series(out, g.format, "B_k", &b.series, 0)?;
    Ok(true)
}

fn extremal(out: &mut dyn Write, g: &Global, which: &str) -> Result<bool> {
    let e = Extremal::parse(which).ok_or_else(|| anyhow!("unknown extremal `{which}`"))?;
    let member = e.member(g.order)?;
    write_series(out, g.format, &format!("{}: a_k", e.label()), &member.f, 1)?;
    Ok(true)
}

/// Coefficient set of the member described by `--schwarz` or `--zeta`.
pub fn member_coefficients(source: &Source, order: usize) -> Result<CoefficientSet> {
    let member = match (&source.schwarz, &source.zeta) {
        (Some(b), None) => {
            let b = parse::complex_list(b)?;
            if b.len() < 3 {
                bail!("--schwarz needs at least b1,b2,b3");
            }
            let mut w = vec![Complex64::new(0.0, 0.0)];
            w.extend(&b);
            let len = w.len() - 1;
            member_from_schwarz(&PowerSeries::new(w), len + 1)?
        }
        (None, Some(z)) => member_from_function(&SchwarzFunction::Schur(parse::complex_list(z)?), order.max(5))?,
        _ => bail!("give exactly one of --schwarz or --zeta"),
    };
    Ok(member.coefficient_set()?)
}

fn coefficient_rows(c: &CoefficientSet) -> Vec<(&'static str, Complex64)> {
    let mut rows = vec![("a2", c.a2), ("a3", c.a3), ("a4", c.a4)];
    rows.extend(c.a5.map(|a5| ("a5", a5)));
    rows.extend([
        ("gamma1", c.gamma1),
        ("gamma2", c.gamma2),
        ("gamma3", c.gamma3),
        ("big_gamma1", c.big_gamma1),
        ("big_gamma2", c.big_gamma2),
        ("big_gamma3", c.big_gamma3),
    ]);
    rows
}

fn coeffs(out: &mut dyn Write, g: &Global, source: &Source) -> Result<bool> {
    let set = member_coefficients(source, g.order)?;
    let rows = coefficient_rows(&set);
    match g.format {
        Format::Json => write_json(out, &set)?,
        Format::Csv => write_csv(
            out,
            &["name", "re", "im"],
            rows.iter().map(|(n, z)| vec![n.to_string(), machine(z.re), machine(z.im)]),
        )?,
        Format::Text => {
            let rows: Vec<Vec<String>> = rows.iter().map(|(n, z)| vec![n.to_string(), text_complex(*z)]).collect();
            write_table(out, &["name", "value"], &rows)?
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct FunctionalOutput {
    functional: String,
    re: f64,
    im: f64,
    modulus: f64,
}

fn functional(out: &mut dyn Write, g: &Global, id: &str, source: &Source) -> Result<bool> {
    let id = parse::functional(id)?;
    let set = member_coefficients(source, g.order)?;
    let value = id.evaluate(&set)?;
    let record = FunctionalOutput { functional: id.slug(), re: value.re, im: value.im, modulus: value.norm() };
    match g.format {
        Format::Json => write_json(out, &record)?,
        Format::Csv => write_csv(
            out,
            &["functional", "re", "im", "modulus"],
            [vec![record.functional, machine(record.re), machine(record.im), machine(record.modulus)]],
        )?,
        Format::Text => {
            writeln!(out, "{} = {}", record.functional, text_complex(value))?;
            writeln!(out, "|{}| = {}", record.functional, text(record.modulus))?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct SelectedChecks<'a> {
    config: SweepConfig,
    checks: &'a [BoundCheck],
}

fn verify(out: &mut dyn Write, g: &Global, only: Option<&str>, mu: &[String]) -> Result<bool> {
    let cfg = sweep_config(g)?;
    let mus = mu.iter().map(|m| parse::complex_value(m)).collect::<Result<Vec<_>>>()?;
    if let Some(only) = only {
        let targets = parse::split_top_level(only).into_iter().map(parse::target).collect::<Result<Vec<Target>>>()?;
        if targets.is_empty() {
            bail!("--only needs at least one target");
        }
        let checks = targets.iter().map(|t| sweep_bound(t, &cfg)).collect::<balloon_core::Result<Vec<_>>>()?;
        match g.format {
            Format::Json => write_json(out, &SelectedChecks { config: cfg, checks: &checks })?,
            Format::Csv => write_checks_csv(out, &checks)?,
            Format::Text => write_checks_text(out, &checks)?,
        }
        return Ok(checks.iter().all(BoundCheck::certified));
    }
    let report = full_report(&cfg, &mus)?;
    let checks: Vec<BoundCheck> = report.checks().cloned().collect();
    match g.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => write_checks_csv(out, &checks)?,
        Format::Text => {
            write_checks_text(out, &checks)?;
            writeln!(out)?;
            write_audits_text(out, &report)?;
        }
    }
    Ok(report.all_certified() && report.audits_passed())
}

const CHECK_HEADER: [&str; 11] = [
    "name",
    "route",
    "bound_num",
    "bound_den",
    "bound",
    "observed",
    "argmax",
    "evaluations",
    "extremal",
    "extremal_value",
    "verdict",
];

fn route_label(check: &BoundCheck) -> &'static str {
    match check.route {
        balloon_core::verifier::Route::Caratheodory => "caratheodory",
        balloon_core::verifier::Route::Schwarz => "schwarz",
    }
}

fn write_checks_csv(out: &mut dyn Write, checks: &[BoundCheck]) -> Result<()> {
    write_csv(
        out,
        &CHECK_HEADER,
        checks.iter().map(|c| {
            let argmax: Vec<String> = c.argmax.iter().map(|z| format!("{},{}", machine(z.re), machine(z.im))).collect();
            vec![
                c.name.clone(),
                route_label(c).into(),
                c.bound.num.to_string(),
                c.bound.den.to_string(),
                machine(c.bound.value),
                machine(c.observed),
                argmax.join(";"),
                c.evaluations.to_string(),
                c.extremal.label().into(),
                machine(c.extremal_value),
                c.verdict.label().into(),
            ]
        }),
    )
}

fn write_checks_text(out: &mut dyn Write, checks: &[BoundCheck]) -> Result<()> {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                format!("{}/{}", c.bound.num, c.bound.den),
                text(c.bound.value),
                text(c.observed),
                c.extremal.label().into(),
                text(c.extremal_value),
                c.evaluations.to_string(),
                c.verdict.label().into(),
            ]
        })
        .collect();
    write_table(
        out,
        &["name", "bound", "value", "observed", "extremal", "at extremal", "evaluations", "verdict"],
        &rows,
    )
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn write_audits_text(out: &mut dyn Write, r: &FullReport) -> Result<()> {
    writeln!(out, "envelopes")?;
    for c in &r.envelopes.checks {
        writeln!(
            out,
            "  {:<20} max {} at {} (quoted {}, deviation {})  {}",
            c.name,
            text(c.located.value),
            text(c.located.at),
            text(c.quoted_max),
            text(c.deviation),
            pass(c.passed)
        )?;
    }
    for n in &r.envelopes.notes {
        writeln!(
            out,
            "  {:<20} prefactor {} (quoted {}), residuals quoted {} derived {}  {}",
            n.case.label(),
            text(n.prefactor),
            text(n.quoted_prefactor),
            text(n.quoted_form_residual),
            text(n.derived_form_residual),
            if n.consistent { "consistent" } else { "inconsistent" }
        )?;
    }
    writeln!(out, "proof scalars")?;
    for a in &r.scalar_audits {
        let t6 = a.t6_at_zeta_prime.map_or_else(|| "-".into(), text);
        writeln!(
            out,
            "  {:<20} {} points, closed-form residual {}, T6(zeta') {}  {}",
            a.case.label(),
            a.points,
            text(a.closed_form_residual),
            t6,
            pass(a.passed())
        )?;
        for f in &a.failures {
            writeln!(out, "    {f}")?;
        }
    }
    let m = &r.m_surface;
    writeln!(out, "m surface")?;
    writeln!(
        out,
        "  max {} at ({}, {}) (quoted {})  {}",
        text(m.located.value),
        text(m.located.x),
        text(m.located.y),
        text(m.quoted_max),
        pass(m.max_passed)
    )?;
    writeln!(
        out,
        "  edges: y=0 {}, x=0 {}; quoted edge polynomials {} and {}  {}",
        text(m.on_x_axis.value),
        text(m.on_y_axis.value),
        text(m.quoted_x_axis.value),
        text(m.quoted_y_axis.value),
        pass(m.edges_passed)
    )?;
    writeln!(out, "rotation")?;
    for c in &r.rotation {
        writeln!(
            out,
            "  {:<20} real {} complex {} excess {}  {}",
            c.name,
            text(c.real_sup),
            text(c.complex_sup),
            text(c.excess),
            pass(c.passed)
        )?;
    }
    let x = &r.cross_route;
    writeln!(out, "cross route")?;
    writeln!(
        out,
        "  closed forms gap {} ({} samples), series gap {} ({} samples)  {}",
        text(x.closed_form_gap),
        x.samples,
        text(x.series_gap),
        x.series_samples,
        pass(x.passed)
    )?;
    let b = &r.lemma5_box;
    writeln!(out, "coefficient box")?;
    writeln!(
        out,
        "  t23 sup {} over the box vs bound {} (excess {}, {} evaluations)",
        text(b.sup),
        text(b.bound.value),
        text(b.excess),
        b.evaluations
    )?;
    Ok(())
}

#[derive(Serialize)]
struct YRow {
    a: f64,
    b: f64,
    c: f64,
    y: f64,
    branch: balloon_core::YBranch,
    oracle: f64,
    gap: f64,
}

#[derive(Serialize)]
struct YOutput {
    oracle_grid: usize,
    max_gap: f64,
    rows: Vec<YRow>,
}

fn y_lemma(
    out: &mut dyn Write,
    g: &Global,
    abc: Option<&str>,
    random: Option<usize>,
    seed: u64,
    oracle_grid: usize,
) -> Result<bool> {
    if oracle_grid < 2 {
        bail!("--oracle-grid must be at least 2");
    }
    let inputs: Vec<YInput> = match (abc, random) {
        (Some(abc), None) => {
            let [a, b, c] = parse::real_list::<3>(abc)?;
            vec![YInput::new(a, b, c)?]
        }
        (None, Some(n)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|_| {
                    let mut draw = || rng.random_range(-3.0..=3.0);
                    YInput::new(draw(), draw(), draw())
                })
                .collect::<balloon_core::Result<_>>()?
        }
        _ => bail!("give exactly one of --abc or --random"),
    };
    let rows: Vec<YRow> = inputs
        .iter()
        .map(|y| {
            let exact = y_exact(y);
            let oracle = y_oracle(y, oracle_grid);
            YRow { a: y.a, b: y.b, c: y.c, y: exact.value, branch: exact.branch, oracle, gap: exact.value - oracle }
        })
        .collect();
    let ok = rows.iter().all(|r| r.gap >= -1e-9 && r.gap <= Y_GAP_TOL);
    let max_gap = rows.iter().map(|r| r.gap).fold(0.0, f64::max);
    match g.format {
        Format::Json => write_json(out, &YOutput { oracle_grid, max_gap, rows })?,
        Format::Csv => write_csv(
            out,
            &["a", "b", "c", "y", "branch", "oracle", "gap"],
            rows.iter().map(|r| {
                vec![
                    machine(r.a),
                    machine(r.b),
                    machine(r.c),
                    machine(r.y),
                    r.branch.label().into(),
                    machine(r.oracle),
                    machine(r.gap),
                ]
            }),
        )?,
        Format::Text => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        text(r.a),
                        text(r.b),
                        text(r.c),
                        text(r.y),
                        r.branch.label().into(),
                        text(r.oracle),
                        text(r.gap),
                    ]
                })
                .collect();
            write_table(out, &["A", "B", "C", "Y", "branch", "oracle", "gap"], &table)?;
            writeln!(out, "max gap {} (oracle grid {})", text(max_gap), oracle_grid)?;
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct BoundaryRow {
    theta: f64,
    re_w: f64,
    im_w: f64,
}

#[derive(Serialize)]
struct BoundaryOutput {
    samples: usize,
    cusp_margin: f64,
    points: Vec<BoundaryRow>,
}

fn boundary(out: &mut dyn Write, g: &Global, samples: usize, cusp_margin: f64) -> Result<bool> {
    let points: Vec<BoundaryRow> = boundary_curve(samples, cusp_margin)?
        .into_iter()
        .map(|p| BoundaryRow { theta: p.theta, re_w: p.w.re, im_w: p.w.im })
        .collect();
    match g.format {
        Format::Json => write_json(out, &BoundaryOutput { samples, cusp_margin, points })?,
        Format::Csv => write_csv(
            out,
            &["theta", "re_w", "im_w"],
            points.iter().map(|p| vec![machine(p.theta), machine(p.re_w), machine(p.im_w)]),
        )?,
        Format::Text => {
            let rows: Vec<Vec<String>> =
                points.iter().map(|p| vec![text(p.theta), text(p.re_w), text(p.im_w)]).collect();
            write_table(out, &["theta", "re_w", "im_w"], &rows)?
        }
    }
    Ok(true)
}

//! Command-line front end behind the `dfsbary` binary.
//!
//! Exit codes: 0 success, 2 usage error, 3 bad input data, 4 numerical
//! failure or tracer divergence.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convergence::{self, geometric_decay, Target};
use crate::csvio;
use crate::disk_interp::DiskInterpolant;
use crate::error::{Error, Result};
use crate::gauss_legendre::{gl_nodes, legendre};
use crate::grids::{DiskGrid, DiskKind, SphereGrid, SphereKind};
use crate::oracles::{disk_oracle, sphere_oracle, MAX_ORACLE_NODES};
use crate::sphere_interp::SphereInterpolant;
use crate::transport::{run_transport_with, TransportConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

/// Ratio between consecutive errors required by the decay verdict.
pub const DECAY_RATIO: f64 = 5.0;
/// Errors at or below this level are treated as converged.
pub const DECAY_FLOOR: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(name = "dfsbary", version, about = "Barycentric interpolation on sphere and disk grids")]
pub struct Cli {
    /// Worker threads for batch evaluation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Eq,
    Seq,
    Gl,
    Ch1,
    Ch2,
    Glr,
}

/// A grid kind resolved to its geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Sphere(SphereKind),
    Disk(DiskKind),
}

impl GridArg {
    pub fn geometry(self) -> Geometry {
        match self {
            GridArg::Eq => Geometry::Sphere(SphereKind::Eq),
            GridArg::Seq => Geometry::Sphere(SphereKind::Seq),
            GridArg::Gl => Geometry::Sphere(SphereKind::Gl),
            GridArg::Ch1 => Geometry::Disk(DiskKind::Ch1),
            GridArg::Ch2 => Geometry::Disk(DiskKind::Ch2),
            GridArg::Glr => Geometry::Disk(DiskKind::GlRadial),
        }
    }
}

#[derive(Debug, Args)]
pub struct GridSpec {
    #[arg(long, value_enum)]
    pub grid: GridArg,
    /// Half the number of longitudes.
    #[arg(long)]
    pub m: usize,
    /// Colatitudes (sphere) or radial index `n`, giving `n + 1` radii (disk).
    /// Defaults to `m`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Put a radius at the origin (disk grids only).
    #[arg(long)]
    pub include_origin: bool,
}

enum Built {
    Sphere(SphereGrid),
    Disk(DiskGrid),
}

impl GridSpec {
    fn build(&self) -> Result<Built> {
        let n = self.n.unwrap_or(self.m);
        Ok(match self.grid.geometry() {
            Geometry::Sphere(k) => Built::Sphere(SphereGrid::new(k, self.m, n)?),
            Geometry::Disk(k) => Built::Disk(DiskGrid::new(k, self.m, n, self.include_origin)?),
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the grid coordinates as `index,phi` and `index,coord` CSV files.
    Grid {
        #[command(flatten)]
        spec: GridSpec,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Interpolate grid samples at scattered points.
    Interp {
        #[command(flatten)]
        spec: GridSpec,
        /// Headerless `rows x 2m` sample matrix.
        #[arg(long)]
        samples: PathBuf,
        /// Two-column points file with a header, e.g. `phi,theta`.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Evaluate with the slow reference formulas instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Interpolation error of the standard test function for several `m`.
    Converge {
        #[arg(long, value_enum)]
        grid: GridArg,
        /// Comma-separated values of `m` (`n = m`).
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        #[arg(long)]
        include_origin: bool,
        #[arg(long, default_value_t = 2000)]
        eval_count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Interpolate the constant 1 instead, to check the harness.
        #[arg(long)]
        constant: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a semi-Lagrangian transport simulation from a JSON config.
    Sla {
        config: PathBuf,
        /// Report path; overrides the config's `output`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quick internal consistency checks.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if cli.threads == Some(0) {
        eprintln!("error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    if let Some(t) = cli.threads {
        // only fails if a pool was already installed, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match dispatch(cli.command, cli.threads) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Divergence { .. } | Error::Numerical(_) => EXIT_NUMERICAL,
        _ => EXIT_DATA,
    }
}

fn dispatch(cmd: Command, threads: Option<usize>) -> Result<i32> {
    match cmd {
        Command::Grid { spec, out } => cmd_grid(&spec, &out),
        Command::Interp {
            spec,
            samples,
            points,
            out,
            oracle,
        } => cmd_interp(&spec, &samples, &points, &out, oracle),
        Command::Converge {
            grid,
            m,
            include_origin,
            eval_count,
            seed,
            constant,
            out,
        } => {
            let target = if constant {
                Target::Constant
            } else {
                Target::Standard
            };
            cmd_converge(grid, &m, include_origin, eval_count, seed, target, &out)
        }
        Command::Sla { config, out } => cmd_sla(&config, out, threads),
        Command::Selftest { seed } => Ok(cmd_selftest(seed)),
    }
}

fn cmd_grid(spec: &GridSpec, out: &Path) -> Result<i32> {
    let (phi, coord) = match spec.build()? {
        Built::Sphere(g) => (g.phi, g.theta),
        Built::Disk(g) => (g.phi, g.rho),
    };
    csvio::write_coords(&out.join("phi.csv"), "phi", &phi)?;
    csvio::write_coords(&out.join("coord.csv"), "coord", &coord)?;
    println!("wrote {} and {}", out.join("phi.csv").display(), out.join("coord.csv").display());
    Ok(EXIT_OK)
}

fn oracle_size_check(rows: usize, m: usize) -> Result<()> {
    if rows > MAX_ORACLE_NODES || 2 * m > MAX_ORACLE_NODES {
        return Err(Error::Size(format!(
            "--oracle supports at most {MAX_ORACLE_NODES} nodes per direction"
        )));
    }
    Ok(())
}

fn cmd_interp(spec: &GridSpec, samples: &Path, points: &Path, out: &Path, oracle: bool) -> Result<i32> {
    let pts = csvio::read_points(points)?;
    let values = match spec.build()? {
        Built::Sphere(g) => {
            let f = csvio::read_samples(samples, g.n, g.n_lon())?;
            if oracle {
                oracle_size_check(g.n, g.m)?;
                pts.iter()
                    .map(|&(p, t)| sphere_oracle(&g, &f, p, t))
                    .collect::<Result<Vec<_>>>()?
            } else {
                SphereInterpolant::new(&g, &f)?.eval_batch(&pts)
            }
        }
        Built::Disk(g) => {
            let f = csvio::read_samples(samples, g.n_rad(), g.n_lon())?;
            if oracle {
                oracle_size_check(2 * g.n_rad(), g.m)?;
                pts.iter()
                    .map(|&(p, r)| disk_oracle(&g, &f, p, r))
                    .collect::<Result<Vec<_>>>()?
            } else {
                DiskInterpolant::new(&g, &f)?.eval_batch(&pts)?
            }
        }
    };
    let comment = format!("evaluator={}", if oracle { "oracle" } else { "barycentric" });
    csvio::write_values(out, &[comment], &values)?;
    Ok(EXIT_OK)
}

fn cmd_converge(
    grid: GridArg,
    m_list: &[usize],
    include_origin: bool,
    eval_count: usize,
    seed: u64,
    target: Target,
    out: &Path,
) -> Result<i32> {
    let rows = match grid.geometry() {
        Geometry::Sphere(k) => convergence::sphere_study(k, m_list, eval_count, seed, target)?,
        Geometry::Disk(k) => {
            convergence::disk_study(k, include_origin, m_list, eval_count, seed, target)?
        }
    };
    let comments = vec![
        format!("seed={seed}"),
        format!("eval_count={eval_count}"),
        format!("target={}", if target == Target::Constant { "constant" } else { "standard" }),
    ];
    csvio::write_convergence(out, &comments, &rows)?;
    for r in &rows {
        println!("{:>4} m={:<4} N={:<7} rel_max_err={:.3e}", r.grid, r.m, r.points, r.rel_max_err);
    }
    let errs: Vec<f64> = rows.iter().map(|r| r.rel_max_err).collect();
    let ok = geometric_decay(&errs, DECAY_RATIO, DECAY_FLOOR);
    println!(
        "geometric decay (ratio > {DECAY_RATIO} until <= {DECAY_FLOOR:e}): {}",
        if ok { "yes" } else { "no" }
    );
    Ok(EXIT_OK)
}

fn snapshot_path(report: &Path, step: usize) -> PathBuf {
    let stem = report
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sla".into());
    report.with_file_name(format!("{stem}_step{step:05}.csv"))
}

fn cmd_sla(config: &Path, out: Option<PathBuf>, threads: Option<usize>) -> Result<i32> {
    let mut cfg = TransportConfig::from_json_file(config)?;
    if out.is_some() {
        cfg.output = out;
    }
    if threads.is_some() {
        cfg.threads = threads;
    }
    let report_path = cfg.output.clone();
    let cols = 2 * cfg.m;
    let (_, report) = run_transport_with(&cfg, |step, field| match &report_path {
        Some(p) => csvio::write_matrix(&snapshot_path(p, step), &field.values, cols),
        None => Ok(()),
    })?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::Numerical(format!("report serialization: {e}")))?;
    if let Some(p) = &report_path {
        if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
        std::fs::write(p, &json).map_err(|e| Error::io(p, e))?;
    }
    println!("{json}");
    Ok(EXIT_OK)
}

/// Outcome of one self-test check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Fast fast-vs-oracle and Gauss–Legendre checks on small random cases.
pub fn selftest(seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut worst = 0.0_f64;
    for n in 2..=20 {
        let rule = gl_nodes(n)?;
        for &x in &rule.nodes {
            worst = worst.max(legendre(n, x).0.abs());
        }
    }
    checks.push(Check {
        name: "gauss-legendre residual",
        passed: worst < 1e-13,
        detail: format!("max |P_N(x_j)| = {worst:.2e}"),
    });

    let mut worst = 0.0_f64;
    for kind in SphereKind::ALL {
        let g = SphereGrid::new(kind, rng.gen_range(1..=8), rng.gen_range(2..=9))?;
        let f: Vec<f64> = (0..g.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let s = SphereInterpolant::new(&g, &f)?;
        for _ in 0..50 {
            let (p, t) = (rng.gen_range(0.0..6.3), rng.gen_range(0.0..3.14));
            worst = worst.max(rel_diff(s.eval(p, t), sphere_oracle(&g, &f, p, t)?));
        }
    }
    checks.push(Check {
        name: "sphere vs oracle",
        passed: worst < 1e-12,
        detail: format!("max rel diff = {worst:.2e}"),
    });

    let mut worst = 0.0_f64;
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let g = DiskGrid::new(kind, rng.gen_range(1..=8), rng.gen_range(1..=8), origin)?;
            let f: Vec<f64> = (0..g.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let s = DiskInterpolant::new(&g, &f)?;
            for _ in 0..50 {
                let (p, r) = (rng.gen_range(0.0..6.3), rng.gen_range(0.0..1.0));
                worst = worst.max(rel_diff(s.eval(p, r)?, disk_oracle(&g, &f, p, r)?));
            }
        }
    }
    checks.push(Check {
        name: "disk vs oracle",
        passed: worst < 1e-12,
        detail: format!("max rel diff = {worst:.2e}"),
    });

    let rows = convergence::sphere_study(SphereKind::Seq, &[12], 200, seed, Target::Constant)?;
    checks.push(Check {
        name: "constant reproduction",
        passed: rows[0].rel_max_err < 1e-13,
        detail: format!("rel err = {:.2e}", rows[0].rel_max_err),
    });
    Ok(checks)
}

fn cmd_selftest(seed: u64) -> i32 {
    match selftest(seed) {
        Ok(checks) => {
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            if checks.iter().all(|c| c.passed) {
                EXIT_OK
            } else {
                EXIT_NUMERICAL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        assert!(selftest(5).unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["dfsbary", "grid", "--grid", "hex", "--m", "4", "--out", "x"]), EXIT_USAGE);
        assert_eq!(run(["dfsbary", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::Size("x".into())), EXIT_DATA);
        assert_eq!(
            exit_code(&Error::Divergence {
                step: 3,
                detail: "nan".into()
            }),
            EXIT_NUMERICAL
        );
    }
}

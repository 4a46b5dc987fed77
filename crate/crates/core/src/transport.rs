//! Semi-Lagrangian advection of a tracer on the unit sphere.
//!
//! Each step traces every grid node backward along the deformational flow to
//! its departure point and interpolates the current tracer there. The flow
//! reverses at `t = T/2`, so at `t = T` the exact solution is the initial
//! condition and the final error is measured against it.
//!
//! The velocity field and the initial conditions use latitude; the
//! interpolants use colatitude. [`colatitude`] is the only conversion.

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grids::{SphereGrid, SphereKind};
use crate::sphere_interp::{SphereInterpolant, SphereTables};

/// Flow period of the deformational test.
pub const PERIOD: f64 = 5.0;

/// Reference max speed of the flow, used to express time steps in CFL units.
pub const U_MAX: f64 = 2.93;

/// `theta_colat = pi/2 - theta_lat`.
pub fn colatitude(lat: f64) -> f64 {
    FRAC_PI_2 - lat
}

/// The reversing deformational flow.
///
/// `u = (10/T) cos(pi t/T) sin^2(lambda - 2 pi t/T) sin(2 theta) + (2 pi/T) cos(theta)`,
/// `v = (10/T) cos(pi t/T) sin(2 (lambda - 2 pi t/T)) cos(theta)`, with
/// `theta` the latitude; both components are multiplied by `scale`. Both
/// deformational terms depend on longitude only through the rotating
/// `lambda - 2 pi t/T`, which is what makes the flow return at `t = T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityField {
    pub period: f64,
    pub scale: f64,
    /// Evaluate at this time regardless of the requested one.
    pub frozen_at: Option<f64>,
}

impl Default for VelocityField {
    fn default() -> Self {
        Self {
            period: PERIOD,
            scale: 1.0,
            frozen_at: None,
        }
    }
}

impl VelocityField {
    pub fn scaled(scale: f64) -> Self {
        Self {
            scale,
            ..Self::default()
        }
    }

    pub fn frozen(t: f64) -> Self {
        Self {
            frozen_at: Some(t),
            ..Self::default()
        }
    }

    /// `(u, v)` in the longitude and latitude directions.
    pub fn eval(&self, lambda: f64, lat: f64, t: f64) -> (f64, f64) {
        let t = self.frozen_at.unwrap_or(t);
        let tp = self.period;
        let amp = 10.0 / tp * (PI * t / tp).cos();
        let shift = 2.0 * PI * t / tp;
        let s = (lambda - shift).sin();
        let u = amp * s * s * (2.0 * lat).sin() + 2.0 * PI / tp * lat.cos();
        let v = amp * (2.0 * (lambda - shift)).sin() * lat.cos();
        (self.scale * u, self.scale * v)
    }

    /// Cartesian velocity at the unit vector `p`.
    fn cartesian(&self, p: [f64; 3], t: f64) -> [f64; 3] {
        let [x, y, z] = p;
        let lambda = y.atan2(x);
        let lat = z.clamp(-1.0, 1.0).asin();
        let (u, v) = self.eval(lambda, lat, t);
        let (sl, cl) = lambda.sin_cos();
        let (st, ct) = lat.sin_cos();
        [
            -u * sl - v * st * cl,
            u * cl - v * st * sl,
            v * ct,
        ]
    }
}

pub fn eval_velocity(field: &VelocityField, lambda: f64, lat: f64, t: f64) -> (f64, f64) {
    field.eval(lambda, lat, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialCondition {
    CosineBells,
    GaussianBells,
}

/// Bell centers as `(lambda, lat)`.
pub const CENTERS: [(f64, f64); 2] = [(PI / 6.0, 0.0), (-PI / 6.0, 0.0)];

/// Cosine of the great-circle distance between two `(lambda, lat)` points.
pub fn great_circle_cos(lambda: f64, lat: f64, lambda_c: f64, lat_c: f64) -> f64 {
    (lat.sin() * lat_c.sin() + lat.cos() * lat_c.cos() * (lambda - lambda_c).cos()).clamp(-1.0, 1.0)
}

pub fn initial_condition(kind: InitialCondition, lambda: f64, lat: f64) -> f64 {
    let r = CENTERS.map(|(lc, tc)| great_circle_cos(lambda, lat, lc, tc));
    match kind {
        InitialCondition::CosineBells => {
            let bell = |ri: f64| {
                let d = ri.acos();
                if d < 0.5 {
                    0.5 * (1.0 + (2.0 * PI * d).cos())
                } else {
                    0.0
                }
            };
            0.1 + 0.9 * (bell(r[0]) + bell(r[1]))
        }
        InitialCondition::GaussianBells => {
            0.95 * ((-10.0 * (1.0 - r[0])).exp() + (-10.0 * (1.0 - r[1])).exp())
        }
    }
}

fn to_cartesian(lambda: f64, lat: f64) -> [f64; 3] {
    let (sl, cl) = lambda.sin_cos();
    let (st, ct) = lat.sin_cos();
    [ct * cl, ct * sl, st]
}

fn normalize(p: [f64; 3]) -> [f64; 3] {
    let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    [p[0] / r, p[1] / r, p[2] / r]
}

fn axpy(p: [f64; 3], terms: &[(f64, [f64; 3])]) -> [f64; 3] {
    let mut out = p;
    for &(c, k) in terms {
        for i in 0..3 {
            out[i] += c * k[i];
        }
    }
    out
}

/// One Cash–Karp step (fifth-order solution) of size `h` from time `t`,
/// projected back onto the sphere.
fn cash_karp_step(field: &VelocityField, p: [f64; 3], t: f64, h: f64) -> [f64; 3] {
    let f = |q: [f64; 3], s: f64| field.cartesian(normalize(q), s);
    let k1 = f(p, t);
    let k2 = f(axpy(p, &[(h / 5.0, k1)]), t + h / 5.0);
    let k3 = f(
        axpy(p, &[(h * 3.0 / 40.0, k1), (h * 9.0 / 40.0, k2)]),
        t + 0.3 * h,
    );
    let k4 = f(
        axpy(p, &[(h * 0.3, k1), (-h * 0.9, k2), (h * 1.2, k3)]),
        t + 0.6 * h,
    );
    let k5 = f(
        axpy(
            p,
            &[
                (-h * 11.0 / 54.0, k1),
                (h * 2.5, k2),
                (-h * 70.0 / 27.0, k3),
                (h * 35.0 / 27.0, k4),
            ],
        ),
        t + h,
    );
    let k6 = f(
        axpy(
            p,
            &[
                (h * 1631.0 / 55296.0, k1),
                (h * 175.0 / 512.0, k2),
                (h * 575.0 / 13824.0, k3),
                (h * 44275.0 / 110592.0, k4),
                (h * 253.0 / 4096.0, k5),
            ],
        ),
        t + 0.875 * h,
    );
    normalize(axpy(
        p,
        &[
            (h * 37.0 / 378.0, k1),
            (h * 250.0 / 621.0, k3),
            (h * 125.0 / 594.0, k4),
            (h * 512.0 / 1771.0, k6),
        ],
    ))
}

/// Integrate a trajectory from `(lambda, lat)` at `t0` over a signed time
/// span `dt` in `substeps` equal steps.
pub fn integrate_trajectory(
    field: &VelocityField,
    lambda: f64,
    lat: f64,
    t0: f64,
    dt: f64,
    substeps: usize,
) -> (f64, f64) {
    if field.scale == 0.0 {
        return (lambda, lat);
    }
    let steps = substeps.max(1);
    let h = dt / steps as f64;
    let mut p = to_cartesian(lambda, lat);
    for i in 0..steps {
        p = cash_karp_step(field, p, t0 + i as f64 * h, h);
    }
    (p[1].atan2(p[0]), p[2].clamp(-1.0, 1.0).asin())
}

/// Departure point at `t_arrive - dt` of the particle that reaches
/// `(lambda, lat)` at `t_arrive`.
pub fn trace_departure(
    lambda: f64,
    lat: f64,
    t_arrive: f64,
    dt: f64,
    field: &VelocityField,
    substeps: usize,
) -> (f64, f64) {
    integrate_trajectory(field, lambda, lat, t_arrive, -dt, substeps)
}

fn default_t_final() -> f64 {
    PERIOD
}

fn default_substeps() -> usize {
    1
}

fn default_scale() -> f64 {
    1.0
}

/// Settings of one transport run; also the JSON run-config format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransportConfig {
    pub grid: SphereKind,
    /// Half the number of longitudes; the grid has `m + 1` latitudes.
    pub m: usize,
    pub ic: InitialCondition,
    pub steps: usize,
    #[serde(default = "default_t_final")]
    pub t_final: f64,
    #[serde(default = "default_substeps")]
    pub substeps: usize,
    /// Worker threads; `None` uses the global pool.
    #[serde(default)]
    pub threads: Option<usize>,
    /// Where to write the JSON report.
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default = "default_scale")]
    pub velocity_scale: f64,
    /// Times at which to dump the tracer as CSV next to the report.
    #[serde(default)]
    pub snapshots: Vec<f64>,
}

impl TransportConfig {
    pub fn new(grid: SphereKind, m: usize, ic: InitialCondition, steps: usize) -> Self {
        Self {
            grid,
            m,
            ic,
            steps,
            t_final: PERIOD,
            substeps: 1,
            threads: None,
            output: None,
            velocity_scale: 1.0,
            snapshots: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.m + 1
    }

    pub fn dt(&self) -> f64 {
        self.t_final / self.steps as f64
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::Size("steps must be at least 1".into()));
        }
        if !(self.t_final > 0.0 && self.t_final.is_finite()) {
            return Err(Error::Domain(format!("t_final = {} must be positive", self.t_final)));
        }
        if self.substeps == 0 {
            return Err(Error::Size("substeps must be at least 1".into()));
        }
        if self.threads == Some(0) {
            return Err(Error::Size("threads must be at least 1".into()));
        }
        if !self.velocity_scale.is_finite() {
            return Err(Error::Domain("velocity_scale must be finite".into()));
        }
        Ok(())
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let cfg: Self = serde_json::from_str(&text).map_err(|e| Error::parse(path, e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Number of steps to reach `t_final` with a time step of `multiple` CFL
/// units, where one unit is `h / U_MAX` and `h = pi / m`.
pub fn cfl_steps(m: usize, multiple: f64, t_final: f64) -> usize {
    let dt = multiple * PI / m as f64 / U_MAX;
    ((t_final / dt).round() as usize).max(1)
}

/// Tracer values on a sphere grid, `n x 2m` row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct TracerField {
    pub values: Vec<f64>,
    pub time: f64,
}

/// Error metrics and timings of a finished run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransportReport {
    pub grid: SphereKind,
    pub m: usize,
    pub n: usize,
    pub dof: usize,
    pub ic: InitialCondition,
    pub steps: usize,
    pub dt: f64,
    pub rel_l2_error: f64,
    pub rel_max_error: f64,
    pub min: f64,
    pub max: f64,
    pub wall_time_s: f64,
    pub step_times_s: Vec<f64>,
}

fn relative_errors(q: &[f64], q0: &[f64]) -> (f64, f64) {
    let (mut d2, mut r2, mut dmax, mut rmax) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for (a, b) in q.iter().zip(q0) {
        let d = a - b;
        d2 += d * d;
        r2 += b * b;
        dmax = dmax.max(d.abs());
        rmax = rmax.max(b.abs());
    }
    ((d2 / r2).sqrt(), dmax / rmax)
}

/// The grid a config runs on.
pub fn transport_grid(cfg: &TransportConfig) -> Result<SphereGrid> {
    SphereGrid::new(cfg.grid, cfg.m, cfg.n())
}

/// Run the advection with a snapshot callback `(step, field)` invoked at the
/// requested snapshot times.
pub fn run_transport_with(
    cfg: &TransportConfig,
    mut on_snapshot: impl FnMut(usize, &TracerField) -> Result<()> + Send,
) -> Result<(TracerField, TransportReport)> {
    cfg.validate()?;
    match cfg.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Numerical(format!("thread pool: {e}")))?;
            pool.install(|| run_inner(cfg, &mut on_snapshot))
        }
        None => run_inner(cfg, &mut on_snapshot),
    }
}

/// Run the advection to `t_final` and compare with the initial condition.
pub fn run_transport(cfg: &TransportConfig) -> Result<(TracerField, TransportReport)> {
    run_transport_with(cfg, |_, _| Ok(()))
}

fn run_inner(
    cfg: &TransportConfig,
    on_snapshot: &mut dyn FnMut(usize, &TracerField) -> Result<()>,
) -> Result<(TracerField, TransportReport)> {
    let start = Instant::now();
    let grid = transport_grid(cfg)?;
    // (lambda, lat) of every node in sample order
    let arrivals: Vec<(f64, f64)> = grid
        .nodes()
        .into_iter()
        .map(|(phi, theta)| (phi, colatitude(theta)))
        .collect();
    let q0: Vec<f64> = arrivals
        .iter()
        .map(|&(l, t)| initial_condition(cfg.ic, l, t))
        .collect();
    let tables = Arc::new(SphereTables::new(grid.clone())?);
    let field = VelocityField::scaled(cfg.velocity_scale);
    // with no flow every departure point is its own node
    let still = cfg.velocity_scale == 0.0;
    let dt = cfg.dt();

    let mut snaps: Vec<f64> = cfg.snapshots.clone();
    snaps.sort_by(f64::total_cmp);
    let mut next_snap = 0;
    let mut q = TracerField {
        values: q0.clone(),
        time: 0.0,
    };
    while next_snap < snaps.len() && snaps[next_snap] <= 0.0 {
        on_snapshot(0, &q)?;
        next_snap += 1;
    }

    let mut step_times = Vec::with_capacity(cfg.steps);
    for step in 1..=cfg.steps {
        let t0 = Instant::now();
        let t_arrive = step as f64 * dt;
        if still {
            q.time = t_arrive;
            step_times.push(t0.elapsed().as_secs_f64());
            while next_snap < snaps.len() && snaps[next_snap] <= t_arrive + 0.5 * dt {
                on_snapshot(step, &q)?;
                next_snap += 1;
            }
            continue;
        }
        let interp = SphereInterpolant::with_tables(tables.clone(), &q.values)
            .map_err(|e| Error::Divergence {
                step,
                detail: e.to_string(),
            })?;
        let departures: Vec<(f64, f64)> = arrivals
            .par_iter()
            .with_min_len(64)
            .map(|&(l, t)| {
                let (ld, td) = trace_departure(l, t, t_arrive, dt, &field, cfg.substeps);
                (ld, colatitude(td))
            })
            .collect();
        q.values = interp.eval_batch(&departures);
        q.time = t_arrive;
        if let Some(i) = q.values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Divergence {
                step,
                detail: format!("non-finite tracer at node {i}"),
            });
        }
        step_times.push(t0.elapsed().as_secs_f64());
        while next_snap < snaps.len() && snaps[next_snap] <= t_arrive + 0.5 * dt {
            on_snapshot(step, &q)?;
            next_snap += 1;
        }
    }

    let (rel_l2_error, rel_max_error) = relative_errors(&q.values, &q0);
    let min = q.values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = q.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let report = TransportReport {
        grid: cfg.grid,
        m: cfg.m,
        n: cfg.n(),
        dof: grid.len(),
        ic: cfg.ic,
        steps: cfg.steps,
        dt,
        rel_l2_error,
        rel_max_error,
        min,
        max,
        wall_time_s: start.elapsed().as_secs_f64(),
        step_times_s: step_times,
    };
    Ok((q, report))
}

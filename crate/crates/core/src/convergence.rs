//! Test functions, scattered evaluation points and convergence studies.
//!
//! Evaluation points come from a 2D Halton sequence (bases 2 and 3) with a
//! seeded Cranley–Patterson shift, mapped to the sphere or disk by an
//! area-preserving transform, so a study is reproducible from its seed.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::disk_interp::DiskInterpolant;
use crate::error::Result;
use crate::grids::{DiskGrid, DiskKind, SphereGrid, SphereKind};
use crate::sphere_interp::SphereInterpolant;

/// `cos(1 + 8 pi (cos phi + sin phi) sin theta + 5 sin(3 pi cos theta))`.
pub fn sphere_test_function(phi: f64, theta: f64) -> f64 {
    (1.0 + 8.0 * PI * (phi.cos() + phi.sin()) * theta.sin() + 5.0 * (3.0 * PI * theta.cos()).sin())
        .cos()
}

/// `sin(21 pi (1 + cos(pi rho)) (rho^2 - 2 rho^5 cos(5 (phi - 0.11))))`.
pub fn disk_test_function(phi: f64, rho: f64) -> f64 {
    let r2 = rho * rho;
    let r5 = r2 * r2 * rho;
    (21.0 * PI * (1.0 + (PI * rho).cos()) * (r2 - 2.0 * r5 * (5.0 * (phi - 0.11)).cos())).sin()
}

/// Which function a study interpolates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// The standard test function of the geometry.
    Standard,
    /// The constant 1, for checking the harness itself.
    Constant,
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

/// `count` points of the shifted Halton sequence in `[0, 1)^2`.
pub fn halton_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift: (f64, f64) = (rng.gen(), rng.gen());
    (1..=count as u64)
        .map(|i| {
            let u = (radical_inverse(i, 2) + shift.0).fract();
            let v = (radical_inverse(i, 3) + shift.1).fract();
            (u, v)
        })
        .collect()
}

/// Quasi-uniform `(phi, theta)` points on the unit sphere.
pub fn sphere_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    halton_points(count, seed)
        .into_iter()
        .map(|(u, v)| (TAU * v, (1.0 - 2.0 * u).clamp(-1.0, 1.0).acos()))
        .collect()
}

/// Quasi-uniform `(phi, rho)` points on the unit disk.
pub fn disk_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    halton_points(count, seed)
        .into_iter()
        .map(|(u, v)| (TAU * v, u.sqrt()))
        .collect()
}

/// `max |approx - exact| / max |exact|`.
pub fn relative_max_error(approx: &[f64], exact: &[f64]) -> f64 {
    let err = approx
        .iter()
        .zip(exact)
        .fold(0.0_f64, |acc, (a, e)| acc.max((a - e).abs()));
    let scale = exact.iter().fold(0.0_f64, |acc, e| acc.max(e.abs()));
    err / scale
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub grid: String,
    pub m: usize,
    /// Number of grid points.
    pub points: usize,
    pub rel_max_err: f64,
}

fn target_fn(target: Target, f: fn(f64, f64) -> f64) -> impl Fn(f64, f64) -> f64 {
    move |a, b| match target {
        Target::Standard => f(a, b),
        Target::Constant => 1.0,
    }
}

/// Interpolate the sphere test function with `n = m` for each `m` and
/// measure the relative max error at `eval_count` scattered points.
pub fn sphere_study(
    kind: SphereKind,
    m_list: &[usize],
    eval_count: usize,
    seed: u64,
    target: Target,
) -> Result<Vec<ConvergenceRow>> {
    let f = target_fn(target, sphere_test_function);
    let pts = sphere_points(eval_count, seed);
    let exact: Vec<f64> = pts.iter().map(|&(p, t)| f(p, t)).collect();
    m_list
        .iter()
        .map(|&m| {
            let grid = SphereGrid::new(kind, m, m)?;
            let s = SphereInterpolant::new(&grid, &grid.sample(&f))?;
            let approx = s.eval_batch(&pts);
            Ok(ConvergenceRow {
                grid: kind.to_string(),
                m,
                points: grid.len(),
                rel_max_err: relative_max_error(&approx, &exact),
            })
        })
        .collect()
}

/// Disk counterpart of [`sphere_study`], with `n = m`.
pub fn disk_study(
    kind: DiskKind,
    include_origin: bool,
    m_list: &[usize],
    eval_count: usize,
    seed: u64,
    target: Target,
) -> Result<Vec<ConvergenceRow>> {
    let f = target_fn(target, disk_test_function);
    let pts = disk_points(eval_count, seed);
    let exact: Vec<f64> = pts.iter().map(|&(p, r)| f(p, r)).collect();
    m_list
        .iter()
        .map(|&m| {
            let grid = DiskGrid::new(kind, m, m, include_origin)?;
            let s = DiskInterpolant::new(&grid, &grid.sample(&f))?;
            let approx = s.eval_batch(&pts)?;
            Ok(ConvergenceRow {
                grid: kind.to_string(),
                m,
                points: grid.len(),
                rel_max_err: relative_max_error(&approx, &exact),
            })
        })
        .collect()
}

/// Whether `errors` shrink by more than `ratio` per step until they reach
/// `floor`. Entries after the first one at or below `floor` are not checked.
pub fn geometric_decay(errors: &[f64], ratio: f64, floor: f64) -> bool {
    for w in errors.windows(2) {
        let (prev, next) = (w[0], w[1]);
        if prev <= floor {
            return true;
        }
        if !(next < prev && (prev / next > ratio || next <= floor)) {
            return false;
        }
    }
    true
}

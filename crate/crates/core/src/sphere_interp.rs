//! Bivariate trigonometric interpolation on latitude-longitude grids.
//!
//! Samples `f[j][k]` at `(phi_k, theta_j)` are split into a pi-periodic part
//! `f+` and a pi-antiperiodic part `f-`. Each column of `f+` is interpolated
//! by a cosine polynomial in `theta`, each column of `f-` by a sine
//! polynomial, and the columns are combined with the pi-periodic and
//! pi-antiperiodic longitude formulas. The result is the trigonometric
//! interpolant of the doubled-up (glide-reflection symmetric) extension of
//! the data, evaluated in `O(mn)` per point without any transform.

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use rayon::prelude::*;

use crate::bary1d::{sphere_tables, LongitudeTable, WeightTable};
use crate::error::Result;
use crate::grids::{SphereGrid, SphereKind};
use crate::tensor::{check_samples, split, spread, Scratch, Tensor};

/// Grid-dependent data shared by every interpolant on one grid.
#[derive(Debug, Clone)]
pub struct SphereTables {
    pub grid: SphereGrid,
    pub lat_even: WeightTable,
    pub lat_odd: WeightTable,
    pub lon: LongitudeTable,
}

impl SphereTables {
    pub fn new(grid: SphereGrid) -> Result<Self> {
        let (lat_even, lat_odd) = sphere_tables(&grid)?;
        let lon = LongitudeTable::new(grid.m)?;
        Ok(Self {
            grid,
            lat_even,
            lat_odd,
            lon,
        })
    }
}

/// Interpolant of one set of samples on a [`SphereGrid`].
#[derive(Debug, Clone)]
pub struct SphereInterpolant {
    tables: Arc<SphereTables>,
    /// `n x m`, row-major.
    pub f_plus: Vec<f64>,
    /// `n x m`, row-major.
    pub f_minus: Vec<f64>,
    /// `n x 2m`, row-major, as supplied.
    pub raw_samples: Vec<f64>,
}

/// Pole single-valuedness diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleReport {
    /// Spread of `s(phi, 0)` over the sampled longitudes.
    pub north_spread: f64,
    /// Spread of `s(phi, pi)`.
    pub south_spread: f64,
    pub tol: f64,
    /// Whether the grid kind guarantees constancy (EQ only).
    pub guaranteed: bool,
}

impl PoleReport {
    pub fn max_spread(&self) -> f64 {
        self.north_spread.max(self.south_spread)
    }

    pub fn within_tol(&self) -> bool {
        self.max_spread() < self.tol
    }
}

/// Longitudes sampled by the pole and origin checks.
pub const RING_SAMPLES: usize = 64;

pub fn build_sphere_interpolant(grid: &SphereGrid, samples: &[f64]) -> Result<SphereInterpolant> {
    let tables = Arc::new(SphereTables::new(grid.clone())?);
    SphereInterpolant::with_tables(tables, samples)
}

impl SphereInterpolant {
    pub fn new(grid: &SphereGrid, samples: &[f64]) -> Result<Self> {
        build_sphere_interpolant(grid, samples)
    }

    /// Build on precomputed tables; only the sample split is done here.
    pub fn with_tables(tables: Arc<SphereTables>, samples: &[f64]) -> Result<Self> {
        let (n, m) = (tables.grid.n, tables.grid.m);
        check_samples(samples, n, m)?;
        let (f_plus, f_minus) = split(samples, n, m);
        Ok(Self {
            tables,
            f_plus,
            f_minus,
            raw_samples: samples.to_vec(),
        })
    }

    pub fn grid(&self) -> &SphereGrid {
        &self.tables.grid
    }

    pub fn tables(&self) -> &Arc<SphereTables> {
        &self.tables
    }

    fn tensor(&self) -> Tensor<'_> {
        Tensor {
            even: &self.tables.lat_even,
            odd: &self.tables.lat_odd,
            lon: &self.tables.lon,
            f_plus: &self.f_plus,
            f_minus: &self.f_minus,
        }
    }

    fn scratch(&self) -> Scratch {
        Scratch::new(self.tables.grid.n, self.tables.grid.m)
    }

    /// Evaluate at longitude `phi` and colatitude `theta`.
    ///
    /// `theta` is not wrapped: values outside `[0, pi]` follow the
    /// glide-reflection extension, `s(phi, -theta) = s(phi + pi, theta)`.
    pub fn eval(&self, phi: f64, theta: f64) -> f64 {
        self.tensor().eval(&mut self.scratch(), phi, theta)
    }

    /// Evaluate at many points in parallel. Output order matches input, and
    /// each value is bit-identical to [`SphereInterpolant::eval`].
    pub fn eval_batch(&self, points: &[(f64, f64)]) -> Vec<f64> {
        let tensor = self.tensor();
        points
            .par_iter()
            .with_min_len(64)
            .map_init(
                || self.scratch(),
                |scratch, &(phi, theta)| tensor.eval(scratch, phi, theta),
            )
            .collect()
    }

    /// Sample the interpolant on both poles and report how far it is from
    /// single-valued there.
    pub fn check_bmc1(&self, tol: f64) -> PoleReport {
        let ring: Vec<f64> = (0..RING_SAMPLES)
            .map(|i| TAU * i as f64 / RING_SAMPLES as f64)
            .collect();
        let north: Vec<f64> = ring.iter().map(|&p| self.eval(p, 0.0)).collect();
        let south: Vec<f64> = ring.iter().map(|&p| self.eval(p, PI)).collect();
        PoleReport {
            north_spread: spread(&north),
            south_spread: spread(&south),
            tol,
            guaranteed: self.tables.grid.kind == SphereKind::Eq,
        }
    }
}

pub fn eval_sphere(interp: &SphereInterpolant, phi: f64, theta: f64) -> f64 {
    interp.eval(phi, theta)
}

pub fn eval_sphere_batch(interp: &SphereInterpolant, points: &[(f64, f64)]) -> Vec<f64> {
    interp.eval_batch(points)
}

pub fn check_bmc1(interp: &SphereInterpolant, tol: f64) -> PoleReport {
    interp.check_bmc1(tol)
}

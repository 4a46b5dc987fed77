//! Trigonometric/polynomial interpolation on polar grids of the unit disk.
//!
//! Same construction as on the sphere, with the latitude cosine/sine
//! polynomials replaced by even/odd polynomials in `rho`.

use std::f64::consts::TAU;
use std::sync::Arc;

use rayon::prelude::*;

use crate::bary1d::{disk_tables, LongitudeTable, WeightTable};
use crate::error::{Error, Result};
use crate::grids::DiskGrid;
use crate::sphere_interp::RING_SAMPLES;
use crate::tensor::{check_samples, split, spread, Scratch, Tensor};

#[derive(Debug, Clone)]
pub struct DiskTables {
    pub grid: DiskGrid,
    pub rad_even: WeightTable,
    pub rad_odd: WeightTable,
    pub lon: LongitudeTable,
}

impl DiskTables {
    pub fn new(grid: DiskGrid) -> Result<Self> {
        let (rad_even, rad_odd) = disk_tables(&grid)?;
        if !grid.include_origin && grid.rho.iter().any(|&r| r == 0.0) {
            return Err(Error::Degenerate(
                "origin-excluded grid contains rho = 0".into(),
            ));
        }
        let lon = LongitudeTable::new(grid.m)?;
        Ok(Self {
            grid,
            rad_even,
            rad_odd,
            lon,
        })
    }
}

/// Interpolant of one set of samples on a [`DiskGrid`].
#[derive(Debug, Clone)]
pub struct DiskInterpolant {
    tables: Arc<DiskTables>,
    /// `(n + 1) x m`, row-major.
    pub f_plus: Vec<f64>,
    /// `(n + 1) x m`, row-major.
    pub f_minus: Vec<f64>,
    /// `(n + 1) x 2m`, row-major, as supplied.
    pub raw_samples: Vec<f64>,
}

/// Origin single-valuedness diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginReport {
    /// Spread of `s(phi, 0)` over the sampled angles.
    pub spread: f64,
    pub tol: f64,
    /// Whether the grid guarantees constancy (origin included).
    pub guaranteed: bool,
}

impl OriginReport {
    pub fn within_tol(&self) -> bool {
        self.spread < self.tol
    }
}

pub fn build_disk_interpolant(grid: &DiskGrid, samples: &[f64]) -> Result<DiskInterpolant> {
    let tables = Arc::new(DiskTables::new(grid.clone())?);
    DiskInterpolant::with_tables(tables, samples)
}

fn check_rho(rho: f64) -> Result<()> {
    if rho.abs() > 1.0 || rho.is_nan() {
        return Err(Error::Domain(format!("|rho| = {} exceeds 1", rho.abs())));
    }
    Ok(())
}

impl DiskInterpolant {
    pub fn new(grid: &DiskGrid, samples: &[f64]) -> Result<Self> {
        build_disk_interpolant(grid, samples)
    }

    pub fn with_tables(tables: Arc<DiskTables>, samples: &[f64]) -> Result<Self> {
        let (rows, m) = (tables.grid.n_rad(), tables.grid.m);
        check_samples(samples, rows, m)?;
        let (f_plus, f_minus) = split(samples, rows, m);
        Ok(Self {
            tables,
            f_plus,
            f_minus,
            raw_samples: samples.to_vec(),
        })
    }

    pub fn grid(&self) -> &DiskGrid {
        &self.tables.grid
    }

    fn tensor(&self) -> Tensor<'_> {
        Tensor {
            even: &self.tables.rad_even,
            odd: &self.tables.rad_odd,
            lon: &self.tables.lon,
            f_plus: &self.f_plus,
            f_minus: &self.f_minus,
        }
    }

    fn scratch(&self) -> Scratch {
        Scratch::new(self.tables.grid.n_rad(), self.tables.grid.m)
    }

    /// Evaluate at angle `phi` and radius `rho`, `|rho| <= 1`. Negative radii
    /// follow the extension `s(phi, -rho) = s(phi + pi, rho)`.
    pub fn eval(&self, phi: f64, rho: f64) -> Result<f64> {
        check_rho(rho)?;
        Ok(self.tensor().eval(&mut self.scratch(), phi, rho))
    }

    /// Parallel evaluation; order preserved, values identical to `eval`.
    pub fn eval_batch(&self, points: &[(f64, f64)]) -> Result<Vec<f64>> {
        for &(_, rho) in points {
            check_rho(rho)?;
        }
        let tensor = self.tensor();
        Ok(points
            .par_iter()
            .with_min_len(64)
            .map_init(
                || self.scratch(),
                |scratch, &(phi, rho)| tensor.eval(scratch, phi, rho),
            )
            .collect())
    }

    /// Sample the interpolant at the origin from many directions.
    pub fn check_bmc2(&self, tol: f64) -> OriginReport {
        let vals: Vec<f64> = (0..RING_SAMPLES)
            .map(|i| {
                let phi = TAU * i as f64 / RING_SAMPLES as f64;
                self.tensor().eval(&mut self.scratch(), phi, 0.0)
            })
            .collect();
        OriginReport {
            spread: spread(&vals),
            tol,
            guaranteed: self.tables.grid.include_origin,
        }
    }
}

pub fn eval_disk(interp: &DiskInterpolant, phi: f64, rho: f64) -> Result<f64> {
    interp.eval(phi, rho)
}

pub fn check_bmc2(interp: &DiskInterpolant, tol: f64) -> OriginReport {
    interp.check_bmc2(tol)
}

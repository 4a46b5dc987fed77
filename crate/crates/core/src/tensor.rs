//! Shared machinery for the sphere and disk interpolants: the even/odd split
//! of longitude-paired samples and the `O(mn)` tensor-product evaluation.

use std::f64::consts::TAU;

use crate::bary1d::{dot, LongitudeTable, WeightTable};
use crate::error::{Error, Result};

/// Split `rows x 2m` samples into the pi-periodic part `(f_k + f_{k+m}) / 2`
/// and the pi-antiperiodic part `(f_k - f_{k+m}) / 2`, each `rows x m`.
pub(crate) fn split(samples: &[f64], rows: usize, m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut plus = Vec::with_capacity(rows * m);
    let mut minus = Vec::with_capacity(rows * m);
    for row in samples.chunks_exact(2 * m).take(rows) {
        let (a, b) = row.split_at(m);
        for (x, y) in a.iter().zip(b) {
            plus.push(0.5 * (x + y));
            minus.push(0.5 * (x - y));
        }
    }
    (plus, minus)
}

pub(crate) fn check_samples(samples: &[f64], rows: usize, m: usize) -> Result<()> {
    if samples.len() != rows * 2 * m {
        return Err(Error::Dimension {
            expected: format!("{rows} x {} = {} samples", 2 * m, rows * 2 * m),
            found: format!("{} samples", samples.len()),
        });
    }
    if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::Numerical(format!(
            "sample ({}, {}) is not finite",
            i / (2 * m),
            i % (2 * m)
        )));
    }
    Ok(())
}

/// Per-point scratch buffers for [`Tensor::eval`].
#[derive(Debug, Clone)]
pub(crate) struct Scratch {
    even: Vec<f64>,
    odd: Vec<f64>,
    plus: Vec<f64>,
    minus: Vec<f64>,
}

impl Scratch {
    pub(crate) fn new(rows: usize, m: usize) -> Self {
        Self {
            even: vec![0.0; rows],
            odd: vec![0.0; rows],
            plus: vec![0.0; m],
            minus: vec![0.0; m],
        }
    }
}

/// The split samples together with the 1D tables that interpolate them.
#[derive(Debug, Clone)]
pub(crate) struct Tensor<'a> {
    pub even: &'a WeightTable,
    pub odd: &'a WeightTable,
    pub lon: &'a LongitudeTable,
    pub f_plus: &'a [f64],
    pub f_minus: &'a [f64],
}

impl Tensor<'_> {
    /// `s = sum_k L+_k(phi) u+_k(t) + L-_k(phi) u-_k(t)` where `u+_k` and
    /// `u-_k` are the even and odd column interpolants.
    pub(crate) fn eval(&self, scratch: &mut Scratch, phi: f64, t: f64) -> f64 {
        let m = self.lon.m;
        self.even.fill_basis(t, &mut scratch.even);
        self.odd.fill_basis(t, &mut scratch.odd);
        self.lon
            .fill_basis(phi.rem_euclid(TAU), &mut scratch.plus, &mut scratch.minus);
        let mut total = 0.0;
        for (j, (&ce, &co)) in scratch.even.iter().zip(&scratch.odd).enumerate() {
            let row = j * m..(j + 1) * m;
            if ce != 0.0 {
                total += ce * dot(&self.f_plus[row.clone()], &scratch.plus);
            }
            if co != 0.0 {
                total += co * dot(&self.f_minus[row], &scratch.minus);
            }
        }
        total
    }
}

/// Spread of a ring of values: `max - min`.
pub(crate) fn spread(values: &[f64]) -> f64 {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    hi - lo
}

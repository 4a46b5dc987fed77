//! Slow reference formulas for cross-checking the fast kernels.
//!
//! Nothing here reuses a [`WeightTable`](crate::bary1d::WeightTable): every
//! value is computed directly from a Lagrange product or from the full-period
//! barycentric formula on explicitly mirrored or extended data.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grids::{DiskGrid, SphereGrid};

/// Largest node count accepted by [`oracle_eval`].
pub const MAX_ORACLE_NODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Cosine polynomial in Lagrange form; `x` is a colatitude.
    CosineLagrange,
    /// Sine polynomial in Lagrange form; nodes at a pole are ignored.
    SineLagrange,
    /// Trigonometric barycentric formula on an even number of equispaced
    /// angles `2 pi k / N`.
    FullTrigBary,
    /// Polynomial barycentric formula with product weights.
    FullPolyBary,
}

pub fn oracle_eval(kind: OracleKind, nodes: &[f64], samples: &[f64], x: f64) -> Result<f64> {
    if nodes.len() != samples.len() {
        return Err(Error::Dimension {
            expected: format!("{} samples", nodes.len()),
            found: format!("{} samples", samples.len()),
        });
    }
    if nodes.is_empty() || nodes.len() > MAX_ORACLE_NODES {
        return Err(Error::Size(format!(
            "oracle supports 1..={MAX_ORACLE_NODES} nodes, got {}",
            nodes.len()
        )));
    }
    match kind {
        OracleKind::CosineLagrange => Ok(cosine_lagrange(nodes, samples, x)),
        OracleKind::SineLagrange => Ok(sine_lagrange(nodes, samples, x)),
        OracleKind::FullTrigBary => {
            if nodes.len() % 2 != 0 {
                return Err(Error::Size(format!(
                    "trigonometric oracle needs an even node count, got {}",
                    nodes.len()
                )));
            }
            Ok(full_trig_bary(nodes, samples, x))
        }
        OracleKind::FullPolyBary => full_poly_bary(nodes, samples, x),
    }
}

/// `sum_j f_j prod_{i != j} (cos t - cos t_i) / (cos t_j - cos t_i)`.
pub fn cosine_lagrange(theta: &[f64], f: &[f64], t: f64) -> f64 {
    let x = t.cos();
    let c: Vec<f64> = theta.iter().map(|v| v.cos()).collect();
    if let Some(j) = c.iter().position(|&cj| cj == x) {
        return f[j];
    }
    let mut sum = 0.0;
    for j in 0..c.len() {
        let mut l = 1.0;
        for i in 0..c.len() {
            if i != j {
                l *= (x - c[i]) / (c[j] - c[i]);
            }
        }
        sum += l * f[j];
    }
    sum
}

/// `sum_j f_j (sin t / sin t_j) prod_{i != j} (cos t - cos t_i) / (cos t_j - cos t_i)`
/// over the nodes strictly inside `(0, pi)`.
pub fn sine_lagrange(theta: &[f64], f: &[f64], t: f64) -> f64 {
    let interior: Vec<usize> = (0..theta.len())
        .filter(|&j| theta[j] > 0.0 && theta[j] < PI)
        .collect();
    let x = t.cos();
    let c: Vec<f64> = theta.iter().map(|v| v.cos()).collect();
    let mut sum = 0.0;
    for &j in &interior {
        let mut l = t.sin() / theta[j].sin();
        for &i in &interior {
            if i != j {
                l *= (x - c[i]) / (c[j] - c[i]);
            }
        }
        sum += l * f[j];
    }
    sum
}

/// `sum (-1)^k cot((phi - phi_k)/2) f_k / sum (-1)^k cot((phi - phi_k)/2)`
/// with `phi_k = 2 pi k / N`.
pub fn full_trig_bary(phi_nodes: &[f64], f: &[f64], phi: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for (k, (&pk, &fk)) in phi_nodes.iter().zip(f).enumerate() {
        let half = 0.5 * (phi - pk);
        let s = half.sin();
        if s.abs() < 1e-14 {
            return fk;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let cot = sign * half.cos() / s;
        num += cot * fk;
        den += cot;
    }
    num / den
}

/// `sum w_j f_j / (x - x_j) / sum w_j / (x - x_j)`, `w_j = 1 / prod (x_j - x_i)`.
pub fn full_poly_bary(nodes: &[f64], f: &[f64], x: f64) -> Result<f64> {
    if let Some(j) = nodes.iter().position(|&xj| xj == x) {
        return Ok(f[j]);
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 0..nodes.len() {
        let mut p = 1.0;
        for i in 0..nodes.len() {
            if i != j {
                p *= nodes[j] - nodes[i];
            }
        }
        if p == 0.0 {
            return Err(Error::Degenerate(format!("repeated node {}", nodes[j])));
        }
        let t = 1.0 / (p * (x - nodes[j]));
        num += t * f[j];
        den += t;
    }
    Ok(num / den)
}

/// Mirror decreasing radii `rho_0 > ... > rho_n >= 0` onto `[-1, 1]`, with
/// samples extended evenly (`parity = 1`) or oddly (`parity = -1`). An odd
/// extension vanishes at the origin, so an origin sample is dropped then.
pub fn mirror_radial(rho: &[f64], f: &[f64], parity: f64) -> (Vec<f64>, Vec<f64>) {
    let keep: Vec<usize> = (0..rho.len())
        .filter(|&j| parity > 0.0 || rho[j] != 0.0)
        .collect();
    let mut x: Vec<f64> = keep.iter().map(|&j| rho[j]).collect();
    let mut y: Vec<f64> = keep.iter().map(|&j| f[j]).collect();
    for j in (0..rho.len()).rev() {
        if rho[j] == 0.0 {
            continue;
        }
        x.push(-rho[j]);
        y.push(parity * f[j]);
    }
    (x, y)
}

/// Extend `m` column values to `2m` longitudes: `g_{k+m} = parity * g_k`.
pub fn extend_longitude(values: &[f64], parity: f64) -> (Vec<f64>, Vec<f64>) {
    let m = values.len();
    let phi = (0..2 * m).map(|k| PI * k as f64 / m as f64).collect();
    let mut g = values.to_vec();
    g.extend(values.iter().map(|v| parity * v));
    (phi, g)
}

/// Reference value of the sphere interpolant: Lagrange cosine/sine forms per
/// longitude column, then the full `2m`-point trigonometric formula.
pub fn sphere_oracle(grid: &SphereGrid, samples: &[f64], phi: f64, theta: f64) -> Result<f64> {
    let (n, m) = (grid.n, grid.m);
    if samples.len() != n * 2 * m {
        return Err(Error::Dimension {
            expected: format!("{} samples", n * 2 * m),
            found: format!("{} samples", samples.len()),
        });
    }
    let mut column = vec![0.0; 2 * m];
    for k in 0..m {
        let plus: Vec<f64> = (0..n)
            .map(|j| 0.5 * (samples[j * 2 * m + k] + samples[j * 2 * m + k + m]))
            .collect();
        let minus: Vec<f64> = (0..n)
            .map(|j| 0.5 * (samples[j * 2 * m + k] - samples[j * 2 * m + k + m]))
            .collect();
        let c = cosine_lagrange(&grid.theta, &plus, theta);
        let s = sine_lagrange(&grid.theta, &minus, theta);
        column[k] = c + s;
        column[k + m] = c - s;
    }
    Ok(full_trig_bary(&grid.phi, &column, phi))
}

/// Reference value of the disk interpolant: full polynomial barycentric
/// formula on mirrored radial data per column, then the `2m`-point
/// trigonometric formula.
pub fn disk_oracle(grid: &DiskGrid, samples: &[f64], phi: f64, rho: f64) -> Result<f64> {
    let (rows, m) = (grid.n_rad(), grid.m);
    if samples.len() != rows * 2 * m {
        return Err(Error::Dimension {
            expected: format!("{} samples", rows * 2 * m),
            found: format!("{} samples", samples.len()),
        });
    }
    let mut column = vec![0.0; 2 * m];
    for k in 0..m {
        let plus: Vec<f64> = (0..rows)
            .map(|j| 0.5 * (samples[j * 2 * m + k] + samples[j * 2 * m + k + m]))
            .collect();
        let minus: Vec<f64> = (0..rows)
            .map(|j| 0.5 * (samples[j * 2 * m + k] - samples[j * 2 * m + k + m]))
            .collect();
        let (xe, ye) = mirror_radial(&grid.rho, &plus, 1.0);
        let (xo, yo) = mirror_radial(&grid.rho, &minus, -1.0);
        let e = full_poly_bary(&xe, &ye, rho)?;
        let o = full_poly_bary(&xo, &yo, rho)?;
        column[k] = e + o;
        column[k + m] = e - o;
    }
    Ok(full_trig_bary(&grid.phi, &column, phi))
}

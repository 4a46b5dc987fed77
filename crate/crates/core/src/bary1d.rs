//! One-dimensional barycentric kernels.
//!
//! Every latitude/radial formula used by the bivariate interpolants has the
//! shape
//!
//! ```text
//!              sum_j a_j f_j / (x - x_j)
//! u(t) = P(t) -------------------------
//!               sum_j b_j / (x - x_j)
//! ```
//!
//! with `x = cos(theta)` and `P = 1` or `sin(theta)` for the even/odd
//! trigonometric formulas, and `x = rho^2`, `P = 1` or `rho` for the even/odd
//! polynomial ones. All sign factors, halved end terms and per-node factors
//! (`sin theta_j`, `rho_j`, ...) are folded into `a_j` and `b_j` when a
//! [`WeightTable`] is built, so evaluation is one generic loop.
//!
//! The longitude formulas (pi-periodic and pi-antiperiodic interpolation on
//! `m` equally spaced angles) live in [`LongitudeTable`].

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gauss_legendre::gl_nodes;
use crate::grids::{DiskGrid, DiskKind, SphereGrid, SphereKind};

/// Relative distance below which an evaluation point is treated as a node.
pub const NODE_TOL: f64 = 1e-13;

/// Which formula a [`WeightTable`] encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// Cosine polynomial in `theta` (even, 2 pi periodic).
    TrigEven,
    /// Sine polynomial in `theta` (odd, 2 pi periodic).
    TrigOdd,
    /// Even polynomial in `rho`.
    PolyEven,
    /// Odd polynomial in `rho`.
    PolyOdd,
}

impl TableKind {
    fn is_odd(self) -> bool {
        matches!(self, TableKind::TrigOdd | TableKind::PolyOdd)
    }

    fn is_trig(self) -> bool {
        matches!(self, TableKind::TrigEven | TableKind::TrigOdd)
    }
}

/// Precomputed weights for one latitude or radial formula.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    pub kind: TableKind,
    /// `theta_j` (trig) or `rho_j` (poly).
    pub nodes: Vec<f64>,
    /// `cos(theta_j)` or `rho_j^2`.
    pub coords: Vec<f64>,
    /// Numerator weights `a_j`.
    pub num_weights: Vec<f64>,
    /// Denominator weights `b_j`. Zero only for terms that drop out of an odd
    /// formula (samples at a pole or the origin).
    pub den_weights: Vec<f64>,
    /// Sign of the node's own prefactor (`sin theta_j` or `rho_j`), used when
    /// an odd formula is evaluated exactly at a node.
    node_signs: Vec<f64>,
    /// A node sits at `theta = 0` (trig) or `rho = 0` (poly).
    pub contains_zero: bool,
    /// A node sits at `theta = pi` (trig only).
    pub contains_pi: bool,
}

impl WeightTable {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Multiply all weights by `factor`. The interpolant does not change.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        out.num_weights.iter_mut().for_each(|w| *w *= factor);
        out.den_weights.iter_mut().for_each(|w| *w *= factor);
        out
    }

    /// Evaluate the interpolant of `samples` at `t` (`theta` or `rho`).
    pub fn eval(&self, samples: &[f64], t: f64) -> Result<f64> {
        check_len(self.len(), samples.len())?;
        let mut basis = vec![0.0; self.len()];
        self.fill_basis(t, &mut basis);
        Ok(dot(&basis, samples))
    }

    /// Write the cardinal functions `c_j(t)` into `out`, so that the
    /// interpolant is `sum_j c_j(t) f_j`.
    ///
    /// At a node (within [`NODE_TOL`]) `out` is a signed unit vector, so the
    /// sample is reproduced exactly.
    pub fn fill_basis(&self, t: f64, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.len());
        let (x, prefactor) = if self.kind.is_trig() {
            let (s, c) = t.sin_cos();
            (c, if self.kind.is_odd() { s } else { 1.0 })
        } else {
            (t * t, if self.kind.is_odd() { t } else { 1.0 })
        };

        let tol = NODE_TOL * (1.0 + x.abs());
        for j in 0..self.len() {
            if self.den_weights[j] != 0.0 && (x - self.coords[j]).abs() < tol {
                out.iter_mut().for_each(|c| *c = 0.0);
                out[j] = if self.kind.is_odd() && prefactor * self.node_signs[j] < 0.0 {
                    -1.0
                } else {
                    1.0
                };
                return;
            }
        }

        let mut den = 0.0;
        let mut active = false;
        for j in 0..self.len() {
            let b = self.den_weights[j];
            if b == 0.0 {
                out[j] = 0.0;
                continue;
            }
            active = true;
            let r = 1.0 / (x - self.coords[j]);
            den += b * r;
            out[j] = self.num_weights[j] * r;
        }
        if !active {
            // odd formula on nodes that all sit at poles: the zero function
            return;
        }
        let scale = prefactor / den;
        out.iter_mut().for_each(|c| *c *= scale);
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension {
            expected: format!("{expected} samples"),
            found: format!("{found} samples"),
        });
    }
    Ok(())
}

/// Dot product with four independent accumulators.
#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0; 4];
    let ca = a.chunks_exact(4);
    let cb = b.chunks_exact(4);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (x, y) in ca.zip(cb) {
        acc[0] += x[0] * y[0];
        acc[1] += x[1] * y[1];
        acc[2] += x[2] * y[2];
        acc[3] += x[3] * y[3];
    }
    let mut tail = 0.0;
    for (x, y) in ra.iter().zip(rb) {
        tail += x * y;
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

/// Barycentric weights `1 / prod_{i != j} (x_j - x_i)` for distinct `x`,
/// scaled so that `max |w| = 1`.
///
/// Each product is rescaled by exact powers of two as it grows, so large
/// node counts neither overflow nor lose accuracy.
pub fn product_weights(x: &[f64]) -> Result<Vec<f64>> {
    const BIG: f64 = 1.0e150;
    let up = 2f64.powi(-500);
    let down = 2f64.powi(500);
    let n = x.len();
    let mut mant = vec![0.0; n];
    let mut expo = vec![0i64; n];
    for j in 0..n {
        let mut p = 1.0_f64;
        let mut e = 0i64;
        for i in 0..n {
            if i == j {
                continue;
            }
            let d = x[j] - x[i];
            if d == 0.0 {
                return Err(Error::Degenerate(format!(
                    "nodes {i} and {j} coincide at {}",
                    x[j]
                )));
            }
            p *= d;
            if p.abs() > BIG {
                p *= up;
                e += 500;
            } else if p.abs() < 1.0 / BIG {
                p *= down;
                e -= 500;
            }
        }
        // w_j = 2^{-e} / p
        mant[j] = 1.0 / p;
        expo[j] = -e;
    }
    let emax = expo.iter().copied().max().unwrap_or(0);
    let mut w: Vec<f64> = mant
        .iter()
        .zip(&expo)
        .map(|(&m, &e)| {
            let mut v = m;
            let mut shift = emax - e;
            while shift >= 500 {
                v *= up;
                shift -= 500;
            }
            v * 2f64.powi(-(shift as i32))
        })
        .collect();
    let scale = w.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    w.iter_mut().for_each(|v| *v /= scale);
    Ok(w)
}

fn alternating(j: usize) -> f64 {
    if j % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_increasing_theta(theta: &[f64]) -> Result<()> {
    if theta.is_empty() {
        return Err(Error::Size("no latitude nodes".into()));
    }
    for (j, &t) in theta.iter().enumerate() {
        if !(0.0..=PI).contains(&t) {
            return Err(Error::Domain(format!(
                "colatitude node {j} = {t} outside [0, pi]"
            )));
        }
    }
    for (j, w) in theta.windows(2).enumerate() {
        if w[1] <= w[0] {
            return Err(Error::Degenerate(format!(
                "colatitude nodes {j} and {} are not strictly increasing",
                j + 1
            )));
        }
    }
    Ok(())
}

fn check_decreasing_rho(rho: &[f64]) -> Result<()> {
    if rho.is_empty() {
        return Err(Error::Size("no radial nodes".into()));
    }
    for (j, &r) in rho.iter().enumerate() {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("radial node {j} = {r} outside [0, 1]")));
        }
    }
    for (j, w) in rho.windows(2).enumerate() {
        if w[1] >= w[0] {
            return Err(Error::Degenerate(format!(
                "radial nodes {j} and {} are not strictly decreasing",
                j + 1
            )));
        }
    }
    Ok(())
}

/// Cosines of the colatitudes, exact at the poles and antisymmetric for
/// mirrored equispaced nodes.
fn cosines(theta: &[f64], kind: Option<SphereKind>) -> Vec<f64> {
    let n = theta.len();
    let mut c: Vec<f64> = theta.iter().map(|t| t.cos()).collect();
    if matches!(kind, Some(SphereKind::Eq) | Some(SphereKind::Seq)) {
        for j in 0..n / 2 {
            let v = 0.5 * (c[j] - c[n - 1 - j]);
            c[j] = v;
            c[n - 1 - j] = -v;
        }
        if n % 2 == 1 {
            c[n / 2] = 0.0;
        }
    }
    for (t, cj) in theta.iter().zip(c.iter_mut()) {
        if *t == 0.0 {
            *cj = 1.0;
        } else if *t == PI {
            *cj = -1.0;
        }
    }
    c
}

/// `sin(theta_j)`, exactly zero at the poles.
fn sines(theta: &[f64], cos_theta: &[f64]) -> Vec<f64> {
    theta
        .iter()
        .zip(cos_theta)
        .map(|(t, c)| if c.abs() == 1.0 { 0.0 } else { t.sin() })
        .collect()
}

/// Even-formula weights `w_j` of `sum w_j f_j / (cos t - cos t_j)`.
fn trig_even_raw(theta: &[f64], cos_theta: &[f64], kind: Option<SphereKind>) -> Result<Vec<f64>> {
    let n = theta.len();
    match kind {
        Some(SphereKind::Eq) => Ok((0..n)
            .map(|j| {
                let half = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
                alternating(j) * half
            })
            .collect()),
        Some(SphereKind::Seq) => Ok(theta
            .iter()
            .enumerate()
            .map(|(j, t)| alternating(j) * t.sin())
            .collect()),
        Some(SphereKind::Gl) | None => product_weights(cos_theta),
    }
}

fn build_trig_even(theta: &[f64], cos_theta: Vec<f64>, w: Vec<f64>) -> WeightTable {
    WeightTable {
        kind: TableKind::TrigEven,
        nodes: theta.to_vec(),
        node_signs: vec![1.0; theta.len()],
        contains_zero: cos_theta.first() == Some(&1.0),
        contains_pi: cos_theta.last() == Some(&-1.0),
        coords: cos_theta,
        num_weights: w.clone(),
        den_weights: w,
    }
}

fn build_trig_odd(theta: &[f64], cos_theta: Vec<f64>, even: &[f64]) -> Result<WeightTable> {
    let n = theta.len();
    let sin_theta = sines(theta, &cos_theta);
    let has0 = cos_theta.first() == Some(&1.0);
    let has_pi = cos_theta.last() == Some(&-1.0);
    let mut num = vec![0.0; n];
    let mut den = vec![0.0; n];
    if has0 && has_pi {
        // sin(theta) * [sum w s_j f_j / (x - x_j)] / [sum w s_j^2 / (x - x_j)]
        for j in 0..n {
            num[j] = even[j] * sin_theta[j];
            den[j] = even[j] * sin_theta[j] * sin_theta[j];
        }
    } else if !has0 && !has_pi {
        // sin(theta) * [sum w f_j / (s_j (x - x_j))] / [sum w / (x - x_j)]
        for j in 0..n {
            num[j] = even[j] / sin_theta[j];
            den[j] = even[j];
        }
    } else {
        // One pole only: its odd sample is zero, so interpolate on the rest.
        let lo = usize::from(has0);
        let hi = if has_pi { n - 1 } else { n };
        let w = product_weights(&cos_theta[lo..hi])?;
        for (j, wj) in (lo..hi).zip(w) {
            num[j] = wj / sin_theta[j];
            den[j] = wj;
        }
    }
    Ok(WeightTable {
        kind: TableKind::TrigOdd,
        nodes: theta.to_vec(),
        node_signs: sin_theta.iter().map(|s| s.signum()).collect(),
        coords: cos_theta,
        num_weights: num,
        den_weights: den,
        contains_zero: has0,
        contains_pi: has_pi,
    })
}

/// Weights for the cosine-polynomial interpolant on colatitudes `theta`.
///
/// `kind` selects the closed-form weights of an equispaced grid; `Gl` and
/// `None` use node-difference products.
pub fn trig_even_weights(theta: &[f64], kind: Option<SphereKind>) -> Result<WeightTable> {
    check_increasing_theta(theta)?;
    let c = cosines(theta, kind);
    let w = trig_even_raw(theta, &c, kind)?;
    Ok(build_trig_even(theta, c, w))
}

/// Weights for the sine-polynomial interpolant on colatitudes `theta`.
pub fn trig_odd_weights(theta: &[f64], kind: Option<SphereKind>) -> Result<WeightTable> {
    check_increasing_theta(theta)?;
    let c = cosines(theta, kind);
    let w = trig_even_raw(theta, &c, kind)?;
    build_trig_odd(theta, c, &w)
}

/// Even and odd latitude tables for a sphere grid. On GL grids the weights
/// come from the Gauss–Legendre quadrature weights.
pub fn sphere_tables(grid: &SphereGrid) -> Result<(WeightTable, WeightTable)> {
    let kind = Some(grid.kind);
    let w = match grid.kind {
        SphereKind::Gl => {
            let rule = gl_nodes(grid.n)?;
            rule.bary_weights.iter().rev().copied().collect()
        }
        _ => trig_even_raw(&grid.theta, &grid.cos_theta, kind)?,
    };
    let even = build_trig_even(&grid.theta, grid.cos_theta.clone(), w.clone());
    let odd = build_trig_odd(&grid.theta, grid.cos_theta.clone(), &w)?;
    Ok((even, odd))
}

/// Weights `w_j` of the even radial formula `sum w_j f_j / (rho^2 - rho_j^2)`.
fn poly_even_raw(rho: &[f64], kind: Option<DiskKind>, origin: bool) -> Result<Vec<f64>> {
    let last = rho.len() - 1;
    let nf = last as f64;
    let w = match (kind, origin) {
        (Some(DiskKind::Ch2), true) => (0..=last)
            .map(|j| {
                let half = if j == 0 || j == last { 0.5 } else { 1.0 };
                alternating(j) * half
            })
            .collect(),
        (Some(DiskKind::Ch2), false) => (0..=last)
            .map(|j| {
                let half = if j == 0 { 0.5 } else { 1.0 };
                alternating(j) * half * rho[j]
            })
            .collect(),
        (Some(DiskKind::Ch1), true) => (0..=last)
            .map(|j| {
                let xi = ((2 * j + 1) as f64 * PI / (4.0 * nf + 2.0)).sin();
                let half = if j == last { 0.5 } else { 1.0 };
                alternating(j) * half * xi
            })
            .collect(),
        (Some(DiskKind::Ch1), false) => (0..=last)
            .map(|j| {
                let gamma = ((2 * j + 1) as f64 * PI / (4.0 * nf + 4.0)).sin();
                alternating(j) * rho[j] * gamma
            })
            .collect(),
        (Some(DiskKind::GlRadial), _) | (None, _) => {
            let x: Vec<f64> = rho.iter().map(|r| r * r).collect();
            product_weights(&x)?
        }
    };
    Ok(w)
}

fn build_poly(rho: &[f64], w: &[f64], odd: bool) -> WeightTable {
    let origin = rho.last() == Some(&0.0);
    let coords: Vec<f64> = rho.iter().map(|r| r * r).collect();
    let (num, den): (Vec<f64>, Vec<f64>) = if !odd {
        (w.to_vec(), w.to_vec())
    } else if origin {
        rho.iter()
            .zip(w)
            .map(|(&r, &wj)| (wj * r, wj * r * r))
            .unzip()
    } else {
        rho.iter().zip(w).map(|(&r, &wj)| (wj / r, wj)).unzip()
    };
    WeightTable {
        kind: if odd {
            TableKind::PolyOdd
        } else {
            TableKind::PolyEven
        },
        nodes: rho.to_vec(),
        coords,
        num_weights: num,
        den_weights: den,
        node_signs: rho.iter().map(|r| r.signum()).collect(),
        contains_zero: origin,
        contains_pi: false,
    }
}

/// Weights for the even radial interpolant on decreasing radii `rho`.
/// Whether the origin is included is read from the last node.
pub fn poly_even_weights(rho: &[f64], kind: Option<DiskKind>) -> Result<WeightTable> {
    check_decreasing_rho(rho)?;
    let origin = rho.last() == Some(&0.0);
    let w = poly_even_raw(rho, kind, origin)?;
    Ok(build_poly(rho, &w, false))
}

/// Weights for the odd radial interpolant on decreasing radii `rho`.
pub fn poly_odd_weights(rho: &[f64], kind: Option<DiskKind>) -> Result<WeightTable> {
    check_decreasing_rho(rho)?;
    let origin = rho.last() == Some(&0.0);
    let w = poly_even_raw(rho, kind, origin)?;
    Ok(build_poly(rho, &w, true))
}

/// Even and odd radial tables for a disk grid.
pub fn disk_tables(grid: &DiskGrid) -> Result<(WeightTable, WeightTable)> {
    check_decreasing_rho(&grid.rho)?;
    let w = poly_even_raw(&grid.rho, Some(grid.kind), grid.include_origin)?;
    Ok((build_poly(&grid.rho, &w, false), build_poly(&grid.rho, &w, true)))
}

pub fn trig_even_eval(table: &WeightTable, samples: &[f64], theta: f64) -> Result<f64> {
    table.eval(samples, theta)
}

pub fn trig_odd_eval(table: &WeightTable, samples: &[f64], theta: f64) -> Result<f64> {
    table.eval(samples, theta)
}

pub fn poly_even_eval(table: &WeightTable, samples: &[f64], rho: f64) -> Result<f64> {
    table.eval(samples, rho)
}

pub fn poly_odd_eval(table: &WeightTable, samples: &[f64], rho: f64) -> Result<f64> {
    table.eval(samples, rho)
}

/// Sines and cosines of the `m` angles `pi k / m`, `k = 0..m`, for the
/// pi-periodic and pi-antiperiodic longitude formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct LongitudeTable {
    pub m: usize,
    sin_k: Vec<f64>,
    cos_k: Vec<f64>,
}

impl LongitudeTable {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Size("longitude table needs m >= 1".into()));
        }
        let (sin_k, cos_k) = (0..m)
            .map(|k| {
                if 2 * k == m {
                    (1.0, 0.0)
                } else {
                    (PI * k as f64 / m as f64).sin_cos()
                }
            })
            .unzip();
        Ok(Self { m, sin_k, cos_k })
    }

    /// Build from explicit nodes, which must be `pi k / m`.
    pub fn from_nodes(phi: &[f64]) -> Result<Self> {
        let m = phi.len();
        let table = Self::new(m)?;
        for (k, &p) in phi.iter().enumerate() {
            let expect = PI * k as f64 / m as f64;
            if (p - expect).abs() > 1e-12 * (1.0 + expect) {
                return Err(Error::Degenerate(format!(
                    "longitude node {k} = {p} is not pi*{k}/{m}"
                )));
            }
        }
        Ok(table)
    }

    /// Cardinal functions of the pi-periodic (`plus`) and pi-antiperiodic
    /// (`minus`) interpolants at `phi`.
    pub fn fill_basis(&self, phi: f64, plus: &mut [f64], minus: &mut [f64]) {
        let m = self.m;
        debug_assert!(plus.len() == m && minus.len() == m);
        let (sp, cp) = phi.sin_cos();

        // sin/cos of (phi - phi_k)
        for k in 0..m {
            let s = sp * self.cos_k[k] - cp * self.sin_k[k];
            if s.abs() < NODE_TOL {
                let c = cp * self.cos_k[k] + sp * self.sin_k[k];
                plus.iter_mut().for_each(|v| *v = 0.0);
                minus.iter_mut().for_each(|v| *v = 0.0);
                plus[k] = 1.0;
                minus[k] = if c < 0.0 { -1.0 } else { 1.0 };
                return;
            }
        }

        let mut den = 0.0;
        let m_even = m % 2 == 0;
        for k in 0..m {
            let s = sp * self.cos_k[k] - cp * self.sin_k[k];
            let c = cp * self.cos_k[k] + sp * self.sin_k[k];
            let csc = alternating(k) / s;
            let cot = c * csc;
            if m_even {
                den += cot;
                plus[k] = cot;
                minus[k] = csc;
            } else {
                den += csc;
                plus[k] = csc;
                minus[k] = cot;
            }
        }
        let inv = 1.0 / den;
        plus.iter_mut().for_each(|v| *v *= inv);
        minus.iter_mut().for_each(|v| *v *= inv);
    }

    fn eval(&self, values: &[f64], phi: f64, anti: bool) -> Result<f64> {
        check_len(self.m, values.len())?;
        let mut plus = vec![0.0; self.m];
        let mut minus = vec![0.0; self.m];
        self.fill_basis(phi, &mut plus, &mut minus);
        Ok(dot(if anti { &minus } else { &plus }, values))
    }
}

/// Pi-periodic trigonometric interpolant of `values` at `phi_k = pi k / m`.
pub fn pi_periodic_eval(phi_nodes: &[f64], values: &[f64], phi: f64) -> Result<f64> {
    LongitudeTable::from_nodes(phi_nodes)?.eval(values, phi, false)
}

/// Pi-antiperiodic trigonometric interpolant of `values` at `phi_k = pi k / m`.
pub fn pi_antiperiodic_eval(phi_nodes: &[f64], values: &[f64], phi: f64) -> Result<f64> {
    LongitudeTable::from_nodes(phi_nodes)?.eval(values, phi, true)
}

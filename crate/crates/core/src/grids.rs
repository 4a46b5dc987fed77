//! Tensor-product grids on the sphere and the disk.
//!
//! All grids use `2m` equally spaced longitudes `phi_k = pi k / m`. The sphere
//! grids store colatitudes `theta` in increasing order; the disk grids store
//! radii `rho` in decreasing order, so the origin (when present) is last.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss_legendre::gl_nodes;

/// Latitude node family on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SphereKind {
    /// Equally spaced, poles included.
    Eq,
    /// Equally spaced shifted by half a cell, poles excluded.
    Seq,
    /// Arc-cosines of the Legendre roots.
    Gl,
}

/// Radial node family on the disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiskKind {
    /// Chebyshev points of the first kind.
    Ch1,
    /// Chebyshev points of the second kind.
    Ch2,
    /// Nonnegative Legendre roots.
    #[serde(rename = "glr")]
    GlRadial,
}

impl SphereKind {
    pub const ALL: [SphereKind; 3] = [SphereKind::Eq, SphereKind::Seq, SphereKind::Gl];

    pub fn as_str(self) -> &'static str {
        match self {
            SphereKind::Eq => "eq",
            SphereKind::Seq => "seq",
            SphereKind::Gl => "gl",
        }
    }
}

impl DiskKind {
    pub const ALL: [DiskKind; 3] = [DiskKind::Ch1, DiskKind::Ch2, DiskKind::GlRadial];

    pub fn as_str(self) -> &'static str {
        match self {
            DiskKind::Ch1 => "ch1",
            DiskKind::Ch2 => "ch2",
            DiskKind::GlRadial => "glr",
        }
    }
}

impl fmt::Display for SphereKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for DiskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SphereKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eq" => Ok(SphereKind::Eq),
            "seq" => Ok(SphereKind::Seq),
            "gl" => Ok(SphereKind::Gl),
            other => Err(Error::Size(format!("unknown sphere grid kind `{other}`"))),
        }
    }
}

impl FromStr for DiskKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ch1" => Ok(DiskKind::Ch1),
            "ch2" => Ok(DiskKind::Ch2),
            "glr" | "gl" => Ok(DiskKind::GlRadial),
            other => Err(Error::Size(format!("unknown disk grid kind `{other}`"))),
        }
    }
}

/// `2m` equally spaced angles `pi k / m` on `[0, 2 pi)`.
pub fn longitudes(m: usize) -> Vec<f64> {
    (0..2 * m).map(|k| PI * k as f64 / m as f64).collect()
}

/// Latitude-longitude grid on the unit sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    pub kind: SphereKind,
    /// Half the number of longitudes.
    pub m: usize,
    /// Number of colatitudes.
    pub n: usize,
    pub phi: Vec<f64>,
    /// Colatitudes, strictly increasing in `[0, pi]`.
    pub theta: Vec<f64>,
    /// `cos(theta_j)`, computed so that mirrored nodes are exact negatives.
    pub cos_theta: Vec<f64>,
}

impl SphereGrid {
    pub fn new(kind: SphereKind, m: usize, n: usize) -> Result<Self> {
        make_sphere_grid(kind, m, n)
    }

    /// Number of longitudes, `2m`.
    pub fn n_lon(&self) -> usize {
        2 * self.m
    }

    /// Total number of grid nodes.
    pub fn len(&self) -> usize {
        self.n * 2 * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(phi, theta)` of every node, row-major (colatitude outer).
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        self.theta
            .iter()
            .flat_map(|&t| self.phi.iter().map(move |&p| (p, t)))
            .collect()
    }

    /// Sample `f(phi, theta)` on the grid into an `n x 2m` row-major array.
    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        self.nodes().into_iter().map(|(p, t)| f(p, t)).collect()
    }
}

/// Polar grid on the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskGrid {
    pub kind: DiskKind,
    pub m: usize,
    pub n: usize,
    pub include_origin: bool,
    /// Index of the last point of the full symmetric set on `[-1, 1]`:
    /// `2n` with the origin, `2n + 1` without.
    pub ell: usize,
    pub phi: Vec<f64>,
    /// `n + 1` radii, strictly decreasing in `[0, 1]`.
    pub rho: Vec<f64>,
}

impl DiskGrid {
    pub fn new(kind: DiskKind, m: usize, n: usize, include_origin: bool) -> Result<Self> {
        make_disk_grid(kind, m, n, include_origin)
    }

    pub fn n_lon(&self) -> usize {
        2 * self.m
    }

    /// Number of radii, `n + 1`.
    pub fn n_rad(&self) -> usize {
        self.n + 1
    }

    pub fn len(&self) -> usize {
        self.n_rad() * 2 * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(phi, rho)` of every node, row-major (radius outer).
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        self.rho
            .iter()
            .flat_map(|&r| self.phi.iter().map(move |&p| (p, r)))
            .collect()
    }

    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        self.nodes().into_iter().map(|(p, r)| f(p, r)).collect()
    }
}

/// Build a sphere grid. Requires `m >= 1` and `n >= 2`.
pub fn make_sphere_grid(kind: SphereKind, m: usize, n: usize) -> Result<SphereGrid> {
    if m == 0 {
        return Err(Error::Size(format!("sphere grid needs m >= 1, got {m}")));
    }
    if n < 2 {
        return Err(Error::Size(format!("sphere grid needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let (theta, cos_theta) = match kind {
        SphereKind::Eq => {
            let mut theta: Vec<f64> = (0..n).map(|j| PI * j as f64 / (nf - 1.0)).collect();
            // pi * (n-1) / (n-1) can round below pi
            theta[n - 1] = PI;
            let mut c: Vec<f64> = theta.iter().map(|t| t.cos()).collect();
            symmetrize_descending(&mut c);
            c[0] = 1.0;
            c[n - 1] = -1.0;
            (theta, c)
        }
        SphereKind::Seq => {
            let theta: Vec<f64> = (0..n).map(|j| PI * (j as f64 + 0.5) / nf).collect();
            let mut c: Vec<f64> = theta.iter().map(|t| t.cos()).collect();
            symmetrize_descending(&mut c);
            (theta, c)
        }
        SphereKind::Gl => {
            let rule = gl_nodes(n)?;
            let c: Vec<f64> = rule.nodes.iter().rev().copied().collect();
            let theta = c.iter().map(|z| z.acos()).collect();
            (theta, c)
        }
    };
    Ok(SphereGrid {
        kind,
        m,
        n,
        phi: longitudes(m),
        theta,
        cos_theta,
    })
}

/// Build a disk grid. Requires `m >= 1` and `n >= 1`.
pub fn make_disk_grid(kind: DiskKind, m: usize, n: usize, include_origin: bool) -> Result<DiskGrid> {
    if m == 0 {
        return Err(Error::Size(format!("disk grid needs m >= 1, got {m}")));
    }
    if n == 0 {
        return Err(Error::Size(format!("disk grid needs n >= 1, got {n}")));
    }
    let ell = if include_origin { 2 * n } else { 2 * n + 1 };
    let ellf = ell as f64;
    let mut rho: Vec<f64> = match kind {
        DiskKind::Ch1 => (0..=n)
            .map(|j| ((j as f64 + 0.5) * PI / (ellf + 1.0)).cos())
            .collect(),
        DiskKind::Ch2 => (0..=n).map(|j| (j as f64 * PI / ellf).cos()).collect(),
        DiskKind::GlRadial => {
            let rule = gl_nodes(ell + 1)?;
            rule.nodes.iter().rev().take(n + 1).copied().collect()
        }
    };
    if include_origin {
        rho[n] = 0.0;
    }
    if kind == DiskKind::Ch2 {
        rho[0] = 1.0;
    }
    Ok(DiskGrid {
        kind,
        m,
        n,
        include_origin,
        ell,
        phi: longitudes(m),
        rho,
    })
}

/// Force `c[n-1-j] = -c[j]` and an exact zero in the middle of an odd-length
/// descending list of cosines.
fn symmetrize_descending(c: &mut [f64]) {
    let n = c.len();
    for j in 0..n / 2 {
        let v = 0.5 * (c[j] - c[n - 1 - j]);
        c[j] = v;
        c[n - 1 - j] = -v;
    }
    if n % 2 == 1 {
        c[n / 2] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eq_endpoints_are_exact() {
        for n in 2..200 {
            let g = make_sphere_grid(SphereKind::Eq, 1, n).unwrap();
            assert_eq!(g.theta[0], 0.0);
            assert_eq!(g.theta[n - 1], PI);
        }
    }

    #[test]
    fn eq_small() {
        let g = make_sphere_grid(SphereKind::Eq, 2, 3).unwrap();
        assert_eq!(g.phi.len(), 4);
        for (k, p) in g.phi.iter().enumerate() {
            assert_relative_eq!(*p, k as f64 * PI / 2.0);
        }
        assert_eq!(g.theta[0], 0.0);
        assert_relative_eq!(g.theta[1], PI / 2.0);
        assert_eq!(g.theta[2], PI);
        assert_eq!(g.cos_theta, vec![1.0, 0.0, -1.0]);
    }

    #[test]
    fn seq_small() {
        let g = make_sphere_grid(SphereKind::Seq, 2, 2).unwrap();
        assert_relative_eq!(g.theta[0], PI / 4.0);
        assert_relative_eq!(g.theta[1], 3.0 * PI / 4.0);
        assert_eq!(g.cos_theta[0], -g.cos_theta[1]);
    }

    #[test]
    fn gl_small() {
        let g = make_sphere_grid(SphereKind::Gl, 2, 2).unwrap();
        assert_relative_eq!(g.theta[0], (1.0 / 3f64.sqrt()).acos(), epsilon = 1e-15);
        assert_relative_eq!(g.theta[1], (-1.0 / 3f64.sqrt()).acos(), epsilon = 1e-15);
        assert_relative_eq!(g.theta[0], 0.955317, epsilon = 1e-6);
        assert_relative_eq!(g.theta[1], 2.186276, epsilon = 1e-6);
    }

    #[test]
    fn sphere_size_errors() {
        assert!(make_sphere_grid(SphereKind::Eq, 0, 4).is_err());
        assert!(make_sphere_grid(SphereKind::Eq, 3, 1).is_err());
        assert!(make_sphere_grid(SphereKind::Gl, 3, 0).is_err());
    }

    #[test]
    fn ch2_with_origin() {
        let g = make_disk_grid(DiskKind::Ch2, 2, 2, true).unwrap();
        assert_eq!(g.ell, 4);
        assert_eq!(g.rho[0], 1.0);
        assert_relative_eq!(g.rho[1], 2f64.sqrt() / 2.0, epsilon = 1e-15);
        assert_eq!(g.rho[2], 0.0);
    }

    #[test]
    fn ch1_with_origin() {
        let g = make_disk_grid(DiskKind::Ch1, 2, 1, true).unwrap();
        assert_eq!(g.ell, 2);
        assert_relative_eq!(g.rho[0], 3f64.sqrt() / 2.0, epsilon = 1e-15);
        assert_eq!(g.rho[1], 0.0);
    }

    #[test]
    fn glr_with_origin() {
        let g = make_disk_grid(DiskKind::GlRadial, 2, 1, true).unwrap();
        assert_eq!(g.ell, 2);
        assert_relative_eq!(g.rho[0], 0.6f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(g.rho[0], 0.774597, epsilon = 1e-6);
        assert_eq!(g.rho[1], 0.0);
    }

    #[test]
    fn origin_excluded_has_no_zero() {
        for kind in DiskKind::ALL {
            let g = make_disk_grid(kind, 3, 4, false).unwrap();
            assert_eq!(g.ell, 9);
            assert!(g.rho[4] > 0.0, "{kind}");
        }
    }

    #[test]
    fn disk_size_errors() {
        assert!(make_disk_grid(DiskKind::Ch1, 0, 2, true).is_err());
        assert!(make_disk_grid(DiskKind::Ch1, 2, 0, true).is_err());
    }

    #[test]
    fn invariants_all_kinds() {
        for kind in SphereKind::ALL {
            for (m, n) in [(1, 2), (3, 5), (8, 9), (17, 40)] {
                let g = make_sphere_grid(kind, m, n).unwrap();
                assert_eq!(g.phi.len(), 2 * m);
                for w in g.phi.windows(2) {
                    assert!((w[1] - w[0] - PI / m as f64).abs() < 1e-14);
                }
                assert!(g.theta.windows(2).all(|w| w[0] < w[1]));
                assert!(g.theta[0] >= 0.0 && g.theta[n - 1] <= PI);
                for j in 0..n {
                    assert!((g.cos_theta[j] - g.theta[j].cos()).abs() < 1e-15);
                }
            }
        }
        for kind in DiskKind::ALL {
            for origin in [true, false] {
                for n in [1, 2, 5, 16] {
                    let g = make_disk_grid(kind, 4, n, origin).unwrap();
                    assert_eq!(g.rho.len(), n + 1);
                    assert!(g.rho.windows(2).all(|w| w[0] > w[1]));
                    assert!(g.rho[0] <= 1.0 && g.rho[n] >= 0.0);
                    assert_eq!(g.rho[n] == 0.0, origin, "{kind} n={n}");
                }
            }
        }
    }
}

//! Barycentric interpolation on tensor-product grids of the sphere and the
//! disk, built on the double Fourier sphere construction, together with a
//! semi-Lagrangian tracer-transport harness that uses it.
//!
//! The crate is organised bottom-up:
//!
//! * [`gauss_legendre`]: Legendre roots and quadrature/barycentric weights.
//! * [`grids`]: the EQ/SEQ/GL sphere grids and CH1/CH2/GL disk grids.
//! * [`bary1d`]: even/odd trigonometric and polynomial barycentric kernels
//!   and the pi-periodic/pi-antiperiodic longitude formulas.
//! * [`sphere_interp`] and [`disk_interp`]: the bivariate interpolants.
//! * [`transport`]: semi-Lagrangian advection in the deformational flow.
//! * [`convergence`]: test functions and convergence studies.
//! * [`oracles`]: slow reference formulas used for cross-checking.
//! * [`csvio`]: CSV input and output for samples, points and tables.
//! * [`cli`]: the command-line front end behind the `dfsbary` binary.
//!
//! ```
//! use dfs_bary::grids::{SphereGrid, SphereKind};
//! use dfs_bary::sphere_interp::SphereInterpolant;
//!
//! let grid = SphereGrid::new(SphereKind::Eq, 16, 17)?;
//! let samples = grid.sample(|phi, theta| theta.cos() + (phi.sin() * theta.sin()).powi(2));
//! let s = SphereInterpolant::new(&grid, &samples)?;
//! let (phi, theta) = (0.3_f64, 1.2_f64);
//! let exact = theta.cos() + (phi.sin() * theta.sin()).powi(2);
//! assert!((s.eval(phi, theta) - exact).abs() < 1e-13);
//! # Ok::<(), dfs_bary::Error>(())
//! ```

pub mod bary1d;
pub mod cli;
pub mod convergence;
pub mod csvio;
pub mod disk_interp;
pub mod error;
pub mod gauss_legendre;
pub mod grids;
pub mod oracles;
pub mod sphere_interp;
mod tensor;
pub mod transport;

pub use error::{Error, Result};

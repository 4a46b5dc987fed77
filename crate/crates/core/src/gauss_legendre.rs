//! Gauss–Legendre nodes, quadrature weights and barycentric weights.
//!
//! Nodes are found by Newton iteration on the three-term Legendre recurrence,
//! starting from Chebyshev-like initial guesses. Only the nonnegative half is
//! iterated; the rest follows by symmetry so the rule is exactly symmetric.
//!
//! The barycentric weights at the Legendre roots are obtained from the
//! quadrature weights, `v_j ∝ (-1)^j sqrt((1 - x_j^2) q_j)`, which is far more
//! stable than forming the node-difference products for large rules.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest rule size accepted by [`gl_nodes`].
pub const MAX_DEGREE: usize = 10_000;

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_STEPS: usize = 100;

/// A Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GLRule {
    /// Number of nodes (the degree of the Legendre polynomial).
    pub degree: usize,
    /// Roots of `P_degree`, ascending.
    pub nodes: Vec<f64>,
    /// Positive quadrature weights, summing to 2.
    pub quad_weights: Vec<f64>,
    /// Polynomial barycentric weights at `nodes`, scaled so `max |w| = 1`.
    pub bary_weights: Vec<f64>,
}

impl GLRule {
    /// Integrate `f` over `[-1, 1]`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.quad_weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Evaluate `P_n(x)` and `P_n'(x)` with the three-term recurrence.
///
/// The derivative formula is singular at `x = ±1`; there the closed form
/// `P_n'(±1) = (±1)^(n-1) n(n+1)/2` is returned.
pub fn legendre(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let nf = n as f64;
    let dp = if (x * x - 1.0).abs() < f64::EPSILON {
        let sign = if x > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 };
        sign * nf * (nf + 1.0) / 2.0
    } else {
        nf * (x * p - p_prev) / (x * x - 1.0)
    };
    (p, dp)
}

/// Compute the `n`-point Gauss–Legendre rule.
pub fn gl_nodes(n: usize) -> Result<GLRule> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::Size(format!(
            "Gauss-Legendre degree must be in 1..={MAX_DEGREE}, got {n}"
        )));
    }

    // Positive roots, descending: index k of the full descending list.
    let half = n / 2;
    let mut pos_nodes = Vec::with_capacity(half);
    let mut pos_weights = Vec::with_capacity(half);
    let nf = n as f64;
    for k in 0..half {
        let mut x = (PI * (k as f64 + 0.75) / (nf + 0.5)).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_STEPS {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Numerical(format!(
                "Newton iteration for root {k} of P_{n} did not converge"
            )));
        }
        let (_, dp) = legendre(n, x);
        pos_nodes.push(x);
        pos_weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }

    let mut nodes = Vec::with_capacity(n);
    let mut quad_weights = Vec::with_capacity(n);
    for k in 0..half {
        nodes.push(-pos_nodes[k]);
        quad_weights.push(pos_weights[k]);
    }
    if n % 2 == 1 {
        let (_, dp) = legendre(n, 0.0);
        nodes.push(0.0);
        quad_weights.push(2.0 / (dp * dp));
    }
    for k in (0..half).rev() {
        nodes.push(pos_nodes[k]);
        quad_weights.push(pos_weights[k]);
    }

    let mut bary_weights: Vec<f64> = nodes
        .iter()
        .zip(&quad_weights)
        .enumerate()
        .map(|(j, (&x, &w))| {
            let mag = ((1.0 - x * x) * w).sqrt();
            if j % 2 == 0 {
                mag
            } else {
                -mag
            }
        })
        .collect();
    let scale = bary_weights.iter().fold(0.0_f64, |acc, w| acc.max(w.abs()));
    for w in &mut bary_weights {
        *w /= scale;
    }

    Ok(GLRule {
        degree: n,
        nodes,
        quad_weights,
        bary_weights,
    })
}

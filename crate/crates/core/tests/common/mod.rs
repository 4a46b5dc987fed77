//! Checks shared by the integration tests and the acceptance suite.

#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use dfs_bary::bary1d::{
    disk_tables, pi_antiperiodic_eval, pi_periodic_eval, poly_even_weights, poly_odd_weights,
    sphere_tables, trig_even_weights, trig_odd_weights, WeightTable,
};
use dfs_bary::disk_interp::DiskInterpolant;
use dfs_bary::grids::{longitudes, DiskGrid, DiskKind, SphereGrid, SphereKind};
use dfs_bary::oracles::{
    cosine_lagrange, disk_oracle, extend_longitude, full_poly_bary, full_trig_bary,
    mirror_radial, sine_lagrange, sphere_oracle,
};
use dfs_bary::sphere_interp::SphereInterpolant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest discrepancy seen for one family of kernels.
#[derive(Debug, Clone)]
pub struct Family {
    pub name: String,
    pub worst: f64,
}

/// `|a - b|` relative to the larger of `|b|` and the data scale.
pub fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / b.abs().max(scale).max(f64::MIN_POSITIVE)
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
}

fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

fn record(out: &mut Vec<Family>, name: String, worst: f64) {
    match out.iter_mut().find(|f| f.name == name) {
        Some(f) => f.worst = f.worst.max(worst),
        None => out.push(Family { name, worst }),
    }
}

/// Every 1D kernel against its Lagrange or full-period oracle on random
/// data, `n, m <= 12`, `points` random evaluation points per case.
pub fn oracle_suite(seed: u64, points: usize) -> Vec<Family> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    for kind in SphereKind::ALL {
        let n = rng.gen_range(2..=12);
        let grid = SphereGrid::new(kind, 1, n).unwrap();
        let mut tables: Vec<(&str, WeightTable, WeightTable)> = Vec::new();
        let (e, o) = sphere_tables(&grid).unwrap();
        tables.push(("grid", e, o));
        tables.push((
            "closed-form",
            trig_even_weights(&grid.theta, Some(kind)).unwrap(),
            trig_odd_weights(&grid.theta, Some(kind)).unwrap(),
        ));
        tables.push((
            "product",
            trig_even_weights(&grid.theta, None).unwrap(),
            trig_odd_weights(&grid.theta, None).unwrap(),
        ));
        let f = random_vec(&mut rng, n);
        let mut g = random_vec(&mut rng, n);
        // an odd function vanishes at the poles
        for (j, t) in grid.theta.iter().enumerate() {
            if *t == 0.0 || *t == PI {
                g[j] = 0.0;
            }
        }
        let scale = max_abs(&f).max(max_abs(&g));
        for (label, even, odd) in &tables {
            let (mut we, mut wo) = (0.0_f64, 0.0_f64);
            for _ in 0..points {
                let t = rng.gen_range(-0.2..PI + 0.2);
                we = we.max(rel(even.eval(&f, t).unwrap(), cosine_lagrange(&grid.theta, &f, t), scale));
                wo = wo.max(rel(odd.eval(&g, t).unwrap(), sine_lagrange(&grid.theta, &g, t), scale));
            }
            record(&mut out, format!("trig even {kind} ({label})"), we);
            record(&mut out, format!("trig odd {kind} ({label})"), wo);
        }
    }

    for m in [rng.gen_range(1..=6) * 2, rng.gen_range(0..=5) * 2 + 1] {
        let phi = longitudes(m);
        let vals = random_vec(&mut rng, m);
        let scale = max_abs(&vals);
        let parity = if m % 2 == 0 { "even" } else { "odd" };
        let (ext_p, plus) = extend_longitude(&vals, 1.0);
        let (ext_m, minus) = extend_longitude(&vals, -1.0);
        let (mut wp, mut wm) = (0.0_f64, 0.0_f64);
        for _ in 0..points {
            let p = rng.gen_range(-1.0..TAU + 1.0);
            wp = wp.max(rel(pi_periodic_eval(&phi[..m], &vals, p).unwrap(), full_trig_bary(&ext_p, &plus, p), scale));
            wm = wm.max(rel(pi_antiperiodic_eval(&phi[..m], &vals, p).unwrap(), full_trig_bary(&ext_m, &minus, p), scale));
        }
        record(&mut out, format!("pi-periodic m {parity}"), wp);
        record(&mut out, format!("pi-antiperiodic m {parity}"), wm);
    }

    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let n = rng.gen_range(1..=11);
            let grid = DiskGrid::new(kind, 1, n, origin).unwrap();
            let (e, o) = disk_tables(&grid).unwrap();
            let tables = [
                ("grid", e, o),
                (
                    "product",
                    poly_even_weights(&grid.rho, None).unwrap(),
                    poly_odd_weights(&grid.rho, None).unwrap(),
                ),
            ];
            let f = random_vec(&mut rng, grid.n_rad());
            let mut g = random_vec(&mut rng, grid.n_rad());
            if origin {
                g[grid.n] = 0.0;
            }
            let scale = max_abs(&f).max(max_abs(&g));
            let (xe, ye) = mirror_radial(&grid.rho, &f, 1.0);
            let (xo, yo) = mirror_radial(&grid.rho, &g, -1.0);
            for (label, even, odd) in &tables {
                let (mut we, mut wo) = (0.0_f64, 0.0_f64);
                for _ in 0..points {
                    let r = rng.gen_range(-1.0..1.0);
                    we = we.max(rel(even.eval(&f, r).unwrap(), full_poly_bary(&xe, &ye, r).unwrap(), scale));
                    wo = wo.max(rel(odd.eval(&g, r).unwrap(), full_poly_bary(&xo, &yo, r).unwrap(), scale));
                }
                let o = if origin { "origin" } else { "no origin" };
                record(&mut out, format!("poly even {kind} {o} ({label})"), we);
                record(&mut out, format!("poly odd {kind} {o} ({label})"), wo);
            }
        }
    }
    out
}

/// Bivariate interpolants against the composed oracles on random data.
pub fn bivariate_oracle_suite(seed: u64, points: usize) -> Vec<Family> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for kind in SphereKind::ALL {
        let grid = SphereGrid::new(kind, rng.gen_range(1..=12), rng.gen_range(2..=12)).unwrap();
        let f = random_vec(&mut rng, grid.len());
        let s = SphereInterpolant::new(&grid, &f).unwrap();
        let mut w = 0.0_f64;
        for _ in 0..points {
            let (p, t) = (rng.gen_range(0.0..TAU), rng.gen_range(0.0..PI));
            w = w.max(rel(s.eval(p, t), sphere_oracle(&grid, &f, p, t).unwrap(), 1.0));
        }
        record(&mut out, format!("sphere {kind}"), w);
    }
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let grid = DiskGrid::new(kind, rng.gen_range(1..=12), rng.gen_range(1..=11), origin).unwrap();
            let f = random_vec(&mut rng, grid.len());
            let s = DiskInterpolant::new(&grid, &f).unwrap();
            let mut w = 0.0_f64;
            for _ in 0..points {
                let (p, r) = (rng.gen_range(0.0..TAU), rng.gen_range(-1.0..1.0));
                w = w.max(rel(s.eval(p, r).unwrap(), disk_oracle(&grid, &f, p, r).unwrap(), 1.0));
            }
            record(&mut out, format!("disk {kind} origin={origin}"), w);
        }
    }
    out
}

/// A smooth function on the sphere in Cartesian coordinates.
pub fn sphere_fn(phi: f64, theta: f64) -> f64 {
    let (x, y, z) = (phi.cos() * theta.sin(), phi.sin() * theta.sin(), theta.cos());
    (0.7 * x - y * z + 0.3).sin() + (z * x).exp()
}

/// A smooth function on the disk in Cartesian coordinates.
pub fn disk_fn(phi: f64, rho: f64) -> f64 {
    let (x, y) = (rho * phi.cos(), rho * phi.sin());
    (1.3 * x + 0.4 * y * y).cos() + x * y
}

/// Worst relative violations of the bivariate invariants for one grid.
#[derive(Debug, Clone, Default)]
pub struct Invariants {
    pub nodes: f64,
    pub glide: f64,
    pub periodic: f64,
    pub constant: f64,
}

impl Invariants {
    pub fn worst(&self) -> f64 {
        self.nodes.max(self.glide).max(self.periodic).max(self.constant)
    }
}

pub fn sphere_invariants(kind: SphereKind, m: usize, n: usize, seed: u64) -> Invariants {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = SphereGrid::new(kind, m, n).unwrap();
    let f = grid.sample(sphere_fn);
    let scale = max_abs(&f);
    let s = SphereInterpolant::new(&grid, &f).unwrap();
    let c = SphereInterpolant::new(&grid, &vec![-2.5; grid.len()]).unwrap();
    let mut inv = Invariants::default();
    for (i, (p, t)) in grid.nodes().into_iter().enumerate() {
        inv.nodes = inv.nodes.max(rel(s.eval(p, t), f[i], scale));
    }
    for _ in 0..100 {
        let (p, t) = (rng.gen_range(0.0..TAU), rng.gen_range(0.0..PI));
        let v = s.eval(p, t);
        inv.glide = inv.glide.max(rel(s.eval(p, -t), s.eval(p + PI, t), scale));
        inv.periodic = inv.periodic.max(rel(s.eval(p + TAU, t), v, scale));
        inv.periodic = inv.periodic.max(rel(s.eval(p - 3.0 * TAU, t), v, scale));
        inv.constant = inv.constant.max(rel(c.eval(p, t), -2.5, 2.5));
    }
    inv
}

pub fn disk_invariants(kind: DiskKind, origin: bool, m: usize, n: usize, seed: u64) -> Invariants {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = DiskGrid::new(kind, m, n, origin).unwrap();
    let f = grid.sample(disk_fn);
    let scale = max_abs(&f);
    let s = DiskInterpolant::new(&grid, &f).unwrap();
    let c = DiskInterpolant::new(&grid, &vec![0.75; grid.len()]).unwrap();
    let mut inv = Invariants::default();
    for (i, (p, r)) in grid.nodes().into_iter().enumerate() {
        inv.nodes = inv.nodes.max(rel(s.eval(p, r).unwrap(), f[i], scale));
    }
    for _ in 0..100 {
        let (p, r) = (rng.gen_range(0.0..TAU), rng.gen_range(0.0..1.0));
        let v = s.eval(p, r).unwrap();
        inv.glide = inv.glide.max(rel(s.eval(p, -r).unwrap(), s.eval(p + PI, r).unwrap(), scale));
        inv.periodic = inv.periodic.max(rel(s.eval(p + TAU, r).unwrap(), v, scale));
        inv.periodic = inv.periodic.max(rel(s.eval(p - 3.0 * TAU, r).unwrap(), v, scale));
        inv.constant = inv.constant.max(rel(c.eval(p, r).unwrap(), 0.75, 0.75));
    }
    inv
}

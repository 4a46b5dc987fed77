mod common;

use std::f64::consts::PI;

use common::{disk_invariants, sphere_invariants};
use dfs_bary::convergence::{disk_points, sphere_points};
use dfs_bary::disk_interp::DiskInterpolant;
use dfs_bary::grids::{DiskGrid, DiskKind, SphereGrid, SphereKind};
use dfs_bary::sphere_interp::SphereInterpolant;

#[test]
fn sphere_invariants_hold() {
    for kind in SphereKind::ALL {
        for (m, n) in [(6, 7), (9, 12), (16, 16)] {
            let inv = sphere_invariants(kind, m, n, 3);
            assert!(inv.worst() < 1e-12, "{kind} {m}x{n}: {inv:?}");
        }
    }
}

#[test]
fn disk_invariants_hold() {
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            for (m, n) in [(5, 4), (8, 9), (16, 16)] {
                let inv = disk_invariants(kind, origin, m, n, 4);
                assert!(inv.worst() < 1e-12, "{kind} origin={origin} {m}x{n}: {inv:?}");
            }
        }
    }
}

#[test]
fn cos_theta_is_reproduced() {
    let pts = sphere_points(300, 9);
    for kind in SphereKind::ALL {
        for n in [3, 4, 9] {
            let grid = SphereGrid::new(kind, 3, n).unwrap();
            let s = SphereInterpolant::new(&grid, &grid.sample(|_, t| t.cos())).unwrap();
            for &(p, t) in &pts {
                assert!((s.eval(p, t) - t.cos()).abs() < 1e-12, "{kind} n={n}");
            }
        }
    }
}

#[test]
fn cartesian_x_is_reproduced_on_disks() {
    let pts = disk_points(300, 9);
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let grid = DiskGrid::new(kind, 2, 2, origin).unwrap();
            let s = DiskInterpolant::new(&grid, &grid.sample(|p, r| r * p.cos())).unwrap();
            for &(p, r) in &pts {
                assert!((s.eval(p, r).unwrap() - r * p.cos()).abs() < 1e-12, "{kind} {origin}");
            }
        }
    }
}

#[test]
fn eq_poles_are_single_valued() {
    let grid = SphereGrid::new(SphereKind::Eq, 10, 11).unwrap();
    let s = SphereInterpolant::new(&grid, &grid.sample(common::sphere_fn)).unwrap();
    let rep = s.check_bmc1(1e-12);
    assert!(rep.guaranteed && rep.within_tol(), "{rep:?}");
    // both poles match the sampled pole values
    let north = common::sphere_fn(0.0, 0.0);
    assert!((s.eval(1.7, 0.0) - north).abs() < 1e-13);
    let south = common::sphere_fn(0.0, PI);
    assert!((s.eval(4.1, PI) - south).abs() < 1e-13);
}

#[test]
fn batch_is_bitwise_pointwise() {
    let grid = SphereGrid::new(SphereKind::Gl, 12, 13).unwrap();
    let s = SphereInterpolant::new(&grid, &grid.sample(common::sphere_fn)).unwrap();
    let pts = sphere_points(10_000, 2);
    let batch = s.eval_batch(&pts);
    for (v, &(p, t)) in batch.iter().zip(&pts) {
        assert_eq!(v.to_bits(), s.eval(p, t).to_bits());
    }
}

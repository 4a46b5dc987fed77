//! Interpolate on polar grids of the unit disk, with and without a radius at
//! the origin.
//!
//!     cargo run --release --example disk_interp -- 24

use dfs_bary::convergence::disk_points;
use dfs_bary::disk_interp::DiskInterpolant;
use dfs_bary::grids::{DiskGrid, DiskKind};

fn f(phi: f64, rho: f64) -> f64 {
    let (x, y) = (rho * phi.cos(), rho * phi.sin());
    (3.0 * x - y).cos() + x * y
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args().nth(1).map_or(Ok(24), |s| s.parse())?;
    let pts = disk_points(5000, 3);

    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let grid = DiskGrid::new(kind, m, m, origin)?;
            let s = DiskInterpolant::new(&grid, &grid.sample(f))?;
            let approx = s.eval_batch(&pts)?;
            let err = approx
                .iter()
                .zip(&pts)
                .map(|(a, &(p, r))| (a - f(p, r)).abs())
                .fold(0.0, f64::max);
            let rep = s.check_bmc2(1e-12);
            println!(
                "{kind:>3} origin={origin:<5}: {} nodes, max error {err:.2e}, origin spread {:.2e}",
                grid.len(),
                rep.spread
            );
        }
    }

    let grid = DiskGrid::new(DiskKind::Ch2, m, m, true)?;
    let s = DiskInterpolant::new(&grid, &grid.sample(f))?;
    match s.eval(0.0, 1.5) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("rho = 1.5 rejected: {e}"),
    }
    Ok(())
}

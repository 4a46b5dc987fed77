//! Interpolation error of the standard sphere test function as the grid is
//! refined; writes a CSV table per grid kind.
//!
//!     cargo run --release --example sphere_convergence -- out/

use std::path::PathBuf;

use dfs_bary::convergence::{geometric_decay, sphere_study, Target};
use dfs_bary::csvio::write_convergence;
use dfs_bary::grids::SphereKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "convergence".into()));
    let seed = 1;
    let ms = [16, 32, 64, 96, 128, 160];
    for kind in SphereKind::ALL {
        let rows = sphere_study(kind, &ms, 2000, seed, Target::Standard)?;
        for r in &rows {
            println!("{:>3} m={:<4} N={:<7} {:.3e}", r.grid, r.m, r.points, r.rel_max_err);
        }
        let tail: Vec<f64> = rows[2..].iter().map(|r| r.rel_max_err).collect();
        println!("    geometric decay from m = 64: {}", geometric_decay(&tail, 5.0, 1e-10));
        let path = out.join(format!("sphere_{kind}.csv"));
        write_convergence(&path, &[format!("seed={seed}")], &rows)?;
    }
    Ok(())
}

//! Interpolation error of the standard disk test function as the grid is
//! refined, for each radial grid with and without the origin.
//!
//!     cargo run --release --example disk_convergence -- out/

use std::path::PathBuf;

use dfs_bary::convergence::{disk_study, Target};
use dfs_bary::csvio::write_convergence;
use dfs_bary::grids::DiskKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "convergence".into()));
    let seed = 1;
    let ms = [16, 32, 48, 64, 80, 96];
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let rows = disk_study(kind, origin, &ms, 2000, seed, Target::Standard)?;
            let errs: Vec<String> = rows.iter().map(|r| format!("{:.2e}", r.rel_max_err)).collect();
            println!("{kind:>3} origin={origin:<5} {}", errs.join("  "));
            let path = out.join(format!("disk_{kind}_{}.csv", if origin { "origin" } else { "no_origin" }));
            write_convergence(&path, &[format!("seed={seed}")], &rows)?;
        }
    }
    Ok(())
}

//! File-based workflow: write grid samples and points as CSV, read them back
//! and write interpolated values, as the `interp` subcommand does.
//!
//!     cargo run --example interp_csv -- /tmp/dfs_demo

use std::path::PathBuf;

use dfs_bary::csvio::{read_points, read_samples, write_matrix, write_table, write_values, fmt_f64};
use dfs_bary::grids::{SphereGrid, SphereKind};
use dfs_bary::sphere_interp::SphereInterpolant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "interp_demo".into()));
    let grid = SphereGrid::new(SphereKind::Gl, 12, 12)?;
    let f = |p: f64, t: f64| (p.cos() * t.sin()).powi(2) + t.cos();

    write_matrix(&dir.join("samples.csv"), &grid.sample(f), grid.n_lon())?;
    let pts: Vec<(f64, f64)> = (0..10).map(|i| (0.6 * i as f64, 0.3 * i as f64 + 0.1)).collect();
    write_table(
        &dir.join("points.csv"),
        &[],
        &["phi", "theta"],
        pts.iter().map(|&(p, t)| vec![fmt_f64(p), fmt_f64(t)]),
    )?;

    let samples = read_samples(&dir.join("samples.csv"), grid.n, grid.n_lon())?;
    let points = read_points(&dir.join("points.csv"))?;
    let values = SphereInterpolant::new(&grid, &samples)?.eval_batch(&points);
    write_values(&dir.join("values.csv"), &[], &values)?;

    for (v, &(p, t)) in values.iter().zip(&points) {
        println!("({p:.2}, {t:.2}) -> {v:+.15} (exact {:+.15})", f(p, t));
    }
    println!("files in {}", dir.display());
    Ok(())
}

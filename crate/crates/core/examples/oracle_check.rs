//! Compare the fast interpolants with the slow reference formulas on random
//! data.
//!
//!     cargo run --example oracle_check

use dfs_bary::disk_interp::DiskInterpolant;
use dfs_bary::grids::{DiskGrid, DiskKind, SphereGrid, SphereKind};
use dfs_bary::oracles::{disk_oracle, sphere_oracle};
use dfs_bary::sphere_interp::SphereInterpolant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for kind in SphereKind::ALL {
        let grid = SphereGrid::new(kind, 7, 9)?;
        let f: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let s = SphereInterpolant::new(&grid, &f)?;
        let mut worst = 0.0_f64;
        for _ in 0..200 {
            let (p, t) = (rng.gen_range(0.0..6.3), rng.gen_range(0.0..3.2));
            worst = worst.max((s.eval(p, t) - sphere_oracle(&grid, &f, p, t)?).abs());
        }
        println!("sphere {kind:>3}: max |fast - oracle| = {worst:.2e}");
    }
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let grid = DiskGrid::new(kind, 6, 8, origin)?;
            let f: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let s = DiskInterpolant::new(&grid, &f)?;
            let mut worst = 0.0_f64;
            for _ in 0..200 {
                let (p, r) = (rng.gen_range(0.0..6.3), rng.gen_range(-1.0..1.0));
                worst = worst.max((s.eval(p, r)? - disk_oracle(&grid, &f, p, r)?).abs());
            }
            println!("disk {kind:>3} origin={origin:<5}: max |fast - oracle| = {worst:.2e}");
        }
    }
    Ok(())
}

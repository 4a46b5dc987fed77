//! Semi-Lagrangian transport of cosine or Gaussian bells through the
//! reversing deformational flow.
//!
//!     cargo run --release --example sla_deformational -- cosine 120 35
//!     cargo run --release --example sla_deformational -- gaussian 64 298

use dfs_bary::grids::SphereKind;
use dfs_bary::transport::{cfl_steps, run_transport, InitialCondition, TransportConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ic = match args.first().map(String::as_str) {
        None | Some("cosine") => InitialCondition::CosineBells,
        Some("gaussian") => InitialCondition::GaussianBells,
        Some(other) => return Err(format!("unknown initial condition '{other}'").into()),
    };
    let m: usize = args.get(1).map_or(Ok(60), |s| s.parse())?;
    let steps = match args.get(2) {
        Some(s) => s.parse()?,
        // ten CFL units for the C^1 bells, one for the smooth ones
        None if ic == InitialCondition::CosineBells => cfl_steps(m, 10.0, 5.0),
        None => cfl_steps(m, 1.0, 5.0),
    };

    for kind in SphereKind::ALL {
        let cfg = TransportConfig::new(kind, m, ic, steps);
        let (_, rep) = run_transport(&cfg)?;
        println!(
            "{kind:>3} m={m} steps={steps}: rel l2 {:.3e}, rel max {:.3e}, range [{:.4}, {:.4}], {:.1}s",
            rep.rel_l2_error, rep.rel_max_error, rep.min, rep.max, rep.wall_time_s
        );
    }
    Ok(())
}

//! Acceptance criteria, run in order. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

mod common;

use std::time::Instant;

use common::{bivariate_oracle_suite, disk_invariants, oracle_suite, sphere_invariants};
use dfs_bary::bary1d::product_weights;
use dfs_bary::convergence::{disk_study, geometric_decay, sphere_study, Target};
use dfs_bary::gauss_legendre::{gl_nodes, legendre};
use dfs_bary::grids::{DiskKind, SphereKind};
use dfs_bary::transport::{cfl_steps, run_transport, InitialCondition, TransportConfig, PERIOD};

struct Outcome {
    passed: bool,
    detail: String,
}

fn sla_error(ic: InitialCondition, m: usize, steps: usize) -> f64 {
    let cfg = TransportConfig::new(SphereKind::Eq, m, ic, steps);
    run_transport(&cfg).expect("transport run").1.rel_l2_error
}

fn oracle_equivalence() -> Outcome {
    let mut worst = (String::new(), 0.0_f64);
    for seed in 0..20 {
        for fam in oracle_suite(seed, 100).into_iter().chain(bivariate_oracle_suite(seed, 100)) {
            if fam.worst >= worst.1 {
                worst = (fam.name, fam.worst);
            }
        }
    }
    Outcome {
        passed: worst.1 < 1e-12,
        detail: format!("20 seeds, worst {:.2e} ({})", worst.1, worst.0),
    }
}

fn bivariate_invariants() -> Outcome {
    let mut worst = (String::new(), 0.0_f64);
    let mut note = |name: String, v: f64| {
        if v >= worst.1 {
            worst = (name, v);
        }
    };
    for kind in SphereKind::ALL {
        for (m, n) in [(5, 6), (8, 11), (16, 16)] {
            note(format!("{kind} {m}x{n}"), sphere_invariants(kind, m, n, 7).worst());
        }
    }
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            for (m, n) in [(5, 4), (8, 9), (16, 16)] {
                note(format!("{kind} origin={origin} {m}x{n}"), disk_invariants(kind, origin, m, n, 7).worst());
            }
        }
    }
    Outcome {
        passed: worst.1 < 1e-12,
        detail: format!("six grid kinds, worst {:.2e} ({})", worst.1, worst.0),
    }
}

fn fmt_errs(errs: &[f64]) -> String {
    errs.iter().map(|e| format!("{e:.2e}")).collect::<Vec<_>>().join(" ")
}

fn sphere_convergence() -> Outcome {
    let ms = [64, 96, 128, 160];
    let mut passed = true;
    let mut parts = Vec::new();
    for kind in SphereKind::ALL {
        let rows = sphere_study(kind, &ms, 2000, 1, Target::Standard).expect("study");
        let errs: Vec<f64> = rows.iter().map(|r| r.rel_max_err).collect();
        let ok = geometric_decay(&errs, 5.0, 1e-10);
        passed &= ok;
        parts.push(format!("{kind}: [{}]{}", fmt_errs(&errs), if ok { "" } else { " no" }));
    }
    Outcome {
        passed,
        detail: parts.join("; "),
    }
}

fn disk_convergence() -> Outcome {
    let ms = [32, 48, 64, 96];
    let mut passed = true;
    let mut parts = Vec::new();
    for kind in DiskKind::ALL {
        for origin in [true, false] {
            let rows = disk_study(kind, origin, &ms, 2000, 1, Target::Standard).expect("study");
            let errs: Vec<f64> = rows.iter().map(|r| r.rel_max_err).collect();
            let ok = geometric_decay(&errs, 5.0, 1e-10);
            passed &= ok;
            let o = if origin { "+0" } else { "" };
            parts.push(format!("{kind}{o}: [{}]{}", fmt_errs(&errs), if ok { "" } else { " no" }));
        }
    }
    Outcome {
        passed,
        detail: parts.join("; "),
    }
}

fn sla_cosine() -> Outcome {
    let e = sla_error(InitialCondition::CosineBells, 120, 35);
    Outcome {
        passed: (1.6e-3..=6.5e-3).contains(&e),
        detail: format!("EQ m=120, 35 steps: rel l2 {e:.3e} (band [1.6e-3, 6.5e-3])"),
    }
}

fn sla_gaussian() -> Outcome {
    let e200 = sla_error(InitialCondition::GaussianBells, 120, 200);
    let e400 = sla_error(InitialCondition::GaussianBells, 120, 400);
    Outcome {
        passed: e200 <= 6e-8 && e400 < e200,
        detail: format!("EQ m=120: 200 steps {e200:.3e} (<= 6e-8), 400 steps {e400:.3e}"),
    }
}

/// Least-squares slope of `log e` against `log m`.
fn loglog_slope(ms: &[usize], errs: &[f64]) -> f64 {
    let xs: Vec<f64> = ms.iter().map(|&m| (m as f64).ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

fn sla_rates() -> Outcome {
    // cosine bells at ten CFL units per step, a fixed step-to-h ratio
    let cms = [30, 60, 120];
    let cerrs: Vec<f64> = cms
        .iter()
        .map(|&m| sla_error(InitialCondition::CosineBells, m, cfl_steps(m, 10.0, PERIOD)))
        .collect();
    let slope = loglog_slope(&cms, &cerrs);
    let cos_ok = (slope + 2.0).abs() <= 0.4;

    // Gaussian bells at one CFL unit per step; a pair that misses the 10x
    // drop is accepted only if the finer run is limited by the time step,
    // i.e. halving the step lowers its error at least twofold
    let gms = [32, 64, 128];
    let gerrs: Vec<f64> = gms
        .iter()
        .map(|&m| sla_error(InitialCondition::GaussianBells, m, cfl_steps(m, 1.0, PERIOD)))
        .collect();
    let mut gauss_ok = true;
    let mut notes = Vec::new();
    for i in 1..gms.len() {
        let ratio = gerrs[i - 1] / gerrs[i];
        if ratio >= 10.0 {
            continue;
        }
        let finer = sla_error(InitialCondition::GaussianBells, gms[i], 2 * cfl_steps(gms[i], 1.0, PERIOD));
        let temporal = gerrs[i] / finer >= 2.0;
        notes.push(format!(
            "m={} ratio {ratio:.1}, half-step error {finer:.2e} ({})",
            gms[i],
            if temporal { "temporal floor" } else { "not temporal" }
        ));
        gauss_ok &= temporal;
        if temporal {
            break;
        }
    }
    Outcome {
        passed: cos_ok && gauss_ok,
        detail: format!(
            "cosine m={cms:?} errs [{}] slope {slope:.2} (-2 +/- 0.4){}; gaussian m={gms:?} errs [{}]{}{}",
            fmt_errs(&cerrs),
            if cos_ok { "" } else { " no" },
            fmt_errs(&gerrs),
            if notes.is_empty() { String::new() } else { format!(" {}", notes.join(", ")) },
            if gauss_ok { "" } else { " no" },
        ),
    }
}

fn gauss_legendre() -> Outcome {
    let (mut resid, mut quad, mut bary) = (0.0_f64, 0.0_f64, 0.0_f64);
    for n in 2..=20 {
        let rule = gl_nodes(n).expect("rule");
        for &x in &rule.nodes {
            resid = resid.max(legendre(n, x).0.abs());
        }
        for k in 0..2 * n {
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            quad = quad.max((rule.integrate(|x| x.powi(k as i32)) - exact).abs());
        }
        let prod = product_weights(&rule.nodes).expect("product weights");
        let j = (0..n)
            .max_by(|&a, &b| prod[a].abs().total_cmp(&prod[b].abs()))
            .unwrap();
        for i in 0..n {
            let d = rule.bary_weights[i] / rule.bary_weights[j] - prod[i] / prod[j];
            bary = bary.max(d.abs());
        }
    }
    Outcome {
        passed: resid < 1e-13 && quad < 1e-12 && bary < 1e-12,
        detail: format!("N=2..20: residual {resid:.1e}, quadrature {quad:.1e}, bary weights {bary:.1e}"),
    }
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 8] = [
        ("oracle equivalence", 10.0, oracle_equivalence),
        ("bivariate invariants", 10.0, bivariate_invariants),
        ("sphere convergence", 120.0, sphere_convergence),
        ("disk convergence", 120.0, disk_convergence),
        ("SLA cosine bells (m=120, 35 steps)", 900.0, sla_cosine),
        ("SLA Gaussian bells (m=120, 200/400 steps)", 3600.0, sla_gaussian),
        ("SLA convergence rates", 1800.0, sla_rates),
        ("Gauss-Legendre engine", 10.0, gauss_legendre),
    ];
    let mut failed = Vec::new();
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {name} [{secs:.1}s, budget {budget:.0}s] {}",
            i + 1,
            out.detail
        );
        if !out.passed {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 8 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}

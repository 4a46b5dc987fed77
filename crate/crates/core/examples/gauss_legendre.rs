//! Gauss–Legendre rules: nodes, quadrature weights and barycentric weights.
//!
//!     cargo run --example gauss_legendre -- 8

use dfs_bary::gauss_legendre::{gl_nodes, legendre};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;
    let rule = gl_nodes(n)?;

    println!("{:>3} {:>24} {:>24} {:>12}", "j", "x_j", "quad weight", "bary weight");
    for j in 0..n {
        println!(
            "{j:>3} {:>24.17} {:>24.17} {:>12.8}",
            rule.nodes[j], rule.quad_weights[j], rule.bary_weights[j]
        );
    }

    let residual = rule
        .nodes
        .iter()
        .map(|&x| legendre(n, x).0.abs())
        .fold(0.0, f64::max);
    println!("max |P_{n}(x_j)| = {residual:.2e}");

    // exact for polynomials up to degree 2n - 1
    let k = 2 * n - 2;
    let approx = rule.integrate(|x| x.powi(k as i32));
    println!("integral of x^{k}: {approx:.17} (exact {:.17})", 2.0 / (k as f64 + 1.0));
    println!("integral of exp: {:.17} (exact {:.17})", rule.integrate(f64::exp), 1f64.exp() - (-1f64).exp());
    Ok(())
}

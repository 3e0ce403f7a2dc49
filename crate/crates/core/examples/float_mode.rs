//! Paths between random real matrices with numerical residuals.

use commuting_graph::field::Tolerance;
use commuting_graph::path::float::random_well_conditioned;
use commuting_graph::path::generate::rng_from_seed;
use commuting_graph::path::{connect_float, Residual};

fn main() -> commuting_graph::Result<()> {
    let tol = Tolerance::default();
    let mut rng = rng_from_seed(3);
    for n in [4, 5, 6] {
        let a = random_well_conditioned(n, tol, &mut rng)?;
        let b = random_well_conditioned(n, tol, &mut rng)?;
        let cert = connect_float(&a, &b)?;
        let worst = cert
            .edge_residuals()
            .iter()
            .map(|r| match r {
                Residual::Float(x) => *x,
                Residual::Exact(k) => *k as f64,
            })
            .fold(0.0, f64::max);
        println!(
            "n={n}: {} length {}, worst residual {worst:.2e}",
            cert.route(),
            cert.length()
        );
    }
    Ok(())
}

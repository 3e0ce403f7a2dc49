//! Random pairs of rational matrices joined by short certified paths.

use commuting_graph::path::generate::{random_blocks, rng_from_seed, SpectralClass};
use commuting_graph::path::{connect, generate_with_spectrum};

fn main() -> commuting_graph::Result<()> {
    let mut rng = rng_from_seed(2024);
    for n in [3, 5, 6] {
        // odd orders always have a real eigenvalue
        let complex = if n % 2 == 0 {
            SpectralClass::Complex
        } else {
            SpectralClass::Mixed
        };
        let pairs = [
            (SpectralClass::Real, SpectralClass::Real),
            (SpectralClass::Real, complex),
            (complex, SpectralClass::Mixed),
            (complex, complex),
        ];
        for (i, (ca, cb)) in pairs.into_iter().enumerate() {
            let a = generate_with_spectrum(n, &random_blocks(n, ca, &mut rng)?, 10 * i as u64)?;
            let b = generate_with_spectrum(n, &random_blocks(n, cb, &mut rng)?, 10 * i as u64 + 1)?;
            let cert = connect(&a, &b)?;
            assert!(cert.verify_endpoints(&a, &b).ok());
            println!(
                "n={n} {:?}/{:?}: {} length {}",
                ca,
                cb,
                cert.route(),
                cert.length()
            );
        }
    }
    Ok(())
}

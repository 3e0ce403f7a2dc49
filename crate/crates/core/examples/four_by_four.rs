//! The six shape pairs of 4×4 matrices without real eigenvalues.

use commuting_graph::path::generate::{rng_from_seed, shape_blocks};
use commuting_graph::path::{connect, generate_with_spectrum};
use commuting_graph::spectral::{classify_shape_4x4, Shape4x4};

fn main() -> commuting_graph::Result<()> {
    use Shape4x4::*;
    let shapes = [PairRepeated, PairDistinct, Nondiagonalizable];
    let mut rng = rng_from_seed(5);
    let mut seed = 0;
    for (i, &sa) in shapes.iter().enumerate() {
        for &sb in &shapes[i..] {
            let a = generate_with_spectrum(4, &shape_blocks(sa, &mut rng), seed)?;
            let b = generate_with_spectrum(4, &shape_blocks(sb, &mut rng), seed + 1)?;
            seed += 2;
            assert_eq!(classify_shape_4x4(&a)?, sa);
            let cert = connect(&a, &b)?;
            let back = connect(&b, &a)?;
            assert!(cert.verify_endpoints(&a, &b).ok() && back.verify().ok());
            println!("{sa:?} / {sb:?}: {} length {}", cert.route(), cert.length());
        }
    }
    Ok(())
}

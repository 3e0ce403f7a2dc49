//! Builds a matrix with a prescribed real Jordan form, then recovers the
//! form and the transform from the matrix alone.

use commuting_graph::path::generate_with_spectrum;
use commuting_graph::spectral::{characteristic_polynomial, real_jordan_form, JordanBlock};

fn main() -> commuting_graph::Result<()> {
    let blocks = vec![
        JordanBlock::complex(1, 2, 2),
        JordanBlock::real(-3, 1),
        JordanBlock::real(5, 1),
    ];
    let a = generate_with_spectrum(6, &blocks, 42)?;
    println!("A =\n{a}");
    println!("char poly: {}", characteristic_polynomial(&a));

    let form = real_jordan_form(&a)?;
    for b in &form.blocks {
        println!("block {b:?}");
    }
    println!("S =\n{}", form.transform);
    assert_eq!(form.reconstruct()?, a);
    println!("S J S^-1 == A");
    Ok(())
}

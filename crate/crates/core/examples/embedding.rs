//! The real embedding of complex matrices.

use commuting_graph::field::GaussianRational;
use commuting_graph::matrix::Matrix;
use commuting_graph::spectral::{complex_embed, complex_preimage};

fn main() -> commuting_graph::Result<()> {
    let g = |re, im| GaussianRational::from_ints(re, im);
    let e = Matrix::from_rows((), vec![vec![g(1, 2), g(0, -1)], vec![g(3, 0), g(-2, 1)]])?;
    let f = Matrix::from_rows((), vec![vec![g(0, 1), g(1, 1)], vec![g(2, -3), g(1, 0)]])?;
    let phi = complex_embed(&e);
    println!("phi(E) =\n{phi}");
    assert_eq!(complex_embed(&(&e * &f)), &phi * &complex_embed(&f));
    assert_eq!(complex_embed(&(&e + &f)), &phi + &complex_embed(&f));
    println!("rank E = {}, rank phi(E) = {}", e.rank()?, phi.rank()?);
    assert_eq!(complex_preimage(&phi), Some(e));
    Ok(())
}

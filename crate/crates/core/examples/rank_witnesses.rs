//! Rank-one and rank-two commuting neighbors.

use commuting_graph::field::Rational;
use commuting_graph::matrix::Matrix;
use commuting_graph::path::{generate_with_spectrum, rank_one_neighbor, rank_two_neighbor};
use commuting_graph::spectral::JordanBlock;

fn show(name: &str, a: &Matrix<Rational>, x: &Matrix<Rational>) -> commuting_graph::Result<()> {
    let commutes = (a * x) == (x * a);
    println!("{name}: rank {}, commutes {commutes}\n{x}", x.rank()?);
    Ok(())
}

fn main() -> commuting_graph::Result<()> {
    // rational eigenvalue 2 gives a rank-one neighbor x yᵀ
    let a = generate_with_spectrum(4, &[JordanBlock::real(2, 2), JordanBlock::real(-1, 2)], 1)?;
    show("rank one", &a, &rank_one_neighbor(&a)?)?;

    // no real eigenvalue: the neighbor has rank 2
    let b = generate_with_spectrum(
        4,
        &[JordanBlock::complex(0, 1, 1), JordanBlock::complex(2, 3, 1)],
        2,
    )?;
    show("rank two", &b, &rank_two_neighbor(&b)?)?;
    Ok(())
}

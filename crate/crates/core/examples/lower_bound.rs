//! A pair whose distance is pinned between 3 and 4.

use commuting_graph::field::Rational;
use commuting_graph::matrix::Matrix;
use commuting_graph::path::{certify_lower_bound, connect};

fn main() -> commuting_graph::Result<()> {
    let a = Matrix::<Rational>::from_ints(&[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]])?;
    let b = Matrix::<Rational>::from_ints(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])?;
    let bound = certify_lower_bound(&a, &b)?;
    let cert = connect(&a, &b)?;
    println!("lower bound {} ({:?})", bound.bound, bound.evidence);
    println!("upper bound {} via {}", cert.length(), cert.route());
    for (i, v) in cert.vertices().iter().enumerate() {
        println!("v{i} =\n{v}");
    }
    Ok(())
}

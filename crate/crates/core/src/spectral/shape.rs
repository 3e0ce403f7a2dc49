use serde::{Deserialize, Serialize};

use super::jordan::{JordanBlock, RealJordanForm};
use super::spectrum::gaussian_spectrum;
use crate::error::{Error, Result};
use crate::field::{GaussianRational, Rational};
use crate::matrix::Matrix;

/// Real Jordan shapes of a 4×4 matrix without real eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Shape4x4 {
    /// `R₁ ⊕ R₁`
    PairRepeated,
    /// `R₁ ⊕ R₂`
    PairDistinct,
    /// `[[R₁, I], [0, R₁]]`
    Nondiagonalizable,
}

impl Shape4x4 {
    pub(crate) fn from_blocks(form: &RealJordanForm) -> Result<Self> {
        match form.blocks.as_slice() {
            [JordanBlock::Complex { k: 2, .. }] => Ok(Shape4x4::Nondiagonalizable),
            [JordanBlock::Complex { a, b, k: 1 }, JordanBlock::Complex { a: a2, b: b2, k: 1 }] => {
                Ok(if (a, b) == (a2, b2) {
                    Shape4x4::PairRepeated
                } else {
                    Shape4x4::PairDistinct
                })
            }
            _ => Err(Error::input("not a 4×4 form without real eigenvalues")),
        }
    }
}

/// Classifies from the spectrum and `rank(A − λI)` over `Q(i)`.
pub fn classify_shape_4x4(a: &Matrix<Rational>) -> Result<Shape4x4> {
    if a.order() != 4 {
        return Err(Error::input(format!(
            "shape classifier needs order 4, got {}",
            a.order()
        )));
    }
    let spectrum = gaussian_spectrum(a)?;
    if spectrum.has_real() {
        return Err(Error::input("matrix has a real eigenvalue"));
    }
    let pairs: Vec<&(GaussianRational, usize)> = spectrum.upper_pairs().collect();
    match pairs.as_slice() {
        [_, _] => Ok(Shape4x4::PairDistinct),
        [(lambda, 2)] => {
            let shifted = &a.to_gaussian() - &Matrix::scalar(4, (), lambda.clone());
            Ok(if shifted.rank()? == 2 {
                Shape4x4::PairRepeated
            } else {
                Shape4x4::Nondiagonalizable
            })
        }
        _ => Err(Error::internal("unexpected eigenvalue pattern for order 4")),
    }
}

//! Neighbor and midpoint constructions.
//!
//! Every function here returns a matrix that has already been checked to
//! commute with its arguments; a failed check is an [`Error::Internal`].

use crate::error::{Error, Result};
use crate::field::{Field, Fp, GaussianRational, Rational};
use crate::matrix::{commutes, conjugate, joint_centralizer_noncentral_excluding, Matrix};
use crate::spectral::{complex_embed, rational_eigenvalues, JordanBlock, RealJordanForm};

/// Eigenvalues of a matrix that lie in its own field.
pub trait EigenSearch: Field {
    /// The eigenvalue used for rank-one witnesses, if any.
    fn preferred_eigenvalue(a: &Matrix<Self>) -> Result<Option<Self>>;
}

impl EigenSearch for Rational {
    /// Smallest rational eigenvalue under (numerator, denominator) order.
    fn preferred_eigenvalue(a: &Matrix<Self>) -> Result<Option<Self>> {
        Ok(rational_eigenvalues(a)
            .into_iter()
            .map(|(l, _)| l)
            .min_by(crate::field::rational_lex_cmp))
    }
}

impl EigenSearch for Fp {
    fn preferred_eigenvalue(a: &Matrix<Self>) -> Result<Option<Self>> {
        let n = a.order();
        for c in a.ctx().elements() {
            let shifted = a - &Matrix::scalar(n, *a.ctx(), c);
            if shifted.rank()? < n {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

pub(crate) fn ensure_commutes<F: Field>(a: &Matrix<F>, x: &Matrix<F>, what: &str) -> Result<()> {
    if commutes(a, x)? {
        Ok(())
    } else {
        Err(Error::internal(format!(
            "{what} does not commute with its source"
        )))
    }
}

fn normalized_first_kernel<F: Field>(m: &Matrix<F>) -> Result<Option<Vec<F>>> {
    let k = m.kernel_basis()?;
    Ok(k.first().map(|v| crate::spectral::normalize_leading(v)))
}

/// `x·yᵀ` for right and left eigenvectors of `λ`.
pub fn rank_one_for_eigenvalue<F: Field>(a: &Matrix<F>, lambda: &F) -> Result<Matrix<F>> {
    let n = a.order();
    let shifted = a - &Matrix::scalar(n, a.ctx().clone(), lambda.clone());
    let (Some(x), Some(y)) = (
        normalized_first_kernel(&shifted)?,
        normalized_first_kernel(&shifted.transpose())?,
    ) else {
        return Err(Error::precondition(format!(
            "{lambda} is not an eigenvalue"
        )));
    };
    Matrix::outer(a.ctx().clone(), &x, &y)
}

/// A rank-one `X` commuting with `A`, built from an eigenvalue of `A` in
/// its own field.
pub fn rank_one_neighbor<F: EigenSearch>(a: &Matrix<F>) -> Result<Matrix<F>> {
    if a.is_scalar() {
        return Err(Error::precondition("scalar matrices have no neighbors"));
    }
    let lambda = F::preferred_eigenvalue(a)?
        .ok_or_else(|| Error::precondition("no eigenvalue in the base field"))?;
    let x = rank_one_for_eigenvalue(a, &lambda)?;
    ensure_commutes(a, &x, "rank-one witness")?;
    Ok(x)
}

/// A rank-two `X = S·φ(R)·S⁻¹` commuting with `A`, for `A` without real
/// eigenvalues. `R` is the rank-one witness of the complex preimage `E`
/// for the eigenvalue of the first block.
pub fn rank_two_neighbor(a: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    if a.is_scalar() {
        return Err(Error::precondition("scalar matrices have no neighbors"));
    }
    if !rational_eigenvalues(a).is_empty() {
        return Err(Error::precondition("matrix has a real eigenvalue"));
    }
    let form = crate::spectral::real_jordan_form(a)?;
    rank_two_from_form(a, &form)
}

pub(crate) fn rank_two_from_form(
    a: &Matrix<Rational>,
    form: &RealJordanForm,
) -> Result<Matrix<Rational>> {
    let e = form
        .complex_preimage()
        .ok_or_else(|| Error::precondition("matrix has a real eigenvalue"))?;
    let Some(JordanBlock::Complex { a: re, b: im, .. }) = form.blocks.first() else {
        return Err(Error::internal("complex form without blocks"));
    };
    let lambda = GaussianRational::new(re.clone(), im.clone());
    let r = rank_one_for_eigenvalue(&e, &lambda)?;
    let x = conjugate(&form.transform, &complex_embed(&r))?;
    ensure_commutes(a, &x, "rank-two witness")?;
    Ok(x)
}

/// A non-central `Z` commuting with `X` and `Y`, for `ker X ∩ ker Y ≠ 0`.
///
/// When the left kernels also meet, `Z = v·wᵀ` with `v`, `w` the last
/// canonical vectors of the two intersections, so `ZX = XZ = ZY = YZ = 0`.
/// Otherwise `Z` comes from the joint centralizer.
pub fn annihilator_witness<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Result<Matrix<F>> {
    x.same_shape(y)?;
    let right = x.kernel_basis()?.intersect(&y.kernel_basis()?)?;
    let Some(v) = right.last() else {
        return Err(Error::precondition("ker X ∩ ker Y is trivial"));
    };
    let left = x
        .transpose()
        .kernel_basis()?
        .intersect(&y.transpose().kernel_basis()?)?;
    let z = match left.last() {
        Some(w) => Matrix::outer(x.ctx().clone(), v, w)?,
        None => joint_centralizer_noncentral_excluding(x, y, &[x, y])?.ok_or_else(|| {
            Error::internal("joint centralizer is scalar despite a common kernel vector")
        })?,
    };
    ensure_commutes(x, &z, "annihilator")?;
    ensure_commutes(y, &z, "annihilator")?;
    Ok(z)
}

fn midpoint<F: Field>(
    m: &Matrix<F>,
    n: &Matrix<F>,
    avoid: &[&Matrix<F>],
    what: &str,
) -> Result<Matrix<F>> {
    let mut exclude = vec![m, n];
    exclude.extend_from_slice(avoid);
    let w = joint_centralizer_noncentral_excluding(m, n, &exclude)?
        .ok_or_else(|| Error::internal(format!("{what}: joint centralizer is scalar only")))?;
    ensure_commutes(m, &w, what)?;
    ensure_commutes(n, &w, what)?;
    Ok(w)
}

fn check_order_three<F: Field>(m: &Matrix<F>, n: &Matrix<F>) -> Result<()> {
    m.same_shape(n)?;
    if m.order() < 3 {
        return Err(Error::input("midpoints need order at least 3"));
    }
    Ok(())
}

/// A non-central `W` commuting with two nonzero square-zero matrices.
pub fn midpoint_square_zero<F: Field>(m: &Matrix<F>, n: &Matrix<F>) -> Result<Matrix<F>> {
    midpoint_square_zero_avoiding(m, n, &[])
}

pub(crate) fn midpoint_square_zero_avoiding<F: Field>(
    m: &Matrix<F>,
    n: &Matrix<F>,
    avoid: &[&Matrix<F>],
) -> Result<Matrix<F>> {
    check_order_three(m, n)?;
    for (name, x) in [("M", m), ("N", n)] {
        if x.is_zero() {
            return Err(Error::input(format!("{name} is zero")));
        }
        if !(x * x).is_zero() {
            return Err(Error::input(format!("{name} does not square to zero")));
        }
    }
    midpoint(m, n, avoid, "square-zero midpoint")
}

/// A non-central `W` commuting with two non-scalar idempotents.
pub fn midpoint_idempotents<F: Field>(p: &Matrix<F>, q: &Matrix<F>) -> Result<Matrix<F>> {
    midpoint_idempotents_avoiding(p, q, &[])
}

pub(crate) fn midpoint_idempotents_avoiding<F: Field>(
    p: &Matrix<F>,
    q: &Matrix<F>,
    avoid: &[&Matrix<F>],
) -> Result<Matrix<F>> {
    check_order_three(p, q)?;
    for (name, x) in [("P", p), ("Q", q)] {
        if &(x * x) != x {
            return Err(Error::input(format!("{name} is not idempotent")));
        }
        if x.is_scalar() {
            return Err(Error::input(format!("{name} is scalar")));
        }
    }
    midpoint(p, q, avoid, "idempotent midpoint")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::matrix::is_central;
    use crate::spectral::block_diagonal;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_ints(rows).unwrap()
    }

    fn e(n: usize, i: usize, j: usize) -> Matrix<Rational> {
        Matrix::unit(n, (), i, j)
    }

    #[test]
    fn rank_one_examples() {
        let d = Matrix::diagonal((), vec![1.into(), 2.into(), 3.into()]);
        assert_eq!(rank_one_neighbor(&d).unwrap(), e(3, 0, 0));

        let j = q(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 1]]);
        assert_eq!(rank_one_neighbor(&j).unwrap(), e(3, 0, 1));

        let c = block_diagonal(&[JordanBlock::complex(0, 1, 1), JordanBlock::complex(0, 1, 1)]);
        assert!(matches!(rank_one_neighbor(&c), Err(Error::Precondition(_))));
        assert!(matches!(
            rank_one_neighbor(&Matrix::<Rational>::identity(3, ())),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn rank_one_prefers_lexicographic_eigenvalue() {
        // eigenvalues −2 and 1/3: (−2, 1) precedes (1, 3)
        let d = Matrix::diagonal((), vec![Rational::new(1, 3), (-2).into(), 5.into()]);
        assert_eq!(rank_one_neighbor(&d).unwrap(), e(3, 1, 1));
    }

    #[test]
    fn rank_two_examples() {
        let expected = Matrix::diagonal((), vec![1.into(), 1.into(), 0.into(), 0.into()]);
        let rep = block_diagonal(&[JordanBlock::complex(0, 1, 1), JordanBlock::complex(0, 1, 1)]);
        assert_eq!(rank_two_neighbor(&rep).unwrap(), expected);
        let dist = block_diagonal(&[JordanBlock::complex(0, 1, 1), JordanBlock::complex(0, 2, 1)]);
        assert_eq!(rank_two_neighbor(&dist).unwrap(), expected);
        let d = Matrix::diagonal((), vec![1.into(), 2.into(), 3.into(), 4.into()]);
        assert!(matches!(rank_two_neighbor(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank_two_on_nondiagonalizable_block() {
        let a = JordanBlock::complex(1, 1, 2).matrix();
        let x = rank_two_neighbor(&a).unwrap();
        assert_eq!(x.rank().unwrap(), 2);
        assert!(commutes(&a, &x).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        let z = annihilator_witness(&e(3, 0, 0), &e(3, 0, 1)).unwrap();
        assert_eq!(z, e(3, 2, 2));

        let x = e(4, 0, 1);
        let z = annihilator_witness(&x, &x).unwrap();
        assert_eq!(z.rank().unwrap(), 1);
        assert!((&x * &z).is_zero() && (&z * &x).is_zero());

        let inv = Matrix::<Rational>::identity(3, ());
        assert!(matches!(
            annihilator_witness(&inv, &e(3, 0, 0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn square_zero_examples() {
        let w = midpoint_square_zero(&e(3, 0, 1), &e(3, 0, 2)).unwrap();
        assert!(!is_central(&w));
        let w = midpoint_square_zero(&e(3, 0, 1), &e(3, 1, 0)).unwrap();
        assert_eq!(w, Matrix::diagonal((), vec![1.into(), 1.into(), 0.into()]));
        assert!(matches!(
            midpoint_square_zero(&e(3, 0, 0), &e(3, 0, 1)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(
            midpoint_idempotents(&e(3, 0, 0), &e(3, 1, 1)).unwrap(),
            e(3, 2, 2)
        );
        let p = e(3, 0, 0);
        let w = midpoint_idempotents(&p, &p).unwrap();
        assert_ne!(w, p);
        assert!(!is_central(&w) && commutes(&w, &p).unwrap());
        assert!(matches!(
            midpoint_idempotents(&e(3, 0, 1), &p),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn rank_one_over_prime_field() {
        let f = PrimeField::new(5).unwrap();
        let a =
            Matrix::<Fp>::from_i64_rows(f, &[vec![0, 1, 0], vec![4, 0, 0], vec![0, 0, 2]]).unwrap();
        // x² + 1 has roots 2, 3 in F₅, so 2 is the first eigenvalue found.
        let x = rank_one_neighbor(&a).unwrap();
        assert_eq!(x.rank().unwrap(), 1);
        assert!(commutes(&a, &x).unwrap());
    }
}

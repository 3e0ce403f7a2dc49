use serde::{Deserialize, Serialize};

use super::certificate::{collapse_duplicates, PathCertificate, Route};
use super::witness::{
    annihilator_witness, ensure_commutes, midpoint_idempotents_avoiding,
    midpoint_square_zero_avoiding, rank_one_neighbor, rank_two_from_form, EigenSearch,
};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::matrix::{commutes, conjugate, joint_centralizer_noncentral, Matrix};
use crate::spectral::{real_jordan_form, JordanBlock, RealJordanForm, Shape4x4};

pub(crate) fn check_pair<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::input(format!(
            "orders differ: {} and {}",
            a.order(),
            b.order()
        )));
    }
    if a.order() < 3 {
        return Err(Error::input("paths need order at least 3"));
    }
    if a.is_scalar() || b.is_scalar() {
        return Err(Error::input("scalar matrices are not vertices"));
    }
    if a == b {
        return Err(Error::input("endpoints coincide"));
    }
    Ok(())
}

fn finish<F: Field>(route: Route, vertices: Vec<Matrix<F>>) -> Result<PathCertificate<F>> {
    let cert = PathCertificate::new(route, collapse_duplicates(vertices));
    let v = cert.verify();
    if !v.ok() {
        return Err(Error::internal(format!("{route} construction failed: {v}")));
    }
    if cert.length() > route.max_length() {
        return Err(Error::internal(format!(
            "{route} produced length {}",
            cert.length()
        )));
    }
    Ok(cert)
}

/// `A − X − Z − Y − B` through rank-one neighbors, for matrices with an
/// eigenvalue in their own field.
pub fn connect_rank_one<F: EigenSearch>(
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Result<PathCertificate<F>> {
    check_pair(a, b)?;
    if commutes(a, b)? {
        return finish(Route::Commuting, vec![a.clone(), b.clone()]);
    }
    let x = rank_one_neighbor(a)?;
    let y = rank_one_neighbor(b)?;
    let z = annihilator_witness(&x, &y)?;
    finish(Route::RankOneRankOne, vec![a.clone(), x, z, y, b.clone()])
}

enum Kind {
    Real,
    NoReal(RealJordanForm),
}

fn kind(a: &Matrix<Rational>) -> Result<Kind> {
    if Rational::preferred_eigenvalue(a)?.is_some() {
        return Ok(Kind::Real);
    }
    let form = real_jordan_form(a)?;
    if form.has_real_block() {
        return Err(Error::internal("real block without a rational eigenvalue"));
    }
    Ok(Kind::NoReal(form))
}

/// A verified path from `A` to `B` in the commuting graph of `M_n(Q)`, of
/// length at most 4, or 5 for the one 4×4 route that needs it.
pub fn connect(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Result<PathCertificate<Rational>> {
    check_pair(a, b)?;
    if commutes(a, b)? {
        return finish(Route::Commuting, vec![a.clone(), b.clone()]);
    }
    match (kind(a)?, kind(b)?) {
        (Kind::Real, Kind::Real) => connect_rank_one(a, b),
        (Kind::Real, Kind::NoReal(fb)) => mixed(a, b, &fb),
        (Kind::NoReal(fa), Kind::Real) => Ok(mixed(b, a, &fa)?.reversed()),
        (Kind::NoReal(fa), Kind::NoReal(fb)) => {
            if a.order() == 4 {
                four_by_four(a, &fa, b, &fb)
            } else {
                let x = rank_two_from_form(a, &fa)?;
                let y = rank_two_from_form(b, &fb)?;
                let z = annihilator_witness(&x, &y)?;
                finish(Route::RankTwoRankTwo, vec![a.clone(), x, z, y, b.clone()])
            }
        }
    }
}

fn mixed(
    a: &Matrix<Rational>,
    b: &Matrix<Rational>,
    fb: &RealJordanForm,
) -> Result<PathCertificate<Rational>> {
    let x = rank_one_neighbor(a)?;
    let y = rank_two_from_form(b, fb)?;
    let z = annihilator_witness(&x, &y)?;
    finish(Route::RankOneRankTwo, vec![a.clone(), x, z, y, b.clone()])
}

fn shape_rank(s: Shape4x4) -> u8 {
    match s {
        Shape4x4::PairRepeated => 0,
        Shape4x4::PairDistinct => 1,
        Shape4x4::Nondiagonalizable => 2,
    }
}

/// `diag(I, 0)`, `diag(0, I)` and `[[0, I], [0, 0]]` in 2×2 blocks.
fn upper_idempotent() -> Matrix<Rational> {
    Matrix::diagonal((), vec![1.into(), 1.into(), 0.into(), 0.into()])
}

fn lower_idempotent() -> Matrix<Rational> {
    Matrix::diagonal((), vec![0.into(), 0.into(), 1.into(), 1.into()])
}

fn block_nilpotent() -> Matrix<Rational> {
    let mut m = Matrix::zeros(4, ());
    m.set(0, 2, Rational::one());
    m.set(1, 3, Rational::one());
    m
}

fn conj_checked(
    form: &RealJordanForm,
    core: &Matrix<Rational>,
    a: &Matrix<Rational>,
    what: &str,
) -> Result<Matrix<Rational>> {
    let m = conjugate(&form.transform, core)?;
    ensure_commutes(a, &m, what)?;
    Ok(m)
}

fn four_by_four(
    a: &Matrix<Rational>,
    fa: &RealJordanForm,
    b: &Matrix<Rational>,
    fb: &RealJordanForm,
) -> Result<PathCertificate<Rational>> {
    let (sa, sb) = (Shape4x4::from_blocks(fa)?, Shape4x4::from_blocks(fb)?);
    if shape_rank(sa) > shape_rank(sb) {
        return Ok(four_by_four(b, fb, a, fa)?.reversed());
    }
    use Shape4x4::*;
    let route = match (sa, sb) {
        (PairRepeated, PairRepeated) => Route::Case1,
        (PairRepeated, PairDistinct) => Route::Case2,
        (PairRepeated, Nondiagonalizable) => Route::Case3,
        (PairDistinct, PairDistinct) => Route::Case4,
        (PairDistinct, Nondiagonalizable) => Route::Case5,
        (Nondiagonalizable, Nondiagonalizable) => Route::Case6,
        _ => unreachable!("pairs are ordered by shape"),
    };
    match route {
        Route::Case1 | Route::Case2 | Route::Case4 => {
            let i1 = conj_checked(fa, &upper_idempotent(), a, "idempotent I₁")?;
            let i2 = conj_checked(fb, &upper_idempotent(), b, "idempotent I₂")?;
            let x = midpoint_idempotents_avoiding(&i1, &i2, &[a, b])?;
            finish(route, vec![a.clone(), i1, x, i2, b.clone()])
        }
        Route::Case3 | Route::Case6 => {
            let n1 = conj_checked(fa, &block_nilpotent(), a, "nilpotent N₁")?;
            let n2 = conj_checked(fb, &block_nilpotent(), b, "nilpotent N₂")?;
            let x = midpoint_square_zero_avoiding(&n1, &n2, &[a, b])?;
            finish(route, vec![a.clone(), n1, x, n2, b.clone()])
        }
        _ => {
            let i1 = conj_checked(fa, &lower_idempotent(), a, "idempotent I₁")?;
            let [JordanBlock::Complex { a: re, b: im, k: 2 }] = fb.blocks.as_slice() else {
                return Err(Error::internal("expected one complex block of size 2"));
            };
            let b1 = JordanBlock::complex(re.clone(), im.clone(), 1).matrix();
            let core = Matrix::block_diagonal((), &[b1.clone(), b1]);
            let b_prime = conj_checked(fb, &core, b, "B′")?;
            let i2 = conj_checked(fb, &upper_idempotent(), &b_prime, "idempotent I₂")?;
            let x = midpoint_idempotents_avoiding(&i1, &i2, &[a, b, &b_prime])?;
            finish(route, vec![a.clone(), i1, x, i2, b_prime, b.clone()])
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundEvidence {
    Commuting,
    NonCommuting,
    JointCentralizerScalarOnly,
}

/// A proven lower bound on the distance between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub bound: u8,
    pub evidence: BoundEvidence,
}

/// `d(A, B) ≥ 1` always; `≥ 2` when they do not commute; `≥ 3` when in
/// addition no non-scalar matrix commutes with both.
pub fn certify_lower_bound<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<DistanceBound> {
    check_pair(a, b)?;
    let (bound, evidence) = if commutes(a, b)? {
        (1, BoundEvidence::Commuting)
    } else if joint_centralizer_noncentral(a, b)?.is_some() {
        (2, BoundEvidence::NonCommuting)
    } else {
        (3, BoundEvidence::JointCentralizerScalarOnly)
    };
    Ok(DistanceBound { bound, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::block_diagonal;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_ints(rows).unwrap()
    }

    fn cyclic() -> Matrix<Rational> {
        q(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]])
    }

    fn diag123() -> Matrix<Rational> {
        Matrix::diagonal((), vec![1.into(), 2.into(), 3.into()])
    }

    #[test]
    fn commuting_pair_is_one_edge() {
        let a = Matrix::unit(3, (), 0, 0);
        let c = connect(&a, &diag123()).unwrap();
        assert_eq!((c.route(), c.length()), (Route::Commuting, 1));
    }

    #[test]
    fn diagonal_to_companion() {
        // companion of (x−4)(x−5)(x−6) = x³ − 15x² + 74x − 120
        let b = q(&[vec![0, 0, 120], vec![1, 0, -74], vec![0, 1, 15]]);
        let c = connect(&diag123(), &b).unwrap();
        assert!(c.length() <= 4);
        assert!(c.verify_endpoints(&diag123(), &b).ok());
    }

    #[test]
    fn bracketing_pair() {
        let c = connect(&diag123(), &cyclic()).unwrap();
        assert_eq!(c.length(), 4);
        assert_eq!(c.route(), Route::RankOneRankOne);
        let lb = certify_lower_bound(&diag123(), &cyclic()).unwrap();
        assert_eq!(lb.bound, 3);
        assert_eq!(lb.evidence, BoundEvidence::JointCentralizerScalarOnly);
    }

    #[test]
    fn lower_bound_examples() {
        let e = |i, j| Matrix::<Rational>::unit(3, (), i, j);
        assert_eq!(certify_lower_bound(&e(0, 0), &e(1, 1)).unwrap().bound, 1);
        assert_eq!(certify_lower_bound(&e(0, 1), &e(1, 0)).unwrap().bound, 2);
    }

    #[test]
    fn case5_has_length_five() {
        let s = q(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 2],
        ]);
        let l = q(&[
            vec![1, 0, 2, 0],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ]);
        let a = conjugate(
            &s,
            &block_diagonal(&[JordanBlock::complex(0, 1, 1), JordanBlock::complex(0, 2, 1)]),
        )
        .unwrap();
        let b = conjugate(&l, &JordanBlock::complex(0, 3, 2).matrix()).unwrap();
        let c = connect(&a, &b).unwrap();
        assert_eq!((c.route(), c.length()), (Route::Case5, 5));
        let back = connect(&b, &a).unwrap();
        assert_eq!((back.route(), back.length()), (Route::Case5, 5));
        assert_eq!(back.vertices()[0], b);
    }

    #[test]
    fn rejects_bad_inputs() {
        let i3 = Matrix::<Rational>::identity(3, ());
        assert!(matches!(connect(&i3, &diag123()), Err(Error::Input(_))));
        assert!(matches!(
            connect(&diag123(), &diag123()),
            Err(Error::Input(_))
        ));
        let two = q(&[vec![1, 0], vec![0, 2]]);
        let two_b = q(&[vec![0, 1], vec![1, 0]]);
        assert!(matches!(connect(&two, &two_b), Err(Error::Input(_))));
        assert!(matches!(connect(&two, &diag123()), Err(Error::Input(_))));
    }
}

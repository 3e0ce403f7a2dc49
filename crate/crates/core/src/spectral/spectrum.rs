use super::poly::{characteristic_polynomial, gaussian_roots, rational_roots};
use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::matrix::Matrix;

/// Eigenvalues in `Q(i)` with algebraic multiplicities, sorted by real
/// then imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(GaussianRational, usize)>,
}

impl Spectrum {
    pub fn entries(&self) -> &[(GaussianRational, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn has_real(&self) -> bool {
        self.entries.iter().any(|(z, _)| z.is_real())
    }

    pub fn multiplicity_of(&self, z: &GaussianRational) -> usize {
        self.entries
            .iter()
            .find(|(w, _)| w == z)
            .map_or(0, |(_, m)| *m)
    }

    /// Non-real eigenvalues with positive imaginary part, one per pair.
    pub fn upper_pairs(&self) -> impl Iterator<Item = &(GaussianRational, usize)> {
        self.entries
            .iter()
            .filter(|(z, _)| !z.is_real() && !z.im.is_negative())
    }
}

/// Full spectrum when the characteristic polynomial splits over `Q(i)`;
/// otherwise [`Error::UnsupportedSpectrum`] naming the leftover factor.
pub fn gaussian_spectrum(a: &Matrix<Rational>) -> Result<Spectrum> {
    let chi = characteristic_polynomial(a);
    let f = gaussian_roots(&chi);
    if f.residual.degree() > 0 {
        let why = if f.scan_incomplete {
            "is too large to scan for roots"
        } else {
            "has roots outside Q(i)"
        };
        return Err(Error::UnsupportedSpectrum(format!(
            "characteristic polynomial factor {} {why}",
            f.residual.monic()
        )));
    }
    Ok(Spectrum { entries: f.roots })
}

/// Rational eigenvalues with multiplicities, ascending. Works even when
/// the rest of the spectrum is out of reach.
pub fn rational_eigenvalues(a: &Matrix<Rational>) -> Vec<(Rational, usize)> {
    let mut roots = rational_roots(&characteristic_polynomial(a)).0;
    roots.sort();
    roots
}

/// A nonzero `v` with `Av = λv`, scaled so its first nonzero entry is 1.
pub fn eigenvector_for(
    a: &Matrix<Rational>,
    lambda: &GaussianRational,
) -> Result<Vec<GaussianRational>> {
    let ag = a.to_gaussian();
    let shifted = &ag - &Matrix::scalar(a.order(), (), lambda.clone());
    let kernel = shifted.kernel_basis()?;
    let v = kernel
        .first()
        .ok_or_else(|| Error::input(format!("{lambda} is not an eigenvalue")))?;
    Ok(normalize_leading(v))
}

pub(crate) fn normalize_leading<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|e| !e.is_zero()) {
        Some(lead) if !lead.is_one() => {
            let inv = lead.try_inv().expect("nonzero");
            v.iter().map(|e| e.mul_ref(&inv)).collect()
        }
        _ => v.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_ints(rows).unwrap()
    }

    fn companion(coeffs: &[i64]) -> Matrix<Rational> {
        // monic x^n + c_{n-1}x^{n-1} + … + c_0, coeffs ascending without the 1
        let n = coeffs.len();
        Matrix::from_fn(n, (), |i, j| {
            if j == n - 1 {
                Rational::from(-coeffs[i])
            } else if i == j + 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    #[test]
    fn spectrum_examples() {
        let s = gaussian_spectrum(&q(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(
            s.entries(),
            &[
                (GaussianRational::from_ints(2, 0), 1),
                (GaussianRational::from_ints(3, 0), 1)
            ]
        );
        // C(1,2) has char poly x² − 2x + 5.
        let s = gaussian_spectrum(&q(&[vec![1, 2], vec![-2, 1]])).unwrap();
        assert_eq!(
            s.entries(),
            &[
                (GaussianRational::from_ints(1, -2), 1),
                (GaussianRational::from_ints(1, 2), 1)
            ]
        );
        let err = gaussian_spectrum(&companion(&[1, 1, 0, 0])).unwrap_err();
        assert!(matches!(&err, Error::UnsupportedSpectrum(m) if m.contains("x^4 + x + 1")));
    }

    #[test]
    fn eigenvector_examples() {
        let d = q(&[vec![2, 0], vec![0, 3]]);
        let v = eigenvector_for(&d, &GaussianRational::from_ints(2, 0)).unwrap();
        assert_eq!(
            v,
            vec![
                GaussianRational::from_ints(1, 0),
                GaussianRational::default()
            ]
        );

        let c = q(&[vec![0, 1], vec![-1, 0]]);
        let v = eigenvector_for(&c, &GaussianRational::i()).unwrap();
        assert_eq!(
            v,
            vec![GaussianRational::from_ints(1, 0), GaussianRational::i()]
        );

        assert!(eigenvector_for(&d, &GaussianRational::from_ints(5, 0)).is_err());
    }

    #[test]
    fn conjugate_pairs_have_equal_multiplicity() {
        let m = q(&[
            vec![0, 1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, -1, 0],
        ]);
        let s = gaussian_spectrum(&m).unwrap();
        for (z, k) in s.entries() {
            assert_eq!(s.multiplicity_of(&z.conj()), *k);
        }
        assert_eq!(s.total_multiplicity(), 4);
        assert!(!s.has_real());
    }
}

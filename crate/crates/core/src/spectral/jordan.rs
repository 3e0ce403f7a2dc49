//! Real Jordan canonical form with an explicit rational transform.
//!
//! Chains are built over `Q` for rational eigenvalues and over `Q(i)` for
//! each eigenvalue `a + ib` with `b > 0`; a complex chain `v₁, …, v_k` is
//! realified into the columns `Re v₁, Im v₁, …, Re v_k, Im v_k`, on which
//! `A` acts as `C_k(a, b)`.

use std::cmp::Ordering;

use super::embed::complex_preimage;
use super::spectrum::{gaussian_spectrum, normalize_leading};
use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::matrix::{rank_of_rows, Matrix, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JordanBlock {
    /// `C_k(a, b)`, order `2k`, with `b > 0`.
    Complex { a: Rational, b: Rational, k: usize },
    /// `J_m(λ)`.
    Real { lambda: Rational, m: usize },
}

impl JordanBlock {
    pub fn complex(a: impl Into<Rational>, b: impl Into<Rational>, k: usize) -> Self {
        JordanBlock::Complex {
            a: a.into(),
            b: b.into(),
            k,
        }
    }

    pub fn real(lambda: impl Into<Rational>, m: usize) -> Self {
        JordanBlock::Real {
            lambda: lambda.into(),
            m,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            JordanBlock::Complex { k, .. } => 2 * k,
            JordanBlock::Real { m, .. } => *m,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, JordanBlock::Complex { .. })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            JordanBlock::Complex { b, k, .. } => {
                if *k == 0 {
                    return Err(Error::input("complex block size must be positive"));
                }
                if !(b > &Rational::zero()) {
                    return Err(Error::input("complex block needs b > 0"));
                }
            }
            JordanBlock::Real { m, .. } => {
                if *m == 0 {
                    return Err(Error::input("real block size must be positive"));
                }
            }
        }
        Ok(())
    }

    /// The real block matrix.
    pub fn matrix(&self) -> Matrix<Rational> {
        match self {
            JordanBlock::Complex { a, b, k } => {
                let k = *k;
                Matrix::from_fn(2 * k, (), |r, c| {
                    let (br, bc) = (r / 2, c / 2);
                    if br == bc {
                        match (r % 2, c % 2) {
                            (0, 0) | (1, 1) => a.clone(),
                            (0, 1) => b.clone(),
                            _ => -b.clone(),
                        }
                    } else if bc == br + 1 && r % 2 == c % 2 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
            }
            JordanBlock::Real { lambda, m } => Matrix::from_fn(*m, (), |r, c| {
                if r == c {
                    lambda.clone()
                } else if c == r + 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
        }
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        use JordanBlock::*;
        match (self, other) {
            (
                Complex { a, b, k },
                Complex {
                    a: a2,
                    b: b2,
                    k: k2,
                },
            ) => (a, b, k).cmp(&(a2, b2, k2)),
            (Real { lambda, m }, Real { lambda: l2, m: m2 }) => (lambda, m).cmp(&(l2, m2)),
            (Complex { .. }, Real { .. }) => Ordering::Less,
            (Real { .. }, Complex { .. }) => Ordering::Greater,
        }
    }
}

/// Sorts into canonical order: complex blocks by `(a, b, k)`, then real
/// blocks by `(λ, m)`.
pub fn canonical_order(blocks: &mut [JordanBlock]) {
    blocks.sort_by(JordanBlock::sort_key_cmp);
}

pub fn block_diagonal(blocks: &[JordanBlock]) -> Matrix<Rational> {
    let mats: Vec<Matrix<Rational>> = blocks.iter().map(JordanBlock::matrix).collect();
    Matrix::block_diagonal((), &mats)
}

/// `A = S·J·S⁻¹` with `J` the block diagonal of `blocks`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealJordanForm {
    pub transform: Matrix<Rational>,
    pub blocks: Vec<JordanBlock>,
}

impl RealJordanForm {
    pub fn jordan_matrix(&self) -> Matrix<Rational> {
        block_diagonal(&self.blocks)
    }

    pub fn reconstruct(&self) -> Result<Matrix<Rational>> {
        crate::matrix::conjugate(&self.transform, &self.jordan_matrix())
    }

    pub fn has_real_block(&self) -> bool {
        self.blocks.iter().any(|b| !b.is_complex())
    }

    /// `E` with `φ(E) = J`, defined when every block is complex.
    pub fn complex_preimage(&self) -> Option<Matrix<GaussianRational>> {
        if self.has_real_block() {
            return None;
        }
        complex_preimage(&self.jordan_matrix())
    }
}

/// Jordan chains `[v₁, …, v_l]` for `λ`, with `(A − λ)v₁ = 0` and
/// `(A − λ)v_j = v_{j−1}`. Tops are picked from the kernel bases in order,
/// normalized to a leading 1.
pub(crate) fn jordan_chains<F: Field>(
    a: &Matrix<F>,
    lambda: &F,
    multiplicity: usize,
) -> Result<Vec<Vec<Vec<F>>>> {
    let n = a.order();
    let nil = a - &Matrix::scalar(n, a.ctx().clone(), lambda.clone());
    let mut kernels: Vec<SubspaceBasis<F>> = vec![SubspaceBasis::new_unchecked(n, Vec::new())];
    let mut power = nil.clone();
    while kernels.last().expect("nonempty").dim() < multiplicity {
        if kernels.len() > n {
            return Err(Error::internal(
                "generalized eigenspace failed to stabilize",
            ));
        }
        let k = power.kernel_basis()?;
        if k.dim() == kernels.last().expect("nonempty").dim() {
            return Err(Error::internal(format!(
                "generalized eigenspace of {lambda} stalls below multiplicity {multiplicity}"
            )));
        }
        kernels.push(k);
        power = &power * &nil;
    }
    let depth = kernels.len() - 1;
    let mut tops: Vec<(Vec<F>, usize)> = Vec::new();
    for level in (1..=depth).rev() {
        let mut current: Vec<Vec<F>> = kernels[level - 1].vectors().to_vec();
        for (t, len) in &tops {
            let mut v = t.clone();
            for _ in 0..(len - level) {
                v = nil.matvec(&v);
            }
            current.push(v);
        }
        let mut rank = rank_of_rows(current.clone(), n);
        for u in kernels[level].vectors() {
            let mut trial = current.clone();
            trial.push(u.clone());
            let r = rank_of_rows(trial.clone(), n);
            if r > rank {
                let top = normalize_leading(u);
                current.push(top.clone());
                tops.push((top, level));
                rank = r;
            }
        }
    }
    Ok(tops
        .into_iter()
        .map(|(top, len)| {
            let mut chain = vec![top];
            for _ in 1..len {
                let next = nil.matvec(chain.last().expect("nonempty"));
                chain.push(next);
            }
            chain.reverse();
            chain
        })
        .collect())
}

/// Real Jordan form of a rational matrix whose spectrum lies in `Q(i)`.
pub fn real_jordan_form(a: &Matrix<Rational>) -> Result<RealJordanForm> {
    let spectrum = gaussian_spectrum(a)?;
    let mut parts: Vec<(JordanBlock, Vec<Vec<Rational>>)> = Vec::new();
    for (z, mult) in spectrum.entries() {
        if z.is_real() {
            for chain in jordan_chains(a, &z.re, *mult)? {
                let block = JordanBlock::real(z.re.clone(), chain.len());
                parts.push((block, chain));
            }
        } else if !z.im.is_negative() {
            let ag = a.to_gaussian();
            for chain in jordan_chains(&ag, z, *mult)? {
                let block = JordanBlock::complex(z.re.clone(), z.im.clone(), chain.len());
                let cols = chain
                    .iter()
                    .flat_map(|v| {
                        [
                            v.iter().map(|e| e.re.clone()).collect::<Vec<_>>(),
                            v.iter().map(|e| e.im.clone()).collect(),
                        ]
                    })
                    .collect();
                parts.push((block, cols));
            }
        }
    }
    parts.sort_by(|x, y| x.0.sort_key_cmp(&y.0));
    let columns: Vec<Vec<Rational>> = parts.iter().flat_map(|(_, c)| c.clone()).collect();
    let transform = Matrix::from_columns((), &columns)?;
    let form = RealJordanForm {
        transform,
        blocks: parts.into_iter().map(|(b, _)| b).collect(),
    };
    if form.reconstruct()? != *a {
        return Err(Error::internal(
            "real Jordan form does not reconstruct its input",
        ));
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_ints(rows).unwrap()
    }

    #[test]
    fn rotation_is_its_own_form() {
        let c = q(&[vec![0, 1], vec![-1, 0]]);
        let f = real_jordan_form(&c).unwrap();
        assert_eq!(f.blocks, vec![JordanBlock::complex(0, 1, 1)]);
        assert_eq!(f.transform, Matrix::identity(2, ()));
    }

    #[test]
    fn diagonal_real_blocks() {
        let d = Matrix::diagonal((), vec![2.into(), 2.into(), 3.into()]);
        let f = real_jordan_form(&d).unwrap();
        assert_eq!(
            f.blocks,
            vec![
                JordanBlock::real(2, 1),
                JordanBlock::real(2, 1),
                JordanBlock::real(3, 1)
            ]
        );
        assert_eq!(f.transform, Matrix::identity(3, ()));
    }

    #[test]
    fn nontrivial_chain_over_gaussians() {
        let c2 = JordanBlock::complex(1, 2, 2).matrix();
        let s = q(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 2, 0],
            vec![0, 0, 1, -1],
            vec![1, 0, 0, 1],
        ]);
        let a = crate::matrix::conjugate(&s, &c2).unwrap();
        let f = real_jordan_form(&a).unwrap();
        assert_eq!(f.blocks, vec![JordanBlock::complex(1, 2, 2)]);
        assert_eq!(f.reconstruct().unwrap(), a);
    }

    #[test]
    fn mixed_blocks_in_canonical_order() {
        let blocks = [
            JordanBlock::real(-1, 2),
            JordanBlock::complex(0, 3, 1),
            JordanBlock::real(-1, 1),
            JordanBlock::complex(0, 1, 1),
        ];
        let j = block_diagonal(&blocks);
        let f = real_jordan_form(&j).unwrap();
        assert_eq!(
            f.blocks,
            vec![
                JordanBlock::complex(0, 1, 1),
                JordanBlock::complex(0, 3, 1),
                JordanBlock::real(-1, 1),
                JordanBlock::real(-1, 2),
            ]
        );
    }

    #[test]
    fn block_matrices() {
        assert_eq!(
            JordanBlock::complex(0, 1, 2).matrix(),
            q(&[
                vec![0, 1, 1, 0],
                vec![-1, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, -1, 0]
            ])
        );
        assert_eq!(
            JordanBlock::real(4, 2).matrix(),
            q(&[vec![4, 1], vec![0, 4]])
        );
        assert!(JordanBlock::complex(0, -1, 1).validate().is_err());
        assert!(JordanBlock::real(0, 0).validate().is_err());
    }
}

use super::elimination::{nullspace, rank_of_rows, rref};
use crate::error::{Error, Result};
use crate::field::Field;

/// A list of linearly independent column vectors in `F^ambient`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis<F: Field> {
    ambient: usize,
    vectors: Vec<Vec<F>>,
}

impl<F: Field> SubspaceBasis<F> {
    pub(crate) fn new_unchecked(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        SubspaceBasis { ambient, vectors }
    }

    /// Checks lengths and independence.
    pub fn new(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::input("vector length differs from ambient dimension"));
        }
        if F::EXACT && rank_of_rows(vectors.clone(), ambient) != vectors.len() {
            return Err(Error::input("vectors are linearly dependent"));
        }
        Ok(SubspaceBasis { ambient, vectors })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }

    pub fn first(&self) -> Option<&Vec<F>> {
        self.vectors.first()
    }

    pub fn last(&self) -> Option<&Vec<F>> {
        self.vectors.last()
    }

    /// Same span, reduced row echelon basis.
    pub fn canonical(&self) -> Self {
        SubspaceBasis {
            ambient: self.ambient,
            vectors: rref(self.vectors.clone(), self.ambient).rows,
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.vectors.clone();
        rows.push(v.to_vec());
        rank_of_rows(rows, self.ambient) == self.vectors.len()
    }

    /// `U ∩ V`, returned in canonical (reduced echelon) form.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::input(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.is_trivial() || other.is_trivial() {
            return Ok(SubspaceBasis::new_unchecked(self.ambient, Vec::new()));
        }
        let Some(ctx) = self.vectors[0].first().map(Field::context) else {
            return Ok(SubspaceBasis::new_unchecked(0, Vec::new()));
        };
        // Solve Σ a_k u_k − Σ b_l v_l = 0; each solution gives Σ a_k u_k.
        let (du, dv) = (self.dim(), other.dim());
        let rows: Vec<Vec<F>> = (0..self.ambient)
            .map(|i| {
                self.vectors
                    .iter()
                    .map(|u| u[i].clone())
                    .chain(other.vectors.iter().map(|v| -v[i].clone()))
                    .collect()
            })
            .collect();
        let coeffs = nullspace(rows, du + dv, &ctx);
        let vectors = coeffs
            .iter()
            .map(|c| {
                (0..self.ambient)
                    .map(|i| {
                        (0..du).fold(F::zero(&ctx), |acc, k| {
                            if c[k].is_zero() {
                                acc
                            } else {
                                acc + c[k].mul_ref(&self.vectors[k][i])
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(SubspaceBasis::new_unchecked(self.ambient, vectors).canonical())
    }
}

//! Commutation tests and centralizer solvers.
//!
//! Unknown matrices `W` are vectorized row-major: `W[i][j]` is unknown
//! `i·n + j`, and equation `i·n + j` of the system for `A` is
//! `(AW − WA)[i][j] = 0`.

use super::elimination::nullspace;
use super::Matrix;
use crate::error::{Error, Result};
use crate::field::Field;

/// `AB = BA`, exactly in exact domains and by the Frobenius tolerance
/// `‖AB − BA‖ ≤ abs + rel·‖A‖·‖B‖` otherwise.
pub fn commutes<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<bool> {
    a.same_shape(b)?;
    let ab = a * b;
    let ba = b * a;
    match F::tolerance(a.ctx()) {
        None => Ok(ab == ba),
        Some(tol) => {
            let comm = (&ab - &ba).frobenius();
            Ok(comm <= tol.abs + tol.rel * a.frobenius() * b.frobenius())
        }
    }
}

/// Central elements of a full matrix ring are the scalar matrices.
pub fn is_central<F: Field>(a: &Matrix<F>) -> bool {
    match F::tolerance(a.ctx()) {
        None => a.is_scalar(),
        Some(tol) => {
            let n = a.order();
            let mean = a.trace().real_value() / n as f64;
            let dev: f64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let target = if i == j { mean } else { 0.0 };
                    let d = a.get(i, j).real_value() - target;
                    d * d
                })
                .sum::<f64>()
                .sqrt();
            dev <= tol.abs + tol.rel * a.frobenius()
        }
    }
}

/// The `n² × n²` system whose null space is `C(A)`.
pub fn commutation_rows<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let n = a.order();
    let ctx = a.ctx();
    let mut rows = vec![vec![F::zero(ctx); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            let row = &mut rows[i * n + j];
            for k in 0..n {
                // (AW)_ij = Σ_k A_ik W_kj
                let aik = a.get(i, k);
                if !aik.is_zero() {
                    row[k * n + j] = row[k * n + j].add_ref(aik);
                }
                // (WA)_ij = Σ_k W_ik A_kj
                let akj = a.get(k, j);
                if !akj.is_zero() {
                    row[i * n + k] = row[i * n + k].sub_ref(akj);
                }
            }
        }
    }
    rows
}

fn require_exact<F: Field>(what: &str) -> Result<()> {
    if F::EXACT {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what} needs exact arithmetic")))
    }
}

fn unvec<F: Field>(n: usize, ctx: &F::Ctx, v: Vec<F>) -> Matrix<F> {
    Matrix::from_entries(n, ctx.clone(), v).expect("n² entries")
}

/// Basis of `{W : AW = WA}`.
pub fn centralizer_basis<F: Field>(a: &Matrix<F>) -> Result<Vec<Matrix<F>>> {
    require_exact::<F>("centralizer")?;
    let n = a.order();
    Ok(nullspace(commutation_rows(a), n * n, a.ctx())
        .into_iter()
        .map(|v| unvec(n, a.ctx(), v))
        .collect())
}

/// Basis of the joint centralizer `C(X) ∩ C(Y)`.
pub fn joint_centralizer_basis<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Result<Vec<Matrix<F>>> {
    require_exact::<F>("joint centralizer")?;
    x.same_shape(y)?;
    let n = x.order();
    let mut rows = commutation_rows(x);
    rows.extend(commutation_rows(y));
    Ok(nullspace(rows, n * n, x.ctx())
        .into_iter()
        .map(|v| unvec(n, x.ctx(), v))
        .collect())
}

/// First non-scalar element of the joint centralizer in basis order, or
/// `None` when the joint centralizer is exactly the scalars.
pub fn joint_centralizer_noncentral<F: Field>(
    x: &Matrix<F>,
    y: &Matrix<F>,
) -> Result<Option<Matrix<F>>> {
    joint_centralizer_noncentral_excluding(x, y, &[])
}

/// As [`joint_centralizer_noncentral`], preferring a witness that differs
/// from every matrix in `exclude`. Candidates are the basis elements in
/// order, then pairwise sums `b_i + b_j` (`i < j`). When every non-scalar
/// candidate is excluded the first non-scalar one is returned anyway.
pub fn joint_centralizer_noncentral_excluding<F: Field>(
    x: &Matrix<F>,
    y: &Matrix<F>,
    exclude: &[&Matrix<F>],
) -> Result<Option<Matrix<F>>> {
    let basis = joint_centralizer_basis(x, y)?;
    if basis.len() <= 1 {
        return Ok(None);
    }
    let pairs = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .map(|(i, j)| &basis[i] + &basis[j]);
    let mut fallback = None;
    for cand in basis.iter().cloned().chain(pairs) {
        if cand.is_scalar() {
            continue;
        }
        if !exclude.iter().any(|e| **e == cand) {
            return Ok(Some(cand));
        }
        fallback.get_or_insert(cand);
    }
    match fallback {
        Some(w) => Ok(Some(w)),
        None => Err(Error::internal(
            "joint centralizer of dimension ≥ 2 has no non-scalar candidate",
        )),
    }
}

/// `S·A·S⁻¹`.
pub fn conjugate<F: Field>(s: &Matrix<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    s.same_shape(a)?;
    let si = s.inverse()?;
    Ok(&(s * a) * &si)
}

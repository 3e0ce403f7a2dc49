//! Float-mode paths for real matrices outside the exact class.
//!
//! The same route shapes as exact mode, with eigenvectors and null vectors
//! taken from dense eigen- and singular value decompositions. Nothing is
//! trusted: every certificate is checked against the relative commutator
//! bound before it is returned.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

use super::certificate::{collapse_duplicates, PathCertificate, Route};
use super::connect::check_pair;
use crate::error::{Error, Result};
use crate::field::{ApproxReal, Tolerance};
use crate::matrix::{commutes, Matrix};

/// Eigenvalues closer than this (relative to `‖A‖_F`) are treated as
/// repeated, which float mode refuses.
pub const MIN_EIGEN_GAP: f64 = 1e-6;

/// Null-space singular values above this (relative) mean no null vector.
const NULL_THRESHOLD: f64 = 1e-8;

pub fn to_dmatrix(a: &Matrix<ApproxReal>) -> DMatrix<f64> {
    let n = a.order();
    DMatrix::from_fn(n, n, |i, j| a.get(i, j).value())
}

pub fn from_dmatrix(m: &DMatrix<f64>, tol: Tolerance) -> Result<Matrix<ApproxReal>> {
    let n = m.nrows();
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| ApproxReal::new(m[(i, j)], tol))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_entries(n, tol, entries)
}

fn scale_of(m: &DMatrix<f64>) -> f64 {
    m.norm().max(f64::MIN_POSITIVE)
}

/// Right null vector of `m` (rows ≥ columns), from the smallest singular value.
fn null_vector_real(m: &DMatrix<f64>, what: &str) -> Result<DVector<f64>> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::internal("SVD without V"))?;
    let (k, s) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .ok_or_else(|| Error::internal("empty SVD"))?;
    if *s > NULL_THRESHOLD * scale_of(m) {
        return Err(Error::internal(format!(
            "{what}: no null vector (σ_min = {s:e})"
        )));
    }
    Ok(v_t.row(k).transpose())
}

fn null_vector_complex(m: &DMatrix<Complex64>) -> Result<DVector<Complex64>> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::internal("SVD without V"))?;
    let (k, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .ok_or_else(|| Error::internal("empty SVD"))?;
    Ok(v_t.row(k).transpose().map(|z| z.conj()))
}

/// Eigenvalues sorted by real then imaginary part, rejecting clusters.
pub fn simple_eigenvalues(a: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    let mut eig: Vec<Complex64> = a.complex_eigenvalues().iter().copied().collect();
    let scale = scale_of(a);
    for z in &mut eig {
        if z.im.abs() <= 1e-12 * scale {
            z.im = 0.0;
        }
    }
    eig.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    for i in 0..eig.len() {
        for j in i + 1..eig.len() {
            if (eig[i] - eig[j]).norm() < MIN_EIGEN_GAP * scale {
                return Err(Error::Unsupported(format!(
                    "float mode needs simple eigenvalues; {} and {} are too close",
                    eig[i], eig[j]
                )));
            }
        }
    }
    Ok(eig)
}

/// Smallest real eigenvalue, if any.
fn real_eigenvalue(eig: &[Complex64]) -> Option<f64> {
    eig.iter().find(|z| z.im == 0.0).map(|z| z.re)
}

/// `x·yᵀ` for unit right and left eigenvectors of the real eigenvalue `λ`.
pub fn float_rank_one(a: &DMatrix<f64>, lambda: f64) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let shifted = a - DMatrix::identity(n, n) * lambda;
    let x = null_vector_real(&shifted, "right eigenvector")?;
    let y = null_vector_real(&shifted.transpose(), "left eigenvector")?;
    Ok(&x * y.transpose())
}

/// The real spectral projector `2·Re(z·wᵀ)/(wᵀz)` for the pair `λ, λ̄`.
/// Rank two and idempotent.
pub fn float_rank_two(a: &DMatrix<f64>, lambda: Complex64) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let ac = a.map(|x| Complex64::new(x, 0.0));
    let shifted = &ac - DMatrix::identity(n, n) * lambda;
    let z = null_vector_complex(&shifted)?;
    let w = null_vector_complex(&shifted.transpose())?;
    let c = w.transpose() * &z;
    let c = c[(0, 0)];
    if c.norm() < NULL_THRESHOLD {
        return Err(Error::internal(
            "left and right eigenvectors are orthogonal",
        ));
    }
    let p = (&z * w.transpose()) / c;
    Ok(p.map(|e| 2.0 * e.re))
}

/// `v·wᵀ` with `v ∈ ker X ∩ ker Y` and `w ∈ ker Xᵀ ∩ ker Yᵀ`.
fn float_annihilator(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = x.nrows();
    let mut right = DMatrix::zeros(2 * n, n);
    right.view_mut((0, 0), (n, n)).copy_from(x);
    right.view_mut((n, 0), (n, n)).copy_from(y);
    let mut left = DMatrix::zeros(2 * n, n);
    left.view_mut((0, 0), (n, n)).copy_from(&x.transpose());
    left.view_mut((n, 0), (n, n)).copy_from(&y.transpose());
    let v = null_vector_real(&right, "common kernel")?;
    let w = null_vector_real(&left, "common left kernel")?;
    Ok(&v * w.transpose())
}

/// A traceless nonzero `W` commuting with both, from the null space of the
/// stacked commutation operator with `vec(I)` pinned out.
fn float_midpoint(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = x.nrows();
    let nn = n * n;
    let mut k = DMatrix::zeros(2 * nn + 1, nn);
    for (block, m) in [x, y].into_iter().enumerate() {
        let s = m.norm().max(f64::MIN_POSITIVE);
        for i in 0..n {
            for j in 0..n {
                let row = block * nn + i * n + j;
                for t in 0..n {
                    k[(row, t * n + j)] += m[(i, t)] / s;
                    k[(row, i * n + t)] -= m[(t, j)] / s;
                }
            }
        }
    }
    let inv = 1.0 / (n as f64).sqrt();
    for i in 0..n {
        k[(2 * nn, i * n + i)] = inv;
    }
    let v = null_vector_real(&k, "joint centralizer")?;
    Ok(DMatrix::from_fn(n, n, |i, j| v[i * n + j]))
}

/// A path between two real matrices with simple spectra, checked to the
/// relative residual `tol.rel`.
pub fn connect_float(
    a: &Matrix<ApproxReal>,
    b: &Matrix<ApproxReal>,
) -> Result<PathCertificate<ApproxReal>> {
    check_pair(a, b)?;
    let tol = *a.ctx();
    if commutes(a, b)? {
        return finish(Route::Commuting, vec![a.clone(), b.clone()]);
    }
    let (da, db) = (to_dmatrix(a), to_dmatrix(b));
    let (ea, eb) = (simple_eigenvalues(&da)?, simple_eigenvalues(&db)?);
    let n = a.order();
    let witness = |m: &DMatrix<f64>, eig: &[Complex64]| -> Result<(DMatrix<f64>, bool)> {
        match real_eigenvalue(eig) {
            Some(l) => Ok((float_rank_one(m, l)?, true)),
            None => {
                let z = eig
                    .iter()
                    .copied()
                    .find(|z| z.im > 0.0)
                    .ok_or_else(|| Error::internal("no eigenvalue"))?;
                Ok((float_rank_two(m, z)?, false))
            }
        }
    };
    let (x, ra) = witness(&da, &ea)?;
    let (y, rb) = witness(&db, &eb)?;
    let (route, z) = match (ra, rb) {
        (true, true) => (Route::RankOneRankOne, float_annihilator(&x, &y)?),
        (true, false) | (false, true) => (Route::RankOneRankTwo, float_annihilator(&x, &y)?),
        (false, false) if n != 4 => (Route::RankTwoRankTwo, float_annihilator(&x, &y)?),
        // Simple spectra force two distinct pairs; the projectors are the
        // idempotents S·diag(I, 0)·S⁻¹.
        (false, false) => (Route::Case4, float_midpoint(&x, &y)?),
    };
    let vertices = vec![
        a.clone(),
        from_dmatrix(&x, tol)?,
        from_dmatrix(&z, tol)?,
        from_dmatrix(&y, tol)?,
        b.clone(),
    ];
    finish(route, vertices)
}

fn finish(route: Route, vertices: Vec<Matrix<ApproxReal>>) -> Result<PathCertificate<ApproxReal>> {
    let cert = PathCertificate::new(route, collapse_duplicates(vertices));
    let v = cert.verify();
    if !v.ok() {
        return Err(Error::internal(format!("float {route} path failed: {v}")));
    }
    Ok(cert)
}

/// Uniform entries in `[-1, 1]`, redrawn until the spectrum is well
/// separated and the eigenvalues are well conditioned.
pub fn random_well_conditioned<R: Rng>(
    n: usize,
    tol: Tolerance,
    rng: &mut R,
) -> Result<Matrix<ApproxReal>> {
    for _ in 0..1000 {
        let m = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..=1.0));
        let Ok(eig) = simple_eigenvalues(&m) else {
            continue;
        };
        let scale = scale_of(&m);
        let gap_ok = eig.iter().enumerate().all(|(i, z)| {
            (z.im == 0.0 || z.im.abs() > 1e-2 * scale)
                && eig[i + 1..].iter().all(|w| (z - w).norm() > 5e-2 * scale)
        });
        if gap_ok {
            return from_dmatrix(&m, tol);
        }
    }
    Err(Error::Resource(
        "no well-conditioned sample in 1000 draws".into(),
    ))
}

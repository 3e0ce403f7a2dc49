//! Dense square matrices over any [`Field`], with exact kernels, ranks and
//! centralizer solvers for the exact domains.

mod centralizer;
mod elimination;
mod subspace;

pub use centralizer::{
    centralizer_basis, commutation_rows, commutes, conjugate, is_central, joint_centralizer_basis,
    joint_centralizer_noncentral, joint_centralizer_noncentral_excluding,
};
pub use elimination::{nullspace, rank_of_rows, rref, Echelon};
pub use subspace::SubspaceBasis;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FromRational, GaussianRational, Rational};

/// A dense `n × n` matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    n: usize,
    ctx: F::Ctx,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_entries(n: usize, ctx: F::Ctx, entries: Vec<F>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("matrix order must be positive"));
        }
        if entries.len() != n * n {
            return Err(Error::input(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.context() != ctx) {
            return Err(Error::input("entries do not share one scalar domain"));
        }
        Ok(Matrix { n, ctx, entries })
    }

    pub fn from_rows(ctx: F::Ctx, rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("matrix rows must form a square"));
        }
        Self::from_entries(n, ctx, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(n: usize, ctx: F::Ctx, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix { n, ctx, entries }
    }

    pub fn from_i64_rows(ctx: F::Ctx, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(&ctx, v)).collect())
            .collect();
        Self::from_rows(ctx, rows)
    }

    pub fn zeros(n: usize, ctx: F::Ctx) -> Self {
        let z = F::zero(&ctx);
        Matrix {
            n,
            entries: vec![z; n * n],
            ctx,
        }
    }

    pub fn identity(n: usize, ctx: F::Ctx) -> Self {
        Self::scalar(n, ctx.clone(), F::one(&ctx))
    }

    pub fn scalar(n: usize, ctx: F::Ctx, c: F) -> Self {
        let z = F::zero(&ctx);
        Self::from_fn(n, ctx, |i, j| if i == j { c.clone() } else { z.clone() })
    }

    /// The matrix unit `E_ij` (zero-based indices).
    pub fn unit(n: usize, ctx: F::Ctx, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, ctx.clone());
        m.set(i, j, F::one(&ctx));
        m
    }

    pub fn diagonal(ctx: F::Ctx, diag: Vec<F>) -> Self {
        let n = diag.len();
        let z = F::zero(&ctx);
        Self::from_fn(
            n,
            ctx,
            |i, j| if i == j { diag[i].clone() } else { z.clone() },
        )
    }

    /// The rank-one matrix `x·yᵀ`.
    pub fn outer(ctx: F::Ctx, x: &[F], y: &[F]) -> Result<Self> {
        if x.len() != y.len() || x.is_empty() {
            return Err(Error::input(
                "outer product needs two vectors of equal length",
            ));
        }
        let n = x.len();
        Ok(Self::from_fn(n, ctx, |i, j| x[i].mul_ref(&y[j])))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(ctx: F::Ctx, cols: &[Vec<F>]) -> Result<Self> {
        let n = cols.len();
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::input("columns must form a square"));
        }
        Self::from_entries(
            n,
            ctx,
            (0..n * n).map(|k| cols[k % n][k / n].clone()).collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.ctx.clone(), |i, j| self.get(j, i).clone())
    }

    pub fn map<G: Field>(&self, ctx: G::Ctx, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
            ctx,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(self.ctx.clone(), |e| e.mul_ref(c))
    }

    pub fn trace(&self) -> F {
        (0..self.n).fold(F::zero(&self.ctx), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Field::is_zero)
    }

    /// True iff the matrix is `c·I` for some `c` (including `0`).
    pub fn is_scalar(&self) -> bool {
        let c = self.get(0, 0);
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e == c
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn matvec(&self, v: &[F]) -> Vec<F> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(&self.ctx), |acc, (a, b)| {
                        if a.is_zero() || b.is_zero() {
                            acc
                        } else {
                            acc + a.mul_ref(b)
                        }
                    })
            })
            .collect()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n, self.ctx.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::input(format!(
                "order mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        if self.ctx != other.ctx {
            return Err(Error::input("scalar domain mismatch"));
        }
        Ok(())
    }

    /// Frobenius norm from entry magnitudes; only meaningful for the
    /// approximate and rational domains.
    pub fn frobenius(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| {
                let m = e.magnitude();
                m * m
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Places `blocks` along the diagonal.
    pub fn block_diagonal(ctx: F::Ctx, blocks: &[Matrix<F>]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n, ctx);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        m
    }
}

impl<F: Field> Matrix<F> {
    fn require_exact(&self, what: &str) -> Result<()> {
        if F::EXACT {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} needs exact arithmetic; approximate ranks are refused"
            )))
        }
    }

    pub fn rank(&self) -> Result<usize> {
        self.require_exact("rank")?;
        Ok(rank_of_rows(self.rows(), self.n))
    }

    /// Exact basis of the right null space.
    pub fn kernel_basis(&self) -> Result<SubspaceBasis<F>> {
        self.require_exact("kernel")?;
        let vectors = nullspace(self.rows(), self.n, &self.ctx);
        Ok(SubspaceBasis::new_unchecked(self.n, vectors))
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_exact("inverse")?;
        let n = self.n;
        let one = F::one(&self.ctx);
        let zero = F::zero(&self.ctx);
        let rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
                r
            })
            .collect();
        let ech = rref(rows, 2 * n);
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return Err(Error::input("matrix is singular"));
        }
        let mut inv = Vec::with_capacity(n * n);
        for r in ech.rows.into_iter().take(n) {
            inv.extend(r.into_iter().skip(n));
        }
        Matrix::from_entries(n, self.ctx.clone(), inv)
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.rank()? == self.n)
    }
}

impl Matrix<Rational> {
    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_i64_rows((), rows)
    }

    /// Includes into any characteristic-zero domain.
    pub fn lift<G: FromRational>(&self, ctx: G::Ctx) -> Matrix<G> {
        self.map(ctx.clone(), |e| G::from_rational(&ctx, e))
    }

    pub fn to_gaussian(&self) -> Matrix<GaussianRational> {
        self.lift(())
    }
}

impl Matrix<GaussianRational> {
    /// The rational matrix when every entry is real.
    pub fn to_rational(&self) -> Option<Matrix<Rational>> {
        self.entries
            .iter()
            .all(GaussianRational::is_real)
            .then(|| self.map((), |e| e.re.clone()))
    }
}

impl<'a, F: Field> Mul for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in product");
        let n = self.n;
        let zero = F::zero(&self.ctx);
        let mut out = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out[i * n + j] = out[i * n + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Matrix {
            n,
            ctx: self.ctx.clone(),
            entries: out,
        }
    }
}

impl<'a, F: Field> Add for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in sum");
        Matrix {
            n: self.n,
            ctx: self.ctx.clone(),
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }
}

impl<'a, F: Field> Sub for &'a Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in difference");
        Matrix {
            n: self.n,
            ctx: self.ctx.clone(),
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        self.map(self.ctx.clone(), |e| -e.clone())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.rows())
    }
}

/// Plain-text pretty printer, right-aligned columns. Never parsed back.
impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

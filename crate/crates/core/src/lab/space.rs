use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::matrix::Matrix;

/// Largest `p^(n²)` the lab will enumerate.
pub const SIZE_LIMIT: u64 = 1 << 24;

/// All of `M_n(F_p)`, indexed by `Σ e_k·p^k` over the row-major entries
/// `e_0, e_1, …` (least significant first).
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    n: usize,
    field: PrimeField,
    size: usize,
    table: Vec<u16>,
}

pub fn space_size(n: usize, p: u32) -> Result<u64> {
    let mut size: u64 = 1;
    for _ in 0..n * n {
        size = size.saturating_mul(p as u64);
        if size > SIZE_LIMIT {
            return Err(Error::Resource(format!(
                "{p}^{} matrices exceed the limit of 2^24",
                n * n
            )));
        }
    }
    Ok(size)
}

impl FiniteSpace {
    pub fn new(n: usize, p: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("order must be positive"));
        }
        let field = PrimeField::new(p)?;
        let size = space_size(n, p)? as usize;
        let nn = n * n;
        let mut table = vec![0u16; size * nn];
        let mut digits = vec![0u16; nn];
        for idx in 0..size {
            table[idx * nn..(idx + 1) * nn].copy_from_slice(&digits);
            for d in digits.iter_mut() {
                *d += 1;
                if u32::from(*d) < p {
                    break;
                }
                *d = 0;
            }
        }
        Ok(FiniteSpace {
            n,
            field,
            size,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.field.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `p^(n²)`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self, idx: u32) -> &[u16] {
        let nn = self.n * self.n;
        let i = idx as usize;
        &self.table[i * nn..(i + 1) * nn]
    }

    /// Index of the matrix with the given row-major entries, reduced mod p.
    pub fn encode(&self, entries: &[i64]) -> Result<u32> {
        if entries.len() != self.n * self.n {
            return Err(Error::input("wrong number of entries"));
        }
        let p = i64::from(self.modulus());
        Ok(entries
            .iter()
            .rev()
            .fold(0u64, |acc, e| acc * p as u64 + e.rem_euclid(p) as u64) as u32)
    }

    pub fn matrix(&self, idx: u32) -> Matrix<Fp> {
        let e = self.entries(idx);
        Matrix::from_fn(self.n, self.field, |i, j| {
            self.field.element(i64::from(e[i * self.n + j]))
        })
    }

    pub fn index_of(&self, m: &Matrix<Fp>) -> Result<u32> {
        if m.order() != self.n || m.ctx().modulus() != self.modulus() {
            return Err(Error::input("matrix does not belong to this space"));
        }
        let e: Vec<i64> = m.entries().iter().map(|x| i64::from(x.value())).collect();
        self.encode(&e)
    }

    /// Index of `c·I`.
    pub fn scalar_index(&self, c: u32) -> u32 {
        let mut e = vec![0i64; self.n * self.n];
        for i in 0..self.n {
            e[i * self.n + i] = i64::from(c);
        }
        self.encode(&e).expect("n² entries")
    }

    pub fn is_scalar(&self, idx: u32) -> bool {
        let e = self.entries(idx);
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                if i == j {
                    e[i * n + j] == e[0]
                } else {
                    e[i * n + j] == 0
                }
            })
        })
    }

    /// Non-scalar indices in increasing order.
    pub fn noncentral(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.size as u32).filter(move |&i| !self.is_scalar(i))
    }

    fn product_into(&self, a: &[u16], b: &[u16], out: &mut [u64]) {
        let n = self.n;
        let p = u64::from(self.modulus());
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += u64::from(a[i * n + k]) * u64::from(b[k * n + j]);
                }
                out[i * n + j] = acc % p;
            }
        }
    }

    pub fn product(&self, a: u32, b: u32) -> Vec<u64> {
        let mut out = vec![0u64; self.n * self.n];
        self.product_into(self.entries(a), self.entries(b), &mut out);
        out
    }

    /// `AB = BA`, one reduction per entry.
    pub fn commutes(&self, a: u32, b: u32) -> bool {
        let (ea, eb) = (self.entries(a), self.entries(b));
        let n = self.n;
        let p = u64::from(self.modulus());
        for i in 0..n {
            for j in 0..n {
                let mut ab = 0u64;
                let mut ba = 0u64;
                for k in 0..n {
                    ab += u64::from(ea[i * n + k]) * u64::from(eb[k * n + j]);
                    ba += u64::from(eb[i * n + k]) * u64::from(ea[k * n + j]);
                }
                if ab % p != ba % p {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_square_zero(&self, idx: u32) -> bool {
        self.product(idx, idx).iter().all(|&x| x == 0)
    }

    pub fn is_idempotent(&self, idx: u32) -> bool {
        self.product(idx, idx)
            .iter()
            .zip(self.entries(idx))
            .all(|(&x, &e)| x == u64::from(e))
    }
}

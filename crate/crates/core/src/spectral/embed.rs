//! The realification map `φ : M_k(Q(i)) → M_{2k}(Q)` sending each entry
//! `a + ib` to the block `[[a, b], [−b, a]]`.

use crate::field::{GaussianRational, Rational};
use crate::matrix::Matrix;

/// `φ(E)`. A ring homomorphism; `rank φ(E) = 2·rank E`.
pub fn complex_embed(e: &Matrix<GaussianRational>) -> Matrix<Rational> {
    let k = e.order();
    Matrix::from_fn(2 * k, (), |r, c| {
        let z = e.get(r / 2, c / 2);
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => z.re.clone(),
            (0, 1) => z.im.clone(),
            _ => -z.im.clone(),
        }
    })
}

/// The unique `E` with `φ(E) = m`, if `m` has the block pattern.
pub fn complex_preimage(m: &Matrix<Rational>) -> Option<Matrix<GaussianRational>> {
    let n = m.order();
    if !n.is_multiple_of(2) {
        return None;
    }
    let k = n / 2;
    let mut entries = Vec::with_capacity(k * k);
    for r in 0..k {
        for c in 0..k {
            let (a, b) = (m.get(2 * r, 2 * c), m.get(2 * r, 2 * c + 1));
            let (c21, c22) = (m.get(2 * r + 1, 2 * c), m.get(2 * r + 1, 2 * c + 1));
            if c22 != a || *c21 != -b.clone() {
                return None;
            }
            entries.push(GaussianRational::new(a.clone(), b.clone()));
        }
    }
    Matrix::from_entries(k, (), entries).ok()
}

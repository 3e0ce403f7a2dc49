//! Spectra over `Q(i)`, the real Jordan form, the complex embedding, and
//! the 4×4 shape classifier.

mod embed;
mod jordan;
mod poly;
mod shape;
mod spectrum;

pub use embed::{complex_embed, complex_preimage};
pub use jordan::{block_diagonal, canonical_order, real_jordan_form, JordanBlock, RealJordanForm};
pub use poly::{
    characteristic_coefficients, characteristic_polynomial, gaussian_roots, rational_roots,
    Factorization, Polynomial,
};
pub use shape::{classify_shape_4x4, Shape4x4};
pub use spectrum::{eigenvector_for, gaussian_spectrum, rational_eigenvalues, Spectrum};

pub(crate) use spectrum::normalize_leading;

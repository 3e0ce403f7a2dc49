//! Seeded test matrices with a prescribed real Jordan form.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::matrix::Matrix;
use crate::spectral::{block_diagonal, JordanBlock, Shape4x4};

/// How the unimodular conjugator is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    /// Number of elementary row operations `row_i += m·row_j`.
    pub ops: usize,
    /// Multipliers are drawn from `[-max_multiplier, max_multiplier] \ {0}`.
    pub max_multiplier: i64,
}

impl GeneratorConfig {
    pub fn for_order(n: usize) -> Self {
        GeneratorConfig {
            ops: 2 * n,
            max_multiplier: 2,
        }
    }

    /// No row operations, so the output is `J` itself.
    pub fn identity() -> Self {
        GeneratorConfig {
            ops: 0,
            max_multiplier: 1,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random integer matrix of determinant 1, with its inverse.
pub fn random_unimodular<R: Rng>(
    n: usize,
    config: &GeneratorConfig,
    rng: &mut R,
) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut s = Matrix::<Rational>::identity(n, ());
    let mut inv = Matrix::<Rational>::identity(n, ());
    if n < 2 || config.max_multiplier < 1 {
        return (s, inv);
    }
    for _ in 0..config.ops {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut m = rng.random_range(1..=config.max_multiplier);
        if rng.random_bool(0.5) {
            m = -m;
        }
        let m = Rational::from(m);
        // S ← (I + m·E_ij)·S and S⁻¹ ← S⁻¹·(I − m·E_ij)
        for c in 0..n {
            let v = s.get(i, c).clone() + m.clone() * s.get(j, c).clone();
            s.set(i, c, v);
        }
        for r in 0..n {
            let v = inv.get(r, j).clone() - m.clone() * inv.get(r, i).clone();
            inv.set(r, j, v);
        }
    }
    (s, inv)
}

pub fn validate_blocks(n: usize, blocks: &[JordanBlock]) -> Result<()> {
    for b in blocks {
        b.validate()?;
    }
    let total: usize = blocks.iter().map(JordanBlock::order).sum();
    if total != n {
        return Err(Error::input(format!(
            "block sizes sum to {total}, expected {n}"
        )));
    }
    Ok(())
}

/// `S·J·S⁻¹` and `S` for the block list, with `S` drawn per `config`.
pub fn generate_with_config(
    n: usize,
    blocks: &[JordanBlock],
    seed: u64,
    config: &GeneratorConfig,
) -> Result<(Matrix<Rational>, Matrix<Rational>)> {
    validate_blocks(n, blocks)?;
    let mut rng = rng_from_seed(seed);
    let (s, inv) = random_unimodular(n, config, &mut rng);
    let a = &(&s * &block_diagonal(blocks)) * &inv;
    Ok((a, s))
}

/// A rational matrix with real Jordan form `blocks`, deterministic in `seed`.
pub fn generate_with_spectrum(
    n: usize,
    blocks: &[JordanBlock],
    seed: u64,
) -> Result<Matrix<Rational>> {
    Ok(generate_with_config(n, blocks, seed, &GeneratorConfig::for_order(n))?.0)
}

/// Spectral classes for [`random_blocks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralClass {
    /// Only real blocks.
    Real,
    /// Only complex blocks; needs even `n`.
    Complex,
    /// At least one block of each kind; needs `n ≥ 3`.
    Mixed,
}

fn small_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let den = if rng.random_bool(0.2) { 2 } else { 1 };
    Rational::new(rng.random_range(lo..=hi), den)
}

fn composition<R: Rng>(total: usize, rng: &mut R) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = total;
    while left > 0 {
        let k = if rng.random_bool(0.6) {
            1
        } else {
            rng.random_range(1..=left)
        };
        parts.push(k);
        left -= k;
    }
    parts
}

fn real_blocks<R: Rng>(size: usize, rng: &mut R) -> Vec<JordanBlock> {
    let mut lambdas: Vec<Rational> = Vec::new();
    composition(size, rng)
        .into_iter()
        .map(|m| {
            let lambda = if !lambdas.is_empty() && rng.random_bool(0.3) {
                lambdas.choose(rng).expect("nonempty").clone()
            } else {
                small_rational(rng, -3, 3)
            };
            lambdas.push(lambda.clone());
            JordanBlock::Real { lambda, m }
        })
        .collect()
}

fn complex_blocks<R: Rng>(pairs: usize, rng: &mut R) -> Vec<JordanBlock> {
    let mut seen: Vec<(Rational, Rational)> = Vec::new();
    composition(pairs, rng)
        .into_iter()
        .map(|k| {
            let (a, b) = if !seen.is_empty() && rng.random_bool(0.3) {
                seen.choose(rng).expect("nonempty").clone()
            } else {
                (
                    small_rational(rng, -2, 2),
                    Rational::from(rng.random_range(1..=3i64)),
                )
            };
            seen.push((a.clone(), b.clone()));
            JordanBlock::Complex { a, b, k }
        })
        .collect()
}

/// A random block list of total order `n` in the given class.
pub fn random_blocks<R: Rng>(
    n: usize,
    class: SpectralClass,
    rng: &mut R,
) -> Result<Vec<JordanBlock>> {
    match class {
        SpectralClass::Real => Ok(real_blocks(n, rng)),
        SpectralClass::Complex => {
            if !n.is_multiple_of(2) {
                return Err(Error::input("complex spectra need even order"));
            }
            Ok(complex_blocks(n / 2, rng))
        }
        SpectralClass::Mixed => {
            if n < 3 {
                return Err(Error::input("mixed spectra need order at least 3"));
            }
            let pairs = rng.random_range(1..=(n - 1) / 2);
            let mut blocks = complex_blocks(pairs, rng);
            blocks.extend(real_blocks(n - 2 * pairs, rng));
            Ok(blocks)
        }
    }
}

/// Random 4×4 blocks of the given shape.
pub fn shape_blocks<R: Rng>(shape: Shape4x4, rng: &mut R) -> Vec<JordanBlock> {
    let a = small_rational(rng, -2, 2);
    let b = Rational::from(rng.random_range(1..=3i64));
    match shape {
        Shape4x4::PairRepeated => vec![
            JordanBlock::Complex {
                a: a.clone(),
                b: b.clone(),
                k: 1,
            },
            JordanBlock::Complex { a, b, k: 1 },
        ],
        Shape4x4::PairDistinct => {
            let mut a2 = small_rational(rng, -2, 2);
            let b2 = Rational::from(rng.random_range(1..=3i64));
            if (&a2, &b2) == (&a, &b) {
                a2 = a2 + Rational::one();
            }
            vec![
                JordanBlock::Complex { a, b, k: 1 },
                JordanBlock::Complex { a: a2, b: b2, k: 1 },
            ]
        }
        Shape4x4::Nondiagonalizable => vec![JordanBlock::Complex { a, b, k: 2 }],
    }
}

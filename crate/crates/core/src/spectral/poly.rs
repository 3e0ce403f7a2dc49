//! Univariate polynomials with rational coefficients, characteristic
//! polynomials, and root finding in `Q(i)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::matrix::Matrix;

/// Coefficients in ascending degree order, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| c.into()).collect())
    }

    /// `x − r`.
    pub fn linear(root: &Rational) -> Self {
        Polynomial::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::default(), |acc, c| {
                acc.mul_ref(z) + GaussianRational::from(c.clone())
            })
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix<F: crate::field::FromRational>(&self, a: &Matrix<F>) -> Matrix<F> {
        let ctx = a.ctx().clone();
        let n = a.order();
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(n, ctx.clone()), |acc, c| {
                let shift = Matrix::scalar(n, ctx.clone(), F::from_rational(&ctx, c));
                &(&acc * a) + &shift
            })
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree();
        let lead_inv = divisor
            .leading()
            .try_inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Polynomial::new(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .leading()
            .try_inv()
            .expect("nonzero leading coefficient");
        Polynomial::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    /// Integer multiple with coprime coefficients and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        ints
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI − A)` as ascending coefficients, by the Faddeev–LeVerrier
/// recurrence `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`.
///
/// Needs `1, …, n` invertible, so it fails over `F_p` when `p ≤ n`.
pub fn characteristic_coefficients<F: Field>(a: &Matrix<F>) -> Result<Vec<F>> {
    if !F::EXACT {
        return Err(Error::Unsupported(
            "characteristic polynomial needs exact arithmetic".into(),
        ));
    }
    let n = a.order();
    let ctx = a.ctx().clone();
    let mut coeffs = vec![F::zero(&ctx); n + 1];
    coeffs[n] = F::one(&ctx);
    let mut m = Matrix::zeros(n, ctx.clone());
    for k in 1..=n {
        let shift = Matrix::scalar(n, ctx.clone(), coeffs[n - k + 1].clone());
        m = &(a * &m) + &shift;
        let k_inv = F::from_i64(&ctx, k as i64).try_inv()?;
        coeffs[n - k] = -((a * &m).trace().mul_ref(&k_inv));
    }
    Ok(coeffs)
}

pub fn characteristic_polynomial(a: &Matrix<Rational>) -> Polynomial {
    Polynomial::new(characteristic_coefficients(a).expect("rationals have characteristic zero"))
}

/// Divisor enumeration is by trial division and gives up beyond this.
const DIVISOR_SCAN_LIMIT: u64 = 1_000_000_000_000;

fn positive_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_SCAN_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Roots found in `Q(i)` plus whatever factor is left over.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub roots: Vec<(GaussianRational, usize)>,
    pub residual: Polynomial,
    /// Set when the residual could not be scanned at all (coefficients too
    /// large for divisor enumeration).
    pub scan_incomplete: bool,
}

fn deflate(poly: &mut Polynomial, factor: &Polynomial) -> usize {
    let mut mult = 0;
    loop {
        let (q, r) = poly.div_rem(factor);
        if !r.is_zero() || poly.degree() < factor.degree() {
            return mult;
        }
        *poly = q;
        mult += 1;
    }
}

/// Rational roots by the rational root theorem: candidates `±u/v` with
/// `u | a₀` and `v | a_d` of the primitive integer form.
pub fn rational_roots(poly: &Polynomial) -> (Vec<(Rational, usize)>, Polynomial, bool) {
    let mut residual = poly.monic();
    let mut roots = Vec::new();
    let zero_mult = deflate(&mut residual, &Polynomial::linear(&Rational::zero()));
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if residual.degree() == 0 {
        return (roots, residual, false);
    }
    let ints = residual.primitive_integer();
    let (Some(num_divs), Some(den_divs)) = (
        positive_divisors(&ints[0]),
        positive_divisors(ints.last().expect("nonzero polynomial")),
    ) else {
        return (roots, residual, true);
    };
    let mut candidates: Vec<Rational> = num_divs
        .iter()
        .flat_map(|&u| {
            den_divs.iter().flat_map(move |&v| {
                let r = Rational::reduce(u as i64, v as i64).expect("v > 0");
                [-r.clone(), r]
            })
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if residual.degree() == 0 {
            break;
        }
        if residual.eval(&c).is_zero() {
            let m = deflate(&mut residual, &Polynomial::linear(&c));
            roots.push((c, m));
        }
    }
    (roots, residual, false)
}

/// Finds every root of `poly` lying in `Q(i)`.
///
/// Rational roots come from the rational root theorem. What remains has
/// only non-real or irrational roots; a degree-two residual is solved by the
/// quadratic formula, and higher residuals are scanned for primitive
/// integer quadratic factors `c₂x² + c₁x + c₀` with `c₂ | lead`, `c₀ | const`
/// and `4c₂c₀ − c₁²` a positive square. Those are exactly the minimal
/// polynomials of Gaussian-rational roots, found by enumerating
/// Gaussian-integer divisors through their norms.
pub fn gaussian_roots(poly: &Polynomial) -> Factorization {
    let (rat, mut residual, mut incomplete) = rational_roots(poly);
    let mut roots: Vec<(GaussianRational, usize)> = rat
        .into_iter()
        .map(|(r, m)| (GaussianRational::from(r), m))
        .collect();
    while residual.degree() >= 2 && residual.degree() % 2 == 0 && !incomplete {
        if residual.degree() == 2 {
            if let Some((z, m)) = split_quadratic(&mut residual) {
                roots.push((z.conj(), m));
                roots.push((z, m));
            }
            break;
        }
        match find_gaussian_quadratic(&residual) {
            Some(q) => {
                let m = deflate(&mut residual, &q);
                let z = quadratic_upper_root(&q).expect("scan only yields complex quadratics");
                roots.push((z.conj(), m));
                roots.push((z, m));
            }
            None => {
                incomplete = positive_divisors(&residual.primitive_integer()[0]).is_none();
                break;
            }
        }
    }
    roots.sort_by(|a, b| (&a.0.re, &a.0.im).cmp(&(&b.0.re, &b.0.im)));
    Factorization {
        roots,
        residual,
        scan_incomplete: incomplete,
    }
}

/// Root with positive imaginary part of a monic-izable quadratic with
/// negative discriminant that is minus a rational square.
fn quadratic_upper_root(q: &Polynomial) -> Option<GaussianRational> {
    let m = q.monic();
    let p = &m.coeffs()[1];
    let c = &m.coeffs()[0];
    let disc = p * p - Rational::from(4) * c.clone();
    if !disc.is_negative() {
        return None;
    }
    let s = (-disc).sqrt_exact()?;
    let half = Rational::new(1, 2);
    Some(GaussianRational::new(-(p * &half), &s * &half))
}

fn split_quadratic(residual: &mut Polynomial) -> Option<(GaussianRational, usize)> {
    let z = quadratic_upper_root(residual)?;
    *residual = Polynomial::new(vec![Rational::one()]);
    Some((z, 1))
}

fn find_gaussian_quadratic(residual: &Polynomial) -> Option<Polynomial> {
    let ints = residual.primitive_integer();
    let lead_divs = positive_divisors(ints.last()?)?;
    let const_divs = positive_divisors(&ints[0])?;
    for &c2 in &lead_divs {
        for &c0 in &const_divs {
            let bound = 4 * (c2 as u128) * (c0 as u128);
            let m = isqrt(bound) as i128;
            for c1 in -m..=m {
                let d = bound as i128 - c1 * c1;
                if d > 0 && is_square(d as u128) {
                    let q = Polynomial::new(vec![
                        Rational::from_integer(c0),
                        Rational::from_integer(c1 as i64),
                        Rational::from_integer(c2),
                    ]);
                    if residual.div_rem(&q).1.is_zero() {
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

fn isqrt(v: u128) -> u128 {
    let mut r = (v as f64).sqrt() as u128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

fn is_square(v: u128) -> bool {
    let r = isqrt(v);
    r * r == v
}

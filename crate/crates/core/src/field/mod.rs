//! Scalar domains: exact rationals, Gaussian rationals, prime fields, and
//! tolerance-compared doubles.
//!
//! Every domain implements [`Field`]. Elements of `F_p` and approximate reals
//! carry their context (modulus or tolerance) so the usual operator traits
//! work on them directly; [`Field::Ctx`] is what a matrix needs to
//! manufacture `0` and `1` without having an element at hand.

mod approx;
mod gaussian;
mod prime;
mod rational;

pub use approx::{ApproxReal, Tolerance};
pub use gaussian::GaussianRational;
pub use prime::{Fp, PrimeField};
pub(crate) use rational::lex_cmp as rational_lex_cmp;
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;

/// Which scalar domain a value lives in. Used for matrix headers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainTag {
    Rational,
    Gaussian,
    Prime,
    Approx,
}

impl DomainTag {
    pub fn as_str(self) -> &'static str {
        match self {
            DomainTag::Rational => "Q",
            DomainTag::Gaussian => "Qi",
            DomainTag::Prime => "Fp",
            DomainTag::Approx => "R",
        }
    }
}

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to build constants (modulus, tolerance, or nothing).
    type Ctx: Clone + PartialEq + Debug + Send + Sync + 'static;

    /// Exact domains support rank and kernel computations.
    const EXACT: bool;
    const TAG: DomainTag;

    fn context(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, value: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.context())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.try_inv()?))
    }

    /// Magnitude used by approximate domains for norms; exact domains may
    /// return any monotone surrogate and never rely on it for decisions.
    fn magnitude(&self) -> f64;

    /// Nearest double for real domains; the real part for `Q(i)` and the
    /// residue for `F_p`.
    fn real_value(&self) -> f64;

    /// The comparison policy of approximate domains; `None` when exact.
    fn tolerance(_ctx: &Self::Ctx) -> Option<Tolerance> {
        None
    }
}

/// Fields of characteristic zero embed the rationals; used for
/// characteristic polynomials and generator output.
pub trait FromRational: Field {
    fn from_rational(ctx: &Self::Ctx, value: &Rational) -> Self;
}

impl FromRational for Rational {
    fn from_rational(_: &(), value: &Rational) -> Self {
        value.clone()
    }
}

impl FromRational for GaussianRational {
    fn from_rational(_: &(), value: &Rational) -> Self {
        GaussianRational::from(value.clone())
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{DomainTag, Field};
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduces `numerator / denominator` to canonical form.
    pub fn reduce(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn new(numerator: i64, denominator: i64) -> Self {
        Self::reduce(numerator, denominator).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact square root when both numerator and denominator are squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom())
            .then(|| Rational(BigRational::new(n, d)))
    }

    /// The (numerator, denominator) lexicographic key used for deterministic
    /// tie-breaking.
    pub fn lex_key(&self) -> (&BigInt, &BigInt) {
        (self.numer(), self.denom())
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                Rational::reduce(n, d)
            }
            None => Ok(Rational::from_integer(
                s.parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero; use [`Field::try_div`] for a checked form.
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Field for Rational {
    type Ctx = ();
    const EXACT: bool = true;
    const TAG: DomainTag = DomainTag::Rational;

    fn context(&self) {}

    fn zero(_: &()) -> Self {
        Rational::zero()
    }

    fn one(_: &()) -> Self {
        Rational::one()
    }

    fn from_i64(_: &(), value: i64) -> Self {
        Rational::from_integer(value)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn try_inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn real_value(&self) -> f64 {
        self.to_f64()
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

/// Orders by numerator then denominator, the deterministic eigenvalue
/// tie-break. Distinct from numeric order.
pub(crate) fn lex_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.lex_key().cmp(&b.lex_key())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(Rational::reduce(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(Rational::reduce(-3, -6).unwrap().to_string(), "1/2");
        let z = Rational::reduce(0, 7).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        assert!(matches!(Rational::reduce(1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn sign_lives_in_numerator() {
        let r = Rational::reduce(3, -9).unwrap();
        assert_eq!(r.to_string(), "-1/3");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "-7", "3/4", "-12/5"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("6/-4".parse::<Rational>().unwrap().to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Rational::new(9, 4).sqrt_exact(), Some(Rational::new(3, 2)));
        assert_eq!(Rational::new(2, 1).sqrt_exact(), None);
        assert_eq!(Rational::new(-1, 1).sqrt_exact(), None);
    }
}

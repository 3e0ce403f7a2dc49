use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{DomainTag, Field};
use crate::error::{Error, Result};

/// `|x − y| ≤ abs + rel·max(|x|, |y|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-9,
            rel: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if !(abs > 0.0 && rel > 0.0 && abs.is_finite() && rel.is_finite()) {
            return Err(Error::input("tolerances must be positive and finite"));
        }
        Ok(Tolerance { abs, rel })
    }

    pub fn close(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.abs + self.rel * x.abs().max(y.abs())
    }
}

/// A double with an attached comparison policy. Equality is reflexive and
/// symmetric but not transitive.
#[derive(Clone, Copy)]
pub struct ApproxReal {
    value: f64,
    tol: Tolerance,
}

impl ApproxReal {
    pub fn new(value: f64, tol: Tolerance) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Domain(format!("non-finite value {value}")));
        }
        Ok(ApproxReal { value, tol })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn tolerance(self) -> Tolerance {
        self.tol
    }

    fn with(self, value: f64) -> Self {
        ApproxReal {
            value,
            tol: self.tol,
        }
    }
}

impl PartialEq for ApproxReal {
    fn eq(&self, other: &Self) -> bool {
        self.tol.close(self.value, other.value)
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.value)
    }
}

impl fmt::Debug for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.value)
    }
}

impl Add for ApproxReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.with(self.value + rhs.value)
    }
}

impl Sub for ApproxReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.with(self.value - rhs.value)
    }
}

impl Mul for ApproxReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.with(self.value * rhs.value)
    }
}

impl Neg for ApproxReal {
    type Output = Self;
    fn neg(self) -> Self {
        self.with(-self.value)
    }
}

impl Field for ApproxReal {
    type Ctx = Tolerance;
    const EXACT: bool = false;
    const TAG: DomainTag = DomainTag::Approx;

    fn context(&self) -> Tolerance {
        self.tol
    }

    fn zero(ctx: &Tolerance) -> Self {
        ApproxReal {
            value: 0.0,
            tol: *ctx,
        }
    }

    fn one(ctx: &Tolerance) -> Self {
        ApproxReal {
            value: 1.0,
            tol: *ctx,
        }
    }

    fn from_i64(ctx: &Tolerance, value: i64) -> Self {
        ApproxReal {
            value: value as f64,
            tol: *ctx,
        }
    }

    fn is_zero(&self) -> bool {
        self.value.abs() <= self.tol.abs
    }

    fn try_inv(&self) -> Result<Self> {
        if self.value == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(1.0 / self.value))
    }

    fn real_value(&self) -> f64 {
        self.value
    }

    fn magnitude(&self) -> f64 {
        self.value.abs()
    }

    fn tolerance(ctx: &Tolerance) -> Option<Tolerance> {
        Some(*ctx)
    }
}

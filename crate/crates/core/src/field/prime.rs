use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{DomainTag, Field};
use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive). Products of two residues and a
/// length-n dot product then fit easily in 64 bits.
pub const MAX_MODULUS: u32 = 1 << 16;

/// A checked prime modulus `p < 2¹⁶`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField(u32);

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::Domain(format!("modulus {p} must be below 2^16")));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField(p))
    }

    pub fn modulus(self) -> u32 {
        self.0
    }

    pub fn element(self, value: i64) -> Fp {
        Fp {
            value: value.rem_euclid(self.0 as i64) as u32,
            modulus: self.0,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.0).map(move |v| Fp {
            value: v,
            modulus: self.0,
        })
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of `F_p`, stored with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn with(self, value: u64) -> Fp {
        Fp {
            value: (value % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn pow(self, mut exp: u32) -> Fp {
        let mut base = self;
        let mut acc = self.with(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(self.value as u64 + rhs.value as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(self.value as u64 + (self.modulus - rhs.value) as u64)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(self.value as u64 * rhs.value as u64)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with((self.modulus - self.value) as u64)
    }
}

impl Field for Fp {
    type Ctx = PrimeField;
    const EXACT: bool = true;
    const TAG: DomainTag = DomainTag::Prime;

    fn context(&self) -> PrimeField {
        PrimeField(self.modulus)
    }

    fn zero(ctx: &PrimeField) -> Self {
        ctx.element(0)
    }

    fn one(ctx: &PrimeField) -> Self {
        ctx.element(1)
    }

    fn from_i64(ctx: &PrimeField, value: i64) -> Self {
        ctx.element(value)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn try_inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2) = a^(-1).
        Ok(self.pow(self.modulus - 2))
    }

    fn real_value(&self) -> f64 {
        self.value as f64
    }

    fn magnitude(&self) -> f64 {
        self.value as f64
    }
}

//! JSON interchange for matrices, real Jordan forms and path certificates.
//!
//! A matrix is `{"domain": "Q" | "Qi" | "Fp" | "R", "modulus": p, "n": n,
//! "entries": [[…], …]}` with exact scalars as strings and `R` entries as
//! numbers. Unknown fields are ignored.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{ApproxReal, Field, Fp, GaussianRational, PrimeField, Rational, Tolerance};
use crate::matrix::Matrix;
use crate::path::{PathCertificate, Residual, Route};
use crate::spectral::{JordanBlock, RealJordanForm};

/// Scalars with a JSON form.
pub trait JsonScalar: Field {
    fn modulus(ctx: &Self::Ctx) -> Option<u32>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, ctx: &Self::Ctx) -> Result<Self>;
}

fn as_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

impl JsonScalar for Rational {
    fn modulus(_: &()) -> Option<u32> {
        None
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value, _: &()) -> Result<Self> {
        as_text(v)?.parse()
    }
}

impl JsonScalar for GaussianRational {
    fn modulus(_: &()) -> Option<u32> {
        None
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value, _: &()) -> Result<Self> {
        as_text(v)?.parse()
    }
}

impl JsonScalar for Fp {
    fn modulus(ctx: &PrimeField) -> Option<u32> {
        Some(ctx.modulus())
    }
    fn to_json(&self) -> Value {
        Value::String(self.value().to_string())
    }
    fn from_json(v: &Value, ctx: &PrimeField) -> Result<Self> {
        let t = as_text(v)?;
        let x: i64 = t
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad F_p entry {t:?}")))?;
        Ok(ctx.element(x))
    }
}

impl JsonScalar for ApproxReal {
    fn modulus(_: &Tolerance) -> Option<u32> {
        None
    }
    fn to_json(&self) -> Value {
        json!(self.value())
    }
    fn from_json(v: &Value, tol: &Tolerance) -> Result<Self> {
        let x = match v {
            Value::Number(n) => n.as_f64(),
            Value::String(s) => s.trim().parse().ok(),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("bad real entry {v}")))?;
        ApproxReal::new(x, *tol)
    }
}

pub fn matrix_to_json<F: JsonScalar>(m: &Matrix<F>) -> Value {
    let mut obj = json!({
        "domain": F::TAG.as_str(),
        "n": m.order(),
        "entries": m.rows().iter().map(|r| r.iter().map(F::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    if let Some(p) = F::modulus(m.ctx()) {
        obj["modulus"] = json!(p);
    }
    obj
}

#[derive(Deserialize)]
struct RawMatrix {
    domain: String,
    #[serde(default)]
    modulus: Option<u32>,
    n: usize,
    entries: Vec<Vec<Value>>,
}

fn build<F: JsonScalar>(raw: &RawMatrix, ctx: F::Ctx) -> Result<Matrix<F>> {
    if raw.entries.len() != raw.n || raw.entries.iter().any(|r| r.len() != raw.n) {
        return Err(Error::Parse(format!("entries are not {0}×{0}", raw.n)));
    }
    let rows = raw
        .entries
        .iter()
        .map(|r| r.iter().map(|v| F::from_json(v, &ctx)).collect())
        .collect::<Result<Vec<Vec<F>>>>()?;
    Matrix::from_rows(ctx, rows).map_err(|e| Error::Parse(e.to_string()))
}

/// A parsed matrix in whichever domain its header names.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<Rational>),
    Gaussian(Matrix<GaussianRational>),
    Prime(Matrix<Fp>),
    Real(Matrix<ApproxReal>),
}

impl AnyMatrix {
    pub fn domain(&self) -> &'static str {
        match self {
            AnyMatrix::Rational(_) => "Q",
            AnyMatrix::Gaussian(_) => "Qi",
            AnyMatrix::Prime(_) => "Fp",
            AnyMatrix::Real(_) => "R",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.order(),
            AnyMatrix::Gaussian(m) => m.order(),
            AnyMatrix::Prime(m) => m.order(),
            AnyMatrix::Real(m) => m.order(),
        }
    }

    /// Rational and real matrices as doubles under `tol`.
    pub fn to_real(&self, tol: Tolerance) -> Result<Matrix<ApproxReal>> {
        match self {
            AnyMatrix::Rational(m) => {
                let entries = m
                    .entries()
                    .iter()
                    .map(|x| ApproxReal::new(x.to_f64(), tol))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_entries(m.order(), tol, entries)
            }
            AnyMatrix::Real(m) => {
                let entries = m
                    .entries()
                    .iter()
                    .map(|x| ApproxReal::new(x.value(), tol))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_entries(m.order(), tol, entries)
            }
            other => Err(Error::input(format!(
                "float mode needs a real matrix, got domain {}",
                other.domain()
            ))),
        }
    }
}

fn parse_value(v: &Value, tol: Tolerance) -> Result<AnyMatrix> {
    let raw: RawMatrix =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    match raw.domain.as_str() {
        "Q" => Ok(AnyMatrix::Rational(build(&raw, ())?)),
        "Qi" => Ok(AnyMatrix::Gaussian(build(&raw, ())?)),
        "Fp" => {
            let p = raw
                .modulus
                .ok_or_else(|| Error::Parse("Fp matrix without modulus".into()))?;
            let field = PrimeField::new(p).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(AnyMatrix::Prime(build(&raw, field)?))
        }
        "R" => Ok(AnyMatrix::Real(build(&raw, tol)?)),
        other => Err(Error::Parse(format!("unknown domain {other:?}"))),
    }
}

pub fn parse_matrix(text: &str) -> Result<AnyMatrix> {
    parse_matrix_with(text, Tolerance::default())
}

pub fn parse_matrix_with(text: &str, tol: Tolerance) -> Result<AnyMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parse_value(&v, tol)
}

pub fn jordan_to_json(form: &RealJordanForm) -> Value {
    let blocks: Vec<Value> = form
        .blocks
        .iter()
        .map(|b| match b {
            JordanBlock::Complex { a, b, k } => {
                json!({"type": "complex", "a": a.to_string(), "b": b.to_string(), "k": k})
            }
            JordanBlock::Real { lambda, m } => {
                json!({"type": "real", "lambda": lambda.to_string(), "m": m})
            }
        })
        .collect();
    json!({"S": matrix_to_json(&form.transform), "blocks": blocks})
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawBlock {
    Complex { a: String, b: String, k: usize },
    Real { lambda: String, m: usize },
}

pub fn parse_jordan(text: &str) -> Result<RealJordanForm> {
    #[derive(Deserialize)]
    struct Raw {
        #[serde(rename = "S")]
        s: Value,
        blocks: Vec<RawBlock>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let AnyMatrix::Rational(transform) = parse_value(&raw.s, Tolerance::default())? else {
        return Err(Error::Parse("transform must be over Q".into()));
    };
    let blocks = raw
        .blocks
        .into_iter()
        .map(|b| {
            let block = match b {
                RawBlock::Complex { a, b, k } => {
                    JordanBlock::complex(a.parse::<Rational>()?, b.parse::<Rational>()?, k)
                }
                RawBlock::Real { lambda, m } => JordanBlock::real(lambda.parse::<Rational>()?, m),
            };
            block.validate()?;
            Ok(block)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RealJordanForm { transform, blocks })
}

/// Parses a block list like `c:0:1:1,r:-2:2` (complex `a:b:k`, real `λ:m`).
pub fn parse_block_spec(spec: &str) -> Result<Vec<JordanBlock>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let parts: Vec<&str> = item.trim().split(':').collect();
            let size = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad block size {s:?}")))
            };
            let block = match parts.as_slice() {
                ["c", a, b, k] => {
                    JordanBlock::complex(a.parse::<Rational>()?, b.parse::<Rational>()?, size(k)?)
                }
                ["r", l, m] => JordanBlock::real(l.parse::<Rational>()?, size(m)?),
                _ => return Err(Error::Parse(format!("bad block {item:?}"))),
            };
            block.validate()?;
            Ok(block)
        })
        .collect()
}

pub fn certificate_to_json<F: JsonScalar>(cert: &PathCertificate<F>) -> Value {
    let residuals: Vec<Value> = cert
        .edge_residuals()
        .iter()
        .map(|r| match r {
            Residual::Exact(k) => Value::String(k.to_string()),
            Residual::Float(x) => json!(x),
        })
        .collect();
    json!({
        "n": cert.order(),
        "mode": if F::EXACT { "exact" } else { "float" },
        "route": cert.route(),
        "length": cert.length(),
        "vertices": cert.vertices().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "edge_residuals": residuals,
        "verified": cert.verify().ok(),
    })
}

/// A parsed certificate; evidence is recomputed from the vertices.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyCertificate {
    Rational(PathCertificate<Rational>),
    Gaussian(PathCertificate<GaussianRational>),
    Prime(PathCertificate<Fp>),
    Real(PathCertificate<ApproxReal>),
}

impl AnyCertificate {
    pub fn verify(&self) -> crate::path::Verification {
        match self {
            AnyCertificate::Rational(c) => c.verify(),
            AnyCertificate::Gaussian(c) => c.verify(),
            AnyCertificate::Prime(c) => c.verify(),
            AnyCertificate::Real(c) => c.verify(),
        }
    }

    pub fn length(&self) -> usize {
        match self {
            AnyCertificate::Rational(c) => c.length(),
            AnyCertificate::Gaussian(c) => c.length(),
            AnyCertificate::Prime(c) => c.length(),
            AnyCertificate::Real(c) => c.length(),
        }
    }

    pub fn route(&self) -> Route {
        match self {
            AnyCertificate::Rational(c) => c.route(),
            AnyCertificate::Gaussian(c) => c.route(),
            AnyCertificate::Prime(c) => c.route(),
            AnyCertificate::Real(c) => c.route(),
        }
    }
}

pub fn parse_certificate(text: &str, tol: Tolerance) -> Result<AnyCertificate> {
    #[derive(Deserialize)]
    struct Raw {
        route: Route,
        vertices: Vec<Value>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let vertices = raw
        .vertices
        .iter()
        .map(|v| parse_value(v, tol))
        .collect::<Result<Vec<_>>>()?;
    macro_rules! collect_as {
        ($variant:ident) => {{
            let vs = vertices
                .into_iter()
                .map(|v| match v {
                    AnyMatrix::$variant(m) => Ok(m),
                    other => Err(Error::Parse(format!(
                        "mixed vertex domains ({})",
                        other.domain()
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            AnyCertificate::$variant(PathCertificate::new(raw.route, vs))
        }};
    }
    Ok(match vertices.first() {
        None => return Err(Error::Parse("certificate without vertices".into())),
        Some(AnyMatrix::Rational(_)) => collect_as!(Rational),
        Some(AnyMatrix::Gaussian(_)) => collect_as!(Gaussian),
        Some(AnyMatrix::Prime(_)) => collect_as!(Prime),
        Some(AnyMatrix::Real(_)) => collect_as!(Real),
    })
}

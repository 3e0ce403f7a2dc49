use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::matrix::{is_central, Matrix};

/// Longest path any construction emits.
pub const MAX_LENGTH: usize = 5;

/// Which branch of the construction produced a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "commuting")]
    Commuting,
    #[serde(rename = "rank1-rank1")]
    RankOneRankOne,
    #[serde(rename = "rank2-rank2")]
    RankTwoRankTwo,
    #[serde(rename = "rank1-rank2")]
    RankOneRankTwo,
    #[serde(rename = "case1")]
    Case1,
    #[serde(rename = "case2")]
    Case2,
    #[serde(rename = "case3")]
    Case3,
    #[serde(rename = "case4")]
    Case4,
    #[serde(rename = "case5")]
    Case5,
    #[serde(rename = "case6")]
    Case6,
}

impl Route {
    pub const ALL: [Route; 10] = [
        Route::Commuting,
        Route::RankOneRankOne,
        Route::RankTwoRankTwo,
        Route::RankOneRankTwo,
        Route::Case1,
        Route::Case2,
        Route::Case3,
        Route::Case4,
        Route::Case5,
        Route::Case6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::Commuting => "commuting",
            Route::RankOneRankOne => "rank1-rank1",
            Route::RankTwoRankTwo => "rank2-rank2",
            Route::RankOneRankTwo => "rank1-rank2",
            Route::Case1 => "case1",
            Route::Case2 => "case2",
            Route::Case3 => "case3",
            Route::Case4 => "case4",
            Route::Case5 => "case5",
            Route::Case6 => "case6",
        }
    }

    /// Longest path this route can produce.
    pub fn max_length(self) -> usize {
        match self {
            Route::Commuting => 1,
            Route::Case5 => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Commutator size on one edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Residual {
    /// Number of nonzero entries of `uv − vu`.
    Exact(usize),
    /// `‖uv − vu‖_F / (‖u‖_F‖v‖_F)`.
    Float(f64),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Exact(k) => write!(f, "{k}"),
            Residual::Float(r) => write!(f, "{r:e}"),
        }
    }
}

pub fn edge_residual<F: Field>(u: &Matrix<F>, v: &Matrix<F>) -> Residual {
    let comm = &(u * v) - &(v * u);
    match F::tolerance(u.ctx()) {
        None => Residual::Exact(comm.entries().iter().filter(|e| !e.is_zero()).count()),
        Some(_) => {
            let scale = u.frobenius() * v.frobenius();
            let c = comm.frobenius();
            Residual::Float(if scale > 0.0 { c / scale } else { c })
        }
    }
}

/// Why a vertex sequence is not a path in the commuting graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    TooShort,
    TooLong(usize),
    OrderMismatch(usize),
    Central(usize),
    Repeated(usize, usize),
    NonCommuting { edge: usize, residual: Residual },
    Endpoint(&'static str),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::TooShort => write!(f, "a path needs at least two vertices"),
            Failure::TooLong(l) => write!(f, "length {l} exceeds {MAX_LENGTH}"),
            Failure::OrderMismatch(i) => write!(f, "vertex {i} has a different order"),
            Failure::Central(i) => write!(f, "vertex {i} is scalar"),
            Failure::Repeated(i, j) => write!(f, "vertices {i} and {j} are equal"),
            Failure::NonCommuting { edge, residual } => write!(
                f,
                "edge {edge} (vertices {edge} and {}) does not commute, residual {residual}",
                edge + 1
            ),
            Failure::Endpoint(which) => write!(f, "{which} endpoint differs from the input"),
        }
    }
}

/// A vertex sequence in the commuting graph with per-edge and per-vertex
/// evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCertificate<F: Field> {
    route: Route,
    vertices: Vec<Matrix<F>>,
    edge_residuals: Vec<Residual>,
    noncentral: Vec<bool>,
}

impl<F: Field> PathCertificate<F> {
    /// Records evidence for `vertices`; does not judge it.
    pub fn new(route: Route, vertices: Vec<Matrix<F>>) -> Self {
        let edge_residuals = vertices
            .windows(2)
            .map(|w| edge_residual(&w[0], &w[1]))
            .collect();
        let noncentral = vertices.iter().map(|v| !is_central(v)).collect();
        PathCertificate {
            route,
            vertices,
            edge_residuals,
            noncentral,
        }
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn vertices(&self) -> &[Matrix<F>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Matrix<F>> {
        self.vertices
    }

    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn order(&self) -> usize {
        self.vertices.first().map_or(0, Matrix::order)
    }

    pub fn edge_residuals(&self) -> &[Residual] {
        &self.edge_residuals
    }

    pub fn noncentral(&self) -> &[bool] {
        &self.noncentral
    }

    pub fn is_exact(&self) -> bool {
        F::EXACT
    }

    /// The same path walked backwards.
    pub fn reversed(mut self) -> Self {
        self.vertices.reverse();
        self.edge_residuals.reverse();
        self.noncentral.reverse();
        self
    }

    /// Re-derives all evidence from the vertices.
    pub fn verify(&self) -> Verification {
        Verification::from(check_path(&self.vertices))
    }

    /// As [`verify`](Self::verify), also requiring the endpoints to be `a`
    /// and `b`.
    pub fn verify_endpoints(&self, a: &Matrix<F>, b: &Matrix<F>) -> Verification {
        let r = check_path(&self.vertices).and_then(|()| {
            if self.vertices.first() != Some(a) {
                Err(Failure::Endpoint("first"))
            } else if self.vertices.last() != Some(b) {
                Err(Failure::Endpoint("last"))
            } else {
                Ok(())
            }
        });
        Verification::from(r)
    }
}

/// Outcome of [`PathCertificate::verify`].
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub failure: Option<Failure>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl From<Result<(), Failure>> for Verification {
    fn from(r: Result<(), Failure>) -> Self {
        Verification { failure: r.err() }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok"),
            Some(e) => write!(f, "{e}"),
        }
    }
}

fn edge_ok<F: Field>(u: &Matrix<F>, v: &Matrix<F>) -> (bool, Residual) {
    let r = edge_residual(u, v);
    let ok = match (r, F::tolerance(u.ctx())) {
        (Residual::Exact(k), _) => k == 0,
        (Residual::Float(x), Some(tol)) => x <= tol.rel,
        (Residual::Float(_), None) => false,
    };
    (ok, r)
}

/// Checks that `vertices` is a path in the commuting graph of length at
/// most [`MAX_LENGTH`], reporting the first problem.
pub fn check_path<F: Field>(vertices: &[Matrix<F>]) -> Result<(), Failure> {
    if vertices.len() < 2 {
        return Err(Failure::TooShort);
    }
    if vertices.len() - 1 > MAX_LENGTH {
        return Err(Failure::TooLong(vertices.len() - 1));
    }
    let n = vertices[0].order();
    for (i, v) in vertices.iter().enumerate() {
        if v.order() != n {
            return Err(Failure::OrderMismatch(i));
        }
        if is_central(v) {
            return Err(Failure::Central(i));
        }
    }
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i] == vertices[j] {
                return Err(Failure::Repeated(i, j));
            }
        }
    }
    for (edge, w) in vertices.windows(2).enumerate() {
        let (ok, residual) = edge_ok(&w[0], &w[1]);
        if !ok {
            return Err(Failure::NonCommuting { edge, residual });
        }
    }
    Ok(())
}

/// Removes cycles: whenever `v_i = v_j` with `i < j`, drops `v_{i+1..=j}`.
pub fn collapse_duplicates<F: Field>(mut vertices: Vec<Matrix<F>>) -> Vec<Matrix<F>> {
    let mut i = 0;
    while i < vertices.len() {
        if let Some(j) = (i + 1..vertices.len())
            .rev()
            .find(|&j| vertices[j] == vertices[i])
        {
            vertices.drain(i + 1..=j);
        }
        i += 1;
    }
    vertices
}

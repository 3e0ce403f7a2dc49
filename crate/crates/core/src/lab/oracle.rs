use std::collections::BTreeMap;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graph::{bfs_distance, neighbor_set};
use super::space::FiniteSpace;
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::path::{connect_rank_one, generate::rng_from_seed, EigenSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    SquareZero,
    Idempotent,
}

/// Outcome of checking `d(M, N) ≤ 2` over every ordered pair of a subset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub kind: OracleKind,
    pub n: usize,
    pub p: u32,
    pub subset_size: usize,
    pub pairs_checked: usize,
    pub commuting_pairs: usize,
    pub distance_two_pairs: usize,
    /// Pairs at distance > 2 with their exact distance (`None` = infinite).
    pub violations: Vec<(u32, u32, Option<u32>)>,
    pub elapsed_ms: u128,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Tally = (usize, usize, Vec<(u32, u32)>);

fn run_oracle(n: usize, p: u32, kind: OracleKind) -> Result<OracleReport> {
    if n < 3 {
        return Err(Error::precondition("distance two is only guaranteed for n ≥ 3"));
    }
    let start = Instant::now();
    let space = FiniteSpace::new(n, p)?;
    let subset: Vec<u32> = space
        .noncentral()
        .filter(|&v| match kind {
            OracleKind::SquareZero => space.is_square_zero(v),
            OracleKind::Idempotent => space.is_idempotent(v),
        })
        .collect();
    let neighbors: Vec<_> = subset
        .par_iter()
        .map(|&v| neighbor_set(&space, v))
        .collect();
    // (commuting, distance two, pairs left over) per row
    let per_row: Vec<Tally> = (0..subset.len())
        .into_par_iter()
        .map(|i| {
            let (mut one, mut two, mut bad) = (0, 0, Vec::new());
            for j in 0..subset.len() {
                if i == j {
                    continue;
                }
                if neighbors[i].contains(subset[j] as usize) {
                    one += 1;
                } else if !neighbors[i].is_disjoint(&neighbors[j]) {
                    two += 1;
                } else {
                    bad.push((subset[i], subset[j]));
                }
            }
            (one, two, bad)
        })
        .collect();
    let mut violations = Vec::new();
    for (a, b) in per_row.iter().flat_map(|r| r.2.iter().copied()) {
        violations.push((a, b, bfs_distance(&space, a, b)?));
    }
    Ok(OracleReport {
        kind,
        n,
        p,
        subset_size: subset.len(),
        pairs_checked: subset.len() * subset.len().saturating_sub(1),
        commuting_pairs: per_row.iter().map(|r| r.0).sum(),
        distance_two_pairs: per_row.iter().map(|r| r.1).sum(),
        violations,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Every ordered pair of distinct nonzero square-zero matrices in
/// `M_n(F_p)` is at distance at most 2.
pub fn oracle_square_zero(n: usize, p: u32) -> Result<OracleReport> {
    run_oracle(n, p, OracleKind::SquareZero)
}

/// Every ordered pair of distinct non-scalar idempotents in `M_n(F_p)` is
/// at distance at most 2.
pub fn oracle_idempotents(n: usize, p: u32) -> Result<OracleReport> {
    run_oracle(n, p, OracleKind::Idempotent)
}

/// Rank-one route lengths compared against exact distances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub p: u32,
    pub seed: u64,
    pub sampled: usize,
    /// Pairs where a matrix had no eigenvalue in `F_p`.
    pub skipped_no_eigenvalue: usize,
    pub checked: usize,
    /// Certificate length minus exact distance → count.
    pub slack_histogram: BTreeMap<u32, usize>,
    /// Pairs whose certificate was shorter than the distance, or failed.
    pub violations: Vec<(u32, u32)>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples pairs of non-central matrices, builds the rank-one route over
/// `F_p`, and compares its length with the breadth-first distance.
pub fn cross_check_constructions(
    n: usize,
    p: u32,
    samples: usize,
    seed: u64,
) -> Result<CrossCheckReport> {
    if n < 3 {
        return Err(Error::precondition("paths need n ≥ 3"));
    }
    let space = FiniteSpace::new(n, p)?;
    let mut rng = rng_from_seed(seed);
    let mut report = CrossCheckReport {
        n,
        p,
        seed,
        sampled: 0,
        skipped_no_eigenvalue: 0,
        checked: 0,
        slack_histogram: BTreeMap::new(),
        violations: Vec::new(),
    };
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let v = rng.random_range(0..space.size() as u32);
        if !space.is_scalar(v) {
            return v;
        }
    };
    while report.sampled < samples {
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        if a == b {
            continue;
        }
        report.sampled += 1;
        let (ma, mb) = (space.matrix(a), space.matrix(b));
        if Fp::preferred_eigenvalue(&ma)?.is_none() || Fp::preferred_eigenvalue(&mb)?.is_none() {
            report.skipped_no_eigenvalue += 1;
            continue;
        }
        report.checked += 1;
        let dist = bfs_distance(&space, a, b)?;
        match (connect_rank_one(&ma, &mb), dist) {
            (Ok(c), Some(d)) if c.verify().ok() && c.length() as u32 >= d => {
                *report
                    .slack_histogram
                    .entry(c.length() as u32 - d)
                    .or_insert(0) += 1;
            }
            _ => report.violations.push((a, b)),
        }
    }
    Ok(report)
}

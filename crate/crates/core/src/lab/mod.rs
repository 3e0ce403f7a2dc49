//! Exhaustive commuting graphs of `M_n(F_p)` for tiny `n` and `p`.

mod graph;
mod oracle;
mod space;

pub use graph::{bfs_distance, graph_stats, GraphStats};
pub use oracle::{
    cross_check_constructions, oracle_idempotents, oracle_square_zero, CrossCheckReport,
    OracleKind, OracleReport,
};
pub use space::{space_size, FiniteSpace, SIZE_LIMIT};

/// `p^(n²) − p`, counted by enumeration.
pub fn enumerate_noncentral(n: usize, p: u32) -> crate::Result<usize> {
    Ok(FiniteSpace::new(n, p)?.noncentral().count())
}

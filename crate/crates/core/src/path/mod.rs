//! Verified paths in the commuting graph: neighbor witnesses, midpoint
//! solvers, the case dispatch, certificates, and test-data generation.

mod certificate;
mod connect;
pub mod float;
pub mod generate;
mod witness;

pub use certificate::{
    check_path, collapse_duplicates, edge_residual, Failure, PathCertificate, Residual, Route,
    Verification, MAX_LENGTH,
};
pub use connect::{certify_lower_bound, connect, connect_rank_one, BoundEvidence, DistanceBound};
pub use float::connect_float;
pub use generate::{generate_with_config, generate_with_spectrum, GeneratorConfig, SpectralClass};
pub use witness::{
    annihilator_witness, midpoint_idempotents, midpoint_square_zero, rank_one_for_eigenvalue,
    rank_one_neighbor, rank_two_neighbor, EigenSearch,
};

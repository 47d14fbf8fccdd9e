use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph G({r}, {n}): need r >= 1 and N >= 2r + 1")]
    InvalidSpec { r: u64, n: u64 },

    #[error("invalid scan range for r = {r}: [{n_min}, {n_max}]")]
    InvalidRange { r: u64, n_min: u64, n_max: u64 },

    #[error("oracle refuses N = {n}: matrix order cap is {cap}")]
    OracleTooLarge { n: u64, cap: usize },

    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("internal consistency check failed: {0}")]
    Invariant(String),
}

//! Brute-force numerics used to cross-check the closed forms.
//!
//! Nothing here knows about Darboux chains: potentials are plain callbacks
//! and functions are samples, so the checks stay independent of the
//! exponential-sum machinery they validate.

mod det;
mod eigen;
mod fit;
mod grid;
mod numerov;
mod quadrature;

pub use det::{determinant, numerical_wronskian};
pub use eigen::{
    discrete_residual, eigen_interval, eigen_semiaxis, extrapolated_levels, EigenResult,
};
pub use fit::fit_sinusoid;
pub use grid::{GridFunction, UniformGrid, MIN_GRID_LEN};
pub use numerov::integrate_schrodinger;
pub use quadrature::quadrature;

/// Environment variable overriding the default oracle grid size.
pub const ORACLE_GRID_ENV: &str = "DARBOUX_ORACLE_GRID";

/// Default number of intervals for the finite-difference eigen-solver.
pub const DEFAULT_ORACLE_GRID: usize = 16_000;

/// Grid size from `DARBOUX_ORACLE_GRID`, falling back to [`DEFAULT_ORACLE_GRID`].
pub fn oracle_grid_size() -> usize {
    std::env::var(ORACLE_GRID_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n >= 100)
        .unwrap_or(DEFAULT_ORACLE_GRID)
}

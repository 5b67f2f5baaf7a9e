//! Exactly solvable potentials on the half-line `[0, ∞)` built by chains of
//! Darboux transformations of the free Hamiltonian `−d²/dx²`.
//!
//! A chain of `cosh`/`sinh` transformation functions with increasing rates
//! `a_1 < … < a_N` produces the potential `V_N = −2 [ln W(u_1, …, u_N)]''`,
//! whose bound states, Jost solutions, Jost function and phase shift are all
//! available in closed form. Every closed form can be checked against the
//! independent numerics in [`oracle`].
//!
//! ```
//! use darboux::spectral::build_model;
//!
//! let model = build_model(&[1.0, 2.0], &[0.0, 0.0]).unwrap();
//! assert_eq!(model.levels().len(), 1);
//! assert_eq!(model.levels()[0].energy, -1.0);
//! assert!((model.potential(0.0).unwrap() + 6.0).abs() < 1e-12);
//! ```
//!
//! Modules, bottom up:
//!
//! - [`exp_algebra`]: exact sums of exponentials and their Wronskians.
//! - [`darboux`]: transformation functions, chains and the Crum operator.
//! - [`spectral`]: the semiaxis spectral problem of a chain.
//! - [`oracle`]: brute-force numerics used for cross-checks.
//! - [`cli`]: the job runner behind the `darboux` binary.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod darboux;
pub mod error;
pub mod exp_algebra;
pub mod oracle;
pub mod spectral;

pub use darboux::{DarbouxChain, TransformationFunction};
pub use error::{Error, Result};
pub use exp_algebra::{ExpSum, Hyperbolic};
pub use spectral::{build_model, SpectralModel};

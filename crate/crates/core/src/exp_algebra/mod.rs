//! Exact arithmetic on finite sums of real exponentials.
//!
//! Every Wronskian built from `cosh`/`sinh` transformation functions is such
//! a sum, so the potentials, eigenfunctions and operator coefficients of a
//! chain can be differentiated and evaluated without numerical
//! differentiation.

mod sum;
mod wronskian;

pub use sum::{log_second_derivative, ExpSum, ExpTerm, Hyperbolic, RATE_MERGE_TOL};
pub use wronskian::{
    check_alternating, derivative_determinant, wronskian, wronskian_closed_form,
    wronskian_minor, SignVector,
};

pub(crate) use wronskian::check_increasing;

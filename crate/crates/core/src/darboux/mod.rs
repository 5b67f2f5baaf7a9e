//! First-order Darboux operators, their chains and the Crum operator.
//!
//! The derivative is `D = +d/dx` throughout: `L = −u'/u + D` annihilates
//! `u`, and the Crum operator of a chain `u_1, …, u_N` is
//! `L^{(N)}ψ = W(u_1, …, u_N, ψ) / W(u_1, …, u_N)`, which maps solutions of
//! `−ψ'' = Eψ` to solutions of `−φ'' + V_N φ = Eφ` with
//! `V_N = −2 [ln W(u_1, …, u_N)]''`.

mod chain;
mod first_order;
mod function;
mod jet;
mod second;
mod solution;
mod verify;

pub use chain::{DarbouxChain, PoleScan};
pub use first_order::{adjoint_compose_apply, compose_apply, first_order_apply};
pub use function::TransformationFunction;
pub use jet::Jet;
pub use second::{second_solution, second_solution_from, second_solution_with_derivative};
pub use solution::{
    AnalyticSolution, CosineWave, ExpSumSolution, PlaneWave, SineWave, Truncated,
};
pub use verify::{factorization_multiplier, verify_factorization, verify_intertwining};

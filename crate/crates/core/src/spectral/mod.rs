//! Bound states, regular and Jost solutions, the rational Jost function and
//! the phase shift of the transformed potential on the semiaxis.
//!
//! Bound states are the images `ṽ_i = W^{(i)}/W` that vanish at the origin;
//! an alternating chain of length `N` has `⌊N/2⌋` of them.

mod jost;
mod model;
mod translation;

pub use jost::{RationalJost, ScatteringPoint};
pub use model::{build_model, Level, Parity, RegularSolution, SpectralModel};
pub use translation::{translation_check, TranslationCheck};

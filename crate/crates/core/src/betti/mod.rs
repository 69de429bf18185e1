//! Multigraded Betti numbers of `K[G]`: `β_{j+1,s} = dim H̃_j(Δ_s)`.

mod candidates;
mod fiber;
mod koszul;
mod semigroup;
mod shortcut;
mod table;

pub use candidates::{candidate_degrees, lcm_lattice, monomial_betti, upper_koszul, CandidateSet};
pub use fiber::{fiber_complex, fiber_complex_with, FiberComplex};
pub use koszul::betti_via_koszul;
pub use semigroup::{semigroup_member, Semigroup};
pub use shortcut::{acyclicity_shortcut, Shortcuts, Verdict};
pub use table::{betti_at, betti_numbers, betti_table, image_up_to, BettiOptions, BettiTable, Mode};

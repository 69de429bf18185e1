//! Gröbner bases of binomial ideals with `±1` coefficients, and toric ideals of graphs.

mod ideal;
mod monomial;
mod order;
mod toric;

pub use ideal::{buchberger, normal_form, saturate_variable, Binomial, BinomialIdeal};
pub use monomial::EdgeMonomial;
pub use order::{OrderKind, TermOrder};
pub use toric::{
    initial_ideal, integer_kernel, lattice_basis_ideal, minimal_generators, multidegree, toric_ideal,
    toric_ideal_with_order,
};

//! The superalgebra: basis words, elements, products, and basic operations.

mod element;
mod monomial;
mod ops;
mod product;
mod rewrite;

pub use element::Element;
pub use monomial::{Monomial, Osc};
pub use ops::{
    as_m_polynomial, commutator, epsilon, from_m_polynomials, gradings, m, m_power, m_power_times, mpoly_times,
    superbracket, t, tau, tau_monomial, Gradings,
};
pub use product::{mul_monomials, transport, weyl_product};
pub use rewrite::reorder_oracle;

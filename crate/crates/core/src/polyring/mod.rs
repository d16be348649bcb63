//! The polynomial ring `A_k = ℚ[t_1, …, t_k]`, its right `S_k`-action, the
//! ideal generated by the elementary symmetric polynomials, normal forms in
//! the coinvariant algebra and isotypic projectors.

mod graded;
mod ideal;
mod isotypic;
mod monomial;
mod polynomial;
mod symmetric;

pub use graded::GradedSubspace;
pub use ideal::{
    coinvariant_dimensions, coinvariant_normal_form, ideal_degree, ideal_degree_basis, ideal_degree_basis_direct,
    top_degree, IdealDegree,
};
pub use isotypic::{isotypic_dimension, isotypic_projector_apply, IsotypicProjector};
pub use monomial::{binomial, monomial_basis, monomials_of_degree, Monomial, MonomialBasis, MONOMIAL_ORDER_TAG};
pub use polynomial::Polynomial;
pub use symmetric::{elementary_product, elementary_symmetric};

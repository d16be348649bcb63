//! Partitions, permutations, tableaux, characters of `S_k`, and the graded
//! multiplicity polynomials used as oracles.

mod character;
mod kostka;
mod partition;
mod permutation;
mod qpoly;
mod tableau;

pub use character::{centralizer_order, character, character_of};
pub use kostka::{charge_graded_multiplicity, charge_kostka, fake_degree};
pub use partition::{partitions_of, partitions_with_max_part, Partition};
pub use permutation::Permutation;
pub use qpoly::QPolynomial;
pub use tableau::{syt_enumerate, StandardTableau};

/// `Σ_λ d_λ · fake_degree(λ)` over partitions of `k`.
pub fn weighted_fake_degree_sum(k: usize) -> QPolynomial {
    partitions_of(k, None).iter().fold(QPolynomial::zero(), |acc, lam| {
        let d = lam.dimension();
        let f = fake_degree(lam);
        &acc + &QPolynomial::from_coeffs(f.coeffs().iter().map(|c| c * d).collect())
    })
}

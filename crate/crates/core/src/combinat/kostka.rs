//! Graded multiplicities of irreducibles in the coinvariant algebra.
//!
//! The primary realization is the fake degree `Σ_T q^{maj(T)}` over standard
//! tableaux of shape `ξ`. A second realization sums `q^{charge(T)}` over
//! standard tableaux of the conjugate shape; the two must agree, and both are
//! checked against a direct isotypic decomposition elsewhere.

use super::{syt_enumerate, Partition, QPolynomial};

/// `Σ_{T ∈ SYT(ξ)} q^{maj(T)}`.
pub fn fake_degree(xi: &Partition) -> QPolynomial {
    let mut c = vec![0u64; xi.size() * xi.size().saturating_sub(1) / 2 + 1];
    for t in syt_enumerate(xi) {
        c[t.maj()] += 1;
    }
    QPolynomial::from_coeffs(c)
}

/// `K_{λ,1^k}(q) = Σ_{T ∈ SYT(λ)} q^{charge(T)}`.
pub fn charge_kostka(lambda: &Partition) -> QPolynomial {
    let mut c = vec![0u64; lambda.size() * lambda.size().saturating_sub(1) / 2 + 1];
    for t in syt_enumerate(lambda) {
        c[t.charge()] += 1;
    }
    QPolynomial::from_coeffs(c)
}

/// The charge realization indexed so that it is comparable with
/// [`fake_degree`]: `K_{ξ^tr,1^k}(q)`.
pub fn charge_graded_multiplicity(xi: &Partition) -> QPolynomial {
    charge_kostka(&xi.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn fake_degree_examples() {
        assert_eq!(fake_degree(&p(&[4])), QPolynomial::one());
        assert_eq!(fake_degree(&Partition::column(4)), QPolynomial::monomial(6));
        assert_eq!(fake_degree(&p(&[2, 1])).coeffs(), &[0, 1, 1]);
        assert_eq!(fake_degree(&p(&[2, 2])).coeffs(), &[0, 0, 1, 0, 1]);
    }

    #[test]
    fn weighted_sum_is_q_factorial() {
        for k in 1..=7 {
            let mut total = QPolynomial::zero();
            for lam in partitions_of(k, None) {
                let f = fake_degree(&lam);
                assert_eq!(f.eval_one(), lam.dimension());
                let weighted = QPolynomial::from_coeffs(f.coeffs().iter().map(|c| c * lam.dimension()).collect());
                total = &total + &weighted;
            }
            assert_eq!(total, QPolynomial::q_factorial(k), "k = {k}");
        }
    }

    #[test]
    fn charge_agrees_with_maj() {
        for k in 1..=7 {
            for lam in partitions_of(k, None) {
                assert_eq!(charge_graded_multiplicity(&lam), fake_degree(&lam), "{lam}");
            }
        }
        // K_{(n),1^n} = q^{n(n-1)/2} and K_{(1^n),1^n} = 1
        assert_eq!(charge_kostka(&p(&[4])), QPolynomial::monomial(6));
        assert_eq!(charge_kostka(&Partition::column(4)), QPolynomial::one());
    }
}

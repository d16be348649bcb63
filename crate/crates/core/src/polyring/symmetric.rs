use super::{Monomial, Polynomial};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// `e_j(t_1, …, t_k)`.
pub fn elementary_symmetric(j: usize, k: usize) -> Result<Polynomial> {
    if j == 0 || j > k {
        return Err(Error::IndexOutOfRange { index: j, max: k });
    }
    let mut terms = Vec::new();
    let mut pick = vec![0u32; k];
    fn go(start: usize, left: usize, pick: &mut Vec<u32>, terms: &mut Vec<(Monomial, Rational)>) {
        if left == 0 {
            terms.push((Monomial::new(pick), Rational::ONE));
            return;
        }
        for i in start..=pick.len() - left {
            pick[i] = 1;
            go(i + 1, left - 1, pick, terms);
            pick[i] = 0;
        }
    }
    go(0, j, &mut pick, &mut terms);
    Ok(Polynomial::from_terms(k, terms))
}

/// `e_λ = Π_i e_{λ_i}`; parts must not exceed `k`.
pub fn elementary_product(lambda: &Partition, k: usize) -> Result<Polynomial> {
    lambda
        .parts()
        .iter()
        .try_fold(Polynomial::one(k), |acc, &j| Ok(acc.multiply(&elementary_symmetric(j, k)?)))
}

//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule, with rim hooks removed on beta-sets.

use std::collections::BTreeSet;

use super::{Partition, Permutation};
use crate::error::{Error, Result};

/// `χ^λ` evaluated on the class of cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: mu.size() });
    }
    let l = lambda.len();
    let beta: BTreeSet<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    Ok(mn(&beta, mu.parts()))
}

fn mn(beta: &BTreeSet<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // leg length = beads strictly between b − r and b
        let leg = beta.range(b - r + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - r);
        let s = if leg.is_multiple_of(2) { 1 } else { -1 };
        total += s * mn(&next, rest);
    }
    total
}

/// `χ^λ(σ)`.
pub fn character_of(lambda: &Partition, sigma: &Permutation) -> Result<i64> {
    character(lambda, &sigma.cycle_type())
}

/// Size of the centralizer of an element of cycle type `μ`.
pub fn centralizer_order(mu: &Partition) -> u128 {
    let mut out: u128 = 1;
    let mut i = 0;
    let parts = mu.parts();
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        out *= (parts[i] as u128).pow(j as u32);
        out *= (1..=j as u128).product::<u128>();
        i += j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn trivial_and_sign() {
        for k in 1..=6 {
            for mu in partitions_of(k, None) {
                assert_eq!(character(&p(&[k]), &mu).unwrap(), 1);
                let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column(k), &mu).unwrap(), sign);
            }
        }
    }

    #[test]
    fn identity_gives_dimension() {
        for k in 1..=7 {
            for lam in partitions_of(k, None) {
                assert_eq!(character(&lam, &Partition::column(k)).unwrap(), lam.dimension() as i64);
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for k in 1..=6 {
            let classes = partitions_of(k, None);
            for mu in &classes {
                for nu in &classes {
                    let s: i64 = classes
                        .iter()
                        .map(|lam| character(lam, mu).unwrap() * character(lam, nu).unwrap())
                        .sum();
                    let expect = if mu == nu { centralizer_order(mu) as i64 } else { 0 };
                    assert_eq!(s, expect, "k={k} mu={mu} nu={nu}");
                }
            }
        }
    }
}

use std::collections::HashMap;

use super::{ideal_degree, Polynomial};
use crate::combinat::{character, Partition, Permutation};
use crate::error::{Error, Result};
use crate::exactla::{reduce, Rational};

/// `P_ξ = (d_ξ / k!) Σ_σ χ_ξ(σ) · act(·, σ)` with its coefficients
/// precomputed.
#[derive(Clone, Debug)]
pub struct IsotypicProjector {
    k: usize,
    terms: Vec<(Permutation, Rational)>,
}

impl IsotypicProjector {
    pub fn new(xi: &Partition) -> Self {
        let k = xi.size();
        let fact: i64 = (1..=k as i64).product();
        let scale = Rational::new(xi.dimension() as i64, fact);
        let mut by_class: HashMap<Partition, i64> = HashMap::new();
        let terms = Permutation::all(k)
            .into_iter()
            .filter_map(|s| {
                let ct = s.cycle_type();
                let chi = *by_class.entry(ct.clone()).or_insert_with(|| character(xi, &ct).expect("same size"));
                (chi != 0).then(|| (s, &scale * &Rational::from_integer(chi)))
            })
            .collect();
        IsotypicProjector { k, terms }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.k {
            return Err(Error::SizeMismatch { expected: self.k, got: f.nvars() });
        }
        let mut out = Polynomial::zero(self.k);
        for (s, c) in &self.terms {
            out.add_scaled(c, &f.act(s));
        }
        Ok(out)
    }
}

/// `P_ξ(f)`.
pub fn isotypic_projector_apply(xi: &Partition, f: &Polynomial) -> Result<Polynomial> {
    IsotypicProjector::new(xi).apply(f)
}

/// Dimension of the `ξ`-isotypic part of the coinvariant algebra in degree
/// `s`: the rank of the projected standard monomials after reduction.
pub fn isotypic_dimension(xi: &Partition, s: u32) -> usize {
    let k = xi.size();
    let proj = IsotypicProjector::new(xi);
    let data = ideal_degree(k, s);
    let b = data.monomial_basis();
    let vs: Vec<_> = data
        .standard_columns()
        .iter()
        .map(|&c| {
            let m = Polynomial::monomial(b.monomial(c).clone(), Rational::ONE);
            let p = proj.apply(&m).expect("matching variable count");
            data.normal_form_vector(&p.to_sparse(b))
        })
        .collect();
    reduce(vs.iter()).rank()
}

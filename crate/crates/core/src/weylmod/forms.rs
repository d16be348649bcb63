use std::collections::HashMap;

use super::{hw_vectors, weight_words, TensorElement, Word};
use crate::combinat::{Partition, Permutation};
use crate::error::{Error, Result};
use crate::exactla::{invert, EchelonBuilder, Rational, SparseVector};
use crate::generators::Shape;
use crate::polyring::{Monomial, Polynomial};

/// `e_1 ∧ ⋯ ∧ e_i = Σ_{τ ∈ S_i} sgn τ · e_{τ(1)} ⊗ ⋯ ⊗ e_{τ(i)}`, unnormalized.
pub fn wedge(i: usize, n: usize) -> TensorElement {
    let mut out = TensorElement::zero(i, n);
    for tau in Permutation::all(i) {
        let w: Word = tau.images().iter().map(|&x| x as u8).collect();
        out.add_term(w, Monomial::one(i), &Rational::from_integer(tau.sign()));
    }
    out
}

/// `e(ξ) = e_1^{⊗k_1} ⊗ (e_1∧e_2)^{⊗k_2} ⊗ ⋯`, on the same variable
/// blocks as the generator polynomials.
pub fn e_vector(shape: &Shape, n: usize) -> Result<TensorElement> {
    if shape.xi().len() > n + 1 {
        return Err(Error::ShapeTooTall { shape: shape.to_string(), parts: shape.xi().len(), n });
    }
    let k = shape.k();
    let d = shape.diffs();
    let mut partial: Vec<(Word, i64)> = vec![(vec![0; d[0]], 1)];
    for (_, size) in shape.blocks() {
        let perms = Permutation::all(size);
        partial = partial
            .iter()
            .flat_map(|(w, sg)| {
                perms.iter().map(move |tau| {
                    let mut w2 = w.clone();
                    w2.extend(tau.images().iter().map(|&x| x as u8));
                    (w2, sg * tau.sign())
                })
            })
            .collect();
    }
    let mut out = TensorElement::zero(k, n);
    for (w, sg) in partial {
        out.add_term(w, Monomial::one(k), &Rational::from_integer(sg));
    }
    Ok(out)
}

fn require_constant(v: &TensorElement) -> Result<()> {
    if v.terms().all(|(_, m, _)| m.degree() == 0) {
        Ok(())
    } else {
        Err(Error::NontrivialPolynomialPart)
    }
}

/// `(v, w)_k` with `(e_i, e_j) = δ_{ij}` on each factor.
pub fn form_k(v: &TensorElement, w: &TensorElement) -> Result<Rational> {
    require_constant(v)?;
    require_constant(w)?;
    let one = Monomial::one(v.k());
    Ok(v.terms().map(|(word, _, c)| c * &w.coefficient(word, &one)).sum())
}

/// `⟨v ⊗ f, v' ⊗ g⟩ = (v, v')_k · f g`, extended bilinearly.
pub fn pair(v: &TensorElement, w: &TensorElement) -> Polynomial {
    assert_eq!(v.k(), w.k(), "tensor degree mismatch");
    let mut by_word: HashMap<&Word, Vec<(&Monomial, &Rational)>> = HashMap::new();
    for (word, m, c) in w.terms() {
        by_word.entry(word).or_default().push((m, c));
    }
    let mut out = Polynomial::zero(v.k());
    for (word, m, c) in v.terms() {
        if let Some(list) = by_word.get(word) {
            for (m2, c2) in list {
                out.add_term(m.mul(m2), &(c * *c2));
            }
        }
    }
    out
}

/// A basis of the highest-weight space of weight `ξ` in `V^{⊗k}` made of
/// translates `e(ξ)σ`, its Gram matrix, and the dual basis.
#[derive(Clone, Debug)]
pub struct GramData {
    pub basis: Vec<TensorElement>,
    pub gram: Vec<Vec<Rational>>,
    pub dual: Vec<TensorElement>,
}

fn word_vector(v: &TensorElement, index: &HashMap<Word, usize>) -> SparseVector {
    SparseVector::from_entries(v.terms().map(|(w, _, c)| (index[w], c.clone())))
}

/// Builds [`GramData`], or `None` if the Gram matrix is singular.
pub fn gram_data(k: usize, n: usize, xi: &Partition) -> Result<Option<GramData>> {
    let shape = Shape::new(xi.clone())?;
    if shape.k() != k {
        return Err(Error::SizeMismatch { expected: k, got: shape.k() });
    }
    let e = e_vector(&shape, n)?;
    let mut content = xi.parts().to_vec();
    content.resize(n + 1, 0);
    let words = weight_words(&content);
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ech = EchelonBuilder::new();
    let mut basis = Vec::new();
    for sigma in Permutation::all(k) {
        let t = e.act_symmetric_group(&sigma);
        if ech.insert(&word_vector(&t, &index)) {
            basis.push(t);
        }
    }
    let gram: Vec<Vec<Rational>> =
        basis.iter().map(|a| basis.iter().map(|b| form_k(a, b).expect("constant")).collect()).collect();
    let Some(inv) = invert(&gram) else {
        return Ok(None);
    };
    let dual = (0..basis.len())
        .map(|j| {
            let mut d = TensorElement::zero(k, n);
            for (i, b) in basis.iter().enumerate() {
                d.add_scaled(&inv[i][j], b);
            }
            d
        })
        .collect();
    Ok(Some(GramData { basis, gram, dual }))
}

/// The form restricted to the highest-weight space of weight `ξ` is
/// nondegenerate, the translates of `e(ξ)` span that space, and the dual
/// basis pairs to the identity.
pub fn gram_nondegeneracy_check(k: usize, n: usize, xi: &Partition) -> Result<bool> {
    let Some(g) = gram_data(k, n, xi)? else {
        return Ok(false);
    };
    let hw_dim = hw_vectors(k, n, xi)?.len();
    if g.basis.len() != hw_dim || hw_dim as u64 != xi.dimension() {
        return Ok(false);
    }
    let killed = g.basis.iter().all(|b| {
        (1..=n).all(|i| super::act_current(&super::CurrentGenerator::raising(i, 0), b).is_zero())
    });
    let dual_ok = g.basis.iter().enumerate().all(|(i, b)| {
        g.dual.iter().enumerate().all(|(j, d)| {
            let want = if i == j { Rational::ONE } else { Rational::ZERO };
            form_k(b, d).expect("constant") == want
        })
    });
    Ok(killed && dual_ok)
}

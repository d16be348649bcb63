//! Highest-weight vectors in `V(ω_1)^{⊗k}` and in the invariants
//! `(V(ω_1)^{⊗k} ⊗ A_k[s])^{S_k}`.
//!
//! An `S_k`-invariant of weight `ξ` is a combination of orbit sums. The
//! orbit of `e_w ⊗ t^a` is determined by the multiset of pairs
//! `(w_p, a_p)`, stored per symbol as a sorted list of exponents. Moving
//! one `(i+1, e)` to `(i, e)` maps an orbit sum to `m · O(μ')`, where `m`
//! is the multiplicity of `(i, e)` in the new multiset `μ'`.

use std::collections::HashMap;

use super::{act_current, e_vector, CurrentGenerator, TensorElement, Word};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactla::{nullspace, reduce, Rational, SparseVector};
use crate::generators::{weakly_increasing_fillings, Shape};
use crate::polyring::Monomial;

/// All words with `content[a]` copies of symbol `a`, ascending.
pub fn weight_words(content: &[usize]) -> Vec<Word> {
    let mut w: Word = content.iter().enumerate().flat_map(|(a, &c)| std::iter::repeat_n(a as u8, c)).collect();
    let mut out = vec![w.clone()];
    while next_permutation(&mut w) {
        out.push(w.clone());
    }
    out
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn padded_content(xi: &Partition, n: usize) -> Result<Vec<usize>> {
    if xi.len() > n + 1 {
        return Err(Error::ShapeTooTall { shape: xi.to_string(), parts: xi.len(), n });
    }
    let mut c = xi.parts().to_vec();
    c.resize(n + 1, 0);
    Ok(c)
}

/// Columns of `x_1^+, …, x_n^+` on the words of one weight, as sparse
/// vectors over an index of target words.
fn raising_columns(words: &[Word], n: usize) -> Vec<SparseVector> {
    let mut targets: HashMap<(usize, Word), usize> = HashMap::new();
    words
        .iter()
        .map(|w| {
            let mut entries = Vec::new();
            for i in 0..n {
                for (pos, &x) in w.iter().enumerate() {
                    if x as usize == i + 1 {
                        let mut w2 = w.clone();
                        w2[pos] = i as u8;
                        let len = targets.len();
                        let t = *targets.entry((i, w2)).or_insert(len);
                        entries.push((t, Rational::ONE));
                    }
                }
            }
            SparseVector::from_entries(entries)
        })
        .collect()
}

fn expand_words(words: &[Word], k: usize, n: usize, v: &SparseVector) -> TensorElement {
    let mut out = TensorElement::zero(k, n);
    for (j, c) in v.entries() {
        out.add_term(words[*j].clone(), Monomial::one(k), c);
    }
    out
}

/// Basis of `(V^{⊗k})^{n^+}_μ` for an arbitrary content `μ` (length `n+1`).
pub fn hw_vectors_of_content(k: usize, n: usize, content: &[usize]) -> Vec<TensorElement> {
    assert_eq!(content.len(), n + 1);
    assert_eq!(content.iter().sum::<usize>(), k);
    let words = weight_words(content);
    nullspace(&raising_columns(&words, n)).iter().map(|v| expand_words(&words, k, n, v)).collect()
}

/// Basis of the vectors of weight `ξ` in `V^{⊗k}` killed by every `x_i^+`.
pub fn hw_vectors(k: usize, n: usize, xi: &Partition) -> Result<Vec<TensorElement>> {
    if xi.size() != k {
        return Err(Error::SizeMismatch { expected: k, got: xi.size() });
    }
    Ok(hw_vectors_of_content(k, n, &padded_content(xi, n)?))
}

/// `dim (V^{⊗k})^{n^+}_ξ = d_ξ`.
pub fn schur_weyl_dimension_check(k: usize, n: usize, xi: &Partition) -> Result<bool> {
    Ok(hw_vectors(k, n, xi)?.len() as u64 == xi.dimension())
}

/// `(dim V_μ, dim V^{n^+}_μ, dim (n^- V ∩ V_μ))` on `V = V(ω_1)^{⊗k}`.
/// Since `n^-` is generated by the `x_i^-`, the last space is spanned by
/// `x_i^- V_{μ + α_i}`.
pub fn weight_space_decomposition(k: usize, n: usize, content: &[usize]) -> (usize, usize, usize) {
    let words = weight_words(content);
    let hw = nullspace(&raising_columns(&words, n)).len();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut images = Vec::new();
    for i in 0..n {
        // μ + α_i: one more symbol i, one fewer symbol i+1
        if content[i + 1] == 0 {
            continue;
        }
        let mut up = content.to_vec();
        up[i] += 1;
        up[i + 1] -= 1;
        for w in weight_words(&up) {
            let v = TensorElement::term(n, w, Monomial::one(k), Rational::ONE);
            let low = act_current(&CurrentGenerator::lowering(i + 1, 0), &v);
            images.push(SparseVector::from_entries(low.terms().map(|(w, _, c)| (index[w], c.clone()))));
        }
    }
    (words.len(), hw, reduce(images.iter()).rank())
}

/// The `x^+`-kernel of weight `ω_i` in `V^{⊗i}` is spanned by the wedge.
pub fn wedge_model_check(i: usize, n: usize) -> bool {
    if i == 0 || i > n + 1 {
        return false;
    }
    let mut content = vec![1; i];
    content.resize(n + 1, 0);
    let hw = hw_vectors_of_content(i, n, &content);
    if hw.len() != 1 {
        return false;
    }
    let w = super::wedge(i, n);
    // proportional: compare after normalizing the first coefficient
    let (word, m, c) = w.terms().next().expect("nonzero wedge");
    let c2 = hw[0].coefficient(word, m);
    !c2.is_zero() && hw[0].scale(&(c / &c2)) == w
}

type Orbit = Vec<Vec<u32>>;

fn orbits(content: &[usize], s: u32) -> Vec<Orbit> {
    weakly_increasing_fillings(content, s)
}

/// Moves one exponent `e` from symbol `i + 1` to symbol `i`.
fn raise_orbit(mu: &Orbit, i: usize, e: u32) -> (Orbit, usize) {
    let mut out = mu.clone();
    let pos = out[i + 1].iter().position(|&x| x == e).expect("exponent present");
    out[i + 1].remove(pos);
    let at = out[i].partition_point(|&x| x <= e);
    out[i].insert(at, e);
    let mult = out[i].iter().filter(|&&x| x == e).count();
    (out, mult)
}

fn invariant_kernel(k: usize, n: usize, shape: &Shape, s: u32) -> Result<(Vec<Orbit>, Vec<SparseVector>)> {
    if shape.k() != k {
        return Err(Error::SizeMismatch { expected: k, got: shape.k() });
    }
    let content = padded_content(shape.xi(), n)?;
    let cols_orbits = orbits(&content, s);
    let mut targets: HashMap<(usize, Orbit), usize> = HashMap::new();
    let columns: Vec<SparseVector> = cols_orbits
        .iter()
        .map(|mu| {
            let mut entries = Vec::new();
            for i in 0..n {
                let mut seen = mu[i + 1].clone();
                seen.dedup();
                for e in seen {
                    let (target, mult) = raise_orbit(mu, i, e);
                    let len = targets.len();
                    let t = *targets.entry((i, target)).or_insert(len);
                    entries.push((t, Rational::from_integer(mult as i64)));
                }
            }
            SparseVector::from_entries(entries)
        })
        .collect();
    Ok((cols_orbits, nullspace(&columns)))
}

/// Sum of all distinct arrangements of the orbit's `(symbol, exponent)`
/// pairs over the `k` positions.
fn orbit_sum(mu: &Orbit, k: usize, n: usize) -> TensorElement {
    let mut pairs: Vec<(u8, u32)> =
        mu.iter().enumerate().flat_map(|(a, es)| es.iter().map(move |&e| (a as u8, e))).collect();
    pairs.sort();
    let mut out = TensorElement::zero(k, n);
    loop {
        let w: Word = pairs.iter().map(|p| p.0).collect();
        let m: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        out.add_term(w, Monomial::new(&m), &Rational::ONE);
        if !next_permutation(&mut pairs) {
            return out;
        }
    }
}

/// Basis of `((V^{⊗k})^{n^+}_ξ ⊗ A_k[s])^{S_k}`.
pub fn highest_weight_space(k: usize, n: usize, shape: &Shape, s: u32) -> Result<Vec<TensorElement>> {
    let (orbs, kernel) = invariant_kernel(k, n, shape, s)?;
    Ok(kernel
        .iter()
        .map(|v| {
            let mut out = TensorElement::zero(k, n);
            for (j, c) in v.entries() {
                out.add_scaled(c, &orbit_sum(&orbs[*j], k, n));
            }
            out
        })
        .collect())
}

/// `dim ((V^{⊗k})^{n^+}_ξ ⊗ A_k[s])^{S_k}` without expanding the basis.
pub fn highest_weight_dimension(k: usize, n: usize, shape: &Shape, s: u32) -> Result<usize> {
    Ok(invariant_kernel(k, n, shape, s)?.1.len())
}

/// Default rank `n` for a shape: the smallest with enough rows.
pub fn minimal_n(shape: &Shape) -> usize {
    shape.n().max(1)
}

/// The translate `e(ξ) ⊗ 1` used as the second argument of the pairing.
pub fn e_vector_default(shape: &Shape) -> TensorElement {
    e_vector(shape, minimal_n(shape)).expect("minimal n fits")
}

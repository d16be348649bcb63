use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::polyring::{Monomial, Polynomial};

/// Word over the symbols `0..=n` (printed 1-based), one per tensor factor.
pub type Word = Vec<u8>;

/// Element of `V(ω_1)^{⊗k} ⊗ A_k` for `sl_{n+1}`: a finite sum of
/// `c · e_{w_1} ⊗ ⋯ ⊗ e_{w_k} ⊗ t^a`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    k: usize,
    n: usize,
    terms: BTreeMap<(Word, Monomial), Rational>,
}

impl TensorElement {
    pub fn zero(k: usize, n: usize) -> Self {
        TensorElement { k, n, terms: BTreeMap::new() }
    }

    /// `c · e_w ⊗ t^a` with a 0-based word.
    pub fn term(n: usize, word: Word, monomial: Monomial, c: Rational) -> Self {
        let mut out = Self::zero(word.len(), n);
        out.add_term(word, monomial, &c);
        out
    }

    /// `e_w ⊗ 1` from a 1-based word.
    pub fn from_word(n: usize, word: &[u8]) -> Result<Self> {
        let w = word
            .iter()
            .map(|&x| {
                if x == 0 || x as usize > n + 1 {
                    Err(Error::IndexOutOfRange { index: x as usize, max: n + 1 })
                } else {
                    Ok(x - 1)
                }
            })
            .collect::<Result<Word>>()?;
        let k = w.len();
        Ok(Self::term(n, w, Monomial::one(k), Rational::ONE))
    }

    /// `v ⊗ f` for an element `v` with trivial polynomial part.
    pub fn times_polynomial(&self, f: &Polynomial) -> TensorElement {
        assert_eq!(f.nvars(), self.k);
        let mut out = Self::zero(self.k, self.n);
        for ((w, m), c) in &self.terms {
            for (fm, fc) in f.terms() {
                out.add_term(w.clone(), m.mul(fm), &(c * fc));
            }
        }
        out
    }

    /// `v_{ω_1}^{⊗k} ⊗ 1`.
    pub fn highest_vector(k: usize, n: usize) -> Self {
        Self::term(n, vec![0; k], Monomial::one(k), Rational::ONE)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Monomial, &Rational)> {
        self.terms.iter().map(|((w, m), c)| (w, m, c))
    }

    pub fn coefficient(&self, word: &[u8], m: &Monomial) -> Rational {
        self.terms.get(&(word.to_vec(), m.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: Word, monomial: Monomial, c: &Rational) {
        debug_assert_eq!(word.len(), self.k);
        debug_assert_eq!(monomial.nvars(), self.k);
        debug_assert!(word.iter().all(|&x| (x as usize) <= self.n));
        if c.is_zero() {
            return;
        }
        let key = (word, monomial);
        let v = match self.terms.get(&key) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &TensorElement) {
        assert_eq!((self.k, self.n), (other.k, other.n), "shape mismatch");
        for ((w, m), v) in &other.terms {
            self.add_term(w.clone(), m.clone(), &(c * v));
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(&Rational::ONE, other);
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(&-Rational::ONE, other);
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = Self::zero(self.k, self.n);
        out.add_scaled(c, self);
        out
    }

    /// Common polynomial degree of all terms.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(_, m)| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Symbol content of a word: `counts[a]` is the number of `a`s.
    pub fn content(word: &[u8], n: usize) -> Vec<usize> {
        let mut c = vec![0; n + 1];
        for &x in word {
            c[x as usize] += 1;
        }
        c
    }

    /// The common content of all words, if there is one.
    pub fn weight_content(&self) -> Option<Vec<usize>> {
        let mut it = self.terms.keys().map(|(w, _)| Self::content(w, self.n));
        let c = it.next()?;
        it.all(|d| d == c).then_some(c)
    }

    /// Diagonal right action of `S_k`: position `i` of the result carries
    /// the symbol and the exponent found at position `σ(i)`.
    pub fn act_symmetric_group(&self, sigma: &Permutation) -> TensorElement {
        assert_eq!(sigma.degree(), self.k, "permutation degree mismatch");
        let img = sigma.images();
        TensorElement {
            k: self.k,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|((w, m), c)| ((img.iter().map(|&j| w[j]).collect(), m.permute(img)), c.clone()))
                .collect(),
        }
    }

    /// `(1/k!) Σ_σ v·σ`.
    pub fn symmetrize(&self) -> TensorElement {
        let perms = Permutation::all(self.k);
        let mut out = Self::zero(self.k, self.n);
        for s in &perms {
            out.add_scaled(&Rational::ONE, &self.act_symmetric_group(s));
        }
        out.scale(&Rational::new(1, perms.len() as i64))
    }

    /// The polynomial attached to the word `w`.
    pub fn polynomial_at(&self, word: &[u8]) -> Polynomial {
        Polynomial::from_terms(
            self.k,
            self.terms.iter().filter(|((w, _), _)| w == word).map(|((_, m), c)| (m.clone(), c.clone())),
        )
    }

    /// Canonical term list: words ascending, then monomials descending.
    pub fn canonical_terms(&self) -> Vec<TermRecord> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|((wa, ma), _), ((wb, mb), _)| wa.cmp(wb).then_with(|| mb.cmp(ma)));
        v.into_iter()
            .map(|((w, m), c)| TermRecord {
                word: w.iter().map(|&x| x as usize + 1).collect(),
                monomial: m.exponents().to_vec(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.canonical_terms()).expect("serializable")
    }

    /// Inverse of [`to_json`](Self::to_json); `k` is taken from the first
    /// word (zero elements need it explicitly).
    pub fn from_json(s: &str, k: usize, n: usize) -> Result<Self> {
        let recs: Vec<TermRecord> = serde_json::from_str(s)?;
        let mut out = Self::zero(k, n);
        for r in recs {
            if r.word.len() != k || r.monomial.len() != k {
                return Err(Error::SizeMismatch { expected: k, got: r.word.len().max(r.monomial.len()) });
            }
            let mut w = Word::with_capacity(k);
            for &x in &r.word {
                if x == 0 || x > n + 1 {
                    return Err(Error::IndexOutOfRange { index: x, max: n + 1 });
                }
                w.push((x - 1) as u8);
            }
            out.add_term(w, Monomial::new(&r.monomial), &r.coeff);
        }
        Ok(out)
    }
}

/// One serialized term, symbols 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Vec<usize>,
    pub monomial: Vec<u32>,
    pub coeff: Rational,
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical_terms().serialize(ser)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.canonical_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let w: Vec<String> = t.word.iter().map(|x| format!("e{x}")).collect();
            write!(f, "({}) {}⊗t{:?}", t.coeff, w.join("⊗"), t.monomial)?;
        }
        Ok(())
    }
}

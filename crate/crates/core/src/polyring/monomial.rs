use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use smallvec::SmallVec;

/// Tag identifying the global monomial order in cache keys and reports.
pub const MONOMIAL_ORDER_TAG: &str = "grevlex";

/// Exponent vector `t_1^{a_1} ⋯ t_k^{a_k}`.
///
/// `Ord` is graded reverse-lexicographic: higher total degree is larger; on
/// ties, the monomial with the smaller exponent in the last differing
/// variable is larger.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    /// `t_i^e` (0-based variable index).
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Multiplies by `t_i`.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// Multiplies by `t_i^e`.
    pub fn times_var_pow(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[i] += e;
        m
    }

    /// Divides by `t_i`, if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        (self.0[i] > 0).then(|| {
            let mut m = self.clone();
            m.0[i] -= 1;
            m
        })
    }

    /// Right action: variable `i` of the result carries the exponent of
    /// variable `σ(i)`.
    pub fn permute(&self, images: &[usize]) -> Monomial {
        Monomial(images.iter().map(|&j| self.0[j]).collect())
    }

    /// Copies the exponents into a ring with `nvars` variables starting at
    /// `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut m = Self::one(nvars);
        m.0[offset..offset + self.nvars()].copy_from_slice(&self.0);
        m
    }

    /// Whether this is in the staircase `{a_i ≤ k − i}` (1-based `i`).
    pub fn is_staircase(&self) -> bool {
        let k = self.nvars();
        self.0.iter().enumerate().all(|(i, &a)| (a as usize) < k - i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t{:?}", self.0.as_slice())
    }
}

/// All monomials in `nvars` variables of total degree `degree`.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(Monomial::new(cur));
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            go(i + 1, rem - e, cur, out);
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = Vec::new();
    go(0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// Monomials of one degree in column order (largest first) with a reverse
/// index. Column `j` of every graded sparse vector refers to `monomials()[j]`.
#[derive(Debug)]
pub struct MonomialBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    fn build(nvars: usize, degree: u32) -> Self {
        let mut monomials = monomials_of_degree(nvars, degree);
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { nvars, degree, monomials, index }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, col: usize) -> &Monomial {
        &self.monomials[col]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

type BasisCell = Arc<OnceLock<Arc<MonomialBasis>>>;

/// Shared, lazily built basis of `A_k[degree]`.
pub fn monomial_basis(nvars: usize, degree: u32) -> Arc<MonomialBasis> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, u32), BasisCell>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let cell = {
        let read = cache.read().expect("monomial cache poisoned");
        read.get(&(nvars, degree)).cloned()
    };
    let cell = cell.unwrap_or_else(|| {
        let mut w = cache.write().expect("monomial cache poisoned");
        w.entry((nvars, degree)).or_default().clone()
    });
    cell.get_or_init(|| Arc::new(MonomialBasis::build(nvars, degree))).clone()
}

/// `C(n, r)` for small arguments.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r.min(n - r)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn grevlex_order() {
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // ties broken by the last variable: smaller exponent wins
        assert!(m(&[2, 0, 0]) > m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]) > m(&[0, 2, 0]));
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 0, 1]) > m(&[0, 1, 1]));
        assert!(m(&[0, 1, 1]) > m(&[0, 0, 2]));
    }

    #[test]
    fn degree_piece_dimensions() {
        for k in 1..=6 {
            for s in 0..=15u32 {
                let b = monomial_basis(k, s);
                assert_eq!(b.len(), binomial(s as usize + k - 1, k - 1), "k={k} s={s}");
                assert!(b.monomials().windows(2).all(|w| w[0] > w[1]));
                for (i, mono) in b.monomials().iter().enumerate() {
                    assert_eq!(b.index_of(mono), Some(i));
                    assert_eq!(mono.degree(), s);
                }
            }
        }
    }

    #[test]
    fn staircase_count_is_factorial() {
        for k in 1..=5usize {
            let top = (k * (k - 1) / 2) as u32;
            let n: usize = (0..=top).map(|s| monomial_basis(k, s).monomials().iter().filter(|x| x.is_staircase()).count()).sum();
            assert_eq!(n, (1..=k).product::<usize>());
        }
    }
}

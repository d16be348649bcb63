//! Degree pieces of the ideal `I_k A_k` generated by `e_1, …, e_k`, and
//! normal forms in the coinvariant algebra.
//!
//! Degree `s` is built from degree `s − 1` using
//! `I[s] = Σ_i t_i · I[s−1] + ℚ e_s`. Let `B` be the set of monomials
//! `t_i · b` with `b` standard (non-pivot) in degree `s − 1`. A monomial
//! outside `B` has only pivot parents, so it is a leading monomial of
//! `I[s]`, and `M ≡ t_i · NF(M / t_i)` for its first dividing variable.
//! Rewriting every generator this way leaves a small system inside the
//! span of `B`, whose reduced form together with the rows
//! `M − NF(M)` for `M ∉ B` is the reduced basis of `I[s]`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{elementary_symmetric, monomial_basis, monomials_of_degree, GradedSubspace, MonomialBasis, Polynomial};
use crate::error::{Error, Result};
use crate::exactla::{reduce, EchelonBuilder, Rational, ReducedBasis, SparseVector};
use crate::store::{basis_store, CacheKey};

/// Top degree `k(k−1)/2` of the coinvariant algebra.
pub fn top_degree(k: usize) -> u32 {
    (k * k.saturating_sub(1) / 2) as u32
}

/// The ideal in one degree together with its standard monomials.
#[derive(Debug)]
pub struct IdealDegree {
    nvars: usize,
    degree: u32,
    basis: Arc<MonomialBasis>,
    ideal: ReducedBasis,
    standard: Vec<usize>,
}

impl IdealDegree {
    fn new(nvars: usize, degree: u32, basis: Arc<MonomialBasis>, ideal: ReducedBasis) -> Self {
        let mut is_pivot = vec![false; basis.len()];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let standard = (0..basis.len()).filter(|&c| !is_pivot[c]).collect();
        IdealDegree { nvars, degree, basis, ideal, standard }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomial_basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn ideal(&self) -> &ReducedBasis {
        &self.ideal
    }

    /// Non-pivot columns, increasing.
    pub fn standard_columns(&self) -> &[usize] {
        &self.standard
    }

    /// Dimension of the coinvariant algebra in this degree.
    pub fn codimension(&self) -> usize {
        self.standard.len()
    }

    pub fn normal_form_vector(&self, v: &SparseVector) -> SparseVector {
        self.ideal.reduce_vector(v)
    }

    /// Normal form of the monomial in column `col`.
    pub fn normal_form_of_column(&self, col: usize) -> SparseVector {
        match self.ideal.row_for_pivot(col) {
            Some(row) => SparseVector::from_sorted(row.entries()[1..].iter().map(|(c, v)| (*c, -v)).collect())
                .expect("row tail is sorted"),
            None => SparseVector::unit(col),
        }
    }

    pub fn as_subspace(&self) -> GradedSubspace {
        GradedSubspace::new(self.nvars, self.degree, self.ideal.clone())
    }
}

type Cell = Arc<OnceLock<Arc<IdealDegree>>>;

fn cell(k: usize, s: u32) -> Cell {
    static CACHE: OnceLock<RwLock<HashMap<(usize, u32), Cell>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().expect("ideal cache poisoned").get(&(k, s)) {
        return c.clone();
    }
    cache.write().expect("ideal cache poisoned").entry((k, s)).or_default().clone()
}

/// Memoized ideal data for `(k, s)`; each piece is computed at most once.
pub fn ideal_degree(k: usize, s: u32) -> Arc<IdealDegree> {
    // Fill lower degrees first so the recursion depth stays at one.
    if s > 0 && s <= top_degree(k) + 1 {
        for d in 0..s {
            cell(k, d).get_or_init(|| Arc::new(load_or_compute(k, d)));
        }
    }
    cell(k, s).get_or_init(|| Arc::new(load_or_compute(k, s))).clone()
}

fn load_or_compute(k: usize, s: u32) -> IdealDegree {
    let basis = monomial_basis(k, s);
    let store = basis_store();
    let key = CacheKey::new("ideal", k, None, None, s);
    if let Some(b) = store.as_ref().and_then(|st| st.load(&key)) {
        if b.rows().iter().all(|r| r.support_bound() <= basis.len()) {
            return IdealDegree::new(k, s, basis, b);
        }
        log::warn!("discarding stored ideal basis {key}: column out of range");
    }
    let data = compute(k, s, basis);
    if let Some(st) = store {
        st.store(&key, &data.ideal);
    }
    data
}

fn compute(k: usize, s: u32, basis: Arc<MonomialBasis>) -> IdealDegree {
    if s == 0 {
        return IdealDegree::new(k, 0, basis, ReducedBasis::empty());
    }
    if s > top_degree(k) {
        let rows = (0..basis.len()).map(SparseVector::unit).collect();
        return IdealDegree::new(k, s, basis, ReducedBasis::from_rows_unchecked(rows));
    }
    let prev = ideal_degree(k, s - 1);
    let shift = |c: usize, i: usize| {
        basis.index_of(&prev.basis.monomial(c).times_var(i)).expect("degree shift stays in basis")
    };
    let lift = |v: &SparseVector, i: usize| {
        SparseVector::from_entries(v.entries().iter().map(|(c, x)| (shift(*c, i), x.clone())))
    };
    let mut in_b = vec![false; basis.len()];
    for &c in &prev.standard {
        for i in 0..k {
            in_b[shift(c, i)] = true;
        }
    }
    let b_size = in_b.iter().filter(|&&x| x).count();
    let first_var = |col: usize| basis.monomial(col).exponents().iter().position(|&e| e > 0).expect("positive degree");
    // φ: a monomial in B is kept, any other is rewritten through its
    // first dividing variable.
    let phi = |col: usize| {
        if in_b[col] {
            return SparseVector::unit(col);
        }
        let i = first_var(col);
        let parent = basis.monomial(col).div_var(i).expect("divisible");
        let pc = prev.basis.index_of(&parent).expect("parent in basis");
        lift(&prev.normal_form_of_column(pc), i)
    };

    let mut inner = EchelonBuilder::new();
    if s as usize <= k {
        let e = elementary_symmetric(s as usize, k).expect("s in 1..=k");
        let v = SparseVector::from_entries(
            e.terms()
                .flat_map(|(m, c)| phi(basis.index_of(m).expect("in basis")).into_entries().into_iter().map(move |(j, x)| (j, &x * c))),
        );
        inner.insert(&v);
    }
    'gens: for (&p, row) in prev.ideal.pivots().iter().zip(prev.ideal.rows()) {
        for i in 0..k {
            if inner.rank() == b_size {
                break 'gens;
            }
            let top = shift(p, i);
            if !in_b[top] && first_var(top) == i {
                continue;
            }
            // t_i · (m − NF m), with its leading monomial replaced by φ of it
            let g = lift(row, i).add_scaled(&-Rational::ONE, &SparseVector::unit(top));
            inner.insert(&g.add_scaled(&Rational::ONE, &phi(top)));
        }
    }
    let inner = inner.finish();

    let mut rows: Vec<SparseVector> = Vec::with_capacity(basis.len() - b_size + inner.rank());
    let mut inner_rows = inner.rows().iter().peekable();
    for (col, &inside) in in_b.iter().enumerate() {
        if inside {
            if let Some(r) = inner_rows.next_if(|r| r.leading().map(|(c, _)| c) == Some(col)) {
                rows.push(r.clone());
            }
        } else {
            let tail = inner.reduce_vector(&phi(col));
            rows.push(SparseVector::unit(col).add_scaled(&-Rational::ONE, &tail));
        }
    }
    debug_assert!(inner_rows.next().is_none());
    IdealDegree::new(k, s, basis, ReducedBasis::from_rows_unchecked(rows))
}

/// `(I_k A_k)[s]` as a reduced subspace of `A_k[s]`.
pub fn ideal_degree_basis(k: usize, s: u32) -> GradedSubspace {
    ideal_degree(k, s).as_subspace()
}

/// The same subspace computed directly as the span of `e_j · m` over all
/// monomials `m` of degree `s − j`. Slow; kept as an independent check.
pub fn ideal_degree_basis_direct(k: usize, s: u32) -> GradedSubspace {
    let basis = monomial_basis(k, s);
    let mut vs = Vec::new();
    for j in 1..=k.min(s as usize) {
        let e = elementary_symmetric(j, k).expect("j in range");
        for m in monomials_of_degree(k, s - j as u32) {
            vs.push(e.mul_monomial(&m, &Rational::ONE).to_sparse(&basis));
        }
    }
    GradedSubspace::new(k, s, reduce(vs.iter()))
}

/// The representative of `f` modulo the ideal supported on standard
/// monomials.
pub fn coinvariant_normal_form(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(f.clone());
    }
    let d = f.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    let data = ideal_degree(f.nvars(), d);
    let v = data.normal_form_vector(&f.to_sparse(&data.basis));
    Ok(Polynomial::from_sparse(&v, &data.basis))
}

/// `dim A_k[s] − rank (I_k A_k)[s]` for `s = 0..=k(k−1)/2`.
pub fn coinvariant_dimensions(k: usize) -> Vec<usize> {
    (0..=top_degree(k)).map(|s| ideal_degree(k, s).codimension()).collect()
}

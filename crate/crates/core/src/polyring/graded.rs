use super::{monomial_basis, Polynomial, MONOMIAL_ORDER_TAG};
use crate::error::{Error, Result};
use crate::exactla::{reduce, ReducedBasis, SparseVector};

/// A subspace of `A_k[degree]` held as a reduced basis over the monomial
/// columns of that degree (largest monomial first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    nvars: usize,
    degree: u32,
    basis: ReducedBasis,
}

impl GradedSubspace {
    pub fn new(nvars: usize, degree: u32, basis: ReducedBasis) -> Self {
        GradedSubspace { nvars, degree, basis }
    }

    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self::new(nvars, degree, ReducedBasis::empty())
    }

    /// Span of homogeneous polynomials of the given degree (zero polynomials
    /// are allowed and ignored).
    pub fn span<'a, I: IntoIterator<Item = &'a Polynomial>>(nvars: usize, degree: u32, polys: I) -> Result<Self> {
        let vs = polys.into_iter().map(|p| p.to_graded_sparse(degree)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors(nvars, degree, &vs))
    }

    pub fn from_vectors(nvars: usize, degree: u32, vectors: &[SparseVector]) -> Self {
        Self::new(nvars, degree, reduce(vectors.iter()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomial_order(&self) -> &'static str {
        MONOMIAL_ORDER_TAG
    }

    pub fn basis(&self) -> &ReducedBasis {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.nvars() != self.nvars {
            return Err(Error::SizeMismatch { expected: self.nvars, got: f.nvars() });
        }
        Ok(self.basis.contains(&f.to_graded_sparse(self.degree)?))
    }

    /// Basis rows as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let b = monomial_basis(self.nvars, self.degree);
        self.basis.rows().iter().map(|r| Polynomial::from_sparse(r, &b)).collect()
    }
}

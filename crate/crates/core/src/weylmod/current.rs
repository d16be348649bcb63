use serde::{Deserialize, Serialize};

use super::TensorElement;
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// A homogeneous element of `sl_{n+1}[t]`, indices 1-based: either the
/// matrix unit `e_{i,j} ⊗ t^r` (`i ≠ j`) or `h_i ⊗ t^r` with
/// `h_i = e_{i,i} − e_{i+1,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurrentGenerator {
    Unit { i: usize, j: usize, r: u32 },
    Cartan { i: usize, r: u32 },
}

impl CurrentGenerator {
    pub fn unit(i: usize, j: usize, r: u32, n: usize) -> Result<Self> {
        for x in [i, j] {
            if x == 0 || x > n + 1 {
                return Err(Error::IndexOutOfRange { index: x, max: n + 1 });
            }
        }
        if i == j {
            return Err(Error::InvalidGenerator(format!("e_{{{i},{i}}} is not in sl_{}", n + 1)));
        }
        Ok(CurrentGenerator::Unit { i, j, r })
    }

    pub fn cartan(i: usize, r: u32, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(CurrentGenerator::Cartan { i, r })
    }

    /// `x_i^+ ⊗ t^r = e_{i,i+1} ⊗ t^r`.
    pub fn raising(i: usize, r: u32) -> Self {
        CurrentGenerator::Unit { i, j: i + 1, r }
    }

    /// `x_i^- ⊗ t^r = e_{i+1,i} ⊗ t^r`.
    pub fn lowering(i: usize, r: u32) -> Self {
        CurrentGenerator::Unit { i: i + 1, j: i, r }
    }

    pub fn power(&self) -> u32 {
        match *self {
            CurrentGenerator::Unit { r, .. } | CurrentGenerator::Cartan { r, .. } => r,
        }
    }

    /// The anti-automorphism `Ω`: transposes matrix units, fixes `h_i`.
    pub fn omega(&self) -> Self {
        match *self {
            CurrentGenerator::Unit { i, j, r } => CurrentGenerator::Unit { i: j, j: i, r },
            c => c,
        }
    }
}

/// `(e_{i,j} ⊗ t^r)` on every tensor position in turn, for any `i, j`
/// (1-based), including the diagonal units used in commutator checks.
pub fn act_matrix_unit(i: usize, j: usize, r: u32, v: &TensorElement) -> TensorElement {
    let (si, sj) = ((i - 1) as u8, (j - 1) as u8);
    let mut out = TensorElement::zero(v.k(), v.n());
    for (w, m, c) in v.terms() {
        for (pos, &x) in w.iter().enumerate() {
            if x == sj {
                let mut w2 = w.clone();
                w2[pos] = si;
                out.add_term(w2, m.times_var_pow(pos, r), c);
            }
        }
    }
    out
}

/// The bimodule action of a current-algebra generator.
pub fn act_current(g: &CurrentGenerator, v: &TensorElement) -> TensorElement {
    match *g {
        CurrentGenerator::Unit { i, j, r } => act_matrix_unit(i, j, r, v),
        CurrentGenerator::Cartan { i, r } => {
            let mut out = act_matrix_unit(i, i, r, v);
            out.add_scaled(&-Rational::ONE, &act_matrix_unit(i + 1, i + 1, r, v));
            out
        }
    }
}

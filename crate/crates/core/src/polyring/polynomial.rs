use std::collections::BTreeMap;
use std::fmt;

use super::{monomial_basis, Monomial, MonomialBasis};
use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::exactla::{Rational, SparseVector};

/// Polynomial over ℚ in a fixed number of variables `t1, …, tk`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::ONE)
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    /// `t_i` with 1-based `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "variable t{i} out of range");
        Self::monomial(Monomial::var_power(nvars, i - 1, 1), Rational::ONE)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        Self::from_terms(nvars, [(m, c)])
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        assert_eq!(m.nvars(), self.nvars, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(c * v));
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::ONE, other);
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::ONE, other);
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::ONE)
    }

    /// Exact product.
    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, v)| (a.mul(m), v * c)).collect(),
        }
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Right action of `S_k` permuting variables: the exponent of `t_i` in
    /// the result is the exponent of `t_{σ(i)}` in `self`.
    pub fn act(&self, sigma: &Permutation) -> Polynomial {
        assert_eq!(sigma.degree(), self.nvars, "permutation degree mismatch");
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.permute(sigma.images()), c.clone())).collect(),
        }
    }

    /// Places `self` on variables `offset..offset + self.nvars()` of a ring
    /// with `nvars` variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> Polynomial {
        assert!(offset + self.nvars <= nvars);
        Polynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.embed(nvars, offset), c.clone())).collect(),
        }
    }

    /// Coordinates against the monomial basis of one degree. Panics if a
    /// term has a different degree.
    pub fn to_sparse(&self, basis: &MonomialBasis) -> SparseVector {
        SparseVector::from_entries(self.terms.iter().map(|(m, c)| {
            let col = basis.index_of(m).unwrap_or_else(|| panic!("monomial {m:?} not of degree {}", basis.degree()));
            (col, c.clone())
        }))
    }

    pub fn from_sparse(v: &SparseVector, basis: &MonomialBasis) -> Polynomial {
        Self::from_terms(basis.nvars(), v.entries().iter().map(|(c, x)| (basis.monomial(*c).clone(), x.clone())))
    }

    /// Coordinates in `A_k[d]` where `d` is the degree of `self` (or
    /// `degree` for the zero polynomial).
    pub fn to_graded_sparse(&self, degree: u32) -> Result<SparseVector> {
        match self.homogeneous_degree() {
            None if !self.is_zero() => Err(Error::NonHomogeneous),
            Some(d) if d != degree => Err(Error::NonHomogeneous),
            _ => Ok(self.to_sparse(&monomial_basis(self.nvars, degree))),
        }
    }

    /// Parses the canonical text form, e.g. `1 t1^2 t3 - 2/3 t2`.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        let bad = |why: &str| Error::ParsePolynomial(format!("{why} in `{s}`"));
        let mut out = Polynomial::zero(nvars);
        let mut tokens = s.split_whitespace().peekable();
        if tokens.peek().is_none() {
            return Err(bad("empty input"));
        }
        let mut first = true;
        while tokens.peek().is_some() {
            let negate = match tokens.peek().copied() {
                Some("+") | Some("-") => tokens.next() == Some("-"),
                _ if first => false,
                _ => return Err(bad("expected `+` or `-`")),
            };
            first = false;
            // a bare monomial has coefficient 1
            let coeff: Rational = match tokens.peek() {
                Some(t) if t.starts_with('t') => Rational::ONE,
                _ => tokens
                    .next()
                    .ok_or_else(|| bad("missing coefficient"))?
                    .parse()
                    .map_err(|_| bad("bad coefficient"))?,
            };
            let mut exps = vec![0u32; nvars];
            while let Some(tok) = tokens.peek().filter(|t| t.starts_with('t')) {
                let body = &tok[1..];
                let (var, e) = match body.split_once('^') {
                    Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (body, 1),
                };
                let var: usize = var.parse().map_err(|_| bad("bad variable"))?;
                if var == 0 || var > nvars {
                    return Err(bad("variable out of range"));
                }
                exps[var - 1] += e;
                tokens.next();
            }
            let c = if negate { -coeff } else { coeff };
            out.add_term(Monomial::new(&exps), &c);
        }
        Ok(out)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => write!(f, " t{}", i + 1)?,
            e => write!(f, " t{}^{}", i + 1, e)?,
        }
    }
    Ok(())
}

/// Canonical text form: terms in decreasing monomial order, every
/// coefficient written out as `num` or `num/den`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", c.abs())?;
            } else {
                write!(f, " + {c}")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn multiply_examples() {
        let (t1, t2) = (t(2, 1), t(2, 2));
        let prod = t1.sub(&t2).multiply(&t1.add(&t2));
        assert_eq!(prod, t1.multiply(&t1).sub(&t2.multiply(&t2)));
        let f = t1.sub(&t2);
        assert_eq!(f.multiply(&Polynomial::one(2)), f);
        let sq = f.multiply(&f);
        assert_eq!(sq.to_string(), "1 t1^2 - 2 t1 t2 + 1 t2^2");
    }

    #[test]
    fn act_examples() {
        let s = Permutation::transposition(2, 0, 1);
        assert_eq!(t(2, 1).act(&s), t(2, 2));
        let e1 = t(2, 1).add(&t(2, 2));
        assert_eq!(e1.act(&s), e1);
        let d = t(2, 1).sub(&t(2, 2));
        assert_eq!(d.act(&s), d.neg());
    }

    #[test]
    fn text_form() {
        let p = Polynomial::parse("1 t1^2 t3 - 2/3 t2", 3).unwrap();
        assert_eq!(p.to_string(), "1 t1^2 t3 - 2/3 t2");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(Polynomial::parse("0", 2).unwrap(), Polynomial::zero(2));
        assert_eq!(Polynomial::parse("- t1 + t2^2", 2).unwrap().to_string(), "1 t2^2 - 1 t1");
        assert!(Polynomial::parse("t1 t2 t1", 2).is_ok());
        assert!(Polynomial::parse("t1 -", 2).is_err());
        assert_eq!(Polynomial::parse("-1 t2 + 1 t1", 2).unwrap().to_string(), "1 t1 - 1 t2");
        assert_eq!(Polynomial::constant(2, q(-3)).to_string(), "-3");
        assert!(Polynomial::parse("1 t4", 3).is_err());
        assert!(Polynomial::parse("1 t1 1 t2", 3).is_err());
        assert!(Polynomial::parse("", 3).is_err());
        assert_eq!(Polynomial::parse("+ t1", 3).unwrap(), Polynomial::var(3, 1));
    }

    #[test]
    fn homogeneity() {
        let p = Polynomial::parse("1 t1^2 + 1 t2", 2).unwrap();
        assert!(!p.is_homogeneous());
        assert!(p.to_graded_sparse(2).is_err());
        assert_eq!(t(3, 2).homogeneous_degree(), Some(1));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5, 1i64..=4), 0..8).prop_map(move |ts| {
            Polynomial::from_terms(nvars, ts.into_iter().map(|(e, n, d)| (Monomial::new(&e), Rational::new(n, d))))
        })
    }

    fn arb_perm(k: usize) -> impl Strategy<Value = Permutation> {
        Just((0..k).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn text_roundtrip(p in arb_poly(4)) {
            let s = p.to_string();
            let back = Polynomial::parse(&s, 4).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), s);
        }

        #[test]
        fn act_is_right_action(p in arb_poly(4), s in arb_perm(4), u in arb_perm(4)) {
            prop_assert_eq!(p.act(&s).act(&u), p.act(&s.compose(&u)));
        }

        #[test]
        fn act_is_ring_map(p in arb_poly(3), r in arb_poly(3), s in arb_perm(3)) {
            prop_assert_eq!(p.multiply(&r).act(&s), p.act(&s).multiply(&r.act(&s)));
        }
    }
}

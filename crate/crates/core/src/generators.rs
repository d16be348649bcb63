//! The generator polynomials `p(r)` of the modules `M_{k,ξ}`.
//!
//! An index `r` has one row of `ξ_ℓ` exponents for each `ℓ ≥ 2`. The rows
//! are right-aligned in a grid of width `ξ_2`; reading the grid column by
//! column (top to bottom) gives tuples of length `m − 1` for the columns
//! covered by rows `2..=m`. A tuple of length `m − 1` feeds an alternant in
//! `m` variables, and the alternants are placed on consecutive variable
//! blocks after `k_1` untouched singleton variables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, Permutation};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::polyring::{Monomial, Polynomial};

/// A partition `ξ` of `k` with `n + 1` parts, viewed as the data indexing
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Partition", into = "Partition")]
pub struct Shape {
    xi: Partition,
}

impl Shape {
    pub fn new(xi: Partition) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::InvalidPartition("shape must be nonempty".into()));
        }
        Ok(Shape { xi })
    }

    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        Self::new(Partition::new(parts.to_vec())?)
    }

    pub fn xi(&self) -> &Partition {
        &self.xi
    }

    pub fn k(&self) -> usize {
        self.xi.size()
    }

    /// `n`, one less than the number of parts.
    pub fn n(&self) -> usize {
        self.xi.len() - 1
    }

    /// `k_i = ξ_i − ξ_{i+1}` for `i = 1..=n+1`.
    pub fn diffs(&self) -> Vec<usize> {
        self.xi.diffs()
    }

    /// Row lengths `ξ_2, …, ξ_{n+1}` of an index tuple.
    pub fn index_lengths(&self) -> &[usize] {
        &self.xi.parts()[1..]
    }

    /// `(offset, size)` of every alternant block, in order.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let d = self.diffs();
        let mut offset = d[0];
        let mut out = Vec::new();
        for (i, &count) in d.iter().enumerate().skip(1) {
            let size = i + 1;
            for _ in 0..count {
                out.push((offset, size));
                offset += size;
            }
        }
        out
    }
}

impl TryFrom<Partition> for Shape {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        Shape::new(p)
    }
}

impl From<Shape> for Partition {
    fn from(s: Shape) -> Partition {
        s.xi
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.xi.fmt(f)
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Shape::new(s.parse()?)
    }
}

/// Generator index: row `ℓ − 2` holds the `ξ_ℓ` exponents of row `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<Vec<u32>>);

impl IndexTuple {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        IndexTuple(rows)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().flatten().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().flatten().copied()
    }

    pub fn check(&self, shape: &Shape) -> Result<()> {
        let want = shape.index_lengths();
        let bad = |reason: String| Err(Error::NonConforming { shape: shape.to_string(), reason });
        if self.0.len() != want.len() {
            return bad(format!("expected {} rows, got {}", want.len(), self.0.len()));
        }
        for (i, (row, &len)) in self.0.iter().zip(want).enumerate() {
            if row.len() != len {
                return bad(format!("row {} should have {len} entries, got {}", i + 2, row.len()));
            }
        }
        Ok(())
    }

    /// Permutes the entries within each row: entry `j` of row `ℓ` moves to
    /// position `σ_ℓ(j)`.
    pub fn permute_rows(&self, sigmas: &[Permutation]) -> IndexTuple {
        IndexTuple(
            self.0
                .iter()
                .zip(sigmas)
                .map(|(row, s)| {
                    let mut out = vec![0; row.len()];
                    for (j, &x) in row.iter().enumerate() {
                        out[s.apply(j)] = x;
                    }
                    out
                })
                .collect(),
        )
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "({})", row.join(","))?;
        }
        write!(f, ")")
    }
}

/// Image of an index under `Φ_ξ`: `groups[m − 2]` holds the `k_m` tuples
/// of length `m − 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnGrouping {
    pub groups: Vec<Vec<Vec<u32>>>,
}

impl ColumnGrouping {
    /// All tuples in block order.
    pub fn tuples(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.groups.iter().flatten()
    }
}

/// `Φ_ξ(r)`.
pub fn phi(shape: &Shape, r: &IndexTuple) -> Result<ColumnGrouping> {
    r.check(shape)?;
    let lens = shape.index_lengths();
    let width = lens.first().copied().unwrap_or(0);
    let mut groups = vec![Vec::new(); lens.len()];
    for col in 0..width {
        // rows covering this column (right alignment)
        let tuple: Vec<u32> = r
            .rows()
            .iter()
            .zip(lens)
            .take_while(|(_, &len)| col + len >= width)
            .map(|(row, &len)| row[col + len - width])
            .collect();
        groups[tuple.len() - 1].push(tuple);
    }
    Ok(ColumnGrouping { groups })
}

/// `a(r_1, …, r_ℓ) = Σ_{τ ∈ S_{ℓ+1}} sgn τ · t_{τ(1)}^{r_1} ⋯ t_{τ(ℓ)}^{r_ℓ}`.
pub fn alt_poly(exponents: &[u32]) -> Polynomial {
    let m = exponents.len() + 1;
    let mut out = Polynomial::zero(m);
    if exponents.contains(&0) {
        // the zero exponent can be swapped with the implicit trailing one
        return out;
    }
    for tau in Permutation::all(m) {
        let mut e = vec![0u32; m];
        for (j, &r) in exponents.iter().enumerate() {
            e[tau.apply(j)] = r;
        }
        out.add_term(Monomial::new(&e), &Rational::from_integer(tau.sign()));
    }
    out
}

/// `b(r) = 1^{⊗k_1} ⊗ Π a(Φ-tuples)` in `A_k`.
pub fn b_poly(shape: &Shape, r: &IndexTuple) -> Result<Polynomial> {
    let grouping = phi(shape, r)?;
    let k = shape.k();
    let mut out = Polynomial::one(k);
    for ((offset, size), tuple) in shape.blocks().into_iter().zip(grouping.tuples()) {
        debug_assert_eq!(size, tuple.len() + 1);
        let a = alt_poly(tuple);
        if a.is_zero() {
            return Ok(Polynomial::zero(k));
        }
        out = out.multiply(&a.embed(k, offset));
    }
    Ok(out)
}

/// `p(r) = Σ_{σ ∈ S_ξ} b(σ r)` with `S_ξ = S_{ξ_2} × ⋯ × S_{ξ_{n+1}}`.
pub fn p_poly(shape: &Shape, r: &IndexTuple) -> Result<Polynomial> {
    r.check(shape)?;
    let per_row: Vec<Vec<Permutation>> = shape.index_lengths().iter().map(|&l| Permutation::all(l)).collect();
    let mut out = Polynomial::zero(shape.k());
    let mut choice = vec![0usize; per_row.len()];
    loop {
        let sigmas: Vec<Permutation> = choice.iter().zip(&per_row).map(|(&c, ps)| ps[c].clone()).collect();
        out.add_scaled(&Rational::ONE, &b_poly(shape, &r.permute_rows(&sigmas))?);
        // odometer over the product group
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < per_row[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// All indices with weakly increasing rows and total `degree`, in
/// lexicographic order of the flattened entries.
pub fn enumerate_indices(shape: &Shape, degree: u32) -> Vec<IndexTuple> {
    weakly_increasing_fillings(shape.index_lengths(), degree).into_iter().map(IndexTuple).collect()
}

/// Lists of rows with the given lengths, each row weakly increasing, all
/// entries summing to `total`; lexicographic in the flattened entries.
pub fn weakly_increasing_fillings(lens: &[usize], total: u32) -> Vec<Vec<Vec<u32>>> {
    struct Ctx<'a> {
        lens: &'a [usize],
        row_left: Vec<usize>,
        row_start: Vec<bool>,
        flat: Vec<u32>,
        out: Vec<Vec<Vec<u32>>>,
    }
    fn go(cx: &mut Ctx<'_>, i: usize, rem: u32) {
        if i == cx.flat.len() {
            if rem == 0 {
                let mut rows = Vec::with_capacity(cx.lens.len());
                let mut at = 0;
                for &l in cx.lens {
                    rows.push(cx.flat[at..at + l].to_vec());
                    at += l;
                }
                cx.out.push(rows);
            }
            return;
        }
        let mut v = if cx.row_start[i] { 0 } else { cx.flat[i - 1] };
        // every later entry of this row is at least v
        while v as u64 * cx.row_left[i] as u64 <= rem as u64 {
            cx.flat[i] = v;
            go(cx, i + 1, rem - v);
            v += 1;
        }
    }
    let mut cx = Ctx { lens, row_left: Vec::new(), row_start: Vec::new(), flat: Vec::new(), out: Vec::new() };
    for &l in lens {
        for j in 0..l {
            cx.row_left.push(l - j);
            cx.row_start.push(j == 0);
        }
    }
    cx.flat = vec![0; cx.row_left.len()];
    go(&mut cx, 0, total);
    cx.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn shape(p: &[usize]) -> Shape {
        Shape::from_parts(p).unwrap()
    }

    fn idx(rows: &[&[u32]]) -> IndexTuple {
        IndexTuple::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn poly(s: &str, k: usize) -> Polynomial {
        Polynomial::parse(s, k).unwrap()
    }

    #[test]
    fn phi_matches_worked_examples() {
        let g = phi(&shape(&[3, 3, 1]), &idx(&[&[11, 12, 13], &[21]])).unwrap();
        assert_eq!(g.groups, vec![vec![vec![11], vec![12]], vec![vec![13, 21]]]);
        let g = phi(&shape(&[2, 2, 2]), &idx(&[&[11, 12], &[21, 22]])).unwrap();
        assert_eq!(g.groups, vec![vec![], vec![vec![11, 21], vec![12, 22]]]);
        let g = phi(&shape(&[5, 3]), &idx(&[&[1, 2, 3]])).unwrap();
        assert_eq!(g.groups, vec![vec![vec![1], vec![2], vec![3]]]);
        assert!(phi(&shape(&[3, 3, 1]), &idx(&[&[1, 2], &[1]])).is_err());
    }

    #[test]
    fn grouping_counts() {
        for k in 1..=7 {
            for xi in crate::combinat::partitions_of(k, None) {
                let s = Shape::new(xi).unwrap();
                let r = IndexTuple::new(s.index_lengths().iter().map(|&l| vec![1; l]).collect());
                let g = phi(&s, &r).unwrap();
                let d = s.diffs();
                for (m, grp) in g.groups.iter().enumerate() {
                    assert_eq!(grp.len(), d[m + 1]);
                    assert!(grp.iter().all(|t| t.len() == m + 1));
                }
                let vars: usize = s.blocks().iter().map(|b| b.1).sum();
                assert_eq!(vars + d[0], k);
            }
        }
    }

    #[test]
    fn alt_poly_examples() {
        assert_eq!(alt_poly(&[3]), poly("1 t1^3 - 1 t2^3", 2));
        assert!(alt_poly(&[2, 2]).is_zero());
        assert!(alt_poly(&[0]).is_zero());
        assert!(alt_poly(&[1, 0]).is_zero());
        // Vandermonde
        assert_eq!(alt_poly(&[2, 1]), poly("1 t1^2 t2 - 1 t1^2 t3 - 1 t1 t2^2 + 1 t1 t3^2 + 1 t2^2 t3 - 1 t2 t3^2", 3));
    }

    #[test]
    fn alt_poly_is_alternating() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let l = rng.gen_range(2..=4);
            let e: Vec<u32> = (0..l).map(|_| rng.gen_range(0..5)).collect();
            let (i, j) = (rng.gen_range(0..l), rng.gen_range(0..l));
            let mut f = e.clone();
            f.swap(i, j);
            if i == j {
                continue;
            }
            if e[i] == e[j] {
                assert!(alt_poly(&e).is_zero());
                continue;
            }
            assert_eq!(alt_poly(&f), alt_poly(&e).neg());
        }
    }

    #[test]
    fn b_and_p_examples() {
        let s11 = shape(&[1, 1]);
        assert_eq!(b_poly(&s11, &idx(&[&[4]])).unwrap(), poly("1 t1^4 - 1 t2^4", 2));
        assert_eq!(p_poly(&s11, &idx(&[&[1]])).unwrap(), poly("1 t1 - 1 t2", 2));
        let s21 = shape(&[2, 1]);
        assert_eq!(b_poly(&s21, &idx(&[&[3]])).unwrap(), poly("1 t2^3 - 1 t3^3", 3));
        assert!(b_poly(&s21, &idx(&[&[0]])).unwrap().is_zero());
        let s2 = shape(&[2]);
        assert_eq!(enumerate_indices(&s2, 0), vec![idx(&[])]);
        assert_eq!(p_poly(&s2, &idx(&[])).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_indices(&shape(&[1, 1]), 2), vec![idx(&[&[2]])]);
        assert_eq!(enumerate_indices(&shape(&[2, 2]), 2), vec![idx(&[&[0, 2]]), idx(&[&[1, 1]])]);
        assert_eq!(enumerate_indices(&shape(&[2, 2, 2]), 2).len(), 5);
        assert!(enumerate_indices(&shape(&[3]), 1).is_empty());
        for xi in crate::combinat::partitions_of(5, None) {
            let s = Shape::new(xi).unwrap();
            let zero = enumerate_indices(&s, 0);
            assert_eq!(zero.len(), 1);
            assert_eq!(zero[0].degree(), 0);
        }
    }

    /// Brute force over all tuples with entries ≤ d, keeping sorted rows.
    #[test]
    fn enumeration_is_complete() {
        for xi in [&[2, 2][..], &[2, 1, 1], &[3, 2], &[2, 2, 2], &[3, 3]] {
            let s = shape(xi);
            for d in 0..=5u32 {
                let lens = s.index_lengths();
                let total: usize = lens.iter().sum();
                let mut expect = Vec::new();
                let mut cur = vec![0u32; total];
                loop {
                    if cur.iter().sum::<u32>() == d {
                        let mut rows = Vec::new();
                        let mut at = 0;
                        for &l in lens {
                            rows.push(cur[at..at + l].to_vec());
                            at += l;
                        }
                        if rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) {
                            expect.push(IndexTuple::new(rows));
                        }
                    }
                    let Some(i) = (0..total).find(|&i| cur[i] < d) else { break };
                    cur[i] += 1;
                    cur[..i].iter_mut().for_each(|x| *x = 0);
                }
                expect.sort();
                assert_eq!(enumerate_indices(&s, d), expect, "{s} d={d}");
            }
        }
    }

    #[test]
    fn p_is_invariant_and_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 1..=6 {
            for xi in crate::combinat::partitions_of(k, None) {
                let s = Shape::new(xi).unwrap();
                for _ in 0..4 {
                    let r = IndexTuple::new(
                        s.index_lengths().iter().map(|&l| (0..l).map(|_| rng.gen_range(0..4)).collect()).collect(),
                    );
                    let sig: Vec<Permutation> = s
                        .index_lengths()
                        .iter()
                        .map(|&l| {
                            let all = Permutation::all(l);
                            all[rng.gen_range(0..all.len())].clone()
                        })
                        .collect();
                    let p = p_poly(&s, &r).unwrap();
                    assert_eq!(p_poly(&s, &r.permute_rows(&sig)).unwrap(), p);
                    let b = b_poly(&s, &r).unwrap();
                    assert!(p.is_zero() || p.homogeneous_degree() == Some(r.degree()));
                    assert!(b.is_zero() || b.homogeneous_degree() == Some(r.degree()));
                }
            }
        }
    }

    /// Two-row shapes against the closed formula with pairs `(t_{2i−1}, t_{2i})`
    /// first, moved behind the singleton variables.
    #[test]
    fn two_row_shapes_match_closed_formula() {
        for k in 2..=6usize {
            for l in 1..=k / 2 {
                let s = shape(&[k - l, l]);
                for d in 0..=6 {
                    for r in enumerate_indices(&s, d) {
                        let row = &r.rows()[0];
                        let mut closed = Polynomial::zero(2 * l);
                        for sigma in Permutation::all(l) {
                            let mut term = Polynomial::one(2 * l);
                            for i in 0..l {
                                let e = row[sigma.apply(i)];
                                let mut a = vec![0; 2 * l];
                                a[2 * i] = e;
                                let mut b = vec![0; 2 * l];
                                b[2 * i + 1] = e;
                                let diff = Polynomial::from_terms(
                                    2 * l,
                                    [(Monomial::new(&a), Rational::ONE), (Monomial::new(&b), -Rational::ONE)],
                                );
                                term = term.multiply(&diff);
                            }
                            closed = closed.add(&term);
                        }
                        assert_eq!(p_poly(&s, &r).unwrap(), closed.embed(k, k - 2 * l), "{s} {r}");
                    }
                }
            }
        }
    }
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Rational;

/// Sparse vector: `(column, value)` pairs with strictly increasing columns and
/// no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from arbitrary `(column, value)` pairs; duplicate
    /// columns are summed and zeros dropped.
    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in it {
            *acc.entry(c).or_default() += v;
        }
        SparseVector {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Builds a vector from pairs already sorted by column with no zeros.
    ///
    /// Returns `None` if the invariant does not hold.
    pub fn from_sorted(entries: Vec<(usize, Rational)>) -> Option<Self> {
        let ok = entries.windows(2).all(|w| w[0].0 < w[1].0) && entries.iter().all(|(_, v)| !v.is_zero());
        ok.then_some(SparseVector { entries })
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_ints(pairs: &[(usize, i64)]) -> Self {
        Self::from_entries(pairs.iter().map(|&(c, v)| (c, Rational::from_integer(v))))
    }

    pub fn unit(col: usize) -> Self {
        SparseVector { entries: vec![(col, Rational::ONE)] }
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: usize) -> Rational {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// Largest column index plus one (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(c, _)| c + 1)
    }

    pub fn scale(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::new();
        }
        SparseVector {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVector) -> SparseVector {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVector { entries: out }
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let (mut i, mut j) = (0, 0);
        let mut acc = Rational::ZERO;
        while i < self.entries.len() && j < other.entries.len() {
            match self.entries[i].0.cmp(&other.entries[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &self.entries[i].1 * &other.entries[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// Reduced row-echelon basis of a subspace.
///
/// Rows are sorted by pivot column; each pivot entry is 1 and every pivot
/// column is zero in all other rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBasis {
    rows: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl ReducedBasis {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row whose pivot is `col`, if any.
    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVector> {
        self.pivots.binary_search(&col).ok().map(|i| &self.rows[i])
    }

    /// Reassembles a basis from stored rows, checking every invariant.
    pub fn from_rows(rows: Vec<SparseVector>) -> Option<Self> {
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().map(|(c, _)| c)).collect::<Option<_>>()?;
        if !pivots.windows(2).all(|w| w[0] < w[1]) {
            return None;
        }
        for (i, r) in rows.iter().enumerate() {
            if !r.leading().is_some_and(|(_, v)| v.is_one()) {
                return None;
            }
            for (j, p) in pivots.iter().enumerate() {
                if i != j && !r.get(*p).is_zero() {
                    return None;
                }
            }
        }
        Some(ReducedBasis { rows, pivots })
    }

    /// Assembles a basis from rows the caller knows to be in reduced
    /// row-echelon form and sorted by pivot.
    pub(crate) fn from_rows_unchecked(rows: Vec<SparseVector>) -> Self {
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().expect("zero row").0).collect();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        ReducedBasis { rows, pivots }
    }

    /// Reduces `v` against the basis. The result is zero iff `v` lies in the
    /// span, and is supported on non-pivot columns otherwise.
    pub fn reduce_vector(&self, v: &SparseVector) -> SparseVector {
        let mut out = v.clone();
        // Rows are fully reduced, so subtracting one never reintroduces
        // another pivot column; one pass over the pivots of `v` suffices.
        let hits: Vec<(usize, Rational)> = v
            .entries()
            .iter()
            .filter_map(|(c, val)| self.pivots.binary_search(c).ok().map(|i| (i, val.clone())))
            .collect();
        for (i, val) in hits {
            out = out.add_scaled(&-&val, &self.rows[i]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce_vector(v).is_zero()
    }
}

/// Incremental builder maintaining a fully reduced row-echelon form.
#[derive(Clone, Debug, Default)]
pub struct EchelonBuilder {
    rows: BTreeMap<usize, SparseVector>,
}

impl EchelonBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_basis(b: &ReducedBasis) -> Self {
        EchelonBuilder {
            rows: b.pivots.iter().copied().zip(b.rows.iter().cloned()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce_vector(&self, v: &SparseVector) -> SparseVector {
        let mut out = v.clone();
        for (c, val) in v.entries() {
            if let Some(row) = self.rows.get(c) {
                out = out.add_scaled(&-val, row);
            }
        }
        out
    }

    /// Inserts `v`; returns `true` if the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce_vector(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.recip());
        for row in self.rows.values_mut() {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn finish(self) -> ReducedBasis {
        let (pivots, rows) = self.rows.into_iter().unzip();
        ReducedBasis { rows, pivots }
    }
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn reduce<'a, I: IntoIterator<Item = &'a SparseVector>>(vectors: I) -> ReducedBasis {
    let mut b = EchelonBuilder::new();
    for v in vectors {
        b.insert(v);
    }
    b.finish()
}

pub fn contains(basis: &ReducedBasis, v: &SparseVector) -> bool {
    basis.contains(v)
}

/// Rank of the sum of the two spans.
pub fn rank_of_union(a: &ReducedBasis, b: &ReducedBasis) -> usize {
    let (big, small) = if a.rank() >= b.rank() { (a, b) } else { (b, a) };
    let mut e = EchelonBuilder::from_basis(big);
    for r in small.rows() {
        e.insert(r);
    }
    e.rank()
}

/// Whether two reduced bases span the same subspace. Reduced bases are
/// canonical, so this is plain equality.
pub fn same_span(a: &ReducedBasis, b: &ReducedBasis) -> bool {
    a == b
}

/// Basis of `{c : Σ_j c_j · columns[j] = 0}`, as sparse vectors indexed by
/// column position. Returned in order of increasing free column.
pub fn nullspace(columns: &[SparseVector]) -> Vec<SparseVector> {
    // rows of the transposed system: one equation per coordinate
    let mut eqs: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col.entries() {
            eqs.entry(*i).or_default().push((j, v.clone()));
        }
    }
    let rows: Vec<SparseVector> = eqs
        .into_values()
        .map(|e| SparseVector::from_sorted(e).expect("columns visited in order"))
        .collect();
    let rref = reduce(rows.iter());
    let pivots = rref.pivots();
    let mut out = Vec::new();
    for f in (0..columns.len()).filter(|j| pivots.binary_search(j).is_err()) {
        let mut entries = vec![(f, Rational::ONE)];
        for (p, row) in pivots.iter().zip(rref.rows()) {
            let c = row.get(f);
            if !c.is_zero() {
                entries.push((*p, -c));
            }
        }
        out.push(SparseVector::from_entries(entries));
    }
    out
}

/// Inverse of a square dense matrix, or `None` if singular.
pub fn invert(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let rows: Vec<SparseVector> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            SparseVector::from_entries(
                row.iter().cloned().enumerate().chain(std::iter::once((n + i, Rational::ONE))),
            )
        })
        .collect();
    let rref = reduce(rows.iter());
    if rref.rank() != n || rref.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    Some(
        rref.rows()
            .iter()
            .map(|r| (0..n).map(|j| r.get(n + j)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(pairs: &[(usize, i64)]) -> SparseVector {
        SparseVector::from_ints(pairs)
    }

    #[test]
    fn reduce_examples() {
        let b = reduce([v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)])].iter());
        assert_eq!(b.rank(), 1);
        assert_eq!(b.pivots(), &[0]);

        assert_eq!(reduce(std::iter::empty()).rank(), 0);

        let b = reduce([v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])].iter());
        assert_eq!(b.rank(), 2);
        assert_eq!(b.pivots(), &[0, 1]);
        assert_eq!(b.rows()[0], v(&[(0, 1), (2, -1)]));
        assert_eq!(b.rows()[1], v(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn contains_examples() {
        let e0 = reduce([v(&[(0, 1)])].iter());
        assert!(contains(&e0, &v(&[(0, 3)])));
        assert!(!contains(&e0, &v(&[(1, 1)])));
        let b = reduce([v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])].iter());
        assert!(contains(&b, &v(&[(0, 1), (2, -1)])));
        assert!(contains(&b, &SparseVector::new()));
    }

    #[test]
    fn rank_of_union_examples() {
        let e0 = reduce([v(&[(0, 1)])].iter());
        let e1 = reduce([v(&[(1, 1)])].iter());
        assert_eq!(rank_of_union(&e0, &e0), 1);
        assert_eq!(rank_of_union(&e0, &e1), 2);
        let a = reduce([v(&[(0, 1), (1, 1)])].iter());
        let b = reduce([v(&[(0, 1), (1, -1)])].iter());
        assert_eq!(rank_of_union(&a, &b), 2);
    }

    #[test]
    fn nullspace_small() {
        // columns c0 = (1,0), c1 = (0,1), c2 = (1,1): kernel spanned by (1,1,-1)
        let cols = [v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)])];
        let ns = nullspace(&cols);
        assert_eq!(ns, vec![v(&[(0, -1), (1, -1), (2, 1)])]);
        assert_eq!(nullspace(&[SparseVector::new()]), vec![v(&[(0, 1)])]);
    }

    #[test]
    fn invert_small() {
        let q = Rational::from_integer;
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn from_rows_rejects_bad_echelon() {
        assert!(ReducedBasis::from_rows(vec![v(&[(0, 2)])]).is_none());
        assert!(ReducedBasis::from_rows(vec![v(&[(1, 1)]), v(&[(0, 1)])]).is_none());
        assert!(ReducedBasis::from_rows(vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1)])]).is_none());
        let ok = reduce([v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])].iter());
        assert_eq!(ReducedBasis::from_rows(ok.rows().to_vec()), Some(ok));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
    }

    fn to_vectors(m: &[Vec<i64>]) -> Vec<SparseVector> {
        m.iter()
            .map(|row| SparseVector::from_entries(row.iter().enumerate().map(|(j, &x)| (j, Rational::from_integer(x)))))
            .collect()
    }

    /// Independent rank oracle: largest r with a nonzero r×r minor, minors by
    /// cofactor expansion over the integers.
    fn det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
        if r == 0 {
            return vec![vec![]];
        }
        if n < r {
            return vec![];
        }
        let mut out = subsets(n - 1, r);
        for mut s in subsets(n - 1, r - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn minor_rank(m: &[Vec<i64>]) -> usize {
        let (rows, cols) = (m.len(), m[0].len());
        for r in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, r) {
                for cs in subsets(cols, r) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    if det(&sub) != 0 {
                        return r;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn rank_matches_minor_oracle(m in small_matrix()) {
            let vs = to_vectors(&m);
            prop_assert_eq!(reduce(vs.iter()).rank(), minor_rank(&m));
        }

        #[test]
        fn reduce_is_idempotent_and_order_free(m in small_matrix(), seed in any::<u64>()) {
            let vs = to_vectors(&m);
            let b = reduce(vs.iter());
            prop_assert_eq!(reduce(b.rows().iter()), b.clone());
            let mut perm = vs.clone();
            // deterministic shuffle from the seed
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(reduce(perm.iter()), b.clone());
            for x in &vs {
                prop_assert!(contains(&b, x));
            }
            prop_assert!(ReducedBasis::from_rows(b.rows().to_vec()).is_some());
        }

        #[test]
        fn nullspace_vectors_are_kernel(m in small_matrix()) {
            // treat each input row as a column of the system
            let cols = to_vectors(&m);
            let ns = nullspace(&cols);
            let width = m[0].len();
            prop_assert_eq!(ns.len() + reduce(cols.iter()).rank(), cols.len());
            for c in &ns {
                let mut acc = SparseVector::new();
                for (j, coef) in c.entries() {
                    acc = acc.add_scaled(coef, &cols[*j]);
                }
                prop_assert!(acc.is_zero(), "width {}", width);
            }
        }
    }
}

use std::fmt;

use super::Partition;

/// A standard Young tableau in English notation, entries `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates that the filling is standard.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        let k = shape.size();
        let mut seen = vec![false; k + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > k || std::mem::replace(&mut seen[x], true) {
                    return None;
                }
                if j > 0 && row[j - 1] >= x {
                    return None;
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return None;
                }
            }
        }
        Some(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated on construction")
    }

    /// Row index (0-based) of each entry, indexed by entry − 1.
    fn row_of(&self) -> Vec<usize> {
        let mut r = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                r[x - 1] = i;
            }
        }
        r
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let r = self.row_of();
        (1..self.size()).filter(|&i| r[i] > r[i - 1]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Lascoux–Schützenberger charge of the reading word.
    pub fn charge(&self) -> usize {
        let word = self.reading_word();
        let mut pos = vec![0; word.len() + 1];
        for (p, &x) in word.iter().enumerate() {
            pos[x] = p;
        }
        let mut index = 0;
        let mut total = 0;
        for x in 2..=word.len() {
            if pos[x] > pos[x - 1] {
                index += 1;
            }
            total += index;
        }
        total
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// All standard tableaux of shape `p`.
///
/// Entries are placed in increasing order; at each step the candidate rows
/// are tried top to bottom, which fixes a deterministic order.
pub fn syt_enumerate(p: &Partition) -> Vec<StandardTableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, k: usize, out: &mut Vec<StandardTableau>) {
        if next > k {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(next);
                go(shape, rows, next + 1, k, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); p.len()];
    go(p.parts(), &mut rows, 1, p.size(), &mut out);
    out
}

//! Fraction-preserving Gaussian elimination over [`Scalar`].
//!
//! Rows are sparse. [`RowReducer`] keeps an echelon basis of everything fed to
//! it: each incoming row is reduced against the existing pivots (leftmost
//! pivot column first) and, if anything survives, becomes the pivot row of
//! its leftmost nonzero column. Feeding rows in a fixed order therefore gives
//! a fixed pivot choice, which keeps every report reproducible.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: column → nonzero entry.
pub type SparseRow = BTreeMap<usize, Scalar>;

/// Incremental row-echelon form.
#[derive(Debug, Clone, Default)]
pub struct RowReducer {
    /// Pivot column → row with a 1 in that column and zeros in every
    /// earlier pivot column.
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, factor: &Scalar, other: &SparseRow) {
    for (c, v) in other {
        let delta = factor * v;
        use std::collections::btree_map::Entry;
        match row.entry(*c) {
            Entry::Vacant(e) => {
                if !delta.is_zero() {
                    e.insert(delta);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|_, v| !v.is_zero());
        let mut cursor = 0usize;
        loop {
            let hit = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, val)) = hit else { break };
            let pivot = &self.pivots[&col];
            axpy(&mut row, &-val, pivot);
            debug_assert!(!row.contains_key(&col));
            cursor = col + 1;
        }
        row
    }

    /// Adds a row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lead_val)) = row.iter().next() else {
            return false;
        };
        let inv = lead_val.recip().expect("nonzero lead");
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Reduced row-echelon rows, in pivot-column order.
    pub fn rref(&self) -> Vec<(usize, SparseRow)> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&col, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let later: Vec<(usize, Scalar)> = row
                .range(col + 1..)
                .filter(|(c, _)| done.contains_key(c))
                .map(|(c, v)| (*c, v.clone()))
                .collect();
            for (c, v) in later {
                axpy(&mut row, &-v, &done[&c]);
            }
            done.insert(col, row);
        }
        done.into_iter().collect()
    }

    /// Basis of the right nullspace of the inserted rows, as sparse vectors
    /// over columns `0..ncols`: one vector per free column, in column order.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseRow> {
        let rref = self.rref();
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = SparseRow::new();
            v.insert(free, Scalar::one());
            for (p, row) in &rref {
                if let Some(x) = row.get(&free) {
                    v.insert(*p, -x);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Right nullspace of a dense system with `ncols` columns.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut rr = RowReducer::new();
    for r in rows {
        assert_eq!(r.len(), ncols, "ragged system");
        rr.insert(to_sparse(r));
    }
    rr.nullspace(ncols)
        .into_iter()
        .map(|v| to_dense(&v, ncols))
        .collect()
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut rr = RowReducer::new();
    for r in rows {
        rr.insert(to_sparse(r));
    }
    rr.rank()
}

pub fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseRow, ncols: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); ncols];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| acc + &(x * y))
}

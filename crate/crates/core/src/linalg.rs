//! Incremental row echelon form over the rationals, on sparse vectors.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::lincomb::Scalar;

pub(crate) type SparseVec = BTreeMap<usize, Scalar>;

/// Rows are stored with a leading coefficient of 1 at their pivot column.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(v: &mut SparseVec, c: &Scalar, row: &SparseVec) {
    for (col, x) in row {
        let entry = v.entry(*col).or_insert_with(Scalar::zero);
        *entry -= c * x;
        if entry.is_zero() {
            v.remove(col);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the result has no entries in
    /// pivot columns.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(col) = next else { break };
            let c = v[&col].clone();
            axpy(&mut v, &c, &self.rows[&col]);
            cursor = col + 1;
        }
        v
    }

    /// Inserts `v` into the row space. Returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for x in r.values_mut() {
                *x *= &inv;
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

//! Sparse semi-echelon forms over a field.
//!
//! Rows are sorted `(column, coefficient)` lists. Every stored row has a
//! distinct leading column with coefficient one, which is enough for both
//! rank and membership: a vector lies in the span iff repeatedly cancelling
//! its leading entry against stored rows empties it.

use crate::scalar::Field;

pub type SparseRow<F> = Vec<(u32, F)>;

#[derive(Debug, Clone)]
pub struct Echelon<F> {
    ncols: usize,
    pivot_row: Vec<Option<u32>>,
    rows: Vec<SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivot_row: vec![None; ncols], rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[SparseRow<F>] {
        &self.rows
    }

    /// Cancels leading entries until the row is empty or its leading
    /// column has no pivot.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((c, a)) = row.first() {
            match self.pivot_row[*c as usize] {
                None => break,
                Some(r) => {
                    let a = a.clone();
                    row = sub_scaled(&row, &a, &self.rows[r as usize]);
                }
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut row = self.reduce(row);
        let Some((lead, a)) = row.first().cloned() else { return false };
        if !a.is_one() {
            let inv = a.inv();
            for (_, c) in row.iter_mut() {
                *c = c.clone() * inv.clone();
            }
        }
        self.pivot_row[lead as usize] = Some(self.rows.len() as u32);
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `row - a * piv`, where `piv` starts with coefficient one at the same
/// leading column as `row`.
fn sub_scaled<F: Field>(row: &[(u32, F)], a: &F, piv: &[(u32, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < piv.len() {
        if j == piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || piv[j].0 < row[i].0 {
            out.push((piv[j].0, -(a.clone() * piv[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - a.clone() * piv[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a set of rows, inserting shortest rows first.
pub fn rank_of<F: Field>(ncols: usize, mut rows: Vec<SparseRow<F>>) -> usize {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(|r| (r.len(), r[0].0));
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};

    fn r(v: &[(u32, i64)]) -> SparseRow<Rational> {
        v.iter().map(|(c, a)| (*c, Rational::from_integer((*a).into()))).collect()
    }

    #[test]
    fn dependent_rows_do_not_add_rank() {
        let rows = vec![r(&[(0, 1), (1, 2)]), r(&[(1, 1), (2, 1)]), r(&[(0, 2), (1, 6), (2, 2)])];
        assert_eq!(rank_of(3, rows), 2);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new(3);
        e.insert(r(&[(0, 2), (2, 4)]));
        e.insert(r(&[(1, 3)]));
        assert!(e.contains(r(&[(0, 1), (1, 5), (2, 2)])));
        assert!(!e.contains(r(&[(2, 1)])));
    }

    #[test]
    fn prime_field_rank_matches_small_case() {
        let rows: Vec<SparseRow<Fp>> = vec![
            vec![(0, Fp::from_i64(1)), (1, Fp::from_i64(1))],
            vec![(0, Fp::from_i64(1)), (1, Fp::from_i64(-1))],
            vec![(1, Fp::from_i64(5))],
        ];
        assert_eq!(rank_of(2, rows), 2);
    }
}

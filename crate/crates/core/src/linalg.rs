//! Exact linear algebra over K: dense row reduction and incremental sparse spans.

use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// Dense matrix with entries in K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, v) in row.into_iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let f = self.get(i, col).clone();
                for j in col..self.cols {
                    if self.get(row, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(self.get(row, j) * &f);
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}` in reduced form (identity on free columns).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free);
            }
            out.push(v);
        }
        out
    }
}

/// Sparse vector keyed by an ordered basis label.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) {
    for (k, v) in x {
        let t = a * v;
        match y.entry(k.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !t.is_zero() {
                    e.insert(t);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &t;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Incrementally built echelon basis of a span of sparse vectors.
///
/// Each stored row has a leading key (its pivot, the largest key) with
/// coefficient one, and remembers how it was combined from the inserted
/// vectors, so membership queries can return coordinates.
#[derive(Clone, Debug, Default)]
pub struct SparseSpan<K: Ord + Clone> {
    rows: Vec<(SparseVec<K>, SparseVec<usize>)>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

impl<K: Ord + Clone> SparseSpan<K> {
    pub fn new() -> Self {
        SparseSpan {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residual and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut res = v.clone();
        let mut combo: SparseVec<usize> = BTreeMap::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => res.keys().rev().find(|k| self.pivots.contains_key(*k)).cloned(),
                Some(c) => res
                    .range(..c.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.pivots.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let (row, rc) = &self.rows[self.pivots[&k]];
            let f = res[&k].clone();
            axpy(&mut res, &(-&f), row);
            axpy(&mut combo, &f, rc);
            cursor = Some(k);
        }
        (res, combo)
    }

    /// Inserts `v`; returns `true` if it was independent of the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (res, combo) = self.reduce(v);
        let Some((lead, lc)) = res.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        let mut row = SparseVec::new();
        axpy(&mut row, &inv, &res);
        let mut rc = SparseVec::new();
        rc.insert(idx, Scalar::one());
        axpy(&mut rc, &(-&Scalar::one()), &combo);
        let rc = rc.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push((row, rc));
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` is in the span.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (res, combo) = self.reduce(v);
        res.is_empty().then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]], 3);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = &(&(&v[0] * &s(1)) + &(&v[1] * &s(2))) + &(&v[2] * &s(3));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn sparse_span_coordinates() {
        let mut sp: SparseSpan<u32> = SparseSpan::new();
        let a: SparseVec<u32> = [(0, s(1)), (1, s(1))].into_iter().collect();
        let b: SparseVec<u32> = [(1, s(1)), (2, Scalar::i())].into_iter().collect();
        assert!(sp.insert(&a));
        assert!(sp.insert(&b));
        let mut c = SparseVec::new();
        axpy(&mut c, &s(3), &a);
        axpy(&mut c, &s(-2), &b);
        assert!(!sp.insert(&c));
        let coords = sp.coordinates(&c).unwrap();
        assert_eq!(coords[&0], s(3));
        assert_eq!(coords[&1], s(-2));
        let d: SparseVec<u32> = [(2, s(1))].into_iter().collect();
        assert!(!sp.contains(&d));
    }
}

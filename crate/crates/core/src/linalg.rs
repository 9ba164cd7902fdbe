//! Dense exact linear algebra over a [`Field`].

use alloc::vec::Vec;

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: alloc::vec![alloc::vec![field.zero(); cols]; rows] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows: rows.len(), cols, data: rows }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !field.is_zero(&m.data[r][col])) else { continue };
        m.data.swap(row, p);
        let inv = field.inv(&m.data[row][col]);
        for c in col..m.cols {
            m.data[row][c] = field.mul(&m.data[row][c], &inv);
        }
        let pivot_row = m.data[row].clone();
        for r in 0..m.rows {
            if r == row || field.is_zero(&m.data[r][col]) {
                continue;
            }
            let f = m.data[r][col].clone();
            for c in col..m.cols {
                if !field.is_zero(&pivot_row[c]) {
                    let v = field.sub(&m.data[r][c], &field.mul(&f, &pivot_row[c]));
                    m.data[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.data.truncate(row);
    m.rows = m.data.len();
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    rref(field, &mut a).len()
}

/// A basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut a = m.clone();
    let pivots = rref(field, &mut a);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![field.zero(); m.cols];
            v[f] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&a.data[r][f]);
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut aug = Matrix::from_rows(
        m.data.iter().zip(b).map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        }).collect(),
        m.cols + 1,
    );
    let pivots = rref(field, &mut aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = alloc::vec![field.zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.data[r][m.cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rank_and_kernel() {
        let f = PrimeField::default();
        let m = Matrix::from_rows(alloc::vec![alloc::vec![1, 2, 3], alloc::vec![2, 4, 6], alloc::vec![0, 1, 1]], 3);
        assert_eq!(rank(&f, &m), 2);
        let ns = nullspace(&f, &m);
        assert_eq!(ns.len(), 1);
        for r in &m.data {
            let dot = r.iter().zip(&ns[0]).fold(0, |a, (x, y)| f.add(&a, &f.mul(x, y)));
            assert_eq!(dot, 0);
        }
        let x = solve(&f, &m, &[3, 6, 1]).unwrap();
        assert_eq!(x, alloc::vec![1, 1, 0]);
        assert!(solve(&f, &m, &[1, 0, 0]).is_none());
    }
}

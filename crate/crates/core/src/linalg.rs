//! Dense exact linear algebra over the rationals.
//!
//! The graded engine only ever sees tiny matrices (one per internal degree),
//! so plain Gaussian elimination with `BigRational` entries is both exact and
//! fast enough. Pivoting is by first nonzero entry in scan order, which keeps
//! every computation deterministic.

use num::{BigRational, Zero};

pub type Q = BigRational;

/// Kernel basis of the m x n matrix `a` (rows of length n), as vectors v with
/// a v = 0. Basis vectors come from the free columns of the RREF in ascending
/// column order, each with a 1 in its free position.
#[allow(clippy::needless_range_loop)] // index form mirrors the pivot arithmetic
pub fn kernel_basis(a: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..n {
        if pivot_row >= rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].clone();
        for c in col..n {
            let v = &m[pivot_row][c] / &inv;
            m[pivot_row][c] = v;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..n {
                    let v = &m[r][c] - &factor * &m[pivot_row][c];
                    m[r][c] = v;
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_row += 1;
    }
    let pivot_cols = pivot_col_of_row;
    let is_pivot = |c: usize| pivot_cols.contains(&c);
    let mut basis = Vec::new();
    for free in 0..n {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![Q::zero(); n];
        v[free] = Q::from_integer(1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank(a: &[Vec<Q>], n: usize) -> usize {
    if a.is_empty() || n == 0 {
        return 0;
    }
    n - kernel_basis(a, n).len()
}

/// Incrementally maintained row space in echelon form. Used to track the span
/// of already-found syzygies degree by degree and to pick minimal new
/// generators deterministically.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    rows: Vec<Vec<Q>>,  // echelon rows, each normalized to pivot 1
    pivots: Vec<usize>, // pivot column of each row, strictly increasing scan
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; the remainder is zero exactly
    /// when `v` already lies in the span.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &factor * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts `v` if independent. Returns true when the dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].clone();
        for x in r.iter_mut() {
            *x = &*x / &inv;
        }
        // Keep rows sorted by pivot so reduce stays echelon-clean.
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

/// True when span(sub) is contained in span(sup), both given as row vectors.
pub fn spans_contained(sub: &[Vec<Q>], sup: &[Vec<Q>]) -> bool {
    let mut space = RowSpace::new();
    for v in sup {
        space.insert(v);
    }
    sub.iter().all(|v| space.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = mat(&[&[1, 1]]);
        let k = kernel_basis(&a, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![-q(1), q(1)]);
        assert_eq!(rank(&a, 2), 1);
    }

    #[test]
    fn kernel_of_full_rank() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        assert!(kernel_basis(&a, 2).is_empty());
        assert_eq!(rank(&a, 2), 2);
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let a = mat(&[&[0, 0, 0]]);
        let k = kernel_basis(&a, 3);
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v[i], q(1));
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let dot: Q = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn rowspace_insert_and_contains() {
        let mut s = RowSpace::new();
        assert!(s.insert(&[q(1), q(2), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(3), q(1)])); // dependent
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[q(2), q(5), q(1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn span_containment() {
        let sub = mat(&[&[1, 1, 0]]);
        let sup = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(spans_contained(&sub, &sup));
        assert!(!spans_contained(&sup, &sub));
    }
}

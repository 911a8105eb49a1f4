//! Square matrices over Q(ω) and exact determinants. Every character formula
//! in the crate reduces to a ratio of these determinants.

use crate::exact::cyclotomic::CycNum;

/// Dense square matrix of cyclotomic entries.
#[derive(Clone, Debug)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<CycNum>,
}

impl SquareMatrix {
    /// Build from a generator for entry (row, col), 0-indexed.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.dim + j]
    }

    /// Exact determinant by Gaussian elimination over the field Q(ω), with
    /// first-nonzero pivoting. A singular matrix yields zero, not an error.
    ///
    /// Matrices here are at most ~(tn+1) rows, so no fraction-free or
    /// asymptotic tricks are needed.
    pub fn determinant(&self, t: usize) -> CycNum {
        let n = self.dim;
        if n == 0 {
            return CycNum::one(t);
        }
        let mut m = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut det = CycNum::one(t);
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m[idx(r, col)].is_zero()) {
                Some(r) => r,
                None => return CycNum::zero(t),
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(idx(pivot_row, j), idx(col, j));
                }
                det = det.neg();
            }
            let pivot = m[idx(col, col)].clone();
            det = det.mul(&pivot);
            let pinv = pivot.inverse().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = m[idx(r, col)].mul(&pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = factor.mul(&m[idx(col, j)]);
                    m[idx(r, j)] = m[idx(r, j)].sub(&sub);
                }
            }
        }
        det
    }
}

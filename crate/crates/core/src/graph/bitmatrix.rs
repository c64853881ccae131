//! Small square GF(2) matrices packed one row per word.

use crate::boolfun::VarSet;

/// Square bit matrix, `dim ≤ 32`; bit `j` of `rows[i]` is entry `(i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    dim: usize,
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 32);
        BitMatrix {
            dim,
            rows: vec![0; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(dim: usize, rows: Vec<u32>) -> Self {
        assert_eq!(rows.len(), dim);
        let mask = if dim == 32 {
            u32::MAX
        } else {
            (1u32 << dim) - 1
        };
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row entries outside the matrix"
        );
        BitMatrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        if b {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        gf2_rank_rows(self.rows.clone())
    }

    /// `self · v` over GF(2), `v` as a column bit mask.
    pub fn mul_vec(&self, v: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (((r & v).count_ones() & 1) << i))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Rank over GF(2) of the given rows.
pub fn gf2_rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// Gaussian elimination on packed rows.
pub fn gf2_rank_rows(mut rows: Vec<u32>) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot;
            }
        }
    }
    rank
}

/// Rows and columns outside `drop` kept in their original order.
pub fn principal_submatrix(m: &BitMatrix, drop: VarSet) -> BitMatrix {
    let keep: Vec<usize> = (0..m.dim).filter(|&i| !drop.contains(i)).collect();
    let rows = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .enumerate()
                .fold(0u32, |acc, (nj, &j)| acc | (m.get(i, j) as u32) << nj)
        })
        .collect();
    BitMatrix {
        dim: keep.len(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(BitMatrix::zero(3).rank(), 0);
        assert_eq!(BitMatrix::from_rows(2, vec![0b10, 0b01]).rank(), 2);
        // path 0–1–2
        assert_eq!(BitMatrix::from_rows(3, vec![0b010, 0b101, 0b010]).rank(), 2);
        assert_eq!(BitMatrix::identity(7).rank(), 7);
        assert_eq!(BitMatrix::from_rows(3, vec![0b011, 0b110, 0b101]).rank(), 2);
    }

    #[test]
    fn submatrices() {
        let m = BitMatrix::from_rows(3, vec![0b010, 0b101, 0b010]);
        assert_eq!(principal_submatrix(&m, VarSet::full(3)).dim(), 0);
        assert_eq!(principal_submatrix(&m, VarSet::full(3)).rank(), 0);
        let s = principal_submatrix(&m, VarSet::from_indices([1]));
        assert_eq!(s, BitMatrix::zero(2));
        let s = principal_submatrix(&m, VarSet::from_indices([2]));
        assert_eq!(s, BitMatrix::from_rows(2, vec![0b10, 0b01]));
    }
}

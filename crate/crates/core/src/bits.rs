//! F_2 linear algebra on bit-packed vectors.
//!
//! Field elements of GF(2^m), m <= 64, are stored as `u64` coefficient
//! masks, so F_2-linear maps between them (squaring, Frobenius powers,
//! subfield embeddings) are column-major bit matrices.

use alloc::vec;
use alloc::vec::Vec;

/// F_2-linear map from `cols`-bit vectors to `rows`-bit vectors,
/// stored column-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    pub rows: usize,
    pub cols: usize,
    col: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows <= 64 && cols <= 64);
        BitMatrix { rows, cols, col: vec![0; cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.col[i] = 1 << i;
        }
        m
    }

    /// Build from the images of the basis vectors e_0, e_1, ...
    pub fn from_columns(rows: usize, cols: &[u64]) -> Self {
        assert!(rows <= 64);
        BitMatrix { rows, cols: cols.len(), col: cols.to_vec() }
    }

    #[inline]
    pub fn column(&self, i: usize) -> u64 {
        self.col[i]
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        let mut rem = x;
        while rem != 0 {
            let i = rem.trailing_zeros() as usize;
            acc ^= self.col[i];
            rem &= rem - 1;
        }
        acc
    }

    /// Matrix product: `self * other` (apply `other` first).
    pub fn compose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let cols: Vec<u64> = (0..other.cols).map(|i| self.apply(other.col[i])).collect();
        BitMatrix { rows: self.rows, cols: other.cols, col: cols }
    }

    pub fn pow(&self, mut e: usize) -> BitMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = BitMatrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Left inverse on the column span: returns `b` with `b * self = id`.
    /// Panics if the columns are dependent.
    pub fn left_inverse(&self) -> BitMatrix {
        // Row-reduce [self | I_rows] and read the combination rows that
        // produce each unit vector of the domain.
        let mut rows: Vec<(u64, u64)> = (0..self.rows)
            .map(|r| {
                let mut v = 0u64;
                for c in 0..self.cols {
                    v |= ((self.col[c] >> r) & 1) << c;
                }
                (v, 1u64 << r)
            })
            .collect();
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        let mut rank = 0;
        for c in 0..self.cols {
            if let Some(p) = (rank..rows.len()).find(|&p| (rows[p].0 >> c) & 1 == 1) {
                rows.swap(rank, p);
                let (pr, pt) = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && (row.0 >> c) & 1 == 1 {
                        row.0 ^= pr;
                        row.1 ^= pt;
                    }
                }
                pivot_of_col[c] = rank;
                rank += 1;
            }
        }
        assert_eq!(rank, self.cols, "columns are not independent");
        let cols: Vec<u64> = (0..self.rows)
            .map(|r| {
                let mut v = 0u64;
                for c in 0..self.cols {
                    v |= ((rows[pivot_of_col[c]].1 >> r) & 1) << c;
                }
                v
            })
            .collect();
        BitMatrix { rows: self.cols, cols: self.rows, col: cols }
    }

    /// Whether `x` lies in the column span.
    pub fn in_span(&self, x: u64) -> bool {
        let mut basis: Vec<u64> = self.col.clone();
        let mut v = x;
        for i in 0..basis.len() {
            let lead = match basis[i..].iter().position(|&b| b != 0) {
                Some(j) => i + j,
                None => break,
            };
            basis.swap(i, lead);
            let hb = 63 - basis[i].leading_zeros();
            for j in (i + 1)..basis.len() {
                if basis[j] >> hb & 1 == 1 {
                    basis[j] ^= basis[i];
                }
            }
            if v >> hb & 1 == 1 {
                v ^= basis[i];
            }
        }
        v == 0
    }
}

/// Dense F_2 linear system with up to 128 unknowns, used for line
/// correspondences and semilinear descent equations.
pub struct BitSystem {
    pub cols: usize,
    rows: Vec<u128>,
    rhs: Vec<bool>,
}

impl BitSystem {
    pub fn new(cols: usize) -> Self {
        assert!(cols <= 128);
        BitSystem { cols, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn push(&mut self, row: u128, rhs: bool) {
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Returns `(particular, nullspace basis)`, or `None` if inconsistent.
    pub fn solve(mut self) -> Option<(u128, Vec<u128>)> {
        let n = self.cols;
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0;
        for c in 0..n {
            if let Some(p) = (rank..self.rows.len()).find(|&p| (self.rows[p] >> c) & 1 == 1) {
                self.rows.swap(rank, p);
                self.rhs.swap(rank, p);
                let (pr, pb) = (self.rows[rank], self.rhs[rank]);
                for r in 0..self.rows.len() {
                    if r != rank && (self.rows[r] >> c) & 1 == 1 {
                        self.rows[r] ^= pr;
                        self.rhs[r] ^= pb;
                    }
                }
                pivots.push(c);
                rank += 1;
            }
        }
        for r in rank..self.rows.len() {
            if self.rows[r] == 0 && self.rhs[r] {
                return None;
            }
        }
        let mut particular = 0u128;
        for (i, &c) in pivots.iter().enumerate() {
            if self.rhs[i] {
                particular |= 1 << c;
            }
        }
        let mut null = Vec::new();
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = 1u128 << free;
            for (i, &c) in pivots.iter().enumerate() {
                if (self.rows[i] >> free) & 1 == 1 {
                    v |= 1 << c;
                }
            }
            null.push(v);
        }
        Some((particular, null))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_inverse_round_trip() {
        let m = BitMatrix::from_columns(4, &[0b0011, 0b0110]);
        let li = m.left_inverse();
        for x in 0..4u64 {
            assert_eq!(li.apply(m.apply(x)), x);
        }
        assert!(m.in_span(m.apply(0b11)));
        assert!(!m.in_span(0b1000));
    }

    #[test]
    fn solve_simple_system() {
        // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
        let mut sys = BitSystem::new(3);
        sys.push(0b011, true);
        sys.push(0b110, false);
        sys.push(0b101, true);
        let (p, null) = sys.solve().unwrap();
        assert_eq!(null.len(), 1);
        for k in 0..2u128 {
            let sol = p ^ (k * null[0]);
            let (x0, x1, x2) = (sol & 1, (sol >> 1) & 1, (sol >> 2) & 1);
            assert_eq!(x0 ^ x1, 1);
            assert_eq!(x1 ^ x2, 0);
            assert_eq!(x0 ^ x2, 1);
        }
    }
}

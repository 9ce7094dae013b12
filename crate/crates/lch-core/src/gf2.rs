//! Dense bit-packed matrices over GF(2) with Gaussian elimination.
//!
//! Rows are packed into 64-bit words. Column order is fixed by the
//! caller (canonical word order in the homology modules), so ranks are
//! deterministic and reproducible.

#[derive(Debug, Clone)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix { rows, cols, words_per_row, data: vec![0; rows * words_per_row] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn set(&mut self, row: usize, col: usize) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.words_per_row + col / 64] ^= 1u64 << (col % 64);
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.words_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words_per_row, source * self.words_per_row);
        for k in 0..self.words_per_row {
            let v = self.data[s + k];
            self.data[t + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    /// Rank by forward elimination. Consumes the matrix.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            for r in rank + 1..self.rows {
                if self.get(r, col) {
                    self.xor_rows(r, rank);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Rank of the span of sparse GF(2) row vectors given as column-index
/// lists. Empty input has rank 0.
pub(crate) fn rank_of_rows(rows: &[Vec<usize>], cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let mut m = BitMatrix::new(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for &c in row {
            m.set(i, c);
        }
    }
    m.rank()
}

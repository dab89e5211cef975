//! Dense bit-packed matrices over GF(2).

#[derive(Debug, Clone)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { cols, words, data: vec![0; rows * words] }
    }

    pub fn rows(&self) -> usize {
        self.data.len() / self.words
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(c < self.cols);
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by forward elimination. Consumes the matrix.
    pub fn rank(mut self) -> usize {
        let rows = self.rows();
        let w = self.words;
        let mut rank = 0;
        for col in 0..self.cols {
            let word = col / 64;
            let bit = 1u64 << (col % 64);
            let Some(p) = (rank..rows).find(|&r| self.data[r * w + word] & bit != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..w {
                    self.data.swap(p * w + k, rank * w + k);
                }
            }
            let (head, tail) = self.data.split_at_mut((rank + 1) * w);
            let pivot = &head[rank * w..];
            for row in tail.chunks_exact_mut(w) {
                if row[word] & bit != 0 {
                    // columns before `word` are already zero in both rows
                    for k in word..w {
                        row[k] ^= pivot[k];
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by brute force: the largest k such that some k rows are independent,
    /// found by closing the row span.
    fn span_rank(rows: &[u128]) -> usize {
        let mut span = std::collections::HashSet::new();
        span.insert(0u128);
        for &r in rows {
            let add: Vec<u128> = span.iter().map(|&s| s ^ r).collect();
            span.extend(add);
        }
        span.len().trailing_zeros() as usize
    }

    proptest! {
        #[test]
        fn rank_matches_span_size(rows in proptest::collection::vec(any::<u128>(), 0..10), cols in 1usize..100) {
            let mask = if cols >= 128 { u128::MAX } else { (1u128 << cols) - 1 };
            let rows: Vec<u128> = rows.iter().map(|r| r & mask).collect();
            let mut m = BitMatrix::zeros(rows.len(), cols);
            for (i, r) in rows.iter().enumerate() {
                for c in 0..cols {
                    if r >> c & 1 == 1 {
                        m.set(i, c);
                    }
                }
            }
            prop_assert_eq!(m.rank(), span_rank(&rows));
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(BitMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
        let mut m = BitMatrix::zeros(3, 3);
        // boundary of a hollow triangle: edges 01, 02, 12 over vertices
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)] {
            m.set(r, c);
        }
        assert!(m.get(1, 2));
        assert_eq!(m.rank(), 2);
    }
}

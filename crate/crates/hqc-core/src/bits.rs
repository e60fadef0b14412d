//! Bit-packed binary vectors and matrices with GF(2) elimination.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A fixed-length bit vector packed into u64 words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if v {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[inline]
    pub fn copy_from(&mut self, src: &BitVec) {
        debug_assert_eq!(self.len, src.len);
        self.words.copy_from_slice(&src.words);
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// True when this vector's support precedes `other`'s lexicographically
    /// (as sorted index lists).
    pub fn support_lex_lt(&self, other: &BitVec) -> bool {
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // The vector holding the lowest differing set bit comes first.
                let diff = a ^ b;
                let low = diff & diff.wrapping_neg();
                return a & low != 0;
            }
        }
        false
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", format_bits(self.len, |i| self.get(i)))
    }
}

fn format_bits(len: usize, get: impl Fn(usize) -> bool) -> String {
    (0..len).map(|i| if get(i) { '1' } else { '0' }).collect()
}

/// A dense 0/1 matrix, bit-packed row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        BinaryMatrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Parses rows of '0'/'1' characters (test/format helper).
    pub fn from_rows(rows: &[&str]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |s| s.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, ch) in row.chars().enumerate() {
                m.set(i, j, ch == '1');
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.bits[r * self.words_per_row + (c >> 6)] >> (c & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + (c >> 6);
        let mask = 1u64 << (c & 63);
        if v {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.bits[r * self.words_per_row + (c >> 6)] ^= 1u64 << (c & 63);
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<BitVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_row_into(&self, r: usize, acc: &mut BitVec) {
        debug_assert_eq!(acc.len, self.cols);
        for (a, b) in acc.words.iter_mut().zip(self.row_words(r)) {
            *a ^= b;
        }
    }

    /// dst ^= src, word-wise.
    pub fn xor_row_onto(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        for w in 0..self.words_per_row {
            let v = self.bits[src * self.words_per_row + w];
            self.bits[dst * self.words_per_row + w] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words_per_row {
            self.bits.swap(a * self.words_per_row + w, b * self.words_per_row + w);
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> BinaryMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = BinaryMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.get(r0 + i, c0 + j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Multiplies by a column vector: H * x over GF(2).
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols);
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let dot: u64 = self
                .row_words(r)
                .iter()
                .zip(&x.words)
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            if dot & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let piv = (rank..self.rows).find(|&r| self.get(r, col));
            let Some(piv) = piv else { continue };
            self.swap_rows(piv, rank);
            for r in 0..self.rows {
                if r != rank && self.get(r, col) {
                    self.xor_row_onto(rank, r);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rref(&self) -> (BinaryMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of { x : H x = 0 }, one vector per free column, ordered by
    /// free column index.
    pub fn nullspace_basis(&self) -> Vec<BitVec> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in pivots.iter().enumerate() {
                if rref.get(row, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical form for row-space comparison: RREF with zero rows dropped.
    pub fn row_space_canon(&self) -> BinaryMatrix {
        let (rref, pivots) = self.rref();
        rref.submatrix(0, 0, pivots.len(), self.cols)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            writeln!(f, "{}", format_bits(self.cols, |c| self.get(r, c)))?;
        }
        if self.rows > 32 {
            writeln!(f, "...")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_flip() {
        let mut m = BinaryMatrix::zeros(3, 70);
        m.set(1, 65, true);
        assert!(m.get(1, 65));
        m.flip(1, 65);
        assert!(!m.get(1, 65));
        assert_eq!(m.count_ones(), 0);
    }

    #[test]
    fn rank_and_nullspace() {
        let m = BinaryMatrix::from_rows(&["1010", "0110", "1100"]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace_basis();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn identity_rank() {
        assert_eq!(BinaryMatrix::identity(17).rank(), 17);
    }

    #[test]
    fn row_space_canon_is_ordering_invariant() {
        let a = BinaryMatrix::from_rows(&["1010", "0110"]);
        let b = BinaryMatrix::from_rows(&["0110", "1010", "1100"]);
        assert_eq!(a.row_space_canon(), b.row_space_canon());
    }

    #[test]
    fn support_lex_order() {
        let a = BitVec::from_support(100, &[0, 3, 70]);
        let b = BitVec::from_support(100, &[1, 2, 4]);
        assert!(a.support_lex_lt(&b));
        assert!(!b.support_lex_lt(&a));
        let c = BitVec::from_support(100, &[0, 3, 71]);
        assert!(a.support_lex_lt(&c));
    }

    #[test]
    fn mul_vec_matches_columns() {
        let m = BinaryMatrix::from_rows(&["110", "011"]);
        let x = BitVec::from_support(3, &[0, 2]);
        let y = m.mul_vec(&x);
        assert_eq!(y.support(), vec![0, 1]);
    }
}

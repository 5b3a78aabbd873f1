//! Dense linear algebra over the two-element field.
//!
//! Vectors and matrix rows are packed 64 coordinates per `u64` word. Padding
//! bits past `len` are always zero, so word-wise equality and hashing are
//! exact.

use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| Self::from_bools(&b))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set coordinates, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        iter_word_ones(&self.words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// In-place `self += other` (XOR).
    pub fn xor_assign(&mut self, other: &BitVector) -> Result<(), Gf2Error> {
        self.check_len(other.len)?;
        xor_words(&mut self.words, &other.words);
        Ok(())
    }

    /// Dot product over F₂.
    pub fn dot(&self, other: &BitVector) -> Result<bool, Gf2Error> {
        self.check_len(other.len)?;
        Ok(dot_words(&self.words, &other.words))
    }

    fn check_len(&self, got: usize) -> Result<(), Gf2Error> {
        if self.len == got {
            Ok(())
        } else {
            Err(Gf2Error::DimensionMismatch {
                expected: self.len,
                got,
            })
        }
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Sum of two vectors over F₂.
pub fn vec_add(a: &BitVector, b: &BitVector) -> Result<BitVector, Gf2Error> {
    let mut out = a.clone();
    out.xor_assign(b)?;
    Ok(out)
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub(crate) fn iter_word_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            }
        })
    })
}

/// A dense matrix over F₂, stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. Every row must have `cols`
    /// entries.
    pub fn from_rows(cols: usize, rows: &[Vec<u8>]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Gf2Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for (c, &x) in row.iter().enumerate() {
                if x & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let mask = 1u64 << (c % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in iter_word_ones(self.row_words(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `M·x` over F₂.
    pub fn matvec(&self, x: &BitVector) -> Result<BitVector, Gf2Error> {
        if x.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if dot_words(self.row_words(r), x.words()) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Rank over F₂.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.reduce_in_place().len()
    }

    /// Basis of `{x : M·x = 0}`.
    ///
    /// One vector per free column, taken in ascending column order: the free
    /// coordinate is 1, the other free coordinates are 0 and the pivot
    /// coordinates are read off the reduced row echelon form. The output is a
    /// deterministic function of the matrix.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let mut work = self.clone();
        let pivots = work.reduce_in_place();

        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }

        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::unit(self.cols, free);
                for (r, &pc) in pivots.iter().enumerate() {
                    if work.get(r, free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Gauss-Jordan elimination to reduced row echelon form. Pivots are
    /// chosen scanning columns left to right and, within a column, rows top
    /// to bottom. Returns the pivot column of each of the leading rows.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let stride = self.stride;
        let mut pivots = Vec::new();
        let mut pivot_row = vec![0u64; stride];
        let mut next = 0;

        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let (wi, mask) = (col / WORD, 1u64 << (col % WORD));
            let Some(found) = (next..self.rows).find(|&r| self.data[r * stride + wi] & mask != 0)
            else {
                continue;
            };
            if found != next {
                for k in 0..stride {
                    self.data.swap(found * stride + k, next * stride + k);
                }
            }
            pivot_row.copy_from_slice(&self.data[next * stride..(next + 1) * stride]);

            // Entries left of `wi` in the pivot row are zero, so XOR can start there.
            for r in 0..self.rows {
                if r != next && self.data[r * stride + wi] & mask != 0 {
                    xor_words(
                        &mut self.data[r * stride + wi..(r + 1) * stride],
                        &pivot_row[wi..],
                    );
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        write!(f, "]")
    }
}

//! Word-packed binary vectors and matrices over GF(2).
//!
//! Position 0 of a [`BitVector`] is the leftmost character of its printed
//! form. Internally position `i` lives in bit `i % 64` of word `i / 64`, and
//! bits past the logical length are always zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Fixed-length binary word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        BitVector { len, words }
    }

    /// Builds a vector from raw words; padding bits are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = BitVector { len, words };
        v.clear_padding();
        v
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitVector) -> Self {
        BitVector::from_bits(self.iter().chain(other.iter()))
    }

    /// Bits `[start, end)` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len, "slice out of range");
        BitVector::from_bits((start..end).map(|i| self.get(i)))
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
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positions holding a one, ascending.
    pub fn ones_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_len(&self, other: &BitVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &BitVector) -> Result<()> {
        self.check_len(other)?;
        self.xor_words(other);
        Ok(())
    }

    #[inline]
    pub(crate) fn xor_words(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitVector) -> Result<BitVector> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a & b))
    }

    pub fn or(&self, other: &BitVector) -> Result<BitVector> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a | b))
    }

    fn zip_with(&self, other: &BitVector, f: impl Fn(u64, u64) -> u64) -> BitVector {
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dot_words(other))
    }

    #[inline]
    pub(crate) fn dot_words(&self, other: &BitVector) -> bool {
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Cyclic left rotation: position `i` of the result is position
    /// `(i + t) mod len` of `self`.
    pub fn rotate_left(&self, t: usize) -> BitVector {
        if self.len == 0 {
            return self.clone();
        }
        let shift = t % self.len;
        BitVector::from_bits((0..self.len).map(|i| self.get((i + shift) % self.len)))
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(BitVector::from_bits(bits))
    }
}

impl Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense binary matrix stored as rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_cols: usize,
    rows: Vec<BitVector>,
}

impl Gf2Matrix {
    pub fn new(n_cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::LengthMismatch {
                expected: n_cols,
                found: bad.len(),
            });
        }
        Ok(Gf2Matrix { n_cols, rows })
    }

    pub fn empty(n_cols: usize) -> Self {
        Gf2Matrix {
            n_cols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Gf2Matrix {
            n_cols,
            rows: vec![BitVector::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = BitVector::zeros(n);
                v.set(i, true);
                v
            })
            .collect();
        Gf2Matrix { n_cols: n, rows }
    }

    /// Parses rows of '0'/'1' characters; all rows must share a length.
    pub fn from_strs(n_cols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows.iter().map(|s| s.parse()).collect::<Result<Vec<BitVector>>>()?;
        Gf2Matrix::new(n_cols, rows)
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns onto {}",
                other.n_cols, self.n_cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Gf2Matrix {
            n_cols: self.n_cols,
            rows,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    /// Reduced row-echelon form together with the pivot column of each
    /// nonzero row. Pivots are chosen leftmost column first, topmost
    /// candidate row first. Zero rows end up at the bottom.
    pub fn rref_with_pivots(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.n_cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_words(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        (
            Gf2Matrix {
                n_cols: self.n_cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> Gf2Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_basis(&self) -> Gf2Matrix {
        let (mut reduced, pivots) = self.rref_with_pivots();
        reduced.rows.truncate(pivots.len());
        reduced
    }

    /// Basis of `{v : self · v^T = 0}`, one vector per free column in
    /// ascending column order.
    pub fn nullspace(&self) -> Gf2Matrix {
        let (reduced, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n_cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.n_cols);
                v.set(free, true);
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        Gf2Matrix {
            n_cols: self.n_cols,
            rows,
        }
    }

    pub fn rowspace_contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.n_cols {
            return Err(Error::LengthMismatch {
                expected: self.n_cols,
                found: v.len(),
            });
        }
        Ok(RowReducer::new(self).contains(v))
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn rowspace_includes(&self, other: &Gf2Matrix) -> Result<bool> {
        if other.n_cols != self.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "column counts differ: {} vs {}",
                self.n_cols, other.n_cols
            )));
        }
        let reducer = RowReducer::new(self);
        Ok(other.rows.iter().all(|r| reducer.contains(r)))
    }

    /// Row-space equality by mutual containment.
    pub fn same_rowspace(&self, other: &Gf2Matrix) -> Result<bool> {
        Ok(self.rowspace_includes(other)? && other.rowspace_includes(self)?)
    }

    /// `self · other^T`: entry (i, j) is the parity of row i of `self` AND
    /// row j of `other`.
    pub fn mat_mul_transpose(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "mat_mul_transpose needs equal column counts, got {} and {}",
                self.n_cols, other.n_cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|a| BitVector::from_bits(other.rows.iter().map(|b| a.dot_words(b))))
            .collect();
        Ok(Gf2Matrix {
            n_cols: other.n_rows(),
            rows,
        })
    }

    /// Columns `[start, end)` of every row.
    pub fn columns(&self, start: usize, end: usize) -> Gf2Matrix {
        Gf2Matrix {
            n_cols: end - start,
            rows: self.rows.iter().map(|r| r.slice(start, end)).collect(),
        }
    }

    /// Side-by-side concatenation `(self | other)`.
    pub fn hconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n_rows() != other.n_rows() {
            return Err(Error::DimensionMismatch(format!(
                "row counts differ: {} vs {}",
                self.n_rows(),
                other.n_rows()
            )));
        }
        Ok(Gf2Matrix {
            n_cols: self.n_cols + other.n_cols,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect(),
        })
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.n_rows(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Precomputed echelon basis for repeated membership queries.
#[derive(Clone, Debug)]
pub struct RowReducer {
    basis: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(m: &Gf2Matrix) -> Self {
        let (reduced, pivots) = m.rref_with_pivots();
        let mut basis = reduced.into_rows();
        basis.truncate(pivots.len());
        RowReducer { basis, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` in place against the basis; the residue is zero iff `v`
    /// was in the row space.
    pub fn reduce(&self, v: &mut BitVector) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_words(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut scratch = v.clone();
        self.reduce(&mut scratch);
        scratch.is_zero()
    }
}

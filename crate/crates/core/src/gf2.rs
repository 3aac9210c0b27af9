//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are packed into `u64` words so the hot loops (row elimination,
//! codeword enumeration) reduce to word-wide XOR and population count.
//! All values are immutable after construction and safe to share across
//! worker threads.

use std::fmt;

use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::{Error, Result};

/// Name of the seedable PRNG used by every randomized routine in the crate,
/// recorded in reports so runs can be reproduced.
pub const PRNG_NAME: &str = "chacha12";

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length bit vector. Unused high bits of the last word are kept
/// zero so that equality, hashing and popcounts are word-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            if f(i) {
                v.set(i, true);
            }
        }
        v
    }

    /// Parse a string of '0'/'1' characters.
    pub fn from_binary_str(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unexpected character {other:?} in bit string"),
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        debug_assert_eq!(self.len, other.len);
        BitVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        debug_assert_eq!(self.len, other.len);
        BitVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Parity of the bitwise AND: the GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Concatenate two vectors into one of length `self.len + other.len`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        BitVec::from_fn(self.len + other.len, |i| {
            if i < self.len {
                self.get(i)
            } else {
                other.get(i - self.len)
            }
        })
    }

    /// Split at `mid` into left and right halves.
    pub fn split_at(&self, mid: usize) -> (BitVec, BitVec) {
        assert!(mid <= self.len);
        (
            BitVec::from_fn(mid, |i| self.get(i)),
            BitVec::from_fn(self.len - mid, |i| self.get(mid + i)),
        )
    }

    /// Cyclic right rotation: bit `j` of the result is bit `(j - k) mod len`.
    pub fn rotate_right(&self, k: usize) -> BitVec {
        let n = self.len;
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        BitVec::from_fn(n, |j| self.get((j + n - k) % n))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Result of row reduction: the reduced matrix, its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// A dense bit-packed matrix over GF(2). Row-major storage with a fixed
/// word stride per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n_rows: usize,
    n_cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let stride = words_for(n_cols).max(1);
        BitMatrix {
            n_rows,
            n_cols,
            stride,
            data: vec![0; n_rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, BitVec::len);
        for r in rows {
            if r.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    context: "from_rows",
                    expected: n_cols,
                    got: r.len(),
                });
            }
        }
        let mut m = BitMatrix::zeros(rows.len(), n_cols);
        for (i, r) in rows.iter().enumerate() {
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Test helper and fixture constructor: one '0'/'1' string per row.
    pub fn from_binary_rows(rows: &[&str]) -> Self {
        let parsed: Vec<BitVec> = rows
            .iter()
            .map(|s| BitVec::from_binary_str(s).expect("valid bit string"))
            .collect();
        BitMatrix::from_rows(&parsed).expect("equal row lengths")
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        let idx = i * self.stride + j / WORD_BITS;
        if value {
            self.data[idx] |= 1 << (j % WORD_BITS);
        } else {
            self.data[idx] &= !(1 << (j % WORD_BITS));
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec {
            len: self.n_cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.n_rows).map(move |i| self.row(i))
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let (a, b) = (target * self.stride, source * self.stride);
        for w in 0..self.stride {
            self.data[a + w] ^= self.data[b + w];
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.n_rows != self.n_cols {
            return false;
        }
        for i in 0..self.n_rows {
            for j in i + 1..self.n_cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Row-reduced echelon form. Pivoting always takes the lowest-index
    /// available column, so the result is deterministic.
    pub fn rref(&self) -> Rref {
        self.rref_with_transform().0
    }

    /// As [`rref`](Self::rref), additionally returning the invertible
    /// transform `T` with `T * self = rref` (row operations applied to I).
    pub fn rref_with_transform(&self) -> (Rref, BitMatrix) {
        let mut m = self.clone();
        let mut t = BitMatrix::identity(self.n_rows);
        let mut rank = 0;
        let mut pivot_cols = Vec::new();
        for col in 0..self.n_cols {
            let Some(pivot) = (rank..self.n_rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            t.swap_rows(rank, pivot);
            for r in 0..self.n_rows {
                if r != rank && m.get(r, col) {
                    m.xor_rows(r, rank);
                    t.xor_rows(r, rank);
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == self.n_rows {
                break;
            }
        }
        (
            Rref {
                matrix: m,
                rank,
                pivot_cols,
            },
            t,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solve `x * self = b` for a row vector `x`, i.e. decide row-space
    /// membership of `b` and return the combination coefficients.
    pub fn solve_left(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.n_cols {
            return Err(Error::DimensionMismatch {
                context: "solve_left",
                expected: self.n_cols,
                got: b.len(),
            });
        }
        let (rref, t) = self.rref_with_transform();
        let mut residual = b.clone();
        let mut x = BitVec::zeros(self.n_rows);
        for (i, &p) in rref.pivot_cols.iter().enumerate() {
            if residual.get(p) {
                residual.xor_assign(&rref.matrix.row(i));
                x.xor_assign(&t.row(i));
            }
        }
        if residual.is_zero() {
            Ok(Some(x))
        } else {
            Ok(None)
        }
    }

    /// Basis of the right kernel `{x : self * x^T = 0}`, one basis vector
    /// per row. Row count equals `n_cols - rank`.
    pub fn kernel_basis(&self) -> BitMatrix {
        let rref = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.n_cols];
            for (i, &p) in rref.pivot_cols.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let free_cols: Vec<usize> = (0..self.n_cols).filter(|&c| pivot_set[c].is_none()).collect();
        let mut basis = BitMatrix::zeros(free_cols.len(), self.n_cols);
        for (bi, &f) in free_cols.iter().enumerate() {
            basis.set(bi, f, true);
            for (i, &p) in rref.pivot_cols.iter().enumerate() {
                if rref.matrix.get(i, f) {
                    basis.set(bi, p, true);
                }
            }
        }
        basis
    }

    /// Inverse of a nonsingular square matrix.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if self.n_rows != self.n_cols {
            return Err(Error::DimensionMismatch {
                context: "inverse",
                expected: self.n_rows,
                got: self.n_cols,
            });
        }
        let (rref, t) = self.rref_with_transform();
        if rref.rank < self.n_rows {
            return Err(Error::Singular);
        }
        Ok(t)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::DimensionMismatch {
                context: "mul",
                expected: self.n_cols,
                got: rhs.n_rows,
            });
        }
        let mut out = BitMatrix::zeros(self.n_rows, rhs.n_cols);
        for i in 0..self.n_rows {
            for (w, &word) in self.row_words(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let (a, b) = (i * out.stride, j * rhs.stride);
                    for k in 0..out.stride {
                        out.data[a + k] ^= rhs.data[b + k];
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * rhs^T`, computed entry-wise as row-pair inner products.
    pub fn mul_transpose(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != rhs.n_cols {
            return Err(Error::DimensionMismatch {
                context: "mul_transpose",
                expected: self.n_cols,
                got: rhs.n_cols,
            });
        }
        let mut out = BitMatrix::zeros(self.n_rows, rhs.n_rows);
        for i in 0..self.n_rows {
            for j in 0..rhs.n_rows {
                let ones: u32 = self
                    .row_words(i)
                    .iter()
                    .zip(rhs.row_words(j))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if ones & 1 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Entry-wise XOR.
    pub fn xor(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_rows != rhs.n_rows || self.n_cols != rhs.n_cols {
            return Err(Error::DimensionMismatch {
                context: "xor",
                expected: self.n_rows * self.n_cols,
                got: rhs.n_rows * rhs.n_cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n_cols, self.n_rows, |i, j| self.get(j, i))
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_rows != rhs.n_rows {
            return Err(Error::DimensionMismatch {
                context: "hstack",
                expected: self.n_rows,
                got: rhs.n_rows,
            });
        }
        Ok(BitMatrix::from_fn(
            self.n_rows,
            self.n_cols + rhs.n_cols,
            |i, j| {
                if j < self.n_cols {
                    self.get(i, j)
                } else {
                    rhs.get(i, j - self.n_cols)
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, bottom: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != bottom.n_cols && self.n_rows != 0 && bottom.n_rows != 0 {
            return Err(Error::DimensionMismatch {
                context: "vstack",
                expected: self.n_cols,
                got: bottom.n_cols,
            });
        }
        if self.n_rows == 0 {
            return Ok(bottom.clone());
        }
        if bottom.n_rows == 0 {
            return Ok(self.clone());
        }
        Ok(BitMatrix::from_fn(
            self.n_rows + bottom.n_rows,
            self.n_cols,
            |i, j| {
                if i < self.n_rows {
                    self.get(i, j)
                } else {
                    bottom.get(i - self.n_rows, j)
                }
            },
        ))
    }

    /// Copy of the column range `[from, to)`.
    pub fn col_range(&self, from: usize, to: usize) -> BitMatrix {
        assert!(from <= to && to <= self.n_cols);
        BitMatrix::from_fn(self.n_rows, to - from, |i, j| self.get(i, from + j))
    }

    pub fn select_rows(&self, indices: &[usize]) -> BitMatrix {
        BitMatrix::from_fn(indices.len(), self.n_cols, |i, j| self.get(indices[i], j))
    }

    /// Indices of a maximal independent subset of the original rows,
    /// chosen greedily from the top.
    pub fn row_basis_indices(&self) -> Vec<usize> {
        let mut reduced: Vec<BitVec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut kept = Vec::new();
        for i in 0..self.n_rows {
            let mut r = self.row(i);
            for (v, &p) in reduced.iter().zip(&pivots) {
                if r.get(p) {
                    r.xor_assign(v);
                }
            }
            if let Some(p) = (0..self.n_cols).find(|&c| r.get(c)) {
                reduced.push(r);
                pivots.push(p);
                kept.push(i);
            }
        }
        kept
    }

    /// Right-multiply by the 0/1 matrix of `perm`: column `c` of `self`
    /// becomes column `perm.apply(c)` of the result.
    pub fn permute_columns(&self, perm: &Permutation) -> Result<BitMatrix> {
        if perm.len() != self.n_cols {
            return Err(Error::DimensionMismatch {
                context: "permute_columns",
                expected: self.n_cols,
                got: perm.len(),
            });
        }
        let mut out = BitMatrix::zeros(self.n_rows, self.n_cols);
        for i in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.get(i, c) {
                    out.set(i, perm.apply(c), true);
                }
            }
        }
        Ok(out)
    }

    /// Each bit independently 1 with probability `p1`, deterministic for a
    /// fixed seed.
    pub fn random(n_rows: usize, n_cols: usize, p1: f64, seed: u64) -> Result<BitMatrix> {
        let dist = Bernoulli::new(p1).map_err(|_| Error::InvalidProbability(p1))?;
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        Ok(BitMatrix::from_fn(n_rows, n_cols, |_, _| {
            dist.sample(&mut rng)
        }))
    }

    /// Render as text rows, inserting a '|' after column `split` when given.
    pub fn to_row_strings(&self, split: Option<usize>) -> Vec<String> {
        (0..self.n_rows)
            .map(|i| {
                let mut s = String::with_capacity(self.n_cols + 1);
                for j in 0..self.n_cols {
                    if split == Some(j) {
                        s.push('|');
                    }
                    s.push(if self.get(i, j) { '1' } else { '0' });
                }
                if split == Some(self.n_cols) {
                    s.push('|');
                }
                s
            })
            .collect()
    }

    pub fn to_text(&self, split: Option<usize>) -> String {
        let mut s = self.to_row_strings(split).join("\n");
        s.push('\n');
        s
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_row_strings(None) {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows, self.n_cols)?;
        for line in self.to_row_strings(None) {
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

/// Parse the repo-wide matrix text format: one row of '0'/'1' per line, an
/// optional single '|' separator at a consistent position, blank lines
/// ignored, '#' starts a comment.
pub fn parse_matrix(text: &str) -> Result<(BitMatrix, Option<usize>)> {
    let mut rows: Vec<BitVec> = Vec::new();
    let mut split: Option<usize> = None;
    let mut first_data_line = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let mut bits = Vec::new();
        let mut line_split: Option<usize> = None;
        for c in line.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '|' => {
                    if line_split.is_some() {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: "more than one '|' separator".into(),
                        });
                    }
                    line_split = Some(bits.len());
                }
                c if c.is_whitespace() => {}
                other => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("unexpected character {other:?}"),
                    });
                }
            }
        }
        if first_data_line {
            split = line_split;
            first_data_line = false;
        } else if line_split != split {
            return Err(Error::Parse {
                line: lineno,
                msg: "inconsistent '|' separator position".into(),
            });
        }
        if let Some(first) = rows.first() {
            if bits.len() != first.len() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("row has {} columns, expected {}", bits.len(), first.len()),
                });
            }
        }
        rows.push(BitVec::from_fn(bits.len(), |i| bits[i]));
    }
    if rows.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    Ok((BitMatrix::from_rows(&rows)?, split))
}

/// A permutation of `{0..n-1}`, stored as the image array: index `i` maps
/// to `image[i]`. The induced 0/1 matrix `P` has `P[i][image[i]] = 1` and
/// satisfies `P * P^T = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::NotAPermutation(image));
            }
            seen[j] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// The transposition of `a` and `b` on `{0..n-1}`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Matrix product `self * rhs` in the 0/1 representation: applying the
    /// result to a row vector equals applying `self`, then `rhs`.
    pub fn product(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), rhs.len());
        Permutation {
            image: self.image.iter().map(|&j| rhs.image[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Permutation { image }
    }

    /// Materialize the 0/1 matrix form (display and verification only).
    pub fn to_matrix(&self) -> BitMatrix {
        let n = self.image.len();
        let mut m = BitMatrix::zeros(n, n);
        for (i, &j) in self.image.iter().enumerate() {
            m.set(i, j, true);
        }
        m
    }

    /// Block-diagonal permutation `diag(I_left, self)` on `left + n` points.
    pub fn block_with_identity(&self, left: usize) -> Permutation {
        let mut image: Vec<usize> = (0..left).collect();
        image.extend(self.image.iter().map(|&j| left + j));
        Permutation { image }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq1_check_matrix() -> BitMatrix {
        BitMatrix::from_binary_rows(&[
            "1001001100",
            "0100100110",
            "1010000011",
            "0101010001",
        ])
    }

    #[test]
    fn rref_identity_is_identity() {
        let m = BitMatrix::identity(4);
        let r = m.rref();
        assert_eq!(r.rank, 4);
        assert_eq!(r.matrix, m);
        assert_eq!(r.pivot_cols, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_five_qubit_rank_four() {
        assert_eq!(eq1_check_matrix().rank(), 4);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = BitMatrix::zeros(3, 5);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());
    }

    #[test]
    fn rref_is_idempotent() {
        let m = BitMatrix::random(7, 11, 0.4, 99).unwrap();
        let first = m.rref();
        let second = first.matrix.rref();
        assert_eq!(first.matrix, second.matrix);
        assert_eq!(first.rank, second.rank);
    }

    #[test]
    fn solve_left_identity_returns_rhs() {
        let a = BitMatrix::identity(6);
        let b = BitVec::from_binary_str("011010").unwrap();
        assert_eq!(a.solve_left(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_left_zero_vector_always_solvable() {
        let a = BitMatrix::random(4, 9, 0.5, 3).unwrap();
        let x = a.solve_left(&BitVec::zeros(9)).unwrap().unwrap();
        assert!(x.is_zero() || {
            // any solution must reproduce the zero vector
            let mut acc = BitVec::zeros(9);
            for i in 0..4 {
                if x.get(i) {
                    acc.xor_assign(&a.row(i));
                }
            }
            acc.is_zero()
        });
    }

    #[test]
    fn solve_left_outside_row_space() {
        let a = BitMatrix::from_binary_rows(&["1100", "1100"]); // rank 1
        let b = BitVec::from_binary_str("0011").unwrap();
        assert!(a.solve_left(&b).unwrap().is_none());
    }

    #[test]
    fn solve_left_dimension_mismatch() {
        let a = BitMatrix::identity(3);
        let b = BitVec::zeros(4);
        assert!(a.solve_left(&b).is_err());
    }

    #[test]
    fn inverse_identity() {
        let i = BitMatrix::identity(5);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn inverse_companion_multiplies_back() {
        // companion matrix of x^3 + x + 1
        let c = BitMatrix::from_binary_rows(&["010", "001", "110"]);
        let inv = c.inverse().unwrap();
        assert_eq!(c.mul(&inv).unwrap(), BitMatrix::identity(3));
        assert_eq!(inv.mul(&c).unwrap(), BitMatrix::identity(3));
    }

    #[test]
    fn inverse_singular_1x1() {
        let z = BitMatrix::zeros(1, 1);
        assert!(matches!(z.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn inverse_is_involution() {
        for seed in 0..20u64 {
            let m = BitMatrix::random(6, 6, 0.5, seed).unwrap();
            if let Ok(inv) = m.inverse() {
                assert_eq!(inv.inverse().unwrap(), m);
            }
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = BitMatrix::identity(4).kernel_basis();
        assert_eq!(k.n_rows(), 0);
        assert_eq!(k.n_cols(), 4);
    }

    #[test]
    fn kernel_of_all_ones_row_is_even_weight_code() {
        let m = BitMatrix::from_binary_rows(&["11111"]);
        let k = m.kernel_basis();
        assert_eq!(k.n_rows(), 4);
        for i in 0..k.n_rows() {
            assert_eq!(k.row(i).count_ones() % 2, 0);
        }
    }

    #[test]
    fn kernel_rows_annihilate() {
        for seed in 0..10u64 {
            let m = BitMatrix::random(5, 12, 0.35, seed).unwrap();
            let k = m.kernel_basis();
            assert_eq!(k.n_rows(), 12 - m.rank());
            assert!(m.mul_transpose(&k).unwrap().is_zero());
            assert_eq!(k.rank(), k.n_rows());
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        for seed in 0..25u64 {
            let m = BitMatrix::random(9, 14, 0.3, seed).unwrap();
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn permute_identity_is_noop() {
        let m = BitMatrix::random(3, 8, 0.5, 7).unwrap();
        assert_eq!(m.permute_columns(&Permutation::identity(8)).unwrap(), m);
    }

    #[test]
    fn permute_swap_two_columns() {
        let m = BitMatrix::from_binary_rows(&["10"]);
        let p = Permutation::transposition(2, 0, 1);
        assert_eq!(
            m.permute_columns(&p).unwrap(),
            BitMatrix::from_binary_rows(&["01"])
        );
    }

    #[test]
    fn permutation_preserves_rank() {
        let m = BitMatrix::random(6, 10, 0.4, 31).unwrap();
        let p = Permutation::new(vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7]).unwrap();
        assert_eq!(m.permute_columns(&p).unwrap().rank(), m.rank());
    }

    #[test]
    fn permutation_matrix_orthogonal() {
        let p = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        let pm = p.to_matrix();
        assert_eq!(pm.mul_transpose(&pm).unwrap(), BitMatrix::identity(4));
        assert_eq!(p.product(&p.inverse()), Permutation::identity(4));
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert!(BitMatrix::random(4, 6, 0.0, 1).unwrap().is_zero());
        let ones = BitMatrix::random(4, 6, 1.0, 1).unwrap();
        assert!((0..4).all(|i| ones.row(i).count_ones() == 6));
        let a = BitMatrix::random(8, 8, 0.5, 42).unwrap();
        let b = BitMatrix::random(8, 8, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert!(BitMatrix::random(2, 2, 1.5, 0).is_err());
    }

    #[test]
    fn parse_round_trip_with_separator() {
        let text = "# five-qubit\n10010|01100\n01001|00110\n\n10100|00011\n01010|10001\n";
        let (m, split) = parse_matrix(text).unwrap();
        assert_eq!(split, Some(5));
        assert_eq!(m.n_rows(), 4);
        assert_eq!(m.n_cols(), 10);
        let (again, split2) = parse_matrix(&m.to_text(split)).unwrap();
        assert_eq!(again, m);
        assert_eq!(split2, split);
    }

    #[test]
    fn parse_rejects_ragged_rows() {
        let err = parse_matrix("101\n10\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn parse_rejects_empty() {
        assert!(matches!(
            parse_matrix("# only comments\n\n"),
            Err(Error::EmptyMatrix)
        ));
    }

    #[test]
    fn row_basis_selects_independent_rows() {
        let m = BitMatrix::from_binary_rows(&["1100", "0110", "1010", "0001"]);
        // row 2 = row 0 + row 1
        assert_eq!(m.row_basis_indices(), vec![0, 1, 3]);
    }

    #[test]
    fn bitvec_rotate_and_dot() {
        let v = BitVec::from_binary_str("10000").unwrap();
        assert_eq!(v.rotate_right(1).to_string(), "01000");
        assert_eq!(v.rotate_right(5), v);
        let a = BitVec::from_binary_str("1101").unwrap();
        let b = BitVec::from_binary_str("1011").unwrap();
        assert!(!a.dot(&b)); // overlap 1,4 -> two ones
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_matrix(max_dim: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(any::<bool>(), r * c)
                .prop_map(move |bits| BitMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
        })
    }

    proptest! {
        #[test]
        fn gauss_is_idempotent(m in arb_matrix(12)) {
            let first = m.rref();
            let second = first.matrix.rref();
            prop_assert_eq!(&first.matrix, &second.matrix);
            prop_assert_eq!(first.rank, second.rank);
            prop_assert_eq!(first.pivot_cols, second.pivot_cols);
        }

        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix(16)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn inverse_is_involution(m in arb_matrix(8)) {
            if m.n_rows() == m.n_cols() {
                if let Ok(inv) = m.inverse() {
                    prop_assert_eq!(inv.inverse().unwrap(), m.clone());
                    prop_assert_eq!(m.mul(&inv).unwrap(), BitMatrix::identity(m.n_rows()));
                }
            }
        }

        #[test]
        fn kernel_annihilates_and_has_complementary_rank(m in arb_matrix(12)) {
            let k = m.kernel_basis();
            prop_assert!(m.mul_transpose(&k).unwrap().is_zero());
            prop_assert_eq!(k.n_rows(), m.n_cols() - m.rank());
            prop_assert_eq!(k.rank(), k.n_rows());
        }

        #[test]
        fn solve_left_round_trips_row_space_members(m in arb_matrix(10), coeffs in proptest::collection::vec(any::<bool>(), 10)) {
            let mut b = BitVec::zeros(m.n_cols());
            for i in 0..m.n_rows() {
                if coeffs[i % coeffs.len()] {
                    b.xor_assign(&m.row(i));
                }
            }
            let x = m.solve_left(&b).unwrap().expect("b is in the row space");
            let mut back = BitVec::zeros(m.n_cols());
            for i in 0..m.n_rows() {
                if x.get(i) {
                    back.xor_assign(&m.row(i));
                }
            }
            prop_assert_eq!(back, b);
        }

        #[test]
        fn column_permutation_preserves_rank(m in arb_matrix(10), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut image: Vec<usize> = (0..m.n_cols()).collect();
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            image.shuffle(&mut rng);
            let p = Permutation::new(image).unwrap();
            prop_assert_eq!(m.permute_columns(&p).unwrap().rank(), m.rank());
        }

        #[test]
        fn matrix_text_round_trips(m in arb_matrix(10)) {
            let (parsed, split) = parse_matrix(&m.to_text(None)).unwrap();
            prop_assert_eq!(parsed, m);
            prop_assert_eq!(split, None);
        }
    }
}

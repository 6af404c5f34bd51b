//! Dense linear algebra over F₂ with machine-word-packed rows.
//!
//! Everything downstream (Pauli vectors, symplectic matrices, code
//! tableaux) is built on [`BinVec`] and [`BinMatrix`]. Rows are packed
//! into `u64` words; matrix multiplication is row-by-row XOR
//! accumulation.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A bit vector over F₂.
///
/// Bits beyond `len` in the backing words are kept at zero, so equality
/// and hashing can use the raw words directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinVec {
    len: usize,
    words: Vec<u64>,
}

impl BinVec {
    pub fn zeros(len: usize) -> Self {
        BinVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BinVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
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
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BinVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BinVec) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len, other.len
            )));
        }
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        Ok(acc == 1)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Display for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A dense matrix over F₂, stored row-major in packed words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BinMatrix {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BinVec]) -> Result<Self> {
        let cols = rows.first().map_or(0, BinVec::len);
        let mut m = BinMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has length {}, expected {}",
                    i,
                    r.len(),
                    cols
                )));
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
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
        let w = self.words[r * self.words_per_row + c / WORD_BITS];
        (w >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            self.words[idx] |= mask;
        } else {
            self.words[idx] &= !mask;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn row(&self, r: usize) -> BinVec {
        BinVec {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn set_row(&mut self, r: usize, v: &BinVec) {
        debug_assert_eq!(v.len(), self.cols);
        self.row_words_mut(r).copy_from_slice(v.words());
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.row_words(r).iter().all(|&w| w == 0)
    }

    /// XOR row `src` into row `dst`.
    pub fn row_xor(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
        let (a, b) = self.words.split_at_mut(hi * self.words_per_row);
        let lo_row = &a[lo * self.words_per_row..(lo + 1) * self.words_per_row];
        let hi_row = &mut b[..self.words_per_row];
        if dst > src {
            for (d, s) in hi_row.iter_mut().zip(lo_row) {
                *d ^= s;
            }
        } else {
            // dst < src: need mutable access to the low row instead.
            let src_copy: Vec<u64> = hi_row.to_vec();
            let dst_row = &mut a[dst * self.words_per_row..(dst + 1) * self.words_per_row];
            for (d, s) in dst_row.iter_mut().zip(&src_copy) {
                *d ^= s;
            }
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words_per_row {
            self.words.swap(a * self.words_per_row + w, b * self.words_per_row + w);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let va = self.get(r, a);
            let vb = self.get(r, b);
            self.set(r, a, vb);
            self.set(r, b, va);
        }
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let c = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = BinMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (wi, &w) in self.row_words(i).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let src = rhs.row_words(j).to_vec();
                    for (d, s) in out.row_words_mut(i).iter_mut().zip(&src) {
                        *d ^= s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix acting on a column vector: `out[i] = row_i · v`.
    pub fn mul_vec(&self, v: &BinVec) -> Result<BinVec> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = BinVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u32;
            for (a, b) in self.row_words(i).iter().zip(v.words()) {
                acc ^= (a & b).count_ones() & 1;
            }
            if acc == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BinMatrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn pow(&self, mut e: u64) -> Result<BinMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "pow of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut result = BinMatrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        gaussian_echelon(&mut work, None).len()
    }

    pub fn inverse(&self) -> Result<BinMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = BinMatrix::identity(n);
        let mut pivot_row = 0;
        for col in 0..n {
            let Some(r) = (pivot_row..n).find(|&r| work.get(r, col)) else {
                return Err(Error::Singular);
            };
            work.swap_rows(pivot_row, r);
            inv.swap_rows(pivot_row, r);
            for r in 0..n {
                if r != pivot_row && work.get(r, col) {
                    work.row_xor(r, pivot_row);
                    inv.row_xor(r, pivot_row);
                }
            }
            pivot_row += 1;
        }
        Ok(inv)
    }

    /// Solve `self · x = b` for column vector `x` (unique solution required).
    pub fn solve(&self, b: &BinVec) -> Result<BinVec> {
        if self.rows != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} equations, rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let inv = self.inverse()?;
        inv.mul_vec(b)
    }

    /// Render as lines of '0'/'1' characters, row-major.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parse lines of '0'/'1' characters. All lines must have equal length.
    pub fn parse_text(input: &str) -> Result<BinMatrix> {
        let lines: Vec<&str> = input
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        if lines.is_empty() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty matrix".into(),
            });
        }
        let cols = lines[0].len();
        let mut m = BinMatrix::zeros(lines.len(), cols);
        for (r, l) in lines.iter().enumerate() {
            if l.len() != cols {
                return Err(Error::Parse {
                    line: r + 1,
                    column: l.len() + 1,
                    message: format!("expected {} columns, found {}", cols, l.len()),
                });
            }
            for (c, ch) in l.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    other => {
                        return Err(Error::Parse {
                            line: r + 1,
                            column: c + 1,
                            message: format!("expected '0' or '1', found {:?}", other),
                        });
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| if self.get(r, c) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{}:", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        Ok(())
    }
}

/// Reduce `m` in place to row echelon form; returns pivot columns.
///
/// When `col_limit` is given, only columns `0..col_limit` are eligible
/// as pivots (rows may still carry data beyond the limit).
pub(crate) fn gaussian_echelon(m: &mut BinMatrix, col_limit: Option<usize>) -> Vec<usize> {
    let cols = col_limit.unwrap_or(m.cols());
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(r) = (pivot_row..m.rows()).find(|&r| m.get(r, col)) else {
            continue;
        };
        m.swap_rows(pivot_row, r);
        for r in 0..m.rows() {
            if r != pivot_row && m.get(r, col) {
                m.row_xor(r, pivot_row);
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == m.rows() {
            break;
        }
    }
    pivots
}

/// Row space of a matrix in reduced echelon form, for fast membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    echelon: BinMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BinMatrix) -> RowSpace {
        let mut echelon = m.clone();
        let pivots = gaussian_echelon(&mut echelon, None);
        RowSpace { echelon, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the echelon basis; the residual is zero iff
    /// `v` lies in the row space.
    pub fn reduce(&self, v: &BinVec) -> BinVec {
        let mut res = v.clone();
        for (row, &col) in self.pivots.iter().enumerate() {
            if res.get(col) {
                res.xor_assign(&self.echelon.row(row));
            }
        }
        res
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        self.reduce(v).is_zero()
    }
}

//! Linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words. A [`ReducedBasis`] keeps one row
//! per pivot, where the pivot of a row is its largest nonzero coordinate
//! under a caller-supplied total order. With that convention the coordinates
//! that never become pivots are exactly the complement of the span's
//! "leading terms", which is what the hit-space code relies on.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    words: Vec<u64>,
    len: usize,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector { words: vec![0; words_for(len)], len }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        let mut v = Self::zeros(len);
        v.set(i, true)?;
        Ok(v)
    }

    /// Builds a vector from the coordinates set to one. Repeated indices cancel.
    pub fn from_indices(len: usize, ones: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.flip(i)?;
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / WORD] |= 1 << (i % WORD);
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

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.len {
            Err(Error::IndexOutOfRange { index: i, len: self.len })
        } else {
            Ok(())
        }
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.bit(i))
    }

    pub fn set(&mut self, i: usize, value: bool) -> Result<()> {
        self.check(i)?;
        if value {
            self.words[i / WORD] |= 1 << (i % WORD);
        } else {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
        Ok(())
    }

    pub fn flip(&mut self, i: usize) -> Result<()> {
        self.check(i)?;
        self.words[i / WORD] ^= 1 << (i % WORD);
        Ok(())
    }

    #[inline]
    pub(crate) fn bit(&self, i: usize) -> bool {
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn add_assign(&mut self, other: &Gf2Vector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { expected: self.len, found: other.len });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the coordinatewise product.
    pub fn dot(&self, other: &Gf2Vector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { expected: self.len, found: other.len });
        }
        let s: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        Ok(s & 1 == 1)
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Largest nonzero coordinate in the natural index order.
    pub fn highest_one(&self) -> Option<usize> {
        highest_one(&self.words)
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vector[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.bit(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}

#[inline]
fn highest_one(words: &[u64]) -> Option<usize> {
    for (wi, &w) in words.iter().enumerate().rev() {
        if w != 0 {
            return Some(wi * WORD + 63 - w.leading_zeros() as usize);
        }
    }
    None
}

/// Outcome of [`ReducedBasis::insert_reduce`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector already lay in the span.
    Absorbed,
    /// The reduced vector was kept; its pivot coordinate is given.
    NewPivot(usize),
}

/// A stored row keeps only the words from its first nonzero word up to the
/// word holding its pivot; everything outside that window is zero.
#[derive(Clone, Debug)]
struct Row {
    bits: Vec<u64>,
    lo: usize,
    pivot: usize,
}

impl Row {
    fn new(full: &[u64], pivot: usize) -> Row {
        let hi = pivot / WORD;
        let lo = full[..=hi].iter().position(|&x| x != 0).unwrap_or(hi);
        Row { bits: full[lo..=hi].to_vec(), lo, pivot }
    }

    fn expand(&self, nwords: usize) -> Vec<u64> {
        let mut w = vec![0u64; nwords];
        w[self.lo..self.lo + self.bits.len()].copy_from_slice(&self.bits);
        w
    }

    /// Rank-space positions of the ones, descending.
    fn ones_desc(&self) -> Vec<usize> {
        highest_ones_iter(&self.bits).into_iter().map(|r| r + self.lo * WORD).collect()
    }
}

/// A row-reduced subspace of F₂^len with order-maximal pivots.
///
/// Rows live internally in "rank space": coordinate `c` is stored at
/// position `rank[c]`, so the natural bit order coincides with the
/// injected total order.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    len: usize,
    nwords: usize,
    /// `order[r]` is the coordinate of rank `r`; `None` means the identity.
    order: Option<Vec<usize>>,
    rank_of: Option<Vec<usize>>,
    rows: Vec<Row>,
    /// Row index holding each rank-space pivot, or `u32::MAX`.
    pivot_row: Vec<u32>,
    bytes: usize,
}

const NONE: u32 = u32::MAX;

impl ReducedBasis {
    /// An empty basis on `len` coordinates ordered by index.
    pub fn new(len: usize) -> Self {
        ReducedBasis { len, nwords: words_for(len), order: None, rank_of: None, rows: Vec::new(), pivot_row: vec![NONE; len], bytes: 0 }
    }

    /// An empty basis whose coordinate order is given by `order`, listed from
    /// smallest to largest. `order` must be a permutation of `0..len`.
    pub fn with_order(order: Vec<usize>) -> Result<Self> {
        let len = order.len();
        let mut rank_of = vec![usize::MAX; len];
        for (r, &c) in order.iter().enumerate() {
            if c >= len || rank_of[c] != usize::MAX {
                return Err(Error::InvalidOrder);
            }
            rank_of[c] = r;
        }
        let mut b = Self::new(len);
        b.order = Some(order);
        b.rank_of = Some(rank_of);
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    fn to_rank(&self, c: usize) -> usize {
        match &self.rank_of {
            Some(r) => r[c],
            None => c,
        }
    }

    #[inline]
    fn to_coord(&self, r: usize) -> usize {
        match &self.order {
            Some(o) => o[r],
            None => r,
        }
    }

    fn check_len(&self, v: &Gf2Vector) -> Result<()> {
        if v.len != self.len {
            Err(Error::LengthMismatch { expected: self.len, found: v.len })
        } else {
            Ok(())
        }
    }

    fn to_rank_words(&self, v: &Gf2Vector) -> Vec<u64> {
        if self.order.is_none() {
            return v.words.clone();
        }
        let mut w = vec![0u64; self.nwords];
        for c in v.ones() {
            let r = self.to_rank(c);
            w[r / WORD] |= 1 << (r % WORD);
        }
        w
    }

    fn vector_from_rank_words(&self, w: &[u64]) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.len);
        if self.order.is_none() {
            v.words.copy_from_slice(w);
            return v;
        }
        for r in highest_ones_iter(w) {
            let c = self.to_coord(r);
            v.words[c / WORD] |= 1 << (c % WORD);
        }
        v
    }

    /// Rank-space words of the sparse vector with the given coordinates set.
    pub(crate) fn words_from_coords(&self, coords: &[usize]) -> Vec<u64> {
        let mut w = vec![0u64; self.nwords];
        for &c in coords {
            let r = self.to_rank(c);
            w[r / WORD] ^= 1 << (r % WORD);
        }
        w
    }

    /// Reduces `w` from the top down. With `full`, non-pivot bits are kept and
    /// scanning continues below them; otherwise it stops at the first
    /// non-pivot bit and returns it.
    fn reduce_words(&self, w: &mut [u64], full: bool, below: usize) -> Option<usize> {
        if below == 0 {
            return None;
        }
        let mut idx = (below - 1) / WORD;
        let mut mask = if below.is_multiple_of(WORD) { u64::MAX } else { (1u64 << (below % WORD)) - 1 };
        loop {
            loop {
                let cur = w[idx] & mask;
                if cur == 0 {
                    break;
                }
                let b = 63 - cur.leading_zeros() as usize;
                let r = idx * WORD + b;
                let pr = self.pivot_row[r];
                if pr != NONE {
                    let row = &self.rows[pr as usize];
                    for (k, b) in row.bits.iter().enumerate() {
                        w[row.lo + k] ^= *b;
                    }
                } else if full {
                    mask &= !(1u64 << b);
                } else {
                    return Some(r);
                }
            }
            if idx == 0 {
                return None;
            }
            idx -= 1;
            mask = u64::MAX;
        }
    }

    fn push_row(&mut self, bits: Vec<u64>, pivot: usize) {
        let row = Row::new(&bits, pivot);
        self.bytes += row.bits.len() * 8 + std::mem::size_of::<Row>();
        self.pivot_row[pivot] = self.rows.len() as u32;
        self.rows.push(row);
    }

    /// Heap bytes held by the stored rows.
    pub fn heap_bytes(&self) -> usize {
        self.bytes + self.pivot_row.len() * 4
    }

    /// Reduces `v` against the basis and keeps the remainder if nonzero.
    pub fn insert_reduce(&mut self, v: &Gf2Vector) -> Result<Insert> {
        self.check_len(v)?;
        let w = self.to_rank_words(v);
        Ok(self.insert_rank_words(w))
    }

    pub(crate) fn insert_rank_words(&mut self, mut w: Vec<u64>) -> Insert {
        let top = self.nwords * WORD;
        match self.reduce_words(&mut w, false, top) {
            None => Insert::Absorbed,
            Some(p) => {
                self.push_row(w, p);
                Insert::NewPivot(self.to_coord(p))
            }
        }
    }

    /// Whether `v` lies in the row span.
    pub fn member(&self, v: &Gf2Vector) -> Result<bool> {
        self.check_len(v)?;
        let mut w = self.to_rank_words(v);
        Ok(self.reduce_words(&mut w, false, self.nwords * WORD).is_none())
    }

    /// The unique vector congruent to `v` modulo the span and supported on
    /// non-pivot coordinates.
    pub fn reduce_to_normal_form(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        self.check_len(v)?;
        let mut w = self.to_rank_words(v);
        self.reduce_words(&mut w, true, self.nwords * WORD);
        Ok(self.vector_from_rank_words(&w))
    }

    /// Normal form of a sparse vector given by its coordinates; returns the
    /// surviving coordinates in ascending rank order.
    pub(crate) fn normal_form_coords(&self, coords: &[usize]) -> Vec<usize> {
        let mut w = self.words_from_coords(coords);
        self.reduce_words(&mut w, true, self.nwords * WORD);
        highest_ones_iter(&w).into_iter().rev().map(|r| self.to_coord(r)).collect()
    }

    /// Whether coordinate `c` is a pivot of some row.
    pub fn is_pivot(&self, c: usize) -> bool {
        c < self.len && self.pivot_row[self.to_rank(c)] != NONE
    }

    /// Pivot coordinates sorted ascending in the basis order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.len).filter(|&r| self.pivot_row[r] != NONE).map(|r| self.to_coord(r)).collect()
    }

    /// Non-pivot coordinates sorted ascending in the basis order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.len).filter(|&r| self.pivot_row[r] == NONE).map(|r| self.to_coord(r)).collect()
    }

    /// Number of pivots whose rank lies in `lo..hi`.
    pub fn pivots_in_rank_range(&self, lo: usize, hi: usize) -> usize {
        self.pivot_row[lo..hi].iter().filter(|&&p| p != NONE).count()
    }

    /// Row vectors in coordinate space.
    pub fn row_vectors(&self) -> Vec<Gf2Vector> {
        self.rows.iter().map(|r| self.vector_from_rank_words(&r.expand(self.nwords))).collect()
    }

    /// Rows whose pivot rank is below `hi`, truncated to their first `hi`
    /// ranks. This is the intersection of the span with the initial segment
    /// of the order, expressed on that segment.
    pub fn rows_below_rank(&self, hi: usize) -> Vec<Gf2Vector> {
        let mut out = Vec::new();
        for row in &self.rows {
            if row.pivot < hi {
                let mut v = Gf2Vector::zeros(hi);
                let n = words_for(hi);
                v.words.copy_from_slice(&row.expand(self.nwords)[..n]);
                out.push(v);
            }
        }
        out
    }

    /// Back-substitutes so that no row contains another row's pivot.
    pub fn finalize(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].pivot);
        for i in order {
            let pivot = self.rows[i].pivot;
            let mut w = self.rows[i].expand(self.nwords);
            self.reduce_words(&mut w, true, pivot);
            let row = Row::new(&w, pivot);
            self.bytes = self.bytes + row.bits.len() * 8 - self.rows[i].bits.len() * 8;
            self.rows[i] = row;
        }
    }

    /// Whether every row is free of all other pivots.
    pub fn is_fully_reduced(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.ones_desc().into_iter().all(|r| r == row.pivot || self.pivot_row[r] == NONE || self.pivot_row[r] as usize == i)
        })
    }

    /// Vectors spanning `{x : row · x = 0 for every row}`, one per non-pivot
    /// coordinate. Each is expressed in coordinate space.
    pub fn annihilator_basis(&self) -> Vec<Gf2Vector> {
        let free: Vec<usize> = (0..self.len).filter(|&r| self.pivot_row[r] == NONE).collect();
        let nf = free.len();
        let fw = words_for(nf);
        // sol[r] = which free variables contribute to x_r.
        let mut sol: Vec<Vec<u64>> = vec![Vec::new(); self.len];
        for (k, &r) in free.iter().enumerate() {
            let mut s = vec![0u64; fw];
            s[k / WORD] |= 1 << (k % WORD);
            sol[r] = s;
        }
        let mut by_pivot: Vec<usize> = (0..self.rows.len()).collect();
        by_pivot.sort_by_key(|&i| self.rows[i].pivot);
        for i in by_pivot {
            let row = &self.rows[i];
            let mut acc = vec![0u64; fw];
            for r in row.ones_desc() {
                if r != row.pivot {
                    for (a, b) in acc.iter_mut().zip(&sol[r]) {
                        *a ^= *b;
                    }
                }
            }
            sol[row.pivot] = acc;
        }
        let mut out = vec![Gf2Vector::zeros(self.len); nf];
        for (r, s) in sol.iter().enumerate() {
            let c = self.to_coord(r);
            for (wi, &w) in s.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let b = w.trailing_zeros() as usize;
                    let k = wi * WORD + b;
                    out[k].words[c / WORD] |= 1 << (c % WORD);
                    w &= w - 1;
                }
            }
        }
        out
    }
}

/// Ones of a word slice, in descending order.
fn highest_ones_iter(w: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (wi, &x) in w.iter().enumerate().rev() {
        let mut x = x;
        while x != 0 {
            let b = 63 - x.leading_zeros() as usize;
            out.push(wi * WORD + b);
            x &= !(1u64 << b);
        }
    }
    out
}

/// A dense matrix over F₂ stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols, data: vec![Gf2Vector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].words[i / WORD] |= 1 << (i % WORD);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(Gf2Matrix { rows: rows.len(), cols, data: rows })
    }

    /// Builds a matrix from nested 0/1 rows.
    pub fn from_bits(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                if r.len() != cols {
                    return Err(Error::LengthMismatch { expected: cols, found: r.len() });
                }
                Ok(Gf2Vector::from_bools(&r.iter().map(|&b| b & 1 == 1).collect::<Vec<_>>()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Gf2Matrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::LengthMismatch { expected: rows, found: col.len() });
            }
            for i in col.ones() {
                m.data[i].words[j / WORD] |= 1 << (j % WORD);
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Result<bool> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange { index: i, len: self.rows });
        }
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) -> Result<()> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange { index: i, len: self.rows });
        }
        self.data[i].set(j, v)
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].bit(j) {
                v.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        v
    }

    pub fn transpose(&self) -> Self {
        let cols: Vec<Gf2Vector> = self.data.clone();
        Self::from_columns(self.cols, &cols).expect("shape is consistent")
    }

    pub fn mul_vec(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = Gf2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].dot(v)? {
                out.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.data[i].ones() {
                out.data[i].add_assign(&other.data[k])?;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.add_assign(b)?;
        }
        Ok(out)
    }

    /// `self + I` for a square matrix.
    pub fn plus_identity(&self) -> Result<Gf2Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        self.add(&Self::identity(self.rows))
    }

    pub fn rank(&self) -> usize {
        let mut b = ReducedBasis::new(self.cols);
        for r in &self.data {
            b.insert_rank_words(r.words.clone());
        }
        b.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Restriction to the given row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Gf2Matrix {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if self.data[i].bit(j) {
                    m.data[a].words[b / WORD] |= 1 << (b % WORD);
                }
            }
        }
        m
    }
}

/// Vectors spanning the null space `{v : M v = 0}` of a stack of rows.
pub fn kernel_vectors(ncols: usize, rows: &[Gf2Vector]) -> Result<Vec<Gf2Vector>> {
    let mut b = ReducedBasis::new(ncols);
    for r in rows {
        b.insert_reduce(r)?;
    }
    Ok(b.annihilator_basis())
}

/// Basis of `{v : Mᵢ v = 0 for all i}` for square matrices of one size.
pub fn common_kernel(mats: &[Gf2Matrix]) -> Result<ReducedBasis> {
    let n = match mats.first() {
        Some(m) => m.cols,
        None => return Err(Error::DimensionMismatch),
    };
    let mut rows = Vec::new();
    for m in mats {
        if m.rows != n || m.cols != n {
            return Err(Error::DimensionMismatch);
        }
        rows.extend(m.data.iter().cloned());
    }
    let mut out = ReducedBasis::new(n);
    for v in kernel_vectors(n, &rows)? {
        out.insert_reduce(&v)?;
    }
    Ok(out)
}

/// Dimension of the span of both bases' rows.
pub fn subspace_sum_dim(a: &ReducedBasis, b: &ReducedBasis) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let mut s = ReducedBasis::new(a.len());
    for v in a.row_vectors().iter().chain(b.row_vectors().iter()) {
        s.insert_reduce(v)?;
    }
    Ok(s.rank())
}

/// Intersection of two row spans by double-block elimination: rows `[a | a]`
/// and `[b | 0]` are reduced with the left block ranked above the right one;
/// rows whose pivot falls in the right block have a zero left block and their
/// right halves span the intersection.
pub fn subspace_intersection(a: &ReducedBasis, b: &ReducedBasis) -> Result<ReducedBasis> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let n = a.len();
    let mut work = ReducedBasis::new(2 * n);
    // Right block = coordinates 0..n (low ranks), left block = n..2n.
    for v in a.row_vectors() {
        let mut ones: Vec<usize> = v.ones();
        ones.extend(v.ones().into_iter().map(|i| i + n));
        work.insert_reduce(&Gf2Vector::from_indices(2 * n, &ones)?)?;
    }
    for v in b.row_vectors() {
        let ones: Vec<usize> = v.ones().into_iter().map(|i| i + n).collect();
        work.insert_reduce(&Gf2Vector::from_indices(2 * n, &ones)?)?;
    }
    let mut out = ReducedBasis::new(n);
    for v in work.rows_below_rank(n) {
        out.insert_reduce(&v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(len: usize, ones: &[usize]) -> Gf2Vector {
        Gf2Vector::from_indices(len, ones).unwrap()
    }

    #[test]
    fn insert_examples() {
        let mut b = ReducedBasis::new(2);
        assert_eq!(b.insert_reduce(&v(2, &[0])).unwrap(), Insert::NewPivot(0));
        assert_eq!(b.rank(), 1);
        assert_eq!(b.insert_reduce(&v(2, &[0])).unwrap(), Insert::Absorbed);

        let mut b = ReducedBasis::new(2);
        assert_eq!(b.insert_reduce(&v(2, &[0, 1])).unwrap(), Insert::NewPivot(1));
        assert!(!b.member(&v(2, &[0])).unwrap());
        assert_eq!(b.insert_reduce(&v(2, &[1])).unwrap(), Insert::NewPivot(0));
        assert!(b.member(&v(2, &[0])).unwrap());
    }

    #[test]
    fn member_examples() {
        assert!(ReducedBasis::new(3).member(&v(3, &[])).unwrap());
        let mut b = ReducedBasis::new(2);
        b.insert_reduce(&v(2, &[0])).unwrap();
        assert!(!b.member(&v(2, &[1])).unwrap());
        let mut b = ReducedBasis::new(2);
        b.insert_reduce(&v(2, &[0, 1])).unwrap();
        b.insert_reduce(&v(2, &[1])).unwrap();
        assert!(b.member(&v(2, &[0])).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let mut b = ReducedBasis::new(2);
        assert!(b.reduce_to_normal_form(&v(2, &[])).unwrap().is_zero());
        b.insert_reduce(&v(2, &[0])).unwrap();
        assert_eq!(b.reduce_to_normal_form(&v(2, &[0, 1])).unwrap(), v(2, &[1]));
        let mut b = ReducedBasis::new(2);
        b.insert_reduce(&v(2, &[0, 1])).unwrap();
        assert_eq!(b.reduce_to_normal_form(&v(2, &[1])).unwrap(), v(2, &[0]));
    }

    #[test]
    fn injected_order_changes_pivot() {
        // Order 1 < 0: the pivot of e0+e1 is coordinate 0.
        let mut b = ReducedBasis::with_order(vec![1, 0]).unwrap();
        assert_eq!(b.insert_reduce(&v(2, &[0, 1])).unwrap(), Insert::NewPivot(0));
        assert_eq!(b.reduce_to_normal_form(&v(2, &[0])).unwrap(), v(2, &[1]));
        assert!(ReducedBasis::with_order(vec![0, 0]).is_err());
    }

    #[test]
    fn length_errors() {
        let mut b = ReducedBasis::new(2);
        assert!(b.insert_reduce(&v(3, &[0])).is_err());
        assert!(b.member(&v(3, &[0])).is_err());
        assert!(b.reduce_to_normal_form(&v(1, &[0])).is_err());
        assert!(Gf2Vector::zeros(3).get(3).is_err());
        assert!(subspace_sum_dim(&ReducedBasis::new(2), &ReducedBasis::new(3)).is_err());
    }

    #[test]
    fn common_kernel_examples() {
        assert_eq!(common_kernel(&[Gf2Matrix::identity(3)]).unwrap().rank(), 0);
        assert_eq!(common_kernel(&[Gf2Matrix::zeros(2, 2)]).unwrap().rank(), 2);
        let m = Gf2Matrix::from_bits(&[vec![0, 1], vec![0, 0]]).unwrap();
        let k = common_kernel(&[m]).unwrap();
        assert_eq!(k.rank(), 1);
        assert!(k.member(&v(2, &[0])).unwrap());
        assert!(common_kernel(&[Gf2Matrix::zeros(2, 2), Gf2Matrix::zeros(3, 3)]).is_err());
    }

    #[test]
    fn sum_dim_examples() {
        let mk = |vs: &[&[usize]]| {
            let mut b = ReducedBasis::new(2);
            for o in vs {
                b.insert_reduce(&v(2, o)).unwrap();
            }
            b
        };
        assert_eq!(subspace_sum_dim(&mk(&[&[0]]), &mk(&[&[0]])).unwrap(), 1);
        assert_eq!(subspace_sum_dim(&mk(&[&[0]]), &mk(&[&[1]])).unwrap(), 2);
        assert_eq!(subspace_sum_dim(&mk(&[&[0, 1]]), &mk(&[&[1]])).unwrap(), 2);
    }

    #[test]
    fn finalize_reaches_full_reduction() {
        let mut b = ReducedBasis::new(70);
        b.insert_reduce(&v(70, &[0, 5, 66])).unwrap();
        b.insert_reduce(&v(70, &[5, 64])).unwrap();
        b.insert_reduce(&v(70, &[0, 3, 64])).unwrap();
        assert!(!b.is_fully_reduced());
        let before: Vec<_> = (0..70).map(|i| b.reduce_to_normal_form(&v(70, &[i])).unwrap()).collect();
        b.finalize();
        assert!(b.is_fully_reduced());
        let after: Vec<_> = (0..70).map(|i| b.reduce_to_normal_form(&v(70, &[i])).unwrap()).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn matrix_basics() {
        let m = Gf2Matrix::from_bits(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(m.is_invertible());
        assert_eq!(m.mul(&m).unwrap(), Gf2Matrix::identity(2));
        assert_eq!(m.transpose().column(0), v(2, &[0, 1]));
        assert_eq!(m.mul_vec(&v(2, &[1])).unwrap(), v(2, &[0, 1]));
    }
}

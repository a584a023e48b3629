//! Bit-packed vectors and matrices over GF(2).

use std::fmt;

/// A fixed-length bit vector; bit i is coordinate i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(64));
        let mut v = Self { len, words };
        v.mask_tail();
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
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

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Hexadecimal word dump, low word last (matches the polynomial
    /// mask convention: bit i = coordinate i).
    pub fn to_hex(&self) -> String {
        match self.words.split_last() {
            None => "0".to_string(),
            Some((last, rest)) => {
                let mut s = format!("{last:x}");
                for w in rest.iter().rev() {
                    s.push_str(&format!("{w:016x}"));
                }
                s
            }
        }
    }

    fn mask_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(w) = self.words.last_mut() {
                *w &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense GF(2) matrix with bit-packed rows of equal stride.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn from_rows(rows: &[BitVec]) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.len(), cols);
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vec(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row(i).to_vec())
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row_weight(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.stride);
        head[a * self.stride..(a + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// Row-reduces in place, choosing pivot columns in the order given
    /// by `preference`. Returns the pivot columns, one per reduced row,
    /// in elimination order.
    pub fn rref_by_preference(&mut self, preference: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::with_capacity(self.rows);
        let mut next_row = 0;
        for &col in preference {
            if next_row == self.rows {
                break;
            }
            let Some(pivot_row) = (next_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(pivot_row, next_row);
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    let (a, b) = row_pair(&mut self.data, self.stride, next_row, r);
                    for (d, s) in b.iter_mut().zip(a.iter()) {
                        *d ^= *s;
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        pivots
    }

    /// Rank via elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut scratch = self.clone();
        let cols: Vec<usize> = (0..self.cols).collect();
        scratch.rref_by_preference(&cols).len()
    }

    /// True iff self * otherᵀ = 0, i.e. every row of self is orthogonal
    /// to every row of `other`.
    pub fn product_with_transpose_is_zero(&self, other: &Self) -> bool {
        debug_assert_eq!(self.cols, other.cols);
        (0..self.rows).all(|i| {
            let a = self.row(i);
            (0..other.rows).all(|j| {
                let parity: u64 = a
                    .iter()
                    .zip(other.row(j))
                    .map(|(x, y)| (x & y).count_ones() as u64)
                    .sum();
                parity.is_multiple_of(2)
            })
        })
    }

    /// Appends one column holding each row's parity bit.
    pub fn with_parity_column(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            let src = self.row(i);
            out.row_mut(i)[..src.len()].copy_from_slice(src);
            if self.row_weight(i) % 2 == 1 {
                out.set(i, self.cols, true);
            }
        }
        out
    }
}

/// Two distinct row slices borrowed simultaneously.
fn row_pair(data: &mut [u64], stride: usize, a: usize, b: usize) -> (&[u64], &mut [u64]) {
    debug_assert_ne!(a, b);
    if a < b {
        let (head, tail) = data.split_at_mut(b * stride);
        (&head[a * stride..(a + 1) * stride], &mut tail[..stride])
    } else {
        let (head, tail) = data.split_at_mut(a * stride);
        let b_range = b * stride..(b + 1) * stride;
        // Need mutable b from head and immutable a from tail.
        let (b_slice, a_slice) = (&mut head[b_range], &tail[..stride]);
        (a_slice, b_slice)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row_vec(i))?;
        }
        Ok(())
    }
}

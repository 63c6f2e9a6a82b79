//! Bit-packed linear algebra over the field of two elements.
//!
//! Two representations are used throughout the crate:
//!
//! * short vectors (dimension at most [`MAX_WIDTH`]) packed into a single
//!   `u64`, with bit `i` holding the coefficient of the `i`-th basis vector —
//!   these carry characteristic-function columns, abelianized words and
//!   coset labels;
//! * [`BitMatrix`], a dense word-packed matrix used for the large boundary
//!   operators of quotient complexes, where only the rank is ever needed.

/// Maximum dimension of a word-packed GF(2) vector.
pub const MAX_WIDTH: usize = 64;

/// Incremental row-echelon basis of word-packed vectors.
///
/// Rows are kept sorted by decreasing pivot (most significant set bit), so a
/// single downward reduction pass produces the canonical representative of a
/// coset: the unique element of `v + span(basis)` with every pivot bit clear.
#[derive(Debug, Clone, Default)]
pub struct XorBasis {
    rows: Vec<u64>,
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a basis from the given spanning set.
    pub fn from_span(vectors: impl IntoIterator<Item = u64>) -> Self {
        let mut basis = Self::new();
        for v in vectors {
            basis.insert(v);
        }
        basis
    }

    /// Inserts `v` if it is independent of the current basis.
    /// Returns `true` when the rank grew.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pivot = 63 - v.leading_zeros();
        let pos = self
            .rows
            .iter()
            .position(|row| (63 - row.leading_zeros()) < pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical coset representative of `v` modulo the span of the basis.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.rows {
            let pivot = 63 - row.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Bit mask of the pivot positions.
    pub fn pivot_mask(&self) -> u64 {
        self.rows
            .iter()
            .map(|row| 1u64 << (63 - row.leading_zeros()))
            .fold(0, |acc, bit| acc | bit)
    }

    /// All canonical coset representatives of the quotient of the `width`-bit
    /// space by the span of the basis, in increasing numeric order.
    ///
    /// The representatives are exactly the vectors supported on the
    /// non-pivot positions below `width`.
    pub fn coset_representatives(&self, width: usize) -> Vec<u64> {
        assert!(width <= MAX_WIDTH);
        let pivots = self.pivot_mask();
        let free: Vec<usize> = (0..width).filter(|&i| pivots >> i & 1 == 0).collect();
        let count = 1usize << free.len();
        let mut reps = Vec::with_capacity(count);
        for m in 0..count {
            let mut v = 0u64;
            for (bit, &pos) in free.iter().enumerate() {
                if m >> bit & 1 == 1 {
                    v |= 1 << pos;
                }
            }
            reps.push(v);
        }
        reps
    }
}

/// Rank of a set of word-packed column vectors.
pub fn rank_of(vectors: impl IntoIterator<Item = u64>) -> usize {
    XorBasis::from_span(vectors).rank()
}

/// Whether `n` word-packed vectors form a basis of an `n`-dimensional space.
pub fn is_invertible(columns: &[u64], n: usize) -> bool {
    columns.len() == n && rank_of(columns.iter().copied()) == n
}

const WORD_BITS: usize = 64;

/// Dense GF(2) matrix packed 64 columns per word, row major.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD_BITS).max(1);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = r * self.stride + c / WORD_BITS;
        let mask = 1u64 << (c % WORD_BITS);
        if bit {
            self.data[word] |= mask;
        } else {
            self.data[word] &= !mask;
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD_BITS] ^= 1 << (c % WORD_BITS);
    }

    fn leading_col(&self, r: usize) -> Option<usize> {
        let row = &self.data[r * self.stride..(r + 1) * self.stride];
        for (w, &word) in row.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let stride = self.stride;
        let (src_row, dst_row): (&[u64], &mut [u64]) = if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * stride);
            (&head[src * stride..(src + 1) * stride], &mut tail[..stride])
        } else {
            let (head, tail) = self.data.split_at_mut(src * stride);
            (&tail[..stride], &mut head[dst * stride..(dst + 1) * stride])
        };
        for (x, y) in dst_row.iter_mut().zip(src_row) {
            *x ^= *y;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    for w in 0..other.stride {
                        out.data[r * out.stride + w] ^= other.data[k * other.stride + w];
                    }
                }
            }
        }
        out
    }

    /// Rank by in-place row elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        // pivot column -> row index holding that pivot
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for r in 0..m.rows {
            while let Some(lead) = m.leading_col(r) {
                match pivots.iter().find(|&&(c, _)| c == lead) {
                    Some(&(_, pr)) => m.xor_row_into(pr, r),
                    None => {
                        pivots.push((lead, r));
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

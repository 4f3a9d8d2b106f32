//! Packed GF(2) vectors and matrices.
//!
//! Everything downstream (Pauli products, stabilizer membership, kernel and
//! coset computations) reduces to word-parallel XOR/AND/popcount on these
//! types, which is what keeps sweeps to thousands of qubits cheap.

use std::fmt;

const WORD_BITS: usize = 64;

/// Fixed-length bit vector packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
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

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// popcount(self AND other)
    pub fn and_count(&self, other: &BitVec) -> u32 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// GF(2) inner product.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) & 1 == 1
    }

    /// popcount(self OR other)
    pub fn or_count(&self, other: &BitVec) -> u32 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones())
            .sum()
    }

    pub fn overlaps(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Interpret the low bits as an integer index (requires len <= 64).
    pub fn as_u64(&self) -> u64 {
        assert!(self.len <= 64, "bit vector too long for u64 view");
        self.words.first().copied().unwrap_or(0)
    }

    /// Concatenate self with other into one longer vector.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        let mut out = BitVec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Total order: by weight first, then by value with bit 0 as the least
    /// significant bit. Used to pick deterministic coset representatives.
    pub fn cmp_weight_value(&self, other: &BitVec) -> std::cmp::Ordering {
        self.count_ones()
            .cmp(&other.count_ones())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols);
        }
        BitMatrix { cols, rows }
    }

    /// Build from per-row column index lists.
    pub fn from_row_supports(cols: usize, supports: &[Vec<usize>]) -> Self {
        let rows = supports
            .iter()
            .map(|s| BitVec::from_indices(cols, s))
            .collect();
        BitMatrix { cols, rows }
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut rows = vec![BitVec::zeros(self.num_rows()); self.cols];
        for (ri, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                rows[c].set(ri, true);
            }
        }
        BitMatrix { cols: self.num_rows(), rows }
    }

    /// Matrix-vector product M * v over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols);
        let mut out = BitVec::zeros(self.num_rows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        RowSpace::from_rows(self.cols, self.rows.iter()).dim()
    }

    /// Basis of the right kernel {v : M v = 0}.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        // Reduce the transpose-free way: echelonize a working copy, track pivots.
        let mut work: Vec<BitVec> = self.rows.clone();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut next = 0;
        for (c, pivot_slot) in pivot_of_col.iter_mut().enumerate() {
            if let Some(r) = (next..work.len()).find(|&r| work[r].get(c)) {
                work.swap(next, r);
                let pivot_row = work[next].clone();
                for (r, row) in work.iter_mut().enumerate() {
                    if r != next && row.get(c) {
                        row.xor_assign(&pivot_row);
                    }
                }
                *pivot_slot = Some(next);
                next += 1;
            }
        }
        let free_cols: Vec<usize> = pivot_of_col
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(c, _)| c)
            .collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = BitVec::zeros(self.cols);
            v.set(fc, true);
            for (c, pivot) in pivot_of_col.iter().enumerate() {
                if let Some(pr) = *pivot {
                    if work[pr].get(fc) {
                        v.set(c, true);
                    }
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left kernel {a : a^T M = 0}.
    pub fn left_kernel_basis(&self) -> Vec<BitVec> {
        self.transpose().kernel_basis()
    }

    /// Solve M x = b; returns any solution.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.num_rows());
        // Augmented elimination over [M | b].
        let mut work: Vec<BitVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut aug = r.clone().concat(&BitVec::zeros(1));
                if b.get(i) {
                    aug.set(self.cols, true);
                }
                aug
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if let Some(r) = (next..work.len()).find(|&r| work[r].get(c)) {
                work.swap(next, r);
                let pivot_row = work[next].clone();
                for (r, row) in work.iter_mut().enumerate() {
                    if r != next && row.get(c) {
                        row.xor_assign(&pivot_row);
                    }
                }
                pivot_cols.push(c);
                next += 1;
            }
        }
        // Inconsistent if a zero row has b-bit set.
        for row in &work[next..] {
            if row.get(self.cols) {
                return None;
            }
        }
        let mut x = BitVec::zeros(self.cols);
        for (r, &c) in pivot_cols.iter().enumerate() {
            if work[r].get(self.cols) {
                x.set(c, true);
            }
        }
        Some(x)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}

/// Row space of a set of GF(2) vectors with combination tracking: reducing a
/// vector reports both the residual and which input rows reproduce it.
#[derive(Clone)]
pub struct RowSpace {
    cols: usize,
    num_inputs: usize,
    /// Echelon rows, each paired with the input combination that produced it.
    rows: Vec<(BitVec, BitVec)>,
    /// rows index by pivot column.
    pivot_rows: Vec<Option<usize>>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            num_inputs: 0,
            rows: Vec::new(),
            pivot_rows: vec![None; cols],
        }
    }

    pub fn from_rows<'a>(cols: usize, rows: impl Iterator<Item = &'a BitVec>) -> Self {
        let mut s = RowSpace::new(cols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    /// Insert an input row; returns true if it enlarged the space.
    pub fn insert(&mut self, row: &BitVec) -> bool {
        assert_eq!(row.len(), self.cols);
        let idx = self.num_inputs;
        self.num_inputs += 1;
        let mut v = row.clone();
        let mut combo = BitVec::zeros(self.num_inputs);
        combo.set(idx, true);
        // Combos recorded earlier are shorter; compare lazily by padding.
        self.reduce_in_place(&mut v, &mut combo);
        if v.is_zero() {
            false
        } else {
            let pivot = v.first_one().unwrap();
            self.pivot_rows[pivot] = Some(self.rows.len());
            self.rows.push((v, combo));
            true
        }
    }

    fn reduce_in_place(&self, v: &mut BitVec, combo: &mut BitVec) {
        while let Some(p) = v.first_one() {
            let Some(ri) = self.pivot_rows[p] else { break };
            let (row, rcombo) = &self.rows[ri];
            v.xor_assign(row);
            for i in rcombo.ones() {
                combo.flip(i);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Returns (residual, combination-of-inputs). Residual zero means v is in
    /// the span and the combination XORs to v.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut r = v.clone();
        let mut combo = BitVec::zeros(self.num_inputs.max(1));
        self.reduce_in_place(&mut r, &mut combo);
        (r, combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_basic_ops() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
        v.flip(0);
        assert_eq!(v.first_one(), Some(64));
        let w = BitVec::from_indices(130, &[64, 100]);
        assert_eq!(v.and_count(&w), 1);
        assert!(v.dot(&w));
        assert!(v.overlaps(&w));
    }

    #[test]
    fn kernel_of_repetition_checks() {
        // rows Z0Z1, Z1Z2 on 3 bits: kernel = {000, 111}
        let m = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2]]);
        let b = BitVec::from_indices(2, &[0]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // Sum of rows of an all-rows matrix with dependent target
        let m2 = BitMatrix::from_row_supports(2, &[vec![0], vec![0]]);
        let bad = BitVec::from_indices(2, &[0]);
        assert!(m2.solve(&bad).is_none());
    }

    #[test]
    fn rowspace_combination_tracking() {
        let rows = [
            BitVec::from_indices(4, &[0, 1]),
            BitVec::from_indices(4, &[1, 2]),
            BitVec::from_indices(4, &[2, 3]),
        ];
        let space = RowSpace::from_rows(4, rows.iter());
        assert_eq!(space.dim(), 3);
        let target = BitVec::from_indices(4, &[0, 3]); // r0 + r1 + r2
        let (res, combo) = space.reduce(&target);
        assert!(res.is_zero());
        assert_eq!(combo.ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        let outside = BitVec::from_indices(4, &[0]);
        assert!(!space.contains(&outside));
    }

    #[test]
    fn left_kernel_detects_dependent_rows() {
        // Third row is the sum of the first two.
        let m = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let lk = m.left_kernel_basis();
        assert_eq!(lk.len(), 1);
        assert_eq!(lk[0].count_ones(), 3);
    }
}

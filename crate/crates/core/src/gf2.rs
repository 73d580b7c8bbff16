//! Dense bit-packed linear algebra over the field with two elements.

use std::fmt;

/// A vector over GF(2), packed 64 entries per word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.flip(i);
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

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[BitVec]) -> usize {
    let mut basis = Echelon::default();
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.rank()
}

/// An incrementally built echelon basis, keyed by leading position.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        for (lead, row) in &self.rows {
            if v.get(*lead) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Add a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let v = self.reduce(v);
        match v.first_one() {
            None => false,
            Some(lead) => {
                for (_, row) in self.rows.iter_mut() {
                    if row.get(lead) {
                        row.xor_assign(&v);
                    }
                }
                self.rows.push((lead, v));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

/// A matrix over GF(2), stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols, data: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Gf2Matrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Gf2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        self.data[i].flip(j);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn columns(&self) -> Vec<BitVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.rows, self.columns())
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.data[i].dot(v)))
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let t = other.transpose();
        Gf2Matrix::from_fn(self.rows, other.cols, |i, j| self.data[i].dot(&t.data[j]))
    }

    pub fn add(&self, other: &Gf2Matrix) -> Gf2Matrix {
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        m
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.data)
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<BitVec> {
        // Reduce the transposed system: rows of [M^T | I]; rows whose left part vanishes give the kernel.
        let width = self.rows + self.cols;
        let mut aug: Vec<BitVec> = (0..self.cols)
            .map(|j| {
                let mut v = BitVec::zeros(width);
                for i in 0..self.rows {
                    if self.get(i, j) {
                        v.flip(i);
                    }
                }
                v.flip(self.rows + j);
                v
            })
            .collect();
        let mut r = 0;
        for c in 0..self.rows {
            let Some(p) = (r..aug.len()).find(|&i| aug[i].get(c)) else { continue };
            aug.swap(r, p);
            let pivot = aug[r].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            r += 1;
        }
        aug[r..]
            .iter()
            .map(|v| BitVec::from_indices(self.cols, (0..self.cols).filter(|&j| v.get(self.rows + j))))
            .collect()
    }

    /// Restrict to the given rows and columns, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Gf2Matrix {
        Gf2Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |i| self.data[i].ones().map(move |j| (i, j)))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{}", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "{r:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{r:?}")?;
        }
        Ok(())
    }
}

/// Dimension of the homology of `C --d_in--> D --d_out--> E` at `D`.
pub fn homology_dim(d_out: &Gf2Matrix, d_in_columns: &[BitVec]) -> usize {
    d_out.kernel().len() - rank_of(d_in_columns)
}

/// Rank of the map induced on homology by a chain map `f: C -> D`, where `dc`
/// and `dd` are the differentials of `C` and `D`.
pub fn induced_rank(f: &Gf2Matrix, dc: &Gf2Matrix, dd: &Gf2Matrix) -> usize {
    let mut span = Echelon::default();
    for b in dd.columns() {
        span.insert(b);
    }
    let boundaries = span.rank();
    for z in dc.kernel() {
        span.insert(f.mul_vec(&z));
    }
    span.rank() - boundaries
}

/// Like [`induced_rank`], restricted to the cycles of `C` supported on the generators `cols`.
pub fn induced_rank_on(f: &Gf2Matrix, dc: &Gf2Matrix, dd: &Gf2Matrix, cols: &[usize]) -> usize {
    let mut span = Echelon::default();
    for b in dd.columns() {
        span.insert(b);
    }
    let boundaries = span.rank();
    let all_rows: Vec<usize> = (0..dc.rows()).collect();
    for z in dc.submatrix(&all_rows, cols).kernel() {
        let full = BitVec::from_indices(dc.cols(), z.ones().map(|i| cols[i]));
        span.insert(f.mul_vec(&full));
    }
    span.rank() - boundaries
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(rows: usize, cols: usize, bits: &[bool]) -> Gf2Matrix {
        Gf2Matrix::from_fn(rows, cols, |i, j| bits[i * cols + j])
    }

    #[test]
    fn identity_rank() {
        assert_eq!(Gf2Matrix::identity(70).rank(), 70);
        assert!(Gf2Matrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn induced_rank_of_identity_on_circle() {
        // C: two generators, zero differential.
        let d = Gf2Matrix::zeros(2, 2);
        assert_eq!(induced_rank(&Gf2Matrix::identity(2), &d, &d), 2);
        // Acyclic target: a -> b.
        let mut dd = Gf2Matrix::zeros(2, 2);
        dd.set(1, 0, true);
        assert_eq!(induced_rank(&Gf2Matrix::identity(2), &dd, &dd), 0);
    }

    proptest! {
        #[test]
        fn rank_nullity(bits in prop::collection::vec(any::<bool>(), 35)) {
            let m = matrix(5, 7, &bits);
            let k = m.kernel();
            prop_assert_eq!(m.rank() + k.len(), 7);
            for v in &k {
                prop_assert!(m.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn rank_of_transpose(bits in prop::collection::vec(any::<bool>(), 24)) {
            let m = matrix(4, 6, &bits);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn mul_is_associative(a in prop::collection::vec(any::<bool>(), 9), b in prop::collection::vec(any::<bool>(), 9), c in prop::collection::vec(any::<bool>(), 9)) {
            let (a, b, c) = (matrix(3, 3, &a), matrix(3, 3, &b), matrix(3, 3, &c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}

use std::fmt;

use super::{FfError, FieldCtx};

/// Dense row-major matrix with entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for GfpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfpMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl GfpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GfpMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major residues, reducing every entry mod p.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<u32>, f: &FieldCtx) -> Result<Self, FfError> {
        if data.len() != rows * cols {
            return Err(FfError::Shape {
                expected: rows * cols,
                got: data.len(),
            });
        }
        let data = data.into_iter().map(|x| x % f.p()).collect();
        Ok(GfpMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<u32>], f: &FieldCtx) -> Result<Self, FfError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(FfError::Shape {
                expected: cols,
                got: bad.len(),
            });
        }
        Self::from_vec(rows.len(), cols, rows.concat(), f)
    }

    /// Trusted constructor for data already reduced mod p.
    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        GfpMatrix { rows, cols, data }
    }

    pub fn diagonal(diag: &[u32]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in diag.iter().enumerate() {
            m.data[i * n + i] = x;
        }
        m
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
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Row-major entries; this is also the flattening used when a matrix is
    /// treated as a vector of length `rows * cols`.
    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn add(&self, other: &Self, f: &FieldCtx) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self, f: &FieldCtx) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    pub fn scale(&self, c: u32, f: &FieldCtx) -> Self {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &Self, f: &FieldCtx) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let p = f.p() as u64;
        let mut out = vec![0u32; n * m];
        if f.small() {
            let mut acc = vec![0u64; m];
            for i in 0..n {
                acc.iter_mut().for_each(|a| *a = 0);
                for t in 0..k {
                    let a = self.data[i * k + t] as u64;
                    if a == 0 {
                        continue;
                    }
                    let brow = &other.data[t * m..(t + 1) * m];
                    for (slot, &b) in acc.iter_mut().zip(brow) {
                        *slot += a * b as u64;
                    }
                }
                for (o, a) in out[i * m..(i + 1) * m].iter_mut().zip(&acc) {
                    *o = (a % p) as u32;
                }
            }
        } else {
            for i in 0..n {
                for t in 0..k {
                    let a = self.data[i * k + t];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..m {
                        out[i * m + j] = f.axpy(out[i * m + j], a, other.data[t * m + j]);
                    }
                }
            }
        }
        Self::from_raw(n, m, out)
    }

    pub fn mul_vec(&self, v: &[u32], f: &FieldCtx) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                row.iter().zip(v).fold(0u32, |acc, (&a, &b)| f.axpy(acc, a, b))
            })
            .collect()
    }

    pub fn trace(&self, f: &FieldCtx) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self, f: &FieldCtx) -> (GfpMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(f);
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.rref(f).1
    }

    pub(crate) fn rref_in_place(&mut self, f: &FieldCtx) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(src) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if src != r {
                for j in 0..cols {
                    self.data.swap(src * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..cols {
                let v = self.get(r, j);
                self.set(r, j, f.mul(v, inv));
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..cols {
                    let v = f.axpy(self.get(i, j), neg, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self, f: &FieldCtx) -> Option<GfpMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, f: &FieldCtx) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let f = gf(2);
        let id = GfpMatrix::identity(3);
        let (r, rank, piv) = id.rref(&f);
        assert_eq!(r, id);
        assert_eq!(rank, 3);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn duplicate_rows_collapse() {
        let f = gf(2);
        let ones = GfpMatrix::from_rows(&[vec![1, 1], vec![1, 1]], &f).unwrap();
        let (r, rank, _) = ones.rref(&f);
        assert_eq!(r, GfpMatrix::from_rows(&[vec![1, 1], vec![0, 0]], &f).unwrap());
        assert_eq!(rank, 1);
    }

    #[test]
    fn shape_errors() {
        let f = gf(3);
        assert!(matches!(
            GfpMatrix::from_vec(2, 2, vec![1, 2, 3], &f),
            Err(FfError::Shape { expected: 4, got: 3 })
        ));
        assert!(GfpMatrix::from_rows(&[vec![1, 2], vec![1]], &f).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf(5);
        let m = GfpMatrix::from_rows(&[vec![2, 1], vec![1, 1]], &f).unwrap();
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), GfpMatrix::identity(2));
        let sing = GfpMatrix::from_rows(&[vec![1, 2], vec![2, 4]], &f).unwrap();
        assert!(sing.inverse(&f).is_none());
    }

    #[test]
    fn large_prime_path_matches_small() {
        let big = gf(2_147_483_647);
        let a = GfpMatrix::from_rows(&[vec![2_147_483_646, 3], vec![5, 7]], &big).unwrap();
        let sq = a.mul(&a, &big);
        // (-1)^2 + 15 = 16 ; -3 + 21 = 18 ; -5 + 35 = 30 ; 15 + 49 = 64
        assert_eq!(sq.as_slice(), &[16, 18, 30, 64]);
    }
}

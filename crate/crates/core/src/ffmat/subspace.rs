use super::{FfError, FieldCtx, GfpMatrix};

/// A subspace of GF(p)^ambient held in reduced row-echelon form.
///
/// The echelon basis is canonical, so two subspaces are equal exactly when
/// their bases are identical; `PartialEq` relies on that.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut e = vec![0; ambient];
                e[i] = 1;
                e
            })
            .collect();
        Subspace {
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I, V>(ambient: usize, vectors: I, f: &FieldCtx) -> Result<Self, FfError>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u32]>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref(), f)?;
        }
        Ok(s)
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &GfpMatrix, f: &FieldCtx) -> Self {
        let (r, rank, pivots) = m.rref(f);
        Subspace {
            ambient: m.cols(),
            rows: (0..rank).map(|i| r.row(i).to_vec()).collect(),
            pivots,
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, len: usize) -> Result<(), FfError> {
        if len != self.ambient {
            Err(FfError::DimensionMismatch {
                expected: self.ambient,
                got: len,
            })
        } else {
            Ok(())
        }
    }

    /// Residue of `v` modulo the subspace: zero exactly at every pivot column,
    /// and the zero vector iff `v` is a member.
    pub fn reduce(&self, v: &[u32], f: &FieldCtx) -> Vec<u32> {
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in w[piv..].iter_mut().zip(&row[piv..]) {
                if r != 0 {
                    *x = f.axpy(*x, neg, r);
                }
            }
        }
        w
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32], f: &FieldCtx) -> Result<bool, FfError> {
        self.check(v.len())?;
        let mut w = self.reduce(v, f);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let inv = f.inv(w[lead]).expect("nonzero lead");
        for x in w[lead..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[lead];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in row[lead..].iter_mut().zip(&w[lead..]) {
                if y != 0 {
                    *x = f.axpy(*x, neg, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, w);
        Ok(true)
    }

    pub fn member(&self, v: &[u32], f: &FieldCtx) -> Result<bool, FfError> {
        self.check(v.len())?;
        Ok(self.reduce(v, f).iter().all(|&x| x == 0))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[u32], f: &FieldCtx) -> Option<Vec<u32>> {
        if v.len() != self.ambient {
            return None;
        }
        let c: Vec<u32> = self.pivots.iter().map(|&q| v[q]).collect();
        let mut rebuilt = vec![0; self.ambient];
        for (row, &a) in self.rows.iter().zip(&c) {
            if a == 0 {
                continue;
            }
            for (x, &r) in rebuilt.iter_mut().zip(row) {
                *x = f.axpy(*x, a, r);
            }
        }
        (rebuilt == v).then_some(c)
    }

    pub fn contains(&self, other: &Subspace, f: &FieldCtx) -> Result<bool, FfError> {
        self.check(other.ambient)?;
        for v in &other.rows {
            if !self.member(v, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace, f: &FieldCtx) -> Result<Subspace, FfError> {
        self.check(other.ambient)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v, f)?;
        }
        Ok(s)
    }

    /// Intersection via the kernel of `[B1^t | -B2^t]`: a kernel vector `(a, b)`
    /// gives the common element `sum a_i u_i`.
    pub fn intersect(&self, other: &Subspace, f: &FieldCtx) -> Result<Subspace, FfError> {
        self.check(other.ambient)?;
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut m = GfpMatrix::zeros(self.ambient, d1 + d2);
        for (j, u) in self.rows.iter().enumerate() {
            for (i, &x) in u.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (i, &x) in w.iter().enumerate() {
                m.set(i, d1 + j, f.neg(x));
            }
        }
        let ker = kernel(&m, f);
        let mut out = Subspace::zero(self.ambient);
        for coeffs in ker.basis() {
            let mut v = vec![0; self.ambient];
            for (u, &a) in self.rows.iter().zip(&coeffs[..d1]) {
                if a == 0 {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(u) {
                    *x = f.axpy(*x, a, y);
                }
            }
            out.insert(&v, f)?;
        }
        Ok(out)
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, FfError> {
        self.check(other.ambient)?;
        Ok(self == other)
    }

    /// Basis vectors completing this subspace to `outer`, chosen from `outer`'s
    /// echelon basis in order.
    pub fn complement_in(&self, outer: &Subspace, f: &FieldCtx) -> Result<Vec<Vec<u32>>, FfError> {
        self.check(outer.ambient)?;
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in &outer.rows {
            if acc.insert(v, f)? {
                out.push(v.clone());
            }
        }
        Ok(out)
    }
}

/// Null space `{v : m v = 0}`.
pub fn kernel(m: &GfpMatrix, f: &FieldCtx) -> Subspace {
    let cols = m.cols();
    let (r, _rank, pivots) = m.rref(f);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        vectors.push(v);
    }
    Subspace::span(cols, vectors, f).expect("kernel vectors have the column count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let f = gf(3);
        assert_eq!(kernel(&GfpMatrix::identity(3), &f).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let f = gf(3);
        let k = kernel(&GfpMatrix::zeros(2, 3), &f);
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn parity_check_kernel() {
        let f = gf(2);
        let m = GfpMatrix::from_rows(&[vec![1, 1]], &f).unwrap();
        let k = kernel(&m, &f);
        assert_eq!(k.basis(), &[vec![1, 1]]);
    }

    #[test]
    fn intersect_is_idempotent() {
        let f = gf(3);
        let s = Subspace::span(3, [vec![1, 2, 0], vec![0, 1, 1]], &f).unwrap();
        assert_eq!(s.intersect(&s, &f).unwrap(), s);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let f = gf(2);
        let a = Subspace::span(2, [vec![1, 0]], &f).unwrap();
        let b = Subspace::span(2, [vec![0, 1]], &f).unwrap();
        assert!(a.intersect(&b, &f).unwrap().is_zero());
        assert_eq!(a.sum(&b, &f).unwrap(), Subspace::full(2));
    }

    #[test]
    fn dimension_mismatch_reported() {
        let f = gf(2);
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b, &f), Err(FfError::DimensionMismatch { .. })));
        assert!(matches!(a.intersect(&b, &f), Err(FfError::DimensionMismatch { .. })));
        assert!(a.member(&[1, 0, 0], &f).is_err());
        assert!(a.equal(&b).is_err());
    }

    #[test]
    fn coords_reconstruct() {
        let f = gf(5);
        // echelon basis is (1,0,0), (0,1,4)
        let s = Subspace::span(3, [vec![1, 2, 3], vec![0, 1, 4]], &f).unwrap();
        assert_eq!(s.coords(&[2, 1, 4], &f), Some(vec![2, 1]));
        assert_eq!(s.coords(&[2, 1, 0], &f), None);
    }
}

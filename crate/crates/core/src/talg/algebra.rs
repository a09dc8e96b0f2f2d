use super::{TalgContext, TalgError};
use crate::ffmat::{FieldCtx, GfpMatrix, Subspace};

/// A subspace of `n x n` matrices, stored flattened in echelon form, with the
/// echelon basis also kept as matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraBasis {
    n: usize,
    basis: Subspace,
    elements: Vec<GfpMatrix>,
    closed_under_product: bool,
    contains_identity: bool,
}

impl AlgebraBasis {
    /// Span of `mats`. Closure is decided by [`AlgebraBasis::verify_closed`],
    /// not assumed.
    pub fn span<'a, I>(n: usize, mats: I, f: &FieldCtx) -> Result<Self, TalgError>
    where
        I: IntoIterator<Item = &'a GfpMatrix>,
    {
        let mut s = Subspace::zero(n * n);
        for m in mats {
            if m.rows() != n || m.cols() != n {
                return Err(TalgError::Field(crate::ffmat::FfError::DimensionMismatch {
                    expected: n * n,
                    got: m.rows() * m.cols(),
                }));
            }
            s.insert(m.as_slice(), f)?;
        }
        let mut a = Self::from_subspace(n, s, f);
        a.closed_under_product = a.check_closed(f);
        Ok(a)
    }

    /// Wraps a subspace of `GF(p)^{n^2}` without checking closure.
    pub fn from_subspace(n: usize, basis: Subspace, f: &FieldCtx) -> Self {
        assert_eq!(basis.ambient_dim(), n * n, "subspace ambient must be n^2");
        let elements = basis
            .basis()
            .iter()
            .map(|v| GfpMatrix::from_raw(n, n, v.clone()))
            .collect();
        let contains_identity = basis
            .member(GfpMatrix::identity(n).as_slice(), f)
            .unwrap_or(false);
        AlgebraBasis {
            n,
            basis,
            elements,
            closed_under_product: false,
            contains_identity,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.basis
    }

    pub fn elements(&self) -> &[GfpMatrix] {
        &self.elements
    }

    pub fn closed_under_product(&self) -> bool {
        self.closed_under_product
    }

    pub fn contains_identity(&self) -> bool {
        self.contains_identity
    }

    pub fn contains(&self, m: &GfpMatrix, f: &FieldCtx) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.basis.member(m.as_slice(), f).unwrap_or(false)
    }

    /// Coordinates of `m` in the echelon basis.
    pub fn coords(&self, m: &GfpMatrix, f: &FieldCtx) -> Option<Vec<u32>> {
        self.basis.coords(m.as_slice(), f)
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coeffs: &[u32], f: &FieldCtx) -> GfpMatrix {
        let mut out = vec![0u32; self.n * self.n];
        for (b, &c) in self.elements.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(b.as_slice()) {
                *x = f.axpy(*x, c, y);
            }
        }
        GfpMatrix::from_raw(self.n, self.n, out)
    }

    /// Exhaustive pairwise check that products of basis elements stay inside.
    pub fn check_closed(&self, f: &FieldCtx) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&a.mul(b, f), f)))
    }

    pub fn verify_closed(&mut self, f: &FieldCtx) -> bool {
        self.closed_under_product = self.check_closed(f);
        self.closed_under_product
    }
}

/// `T(x)`: the smallest product-closed subspace containing `I` and all
/// generators. New basis elements are multiplied by each generator on the
/// left, then on the right, until nothing new appears.
pub fn generate_algebra(ctx: &TalgContext) -> AlgebraBasis {
    let f = ctx.field();
    let n = ctx.n();
    let gens = ctx.generators();
    let mut span = Subspace::zero(n * n);
    let mut frontier = Vec::new();
    let push = |m: GfpMatrix, span: &mut Subspace, frontier: &mut Vec<GfpMatrix>| {
        if span.insert(m.as_slice(), f).expect("n x n matrix") {
            frontier.push(m);
        }
    };
    push(GfpMatrix::identity(n), &mut span, &mut frontier);
    for g in &gens {
        push(g.clone(), &mut span, &mut frontier);
    }
    while !frontier.is_empty() {
        let batch = std::mem::take(&mut frontier);
        for m in &batch {
            for g in &gens {
                push(g.mul(m, f), &mut span, &mut frontier);
            }
            for g in &gens {
                push(m.mul(g, f), &mut span, &mut frontier);
            }
        }
    }
    let mut t = AlgebraBasis::from_subspace(n, span, f);
    // a unital span closed under left multiplication by generators is closed
    t.closed_under_product = true;
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{gen_cyclic, gen_thin, generators::cyclic_group_table, validate_axioms, RelationTable};
    use crate::talg::build_context;

    fn t_of(t: RelationTable, p: u64, x: usize) -> (TalgContext, AlgebraBasis) {
        let s = validate_axioms(&t).unwrap();
        let c = build_context(&s, &FieldCtx::new(p).unwrap(), x).unwrap();
        let a = generate_algebra(&c);
        (c, a)
    }

    #[test]
    fn one_point_algebra() {
        let (_, t) = t_of(RelationTable::from_entries(1, vec![0]).unwrap(), 5, 0);
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn thin_z2_gives_full_matrix_algebra() {
        for p in [2, 3, 5] {
            let (c, t) = t_of(gen_thin(&cyclic_group_table(2)).unwrap(), p, 0);
            assert_eq!(t.dim(), 4);
            assert!(t.check_closed(c.field()));
            assert!(t.contains_identity());
        }
    }

    #[test]
    fn cyclic_dims_do_not_depend_on_base_point() {
        let dims: Vec<usize> = (0..7)
            .map(|x| t_of(gen_cyclic(7).unwrap(), 3, x).1.dim())
            .collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]));
        assert!(dims[0] >= 16);
    }

    #[test]
    fn span_detects_non_closure() {
        let f = FieldCtx::new(3).unwrap();
        let e12 = GfpMatrix::from_rows(&[vec![0, 1], vec![0, 0]], &f).unwrap();
        let e21 = e12.transpose();
        let a = AlgebraBasis::span(2, [&e12, &e21], &f).unwrap();
        assert!(!a.closed_under_product());
        let b = AlgebraBasis::span(2, [&e12], &f).unwrap();
        assert!(b.closed_under_product());
        assert!(!b.contains_identity());
    }
}

use super::PrimaryError;
use crate::ffmat::{FieldCtx, GfpMatrix, Subspace};
use crate::scheme::Strata;
use crate::talg::TalgContext;

/// A finite-dimensional module given by the action matrices of a fixed list of
/// generators, together with the transpose rule on those generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub dim: usize,
    pub gens: Vec<GfpMatrix>,
    /// `transpose[g]` is the index of the generator `g^t`.
    pub transpose: Vec<usize>,
}

impl ModuleAction {
    /// Smallest invariant subspace containing `seed`.
    pub fn cyclic_submodule(&self, seed: &[u32], f: &FieldCtx) -> Subspace {
        self.closure(Subspace::span(self.dim, [seed], f).expect("seed length"), f)
    }

    /// Smallest invariant subspace containing `s`.
    pub fn closure(&self, mut s: Subspace, f: &FieldCtx) -> Subspace {
        let mut frontier: Vec<Vec<u32>> = s.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for g in &self.gens {
                let w = g.mul_vec(&v, f);
                if s.insert(&w, f).expect("module vector") {
                    frontier.push(w);
                }
            }
        }
        s
    }

    pub fn is_invariant(&self, s: &Subspace, f: &FieldCtx) -> bool {
        s.basis()
            .iter()
            .all(|v| self.gens.iter().all(|g| s.member(&g.mul_vec(v, f), f).unwrap_or(false)))
    }

    /// Irreducible iff every coordinate vector generates the whole space.
    /// Valid when each invariant subspace is spanned by coordinate vectors,
    /// which holds for `W_0` and its factors since the `E_i*` act diagonally.
    pub fn coordinate_irreducible(&self, f: &FieldCtx) -> bool {
        (0..self.dim).all(|c| {
            let mut e = vec![0; self.dim];
            e[c] = 1;
            self.cyclic_submodule(&e, f).dim() == self.dim
        })
    }

    /// Action on the coordinates `idx`, read as a block of each matrix.
    pub fn restrict(&self, idx: &[usize]) -> ModuleAction {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut b = GfpMatrix::zeros(idx.len(), idx.len());
                for (r, &i) in idx.iter().enumerate() {
                    for (c, &h) in idx.iter().enumerate() {
                        b.set(r, c, g.get(i, h));
                    }
                }
                b
            })
            .collect();
        ModuleAction {
            dim: idx.len(),
            gens,
            transpose: self.transpose.clone(),
        }
    }
}

/// `W_0` in the basis `E_0* 1, ..., E_d* 1`.
#[derive(Clone, Debug)]
pub struct PrimaryModule {
    /// The vectors `E_i* 1` in `GF(p)^n`.
    pub basis: Vec<Vec<u32>>,
    /// Generators in the order `A_0..A_d, E_0*..E_d*`.
    pub action: ModuleAction,
}

impl PrimaryModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a point-space vector lying in `W_0`.
    pub fn coords(&self, ctx: &TalgContext, v: &[u32]) -> Option<Vec<u32>> {
        let r = ctx.rank();
        let c: Vec<u32> = (0..r)
            .map(|i| {
                let z = (0..ctx.n()).find(|&z| ctx.in_subconstituent(i, z)).expect("k_i > 0");
                v[z]
            })
            .collect();
        let consistent = (0..ctx.n()).all(|z| {
            let i = ctx.scheme().relation(ctx.base_point(), z);
            v[z] == c[i]
        });
        consistent.then_some(c)
    }
}

/// Builds `W_0`: `A_j` sends `E_h* 1` to `sum_i (p_{h j'}^i mod p) E_i* 1`.
/// Every action matrix is checked against the point-space product.
pub fn build_primary(ctx: &TalgContext) -> Result<PrimaryModule, PrimaryError> {
    let f = ctx.field();
    let r = ctx.rank();
    let s = ctx.scheme();
    let basis: Vec<Vec<u32>> = (0..r).map(|i| ctx.estar_one(i)).collect();
    let independent = Subspace::span(ctx.n(), &basis, f)?.dim() == r;
    if !independent {
        return Err(PrimaryError::Invariant("E_i* 1 are dependent".into()));
    }
    let mut gens = Vec::with_capacity(2 * r);
    for j in 0..r {
        let mut m = GfpMatrix::zeros(r, r);
        for i in 0..r {
            for h in 0..r {
                m.set(i, h, ctx.pbar(h, s.converse(j), i));
            }
        }
        gens.push(m);
    }
    for j in 0..r {
        let mut m = GfpMatrix::zeros(r, r);
        m.set(j, j, 1 % f.p());
        gens.push(m);
    }
    let module = PrimaryModule {
        basis,
        action: ModuleAction {
            dim: r,
            gens,
            transpose: (0..2 * r).map(|g| ctx.generator_transpose(g)).collect(),
        },
    };
    for (g, full) in ctx.generators().iter().enumerate() {
        for h in 0..r {
            let direct = full.mul_vec(&module.basis[h], f);
            let coords = module.coords(ctx, &direct).ok_or_else(|| {
                PrimaryError::Invariant(format!("{} E*_{h} 1 leaves W_0", ctx.generator_name(g)))
            })?;
            if coords != module.action.gens[g].column(h) {
                return Err(PrimaryError::Invariant(format!(
                    "action of {} on E*_{h} 1 disagrees with the intersection numbers",
                    ctx.generator_name(g)
                )));
            }
        }
    }
    Ok(module)
}

/// `W_n = span{E_i* 1 : p^n | k_i}` for `n` in `[0, epsilon + 1]`, in
/// coordinates, each checked to be invariant.
pub fn filtration(m: &PrimaryModule, st: &Strata, f: &FieldCtx) -> Result<Vec<Subspace>, PrimaryError> {
    let r = m.dim();
    let mut out = Vec::with_capacity(st.epsilon + 2);
    for n in 0..=st.epsilon + 1 {
        let vecs = (0..r).filter(|&i| st.level(i) >= n).map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        });
        let w = Subspace::span(r, vecs, f)?;
        if !m.action.is_invariant(&w, f) {
            return Err(PrimaryError::Invariant(format!("W_{n} is not a submodule")));
        }
        out.push(w);
    }
    Ok(out)
}

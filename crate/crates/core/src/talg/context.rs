use super::TalgError;
use crate::ffmat::{FieldCtx, GfpMatrix};
use crate::scheme::SchemeData;

/// Adjacency matrices and dual idempotents of a scheme at a fixed base point,
/// over GF(p).
#[derive(Clone, Debug)]
pub struct TalgContext {
    scheme: SchemeData,
    field: FieldCtx,
    base_point: usize,
    adjacency: Vec<GfpMatrix>,
    dual: Vec<GfpMatrix>,
    /// `masks[i][z] = 1` iff `z` lies in `x R_i`.
    masks: Vec<Vec<bool>>,
    ones: Vec<u32>,
    all_ones: GfpMatrix,
}

impl TalgContext {
    pub fn scheme(&self) -> &SchemeData {
        &self.scheme
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn n(&self) -> usize {
        self.scheme.n()
    }

    /// `d + 1`
    pub fn rank(&self) -> usize {
        self.scheme.rank()
    }

    pub fn a(&self, j: usize) -> &GfpMatrix {
        &self.adjacency[j]
    }

    pub fn estar(&self, i: usize) -> &GfpMatrix {
        &self.dual[i]
    }

    pub fn in_subconstituent(&self, i: usize, z: usize) -> bool {
        self.masks[i][z]
    }

    pub fn ones(&self) -> &[u32] {
        &self.ones
    }

    pub fn j(&self) -> &GfpMatrix {
        &self.all_ones
    }

    /// `k_i mod p`
    pub fn kbar(&self, i: usize) -> u32 {
        self.field.reduce(self.scheme.valency(i))
    }

    /// `p_ij^l mod p`
    pub fn pbar(&self, i: usize, j: usize, l: usize) -> u32 {
        self.field.reduce(self.scheme.p(i, j, l))
    }

    /// Generators of `T(x)` in the fixed order `A_0..A_d, E_0*..E_d*`.
    pub fn generators(&self) -> Vec<GfpMatrix> {
        self.adjacency.iter().chain(&self.dual).cloned().collect()
    }

    /// Transpose of the `g`-th generator, as a generator index.
    pub fn generator_transpose(&self, g: usize) -> usize {
        let r = self.rank();
        if g < r {
            self.scheme.converse(g)
        } else {
            g
        }
    }

    pub fn generator_name(&self, g: usize) -> String {
        let r = self.rank();
        if g < r {
            format!("A_{g}")
        } else {
            format!("E*_{}", g - r)
        }
    }

    /// `E_i* 1`, the indicator vector of `x R_i`.
    pub fn estar_one(&self, i: usize) -> Vec<u32> {
        self.masks[i].iter().map(|&b| b as u32).collect()
    }

    fn check_index(&self, i: usize) -> Result<(), TalgError> {
        if i >= self.rank() {
            Err(TalgError::IndexOutOfRange { index: i, d: self.rank() - 1 })
        } else {
            Ok(())
        }
    }

    /// `E_i* A_j E_l*`, read off by masking rows and columns of `A_j`.
    pub fn triple_product(&self, i: usize, j: usize, l: usize) -> Result<GfpMatrix, TalgError> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(l)?;
        Ok(self.masked(&self.adjacency[j], i, l))
    }

    /// `E_i* J E_j*`
    pub fn ejej(&self, i: usize, j: usize) -> GfpMatrix {
        self.masked(&self.all_ones, i, j)
    }

    fn masked(&self, m: &GfpMatrix, row_rel: usize, col_rel: usize) -> GfpMatrix {
        let n = self.n();
        let mut out = GfpMatrix::zeros(n, n);
        for r in (0..n).filter(|&r| self.masks[row_rel][r]) {
            for c in (0..n).filter(|&c| self.masks[col_rel][c]) {
                out.set(r, c, m.get(r, c));
            }
        }
        out
    }

    fn verify_identities(&self) -> Result<(), TalgError> {
        let f = &self.field;
        let n = self.n();
        let r = self.rank();
        let fail = |what: String| Err(TalgError::IdentityViolated(what));

        for i in 0..r {
            if self.adjacency[i].transpose() != self.adjacency[self.scheme.converse(i)] {
                return fail(format!("A_{i}^t != A_{i}'"));
            }
            if self.dual[i].transpose() != self.dual[i] {
                return fail(format!("E*_{i} not symmetric"));
            }
        }
        let id = GfpMatrix::identity(n);
        if self.adjacency[0] != id {
            return fail("A_0 != I".into());
        }
        let sum_e = self.dual.iter().fold(GfpMatrix::zeros(n, n), |acc, e| acc.add(e, f));
        if sum_e != id {
            return fail("sum of E*_i != I".into());
        }
        let sum_a = self.adjacency.iter().fold(GfpMatrix::zeros(n, n), |acc, a| acc.add(a, f));
        if sum_a != self.all_ones {
            return fail("sum of A_i != J".into());
        }
        for i in 0..r {
            for j in 0..r {
                let prod = self.dual[i].mul(&self.dual[j], f);
                let expected = if i == j { self.dual[i].clone() } else { GfpMatrix::zeros(n, n) };
                if prod != expected {
                    return fail(format!("E*_{i} E*_{j} != delta E*_{i}"));
                }
                if self.dual[i].mul(&self.all_ones, f).mul(&self.dual[j], f).is_zero() {
                    return fail(format!("E*_{i} J E*_{j} = O"));
                }
            }
            let lhs = self.all_ones.mul(&self.dual[i], f).mul_vec(&self.ones, f);
            let k = self.kbar(i);
            if lhs.iter().any(|&v| v != k) {
                return fail(format!("J E*_{i} 1 != k_{i} 1"));
            }
        }
        Ok(())
    }
}

/// Builds `A_i`, `E_i*(x)`, `J` and `1`, asserting the basic matrix identities
/// they satisfy before anything downstream relies on them.
pub fn build_context(s: &SchemeData, f: &FieldCtx, x: usize) -> Result<TalgContext, TalgError> {
    let n = s.n();
    if x >= n {
        return Err(TalgError::BasePointOutOfRange { x, n });
    }
    let r = s.rank();
    let mut adjacency = vec![GfpMatrix::zeros(n, n); r];
    for u in 0..n {
        for v in 0..n {
            adjacency[s.relation(u, v)].set(u, v, 1 % f.p());
        }
    }
    let masks: Vec<Vec<bool>> = (0..r)
        .map(|i| (0..n).map(|z| s.relation(x, z) == i).collect())
        .collect();
    let dual = masks
        .iter()
        .map(|m| GfpMatrix::diagonal(&m.iter().map(|&b| b as u32).collect::<Vec<_>>()))
        .collect();
    let ctx = TalgContext {
        scheme: s.clone(),
        field: *f,
        base_point: x,
        adjacency,
        dual,
        masks,
        ones: vec![1; n],
        all_ones: GfpMatrix::from_raw(n, n, vec![1; n * n]),
    };
    ctx.verify_identities()?;
    Ok(ctx)
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{CompositionFactor, ModuleAction, PrimaryError};
use crate::ffmat::{kernel, FieldCtx, GfpMatrix};
use crate::scheme::SchemeData;

const EXHAUSTIVE_LIMIT: u64 = 100_000;
const SAMPLES: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfContraVerdict {
    pub isomorphic: bool,
    /// False when the search sampled the hom space and found nothing; the
    /// negative answer is then only probable.
    pub exhaustive: bool,
    pub hom_dim: usize,
    #[serde(skip)]
    pub witness: Option<GfpMatrix>,
}

/// `rho°(g) = rho(g^t)^T`.
pub fn contragredient_action(m: &ModuleAction) -> ModuleAction {
    ModuleAction {
        dim: m.dim,
        gens: m.transpose.iter().map(|&t| m.gens[t].transpose()).collect(),
        transpose: m.transpose.clone(),
    }
}

/// `{Phi : Phi rho(g) = rho°(g) Phi}` as a list of basis matrices.
fn hom_space(m: &ModuleAction, dual: &ModuleAction, f: &FieldCtx) -> Vec<GfpMatrix> {
    let k = m.dim;
    let unknowns = k * k;
    let mut eqs = GfpMatrix::zeros(m.gens.len() * unknowns, unknowns);
    for (g, (a, b)) in m.gens.iter().zip(&dual.gens).enumerate() {
        // (Phi a - b Phi)[r][c] = sum_s Phi[r][s] a[s][c] - b[r][s] Phi[s][c]
        for r in 0..k {
            for c in 0..k {
                let row = g * unknowns + r * k + c;
                for s in 0..k {
                    let u = r * k + s;
                    eqs.set(row, u, f.add(eqs.get(row, u), a.get(s, c)));
                    let u = s * k + c;
                    eqs.set(row, u, f.sub(eqs.get(row, u), b.get(r, s)));
                }
            }
        }
    }
    kernel(&eqs, f)
        .basis()
        .iter()
        .map(|v| GfpMatrix::from_vec(k, k, v.clone(), f).expect("k x k"))
        .collect()
}

fn combine(basis: &[GfpMatrix], coeffs: &[u32], k: usize, f: &FieldCtx) -> GfpMatrix {
    basis
        .iter()
        .zip(coeffs)
        .fold(GfpMatrix::zeros(k, k), |acc, (b, &c)| acc.add(&b.scale(c, f), f))
}

/// Searches the hom space to the contragredient for an invertible element:
/// every projective point when there are at most 10^5 of them, otherwise
/// 256 seeded random samples.
pub fn is_selfcontragredient(m: &ModuleAction, f: &FieldCtx) -> SelfContraVerdict {
    let k = m.dim;
    let dual = contragredient_action(m);
    let h = hom_space(m, &dual, f);
    let hom_dim = h.len();
    let found = |coeffs: &[u32]| {
        let phi = combine(&h, coeffs, k, f);
        phi.is_invertible(f).then_some(phi)
    };
    let p = f.p() as u64;
    let points = (0..hom_dim as u32).try_fold(0u64, |acc, _| acc.checked_mul(p)?.checked_add(1));
    let exhaustive = points.is_some_and(|c| c <= EXHAUSTIVE_LIMIT);
    let mut witness = None;
    if exhaustive {
        // projective representatives: first nonzero coefficient equal to 1
        'outer: for lead in 0..hom_dim {
            let tail = hom_dim - lead - 1;
            let count = p.pow(tail as u32);
            for idx in 0..count {
                let mut coeffs = vec![0u32; hom_dim];
                coeffs[lead] = 1;
                let mut x = idx;
                for c in coeffs[lead + 1..].iter_mut() {
                    *c = (x % p) as u32;
                    x /= p;
                }
                if let Some(phi) = found(&coeffs) {
                    witness = Some(phi);
                    break 'outer;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLES {
            let coeffs: Vec<u32> = (0..hom_dim).map(|_| rng.gen_range(0..f.p())).collect();
            if let Some(phi) = found(&coeffs) {
                witness = Some(phi);
                break;
            }
        }
    }
    SelfContraVerdict {
        isomorphic: witness.is_some(),
        exhaustive: exhaustive || witness.is_some(),
        hom_dim,
        witness,
    }
}

/// The explicit duality of `Irr_n(C)`: `Phi = diag(q_i mod p)` with
/// `k_i = p^n q_i`, checked to be invertible and to intertwine the factor
/// with its contragredient.
pub fn factor_duality(
    s: &SchemeData,
    factor: &CompositionFactor,
    action: &ModuleAction,
    f: &FieldCtx,
) -> Result<GfpMatrix, PrimaryError> {
    let p = f.p() as u64;
    let scale = p.pow(factor.level as u32);
    let diag: Vec<u32> = factor
        .class
        .iter()
        .map(|&i| f.reduce(s.valency(i) / scale))
        .collect();
    let phi = GfpMatrix::diagonal(&diag);
    if !phi.is_invertible(f) {
        return Err(PrimaryError::InternalInconsistency(format!(
            "duality map of Irr_{}({:?}) is singular",
            factor.level, factor.class
        )));
    }
    let block = action.restrict(&factor.class);
    let dual = contragredient_action(&block);
    for (a, b) in block.gens.iter().zip(&dual.gens) {
        if phi.mul(a, f) != b.mul(&phi, f) {
            return Err(PrimaryError::InternalInconsistency(format!(
                "duality map of Irr_{}({:?}) does not intertwine",
                factor.level, factor.class
            )));
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn identity_generator_stays_identity() {
        let f = gf(3);
        let m = ModuleAction {
            dim: 2,
            gens: vec![GfpMatrix::identity(2)],
            transpose: vec![0],
        };
        assert_eq!(contragredient_action(&m).gens[0], GfpMatrix::identity(2));
        assert!(is_selfcontragredient(&m, &f).isomorphic);
    }

    #[test]
    fn double_dual_is_original() {
        let f = gf(5);
        let a = GfpMatrix::from_rows(&[vec![1, 2], vec![0, 3]], &f).unwrap();
        let m = ModuleAction {
            dim: 2,
            gens: vec![a.clone(), a.transpose()],
            transpose: vec![1, 0],
        };
        assert_eq!(contragredient_action(&contragredient_action(&m)), m);
    }

    #[test]
    fn trivial_one_dimensional() {
        let f = gf(2);
        let m = ModuleAction {
            dim: 1,
            gens: vec![GfpMatrix::identity(1), GfpMatrix::zeros(1, 1)],
            transpose: vec![0, 1],
        };
        let v = is_selfcontragredient(&m, &f);
        assert!(v.isomorphic && v.exhaustive);
        assert_eq!(v.hom_dim, 1);
    }

    #[test]
    fn nilpotent_with_projection_is_not_self_dual() {
        let f = gf(3);
        let n = GfpMatrix::from_rows(&[vec![0, 1], vec![0, 0]], &f).unwrap();
        let e = GfpMatrix::from_rows(&[vec![1, 0], vec![0, 0]], &f).unwrap();
        let m = ModuleAction {
            dim: 2,
            gens: vec![n.clone(), e.clone()],
            transpose: vec![0, 1],
        };
        // Phi E = E Phi makes Phi diagonal, then Phi N = N^T Phi kills it
        let v = is_selfcontragredient(&m, &f);
        assert!(!v.isomorphic);
        assert!(v.exhaustive);
    }
}

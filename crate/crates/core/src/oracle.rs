//! Slow, independent recomputations used to cross-check the fast paths.
//! Every routine here is exhaustive and only meant for tiny inputs.

use crate::ffmat::{FieldCtx, GfpMatrix, Subspace};
use crate::primary::ModuleAction;
use crate::scheme::RelationTable;
use crate::talg::{AlgebraBasis, TalgContext};

/// Accepts iff the relations form a scheme, decided from integer products
/// of the 0/1 adjacency matrices: `A_0 = I`, the transpose of each `A_i` is
/// some `A_j`, and every `A_i A_j` is constant on each relation.
pub fn brute_force_axioms(t: &RelationTable) -> bool {
    let n = t.n();
    let r = t.d() + 1;
    let adj: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..n * n).map(|k| (t.get(k / n, k % n) == i) as u64).collect())
        .collect();
    let identity: Vec<u64> = (0..n * n).map(|k| (k / n == k % n) as u64).collect();
    if adj[0] != identity {
        return false;
    }
    for a in &adj {
        let at: Vec<u64> = (0..n * n).map(|k| a[(k % n) * n + k / n]).collect();
        if !adj.contains(&at) {
            return false;
        }
    }
    for a in &adj {
        for b in &adj {
            let mut value = vec![None; r];
            for x in 0..n {
                for y in 0..n {
                    let c: u64 = (0..n).map(|z| a[x * n + z] * b[z * n + y]).sum();
                    let l = t.get(x, y);
                    match value[l] {
                        None => value[l] = Some(c),
                        Some(v) if v != c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}

/// `T(x)` as the span of `I` and all products of the triples
/// `E_i* A_j E_l*`, grown by left multiplication with triples until stable.
pub fn word_closure(ctx: &TalgContext) -> Subspace {
    let f = ctx.field();
    let n = ctx.n();
    let r = ctx.rank();
    let mut triples = Vec::with_capacity(r * r * r);
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                let m = ctx.estar(i).mul(ctx.a(j), f).mul(ctx.estar(l), f);
                if !m.is_zero() {
                    triples.push(m);
                }
            }
        }
    }
    let mut span = Subspace::zero(n * n);
    span.insert(GfpMatrix::identity(n).as_slice(), f).expect("n x n");
    let mut words: Vec<GfpMatrix> = Vec::new();
    for t in &triples {
        if span.insert(t.as_slice(), f).expect("n x n") {
            words.push(t.clone());
        }
    }
    while !words.is_empty() {
        let mut longer = Vec::new();
        for w in &words {
            for t in &triples {
                let m = t.mul(w, f);
                if span.insert(m.as_slice(), f).expect("n x n") {
                    longer.push(m);
                }
            }
        }
        words = longer;
    }
    span
}

/// All subspaces of `GF(p)^dim`, each as an echelon basis.
pub fn all_subspaces(dim: usize, f: &FieldCtx) -> Vec<Subspace> {
    fn extend(
        dim: usize,
        rows: &mut Vec<Vec<u32>>,
        next_col: usize,
        f: &FieldCtx,
        out: &mut Vec<Subspace>,
    ) {
        out.push(Subspace::span(dim, rows.iter(), f).expect("dim"));
        for pivot in next_col..dim {
            // free entries of the new row lie right of its pivot
            let free: Vec<usize> = (pivot + 1..dim).collect();
            let count = (f.p() as u64).pow(free.len() as u32);
            for code in 0..count {
                let mut row = vec![0u32; dim];
                row[pivot] = 1;
                let mut c = code;
                for &col in &free {
                    row[col] = (c % f.p() as u64) as u32;
                    c /= f.p() as u64;
                }
                // earlier rows must vanish at this pivot for echelon form
                let mut grown: Vec<Vec<u32>> = rows.clone();
                if grown.iter().any(|r| r[pivot] != 0) {
                    continue;
                }
                grown.push(row);
                let before = out.len();
                extend(dim, &mut grown, pivot + 1, f, out);
                debug_assert!(out.len() > before);
            }
        }
    }
    let mut out = Vec::new();
    extend(dim, &mut Vec::new(), 0, f, &mut out);
    out.sort_by(|a, b| a.basis().cmp(b.basis()));
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSummary {
    pub submodules: usize,
    pub composition_length: usize,
    /// Sorted factor dimensions along one composition series.
    pub factor_dims: Vec<usize>,
    pub uniserial: bool,
}

/// Enumerates every invariant subspace of the module and reads off a
/// composition series and whether the lattice is a chain.
pub fn submodule_lattice(m: &ModuleAction, f: &FieldCtx) -> LatticeSummary {
    let subs: Vec<Subspace> = all_subspaces(m.dim, f)
        .into_iter()
        .filter(|s| m.is_invariant(s, f))
        .collect();
    let within = |a: &Subspace, b: &Subspace| b.contains(a, f).expect("same ambient");
    let uniserial = subs
        .iter()
        .all(|a| subs.iter().all(|b| within(a, b) || within(b, a)));
    let mut current = Subspace::zero(m.dim);
    let mut factor_dims = Vec::new();
    while current.dim() < m.dim {
        let next = subs
            .iter()
            .filter(|s| s.dim() > current.dim() && within(&current, s))
            .min_by_key(|s| s.dim())
            .expect("the whole space is a submodule");
        factor_dims.push(next.dim() - current.dim());
        current = next.clone();
    }
    factor_dims.sort_unstable();
    LatticeSummary {
        submodules: subs.len(),
        composition_length: factor_dims.len(),
        factor_dims,
        uniserial,
    }
}

fn is_nilpotent(m: &GfpMatrix, f: &FieldCtx) -> bool {
    let mut power = m.clone();
    for _ in 0..m.rows() {
        if power.is_zero() {
            return true;
        }
        power = power.mul(m, f);
    }
    power.is_zero()
}

/// `{a : a x nilpotent for every x in A}` by listing all `p^dim` elements,
/// or `None` when that exceeds `limit`.
pub fn brute_force_radical(a: &AlgebraBasis, f: &FieldCtx, limit: u64) -> Option<Subspace> {
    let p = f.p() as u64;
    let total = p.checked_pow(a.dim() as u32).filter(|&t| t <= limit)?;
    let element = |code: u64| {
        let mut c = code;
        let coeffs: Vec<u32> = (0..a.dim())
            .map(|_| {
                let v = (c % p) as u32;
                c /= p;
                v
            })
            .collect();
        a.combine(&coeffs, f)
    };
    let all: Vec<GfpMatrix> = (0..total).map(element).collect();
    let mut rad = Subspace::zero(a.n() * a.n());
    for x in &all {
        if all.iter().all(|y| is_nilpotent(&x.mul(y, f), f)) {
            rad.insert(x.as_slice(), f).expect("n x n");
        }
    }
    Some(rad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: 1 + 7 + 7 + 1 over GF(2)^3; 1 + 4 + 1 over GF(3)^2
        assert_eq!(all_subspaces(3, &FieldCtx::new(2).unwrap()).len(), 16);
        assert_eq!(all_subspaces(2, &FieldCtx::new(3).unwrap()).len(), 6);
    }

    #[test]
    fn upper_triangular_brute_radical() {
        let f = FieldCtx::new(2).unwrap();
        let mats = [
            GfpMatrix::from_rows(&[vec![1, 0], vec![0, 0]], &f).unwrap(),
            GfpMatrix::from_rows(&[vec![0, 1], vec![0, 0]], &f).unwrap(),
            GfpMatrix::from_rows(&[vec![0, 0], vec![0, 1]], &f).unwrap(),
        ];
        let a = AlgebraBasis::span(2, &mats, &f).unwrap();
        assert_eq!(brute_force_radical(&a, &f, 1 << 10).unwrap().dim(), 1);
    }

    #[test]
    fn axiom_oracle_rejects_path() {
        let rows = vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]];
        assert!(!brute_force_axioms(&RelationTable::from_rows(&rows).unwrap()));
        assert!(brute_force_axioms(&crate::scheme::gen_cyclic(6).unwrap()));
    }
}

//! Jacobson radical of a matrix algebra over GF(p).
//!
//! For `A` inside `M_n(GF(p))` put `I_{-1} = A` and, for `p^i <= n`,
//! `I_i = {a in I_{i-1} : g_i(ab) = 0 for all b in A}` where
//! `g_i(x) = (Tr(x~^{p^i}) mod p^{i+1}) / p^i` for an integer lift `x~`.
//! Each `g_i` is linear on `I_{i-1}`, so one evaluation per basis element and
//! the coordinates of `ab` suffice. The last `I_i` is `Rad(A)`.

use serde::Serialize;

use super::{is_two_sided_ideal, AlgebraBasis, TalgError};
use crate::ffmat::{kernel, FieldCtx, GfpMatrix, Subspace};

/// Evidence gathered while checking a claimed radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCertificate {
    pub dim: usize,
    /// Least `m` with `R^m = 0`.
    pub nilpotency_index: usize,
    /// Number of nonzero layers `R^j V / R^{j+1} V` of the natural module.
    pub layers: usize,
    pub quotient_dim: usize,
}

fn int_mat_mul(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = ((out[i * n + j] as u128 + x as u128 * b[k * n + j] as u128) % m as u128) as u64;
            }
        }
    }
    out
}

/// `g_i(x)` with `q = p^i`.
fn stage_functional(x: &GfpMatrix, q: u64, f: &FieldCtx) -> Result<u32, TalgError> {
    let p = f.p() as u64;
    if q == 1 {
        return Ok(x.trace(f));
    }
    let n = x.rows();
    let m = q * p;
    let mut base: Vec<u64> = x.as_slice().iter().map(|&v| v as u64).collect();
    let mut acc: Vec<u64> = (0..n * n).map(|k| (k / n == k % n) as u64).collect();
    let mut e = q;
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mat_mul(&acc, &base, n, m);
        }
        e >>= 1;
        if e > 0 {
            base = int_mat_mul(&base, &base, n, m);
        }
    }
    let tr = (0..n).fold(0u64, |t, i| (t + acc[i * n + i]) % m);
    if tr % q != 0 {
        return Err(TalgError::RadicalPostcondition(format!(
            "trace of a {q}-th power is {tr} mod {m}, not divisible by {q}"
        )));
    }
    Ok(((tr / q) % p) as u32)
}

/// The trace-functional iteration alone, with no postcondition checks.
pub fn radical_unchecked(a: &AlgebraBasis, f: &FieldCtx) -> Result<AlgebraBasis, TalgError> {
    let n = a.n();
    let p = f.p() as u64;
    let mut cur = AlgebraBasis::from_subspace(n, a.subspace().clone(), f);
    let mut q = 1u64;
    while q <= n as u64 && cur.dim() > 0 {
        let g = cur
            .elements()
            .iter()
            .map(|x| stage_functional(x, q, f))
            .collect::<Result<Vec<u32>, _>>()?;
        let mut m = GfpMatrix::zeros(a.dim(), cur.dim());
        for (s, y) in a.elements().iter().enumerate() {
            for (r, x) in cur.elements().iter().enumerate() {
                let c = cur.coords(&x.mul(y, f), f).ok_or_else(|| {
                    TalgError::RadicalPostcondition(format!("stage {q}: intermediate space is not a right ideal"))
                })?;
                let v = c.iter().zip(&g).fold(0, |acc, (&c, &gv)| f.axpy(acc, c, gv));
                m.set(s, r, v);
            }
        }
        let ker = kernel(&m, f);
        let mut next = Subspace::zero(n * n);
        for c in ker.basis() {
            next.insert(cur.combine(c, f).as_slice(), f)?;
        }
        cur = AlgebraBasis::from_subspace(n, next, f);
        q *= p;
    }
    Ok(cur)
}

/// Checks that `r` is a nilpotent two-sided ideal of `a` whose quotient,
/// realized on the layers `R^j V / R^{j+1} V` of `V = GF(p)^n`, is faithful
/// and has zero radical.
pub fn verify_radical(a: &AlgebraBasis, r: &AlgebraBasis, f: &FieldCtx) -> Result<RadicalCertificate, TalgError> {
    let fail = |msg: String| Err(TalgError::RadicalPostcondition(msg));
    let n = a.n();
    if r.n() != n || !a.subspace().contains(r.subspace(), f)? {
        return fail("claimed radical is not inside the algebra".into());
    }
    if let Err(e) = is_two_sided_ideal(r, a, f) {
        return fail(e.to_string());
    }

    let mut power = r.subspace().clone();
    let mut nilpotency_index = 1;
    while !power.is_zero() {
        nilpotency_index += 1;
        if nilpotency_index > a.dim() + 2 {
            return fail("claimed radical is not nilpotent".into());
        }
        let mut next = Subspace::zero(n * n);
        for x in power.basis() {
            let x = GfpMatrix::from_raw(n, n, x.clone());
            for y in r.elements() {
                next.insert(x.mul(y, f).as_slice(), f)?;
            }
        }
        power = next;
    }

    // layers of the natural module
    let mut flag = vec![Subspace::full(n)];
    while !flag.last().expect("nonempty").is_zero() {
        let top = flag.last().expect("nonempty");
        let mut next = Subspace::zero(n);
        for v in top.basis() {
            for y in r.elements() {
                next.insert(&y.mul_vec(v, f), f)?;
            }
        }
        if next == *top {
            return fail("radical layer does not shrink".into());
        }
        flag.push(next);
    }
    let layers = flag.len() - 1;
    let mut block_of = Vec::with_capacity(n);
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
    for j in 0..layers {
        for v in flag[j + 1].complement_in(&flag[j], f)? {
            block_of.push(j);
            columns.push(v);
        }
    }
    let mut basis = GfpMatrix::zeros(n, n);
    for (c, v) in columns.iter().enumerate() {
        for (row, &x) in v.iter().enumerate() {
            basis.set(row, c, x);
        }
    }
    let inv = basis
        .inverse(f)
        .ok_or_else(|| TalgError::RadicalPostcondition("layer basis is singular".into()))?;
    let graded = |x: &GfpMatrix| -> Result<GfpMatrix, TalgError> {
        let mut y = inv.mul(x, f).mul(&basis, f);
        for row in 0..n {
            for col in 0..n {
                if block_of[row] < block_of[col] && y.get(row, col) != 0 {
                    return Err(TalgError::RadicalPostcondition(
                        "algebra does not preserve the radical layers".into(),
                    ));
                }
                if block_of[row] != block_of[col] {
                    y.set(row, col, 0);
                }
            }
        }
        Ok(y)
    };
    for y in r.elements() {
        if !graded(y)?.is_zero() {
            return fail("radical acts nontrivially on its layers".into());
        }
    }
    let mut image = Subspace::zero(n * n);
    for x in a.elements() {
        image.insert(graded(x)?.as_slice(), f)?;
    }
    let quotient_dim = image.dim();
    if quotient_dim != a.dim() - r.dim() {
        return fail(format!(
            "quotient acts on the layers with dimension {quotient_dim}, expected {}",
            a.dim() - r.dim()
        ));
    }
    let rad_of_quotient = radical_unchecked(&AlgebraBasis::from_subspace(n, image, f), f)?;
    if rad_of_quotient.dim() != 0 {
        return fail(format!("quotient has a radical of dimension {}", rad_of_quotient.dim()));
    }
    Ok(RadicalCertificate {
        dim: r.dim(),
        nilpotency_index,
        layers,
        quotient_dim,
    })
}

/// `Rad(a)` with all postconditions checked.
pub fn radical(a: &AlgebraBasis, f: &FieldCtx) -> Result<(AlgebraBasis, RadicalCertificate), TalgError> {
    if !a.closed_under_product() {
        return Err(TalgError::RadicalPostcondition("input is not closed under product".into()));
    }
    let mut r = radical_unchecked(a, f)?;
    let cert = verify_radical(a, &r, f)?;
    r.verify_closed(f);
    Ok((r, cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn unit(n: usize, i: usize, j: usize) -> GfpMatrix {
        let mut m = GfpMatrix::zeros(n, n);
        m.set(i, j, 1);
        m
    }

    #[test]
    fn upper_triangular() {
        for p in [2, 3, 7] {
            let f = gf(p);
            let mats = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)];
            let a = AlgebraBasis::span(2, &mats, &f).unwrap();
            let (r, cert) = radical(&a, &f).unwrap();
            assert_eq!(r.dim(), 1);
            assert_eq!(r.elements()[0], unit(2, 0, 1));
            assert_eq!(cert.nilpotency_index, 2);
        }
    }

    #[test]
    fn full_matrix_algebra_is_semisimple() {
        for p in [2, 3] {
            let f = gf(p);
            let mats: Vec<_> = (0..4).map(|k| unit(2, k / 2, k % 2)).collect();
            let a = AlgebraBasis::span(2, &mats, &f).unwrap();
            assert_eq!(radical(&a, &f).unwrap().0.dim(), 0);
        }
    }

    #[test]
    fn group_algebra_in_characteristic_two() {
        // F_2[C_2] acting regularly: radical spanned by I + sigma
        let f = gf(2);
        let sigma = GfpMatrix::from_rows(&[vec![0, 1], vec![1, 0]], &f).unwrap();
        let a = AlgebraBasis::span(2, [&GfpMatrix::identity(2), &sigma], &f).unwrap();
        let (r, _) = radical(&a, &f).unwrap();
        assert_eq!(r.elements(), &[GfpMatrix::from_rows(&[vec![1, 1], vec![1, 1]], &f).unwrap()]);
    }

    #[test]
    fn group_algebra_needs_higher_stages() {
        // F_2[C_4] on 4 points: trace form vanishes identically, radical has dim 3
        let f = gf(2);
        let mut c = GfpMatrix::zeros(4, 4);
        for i in 0..4 {
            c.set((i + 1) % 4, i, 1);
        }
        let mut powers = vec![GfpMatrix::identity(4)];
        for k in 1..4 {
            powers.push(powers[k - 1].mul(&c, &f));
        }
        let a = AlgebraBasis::span(4, &powers, &f).unwrap();
        let (r, cert) = radical(&a, &f).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(cert.nilpotency_index, 4);
    }

    #[test]
    fn wrong_claims_are_rejected() {
        let f = gf(3);
        let mats = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)];
        let a = AlgebraBasis::span(2, &mats, &f).unwrap();
        let zero = AlgebraBasis::from_subspace(2, Subspace::zero(4), &f);
        assert!(verify_radical(&a, &zero, &f).is_err());
        let too_big = AlgebraBasis::span(2, [&unit(2, 0, 1), &unit(2, 1, 1)], &f).unwrap();
        assert!(verify_radical(&a, &too_big, &f).is_err());
    }
}

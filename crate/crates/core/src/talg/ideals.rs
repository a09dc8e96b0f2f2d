use super::{AlgebraBasis, TalgContext, TalgError};
use crate::ffmat::{kernel, FieldCtx, GfpMatrix, Subspace};

/// Checks `t i` and `i t` against the span of `ideal` for every pair of basis
/// elements.
pub fn is_two_sided_ideal(ideal: &AlgebraBasis, algebra: &AlgebraBasis, f: &FieldCtx) -> Result<(), TalgError> {
    for (s, t) in algebra.elements().iter().enumerate() {
        for (r, b) in ideal.elements().iter().enumerate() {
            if !ideal.contains(&t.mul(b, f), f) {
                return Err(TalgError::NotAnIdeal(format!("left product t_{s} b_{r} escapes")));
            }
            if !ideal.contains(&b.mul(t, f), f) {
                return Err(TalgError::NotAnIdeal(format!("right product b_{r} t_{s} escapes")));
            }
        }
    }
    Ok(())
}

/// `B_0 = span{E_i* J E_j*}` and its sub-span `B_1` over the pairs with
/// `p | k_i k_j`, both checked to be two-sided ideals of `t`.
pub fn b0_b1(ctx: &TalgContext, t: &AlgebraBasis) -> Result<(AlgebraBasis, AlgebraBasis), TalgError> {
    let f = ctx.field();
    let r = ctx.rank();
    let s = ctx.scheme();
    let mut all = Vec::with_capacity(r * r);
    let mut thick = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let m = ctx.ejej(i, j);
            if f.divides(s.valency(i) * s.valency(j)) {
                thick.push(m.clone());
            }
            all.push(m);
        }
    }
    let b0 = AlgebraBasis::span(ctx.n(), &all, f)?;
    let b1 = AlgebraBasis::span(ctx.n(), &thick, f)?;
    if b0.dim() != r * r {
        return Err(TalgError::NotAnIdeal(format!("dim B0 = {} instead of {}", b0.dim(), r * r)));
    }
    if b1.dim() != thick.len() {
        return Err(TalgError::NotAnIdeal(format!(
            "dim B1 = {} instead of {}",
            b1.dim(),
            thick.len()
        )));
    }
    is_two_sided_ideal(&b0, t, f)?;
    is_two_sided_ideal(&b1, t, f)?;
    Ok((b0, b1))
}

/// `e = sum_i k_i^{-1} E_i* J E_i*` for a p'-valenced scheme, checked to be
/// the identity of `b0` and central in `t`.
pub fn b0_identity(ctx: &TalgContext, t: &AlgebraBasis, b0: &AlgebraBasis) -> Result<GfpMatrix, TalgError> {
    let f = ctx.field();
    let n = ctx.n();
    let mut e = GfpMatrix::zeros(n, n);
    for i in 0..ctx.rank() {
        let inv = f
            .inv(ctx.kbar(i))
            .ok_or(TalgError::NotPPrimeValenced { relation: i })?;
        e = e.add(&ctx.ejej(i, i).scale(inv, f), f);
    }
    for (r, b) in b0.elements().iter().enumerate() {
        if &e.mul(b, f) != b || &b.mul(&e, f) != b {
            return Err(TalgError::IdentityElement(format!("e fails on B0 basis element {r}")));
        }
    }
    for (s, z) in t.elements().iter().enumerate() {
        if e.mul(z, f) != z.mul(&e, f) {
            return Err(TalgError::IdentityElement(format!("e does not commute with T basis element {s}")));
        }
    }
    Ok(e)
}

/// `Ann_T(W_0)`: the kernel of `Z -> (Z E_0* 1, ..., Z E_d* 1)` on `t`,
/// returned as an ideal of `t`.
pub fn annihilator_w0(ctx: &TalgContext, t: &AlgebraBasis) -> Result<AlgebraBasis, TalgError> {
    let f = ctx.field();
    let n = ctx.n();
    let r = ctx.rank();
    let mut m = GfpMatrix::zeros(n * r, t.dim());
    for (s, z) in t.elements().iter().enumerate() {
        for i in 0..r {
            let v = z.mul_vec(&ctx.estar_one(i), f);
            for (row, &x) in v.iter().enumerate() {
                m.set(i * n + row, s, x);
            }
        }
    }
    let ker = kernel(&m, f);
    let mut ann = Subspace::zero(n * n);
    for c in ker.basis() {
        ann.insert(t.combine(c, f).as_slice(), f)?;
    }
    let mut ann = AlgebraBasis::from_subspace(n, ann, f);
    is_two_sided_ideal(&ann, t, f)?;
    ann.verify_closed(f);
    Ok(ann)
}

/// Some `i` with `p | k_i` and `(E_i* J E_0* + E_0* J E_i*)^2 = E_i* J E_i* != O`.
pub fn square_witness(ctx: &TalgContext) -> Option<usize> {
    let f = ctx.field();
    (1..ctx.rank()).find(|&i| {
        if !f.divides(ctx.scheme().valency(i)) {
            return false;
        }
        let x = ctx.ejej(i, 0).add(&ctx.ejej(0, i), f);
        let target = ctx.ejej(i, i);
        !target.is_zero() && x.mul(&x, f) == target
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{gen_cyclic, gen_hamming, gen_thin, generators::s3_table, validate_axioms, RelationTable};
    use crate::talg::{build_context, generate_algebra};

    fn setup(t: RelationTable, p: u64) -> (TalgContext, AlgebraBasis) {
        let s = validate_axioms(&t).unwrap();
        let c = build_context(&s, &FieldCtx::new(p).unwrap(), 0).unwrap();
        let a = generate_algebra(&c);
        (c, a)
    }

    #[test]
    fn hamming_b1_dimension() {
        let (c, t) = setup(gen_hamming(2, 2).unwrap(), 2);
        let (b0, b1) = b0_b1(&c, &t).unwrap();
        assert_eq!(b0.dim(), 9);
        assert_eq!(b1.dim(), 5);
        assert!(matches!(b0_identity(&c, &t, &b0), Err(TalgError::NotPPrimeValenced { relation: 1 })));
    }

    #[test]
    fn p_prime_valenced_has_no_b1() {
        let (c, t) = setup(gen_cyclic(5).unwrap(), 3);
        let (b0, b1) = b0_b1(&c, &t).unwrap();
        assert_eq!(b1.dim(), 0);
        let e = b0_identity(&c, &t, &b0).unwrap();
        assert!(b0.contains(&e, c.field()));
    }

    #[test]
    fn thin_identity_is_sum_of_diagonal_blocks() {
        let (c, t) = setup(gen_thin(&s3_table()).unwrap(), 2);
        let (b0, _) = b0_b1(&c, &t).unwrap();
        let f = c.field();
        let expected = (0..c.rank()).fold(GfpMatrix::zeros(6, 6), |acc, i| acc.add(&c.ejej(i, i), f));
        assert_eq!(b0_identity(&c, &t, &b0).unwrap(), expected);
    }

    #[test]
    fn one_point_annihilator_is_zero() {
        let (c, t) = setup(RelationTable::from_entries(1, vec![0]).unwrap(), 2);
        assert_eq!(annihilator_w0(&c, &t).unwrap().dim(), 0);
    }

    #[test]
    fn cyclic_five_annihilator_element() {
        let (c, t) = setup(gen_cyclic(5).unwrap(), 3);
        let f = c.field();
        let ann = annihilator_w0(&c, &t).unwrap();
        let z = c
            .triple_product(1, 1, 2)
            .unwrap()
            .sub(&c.triple_product(1, 2, 2).unwrap(), f);
        assert!(!z.is_zero());
        assert!(ann.contains(&z, f));
        for i in 0..c.rank() {
            assert!(z.mul_vec(&c.estar_one(i), f).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn non_ideal_is_rejected() {
        let (c, t) = setup(gen_cyclic(5).unwrap(), 3);
        let f = c.field();
        let single = AlgebraBasis::span(5, [c.estar(1)], f).unwrap();
        assert!(matches!(is_two_sided_ideal(&single, &t, f), Err(TalgError::NotAnIdeal(_))));
    }
}

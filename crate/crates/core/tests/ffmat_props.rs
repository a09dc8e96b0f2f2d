use std::collections::HashSet;

use proptest::prelude::*;
use terwilliger::ffmat::kernel;
use terwilliger::{FieldCtx, GfpMatrix, Subspace};

fn gf(p: u64) -> FieldCtx {
    FieldCtx::new(p).unwrap()
}

fn matrix(rows: usize, cols: usize, p: u32) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, cols), rows)
}

/// Leibniz determinant mod p.
fn det(m: &[Vec<u32>], p: u64) -> u64 {
    let k = m.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut total = 0u64;
    loop {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let prod = (0..k).fold(1u64, |acc, i| acc * m[i][perm[i]] as u64 % p);
        total = if inversions % 2 == 0 { (total + prod) % p } else { (total + p - prod) % p };
        // next permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn minor_rank(m: &[Vec<u32>], p: u64) -> usize {
    let (r, c) = (m.len(), m[0].len());
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets(r, k).iter().any(|rows| {
                subsets(c, k).iter().any(|cols| {
                    let sub: Vec<Vec<u32>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                    det(&sub, p) != 0
                })
            })
        })
        .unwrap_or(0)
}

/// Every element of the span, listed by brute force.
fn elements(gens: &[Vec<u32>], ambient: usize, p: u32) -> HashSet<Vec<u32>> {
    let mut set = HashSet::new();
    set.insert(vec![0; ambient]);
    for g in gens {
        let current: Vec<Vec<u32>> = set.iter().cloned().collect();
        for v in current {
            for c in 1..p {
                set.insert(v.iter().zip(g).map(|(&a, &b)| (a + c * b) % p).collect());
            }
        }
    }
    set
}

fn log_p(size: usize, p: u32) -> usize {
    let mut d = 0;
    let mut s = 1;
    while s < size {
        s *= p as usize;
        d += 1;
    }
    assert_eq!(s, size);
    d
}

proptest! {
    #[test]
    fn rank_matches_minor_oracle(rows in matrix(6, 6, 3)) {
        let f = gf(3);
        let m = GfpMatrix::from_rows(&rows, &f).unwrap();
        prop_assert_eq!(m.rank(&f), minor_rank(&rows, 3));
    }

    #[test]
    fn rref_idempotent_and_rank_transpose(rows in matrix(4, 7, 5)) {
        let f = gf(5);
        let m = GfpMatrix::from_rows(&rows, &f).unwrap();
        let (r, rank, pivots) = m.rref(&f);
        let (r2, rank2, pivots2) = r.rref(&f);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(pivots, pivots2);
        prop_assert_eq!(rank, m.transpose().rank(&f));
        prop_assert_eq!(kernel(&m, &f).dim(), 7 - rank);
    }

    #[test]
    fn basis_vectors_are_members(rows in matrix(4, 5, 7)) {
        let f = gf(7);
        let s = Subspace::span(5, &rows, &f).unwrap();
        for v in s.basis() {
            prop_assert!(s.member(v, &f).unwrap());
        }
        for v in &rows {
            prop_assert!(s.member(v, &f).unwrap());
        }
    }

    #[test]
    fn grassmann_against_enumeration(
        ambient in 1usize..=6,
        a in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..4),
        b in prop::collection::vec(prop::collection::vec(0u32..3, 6), 0..4),
    ) {
        let f = gf(3);
        let a: Vec<Vec<u32>> = a.into_iter().map(|v| v[..ambient].to_vec()).collect();
        let b: Vec<Vec<u32>> = b.into_iter().map(|v| v[..ambient].to_vec()).collect();
        let sa = Subspace::span(ambient, &a, &f).unwrap();
        let sb = Subspace::span(ambient, &b, &f).unwrap();
        let sum = sa.sum(&sb, &f).unwrap();
        let meet = sa.intersect(&sb, &f).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());

        let ea = elements(&a, ambient, 3);
        let eb = elements(&b, ambient, 3);
        prop_assert_eq!(sa.dim(), log_p(ea.len(), 3));
        prop_assert_eq!(meet.dim(), log_p(ea.intersection(&eb).count(), 3));
        let sums: HashSet<Vec<u32>> = ea
            .iter()
            .flat_map(|x| eb.iter().map(move |y| x.iter().zip(y).map(|(&u, &v)| (u + v) % 3).collect()))
            .collect();
        prop_assert_eq!(sum.dim(), log_p(sums.len(), 3));
    }
}

#[test]
fn field_construction() {
    assert_eq!(gf(5).p(), 5);
    assert_eq!(gf(2).p(), 2);
    assert!(FieldCtx::new(4).is_err());
}

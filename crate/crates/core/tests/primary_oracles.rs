mod common;

use terwilliger::oracle::submodule_lattice;
use terwilliger::primary::{
    build_primary, closure_digraph, composition_factors, factor_duality, filtration, is_selfcontragredient,
    uniserial_check, verify_ml_iso,
};
use terwilliger::scheme::strata;
use terwilliger::talg::radical;
use terwilliger::FieldCtx;

struct Fast {
    length: usize,
    dims: Vec<usize>,
    uniserial: bool,
}

fn fast_path(s: &terwilliger::SchemeData, p: u64) -> (Fast, terwilliger::primary::PrimaryModule) {
    let (c, t) = common::algebra(s, p, 0);
    let f = c.field();
    let m = build_primary(&c).unwrap();
    let st = strata(s, f);
    let w = filtration(&m, &st, f).unwrap();
    let rep = composition_factors(&m, &st, &closure_digraph(s, f), &w, f).unwrap();
    let (rad, _) = radical(&t, f).unwrap();
    let uniserial = uniserial_check(&c, &m, &rep, &w, &rad).unwrap();
    let mut dims = rep.factor_dims();
    dims.sort_unstable();
    (Fast { length: rep.composition_length, dims, uniserial }, m)
}

#[test]
fn lattice_oracle_agrees_on_small_fixtures() {
    let mut compared = 0;
    for (name, s) in common::all() {
        if s.d() > 3 {
            continue;
        }
        for p in [2, 3] {
            let (fast, m) = fast_path(&s, p);
            let oracle = submodule_lattice(&m.action, &FieldCtx::new(p).unwrap());
            assert_eq!(fast.length, oracle.composition_length, "{name} p={p}");
            assert_eq!(fast.dims, oracle.factor_dims, "{name} p={p}");
            assert_eq!(fast.uniserial, oracle.uniserial, "{name} p={p}");
            compared += 1;
        }
    }
    assert!(compared >= 10);
}

#[test]
fn lattice_oracle_on_order_twelve() {
    // d = 4 is outside the routine sweep but still enumerable over GF(2)
    let s = common::load("as12-21.scheme");
    let (fast, m) = fast_path(&s, 2);
    let oracle = submodule_lattice(&m.action, &FieldCtx::new(2).unwrap());
    assert_eq!((fast.length, fast.uniserial), (4, false));
    assert_eq!((oracle.composition_length, oracle.uniserial), (4, false));
    assert_eq!(oracle.factor_dims, vec![1, 1, 1, 2]);
}

#[test]
fn cyclic_five_over_gf2() {
    let s = common::load("z5.scheme");
    let (fast, m) = fast_path(&s, 2);
    let oracle = submodule_lattice(&m.action, &FieldCtx::new(2).unwrap());
    assert_eq!(fast.length, 2);
    assert_eq!(fast.dims, vec![1, 2]);
    assert_eq!(oracle.composition_length, 2);
    assert!(oracle.uniserial && fast.uniserial);
}

#[test]
fn order_twelve_classes() {
    let s = common::load("as12-21.scheme");
    let f2 = FieldCtx::new(2).unwrap();
    let g = closure_digraph(&s, &f2);
    assert!(!g.related(3, 4));
    let st = strata(&s, &f2);
    assert_eq!(g.restrict(&st.sets[0]), vec![vec![0, 1]]);
    assert_eq!(g.restrict(&st.sets[1]), vec![vec![2]]);
    assert_eq!(g.restrict(&st.sets[2]), vec![vec![3], vec![4]]);
    let g3 = closure_digraph(&s, &FieldCtx::new(3).unwrap());
    assert!(g3.related(3, 4));
}

#[test]
fn class_one_is_uniserial() {
    for (name, s) in common::all() {
        if s.d() != 1 {
            continue;
        }
        for p in [2, 3, 5] {
            assert!(fast_path(&s, p).0.uniserial, "{name} p={p}");
        }
    }
}

#[test]
fn self_duality_tracks_valencies() {
    for (name, s) in common::all() {
        for p in [2, 3, 5, 7] {
            let (c, _) = common::algebra(&s, p, 0);
            let f = c.field();
            let m = build_primary(&c).unwrap();
            let st = strata(&s, f);
            let verdict = is_selfcontragredient(&m.action, f);
            assert!(verdict.exhaustive);
            assert_eq!(verdict.isomorphic, st.p_prime_valenced, "{name} p={p}");
            let w = filtration(&m, &st, f).unwrap();
            let rep = composition_factors(&m, &st, &closure_digraph(&s, f), &w, f).unwrap();
            for factor in &rep.factors {
                factor_duality(&s, factor, &m.action, f).unwrap();
                let block = m.action.restrict(&factor.class);
                assert!(is_selfcontragredient(&block, f).isomorphic, "{name} p={p} {factor:?}");
            }
        }
    }
}

#[test]
fn m_l_modules_are_copies_of_w0() {
    let s = common::load("z5.scheme");
    for p in [2, 3] {
        let (c, _) = common::algebra(&s, p, 0);
        let m = build_primary(&c).unwrap();
        for l in 0..s.rank() {
            assert!(verify_ml_iso(&c, &m, l).unwrap(), "p={p} l={l}");
        }
    }
}

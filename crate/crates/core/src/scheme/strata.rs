use serde::Serialize;

use super::SchemeData;
use crate::ffmat::FieldCtx;

/// Partition of the relation indices by the p-adic valuation of the valencies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strata {
    pub p: u32,
    /// `sets[n] = S_n = {i : v_p(k_i) = n}` for `n` in `[0, epsilon]`.
    pub sets: Vec<Vec<usize>>,
    pub epsilon: usize,
    /// Indices of the thin relations (`k_i = 1`).
    pub thin: Vec<usize>,
    pub p_prime_valenced: bool,
}

impl Strata {
    /// Valuation level of relation `i`.
    pub fn level(&self, i: usize) -> usize {
        self.sets
            .iter()
            .position(|s| s.contains(&i))
            .expect("strata partition [0, d]")
    }

    pub fn is_thin(&self, i: usize) -> bool {
        self.thin.binary_search(&i).is_ok()
    }
}

pub fn strata(s: &SchemeData, f: &FieldCtx) -> Strata {
    let levels: Vec<usize> = s.valencies().iter().map(|&k| f.valuation(k) as usize).collect();
    let epsilon = levels.iter().copied().max().unwrap_or(0);
    let mut sets = vec![Vec::new(); epsilon + 1];
    for (i, &v) in levels.iter().enumerate() {
        sets[v].push(i);
    }
    let thin = (0..s.rank()).filter(|&i| s.valency(i) == 1).collect();
    Strata {
        p: f.p(),
        sets,
        epsilon,
        thin,
        p_prime_valenced: epsilon == 0,
    }
}

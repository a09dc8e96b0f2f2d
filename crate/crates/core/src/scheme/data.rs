use super::{RelationTable, SchemeError};

/// A validated association scheme with its integer intersection tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeData {
    table: RelationTable,
    converse: Vec<usize>,
    valencies: Vec<u64>,
    /// `tensor[(i * (d+1) + j) * (d+1) + l] = p_ij^l`
    tensor: Vec<u64>,
}

impl SchemeData {
    #[inline]
    pub fn n(&self) -> usize {
        self.table.n()
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.table.d()
    }

    /// Number of relations, `d + 1`.
    #[inline]
    pub fn rank(&self) -> usize {
        self.table.d() + 1
    }

    pub fn table(&self) -> &RelationTable {
        &self.table
    }

    #[inline]
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// The index `i'` with `R_{i'} = R_i^t`.
    #[inline]
    pub fn converse(&self, i: usize) -> usize {
        self.converse[i]
    }

    pub fn converses(&self) -> &[usize] {
        &self.converse
    }

    #[inline]
    pub fn valency(&self, i: usize) -> u64 {
        self.valencies[i]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    /// `p_ij^l` without range checks.
    #[inline]
    pub fn p(&self, i: usize, j: usize, l: usize) -> u64 {
        let r = self.rank();
        self.tensor[(i * r + j) * r + l]
    }

    pub fn intersection_number(&self, i: usize, j: usize, l: usize) -> Result<u64, SchemeError> {
        let d = self.d();
        if let Some(&bad) = [i, j, l].iter().find(|&&v| v > d) {
            return Err(SchemeError::IndexOutOfRange { index: bad, d });
        }
        Ok(self.p(i, j, l))
    }

    pub fn is_symmetric(&self) -> bool {
        self.converse.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// First triple violating `k_l p_ij^l = k_i p_{l j'}^i = k_j p_{i' l}^j`.
    pub fn triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                for l in 0..r {
                    let a = self.valency(l) * self.p(i, j, l);
                    let b = self.valency(i) * self.p(l, self.converse(j), i);
                    let c = self.valency(j) * self.p(self.converse(i), l, j);
                    if a != b || b != c {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }
}

/// Checks the three scheme axioms and computes converses, valencies and
/// the full tensor `p_ij^l`.
pub fn validate_axioms(t: &RelationTable) -> Result<SchemeData, SchemeError> {
    let n = t.n();
    let r = t.d() + 1;

    for x in 0..n {
        for y in 0..n {
            let v = t.get(x, y);
            if (x == y) != (v == 0) {
                return Err(SchemeError::AxiomI { x, y, relation: v });
            }
        }
    }

    // converse map from the first pair of each relation, then checked everywhere
    let mut converse = vec![usize::MAX; r];
    let mut first_pair = vec![None; r];
    for x in 0..n {
        for y in 0..n {
            let i = t.get(x, y);
            let back = t.get(y, x);
            match first_pair[i] {
                None => {
                    first_pair[i] = Some((x, y));
                    converse[i] = back;
                }
                Some(_) if converse[i] != back => {
                    return Err(SchemeError::AxiomII {
                        x,
                        y,
                        i,
                        j: back,
                        expected: converse[i],
                    });
                }
                Some(_) => {}
            }
        }
    }
    for i in 0..r {
        if converse[converse[i]] != i {
            let (x, y) = first_pair[i].expect("every index occurs");
            return Err(SchemeError::AxiomII {
                x,
                y,
                i,
                j: converse[i],
                expected: i,
            });
        }
    }

    let mut tensor = vec![0u64; r * r * r];
    let mut counts = vec![0u64; r * r];
    let mut filled = vec![false; r];
    for x in 0..n {
        for y in 0..n {
            counts.iter_mut().for_each(|c| *c = 0);
            for z in 0..n {
                counts[t.get(x, z) * r + t.get(z, y)] += 1;
            }
            let l = t.get(x, y);
            if !filled[l] {
                for (ij, &c) in counts.iter().enumerate() {
                    tensor[ij * r + l] = c;
                }
                filled[l] = true;
                continue;
            }
            for (ij, &c) in counts.iter().enumerate() {
                let expected = tensor[ij * r + l];
                if c != expected {
                    return Err(SchemeError::AxiomIII {
                        x,
                        y,
                        i: ij / r,
                        j: ij % r,
                        l,
                        expected,
                        got: c,
                    });
                }
            }
        }
    }

    let valencies: Vec<u64> = (0..r).map(|i| tensor[(i * r + converse[i]) * r]).collect();
    debug_assert_eq!(valencies.iter().sum::<u64>(), n as u64);

    let s = SchemeData {
        table: t.clone(),
        converse,
        valencies,
        tensor,
    };
    if let Some((i, j, l)) = s.triangle_violation() {
        return Err(SchemeError::Internal(format!(
            "triangle identity fails at ({i}, {j}, {l}) on a validated table"
        )));
    }
    Ok(s)
}

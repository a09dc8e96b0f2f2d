//! Relation tables for standard scheme families.

use super::{RelationTable, SchemeError};

/// Symmetrized cyclic scheme on `Z_n`: `r(x, y)` is the class of `y - x`
/// after identifying `c` with `n - c`.
pub fn gen_cyclic(n: usize) -> Result<RelationTable, SchemeError> {
    if n == 0 {
        return Err(SchemeError::InvalidParameter("cyclic scheme needs n >= 1".into()));
    }
    let mut e = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let c = (y + n - x) % n;
            e.push(c.min(n - c));
        }
    }
    RelationTable::from_entries(n, e)
}

/// Hamming scheme `H(len, q)`: words of length `len` over a `q`-letter
/// alphabet related by Hamming distance.
pub fn gen_hamming(len: usize, q: usize) -> Result<RelationTable, SchemeError> {
    if len == 0 {
        return Err(SchemeError::InvalidParameter("hamming scheme needs len >= 1".into()));
    }
    if q < 2 {
        return Err(SchemeError::InvalidParameter("hamming scheme needs q >= 2".into()));
    }
    let n = q
        .checked_pow(len as u32)
        .filter(|&n| n <= 4096)
        .ok_or_else(|| SchemeError::InvalidParameter(format!("q^len too large for q={q}, len={len}")))?;
    let digits = |mut w: usize| -> Vec<usize> {
        (0..len)
            .map(|_| {
                let d = w % q;
                w /= q;
                d
            })
            .collect()
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let mut e = Vec::with_capacity(n * n);
    for a in &words {
        for b in &words {
            e.push(a.iter().zip(b).filter(|(x, y)| x != y).count());
        }
    }
    RelationTable::from_entries(n, e)
}

/// Thin scheme of a group given by its multiplication table:
/// `r(x, y)` is the label of `x^{-1} y`, with the identity labelled 0 and the
/// remaining elements labelled in increasing order.
pub fn gen_thin(table: &[Vec<usize>]) -> Result<RelationTable, SchemeError> {
    let n = table.len();
    let bad = |msg: &str| SchemeError::InvalidParameter(format!("group table: {msg}"));
    if n == 0 {
        return Err(bad("empty"));
    }
    if table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(bad("not an n x n table over [0, n)"));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| bad("no identity element"))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(bad("not associative"));
                }
            }
        }
    }
    let mut inverse = vec![usize::MAX; n];
    for (g, inv) in inverse.iter_mut().enumerate() {
        *inv = (0..n)
            .find(|&h| table[g][h] == identity)
            .ok_or_else(|| bad("element without inverse"))?;
    }
    let label = |g: usize| -> usize {
        if g == identity {
            0
        } else if g < identity {
            g + 1
        } else {
            g
        }
    };
    let mut e = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            e.push(label(table[inverse[x]][y]));
        }
    }
    RelationTable::from_entries(n, e)
}

/// Multiplication table of `Z_n`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of a direct product, elements indexed `a * |H| + b`.
pub fn direct_product_table(g: &[Vec<usize>], h: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (m, k) = (g.len(), h.len());
    (0..m * k)
        .map(|x| {
            (0..m * k)
                .map(|y| g[x / k][y / k] * k + h[x % k][y % k])
                .collect()
        })
        .collect()
}

/// Multiplication table of the symmetric group on three letters, elements in
/// lexicographic order of their one-line notation; composition `(a b)(i) = a(b(i))`.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |q: [usize; 3]| perms.iter().position(|p| *p == q).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect()
}

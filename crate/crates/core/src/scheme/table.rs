use std::fmt::Write as _;

use super::SchemeError;

/// A square table `r(x, y)` of relation indices with contiguous range `[0, d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTable {
    n: usize,
    d: usize,
    entries: Vec<usize>,
}

impl RelationTable {
    /// Checks squareness and that every index in `[0, max]` occurs.
    pub fn from_entries(n: usize, entries: Vec<usize>) -> Result<Self, SchemeError> {
        if n == 0 {
            return Err(SchemeError::EmptyInput);
        }
        if entries.len() != n * n {
            return Err(SchemeError::Malformed {
                line: 0,
                reason: format!("expected {} entries for n = {n}, got {}", n * n, entries.len()),
            });
        }
        let d = *entries.iter().max().expect("n >= 1");
        let mut seen = vec![false; d + 1];
        for &e in &entries {
            seen[e] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(SchemeError::OutOfRange { missing, d });
        }
        Ok(RelationTable { n, d, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SchemeError> {
        let n = rows.len();
        if let Some((i, _)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(SchemeError::Malformed {
                line: i + 1,
                reason: format!("row {i} does not have {n} entries"),
            });
        }
        Self::from_entries(n, rows.concat())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Class: the largest relation index.
    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Copy with one entry overwritten; the result is re-checked for range.
    pub fn with_entry(&self, x: usize, y: usize, value: usize) -> Result<Self, SchemeError> {
        let mut e = self.entries.clone();
        e[x * self.n + y] = value;
        Self::from_entries(self.n, e)
    }

    /// Canonical text form: `n`, then `n` rows of single-space separated values.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.n).unwrap();
        for x in 0..self.n {
            let row = &self.entries[x * self.n..(x + 1) * self.n];
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }
}

/// Reads the scheme file format: `#` comment lines and blank lines are
/// skipped, the first remaining line holds `n`, followed by exactly `n` rows.
pub fn parse_scheme(text: &str) -> Result<RelationTable, SchemeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first_no, first) = lines.next().ok_or(SchemeError::EmptyInput)?;
    let n: usize = first.parse().map_err(|_| SchemeError::Malformed {
        line: first_no,
        reason: format!("expected the point count, found {first:?}"),
    })?;
    if n == 0 {
        return Err(SchemeError::Malformed {
            line: first_no,
            reason: "point count must be positive".into(),
        });
    }

    let mut entries = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (no, line) in lines {
        if rows == n {
            return Err(SchemeError::Malformed {
                line: no,
                reason: format!("more than {n} rows"),
            });
        }
        let before = entries.len();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| SchemeError::Malformed {
                line: no,
                reason: format!("non-integer token {tok:?}"),
            })?;
            entries.push(v);
        }
        if entries.len() - before != n {
            return Err(SchemeError::Malformed {
                line: no,
                reason: format!("expected {n} values, found {}", entries.len() - before),
            });
        }
        rows += 1;
    }
    if rows != n {
        return Err(SchemeError::Malformed {
            line: 0,
            reason: format!("expected {n} rows, found {rows}"),
        });
    }
    RelationTable::from_entries(n, entries)
}

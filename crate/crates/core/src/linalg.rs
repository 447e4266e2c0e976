//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

fn axpy(target: &mut SparseVec, factor: &Rational, src: &SparseVec) {
    for (k, v) in src {
        let entry = target.entry(*k).or_insert_with(Rational::zero);
        *entry += factor * v;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

/// Incremental row-echelon basis keyed by pivot coordinate.
#[derive(Default, Clone, Debug)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis, returning the remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some(pivot) = v.keys().find(|k| self.rows.contains_key(k)).copied() else {
                return v;
            };
            let row = &self.rows[&pivot];
            let factor = -(&v[&pivot]) / &row[&pivot];
            axpy(&mut v, &factor, row);
        }
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let rem = self.reduce(v);
        match rem.keys().next().copied() {
            None => false,
            Some(_) => {
                // Pivot on the smallest coordinate that no existing row uses.
                let pivot = *rem.keys().find(|k| !self.rows.contains_key(k)).unwrap();
                self.rows.insert(pivot, rem);
                true
            }
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Solves `Σ_c x_c · columns[c] = rhs` exactly. Returns `Err(rank)` when the
/// columns are dependent, `Ok(None)` when the system is inconsistent.
pub fn solve_columns(columns: &[SparseVec], rhs: &SparseVec) -> Result<Option<Vec<Rational>>, usize> {
    let n = columns.len();
    // Augment each column with a unit vector in coordinates beyond the data
    // to track the combination that produces each echelon row.
    let offset = columns
        .iter()
        .chain(std::iter::once(rhs))
        .filter_map(|c| c.keys().next_back().copied())
        .max()
        .map_or(0, |m| m + 1);
    let mut basis: Vec<(usize, SparseVec)> = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        v.insert(offset + c, Rational::one());
        for (pivot, row) in &basis {
            if let Some(x) = v.get(pivot).cloned() {
                let factor = -(x / &row[pivot]);
                axpy(&mut v, &factor, row);
            }
        }
        match v.keys().next().copied() {
            Some(p) if p < offset => basis.push((p, v)),
            _ => return Err(basis.len()),
        }
    }
    let mut r = rhs.clone();
    for (pivot, row) in &basis {
        if let Some(x) = r.get(pivot).cloned() {
            let factor = -(x / &row[pivot]);
            axpy(&mut r, &factor, row);
        }
    }
    if r.keys().any(|k| *k < offset) {
        return Ok(None);
    }
    // rhs − Σ x_c col_c = 0 in data coordinates, and the tracked part of r
    // equals −x.
    let x = (0..n).map(|c| -(r.get(&(offset + c)).cloned().unwrap_or_else(Rational::zero))).collect();
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, v)| (k, rat(v))).collect()
    }

    #[test]
    fn rank_detects_dependence() {
        let vs = vec![sv(&[(0, 1), (1, 2)]), sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (1, 3), (2, 1)])];
        assert_eq!(rank(vs), 2);
        assert_eq!(rank(vec![sv(&[(0, 1)]), sv(&[(1, 1)])]), 2);
    }

    #[test]
    fn solve_unique() {
        let cols = vec![sv(&[(0, 1), (1, 1)]), sv(&[(0, 1), (1, -1)]), sv(&[(2, 2)])];
        let rhs = sv(&[(0, 3), (1, 1), (2, 4)]);
        let x = solve_columns(&cols, &rhs).unwrap().unwrap();
        assert_eq!(x, vec![rat(2), rat(1), rat(2)]);
    }

    #[test]
    fn solve_reports_dependence_and_inconsistency() {
        let cols = vec![sv(&[(0, 1)]), sv(&[(0, 2)])];
        assert!(solve_columns(&cols, &sv(&[(0, 1)])).is_err());
        let cols = vec![sv(&[(0, 1)])];
        assert_eq!(solve_columns(&cols, &sv(&[(1, 1)])).unwrap(), None);
    }
}

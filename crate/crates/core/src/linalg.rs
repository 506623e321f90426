//! Exact row echelon forms over ℚ, kept as primitive integer rows.
//!
//! Elimination is fraction-free: reducing `v` by a pivot row `p` replaces `v`
//! with `p[c]·v − v[c]·p` and then divides out the content. Ranks and
//! membership answers are therefore exact over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Builds a sparse row from `(column, value)` pairs in any order, summing duplicates.
pub fn sparse_from_pairs(pairs: impl IntoIterator<Item = (usize, BigInt)>) -> SparseRow {
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (c, v) in pairs {
        *acc.entry(c).or_insert_with(BigInt::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g == BigInt::from(1) {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a·x − b·y` on sparse rows.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take = match (x.get(i), y.get(j)) {
            (Some((ci, _)), Some((cj, _))) => ci.cmp(cj),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match take {
            std::cmp::Ordering::Less => {
                out.push((x[i].0, a * &x[i].1));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((y[j].0, -(b * &y[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = a * &x[i].1 - b * &y[j].1;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// An incrementally built echelon basis of a subspace of ℚ^ncols.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` until its leading column is not a pivot (or it vanishes).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, lv)) = row.first() {
            let Some(p) = self.pivots.get(lead) else { break };
            let pv = &p[0].1;
            let g = pv.gcd(lv);
            let a = pv / &g;
            let b = lv / &g;
            row = combine(&a, &row, &b, p);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds `row` to the span; returns the new basis row when it was independent.
    pub fn insert(&mut self, row: SparseRow) -> Option<SparseRow> {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let mut r = self.reduce(row);
        if r.is_empty() {
            return None;
        }
        make_primitive(&mut r);
        self.pivots.insert(r[0].0, r.clone());
        Some(r)
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// `other ⊆ self`.
    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.rows().all(|r| self.contains(r.clone()))
    }

    /// Span of `self ∪ other`.
    pub fn join(&self, other: &Echelon) -> Echelon {
        let mut out = self.clone();
        for r in other.rows() {
            out.insert(r.clone());
        }
        out
    }
}

/// Rank over ℚ of a dense integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(sparse_from_pairs(
            r.iter().enumerate().map(|(c, &v)| (c, BigInt::from(v))),
        ));
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank via exact Gaussian elimination over rationals (independent oracle).
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[rank][c];
                    let pivot = m[rank].clone();
                    for (x, p) in m[i].iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![3, 5], vec![7, 11]]), 2);
    }

    #[test]
    fn membership_and_join() {
        let mut e = Echelon::new(3);
        e.insert(sparse_from_pairs([(0, 2.into()), (1, 4.into())]));
        assert!(e.contains(sparse_from_pairs([(0, (-1).into()), (1, (-2).into())])));
        assert!(!e.contains(sparse_from_pairs([(1, 1.into())])));
        let mut f = Echelon::new(3);
        f.insert(sparse_from_pairs([(2, 1.into())]));
        assert_eq!(e.join(&f).rank(), 2);
        assert!(e.join(&f).contains_space(&e));
    }

    proptest! {
        #[test]
        fn rank_matches_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-4i64..5, 5), 1..7)
        ) {
            prop_assert_eq!(rank(&rows), rational_rank(&rows));
        }
    }
}

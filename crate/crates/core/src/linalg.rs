//! Exact Gauss-Jordan elimination over a field.
//!
//! Matrices are small and dense. Pivots are chosen by a cost function so
//! that unit pivots (`±q^e`, `±1`) are used whenever they exist, which
//! keeps intermediate entries inside `Z[q, q^-1]` for the systems that
//! arise from quantum minors.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::QScalar;

/// The operations elimination needs.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Inverse of a nonzero element.
    fn inv(&self) -> Self;
    /// Pivot preference: lower is better.
    fn cost(&self) -> usize;
}

impl Field for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QScalar::mul(self, other)
    }
    fn inv(&self) -> Self {
        QScalar::inv(self).expect("pivot is nonzero")
    }
    fn cost(&self) -> usize {
        if self.is_unit_monomial() {
            0
        } else {
            1 + self.size()
        }
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn cost(&self) -> usize {
        if self.abs().is_one() {
            0
        } else {
            1 + (self.numer().bits() + self.denom().bits()) as usize
        }
    }
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// The columns are linearly dependent.
    RankDeficient,
    /// The columns are independent but do not span the target.
    NotInSpan,
}

/// Solves `Σ_j x_j columns[j] = target`, requiring independent columns.
pub fn solve<F: Field>(columns: &[Vec<F>], target: &[F]) -> Solution<F> {
    let k = columns.len();
    let rows = target.len();
    assert!(columns.iter().all(|c| c.len() == rows), "ragged system");
    let mut m: Vec<Vec<F>> = (0..rows)
        .map(|i| {
            let mut r: Vec<F> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut pivot_row = vec![usize::MAX; k];
    let mut used = vec![false; rows];
    for (c, pivot) in pivot_row.iter_mut().enumerate() {
        let Some(r) = best_pivot(&m, &used, c) else {
            return Solution::RankDeficient;
        };
        used[r] = true;
        *pivot = r;
        eliminate(&mut m, r, c);
    }
    for (r, row) in m.iter().enumerate() {
        if !used[r] && !row[k].is_zero() {
            return Solution::NotInSpan;
        }
    }
    Solution::Unique((0..k).map(|c| m[pivot_row[c]][k].clone()).collect())
}

/// Rank of a list of row vectors.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut used = vec![false; m.len()];
    let mut r = 0;
    for c in 0..width {
        if let Some(p) = best_pivot(&m, &used, c) {
            used[p] = true;
            eliminate(&mut m, p, c);
            r += 1;
        }
    }
    r
}

/// Incremental row-echelon basis: reports whether each new vector is
/// independent of those already inserted.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    /// Reduced rows with their pivot column; each pivot entry is one.
    rows: Vec<(usize, Vec<F>)>,
    width: usize,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            rows: Vec::new(),
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; inserts it and returns true if a
    /// nonzero remainder is left.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.width, "vector of wrong width");
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        let pivot = (0..self.width)
            .filter(|&c| !v[c].is_zero())
            .min_by_key(|&c| v[c].cost());
        let Some(p) = pivot else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

fn best_pivot<F: Field>(m: &[Vec<F>], used: &[bool], c: usize) -> Option<usize> {
    (0..m.len())
        .filter(|&r| !used[r] && !m[r][c].is_zero())
        .min_by_key(|&r| m[r][c].cost())
}

fn eliminate<F: Field>(m: &mut [Vec<F>], r: usize, c: usize) {
    let inv = m[r][c].inv();
    let pivot: Vec<F> = m[r]
        .iter()
        .map(|x| if x.is_zero() { x.clone() } else { x.mul(&inv) })
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&pivot) {
            if !y.is_zero() {
                *x = x.sub(&f.mul(y));
            }
        }
    }
    m[r] = pivot;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn solves_rational_system() {
        let cols = vec![vec![r(1), r(1), r(0)], vec![r(1), r(-1), r(2)]];
        let target = vec![r(3), r(1), r(2)];
        assert_eq!(solve(&cols, &target), Solution::Unique(vec![r(2), r(1)]));
        let off = vec![r(3), r(1), r(3)];
        assert_eq!(solve(&cols, &off), Solution::NotInSpan);
        let dep = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)]];
        assert_eq!(solve(&dep, &target), Solution::RankDeficient);
    }

    #[test]
    fn solves_over_q() {
        let q = QScalar::q_pow(1);
        let one = QScalar::one();
        let cols = vec![vec![one.clone(), q.clone()], vec![q.clone(), one.clone()]];
        // x + q y = 1 + q^2, q x + y = 2q
        let target = vec![one.add(&q.mul(&q)), QScalar::monomial(2, 1)];
        assert_eq!(
            solve(&cols, &target),
            Solution::Unique(vec![one.clone(), q.clone()])
        );
    }

    #[test]
    fn rank_and_echelon_agree() {
        let rows = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
            vec![r(1), r(3), r(4)],
        ];
        assert_eq!(rank(&rows), 2);
        let mut e = EchelonBasis::new(3);
        let inserted: Vec<bool> = rows.into_iter().map(|v| e.insert(v)).collect();
        assert_eq!(inserted, [true, false, true, false]);
        assert_eq!(e.rank(), 2);
    }
}

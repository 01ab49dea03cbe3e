//! The commutative Grassmannian at `q = 1`, computed independently of the
//! quantum engine: integer polynomials in the entries of a generic `n × m`
//! matrix, maximal minors by the Leibniz formula, and straightening by
//! solving over the rationals.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{plucker_poset, StdExpansion, StraighteningTable};
use crate::lattice::{ChainProductRealization, FiniteLattice};
use crate::linalg::{solve, Solution};
use crate::scalars::QScalar;

/// Sorted variable multiset ↦ integer coefficient.
pub type Poly = BTreeMap<Vec<u16>, BigInt>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let mut m: Vec<u16> = m1.iter().chain(m2).copied().collect();
            m.sort_unstable();
            *out.entry(m).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Plücker coordinates of the commutative Grassmannian.
pub struct ClassicalGrassmannian {
    m: usize,
    n: usize,
    lattice: FiniteLattice,
    realization: ChainProductRealization,
    dets: Vec<Poly>,
}

impl ClassicalGrassmannian {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let (lattice, realization) = plucker_poset(m, n)?;
        let dets = (0..lattice.len())
            .map(|x| determinant(realization.iota(x), m))
            .collect();
        Ok(ClassicalGrassmannian {
            m,
            n,
            lattice,
            realization,
            dets,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn determinant(&self, x: usize) -> &Poly {
        &self.dets[x]
    }

    fn content(&self, product: &[usize]) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for &x in product {
            for &i in self.realization.iota(x) {
                d[i as usize - 1] += 1;
            }
        }
        d
    }

    pub fn product(&self, product: &[usize]) -> Poly {
        product
            .iter()
            .fold(Poly::from([(Vec::new(), BigInt::one())]), |acc, &x| {
                poly_mul(&acc, &self.dets[x])
            })
    }

    /// Expansion of a product of Plücker coordinates in standard monomials.
    pub fn expand(&self, product: &[usize]) -> Result<BTreeMap<Vec<usize>, BigRational>> {
        let want = self.content(product);
        let basis: Vec<Vec<usize>> = self
            .lattice
            .multichains(product.len())
            .into_iter()
            .filter(|c| self.content(c) == want)
            .collect();
        let target = self.product(product);
        let polys: Vec<Poly> = basis.iter().map(|b| self.product(b)).collect();
        let mut keys: Vec<&Vec<u16>> = polys
            .iter()
            .flat_map(|p| p.keys())
            .chain(target.keys())
            .collect();
        keys.sort();
        keys.dedup();
        let coord = |p: &Poly, k: &Vec<u16>| {
            BigRational::from_integer(p.get(k).cloned().unwrap_or_else(BigInt::zero))
        };
        let columns: Vec<Vec<BigRational>> = polys
            .iter()
            .map(|p| keys.iter().map(|k| coord(p, k)).collect())
            .collect();
        let rhs: Vec<BigRational> = keys.iter().map(|k| coord(&target, k)).collect();
        match solve(&columns, &rhs) {
            Solution::Unique(xs) => Ok(basis
                .into_iter()
                .zip(xs)
                .filter(|(_, c)| !c.is_zero())
                .collect()),
            Solution::RankDeficient => Err(Error::RankDeficient {
                block: format!("{want:?}"),
            }),
            Solution::NotInSpan => Err(Error::NotInSpan(format!("{product:?}"))),
        }
    }

    /// The classical straightening and commutation table with constant
    /// coefficients.
    pub fn table(&self) -> Result<StraighteningTable> {
        let n = self.lattice.len();
        let mut expansions = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if !self.lattice.leq(i, j) {
                    let e = self.expand(&[i, j])?;
                    expansions.insert(
                        (i, j),
                        StdExpansion::from_terms(
                            e.into_iter().map(|(k, c)| (k, QScalar::from_rational(&c))),
                        ),
                    );
                }
            }
        }
        StraighteningTable::from_expansions(
            self.lattice.clone(),
            self.realization.clone(),
            &expansions,
        )
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Maximal minor on the given rows of the generic `n × m` matrix whose
/// entry `(i, j)` is the variable `(i-1) m + (j-1)`.
fn determinant(rows: &[u32], m: usize) -> Poly {
    let mut out = Poly::new();
    for perm in (0..m).permutations(m) {
        let inversions = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let mut vars: Vec<u16> = (0..m)
            .map(|k| ((rows[perm[k]] as usize - 1) * m + k) as u16)
            .collect();
        vars.sort_unstable();
        let sign = if inversions % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        *out.entry(vars).or_insert_with(BigInt::zero) += sign;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plucker_relation() {
        let g = ClassicalGrassmannian::new(2, 4).unwrap();
        let at = |s: &str| g.lattice().index_of(s).unwrap();
        let e = g.expand(&[at("1,4"), at("2,3")]).unwrap();
        let one = BigRational::one();
        assert_eq!(
            e,
            BTreeMap::from([
                (vec![at("1,2"), at("3,4")], -one.clone()),
                (vec![at("1,3"), at("2,4")], one),
            ])
        );
    }

    #[test]
    fn classical_table_is_commutative() {
        let g = ClassicalGrassmannian::new(2, 5).unwrap();
        let t = g.table().unwrap();
        for c in t.commutation.values() {
            assert!(c.qpow.is_one());
            assert!(c.tail.is_zero());
        }
        t.certify().unwrap();
    }
}

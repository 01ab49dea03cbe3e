//! The quantum Grassmannian `O_q(G_{m,n})`, generated inside
//! `O_q(M_{n,m})` by the maximal minors `[I]` on row sets `I`.
//!
//! Products of minors are expanded in the standard-monomial basis by exact
//! linear solving, one row-degree block at a time.

mod table;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{tuple_label, ChainProductRealization, FiniteLattice};
use crate::linalg::{solve, Solution};
use crate::qmatrix::{Monomial, PbwElement, QMatrixAlgebra, RowDegree};
use crate::scalars::QScalar;

pub use table::{Commutation, StraighteningTable};
pub use verify::{
    complement_order, disjoint_union_order, muir_consistency, tuple_leq, verify_symmetric_asl,
    AslReport, DegreeCheck, OrderEvidence,
};

/// Strictly increasing `m`-tuple with entries in `1..=n`.
pub type PluckerIndex = Vec<u32>;

/// Checks the shape of a Plücker index.
pub fn check_plucker(m: usize, n: usize, idx: &[u32]) -> Result<()> {
    if idx.len() != m {
        return Err(Error::BadShape(format!(
            "{} has length {} not {m}",
            tuple_label(idx),
            idx.len()
        )));
    }
    if idx.iter().any(|&i| i == 0 || i as usize > n) || !idx.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::BadShape(format!(
            "{} is not a strictly increasing tuple in 1..={n}",
            tuple_label(idx)
        )));
    }
    Ok(())
}

/// All `m`-subsets of `1..=n` in lexicographic order.
pub fn plucker_indices(m: usize, n: usize) -> Vec<PluckerIndex> {
    (1..=n as u32).combinations(m).collect()
}

/// `Π_{m,n}` with the identity realization in `C_n^m`.
pub fn plucker_poset(m: usize, n: usize) -> Result<(FiniteLattice, ChainProductRealization)> {
    if m == 0 || m > n {
        return Err(Error::BadShape(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    let tuples = plucker_indices(m, n);
    let lattice = FiniteLattice::from_tuples(&tuples)?;
    let realization = ChainProductRealization::new(&lattice, vec![n as u32; m], tuples)?;
    Ok((lattice, realization))
}

/// A linear combination of standard monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StdExpansion {
    terms: BTreeMap<Vec<usize>, QScalar>,
}

impl StdExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, QScalar)>) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[usize]) -> QScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: Vec<usize>, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    /// The expansion with one term removed.
    pub fn without(&self, key: &[usize]) -> Self {
        let mut out = self.clone();
        out.terms.remove(key);
        out
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
        StdExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames the elements in every key.
    pub fn map_keys(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (k.iter().map(|&x| f(x)).collect(), c.clone())),
        )
    }

    pub fn specialize(&self, t: &BigRational) -> Result<BTreeMap<Vec<usize>, BigRational>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.specialize(t)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(k.clone(), v);
            }
        }
        Ok(out)
    }

    /// Coefficients replaced by their values at `q = t`.
    pub fn specialize_scalar(&self, t: &BigRational) -> Result<Self> {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.specialize_scalar(t)?);
        }
        Ok(out)
    }
}

type Blocks = Arc<BTreeMap<Vec<u32>, Vec<Vec<usize>>>>;

/// `O_q(G_{m,n})` with its poset of Plücker coordinates and caches.
pub struct Grassmannian {
    m: usize,
    n: usize,
    lattice: FiniteLattice,
    realization: ChainProductRealization,
    alg: QMatrixAlgebra,
    minors: Vec<PbwElement>,
    std_cache: Mutex<HashMap<Vec<usize>, Arc<PbwElement>>>,
    blocks: Mutex<HashMap<usize, Blocks>>,
}

impl Grassmannian {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n > 16 {
            return Err(Error::BadShape(format!("n = {n} is beyond desk scale")));
        }
        let (lattice, realization) = plucker_poset(m, n)?;
        let alg = QMatrixAlgebra::new(n, m)?;
        let cols: Vec<usize> = (1..=m).collect();
        let minors = (0..lattice.len())
            .map(|x| {
                let rows: Vec<usize> = realization.iota(x).iter().map(|&i| i as usize).collect();
                alg.quantum_minor(&rows, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Grassmannian {
            m,
            n,
            lattice,
            realization,
            alg,
            minors,
            std_cache: Mutex::new(HashMap::new()),
            blocks: Mutex::new(HashMap::new()),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn realization(&self) -> &ChainProductRealization {
        &self.realization
    }

    pub fn algebra(&self) -> &QMatrixAlgebra {
        &self.alg
    }

    pub fn tuple(&self, x: usize) -> &[u32] {
        self.realization.iota(x)
    }

    pub fn index_of(&self, idx: &[u32]) -> Result<usize> {
        check_plucker(self.m, self.n, idx)?;
        Ok((0..self.lattice.len())
            .find(|&x| self.tuple(x) == idx)
            .expect("every valid index is an element"))
    }

    pub fn minor(&self, x: usize) -> &PbwElement {
        &self.minors[x]
    }

    /// Row-degree vector of a product of minors.
    pub fn row_content(&self, product: &[usize]) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for &x in product {
            for &i in self.tuple(x) {
                d[i as usize - 1] += 1;
            }
        }
        d
    }

    /// PBW form of `[I_1] ... [I_s]`.
    pub fn product_pbw(&self, product: &[usize]) -> PbwElement {
        let is_std = self.is_standard(product);
        if is_std {
            if let Some(hit) = self.std_cache.lock().unwrap().get(product) {
                return (**hit).clone();
            }
        }
        let value = match product.split_last() {
            None => self.alg.one(),
            Some((&last, rest)) => self.alg.mul(&self.product_pbw(rest), &self.minors[last]),
        };
        if is_std {
            self.std_cache
                .lock()
                .unwrap()
                .insert(product.to_vec(), Arc::new(value.clone()));
        }
        value
    }

    pub fn is_standard(&self, product: &[usize]) -> bool {
        product.windows(2).all(|w| self.lattice.leq(w[0], w[1]))
    }

    /// Standard monomials of the given degree grouped by row content.
    pub fn standard_blocks(&self, degree: usize) -> Blocks {
        if let Some(hit) = self.blocks.lock().unwrap().get(&degree) {
            return hit.clone();
        }
        let mut map: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
        for chain in self.lattice.multichains(degree) {
            map.entry(self.row_content(&chain)).or_default().push(chain);
        }
        let blocks = Arc::new(map);
        self.blocks.lock().unwrap().insert(degree, blocks.clone());
        blocks
    }

    pub fn standard_monomials(&self, degree: usize) -> Vec<Vec<usize>> {
        self.standard_blocks(degree)
            .values()
            .flatten()
            .cloned()
            .collect()
    }

    /// The expansion of a product of minors in standard monomials.
    pub fn expand_in_std(&self, product: &[usize]) -> Result<StdExpansion> {
        if let Some(&bad) = product.iter().find(|&&x| x >= self.lattice.len()) {
            return Err(Error::UnknownElement(bad.to_string()));
        }
        if self.is_standard(product) {
            return Ok(StdExpansion::from_terms([(
                product.to_vec(),
                QScalar::one(),
            )]));
        }
        let target = self.product_pbw(product);
        self.expand_pbw(&target, product.len())
    }

    /// Expands a homogeneous PBW element of the given degree.
    pub fn expand_pbw(&self, x: &PbwElement, degree: usize) -> Result<StdExpansion> {
        let mut parts: BTreeMap<Vec<u32>, Vec<(&Monomial, &QScalar)>> = BTreeMap::new();
        for (mono, c) in x.terms() {
            let one = PbwElement::from_terms(self.n, self.m, [(mono.clone(), QScalar::one())]);
            let RowDegree::Homogeneous(d) = one.row_degree() else {
                unreachable!("monomials are homogeneous")
            };
            parts.entry(d).or_default().push((mono, c));
        }
        let blocks = self.standard_blocks(degree);
        let mut out = StdExpansion::new();
        for (content, terms) in parts {
            let label = content_label(&content);
            let Some(basis) = blocks.get(&content) else {
                return Err(Error::NotInSpan(format!("row content {label}")));
            };
            let basis_pbw: Vec<PbwElement> = basis.iter().map(|b| self.product_pbw(b)).collect();
            let mut keys: Vec<&Monomial> =
                basis_pbw.iter().flat_map(|p| p.terms().keys()).collect();
            keys.extend(terms.iter().map(|(k, _)| *k));
            keys.sort();
            keys.dedup();
            let columns: Vec<Vec<QScalar>> = basis_pbw
                .iter()
                .map(|p| keys.iter().map(|k| p.coeff(k)).collect())
                .collect();
            let target_map: BTreeMap<&Monomial, &QScalar> = terms.into_iter().collect();
            let target: Vec<QScalar> = keys
                .iter()
                .map(|k| {
                    target_map
                        .get(k)
                        .map_or_else(QScalar::zero, |c| (*c).clone())
                })
                .collect();
            match solve(&columns, &target) {
                Solution::Unique(xs) => {
                    for (b, c) in basis.iter().zip(xs) {
                        out.add_term(b.clone(), &c);
                    }
                }
                Solution::RankDeficient => return Err(Error::RankDeficient { block: label }),
                Solution::NotInSpan => {
                    return Err(Error::NotInSpan(format!("row content {label}")))
                }
            }
        }
        Ok(out)
    }

    /// Label such as `[1,3][2,4]` for a monomial.
    pub fn monomial_label(&self, key: &[usize]) -> String {
        key.iter()
            .map(|&x| format!("[{}]", tuple_label(self.tuple(x))))
            .collect()
    }
}

fn content_label(content: &[u32]) -> String {
    let parts: Vec<String> = content
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("{}", i + 1)
            } else {
                format!("{}^{k}", i + 1)
            }
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests;

//! The quantum matrix algebra `O_q(M_{u,v})` in PBW normal form.
//!
//! Generators `X_{ij}` are ordered row-major. For `i < k` and `j < l`:
//!
//! ```text
//! X_ij X_il = q X_il X_ij
//! X_ij X_kj = q X_kj X_ij
//! X_il X_kj = X_kj X_il
//! X_ij X_kl - X_kl X_ij = (q - q^-1) X_il X_kj
//! ```
//!
//! Elements are sums of sorted generator sequences. Products are reduced by
//! right-multiplying sorted monomials one generator at a time, with a
//! shared cache of monomial-times-generator results.

mod confluence;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalars::QScalar;

pub use confluence::{
    commutative_oracle, confluence_check, equal_word_pairs_check, q_one_check, ConfluenceReport,
    Strategy, WordRewriter,
};

/// A generator `X_{row,col}` with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenIndex {
    pub row: usize,
    pub col: usize,
}

impl GenIndex {
    pub fn new(row: usize, col: usize) -> Self {
        GenIndex { row, col }
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{}]", self.row, self.col)
    }
}

/// A sorted generator sequence, stored as row-major codes.
pub type Monomial = Vec<u16>;

/// An element of `O_q(M_{u,v})` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwElement {
    rows: usize,
    cols: usize,
    terms: BTreeMap<Monomial, QScalar>,
}

/// Row-degree information of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowDegree {
    /// The zero element, homogeneous of every degree.
    Zero,
    Homogeneous(Vec<u32>),
    Mixed,
}

impl RowDegree {
    pub fn degree(&self) -> Option<&[u32]> {
        match self {
            RowDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

impl PbwElement {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PbwElement {
            rows,
            cols,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rows: usize, cols: usize) -> Self {
        Self::from_terms(rows, cols, [(Vec::new(), QScalar::one())])
    }

    pub fn from_terms(
        rows: usize,
        cols: usize,
        terms: impl IntoIterator<Item = (Monomial, QScalar)>,
    ) -> Self {
        let mut out = Self::zero(rows, cols);
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u16]) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, s: &QScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.rows, self.cols);
        }
        PbwElement {
            rows: self.rows,
            cols: self.cols,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Generator indices of a monomial.
    pub fn decode(&self, m: &[u16]) -> Vec<GenIndex> {
        m.iter().map(|&g| decode(self.cols, g)).collect()
    }

    pub fn row_degree(&self) -> RowDegree {
        let mut degrees = self.terms.keys().map(|m| {
            let mut d = vec![0u32; self.rows];
            for &g in m {
                d[g as usize / self.cols] += 1;
            }
            d
        });
        let Some(first) = degrees.next() else {
            return RowDegree::Zero;
        };
        if degrees.all(|d| d == first) {
            RowDegree::Homogeneous(first)
        } else {
            RowDegree::Mixed
        }
    }

    /// Coefficients evaluated at `q = t`, zero values dropped.
    pub fn specialize(&self, t: &BigRational) -> Result<BTreeMap<Monomial, BigRational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.specialize(t)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(m.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let word = m
                .iter()
                .map(|&g| decode(self.cols, g).to_string())
                .join("*");
            match (c.is_one(), m.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{word}")?,
                (false, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{word}")?,
            }
        }
        Ok(())
    }
}

fn decode(cols: usize, g: u16) -> GenIndex {
    GenIndex::new(g as usize / cols + 1, g as usize % cols + 1)
}

type Reduced = Arc<Vec<(Monomial, QScalar)>>;

/// `O_q(M_{u,v})` together with its rewriting cache.
#[derive(Debug)]
pub struct QMatrixAlgebra {
    rows: usize,
    cols: usize,
    cache: Mutex<HashMap<(Monomial, u16), Reduced>>,
}

impl Clone for QMatrixAlgebra {
    fn clone(&self) -> Self {
        QMatrixAlgebra::new(self.rows, self.cols).expect("valid sizes")
    }
}

/// How an out-of-order adjacent pair `a g` (with `a > g`) rewrites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Swap {
    /// `a g = s · g a`.
    Scaled(QScalar),
    /// `a g = g a - (q - q^-1) x y`.
    Corrected { x: u16, y: u16 },
}

impl QMatrixAlgebra {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols > usize::from(u16::MAX) {
            return Err(Error::BadShape(format!("unsupported sizes {rows}x{cols}")));
        }
        Ok(QMatrixAlgebra {
            rows,
            cols,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn code(&self, g: GenIndex) -> Result<u16> {
        if g.row == 0 || g.col == 0 || g.row > self.rows || g.col > self.cols {
            return Err(Error::IndexOutOfBounds {
                row: g.row,
                col: g.col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(((g.row - 1) * self.cols + g.col - 1) as u16)
    }

    pub fn generator(&self, g: GenIndex) -> Result<PbwElement> {
        Ok(PbwElement::from_terms(
            self.rows,
            self.cols,
            [(vec![self.code(g)?], QScalar::one())],
        ))
    }

    pub fn zero(&self) -> PbwElement {
        PbwElement::zero(self.rows, self.cols)
    }

    pub fn one(&self) -> PbwElement {
        PbwElement::one(self.rows, self.cols)
    }

    pub(crate) fn swap_rule(&self, a: u16, g: u16) -> Swap {
        debug_assert!(a > g);
        let (k, l) = (a as usize / self.cols, a as usize % self.cols);
        let (i, j) = (g as usize / self.cols, g as usize % self.cols);
        if i == k || j == l {
            Swap::Scaled(QScalar::q_pow(-1))
        } else if j > l {
            Swap::Scaled(QScalar::one())
        } else {
            Swap::Corrected {
                x: (i * self.cols + l) as u16,
                y: (k * self.cols + j) as u16,
            }
        }
    }

    /// Normal form of the product of generators in the given order.
    pub fn normal_form(&self, word: &[GenIndex]) -> Result<PbwElement> {
        let codes = word
            .iter()
            .map(|&g| self.code(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.normal_form_codes(&codes))
    }

    pub(crate) fn normal_form_codes(&self, word: &[u16]) -> PbwElement {
        let mut acc = vec![(Vec::new(), QScalar::one())];
        for &g in word {
            let mut next = PbwElement::zero(self.rows, self.cols);
            for (m, c) in &acc {
                for (m2, c2) in self.right_mul_gen(m, g).iter() {
                    next.add_term(m2.clone(), &c.mul(c2));
                }
            }
            acc = next.terms.into_iter().collect();
        }
        PbwElement::from_terms(self.rows, self.cols, acc)
    }

    /// `m · X_g` for a sorted monomial `m`, as a sorted combination.
    fn right_mul_gen(&self, m: &[u16], g: u16) -> Reduced {
        match m.last() {
            None => return Arc::new(vec![(vec![g], QScalar::one())]),
            Some(&last) if last <= g => {
                let mut out = m.to_vec();
                out.push(g);
                return Arc::new(vec![(out, QScalar::one())]);
            }
            _ => {}
        }
        let key = (m.to_vec(), g);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let (prefix, a) = m.split_at(m.len() - 1);
        let a = a[0];
        let mut out = PbwElement::zero(self.rows, self.cols);
        // m X_g = prefix (X_a X_g)
        let (scale, extra) = match self.swap_rule(a, g) {
            Swap::Scaled(s) => (s, None),
            Swap::Corrected { x, y } => (QScalar::one(), Some((x, y))),
        };
        for (p, c) in self.right_mul_gen(prefix, g).iter() {
            for (p2, c2) in self.right_mul_gen(p, a).iter() {
                out.add_term(p2.clone(), &c.mul(c2).mul(&scale));
            }
        }
        if let Some((x, y)) = extra {
            let corr = QScalar::q_pow(-1).sub(&QScalar::q_pow(1));
            for (p, c) in self.right_mul_gen(prefix, x).iter() {
                for (p2, c2) in self.right_mul_gen(p, y).iter() {
                    out.add_term(p2.clone(), &c.mul(c2).mul(&corr));
                }
            }
        }
        let result: Reduced = Arc::new(out.terms.into_iter().collect());
        self.cache.lock().unwrap().insert(key, result.clone());
        result
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = self.zero();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                let mut acc = vec![(m1.clone(), c1.mul(c2))];
                for &g in m2 {
                    let mut next = PbwElement::zero(self.rows, self.cols);
                    for (m, c) in &acc {
                        for (m3, c3) in self.right_mul_gen(m, g).iter() {
                            next.add_term(m3.clone(), &c.mul(c3));
                        }
                    }
                    acc = next.terms.into_iter().collect();
                }
                for (m, c) in acc {
                    out.add_term(m, &c);
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[PbwElement]) -> PbwElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// The quantum minor `[I|J] = Σ_σ (-q)^{ℓ(σ)} X_{i_σ(1) j_1} ... X_{i_σ(t) j_t}`.
    pub fn quantum_minor(&self, rows: &[usize], cols: &[usize]) -> Result<PbwElement> {
        let t = rows.len();
        if t != cols.len() {
            return Err(Error::BadShape(format!(
                "{} rows but {} columns",
                rows.len(),
                cols.len()
            )));
        }
        if t == 0 || t > self.rows.min(self.cols) {
            return Err(Error::BadShape(format!("minor of size {t}")));
        }
        let strictly = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !strictly(rows) || !strictly(cols) {
            return Err(Error::BadShape(
                "minor indices must increase strictly".into(),
            ));
        }
        let mut out = self.zero();
        for perm in (0..t).permutations(t) {
            let inversions = (0..t)
                .flat_map(|a| (a + 1..t).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count() as i64;
            let word: Vec<GenIndex> = (0..t)
                .map(|k| GenIndex::new(rows[perm[k]], cols[k]))
                .collect();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let coeff = QScalar::monomial(sign, inversions);
            out = out.add(&self.normal_form(&word)?.scale(&coeff));
        }
        Ok(out)
    }

    /// The automorphism `X_ij ↦ X_ji` of the square algebra.
    pub fn transpose(&self, x: &PbwElement) -> Result<PbwElement> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.zero();
        for (m, c) in &x.terms {
            let word: Vec<u16> = m
                .iter()
                .map(|&g| {
                    let (i, j) = (g as usize / self.cols, g as usize % self.cols);
                    (j * self.cols + i) as u16
                })
                .collect();
            out = out.add(&self.normal_form_codes(&word).scale(c));
        }
        Ok(out)
    }

    /// Number of cached monomial-times-generator reductions.
    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

#[cfg(test)]
mod tests;

//! Quantum toric algebras `A_{Π,q,c}` on a distributive lattice `Π`:
//! generators `X_α` subject to
//!
//! ```text
//! X_α X_β = q_{αβ} X_β X_α           (α, β comparable)
//! X_α X_β = c_{αβ} X_{α∧β} X_{α∨β}   (α, β incomparable)
//! ```
//!
//! Words are rewritten to standard monomials (weakly increasing chains).
//! Scalars are tracked either numerically in `Q(q)` or symbolically as
//! monomials in formal units `Q_{αβ}`, `C_{αβ}`.

mod certify;
mod torus;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{ChainProductRealization, FiniteLattice};
use crate::scalars::QScalar;

pub use certify::{confluence_certify, gkdim_toric, regularity_check};
pub use torus::{torus_embedding, TorusEmbedding, TorusMonomial};

/// A rewriting step applied at some position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `X_a X_b → q_{ab} X_b X_a` for comparable `a > b`.
    Swap(usize, usize),
    /// `X_a X_b → c_{ab} X_{a∧b} X_{a∨b}` for incomparable `a, b`.
    Split(usize, usize),
}

/// A product of formal units `Q_{αβ}^k C_{αβ}^l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarMonomial {
    pub q: BTreeMap<(usize, usize), i64>,
    pub c: BTreeMap<(usize, usize), i64>,
}

impl ScalarMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.q.is_empty() && self.c.is_empty()
    }

    pub fn apply(&mut self, rule: Rule) {
        let (map, key) = match rule {
            Rule::Swap(a, b) => (&mut self.q, (a, b)),
            Rule::Split(a, b) => (&mut self.c, (a, b)),
        };
        *map.entry(key).or_insert(0) += 1;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in &other.q {
            *out.q.entry(*k).or_insert(0) += e;
        }
        for (k, e) in &other.c {
            *out.c.entry(*k).or_insert(0) += e;
        }
        out.q.retain(|_, e| *e != 0);
        out.c.retain(|_, e| *e != 0);
        out
    }

    /// Value under a presentation.
    pub fn evaluate(&self, p: &ToricPresentation) -> Result<QScalar> {
        let mut out = QScalar::one();
        for (&(a, b), &e) in &self.q {
            out = out.mul(&p.q(a, b).pow(e)?);
        }
        for (&(a, b), &e) in &self.c {
            out = out.mul(&p.c(a, b)?.pow(e)?);
        }
        Ok(out)
    }

    pub fn display(&self, lattice: &FiniteLattice) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (name, map) in [("Q", &self.q), ("C", &self.c)] {
            for (&(a, b), &e) in map {
                let base = format!("{name}[{};{}]", lattice.label(a), lattice.label(b));
                parts.push(if e == 1 { base } else { format!("{base}^{e}") });
            }
        }
        parts.join("*")
    }
}

/// Result of rewriting a word: `scalar · monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricNf<S> {
    pub scalar: S,
    pub monomial: Vec<usize>,
}

/// The data `(Π, q, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricPresentation {
    lattice: FiniteLattice,
    realization: ChainProductRealization,
    q: Vec<QScalar>,
    c: BTreeMap<(usize, usize), QScalar>,
}

impl ToricPresentation {
    /// Builds a presentation from a full `q` table (row-major `n × n`) and
    /// `c` values on all incomparable ordered pairs. Consistency of the
    /// parameters is checked separately.
    pub fn new(
        lattice: FiniteLattice,
        realization: ChainProductRealization,
        q: Vec<QScalar>,
        c: BTreeMap<(usize, usize), QScalar>,
    ) -> Result<Self> {
        lattice.require_distributive()?;
        let n = lattice.len();
        if q.len() != n * n {
            return Err(Error::Invalid(format!(
                "q table has {} entries, expected {}",
                q.len(),
                n * n
            )));
        }
        if q.iter().any(QScalar::is_zero) {
            return Err(Error::InconsistentParameters(
                "q values must be nonzero".into(),
            ));
        }
        for (a, b) in lattice.incomparable_pairs() {
            match c.get(&(a, b)) {
                None => {
                    return Err(Error::Invalid(format!(
                        "missing c value for ({}, {})",
                        lattice.label(a),
                        lattice.label(b)
                    )))
                }
                Some(v) if v.is_zero() => {
                    return Err(Error::InconsistentParameters(
                        "c values must be nonzero".into(),
                    ))
                }
                _ => {}
            }
        }
        if let Some(&(a, b)) = c
            .keys()
            .find(|&&(a, b)| a >= n || b >= n || lattice.comparable(a, b))
        {
            return Err(Error::Invalid(format!(
                "c given on comparable pair ({a}, {b})"
            )));
        }
        Ok(ToricPresentation {
            lattice,
            realization,
            q,
            c,
        })
    }

    /// `q ≡ 1`, `c ≡ 1`: the commutative Hibi ring.
    pub fn commutative(
        lattice: FiniteLattice,
        realization: ChainProductRealization,
    ) -> Result<Self> {
        let n = lattice.len();
        let c = lattice
            .incomparable_pairs()
            .into_iter()
            .map(|p| (p, QScalar::one()))
            .collect();
        Self::new(lattice, realization, vec![QScalar::one(); n * n], c)
    }

    /// Completes partial tables: `q_{αα} = 1`, `q_{βα} = q_{αβ}^{-1}`,
    /// `c_{βα} = q_{βα} c_{αβ}`; pairs given in neither order default to 1
    /// (for `c`, on the pair whose first element has the smaller index).
    pub fn from_partial(
        lattice: FiniteLattice,
        realization: ChainProductRealization,
        q_given: &BTreeMap<(usize, usize), QScalar>,
        c_given: &BTreeMap<(usize, usize), QScalar>,
    ) -> Result<Self> {
        let n = lattice.len();
        let mut q = vec![QScalar::one(); n * n];
        for (&(a, b), v) in q_given {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("{a} or {b}")));
            }
            q[a * n + b] = v.clone();
            if !q_given.contains_key(&(b, a)) {
                q[b * n + a] = v.inv()?;
            }
        }
        let mut c = BTreeMap::new();
        for (a, b) in lattice.incomparable_pairs() {
            let v = match (c_given.get(&(a, b)), c_given.get(&(b, a))) {
                (Some(v), _) => v.clone(),
                // c_{ab} = q_{ab} c_{ba}
                (None, Some(w)) => q[a * n + b].mul(w),
                (None, None) if a < b => QScalar::one(),
                (None, None) => q[a * n + b].clone(),
            };
            c.insert((a, b), v);
        }
        for &(a, b) in c_given.keys() {
            if a >= n || b >= n || lattice.comparable(a, b) {
                return Err(Error::Invalid(format!(
                    "c given on comparable or unknown pair ({a}, {b})"
                )));
            }
        }
        Self::new(lattice, realization, q, c)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn realization(&self) -> &ChainProductRealization {
        &self.realization
    }

    pub fn q(&self, a: usize, b: usize) -> &QScalar {
        &self.q[a * self.lattice.len() + b]
    }

    pub fn c(&self, a: usize, b: usize) -> Result<&QScalar> {
        self.c.get(&(a, b)).ok_or_else(|| Error::NotComparable {
            alpha: self.lattice.label(a).to_string(),
            beta: self.lattice.label(b).to_string(),
        })
    }

    pub fn c_table(&self) -> &BTreeMap<(usize, usize), QScalar> {
        &self.c
    }

    /// Checks `q_{αα} = 1`, `q_{αβ} q_{βα} = 1` and `c_{αβ} = q_{αβ} c_{βα}`.
    pub fn check_consistency(&self) -> Result<()> {
        let n = self.lattice.len();
        let l = &self.lattice;
        for a in 0..n {
            if !self.q(a, a).is_one() {
                return Err(Error::InconsistentParameters(format!(
                    "q_({0},{0}) != 1",
                    l.label(a)
                )));
            }
            for b in 0..n {
                if !self.q(a, b).mul(self.q(b, a)).is_one() {
                    return Err(Error::InconsistentParameters(format!(
                        "q_({a},{b}) q_({b},{a}) != 1",
                        a = l.label(a),
                        b = l.label(b)
                    )));
                }
                if !l.comparable(a, b) && *self.c(a, b)? != self.q(a, b).mul(self.c(b, a)?) {
                    return Err(Error::InconsistentParameters(format!(
                        "c_({a},{b}) != q_({a},{b}) c_({b},{a})",
                        a = l.label(a),
                        b = l.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_consistent(&self) -> bool {
        self.check_consistency().is_ok()
    }

    pub fn rule_scalar(&self, rule: Rule) -> QScalar {
        match rule {
            Rule::Swap(a, b) => self.q(a, b).clone(),
            Rule::Split(a, b) => self.c[&(a, b)].clone(),
        }
    }

    /// Numeric normal form; the parameters must be consistent.
    pub fn normal_form(&self, word: &[usize]) -> Result<ToricNf<QScalar>> {
        self.check_consistency()?;
        self.normal_form_unchecked(word)
    }

    pub(crate) fn normal_form_unchecked(&self, word: &[usize]) -> Result<ToricNf<QScalar>> {
        let mut scalar = QScalar::one();
        let monomial = rewrite(&self.lattice, &self.realization, word, |r| {
            scalar = scalar.mul(&self.rule_scalar(r));
        })?;
        Ok(ToricNf { scalar, monomial })
    }
}

/// Symbolic normal form, valid for any distributive lattice.
pub fn symbolic_nf(
    lattice: &FiniteLattice,
    realization: &ChainProductRealization,
    word: &[usize],
) -> Result<ToricNf<ScalarMonomial>> {
    lattice.require_distributive()?;
    let mut scalar = ScalarMonomial::one();
    let monomial = rewrite(lattice, realization, word, |r| scalar.apply(r))?;
    Ok(ToricNf { scalar, monomial })
}

/// The rule applicable to the adjacent pair `(a, b)`, if any.
pub fn rule_at(lattice: &FiniteLattice, a: usize, b: usize) -> Option<Rule> {
    if lattice.lt(b, a) {
        Some(Rule::Swap(a, b))
    } else if !lattice.comparable(a, b) {
        Some(Rule::Split(a, b))
    } else {
        None
    }
}

/// Applies `rule` at position `p`.
pub fn apply_rule(lattice: &FiniteLattice, word: &mut [usize], p: usize, rule: Rule) {
    match rule {
        Rule::Swap(a, b) => {
            word[p] = b;
            word[p + 1] = a;
        }
        Rule::Split(a, b) => {
            word[p] = lattice.meet(a, b);
            word[p + 1] = lattice.join(a, b);
        }
    }
}

/// `(Σ ω, Σ ω², #ω-inversions)` of a word.
fn measure(r: &ChainProductRealization, word: &[usize]) -> (u128, u128, usize) {
    let om: Vec<u128> = word.iter().map(|&x| r.omega(x)).collect();
    let sum = om.iter().sum();
    let sq = om.iter().map(|w| w * w).sum();
    let inv = (0..om.len())
        .flat_map(|i| (i + 1..om.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| om[i] > om[j])
        .count();
    (sum, sq, inv)
}

/// Leftmost-first rewriting. When the leftmost applicable rule is a split
/// and a swap applies at the next position, the swap is taken instead.
/// Every step is checked against the termination measure.
fn rewrite(
    lattice: &FiniteLattice,
    realization: &ChainProductRealization,
    word: &[usize],
    mut on_rule: impl FnMut(Rule),
) -> Result<Vec<usize>> {
    if let Some(&bad) = word.iter().find(|&&x| x >= lattice.len()) {
        return Err(Error::UnknownElement(bad.to_string()));
    }
    let mut w = word.to_vec();
    let mut before = measure(realization, &w);
    loop {
        let Some(mut p) =
            (0..w.len().saturating_sub(1)).find(|&p| rule_at(lattice, w[p], w[p + 1]).is_some())
        else {
            return Ok(w);
        };
        let mut rule = rule_at(lattice, w[p], w[p + 1]).unwrap();
        if matches!(rule, Rule::Split(..)) && p + 2 < w.len() {
            if let Some(next @ Rule::Swap(..)) = rule_at(lattice, w[p + 1], w[p + 2]) {
                p += 1;
                rule = next;
            }
        }
        apply_rule(lattice, &mut w, p, rule);
        on_rule(rule);
        let after = measure(realization, &w);
        let ok = match rule {
            Rule::Swap(..) => after.0 == before.0 && after.1 == before.1 && after.2 < before.2,
            Rule::Split(..) => after.0 == before.0 && after.1 > before.1,
        };
        if !ok {
            return Err(Error::InvariantViolation {
                pair: format!("{rule:?}"),
                reason: "termination measure did not improve".into(),
            });
        }
        before = after;
    }
}

impl fmt::Display for ToricNf<QScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {:?}", self.scalar, self.monomial)
    }
}

#[cfg(test)]
mod tests;

//! Quantum Richardson quotients `O_q(G_{m,n}) / ⟨Π_α^β⟩`, where `Π_α^β` is
//! the set of Plücker coordinates outside the interval `[α, β]`.
//!
//! The standard monomials supported in `[α, β]` form a basis of the
//! quotient, so multiplication is straightening in the full algebra
//! followed by dropping every term that leaves the interval.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{
    check_plucker, Commutation, Grassmannian, PluckerIndex, StdExpansion, StraighteningTable,
};
use crate::lattice::{tuple_label, ChainProductRealization, FiniteLattice, IntervalSplit};
use crate::linalg::EchelonBasis;
use crate::scalars::{QScalar, Specialization};

/// `ℓ(w_I) = Σ I_k − m(m+1)/2`, the length of the minimal coset
/// representative attached to `I`.
pub fn coset_length(i: &[u32]) -> u64 {
    let m = i.len() as u64;
    i.iter().map(|&v| v as u64).sum::<u64>() - m * (m + 1) / 2
}

/// The three expressions for the Gelfand-Kirillov dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkDimensions {
    /// `Σ (β_k − α_k) + 1`.
    pub formula: u64,
    /// `rank([α, β]) + 1`.
    pub rank_plus_one: u64,
    /// `ℓ(w_β) − ℓ(w_α) + 1`.
    pub coset_difference: u64,
}

impl GkDimensions {
    pub fn agree(&self) -> bool {
        self.formula == self.rank_plus_one && self.formula == self.coset_difference
    }
}

/// Truncated Hilbert series with its reconstructed rational form
/// `numerator(t) / (1 − t)^krull`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub coefficients: Vec<BigUint>,
    pub krull: usize,
    pub numerator: Vec<BigInt>,
    pub palindromic: bool,
}

pub struct RichardsonAlgebra {
    g: Arc<Grassmannian>,
    alpha: PluckerIndex,
    beta: PluckerIndex,
    split: IntervalSplit,
    interval: FiniteLattice,
    table: StraighteningTable,
}

impl RichardsonAlgebra {
    pub fn new(m: usize, n: usize, alpha: &[u32], beta: &[u32]) -> Result<Self> {
        Self::from_grassmannian(Arc::new(Grassmannian::new(m, n)?), alpha, beta)
    }

    /// The quotient of an already constructed Grassmannian, reusing its
    /// caches.
    pub fn from_grassmannian(g: Arc<Grassmannian>, alpha: &[u32], beta: &[u32]) -> Result<Self> {
        check_plucker(g.m(), g.n(), alpha)?;
        check_plucker(g.m(), g.n(), beta)?;
        let (a, b) = (g.index_of(alpha)?, g.index_of(beta)?);
        let split = g.lattice().interval_and_complement(a, b)?;
        let interval = g.lattice().sublattice(&split.interval)?;
        let table = restrict(&g, &split.interval, &interval)?;
        table.certify()?;
        Ok(RichardsonAlgebra {
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
            g,
            split,
            interval,
            table,
        })
    }

    pub fn grassmannian(&self) -> &Grassmannian {
        &self.g
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    /// The interval as a lattice; element `k` is `members()[k]` in the
    /// full poset.
    pub fn interval(&self) -> &FiniteLattice {
        &self.interval
    }

    pub fn members(&self) -> &[usize] {
        &self.split.interval
    }

    pub fn complement(&self) -> &[usize] {
        &self.split.complement
    }

    /// Straightening and commutation relations of the quotient, indexed by
    /// interval positions.
    pub fn table(&self) -> &StraighteningTable {
        &self.table
    }

    fn local(&self, x: usize) -> Option<usize> {
        self.split.interval.binary_search(&x).ok()
    }

    /// Image in the quotient of a product of generators given by interval
    /// positions.
    pub fn reduce_word(&self, word: &[usize]) -> Result<StdExpansion> {
        let global: Vec<usize> = word
            .iter()
            .map(|&k| {
                self.split
                    .interval
                    .get(k)
                    .copied()
                    .ok_or_else(|| Error::UnknownElement(k.to_string()))
            })
            .collect::<Result<_>>()?;
        let full = self.g.expand_in_std(&global)?;
        let mut out = StdExpansion::new();
        for (key, c) in full.terms() {
            if let Some(local) = key
                .iter()
                .map(|&x| self.local(x))
                .collect::<Option<Vec<_>>>()
            {
                out.add_term(local, c);
            }
        }
        Ok(out)
    }

    /// Product in the quotient of two combinations of standard monomials.
    pub fn mul(&self, x: &StdExpansion, y: &StdExpansion) -> Result<StdExpansion> {
        let mut out = StdExpansion::new();
        for (kx, cx) in x.terms() {
            for (ky, cy) in y.terms() {
                let word: Vec<usize> = kx.iter().chain(ky).copied().collect();
                out = out.add(&self.reduce_word(&word)?.scale(&cx.mul(cy)));
            }
        }
        Ok(out)
    }

    pub fn gk_dimensions(&self) -> GkDimensions {
        let formula = self
            .alpha
            .iter()
            .zip(&self.beta)
            .map(|(&a, &b)| (b - a) as u64)
            .sum::<u64>()
            + 1;
        GkDimensions {
            formula,
            rank_plus_one: self.interval.rank() as u64 + 1,
            coset_difference: coset_length(&self.beta) - coset_length(&self.alpha) + 1,
        }
    }

    /// GK dimension, after checking that all three expressions agree.
    pub fn gk_dim(&self) -> Result<u64> {
        let d = self.gk_dimensions();
        if !d.agree() {
            return Err(Error::InvariantViolation {
                pair: format!(
                    "[{}, {}]",
                    tuple_label(&self.alpha),
                    tuple_label(&self.beta)
                ),
                reason: format!("GK dimension expressions disagree: {d:?}"),
            });
        }
        Ok(d.formula)
    }

    pub fn default_hilbert_degree(&self) -> usize {
        self.interval.rank() + self.interval.len() + 2
    }

    /// Hilbert series coefficients `h_0..h_D` from multichain counts, and
    /// the numerator of the rational form.
    pub fn hilbert(&self, max_degree: Option<usize>) -> Result<HilbertData> {
        let bound = self.interval.len();
        let d = max_degree.unwrap_or_else(|| self.default_hilbert_degree());
        if d < bound + 2 {
            return Err(Error::ReconstructionFailed(format!(
                "degree bound {d} is below {}; increase it",
                bound + 2
            )));
        }
        let coefficients = self.interval.multichain_counts(d);
        let krull = self.interval.rank() + 1;
        let numerator = times_one_minus_t_pow(&coefficients, krull);
        if let Some(k) = (bound + 1..=d).find(|&k| !numerator[k].is_zero()) {
            return Err(Error::ReconstructionFailed(format!(
                "numerator coefficient of t^{k} is {}; increase the degree bound",
                numerator[k]
            )));
        }
        let mut numerator = numerator;
        while numerator.len() > 1 && numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        let palindromic = numerator.iter().eq(numerator.iter().rev());
        Ok(HilbertData {
            coefficients,
            krull,
            numerator,
            palindromic,
        })
    }

    /// Palindromy of the Hilbert numerator. This is an indicator for the
    /// Gorenstein property read off the Hilbert series, not a proof.
    pub fn gorenstein_indicator(&self) -> Result<bool> {
        Ok(self.hilbert(None)?.palindromic)
    }

    /// Dimension of the degree-`d` part of the quotient at the given `q`,
    /// as the number of standard monomials of the full algebra minus the
    /// rank of all words that involve a generator outside the interval.
    pub fn quotient_dimension(&self, degree: usize, q: &Specialization) -> Result<usize> {
        let l = self.g.lattice();
        let n = l.len();
        let total = l.multichains(degree).len();
        let outside = |x: usize| self.local(x).is_none();
        let mut blocks: BTreeMap<Vec<u32>, Vec<StdExpansion>> = BTreeMap::new();
        for code in 0..n.pow(degree as u32) {
            let word: Vec<usize> = (0..degree).map(|k| code / n.pow(k as u32) % n).collect();
            if word.iter().any(|&x| outside(x)) {
                let e = self.g.expand_in_std(&word)?;
                blocks.entry(self.g.row_content(&word)).or_default().push(e);
            }
        }
        let mut rank = 0;
        for exps in blocks.values() {
            let mut keys: Vec<&Vec<usize>> = exps.iter().flat_map(|e| e.terms().keys()).collect();
            keys.sort();
            keys.dedup();
            let mut echelon = EchelonBasis::<QScalar>::new(keys.len());
            for e in exps {
                let row = keys
                    .iter()
                    .map(|k| q.apply(&e.coeff(k)))
                    .collect::<Result<Vec<_>>>()?;
                if echelon.insert(row) {
                    rank += 1;
                }
            }
        }
        Ok(total - rank)
    }
}

/// Restricts the full table to `members` and drops outside terms.
fn restrict(
    g: &Grassmannian,
    members: &[usize],
    interval: &FiniteLattice,
) -> Result<StraighteningTable> {
    let full = g.straightening_table()?;
    let local = |x: usize| members.binary_search(&x).ok();
    let cut = |e: &StdExpansion| {
        let mut out = StdExpansion::new();
        for (key, c) in e.terms() {
            if let Some(k) = key.iter().map(|&x| local(x)).collect::<Option<Vec<_>>>() {
                out.add_term(k, c);
            }
        }
        out
    };
    let mut straightening = BTreeMap::new();
    let mut commutation = BTreeMap::new();
    for (a, &x) in members.iter().enumerate() {
        for (b, &y) in members.iter().enumerate() {
            if let Some(e) = full.straightening.get(&(x, y)) {
                straightening.insert((a, b), cut(e));
            }
            let c = &full.commutation[&(x, y)];
            commutation.insert(
                (a, b),
                Commutation {
                    qpow: c.qpow.clone(),
                    tail: cut(&c.tail),
                },
            );
        }
    }
    let r = g.realization();
    let iota = members.iter().map(|&x| r.iota(x).to_vec()).collect();
    let realization = ChainProductRealization::new(interval, r.sizes().to_vec(), iota)?;
    Ok(StraighteningTable::from_parts(
        interval.clone(),
        realization,
        straightening,
        commutation,
    ))
}

/// Coefficients of `(Σ h_d t^d)(1 − t)^k`, truncated to the length of `h`.
fn times_one_minus_t_pow(h: &[BigUint], k: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = h.iter().map(|c| BigInt::from(c.clone())).collect();
    for _ in 0..k {
        for i in (1..out.len()).rev() {
            let prev = out[i - 1].clone();
            out[i] -= prev;
        }
    }
    out
}

/// Renders a numerator such as `1 + t`.
pub fn format_polynomial(coeffs: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = if c < &BigInt::zero() {
            -c.clone()
        } else {
            c.clone()
        };
        let body = match (k, mag.is_one()) {
            (0, _) => mag.to_string(),
            (1, true) => "t".into(),
            (1, false) => format!("{mag}*t"),
            (_, true) => format!("t^{k}"),
            (_, false) => format!("{mag}*t^{k}"),
        };
        let sign = if c < &BigInt::zero() { "-" } else { "+" };
        if parts.is_empty() {
            parts.push(if sign == "-" {
                format!("-{body}")
            } else {
                body
            });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests;

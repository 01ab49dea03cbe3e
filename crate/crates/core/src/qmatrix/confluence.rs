//! Independent word rewriting used to cross-check the PBW engine.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Monomial, PbwElement, QMatrixAlgebra, Swap};
use crate::report::CheckReport;
use crate::scalars::QScalar;

/// Which inversion a [`WordRewriter`] resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Outcome of a confluence or equal-word run.
pub type ConfluenceReport = CheckReport;

/// Rewrites unsorted words one adjacent inversion at a time.
pub struct WordRewriter<'a> {
    alg: &'a QMatrixAlgebra,
}

impl<'a> WordRewriter<'a> {
    pub fn new(alg: &'a QMatrixAlgebra) -> Self {
        WordRewriter { alg }
    }

    /// Positions `p` with `w[p] > w[p+1]`.
    pub fn inversions(word: &[u16]) -> Vec<usize> {
        (0..word.len().saturating_sub(1))
            .filter(|&p| word[p] > word[p + 1])
            .collect()
    }

    /// Applies the rule at position `p`.
    pub fn step(&self, word: &[u16], p: usize) -> Vec<(Vec<u16>, QScalar)> {
        let (a, g) = (word[p], word[p + 1]);
        let with = |x: u16, y: u16| {
            let mut w = word.to_vec();
            w[p] = x;
            w[p + 1] = y;
            w
        };
        match self.alg.swap_rule(a, g) {
            Swap::Scaled(s) => vec![(with(g, a), s)],
            Swap::Corrected { x, y } => vec![
                (with(g, a), QScalar::one()),
                (with(x, y), QScalar::q_pow(-1).sub(&QScalar::q_pow(1))),
            ],
        }
    }

    pub fn reduce(&self, word: &[u16], strategy: Strategy) -> PbwElement {
        self.reduce_combination(vec![(word.to_vec(), QScalar::one())], strategy)
    }

    pub fn reduce_combination(
        &self,
        start: Vec<(Vec<u16>, QScalar)>,
        strategy: Strategy,
    ) -> PbwElement {
        let mut pending: BTreeMap<Vec<u16>, QScalar> = BTreeMap::new();
        let mut out = self.alg.zero();
        let push = |pending: &mut BTreeMap<Vec<u16>, QScalar>, w: Vec<u16>, c: QScalar| {
            let e = pending.entry(w).or_insert_with(QScalar::zero);
            *e = e.add(&c);
        };
        for (w, c) in start {
            push(&mut pending, w, c);
        }
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            let inv = Self::inversions(&w);
            let p = match strategy {
                Strategy::Leftmost => inv.first(),
                Strategy::Rightmost => inv.last(),
            };
            match p {
                None => out.add_term(w, &c),
                Some(&p) => {
                    for (w2, c2) in self.step(&w, p) {
                        push(&mut pending, w2, c.mul(&c2));
                    }
                }
            }
        }
        out
    }
}

const MAX_BRANCHES: usize = 64;

/// Every normal form reachable from `word` under any order of rule
/// applications (capped at [`MAX_BRANCHES`] distinct results).
fn all_normal_forms(
    rw: &WordRewriter<'_>,
    word: &[u16],
    memo: &mut HashMap<Vec<u16>, Vec<PbwElement>>,
) -> Vec<PbwElement> {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let inv = WordRewriter::inversions(word);
    let mut results: Vec<PbwElement> = Vec::new();
    if inv.is_empty() {
        results.push(PbwElement::from_terms(
            rw.alg.rows,
            rw.alg.cols,
            [(word.to_vec(), QScalar::one())],
        ));
    }
    for p in inv {
        let mut partial = vec![rw.alg.zero()];
        for (w, c) in rw.step(word, p) {
            let options = all_normal_forms(rw, &w, memo);
            let mut next = Vec::new();
            for base in &partial {
                for o in &options {
                    let cand = base.add(&o.scale(&c));
                    if !next.contains(&cand) {
                        next.push(cand);
                    }
                }
            }
            next.truncate(MAX_BRANCHES);
            partial = next;
        }
        for cand in partial {
            if !results.contains(&cand) && results.len() < MAX_BRANCHES {
                results.push(cand);
            }
        }
    }
    memo.insert(word.to_vec(), results.clone());
    results
}

fn words(alphabet: u16, len: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
    }
    out
}

/// Checks that every word of length at most `max_len` has exactly one
/// reachable normal form, and that it equals the engine's.
pub fn confluence_check(alg: &QMatrixAlgebra, max_len: usize) -> ConfluenceReport {
    let rw = WordRewriter::new(alg);
    let mut memo = HashMap::new();
    let mut report = ConfluenceReport::default();
    let alphabet = (alg.rows * alg.cols) as u16;
    for len in 0..=max_len {
        for w in words(alphabet, len) {
            report.checked += 1;
            let forms = all_normal_forms(&rw, &w, &mut memo);
            let engine = alg.normal_form_codes(&w);
            if forms.len() != 1 {
                report.fail(format!(
                    "{w:?} reaches {} distinct normal forms",
                    forms.len()
                ));
            } else if forms[0] != engine {
                report.fail(format!(
                    "{w:?}: rewriting gives {} but engine {}",
                    forms[0], engine
                ));
            }
        }
    }
    report
}

/// Random pairs `w = s · w'` where `w'` swaps one adjacent pair of `w`
/// that commutes up to the scalar `s`. The engine's `nf(w)` must equal
/// `s` times the rightmost-first rewriting of `w'`.
pub fn equal_word_pairs_check(
    alg: &QMatrixAlgebra,
    pairs: usize,
    max_len: usize,
    seed: u64,
) -> ConfluenceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rw = WordRewriter::new(alg);
    let alphabet = (alg.rows * alg.cols) as u16;
    let mut report = ConfluenceReport::default();
    while report.checked < pairs {
        let len = rng.gen_range(2..=max_len.max(2));
        let w: Vec<u16> = (0..len).map(|_| rng.gen_range(0..alphabet)).collect();
        let candidates: Vec<(usize, QScalar)> = (0..len - 1)
            .filter_map(|p| {
                let (a, b) = (w[p], w[p + 1]);
                if a == b {
                    return None;
                }
                let (hi, lo) = if a > b { (a, b) } else { (b, a) };
                match alg.swap_rule(hi, lo) {
                    // hi lo = s lo hi, so lo hi = s^-1 hi lo
                    Swap::Scaled(s) if a > b => Some((p, s)),
                    Swap::Scaled(s) => Some((p, s.inv().expect("unit"))),
                    Swap::Corrected { .. } => None,
                }
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let (p, s) = &candidates[rng.gen_range(0..candidates.len())];
        let mut swapped = w.clone();
        swapped.swap(*p, p + 1);
        report.checked += 1;
        let lhs = alg.normal_form_codes(&w);
        let rhs = rw.reduce(&swapped, Strategy::Rightmost).scale(s);
        if lhs != rhs {
            report.fail(format!("{w:?} vs {swapped:?}: {lhs} != {rhs}"));
        }
    }
    report
}

/// The commutative product of sorted monomials, the `q = 1` oracle.
pub fn commutative_oracle(
    a: &BTreeMap<Monomial, BigRational>,
    b: &BTreeMap<Monomial, BigRational>,
) -> BTreeMap<Monomial, BigRational> {
    let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let mut m: Monomial = m1.iter().chain(m2).copied().collect();
            m.sort_unstable();
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// At `q = 1` the normal form of every word of length at most `max_len`
/// is the sorted word.
pub fn q_one_check(alg: &QMatrixAlgebra, max_len: usize) -> ConfluenceReport {
    let one = BigRational::one();
    let alphabet = (alg.rows * alg.cols) as u16;
    let mut report = ConfluenceReport::default();
    for len in 0..=max_len {
        for w in words(alphabet, len) {
            report.checked += 1;
            let got = alg
                .normal_form_codes(&w)
                .specialize(&one)
                .expect("Laurent coefficients");
            let expected = w.iter().fold(
                BTreeMap::from([(Vec::new(), BigRational::one())]),
                |acc, &g| commutative_oracle(&acc, &BTreeMap::from([(vec![g], one.clone())])),
            );
            if got != expected {
                report.fail(format!("{w:?} does not specialize to its sorted word"));
            }
        }
    }
    report
}

//! The end-to-end acceptance suite: eight criteria, each returning a
//! pass/fail report with a one-line summary.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classical::ClassicalGrassmannian;
use crate::degeneration::{extract_graded, verify_degeneration};
use crate::error::Result;
use crate::grassmann::{plucker_indices, verify_symmetric_asl, Grassmannian};
use crate::lattice::{leading_agreement, omega_inequality, FiniteLattice};
use crate::qmatrix::{confluence_check, equal_word_pairs_check, q_one_check, QMatrixAlgebra};
use crate::richardson::{format_polynomial, RichardsonAlgebra};
use crate::scalars::Specialization;
use crate::toric::{confluence_certify, gkdim_toric, regularity_check, torus_embedding};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {}: {} ({}; {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed_ms
        )
    }
}

fn timed(id: usize, title: &str, body: impl FnOnce() -> Result<(bool, String)>) -> CriterionReport {
    let start = Instant::now();
    let (passed, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionReport {
        id,
        title: title.into(),
        passed,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Rewriting in quantum matrices is confluent and has the right classical
/// limit.
pub fn criterion_1() -> CriterionReport {
    timed(1, "quantum matrix engine", || {
        let m2 = QMatrixAlgebra::new(2, 2)?;
        let exhaustive = confluence_check(&m2, 3);
        let m32 = QMatrixAlgebra::new(3, 2)?;
        let random = equal_word_pairs_check(&m32, 1000, 5, 2024);
        let classical = q_one_check(&m2, 3);
        let ok =
            exhaustive.is_ok() && random.is_ok() && classical.is_ok() && random.checked == 1000;
        let mut detail = format!(
            "M2 words {}, M32 pairs {}, q=1 words {}",
            exhaustive.checked, random.checked, classical.checked
        );
        if let Some(f) = exhaustive
            .failures
            .iter()
            .chain(&random.failures)
            .chain(&classical.failures)
            .next()
        {
            detail.push_str(&format!("; first failure: {f}"));
        }
        Ok((ok, detail))
    })
}

/// Straightening tables certify and reproduce the classical table at q = 1.
pub fn criterion_2() -> CriterionReport {
    timed(2, "straightening tables", || {
        let mut parts = Vec::new();
        for (m, n) in [(2, 4), (2, 5), (3, 6)] {
            let t = Grassmannian::new(m, n)?.straightening_table()?;
            parts.push(format!(
                "({m},{n}): {} straightenings",
                t.straightening.len()
            ));
        }
        let quantum = Grassmannian::new(2, 4)?.straightening_table()?;
        let classical = ClassicalGrassmannian::new(2, 4)?.table()?;
        let limit = quantum.specialize(&BigRational::from_integer(1.into()))? == classical;
        parts.push(format!("q=1 matches classical: {limit}"));
        Ok((limit, parts.join(", ")))
    })
}

/// Degree-2 standard monomials of O_q(G_{2,4}) are independent.
pub fn criterion_3() -> CriterionReport {
    timed(3, "ASL-1 dimension", || {
        let g = Grassmannian::new(2, 4)?;
        let report = verify_symmetric_asl(&g, 2);
        let d2 = &report.degrees[1];
        let census = g.lattice().multichain_counts(2)[2].clone();
        let ok = report.is_ok()
            && d2.standard_monomials == 20
            && d2.rank == 20
            && census == BigUint::from(20u32);
        Ok((
            ok,
            format!(
                "standard {}, rank {}, census {census}",
                d2.standard_monomials, d2.rank
            ),
        ))
    })
}

fn increasing_tuples(d: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| {
                let start = t.last().copied().unwrap_or(1);
                (start..=n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn sorted_union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut c: Vec<u32> = a.iter().chain(b).copied().collect();
    c.sort_unstable();
    c
}

/// Tally of an implication over quadruples: applicable cases and failures.
#[derive(Default)]
struct Tally {
    applicable: usize,
    failed: usize,
}

impl Tally {
    fn record(&mut self, outcome: Option<bool>) {
        if let Some(ok) = outcome {
            self.applicable += 1;
            if !ok {
                self.failed += 1;
            }
        }
    }
}

/// The ω lemmas and Birkhoff ranks.
pub fn criterion_4() -> CriterionReport {
    timed(4, "lattice lemmas", || {
        let (mut pre, mut main) = (Tally::default(), Tally::default());
        let small = increasing_tuples(2, 4);
        let base = 2 * 4 + 1;
        for i in &small {
            for j in &small {
                for k in &small {
                    for l in &small {
                        pre.record(leading_agreement(i, j, k, l));
                        main.record(omega_inequality(i, j, k, l, base));
                    }
                }
            }
        }
        // Random (I, J), with (K, L) drawn among pairs of the same content so
        // that the premises are met often.
        let big = increasing_tuples(3, 5);
        let base = 2 * 5 + 1;
        let mut by_content: HashMap<Vec<u32>, Vec<(usize, usize)>> = HashMap::new();
        for (a, k) in big.iter().enumerate() {
            for (b, l) in big.iter().enumerate() {
                by_content
                    .entry(sorted_union(k, l))
                    .or_default()
                    .push((a, b));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (mut rpre, mut rmain) = (Tally::default(), Tally::default());
        for _ in 0..10_000 {
            let i = &big[rng.gen_range(0..big.len())];
            let j = &big[rng.gen_range(0..big.len())];
            let pairs = &by_content[&sorted_union(i, j)];
            let (a, b) = pairs[rng.gen_range(0..pairs.len())];
            let (k, l) = (&big[a], &big[b]);
            rpre.record(leading_agreement(i, j, k, l));
            rmain.record(omega_inequality(i, j, k, l, base));
        }
        let mut ranks = Vec::new();
        let mut ranks_ok = true;
        for ((m, n), want) in [((2, 4), 4), ((2, 5), 6), ((3, 6), 9)] {
            let l = FiniteLattice::from_tuples(&plucker_indices(m, n))?;
            let b = l.birkhoff_check()?;
            ranks_ok &= b.rank == want && b.irreducibles.len() == want;
            ranks.push(b.rank.to_string());
        }
        let failed = pre.failed + main.failed + rpre.failed + rmain.failed;
        let ok = failed == 0
            && ranks_ok
            && pre.applicable > 0
            && main.applicable > 0
            && rmain.applicable > 0;
        Ok((
            ok,
            format!(
                "C4xC4 applicable {}+{}, C5^3 sampled 10000 (applicable {}+{}), failures {failed}, ranks {}",
                pre.applicable,
                main.applicable,
                rpre.applicable,
                rmain.applicable,
                ranks.join("/")
            ),
        ))
    })
}

/// The associated graded algebra of O_q(G_{2,n}) is quantum toric.
pub fn criterion_5() -> CriterionReport {
    timed(5, "degeneration", || {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in [4, 5] {
            let g = Grassmannian::new(2, n)?;
            let e = extract_graded(&g.straightening_table()?)?;
            let p = e.presentation()?;
            let confluent = confluence_certify(&p).is_ok();
            let strict = e.margins.values().all(|&m| m > 0);
            let r = verify_degeneration(&g, 2, 17)?;
            ok &= confluent && strict && r.is_ok();
            parts.push(format!(
                "(2,{n}): confluent {confluent}, strict weights {strict}, dimension rows {}",
                r.dimensions.len()
            ));
        }
        Ok((ok, parts.join("; ")))
    })
}

/// The extracted toric algebra of Π_{2,4} embeds in a quantum torus.
pub fn criterion_6() -> CriterionReport {
    timed(6, "quantum torus", || {
        let g = Grassmannian::new(2, 4)?;
        let p = extract_graded(&g.straightening_table()?)?.presentation()?;
        let emb = torus_embedding(&p)?;
        let rep = emb.verify(&p)?;
        let gk = gkdim_toric(&p)?;
        Ok((
            rep.is_ok() && gk == 5,
            format!("relations checked {}, GKdim {gk}", rep.checked),
        ))
    })
}

/// GK dimensions of all Richardson quotients of O_q(G_{2,4}) and the
/// Hilbert data of the diamond interval.
pub fn criterion_7() -> CriterionReport {
    timed(7, "Richardson quotients", || {
        let g = Arc::new(Grassmannian::new(2, 4)?);
        let all = plucker_indices(2, 4);
        let mut pairs = 0;
        let mut agree = true;
        for a in &all {
            for b in &all {
                if a.iter().zip(b).all(|(x, y)| x <= y) {
                    pairs += 1;
                    agree &= RichardsonAlgebra::from_grassmannian(g.clone(), a, b)?
                        .gk_dimensions()
                        .agree();
                }
            }
        }
        let r = RichardsonAlgebra::from_grassmannian(g, &[1, 3], &[2, 4])?;
        let h = r.hilbert(None)?;
        let squares = (0..=6).all(|d| h.coefficients[d] == BigUint::from((d as u32 + 1).pow(2)));
        let numerator = format_polynomial(&h.numerator);
        let mut q_free = true;
        for q in [Specialization::Symbolic, "1".parse()?, "2".parse()?] {
            for d in 1..=3 {
                q_free &= BigUint::from(r.quotient_dimension(d, &q)?) == h.coefficients[d];
            }
        }
        let ok = pairs == 20 && agree && squares && numerator == "1 + t" && h.palindromic && q_free;
        Ok((
            ok,
            format!(
                "pairs {pairs}, formulas agree {agree}, h_d=(d+1)^2 {squares}, numerator {numerator}, \
                 Gorenstein {}, quotient dims q-independent {q_free}",
                h.palindromic
            ),
        ))
    })
}

/// Left multiplication by generators is injective on standard monomials.
pub fn criterion_8() -> CriterionReport {
    timed(8, "toric regularity", || {
        let g = Grassmannian::new(2, 4)?;
        let p = extract_graded(&g.straightening_table()?)?.presentation()?;
        let rep = regularity_check(&p, 4)?;
        Ok((rep.is_ok(), format!("images checked {}", rep.checked)))
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}

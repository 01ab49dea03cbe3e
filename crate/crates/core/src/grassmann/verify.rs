//! Verification suites for the quantum Grassmannian.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{check_plucker, Grassmannian, StdExpansion};
use crate::error::{Error, Result};
use crate::lattice::tuple_label;
use crate::linalg::EchelonBasis;
use crate::qmatrix::Monomial;
use crate::report::CheckReport;
use crate::scalars::QScalar;

/// Componentwise order on tuples of equal length.
pub fn tuple_leq(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// An implication `premise ⟹ conclusion` evaluated on concrete tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderEvidence {
    pub images: (Vec<u32>, Vec<u32>),
    pub premise: bool,
    pub conclusion: bool,
}

impl OrderEvidence {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

/// For `I, J` in `Π_{m,2m}`: `I ≤ J ⟹ I^c ≥ J^c`.
pub fn complement_order(i: &[u32], j: &[u32]) -> Result<OrderEvidence> {
    let m = i.len();
    check_plucker(m, 2 * m, i)?;
    check_plucker(m, 2 * m, j)?;
    let comp = |s: &[u32]| -> Vec<u32> { (1..=2 * m as u32).filter(|v| !s.contains(v)).collect() };
    let (ic, jc) = (comp(i), comp(j));
    Ok(OrderEvidence {
        premise: tuple_leq(i, j),
        conclusion: tuple_leq(&jc, &ic),
        images: (ic, jc),
    })
}

/// For `I, K` in `Π_{h,n}` and `S` disjoint from both:
/// `I ≤ K ⟹ I ⊔ S ≤ K ⊔ S`.
pub fn disjoint_union_order(i: &[u32], k: &[u32], s: &[u32], n: usize) -> Result<OrderEvidence> {
    let h = i.len();
    check_plucker(h, n, i)?;
    check_plucker(h, n, k)?;
    if !s.is_empty() {
        check_plucker(s.len(), n, s)?;
    }
    if s.iter().any(|v| i.contains(v) || k.contains(v)) {
        return Err(Error::BadShape(format!(
            "{} meets {} or {}",
            tuple_label(s),
            tuple_label(i),
            tuple_label(k)
        )));
    }
    let union = |a: &[u32]| {
        let mut u: Vec<u32> = a.iter().chain(s).copied().collect();
        u.sort_unstable();
        u
    };
    let (is, ks) = (union(i), union(k));
    Ok(OrderEvidence {
        premise: tuple_leq(i, k),
        conclusion: tuple_leq(&is, &ks),
        images: (is, ks),
    })
}

/// Linear independence of the standard monomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub standard_monomials: usize,
    pub rank: usize,
    pub blocks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AslReport {
    pub m: usize,
    pub n: usize,
    pub degrees: Vec<DegreeCheck>,
    pub incomparable_pairs: usize,
    pub commutation_pairs: usize,
    pub distributive: bool,
    pub increasing_images: bool,
    pub violations: Vec<String>,
}

impl AslReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Grassmannian {
    /// Rank of the PBW coordinates of all standard monomials of a degree,
    /// computed block by block.
    pub fn standard_rank(&self, degree: usize) -> DegreeCheck {
        let blocks = self.standard_blocks(degree);
        let mut rank = 0;
        let mut count = 0;
        for basis in blocks.values() {
            count += basis.len();
            let pbw: Vec<_> = basis.iter().map(|b| self.product_pbw(b)).collect();
            let mut keys: Vec<&Monomial> = pbw.iter().flat_map(|p| p.terms().keys()).collect();
            keys.sort();
            keys.dedup();
            let mut echelon = EchelonBasis::<QScalar>::new(keys.len());
            for p in &pbw {
                if echelon.insert(keys.iter().map(|k| p.coeff(k)).collect()) {
                    rank += 1;
                }
            }
        }
        DegreeCheck {
            degree,
            standard_monomials: count,
            rank,
            blocks: blocks.len(),
        }
    }
}

/// Checks standard-monomial independence up to `max_degree`, the table
/// invariants, and the lattice part of condition (C).
pub fn verify_symmetric_asl(g: &Grassmannian, max_degree: usize) -> AslReport {
    let mut violations = Vec::new();
    let degrees: Vec<DegreeCheck> = (1..=max_degree).map(|d| g.standard_rank(d)).collect();
    for d in &degrees {
        if d.rank != d.standard_monomials {
            violations.push(format!(
                "degree {}: {} standard monomials but rank {}",
                d.degree, d.standard_monomials, d.rank
            ));
        }
    }
    let (mut incomparable_pairs, mut commutation_pairs) = (0, 0);
    match g.straightening_table() {
        Ok(t) => {
            incomparable_pairs = t.straightening.len();
            commutation_pairs = t.commutation.len();
        }
        Err(e) => violations.push(e.to_string()),
    }
    let distributive = g.lattice().is_distributive();
    let increasing_images = g.realization().increasing_images();
    if !distributive {
        violations.push("poset is not a distributive lattice".into());
    }
    if !increasing_images {
        violations.push("realization images are not increasing".into());
    }
    AslReport {
        m: g.m(),
        n: g.n(),
        degrees,
        incomparable_pairs,
        commutation_pairs,
        distributive,
        increasing_images,
        violations,
    }
}

/// Muir's extension law: for every non-standard pair `(I, J)` with
/// common part `S`, the expansion of `[I][J]` is the expansion of
/// `[I∖S][J∖S]` in `O_q(G_{h,n})` with `S` added to every index.
pub fn muir_consistency(g: &Grassmannian) -> Result<CheckReport> {
    let mut smaller: HashMap<usize, Grassmannian> = HashMap::new();
    let mut report = CheckReport::default();
    let l = g.lattice();
    for i in 0..l.len() {
        for j in 0..l.len() {
            if l.leq(i, j) {
                continue;
            }
            let (ti, tj) = (g.tuple(i), g.tuple(j));
            let s: Vec<u32> = ti.iter().copied().filter(|v| tj.contains(v)).collect();
            if s.is_empty() {
                continue;
            }
            let h = g.m() - s.len();
            let i0: Vec<u32> = ti.iter().copied().filter(|v| !s.contains(v)).collect();
            let j0: Vec<u32> = tj.iter().copied().filter(|v| !s.contains(v)).collect();
            if let std::collections::hash_map::Entry::Vacant(e) = smaller.entry(h) {
                e.insert(Grassmannian::new(h, g.n())?);
            }
            let g0 = &smaller[&h];
            let small = g0.expand_in_std(&[g0.index_of(&i0)?, g0.index_of(&j0)?])?;
            let mut extended = StdExpansion::new();
            for (key, c) in small.terms() {
                let lifted = key
                    .iter()
                    .map(|&x| {
                        let mut t: Vec<u32> = g0.tuple(x).iter().chain(&s).copied().collect();
                        t.sort_unstable();
                        g.index_of(&t)
                    })
                    .collect::<Result<Vec<_>>>()?;
                extended.add_term(lifted, c);
            }
            let full = g.expand_in_std(&[i, j])?;
            report.checked += 1;
            if full != extended {
                report.fail(format!(
                    "[{}][{}]: direct {} vs extended {}",
                    tuple_label(ti),
                    tuple_label(tj),
                    describe(g, &full),
                    describe(g, &extended)
                ));
            }
        }
    }
    Ok(report)
}

fn describe(g: &Grassmannian, e: &StdExpansion) -> String {
    let parts: BTreeMap<String, String> = e
        .terms()
        .iter()
        .map(|(k, c)| (g.monomial_label(k), c.to_string()))
        .collect();
    format!("{parts:?}")
}

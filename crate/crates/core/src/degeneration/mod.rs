//! The weight filtration on a quantum Grassmannian and its associated
//! graded toric algebra.
//!
//! Each element gets weight `wt(π) = M + 1 − ω(π)`. `F_w` is spanned by
//! standard monomials of total weight at most `w`. The leading parts of the
//! straightening and commutation relations give the parameters `(q, c)` of
//! a quantum toric algebra.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{Grassmannian, StdExpansion, StraighteningTable};
use crate::lattice::{ChainProductRealization, FiniteLattice};
use crate::linalg::EchelonBasis;
use crate::qmatrix::Monomial;
use crate::report::CheckReport;
use crate::scalars::QScalar;
use crate::toric::{confluence_certify, ToricPresentation};

/// Element weights `wt(π) = M + 1 − ω(π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFiltration {
    max_omega: u128,
    weights: Vec<u128>,
}

impl WeightFiltration {
    pub fn new(lattice: &FiniteLattice, realization: &ChainProductRealization) -> Result<Self> {
        let weights: Vec<u128> = (0..lattice.len()).map(|x| realization.weight(x)).collect();
        for a in 0..lattice.len() {
            if weights[a] == 0 {
                return Err(Error::InvariantViolation {
                    pair: lattice.label(a).to_string(),
                    reason: "weight is not positive".into(),
                });
            }
            for b in 0..lattice.len() {
                if lattice.lt(a, b) && weights[a] <= weights[b] {
                    return Err(Error::InvariantViolation {
                        pair: format!("({}, {})", lattice.label(a), lattice.label(b)),
                        reason: "weight is not strictly order-reversing".into(),
                    });
                }
            }
        }
        Ok(WeightFiltration {
            max_omega: realization.max_omega(),
            weights,
        })
    }

    pub fn max_omega(&self) -> u128 {
        self.max_omega
    }

    pub fn weight(&self, x: usize) -> u128 {
        self.weights[x]
    }

    pub fn weights(&self) -> &[u128] {
        &self.weights
    }

    pub fn monomial_weight(&self, xs: &[usize]) -> u128 {
        xs.iter().map(|&x| self.weights[x]).sum()
    }

    /// Number of standard monomials of each total weight in one degree.
    pub fn census(&self, lattice: &FiniteLattice, degree: usize) -> BTreeMap<u128, usize> {
        let mut out = BTreeMap::new();
        for chain in lattice.multichains(degree) {
            *out.entry(self.monomial_weight(&chain)).or_insert(0) += 1;
        }
        out
    }
}

/// Leading parameters of a straightening table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedExtraction {
    lattice: FiniteLattice,
    realization: ChainProductRealization,
    pub qmap: BTreeMap<(usize, usize), QScalar>,
    pub cmap: BTreeMap<(usize, usize), QScalar>,
    /// Smallest gap `wt(I) + wt(J) − wt(term)` over the lower-order terms
    /// of the relations for `(I, J)`; absent when there are none.
    pub margins: BTreeMap<(usize, usize), u128>,
}

impl GradedExtraction {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn presentation(&self) -> Result<ToricPresentation> {
        let n = self.lattice.len();
        let mut q = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                q.push(self.qmap[&(a, b)].clone());
            }
        }
        let p = ToricPresentation::new(
            self.lattice.clone(),
            self.realization.clone(),
            q,
            self.cmap.clone(),
        )?;
        p.check_consistency()?;
        Ok(p)
    }

    pub fn specialize(&self, t: &num_rational::BigRational) -> Result<Self> {
        let spec =
            |m: &BTreeMap<(usize, usize), QScalar>| -> Result<BTreeMap<(usize, usize), QScalar>> {
                m.iter()
                    .map(|(k, v)| Ok((*k, v.specialize_scalar(t)?)))
                    .collect()
            };
        Ok(GradedExtraction {
            lattice: self.lattice.clone(),
            realization: self.realization.clone(),
            qmap: spec(&self.qmap)?,
            cmap: spec(&self.cmap)?,
            margins: self.margins.clone(),
        })
    }
}

fn check_lower_terms(
    w: &WeightFiltration,
    table: &StraighteningTable,
    pair: (usize, usize),
    relation: &str,
    terms: &StdExpansion,
    margins: &mut BTreeMap<(usize, usize), u128>,
) -> Result<()> {
    let top = w.weight(pair.0) + w.weight(pair.1);
    for key in terms.terms().keys() {
        let wt = w.monomial_weight(key);
        if wt >= top {
            return Err(Error::WeightViolation {
                relation: format!("{relation} {}", table.key_label(&[pair.0, pair.1])),
                term: table.key_label(key),
            });
        }
        let gap = margins.entry(pair).or_insert(u128::MAX);
        *gap = (*gap).min(top - wt);
    }
    Ok(())
}

/// Reads off `q_{IJ}` and `c_{IJ}` from the leading terms and certifies
/// that every other term has strictly smaller weight.
pub fn extract_graded(table: &StraighteningTable) -> Result<GradedExtraction> {
    table.certify()?;
    let l = table.lattice();
    let w = WeightFiltration::new(l, table.realization())?;
    let n = l.len();
    let mut cmap = BTreeMap::new();
    let mut margins = BTreeMap::new();
    for (&(i, j), e) in &table.straightening {
        let lead_key = [l.meet(i, j), l.join(i, j)];
        if w.monomial_weight(&lead_key) != w.weight(i) + w.weight(j) {
            return Err(Error::WeightViolation {
                relation: format!("straightening {}", table.key_label(&[i, j])),
                term: table.key_label(&lead_key),
            });
        }
        cmap.insert((i, j), e.coeff(&lead_key));
        check_lower_terms(
            &w,
            table,
            (i, j),
            "straightening",
            &e.without(&lead_key),
            &mut margins,
        )?;
    }
    let mut qmap = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let c = &table.commutation[&(i, j)];
            let q = if l.comparable(i, j) {
                c.qpow.clone()
            } else {
                let ratio = cmap[&(i, j)].div(&cmap[&(j, i)])?;
                if ratio != c.qpow {
                    return Err(Error::InvariantViolation {
                        pair: table.key_label(&[i, j]),
                        reason: format!(
                            "leader ratio {ratio} differs from commutation scalar {}",
                            c.qpow
                        ),
                    });
                }
                ratio
            };
            qmap.insert((i, j), q);
            check_lower_terms(&w, table, (i, j), "commutation", &c.tail, &mut margins)?;
        }
    }
    Ok(GradedExtraction {
        lattice: l.clone(),
        realization: table.realization().clone(),
        qmap,
        cmap,
        margins,
    })
}

/// One row of the filtered dimension table: the graded piece of degree `d`
/// and weight `w` measured in the algebra and counted among standard
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub degree: usize,
    pub weight: u128,
    pub filtered: usize,
    pub census: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationReport {
    pub m: usize,
    pub n: usize,
    pub max_degree: usize,
    pub weights: Vec<u128>,
    pub filtration: CheckReport,
    pub dimensions: Vec<DimensionRow>,
    pub confluence: CheckReport,
    pub failures: Vec<String>,
}

impl DegenerationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
            && self.filtration.is_ok()
            && self.confluence.is_ok()
            && self.dimensions.iter().all(|r| r.filtered == r.census)
    }
}

const EXHAUSTIVE_WORDS: usize = 2000;
const SAMPLED_WORDS: usize = 500;

fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
    (0..n.pow(len as u32))
        .map(|code| {
            (0..len)
                .map(|k| code / n.pow((len - 1 - k) as u32) % n)
                .collect()
        })
        .collect()
}

/// All words when there are few enough, otherwise a seeded sample.
fn words_of_length(n: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if n.checked_pow(len as u32)
        .is_some_and(|t| t <= EXHAUSTIVE_WORDS)
    {
        all_words(n, len)
    } else {
        (0..SAMPLED_WORDS)
            .map(|_| (0..len).map(|_| rng.gen_range(0..n)).collect())
            .collect()
    }
}

/// `dim F_w ∩ A_d − dim F_{w−1} ∩ A_d` for every weight `w`, from PBW
/// coordinates of all words of degree `d`.
fn filtered_dimensions(
    g: &Grassmannian,
    w: &WeightFiltration,
    degree: usize,
) -> BTreeMap<u128, usize> {
    let n = g.lattice().len();
    let mut blocks: BTreeMap<Vec<u32>, Vec<(u128, Vec<usize>)>> = BTreeMap::new();
    for word in all_words(n, degree) {
        blocks
            .entry(g.row_content(&word))
            .or_default()
            .push((w.monomial_weight(&word), word));
    }
    let mut gains: BTreeMap<u128, usize> = BTreeMap::new();
    for words in blocks.values_mut() {
        words.sort();
        let pbw: Vec<_> = words.iter().map(|(_, word)| g.product_pbw(word)).collect();
        let mut keys: Vec<&Monomial> = pbw.iter().flat_map(|p| p.terms().keys()).collect();
        keys.sort();
        keys.dedup();
        let mut echelon = EchelonBasis::<QScalar>::new(keys.len());
        for ((wt, _), p) in words.iter().zip(&pbw) {
            if echelon.insert(keys.iter().map(|k| p.coeff(k)).collect()) {
                *gains.entry(*wt).or_insert(0) += 1;
            }
        }
    }
    gains
}

/// Checks that products land in the expected filtration level, that each
/// graded piece has the dimension predicted by the standard monomials, and
/// that the extracted toric presentation is confluent.
pub fn verify_degeneration(
    g: &Grassmannian,
    max_degree: usize,
    seed: u64,
) -> Result<DegenerationReport> {
    let l = g.lattice();
    let w = WeightFiltration::new(l, g.realization())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    let mut filtration = CheckReport::default();
    for len in 1..=max_degree {
        for word in words_of_length(l.len(), len, &mut rng) {
            let bound = w.monomial_weight(&word);
            filtration.checked += 1;
            for key in g.expand_in_std(&word)?.terms().keys() {
                if w.monomial_weight(key) > bound {
                    filtration.fail(format!(
                        "{} has term {} above weight {bound}",
                        g.monomial_label(&word),
                        g.monomial_label(key)
                    ));
                }
            }
        }
    }

    let mut dimensions = vec![DimensionRow {
        degree: 0,
        weight: 0,
        filtered: 1,
        census: 1,
    }];
    for degree in 1..=max_degree {
        let census = w.census(l, degree);
        let filtered = filtered_dimensions(g, &w, degree);
        let weights: std::collections::BTreeSet<u128> =
            census.keys().chain(filtered.keys()).copied().collect();
        for weight in weights {
            dimensions.push(DimensionRow {
                degree,
                weight,
                filtered: filtered.get(&weight).copied().unwrap_or(0),
                census: census.get(&weight).copied().unwrap_or(0),
            });
        }
    }

    let confluence = match g
        .straightening_table()
        .and_then(|t| extract_graded(&t))
        .and_then(|e| e.presentation())
    {
        Ok(p) => confluence_certify(&p),
        Err(e) => {
            failures.push(e.to_string());
            CheckReport::default()
        }
    };

    Ok(DegenerationReport {
        m: g.m(),
        n: g.n(),
        max_degree,
        weights: w.weights().to_vec(),
        filtration,
        dimensions,
        confluence,
        failures,
    })
}

#[cfg(test)]
mod tests;

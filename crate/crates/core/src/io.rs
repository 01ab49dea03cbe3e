//! JSON formats for lattices, toric presentations and straightening tables.
//!
//! Scalars are written in the canonical text form of [`QScalar`] and lattice
//! elements by their labels, so every document is readable and diffable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{plucker_poset, Commutation, StdExpansion, StraighteningTable};
use crate::lattice::{ChainProductRealization, FiniteLattice, FinitePoset};
use crate::scalars::QScalar;
use crate::toric::ToricPresentation;

/// Largest lattice accepted from a document.
pub const MAX_LATTICE_SIZE: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainProductSpec {
    pub sizes: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrassmannianSpec {
    pub m: usize,
    pub n: usize,
}

/// One of three lattice descriptions:
/// `{"elements": [...], "covers": [[a, b], ...]}`,
/// `{"chain_product": {"sizes": [...]}, "members": [[...], ...]}` (all of
/// the product when `members` is absent), or
/// `{"grassmannian": {"m": m, "n": n}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_product: Option<ChainProductSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grassmannian: Option<GrassmannianSpec>,
}

impl LatticeSpec {
    pub fn grassmannian(m: usize, n: usize) -> Self {
        LatticeSpec {
            grassmannian: Some(GrassmannianSpec { m, n }),
            ..Default::default()
        }
    }

    /// Builds the lattice and a chain-product realization of it; a lattice
    /// given by covers gets its canonical realization.
    pub fn build(&self) -> Result<(FiniteLattice, ChainProductRealization)> {
        let (lattice, realization) = self.build_parts()?;
        let realization = match realization {
            Some(r) => r,
            None => lattice.canonical_realization()?,
        };
        Ok((lattice, realization))
    }

    /// Builds the lattice alone, without requiring distributivity.
    pub fn build_lattice(&self) -> Result<FiniteLattice> {
        Ok(self.build_parts()?.0)
    }

    fn build_parts(&self) -> Result<(FiniteLattice, Option<ChainProductRealization>)> {
        let size = match (&self.elements, &self.members, &self.grassmannian) {
            (Some(e), _, _) => e.len(),
            (_, Some(m), _) => m.len(),
            (_, _, Some(g)) if g.m <= g.n => {
                (1..=g.m).fold(1usize, |acc, k| acc.saturating_mul(g.n - g.m + k) / k)
            }
            _ => 0,
        };
        if size > MAX_LATTICE_SIZE {
            return Err(Error::Invalid(format!(
                "lattice of {size} elements exceeds {MAX_LATTICE_SIZE}"
            )));
        }
        match self {
            LatticeSpec {
                elements: Some(elements),
                covers,
                chain_product: None,
                members: None,
                grassmannian: None,
            } => {
                let index = |s: &str| {
                    elements
                        .iter()
                        .position(|e| e == s)
                        .ok_or_else(|| Error::UnknownElement(s.to_string()))
                };
                let pairs = covers
                    .iter()
                    .flatten()
                    .map(|(a, b)| Ok((index(a)?, index(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                let lattice = FiniteLattice::new(FinitePoset::from_covers(elements.clone(), &pairs)?)?;
                Ok((lattice, None))
            }
            LatticeSpec {
                elements: None,
                covers: None,
                chain_product: Some(cp),
                members,
                grassmannian: None,
            } => {
                let tuples = match members {
                    Some(ms) => ms.clone(),
                    None => all_tuples(&cp.sizes)?,
                };
                if tuples.is_empty() {
                    return Err(Error::Invalid("no members".into()));
                }
                let lattice = FiniteLattice::from_tuples(&tuples)?;
                let realization = ChainProductRealization::new(&lattice, cp.sizes.clone(), tuples)?;
                Ok((lattice, Some(realization)))
            }
            LatticeSpec {
                elements: None,
                covers: None,
                chain_product: None,
                members: None,
                grassmannian: Some(GrassmannianSpec { m, n }),
            } => {
                let (lattice, realization) = plucker_poset(*m, *n)?;
                Ok((lattice, Some(realization)))
            }
            _ => Err(Error::Invalid(
                "lattice needs exactly one of elements/covers, chain_product/members or grassmannian".into(),
            )),
        }
    }
}

fn all_tuples(sizes: &[u32]) -> Result<Vec<Vec<u32>>> {
    let total = sizes.iter().try_fold(1u64, |acc, &s| {
        acc.checked_mul(s as u64)
            .filter(|&t| t <= MAX_LATTICE_SIZE as u64)
    });
    if sizes.is_empty() || sizes.contains(&0) || total.is_none() {
        return Err(Error::Invalid(format!(
            "chain product sizes {sizes:?} are empty or too large"
        )));
    }
    let mut out = vec![vec![]];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| {
                (1..=s).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

pub fn parse_lattice_json(text: &str) -> Result<(FiniteLattice, ChainProductRealization)> {
    serde_json::from_str::<LatticeSpec>(text)?.build()
}

/// `{"lattice": ..., "q": [[a, b, s], ...], "c": [[a, b, s], ...]}`.
/// Missing entries are completed by [`ToricPresentation::from_partial`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub q: Vec<(String, String, QScalar)>,
    #[serde(default)]
    pub c: Vec<(String, String, QScalar)>,
}

impl PresentationSpec {
    pub fn build(&self) -> Result<ToricPresentation> {
        let (lattice, realization) = self.lattice.build()?;
        let table =
            |rows: &[(String, String, QScalar)]| -> Result<BTreeMap<(usize, usize), QScalar>> {
                let mut out = BTreeMap::new();
                for (a, b, s) in rows {
                    let key = (lattice.index_of(a)?, lattice.index_of(b)?);
                    if out.insert(key, s.clone()).is_some() {
                        return Err(Error::Invalid(format!("duplicate entry for ({a}, {b})")));
                    }
                }
                Ok(out)
            };
        let (q, c) = (table(&self.q)?, table(&self.c)?);
        ToricPresentation::from_partial(lattice, realization, &q, &c)
    }

    /// Full tables of a presentation, under the given lattice description.
    pub fn from_presentation(lattice: LatticeSpec, p: &ToricPresentation) -> Self {
        let l = p.lattice();
        let label = |x: usize| l.label(x).to_string();
        let mut q = Vec::new();
        for a in 0..l.len() {
            for b in 0..l.len() {
                q.push((label(a), label(b), p.q(a, b).clone()));
            }
        }
        let c = p
            .c_table()
            .iter()
            .map(|(&(a, b), s)| (label(a), label(b), s.clone()))
            .collect();
        PresentationSpec { lattice, q, c }
    }
}

pub fn parse_presentation_json(text: &str) -> Result<ToricPresentation> {
    serde_json::from_str::<PresentationSpec>(text)?.build()
}

/// `scalar · monomial` with the monomial given by labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto {
    pub monomial: Vec<String>,
    pub coeff: QScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StraighteningDto {
    pub pair: (String, String),
    pub terms: Vec<TermDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutationDto {
    pub pair: (String, String),
    pub qpow: QScalar,
    pub tail: Vec<TermDto>,
}

/// A straightening table in key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDto {
    pub lattice: LatticeSpec,
    pub straightening: Vec<StraighteningDto>,
    pub commutation: Vec<CommutationDto>,
}

impl TableDto {
    pub fn from_table(lattice: LatticeSpec, t: &StraighteningTable) -> Self {
        let l = t.lattice();
        let label = |x: usize| l.label(x).to_string();
        let terms = |e: &StdExpansion| {
            e.terms()
                .iter()
                .map(|(k, c)| TermDto {
                    monomial: k.iter().map(|&x| label(x)).collect(),
                    coeff: c.clone(),
                })
                .collect()
        };
        TableDto {
            lattice,
            straightening: t
                .straightening
                .iter()
                .map(|(&(a, b), e)| StraighteningDto {
                    pair: (label(a), label(b)),
                    terms: terms(e),
                })
                .collect(),
            commutation: t
                .commutation
                .iter()
                .map(|(&(a, b), c)| CommutationDto {
                    pair: (label(a), label(b)),
                    qpow: c.qpow.clone(),
                    tail: terms(&c.tail),
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<StraighteningTable> {
        let (lattice, realization) = self.lattice.build()?;
        let pair = |(a, b): &(String, String)| -> Result<(usize, usize)> {
            Ok((lattice.index_of(a)?, lattice.index_of(b)?))
        };
        let expansion = |terms: &[TermDto]| -> Result<StdExpansion> {
            let mut e = StdExpansion::new();
            for t in terms {
                let key = t
                    .monomial
                    .iter()
                    .map(|s| lattice.index_of(s))
                    .collect::<Result<Vec<_>>>()?;
                e.add_term(key, &t.coeff);
            }
            Ok(e)
        };
        let mut straightening = BTreeMap::new();
        for s in &self.straightening {
            straightening.insert(pair(&s.pair)?, expansion(&s.terms)?);
        }
        let mut commutation = BTreeMap::new();
        for c in &self.commutation {
            commutation.insert(
                pair(&c.pair)?,
                Commutation {
                    qpow: c.qpow.clone(),
                    tail: expansion(&c.tail)?,
                },
            );
        }
        Ok(StraighteningTable::from_parts(
            lattice,
            realization,
            straightening,
            commutation,
        ))
    }
}

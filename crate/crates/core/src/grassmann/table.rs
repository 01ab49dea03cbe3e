//! Straightening and commutation tables.

use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{Grassmannian, StdExpansion};
use crate::error::{Error, Result};
use crate::lattice::{content, content_union, ChainProductRealization, FiniteLattice};
use crate::scalars::QScalar;

type Expansions = ((usize, usize), StdExpansion);

/// `[I][J] - qpow [J][I] = tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutation {
    pub qpow: QScalar,
    pub tail: StdExpansion,
}

/// Straightening relations for incomparable ordered pairs and commutation
/// relations for all ordered pairs, keyed by element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningTable {
    lattice: FiniteLattice,
    realization: ChainProductRealization,
    pub straightening: BTreeMap<(usize, usize), StdExpansion>,
    pub commutation: BTreeMap<(usize, usize), Commutation>,
}

impl StraighteningTable {
    pub fn from_parts(
        lattice: FiniteLattice,
        realization: ChainProductRealization,
        straightening: BTreeMap<(usize, usize), StdExpansion>,
        commutation: BTreeMap<(usize, usize), Commutation>,
    ) -> Self {
        StraighteningTable {
            lattice,
            realization,
            straightening,
            commutation,
        }
    }

    /// Builds the table from the expansions of all non-standard ordered
    /// products `[I][J]`, `I ≰ J`.
    pub fn from_expansions(
        lattice: FiniteLattice,
        realization: ChainProductRealization,
        expansions: &BTreeMap<(usize, usize), StdExpansion>,
    ) -> Result<Self> {
        let n = lattice.len();
        let mut straightening = BTreeMap::new();
        let mut commutation = BTreeMap::new();
        let pair_label =
            |a: usize, b: usize| format!("({}, {})", lattice.label(a), lattice.label(b));
        let get = |a: usize, b: usize| {
            expansions
                .get(&(a, b))
                .ok_or_else(|| Error::InvariantViolation {
                    pair: pair_label(a, b),
                    reason: "missing expansion".into(),
                })
        };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    commutation.insert(
                        (i, j),
                        Commutation {
                            qpow: QScalar::one(),
                            tail: StdExpansion::new(),
                        },
                    );
                } else if lattice.lt(i, j) {
                    // [J][I] = a [I][J] + rest, so [I][J] - a^-1 [J][I] = -a^-1 rest
                    let e = get(j, i)?;
                    let a = e.coeff(&[i, j]);
                    let inv = a.inv().map_err(|_| Error::InvariantViolation {
                        pair: pair_label(i, j),
                        reason: "standard term missing from the reversed product".into(),
                    })?;
                    let tail = e.without(&[i, j]).scale(&inv.neg());
                    commutation.insert((i, j), Commutation { qpow: inv, tail });
                } else if lattice.lt(j, i) {
                    let e = get(i, j)?;
                    let b = e.coeff(&[j, i]);
                    let tail = e.without(&[j, i]);
                    commutation.insert((i, j), Commutation { qpow: b, tail });
                } else {
                    let (lo, hi) = (lattice.meet(i, j), lattice.join(i, j));
                    let eij = get(i, j)?;
                    let eji = get(j, i)?;
                    let cij = eij.coeff(&[lo, hi]);
                    let cji = eji.coeff(&[lo, hi]);
                    let ratio = cij.div(&cji).map_err(|_| Error::InvariantViolation {
                        pair: pair_label(j, i),
                        reason: "meet-join coefficient vanishes".into(),
                    })?;
                    let tail = eij
                        .without(&[lo, hi])
                        .sub(&eji.without(&[lo, hi]).scale(&ratio));
                    straightening.insert((i, j), eij.clone());
                    commutation.insert((i, j), Commutation { qpow: ratio, tail });
                }
            }
        }
        Ok(StraighteningTable {
            lattice,
            realization,
            straightening,
            commutation,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn realization(&self) -> &ChainProductRealization {
        &self.realization
    }

    fn pair_label(&self, a: usize, b: usize) -> String {
        format!("({}, {})", self.lattice.label(a), self.lattice.label(b))
    }

    /// Checks a relation's terms: standard, strictly between the pair
    /// (`K < I,J < L`) and content-preserving.
    fn check_terms(&self, i: usize, j: usize, e: &StdExpansion) -> Result<()> {
        let l = &self.lattice;
        let want = content_union(
            &self.realization.content_of(i),
            &self.realization.content_of(j),
        );
        for key in e.terms().keys() {
            let fail = |reason: &str| {
                Err(Error::InvariantViolation {
                    pair: self.pair_label(i, j),
                    reason: format!("{reason} at term {}", self.key_label(key)),
                })
            };
            let &[k, m] = key.as_slice() else {
                return fail("term of wrong degree");
            };
            if !l.leq(k, m) {
                return fail("non-standard term");
            }
            if !(l.lt(k, i) && l.lt(k, j) && l.lt(i, m) && l.lt(j, m)) {
                return fail("support law K < I,J < L fails");
            }
            let got = content_union(
                &content(self.realization.iota(k)),
                &content(self.realization.iota(m)),
            );
            if got != want {
                return fail("content law fails");
            }
        }
        Ok(())
    }

    pub fn key_label(&self, key: &[usize]) -> String {
        key.iter()
            .map(|&x| format!("[{}]", self.lattice.label(x)))
            .collect()
    }

    /// Certifies the straightening and commutation invariants, including
    /// the `+q^e` meet-join leading coefficient.
    pub fn certify(&self) -> Result<()> {
        let l = &self.lattice;
        let n = l.len();
        for i in 0..n {
            for j in 0..n {
                let violation = |reason: String| {
                    Err(Error::InvariantViolation {
                        pair: self.pair_label(i, j),
                        reason,
                    })
                };
                if !l.comparable(i, j) {
                    let Some(e) = self.straightening.get(&(i, j)) else {
                        return violation("missing straightening relation".into());
                    };
                    self.check_terms(i, j, e)?;
                    let lead = e.coeff(&[l.meet(i, j), l.join(i, j)]);
                    match lead.as_pure_q_power() {
                        Some((1, _)) => {}
                        _ => return violation(format!("leading coefficient {lead} is not +q^e")),
                    }
                } else if self.straightening.contains_key(&(i, j)) {
                    return violation("straightening entry for a comparable pair".into());
                }
                let Some(c) = self.commutation.get(&(i, j)) else {
                    return violation("missing commutation relation".into());
                };
                if c.qpow.as_pure_q_power().is_none() {
                    return violation(format!("commutation scalar {} is not a pure power", c.qpow));
                }
                if i == j {
                    if !c.tail.is_zero() || !c.qpow.is_one() {
                        return violation("diagonal commutation must be trivial".into());
                    }
                    continue;
                }
                self.check_terms(i, j, &c.tail)?;
                if !c.tail.coeff(&[l.meet(i, j), l.join(i, j)]).is_zero() {
                    return violation("commutation tail has a meet-join term".into());
                }
            }
        }
        Ok(())
    }

    /// All coefficients specialized at `q = t`.
    pub fn specialize(&self, t: &BigRational) -> Result<Self> {
        let straightening = self
            .straightening
            .iter()
            .map(|(k, e)| Ok((*k, e.specialize_scalar(t)?)))
            .collect::<Result<_>>()?;
        let commutation = self
            .commutation
            .iter()
            .map(|(k, c)| {
                Ok((
                    *k,
                    Commutation {
                        qpow: c.qpow.specialize_scalar(t)?,
                        tail: c.tail.specialize_scalar(t)?,
                    },
                ))
            })
            .collect::<Result<_>>()?;
        Ok(StraighteningTable {
            lattice: self.lattice.clone(),
            realization: self.realization.clone(),
            straightening,
            commutation,
        })
    }

    /// The exponent `e` of the `+q^e` leading coefficient of a straightening.
    pub fn leading_exponent(&self, i: usize, j: usize) -> Option<i64> {
        let e = self.straightening.get(&(i, j))?;
        let lead = e.coeff(&[self.lattice.meet(i, j), self.lattice.join(i, j)]);
        lead.as_pure_q_power().map(|(_, e)| e)
    }
}

impl Grassmannian {
    /// Expansions of all ordered products `[I][J]` with `I ≰ J`, computed
    /// on worker threads and assembled in key order.
    pub fn nonstandard_expansions(&self) -> Result<BTreeMap<(usize, usize), StdExpansion>> {
        let n = self.lattice().len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.lattice().leq(i, j))
            .collect();
        let workers = std::thread::available_parallelism()
            .map_or(1, |p| p.get())
            .min(8);
        let chunk = pairs.len().div_ceil(workers).max(1);
        let results: Vec<Result<Vec<Expansions>>> = std::thread::scope(|s| {
            let handles: Vec<_> = pairs
                .chunks(chunk)
                .map(|part| {
                    s.spawn(move || {
                        part.iter()
                            .map(|&(i, j)| Ok(((i, j), self.expand_in_std(&[i, j])?)))
                            .collect::<Result<Vec<_>>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut out = BTreeMap::new();
        for r in results {
            out.extend(r?);
        }
        Ok(out)
    }

    /// The certified straightening table of `O_q(G_{m,n})`.
    pub fn straightening_table(&self) -> Result<StraighteningTable> {
        let expansions = self.nonstandard_expansions()?;
        let table = StraighteningTable::from_expansions(
            self.lattice().clone(),
            self.realization().clone(),
            &expansions,
        )?;
        table.certify()?;
        Ok(table)
    }
}

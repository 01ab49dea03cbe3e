//! Realizations of a lattice inside a product of chains, the N-adic
//! encoding ω and the weight function built from it.

use std::collections::BTreeMap;

use super::FiniteLattice;
use crate::error::{Error, Result};

/// Multiset of tuple entries: value ↦ multiplicity.
pub type MultisetContent = BTreeMap<u32, u32>;

pub fn content(tuple: &[u32]) -> MultisetContent {
    let mut out = MultisetContent::new();
    for &v in tuple {
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

pub fn content_union(a: &MultisetContent, b: &MultisetContent) -> MultisetContent {
    let mut out = a.clone();
    for (&v, &k) in b {
        *out.entry(v).or_insert(0) += k;
    }
    out
}

/// `Σ_t i_t N^{d-t}`, or `None` on overflow.
pub fn chain_product_omega(tuple: &[u32], base: u128) -> Option<u128> {
    tuple.iter().try_fold(0u128, |acc, &i| {
        acc.checked_mul(base)?.checked_add(u128::from(i))
    })
}

/// `M + 1 - ω`.
pub fn weight(max_omega: u128, omega: u128) -> u128 {
    max_omega + 1 - omega
}

/// Outcome of an implication on one quadruple: `None` when the premise
/// does not apply, otherwise whether the conclusion holds.
pub type ImplicationOutcome = Option<bool>;

fn tuple_leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn is_increasing(t: &[u32]) -> bool {
    t.windows(2).all(|w| w[0] <= w[1])
}

fn same_content(i: &[u32], j: &[u32], k: &[u32], l: &[u32]) -> bool {
    content_union(&content(k), &content(l)) == content_union(&content(i), &content(j))
}

/// For increasing `K ≤ I ≤ J ≤ L` with `K ⊔ L = I ⊔ J`: whenever `J` and
/// `L` agree before position `s`, `I` and `K` agree up to `s`.
pub fn leading_agreement(i: &[u32], j: &[u32], k: &[u32], l: &[u32]) -> ImplicationOutcome {
    let all = [i, j, k, l];
    if !all.iter().all(|t| is_increasing(t) && t.len() == i.len())
        || !(tuple_leq(k, i) && tuple_leq(i, j) && tuple_leq(j, l))
        || !same_content(i, j, k, l)
    {
        return None;
    }
    Some((1..=i.len()).all(|s| j[..s - 1] != l[..s - 1] || i[..s] == k[..s]))
}

/// For increasing `K < I, J < L` with `K ⊔ L = I ⊔ J`:
/// `ω(I) + ω(J) ≤ ω(K) + ω(L)`, with equality exactly when `K = I ∧ J`
/// and `L = I ∨ J`.
pub fn omega_inequality(
    i: &[u32],
    j: &[u32],
    k: &[u32],
    l: &[u32],
    base: u128,
) -> ImplicationOutcome {
    let all = [i, j, k, l];
    let lt = |a: &[u32], b: &[u32]| a != b && tuple_leq(a, b);
    if !all.iter().all(|t| is_increasing(t) && t.len() == i.len())
        || !(lt(k, i) && lt(k, j) && lt(i, l) && lt(j, l))
        || !same_content(i, j, k, l)
    {
        return None;
    }
    let om = |t: &[u32]| chain_product_omega(t, base).expect("small tuples");
    let (lhs, rhs) = (om(i) + om(j), om(k) + om(l));
    let meet: Vec<u32> = i.iter().zip(j).map(|(a, b)| *a.min(b)).collect();
    let join: Vec<u32> = i.iter().zip(j).map(|(a, b)| *a.max(b)).collect();
    let extremal = k == meet.as_slice() && l == join.as_slice();
    Some(lhs <= rhs && ((lhs == rhs) == extremal))
}

/// An injective lattice morphism into `C_{n_1} × ... × C_{n_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainProductRealization {
    sizes: Vec<u32>,
    iota: Vec<Vec<u32>>,
    base: u128,
    increasing_images: bool,
    omega: Vec<u128>,
    max_omega: u128,
}

impl ChainProductRealization {
    /// Validates `iota` against `lattice` and precomputes ω.
    pub fn new(lattice: &FiniteLattice, sizes: Vec<u32>, iota: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |m: String| Err(Error::BadRealization(m));
        if sizes.is_empty() {
            return bad("d must be positive".into());
        }
        if sizes.iter().any(|&s| s < 2) {
            return bad("every chain needs at least 2 elements".into());
        }
        if iota.len() != lattice.len() {
            return bad(format!(
                "{} images for {} elements",
                iota.len(),
                lattice.len()
            ));
        }
        for (x, t) in iota.iter().enumerate() {
            if t.len() != sizes.len() {
                return bad(format!("image of {} has wrong length", lattice.label(x)));
            }
            if t.iter().zip(&sizes).any(|(&i, &n)| i < 1 || i > n) {
                return bad(format!("image of {} is out of range", lattice.label(x)));
            }
        }
        for a in 0..iota.len() {
            for b in 0..iota.len() {
                if a != b && iota[a] == iota[b] {
                    return bad("iota is not injective".into());
                }
                let min: Vec<u32> = iota[a]
                    .iter()
                    .zip(&iota[b])
                    .map(|(x, y)| *x.min(y))
                    .collect();
                let max: Vec<u32> = iota[a]
                    .iter()
                    .zip(&iota[b])
                    .map(|(x, y)| *x.max(y))
                    .collect();
                if iota[lattice.meet(a, b)] != min || iota[lattice.join(a, b)] != max {
                    return bad(format!(
                        "iota is not a lattice morphism at ({}, {})",
                        lattice.label(a),
                        lattice.label(b)
                    ));
                }
            }
        }
        let base = 2 * u128::from(*sizes.iter().max().unwrap()) + 1;
        let omega = iota
            .iter()
            .map(|t| chain_product_omega(t, base))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Overflow("ω does not fit in 128 bits".into()))?;
        let max_omega = *omega.iter().max().unwrap();
        let increasing_images = iota.iter().all(|t| t.windows(2).all(|w| w[0] <= w[1]));
        Ok(ChainProductRealization {
            sizes,
            iota,
            base,
            increasing_images,
            omega,
            max_omega,
        })
    }

    pub fn d(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn iota(&self, x: usize) -> &[u32] {
        &self.iota[x]
    }

    /// `N = 2 max(n_t) + 1`.
    pub fn base(&self) -> u128 {
        self.base
    }

    pub fn increasing_images(&self) -> bool {
        self.increasing_images
    }

    pub fn omega(&self, x: usize) -> u128 {
        self.omega[x]
    }

    /// `M = max ω`.
    pub fn max_omega(&self) -> u128 {
        self.max_omega
    }

    pub fn weight(&self, x: usize) -> u128 {
        weight(self.max_omega, self.omega[x])
    }

    /// Weight of a monomial: sum of member weights, 0 for the empty one.
    pub fn monomial_weight(&self, members: &[usize]) -> u128 {
        members.iter().map(|&x| self.weight(x)).sum()
    }

    pub fn content_of(&self, x: usize) -> MultisetContent {
        content(&self.iota[x])
    }
}

//! Finite posets and distributive lattices.
//!
//! Elements are dense indices `0..len` carrying display labels. The order is
//! stored as a full boolean table, meets and joins as lookup tables. All the
//! lattices handled here are small (at most a few hundred elements), so the
//! constructions favour exhaustive, easily checked algorithms.

mod realization;

use crate::error::{Error, Result};

pub use realization::{
    chain_product_omega, content, content_union, leading_agreement, omega_inequality, weight,
    ChainProductRealization, ImplicationOutcome, MultisetContent,
};

/// A finite partially ordered set given by its full relation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset from an arbitrary relation predicate, checking the
    /// partial order axioms exhaustively.
    pub fn from_leq_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = leq(a, b);
            }
        }
        let poset = FinitePoset { labels, leq: table };
        poset.validate()?;
        Ok(poset)
    }

    /// Builds a poset from cover pairs `(a, b)` meaning `a < b`; the order is
    /// the reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![false; n * n];
        for a in 0..n {
            table[a * n + a] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::NotAPoset(format!("cover ({a}, {b}) out of range")));
            }
            table[a * n + b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if table[a * n + k] {
                    for b in 0..n {
                        if table[k * n + b] {
                            table[a * n + b] = true;
                        }
                    }
                }
            }
        }
        let poset = FinitePoset { labels, leq: table };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::NotAPoset(format!("duplicate label {l:?}")));
            }
        }
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::NotAPoset(format!(
                    "{} is not reflexive",
                    self.labels[a]
                )));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(Error::NotAPoset(format!(
                        "{} and {} violate antisymmetry",
                        self.labels[a], self.labels[b]
                    )));
                }
                if self.leq(a, b) {
                    for c in 0..n {
                        if self.leq(b, c) && !self.leq(a, c) {
                            return Err(Error::NotAPoset(format!(
                                "transitivity fails on {}, {}, {}",
                                self.labels[a], self.labels[b], self.labels[c]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Pairs `(a, b)` with `a` covered by `b`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// A linear extension: repeatedly take the smallest-index element all of
    /// whose strict lower bounds are already placed.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&x| !placed[x] && (0..n).all(|y| placed[y] || !self.lt(y, x)))
                .expect("partial orders are acyclic");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Length of the longest strictly increasing chain ending at each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.len()];
        for x in self.linear_extension() {
            rank[x] = (0..self.len())
                .filter(|&y| self.lt(y, x))
                .map(|y| rank[y] + 1)
                .max()
                .unwrap_or(0);
        }
        rank
    }
}

/// A finite lattice with precomputed meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    distributive: bool,
}

impl FiniteLattice {
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::NotALattice("empty poset".into()));
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n)
                    .filter(|&z| poset.leq(z, a) && poset.leq(z, b))
                    .collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&z| lower.iter().all(|&w| poset.leq(w, z)))
                    .ok_or_else(|| {
                        Error::NotALattice(format!(
                            "{} and {} have no meet",
                            poset.label(a),
                            poset.label(b)
                        ))
                    })?;
                let upper: Vec<usize> = (0..n)
                    .filter(|&z| poset.leq(a, z) && poset.leq(b, z))
                    .collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&z| upper.iter().all(|&w| poset.leq(z, w)))
                    .ok_or_else(|| {
                        Error::NotALattice(format!(
                            "{} and {} have no join",
                            poset.label(a),
                            poset.label(b)
                        ))
                    })?;
                meet[a * n + b] = glb;
                join[a * n + b] = lub;
            }
        }
        let bottom = (0..n).find(|&x| (0..n).all(|y| poset.leq(x, y))).unwrap();
        let top = (0..n).find(|&x| (0..n).all(|y| poset.leq(y, x))).unwrap();
        let mut lattice = FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
            distributive: false,
        };
        lattice.distributive = lattice.distributivity_witness().is_none();
        Ok(lattice)
    }

    /// The sublattice of Z^d spanned by the given tuples under the
    /// componentwise order; the tuples must be closed under componentwise
    /// min and max.
    pub fn from_tuples(tuples: &[Vec<u32>]) -> Result<Self> {
        let labels: Vec<String> = tuples.iter().map(|t| tuple_label(t)).collect();
        if let Some(d) = tuples.first().map(Vec::len) {
            if tuples.iter().any(|t| t.len() != d) {
                return Err(Error::Invalid("tuples of different lengths".into()));
            }
        }
        let poset = FinitePoset::from_leq_fn(labels, |a, b| {
            tuples[a].iter().zip(&tuples[b]).all(|(x, y)| x <= y)
        })?;
        let lattice = FiniteLattice::new(poset)?;
        for a in 0..tuples.len() {
            for b in 0..tuples.len() {
                let min: Vec<u32> = tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .map(|(x, y)| *x.min(y))
                    .collect();
                let max: Vec<u32> = tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .map(|(x, y)| *x.max(y))
                    .collect();
                if tuples[lattice.meet(a, b)] != min || tuples[lattice.join(a, b)] != max {
                    return Err(Error::NotALattice(format!(
                        "members are not closed under componentwise min/max at {} and {}",
                        lattice.label(a),
                        lattice.label(b)
                    )));
                }
            }
        }
        Ok(lattice)
    }

    /// The chain `1 < 2 < ... < p`.
    pub fn chain(p: usize) -> Result<Self> {
        let labels = (1..=p).map(|k| k.to_string()).collect();
        Self::new(FinitePoset::from_leq_fn(labels, |a, b| a <= b)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.poset.comparable(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, a: usize) -> &str {
        self.poset.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.poset
            .index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive
    }

    /// A triple `(x, y, z)` with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn require_distributive(&self) -> Result<()> {
        match self.distributivity_witness() {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::NotDistributive(format!(
                "x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z) at ({}, {}, {})",
                self.label(x),
                self.label(y),
                self.label(z)
            ))),
        }
    }

    /// Rank of each element: length of the longest strict chain below it.
    pub fn ranks(&self) -> Vec<usize> {
        self.poset.ranks()
    }

    pub fn rank(&self) -> usize {
        self.ranks().into_iter().max().unwrap_or(0)
    }

    pub fn linear_extension(&self) -> Vec<usize> {
        self.poset.linear_extension()
    }

    /// Join-irreducible elements, and the same set with the minimum added.
    /// Both are listed in the fixed linear extension order.
    pub fn join_irreducibles(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let is_irr = |z: usize| {
            z != self.bottom
                && (0..n).all(|x| (0..n).all(|y| self.join(x, y) != z || x == z || y == z))
        };
        let order = self.linear_extension();
        let irr: Vec<usize> = order.iter().copied().filter(|&z| is_irr(z)).collect();
        let irr_plus: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&z| z == self.bottom || is_irr(z))
            .collect();
        (irr, irr_plus)
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.lt(y, x) && !(0..self.len()).any(|z| self.lt(y, z) && self.lt(z, x)))
            .collect()
    }

    /// Ordered pairs of incomparable elements, lexicographic.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.comparable(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Certifies Birkhoff's representation: `x ↦ {p ∈ irr : p ≤ x}` is a
    /// lattice isomorphism onto the down-sets of `irr`, and the rank equals
    /// the number of join-irreducibles.
    pub fn birkhoff_check(&self) -> Result<BirkhoffMap> {
        self.require_distributive()?;
        let (irr, _) = self.join_irreducibles();
        let n = self.len();
        let images: Vec<Vec<usize>> = (0..n)
            .map(|x| irr.iter().copied().filter(|&p| self.leq(p, x)).collect())
            .collect();
        let fail = |msg: String| {
            Err(Error::InvariantViolation {
                pair: "birkhoff".into(),
                reason: msg,
            })
        };
        for (x, img) in images.iter().enumerate() {
            for &p in img {
                for &r in &irr {
                    if self.leq(r, p) && !img.contains(&r) {
                        return fail(format!("image of {} is not a down-set", self.label(x)));
                    }
                }
            }
        }
        let mut distinct = images.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != n {
            return fail("map is not injective".into());
        }
        for a in 0..n {
            for b in 0..n {
                let inter: Vec<usize> = images[a]
                    .iter()
                    .copied()
                    .filter(|p| images[b].contains(p))
                    .collect();
                let mut union: Vec<usize> = images[a].iter().chain(&images[b]).copied().collect();
                union.sort_by_key(|p| irr.iter().position(|q| q == p));
                union.dedup();
                if images[self.meet(a, b)] != inter || images[self.join(a, b)] != union {
                    return fail(format!(
                        "meet/join not preserved at ({}, {})",
                        self.label(a),
                        self.label(b)
                    ));
                }
            }
        }
        let downsets = count_downsets(self, &irr, n + 1);
        if downsets != n {
            return fail(format!("{downsets} down-sets of irr but {n} elements"));
        }
        let rank = self.rank();
        if rank != irr.len() {
            return fail(format!("rank {rank} but {} join-irreducibles", irr.len()));
        }
        // rank via chains agrees with |{p ∈ irr : p ≤ x}| pointwise
        let ranks = self.ranks();
        for x in 0..n {
            if ranks[x] != images[x].len() {
                return fail(format!(
                    "rank of {} disagrees with its down-set",
                    self.label(x)
                ));
            }
        }
        Ok(BirkhoffMap {
            irreducibles: irr,
            images,
            rank,
        })
    }

    /// Realization in `C_2^{|irr|}` through Birkhoff indicator tuples.
    pub fn canonical_realization(&self) -> Result<ChainProductRealization> {
        self.require_distributive()?;
        let (irr, _) = self.join_irreducibles();
        if irr.is_empty() {
            return ChainProductRealization::new(self, vec![2], vec![vec![1]]);
        }
        let iota: Vec<Vec<u32>> = (0..self.len())
            .map(|x| {
                irr.iter()
                    .map(|&p| if self.leq(p, x) { 2 } else { 1 })
                    .collect()
            })
            .collect();
        ChainProductRealization::new(self, vec![2; irr.len()], iota)
    }

    /// The interval `[alpha, beta]` and its complement `Π_α ∪ Π^β`.
    pub fn interval_and_complement(&self, alpha: usize, beta: usize) -> Result<IntervalSplit> {
        if !self.leq(alpha, beta) {
            return Err(Error::NotComparable {
                alpha: self.label(alpha).to_string(),
                beta: self.label(beta).to_string(),
            });
        }
        let n = self.len();
        let interval: Vec<usize> = (0..n)
            .filter(|&g| self.leq(alpha, g) && self.leq(g, beta))
            .collect();
        let below: Vec<usize> = (0..n).filter(|&g| !self.leq(alpha, g)).collect();
        let above: Vec<usize> = (0..n).filter(|&g| !self.leq(g, beta)).collect();
        let complement: Vec<usize> = (0..n)
            .filter(|g| below.contains(g) || above.contains(g))
            .collect();
        let split = IntervalSplit {
            interval,
            lower_ideal: below,
            upper_ideal: above,
            complement,
        };
        for &w in &split.lower_ideal {
            if (0..n).any(|p| self.leq(p, w) && !split.lower_ideal.contains(&p)) {
                return Err(Error::InvariantViolation {
                    pair: format!("({}, {})", self.label(alpha), self.label(beta)),
                    reason: "lower part of the complement is not an ideal".into(),
                });
            }
        }
        for &w in &split.upper_ideal {
            if (0..n).any(|p| self.leq(w, p) && !split.upper_ideal.contains(&p)) {
                return Err(Error::InvariantViolation {
                    pair: format!("({}, {})", self.label(alpha), self.label(beta)),
                    reason: "upper part of the complement is not a dual ideal".into(),
                });
            }
        }
        Ok(split)
    }

    /// The induced lattice on a subset closed under meet and join.
    pub fn sublattice(&self, members: &[usize]) -> Result<FiniteLattice> {
        for &a in members {
            for &b in members {
                if !members.contains(&self.meet(a, b)) || !members.contains(&self.join(a, b)) {
                    return Err(Error::NotALattice(format!(
                        "subset not closed under meet/join at ({}, {})",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        let labels = members.iter().map(|&a| self.label(a).to_string()).collect();
        let poset = FinitePoset::from_leq_fn(labels, |a, b| self.leq(members[a], members[b]))?;
        FiniteLattice::new(poset)
    }

    /// All weakly increasing sequences `x_1 ≤ ... ≤ x_len` (multichains).
    pub fn multichains(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        self.extend_chains(len, &mut cur, &mut out);
        out
    }

    fn extend_chains(&self, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..self.len() {
            if cur.last().is_none_or(|&p| self.leq(p, x)) {
                cur.push(x);
                self.extend_chains(len, cur, out);
                cur.pop();
            }
        }
    }

    /// Number of multichains of each length `0..=max_len`, by the transfer
    /// matrix of the order relation.
    pub fn multichain_counts(&self, max_len: usize) -> Vec<num_bigint::BigUint> {
        use num_bigint::BigUint;
        use num_traits::{One, Zero};
        let n = self.len();
        let mut out = vec![BigUint::one()];
        let mut ending: Vec<BigUint> = vec![BigUint::one(); n];
        for len in 1..=max_len {
            if len > 1 {
                let next: Vec<BigUint> = (0..n)
                    .map(|y| {
                        (0..n)
                            .filter(|&x| self.leq(x, y))
                            .fold(BigUint::zero(), |acc, x| acc + &ending[x])
                    })
                    .collect();
                ending = next;
            }
            out.push(ending.iter().fold(BigUint::zero(), |acc, c| acc + c));
        }
        out
    }
}

/// Output of [`FiniteLattice::birkhoff_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffMap {
    /// Join-irreducibles in linear-extension order.
    pub irreducibles: Vec<usize>,
    /// For each element, the join-irreducibles below it.
    pub images: Vec<Vec<usize>>,
    pub rank: usize,
}

/// Output of [`FiniteLattice::interval_and_complement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSplit {
    pub interval: Vec<usize>,
    /// `Π_α`: elements not above `alpha`.
    pub lower_ideal: Vec<usize>,
    /// `Π^β`: elements not below `beta`.
    pub upper_ideal: Vec<usize>,
    pub complement: Vec<usize>,
}

/// Counts down-sets of the sub-poset `irr`, stopping once `cap` is reached.
fn count_downsets(lattice: &FiniteLattice, irr: &[usize], cap: usize) -> usize {
    fn go(
        lattice: &FiniteLattice,
        irr: &[usize],
        k: usize,
        chosen: &mut Vec<bool>,
        count: &mut usize,
        cap: usize,
    ) {
        if *count >= cap {
            return;
        }
        if k == irr.len() {
            *count += 1;
            return;
        }
        chosen.push(false);
        go(lattice, irr, k + 1, chosen, count, cap);
        chosen.pop();
        // irr is in linear-extension order, so lower elements were decided
        let allowed = (0..k).all(|j| !lattice.lt(irr[j], irr[k]) || chosen[j]);
        if allowed {
            chosen.push(true);
            go(lattice, irr, k + 1, chosen, count, cap);
            chosen.pop();
        }
    }
    let mut count = 0;
    go(lattice, irr, 0, &mut Vec::new(), &mut count, cap);
    count
}

/// Comma-joined tuple label, e.g. `1,3`.
pub fn tuple_label(t: &[u32]) -> String {
    t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Parses a comma-joined tuple label.
pub fn parse_tuple(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad tuple {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests;

use std::collections::{BTreeSet, HashMap};

use super::{apply_rule, rewrite, rule_at, ToricPresentation};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalars::QScalar;

type Outcomes = Vec<(QScalar, Vec<usize>)>;

/// Every normal form reachable from `word` under every order of rule
/// application.
fn reachable(
    p: &ToricPresentation,
    word: &[usize],
    memo: &mut HashMap<Vec<usize>, Outcomes>,
) -> Outcomes {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let l = p.lattice();
    let mut out: Outcomes = Vec::new();
    let mut any = false;
    for pos in 0..word.len().saturating_sub(1) {
        let Some(rule) = rule_at(l, word[pos], word[pos + 1]) else {
            continue;
        };
        any = true;
        let mut next = word.to_vec();
        apply_rule(l, &mut next, pos, rule);
        let s = p.rule_scalar(rule);
        for (c, m) in reachable(p, &next, memo) {
            let v = s.mul(&c);
            if !out.iter().any(|(c2, m2)| *c2 == v && *m2 == m) {
                out.push((v, m));
            }
        }
    }
    if !any {
        out.push((QScalar::one(), word.to_vec()));
    }
    memo.insert(word.to_vec(), out.clone());
    out
}

/// Checks parameter consistency, then explores every rewrite sequence of
/// every word of length at most 3 and requires a single outcome that agrees
/// with the strategy normal form.
pub fn confluence_certify(p: &ToricPresentation) -> CheckReport {
    let mut report = CheckReport::default();
    if let Err(e) = p.check_consistency() {
        report.fail(e.to_string());
    }
    let n = p.lattice().len();
    let mut memo = HashMap::new();
    for len in 2..=3u32 {
        for code in 0..n.pow(len) {
            let word: Vec<usize> = (0..len).map(|k| code / n.pow(len - 1 - k) % n).collect();
            report.checked += 1;
            let outcomes = reachable(p, &word, &mut memo);
            let label =
                |w: &[usize]| -> Vec<&str> { w.iter().map(|&x| p.lattice().label(x)).collect() };
            if outcomes.len() != 1 {
                let shown: Vec<String> = outcomes
                    .iter()
                    .map(|(c, m)| format!("({c}) {:?}", label(m)))
                    .collect();
                report.fail(format!(
                    "{:?} has {} normal forms: {}",
                    label(&word),
                    outcomes.len(),
                    shown.join(", ")
                ));
                continue;
            }
            match p.normal_form_unchecked(&word) {
                Ok(nf) if nf.scalar == outcomes[0].0 && nf.monomial == outcomes[0].1 => {}
                Ok(nf) => report.fail(format!("{:?}: strategy gives {nf}", label(&word))),
                Err(e) => report.fail(format!("{:?}: {e}", label(&word))),
            }
        }
    }
    report
}

/// Gelfand-Kirillov dimension `rank(Π) + 1`, cross-checked against the
/// number of join-irreducibles.
pub fn gkdim_toric(p: &ToricPresentation) -> Result<usize> {
    let l = p.lattice();
    l.require_distributive()?;
    let (irr, _) = l.join_irreducibles();
    if l.rank() != irr.len() {
        return Err(Error::InvariantViolation {
            pair: "rank".into(),
            reason: format!("rank {} but {} join-irreducibles", l.rank(), irr.len()),
        });
    }
    Ok(l.rank() + 1)
}

/// Left multiplication by each generator, read on standard monomials of
/// length at most `max_len`, must be injective.
pub fn regularity_check(p: &ToricPresentation, max_len: usize) -> Result<CheckReport> {
    let l = p.lattice();
    let mut report = CheckReport::default();
    let monomials: Vec<Vec<usize>> = (0..=max_len).flat_map(|k| l.multichains(k)).collect();
    for gamma in 0..l.len() {
        let mut seen = BTreeSet::new();
        for m in &monomials {
            let word: Vec<usize> = std::iter::once(gamma).chain(m.iter().copied()).collect();
            let image = rewrite(l, p.realization(), &word, |_| {})?;
            report.checked += 1;
            if !seen.insert(image.clone()) {
                report.fail(format!(
                    "left multiplication by {} collides on {:?}",
                    l.label(gamma),
                    image.iter().map(|&x| l.label(x)).collect::<Vec<_>>()
                ));
            }
        }
    }
    Ok(report)
}

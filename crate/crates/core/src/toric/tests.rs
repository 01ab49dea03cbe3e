use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::grassmann::plucker_poset;
use crate::lattice::FinitePoset;

fn diamond() -> (FiniteLattice, ChainProductRealization) {
    let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
    let l = FiniteLattice::new(
        FinitePoset::from_covers(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
    )
    .unwrap();
    let r = l.canonical_realization().unwrap();
    (l, r)
}

fn cube() -> (FiniteLattice, ChainProductRealization) {
    let tuples: Vec<Vec<u32>> = (0..8u32)
        .map(|k| vec![1 + (k & 1), 1 + (k >> 1 & 1), 1 + (k >> 2)])
        .collect();
    let l = FiniteLattice::from_tuples(&tuples).unwrap();
    let r = ChainProductRealization::new(&l, vec![2, 2, 2], tuples).unwrap();
    (l, r)
}

/// Commutative oracle: replace incomparable pairs by meet and join until
/// the multiset is a chain, then sort.
fn hibi(l: &FiniteLattice, word: &[usize]) -> Vec<usize> {
    let mut w = word.to_vec();
    'outer: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if !l.comparable(w[i], w[j]) {
                    let (a, b) = (w[i], w[j]);
                    w[i] = l.meet(a, b);
                    w[j] = l.join(a, b);
                    continue 'outer;
                }
            }
        }
        break;
    }
    w.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if l.lt(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    w
}

/// Consistent parameters built from random powers of `q`.
fn random_presentation(
    l: &FiniteLattice,
    r: &ChainProductRealization,
    seed: u64,
) -> ToricPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = l.len();
    let mut q = BTreeMap::new();
    let mut c = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            q.insert((a, b), QScalar::q_pow(rng.gen_range(-2..=2)));
            if !l.comparable(a, b) {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                c.insert((a, b), QScalar::monomial(sign, rng.gen_range(-2..=2)));
            }
        }
    }
    ToricPresentation::from_partial(l.clone(), r.clone(), &q, &c).unwrap()
}

#[test]
fn diamond_rewrites() {
    let (l, r) = diamond();
    let nf = symbolic_nf(&l, &r, &[2, 1]).unwrap();
    assert_eq!(nf.monomial, vec![0, 3]);
    assert_eq!(nf.scalar.display(&l), "C[c;b]");
    let nf = symbolic_nf(&l, &r, &[3, 1, 0]).unwrap();
    assert_eq!(nf.monomial, vec![0, 1, 3]);
    assert_eq!(nf.scalar.display(&l), "Q[b;a]*Q[d;a]*Q[d;b]");
    let nf = symbolic_nf(&l, &r, &[0, 1, 3]).unwrap();
    assert!(nf.scalar.is_one());
    assert!(matches!(
        symbolic_nf(&l, &r, &[7]),
        Err(Error::UnknownElement(_))
    ));
}

#[test]
fn commutative_case_matches_hibi_oracle() {
    for (l, r) in [diamond(), cube(), plucker_poset(2, 4).unwrap()] {
        let p = ToricPresentation::commutative(l.clone(), r).unwrap();
        let n = l.len();
        for len in 0..=4u32 {
            for code in 0..n.pow(len) {
                let word: Vec<usize> = (0..len).map(|k| code / n.pow(k) % n).collect();
                let nf = p.normal_form(&word).unwrap();
                assert!(nf.scalar.is_one());
                assert_eq!(nf.monomial, hibi(&l, &word), "{word:?}");
            }
        }
    }
}

#[test]
fn symbolic_scalars_evaluate_to_numeric() {
    let (l, r) = plucker_poset(2, 4).unwrap();
    let p = random_presentation(&l, &r, 3);
    p.check_consistency().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let len = rng.gen_range(0..6);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..l.len())).collect();
        let sym = symbolic_nf(&l, &r, &word).unwrap();
        let num = p.normal_form(&word).unwrap();
        assert_eq!(sym.monomial, num.monomial);
        assert_eq!(sym.scalar.evaluate(&p).unwrap(), num.scalar);
    }
}

#[test]
fn partial_tables_are_completed() {
    let (l, r) = diamond();
    let q = BTreeMap::from([((1, 2), QScalar::q_pow(1))]);
    let c = BTreeMap::from([((1, 2), QScalar::from_int(3))]);
    let p = ToricPresentation::from_partial(l, r, &q, &c).unwrap();
    assert_eq!(*p.q(2, 1), QScalar::q_pow(-1));
    assert!(p.q(0, 0).is_one() && p.q(0, 3).is_one());
    assert_eq!(*p.c(2, 1).unwrap(), QScalar::monomial(3, -1));
    assert!(p.is_consistent());
    assert!(p.c(0, 1).is_err());
}

#[test]
fn inconsistent_parameters_are_rejected() {
    let (l, r) = diamond();
    let mut c = BTreeMap::new();
    c.insert((1, 2), QScalar::from_int(2));
    c.insert((2, 1), QScalar::from_int(2));
    let mut q = vec![QScalar::one(); 16];
    q[4 + 2] = QScalar::q_pow(1);
    q[2 * 4 + 1] = QScalar::q_pow(-1);
    let p = ToricPresentation::new(l.clone(), r.clone(), q, c).unwrap();
    assert!(matches!(
        p.normal_form(&[2, 1]),
        Err(Error::InconsistentParameters(_))
    ));
    assert!(!confluence_certify(&p).is_ok());
    assert!(matches!(torus_embedding(&p), Err(Error::NotConfluent(_))));

    let c = BTreeMap::from([((1, 2), QScalar::one())]);
    assert!(matches!(
        ToricPresentation::new(l.clone(), r.clone(), vec![QScalar::one(); 16], c),
        Err(Error::Invalid(_))
    ));
    let c = BTreeMap::from([((1, 2), QScalar::one()), ((2, 1), QScalar::zero())]);
    assert!(matches!(
        ToricPresentation::new(l, r, vec![QScalar::one(); 16], c),
        Err(Error::InconsistentParameters(_))
    ));
}

#[test]
fn commutative_presentations_are_confluent() {
    for (l, r) in [diamond(), cube(), plucker_poset(2, 4).unwrap()] {
        let n = l.len();
        let p = ToricPresentation::commutative(l, r).unwrap();
        let rep = confluence_certify(&p);
        assert!(rep.is_ok(), "{:?}", rep.failures);
        assert_eq!(rep.checked, n * n + n * n * n);
    }
}

#[test]
fn torus_images_satisfy_relations() {
    for (l, r) in [diamond(), cube(), plucker_poset(2, 4).unwrap()] {
        let p = ToricPresentation::commutative(l.clone(), r).unwrap();
        let emb = torus_embedding(&p).unwrap();
        assert_eq!(emb.irr_plus.len(), l.join_irreducibles().0.len() + 1);
        let rep = emb.verify(&p).unwrap();
        assert!(rep.is_ok(), "{:?}", rep.failures);
    }
}

#[test]
fn diamond_torus_image_of_top() {
    let (l, r) = diamond();
    let c = BTreeMap::from([((1, 2), QScalar::q_pow(1))]);
    let mut q = BTreeMap::from([((1, 2), QScalar::q_pow(2))]);
    let p = ToricPresentation::from_partial(l.clone(), r.clone(), &q, &c).unwrap();
    assert!(!confluence_certify(&p).is_ok());
    q.insert((3, 1), QScalar::q_pow(-2));
    q.insert((3, 2), QScalar::q_pow(2));
    let p = ToricPresentation::from_partial(l, r, &q, &c).unwrap();
    let rep = confluence_certify(&p);
    assert!(rep.is_ok(), "{:?}", rep.failures);
    let emb = torus_embedding(&p).unwrap();
    // irr⁺ = (a, b, c); X_d = q^{-1} X_a^{-1} X_b X_c.
    assert_eq!(emb.images[3].exponents, vec![-1, 1, 1]);
    assert_eq!(emb.images[3].scalar, QScalar::q_pow(-1));
    assert!(emb.verify(&p).unwrap().is_ok());
}

#[test]
fn gk_dimension_and_regularity() {
    let (l, r) = plucker_poset(2, 4).unwrap();
    let p = ToricPresentation::commutative(l, r).unwrap();
    assert_eq!(gkdim_toric(&p).unwrap(), 5);
    let rep = regularity_check(&p, 3).unwrap();
    assert!(rep.is_ok());
    assert_eq!(rep.checked, 6 * (1 + 6 + 20 + 50));
    let (l, r) = cube();
    assert_eq!(
        gkdim_toric(&ToricPresentation::commutative(l, r).unwrap()).unwrap(),
        4
    );
}

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::grassmann::plucker_indices;
use crate::lattice::parse_tuple;

fn t(s: &str) -> Vec<u32> {
    parse_tuple(s).unwrap()
}

fn diamond() -> RichardsonAlgebra {
    RichardsonAlgebra::new(2, 4, &t("1,3"), &t("2,4")).unwrap()
}

#[test]
fn coset_lengths() {
    assert_eq!(coset_length(&[1, 2]), 0);
    assert_eq!(coset_length(&[3, 4]), 4);
    assert_eq!(coset_length(&[1, 3]), 1);
    assert_eq!(coset_length(&[2, 4, 6]), 6);
}

#[test]
fn gk_dimension_examples() {
    let full = RichardsonAlgebra::new(2, 4, &t("1,2"), &t("3,4")).unwrap();
    assert_eq!(full.gk_dim().unwrap(), 5);
    assert!(full.complement().is_empty());
    assert_eq!(diamond().gk_dim().unwrap(), 3);
    let point = RichardsonAlgebra::new(2, 4, &t("1,4"), &t("1,4")).unwrap();
    assert_eq!(point.gk_dim().unwrap(), 1);
    assert!(matches!(
        RichardsonAlgebra::new(2, 4, &t("1,4"), &t("2,3")),
        Err(Error::NotComparable { .. })
    ));
}

#[test]
fn gk_formulas_agree_on_all_comparable_pairs() {
    let g = Arc::new(Grassmannian::new(2, 4).unwrap());
    let all = plucker_indices(2, 4);
    let mut pairs = 0;
    for a in &all {
        for b in &all {
            if a.iter().zip(b).all(|(x, y)| x <= y) {
                let r = RichardsonAlgebra::from_grassmannian(g.clone(), a, b).unwrap();
                assert!(r.gk_dimensions().agree(), "{a:?} {b:?}");
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, 20);
}

#[test]
fn diamond_restricted_relation() {
    let r = diamond();
    let l = r.interval();
    let at = |s: &str| l.index_of(s).unwrap();
    let e = &r.table().straightening[&(at("1,4"), at("2,3"))];
    assert_eq!(e.len(), 1);
    assert!(e.coeff(&[at("1,3"), at("2,4")]).as_pure_q_power().is_some());
    assert_eq!(r.reduce_word(&[at("1,4"), at("2,3")]).unwrap(), *e);
}

#[test]
fn diamond_hilbert() {
    let h = diamond().hilbert(None).unwrap();
    for (d, c) in h.coefficients.iter().take(7).enumerate() {
        assert_eq!(*c, BigUint::from((d as u32 + 1).pow(2)));
    }
    assert_eq!(h.krull, 3);
    assert_eq!(format_polynomial(&h.numerator), "1 + t");
    assert!(h.palindromic);
    assert!(diamond().gorenstein_indicator().unwrap());
    assert!(matches!(
        diamond().hilbert(Some(3)),
        Err(Error::ReconstructionFailed(_))
    ));
}

#[test]
fn chain_and_full_hilbert() {
    let chain = RichardsonAlgebra::new(2, 4, &t("1,2"), &t("1,3")).unwrap();
    let h = chain.hilbert(None).unwrap();
    assert_eq!(h.krull, 2);
    assert_eq!(h.numerator, vec![BigInt::one()]);
    assert_eq!(h.coefficients[5], BigUint::from(6u32));
    let full = RichardsonAlgebra::new(2, 4, &t("1,2"), &t("3,4")).unwrap();
    let h = full.hilbert(None).unwrap();
    assert_eq!(h.coefficients[1], BigUint::from(6u32));
    assert_eq!(h.coefficients[2], BigUint::from(20u32));
    assert_eq!(format_polynomial(&h.numerator), "1 + t");
}

#[test]
fn quotient_dimensions_do_not_depend_on_q() {
    let r = diamond();
    let h = r.hilbert(None).unwrap();
    for q in ["symbolic", "1", "2"] {
        let q: Specialization = q.parse().unwrap();
        for d in 1..=2 {
            assert_eq!(
                BigUint::from(r.quotient_dimension(d, &q).unwrap()),
                h.coefficients[d],
                "{q} {d}"
            );
        }
    }
    let schubert = RichardsonAlgebra::new(2, 4, &t("1,3"), &t("3,4")).unwrap();
    let h = schubert.hilbert(None).unwrap();
    let dim = schubert
        .quotient_dimension(2, &Specialization::Symbolic)
        .unwrap();
    assert_eq!(BigUint::from(dim), h.coefficients[2]);
}

#[test]
fn quotient_multiplication_is_associative() {
    let r = diamond();
    let k = r.interval().len();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let gen = |x: usize| StdExpansion::from_terms([(vec![x], QScalar::one())]);
    for _ in 0..20 {
        let (a, b, c) = (
            gen(rng.gen_range(0..k)),
            gen(rng.gen_range(0..k)),
            gen(rng.gen_range(0..k)),
        );
        let left = r.mul(&r.mul(&a, &b).unwrap(), &c).unwrap();
        let right = r.mul(&a, &r.mul(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn format_polynomials() {
    let p = |v: &[i64]| format_polynomial(&v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
    assert_eq!(p(&[1, 0, -2, 1]), "1 - 2*t^2 + t^3");
    assert_eq!(p(&[0, -1]), "-t");
    assert_eq!(p(&[]), "0");
    let _ = BigRational::one();
}

use num_rational::BigRational;

use super::*;

fn idx(g: &Grassmannian, s: &str) -> usize {
    g.index_of(&crate::lattice::parse_tuple(s).unwrap())
        .unwrap()
}

#[test]
fn plucker_posets() {
    let (l, r) = plucker_poset(2, 4).unwrap();
    assert_eq!((l.len(), l.rank()), (6, 4));
    assert_eq!(r.base(), 9);
    assert!(r.increasing_images());
    let (l, _) = plucker_poset(1, 3).unwrap();
    assert_eq!((l.len(), l.rank(), l.incomparable_pairs().len()), (3, 2, 0));
    let (l, _) = plucker_poset(3, 6).unwrap();
    assert_eq!((l.len(), l.rank()), (20, 9));
    assert!(matches!(plucker_poset(3, 2), Err(Error::BadShape(_))));
    assert!(matches!(plucker_poset(0, 2), Err(Error::BadShape(_))));
}

#[test]
fn expansion_examples() {
    let g = Grassmannian::new(2, 4).unwrap();
    let (p12, p13, p14, p23, p24, p34) = (
        idx(&g, "1,2"),
        idx(&g, "1,3"),
        idx(&g, "1,4"),
        idx(&g, "2,3"),
        idx(&g, "2,4"),
        idx(&g, "3,4"),
    );
    let e = g.expand_in_std(&[p12]).unwrap();
    assert_eq!(e, StdExpansion::from_terms([(vec![p12], QScalar::one())]));

    let e = g.expand_in_std(&[p14, p23]).unwrap();
    let at_one = e.specialize(&BigRational::from_integer(1.into())).unwrap();
    let one = BigRational::from_integer(1.into());
    assert_eq!(at_one.get(&vec![p13, p24]), Some(&one));
    assert_eq!(at_one.get(&vec![p12, p34]), Some(&-one.clone()));
    assert_eq!(at_one.len(), 2);

    let e = g.expand_in_std(&[p23, p14]).unwrap();
    assert!(e.coeff(&[p13, p24]).as_pure_q_power().is_some());
    assert!(matches!(
        g.expand_in_std(&[99]),
        Err(Error::UnknownElement(_))
    ));
}

#[test]
fn table_2_4() {
    let g = Grassmannian::new(2, 4).unwrap();
    let t = g.straightening_table().unwrap();
    assert_eq!(t.straightening.len(), 2);
    assert_eq!(t.commutation.len(), 36);
    let (p14, p23) = (idx(&g, "1,4"), idx(&g, "2,3"));
    assert!(t.straightening.contains_key(&(p14, p23)));
    assert!(t.straightening.contains_key(&(p23, p14)));
}

#[test]
fn table_2_5_certifies() {
    let g = Grassmannian::new(2, 5).unwrap();
    let t = g.straightening_table().unwrap();
    assert_eq!(t.commutation.len(), 100);
    assert!(!t.straightening.is_empty());
}

#[test]
fn chain_case_has_no_straightening() {
    let g = Grassmannian::new(1, 4).unwrap();
    let t = g.straightening_table().unwrap();
    assert!(t.straightening.is_empty());
    for c in t.commutation.values() {
        assert!(c.tail.is_zero());
    }
}

#[test]
fn asl_degree_counts() {
    let g = Grassmannian::new(2, 4).unwrap();
    let r = verify_symmetric_asl(&g, 2);
    assert!(r.is_ok(), "{:?}", r.violations);
    assert_eq!(r.degrees[0].standard_monomials, 6);
    assert_eq!(r.degrees[0].rank, 6);
    assert_eq!(r.degrees[1].standard_monomials, 20);
    assert_eq!(r.degrees[1].rank, 20);
}

#[test]
fn muir_extension_2_4_and_2_5() {
    for n in [4, 5] {
        let g = Grassmannian::new(2, n).unwrap();
        let r = muir_consistency(&g).unwrap();
        assert!(r.checked > 0);
        assert!(r.is_ok(), "{:?}", r.failures);
    }
}

#[test]
fn order_lemmas() {
    let e = complement_order(&[1, 2], &[1, 3]).unwrap();
    assert_eq!(e.images, (vec![3, 4], vec![2, 4]));
    assert!(e.premise && e.conclusion);
    let e = complement_order(&[1, 3], &[1, 3]).unwrap();
    assert!(e.holds() && e.images.0 == e.images.1);
    let e = disjoint_union_order(&[1], &[2], &[3], 4).unwrap();
    assert_eq!(e.images, (vec![1, 3], vec![2, 3]));
    assert!(e.premise && e.conclusion);
    assert!(matches!(
        disjoint_union_order(&[1], &[3], &[3], 4),
        Err(Error::BadShape(_))
    ));
    assert!(matches!(
        complement_order(&[1, 5], &[1, 2]),
        Err(Error::BadShape(_))
    ));
}

#[test]
fn order_lemmas_exhaustive() {
    for m in 1..=3usize {
        let all = plucker_indices(m, 2 * m);
        for i in &all {
            for j in &all {
                assert!(complement_order(i, j).unwrap().holds());
            }
        }
    }
    let n = 6;
    for h in 1..=2usize {
        let all = plucker_indices(h, n);
        for i in &all {
            for k in &all {
                for s in (1..=n as u32).combinations(2) {
                    if s.iter().any(|v| i.contains(v) || k.contains(v)) {
                        continue;
                    }
                    assert!(disjoint_union_order(i, k, &s, n).unwrap().holds());
                }
            }
        }
    }
}

#[test]
fn classical_limit_matches_commutative_oracle() {
    let one = BigRational::from_integer(1.into());
    for (m, n) in [(2, 4), (2, 5)] {
        let quantum = Grassmannian::new(m, n)
            .unwrap()
            .straightening_table()
            .unwrap();
        let classical = crate::classical::ClassicalGrassmannian::new(m, n)
            .unwrap()
            .table()
            .unwrap();
        assert_eq!(quantum.specialize(&one).unwrap(), classical);
    }
}

#[test]
fn muir_extension_3_6() {
    let g = Grassmannian::new(3, 6).unwrap();
    let r = muir_consistency(&g).unwrap();
    assert_eq!(r.checked, 210);
    assert!(r.is_ok(), "{:?}", r.failures);
}

use num_rational::BigRational;

use super::*;
use crate::classical::ClassicalGrassmannian;
use crate::toric::torus_embedding;

fn idx(g: &Grassmannian, s: &str) -> usize {
    g.index_of(&crate::lattice::parse_tuple(s).unwrap())
        .unwrap()
}

#[test]
fn weights_reverse_the_order() {
    let g = Grassmannian::new(2, 4).unwrap();
    let w = WeightFiltration::new(g.lattice(), g.realization()).unwrap();
    assert_eq!(w.max_omega(), 31);
    assert_eq!(w.weight(idx(&g, "3,4")), 1);
    assert_eq!(w.weight(idx(&g, "1,2")), 21);
    let census = w.census(g.lattice(), 2);
    assert_eq!(census.values().sum::<usize>(), 20);
}

#[test]
fn extraction_2_4() {
    let g = Grassmannian::new(2, 4).unwrap();
    let e = extract_graded(&g.straightening_table().unwrap()).unwrap();
    let (p14, p23) = (idx(&g, "1,4"), idx(&g, "2,3"));
    assert_eq!(e.cmap.keys().copied().collect::<Vec<_>>(), {
        let mut v = vec![(p14, p23), (p23, p14)];
        v.sort();
        v
    });
    assert_eq!(e.qmap.len(), 36);
    assert!(e.qmap.values().all(|q| q.as_pure_q_power().is_some()));
    assert!(e.margins.values().all(|&m| m > 0));
    let p = e.presentation().unwrap();
    assert!(p.is_consistent());
    let rep = confluence_certify(&p);
    assert!(rep.is_ok(), "{:?}", rep.failures);
    let emb = torus_embedding(&p).unwrap();
    assert!(emb.verify(&p).unwrap().is_ok());
}

#[test]
fn classical_extraction_is_trivial() {
    let t = ClassicalGrassmannian::new(2, 5).unwrap().table().unwrap();
    let e = extract_graded(&t).unwrap();
    assert!(e.qmap.values().all(QScalar::is_one));
    assert!(e.cmap.values().all(QScalar::is_one));
}

#[test]
fn extraction_commutes_with_classical_limit() {
    let one = BigRational::from_integer(1.into());
    for n in [4, 5] {
        let t = Grassmannian::new(2, n)
            .unwrap()
            .straightening_table()
            .unwrap();
        let direct = extract_graded(&t).unwrap().specialize(&one).unwrap();
        let after = extract_graded(&t.specialize(&one).unwrap()).unwrap();
        assert_eq!(direct.qmap, after.qmap);
        assert_eq!(direct.cmap, after.cmap);
    }
}

#[test]
fn chain_case() {
    let g = Grassmannian::new(1, 4).unwrap();
    let e = extract_graded(&g.straightening_table().unwrap()).unwrap();
    assert!(e.cmap.is_empty());
    assert!(e.qmap.values().all(|q| q.as_pure_q_power().is_some()));
    let r = verify_degeneration(&Grassmannian::new(1, 3).unwrap(), 3, 1).unwrap();
    assert!(r.is_ok(), "{r:?}");
}

#[test]
fn corrupted_table_is_rejected() {
    let g = Grassmannian::new(2, 4).unwrap();
    let mut t = g.straightening_table().unwrap();
    let (p13, p24) = (idx(&g, "1,3"), idx(&g, "2,4"));
    let (p14, p23) = (idx(&g, "1,4"), idx(&g, "2,3"));
    let key = (p14, p23);
    let mut bad = t.straightening[&key].clone();
    // Raise a lower-order term to the top weight.
    bad.add_term(vec![p13, p24], &QScalar::one());
    bad = bad.without(&[p13, p24]);
    bad.add_term(vec![p14, p23], &QScalar::one());
    t.straightening.insert(key, bad);
    assert!(extract_graded(&t).is_err());
}

#[test]
fn degeneration_2_4() {
    let g = Grassmannian::new(2, 4).unwrap();
    let r = verify_degeneration(&g, 2, 5).unwrap();
    assert!(r.is_ok(), "{r:?}");
    assert_eq!(r.filtration.checked, 6 + 36);
    let total: usize = r
        .dimensions
        .iter()
        .filter(|d| d.degree == 2)
        .map(|d| d.filtered)
        .sum();
    assert_eq!(total, 20);
}

use super::*;

fn diamond() -> FiniteLattice {
    let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
    FiniteLattice::new(FinitePoset::from_covers(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap())
        .unwrap()
}

fn pi(m: usize, n: u32) -> FiniteLattice {
    let mut tuples = Vec::new();
    let mut cur = Vec::new();
    fn go(m: usize, n: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(m, n, v + 1, cur, out);
            cur.pop();
        }
    }
    go(m, n, 1, &mut cur, &mut tuples);
    FiniteLattice::from_tuples(&tuples).unwrap()
}

fn labels_of(l: &FiniteLattice, xs: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|&x| l.label(x).replace(',', "")).collect();
    v.sort();
    v
}

#[test]
fn chain_irreducibles() {
    let c3 = FiniteLattice::chain(3).unwrap();
    let (irr, plus) = c3.join_irreducibles();
    assert_eq!(labels_of(&c3, &irr), ["2", "3"]);
    assert_eq!(labels_of(&c3, &plus), ["1", "2", "3"]);
}

#[test]
fn plucker_irreducibles_and_rank() {
    let l = pi(2, 4);
    let (irr, _) = l.join_irreducibles();
    assert_eq!(labels_of(&l, &irr), ["13", "14", "23", "34"]);
    let b = l.birkhoff_check().unwrap();
    assert_eq!(b.rank, 4);
    assert_eq!(pi(2, 5).birkhoff_check().unwrap().rank, 6);
    assert_eq!(pi(3, 6).birkhoff_check().unwrap().rank, 9);
}

#[test]
fn diamond_irreducibles() {
    let d = diamond();
    assert_eq!(labels_of(&d, &d.join_irreducibles().0), ["b", "c"]);
    assert_eq!(d.rank(), 2);
}

#[test]
fn m3_is_not_distributive() {
    let labels = ["0", "x", "y", "z", "1"].map(String::from).to_vec();
    let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
    let m3 = FiniteLattice::new(FinitePoset::from_covers(labels, &covers).unwrap()).unwrap();
    assert!(!m3.is_distributive());
    assert!(matches!(
        m3.birkhoff_check(),
        Err(Error::NotDistributive(_))
    ));
    assert!(matches!(
        m3.canonical_realization(),
        Err(Error::NotDistributive(_))
    ));
}

#[test]
fn non_lattice_rejected() {
    let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
    // two maximal elements
    let p = FinitePoset::from_covers(labels, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(matches!(FiniteLattice::new(p), Err(Error::NotALattice(_))));
    let cyc = FinitePoset::from_covers(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
    assert!(matches!(cyc, Err(Error::NotAPoset(_))));
}

#[test]
fn canonical_realizations() {
    let c3 = FiniteLattice::chain(3).unwrap();
    let r = c3.canonical_realization().unwrap();
    assert_eq!(r.d(), 2);
    assert_eq!(r.iota(0), [1, 1]);
    assert_eq!(r.iota(1), [2, 1]);
    assert_eq!(r.iota(2), [2, 2]);
    let d = diamond();
    let r = d.canonical_realization().unwrap();
    assert_eq!(r.iota(0), [1, 1]);
    assert_eq!(r.iota(1), [2, 1]);
    assert_eq!(r.iota(2), [1, 2]);
    assert_eq!(r.iota(3), [2, 2]);
    let one = FiniteLattice::chain(1).unwrap();
    let r = one.canonical_realization().unwrap();
    assert_eq!((r.d(), r.sizes(), r.iota(0)), (1, &[2u32][..], &[1u32][..]));
}

#[test]
fn omega_and_weight_on_pi_2_4() {
    let l = pi(2, 4);
    let tuples: Vec<Vec<u32>> = l.labels().iter().map(|s| parse_tuple(s).unwrap()).collect();
    let r = ChainProductRealization::new(&l, vec![4, 4], tuples).unwrap();
    assert_eq!(r.base(), 9);
    assert!(r.increasing_images());
    let at = |s: &str| l.index_of(s).unwrap();
    assert_eq!(r.omega(at("1,4")), 13);
    assert_eq!(r.omega(at("2,3")), 21);
    assert_eq!(r.omega(at("1,3")), 12);
    assert_eq!(r.omega(at("2,4")), 22);
    assert_eq!(r.max_omega(), 31);
    assert_eq!(r.weight(at("3,4")), 1);
    assert_eq!(r.weight(at("1,2")), 21);
    assert_eq!(
        r.weight(at("1,4")) + r.weight(at("2,3")),
        r.weight(at("1,3")) + r.weight(at("2,4"))
    );
    assert_eq!(r.monomial_weight(&[]), 0);
    assert_eq!(
        chain_product_omega(&[1, 1, 1], 9),
        Some((9 * 9 * 9 - 1) / 8)
    );
}

#[test]
fn contents() {
    let u = content_union(&content(&[1, 4]), &content(&[2, 3]));
    assert_eq!(u, content(&[1, 2, 3, 4]));
    let u = content_union(&content(&[1, 3]), &content(&[2, 3]));
    assert_eq!(u.get(&3), Some(&2));
}

#[test]
fn intervals() {
    let l = pi(2, 4);
    let at = |s: &str| l.index_of(s).unwrap();
    let s = l.interval_and_complement(at("1,3"), at("2,4")).unwrap();
    assert_eq!(labels_of(&l, &s.interval), ["13", "14", "23", "24"]);
    assert_eq!(labels_of(&l, &s.complement), ["12", "34"]);
    let s = l.interval_and_complement(at("1,4"), at("1,4")).unwrap();
    assert_eq!(s.interval, vec![at("1,4")]);
    let s = l.interval_and_complement(l.bottom(), l.top()).unwrap();
    assert!(s.complement.is_empty());
    assert!(matches!(
        l.interval_and_complement(at("1,4"), at("2,3")),
        Err(Error::NotComparable { .. })
    ));
    let sub = l
        .sublattice(
            &l.interval_and_complement(at("1,3"), at("2,4"))
                .unwrap()
                .interval,
        )
        .unwrap();
    assert!(sub.is_distributive());
}

#[test]
fn multichain_counts_match_enumeration() {
    let l = pi(2, 4);
    let counts = l.multichain_counts(4);
    for (d, c) in counts.iter().enumerate() {
        assert_eq!(*c, num_bigint::BigUint::from(l.multichains(d).len()));
    }
    assert_eq!(counts[2], 20u32.into());
    let d = diamond();
    let counts = d.multichain_counts(6);
    for k in 0..=6u32 {
        assert_eq!(counts[k as usize], ((k + 1) * (k + 1)).into());
    }
}

#[test]
fn ranks_agree_with_downsets() {
    for l in [
        pi(2, 4),
        pi(2, 5),
        diamond(),
        FiniteLattice::chain(5).unwrap(),
    ] {
        let b = l.birkhoff_check().unwrap();
        for (x, r) in l.ranks().into_iter().enumerate() {
            assert_eq!(r, b.images[x].len());
        }
    }
}

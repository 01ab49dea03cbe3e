use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qasl::grassmann::Grassmannian;
use qasl::lattice::{chain_product_omega, content, content_union, FiniteLattice};
use qasl::qmatrix::{GenIndex, QMatrixAlgebra};
use qasl::toric::{symbolic_nf, ToricPresentation};
use qasl::QScalar;

fn scalar() -> impl Strategy<Value = QScalar> {
    (
        prop::collection::vec(-3i64..=3, 1..4),
        -2i64..=2,
        prop::collection::vec(-2i64..=2, 0..3),
    )
        .prop_map(|(num, shift, den)| {
            let poly = |cs: &[i64], e: i64| {
                cs.iter().enumerate().fold(QScalar::zero(), |acc, (k, &c)| {
                    acc.add(&QScalar::monomial(c, e + k as i64))
                })
            };
            let d = poly(&den, 0).add(&QScalar::monomial(1, den.len() as i64));
            poly(&num, shift).div(&d).unwrap()
        })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-5i64..=5, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn word(rows: usize, cols: usize, max: usize) -> impl Strategy<Value = Vec<GenIndex>> {
    prop::collection::vec(
        (1..=rows, 1..=cols).prop_map(|(r, c)| GenIndex::new(r, c)),
        0..=max,
    )
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_parse_round_trip(a in scalar()) {
        let back: QScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar(), t in rational()) {
        if let (Ok(x), Ok(y)) = (a.specialize(&t), b.specialize(&t)) {
            prop_assert_eq!(a.add(&b).specialize(&t).unwrap(), &x + &y);
            prop_assert_eq!(a.mul(&b).specialize(&t).unwrap(), &x * &y);
        }
    }

    #[test]
    fn pure_powers_add_exponents(e in -20i64..20, f in -20i64..20) {
        let p = QScalar::q_pow(e).mul(&QScalar::q_pow(f));
        prop_assert_eq!(p.as_pure_q_power(), Some((1, e + f)));
        prop_assert_eq!(QScalar::q_pow(e).neg().as_pure_q_power(), Some((-1, e)));
    }

    #[test]
    fn normal_form_is_multiplicative(u in word(2, 3, 3), v in word(2, 3, 3)) {
        let alg = QMatrixAlgebra::new(2, 3).unwrap();
        let uv: Vec<GenIndex> = u.iter().chain(&v).copied().collect();
        let lhs = alg.normal_form(&uv).unwrap();
        let rhs = alg.mul(&alg.normal_form(&u).unwrap(), &alg.normal_form(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_is_an_involution(u in word(2, 2, 4)) {
        let alg = QMatrixAlgebra::new(2, 2).unwrap();
        let x = alg.normal_form(&u).unwrap();
        prop_assert_eq!(alg.transpose(&alg.transpose(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn content_union_commutes(a in prop::collection::vec(1u32..6, 0..4), b in prop::collection::vec(1u32..6, 0..4)) {
        let (ca, cb) = (content(&a), content(&b));
        prop_assert_eq!(content_union(&ca, &cb), content_union(&cb, &ca));
        let joined: Vec<u32> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(content_union(&ca, &cb), content(&joined));
    }

    #[test]
    fn omega_is_strictly_increasing(i in prop::collection::vec(1u32..=6, 3), bump in 0usize..3) {
        let mut i = i;
        i.sort_unstable();
        let mut j = i.clone();
        j[bump] += 1;
        if j.windows(2).all(|w| w[0] <= w[1]) {
            let base = 2 * 7 + 1;
            prop_assert!(chain_product_omega(&i, base).unwrap() < chain_product_omega(&j, base).unwrap());
        }
    }

    #[test]
    fn toric_symbolic_matches_numeric(word in prop::collection::vec(0usize..9, 0..6), e in -3i64..=3) {
        let sizes = [3u32, 3];
        let tuples: Vec<Vec<u32>> = (1..=3).flat_map(|a| (1..=3).map(move |b| vec![a, b])).collect();
        let l = FiniteLattice::from_tuples(&tuples).unwrap();
        let r = qasl::lattice::ChainProductRealization::new(&l, sizes.to_vec(), tuples.clone()).unwrap();
        let mut q = std::collections::BTreeMap::new();
        for a in 0..l.len() {
            for b in a + 1..l.len() {
                q.insert((a, b), QScalar::q_pow(e * (a as i64 - b as i64)));
            }
        }
        let p = ToricPresentation::from_partial(l.clone(), r.clone(), &q, &Default::default()).unwrap();
        let numeric = p.normal_form(&word).unwrap();
        let formal = symbolic_nf(&l, &r, &word).unwrap();
        prop_assert_eq!(&formal.monomial, &numeric.monomial);
        prop_assert_eq!(formal.scalar.evaluate(&p).unwrap(), numeric.scalar);
    }

    #[test]
    fn straightening_preserves_row_content(a in 0usize..6, b in 0usize..6) {
        let g = Grassmannian::new(2, 4).unwrap();
        let e = g.expand_in_std(&[a, b]).unwrap();
        let want = g.row_content(&[a, b]);
        for key in e.terms().keys() {
            prop_assert_eq!(g.row_content(key), want.clone());
            prop_assert!(g.is_standard(key));
        }
    }
}

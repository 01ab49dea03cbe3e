use super::*;

fn x(i: usize, j: usize) -> GenIndex {
    GenIndex::new(i, j)
}

fn q(e: i64) -> QScalar {
    QScalar::q_pow(e)
}

#[test]
fn basic_relations() {
    let alg = QMatrixAlgebra::new(2, 2).unwrap();
    let x11 = alg.code(x(1, 1)).unwrap();
    let x12 = alg.code(x(1, 2)).unwrap();
    let x21 = alg.code(x(2, 1)).unwrap();
    let x22 = alg.code(x(2, 2)).unwrap();

    let nf = alg.normal_form(&[x(1, 2), x(1, 1)]).unwrap();
    assert_eq!(nf, PbwElement::from_terms(2, 2, [(vec![x11, x12], q(-1))]));

    let nf = alg.normal_form(&[x(1, 1), x(2, 2)]).unwrap();
    assert_eq!(nf, PbwElement::from_terms(2, 2, [(vec![x11, x22], q(0))]));

    let nf = alg.normal_form(&[x(2, 2), x(1, 1)]).unwrap();
    let expected = PbwElement::from_terms(
        2,
        2,
        [(vec![x11, x22], q(0)), (vec![x12, x21], q(-1).sub(&q(1)))],
    );
    assert_eq!(nf, expected);

    let nf = alg.normal_form(&[x(2, 1), x(1, 2)]).unwrap();
    assert_eq!(nf, PbwElement::from_terms(2, 2, [(vec![x12, x21], q(0))]));
}

#[test]
fn out_of_bounds() {
    let alg = QMatrixAlgebra::new(2, 3).unwrap();
    assert!(matches!(
        alg.normal_form(&[x(3, 1)]),
        Err(Error::IndexOutOfBounds { .. })
    ));
    assert!(matches!(
        alg.normal_form(&[x(0, 1)]),
        Err(Error::IndexOutOfBounds { .. })
    ));
}

#[test]
fn minors() {
    let alg = QMatrixAlgebra::new(2, 2).unwrap();
    assert_eq!(
        alg.quantum_minor(&[1], &[1]).unwrap(),
        alg.generator(x(1, 1)).unwrap()
    );
    let det = alg.quantum_minor(&[1, 2], &[1, 2]).unwrap();
    let x11 = alg.code(x(1, 1)).unwrap();
    let x12 = alg.code(x(1, 2)).unwrap();
    let x21 = alg.code(x(2, 1)).unwrap();
    let x22 = alg.code(x(2, 2)).unwrap();
    let expected = PbwElement::from_terms(
        2,
        2,
        [
            (vec![x11, x22], q(0)),
            (vec![x12, x21], QScalar::monomial(-1, 1)),
        ],
    );
    assert_eq!(det, expected);
    assert!(matches!(
        alg.quantum_minor(&[1, 2], &[1]),
        Err(Error::BadShape(_))
    ));
    assert!(matches!(
        alg.quantum_minor(&[2, 1], &[1, 2]),
        Err(Error::BadShape(_))
    ));
}

#[test]
fn quantum_determinant_is_central() {
    let alg = QMatrixAlgebra::new(2, 2).unwrap();
    let det = alg.quantum_minor(&[1, 2], &[1, 2]).unwrap();
    for i in 1..=2 {
        for j in 1..=2 {
            let g = alg.generator(x(i, j)).unwrap();
            assert_eq!(alg.mul(&det, &g), alg.mul(&g, &det));
        }
    }
}

#[test]
fn transpose_of_minors() {
    let alg = QMatrixAlgebra::new(3, 3).unwrap();
    let m = alg.quantum_minor(&[1, 2], &[1, 3]).unwrap();
    let t = alg.quantum_minor(&[1, 3], &[1, 2]).unwrap();
    assert_eq!(alg.transpose(&m).unwrap(), t);
    assert_eq!(alg.transpose(&t).unwrap(), m);
    assert_eq!(
        alg.transpose(&alg.generator(x(1, 2)).unwrap()).unwrap(),
        alg.generator(x(2, 1)).unwrap()
    );
    let rect = QMatrixAlgebra::new(2, 3).unwrap();
    assert!(matches!(
        rect.transpose(&rect.one()),
        Err(Error::NotSquare { .. })
    ));
}

#[test]
fn transpose_of_all_minors_in_m4() {
    let alg = QMatrixAlgebra::new(4, 4).unwrap();
    let subsets: Vec<Vec<usize>> = (1..=3).flat_map(|t| (1..=4).combinations(t)).collect();
    for i in &subsets {
        for j in subsets.iter().filter(|j| j.len() == i.len()) {
            let m = alg.quantum_minor(i, j).unwrap();
            assert_eq!(alg.transpose(&m).unwrap(), alg.quantum_minor(j, i).unwrap());
        }
    }
}

#[test]
fn row_degrees() {
    let alg = QMatrixAlgebra::new(4, 2).unwrap();
    let m = alg.quantum_minor(&[1, 3], &[1, 2]).unwrap();
    assert_eq!(m.row_degree(), RowDegree::Homogeneous(vec![1, 0, 1, 0]));
    assert_eq!(alg.zero().row_degree(), RowDegree::Zero);
    let s = alg
        .generator(x(1, 1))
        .unwrap()
        .add(&alg.generator(x(2, 1)).unwrap());
    assert_eq!(s.row_degree(), RowDegree::Mixed);
}

#[test]
fn m2_confluence_and_classical_limit() {
    let alg = QMatrixAlgebra::new(2, 2).unwrap();
    let r = confluence_check(&alg, 3);
    assert!(r.is_ok(), "{:?}", r.failures);
    assert_eq!(r.checked, 1 + 4 + 16 + 64);
    assert!(q_one_check(&alg, 3).is_ok());
}

#[test]
fn m32_equal_words() {
    let alg = QMatrixAlgebra::new(3, 2).unwrap();
    let r = equal_word_pairs_check(&alg, 200, 5, 7);
    assert!(r.is_ok(), "{:?}", r.failures);
}

#[test]
fn display() {
    let alg = QMatrixAlgebra::new(2, 2).unwrap();
    let nf = alg.normal_form(&[x(2, 2), x(1, 1)]).unwrap();
    assert_eq!(nf.to_string(), "X[1,1]*X[2,2] + (-q + q^-1)*X[1,2]*X[2,1]");
}

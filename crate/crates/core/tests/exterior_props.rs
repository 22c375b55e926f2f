use msf7::exterior::{
    int, interior, pullback, wedge, KForm, LinearMap, Matrix, MultiIndex, Scalar, SymmetricMatrix, Vector, DIM,
};
use num_traits::Zero;
use proptest::prelude::*;

fn kform(degree: usize) -> impl Strategy<Value = KForm> {
    let basis = MultiIndex::all(degree);
    let n = basis.len();
    proptest::collection::vec(-3i64..=3, n).prop_map(move |coefs| {
        KForm::from_terms(degree, basis.iter().zip(coefs).map(|(m, c)| (m.indices(), int(c)))).unwrap()
    })
}

fn sparse_kform(degree: usize) -> impl Strategy<Value = KForm> {
    let basis = MultiIndex::all(degree);
    let n = basis.len();
    proptest::collection::vec((0..n, -3i64..=3), 0..5).prop_map(move |picks| {
        KForm::from_terms(degree, picks.into_iter().map(|(i, c)| (basis[i].indices(), int(c)))).unwrap()
    })
}

fn int_map() -> impl Strategy<Value = LinearMap> {
    proptest::array::uniform7(proptest::array::uniform7(-2i64..=2)).prop_map(LinearMap::from_int_rows)
}

fn vector() -> impl Strategy<Value = Vector> {
    proptest::array::uniform7(-4i64..=4).prop_map(Vector::from_ints)
}

fn sign(p: usize) -> Scalar {
    if p.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_graded_commutative(a in sparse_kform(2), b in sparse_kform(3), c in sparse_kform(1)) {
        prop_assert_eq!(wedge(&a, &b), wedge(&b, &a).scale(&sign(2 * 3)));
        prop_assert_eq!(wedge(&c, &b), wedge(&b, &c).scale(&sign(3)));
        prop_assert!(wedge(&c, &c).is_zero());
    }

    #[test]
    fn wedge_is_associative(a in sparse_kform(1), b in sparse_kform(2), c in sparse_kform(2)) {
        prop_assert_eq!(wedge(&wedge(&a, &b), &c), wedge(&a, &wedge(&b, &c)));
    }

    #[test]
    fn pullback_matches_evaluation(g in int_map(), a in kform(3), u in vector(), v in vector(), w in vector()) {
        let lhs = pullback(&g, &a).evaluate(&[u.clone(), v.clone(), w.clone()]).unwrap();
        let rhs = a.evaluate(&[g.apply(&u), g.apply(&v), g.apply(&w)]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_respects_wedge(g in int_map(), a in sparse_kform(2), b in sparse_kform(2)) {
        prop_assert_eq!(pullback(&g, &wedge(&a, &b)), wedge(&pullback(&g, &a), &pullback(&g, &b)));
    }

    #[test]
    fn pullback_is_contravariant(g in int_map(), h in int_map(), a in sparse_kform(3)) {
        prop_assert_eq!(pullback(&g.compose(&h), &a), pullback(&h, &pullback(&g, &a)));
    }

    #[test]
    fn interior_is_an_antiderivation(v in vector(), a in sparse_kform(2), b in sparse_kform(3)) {
        let lhs = interior(&v, &wedge(&a, &b)).unwrap();
        let rhs = &wedge(&interior(&v, &a).unwrap(), &b) + &wedge(&a, &interior(&v, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
        let twice = interior(&v, &interior(&v, &b).unwrap()).unwrap();
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn interior_commutes_with_pullback(g in int_map(), v in vector(), a in kform(3)) {
        let lhs = interior(&v, &pullback(&g, &a)).unwrap();
        let rhs = pullback(&g, &interior(&g.apply(&v), &a).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interior_matches_evaluation(v in vector(), u in vector(), w in vector(), a in kform(3)) {
        let lhs = interior(&v, &a).unwrap().evaluate(&[u.clone(), w.clone()]).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&[v, u, w]).unwrap());
    }

    #[test]
    fn json_round_trip(a in sparse_kform(3), g in int_map()) {
        prop_assert_eq!(KForm::from_json(&a.to_json()).unwrap(), a);
        prop_assert_eq!(LinearMap::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..6)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = Matrix::from_i64_rows(&refs).unwrap();
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            prop_assert!(v.iter().all(|x| x.is_integer()));
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        entries in proptest::collection::vec(-3i64..=3, 15),
        p in int_map(),
    ) {
        let n = 5;
        let mut k = 0;
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                rows[i][j] = int(entries[k]);
                rows[j][i] = int(entries[k]);
                k += 1;
            }
        }
        let sym = SymmetricMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap();
        let p5 = Matrix::from_fn(n, n, |i, j| p.entry(i, j).clone());
        prop_assume!(!p5.det().unwrap().is_zero());
        let moved = sym.congruent(&p5).unwrap();
        prop_assert_eq!(moved.signature(), sym.signature());
        let sig = sym.signature();
        prop_assert_eq!(sig.pos + sig.neg + sig.null, n);
        prop_assert_eq!(sig.pos + sig.neg, sym.rank());
    }
}

#[test]
fn pullback_of_volume_is_determinant() {
    let vol = KForm::from_int_terms(DIM, &[(&[1, 2, 3, 4, 5, 6, 7], 1)]).unwrap();
    let g = LinearMap::from_int_rows([
        [2, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 3, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 1],
        [1, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, -1, 0, 0],
        [0, 2, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 3],
    ]);
    assert_eq!(pullback(&g, &vol), vol.scale(&g.det()));
}

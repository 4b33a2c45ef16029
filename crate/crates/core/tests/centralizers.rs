use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symmpair_core::centralizers::*;
use symmpair_core::field::{q, Qi};
use symmpair_core::sympair::{catalog_pair, MatrixModel, PairSpec, M};
use symmpair_core::{Error, Matrix, Q};

fn spec(s: &str) -> PairSpec {
    s.parse().unwrap()
}

fn m(rows: &[&[i64]]) -> M {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Qi::real(q(x))).collect()).collect())
}

fn sl3_e() -> M {
    m(&[&[0, 1, 0], &[0, 0, 0], &[1, 0, 0]])
}

#[test]
fn centralizer_dimensions() {
    let model = MatrixModel::build(&spec("AIII:group=GL,n=4,m=2")).unwrap();
    let x = model.cartan_point(&[q(1), q(2)]);
    assert_eq!(lie_centralizer(&model, &x, Ambient::G).unwrap().len(), 4);
    assert_eq!(lie_centralizer(&model, &x, Ambient::H).unwrap().len(), 2);
    assert!(is_regular(&model, &x).unwrap());
    let zero = M::zeros(4, 4);
    assert_eq!(lie_centralizer(&model, &zero, Ambient::G).unwrap().len(), 16);
    assert!(!is_regular(&model, &zero).unwrap());
    let k = model.k_basis[0].clone();
    assert_eq!(lie_centralizer(&model, &k, Ambient::G), Err(Error::NotInP));
}

#[test]
fn sl3_component_group() {
    let pair = catalog_pair(&spec("AIII:group=SL,n=3,m=1")).unwrap();
    let e = sl3_e();
    assert!(is_regular(pair.model().unwrap(), &e).unwrap());
    let r = group_centralizer_info(&pair, &e).unwrap();
    assert_eq!(r.dim_in_h, 1);
    assert_eq!(r.group_info, Some(GroupInfo { dim: 1, component_count: 3 }));

    // oracle: h = diag(t, A) with h e = e h forces A = [[t, 0], [u, t]]
    for t in -3i64..=3 {
        for u in -3i64..=3 {
            let h = m(&[&[t, 0, 0], &[0, t, 0], &[0, u, t]]);
            assert_eq!(h.mul_ref(&e), e.mul_ref(&h));
            assert_eq!(h.det(), Qi::real(q(t * t * t)));
        }
    }
}

#[test]
fn torus_centralizer_is_connected() {
    let pair = catalog_pair(&spec("AIII:group=GL,n=2,m=1")).unwrap();
    let x = pair.model().unwrap().cartan_point(&[q(1)]);
    let r = group_centralizer_info(&pair, &x).unwrap();
    assert_eq!(r.group_info, Some(GroupInfo { dim: 1, component_count: 1 }));
    let pair = catalog_pair(&spec("CI:n=2")).unwrap();
    let x = pair.model().unwrap().cartan_point(&[q(1), q(2)]);
    let r = group_centralizer_info(&pair, &x).unwrap();
    assert!(r.group_info.is_none());
    assert!(r.unresolved.is_some());
}

#[test]
fn jordan_examples() {
    let d = m(&[&[1, 0], &[0, 2]]);
    assert_eq!(jordan_decompose(&d), JordanPair { s: d.clone(), n: M::zeros(2, 2) });
    let u = m(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
    assert_eq!(jordan_decompose(&u), JordanPair { s: M::zeros(3, 3), n: u.clone() });
    let x: Matrix<Q> = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(1)]]);
    let j = jordan_decompose(&x);
    assert_eq!(j.s, Matrix::identity(2));
    assert_eq!(j.n, Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]));
    assert!(j.check(&x));
}

#[test]
fn jordan_parts_stay_in_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for s in ["AIII:group=GL,n=4,m=2", "AI:group=SL,n=3", "CI:n=2", "BDI:n=4,m=2"] {
        let model = MatrixModel::build(&spec(s)).unwrap();
        for _ in 0..6 {
            let c: Vec<Q> = (0..model.rank_theta()).map(|i| if i == 0 { q(1) } else { q(0) }).collect();
            let a = model.cartan_point(&c);
            let levi = model.levi_at(&a);
            let n = (0..50).find_map(|_| sparse_nilpotent(&levi, &mut rng)).unwrap_or(M::zeros(model.size, model.size));
            let x = random_translate(&model, &a.add_ref(&n), &mut rng);
            let j = jordan_decompose(&x);
            assert!(j.check(&x));
            assert!(model.in_p(&j.s) && model.in_p(&j.n), "{s}");
        }
    }
}

#[test]
fn regularity_is_translation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in ["AIII:group=GL,n=4,m=2", "AI:group=SL,n=3", "AIII:group=SL,n=4,m=1"] {
        let model = MatrixModel::build(&spec(s)).unwrap();
        for _ in 0..10 {
            let x = random_p(&model, &mut rng, 1);
            let y = random_translate(&model, &x, &mut rng);
            assert!(model.in_p(&y));
            assert_eq!(is_regular(&model, &x).unwrap(), is_regular(&model, &y).unwrap());
        }
    }
}

#[test]
fn regularity_via_descendant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for s in ["AIII:group=GL,n=4,m=2", "AI:group=SL,n=4", "CI:n=2"] {
        let model = MatrixModel::build(&spec(s)).unwrap();
        let r = model.rank_theta();
        for k in 0..r {
            // s on the wall where the first k coordinates coincide with zero
            let c: Vec<Q> = (0..r).map(|i| if i < k { q(0) } else { q(i as i64 + 1) }).collect();
            let a = model.cartan_point(&c);
            let levi = model.levi_at(&a);
            for _ in 0..8 {
                let Some(n) = sparse_nilpotent(&levi, &mut rng) else { continue };
                let x = a.add_ref(&n);
                assert_eq!(is_regular(&model, &x).unwrap(), is_regular(&levi, &n).unwrap(), "{s} k={k}");
            }
        }
    }
}

#[test]
fn commutativity_dichotomy() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in ["AIII:group=GL,n=4,m=2", "DIAG:g=gl,n=2"] {
        let pair = catalog_pair(&spec(s)).unwrap();
        let r = centralizer_commutativity(&pair, 20, &mut rng).unwrap();
        assert!(r.all_abelian, "{s}");
    }
    let pair = catalog_pair(&spec("AIII:group=SL,n=4,m=1")).unwrap();
    let r = centralizer_commutativity(&pair, 20, &mut rng).unwrap();
    let (x, a, b) = r.witness.expect("nonabelian witness");
    let model = pair.model().unwrap();
    assert!(is_regular(model, &x).unwrap());
    assert!(a.bracket(&x).is_zero() && b.bracket(&x).is_zero());
    assert!(!a.bracket(&b).is_zero());
}

#[test]
fn slices_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for s in ["DIAG:g=gl,n=3", "DIAG:g=sl,n=3", "AIII:group=GL,n=2,m=1", "AIII:group=GL,n=4,m=2", "AIII:group=GL,n=6,m=3", "AI:group=SL,n=3", "AI:group=SL,n=4"] {
        let model = MatrixModel::build(&spec(s)).unwrap();
        let slice = kostant_rallis_slice(&spec(s)).unwrap();
        let v = verify_slice(&model, &slice, &mut rng, 5).unwrap();
        assert!(v.ok(), "{s}: {v:?}");
    }
    assert!(matches!(kostant_rallis_slice(&spec("CI:n=2")), Err(Error::UnsupportedFamily(_))));
}

#[test]
fn aiii_rank_one_slice_invariant() {
    let slice = kostant_rallis_slice(&spec("AIII:group=GL,n=2,m=1")).unwrap();
    assert_eq!(slice.point(&[Qi::real(q(5))]), m(&[&[0, 5], &[1, 0]]));
    let inv = slice.invariants();
    assert_eq!(inv.len(), 1);
    for c in -4..=4 {
        assert_eq!(inv[0].eval(&[Qi::real(q(c))]), Qi::real(q(-c)));
    }
}

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symmpair_core::centralizers::{kostant_rallis_slice, lie_centralizer, Ambient};
use symmpair_core::field::{q, qq, Qi};
use symmpair_core::hitchin::*;
use symmpair_core::rootsys::TypeLabel;
use symmpair_core::spectral::*;
use symmpair_core::sympair::catalog_pair;
use symmpair_core::{Error, Matrix, Q};

fn mq(rows: &[&[i64]]) -> Matrix<Q> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn invariants_examples() {
    let d = invariants_from_higgs(&mq(&[&[3]]), &mq(&[&[5]])).unwrap();
    assert_eq!(d.a, qs(&[-15]));
    let c = mq(&[&[1, 0], &[0, 2]]);
    let d = invariants_from_higgs(&c, &c).unwrap();
    assert_eq!(d.a, qs(&[-5, 4]));
    assert!(d.in_u);
    assert_eq!(sheets_over_point(&d), 1);
    let z = Matrix::zeros(2, 2);
    let d = invariants_from_higgs(&z, &z).unwrap();
    assert_eq!(d.a, qs(&[0, 0]));
    assert!(!d.in_u);
    assert_eq!(sheets_over_point(&d), 2);
    assert!(cover_discriminant(&d).zero_is_root);
    assert_eq!(sheets_over_point(&SpectralCoverData::from_coefficients(qs(&[1, 0]))), 2);
}

#[test]
fn discriminant_examples() {
    let r = cover_discriminant(&SpectralCoverData::from_coefficients(qs(&[-5, 4])));
    assert_eq!(r.discriminant, q(9));
    assert!(!r.zero_is_root);
    let r = cover_discriminant(&SpectralCoverData::from_coefficients(qs(&[2, 1])));
    assert_eq!(r.discriminant, q(0));
}

fn random_block(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Q> {
    let rows = (0..n).map(|_| (0..n).map(|_| qq(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect()).collect();
    Matrix::from_rows(rows)
}

/// `e_k` of the roots of `char(CD)`, read off by Vieta.
fn elementary_from_product(c: &Matrix<Q>, d: &Matrix<Q>, k: usize) -> Q {
    let n = c.rows();
    let chi = c.mul_ref(d).charpoly_faddeev();
    let sign = if k % 2 == 0 { q(1) } else { q(-1) };
    sign * chi[n - k].clone()
}

#[test]
fn evenness_and_product_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let (c, d) = (random_block(&mut rng, n), random_block(&mut rng, n));
        let data = invariants_from_higgs(&c, &d).unwrap();
        assert_eq!(data.even_poly().coeffs(), Matrix::block2(&Matrix::zeros(n, n), &c, &d, &Matrix::zeros(n, n)).charpoly().coeffs());
        for k in 1..=n {
            let sign = if k % 2 == 0 { q(1) } else { q(-1) };
            assert_eq!(data.a[k - 1], sign * elementary_from_product(&c, &d, k));
        }
    }
}

#[test]
fn weights_match_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let exps = exponents(&TypeLabel::parse("C3").unwrap());
    for _ in 0..10 {
        let (c, d) = (random_block(&mut rng, 3), random_block(&mut rng, 3));
        let t = q(rng.gen_range(2..=5));
        let a = invariants_from_higgs(&c, &d).unwrap().a;
        let at = invariants_from_higgs(&c.scale(&t), &d.scale(&t)).unwrap().a;
        for (k, e) in exps.degrees.iter().enumerate() {
            let mut w = q(1);
            for _ in 0..*e {
                w = w * t.clone();
            }
            assert_eq!(at[k], a[k].clone() * w);
        }
    }
}

#[test]
fn fiber_dimension() {
    let pair = catalog_pair(&"AIII:group=GL,n=4,m=2".parse().unwrap()).unwrap();
    let model = pair.model().unwrap();
    let x = model.cartan_point(&[q(1), q(3)]);
    assert_eq!(j_fiber_dimension(&pair, &x).unwrap(), 2);
    // a ramified point of the slice: a_4 = 0, a_2 ≠ 0
    let slice = kostant_rallis_slice(&pair.spec).unwrap();
    let x = slice.point(&[Qi::real(q(0)), Qi::real(q(5))]);
    let data = invariants_of_element(&pair, &x).unwrap();
    assert!(!data.in_u && data.a[0] != q(0));
    assert_eq!(j_fiber_dimension(&pair, &x).unwrap(), 2);
    assert_eq!(j_fiber_dimension(&pair, &model.cartan_point(&[q(1), q(1)])), Err(Error::NotRegular));

    let pair1 = catalog_pair(&"AIII:group=GL,n=2,m=1".parse().unwrap()).unwrap();
    let e = kostant_rallis_slice(&pair1.spec).unwrap().base;
    assert_eq!(j_fiber_dimension(&pair1, &e).unwrap(), 1);
    // along the whole slice
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let c: Vec<Qi> = (0..2).map(|_| Qi::real(q(rng.gen_range(-5..=5)))).collect();
        let x = slice.point(&c);
        assert_eq!(j_fiber_dimension(&pair, &x).unwrap(), 2);
        assert_eq!(lie_centralizer(model, &x, Ambient::H).unwrap().len(), 2);
    }
}

#[test]
fn exponent_examples() {
    let e = |s: &str| exponents(&TypeLabel::parse(s).unwrap()).degrees;
    assert_eq!(e("C2"), vec![2, 4]);
    assert_eq!(e("A1"), vec![2]);
    let mut d4 = e("D4");
    d4.sort();
    assert_eq!(d4, vec![2, 4, 4, 6]);
    assert_eq!(e("trivial"), Vec::<u32>::new());
    assert_eq!(exponents_on(&TypeLabel::parse("A2").unwrap(), 3).degrees, vec![2, 3, 1]);
}

#[test]
fn base_dimension_examples() {
    let ex = |d: &[u32]| ExponentList { degrees: d.to_vec() };
    assert_eq!(base_dimension(&ex(&[2, 4]), &CurveConfig::new(2, 4)), Ok(22));
    assert_eq!(base_dimension(&ex(&[2]), &CurveConfig::new(0, 1)), Ok(3));
    assert_eq!(base_dimension(&ex(&[]), &CurveConfig::new(3, 6)), Ok(0));
    assert_eq!(base_dimension(&ex(&[2]), &CurveConfig::new(3, 5)), Err(Error::DegreeTooSmall { d: 5, two_g: 6 }));
    // canonical mode: h0(K) = g, h0(K^e) = (2e-1)(g-1)
    assert_eq!(base_dimension(&ex(&[1, 2, 3]), &CurveConfig::canonical(2)), Ok(2 + 3 + 5));
    assert_eq!(base_dimension(&ex(&[2]), &CurveConfig::canonical(1)), Ok(1));
    assert_eq!(base_dimension(&ex(&[2]), &CurveConfig::canonical(0)), Ok(0));
}

#[test]
fn sheets() {
    assert_eq!(sheet_decomposition(3).unwrap().degrees, vec![1, 3, 3, 1]);
    assert_eq!(sheet_decomposition(0).unwrap().total, 1);
    assert_eq!(sheet_decomposition(4).unwrap().degrees, vec![1, 4, 6, 4, 1]);
    assert_eq!(nonseparated_intersection_count(&CurveConfig::new(0, 0)), Ok(0));
    assert_eq!(nonseparated_intersection_count(&CurveConfig::new(2, 7)), Ok(7));
    assert_eq!(sheet_decomposition(7).unwrap().total, 128);
}

proptest! {
    #[test]
    fn binomial_rows(d in 0u32..=20) {
        let s = sheet_decomposition(d).unwrap();
        prop_assert_eq!(s.total, 1u128 << d);
        prop_assert_eq!(s.degrees.iter().sum::<u128>(), s.total);
        for (i, c) in s.degrees.iter().enumerate() {
            prop_assert_eq!(*c, s.degrees[d as usize - i]);
        }
    }

    #[test]
    fn evenness(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, d) = (random_block(&mut rng, n), random_block(&mut rng, n));
        prop_assert!(invariants_from_higgs(&c, &d).is_ok());
    }
}

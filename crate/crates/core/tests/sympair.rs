use symmpair_core::field::q;
use symmpair_core::rootsys::TypeLabel;
use symmpair_core::sympair::*;


fn check_model(spec: &PairSpec) {
    let pair = catalog_pair(spec).unwrap();
    let m = pair.model().unwrap();
    // θ is an involution preserving g
    for b in &m.g_basis {
        assert_eq!(m.theta(&m.theta(b)), *b, "{spec}");
    }
    assert_eq!(m.k_basis.len() + m.p_basis.len(), m.dim_g(), "{spec}");
    // Cartan decomposition brackets
    for x in &m.k_basis {
        for y in &m.k_basis {
            assert!(m.in_k(&x.bracket(y)), "{spec}: [k,k]");
        }
        for y in &m.p_basis {
            assert!(m.in_p(&x.bracket(y)), "{spec}: [k,p]");
        }
    }
    for x in &m.p_basis {
        for y in &m.p_basis {
            assert!(m.in_k(&x.bracket(y)), "{spec}: [p,p]");
        }
    }
    // a abelian, inside p, maximal
    for h in &m.cartan {
        assert!(m.in_p(h), "{spec}: a in p");
        for h2 in &m.cartan {
            assert!(h.bracket(h2).is_zero(), "{spec}: a abelian");
        }
    }
    assert_eq!(m.centralizer_in(&m.p_basis, &m.cartan).len(), m.rank_theta(), "{spec}: a maximal");
    let rr = restricted_root_system(&pair).unwrap();
    let total: usize = rr.multiplicities.iter().sum::<usize>() + rr.dim_centralizer;
    assert_eq!(total, m.dim_g(), "{spec}: root-space decomposition");
    let qs = is_quasisplit(&pair).unwrap();
    assert_eq!(qs.computed, qs.tabulated, "{spec}");
    assert!(dimension_identity_check(&pair).unwrap(), "{spec}: dim identity");
    let row = table_row(spec).unwrap();
    let t = &rr.base.type_label;
    assert!(
        t.is_alias_of(&row.restricted_type) || known_alias(spec, t).is_some(),
        "{spec}: computed {t}, table {}",
        row.restricted_type
    );
}

#[test]
fn sweep_models() {
    for spec in PairSpec::sweep(5) {
        check_model(&spec);
    }
}

#[test]
fn aiii_u22_example() {
    let pair = catalog_pair(&PairSpec::parse("AIII:group=GL,n=4,m=2").unwrap()).unwrap();
    assert_eq!(pair.rank_theta, 2);
    let rr = restricted_root_system(&pair).unwrap();
    assert_eq!(rr.base.type_label.to_string(), "C2");
    let mut roots: Vec<String> = rr.base.roots.iter().map(|r| format!("{:?}", r)).collect();
    roots.sort();
    assert_eq!(rr.base.len(), 8);
    assert!(rr.base.contains(&[q(2), q(0)]));
    assert!(rr.base.contains(&[q(1), q(-1)]));
    let m = pair.model().unwrap();
    assert_eq!(m.k_basis.len(), 8);
    assert_eq!(m.p_basis.len(), 8);
}

#[test]
fn bdi_split_is_d() {
    for k in 2..=4 {
        let pair = catalog_pair(&PairSpec::BDI { n: 2 * k, m: k }).unwrap();
        let rr = restricted_root_system(&pair).unwrap();
        assert!(rr.imaginary_stripped);
        assert_eq!(rr.base.type_label, TypeLabel::parse(&format!("D{k}")).unwrap());
        assert!(rr.multiplicities.iter().all(|&m| m == 1));
    }
}

#[test]
fn quasi_split_examples() {
    let qs = |s: &str| is_quasisplit(&catalog_pair(&PairSpec::parse(s).unwrap()).unwrap()).unwrap().computed;
    assert!(qs("AIII:group=SL,n=4,m=2"));
    assert!(!qs("AIII:group=SL,n=4,m=1"));
    assert!(!qs("DIII:n=4"));
    assert!(qs("DIAG:g=gl,n=2"));
}

#[test]
fn parse_errors() {
    assert!(PairSpec::parse("BOGUS:n=1").is_err());
    assert!(PairSpec::parse("AIII:group=GL,n=4,m=3").is_err());
    assert!(PairSpec::parse("AIII:group=GL,n=4").is_err());
    assert!(PairSpec::parse("AI:n=3,x=1").is_err());
    let s = PairSpec::parse("DIAG:g=gl,n=3").unwrap();
    assert_eq!(PairSpec::parse(&s.to_string()).unwrap(), s);
}

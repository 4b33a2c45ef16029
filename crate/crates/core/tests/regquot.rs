use symmpair_core::regquot::*;
use symmpair_core::rootsys::Flat;
use symmpair_core::sympair::{DiagKind, GroupKind, PairSpec};
use symmpair_core::Q;

fn spec(s: &str) -> PairSpec {
    s.parse().unwrap()
}

fn rq(s: &str) -> RegularQuotient {
    RegularQuotient::new(&spec(s)).unwrap()
}

fn kinds(d: &Descendant) -> Vec<FactorKind> {
    d.factors.iter().map(|f| f.kind.clone()).collect()
}

/// Flat whose vanishing set is exactly the roots killed by every listed point.
fn flat_through(r: &RegularQuotient, u: &[i64]) -> Flat {
    let u: Vec<Q> = u.iter().map(|&x| Q::from_integer(x.into())).collect();
    r.flat_at(&u).unwrap().clone()
}

#[test]
fn orbit_table() {
    let k = |s: &str| orbit_count_of_pair(&spec(s)).known().unwrap();
    for n in 1..=4 {
        assert_eq!(k(&format!("AIII:group=SL,n={},m={n}", 2 * n)), 2);
        assert_eq!(k(&format!("CI:n={n}")), 2);
        assert_eq!(k(&format!("BDI:n={},m={}", 4 * n, 2 * n)), 4);
        assert_eq!(k(&format!("DIAG:g=gl,n={n}")), 1);
        assert_eq!(k(&format!("AI:n={}", n + 1)), if (n + 1) % 2 == 0 { 2 } else { 1 });
    }
    assert_eq!(k("AIII:group=SL,n=5,m=2"), 1);
    assert_eq!(k("BDI:n=7,m=2"), 2);
    assert_eq!(k("BDI:n=7,m=3"), 1);
    assert_eq!(k("BDI:n=8,m=2"), 2);
    assert_eq!(k("BDI:n=8,m=3"), 1);
    assert_eq!(k("BDI:n=6,m=3"), 2);
    assert_eq!(k("BDI:n=3,m=1"), 2);
    assert_eq!(k("DIII:n=4"), 2);
    assert_eq!(k("DIII:n=3"), 1);
    assert_eq!(k("AII:n=3"), 1);
    assert_eq!(k("CII:n=4,m=2"), 1);
    assert_eq!(k("EXC:label=EVII"), 2);
    assert_eq!(k("EXC:label=EVIII"), 1);
    let t = FactorDescriptor { kind: FactorKind::Torus(3), provenance: vec![0, 1, 2] };
    assert_eq!(orbit_count(&t), Count::Known(1));
}

#[test]
fn descendant_examples() {
    let r = rq("AIII:group=GL,n=4,m=2");
    let d = r.descendant(&flat_through(&r, &[0, 1])).unwrap();
    assert_eq!(kinds(&d), vec![FactorKind::Pair(spec("AIII:group=GL,n=2,m=1")), FactorKind::Torus(1)]);
    let d = r.descendant(&flat_through(&r, &[2, 1])).unwrap();
    assert_eq!(kinds(&d), vec![FactorKind::Torus(2)]);

    let r = rq("AI:group=SL,n=4");
    let d = r.descendant(&flat_through(&r, &[1, 1, -1, -1])).unwrap();
    let gl2 = FactorKind::Pair(PairSpec::AI { group: GroupKind::GL, n: 2 });
    assert_eq!(kinds(&d), vec![gl2.clone(), gl2]);
    assert_eq!(d.coupling, Coupling::SDet);
    assert_eq!(r.sheet_count(&d), Count::Known(2));

    let r = rq("DIAG:g=gl,n=3");
    let d = r.descendant(&flat_through(&r, &[1, 1, 2])).unwrap();
    assert_eq!(kinds(&d), vec![FactorKind::Pair(PairSpec::DIAG { g: DiagKind::Gl, n: 2 }), FactorKind::Torus(1)]);
}

#[test]
fn unsupported_families() {
    for s in ["AII:n=2", "BDI:n=7,m=3", "DIII:n=4", "CII:n=4,m=2"] {
        assert!(matches!(RegularQuotient::new(&spec(s)), Err(symmpair_core::Error::UnsupportedFamily(_))), "{s}");
    }
}

#[test]
fn doubled_origin() {
    let p = gluing_pattern(&spec("AIII:group=GL,n=2,m=1")).unwrap();
    let counts: Vec<_> = p.strata.iter().map(|s| (s.codim, s.sheet_count)).collect();
    assert_eq!(counts, vec![(0, Count::Known(1)), (1, Count::Known(2))]);
    assert!(p.summary.contains("doubled origin"));
}

#[test]
fn odd_ai_is_git_quotient() {
    let p = gluing_pattern(&spec("AI:group=SL,n=3")).unwrap();
    assert!(p.strata.iter().all(|s| s.sheet_count == Count::Known(1)));
    assert!(p.glued_locus.is_empty());
}

const FAMILIES: [&str; 9] = [
    "AIII:group=GL,n=4,m=2",
    "AIII:group=SL,n=6,m=3",
    "AIII:group=GL,n=5,m=2",
    "AI:group=SL,n=4",
    "AI:group=SL,n=5",
    "CI:n=3",
    "BDI:n=8,m=4",
    "BDI:n=6,m=3",
    "DIAG:g=sp,n=2",
];

#[test]
fn stratum_invariants() {
    for s in FAMILIES {
        let r = rq(s);
        let p = r.gluing_pattern().unwrap();
        // orbit constancy, recomputed on every member of every orbit
        for f in &r.lattice.flats {
            let rep = p.strata.iter().find(|st| st.flat.canonical_form == f.canonical_form).unwrap();
            assert_eq!(r.sheets_of_flat(f).unwrap(), rep.sheet_count, "{s}");
        }
        let generic = &p.strata[0];
        assert_eq!(generic.codim, 0);
        assert_eq!(generic.sheet_count, Count::Known(1));
        let origin = p.strata.last().unwrap();
        assert_eq!(origin.flat.dim(), 0);
        assert_eq!(origin.sheet_count, orbit_count_of_pair(&spec(s)), "{s}");
        // ≥2 sheets exactly on the closure of the glued components
        let in_z = |f: &Flat| {
            r.lattice.flats.iter().any(|g| {
                r.sheets_of_flat(g).unwrap().known().unwrap() >= 2 && g.vanishing_roots.iter().all(|x| f.vanishing_roots.contains(x))
            })
        };
        for f in &r.lattice.flats {
            assert_eq!(r.sheets_of_flat(f).unwrap().known().unwrap() >= 2, in_z(f), "{s}");
        }
        // descendants with only single-orbit factors have one sheet
        for st in &p.strata {
            if st.descendant.factors.iter().all(|f| orbit_count(f) == Count::Known(1)) {
                assert_eq!(st.sheet_count, Count::Known(1), "{s}");
            }
        }
    }
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // label[i] = block of i, restricted growth strings
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            rec(i + 1, max.max(b), cur, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

#[test]
fn even_partition_locus() {
    for n in [2usize, 4, 6] {
        let r = rq(&format!("AI:group=SL,n={n}"));
        let even: Vec<Vec<usize>> = set_partitions(n)
            .into_iter()
            .filter(|lab| (0..n).all(|b| lab.iter().filter(|&&x| x == b).count() % 2 == 0))
            .collect();
        for f in &r.lattice.flats {
            let col = |i: usize| f.subspace_basis.iter().map(|b| b[i].clone()).collect::<Vec<_>>();
            let in_some_zs = even.iter().any(|lab| (0..n).all(|i| (0..n).all(|j| lab[i] != lab[j] || col(i) == col(j))));
            assert_eq!(r.sheets_of_flat(f).unwrap().known().unwrap() >= 2, in_some_zs, "n={n}");
        }
    }
}

use symmpair_core::field::{q, Q};
use symmpair_core::rootsys::*;

fn all_types() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for n in 1..=5 {
        v.push((Family::A, n));
        v.push((Family::B, n));
        v.push((Family::C, n));
        v.push((Family::BC, n));
        if n >= 2 {
            v.push((Family::D, n));
        }
    }
    v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    v
}

#[test]
fn root_counts_and_self_classification() {
    for (f, n) in all_types() {
        let rs = build_root_system(f, n).unwrap();
        let label = TypeLabel::single(f, n).unwrap();
        assert_eq!(rs.len(), label.root_count(), "{f:?}{n}");
        assert_eq!(rs.rank(), n, "{f:?}{n}");
        let c = classify_type(&rs.roots).unwrap();
        assert!(c == label || c.is_alias_of(&label), "{f:?}{n}: got {c}");
        // exact label where the realization fixes it
        if !(n == 1 && f != Family::BC) {
            assert_eq!(c, label, "{f:?}{n}");
        }
    }
}

#[test]
fn simple_root_expansion_has_constant_sign() {
    for (f, n) in all_types() {
        let rs = build_root_system(f, n).unwrap();
        for r in rs.reduced_roots() {
            let c = rs.simple_coordinates(r).unwrap();
            assert!(c.iter().all(|x| x.is_integer()));
            let nonneg = c.iter().all(|x| *x >= q(0));
            let nonpos = c.iter().all(|x| *x <= q(0));
            assert!(nonneg || nonpos, "{f:?}{n}");
        }
    }
}

#[test]
fn reduced_plus_doubles_is_everything() {
    let rs = build_root_system(Family::BC, 3).unwrap();
    let mut rebuilt: Vec<Vec<Q>> = rs.reduced_roots().cloned().collect();
    for r in rs.reduced_roots() {
        let d: Vec<Q> = r.iter().map(|x| x * q(2)).collect();
        if rs.contains(&d) {
            rebuilt.push(d);
        }
    }
    rebuilt.sort();
    assert_eq!(rebuilt, rs.roots);
    let bc1 = build_root_system(Family::BC, 1).unwrap();
    assert_eq!(bc1.len(), 4);
    assert_eq!(bc1.reduced.len(), 2);
}

#[test]
fn spec_classification_examples() {
    let a1 = vec![vec![q(1), q(-1)], vec![q(-1), q(1)]];
    assert_eq!(classify_type(&a1).unwrap().to_string(), "A1");
    let c2 = build_root_system(Family::C, 2).unwrap();
    assert_eq!(classify_type(&c2.roots).unwrap().to_string(), "C2");
    let d2 = build_root_system(Family::D, 2).unwrap();
    let t = classify_type(&d2.roots).unwrap();
    assert_eq!(t.to_string(), "D2");
    assert!(t.is_alias_of(&TypeLabel::parse("A1xA1").unwrap()));
    let d3 = build_root_system(Family::D, 3).unwrap();
    assert_eq!(d3.type_label.to_string(), "D3");
    let b2 = build_root_system(Family::B, 2).unwrap();
    assert_eq!(b2.type_label.to_string(), "B2");
}

#[test]
fn not_a_root_system() {
    let bad = vec![vec![q(1), q(0)], vec![q(-1), q(0)], vec![q(1), q(1)], vec![q(-1), q(-1)]];
    assert!(matches!(classify_type(&bad), Err(symmpair_core::Error::NotARootSystem(_))));
    let no_neg = vec![vec![q(1)]];
    assert!(classify_type(&no_neg).is_err());
}

#[test]
fn weyl_orders_by_enumeration() {
    for (f, n) in [(Family::C, 2), (Family::A, 2), (Family::D, 4), (Family::G, 2), (Family::F, 4), (Family::BC, 3), (Family::B, 3)] {
        let rs = build_root_system(f, n).unwrap();
        let wg = weyl_group(&rs, 1 << 20);
        assert_eq!(wg.elements.as_ref().unwrap().len() as u128, wg.order, "{f:?}{n}");
        for g in &wg.generators {
            assert_eq!(g.mul_ref(g), symmpair_core::Matrix::identity(rs.ambient_dim));
        }
    }
    let e8 = build_root_system(Family::E, 8).unwrap();
    let wg = weyl_group(&e8, 645_120);
    assert!(wg.elements.is_none());
    assert_eq!(wg.order, 696_729_600);
}

#[test]
fn flat_orbit_examples() {
    let c2 = build_root_system(Family::C, 2).unwrap();
    let wg = weyl_group(&c2, 1 << 20);
    let flats = enumerate_flats(&c2, &wg).unwrap();
    assert_eq!(flats.len(), 4);
    let types: Vec<String> = flats
        .iter()
        .map(|f| c2.subsystem(&f.vanishing_roots).map(|s| s.type_label.to_string()).unwrap_or_default())
        .collect();
    assert!(types.contains(&"trivial".to_string()));
    assert!(types.contains(&"C2".to_string()));
    assert_eq!(types.iter().filter(|t| *t == "A1").count(), 2);

    let a1 = build_root_system(Family::A, 1).unwrap();
    assert_eq!(enumerate_flats(&a1, &weyl_group(&a1, 100)).unwrap().len(), 2);

    let d2 = build_root_system(Family::D, 2).unwrap();
    assert_eq!(enumerate_flats(&d2, &weyl_group(&d2, 100)).unwrap().len(), 4);
}

#[test]
fn orbit_sizes_sum_to_brute_force_count() {
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 4), (Family::BC, 2), (Family::G, 2), (Family::B, 3)] {
        let rs = build_root_system(f, n).unwrap();
        let wg = weyl_group(&rs, 1 << 20);
        let lat = flat_lattice(&rs, &wg).unwrap();
        let total: usize = lat.representatives.iter().map(|&i| lat.flats[i].orbit_size).sum();
        assert_eq!(total, lat.flats.len());
        assert_eq!(total, brute_force_flat_count(&rs), "{f:?}{n}");
        assert!(lat.flats.iter().any(|f| f.dim() == 0));
        assert!(lat.flats.iter().any(|f| f.vanishing_roots.is_empty()));
    }
}

#[test]
fn canonical_form_is_weyl_invariant() {
    let rs = build_root_system(Family::B, 3).unwrap();
    let wg = weyl_group(&rs, 1 << 20);
    let lat = flat_lattice(&rs, &wg).unwrap();
    for f in &lat.flats {
        for w in wg.elements.as_ref().unwrap() {
            let mut img: Vec<usize> = f.vanishing_roots.iter().map(|&i| w[i] as usize).collect();
            img.sort();
            let g = &lat.flats[lat.find(&img).unwrap()];
            assert_eq!(g.canonical_form, f.canonical_form);
        }
    }
}

use super::weyl::{limit_for_rank_guard, require_elements, Perm, WeylGroup};
use super::{dot, QVec, RootSystem};
use crate::error::Result;
use crate::field::{q, Ring};
use crate::matrix::{span_basis, Matrix};
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

/// An intersection of root hyperplanes inside the span of the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub subspace_basis: Vec<QVec>,
    /// Sorted indices of the roots vanishing on the flat.
    pub vanishing_roots: Vec<usize>,
    /// Lexicographically least image of `vanishing_roots` under the Weyl group.
    pub canonical_form: Vec<usize>,
    pub orbit_size: usize,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.subspace_basis.len()
    }
}

/// Every flat of the arrangement together with its orbit representatives.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub flats: Vec<Flat>,
    /// Indices into `flats` of one flat per orbit (the one whose vanishing set
    /// is the canonical form), sorted by codimension then canonical form.
    pub representatives: Vec<usize>,
    pub rank: usize,
}

impl FlatLattice {
    pub fn representative_flats(&self) -> Vec<Flat> {
        self.representatives.iter().map(|&i| self.flats[i].clone()).collect()
    }

    pub fn codim(&self, f: &Flat) -> usize {
        self.rank - f.dim()
    }

    /// Index of the flat with the given vanishing set.
    pub fn find(&self, vanishing: &[usize]) -> Option<usize> {
        self.flats.iter().position(|f| f.vanishing_roots == vanishing)
    }
}

/// Basis of `span(roots) ∩ S^⊥`.
pub fn flat_of(rs: &RootSystem, span: &[QVec], s: &[usize]) -> Vec<QVec> {
    if s.is_empty() {
        return span.to_vec();
    }
    let m = Matrix::from_fn(s.len(), span.len(), |i, j| dot(&rs.roots[s[i]], &span[j]));
    let ns = m.nullspace();
    let vecs: Vec<QVec> = ns
        .iter()
        .map(|c| {
            (0..rs.ambient_dim)
                .map(|k| c.iter().zip(span).fold(q(0), |acc, (cj, b)| acc + cj * &b[k]))
                .collect()
        })
        .collect();
    span_basis(&vecs)
}

pub fn vanishing_set(rs: &RootSystem, basis: &[QVec]) -> Vec<usize> {
    (0..rs.len()).filter(|&i| basis.iter().all(|b| dot(&rs.roots[i], b).is_zero())).collect()
}

fn image(w: &Perm, s: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|&i| w[i] as usize).collect();
    v.sort();
    v
}

/// Intersection lattice of the reflection arrangement with Weyl orbits.
pub fn flat_lattice(rs: &RootSystem, wg: &WeylGroup) -> Result<FlatLattice> {
    let elements = require_elements(wg, limit_for_rank_guard(super::DEFAULT_RANK_GUARD))?;
    let span = rs.span_basis();
    let positive: Vec<usize> = rs.positive_roots().map(|(i, _)| i).collect();
    let mut by_set: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut flats: Vec<Flat> = Vec::new();
    let mut queue = VecDeque::new();
    let top = Flat { subspace_basis: span.clone(), vanishing_roots: Vec::new(), canonical_form: Vec::new(), orbit_size: 0 };
    by_set.insert(Vec::new(), 0);
    flats.push(top);
    queue.push_back(0);
    while let Some(fi) = queue.pop_front() {
        let s = flats[fi].vanishing_roots.clone();
        for &a in &positive {
            if s.binary_search(&a).is_ok() {
                continue;
            }
            let mut s2 = s.clone();
            s2.push(a);
            let basis = flat_of(rs, &span, &s2);
            let van = vanishing_set(rs, &basis);
            if by_set.contains_key(&van) {
                continue;
            }
            by_set.insert(van.clone(), flats.len());
            flats.push(Flat { subspace_basis: basis, vanishing_roots: van, canonical_form: Vec::new(), orbit_size: 0 });
            queue.push_back(flats.len() - 1);
        }
    }
    let mut assigned = alloc::vec![false; flats.len()];
    let mut representatives = Vec::new();
    for fi in 0..flats.len() {
        if assigned[fi] {
            continue;
        }
        let s = flats[fi].vanishing_roots.clone();
        let orbit: BTreeSet<Vec<usize>> = elements.iter().map(|w| image(w, &s)).collect();
        let canon = orbit.iter().next().unwrap().clone();
        for member in &orbit {
            let idx = by_set[member];
            assigned[idx] = true;
            flats[idx].canonical_form = canon.clone();
            flats[idx].orbit_size = orbit.len();
        }
        representatives.push(by_set[&canon]);
    }
    let rank = span.len();
    representatives.sort_by(|&a, &b| {
        let (fa, fb) = (&flats[a], &flats[b]);
        (rank - fa.dim(), &fa.canonical_form).cmp(&(rank - fb.dim(), &fb.canonical_form))
    });
    Ok(FlatLattice { flats, representatives, rank })
}

/// One flat per Weyl orbit, sorted by codimension then canonical form.
pub fn enumerate_flats(rs: &RootSystem, wg: &WeylGroup) -> Result<Vec<Flat>> {
    Ok(flat_lattice(rs, wg)?.representative_flats())
}

/// A point of the flat on which no root outside its vanishing set vanishes.
pub fn generic_point(rs: &RootSystem, flat: &Flat) -> QVec {
    let dim = rs.ambient_dim;
    for attempt in 0i64.. {
        let coeffs: Vec<i64> = (0..flat.dim() as i64).map(|j| 1 + (j + 1) * (7 + attempt) + j * j * (13 + 3 * attempt)).collect();
        let x: QVec = (0..dim)
            .map(|k| flat.subspace_basis.iter().zip(&coeffs).fold(q(0), |acc, (b, &c)| acc + &b[k] * q(c)))
            .collect();
        let van: Vec<usize> = (0..rs.len()).filter(|&i| dot(&rs.roots[i], &x).is_zero()).collect();
        if van == flat.vanishing_roots {
            return x;
        }
    }
    unreachable!()
}

/// Number of distinct flats obtained by intersecting every subset of the
/// hyperplanes of positive reduced roots. Exponential; for small oracles.
pub fn brute_force_flat_count(rs: &RootSystem) -> usize {
    let span = rs.span_basis();
    let hyper: Vec<usize> = rs.reduced.iter().copied().filter(|&i| super::is_positive(&rs.roots[i])).collect();
    assert!(hyper.len() <= 20, "brute force is for small arrangements");
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u32..(1 << hyper.len()) {
        let s: Vec<usize> = (0..hyper.len()).filter(|b| mask >> b & 1 == 1).map(|b| hyper[b]).collect();
        let basis = flat_of(rs, &span, &s);
        seen.insert(vanishing_set(rs, &basis));
    }
    seen.len()
}

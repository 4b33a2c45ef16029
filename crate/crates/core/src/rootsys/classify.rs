use super::types::{Component, Family, TypeLabel};
use super::{dot, vscale, QVec, RootSystem};
use crate::error::Result;
use crate::field::{q, Ring, Q};
use crate::matrix::rank_of;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

/// Type of a finite set of roots, with BC detected from `α, 2α` pairs and the
/// low-rank coincidences `B2/C2`, `D2`, `D3` resolved from the coordinates.
pub fn classify_type(roots: &[QVec]) -> Result<TypeLabel> {
    let Some(first) = roots.first() else {
        return Ok(TypeLabel::default());
    };
    Ok(RootSystem::from_roots(first.len(), roots.to_vec())?.type_label)
}

fn in_span(basis: &[QVec], v: &QVec) -> bool {
    let mut with = basis.to_vec();
    with.push(v.clone());
    rank_of(&with) == basis.len()
}

/// Roots of the form `±c e_i ± c e_j` over a support set, all present.
fn is_d_pattern(roots: &[&QVec]) -> bool {
    let mut c: Option<Q> = None;
    let mut support = BTreeSet::new();
    for r in roots {
        let nz: Vec<(usize, &Q)> = r.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        if nz.len() != 2 {
            return false;
        }
        let a = nz[0].1.abs_val();
        if a != nz[1].1.abs_val() || c.as_ref().is_some_and(|c| *c != a) {
            return false;
        }
        c = Some(a);
        support.insert(nz[0].0);
        support.insert(nz[1].0);
    }
    let t = support.len();
    t >= 2 && roots.len() == 2 * t * (t - 1)
}

trait AbsVal {
    fn abs_val(&self) -> Q;
}

impl AbsVal for Q {
    fn abs_val(&self) -> Q {
        if *self < q(0) {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

fn dynkin(simple: &[QVec], comp_roots: &[&QVec]) -> Component {
    let k = simple.len();
    let norm: Vec<Q> = simple.iter().map(|s| dot(s, s)).collect();
    let mut bond = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let d = dot(&simple[i], &simple[j]);
                let p = q(4) * &d * &d / (&norm[i] * &norm[j]);
                bond[i][j] = p.to_integer().try_into().unwrap_or(0);
            }
        }
    }
    let degree: Vec<usize> = (0..k).map(|i| bond[i].iter().filter(|&&b| b > 0).count()).collect();
    let max_bond = bond.iter().flatten().copied().max().unwrap_or(0);
    let comp = |f, r| Component { family: f, rank: r };
    if k == 1 {
        return comp(Family::A, 1);
    }
    if max_bond == 3 {
        return comp(Family::G, 2);
    }
    if max_bond == 2 {
        let max_norm = norm.iter().max().unwrap().clone();
        if k == 2 {
            let long_on_axes = comp_roots
                .iter()
                .filter(|r| dot(r, r) == max_norm)
                .all(|r| r.iter().filter(|x| !x.is_zero()).count() == 1);
            return comp(if long_on_axes { Family::C } else { Family::B }, 2);
        }
        let (i, j) = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .find(|&(i, j)| bond[i][j] == 2)
            .unwrap();
        if degree[i] == 1 || degree[j] == 1 {
            let short = norm.iter().filter(|n| **n != max_norm).count();
            return comp(if short == 1 { Family::B } else { Family::C }, k);
        }
        return comp(Family::F, 4);
    }
    match (0..k).find(|&i| degree[i] == 3) {
        None => {
            if k == 3 && is_d_pattern(comp_roots) {
                comp(Family::D, 3)
            } else {
                comp(Family::A, k)
            }
        }
        Some(center) => {
            let mut arms = Vec::new();
            for start in (0..k).filter(|&j| bond[center][j] > 0) {
                let (mut prev, mut cur, mut len) = (center, start, 1);
                loop {
                    let next = (0..k).find(|&x| x != prev && bond[cur][x] > 0);
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            match arms[..] {
                [1, 1, _] => comp(Family::D, k),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => comp(Family::E, k),
                _ => comp(Family::A, k),
            }
        }
    }
}

pub(super) fn label(roots: &[QVec], simple: &[QVec], index: &BTreeMap<QVec, usize>) -> TypeLabel {
    let k = simple.len();
    // connected components of the simple roots
    let mut comp_id: Vec<usize> = (0..k).collect();
    let find = |ids: &Vec<usize>, mut x: usize| {
        while ids[x] != x {
            x = ids[x];
        }
        x
    };
    for i in 0..k {
        for j in i + 1..k {
            if !dot(&simple[i], &simple[j]).is_zero() {
                let (a, b) = (find(&comp_id, i), find(&comp_id, j));
                comp_id[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<QVec>> = BTreeMap::new();
    for i in 0..k {
        groups.entry(find(&comp_id, i)).or_default().push(simple[i].clone());
    }
    let half = crate::field::qq(1, 2);
    let mut comps = Vec::new();
    let mut a1_roots: Vec<Vec<&QVec>> = Vec::new();
    for (_, s) in groups {
        let all: Vec<&QVec> = roots.iter().filter(|r| in_span(&s, r)).collect();
        let red: Vec<&QVec> = all.iter().copied().filter(|r| !index.contains_key(&vscale(r, &half))).collect();
        let mut c = dynkin(&s, &red);
        if all.len() != red.len() {
            c = Component { family: Family::BC, rank: c.rank };
        } else if c.family == Family::A && c.rank == 1 {
            a1_roots.push(red.clone());
            continue;
        }
        comps.push(c);
    }
    // pair up A1 factors that together form a D2 pattern
    let mut used = vec![false; a1_roots.len()];
    for i in 0..a1_roots.len() {
        if used[i] {
            continue;
        }
        let partner = (i + 1..a1_roots.len()).find(|&j| {
            !used[j] && {
                let mut u = a1_roots[i].clone();
                u.extend(a1_roots[j].iter().copied());
                is_d_pattern(&u)
            }
        });
        used[i] = true;
        match partner {
            Some(j) => {
                used[j] = true;
                comps.push(Component { family: Family::D, rank: 2 });
            }
            None => comps.push(Component { family: Family::A, rank: 1 }),
        }
    }
    TypeLabel::new(comps)
}

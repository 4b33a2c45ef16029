use super::types::{Component, Family, TypeLabel};
use super::{QVec, RootSystem};
use crate::error::Result;
use crate::field::{q, qq, Q};
use alloc::vec;
use alloc::vec::Vec;

fn e(n: usize, i: usize, c: i64) -> QVec {
    let mut v = vec![q(0); n];
    v[i] = q(c);
    v
}

fn pm_pairs(n: usize, out: &mut Vec<QVec>) {
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = e(n, i, si);
                v[j] = q(sj);
                out.push(v);
            }
        }
    }
}

/// Vectors `½(±1,…,±1)` in dimension `n`, filtered by the parity of minus signs.
fn half_spin(n: usize, parity: Option<usize>) -> Vec<QVec> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if parity.is_some_and(|p| mask.count_ones() as usize % 2 != p) {
            continue;
        }
        out.push((0..n).map(|i| if mask >> i & 1 == 1 { qq(-1, 2) } else { qq(1, 2) }).collect());
    }
    out
}

fn e8_roots() -> Vec<QVec> {
    let mut r = Vec::new();
    pm_pairs(8, &mut r);
    r.extend(half_spin(8, Some(0)));
    r
}

fn irreducible_roots(c: Component) -> (usize, Vec<QVec>) {
    let n = c.rank;
    let mut r = Vec::new();
    match c.family {
        Family::A => {
            for i in 0..=n {
                for j in 0..=n {
                    if i != j {
                        let mut v = e(n + 1, i, 1);
                        v[j] = q(-1);
                        r.push(v);
                    }
                }
            }
            (n + 1, r)
        }
        Family::B | Family::C | Family::BC | Family::D => {
            pm_pairs(n, &mut r);
            for i in 0..n {
                for s in [1, -1] {
                    match c.family {
                        Family::B => r.push(e(n, i, s)),
                        Family::C => r.push(e(n, i, 2 * s)),
                        Family::BC => {
                            r.push(e(n, i, s));
                            r.push(e(n, i, 2 * s));
                        }
                        _ => {}
                    }
                }
            }
            (n, r)
        }
        Family::G => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = e(3, i, 1);
                        v[j] = q(-1);
                        r.push(v);
                    }
                }
                for s in [1, -1] {
                    let v: QVec = (0..3).map(|k| q(if k == i { 2 * s } else { -s })).collect();
                    r.push(v);
                }
            }
            (3, r)
        }
        Family::F => {
            pm_pairs(4, &mut r);
            for i in 0..4 {
                r.push(e(4, i, 1));
                r.push(e(4, i, -1));
            }
            r.extend(half_spin(4, None));
            (4, r)
        }
        Family::E => {
            let all = e8_roots();
            let mut constraints: Vec<QVec> = Vec::new();
            if n <= 7 {
                let mut v = e(8, 6, 1);
                v[7] = q(1);
                constraints.push(v);
            }
            if n == 6 {
                let mut v = e(8, 5, 1);
                v[6] = q(-1);
                constraints.push(v);
            }
            let r = all
                .into_iter()
                .filter(|a| constraints.iter().all(|c| super::dot(a, c) == q(0)))
                .collect();
            (8, r)
        }
    }
}

/// Standard realization of an irreducible type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let c = Component::new(family, rank)?;
    let (dim, roots) = irreducible_roots(c);
    RootSystem::from_roots(dim, roots)
}

/// Realization of a product type on the direct sum of the factors' spaces.
pub fn build_from_label(label: &TypeLabel) -> Result<RootSystem> {
    let parts: Vec<(usize, Vec<QVec>)> = label.0.iter().map(|&c| irreducible_roots(c)).collect();
    let dim: usize = parts.iter().map(|p| p.0).sum();
    let mut roots = Vec::new();
    let mut offset = 0;
    for (d, rs) in parts {
        for r in rs {
            let mut v: Vec<Q> = vec![q(0); dim];
            v[offset..offset + d].clone_from_slice(&r);
            roots.push(v);
        }
        offset += d;
    }
    RootSystem::from_roots(dim, roots)
}

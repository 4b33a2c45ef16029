use super::{reflect, RootSystem};
use crate::error::{Error, Result};
use crate::field::{q, Q};
use crate::matrix::Matrix;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Default rank guard: full enumeration up to order `2^7 · 7!`.
pub const DEFAULT_RANK_GUARD: usize = 7;

/// Order limit corresponding to a rank guard `r`: `2^r · r!`.
pub fn limit_for_rank_guard(r: usize) -> u128 {
    (1u128 << r) * (1..=r as u128).product::<u128>()
}

pub type Perm = Vec<u32>;

#[derive(Clone, Debug)]
pub struct WeylGroup {
    /// Simple reflections as matrices on the ambient space.
    pub generators: Vec<Matrix<Q>>,
    /// Simple reflections as permutations of root indices.
    pub generator_perms: Vec<Perm>,
    pub order: u128,
    pub elements: Option<Vec<Perm>>,
}

fn reflection_matrix(alpha: &[Q]) -> Matrix<Q> {
    let n = alpha.len();
    let aa = super::dot(alpha, alpha);
    Matrix::from_fn(n, n, |i, j| {
        let d = if i == j { q(1) } else { q(0) };
        d - q(2) * &alpha[i] * &alpha[j] / &aa
    })
}

fn perm_of(rs: &RootSystem, alpha: &[Q]) -> Perm {
    rs.roots
        .iter()
        .map(|b| rs.index_of(&reflect(alpha, b)).expect("reflection closure") as u32)
        .collect()
}

/// Compose: `(a ∘ b)(i) = a[b[i]]`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Little Weyl group generated by the simple reflections; elements are
/// enumerated by closure iff the classical order is at most `enumerate_limit`.
pub fn weyl_group(rs: &RootSystem, enumerate_limit: u128) -> WeylGroup {
    let generators: Vec<Matrix<Q>> = rs.simple_roots.iter().map(|a| reflection_matrix(a)).collect();
    let generator_perms: Vec<Perm> = rs.simple_roots.iter().map(|a| perm_of(rs, a)).collect();
    let order = rs.type_label.weyl_order();
    let elements = (order <= enumerate_limit).then(|| close(&generator_perms, rs.len()));
    WeylGroup { generators, generator_perms, order, elements }
}

fn close(gens: &[Perm], n: usize) -> Vec<Perm> {
    let id: Perm = (0..n as u32).collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    seen.insert(id.clone());
    let mut out = alloc::vec![id];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let next = compose(g, &cur);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// Fetch the element list, or report the guard that blocked enumeration.
pub fn require_elements(wg: &WeylGroup, limit: u128) -> Result<&[Perm]> {
    wg.elements.as_deref().ok_or(Error::EnumerationLimitExceeded { order: wg.order, limit })
}

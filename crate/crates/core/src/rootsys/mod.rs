//! Root systems as exact rational vectors, their Weyl groups and the
//! intersection lattice of the reflection arrangement.

mod build;
mod classify;
mod flats;
mod types;
mod weyl;

pub use build::{build_root_system, build_from_label};
pub use classify::classify_type;
pub use flats::{brute_force_flat_count, enumerate_flats, flat_lattice, generic_point, vanishing_set, Flat, FlatLattice};
pub use types::{Component, Family, TypeLabel};
pub use weyl::{compose, limit_for_rank_guard, weyl_group, Perm, WeylGroup, DEFAULT_RANK_GUARD};

use crate::error::{Error, Result};
use crate::field::{q, Ring, Q};
use crate::matrix::{rank_of, span_basis};
use alloc::string::ToString;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

pub type QVec = Vec<Q>;

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(q(0), |acc, (x, y)| acc + x * y)
}

pub fn vscale(a: &[Q], c: &Q) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn vsub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vadd(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vneg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Lexicographically positive: first nonzero coordinate is positive.
pub fn is_positive(a: &[Q]) -> bool {
    a.iter().find(|x| !x.is_zero()).is_some_and(|x| *x > q(0))
}

/// `s_α(β) = β − 2(α,β)/(α,α) α`.
pub fn reflect(alpha: &[Q], beta: &[Q]) -> QVec {
    let c = dot(alpha, beta) * q(2) / dot(alpha, alpha);
    vsub(beta, &vscale(alpha, &c))
}

/// A (possibly nonreduced) root system with roots sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub ambient_dim: usize,
    pub roots: Vec<QVec>,
    pub simple_roots: Vec<QVec>,
    pub type_label: TypeLabel,
    /// Indices into `roots` of the reduced subsystem.
    pub reduced: Vec<usize>,
    index: BTreeMap<QVec, usize>,
}

impl RootSystem {
    /// Validate and classify an arbitrary finite set of roots.
    pub fn from_roots(ambient_dim: usize, roots: Vec<QVec>) -> Result<Self> {
        let mut roots = roots;
        roots.sort();
        roots.dedup();
        if roots.iter().any(|r| r.len() != ambient_dim) {
            return Err(Error::NotARootSystem(format!("vector length differs from {ambient_dim}")));
        }
        let index: BTreeMap<QVec, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        validate(&roots, &index)?;
        let reduced: Vec<usize> = (0..roots.len())
            .filter(|&i| !index.contains_key(&vscale(&roots[i], &crate::field::qq(1, 2))))
            .collect();
        let simple_roots = simple_roots_of(&roots, &reduced, &index);
        let type_label = classify::label(&roots, &simple_roots, &index);
        Ok(RootSystem { ambient_dim, roots, simple_roots, type_label, reduced, index })
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.index.contains_key(v)
    }

    pub fn reduced_roots(&self) -> impl Iterator<Item = &QVec> {
        self.reduced.iter().map(|&i| &self.roots[i])
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &QVec)> {
        self.roots.iter().enumerate().filter(|(_, r)| is_positive(r))
    }

    /// Basis of the span of the roots, in reduced row-echelon form.
    pub fn span_basis(&self) -> Vec<QVec> {
        span_basis(&self.roots)
    }

    /// Coefficients of `v` in the simple roots, if `v` is in their span.
    pub fn simple_coordinates(&self, v: &[Q]) -> Option<QVec> {
        let cols = self.simple_roots.len();
        let m = crate::matrix::Matrix::from_fn(self.ambient_dim, cols, |i, j| self.simple_roots[j][i].clone());
        m.solve(v)
    }

    /// Root-subsystem generated by the given indices, in the same ambient space.
    pub fn subsystem(&self, idx: &[usize]) -> Result<RootSystem> {
        RootSystem::from_roots(self.ambient_dim, idx.iter().map(|&i| self.roots[i].clone()).collect())
    }
}

fn validate(roots: &[QVec], index: &BTreeMap<QVec, usize>) -> Result<()> {
    for a in roots {
        if is_zero_vec(a) {
            return Err(Error::NotARootSystem("zero vector".to_string()));
        }
        if !index.contains_key(&vneg(a)) {
            return Err(Error::NotARootSystem("not closed under negation".to_string()));
        }
    }
    for a in roots {
        let aa = dot(a, a);
        for b in roots {
            let c = dot(a, b) * q(2) / &aa;
            if !c.is_integer() {
                return Err(Error::NotARootSystem("non-integral Cartan number".to_string()));
            }
            if !index.contains_key(&vsub(b, &vscale(a, &c))) {
                return Err(Error::NotARootSystem("not closed under reflections".to_string()));
            }
            if rank_of(&[a.clone(), b.clone()]) == 1 {
                let r = dot(a, b) / &aa;
                let ok = [q(1), q(-1), q(2), q(-2), crate::field::qq(1, 2), crate::field::qq(-1, 2)].contains(&r);
                if !ok {
                    return Err(Error::NotARootSystem("proportional roots with bad ratio".to_string()));
                }
            }
        }
    }
    Ok(())
}

fn simple_roots_of(roots: &[QVec], reduced: &[usize], index: &BTreeMap<QVec, usize>) -> Vec<QVec> {
    let pos: Vec<&QVec> = reduced.iter().map(|&i| &roots[i]).filter(|r| is_positive(r)).collect();
    let mut simple = Vec::new();
    for a in &pos {
        let decomposable = pos.iter().any(|b| {
            let d = vsub(a, b);
            is_positive(&d) && index.contains_key(&d) && pos.iter().any(|c| **c == d)
        });
        if !decomposable {
            simple.push((*a).clone());
        }
    }
    simple
}

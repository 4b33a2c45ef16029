//! Restricted roots by simultaneous diagonalization of the θ-Cartan.

use super::model::{MatrixModel, M};
use crate::error::{Error, Result};
use crate::field::{q, Qi, Ring, Q};
use crate::matrix::Matrix;
use crate::poly::gaussian_axis_roots;
use crate::rootsys::{weyl_group, QVec, RootSystem, WeylGroup};
use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    pub base: RootSystem,
    /// Multiplicity of `base.roots[i]`.
    pub multiplicities: Vec<usize>,
    /// Number of roots of `g` restricting to zero on `a`.
    pub zero_fiber_size: usize,
    pub dim_centralizer: usize,
    /// The characters came out purely imaginary and the unit was divided out.
    pub imaginary_stripped: bool,
    pub little_weyl: WeylGroup,
}

impl RestrictedRootSystem {
    pub fn multiplicity(&self, root: &[Q]) -> Option<usize> {
        self.base.index_of(root).map(|i| self.multiplicities[i])
    }
}

/// Split each subspace (columns of a basis) into eigenspaces of `h`, whose
/// eigenvalues must lie on the real or imaginary axis.
fn refine(h: &M, spaces: Vec<Vec<Vec<Qi>>>) -> Option<Vec<Vec<Vec<Qi>>>> {
    let n = h.rows();
    let mut out = Vec::new();
    for basis in spaces {
        let d = basis.len();
        let u = Matrix::from_fn(n, d, |i, j| basis[j][i].clone());
        let hu = h.mul_ref(&u);
        // coordinates of h·u_j in the basis u
        let mut a = M::zeros(d, d);
        for j in 0..d {
            let c = u.solve(&hu.col(j))?;
            for i in 0..d {
                a[(i, j)] = c[i].clone();
            }
        }
        let cp = a.charpoly().squarefree_part();
        let mut found = 0;
        for lam in gaussian_axis_roots(&cp) {
            let ns = a.sub_ref(&M::identity(d).scale(&lam)).nullspace();
            found += ns.len();
            let vecs: Vec<Vec<Qi>> = ns
                .iter()
                .map(|c| (0..n).map(|i| (0..d).fold(Qi::zero(), |acc, j| acc + u[(i, j)].clone() * c[j].clone())).collect())
                .collect();
            out.push(vecs);
        }
        if found != d {
            return None;
        }
    }
    Some(out)
}

/// Joint eigenbasis of the Cartan elements: `(W, V, λ)` with `λ[p][j]` the
/// eigenvalue of `cartan[j]` on the `p`-th basis vector.
pub fn joint_eigenbasis(model: &MatrixModel) -> Result<(M, M, Vec<Vec<Qi>>)> {
    let n = model.size;
    let fail = || Error::TableModelMismatch("Cartan elements not simultaneously diagonalizable over Q(i)".to_string());
    let identity: Vec<Vec<Qi>> = (0..n).map(|j| M::identity(n).col(j)).collect();
    let mut spaces = alloc::vec![identity];
    for h in &model.cartan {
        spaces = refine(h, spaces).ok_or_else(fail)?;
    }
    let cols: Vec<Vec<Qi>> = spaces.into_iter().flatten().collect();
    let v = Matrix::from_fn(n, n, |i, j| cols[j][i].clone());
    let w = v.inverse().ok_or_else(fail)?;
    let diags: Vec<M> = model.cartan.iter().map(|c| w.mul_ref(c).mul_ref(&v)).collect();
    let lambda = (0..n).map(|p| diags.iter().map(|d| d[(p, p)].clone()).collect()).collect();
    Ok((w, v, lambda))
}

pub fn restricted_root_system(model: &MatrixModel, enumerate_limit: u128) -> Result<RestrictedRootSystem> {
    let n = model.size;
    let (w, v, lambda) = joint_eigenbasis(model)?;
    let conj: Vec<M> = model.g_basis.iter().map(|b| w.mul_ref(b).mul_ref(&v)).collect();
    // entries grouped by character
    let mut by_char: BTreeMap<Vec<Qi>, Vec<(usize, usize)>> = BTreeMap::new();
    for p in 0..n {
        for qq in 0..n {
            let chi: Vec<Qi> = lambda[p].iter().zip(&lambda[qq]).map(|(a, b)| a.clone() - b.clone()).collect();
            by_char.entry(chi).or_default().push((p, qq));
        }
    }
    let mut mults: BTreeMap<Vec<Qi>, usize> = BTreeMap::new();
    for (chi, entries) in &by_char {
        let rows: Vec<Vec<Qi>> = conj.iter().map(|b| entries.iter().map(|&(p, qq)| b[(p, qq)].clone()).collect()).collect();
        let rank = Matrix::from_rows(rows).rank();
        if rank > 0 {
            mults.insert(chi.clone(), rank);
        }
    }
    let zero: Vec<Qi> = alloc::vec![Qi::zero(); model.cartan.len()];
    let dim_centralizer = mults.remove(&zero).unwrap_or(0);
    let imaginary = mults.keys().flatten().any(|z| !z.is_real());
    if imaginary && !mults.keys().flatten().all(|z| z.is_imaginary()) {
        return Err(Error::TableModelMismatch("mixed real and imaginary characters".to_string()));
    }
    // u = P (PᵀP)⁻¹ χ
    let r = model.coords.len();
    let d = model.coords.first().map_or(0, |c| c.len());
    let p = Matrix::from_fn(d, r, |i, j| model.coords[j][i].clone());
    let gram_inv = p.transpose().mul_ref(&p).inverse().expect("coordinate columns independent");
    let lift = p.mul_ref(&gram_inv);
    let mut roots: Vec<QVec> = Vec::new();
    let mut mult_by_root: BTreeMap<QVec, usize> = BTreeMap::new();
    for (chi, m) in &mults {
        let real: Vec<Q> = chi.iter().map(|z| if imaginary { z.im.clone() } else { z.re.clone() }).collect();
        let u: QVec = (0..d).map(|i| (0..r).fold(q(0), |acc, j| acc + &lift[(i, j)] * &real[j])).collect();
        *mult_by_root.entry(u.clone()).or_default() += m;
        roots.push(u);
    }
    let base = RootSystem::from_roots(d, roots)?;
    let multiplicities = base.roots.iter().map(|r| mult_by_root[r]).collect();
    let little_weyl = weyl_group(&base, enumerate_limit);
    let zero_fiber_size = dim_centralizer - model.rank_g;
    Ok(RestrictedRootSystem { base, multiplicities, zero_fiber_size, dim_centralizer, imaginary_stripped: imaginary, little_weyl })
}


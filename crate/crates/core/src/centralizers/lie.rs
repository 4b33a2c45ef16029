use crate::error::{Error, Result};
use crate::sympair::{MatrixModel, M};
use alloc::vec::Vec;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ambient {
    G,
    H,
}

/// Basis of `{y ∈ ambient : [y, x] = 0}` for `x ∈ p`.
pub fn lie_centralizer(model: &MatrixModel, x: &M, ambient: Ambient) -> Result<Vec<M>> {
    if !model.in_p(x) {
        return Err(Error::NotInP);
    }
    let basis = match ambient {
        Ambient::G => &model.g_basis,
        Ambient::H => &model.k_basis,
    };
    Ok(model.centralizer_in(basis, core::slice::from_ref(x)))
}

/// True when all pairwise brackets of the basis vanish.
pub fn is_abelian(basis: &[M]) -> bool {
    basis.iter().enumerate().all(|(i, a)| basis[i + 1..].iter().all(|b| a.bracket(b).is_zero()))
}

/// First pair of basis elements with nonzero bracket.
pub fn nonabelian_witness(basis: &[M]) -> Option<(M, M)> {
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !a.bracket(b).is_zero() {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// `dim a + dim c_k(a)`, the centralizer dimension of a regular element.
pub fn regular_centralizer_dim(model: &MatrixModel) -> usize {
    model.rank_theta() + model.centralizer_of_cartan_in_k().len()
}

/// Regularity by the dimension criterion `dim z_g(x) = dim a + dim c_k(a)`.
pub fn is_regular(model: &MatrixModel, x: &M) -> Result<bool> {
    let z = lie_centralizer(model, x, Ambient::G)?;
    Ok(z.len() == regular_centralizer_dim(model))
}

/// As [`is_regular`] with the right-hand side precomputed.
pub fn is_regular_with(model: &MatrixModel, x: &M, regular_dim: usize) -> Result<bool> {
    Ok(lie_centralizer(model, x, Ambient::G)?.len() == regular_dim)
}

use super::lie::{is_regular, lie_centralizer, nonabelian_witness, Ambient};
use crate::error::Result;
use crate::field::{Qi, Ring};
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::sympair::{DiagKind, GroupKind, PairSpec, SymmetricPair, M};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInfo {
    pub dim: usize,
    pub component_count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerReport {
    pub dim_in_g: usize,
    pub dim_in_h: usize,
    pub is_abelian_in_h: bool,
    pub group_info: Option<GroupInfo>,
    /// Why `group_info` is absent.
    pub unresolved: Option<String>,
    /// The commutation system after solving its linear part.
    pub oracle: Option<CommutationSystem>,
}

/// `H_x` written as `{Σ t_i B_i : det = 1}` (or `det ≠ 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationSystem {
    pub basis: Vec<M>,
    pub det: MPoly<Qi>,
    pub special: bool,
}

/// Linear hull of `H` inside matrices, as a parametrization `X ↦ embed(X)`
/// of block size `block`, for the families where `H` is cut out of a
/// linear space by a single determinant condition.
struct Hull {
    block: usize,
    special: bool,
    embed: fn(&M, usize) -> M,
    /// Only the entries of the diagonal blocks of the AIII hull are free.
    mask: Option<M>,
}

fn embed_identity(x: &M, _: usize) -> M {
    x.clone()
}

fn embed_diagonal(x: &M, _: usize) -> M {
    M::block_diag(&[x.clone(), x.clone()])
}

fn hull_of(spec: &PairSpec) -> Option<Hull> {
    match *spec {
        PairSpec::AIII { group, n, m } => {
            let s = crate::sympair::i_mn(m, n);
            let mask = Matrix::from_fn(n, n, |i, j| if s[(i, i)] == s[(j, j)] { Qi::one() } else { Qi::zero() });
            Some(Hull { block: n, special: group == GroupKind::SL, embed: embed_identity, mask: Some(mask) })
        }
        PairSpec::DIAG { g: DiagKind::Gl, n } => Some(Hull { block: n, special: false, embed: embed_diagonal, mask: None }),
        PairSpec::DIAG { g: DiagKind::Sl, n } => Some(Hull { block: n, special: true, embed: embed_diagonal, mask: None }),
        _ => None,
    }
}

/// Solve the linear part `h x = x h` over the hull.
fn commutation_system(hull: &Hull, x: &M) -> CommutationSystem {
    let b = hull.block;
    let mut gens = Vec::new();
    for i in 0..b {
        for j in 0..b {
            if hull.mask.as_ref().is_some_and(|m| m[(i, j)].is_zero()) {
                continue;
            }
            gens.push(M::unit(b, i, j));
        }
    }
    let images: Vec<M> = gens.iter().map(|g| (hull.embed)(g, b).bracket(x)).collect();
    let n2 = x.rows() * x.rows();
    let sys = Matrix::from_fn(n2, gens.len(), |r, c| images[c].entries()[r].clone());
    let basis: Vec<M> = sys
        .nullspace()
        .into_iter()
        .map(|c| c.iter().zip(&gens).fold(M::zeros(b, b), |acc, (cj, g)| acc.add_ref(&g.scale(cj))))
        .collect();
    let sym = Matrix::from_fn(b, b, |i, j| {
        basis.iter().enumerate().fold(MPoly::constant(Qi::zero()), |acc, (k, bk)| {
            if bk[(i, j)].is_zero() {
                acc
            } else {
                acc + MPoly::var(k) * MPoly::constant(bk[(i, j)].clone())
            }
        })
    });
    CommutationSystem { basis, det: sym.det_ring(), special: hull.special }
}

impl CommutationSystem {
    /// `(dim, components)` when the system reduces to a monomial equation.
    pub fn resolve(&self) -> Option<GroupInfo> {
        let d = self.basis.len();
        if !self.special {
            // the units of an associative algebra form a dense open subset
            // of a vector space
            return (!self.det.is_zero()).then_some(GroupInfo { dim: d, component_count: 1 });
        }
        if self.det.num_terms() != 1 {
            return None;
        }
        let (mono, _) = self.det.terms().next()?;
        let k = mono.iter().fold(0u32, |g, &e| g.gcd(&e));
        if k == 0 {
            return None;
        }
        Some(GroupInfo { dim: d - 1, component_count: k })
    }
}

/// Lie and (where resolvable) group-level centralizer data of `x ∈ p`.
pub fn group_centralizer_info(pair: &SymmetricPair, x: &M) -> Result<CentralizerReport> {
    let model = pair.model()?;
    let zg = lie_centralizer(model, x, Ambient::G)?;
    let zh = lie_centralizer(model, x, Ambient::H)?;
    let mut report = CentralizerReport {
        dim_in_g: zg.len(),
        dim_in_h: zh.len(),
        is_abelian_in_h: nonabelian_witness(&zh).is_none(),
        group_info: None,
        unresolved: None,
        oracle: None,
    };
    if !is_regular(model, x)? {
        report.unresolved = Some("element is not regular".to_string());
        return Ok(report);
    }
    let Some(hull) = hull_of(&pair.spec) else {
        report.unresolved = Some("unresolved: no linear hull for this family".to_string());
        return Ok(report);
    };
    let sys = commutation_system(&hull, x);
    match sys.resolve() {
        Some(info) if info.dim == report.dim_in_h => report.group_info = Some(info),
        Some(_) => report.unresolved = Some("unresolved: group and Lie dimensions differ".to_string()),
        None => report.unresolved = Some("unresolved: determinant is not a monomial".to_string()),
    }
    report.oracle = Some(sys);
    Ok(report)
}

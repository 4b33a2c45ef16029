//! Explicit matrix models `g = k ⊕ p ⊂ gl_N` with a θ-Cartan subspace.

use super::spec::{DiagKind, GroupKind, PairSpec};
use crate::error::{Error, Result};
use crate::field::{q, Qi, Ring, Q};
use crate::matrix::{span_basis, Matrix, SpanReducer};
use crate::rootsys::QVec;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

pub type M = Matrix<Qi>;

/// Smallest field containing the model's characteristic data.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldTag {
    Q,
    Qi,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Qi => "Qi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `x ↦ S x S⁻¹`.
    Conj { s: M, s_inv: M },
    /// `x ↦ −S xᵀ S⁻¹`.
    NegTranspose { s: M, s_inv: M },
}

impl Involution {
    pub fn conj(s: M) -> Self {
        let s_inv = s.inverse().expect("invertible");
        Involution::Conj { s, s_inv }
    }

    pub fn neg_transpose(s: M) -> Self {
        let s_inv = s.inverse().expect("invertible");
        Involution::NegTranspose { s, s_inv }
    }

    pub fn apply(&self, x: &M) -> M {
        match self {
            Involution::Conj { s, s_inv } => s.mul_ref(x).mul_ref(s_inv),
            Involution::NegTranspose { s, s_inv } => -s.mul_ref(&x.transpose()).mul_ref(s_inv),
        }
    }

    pub fn matrix(&self) -> &M {
        match self {
            Involution::Conj { s, .. } | Involution::NegTranspose { s, .. } => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub size: usize,
    pub field: FieldTag,
    pub involution: Involution,
    pub g_basis: Vec<M>,
    pub k_basis: Vec<M>,
    pub p_basis: Vec<M>,
    pub cartan: Vec<M>,
    /// Coordinates of each Cartan basis element in the root space; roots are
    /// written in these coordinates.
    pub coords: Vec<QVec>,
    pub rank_g: usize,
    g_span: SpanReducer<Qi>,
    k_span: SpanReducer<Qi>,
    p_span: SpanReducer<Qi>,
}

pub fn qi(n: i64) -> Qi {
    Qi::from_int(n)
}

pub fn flatten(m: &M) -> Vec<Qi> {
    m.entries().to_vec()
}

pub fn unflatten(n: usize, v: &[Qi]) -> M {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// Echelon basis of the span of a list of square matrices.
pub fn matrix_span(n: usize, ms: &[M]) -> Vec<M> {
    let vs: Vec<Vec<Qi>> = ms.iter().map(flatten).collect();
    span_basis(&vs).iter().map(|v| unflatten(n, v)).collect()
}

fn e(n: usize, i: usize, j: usize) -> M {
    M::unit(n, i, j)
}

pub fn gl_basis(n: usize) -> Vec<M> {
    let mut b = Vec::new();
    for i in 0..n {
        for j in 0..n {
            b.push(e(n, i, j));
        }
    }
    b
}

pub fn sl_basis(n: usize) -> Vec<M> {
    let mut b = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.push(e(n, i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        b.push(e(n, i, i) - e(n, i + 1, i + 1));
    }
    b
}

/// `sp_{2n}` for the form `J = [[0, I], [−I, 0]]`.
pub fn sp_basis(n: usize) -> Vec<M> {
    let s = 2 * n;
    let mut b = Vec::new();
    for i in 0..n {
        for j in 0..n {
            b.push(e(s, i, j) - e(s, n + j, n + i));
        }
    }
    for i in 0..n {
        for j in i..n {
            let mut x = e(s, i, n + j);
            if i != j {
                x = x + e(s, j, n + i);
            }
            b.push(x);
            let mut y = e(s, n + i, j);
            if i != j {
                y = y + e(s, n + j, i);
            }
            b.push(y);
        }
    }
    b
}

pub fn so_basis(n: usize) -> Vec<M> {
    let mut b = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            b.push(e(n, i, j) - e(n, j, i));
        }
    }
    b
}

/// `Ω_n = [[0, I], [−I, 0]]`.
pub fn omega(n: usize) -> M {
    let mut m = M::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = qi(1);
        m[(n + i, i)] = qi(-1);
    }
    m
}

/// `I_{m, n−m} = diag(1^m, (−1)^{n−m})`.
pub fn i_mn(m: usize, n: usize) -> M {
    M::diag(&(0..n).map(|i| if i < m { qi(1) } else { qi(-1) }).collect::<Vec<_>>())
}

fn unit_vec(d: usize, i: usize) -> QVec {
    let mut v = vec![q(0); d];
    v[i] = q(1);
    v
}

fn simple_diff(d: usize, i: usize) -> QVec {
    let mut v = vec![q(0); d];
    v[i] = q(1);
    v[i + 1] = q(-1);
    v
}

/// Cartan data for the diagonal family: elements of a Cartan of `g₁` with
/// their root-space coordinates, and the rank of `g₁`.
fn diag_cartan(g: DiagKind, n: usize) -> (Vec<M>, Vec<QVec>, usize) {
    match g {
        DiagKind::Gl => ((0..n).map(|j| e(n, j, j)).collect(), (0..n).map(|j| unit_vec(n, j)).collect(), n),
        DiagKind::Sl => (
            (0..n - 1).map(|j| e(n, j, j) - e(n, j + 1, j + 1)).collect(),
            (0..n - 1).map(|j| simple_diff(n, j)).collect(),
            n - 1,
        ),
        DiagKind::Sp => (
            (0..n).map(|j| e(2 * n, j, j) - e(2 * n, n + j, n + j)).collect(),
            (0..n).map(|j| unit_vec(n, j)).collect(),
            n,
        ),
        DiagKind::So => {
            let r = n / 2;
            (
                (0..r).map(|j| e(n, 2 * j, 2 * j + 1) - e(n, 2 * j + 1, 2 * j)).collect(),
                (0..r).map(|j| unit_vec(r, j)).collect(),
                r,
            )
        }
    }
}

fn diag_size(g: DiagKind, n: usize) -> usize {
    if g == DiagKind::Sp {
        2 * n
    } else {
        n
    }
}

pub fn diag_g_basis(g: DiagKind, n: usize) -> Vec<M> {
    match g {
        DiagKind::Gl => gl_basis(n),
        DiagKind::Sl => sl_basis(n),
        DiagKind::Sp => sp_basis(n),
        DiagKind::So => so_basis(n),
    }
}

impl MatrixModel {
    fn assemble(size: usize, field: FieldTag, involution: Involution, g_basis: Vec<M>, cartan: Vec<M>, coords: Vec<QVec>, rank_g: usize) -> Self {
        let half = Qi::real(crate::field::qq(1, 2));
        let plus: Vec<M> = g_basis.iter().map(|b| b.add_ref(&involution.apply(b)).scale(&half)).collect();
        let minus: Vec<M> = g_basis.iter().map(|b| b.sub_ref(&involution.apply(b)).scale(&half)).collect();
        let k_basis = matrix_span(size, &plus);
        let p_basis = matrix_span(size, &minus);
        let red = |b: &[M]| SpanReducer::new(&b.iter().map(flatten).collect::<Vec<_>>());
        let (g_span, k_span, p_span) = (red(&g_basis), red(&k_basis), red(&p_basis));
        MatrixModel { size, field, involution, g_basis, k_basis, p_basis, cartan, coords, rank_g, g_span, k_span, p_span }
    }

    pub fn build(spec: &PairSpec) -> Result<MatrixModel> {
        spec.validate()?;
        Ok(match *spec {
            PairSpec::AIII { group, n, m } => {
                let g = if group == GroupKind::GL { gl_basis(n) } else { sl_basis(n) };
                let cartan = (0..m).map(|j| e(n, j, m + j) + e(n, m + j, j)).collect();
                let coords = (0..m).map(|j| unit_vec(m, j)).collect();
                let rank = if group == GroupKind::GL { n } else { n - 1 };
                Self::assemble(n, FieldTag::Q, Involution::conj(i_mn(m, n)), g, cartan, coords, rank)
            }
            PairSpec::AI { group, n } => {
                let (g, cartan, coords, rank) = if group == GroupKind::GL {
                    (gl_basis(n), (0..n).map(|j| e(n, j, j)).collect(), (0..n).map(|j| unit_vec(n, j)).collect(), n)
                } else {
                    (
                        sl_basis(n),
                        (0..n - 1).map(|j| e(n, j, j) - e(n, j + 1, j + 1)).collect(),
                        (0..n - 1).map(|j| simple_diff(n, j)).collect(),
                        n - 1,
                    )
                };
                Self::assemble(n, FieldTag::Q, Involution::neg_transpose(M::identity(n)), g, cartan, coords, rank)
            }
            PairSpec::AII { n } => {
                let s = 2 * n;
                let cartan = (0..n - 1)
                    .map(|j| e(s, j, j) - e(s, j + 1, j + 1) + e(s, n + j, n + j) - e(s, n + j + 1, n + j + 1))
                    .collect();
                let coords = (0..n - 1).map(|j| simple_diff(n, j)).collect();
                Self::assemble(s, FieldTag::Q, Involution::neg_transpose(omega(n)), sl_basis(s), cartan, coords, s - 1)
            }
            PairSpec::CI { n } => {
                let s = 2 * n;
                let cartan = (0..n).map(|j| e(s, j, n + j) + e(s, n + j, j)).collect();
                let coords = (0..n).map(|j| unit_vec(n, j)).collect();
                Self::assemble(s, FieldTag::Q, Involution::conj(i_mn(n, s)), sp_basis(n), cartan, coords, n)
            }
            PairSpec::CII { n, m } => {
                let s = 2 * n;
                let k = M::block_diag(&[i_mn(m, n), i_mn(m, n)]);
                let cartan = (0..m)
                    .map(|j| e(s, j, m + j) + e(s, m + j, j) - e(s, n + j, n + m + j) - e(s, n + m + j, n + j))
                    .collect();
                let coords = (0..m).map(|j| unit_vec(m, j)).collect();
                Self::assemble(s, FieldTag::Q, Involution::conj(k), sp_basis(n), cartan, coords, n)
            }
            PairSpec::BDI { n, m } => {
                let cartan = (0..m).map(|j| e(n, j, m + j) - e(n, m + j, j)).collect();
                let coords = (0..m).map(|j| unit_vec(m, j)).collect();
                Self::assemble(n, FieldTag::Qi, Involution::conj(i_mn(m, n)), so_basis(n), cartan, coords, n / 2)
            }
            PairSpec::DIII { n } => {
                let s = 2 * n;
                let r = n / 2;
                let cartan = (0..r)
                    .map(|j| {
                        let b = e(n, 2 * j, 2 * j + 1) - e(n, 2 * j + 1, 2 * j);
                        M::block2(&M::zeros(n, n), &b, &b, &M::zeros(n, n))
                    })
                    .collect();
                let coords = (0..r).map(|j| unit_vec(r, j)).collect();
                Self::assemble(s, FieldTag::Qi, Involution::conj(omega(n)), so_basis(s), cartan, coords, n)
            }
            PairSpec::DIAG { g, n } => {
                let size = diag_size(g, n);
                let (c1, coords, rank1) = diag_cartan(g, n);
                let z = M::zeros(size, size);
                let mut basis = Vec::new();
                for b in diag_g_basis(g, n) {
                    basis.push(M::block_diag(&[b.clone(), z.clone()]));
                    basis.push(M::block_diag(&[z.clone(), b]));
                }
                let cartan = c1.iter().map(|h| M::block_diag(&[h.clone(), -h.clone()])).collect();
                let swap = M::block2(&z, &M::identity(size), &M::identity(size), &z);
                let field = if g == DiagKind::So { FieldTag::Qi } else { FieldTag::Q };
                Self::assemble(2 * size, field, Involution::conj(swap), basis, cartan, coords, 2 * rank1)
            }
            PairSpec::EXC { ref label } => return Err(Error::ModelMissing(label.to_string())),
        })
    }

    /// The descendant model at a semisimple `s ∈ a`: `z_g(s)` with the same
    /// involution and θ-Cartan.
    pub fn levi_at(&self, s: &M) -> MatrixModel {
        let g = self.centralizer_in(&self.g_basis, core::slice::from_ref(s));
        Self::assemble(self.size, self.field, self.involution.clone(), g, self.cartan.clone(), self.coords.clone(), self.rank_g)
    }

    pub fn dim_g(&self) -> usize {
        self.g_basis.len()
    }

    pub fn rank_theta(&self) -> usize {
        self.cartan.len()
    }

    pub fn theta(&self, x: &M) -> M {
        self.involution.apply(x)
    }

    fn shape_ok(&self, x: &M) -> bool {
        x.rows() == self.size && x.cols() == self.size
    }

    pub fn in_g(&self, x: &M) -> bool {
        self.shape_ok(x) && self.g_span.contains(x.entries())
    }

    pub fn in_p(&self, x: &M) -> bool {
        self.shape_ok(x) && self.p_span.contains(x.entries())
    }

    pub fn in_k(&self, x: &M) -> bool {
        self.shape_ok(x) && self.k_span.contains(x.entries())
    }

    /// Basis of `{y ∈ span(basis) : [y, x_j] = 0 for all j}`.
    pub fn centralizer_in(&self, basis: &[M], xs: &[M]) -> Vec<M> {
        let n2 = self.size * self.size;
        let brackets: Vec<Vec<M>> = xs.iter().map(|x| basis.iter().map(|b| b.bracket(x)).collect()).collect();
        let a = Matrix::from_fn(n2 * xs.len(), basis.len(), |i, j| brackets[i / n2][j].entries()[i % n2].clone());
        a.nullspace()
            .into_iter()
            .map(|c| {
                c.iter().zip(basis).fold(M::zeros(self.size, self.size), |acc, (cj, b)| {
                    if cj.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&b.scale(cj))
                    }
                })
            })
            .collect()
    }

    /// `dim z_g(a)`.
    pub fn dim_centralizer_of_cartan_in_g(&self) -> usize {
        self.centralizer_in(&self.g_basis, &self.cartan).len()
    }

    /// `c_k(a)`.
    pub fn centralizer_of_cartan_in_k(&self) -> Vec<M> {
        self.centralizer_in(&self.k_basis, &self.cartan)
    }

    /// Point of `a` with the given coordinates in the Cartan basis.
    pub fn cartan_point(&self, c: &[Q]) -> M {
        self.cartan.iter().zip(c).fold(M::zeros(self.size, self.size), |acc, (h, x)| acc.add_ref(&h.scale(&Qi::real(x.clone()))))
    }

    /// Cartan-basis coefficients of a point of `a` given in root-space
    /// coordinates `u` (so that `α(x) = (α, u)` for every restricted root).
    pub fn cartan_point_from_root_coords(&self, u: &[Q]) -> M {
        // α(h_j) = (α, P_j); want x = Σ c_j h_j with Σ c_j P_j = projection of u
        let r = self.coords.len();
        let d = self.coords.first().map_or(0, |v| v.len());
        let p = Matrix::from_fn(d, r, |i, j| self.coords[j][i].clone());
        let c = p.solve(u).expect("point lies in the span of the coordinate columns");
        self.cartan_point(&c)
    }
}

use super::lie::{is_regular_with, lie_centralizer, regular_centralizer_dim, Ambient};
use crate::error::{Error, Result};
use crate::field::{qq, Field, Qi, Ring};
use crate::matrix::{rank_of, Matrix};
use crate::mpoly::MPoly;
use crate::sympair::{flatten, DiagKind, GroupKind, MatrixModel, PairSpec, M};
use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

/// Affine slice `e + span(directions)` inside `p`.
#[derive(Clone, Debug)]
pub struct KrSlice {
    pub spec: PairSpec,
    pub base: M,
    pub directions: Vec<M>,
    /// For the diagonal family invariants are read off the first block.
    pub invariant_block: Option<usize>,
}

fn shift(n: usize) -> M {
    let mut m = M::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        m[(i + 1, i)] = Qi::one();
    }
    m
}

/// `P` with `Pᵀ P = J`, `J` the antidiagonal identity.
fn antidiagonal_transport(n: usize) -> M {
    let mut p = M::zeros(n, n);
    for k in 0..n / 2 {
        let l = n - 1 - k;
        p[(k, k)] = Qi::one();
        p[(l, k)] = Qi::i();
        p[(k, l)] = Qi::real(qq(1, 2));
        p[(l, l)] = Qi::new(qq(0, 1), qq(-1, 2));
    }
    if n % 2 == 1 {
        p[(n / 2, n / 2)] = Qi::one();
    }
    p
}

pub fn kostant_rallis_slice(spec: &PairSpec) -> Result<KrSlice> {
    spec.validate()?;
    let unsupported = || Err(Error::UnsupportedFamily(alloc::format!("no Kostant-Rallis slice for {spec}")));
    match *spec {
        PairSpec::DIAG { g, n } if matches!(g, DiagKind::Gl | DiagKind::Sl) => {
            let free = if g == DiagKind::Gl { n } else { n - 1 };
            let lift = |x: &M| M::block_diag(&[x.clone(), -x.clone()]);
            Ok(KrSlice {
                spec: spec.clone(),
                base: lift(&shift(n)),
                directions: (0..free).map(|i| lift(&M::unit(n, i, n - 1))).collect(),
                invariant_block: Some(n),
            })
        }
        PairSpec::AIII { group: GroupKind::GL, n, m } if n == 2 * m => {
            let z = M::zeros(m, m);
            let base = M::block2(&z, &shift(m), &M::identity(m), &z);
            let directions = (0..m).map(|i| M::block2(&z, &M::unit(m, i, m - 1), &z, &z)).collect();
            Ok(KrSlice { spec: spec.clone(), base, directions, invariant_block: None })
        }
        PairSpec::AI { group: GroupKind::SL, n } => {
            // E + Σ c_k F^k is persymmetric; transport to symmetric matrices
            let p = antidiagonal_transport(n);
            let p_inv = p.inverse().expect("invertible");
            let f = shift(n);
            let e = f.transpose();
            let conj = |x: &M| p.mul_ref(x).mul_ref(&p_inv);
            Ok(KrSlice {
                spec: spec.clone(),
                base: conj(&e),
                directions: (1..n).map(|k| conj(&f.pow(k as u32))).collect(),
                invariant_block: None,
            })
        }
        _ => unsupported(),
    }
}

impl KrSlice {
    pub fn num_params(&self) -> usize {
        self.directions.len()
    }

    pub fn point(&self, c: &[Qi]) -> M {
        self.directions.iter().zip(c).fold(self.base.clone(), |acc, (d, ci)| acc.add_ref(&d.scale(ci)))
    }

    pub fn symbolic_point(&self) -> Matrix<MPoly<Qi>> {
        let n = self.base.rows();
        Matrix::from_fn(n, n, |i, j| {
            let mut p = MPoly::constant(self.base[(i, j)].clone());
            for (k, d) in self.directions.iter().enumerate() {
                if !d[(i, j)].is_zero() {
                    p = p + MPoly::var(k) * MPoly::constant(d[(i, j)].clone());
                }
            }
            p
        })
    }

    /// Nonvanishing non-leading characteristic coefficients along the slice,
    /// ordered by degree.
    pub fn invariants(&self) -> Vec<MPoly<Qi>> {
        let x = self.symbolic_point();
        let x = match self.invariant_block {
            Some(b) => x.submatrix(0, 0, b, b),
            None => x,
        };
        let c = x.charpoly_faddeev();
        let n = c.len() - 1;
        (1..=n).map(|k| c[n - k].clone()).filter(|p| !p.is_zero()).collect()
    }

    /// Values of the invariants at `c`.
    pub fn invariant_values(&self, c: &[Qi]) -> Vec<Qi> {
        self.invariants().iter().map(|p| p.eval(c)).collect()
    }
}

/// Ordering `σ` with `f_j = λ_j c_{σ(j)} + g_j(c_{σ(0)}, …, c_{σ(j−1)})`,
/// `λ_j` a nonzero constant.
pub fn triangular_order(invs: &[MPoly<Qi>], nvars: usize) -> Option<Vec<(usize, Qi)>> {
    if invs.len() != nvars {
        return None;
    }
    let mut used: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for f in invs {
        let mut found = None;
        for v in (0..nvars).filter(|v| !used.contains(v)) {
            let mut mono = vec![0u32; v + 1];
            mono[v] = 1;
            let lambda = f.coeff(&mono);
            if lambda.is_zero() {
                continue;
            }
            let rest = f.clone() - MPoly::var(v) * MPoly::constant(lambda.clone());
            let ok = rest.terms().all(|(m, _)| m.iter().enumerate().all(|(i, &e)| e == 0 || used.contains(&i)));
            if ok {
                found = Some((v, lambda));
                break;
            }
        }
        let (v, lambda) = found?;
        used.push(v);
        out.push((v, lambda));
    }
    Some(out)
}

/// Back-substitution: slice parameters with the given invariant values.
pub fn solve_invariants(invs: &[MPoly<Qi>], order: &[(usize, Qi)], targets: &[Qi]) -> Vec<Qi> {
    let mut c = vec![Qi::zero(); order.len()];
    for ((f, (v, lambda)), t) in invs.iter().zip(order).zip(targets) {
        // other variables are still zero, so f(c) = g_j(known)
        let rest = f.eval(&c);
        c[*v] = (t.clone() - rest) * lambda.inv().expect("nonzero");
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceVerification {
    pub base_nilpotent: bool,
    pub base_regular: bool,
    pub dim_v: usize,
    pub rank_theta: usize,
    pub in_p: bool,
    pub samples: usize,
    pub all_regular: bool,
    pub triangular: bool,
    pub inverse_ok: bool,
    /// `p = [k, e] + v`.
    pub transversal: bool,
    /// `dim z_k(x)` at each sample.
    pub h_dims: Vec<usize>,
}

impl SliceVerification {
    pub fn ok(&self) -> bool {
        self.base_nilpotent
            && self.base_regular
            && self.dim_v == self.rank_theta
            && self.in_p
            && self.all_regular
            && self.triangular
            && self.inverse_ok
            && self.transversal
    }
}

pub fn random_qi<R: Rng>(rng: &mut R, bound: i64) -> Qi {
    Qi::real(crate::field::q(rng.gen_range(-bound..=bound)))
}

pub fn verify_slice<R: Rng>(model: &MatrixModel, slice: &KrSlice, rng: &mut R, samples: usize) -> Result<SliceVerification> {
    let reg = regular_centralizer_dim(model);
    let e = &slice.base;
    let invs = slice.invariants();
    let order = triangular_order(&invs, slice.num_params());
    let mut all_regular = is_regular_with(model, e, reg)?;
    let mut inverse_ok = order.is_some();
    let mut h_dims = Vec::new();
    let in_p = model.in_p(e) && slice.directions.iter().all(|d| model.in_p(d));
    for _ in 0..samples {
        let c: Vec<Qi> = (0..slice.num_params()).map(|_| random_qi(rng, 6)).collect();
        let x = slice.point(&c);
        all_regular &= is_regular_with(model, &x, reg)?;
        h_dims.push(lie_centralizer(model, &x, Ambient::H)?.len());
        if let Some(o) = &order {
            let targets: Vec<Qi> = (0..invs.len()).map(|_| random_qi(rng, 6)).collect();
            let sol = solve_invariants(&invs, o, &targets);
            inverse_ok &= slice.invariant_values(&sol) == targets;
        }
    }
    let mut vecs: Vec<Vec<Qi>> = model.k_basis.iter().map(|y| flatten(&y.bracket(e))).collect();
    vecs.extend(slice.directions.iter().map(flatten));
    let transversal = rank_of(&vecs) == model.p_basis.len();
    Ok(SliceVerification {
        base_nilpotent: e.pow(e.rows() as u32).is_zero(),
        base_regular: is_regular_with(model, e, reg)?,
        dim_v: slice.num_params(),
        rank_theta: model.rank_theta(),
        in_p,
        samples,
        all_regular,
        triangular: order.is_some(),
        inverse_ok,
        transversal,
        h_dims,
    })
}

use super::lie::{is_regular_with, lie_centralizer, nonabelian_witness, regular_centralizer_dim, Ambient};
use super::slice::{kostant_rallis_slice, random_qi};
use crate::error::{Error, Result};
use crate::field::{Qi, Ring};
use crate::sympair::{SymmetricPair, MatrixModel, M};
use alloc::format;
use alloc::vec::Vec;
use rand::Rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SampleSource {
    CartanGeneric,
    Translate,
    SliceNilpotent,
    SparseNilpotent,
    RandomP,
}

/// Cayley transform `(1 + Y)(1 − Y)⁻¹`; lies in the fixed-point group of θ
/// whenever `Y ∈ k` and `1 − Y` is invertible.
pub fn cayley(y: &M) -> Option<M> {
    let id = M::identity(y.rows());
    let inv = id.sub_ref(y).inverse()?;
    Some(id.add_ref(y).mul_ref(&inv))
}

fn random_combination<R: Rng>(rng: &mut R, basis: &[M], bound: i64) -> M {
    let n = basis.first().map_or(0, |b| b.rows());
    basis.iter().fold(M::zeros(n, n), |acc, b| acc.add_ref(&b.scale(&random_qi(rng, bound))))
}

/// `Ad(g) x` for a random `g = cayley(Y)`, `Y ∈ k`.
pub fn random_translate<R: Rng>(model: &MatrixModel, x: &M, rng: &mut R) -> M {
    loop {
        let y = random_combination(rng, &model.k_basis, 1);
        if let Some(g) = cayley(&y) {
            if let Some(g_inv) = g.inverse() {
                return g.mul_ref(x).mul_ref(&g_inv);
            }
        }
    }
}

pub fn random_cartan_point<R: Rng>(model: &MatrixModel, rng: &mut R) -> M {
    let c: Vec<Qi> = (0..model.rank_theta()).map(|_| random_qi(rng, 9)).collect();
    model.cartan.iter().zip(&c).fold(M::zeros(model.size, model.size), |acc, (h, x)| acc.add_ref(&h.scale(x)))
}

pub fn random_p<R: Rng>(model: &MatrixModel, rng: &mut R, bound: i64) -> M {
    random_combination(rng, &model.p_basis, bound)
}

/// A nilpotent element of `p` supported on a few basis vectors, or `None`.
pub fn sparse_nilpotent<R: Rng>(model: &MatrixModel, rng: &mut R) -> Option<M> {
    let n = model.size;
    let k = rng.gen_range(1..=(model.rank_theta() + 2).min(model.p_basis.len()));
    let mut x = M::zeros(n, n);
    for _ in 0..k {
        let b = &model.p_basis[rng.gen_range(0..model.p_basis.len())];
        let s = if rng.gen_bool(0.5) { Qi::one() } else { -Qi::one() };
        x = x.add_ref(&b.scale(&s));
    }
    (!x.is_zero() && x.pow(n as u32).is_zero()).then_some(x)
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub x: M,
    pub source: SampleSource,
}

/// Regular elements of `p` drawn from several sources in rotation.
pub fn sample_regular<R: Rng>(pair: &SymmetricPair, count: usize, rng: &mut R) -> Result<Vec<Sample>> {
    let model = pair.model()?;
    let reg = regular_centralizer_dim(model);
    let slice = kostant_rallis_slice(&pair.spec).ok();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    let limit = 40 * count + 200;
    while out.len() < count && attempts < limit {
        let source = match attempts % 5 {
            0 => SampleSource::CartanGeneric,
            1 => SampleSource::Translate,
            2 if slice.is_some() => SampleSource::SliceNilpotent,
            2 | 3 => SampleSource::SparseNilpotent,
            _ => SampleSource::RandomP,
        };
        attempts += 1;
        let x = match source {
            SampleSource::CartanGeneric => Some(random_cartan_point(model, rng)),
            SampleSource::Translate => {
                let base = match out.last() {
                    Some(Sample { x, .. }) => x.clone(),
                    None => random_cartan_point(model, rng),
                };
                Some(random_translate(model, &base, rng))
            }
            SampleSource::SliceNilpotent => {
                let s = slice.as_ref().expect("slice present");
                let e = if rng.gen_bool(0.5) { s.base.clone() } else { random_translate(model, &s.base, rng) };
                Some(e)
            }
            SampleSource::SparseNilpotent => sparse_nilpotent(model, rng),
            SampleSource::RandomP => Some(random_p(model, rng, 3)),
        };
        let Some(x) = x else { continue };
        if is_regular_with(model, &x, reg)? {
            out.push(Sample { x, source });
        }
    }
    if out.is_empty() {
        return Err(Error::SamplingFailed(format!("no regular element found for {}", pair.spec)));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CommutativityReport {
    pub samples: usize,
    pub all_abelian: bool,
    /// A regular `x` and two elements of `z_h(x)` with nonzero bracket.
    pub witness: Option<(M, M, M)>,
    pub sources: Vec<SampleSource>,
}

pub fn centralizer_commutativity<R: Rng>(pair: &SymmetricPair, sample_count: usize, rng: &mut R) -> Result<CommutativityReport> {
    let model = pair.model()?;
    let samples = sample_regular(pair, sample_count, rng)?;
    let mut witness = None;
    for s in &samples {
        let zh = lie_centralizer(model, &s.x, Ambient::H)?;
        if let Some((a, b)) = nonabelian_witness(&zh) {
            if witness.is_none() {
                witness = Some((s.x.clone(), a, b));
            }
        }
    }
    Ok(CommutativityReport {
        samples: samples.len(),
        all_abelian: witness.is_none(),
        witness,
        sources: samples.iter().map(|s| s.source).collect(),
    })
}

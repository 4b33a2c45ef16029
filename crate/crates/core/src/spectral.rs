//! Invariants and the spectral cover for `GL_{2n} ⊃ GL_n × GL_n`.

use crate::centralizers::{is_regular, lie_centralizer, Ambient};
use crate::error::{Error, Result};
use crate::field::{Qi, Ring, Q};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::sympair::{GroupKind, PairSpec, SymmetricPair, M};
use alloc::format;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralCoverData {
    pub n: usize,
    /// `a_2, a_4, …, a_{2n}`.
    pub a: Vec<Q>,
    /// `y^n + a_2 y^{n−1} + ⋯ + a_{2n}`, low degree first.
    pub cover_poly: Poly<Q>,
    pub discriminant: Q,
    pub in_u: bool,
}

impl SpectralCoverData {
    pub fn from_coefficients(a: Vec<Q>) -> Self {
        let n = a.len();
        let mut c: Vec<Q> = a.iter().rev().cloned().collect();
        c.push(Q::one());
        let cover_poly = Poly::from_coeffs(c);
        let discriminant = cover_poly.discriminant();
        let in_u = a.last().is_none_or(|x| !x.is_zero());
        SpectralCoverData { n, a, cover_poly, discriminant, in_u }
    }

    /// `x^{2n} + a_2 x^{2n−2} + ⋯ + a_{2n}`, low degree first.
    pub fn even_poly(&self) -> Poly<Q> {
        let mut c = alloc::vec![Q::zero(); 2 * self.n + 1];
        c[2 * self.n] = Q::one();
        for (k, ak) in self.a.iter().enumerate() {
            c[2 * (self.n - k - 1)] = ak.clone();
        }
        Poly::from_coeffs(c)
    }
}

/// Characteristic data of `[[0, C], [D, 0]]`.
pub fn invariants_from_higgs(c: &Matrix<Q>, d: &Matrix<Q>) -> Result<SpectralCoverData> {
    let n = c.rows();
    if !c.is_square() || d.rows() != n || d.cols() != n {
        return Err(Error::BadParameters(format!("blocks must be {n}x{n}")));
    }
    let z = Matrix::zeros(n, n);
    let x = Matrix::block2(&z, c, d, &z);
    let chi = x.charpoly();
    for k in (1..=2 * n).step_by(2) {
        if !chi.coeff(2 * n - k).is_zero() {
            return Err(Error::OddCoefficientNonzero(k));
        }
    }
    let a = (1..=n).map(|k| chi.coeff(2 * n - 2 * k)).collect();
    Ok(SpectralCoverData::from_coefficients(a))
}

fn real_block(x: &M, r0: usize, c0: usize, n: usize) -> Result<Matrix<Q>> {
    let b = x.submatrix(r0, c0, n, n);
    if !b.entries().iter().all(Qi::is_real) {
        return Err(Error::BadParameters("element has non-real entries".into()));
    }
    Ok(b.map(|z| z.re.clone()))
}

fn uu_rank(spec: &PairSpec) -> Result<usize> {
    match *spec {
        PairSpec::AIII { group: GroupKind::GL, n, m } if n == 2 * m => Ok(m),
        _ => Err(Error::UnsupportedFamily(format!("spectral data needs AIII:group=GL,n=2m,m=m, got {spec}"))),
    }
}

/// Spectral data of an element `[[0, C], [D, 0]]` of `p`.
pub fn invariants_of_element(pair: &SymmetricPair, x: &M) -> Result<SpectralCoverData> {
    let n = uu_rank(&pair.spec)?;
    if !pair.model()?.in_p(x) {
        return Err(Error::NotInP);
    }
    invariants_from_higgs(&real_block(x, 0, n, n)?, &real_block(x, n, 0, n)?)
}

pub fn sheets_over_point(data: &SpectralCoverData) -> u32 {
    if data.in_u {
        1
    } else {
        2
    }
}

/// `dim z_h(x)` for regular `x`; equal to `n` on the whole regular locus.
pub fn j_fiber_dimension(pair: &SymmetricPair, x: &M) -> Result<usize> {
    uu_rank(&pair.spec)?;
    let model = pair.model()?;
    if !is_regular(model, x)? {
        return Err(Error::NotRegular);
    }
    Ok(lie_centralizer(model, x, Ambient::H)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantReport {
    pub discriminant: Q,
    pub zero_is_root: bool,
    pub squarefree: bool,
}

pub fn cover_discriminant(data: &SpectralCoverData) -> DiscriminantReport {
    DiscriminantReport {
        discriminant: data.discriminant.clone(),
        zero_is_root: data.cover_poly.coeff(0).is_zero(),
        squarefree: !data.discriminant.is_zero(),
    }
}

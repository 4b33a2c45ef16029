//! Numerical side of the Hitchin base: exponents, dimensions and the sheet
//! decomposition over the transversal locus.

use crate::error::{Error, Result};
use crate::rootsys::TypeLabel;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentList {
    pub degrees: Vec<u32>,
}

impl ExponentList {
    pub fn sum(&self) -> u32 {
        self.degrees.iter().sum()
    }
}

/// Fundamental degrees of the Weyl group of `label`.
pub fn exponents(label: &TypeLabel) -> ExponentList {
    let degrees = label.degrees();
    let reduced_positive: u32 = label.0.iter().map(|c| reduced_positive_count(c.family, c.rank as u32)).sum();
    debug_assert_eq!(degrees.iter().sum::<u32>(), label.rank() as u32 + reduced_positive);
    ExponentList { degrees }
}

/// Exponents on an `a` of dimension `dim_a`; directions fixed by the little
/// Weyl group contribute degree 1.
pub fn exponents_on(label: &TypeLabel, dim_a: usize) -> ExponentList {
    let mut e = exponents(label);
    e.degrees.extend(core::iter::repeat_n(1, dim_a.saturating_sub(label.rank())));
    e
}

fn reduced_positive_count(f: crate::rootsys::Family, n: u32) -> u32 {
    use crate::rootsys::Family::*;
    match f {
        A => n * (n + 1) / 2,
        B | C | BC => n * n,
        D => n * (n - 1),
        E => [36, 63, 120][(n - 6) as usize],
        F => 24,
        G => 6,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveConfig {
    pub genus: i64,
    pub deg_d: i64,
    /// `D = K`, outside the standing hypothesis `deg D ≥ 2g`.
    pub canonical: bool,
}

impl CurveConfig {
    pub fn new(genus: i64, deg_d: i64) -> Self {
        CurveConfig { genus, deg_d, canonical: false }
    }

    pub fn canonical(genus: i64) -> Self {
        CurveConfig { genus, deg_d: 2 * genus - 2, canonical: true }
    }

    pub fn validate(&self) -> Result<()> {
        if self.genus < 0 {
            return Err(Error::BadParameters("genus must be nonnegative".into()));
        }
        if self.canonical {
            if self.deg_d != 2 * self.genus - 2 {
                return Err(Error::BadParameters("canonical mode needs deg D = 2g - 2".into()));
            }
        } else if self.deg_d < 2 * self.genus {
            return Err(Error::DegreeTooSmall { d: self.deg_d, two_g: 2 * self.genus });
        }
        Ok(())
    }

    /// `h⁰(C, D^e)`.
    pub fn sections(&self, e: u32) -> i64 {
        let (g, e) = (self.genus, e as i64);
        if !self.canonical {
            return e * self.deg_d + 1 - g;
        }
        match (g, e) {
            (_, 0) => 1,
            (0, _) => 0,
            (1, _) => 1,
            (_, 1) => g,
            _ => (2 * e - 1) * (g - 1),
        }
    }
}

/// `Σ_i h⁰(C, D^{e_i})`.
pub fn base_dimension(exps: &ExponentList, cfg: &CurveConfig) -> Result<i64> {
    cfg.validate()?;
    Ok(exps.degrees.iter().map(|&e| cfg.sections(e)).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheetDecomposition {
    pub degrees: Vec<u128>,
    pub total: u128,
}

pub const MAX_SHEET_DEGREE: u32 = 120;

/// Degrees `C(d, i)` of the components over the transversal locus.
pub fn sheet_decomposition(d: u32) -> Result<SheetDecomposition> {
    if d > MAX_SHEET_DEGREE {
        return Err(Error::BadParameters(alloc::format!("deg D must be at most {MAX_SHEET_DEGREE}")));
    }
    let mut row = alloc::vec![1u128];
    for _ in 0..d {
        let mut next = alloc::vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    let total = row.iter().sum();
    assert_eq!(total, 1u128 << d);
    Ok(SheetDecomposition { degrees: row, total })
}

/// Transverse intersections of a point of the base with the nonseparated
/// divisor: the self-intersection `deg D` of the zero section.
pub fn nonseparated_intersection_count(cfg: &CurveConfig) -> Result<i64> {
    cfg.validate()?;
    Ok(cfg.deg_d)
}

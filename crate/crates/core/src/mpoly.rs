//! Sparse multivariate polynomials, used for symbolic determinants and
//! invariants along parametrized families of matrices.

use crate::field::{Field, Ring};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros trimmed.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<F> {
    terms: BTreeMap<Monomial, F>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl<F: Field> MPoly<F> {
    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, F::one());
        MPoly { terms }
    }

    pub fn term(mono: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(mono), c);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &[u32]) -> F {
        self.terms.get(&trim(mono.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Highest variable index appearing, plus one.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.get(i).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            out.insert(trim(m2), c.clone() * F::from_int(e as i64));
        }
        MPoly { terms: out }
    }

    /// True when every variable in the polynomial has index `< k`.
    pub fn only_uses_first(&self, k: usize) -> bool {
        self.num_vars() <= k
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    fn add_term(terms: &mut BTreeMap<Monomial, F>, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    terms.insert(m, s);
                }
            }
            None => {
                terms.insert(m, c);
            }
        }
    }
}

impl<F: Field> Add for MPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut terms = self.terms;
        for (m, c) in o.terms {
            Self::add_term(&mut terms, m, c);
        }
        MPoly { terms }
    }
}

impl<F: Field> Sub for MPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<F: Field> Mul for MPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let n = m1.len().max(m2.len());
                let m: Monomial = (0..n)
                    .map(|i| m1.get(i).copied().unwrap_or(0) + m2.get(i).copied().unwrap_or(0))
                    .collect();
                Self::add_term(&mut terms, m, c1.clone() * c2.clone());
            }
        }
        MPoly { terms }
    }
}

impl<F: Field> Ring for MPoly<F> {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_int(k: i64) -> Self {
        Self::constant(F::from_int(k))
    }
    fn div_int(&self, k: i64) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.div_int(k))).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Q};
    use crate::matrix::Matrix;

    #[test]
    fn symbolic_determinant() {
        // det [[x, 1], [y, x]] = x^2 - y
        let x = MPoly::<Q>::var(0);
        let y = MPoly::<Q>::var(1);
        let m = Matrix::from_rows(vec![vec![x.clone(), MPoly::one()], vec![y.clone(), x.clone()]]);
        let d = m.det_ring();
        assert_eq!(d, x.clone() * x - y);
        assert_eq!(d.eval(&[q(3), q(2)]), q(7));
        assert_eq!(d.partial(0).eval(&[q(3), q(2)]), q(6));
    }
}

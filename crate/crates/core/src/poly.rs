//! Univariate polynomials over a field, coefficients stored low degree first.

use crate::field::{q, Field, Qi, Ring, Q};
use crate::matrix::Matrix;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F> {
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![F::one()] }
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Poly { c: vec![F::zero(), F::one()] }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::from_coeffs(self.c.iter().map(|x| x.clone() * k.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                let t = core::mem::replace(&mut out[i + j], F::zero());
                out[i + j] = t + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let inv = d.lead().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![F::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let f = r[k + dd].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                let v = r[k + j].clone() - f.clone() * b.clone();
                r[k + j] = v;
            }
            quo[k] = f;
        }
        (Self::from_coeffs(quo), Self::from_coeffs(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c.iter().enumerate().skip(1).map(|(i, x)| x.clone() * F::from_int(i as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for a in self.c.iter().rev() {
            acc = acc.mul_ref(m).add_ref(&Matrix::identity(n).scale(a));
        }
        acc
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun's squarefree decomposition: monic `(factor, multiplicity)` pairs
    /// with pairwise coprime squarefree factors and `∏ f^m = monic(self)`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.monic();
        let dp = p.derivative();
        let mut a = p.gcd(&dp);
        let mut b = p.divrem(&a).0;
        let mut c = dp.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            i += 1;
        }
        out
    }

    /// Resultant by the Sylvester determinant.
    pub fn resultant(&self, o: &Self) -> F {
        let (m, n) = match (self.degree(), o.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return F::zero(),
        };
        if m == 0 && n == 0 {
            return F::one();
        }
        let size = m + n;
        let mut s = Matrix::zeros(size, size);
        for i in 0..n {
            for (j, a) in self.c.iter().rev().enumerate() {
                s[(i, i + j)] = a.clone();
            }
        }
        for i in 0..m {
            for (j, b) in o.c.iter().rev().enumerate() {
                s[(n + i, i + j)] = b.clone();
            }
        }
        s.det()
    }

    /// `(-1)^{n(n-1)/2} Res(p, p') / lead(p)`.
    pub fn discriminant(&self) -> F {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return F::zero(),
        };
        if n == 1 {
            return F::one();
        }
        let r = self.resultant(&self.derivative());
        let r = r * self.lead().inv().unwrap();
        if (n * (n - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let small = n.to_u64().expect("coefficient too large for rational root search");
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of a polynomial over `Q`.
pub fn rational_roots(p: &Poly<Q>) -> Vec<Q> {
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    let mut c: Vec<Q> = p.coeffs().to_vec();
    if c[0].is_zero() {
        roots.push(q(0));
        while c.first().is_some_and(|x| x.is_zero()) {
            c.remove(0);
        }
    }
    if c.len() <= 1 {
        return roots;
    }
    let den = c.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    let reduced = Poly::from_coeffs(c).squarefree_part();
    for a in divisors(&ints[0]) {
        for b in divisors(ints.last().unwrap()) {
            for sign in [1, -1] {
                let cand = Q::new(a.clone() * sign, b.clone());
                if !roots.contains(&cand) && reduced.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Roots lying in `Q ∪ iQ` of a polynomial over `Qi`.
pub fn gaussian_axis_roots(p: &Poly<Qi>) -> Vec<Qi> {
    let re = Poly::from_coeffs(p.coeffs().iter().map(|z| z.re.clone()).collect());
    let im = Poly::from_coeffs(p.coeffs().iter().map(|z| z.im.clone()).collect());
    let real_part = if im.is_zero() { re.clone() } else { re.gcd(&im) };
    let mut out: Vec<Qi> = rational_roots(&real_part).into_iter().map(Qi::real).collect();
    // p(i y) = sum c_k i^k y^k
    let mut r2 = Vec::new();
    let mut i2 = Vec::new();
    for (k, z) in p.coeffs().iter().enumerate() {
        let ik = match k % 4 {
            0 => Qi::one(),
            1 => Qi::i(),
            2 => -Qi::one(),
            _ => -Qi::i(),
        };
        let w = z.clone() * ik;
        r2.push(w.re);
        i2.push(w.im);
    }
    let (r2, i2) = (Poly::from_coeffs(r2), Poly::from_coeffs(i2));
    let imag_part = if i2.is_zero() { r2.clone() } else { r2.gcd(&i2) };
    for y in rational_roots(&imag_part) {
        if !y.is_zero() {
            out.push(Qi::new(q(0), y));
        }
    }
    out.sort();
    out
}

impl<F: Field> Poly<F> {
    /// Coefficients as ring elements (for use with [`Ring`]-generic code).
    pub fn into_coeffs(self) -> Vec<F> {
        self.c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<Q> {
        Poly::from_coeffs(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn yun_decomposition() {
        // (t-1)^2 (t+2)^3 t
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]).mul(&p(&[2, 1])).mul(&p(&[2, 1]))).mul(&p(&[0, 1]));
        let dec = f.squarefree_decomposition();
        let mut prod = Poly::one();
        for (g, m) in &dec {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f.monic());
        assert_eq!(dec.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[2, 1])).mul(&p(&[0, 1])));
    }

    #[test]
    fn discriminant_quadratic() {
        // y^2 - 5y + 4: disc 25 - 16 = 9
        assert_eq!(p(&[4, -5, 1]).discriminant(), q(9));
        assert_eq!(p(&[1, 2, 1]).discriminant(), q(0));
        // cubic y^3 + a y + b: -4a^3 - 27b^2
        assert_eq!(p(&[2, 3, 0, 1]).discriminant(), q(-4 * 27 - 27 * 4));
    }

    #[test]
    fn roots() {
        let f = p(&[0, -4, 0, 1]); // t^3 - 4t
        assert_eq!(rational_roots(&f), vec![q(-2), q(0), q(2)]);
        let g: Poly<Qi> = Poly::from_coeffs(vec![Qi::real(q(4)), Qi::zero(), Qi::one()]); // t^2+4
        assert_eq!(gaussian_axis_roots(&g), vec![Qi::new(q(0), q(-2)), Qi::new(q(0), q(2))]);
    }
}

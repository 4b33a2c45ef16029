//! Scalars: rationals `Q`, Gaussian rationals `Qi`, and the ring/field traits
//! the linear algebra is generic over.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Commutative ring with unit in which division by nonzero integers is possible.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(k: i64) -> Self;
    /// Divide by a nonzero integer.
    fn div_int(&self, k: i64) -> Self;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

pub trait Field: Ring + Eq + Ord {
    fn inv(&self) -> Option<Self>;
    fn from_q(q: Q) -> Self;
    /// Complex conjugate, identity on `Q`.
    fn conj(&self) -> Self;
    const NAME: &'static str;
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    let s = s.replace('\u{2212}', "-");
    match s.split_once('/') {
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().ok()?;
            let d: BigInt = b.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Q::from_integer(n))
        }
    }
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(k: i64) -> Self {
        q(k)
    }
    fn div_int(&self, k: i64) -> Self {
        self / q(k)
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_q(q: Q) -> Self {
        q
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    const NAME: &'static str = "Q";
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Qi {
    pub re: Q,
    pub im: Q,
}

impl Qi {
    pub fn new(re: Q, im: Q) -> Self {
        Qi { re, im }
    }
    pub fn real(re: Q) -> Self {
        Qi { re, im: Zero::zero() }
    }
    pub fn i() -> Self {
        Qi { re: Zero::zero(), im: One::one() }
    }
    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
    pub fn is_imaginary(&self) -> bool {
        Zero::is_zero(&self.re)
    }
    pub fn norm(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", fmt_q(&self.re))
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", fmt_q(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", fmt_q(&self.re), fmt_q(&-self.im.clone()))
        } else {
            write!(f, "{}+{}i", fmt_q(&self.re), fmt_q(&self.im))
        }
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, o: Qi) -> Qi {
        Qi { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, o: Qi) -> Qi {
        Qi { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, o: Qi) -> Qi {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Qi { re, im }
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

impl Ring for Qi {
    fn zero() -> Self {
        Qi::default()
    }
    fn one() -> Self {
        Qi::real(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_int(k: i64) -> Self {
        Qi::real(q(k))
    }
    fn div_int(&self, k: i64) -> Self {
        Qi { re: &self.re / q(k), im: &self.im / q(k) }
    }
}

impl Field for Qi {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(Qi { re: &self.re / &n, im: -(&self.im / &n) })
    }
    fn from_q(q: Q) -> Self {
        Qi::real(q)
    }
    fn conj(&self) -> Self {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }
    const NAME: &'static str = "Qi";
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        let z = Qi::new(q(3), q(4));
        let w = z.inv().unwrap();
        assert_eq!(z * w, Qi::one());
        assert!(Qi::zero().inv().is_none());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_q("-5/10").unwrap(), qq(-1, 2));
        assert_eq!(fmt_q(&qq(6, 3)), "2");
        assert_eq!(fmt_q(&qq(-3, 6)), "-1/2");
        assert!(parse_q("1/0").is_none());
        assert_eq!(parse_q("\u{2212}5").unwrap(), q(-5));
    }

    #[test]
    fn i_squared() {
        assert_eq!(Qi::i() * Qi::i(), -Qi::one());
    }
}

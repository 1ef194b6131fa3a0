//! Exact arithmetic in the field K = Q(i, √2).
//!
//! A [`Scalar`] is stored on the rational basis `{1, i, √2, i√2}`. Every
//! component is a reduced [`BigRational`], so equality is component-wise.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Names of the basis elements as they appear in the textual form.
const BASIS_NAMES: [&str; 4] = ["", "i", "r2", "i*r2"];

/// Element `a + b·i + c·√2 + d·i√2` of K.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    c: [Rational; 4],
}

impl Scalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Scalar { c: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// The rational `num/den`; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar {
            c: [q, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn sqrt2() -> Self {
        Self::basis(2)
    }

    pub fn i_sqrt2() -> Self {
        Self::basis(3)
    }

    fn basis(k: usize) -> Self {
        let mut s = Self::zero();
        s.c[k] = Rational::one();
        s
    }

    /// Components on the basis `{1, i, √2, i√2}`.
    pub fn components(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.is_rational()
    }

    /// True when the `i`, `√2` and `i√2` components vanish.
    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// The single nonzero component, if there is exactly one.
    pub fn single_component(&self) -> Option<(usize, &Rational)> {
        let mut found = None;
        for (k, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((k, q));
            }
        }
        found
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Scalar {
            c: [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q, &self.c[3] * q],
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    /// Multiplicative inverse, by an exact solve of the 4×4 multiplication matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        // Column k of the matrix is self * basis_k.
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); 5]; 4];
        for k in 0..4 {
            let col = self * &Self::basis(k);
            for row in 0..4 {
                m[row][k] = col.c[row].clone();
            }
        }
        m[0][4] = Rational::one();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::Singular("multiplication matrix".into()))?;
            m.swap(col, pivot);
            let p = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v = &*v * &p;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..5 {
                        let t = &m[col][k] * &f;
                        m[r][k] -= t;
                    }
                }
            }
        }
        Ok(Scalar {
            c: [m[0][4].clone(), m[1][4].clone(), m[2][4].clone(), m[3][4].clone()],
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The automorphism `i ↦ -i`.
    pub fn conj_i(&self) -> Self {
        Scalar {
            c: [self.c[0].clone(), -&self.c[1], self.c[2].clone(), -&self.c[3]],
        }
    }

    /// The automorphism `√2 ↦ -√2`.
    pub fn conj_sqrt2(&self) -> Self {
        Scalar {
            c: [self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3]],
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn mul_components(x: &[Rational; 4], y: &[Rational; 4]) -> [Rational; 4] {
    let mut out: [Rational; 4] = Default::default();
    for (j, xj) in x.iter().enumerate() {
        if xj.is_zero() {
            continue;
        }
        for (k, yk) in y.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            // basis_j * basis_k = sign * 2^e * basis_(j xor k)
            let (sign, two) = match (j, k) {
                (1, 1) => (-1, false),
                (2, 2) => (1, true),
                (3, 3) => (-1, true),
                (1, 3) | (3, 1) => (-1, false),
                (2, 3) | (3, 2) => (1, true),
                _ => (1, false),
            };
            let mut t = xj * yk;
            if two {
                t *= Rational::from_integer(BigInt::from(2));
            }
            if sign < 0 {
                out[j ^ k] -= t;
            } else {
                out[j ^ k] += t;
            }
        }
    }
    out
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_rational() {
            return rhs.scale(&self.c[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.c[0]);
        }
        Scalar {
            c: mul_components(&self.c, &rhs.c),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for k in 0..4 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn rational_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// Textual form `a + b*i + c*r2 + d*i*r2`, omitting zero components.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mag = q.abs();
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", rational_text(&mag))?,
                (_, true) => write!(f, "{}", BASIS_NAMES[k])?,
                (_, false) => write!(f, "{}*{}", rational_text(&mag), BASIS_NAMES[k])?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let one_plus_i = Scalar::one() + Scalar::i();
        let one_minus_i = Scalar::one() - Scalar::i();
        assert_eq!(&one_plus_i * &one_minus_i, Scalar::from_int(2));
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(&Scalar::i_sqrt2() * &Scalar::i_sqrt2(), Scalar::from_int(-2));
        assert_eq!(&Scalar::i() * &Scalar::sqrt2(), Scalar::i_sqrt2());
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
        assert_eq!(
            Scalar::sqrt2().inv().unwrap(),
            Scalar::sqrt2().scale(&Rational::new(1.into(), 2.into()))
        );
        // (1 + √2)(-1 + √2) = 1
        let x = Scalar::one() + Scalar::sqrt2();
        assert_eq!(x.inv().unwrap(), Scalar::sqrt2() - Scalar::one());
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn textual_form() {
        let x = Scalar::new(
            Rational::new(1.into(), 2.into()),
            Rational::from_integer((-1).into()),
            Rational::zero(),
            Rational::from_integer(3.into()),
        );
        assert_eq!(x.to_string(), "1/2 - i + 3*i*r2");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!((-Scalar::sqrt2()).to_string(), "-r2");
    }
}

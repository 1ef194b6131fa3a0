//! Seeded random test data: scalars, polynomials and combinations of bases.

use crate::poly::{Frame, Poly};
use crate::scalars::{Rational, Scalar};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = rng.gen_range(1..=3);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A scalar with small rational components; `rational_only` zeroes the irrational parts.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, rational_only: bool) -> Scalar {
    let a = small_rational(rng);
    if rational_only {
        return Scalar::from_rational(a);
    }
    let mut parts = [
        a,
        Rational::from_integer(0.into()),
        Rational::from_integer(0.into()),
        Rational::from_integer(0.into()),
    ];
    for p in parts.iter_mut().skip(1) {
        if rng.gen_bool(0.3) {
            *p = small_rational(rng);
        }
    }
    let [a, b, c, d] = parts;
    Scalar::new(a, b, c, d)
}

/// A nonzero scalar.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, rational_only: bool) -> Scalar {
    loop {
        let s = scalar(rng, rational_only);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A homogeneous polynomial of degree `m` with at most `terms` monomials.
pub fn homogeneous<R: Rng + ?Sized>(rng: &mut R, frame: Frame, m: usize, terms: usize) -> Poly {
    let monos = frame.monomials(m as u32);
    let picked: Vec<_> = monos.choose_multiple(rng, terms.min(monos.len())).cloned().collect();
    picked.into_iter().fold(Poly::zero(frame), |acc, e| {
        let c = nonzero_scalar(rng, false);
        &acc + &Poly::monomial(frame, e, c).expect("live monomial")
    })
}

/// A polynomial of degree at most `max_degree`.
pub fn polynomial<R: Rng + ?Sized>(rng: &mut R, frame: Frame, max_degree: usize, terms: usize) -> Poly {
    (0..terms).fold(Poly::zero(frame), |acc, _| {
        let m = rng.gen_range(0..=max_degree);
        &acc + &homogeneous(rng, frame, m, 1)
    })
}

/// A random combination of `basis` with rational coefficients.
pub fn combination<R: Rng + ?Sized>(rng: &mut R, frame: Frame, basis: &[Poly]) -> Poly {
    basis.iter().fold(Poly::zero(frame), |acc, b| {
        let c = scalar(rng, true);
        &acc + &b.scale(&c)
    })
}

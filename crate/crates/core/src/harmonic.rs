//! Harmonic decomposition `A(m) = ⊕_k H(m−2k) Fᵏ`, harmonic valuation, and
//! bases of harmonic and polyharmonic polynomials.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{self, Exps, Frame, FrameKind, Poly};
use crate::scalars::{Rational, Scalar};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Number of variables of the quadratic form on `frame` (`n`, or `n + 2` on the ambient frame).
pub fn form_dim(frame: Frame) -> usize {
    match frame.kind() {
        FrameKind::UFull => frame.n() + 2,
        _ => frame.n(),
    }
}

/// `γ(t, m, n) = Π_{j=1}^{t} j (2(m−2t) + n + 2j − 2)`, so that
/// `Δ₁ᵗ(h Fᵗ) = γ h` for `h` harmonic of degree `m − 2t`.
pub fn gamma(t: usize, m: usize, n: usize) -> Rational {
    let base = 2 * (m as i64 - 2 * t as i64) + n as i64 - 2;
    let v = (1..=t as i64).fold(BigInt::from(1), |acc, j| acc * j * (base + 2 * j));
    Rational::from_integer(v)
}

/// `p = Σ_k p_k Fᵏ` with every `p_k` harmonic of degree `m − 2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicDecomp {
    pub frame: Frame,
    pub degree: usize,
    pub components: BTreeMap<usize, Poly>,
}

impl HarmonicDecomp {
    pub fn recompose(&self) -> Poly {
        let f = poly::quadratic_form(self.frame);
        self.components
            .iter()
            .fold(Poly::zero(self.frame), |acc, (&k, p)| &acc + &(p * &f.pow(k as u32)))
    }

    /// Smallest `k` with a nonzero component.
    pub fn valuation(&self) -> Option<usize> {
        self.components.keys().next().copied()
    }
}

/// Decomposes a homogeneous polynomial top-down with `p_t = Δ₁ᵗ(p)/γ`.
pub fn decompose(p: &Poly) -> Result<HarmonicDecomp> {
    let frame = p.frame();
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let m = p.degree().unwrap_or(0) as usize;
    let f = poly::quadratic_form(frame);
    let dim = form_dim(frame);
    let mut rest = p.clone();
    let mut components = BTreeMap::new();
    for t in (0..=m / 2).rev() {
        if rest.is_zero() {
            break;
        }
        let mut q = rest.clone();
        for _ in 0..t {
            q = poly::laplacian(&q);
        }
        if q.is_zero() {
            continue;
        }
        let g = Scalar::from_rational(gamma(t, m, dim));
        let pt = q.scale(&g.inv()?);
        rest = &rest - &(&pt * &f.pow(t as u32));
        components.insert(t, pt);
    }
    debug_assert!(rest.is_zero());
    Ok(HarmonicDecomp {
        frame,
        degree: m,
        components,
    })
}

/// Decomposes every graded piece; keys are degrees.
pub fn decompose_graded(p: &Poly) -> Result<BTreeMap<usize, HarmonicDecomp>> {
    p.graded_pieces()
        .into_iter()
        .map(|(m, piece)| Ok((m as usize, decompose(&piece)?)))
        .collect()
}

/// The harmonic valuation of a nonzero homogeneous polynomial.
pub fn harmonic_valuation(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidParameter("valuation of the zero polynomial".into()));
    }
    Ok(decompose(p)?.valuation().expect("nonzero input"))
}

/// `Σ ∂²` in the first `n − 1` variables of the X frame.
fn partial_laplacian(p: &Poly) -> Poly {
    let n = p.frame().n();
    (0..n - 1).fold(Poly::zero(p.frame()), |acc, s| &acc + &p.derivative(s).derivative(s))
}

fn factorial(k: usize) -> BigInt {
    (1..=k as u64).fold(BigInt::from(1), |a, b| a * b)
}

/// Basis of `H(k)` on the X frame, one element per monomial with `X_n`-exponent at most one:
/// `h = Σ_s (−1)^s / (2s+ε)! · X_n^{2s+ε} Δ'^s(X'^β)`, where `ε ∈ {0, 1}`.
pub fn harmonic_basis(n: usize, k: usize) -> Result<Vec<Poly>> {
    let frame = Frame::new(FrameKind::X, n)?;
    let xn = Poly::var(frame, n - 1)?;
    let mut out = Vec::new();
    for mono in frame.monomials(k as u32) {
        let eps = mono[n - 1] as usize;
        if eps > 1 {
            continue;
        }
        let mut lead = mono.clone();
        lead[n - 1] = 0;
        let mut cur = Poly::monomial(frame, lead, Scalar::one())?;
        let mut h = Poly::zero(frame);
        let mut s = 0usize;
        while !cur.is_zero() {
            let sign = if s.is_multiple_of(2) { 1 } else { -1 };
            let c = Rational::new(BigInt::from(sign), factorial(2 * s + eps));
            h = &h + &(&cur * &xn.pow((2 * s + eps) as u32)).scale(&Scalar::from_rational(c));
            cur = partial_laplacian(&cur);
            s += 1;
        }
        out.push(h);
    }
    Ok(out)
}

/// Dimension of `H(k)` in `n` variables: `C(n+k−1, k) − C(n+k−3, k−2)`.
pub fn harmonic_dim(n: usize, k: usize) -> usize {
    let a = binom(n + k - 1, k);
    let b = if k >= 2 { binom(n + k - 3, k - 2) } else { 0 };
    a - b
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficient matrix of `polys` (as columns) against the monomials `rows`.
pub fn coefficient_matrix(polys: &[Poly], rows: &[Exps]) -> Matrix {
    let index: BTreeMap<&Exps, usize> = rows.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = Matrix::zeros(rows.len(), polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (e, c) in p.terms() {
            m.set(index[e], j, c.clone());
        }
    }
    m
}

/// Matrix of `Δ₁ʳ : A(m) → A(m−2r)` on monomial bases of `frame`.
pub fn laplacian_power_matrix(frame: Frame, r: usize, m: usize) -> (Vec<Exps>, Matrix) {
    let cols = frame.monomials(m as u32);
    let rows = if m >= 2 * r {
        frame.monomials((m - 2 * r) as u32)
    } else {
        Vec::new()
    };
    let images: Vec<Poly> = cols
        .iter()
        .map(|e| {
            let mut p = Poly::monomial(frame, e.clone(), Scalar::one()).expect("live monomial");
            for _ in 0..r {
                p = poly::laplacian(&p);
            }
            p
        })
        .collect();
    (cols, coefficient_matrix(&images, &rows))
}

/// `ker Δ₁ʳ ∩ A(m)` by exact row reduction on the monomial basis.
pub fn polyharmonic_basis_dense(frame: Frame, r: usize, m: usize) -> Vec<Poly> {
    let (cols, mat) = laplacian_power_matrix(frame, r, m);
    mat.nullspace()
        .into_iter()
        .map(|v| {
            let terms = cols.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
            Poly::from_map(frame, terms)
        })
        .collect()
}

/// `{h Fᵏ : k < r, h ∈ H(m−2k)}` on the X frame.
pub fn polyharmonic_basis(n: usize, r: usize, m: usize) -> Result<Vec<Poly>> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let f = poly::quadratic_form(Frame::new(FrameKind::X, n)?);
    let mut out = Vec::new();
    for k in 0..r.min(m / 2 + 1) {
        let fk = f.pow(k as u32);
        for h in harmonic_basis(n, m - 2 * k)? {
            out.push(&h * &fk);
        }
    }
    Ok(out)
}

/// `Σ_{k<r, 2k≤m} dim H(m−2k)`.
pub fn polyharmonic_dim(n: usize, r: usize, m: usize) -> usize {
    (0..r.min(m / 2 + 1)).map(|k| harmonic_dim(n, m - 2 * k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_x1_squared() {
        let f = Frame::x(3);
        let x1 = Poly::var(f, 0).unwrap();
        let dec = decompose(&x1.pow(2)).unwrap();
        let third = Scalar::frac(1, 3);
        let q = poly::quadratic_form(f);
        assert_eq!(dec.components[&1], Poly::constant(f, third.clone()));
        assert_eq!(dec.components[&0], &x1.pow(2) - &q.scale(&third));
        assert_eq!(gamma(1, 2, 3), Rational::from_integer(3.into()));
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(harmonic_basis(3, 2).unwrap().len(), 5);
        assert_eq!(harmonic_basis(4, 3).unwrap().len(), 16);
        for n in 3..=5 {
            for k in 0..=5 {
                let b = harmonic_basis(n, k).unwrap();
                assert_eq!(b.len(), harmonic_dim(n, k));
                assert!(b.iter().all(|h| poly::laplacian(h).is_zero()));
                assert_eq!(coefficient_matrix(&b, &Frame::x(n).monomials(k as u32)).rank(), b.len());
            }
        }
    }

    #[test]
    fn valuations() {
        let f = Frame::x(4);
        let q = poly::quadratic_form(f);
        assert_eq!(harmonic_valuation(&q).unwrap(), 1);
        let xi = Poly::u_var(Frame::u(4), 2).unwrap().to_x_frame().unwrap();
        assert_eq!(harmonic_valuation(&xi.pow(3)).unwrap(), 0);
        assert_eq!(harmonic_valuation(&(&q * &xi.pow(2))).unwrap(), 1);
    }

    #[test]
    fn polyharmonic_dims() {
        assert_eq!(polyharmonic_basis(4, 2, 2).unwrap().len(), 10);
        for (n, r, m) in [(3, 1, 4), (4, 2, 5), (5, 2, 4)] {
            assert_eq!(
                polyharmonic_basis_dense(Frame::x(n), r, m).len(),
                polyharmonic_dim(n, r, m)
            );
        }
    }
}

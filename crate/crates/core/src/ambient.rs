//! Conformal densities on the ambient space.
//!
//! `S = A[Q̃, t^{±1}]` with `t² = U_1` and `U_{-1} = t^{-2}(Q̃ − F)`, graded by
//! `wt(U_j) = 1`, `wt(t) = ½`. Elements of `S̄ = S/Q̃ʳS` are stored as
//! `Σ f_{j,ν} t^ν Q̄^j` with `f_{j,ν} ∈ A`, `j < r`. Weights are kept doubled
//! so they stay integral.

use crate::duality::tau;
use crate::error::{Error, Result};
use crate::harmonic::{self, binom};
use crate::liealg::{ChevalleySystem, Weight};
use crate::linalg::{SparseSpan, SparseVec};
use crate::poly::{self, Exps, Frame, FrameKind, Poly};
use crate::report::{all_of, Check};
use crate::sample;
use crate::scalars::{Rational, Scalar};
use crate::weyl::WeylOp;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Key of a component: `(Q̄-degree j, t-exponent ν)`.
pub type CompKey = (usize, i64);

/// An element of `S̄_r`, or of `S` when `r` exceeds every `Q̃`-degree in play.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientElt {
    n: usize,
    r: usize,
    terms: BTreeMap<CompKey, Poly>,
}

/// `2δ = 2r − n`.
pub fn delta2(n: usize, r: usize) -> i64 {
    2 * r as i64 - n as i64
}

fn half(v: i64) -> Rational {
    Rational::new(BigInt::from(v), BigInt::from(2))
}

impl AmbientElt {
    pub fn zero(n: usize, r: usize) -> AmbientElt {
        AmbientElt {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    /// `f t^ν Q̄^j`; `f` must live on the U frame.
    pub fn term(n: usize, r: usize, j: usize, nu: i64, f: Poly) -> Result<AmbientElt> {
        poly::require_kind(f.frame(), FrameKind::U)?;
        let mut out = AmbientElt::zero(n, r);
        out.add_term(j, nu, &f);
        Ok(out)
    }

    /// `t^ν`.
    pub fn t_power(n: usize, r: usize, nu: i64) -> AmbientElt {
        AmbientElt::term(n, r, 0, nu, Poly::one(Frame::u(n))).expect("U frame")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn frame(&self) -> Frame {
        Frame::u(self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CompKey, &Poly)> {
        self.terms.iter()
    }

    pub fn get(&self, j: usize, nu: i64) -> Option<&Poly> {
        self.terms.get(&(j, nu))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, j: usize, nu: i64, f: &Poly) {
        if j >= self.r || f.is_zero() {
            return;
        }
        let slot = self.terms.entry((j, nu)).or_insert_with(|| Poly::zero(f.frame()));
        *slot = &*slot + f;
        if slot.is_zero() {
            self.terms.remove(&(j, nu));
        }
    }

    /// The same element with a different truncation order.
    pub fn with_r(&self, r: usize) -> AmbientElt {
        let mut out = AmbientElt::zero(self.n, r);
        for (&(j, nu), f) in &self.terms {
            out.add_term(j, nu, f);
        }
        out
    }

    /// The `j = 0` part.
    pub fn q_free_part(&self) -> AmbientElt {
        let mut out = AmbientElt::zero(self.n, self.r);
        for (&(j, nu), f) in self.terms.iter().filter(|((j, _), _)| *j == 0) {
            out.add_term(j, nu, f);
        }
        out
    }

    /// Doubled weights of all homogeneous pieces.
    pub fn weights2(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self
            .terms
            .iter()
            .flat_map(|(&(j, nu), f)| {
                f.graded_pieces()
                    .into_keys()
                    .map(move |m| 2 * m as i64 + nu + 4 * j as i64)
            })
            .collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// The doubled weight, if the element is homogeneous and nonzero.
    pub fn weight2(&self) -> Option<i64> {
        match self.weights2().as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> AmbientElt {
        let mut out = AmbientElt::zero(self.n, self.r);
        for (&(j, nu), f) in &self.terms {
            out.add_term(j, nu, &f.scale(c));
        }
        out
    }

    /// Applies `g` to every coefficient polynomial.
    pub fn map_coeffs(&self, g: impl Fn(&Poly) -> Poly) -> AmbientElt {
        let mut out = AmbientElt::zero(self.n, self.r);
        for (&(j, nu), f) in &self.terms {
            out.add_term(j, nu, &g(f));
        }
        out
    }

    /// Rewrites an ambient-frame polynomial via `U_1 = t²`, `U_{-1} = t^{-2}(Q̃ − F)`.
    pub fn from_ufull(p: &Poly, r: usize) -> Result<AmbientElt> {
        poly::require_kind(p.frame(), FrameKind::UFull)?;
        let n = p.frame().n();
        let uf = Frame::u(n);
        let f = poly::quadratic_form(uf);
        let mut out = AmbientElt::zero(n, r);
        for (e, c) in p.terms() {
            let (a, b) = (e[0] as i64, e[1] as usize);
            let g = Poly::monomial(uf, e[2..].iter().copied().collect(), c.clone())?;
            let nu = 2 * a - 2 * b as i64;
            for i in 0..=b {
                let sign = if (b - i) % 2 == 0 { 1 } else { -1 };
                let coeff = Scalar::from_int(sign * binom(b, i) as i64);
                out.add_term(i, nu, &(&g * &f.pow((b - i) as u32)).scale(&coeff));
            }
        }
        Ok(out)
    }

    /// The ambient-frame polynomial, when every `t`-exponent is even and nonnegative.
    pub fn to_ufull(&self) -> Option<Poly> {
        let full = Frame::ufull(self.n);
        let u1 = Poly::u_var(full, 1).expect("label");
        let q = poly::quadratic_form(full);
        let mut out = Poly::zero(full);
        for (&(j, nu), f) in &self.terms {
            if nu < 0 || nu % 2 != 0 {
                return None;
            }
            let piece = &(&f.embed_ufull().ok()? * &u1.pow((nu / 2) as u32)) * &q.pow(j as u32);
            out = &out + &piece;
        }
        Some(out)
    }
}

impl fmt::Display for AmbientElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(j, nu), p)| format!("({p})*t^{nu}*Qb^{j}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Serialized as `(j, t-exponent, polynomial)` triples in key order.
impl Serialize for AmbientElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(j, nu), p) in &self.terms {
            seq.serialize_element(&(j, nu, p.to_string()))?;
        }
        seq.end()
    }
}

fn combine(a: &AmbientElt, b: &AmbientElt, sign: i64) -> AmbientElt {
    assert_eq!((a.n, a.r), (b.n, b.r), "ambient elements of different rings");
    let mut out = a.clone();
    let c = Scalar::from_int(sign);
    for (&(j, nu), f) in &b.terms {
        out.add_term(j, nu, &f.scale(&c));
    }
    out
}

impl std::ops::Add<&AmbientElt> for &AmbientElt {
    type Output = AmbientElt;
    fn add(self, rhs: &AmbientElt) -> AmbientElt {
        combine(self, rhs, 1)
    }
}

impl std::ops::Sub<&AmbientElt> for &AmbientElt {
    type Output = AmbientElt;
    fn sub(self, rhs: &AmbientElt) -> AmbientElt {
        combine(self, rhs, -1)
    }
}

impl std::ops::Mul<&AmbientElt> for &AmbientElt {
    type Output = AmbientElt;
    fn mul(self, rhs: &AmbientElt) -> AmbientElt {
        assert_eq!((self.n, self.r), (rhs.n, rhs.r), "ambient elements of different rings");
        let mut out = AmbientElt::zero(self.n, self.r);
        for (&(j, nu), f) in &self.terms {
            for (&(k, mu), g) in &rhs.terms {
                out.add_term(j + k, nu + mu, &(f * g));
            }
        }
        out
    }
}

/// The ambient Laplacian on `S` followed by truncation at `Q̄ʳ`, computed
/// termwise from `Δ(uQ̃ᵏ) = Δ(u)Q̃ᵏ + k(n + 2 + 2wt(u) + 2(k−1))uQ̃^{k−1}`
/// with `Δ(f t^ν) = Δ₁(f) t^ν`.
pub fn laplacian_s(x: &AmbientElt) -> AmbientElt {
    let mut out = AmbientElt::zero(x.n, x.r);
    for (&(k, nu), f) in &x.terms {
        out.add_term(k, nu, &poly::laplacian(f));
        if k == 0 {
            continue;
        }
        for (m, piece) in f.graded_pieces() {
            // n + 2 + 2wt(u) + 2(k − 1) with 2wt(u) = 2m + ν.
            let factor = k as i64 * (x.n as i64 + 2 + 2 * m as i64 + nu + 2 * (k as i64 - 1));
            out.add_term(k - 1, nu, &piece.scale(&Scalar::from_int(factor)));
        }
    }
    out
}

/// `Δ̄_δ : S̄(δ) → S̄(δ−2)`; rejects inputs with a term of another weight.
pub fn ambient_delta(x: &AmbientElt) -> Result<AmbientElt> {
    let want = delta2(x.n, x.r);
    if let Some(w) = x.weights2().into_iter().find(|&w| w != want) {
        return Err(Error::WrongWeight {
            expected: format!("{}", half(want)),
            found: format!("{}", half(w)),
        });
    }
    Ok(laplacian_s(x))
}

/// Applies a first-order derivation of the ambient frame to the canonical
/// lift, using `∂_{U_1}(t) = 1/(2t)`. Well defined on `S̄` when `D(Q̃) ∈ Q̃S`.
pub fn apply_derivation(op: &WeylOp, x: &AmbientElt) -> Result<AmbientElt> {
    let full = op.frame();
    poly::require_kind(full, FrameKind::UFull)?;
    let nv = full.nvars();
    if op
        .terms()
        .any(|(k, _)| k[nv..].iter().map(|&v| v as u32).sum::<u32>() != 1)
    {
        return Err(Error::InvalidParameter(format!("{op} is not a derivation")));
    }
    let r = x.r;
    let du1 = AmbientElt::from_ufull(&op.apply(&Poly::u_var(full, 1)?), r)?;
    let dq = AmbientElt::from_ufull(&op.apply(&poly::quadratic_form(full)), r)?;
    let mut out = AmbientElt::zero(x.n, r);
    for (&(j, nu), f) in &x.terms {
        let rest = AmbientElt::term(x.n, r, j, nu, Poly::one(f.frame()))?;
        let df = AmbientElt::from_ufull(&op.apply(&f.embed_ufull()?), r)?;
        out = &out + &(&df * &rest);
        if nu != 0 {
            // D(t^ν) = (ν/2) t^{ν−2} D(U_1)
            let t_part = AmbientElt::term(x.n, r, j, nu - 2, f.scale(&Scalar::from_rational(half(nu))))?;
            out = &out + &(&t_part * &du1);
        }
        if j > 0 {
            let q_part = AmbientElt::term(x.n, r, j - 1, nu, f.scale(&Scalar::from_int(j as i64)))?;
            out = &out + &(&q_part * &dq);
        }
    }
    Ok(out)
}

/// `c_p = (−2)^p p! (r−1)⋯(r−p)`.
pub fn c_p(r: usize, p: usize) -> Rational {
    let mut v = BigInt::one();
    for i in 1..=p as i64 {
        v *= -2 * i * (r as i64 - i);
    }
    Rational::from_integer(v)
}

fn require_weight(a: &AmbientElt) -> Result<()> {
    let want = delta2(a.n, a.r);
    match a.weights2().into_iter().find(|&w| w != want) {
        Some(w) => Err(Error::WrongWeight {
            expected: format!("{}", half(want)),
            found: format!("{}", half(w)),
        }),
        None => Ok(()),
    }
}

fn laplacian_power(p: &Poly, k: usize) -> Poly {
    (0..k).fold(p.clone(), |q, _| poly::laplacian(&q))
}

/// `ev₀⁻¹`: the harmonic lift `Σ_p c_p⁻¹ Δ₁ᵖ(a) Q̄ᵖ` of `a ∈ 𝒮_λ`.
pub fn lift(a: &AmbientElt) -> Result<AmbientElt> {
    require_weight(a)?;
    if a.terms.keys().any(|(j, _)| *j > 0) {
        return Err(Error::NotInSubspace("element has Q-components".into()));
    }
    if a.terms.values().any(|f| !laplacian_power(f, a.r).is_zero()) {
        return Err(Error::NotInSubspace("Lap_1^r does not vanish".into()));
    }
    let mut out = AmbientElt::zero(a.n, a.r);
    for p in 0..a.r {
        let c = c_p(a.r, p);
        assert!(!c.is_zero(), "c_p vanishes for p = {p} < r");
        let inv = Scalar::from_rational(c.recip());
        for (&(_, nu), f) in &a.terms {
            out.add_term(p, nu, &laplacian_power(f, p).scale(&inv));
        }
    }
    Ok(out)
}

/// `ev₀(f̄) = f_0` for `f̄ ∈ N_λ`.
pub fn ev0(x: &AmbientElt) -> Result<AmbientElt> {
    if !ambient_delta(x)?.is_zero() {
        return Err(Error::NotInSubspace("element is not harmonic".into()));
    }
    Ok(x.q_free_part())
}

/// `σ(Σ a(m) t^{2(δ−m)}) = Σ a(m)`.
pub fn sigma(a: &AmbientElt) -> Result<Poly> {
    require_weight(a)?;
    if a.terms.keys().any(|(j, _)| *j > 0) {
        return Err(Error::NotInSubspace("element has Q-components".into()));
    }
    let g = a.terms.values().fold(Poly::zero(a.frame()), |acc, f| &acc + f);
    if !laplacian_power(&g, a.r).is_zero() {
        return Err(Error::NotInSubspace("Lap_1^r does not vanish".into()));
    }
    Ok(g)
}

/// `σ⁻¹(g)` for `g ∈ M_r` on the U frame.
pub fn sigma_inverse(g: &Poly, r: usize) -> Result<AmbientElt> {
    poly::require_kind(g.frame(), FrameKind::U)?;
    if !laplacian_power(g, r).is_zero() {
        return Err(Error::NotInSubspace("Lap_1^r does not vanish".into()));
    }
    let n = g.frame().n();
    let d2 = delta2(n, r);
    let mut out = AmbientElt::zero(n, r);
    for (m, piece) in g.graded_pieces() {
        out.add_term(0, d2 - 2 * m as i64, &piece);
    }
    Ok(out)
}

/// Basis of the `N_λ` slices with `f_0 ∈ A(m) t^{2(δ−m)}`, `m ≤ max_degree`.
pub fn harmonic_density_basis(n: usize, r: usize, max_degree: usize) -> Result<Vec<AmbientElt>> {
    let frame = Frame::new(FrameKind::U, n)?;
    let mut out = Vec::new();
    for m in 0..=max_degree {
        for g in harmonic::polyharmonic_basis_dense(frame, r, m) {
            out.push(lift(&sigma_inverse(&g, r)?)?);
        }
    }
    Ok(out)
}

fn flat(x: &AmbientElt) -> SparseVec<(usize, i64, Exps)> {
    x.terms
        .iter()
        .flat_map(|(&(j, nu), f)| f.terms().map(move |(e, c)| ((j, nu, e.clone()), c.clone())))
        .collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SliceDim {
    pub degree: usize,
    /// `dim ker Δ̄` on `⊕_j A(m−2j) t^{2(δ−m)} Q̄^j`, by row reduction.
    pub kernel_dim: usize,
    /// `dim M_r(m)`.
    pub polyharmonic_dim: usize,
    /// The constructed basis lies in the kernel and spans it.
    pub basis_spans_kernel: bool,
}

/// Slice dimensions of `N_λ` against `M_r`.
pub fn slice_dims(n: usize, r: usize, max_degree: usize) -> Result<Vec<SliceDim>> {
    let frame = Frame::new(FrameKind::U, n)?;
    let d2 = delta2(n, r);
    let mut out = Vec::new();
    for m in 0..=max_degree {
        let nu = d2 - 2 * m as i64;
        let mut cols = Vec::new();
        for j in 0..r.min(m / 2 + 1) {
            for e in frame.monomials((m - 2 * j) as u32) {
                let f = Poly::monomial(frame, e, Scalar::one())?;
                cols.push(AmbientElt::term(n, r, j, nu, f)?);
            }
        }
        let mut images: SparseSpan<(usize, i64, Exps)> = SparseSpan::new();
        for c in &cols {
            images.insert(&flat(&ambient_delta(c)?));
        }
        let kernel_dim = cols.len() - images.dim();
        let basis: Vec<AmbientElt> = harmonic::polyharmonic_basis_dense(frame, r, m)
            .iter()
            .map(|g| lift(&sigma_inverse(g, r)?))
            .collect::<Result<_>>()?;
        let mut span: SparseSpan<(usize, i64, Exps)> = SparseSpan::new();
        let mut harmonic_ok = true;
        for b in &basis {
            harmonic_ok &= ambient_delta(b)?.is_zero();
            span.insert(&flat(b));
        }
        out.push(SliceDim {
            degree: m,
            kernel_dim,
            polyharmonic_dim: harmonic::polyharmonic_dim(n, r, m),
            basis_spans_kernel: harmonic_ok && span.dim() == kernel_dim,
        });
    }
    Ok(out)
}

/// The identity `Δ(uQ̃ᵏ) = Δ(u)Q̃ᵏ + k(n+2+2wt(u)+2(k−1))uQ̃^{k−1}` on the
/// ambient polynomial ring, and agreement of the `S`-side Laplacian and
/// `E_ab` action with the ambient-frame computation through `U_{-1} = t^{-2}(Q̃ − F)`.
pub fn ambient_identities_check<R: Rng + ?Sized>(
    n: usize,
    r: usize,
    samples: usize,
    rng: &mut R,
) -> Result<Vec<Check>> {
    let full = Frame::new(FrameKind::UFull, n)?;
    let q = poly::quadratic_form(full);
    let ys = ChevalleySystem::derivation(n)?;
    let mut eq = Vec::new();
    let mut lap = Vec::new();
    let mut der = Vec::new();
    for _ in 0..samples {
        let m = rng.gen_range(0..=3);
        let u = sample::homogeneous(rng, full, m, 3);
        for k in 1..=r {
            let lhs = poly::laplacian(&(&u * &q.pow(k as u32)));
            let factor = k as i64 * (n as i64 + 2 + 2 * m as i64 + 2 * (k as i64 - 1));
            let rhs = &(&poly::laplacian(&u) * &q.pow(k as u32))
                + &(&u * &q.pow(k as u32 - 1)).scale(&Scalar::from_int(factor));
            eq.push(Check::from_bool(format!("u = {u}, k = {k}"), lhs == rhs, ""));
        }
        // No truncation: the bound exceeds every Q-degree that can occur.
        let big = m + 2;
        let x = AmbientElt::from_ufull(&u, big)?;
        let via_b = AmbientElt::from_ufull(&poly::laplacian(&u), big)?;
        lap.push(Check::from_bool(format!("Lap({u})"), laplacian_s(&x) == via_b, ""));
        let label = &ys.labels()[rng.gen_range(0..ys.labels().len())];
        let y = ys.get(label).expect("label");
        let via_b = AmbientElt::from_ufull(&y.apply(&u), big)?;
        der.push(Check::from_bool(
            format!("{label}({u})"),
            apply_derivation(y, &x)? == via_b,
            "",
        ));
    }
    let tag = format!("n={n} r={r}");
    Ok(vec![
        all_of(format!("{tag}: Lap(u Q^k) identity"), eq),
        all_of(format!("{tag}: Laplacian on S matches the ambient frame"), lap),
        all_of(format!("{tag}: E_ab on S matches the ambient frame"), der),
    ])
}

/// `σ(ev₀(Y·f̄)) = τ(Y)·σ(ev₀(f̄))` for every Chevalley basis element `Y`
/// and random `f̄ ∈ N_λ` with `f_0` of degree at most `max_degree`.
pub fn equivariance_check<R: Rng + ?Sized>(
    n: usize,
    r: usize,
    max_degree: usize,
    samples: usize,
    rng: &mut R,
) -> Result<Check> {
    let ys = ChevalleySystem::derivation(n)?;
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let bases: Vec<Vec<Poly>> = (0..=max_degree)
        .map(|m| harmonic::polyharmonic_basis_dense(frame, r, m))
        .collect();
    let mut checks = Vec::new();
    for label in ys.labels() {
        let y = ys.get(label).expect("label");
        let t = tau(&xs, label);
        for _ in 0..samples {
            let m = rng.gen_range(0..=max_degree);
            let g = sample::combination(rng, frame, &bases[m]);
            let fbar = lift(&sigma_inverse(&g, r)?)?;
            let moved = apply_derivation(y, &fbar)?;
            let lhs = sigma(&ev0(&moved)?)?;
            let rhs = t.apply(&g);
            checks.push(Check::from_bool(format!("{label}"), lhs == rhs, format!("g = {g}")));
        }
    }
    Ok(all_of(
        format!("n={n} r={r} D={max_degree}: sigma o ev0 is g-equivariant"),
        checks,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct HighestWeightReport {
    pub n: usize,
    pub r: usize,
    pub e_lambda_harmonic: bool,
    pub e_lambda_killed: bool,
    pub e_lambda_weight: Vec<String>,
    pub e_lambda_weight_ok: bool,
    /// `dim U(g)e_λ` when it is finite (case n even, r ≥ n/2).
    pub finite_submodule_dim: Option<usize>,
    pub expected_finite_dim: Option<usize>,
    pub e_mu_harmonic: Option<bool>,
    pub e_mu_killed_mod_submodule: Option<bool>,
    pub e_mu_weight: Option<Vec<String>>,
    pub e_mu_weight_ok: Option<bool>,
    /// `σ(ev₀)` sends `e_λ ↦ 1` and `e_μ ↦ U_2^{δ+1}`.
    pub sigma_images_ok: bool,
}

impl HighestWeightReport {
    pub fn checks(&self) -> Vec<Check> {
        let tag = format!("n={} r={}", self.n, self.r);
        let mut out = vec![
            Check::from_bool(format!("{tag}: e_lambda harmonic"), self.e_lambda_harmonic, ""),
            Check::from_bool(format!("{tag}: n+ e_lambda = 0"), self.e_lambda_killed, ""),
            Check::from_bool(
                format!("{tag}: e_lambda has weight delta*eps1"),
                self.e_lambda_weight_ok,
                self.e_lambda_weight.join(","),
            ),
            Check::from_bool(format!("{tag}: sigma(ev0) of e_lambda, e_mu"), self.sigma_images_ok, ""),
        ];
        if let (Some(dim), Some(exp)) = (self.finite_submodule_dim, self.expected_finite_dim) {
            out.push(Check::from_bool(
                format!("{tag}: dim U(g)e_lambda"),
                dim == exp,
                format!("{dim} vs {exp}"),
            ));
        }
        if let (Some(h), Some(k), Some(w)) = (self.e_mu_harmonic, self.e_mu_killed_mod_submodule, self.e_mu_weight_ok) {
            out.push(Check::from_bool(format!("{tag}: e_mu harmonic"), h, ""));
            out.push(Check::from_bool(format!("{tag}: n+ e_mu in U(g)e_lambda"), k, ""));
            out.push(Check::from_bool(
                format!("{tag}: e_mu has weight mu"),
                w,
                self.e_mu_weight.clone().unwrap_or_default().join(","),
            ));
        }
        out
    }
}

fn weight_of(ys: &ChevalleySystem, x: &AmbientElt) -> Result<Option<Weight>> {
    let mut coords = Vec::new();
    for j in 1..=ys.roots.ell {
        let hx = apply_derivation(ys.cartan(j), x)?;
        let Some(((key, p), _)) = x.terms().next().zip(Some(())) else {
            return Ok(None);
        };
        let c = match (hx.get(key.0, key.1), p.terms().next()) {
            (Some(hp), Some((e, pc))) => hp.coeff(e).div(pc)?,
            (None, _) => Scalar::zero(),
            _ => return Ok(None),
        };
        if hx != x.scale(&c) {
            return Ok(None);
        }
        match c.as_rational() {
            Some(q) => coords.push(q.clone()),
            None => return Ok(None),
        }
    }
    Ok(Some(Weight(coords)))
}

/// Highest-weight vectors `e_λ = [t^{2δ}]` and, in the finite-quotient case,
/// `e_μ = [U_2^{δ+1} t^{-2}]`.
pub fn highest_weight_vectors_check(n: usize, r: usize) -> Result<HighestWeightReport> {
    let ys = ChevalleySystem::derivation(n)?;
    let frame = Frame::new(FrameKind::U, n)?;
    let d2 = delta2(n, r);
    let ell = ys.roots.ell;
    let e_lambda = AmbientElt::t_power(n, r, d2);
    let positive = ys.roots.positive_roots();
    let mut killed = true;
    for a in &positive {
        killed &= apply_derivation(ys.root_vector(a), &e_lambda)?.is_zero();
    }
    let lambda = Weight::eps(ell, 1, half(d2));
    let w = weight_of(&ys, &e_lambda)?;
    let mut report = HighestWeightReport {
        n,
        r,
        e_lambda_harmonic: ambient_delta(&e_lambda)?.is_zero(),
        e_lambda_killed: killed,
        e_lambda_weight: w.as_ref().map(|w| w.coord_strings()).unwrap_or_default(),
        e_lambda_weight_ok: w.as_ref() == Some(&lambda),
        finite_submodule_dim: None,
        expected_finite_dim: None,
        e_mu_harmonic: None,
        e_mu_killed_mod_submodule: None,
        e_mu_weight: None,
        e_mu_weight_ok: None,
        sigma_images_ok: sigma(&ev0(&e_lambda)?)? == Poly::one(frame),
    };
    if n % 2 == 1 || 2 * r < n {
        return Ok(report);
    }
    let delta = (d2 / 2) as usize;
    let span = generated_submodule(&ys, &e_lambda)?;
    report.finite_submodule_dim = Some(span.dim());
    report.expected_finite_dim = Some(harmonic::harmonic_dim(n + 2, delta));
    let u2 = Poly::u_var(frame, 2)?.pow(delta as u32 + 1);
    let e_mu = AmbientElt::term(n, r, 0, -2, u2.clone())?;
    report.e_mu_harmonic = Some(ambient_delta(&e_mu)?.is_zero());
    let mut mu_killed = !span.contains(&flat(&e_mu));
    for a in &positive {
        mu_killed &= span.contains(&flat(&apply_derivation(ys.root_vector(a), &e_mu)?));
    }
    report.e_mu_killed_mod_submodule = Some(mu_killed);
    let mut mu = Weight::zero(ell);
    mu.0[0] = -Rational::one();
    mu.0[1] = Rational::from_integer(BigInt::from(delta as i64 + 1));
    let w = weight_of(&ys, &e_mu)?;
    report.e_mu_weight = w.as_ref().map(|w| w.coord_strings());
    report.e_mu_weight_ok = Some(w.as_ref() == Some(&mu));
    report.sigma_images_ok &= sigma(&ev0(&e_mu)?)? == u2;
    Ok(report)
}

/// Span of `U(g)·x` under the derivation action; must be finite dimensional.
fn generated_submodule(ys: &ChevalleySystem, x: &AmbientElt) -> Result<SparseSpan<(usize, i64, Exps)>> {
    const LIMIT: usize = 20_000;
    let ops: Vec<&WeylOp> = ys.labels().iter().map(|l| ys.get(l).expect("label")).collect();
    let mut span = SparseSpan::new();
    span.insert(&flat(x));
    let mut queue = vec![x.clone()];
    while let Some(v) = queue.pop() {
        for op in &ops {
            let img = apply_derivation(op, &v)?;
            if !img.is_zero() && span.insert(&flat(&img)) {
                if span.dim() > LIMIT {
                    return Err(Error::InvalidParameter("generated submodule is not finite".into()));
                }
                queue.push(img);
            }
        }
    }
    Ok(span)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn constants() {
        assert_eq!(c_p(3, 1), Rational::from_integer((-4).into()));
        assert_eq!(c_p(3, 2), Rational::from_integer(16.into()));
        assert_eq!(c_p(4, 0), Rational::one());
    }

    #[test]
    fn e_lambda_is_harmonic_and_wrong_weight_rejected() {
        let e = AmbientElt::t_power(5, 2, delta2(5, 2));
        assert!(ambient_delta(&e).unwrap().is_zero());
        let bad = AmbientElt::t_power(5, 2, 0);
        assert!(matches!(ambient_delta(&bad), Err(Error::WrongWeight { .. })));
    }

    #[test]
    fn identities() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for (n, r) in [(3, 2), (4, 2)] {
            let checks = ambient_identities_check(n, r, 6, &mut rng).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn slices_match() {
        for s in slice_dims(4, 2, 4).unwrap() {
            assert_eq!(s.kernel_dim, s.polyharmonic_dim, "{s:?}");
            assert!(s.basis_spans_kernel, "{s:?}");
        }
    }

    #[test]
    fn equivariance_small() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let c = equivariance_check(4, 2, 3, 1, &mut rng).unwrap();
        assert!(c.passed, "{c:?}");
        let c = equivariance_check(5, 1, 3, 1, &mut rng).unwrap();
        assert!(c.passed, "{c:?}");
    }

    #[test]
    fn highest_weights() {
        for (n, r) in [(5, 2), (4, 2), (4, 3)] {
            let rep = highest_weight_vectors_check(n, r).unwrap();
            assert!(rep.checks().iter().all(|c| c.passed), "{rep:?}");
        }
    }
}

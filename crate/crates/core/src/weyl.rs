//! The Weyl algebra of a frame, in normal form.
//!
//! A [`WeylOp`] is a finite sum `Σ c · x^α ∂^β` with every multiplication
//! operator written to the left of every derivative. Products are
//! re-normalized with `∂^b x^c = Σ_k C(b,k) C(c,k) k! x^(c-k) ∂^(b-k)`.

use crate::error::{Error, Result};
use crate::poly::{self, grlex_cmp, Exps, Frame, FrameKind, Poly};
use crate::scalars::{Rational, Scalar};
use num_bigint::BigInt;
use num_traits::One;
use smallvec::SmallVec;
use std::collections::{btree_map::Entry, BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

/// Key of a normal-ordered term: x-exponents followed by ∂-exponents.
pub type WExps = SmallVec<[u16; 24]>;

/// Differential operator with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylOp {
    frame: Frame,
    terms: BTreeMap<WExps, Scalar>,
}

fn key(x: &[u16], d: &[u16]) -> WExps {
    let mut k: WExps = SmallVec::with_capacity(x.len() + d.len());
    k.extend_from_slice(x);
    k.extend_from_slice(d);
    k
}

fn add_into(map: &mut BTreeMap<WExps, Scalar>, k: WExps, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn falling(n: u16, k: u16) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

fn binom(n: u16, k: u16) -> BigInt {
    falling(n, k) / falling(k, k)
}

impl WeylOp {
    pub fn zero(frame: Frame) -> WeylOp {
        WeylOp {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(frame: Frame, c: Scalar) -> WeylOp {
        let mut op = WeylOp::zero(frame);
        add_into(&mut op.terms, SmallVec::from_elem(0, 2 * frame.nvars()), c);
        op
    }

    pub fn one(frame: Frame) -> WeylOp {
        WeylOp::scalar(frame, Scalar::one())
    }

    /// Multiplication by a polynomial.
    pub fn from_poly(p: &Poly) -> WeylOp {
        let nv = p.frame().nvars();
        let zeros: Exps = SmallVec::from_elem(0, nv);
        WeylOp {
            frame: p.frame(),
            terms: p.terms().map(|(e, c)| (key(e, &zeros), c.clone())).collect(),
        }
    }

    /// Constant-coefficient operator whose symbol is `sym` (slot `s` of `sym` stands for `∂_s`).
    pub fn from_symbol(sym: &Poly) -> WeylOp {
        let nv = sym.frame().nvars();
        let zeros: Exps = SmallVec::from_elem(0, nv);
        WeylOp {
            frame: sym.frame(),
            terms: sym.terms().map(|(e, c)| (key(&zeros, e), c.clone())).collect(),
        }
    }

    /// Multiplication by the coordinate in `slot`.
    pub fn x(frame: Frame, slot: usize) -> Result<WeylOp> {
        Ok(WeylOp::from_poly(&Poly::var(frame, slot)?))
    }

    /// The derivative `∂` in `slot`.
    pub fn d(frame: Frame, slot: usize) -> Result<WeylOp> {
        Ok(WeylOp::from_symbol(&Poly::var(frame, slot)?))
    }

    /// `U_label` as a multiplication operator.
    pub fn u(frame: Frame, label: i32) -> Result<WeylOp> {
        Ok(WeylOp::from_poly(&Poly::u_var(frame, label)?))
    }

    /// `∂/∂U_label`.
    pub fn du(frame: Frame, label: i32) -> Result<WeylOp> {
        Ok(WeylOp::from_symbol(&Poly::u_var(frame, label)?))
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Terms as `(x-exponents ++ ∂-exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&WExps, &Scalar)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)] // `is_zero` is the emptiness test
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn from_map(frame: Frame, mut terms: BTreeMap<WExps, Scalar>) -> WeylOp {
        terms.retain(|_, c| !c.is_zero());
        WeylOp { frame, terms }
    }

    /// Order of the operator: the largest total ∂-degree (`None` for zero).
    pub fn order(&self) -> Option<u32> {
        let nv = self.frame.nvars();
        self.terms.keys().map(|k| poly::total_degree(&k[nv..])).max()
    }

    /// The polynomial when the operator has order zero.
    pub fn as_poly(&self) -> Option<Poly> {
        let nv = self.frame.nvars();
        let mut p = Poly::zero(self.frame);
        for (k, c) in &self.terms {
            if k[nv..].iter().any(|&e| e > 0) {
                return None;
            }
            p = &p + &Poly::monomial(self.frame, k[..nv].iter().copied().collect(), c.clone()).ok()?;
        }
        Some(p)
    }

    pub fn scale(&self, c: &Scalar) -> WeylOp {
        WeylOp::from_map(self.frame, self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect())
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        let mut acc = WeylOp::one(self.frame);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal adjoint: the anti-automorphism fixing the variables and sending `∂ ↦ −∂`.
    pub fn formal_adjoint(&self) -> WeylOp {
        let nv = self.frame.nvars();
        let mut out = WeylOp::zero(self.frame);
        for (k, c) in &self.terms {
            let mut xs = WeylOp::one(self.frame);
            let mut ds = WeylOp::one(self.frame);
            for s in 0..nv {
                if k[s] > 0 {
                    xs = &xs * &WeylOp::x(self.frame, s).expect("live slot").pow(k[s] as u32);
                }
                if k[nv + s] > 0 {
                    ds = &ds * &WeylOp::d(self.frame, s).expect("live slot").pow(k[nv + s] as u32);
                }
            }
            let order: u32 = k[nv..].iter().map(|&e| e as u32).sum();
            let sign = if order.is_multiple_of(2) { 1 } else { -1 };
            out = &out + &(&ds * &xs).scale(&(c * &Scalar::from_int(sign)));
        }
        out
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &WeylOp) -> WeylOp {
        &(self * other) - &(other * self)
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, f: &Poly) -> Poly {
        assert_eq!(self.frame, f.frame(), "frame mismatch in operator application");
        let nv = self.frame.nvars();
        let mut out: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (k, c) in &self.terms {
            let (xa, db) = k.split_at(nv);
            for (g, fc) in f.terms() {
                if g.iter().zip(db).any(|(a, b)| a < b) {
                    continue;
                }
                let mut mult = BigInt::one();
                for (&ge, &be) in g.iter().zip(db) {
                    if be > 0 {
                        mult *= falling(ge, be);
                    }
                }
                let e: Exps = (0..nv).map(|s| xa[s] + g[s] - db[s]).collect();
                let v = (c * fc).scale(&Rational::from_integer(mult));
                match out.entry(e) {
                    Entry::Vacant(v_) => {
                        v_.insert(v);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += &v;
                    }
                }
            }
        }
        Poly::from_map(self.frame, out)
    }

    /// The algebraic Fourier transform, an involutive anti-automorphism.
    ///
    /// U-type frames: `U_j ↔ ∂_{U_j}`. X frame: `X_j ↦ ±½∂_j`, `∂_j ↦ ±2X_j`,
    /// with the minus sign exactly for `ℓ' < j ≤ 2ℓ'`.
    pub fn fourier(&self) -> WeylOp {
        let nv = self.frame.nvars();
        let signs = fourier_signs(self.frame);
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let (xa, db) = k.split_at(nv);
            let mut coef = c.clone();
            if self.frame.kind() == FrameKind::X {
                let mut flips = 0u32;
                let mut pow2: i64 = 0;
                for s in 0..nv {
                    if signs[s] < 0 {
                        flips += (xa[s] + db[s]) as u32;
                    }
                    pow2 += db[s] as i64 - xa[s] as i64;
                }
                let two = Rational::from_integer(BigInt::from(2));
                let factor = if pow2 >= 0 {
                    num_traits::pow(two, pow2 as usize)
                } else {
                    num_traits::pow(two, (-pow2) as usize).recip()
                };
                coef = coef.scale(&factor);
                if flips % 2 == 1 {
                    coef = -coef;
                }
            }
            out.insert(key(db, xa), coef);
        }
        WeylOp::from_map(self.frame, out)
    }

    /// Signature twist: `X_j ↦ iX_j`, `∂_j ↦ -i∂_j` for `j > p`, identity otherwise.
    pub fn phi_twist(&self, p: usize) -> Result<WeylOp> {
        poly::require_kind(self.frame, FrameKind::X)?;
        let n = self.frame.n();
        if p > n {
            return Err(Error::InvalidParameter(format!("signature p = {p} > n = {n}")));
        }
        let i_pows = [Scalar::one(), Scalar::i(), Scalar::from_int(-1), -Scalar::i()];
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            // i^(a) (-i)^(b) = i^(a + 3b)
            let e: u32 = (p..n).map(|s| k[s] as u32 + 3 * k[n + s] as u32).sum();
            out.insert(k.clone(), c * &i_pows[(e % 4) as usize]);
        }
        Ok(WeylOp::from_map(self.frame, out))
    }

    /// Rewrites an X-frame operator in the U frame.
    pub fn to_u_frame(&self) -> Result<WeylOp> {
        poly::require_kind(self.frame, FrameKind::X)?;
        let n = self.frame.n();
        Ok(self.change_frame(Frame::u(n), &poly::x_to_u_images(n), &x_to_u_deriv_images(n)))
    }

    /// Rewrites a U-frame operator in the X frame.
    pub fn to_x_frame(&self) -> Result<WeylOp> {
        poly::require_kind(self.frame, FrameKind::U)?;
        let n = self.frame.n();
        Ok(self.change_frame(Frame::x(n), &poly::u_to_x_images(n), &u_to_x_deriv_images(n)))
    }

    /// Includes a U-frame operator into the ambient frame.
    pub fn embed_ufull(&self) -> Result<WeylOp> {
        poly::require_kind(self.frame, FrameKind::U)?;
        let nv = self.frame.nvars();
        let target = Frame::ufull(self.frame.n());
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut e: WExps = SmallVec::new();
                e.extend_from_slice(&[0, 0]);
                e.extend_from_slice(&k[..nv]);
                e.extend_from_slice(&[0, 0]);
                e.extend_from_slice(&k[nv..]);
                (e, c.clone())
            })
            .collect();
        Ok(WeylOp { frame: target, terms })
    }

    /// Linear change of coordinates. `xs[s]` is the image of the coordinate in
    /// slot `s`, `ds[s]` the image of `∂_s` written as a symbol in the target.
    fn change_frame(&self, target: Frame, xs: &[Poly], ds: &[Poly]) -> WeylOp {
        let nv = self.frame.nvars();
        let mut xcache: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut dcache: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut out = BTreeMap::new();
        let power = |cache: &mut HashMap<(usize, u16), Poly>, imgs: &[Poly], s: usize, e: u16| {
            cache.entry((s, e)).or_insert_with(|| imgs[s].pow(e as u32)).clone()
        };
        for (k, c) in &self.terms {
            let mut px = Poly::constant(target, c.clone());
            let mut pd = Poly::one(target);
            for s in 0..nv {
                if k[s] > 0 {
                    px = &px * &power(&mut xcache, xs, s, k[s]);
                }
                if k[nv + s] > 0 {
                    pd = &pd * &power(&mut dcache, ds, s, k[nv + s]);
                }
            }
            for (xe, xc) in px.terms() {
                for (de, dc) in pd.terms() {
                    add_into(&mut out, key(xe, de), xc * dc);
                }
            }
        }
        WeylOp::from_map(target, out)
    }

    /// Splits the operator as `Σ_α x^α s_α(∂)`, returning the symbols `s_α`.
    fn by_x_exponent(&self) -> BTreeMap<Exps, Poly> {
        let nv = self.frame.nvars();
        let mut out: BTreeMap<Exps, Poly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let entry = out
                .entry(k[..nv].iter().copied().collect())
                .or_insert_with(|| Poly::zero(self.frame));
            entry.add_term(k[nv..].iter().copied().collect(), c.clone());
        }
        out
    }

    /// Splits the operator as `Σ_β s_β(x) ∂^β`, returning the coefficients `s_β`.
    fn by_d_exponent(&self) -> BTreeMap<Exps, Poly> {
        let nv = self.frame.nvars();
        let mut out: BTreeMap<Exps, Poly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let entry = out
                .entry(k[nv..].iter().copied().collect())
                .or_insert_with(|| Poly::zero(self.frame));
            entry.add_term(k[..nv].iter().copied().collect(), c.clone());
        }
        out
    }

    /// `Q'` with `self = Q' · G^r`, where `G` is the constant-coefficient
    /// operator with symbol `sym`; `None` if no such `Q'` exists.
    pub fn right_divide_by_symbol_power(&self, sym: &Poly, r: u32) -> Option<WeylOp> {
        let g = sym.pow(r);
        let nv = self.frame.nvars();
        let mut out = BTreeMap::new();
        for (xe, s) in self.by_x_exponent() {
            let q = s.div_exact(&g)?;
            for (de, c) in q.terms() {
                add_into(&mut out, key(&xe, de), c.clone());
            }
        }
        debug_assert!(out.keys().all(|k: &WExps| k.len() == 2 * nv));
        Some(WeylOp::from_map(self.frame, out))
    }

    /// `Q'` with `self = g^r · Q'`; `None` if no such `Q'` exists.
    pub fn left_divide_by_poly_power(&self, g: &Poly, r: u32) -> Option<WeylOp> {
        let gr = g.pow(r);
        let mut out = BTreeMap::new();
        for (de, s) in self.by_d_exponent() {
            let q = s.div_exact(&gr)?;
            for (xe, c) in q.terms() {
                add_into(&mut out, key(xe, &de), c.clone());
            }
        }
        Some(WeylOp::from_map(self.frame, out))
    }

    /// Terms sorted in canonical print order.
    pub fn sorted_terms(&self) -> Vec<(&WExps, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }
}

/// Signs `s_j` of the X-frame Fourier transform.
pub fn fourier_signs(frame: Frame) -> Vec<i8> {
    let nv = frame.nvars();
    if frame.kind() != FrameKind::X {
        return vec![1; nv];
    }
    let lp = frame.ell_prime();
    (0..nv).map(|s| if s >= lp && s < 2 * lp { -1 } else { 1 }).collect()
}

fn x_to_u_deriv_images(n: usize) -> Vec<Poly> {
    let uf = Frame::u(n);
    let lp = uf.ell_prime();
    let mut images = vec![Poly::zero(uf); n];
    for a in 1..=lp {
        let plus = Poly::u_var(uf, a as i32 + 1).expect("label");
        let minus = Poly::u_var(uf, -(a as i32 + 1)).expect("label");
        images[a - 1] = &plus + &minus;
        images[a + lp - 1] = (&minus - &plus).scale(&Scalar::i());
    }
    if n % 2 == 1 {
        images[n - 1] = Poly::u_var(uf, 0).expect("label").scale(&Scalar::sqrt2());
    }
    images
}

fn u_to_x_deriv_images(n: usize) -> Vec<Poly> {
    let uf = Frame::u(n);
    let xf = Frame::x(n);
    let lp = uf.ell_prime();
    let half = Scalar::frac(1, 2);
    let mut images = vec![Poly::zero(xf); uf.nvars()];
    for a in 1..=lp {
        let da = Poly::var(xf, a - 1).expect("slot");
        let db = Poly::var(xf, a + lp - 1).expect("slot").scale(&Scalar::i());
        images[uf.u_slot(a as i32 + 1).expect("label")] = (&da + &db).scale(&half);
        images[uf.u_slot(-(a as i32 + 1)).expect("label")] = (&da - &db).scale(&half);
    }
    if n % 2 == 1 {
        images[0] = Poly::var(xf, n - 1)
            .expect("slot")
            .scale(&Scalar::sqrt2().scale(&Rational::new(1.into(), 2.into())));
    }
    images
}

impl Mul<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.frame, rhs.frame, "frame mismatch in operator product");
        let nv = self.frame.nvars();
        let mut out: BTreeMap<WExps, Scalar> = BTreeMap::new();
        let mut choices: Vec<(usize, Vec<(u16, BigInt)>)> = Vec::new();
        for (k1, c1) in &self.terms {
            let (xa, db) = k1.split_at(nv);
            for (k2, c2) in &rhs.terms {
                let (xc, dd) = k2.split_at(nv);
                let c12 = c1 * c2;
                // Slots where ∂^b meets x^c contribute several reorderings.
                choices.clear();
                for s in 0..nv {
                    if db[s] > 0 && xc[s] > 0 {
                        let m = db[s].min(xc[s]);
                        let opts = (0..=m)
                            .map(|j| (j, binom(db[s], j) * binom(xc[s], j) * falling(j, j)))
                            .collect();
                        choices.push((s, opts));
                    }
                }
                let mut base: WExps = SmallVec::with_capacity(2 * nv);
                for s in 0..nv {
                    base.push(xa[s] + xc[s]);
                }
                for s in 0..nv {
                    base.push(db[s] + dd[s]);
                }
                if choices.is_empty() {
                    add_into(&mut out, base, c12);
                    continue;
                }
                let mut idx = vec![0usize; choices.len()];
                loop {
                    let mut e = base.clone();
                    let mut mult = BigInt::one();
                    for (ci, (s, opts)) in choices.iter().enumerate() {
                        let (j, ref w) = opts[idx[ci]];
                        e[*s] -= j;
                        e[nv + *s] -= j;
                        mult *= w;
                    }
                    add_into(&mut out, e, c12.scale(&Rational::from_integer(mult)));
                    let mut pos = 0;
                    loop {
                        if pos == idx.len() {
                            break;
                        }
                        idx[pos] += 1;
                        if idx[pos] < choices[pos].1.len() {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                    if pos == idx.len() {
                        break;
                    }
                }
            }
        }
        WeylOp::from_map(self.frame, out)
    }
}

impl Mul for WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: WeylOp) -> WeylOp {
        &self * &rhs
    }
}

fn combine(a: &WeylOp, b: &WeylOp, negate: bool) -> WeylOp {
    assert_eq!(a.frame, b.frame, "frame mismatch in operator sum");
    let mut out = a.terms.clone();
    for (k, c) in &b.terms {
        add_into(&mut out, k.clone(), if negate { -c } else { c.clone() });
    }
    WeylOp {
        frame: a.frame,
        terms: out,
    }
}

impl Add<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        combine(self, rhs, false)
    }
}

impl Sub<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        combine(self, rhs, true)
    }
}

impl Add for WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: WeylOp) -> WeylOp {
        &self + &rhs
    }
}

impl Sub for WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: WeylOp) -> WeylOp {
        &self - &rhs
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Symbol of the frame's Laplacian, as a polynomial in the ∂-slots.
pub fn laplacian_symbol(frame: Frame) -> Poly {
    match frame.kind() {
        FrameKind::X => poly::quadratic_form(frame).scale(&Scalar::frac(1, 2)),
        // 2Σ ξ_j ξ_-j + ξ_0² is twice the quadratic form.
        _ => poly::quadratic_form(frame).scale(&Scalar::from_int(2)),
    }
}

/// Symbol of `□_p = ½(Σ_{j≤p} ∂_j² − Σ_{j>p} ∂_j²)` on the X frame.
pub fn box_symbol(n: usize, p: usize) -> Poly {
    let frame = Frame::x(n);
    let mut s = Poly::zero(frame);
    for j in 0..n {
        let sq = Poly::var(frame, j).expect("slot").pow(2);
        s = if j < p { &s + &sq } else { &s - &sq };
    }
    s.scale(&Scalar::frac(1, 2))
}

/// The Laplacian of the frame (`Δ₁` on X/U, the ambient `Δ` on UFull).
pub fn laplacian(frame: Frame) -> WeylOp {
    WeylOp::from_symbol(&laplacian_symbol(frame))
}

/// `□_p` on the X frame.
pub fn box_op(n: usize, p: usize) -> WeylOp {
    WeylOp::from_symbol(&box_symbol(n, p))
}

/// Euler operator `Σ x_s ∂_s` over the live slots.
pub fn euler(frame: Frame) -> WeylOp {
    let mut e = WeylOp::zero(frame);
    for s in (0..frame.nvars()).filter(|&s| frame.is_live(s)) {
        let t = &WeylOp::x(frame, s).expect("slot") * &WeylOp::d(frame, s).expect("slot");
        e = &e + &t;
    }
    e
}

/// Multiplication by the invariant quadratic form.
pub fn quadratic_form_op(frame: Frame) -> WeylOp {
    WeylOp::from_poly(&poly::quadratic_form(frame))
}

/// `D_ij = X_i ∂_j − X_j ∂_i` (1-based indices, X frame).
pub fn rotation(n: usize, i: usize, j: usize) -> WeylOp {
    let f = Frame::x(n);
    let xi = WeylOp::x(f, i - 1).expect("index");
    let xj = WeylOp::x(f, j - 1).expect("index");
    let di = WeylOp::d(f, i - 1).expect("index");
    let dj = WeylOp::d(f, j - 1).expect("index");
    &(&xi * &dj) - &(&xj * &di)
}

/// `E₁ + d` on the X frame.
pub fn shifted_euler(n: usize, d: &Rational) -> WeylOp {
    let f = Frame::x(n);
    &euler(f) + &WeylOp::scalar(f, Scalar::from_rational(d.clone()))
}

/// `P_j(d) = X_j Δ₁ − (E₁ + d) ∂_j` (1-based `j`, X frame).
pub fn p_op(n: usize, j: usize, d: &Rational) -> WeylOp {
    let f = Frame::x(n);
    let xj = WeylOp::x(f, j - 1).expect("index");
    let dj = WeylOp::d(f, j - 1).expect("index");
    &(&xj * &laplacian(f)) - &(&shifted_euler(n, d) * &dj)
}

/// `d = n/2 − r`.
pub fn d_param(n: usize, r: usize) -> Rational {
    Rational::new(BigInt::from(n as i64 - 2 * r as i64), BigInt::from(2))
}

/// Membership in the left ideal `D(A)·Δ₁ʳ`.
pub fn in_left_ideal_of_power(p: &WeylOp, r: u32) -> bool {
    p.right_divide_by_symbol_power(&laplacian_symbol(p.frame()), r)
        .is_some()
}

/// Membership in the right ideal `gʳ·D(A)`.
pub fn in_right_ideal_of_power(p: &WeylOp, g: &Poly, r: u32) -> bool {
    p.left_divide_by_poly_power(g, r).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xf(n: usize) -> Frame {
        Frame::x(n)
    }

    #[test]
    fn canonical_commutation() {
        let f = xf(3);
        let d1 = WeylOp::d(f, 0).unwrap();
        let x1 = WeylOp::x(f, 0).unwrap();
        assert_eq!(&d1 * &x1, &(&x1 * &d1) + &WeylOp::one(f));
    }

    #[test]
    fn laplacian_brackets() {
        for n in 3..=5 {
            let f = xf(n);
            let lap = laplacian(f);
            for j in 0..n {
                let xj = WeylOp::x(f, j).unwrap();
                assert_eq!(lap.bracket(&xj), WeylOp::d(f, j).unwrap());
            }
            assert_eq!(euler(f).bracket(&lap), lap.scale(&Scalar::from_int(-2)));
        }
    }

    #[test]
    fn laplacian_of_f() {
        for n in 3..=6 {
            let f = xf(n);
            let q = poly::quadratic_form(f);
            assert_eq!(laplacian(f).apply(&q), Poly::constant(f, Scalar::from_int(n as i64)));
        }
    }

    #[test]
    fn fourier_of_f_and_laplacian() {
        for n in 3..=6 {
            let f = xf(n);
            let lap = laplacian(f);
            let q = quadratic_form_op(f);
            assert_eq!(q.fourier(), lap.scale(&Scalar::frac(1, 2)));
            assert_eq!(lap.fourier(), q.scale(&Scalar::from_int(2)));
            assert_eq!(euler(f).fourier(), euler(f));
        }
    }

    #[test]
    fn fourier_frames_agree() {
        for n in 3..=6 {
            let f = xf(n);
            for s in 0..n {
                for op in [WeylOp::x(f, s).unwrap(), WeylOp::d(f, s).unwrap()] {
                    assert_eq!(op.fourier().to_u_frame().unwrap(), op.to_u_frame().unwrap().fourier());
                }
            }
        }
    }

    #[test]
    fn frame_round_trip_of_operators() {
        for n in 3..=6 {
            let p = p_op(n, 1, &d_param(n, 1));
            let u = p.to_u_frame().unwrap();
            assert_eq!(u.to_x_frame().unwrap(), p);
            assert_eq!(laplacian(xf(n)).to_u_frame().unwrap(), laplacian(Frame::u(n)));
            assert_eq!(euler(xf(n)).to_u_frame().unwrap(), euler(Frame::u(n)));
        }
    }

    #[test]
    fn twist_of_f_and_laplacian() {
        let n = 4;
        for p in 0..=n {
            let f = xf(n);
            let twisted = quadratic_form_op(f).phi_twist(p).unwrap();
            let mut ft = Poly::zero(f);
            for j in 0..n {
                let sq = Poly::var(f, j).unwrap().pow(2);
                ft = if j < p { &ft + &sq } else { &ft - &sq };
            }
            assert_eq!(twisted, WeylOp::from_poly(&ft));
            assert_eq!(laplacian(f).phi_twist(p).unwrap(), box_op(n, p));
        }
        let q = p_op(n, 2, &d_param(n, 1));
        assert_eq!(q.phi_twist(n).unwrap(), q);
    }

    #[test]
    fn ideal_membership() {
        let n = 3;
        let f = xf(n);
        let lap = laplacian(f);
        for r in 1..=3u32 {
            assert!(in_left_ideal_of_power(&lap.pow(r + 1), r));
            assert!(!in_left_ideal_of_power(&WeylOp::x(f, 0).unwrap(), r));
            let d = d_param(n, r as usize);
            for j in 1..=n {
                let q = poly::quadratic_form(f);
                let xj = WeylOp::x(f, j - 1).unwrap();
                let sym = &(&quadratic_form_op(f) * &WeylOp::d(f, j - 1).unwrap())
                    - &(&xj * &shifted_euler(n, &d)).scale(&Scalar::from_int(2));
                assert!(in_left_ideal_of_power(&(&lap.pow(r) * &sym), r));
                let pf = &p_op(n, j, &d) * &WeylOp::from_poly(&q.pow(r));
                assert!(in_right_ideal_of_power(&pf, &q, r));
            }
            let q = poly::quadratic_form(f);
            let fd = &WeylOp::from_poly(&q.pow(r)) * &WeylOp::d(f, 0).unwrap();
            assert!(in_right_ideal_of_power(&fd, &q, r));
        }
        assert!(!in_right_ideal_of_power(
            &WeylOp::d(f, 0).unwrap(),
            &poly::quadratic_form(f),
            1
        ));
    }
}

//! Variable frames and sparse multivariate polynomials over K.
//!
//! Three frames are used:
//!
//! * `X(n)`: the Euclidean coordinates `X1..Xn`;
//! * `U(n)`: the isotropic coordinates ordered `U0, U2, U-2, ..., Uℓ, U-ℓ`;
//! * `UFull(n)`: the `n + 2` ambient coordinates, `U1, U-1` followed by `U(n)`.
//!
//! For even `n` the `U0` slot is kept but is dead: any term using it is rejected.

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use smallvec::SmallVec;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector, one entry per frame slot.
pub type Exps = SmallVec<[u16; 12]>;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FrameKind {
    X,
    U,
    UFull,
}

/// A coordinate system on `C^n` (or `C^(n+2)` for [`FrameKind::UFull`]).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Frame {
    kind: FrameKind,
    n: usize,
}

impl Frame {
    pub fn new(kind: FrameKind, n: usize) -> Result<Frame> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n = {n}, need n >= 3")));
        }
        Ok(Frame { kind, n })
    }

    /// The X frame; panics if `n < 3`.
    pub fn x(n: usize) -> Frame {
        Self::new(FrameKind::X, n).expect("frame dimension")
    }

    /// The U frame; panics if `n < 3`.
    pub fn u(n: usize) -> Frame {
        Self::new(FrameKind::U, n).expect("frame dimension")
    }

    /// The ambient frame in `n + 2` variables; panics if `n < 3`.
    pub fn ufull(n: usize) -> Frame {
        Self::new(FrameKind::UFull, n).expect("frame dimension")
    }

    pub fn kind(&self) -> FrameKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank ℓ = ⌊n/2⌋ + 1 of so(n+2).
    pub fn ell(&self) -> usize {
        self.n / 2 + 1
    }

    pub fn ell_prime(&self) -> usize {
        self.n / 2
    }

    pub fn n_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// Number of exponent slots.
    pub fn nvars(&self) -> usize {
        match self.kind {
            FrameKind::X => self.n,
            FrameKind::U => 2 * self.ell_prime() + 1,
            FrameKind::UFull => 2 * self.ell_prime() + 3,
        }
    }

    /// Dimension of the underlying space, counting only live variables.
    pub fn dim(&self) -> usize {
        match self.kind {
            FrameKind::UFull => self.n + 2,
            _ => self.n,
        }
    }

    /// False only for the `U0` slot when `n` is even.
    pub fn is_live(&self, slot: usize) -> bool {
        match self.kind {
            FrameKind::X => true,
            FrameKind::U => slot != 0 || self.n_odd(),
            FrameKind::UFull => slot != 2 || self.n_odd(),
        }
    }

    /// Slot of `U_label` in a U-type frame.
    pub fn u_slot(&self, label: i32) -> Option<usize> {
        let ell = self.ell() as i32;
        let base = |l: i32| -> Option<usize> {
            match l {
                0 => Some(0),
                j if (2..=ell).contains(&j) => Some((2 * j - 3) as usize),
                j if (-ell..=-2).contains(&j) => Some((-2 * j - 2) as usize),
                _ => None,
            }
        };
        match self.kind {
            FrameKind::X => None,
            FrameKind::U => base(label),
            FrameKind::UFull => match label {
                1 => Some(0),
                -1 => Some(1),
                l => base(l).map(|s| s + 2),
            },
        }
    }

    /// Inverse of [`Frame::u_slot`].
    pub fn u_label(&self, slot: usize) -> Option<i32> {
        let base = |s: usize| -> i32 {
            if s == 0 {
                0
            } else if s % 2 == 1 {
                (s as i32 + 3) / 2
            } else {
                -((s as i32 + 2) / 2)
            }
        };
        match self.kind {
            FrameKind::X => None,
            FrameKind::U => (slot < self.nvars()).then(|| base(slot)),
            FrameKind::UFull => match slot {
                0 => Some(1),
                1 => Some(-1),
                s if s < self.nvars() => Some(base(s - 2)),
                _ => None,
            },
        }
    }

    /// Live U-labels in slot order.
    pub fn labels(&self) -> Vec<i32> {
        (0..self.nvars())
            .filter(|&s| self.is_live(s))
            .filter_map(|s| self.u_label(s))
            .collect()
    }

    pub fn var_name(&self, slot: usize) -> String {
        match self.kind {
            FrameKind::X => format!("X{}", slot + 1),
            _ => format!("U{}", self.u_label(slot).expect("slot in range")),
        }
    }

    pub fn deriv_name(&self, slot: usize) -> String {
        match self.kind {
            FrameKind::X => format!("D{}", slot + 1),
            _ => format!("DU{}", self.u_label(slot).expect("slot in range")),
        }
    }

    /// Resolves a variable name such as `X3` or `U-2`.
    pub fn slot_of_var(&self, name: &str) -> Option<usize> {
        match self.kind {
            FrameKind::X => {
                let k: usize = name.strip_prefix('X')?.parse().ok()?;
                (1..=self.n).contains(&k).then(|| k - 1)
            }
            _ => {
                let rest = name.strip_prefix('U')?;
                if rest.starts_with('+') {
                    return None;
                }
                self.u_slot(rest.parse().ok()?)
            }
        }
    }

    /// Resolves a derivative name such as `D3` or `DU-2`.
    pub fn slot_of_deriv(&self, name: &str) -> Option<usize> {
        match self.kind {
            FrameKind::X => {
                let k: usize = name.strip_prefix('D')?.parse().ok()?;
                (1..=self.n).contains(&k).then(|| k - 1)
            }
            _ => self.slot_of_var(name.strip_prefix('D')?),
        }
    }

    /// All live monomials of total degree `m`, in ascending exponent order.
    pub fn monomials(&self, m: u32) -> Vec<Exps> {
        let live: Vec<usize> = (0..self.nvars()).filter(|&s| self.is_live(s)).collect();
        let mut out = Vec::new();
        let mut cur: Exps = SmallVec::from_elem(0, self.nvars());
        fn rec(live: &[usize], idx: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
            if idx + 1 == live.len() {
                cur[live[idx]] = left as u16;
                out.push(cur.clone());
                cur[live[idx]] = 0;
                return;
            }
            for e in 0..=left {
                cur[live[idx]] = e as u16;
                rec(live, idx + 1, left - e, cur, out);
            }
            cur[live[idx]] = 0;
        }
        rec(&live, 0, m, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            FrameKind::X => "X",
            FrameKind::U => "U",
            FrameKind::UFull => "Ufull",
        };
        write!(f, "{k}({})", self.n)
    }
}

pub fn total_degree(e: &[u16]) -> u32 {
    e.iter().map(|&v| v as u32).sum()
}

/// Graded-lex comparison: total degree first, then lexicographic.
pub fn grlex_cmp(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}

/// Sparse polynomial with coefficients in K.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    frame: Frame,
    terms: BTreeMap<Exps, Scalar>,
}

impl Poly {
    pub fn zero(frame: Frame) -> Poly {
        Poly {
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(frame: Frame, c: Scalar) -> Poly {
        let mut p = Poly::zero(frame);
        p.add_term(SmallVec::from_elem(0, frame.nvars()), c);
        p
    }

    pub fn one(frame: Frame) -> Poly {
        Poly::constant(frame, Scalar::one())
    }

    /// The coordinate function in `slot`.
    pub fn var(frame: Frame, slot: usize) -> Result<Poly> {
        let mut e: Exps = SmallVec::from_elem(0, frame.nvars());
        if slot >= e.len() {
            return Err(Error::InvalidParameter(format!("slot {slot} out of range")));
        }
        e[slot] = 1;
        Poly::monomial(frame, e, Scalar::one())
    }

    /// `U_label` in a U-type frame.
    pub fn u_var(frame: Frame, label: i32) -> Result<Poly> {
        let slot = frame
            .u_slot(label)
            .ok_or_else(|| Error::InvalidParameter(format!("no variable U{label} in {frame}")))?;
        Poly::var(frame, slot)
    }

    pub fn monomial(frame: Frame, exps: Exps, coeff: Scalar) -> Result<Poly> {
        if exps.len() != frame.nvars() {
            return Err(Error::InvalidParameter(format!(
                "exponent vector of length {} in {frame}",
                exps.len()
            )));
        }
        for (s, &e) in exps.iter().enumerate() {
            if e > 0 && !frame.is_live(s) {
                return Err(Error::DeadVariable(frame.var_name(s)));
            }
        }
        let mut p = Poly::zero(frame);
        p.add_term(exps, coeff);
        Ok(p)
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exps, Scalar> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)] // `is_zero` is the emptiness test
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u16]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Adds `c·x^e` in place without checking liveness.
    pub(crate) fn add_term(&mut self, e: Exps, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn from_map(frame: Frame, mut terms: BTreeMap<Exps, Scalar>) -> Poly {
        terms.retain(|_, c| !c.is_zero());
        Poly { frame, terms }
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| total_degree(e));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Homogeneous component of degree `m`.
    pub fn graded_piece(&self, m: u32) -> Poly {
        Poly {
            frame: self.frame,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) == m)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// All nonzero homogeneous components keyed by degree.
    pub fn graded_pieces(&self) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(total_degree(e))
                .or_insert_with(|| Poly::zero(self.frame))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&SmallVec::<[u16; 12]>::from_elem(0, self.frame.nvars()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.frame);
        }
        Poly {
            frame: self.frame,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.frame);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in `slot`.
    pub fn derivative(&self, slot: usize) -> Poly {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[slot];
            if k == 0 {
                continue;
            }
            let mut f = e.clone();
            f[slot] -= 1;
            out.insert(f, c.mul_int(k as i64));
        }
        Poly::from_map(self.frame, out)
    }

    /// Applies the ring map sending slot `s` to `images[s]`.
    pub fn substitute(&self, target: Frame, images: &[Poly]) -> Poly {
        let mut cache: HashMap<(usize, u16), Poly> = HashMap::new();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (s, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache.entry((s, k)).or_insert_with(|| images[s].pow(k as u32));
                t = &t * &*pw;
            }
            out = &out + &t;
        }
        out
    }

    /// Rewrites an X-frame polynomial in the U frame.
    pub fn to_u_frame(&self) -> Result<Poly> {
        require_kind(self.frame, FrameKind::X)?;
        let images = x_to_u_images(self.frame.n());
        Ok(self.substitute(Frame::u(self.frame.n()), &images))
    }

    /// Rewrites a U-frame polynomial in the X frame.
    pub fn to_x_frame(&self) -> Result<Poly> {
        require_kind(self.frame, FrameKind::U)?;
        let images = u_to_x_images(self.frame.n());
        Ok(self.substitute(Frame::x(self.frame.n()), &images))
    }

    /// Includes a U-frame polynomial into the ambient frame.
    pub fn embed_ufull(&self) -> Result<Poly> {
        require_kind(self.frame, FrameKind::U)?;
        let target = Frame::ufull(self.frame.n());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f: Exps = SmallVec::from_elem(0, 2);
                f.extend_from_slice(e);
                (f, c.clone())
            })
            .collect();
        Ok(Poly { frame: target, terms })
    }

    /// Leading term in graded-lex order (higher degree first, then larger
    /// exponent in the earlier slot).
    pub fn leading_term(&self) -> Option<(&Exps, &Scalar)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Uses repeated long division on graded-lex leading terms.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(self.frame, divisor.frame, "frame mismatch in division");
        let (lead_e, lead_c) = divisor.leading_term()?;
        let lead_e = lead_e.clone();
        let lead_inv = lead_c.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.frame);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(lead_e.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let shift: Exps = e.iter().zip(lead_e.iter()).map(|(a, b)| a - b).collect();
            let coef = c * &lead_inv;
            for (de, dc) in &divisor.terms {
                let k: Exps = de.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
                rem.add_term(k, -(dc * &coef));
            }
            quot.add_term(shift, coef);
        }
        Some(quot)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly::from_map(self.frame, self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect())
    }
}

pub(crate) fn require_kind(frame: Frame, kind: FrameKind) -> Result<()> {
    if frame.kind() == kind {
        Ok(())
    } else {
        Err(Error::WrongFrame {
            expected: format!("{kind:?}"),
            found: frame.to_string(),
        })
    }
}

/// Images of `X1..Xn` as U-frame linear forms.
pub fn x_to_u_images(n: usize) -> Vec<Poly> {
    let uf = Frame::u(n);
    let lp = uf.ell_prime();
    let half = Scalar::frac(1, 2);
    let half_i = Scalar::i().scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let mut images = vec![Poly::zero(uf); n];
    for a in 1..=lp {
        let plus = Poly::u_var(uf, a as i32 + 1).expect("label");
        let minus = Poly::u_var(uf, -(a as i32 + 1)).expect("label");
        images[a - 1] = (&plus + &minus).scale(&half);
        images[a + lp - 1] = (&plus - &minus).scale(&half_i);
    }
    if n % 2 == 1 {
        let u0 = Poly::u_var(uf, 0).expect("label");
        images[n - 1] = u0.scale(&Scalar::sqrt2().scale(&num_rational::BigRational::new(1.into(), 2.into())));
    }
    images
}

/// Images of the U-frame slots as X-frame linear forms.
pub fn u_to_x_images(n: usize) -> Vec<Poly> {
    let uf = Frame::u(n);
    let xf = Frame::x(n);
    let lp = uf.ell_prime();
    let mut images = vec![Poly::zero(xf); uf.nvars()];
    for a in 1..=lp {
        let xa = Poly::var(xf, a - 1).expect("slot");
        let xb = Poly::var(xf, a + lp - 1).expect("slot").scale(&Scalar::i());
        images[uf.u_slot(a as i32 + 1).expect("label")] = &xa - &xb;
        images[uf.u_slot(-(a as i32 + 1)).expect("label")] = &xa + &xb;
    }
    if n % 2 == 1 {
        images[0] = Poly::var(xf, n - 1).expect("slot").scale(&Scalar::sqrt2());
    }
    images
}

/// The invariant quadratic form of the frame.
///
/// `X(n)`: `ΣX_i²`; `U(n)`: `Σ_{j≥2} U_jU_{-j} + ½U_0²`; `UFull(n)`: the same sum from `j = 1`.
pub fn quadratic_form(frame: Frame) -> Poly {
    match frame.kind() {
        FrameKind::X => (0..frame.n())
            .map(|s| Poly::var(frame, s).expect("slot").pow(2))
            .fold(Poly::zero(frame), |a, b| &a + &b),
        FrameKind::U | FrameKind::UFull => {
            let lo = if frame.kind() == FrameKind::U { 2 } else { 1 };
            let mut q = Poly::zero(frame);
            for j in lo..=frame.ell() as i32 {
                let p = &Poly::u_var(frame, j).expect("label") * &Poly::u_var(frame, -j).expect("label");
                q = &q + &p;
            }
            if frame.n_odd() {
                let u0 = Poly::u_var(frame, 0).expect("label");
                q = &q + &(&u0 * &u0).scale(&Scalar::frac(1, 2));
            }
            q
        }
    }
}

/// The Laplacian of the frame applied to `p`.
///
/// `X(n)`: `½Σ∂_i²`; U-type frames: `2Σ∂_{U_j}∂_{U_-j} + ∂²_{U_0}`.
pub fn laplacian(p: &Poly) -> Poly {
    let frame = p.frame();
    match frame.kind() {
        FrameKind::X => {
            let mut out = Poly::zero(frame);
            for s in 0..frame.n() {
                out = &out + &p.derivative(s).derivative(s);
            }
            out.scale(&Scalar::frac(1, 2))
        }
        _ => {
            let lo = if frame.kind() == FrameKind::U { 2 } else { 1 };
            let mut out = Poly::zero(frame);
            for j in lo..=frame.ell() as i32 {
                let a = frame.u_slot(j).expect("label");
                let b = frame.u_slot(-j).expect("label");
                out = &out + &p.derivative(a).derivative(b);
            }
            out = out.scale(&Scalar::from_int(2));
            if frame.n_odd() {
                let z = frame.u_slot(0).expect("label");
                out = &out + &p.derivative(z).derivative(z);
            }
            out
        }
    }
}

fn combine(a: &Poly, b: &Poly, negate: bool) -> Poly {
    assert_eq!(a.frame, b.frame, "frame mismatch in polynomial arithmetic");
    let mut out = a.clone();
    for (e, c) in &b.terms {
        out.add_term(e.clone(), if negate { -c } else { c.clone() });
    }
    out
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        combine(self, rhs, false)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        combine(self, rhs, true)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            frame: self.frame,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.frame, rhs.frame, "frame mismatch in polynomial product");
        let mut acc: BTreeMap<Exps, Scalar> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exps = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                let c = c1 * c2;
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += &c;
                    }
                }
            }
        }
        Poly::from_map(self.frame, acc)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, k: usize) -> Poly {
        Poly::var(Frame::x(n), k - 1).unwrap()
    }

    #[test]
    fn frame_slots_round_trip() {
        for n in 3..=8 {
            for f in [Frame::u(n), Frame::ufull(n)] {
                for s in 0..f.nvars() {
                    let l = f.u_label(s).unwrap();
                    assert_eq!(f.u_slot(l), Some(s));
                    assert_eq!(f.slot_of_var(&f.var_name(s)), Some(s));
                    assert_eq!(f.slot_of_deriv(&f.deriv_name(s)), Some(s));
                }
            }
            assert_eq!(Frame::u(n).labels().len(), n);
            assert_eq!(Frame::ufull(n).labels().len(), n + 2);
        }
    }

    #[test]
    fn monomial_count() {
        assert_eq!(Frame::x(3).monomials(4).len(), 15);
        assert_eq!(Frame::u(4).monomials(2).len(), 10);
    }

    #[test]
    fn dead_slot_rejected() {
        assert!(matches!(Poly::u_var(Frame::u(4), 0), Err(Error::DeadVariable(_))));
        assert!(Poly::u_var(Frame::u(5), 0).is_ok());
    }

    #[test]
    fn products() {
        let (x1, x2) = (x(3, 1), x(3, 2));
        assert_eq!(&(&x1 + &x2) * &(&x1 - &x2), &(&x1 * &x1) - &(&x2 * &x2));
        let f = quadratic_form(Frame::x(3));
        let x3 = x(3, 3);
        let sq = |p: &Poly| p.pow(2);
        let two = Scalar::from_int(2);
        let expected = &(&(&sq(&sq(&x1)) + &sq(&sq(&x2))) + &sq(&sq(&x3)))
            + &(&(&(&sq(&x1) * &sq(&x2)) + &(&sq(&x1) * &sq(&x3))) + &(&sq(&x2) * &sq(&x3))).scale(&two);
        assert_eq!(&f * &f, expected);
    }

    #[test]
    fn change_of_frame() {
        let u = Frame::u(4);
        let x1 = x(4, 1).to_u_frame().unwrap();
        let expected = (&Poly::u_var(u, 2).unwrap() + &Poly::u_var(u, -2).unwrap()).scale(&Scalar::frac(1, 2));
        assert_eq!(x1, expected);
        for n in 3..=7 {
            let f = quadratic_form(Frame::x(n));
            assert_eq!(f.to_u_frame().unwrap(), quadratic_form(Frame::u(n)));
            assert_eq!(quadratic_form(Frame::u(n)).to_x_frame().unwrap(), f);
        }
    }

    #[test]
    fn graded_pieces() {
        let p = &(&Poly::one(Frame::x(3)) + &x(3, 1)) + &(&x(3, 1) * &x(3, 2));
        assert_eq!(p.graded_piece(2), &x(3, 1) * &x(3, 2));
        let f = quadratic_form(Frame::x(3));
        assert_eq!(f.graded_pieces().keys().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn laplacian_of_quadratic_form() {
        for n in 3..=6 {
            for frame in [Frame::x(n), Frame::u(n)] {
                let f = quadratic_form(frame);
                assert_eq!(laplacian(&f), Poly::constant(frame, Scalar::from_int(n as i64)));
            }
            let q = quadratic_form(Frame::ufull(n));
            assert_eq!(
                laplacian(&q),
                Poly::constant(Frame::ufull(n), Scalar::from_int(n as i64 + 2))
            );
        }
    }
}

//! Chevalley systems on the derivation side (`E_ij` on the ambient frame)
//! and on the operator side (second-order operators on the U frame), the
//! label-preserving isomorphism between them, and the anti-involution ϑ.

use super::roots::{Root, RootSystem};
use crate::error::{Error, Result};
use crate::linalg::{SparseSpan, SparseVec};
use crate::poly::{Frame, FrameKind};
use crate::report::Check;
use crate::scalars::{Rational, Scalar};
use crate::weyl::{self, WExps, WeylOp};
use std::collections::BTreeMap;
use std::fmt;

/// Index of a Chevalley basis element: a root vector or a Cartan element `h_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    Root(Root),
    /// `h_j`, 1-based.
    Cartan(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Root(a) => write!(f, "{a}"),
            BasisLabel::Cartan(j) => write!(f, "h{j}"),
        }
    }
}

/// An element of so(n+2) in Chevalley coordinates.
pub type LieElt = BTreeMap<BasisLabel, Scalar>;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    /// `{y_α}` built from the derivations `E_ij`.
    Derivation,
    /// `{x_α}` inside the operator algebra on `n` variables.
    Operator,
}

/// `E_ab = U_a ∂_b − U_{-b} ∂_{-a}` on a U-type frame.
pub fn e_op(frame: Frame, a: i32, b: i32) -> Result<WeylOp> {
    let t1 = &WeylOp::u(frame, a)? * &WeylOp::du(frame, b)?;
    let t2 = &WeylOp::u(frame, -b)? * &WeylOp::du(frame, -a)?;
    Ok(&t1 - &t2)
}

/// `I(d) = E₁ + d` on the U frame.
pub fn shifted_euler_u(n: usize, d: &Rational) -> WeylOp {
    let f = Frame::u(n);
    &weyl::euler(f) + &WeylOp::scalar(f, Scalar::from_rational(d.clone()))
}

/// `V_j = ½ U_j Δ₁ − I(d) ∂_{U_{-j}}` on the U frame.
pub fn v_op(n: usize, j: i32, d: &Rational) -> Result<WeylOp> {
    let f = Frame::u(n);
    let first = (&WeylOp::u(f, j)? * &weyl::laplacian(f)).scale(&Scalar::frac(1, 2));
    let second = &shifted_euler_u(n, d) * &WeylOp::du(f, -j)?;
    Ok(&first - &second)
}

/// The root vector `E`-formula shared by both sides for roots whose
/// support avoids the U-labels absent from `frame`.
fn e_root_vector(frame: Frame, alpha: &Root) -> Result<WeylOp> {
    let sqrt2 = Scalar::sqrt2();
    match alpha.support().as_slice() {
        [(i, si), (j, sj)] => {
            let (a, b) = (*i as i32 + 1, *j as i32 + 1);
            match (si, sj) {
                (1, -1) => e_op(frame, a, b),
                (1, 1) => e_op(frame, a, -b),
                (-1, 1) => e_op(frame, b, a),
                _ => e_op(frame, -b, a),
            }
        }
        [(i, s)] => {
            let a = *i as i32 + 1;
            let e = if *s > 0 { e_op(frame, a, 0)? } else { e_op(frame, 0, a)? };
            Ok(e.scale(&sqrt2))
        }
        _ => Err(Error::InvalidParameter(format!("not a root: {alpha}"))),
    }
}

/// A Chevalley system realized by operators, together with an echelon
/// basis used to expand brackets in Chevalley coordinates.
#[derive(Clone, Debug)]
pub struct ChevalleySystem {
    pub side: Side,
    pub n: usize,
    pub roots: RootSystem,
    frame: Frame,
    elems: BTreeMap<BasisLabel, WeylOp>,
    order: Vec<BasisLabel>,
    span: SparseSpan<WExps>,
}

fn to_sparse(op: &WeylOp) -> SparseVec<WExps> {
    op.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

impl ChevalleySystem {
    fn assemble(side: Side, n: usize, frame: Frame, elems: BTreeMap<BasisLabel, WeylOp>) -> Self {
        let roots = RootSystem::for_n(n);
        let mut order: Vec<BasisLabel> = roots.roots().into_iter().map(BasisLabel::Root).collect();
        order.extend((1..=roots.ell).map(BasisLabel::Cartan));
        let mut span = SparseSpan::new();
        for l in &order {
            let independent = span.insert(&to_sparse(&elems[l]));
            assert!(independent, "Chevalley basis element {l} is dependent");
        }
        ChevalleySystem {
            side,
            n,
            roots,
            frame,
            elems,
            order,
            span,
        }
    }

    /// `{y_α}` with `H_j = E_jj`, on the ambient frame.
    pub fn derivation(n: usize) -> Result<Self> {
        let frame = Frame::new(FrameKind::UFull, n)?;
        let rs = RootSystem::for_n(n);
        let mut elems = BTreeMap::new();
        for a in rs.roots() {
            elems.insert(BasisLabel::Root(a.clone()), e_root_vector(frame, &a)?);
        }
        for j in 1..=rs.ell {
            elems.insert(BasisLabel::Cartan(j), e_op(frame, j as i32, j as i32)?);
        }
        Ok(Self::assemble(Side::Derivation, n, frame, elems))
    }

    /// `{x_α}` inside the operator algebra, for `d = n/2 − r`.
    pub fn operator(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let frame = Frame::new(FrameKind::U, n)?;
        let d = weyl::d_param(n, r);
        let rs = RootSystem::for_n(n);
        let sqrt2 = Scalar::sqrt2();
        let mut elems = BTreeMap::new();
        for a in rs.roots() {
            let op = match a.0[0] {
                0 => e_root_vector(frame, &a)?,
                c1 => {
                    let other = a.support().into_iter().find(|&(i, _)| i > 0);
                    let (label, scale) = match other {
                        Some((i, t)) => (t as i32 * (i as i32 + 1), Scalar::one()),
                        None => (0, sqrt2.clone()),
                    };
                    let base = if c1 > 0 {
                        v_op(n, label, &d)?
                    } else {
                        WeylOp::u(frame, label)?
                    };
                    base.scale(&scale)
                }
            };
            elems.insert(BasisLabel::Root(a), op);
        }
        elems.insert(BasisLabel::Cartan(1), -&shifted_euler_u(n, &d));
        for j in 2..=rs.ell {
            elems.insert(BasisLabel::Cartan(j), e_op(frame, j as i32, j as i32)?);
        }
        Ok(Self::assemble(Side::Operator, n, frame, elems))
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Basis labels: roots (positive then negative), then `h_1..h_ℓ`.
    pub fn labels(&self) -> &[BasisLabel] {
        &self.order
    }

    pub fn get(&self, label: &BasisLabel) -> Option<&WeylOp> {
        self.elems.get(label)
    }

    pub fn root_vector(&self, alpha: &Root) -> &WeylOp {
        &self.elems[&BasisLabel::Root(alpha.clone())]
    }

    pub fn cartan(&self, j: usize) -> &WeylOp {
        &self.elems[&BasisLabel::Cartan(j)]
    }

    /// `Σ c_L · (element L)`.
    pub fn realize(&self, x: &LieElt) -> WeylOp {
        x.iter()
            .fold(WeylOp::zero(self.frame), |acc, (l, c)| &acc + &self.elems[l].scale(c))
    }

    /// Chevalley coordinates of `op`, or `None` if it is outside the span.
    pub fn expand(&self, op: &WeylOp) -> Option<LieElt> {
        let coords = self.span.coordinates(&to_sparse(op))?;
        Some(coords.into_iter().map(|(i, c)| (self.order[i].clone(), c)).collect())
    }

    /// The coroot `h_α = Σ_j 2α_j/(α,α) h_j` in Chevalley coordinates.
    pub fn coroot(&self, alpha: &Root) -> LieElt {
        let norm = alpha.norm();
        alpha
            .support()
            .into_iter()
            .map(|(i, c)| {
                let k = 2 * c as i64 / norm;
                (BasisLabel::Cartan(i + 1), Scalar::from_int(k))
            })
            .collect()
    }

    /// Checks `[x_α, x_{-α}] = h_α` and `[h_j, x_α] = α_j x_α` for every root.
    pub fn verify_root_relations(&self) -> Vec<Check> {
        let tag = match self.side {
            Side::Derivation => "y",
            Side::Operator => "x",
        };
        let mut out = Vec::new();
        for a in self.roots.roots() {
            let lhs = self.root_vector(&a).bracket(self.root_vector(&a.neg()));
            let rhs = self.realize(&self.coroot(&a));
            let diff = &lhs - &rhs;
            out.push(Check::from_bool(
                format!("[{tag}[{a}], {tag}[{}]] = h[{a}]", a.neg()),
                diff.is_zero(),
                if diff.is_zero() {
                    String::new()
                } else {
                    format!("difference {diff}")
                },
            ));
            for j in 1..=self.roots.ell {
                let lhs = self.cartan(j).bracket(self.root_vector(&a));
                let rhs = self.root_vector(&a).scale(&Scalar::from_int(a.0[j - 1] as i64));
                let diff = &lhs - &rhs;
                out.push(Check::from_bool(
                    format!("[h{j}, {tag}[{a}]] = {} {tag}[{a}]", a.0[j - 1]),
                    diff.is_zero(),
                    if diff.is_zero() {
                        String::new()
                    } else {
                        format!("difference {diff}")
                    },
                ));
            }
        }
        out
    }

    /// Checks the Chevalley sign condition `N_{-α,-β} = −N_{α,β}`, which is
    /// what makes ϑ an anti-automorphism.
    pub fn verify_chevalley_signs(&self) -> Vec<Check> {
        let roots = self.roots.roots();
        let mut out = Vec::new();
        for a in &roots {
            for b in &roots {
                let sum = Root(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
                if !roots.contains(&sum) {
                    continue;
                }
                let lhs = self.expand(&self.root_vector(a).bracket(self.root_vector(b)));
                let rhs = self.expand(&self.root_vector(&a.neg()).bracket(self.root_vector(&b.neg())));
                let n_ab = lhs
                    .as_ref()
                    .and_then(|m| m.get(&BasisLabel::Root(sum.clone())).cloned());
                let n_neg = rhs.as_ref().and_then(|m| m.get(&BasisLabel::Root(sum.neg())).cloned());
                let ok = match (n_ab, n_neg) {
                    (Some(p), Some(q)) => (&p + &q).is_zero(),
                    _ => false,
                };
                out.push(Check::from_bool(format!("N({}, {}) sign", a, b), ok, ""));
            }
        }
        out
    }
}

/// ϑ on Chevalley coordinates: `x_α ↔ x_{-α}`, `h_j` fixed.
pub fn anti_involution(x: &LieElt) -> LieElt {
    x.iter()
        .map(|(l, c)| match l {
            BasisLabel::Root(a) => (BasisLabel::Root(a.neg()), c.clone()),
            h => (h.clone(), c.clone()),
        })
        .collect()
}

/// Lie bracket on Chevalley coordinates, computed in a given realization.
pub fn bracket_coords(sys: &ChevalleySystem, a: &LieElt, b: &LieElt) -> Option<LieElt> {
    sys.expand(&sys.realize(a).bracket(&sys.realize(b)))
}

/// One mismatch between the two sides' structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMismatch {
    pub left: BasisLabel,
    pub right: BasisLabel,
    pub derivation: Option<LieElt>,
    pub operator: Option<LieElt>,
}

/// Result of comparing all structure constants of `{y}` and `{x}`.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub n: usize,
    pub r: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<StructureMismatch>,
}

fn format_elt(e: &Option<LieElt>) -> String {
    match e {
        None => "outside span".into(),
        Some(m) if m.is_empty() => "0".into(),
        Some(m) => m
            .iter()
            .map(|(l, c)| format!("({c})*{l}"))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

impl IsoReport {
    pub fn check(&self) -> Check {
        match self.mismatches.first() {
            None => Check::pass(format!("psi iso n={} r={}", self.n, self.r))
                .with_detail(format!("{} pairs", self.pairs_checked)),
            Some(m) => Check::fail(
                format!("psi iso n={} r={}", self.n, self.r),
                format!(
                    "[{}, {}]: derivation {} vs operator {}",
                    m.left,
                    m.right,
                    format_elt(&m.derivation),
                    format_elt(&m.operator)
                ),
            ),
        }
    }
}

/// Compares `[y_L, y_M]` with `[x_L, x_M]` in Chevalley coordinates for
/// every ordered pair of basis labels.
pub fn verify_iso_psi(n: usize, r: usize) -> Result<IsoReport> {
    let ys = ChevalleySystem::derivation(n)?;
    let xs = ChevalleySystem::operator(n, r)?;
    let labels = ys.labels().to_vec();
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (i, l) in labels.iter().enumerate() {
        for m in &labels[i + 1..] {
            count += 1;
            let dy = ys.expand(&ys.get(l).unwrap().bracket(ys.get(m).unwrap()));
            let dx = xs.expand(&xs.get(l).unwrap().bracket(xs.get(m).unwrap()));
            if dy.is_none() || dy != dx {
                mismatches.push(StructureMismatch {
                    left: l.clone(),
                    right: m.clone(),
                    derivation: dy,
                    operator: dx,
                });
            }
        }
    }
    Ok(IsoReport {
        n,
        r,
        pairs_checked: count,
        mismatches,
    })
}

/// Checks `ψ̃∘ϑ = ϑ_d∘ψ̃` on brackets of basis pairs: both anti-involutions
/// reverse brackets with the same structure constants.
pub fn verify_involution_compat(n: usize, r: usize) -> Result<Check> {
    let ys = ChevalleySystem::derivation(n)?;
    let xs = ChevalleySystem::operator(n, r)?;
    let labels = ys.labels().to_vec();
    for l in &labels {
        for m in &labels {
            let a: LieElt = [(l.clone(), Scalar::one())].into_iter().collect();
            let b: LieElt = [(m.clone(), Scalar::one())].into_iter().collect();
            // ϑ([a,b]) = [ϑb, ϑa] on each side.
            for sys in [&ys, &xs] {
                let lhs = bracket_coords(sys, &a, &b).map(|c| anti_involution(&c));
                let rhs = bracket_coords(sys, &anti_involution(&b), &anti_involution(&a));
                if lhs.is_none() || lhs != rhs {
                    return Ok(Check::fail(
                        format!("theta compat n={n} r={r}"),
                        format!("theta([{l}, {m}]) on {:?} side", sys.side),
                    ));
                }
            }
        }
    }
    Ok(Check::pass(format!("theta compat n={n} r={r}")).with_detail(format!("{} pairs", labels.len() * labels.len())))
}

//! Evaluation of syntax trees into operators and polynomials.

use super::ast::{Atom, Expr, Pos};
use super::ExprError;
use crate::liealg::{BasisLabel, ChevalleySystem, Root};
use crate::poly::{Frame, FrameKind, Poly};
use crate::scalars::Scalar;
use crate::weyl::{self, WeylOp};

/// What atoms resolve against: the frame plus the optional `r` and `p`.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub frame: Frame,
    /// Needed by `x[...]` (the operator-side Chevalley basis).
    pub r: Option<usize>,
    /// Default signature for a bare `Box`.
    pub p: Option<usize>,
}

impl EvalContext {
    pub fn new(frame: Frame) -> Self {
        EvalContext {
            frame,
            r: None,
            p: None,
        }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }
}

fn chevalley_label(atom: &Atom, ell: usize) -> Result<BasisLabel, ExprError> {
    let arg = atom
        .arg
        .as_deref()
        .ok_or_else(|| ExprError::atom(atom.pos, format!("{} needs a [label] argument", atom.name)))?;
    if let Some(j) = arg.strip_prefix('h').and_then(|s| s.parse::<usize>().ok()) {
        return if (1..=ell).contains(&j) {
            Ok(BasisLabel::Cartan(j))
        } else {
            Err(ExprError::atom(atom.pos, format!("no Cartan element h{j}")))
        };
    }
    Root::parse(arg, ell)
        .map(BasisLabel::Root)
        .map_err(|e| ExprError::atom(atom.pos, e.to_string()))
}

fn lookup(sys: &ChevalleySystem, atom: &Atom) -> Result<WeylOp, ExprError> {
    let label = chevalley_label(atom, sys.roots.ell)?;
    sys.get(&label)
        .cloned()
        .ok_or_else(|| ExprError::atom(atom.pos, format!("{label} is not in the basis")))
}

fn frame_error(pos: Pos, what: &str, frame: Frame) -> ExprError {
    ExprError::frame(pos, format!("{what} is not available in {frame}"))
}

fn resolve(atom: &Atom, ctx: &EvalContext) -> Result<WeylOp, ExprError> {
    let frame = ctx.frame;
    let n = frame.n();
    let pos = atom.pos;
    if atom.arg.is_some() && !matches!(atom.name.as_str(), "Box" | "x" | "y") {
        return Err(ExprError::atom(pos, format!("{} takes no argument", atom.name)));
    }
    let op = match atom.name.as_str() {
        "i" => WeylOp::scalar(frame, Scalar::i()),
        "r2" => WeylOp::scalar(frame, Scalar::sqrt2()),
        "E" | "E1" => weyl::euler(frame),
        "Lap" => weyl::laplacian(frame),
        "F" => weyl::quadratic_form_op(frame),
        "Box" => {
            if frame.kind() != FrameKind::X {
                return Err(frame_error(pos, "Box", frame));
            }
            let p = match &atom.arg {
                Some(a) => a
                    .parse::<usize>()
                    .map_err(|_| ExprError::atom(pos, format!("bad signature '{a}'")))?,
                None => ctx.p.unwrap_or(n),
            };
            if p > n {
                return Err(ExprError::atom(pos, format!("signature {p} exceeds n = {n}")));
            }
            weyl::box_op(n, p)
        }
        "x" => {
            let r = ctx
                .r
                .ok_or_else(|| ExprError::atom(pos, "x[...] needs r in the context"))?;
            let sys = ChevalleySystem::operator(n, r).map_err(|e| ExprError::atom(pos, e.to_string()))?;
            let op = lookup(&sys, atom)?;
            match frame.kind() {
                FrameKind::U => op,
                FrameKind::X => op.to_x_frame().map_err(|e| ExprError::frame(pos, e.to_string()))?,
                FrameKind::UFull => return Err(frame_error(pos, "x[...]", frame)),
            }
        }
        "y" => {
            if frame.kind() != FrameKind::UFull {
                return Err(frame_error(pos, "y[...]", frame));
            }
            let sys = ChevalleySystem::derivation(n).map_err(|e| ExprError::atom(pos, e.to_string()))?;
            lookup(&sys, atom)?
        }
        name => {
            if let Some(s) = frame.slot_of_var(name) {
                WeylOp::x(frame, s).map_err(|e| ExprError::frame(pos, e.to_string()))?
            } else if let Some(s) = frame.slot_of_deriv(name) {
                WeylOp::d(frame, s).map_err(|e| ExprError::frame(pos, e.to_string()))?
            } else {
                return Err(ExprError::atom(pos, format!("unknown atom '{name}' in {frame}")));
            }
        }
    };
    Ok(op)
}

/// Evaluates to an operator, multiplying factors in written order.
pub fn eval_op(e: &Expr, ctx: &EvalContext) -> Result<WeylOp, ExprError> {
    Ok(match e {
        Expr::Num(q) => WeylOp::scalar(ctx.frame, Scalar::from_rational(q.clone())),
        Expr::Atom(a) => resolve(a, ctx)?,
        Expr::Add(x, y) => &eval_op(x, ctx)? + &eval_op(y, ctx)?,
        Expr::Sub(x, y) => &eval_op(x, ctx)? - &eval_op(y, ctx)?,
        Expr::Mul(x, y) => &eval_op(x, ctx)? * &eval_op(y, ctx)?,
        Expr::Pow(x, k) => eval_op(x, ctx)?.pow(*k),
        Expr::Neg(x) => -&eval_op(x, ctx)?,
        Expr::Group(x) => eval_op(x, ctx)?,
    })
}

/// Evaluates to a polynomial; fails if any derivative survives.
pub fn eval_poly(e: &Expr, ctx: &EvalContext) -> Result<Poly, ExprError> {
    eval_op(e, ctx)?.as_poly().ok_or_else(|| {
        ExprError::frame(
            first_pos(e).unwrap_or(Pos { line: 1, col: 1 }),
            "expression is not a polynomial",
        )
    })
}

fn first_pos(e: &Expr) -> Option<Pos> {
    match e {
        Expr::Num(_) => None,
        Expr::Atom(a) => Some(a.pos),
        Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) => first_pos(x).or_else(|| first_pos(y)),
        Expr::Pow(x, _) | Expr::Neg(x) | Expr::Group(x) => first_pos(x),
    }
}

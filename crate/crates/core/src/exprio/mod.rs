//! Text form of polynomials and operators: canonical printer and parser.
//!
//! Atoms: frame variables (`X1`, `U-2`), derivatives (`D1`, `DU0`), the
//! scalars `i` and `r2`, `E`/`E1` (Euler), `Lap`, `F`, `Box` or `Box[p]`,
//! and Chevalley basis elements `x[e1-e2]`, `x[h1]` (operator side) or
//! `y[...]` (derivation side, ambient frame).

mod ast;
mod eval;
mod parse;
mod print;

use thiserror::Error;

pub use ast::{print_expr, Atom, Expr, Pos};
pub use eval::{eval_op, eval_poly, EvalContext};
pub use parse::parse;
pub use print::{print_op, print_poly};

use crate::poly::Poly;
use crate::weyl::WeylOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprErrorKind {
    /// Lexical or grammatical error.
    Syntax,
    /// Unknown atom or bad atom argument.
    Atom,
    /// Atom or result incompatible with the frame.
    Frame,
}

/// A parse or evaluation failure at a source position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl ExprError {
    fn new(kind: ExprErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ExprError {
            kind,
            pos,
            message: message.into(),
        }
    }

    pub(crate) fn syntax(pos: Pos, message: impl Into<String>) -> Self {
        Self::new(ExprErrorKind::Syntax, pos, message)
    }

    pub(crate) fn atom(pos: Pos, message: impl Into<String>) -> Self {
        Self::new(ExprErrorKind::Atom, pos, message)
    }

    pub(crate) fn frame(pos: Pos, message: impl Into<String>) -> Self {
        Self::new(ExprErrorKind::Frame, pos, message)
    }
}

/// Parses and normalizes an operator.
pub fn parse_op(text: &str, ctx: &EvalContext) -> Result<WeylOp, ExprError> {
    eval_op(&parse(text)?, ctx)
}

/// Parses a polynomial.
pub fn parse_poly(text: &str, ctx: &EvalContext) -> Result<Poly, ExprError> {
    eval_poly(&parse(text)?, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Frame;
    use crate::weyl;

    #[test]
    fn commutation_and_p_operator() {
        let ctx = EvalContext::new(Frame::x(3));
        let lhs = parse_op("D1*X1", &ctx).unwrap();
        assert_eq!(lhs, parse_op("X1*D1 + 1", &ctx).unwrap());
        let p = parse_op("X1*Lap - (E1 + 1/2)*D1", &ctx).unwrap();
        assert_eq!(p, weyl::p_op(3, 1, &crate::Rational::new(1.into(), 2.into())));
        let f = parse_op("F^2", &ctx).unwrap();
        let ff = weyl::quadratic_form_op(Frame::x(3));
        assert_eq!(f, &ff * &ff);
    }

    #[test]
    fn canonical_print() {
        assert_eq!(
            print_op(&weyl::laplacian(Frame::x(3))),
            "1/2*D1^2 + 1/2*D2^2 + 1/2*D3^2"
        );
        assert_eq!(print_op(&WeylOp::zero(Frame::x(3))), "0");
    }

    #[test]
    fn u_frame_round_trip() {
        let f = Frame::u(5);
        let ctx = EvalContext::new(f).with_r(2);
        let op = parse_op("x[e1-e2] + (1/2 - 3*i*r2)*U-2^2*DU0 - x[h1]", &ctx).unwrap();
        assert_eq!(parse_op(&print_op(&op), &ctx).unwrap(), op);
    }

    #[test]
    fn error_positions() {
        let ctx = EvalContext::new(Frame::x(3));
        let e = parse_op("X1 + Y7", &ctx).unwrap_err();
        assert_eq!((e.kind, e.pos.col), (ExprErrorKind::Atom, 6));
        let e = parse_op("X1 *\n  (D2 + )", &ctx).unwrap_err();
        assert_eq!((e.kind, e.pos.line, e.pos.col), (ExprErrorKind::Syntax, 2, 9));
        let e = parse_op("X1 $ 2", &ctx).unwrap_err();
        assert_eq!(e.pos.col, 4);
    }
}

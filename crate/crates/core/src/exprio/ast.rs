//! Syntax tree of the expression language and its printer.

use crate::scalars::{rational_text, Rational};
use std::fmt;

/// 1-based source position.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A named atom such as `X1`, `DU-2`, `Lap`, `Box[2]` or `x[e1-e2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub name: String,
    /// Bracketed argument, as in `Box[p]`.
    pub arg: Option<String>,
    pub pos: Pos,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.arg {
            Some(a) => write!(f, "{}[{a}]", self.name),
            None => f.write_str(&self.name),
        }
    }
}

/// Products keep their written order; nothing is normalized here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative rational literal.
    Num(Rational),
    Atom(Atom),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
    Group(Box<Expr>),
}

// Binding strength used by the printer.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const PREFIX: u8 = 3;
const PRIMARY: u8 = 4;

impl Expr {
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => SUM,
            Expr::Mul(..) => PRODUCT,
            Expr::Neg(_) => PREFIX,
            Expr::Pow(..) | Expr::Num(_) | Expr::Atom(_) | Expr::Group(_) => PRIMARY,
        }
    }

    /// Drops groups and source positions.
    pub fn normalized(&self) -> Expr {
        let b = |e: &Expr| Box::new(e.normalized());
        match self {
            Expr::Num(q) => Expr::Num(q.clone()),
            Expr::Atom(a) => Expr::Atom(Atom {
                pos: Pos::default(),
                ..a.clone()
            }),
            Expr::Add(x, y) => Expr::Add(b(x), b(y)),
            Expr::Sub(x, y) => Expr::Sub(b(x), b(y)),
            Expr::Mul(x, y) => Expr::Mul(b(x), b(y)),
            Expr::Pow(x, e) => Expr::Pow(b(x), *e),
            Expr::Neg(x) => Expr::Neg(b(x)),
            Expr::Group(x) => x.normalized(),
        }
    }

    fn write_at(&self, out: &mut String, min: u8) {
        if self.level() < min {
            out.push('(');
            self.write_at(out, 0);
            out.push(')');
            return;
        }
        match self {
            Expr::Num(q) => out.push_str(&rational_text(q)),
            Expr::Atom(a) => out.push_str(&a.to_string()),
            Expr::Add(x, y) | Expr::Sub(x, y) => {
                x.write_at(out, SUM);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                y.write_at(out, PRODUCT);
            }
            Expr::Mul(x, y) => {
                x.write_at(out, PRODUCT);
                out.push('*');
                y.write_at(out, PREFIX);
            }
            Expr::Pow(x, e) => {
                // A power of a power needs its own parentheses.
                if matches!(**x, Expr::Pow(..)) {
                    out.push('(');
                    x.write_at(out, 0);
                    out.push(')');
                } else {
                    x.write_at(out, PRIMARY);
                }
                out.push_str(&format!("^{e}"));
            }
            Expr::Neg(x) => {
                out.push('-');
                x.write_at(out, PREFIX);
            }
            Expr::Group(x) => {
                out.push('(');
                x.write_at(out, 0);
                out.push(')');
            }
        }
    }
}

/// Text that parses back to the same tree up to groups and positions.
pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    e.write_at(&mut out, 0);
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_expr(self))
    }
}

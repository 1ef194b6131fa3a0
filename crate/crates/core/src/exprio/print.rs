//! Canonical text form of polynomials and operators.
//!
//! Terms appear in descending graded-lex order of their exponent key.
//! A coefficient with more than one nonzero component is parenthesized.

use crate::poly::{grlex_cmp, Frame, Poly};
use crate::scalars::{rational_text, Scalar};
use crate::weyl::WeylOp;
use num_traits::{One, Signed};
use std::fmt;

const UNIT_NAMES: [&str; 4] = ["", "i", "r2", "i*r2"];

fn factors(frame: Frame, key: &[u16]) -> Vec<String> {
    let nv = frame.nvars();
    let mut out = Vec::new();
    for (s, &e) in key.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if s < nv {
            frame.var_name(s)
        } else {
            frame.deriv_name(s - nv)
        };
        out.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    out
}

/// Writes one term; `first` controls whether a leading `+` is emitted.
fn write_term(out: &mut String, coeff: &Scalar, factors: &[String], first: bool) {
    let mono = factors.join("*");
    let (negative, body) = match coeff.single_component() {
        Some((k, q)) => {
            let mag = q.abs();
            let unit = UNIT_NAMES[k];
            let coeff_text = match (k, mag.is_one()) {
                (0, _) => rational_text(&mag),
                (_, true) => unit.to_string(),
                (_, false) => format!("{}*{unit}", rational_text(&mag)),
            };
            let body = if mono.is_empty() {
                coeff_text
            } else if k == 0 && mag.is_one() {
                mono
            } else {
                format!("{coeff_text}*{mono}")
            };
            (q.is_negative(), body)
        }
        None => {
            let body = if mono.is_empty() {
                format!("({coeff})")
            } else {
                format!("({coeff})*{mono}")
            };
            (false, body)
        }
    };
    match (first, negative) {
        (true, false) => {}
        (true, true) => out.push('-'),
        (false, false) => out.push_str(" + "),
        (false, true) => out.push_str(" - "),
    }
    out.push_str(&body);
}

fn render<'a>(frame: Frame, mut terms: Vec<(&'a [u16], &'a Scalar)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().enumerate() {
        write_term(&mut out, c, &factors(frame, k), i == 0);
    }
    out
}

/// Canonical text of a polynomial.
pub fn print_poly(p: &Poly) -> String {
    render(p.frame(), p.terms().map(|(e, c)| (e.as_slice(), c)).collect())
}

/// Canonical text of an operator.
pub fn print_op(op: &WeylOp) -> String {
    render(op.frame(), op.terms().map(|(e, c)| (e.as_slice(), c)).collect())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_poly(self))
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_op(self))
    }
}

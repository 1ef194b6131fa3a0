//! Lexer and recursive-descent parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | primary ('^' nat)?
//! primary:= number | atom | '(' expr ')'
//! ```
//! Numbers are `nat` or `nat/nat`. Atoms are identifiers with an optional
//! `-nat` suffix after `U`/`DU` and an optional `[...]` argument.

use super::ast::{Atom, Expr, Pos};
use super::ExprError;
use crate::scalars::Rational;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String, Option<String>),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(q) => format!("number {q}"),
            Tok::Ident(s, _) => format!("atom {s}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            i: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self, k: usize) -> Option<char> {
        self.chars.get(self.i + k).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek(0)?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek(0).filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>, ExprError> {
        let mut out = Vec::new();
        loop {
            while self.peek(0).is_some_and(char::is_whitespace) {
                self.bump();
            }
            let pos = self.pos();
            let Some(c) = self.peek(0) else {
                out.push((Tok::End, pos));
                return Ok(out);
            };
            let tok = match c {
                '+' | '-' | '*' | '^' | '(' | ')' => {
                    self.bump();
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    }
                }
                d if d.is_ascii_digit() => self.number(pos)?,
                a if a.is_ascii_alphabetic() => self.ident(pos)?,
                other => return Err(ExprError::syntax(pos, format!("unexpected character '{other}'"))),
            };
            out.push((tok, pos));
        }
    }

    fn number(&mut self, pos: Pos) -> Result<Tok, ExprError> {
        let num: BigInt = self.digits().parse().expect("digits");
        if self.peek(0) != Some('/') {
            return Ok(Tok::Num(Rational::from_integer(num)));
        }
        self.bump();
        let den_pos = self.pos();
        let den = self.digits();
        if den.is_empty() {
            return Err(ExprError::syntax(den_pos, "expected a denominator after '/'"));
        }
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(ExprError::syntax(pos, "zero denominator"));
        }
        Ok(Tok::Num(Rational::new(num, den)))
    }

    fn ident(&mut self, pos: Pos) -> Result<Tok, ExprError> {
        let mut name = String::new();
        while let Some(c) = self.peek(0).filter(char::is_ascii_alphanumeric) {
            name.push(c);
            self.bump();
        }
        // Negative U labels: `U-2`, `DU-1`.
        if (name == "U" || name == "DU")
            && self.peek(0) == Some('-')
            && self.peek(1).is_some_and(|c| c.is_ascii_digit())
        {
            self.bump();
            name.push('-');
            name.push_str(&self.digits());
        }
        let mut arg = None;
        if self.peek(0) == Some('[') {
            self.bump();
            let mut s = String::new();
            loop {
                match self.bump() {
                    Some(']') => break,
                    Some('\n') | None => return Err(ExprError::syntax(pos, format!("unclosed '[' after {name}"))),
                    Some(c) => s.push(c),
                }
            }
            arg = Some(s.trim().to_string());
        }
        Ok(Tok::Ident(name, arg))
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ExprError {
        ExprError::syntax(
            self.pos(),
            format!("expected {expected}, found {}", self.peek().describe()),
        )
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.next();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.next();
        match self.next() {
            (Tok::Num(q), pos) => {
                let e = q
                    .is_integer()
                    .then(|| u32::try_from(q.numer()).ok())
                    .flatten()
                    .ok_or_else(|| ExprError::syntax(pos, "exponent must be a natural number"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            (tok, pos) => Err(ExprError::syntax(
                pos,
                format!("expected an exponent, found {}", tok.describe()),
            )),
        }
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Tok::Num(q) => {
                self.next();
                Ok(Expr::Num(q))
            }
            Tok::Ident(name, arg) => {
                let pos = self.pos();
                self.next();
                Ok(Expr::Atom(Atom { name, arg, pos }))
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.next();
                Ok(Expr::Group(Box::new(inner)))
            }
            _ => Err(self.unexpected("a number, atom or '('")),
        }
    }
}

/// Parses text into a syntax tree.
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, i: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

//! Parser and printer round trips and error positions.

use hsym_core::exprio::{parse, parse_op, parse_poly, print_expr, print_op, print_poly, Atom, EvalContext, Expr, Pos};
use hsym_core::poly::{Frame, FrameKind};
use hsym_core::symmetry::random_operator;
use hsym_core::{sample, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ATOMS: &[&str] = &["X1", "X2", "D3", "U-2", "DU0", "Lap", "F", "E1", "i", "r2"];

fn random_ast(g: &mut ChaCha8Rng, depth: u32) -> Expr {
    let leaf = depth == 0 || g.gen_bool(0.3);
    if leaf {
        return if g.gen_bool(0.3) {
            Expr::Num(Rational::new(g.gen_range(0..20).into(), g.gen_range(1..5).into()))
        } else {
            let name = ATOMS[g.gen_range(0..ATOMS.len())].to_string();
            let arg = (name == "F" && g.gen_bool(0.2)).then(|| "2".to_string());
            let name = if arg.is_some() { "Box".into() } else { name };
            Expr::Atom(Atom {
                name,
                arg,
                pos: Pos::default(),
            })
        };
    }
    let b = |g: &mut ChaCha8Rng| Box::new(random_ast(g, depth - 1));
    match g.gen_range(0..6) {
        0 => Expr::Add(b(g), b(g)),
        1 => Expr::Sub(b(g), b(g)),
        2 => Expr::Mul(b(g), b(g)),
        3 => Expr::Pow(b(g), g.gen_range(0..4)),
        4 => Expr::Neg(b(g)),
        _ => Expr::Group(b(g)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ast_print_parse_round_trip(seed in any::<u64>()) {
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let e = random_ast(&mut g, 5);
        let text = print_expr(&e);
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back.normalized(), e.normalized(), "{}", text);
    }

    #[test]
    fn operator_print_parse_round_trip(seed in any::<u64>()) {
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let kinds = [FrameKind::X, FrameKind::U, FrameKind::UFull];
        let f = Frame::new(kinds[(seed % 3) as usize], 3 + (seed / 3 % 4) as usize).unwrap();
        let op = random_operator(&mut g, f, 3);
        let ctx = EvalContext::new(f);
        prop_assert_eq!(parse_op(&print_op(&op), &ctx).unwrap(), op);
        let p = sample::polynomial(&mut g, f, 4, 4);
        prop_assert_eq!(parse_poly(&print_poly(&p), &ctx).unwrap(), p);
    }
}

/// Malformed inputs with the 1-based column of the offending token.
const MALFORMED: &[(&str, usize, usize)] = &[
    ("X1 + ", 1, 6),
    ("X1 ++ X2", 1, 5),
    ("(X1 + X2", 1, 9),
    ("X1 + X2)", 1, 8),
    ("X1 # X2", 1, 4),
    ("X1^X2", 1, 4),
    ("X1^1/2", 1, 4),
    ("3/ + X1", 1, 3),
    ("1/0*X1", 1, 1),
    ("Q7*X1", 1, 1),
    ("X1*X9", 1, 4),
    ("X1 *\n   Y2", 2, 4),
    ("Box[7]", 1, 1),
    ("Box[2", 1, 1),
    ("DU1", 1, 1),
    ("X1 X2", 1, 4),
    ("*X1", 1, 1),
];

#[test]
fn malformed_inputs_report_positions() {
    let ctx = EvalContext::new(Frame::x(3));
    for &(text, line, col) in MALFORMED {
        let err = parse_op(text, &ctx).expect_err(text);
        assert_eq!((err.pos.line, err.pos.col), (line, col), "{text}: {err}");
    }
}

#[test]
fn polynomials_reject_derivatives() {
    let ctx = EvalContext::new(Frame::x(3));
    assert!(parse_poly("X1*D1", &ctx).is_err());
    assert!(parse_poly("D1*X1 - X1*D1", &ctx).is_ok());
}

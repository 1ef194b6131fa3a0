//! Generator sets of the three presentations and their bracket relations.

use super::chevalley::{e_op, v_op, ChevalleySystem};
use crate::error::{Error, Result};
use crate::linalg::{SparseSpan, SparseVec};
use crate::poly::{self, Frame, FrameKind};
use crate::report::{all_of, Check};
use crate::scalars::{Rational, Scalar};
use crate::weyl::{self, p_op, rotation, shifted_euler, WExps, WeylOp};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// `E_ij` on the ambient frame in `n + 2` variables.
    Derivation,
    /// `X_i, E₁ + d, D_ij, P_j(d)` on the X frame.
    Operator,
    /// Rational-coefficient real form for signature `(p, n − p)`.
    Real,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub op: WeylOp,
}

/// A named spanning set of a copy of so(n+2).
#[derive(Clone, Debug)]
pub struct GenSet {
    pub presentation: Presentation,
    pub n: usize,
    pub r: Option<usize>,
    pub p: Option<usize>,
    pub gens: Vec<Generator>,
}

impl GenSet {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&WeylOp> {
        self.gens.iter().find(|g| g.name == name).map(|g| &g.op)
    }

    /// Expands `op` in the generators, if it lies in their span.
    pub fn coordinates(&self, op: &WeylOp) -> Option<SparseVec<usize>> {
        self.span().coordinates(&sparse(op))
    }

    fn span(&self) -> SparseSpan<WExps> {
        let mut sp = SparseSpan::new();
        for g in &self.gens {
            sp.insert(&sparse(&g.op));
        }
        sp
    }

    /// Dimension of the span of the generators.
    pub fn rank(&self) -> usize {
        self.span().dim()
    }
}

fn sparse(op: &WeylOp) -> SparseVec<WExps> {
    op.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

pub fn so_dim(n: usize) -> usize {
    (n + 2) * (n + 1) / 2
}

/// All independent `E_ij` on the ambient frame (`E_{-i,-j} = −E_{ji}` identifies pairs).
pub fn build_derivation_presentation(n: usize) -> Result<GenSet> {
    let frame = Frame::new(FrameKind::UFull, n)?;
    let labels = frame.labels();
    let mut sp = SparseSpan::new();
    let mut gens = Vec::new();
    for &i in &labels {
        for &j in &labels {
            let op = e_op(frame, i, j)?;
            if !op.is_zero() && sp.insert(&sparse(&op)) {
                gens.push(Generator {
                    name: format!("E[{i}][{j}]"),
                    op,
                });
            }
        }
    }
    Ok(GenSet {
        presentation: Presentation::Derivation,
        n,
        r: None,
        p: None,
        gens,
    })
}

/// `X_i`, `E₁ + d`, `D_ij` (`i < j`), `P_j(d)` with `d = n/2 − r`.
pub fn build_operator_presentation(n: usize, r: usize) -> Result<GenSet> {
    check_params(n, r)?;
    let f = Frame::x(n);
    let d = weyl::d_param(n, r);
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(Generator {
            name: format!("X{i}"),
            op: WeylOp::x(f, i - 1)?,
        });
    }
    gens.push(Generator {
        name: "E1+d".into(),
        op: shifted_euler(n, &d),
    });
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(Generator {
                name: format!("D[{i}][{j}]"),
                op: rotation(n, i, j),
            });
        }
    }
    for j in 1..=n {
        gens.push(Generator {
            name: format!("P[{j}]"),
            op: p_op(n, j, &d),
        });
    }
    Ok(GenSet {
        presentation: Presentation::Operator,
        n,
        r: Some(r),
        p: None,
        gens,
    })
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n} < 3")));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    Ok(())
}

/// `D̃_kl = X_k ∂_l + X_l ∂_k` (1-based).
pub fn rotation_tilde(n: usize, k: usize, l: usize) -> WeylOp {
    let f = Frame::x(n);
    let xk = WeylOp::x(f, k - 1).expect("index");
    let xl = WeylOp::x(f, l - 1).expect("index");
    let dk = WeylOp::d(f, k - 1).expect("index");
    let dl = WeylOp::d(f, l - 1).expect("index");
    &(&xk * &dl) + &(&xl * &dk)
}

/// `P̃_j = X_j □_p ∓ (E₁ + d) ∂_j`, minus for `j ≤ p`.
pub fn p_tilde(n: usize, p: usize, j: usize, d: &Rational) -> WeylOp {
    let f = Frame::x(n);
    let xj = WeylOp::x(f, j - 1).expect("index");
    let dj = WeylOp::d(f, j - 1).expect("index");
    let first = &xj * &weyl::box_op(n, p);
    let second = &shifted_euler(n, d) * &dj;
    if j <= p {
        &first - &second
    } else {
        &first + &second
    }
}

/// The real form for signature `(p, n − p)`: rational coefficients only.
pub fn build_real_presentation(n: usize, p: usize, r: usize) -> Result<GenSet> {
    check_params(n, r)?;
    if p > n {
        return Err(Error::InvalidParameter(format!("signature p = {p} > n = {n}")));
    }
    let f = Frame::x(n);
    let d = weyl::d_param(n, r);
    let mut gens = vec![Generator {
        name: "E1+d".into(),
        op: shifted_euler(n, &d),
    }];
    for k in 1..=n {
        gens.push(Generator {
            name: format!("X{k}"),
            op: WeylOp::x(f, k - 1)?,
        });
    }
    for j in 1..=n {
        gens.push(Generator {
            name: format!("Pt[{j}]"),
            op: p_tilde(n, p, j, &d),
        });
    }
    for k in 1..=n {
        for l in k + 1..=n {
            let same_block = (l <= p) || (k > p);
            let (name, op) = if same_block {
                (format!("D[{k}][{l}]"), rotation(n, k, l))
            } else {
                (format!("Dt[{k}][{l}]"), rotation_tilde(n, k, l))
            };
            gens.push(Generator { name, op });
        }
    }
    Ok(GenSet {
        presentation: Presentation::Real,
        n,
        r: Some(r),
        p: Some(p),
        gens,
    })
}

/// Exact operator identity as a check, with the difference as detail.
pub fn op_eq(name: impl Into<String>, lhs: &WeylOp, rhs: &WeylOp) -> Check {
    let diff = lhs - rhs;
    if diff.is_zero() {
        Check::pass(name)
    } else {
        Check::fail(name, format!("lhs - rhs = {diff}"))
    }
}

fn delta(i: usize, j: usize) -> Scalar {
    Scalar::from_int((i == j) as i64)
}

/// Rotation relations and `[D_ij, F] = 0` on the X frame.
fn rotation_relations(n: usize) -> Vec<Check> {
    let f = Frame::x(n);
    let big_f = weyl::quadratic_form_op(f);
    let d = |i: usize, j: usize| rotation(n, i, j);
    let x = |i: usize| WeylOp::x(f, i - 1).expect("index");
    let mut xi_checks = Vec::new();
    let mut dd_checks = Vec::new();
    let mut f_checks = Vec::new();
    for k in 1..=n {
        for l in 1..=n {
            f_checks.push(op_eq(
                format!("[D{k}{l}, F]"),
                &d(k, l).bracket(&big_f),
                &WeylOp::zero(f),
            ));
            for i in 1..=n {
                let rhs = &x(k).scale(&delta(i, l)) - &x(l).scale(&delta(i, k));
                xi_checks.push(op_eq(format!("[D{k}{l}, X{i}]"), &d(k, l).bracket(&x(i)), &rhs));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let rhs = &(&(&d(i, l).scale(&delta(j, k)) + &d(k, i).scale(&delta(j, l)))
                        + &d(l, j).scale(&delta(i, k)))
                        + &d(j, k).scale(&delta(i, l));
                    dd_checks.push(op_eq(format!("[D{i}{j}, D{k}{l}]"), &d(i, j).bracket(&d(k, l)), &rhs));
                }
            }
        }
    }
    vec![
        all_of(format!("n={n}: [D_kl, X_i]"), xi_checks),
        all_of(format!("n={n}: [D_ij, F] = 0"), f_checks),
        all_of(format!("n={n}: [D_ij, D_kl]"), dd_checks),
    ]
}

/// The `P_j(d)` relations, closure of the span, and preservation of `FʳA`.
fn p_relations(n: usize, r: usize) -> Result<Vec<Check>> {
    let f = Frame::x(n);
    let d = weyl::d_param(n, r);
    let ie = shifted_euler(n, &d);
    let lap = weyl::laplacian(f);
    let p = |j: usize| p_op(n, j, &d);
    let x = |i: usize| WeylOp::x(f, i - 1).expect("index");
    let dx = |i: usize| WeylOp::d(f, i - 1).expect("index");
    let tag = format!("n={n} r={r}");
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut c = Vec::new();
    for j in 1..=n {
        a.push(op_eq(format!("[E1+d, P{j}]"), &ie.bracket(&p(j)), &-&p(j)));
        for k in 1..=n {
            let rhs = &(&dx(j) * &dx(k)) - &lap.scale(&delta(j, k));
            a.push(op_eq(format!("[P{j}, D{k}]"), &p(j).bracket(&dx(k)), &rhs));
            let rhs = &rotation(n, k, j) + &ie.scale(&delta(k, j));
            b.push(op_eq(format!("[X{k}, P{j}]"), &x(k).bracket(&p(j)), &rhs));
            c.push(op_eq(format!("[P{j}, P{k}]"), &p(j).bracket(&p(k)), &WeylOp::zero(f)));
            for l in 1..=n {
                let rhs = &p(k).scale(&delta(l, j)) - &p(l).scale(&delta(k, j));
                b.push(op_eq(
                    format!("[D{k}{l}, P{j}]"),
                    &rotation(n, k, l).bracket(&p(j)),
                    &rhs,
                ));
            }
        }
    }
    let gs = build_operator_presentation(n, r)?;
    let closure = closure_check(&gs, format!("{tag}: operator span closed, dim {}", so_dim(n)));
    let big_f = poly::quadratic_form(f);
    let fr = WeylOp::from_poly(&big_f.pow(r as u32));
    let ideal: Vec<Check> = gs
        .gens
        .iter()
        .map(|g| {
            Check::from_bool(
                format!("{} F^{r} in F^{r} D(A)", g.name),
                weyl::in_right_ideal_of_power(&(&g.op * &fr), &big_f, r as u32),
                "",
            )
        })
        .collect();
    Ok(vec![
        all_of(format!("{tag}: [E1+d, P_j] = -P_j and [P_j, D_k]"), a),
        all_of(format!("{tag}: [X_i, P_j] and [D_kl, P_j]"), b),
        all_of(format!("{tag}: [P_i, P_j] = 0"), c),
        closure,
        all_of(format!("{tag}: generators preserve F^r A"), ideal),
    ])
}

/// The span has the right dimension and is closed under brackets.
/// With `rational_only`, structure constants must also be rational.
fn closure_with(gs: &GenSet, name: String, rational_only: bool) -> Check {
    let sp = gs.span();
    if sp.dim() != so_dim(gs.n) {
        return Check::fail(name, format!("span has dim {} (expected {})", sp.dim(), so_dim(gs.n)));
    }
    for (i, g) in gs.gens.iter().enumerate() {
        for h in &gs.gens[i + 1..] {
            let br = g.op.bracket(&h.op);
            match sp.coordinates(&sparse(&br)) {
                None => return Check::fail(name, format!("[{}, {}] leaves the span", g.name, h.name)),
                Some(coords) if rational_only && !coords.values().all(Scalar::is_rational) => {
                    return Check::fail(
                        name,
                        format!("[{}, {}] has irrational structure constants", g.name, h.name),
                    )
                }
                Some(_) => {}
            }
        }
    }
    Check::pass(name)
}

fn closure_check(gs: &GenSet, name: String) -> Check {
    closure_with(gs, name, false)
}

/// Relations of the ambient derivations: `E_{-i,-j} = −E_{ji}`, `E_{-i,i} = 0`,
/// `E_ij(Q̃) = 0`, the sl(2) spanned by `Δ, Q̃, −(E + N/2)`, and the dual pair.
fn derivation_relations(n: usize) -> Result<Vec<Check>> {
    let f = Frame::new(FrameKind::UFull, n)?;
    let labels = f.labels();
    let q = poly::quadratic_form(f);
    let q_op = WeylOp::from_poly(&q);
    let lap = weyl::laplacian(f);
    let eul = weyl::euler(f);
    let big_n = Scalar::from_int((n + 2) as i64);
    let tag = format!("n={n}");
    let mut sym = Vec::new();
    let mut kills = Vec::new();
    let mut commute = Vec::new();
    for &i in &labels {
        for &j in &labels {
            let e = e_op(f, i, j)?;
            sym.push(op_eq(
                format!("E[{}][{}] = -E[{j}][{i}]", -i, -j),
                &e_op(f, -i, -j)?,
                &-&e_op(f, j, i)?,
            ));
            kills.push(Check::from_bool(format!("E[{i}][{j}](Q)"), e.apply(&q).is_zero(), ""));
            for (nm, other) in [("Lap", &lap), ("Q", &q_op), ("E", &eul)] {
                commute.push(op_eq(
                    format!("[E[{i}][{j}], {nm}]"),
                    &e.bracket(other),
                    &WeylOp::zero(f),
                ));
            }
        }
        sym.push(op_eq(format!("E[{}][{i}] = 0", -i), &e_op(f, -i, i)?, &WeylOp::zero(f)));
    }
    let shifted = &eul + &WeylOp::scalar(f, big_n.scale(&Rational::new(1.into(), 2.into())));
    let two = Scalar::from_int(2);
    let sl2 = vec![
        op_eq(
            "[Lap, Q] = 2E + N",
            &lap.bracket(&q_op),
            &(&eul.scale(&two) + &WeylOp::scalar(f, big_n)),
        ),
        op_eq(
            "[E + N/2, Lap] = -2 Lap",
            &shifted.bracket(&lap),
            &lap.scale(&Scalar::from_int(-2)),
        ),
        op_eq("[E + N/2, Q] = 2 Q", &shifted.bracket(&q_op), &q_op.scale(&two)),
    ];
    let gs = build_derivation_presentation(n)?;
    let dim = Check::from_bool(
        format!("{tag}: span of E_ij has dim {}", so_dim(n)),
        gs.len() == so_dim(n),
        format!("found {}", gs.len()),
    );
    Ok(vec![
        all_of(format!("{tag}: E_-i,-j = -E_ji and E_-i,i = 0"), sym),
        all_of(format!("{tag}: E_ij(Q) = 0"), kills),
        all_of(format!("{tag}: sl2 triple Lap, Q, -(E+N/2)"), sl2),
        all_of(format!("{tag}: E_ij commute with the sl2"), commute),
        dim,
        closure_check(&gs, format!("{tag}: E_ij span closed")),
    ])
}

/// Identities linking the Chevalley system `{x_α}` to the operator presentation.
fn operator_side_identities(n: usize, r: usize) -> Result<Vec<Check>> {
    let d = weyl::d_param(n, r);
    let xs = ChevalleySystem::operator(n, r)?;
    let lp = n / 2;
    let tag = format!("n={n} r={r}");
    let i = Scalar::i();
    let half = Scalar::frac(1, 2);
    let mut h = Vec::new();
    h.push(op_eq(
        "h1 = -(E1+d)",
        xs.cartan(1),
        &(-&shifted_euler(n, &d)).to_u_frame()?,
    ));
    for j in 1..=lp {
        let rot = rotation(n, j, j + lp).scale(&i).to_u_frame()?;
        h.push(op_eq(
            format!("h{} = i D[{j}][{}]", j + 1, j + lp),
            xs.cartan(j + 1),
            &rot,
        ));
    }
    let mut v = Vec::new();
    for a in 1..=lp {
        let pa = p_op(n, a, &d);
        let pb = p_op(n, a + lp, &d).scale(&i);
        let plus = (&pa - &pb).scale(&half).to_u_frame()?;
        let minus = (&pa + &pb).scale(&half).to_u_frame()?;
        v.push(op_eq(format!("V{}", a + 1), &v_op(n, a as i32 + 1, &d)?, &plus));
        v.push(op_eq(format!("V-{}", a + 1), &v_op(n, -(a as i32 + 1), &d)?, &minus));
    }
    if n % 2 == 1 {
        let p0 = p_op(n, n, &d).scale(&Scalar::sqrt2().scale(&Rational::new(1.into(), 2.into())));
        v.push(op_eq("V0", &v_op(n, 0, &d)?, &p0.to_u_frame()?));
    }
    // The x-span equals the operator presentation after the frame change.
    let gs = build_operator_presentation(n, r)?;
    let mut span_checks = Vec::new();
    let mut sp = SparseSpan::new();
    for g in &gs.gens {
        sp.insert(&sparse(&g.op.to_u_frame()?));
    }
    for l in xs.labels() {
        let op = xs.get(l).expect("label");
        span_checks.push(Check::from_bool(format!("{l} in span"), sp.contains(&sparse(op)), ""));
    }
    Ok(vec![
        all_of(format!("{tag}: Cartan h_j"), h),
        all_of(format!("{tag}: V_j = (P_a -/+ i P_a+l')/2"), v),
        all_of(format!("{tag}: x_alpha lie in the operator presentation"), span_checks),
    ])
}

/// Every relation checked for the parameters `(n, r)`.
pub fn verify_relations(n: usize, r: usize) -> Result<Vec<Check>> {
    check_params(n, r)?;
    let mut out = Vec::new();
    out.extend(rotation_relations(n));
    out.extend(p_relations(n, r)?);
    out.extend(derivation_relations(n)?);
    let ys = ChevalleySystem::derivation(n)?;
    let xs = ChevalleySystem::operator(n, r)?;
    out.push(all_of(format!("n={n}: y root relations"), ys.verify_root_relations()));
    out.push(all_of(
        format!("n={n} r={r}: x root relations"),
        xs.verify_root_relations(),
    ));
    out.push(all_of(format!("n={n}: y Chevalley signs"), ys.verify_chevalley_signs()));
    out.push(all_of(
        format!("n={n} r={r}: x Chevalley signs"),
        xs.verify_chevalley_signs(),
    ));
    out.extend(operator_side_identities(n, r)?);
    Ok(out)
}

/// Real-form checks: rational coefficients, relation to the twist, closure.
pub fn verify_real_presentation(n: usize, p: usize, r: usize) -> Result<Vec<Check>> {
    let gs = build_real_presentation(n, p, r)?;
    let d = weyl::d_param(n, r);
    let tag = format!("n={n} p={p} r={r}");
    let rational: Vec<Check> = gs
        .gens
        .iter()
        .map(|g| {
            Check::from_bool(
                format!("{} rational", g.name),
                g.op.terms().all(|(_, c)| c.is_rational()),
                "",
            )
        })
        .collect();
    let minus_i = -Scalar::i();
    let mut twist = Vec::new();
    for j in 1..=n {
        let phi = p_op(n, j, &d).phi_twist(p)?;
        let expected = if j <= p { phi } else { phi.scale(&minus_i) };
        twist.push(op_eq(
            format!("Pt[{j}] from twist"),
            gs.get(&format!("Pt[{j}]")).unwrap(),
            &expected,
        ));
    }
    for k in 1..=p {
        for l in p + 1..=n {
            let phi = rotation(n, k, l).phi_twist(p)?.scale(&Scalar::i());
            twist.push(op_eq(
                format!("Dt[{k}][{l}] = i phi(D[{k}][{l}])"),
                &rotation_tilde(n, k, l),
                &phi,
            ));
        }
    }
    Ok(vec![
        all_of(format!("{tag}: real generators are rational"), rational),
        all_of(format!("{tag}: real generators from the twist"), twist),
        closure_with(&gs, format!("{tag}: real span closed over Q"), true),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    #[test]
    fn sizes() {
        for n in 3..=6 {
            assert_eq!(build_derivation_presentation(n).unwrap().len(), so_dim(n));
            assert_eq!(build_operator_presentation(n, 1).unwrap().len(), so_dim(n));
            assert_eq!(build_real_presentation(n, n - 1, 1).unwrap().len(), so_dim(n));
        }
    }

    #[test]
    fn small_relations() {
        let checks = verify_relations(3, 1).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(all_passed(&verify_relations(4, 2).unwrap()));
    }

    #[test]
    fn real_form() {
        let checks = verify_real_presentation(4, 3, 1).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }
}

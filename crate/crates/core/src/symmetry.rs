//! Symmetries of `Δ₁ʳ` and `□_pʳ`: operators `Q` with `PʳQ = Q'Pʳ`.

use crate::error::{Error, Result};
use crate::gmodule::{module_case, socle_report, ModuleCase, QuotientDim};
use crate::harmonic::{coefficient_matrix, polyharmonic_dim};
use crate::liealg::{build_operator_presentation, rotation_tilde};
use crate::poly::{self, Frame, Poly};
use crate::report::{all_of, Check};
use crate::sample;
use crate::scalars::{Rational, Scalar};
use crate::weyl::{self, fourier_signs, p_op, rotation, shifted_euler, WeylOp};
use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

/// The outcome of a membership test in the idealizer of `D(A)Pʳ`.
#[derive(Clone, Debug)]
pub struct SymmetryVerdict {
    pub operator: WeylOp,
    pub r: usize,
    pub p: usize,
    pub is_symmetry: bool,
    /// `Q'` with `Pʳ Q = Q' Pʳ`.
    pub witness: Option<WeylOp>,
    /// `Q ∈ D(A)Pʳ`.
    pub trivial: bool,
}

/// Symbol of `Δ₁` when `p = n`, of `□_p` otherwise.
pub fn wave_symbol(n: usize, p: usize) -> Poly {
    if p == n {
        weyl::laplacian_symbol(Frame::x(n))
    } else {
        weyl::box_symbol(n, p)
    }
}

/// Tests whether `q` is a symmetry of `Pʳ` (`P = Δ₁` for `p = n`, else `□_p`).
pub fn check_symmetry(q: &WeylOp, r: usize, p: usize) -> Result<SymmetryVerdict> {
    let frame = q.frame();
    let n = frame.n();
    if frame != Frame::x(n) {
        return Err(Error::WrongFrame {
            expected: "X".into(),
            found: frame.to_string(),
        });
    }
    if r == 0 || p > n {
        return Err(Error::InvalidParameter(format!("r = {r}, p = {p}")));
    }
    let sym = wave_symbol(n, p);
    let pr = WeylOp::from_symbol(&sym).pow(r as u32);
    let witness = (&pr * q).right_divide_by_symbol_power(&sym, r as u32);
    if let Some(w) = &witness {
        debug_assert!((&(&pr * q) - &(w * &pr)).is_zero());
    }
    Ok(SymmetryVerdict {
        operator: q.clone(),
        r,
        p,
        is_symmetry: witness.is_some(),
        witness,
        trivial: q.right_divide_by_symbol_power(&sym, r as u32).is_some(),
    })
}

/// `F∂_j − 2X_j(E₁ + d)` (1-based `j`).
pub fn q_generator(n: usize, j: usize, d: &Rational) -> WeylOp {
    let f = Frame::x(n);
    let first = &weyl::quadratic_form_op(f) * &WeylOp::d(f, j - 1).expect("index");
    let second = (&WeylOp::x(f, j - 1).expect("index") * &shifted_euler(n, d)).scale(&Scalar::from_int(2));
    &first - &second
}

/// `F̃_p ∂_j ∓ 2X_j(E₁ + d)`, minus for `j ≤ p`.
pub fn q_tilde(n: usize, p: usize, j: usize, d: &Rational) -> WeylOp {
    let f = Frame::x(n);
    let signed_form = (0..n).fold(WeylOp::zero(f), |acc, k| {
        let sq = WeylOp::x(f, k).expect("slot").pow(2);
        if k < p {
            &acc + &sq
        } else {
            &acc - &sq
        }
    });
    let first = &signed_form * &WeylOp::d(f, j - 1).expect("index");
    let second = (&WeylOp::x(f, j - 1).expect("index") * &shifted_euler(n, d)).scale(&Scalar::from_int(2));
    if j <= p {
        &first - &second
    } else {
        &first + &second
    }
}

/// Named generators of the symmetry algebra; `p = None` is the complex set.
pub fn symmetry_generators(n: usize, r: usize, p: Option<usize>) -> Vec<(String, WeylOp)> {
    let f = Frame::x(n);
    let d = weyl::d_param(n, r);
    let mut out = vec![("E1+d".to_string(), shifted_euler(n, &d))];
    for k in 1..=n {
        out.push((format!("d{k}"), WeylOp::d(f, k - 1).expect("index")));
    }
    for j in 1..=n {
        out.push(match p {
            None => (format!("Q[{j}]"), q_generator(n, j, &d)),
            Some(p) => (format!("Qt[{j}]"), q_tilde(n, p, j, &d)),
        });
    }
    for k in 1..=n {
        for l in k + 1..=n {
            let cross = matches!(p, Some(p) if k <= p && l > p);
            out.push(if cross {
                (format!("Dt[{k}][{l}]"), rotation_tilde(n, k, l))
            } else {
                (format!("D[{k}][{l}]"), rotation(n, k, l))
            });
        }
    }
    out
}

/// Every generator is a symmetry; the real set has rational coefficients;
/// in the complex case `F(P_j) = s_j Q_j`.
pub fn verify_generator_sets(n: usize, r: usize, p: Option<usize>) -> Result<Vec<Check>> {
    let sig = p.unwrap_or(n);
    let tag = match p {
        None => format!("n={n} r={r} complex"),
        Some(p) => format!("n={n} r={r} p={p} real"),
    };
    let gens = symmetry_generators(n, r, p);
    let mut sym = Vec::new();
    for (name, op) in &gens {
        let v = check_symmetry(op, r, sig)?;
        sym.push(Check::from_bool(name.clone(), v.is_symmetry, format!("{op}")));
    }
    let mut out = vec![all_of(format!("{tag}: generators are symmetries"), sym)];
    match p {
        Some(_) => {
            let bad = gens.iter().find(|(_, op)| op.terms().any(|(_, c)| !c.is_rational()));
            out.push(Check::from_bool(
                format!("{tag}: generators have rational coefficients"),
                bad.is_none(),
                bad.map(|(name, _)| name.clone()).unwrap_or_default(),
            ));
        }
        None => {
            let d = weyl::d_param(n, r);
            let signs = fourier_signs(Frame::x(n));
            let checks = (1..=n).map(|j| {
                let lhs = p_op(n, j, &d).fourier();
                let rhs = q_generator(n, j, &d).scale(&Scalar::from_int(signs[j - 1] as i64));
                Check::from_bool(format!("F(P[{j}])"), lhs == rhs, "")
            });
            out.push(all_of(format!("{tag}: F(P_j) = s_j Q_j"), checks));
        }
    }
    Ok(out)
}

/// `Q ∈ I(FʳD(A))`, i.e. `QFʳ ∈ FʳD(A)`.
pub fn preserves_ideal(q: &WeylOp, r: usize) -> bool {
    let f = poly::quadratic_form(q.frame());
    let qf = q * &WeylOp::from_poly(&f.pow(r as u32));
    qf.left_divide_by_poly_power(&f, r as u32).is_some()
}

/// Counts from the Fourier correspondence test.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub n: usize,
    pub r: usize,
    pub samples: usize,
    pub members: usize,
    pub non_members: usize,
    pub disagreements: Vec<String>,
}

impl CorrespondenceReport {
    pub fn check(&self) -> Check {
        let ok = self.disagreements.is_empty() && self.members > 0 && self.non_members > 0;
        Check::from_bool(
            format!("n={} r={}: Q in I(F^r D) <=> F(Q) in S(Lap^r)", self.n, self.r),
            ok,
            match self.disagreements.first() {
                Some(d) => d.clone(),
                None => format!("{} members, {} non-members", self.members, self.non_members),
            },
        )
    }
}

/// Compares `Q ∈ I(FʳD(A))` with `F(Q)` being a symmetry of `Δ₁ʳ` on a mix
/// of idealizer elements (products of operator generators, trivial
/// elements) and random operators of order at most `max_order`.
pub fn fourier_correspondence_check<R: Rng + ?Sized>(
    n: usize,
    r: usize,
    max_order: usize,
    samples: usize,
    rng: &mut R,
) -> Result<CorrespondenceReport> {
    let f = Frame::x(n);
    let gens = build_operator_presentation(n, r)?;
    let fr = WeylOp::from_poly(&poly::quadratic_form(f).pow(r as u32));
    let mut report = CorrespondenceReport {
        n,
        r,
        samples,
        members: 0,
        non_members: 0,
        disagreements: Vec::new(),
    };
    for i in 0..samples {
        let q = match i % 3 {
            0 => {
                let a = &gens.gens[rng.gen_range(0..gens.len())].op;
                let b = &gens.gens[rng.gen_range(0..gens.len())].op;
                &(a * b) + &a.scale(&sample::scalar(rng, true))
            }
            1 => &fr * &random_operator(rng, f, max_order),
            _ => random_operator(rng, f, max_order),
        };
        let left = preserves_ideal(&q, r);
        let right = check_symmetry(&q.fourier(), r, n)?.is_symmetry;
        if left != right {
            report.disagreements.push(format!("{q}: {left} vs {right}"));
        }
        if left {
            report.members += 1;
        } else {
            report.non_members += 1;
        }
    }
    Ok(report)
}

/// A random operator of order at most `max_order` with polynomial degree at most 2.
pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, frame: Frame, max_order: usize) -> WeylOp {
    (0..3).fold(WeylOp::zero(frame), |acc, _| {
        let coeff = sample::polynomial(rng, frame, 2, 2);
        let order = rng.gen_range(0..=max_order);
        let sym = sample::homogeneous(rng, frame, order, 1);
        &acc + &(&WeylOp::from_poly(&coeff) * &WeylOp::from_symbol(&sym))
    })
}

/// `F(Fʳ) = 2^{−r} Δ₁ʳ` on the X frame.
pub fn fourier_of_f_power(n: usize, r: usize) -> Check {
    let f = Frame::x(n);
    let lhs = WeylOp::from_poly(&poly::quadratic_form(f).pow(r as u32)).fourier();
    let scale = Rational::new(BigInt::from(1), BigInt::from(2).pow(r as u32));
    let rhs = weyl::laplacian(f).pow(r as u32).scale(&Scalar::from_rational(scale));
    Check::from_bool(format!("n={n} r={r}: F(F^r) = 2^-r Lap^r"), lhs == rhs, "")
}

/// Structure of `C[∂]/(Δ₁ʳ)` under the symmetry algebra, read through `F`.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantCoeffReport {
    pub n: usize,
    pub r: usize,
    pub case: ModuleCase,
    pub verdict: String,
    pub finite_factor_dim: Option<QuotientDim>,
    pub graded_dims: Vec<usize>,
    pub graded_dims_match: bool,
    pub fourier_of_f_power: bool,
}

/// Realizes `C[∂]/(Δ₁ʳ)` as the Fourier image of `R_r` and transfers the
/// socle and quotient structure of `R_r`.
pub fn module_action_on_constant_coeff(n: usize, r: usize, max_degree: usize) -> Result<ConstantCoeffReport> {
    let f = Frame::x(n);
    let sym = weyl::laplacian_symbol(f).pow(r as u32);
    let mut graded_dims = Vec::new();
    let mut graded_dims_match = true;
    for m in 0..=max_degree {
        let rows = f.monomials(m as u32);
        let multiples: Vec<Poly> = if m >= 2 * r {
            f.monomials((m - 2 * r) as u32)
                .into_iter()
                .map(|e| &sym * &Poly::monomial(f, e, Scalar::one()).expect("monomial"))
                .collect()
        } else {
            Vec::new()
        };
        let dim = rows.len() - coefficient_matrix(&multiples, &rows).rank();
        graded_dims_match &= dim == polyharmonic_dim(n, r, m);
        graded_dims.push(dim);
    }
    let case = module_case(n, r);
    let (verdict, finite_factor_dim) = match case {
        ModuleCase::Simple => ("simple".to_string(), None),
        ModuleCase::FiniteQuotient => (
            "unique proper factor, finite dimensional".to_string(),
            socle_report(n, r, max_degree.max(2 * (r + 2)))?.quotient_dim,
        ),
    };
    Ok(ConstantCoeffReport {
        n,
        r,
        case,
        verdict,
        finite_factor_dim,
        graded_dims,
        graded_dims_match,
        fourier_of_f_power: fourier_of_f_power(n, r).passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn basic_verdicts() {
        let f = Frame::x(3);
        let d2 = WeylOp::d(f, 1).unwrap();
        let v = check_symmetry(&d2, 2, 3).unwrap();
        assert!(v.is_symmetry && v.witness == Some(d2.clone()) && !v.trivial);
        let x1 = WeylOp::x(f, 0).unwrap();
        assert!(!check_symmetry(&x1, 1, 3).unwrap().is_symmetry);
        let triv = &x1 * &weyl::laplacian(f);
        let v = check_symmetry(&triv, 1, 3).unwrap();
        assert!(v.is_symmetry && v.trivial);
    }

    #[test]
    fn generator_sets() {
        for (n, r, p) in [(5, 2, None), (4, 1, Some(3)), (3, 1, None), (3, 1, Some(1))] {
            let checks = verify_generator_sets(n, r, p).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn correspondence() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let rep = fourier_correspondence_check(3, 1, 3, 12, &mut rng).unwrap();
        assert!(rep.check().passed, "{rep:?}");
        assert!(fourier_of_f_power(4, 2).passed);
    }

    #[test]
    fn constant_coefficient_module() {
        let rep = module_action_on_constant_coeff(4, 2, 6).unwrap();
        assert_eq!(rep.finite_factor_dim, Some(QuotientDim::Finite(1)));
        assert!(rep.graded_dims_match && rep.fourier_of_f_power);
        assert_eq!(module_action_on_constant_coeff(5, 1, 4).unwrap().verdict, "simple");
    }
}

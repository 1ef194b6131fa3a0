//! The Fourier pairing `⟨a, f⟩ = F(a)(f)(0)` and the dual module `M_r = ker Δ₁ʳ`.
//!
//! On U-type frames the pairing is diagonal on monomials with `⟨U^α, U^α⟩ = α!`.
//! On the X frame it is diagonal with `⟨X^α, X^α⟩ = α! Π (s_j/2)^{α_j}`, where
//! `s_j` are the Fourier signs. The checks below work in `κ`-blocks of the U
//! frame, where every relevant operator and the pairing are block diagonal.

use crate::error::{Error, Result};
use crate::gmodule::{
    block_of, mono, nullspace_polys, sparse, u_monomial_weight, weight_blocks, weight_space_dims, QuotientDim,
    ResidueElt,
};
use crate::harmonic;
use crate::liealg::{anti_involution, shifted_euler_u, v_op, BasisLabel, ChevalleySystem, LieElt};
use crate::linalg::{Matrix, SparseSpan};
use crate::poly::{self, Exps, Frame, FrameKind, Poly};
use crate::report::{all_of, Check};
use crate::sample;
use crate::scalars::{Rational, Scalar};
use crate::weyl::{self, fourier_signs, WeylOp};
use num_bigint::BigInt;
use rand::Rng;
use std::collections::BTreeMap;

fn same_frame(a: &Poly, f: &Poly) -> Result<()> {
    if a.frame() != f.frame() {
        return Err(Error::FrameMismatch {
            left: a.frame().to_string(),
            right: f.frame().to_string(),
        });
    }
    Ok(())
}

/// `⟨a, f⟩` straight from the definition: apply `F(a)` to `f`, take the constant term.
pub fn pair(a: &Poly, f: &Poly) -> Result<Scalar> {
    same_frame(a, f)?;
    Ok(WeylOp::from_poly(a).fourier().apply(f).constant_term())
}

/// `⟨x^e, x^e⟩` for a monomial of `frame`.
pub fn monomial_norm(frame: Frame, e: &[u16]) -> Scalar {
    let signs = fourier_signs(frame);
    let x_frame = frame.kind() == FrameKind::X;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (s, &k) in e.iter().enumerate() {
        for t in 1..=k as i64 {
            num *= t;
        }
        if x_frame {
            den *= BigInt::from(2).pow(k as u32);
            if signs[s] < 0 && k % 2 == 1 {
                num = -num;
            }
        }
    }
    Scalar::from_rational(Rational::new(num, den))
}

/// `⟨a, f⟩` by the diagonal closed form.
pub fn pair_diag(a: &Poly, f: &Poly) -> Result<Scalar> {
    same_frame(a, f)?;
    let frame = a.frame();
    let mut acc = Scalar::zero();
    for (e, c) in a.terms() {
        let g = f.coeff(e);
        if !g.is_zero() {
            acc += &(&(c * &g) * &monomial_norm(frame, e));
        }
    }
    Ok(acc)
}

/// The pairing on `A(m)` over the monomial basis.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub degree: usize,
    pub frame: Frame,
    pub basis: Vec<Exps>,
    pub matrix: Matrix,
}

pub fn pairing_matrix(frame: Frame, m: usize) -> PairingMatrix {
    let basis = frame.monomials(m as u32);
    let mut matrix = Matrix::zeros(basis.len(), basis.len());
    for (i, e) in basis.iter().enumerate() {
        matrix.set(i, i, monomial_norm(frame, e));
    }
    PairingMatrix {
        degree: m,
        frame,
        basis,
        matrix,
    }
}

/// `[⟨l_i, r_j⟩]`.
pub fn gram(left: &[Poly], right: &[Poly]) -> Result<Matrix> {
    let mut g = Matrix::zeros(left.len(), right.len());
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            g.set(i, j, pair_diag(l, r)?);
        }
    }
    Ok(g)
}

/// `{v ∈ span(monos) : ⟨l, v⟩ = 0 for all l ∈ span}`.
pub fn orthogonal_complement(frame: Frame, monos: &[Exps], span: &[Poly]) -> Vec<Poly> {
    let mut mat = Matrix::zeros(span.len(), monos.len());
    for (i, l) in span.iter().enumerate() {
        for (j, e) in monos.iter().enumerate() {
            let c = l.coeff(e);
            if !c.is_zero() {
                mat.set(i, j, &c * &monomial_norm(frame, e));
            }
        }
    }
    nullspace_polys(frame, monos, &mat)
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[Poly], b: &[Poly]) -> bool {
    let rank = |ps: &[&Poly]| {
        let mut sp: SparseSpan<Exps> = SparseSpan::new();
        for p in ps {
            sp.insert(&sparse(p));
        }
        sp.dim()
    };
    let ra = rank(&a.iter().collect::<Vec<_>>());
    let rb = rank(&b.iter().collect::<Vec<_>>());
    let both: Vec<&Poly> = a.iter().chain(b).collect();
    ra == rb && rank(&both) == ra
}

/// `ker Δ₁ʳ` on the block `A(m)^κ` of the U frame.
pub fn polyharmonic_block(frame: Frame, r: usize, m: usize, k: &[i64]) -> Vec<Poly> {
    let cols = block_of(frame, m as i64, k);
    let rows = block_of(frame, m as i64 - 2 * r as i64, k);
    let images: Vec<Poly> = cols
        .iter()
        .map(|e| (0..r).fold(mono(frame, e), |p, _| poly::laplacian(&p)))
        .collect();
    nullspace_polys(frame, &cols, &harmonic::coefficient_matrix(&images, &rows))
}

/// `FʳA ∩ A(m)^κ`.
fn ideal_block(frame: Frame, r: usize, m: usize, k: &[i64]) -> Vec<Poly> {
    let fr = poly::quadratic_form(frame).pow(r as u32);
    block_of(frame, m as i64 - 2 * r as i64, k)
        .iter()
        .map(|e| &fr * &mono(frame, e))
        .collect()
}

/// `M_r^⊥ = FʳA` and `(FʳA)^⊥ = M_r` in every block up to degree `max_degree`,
/// and the induced pairing `R_r(m) × M_r(m)` is nondegenerate.
pub fn orthogonal_check(n: usize, r: usize, max_degree: usize) -> Result<Vec<Check>> {
    let frame = Frame::new(FrameKind::U, n)?;
    let tag = format!("n={n} r={r} D={max_degree}");
    let mut perp = Vec::new();
    let mut nondeg = Vec::new();
    for m in 0..=max_degree {
        for (k, monos) in weight_blocks(frame, m) {
            let m_basis = polyharmonic_block(frame, r, m, &k);
            let i_basis = ideal_block(frame, r, m, &k);
            let name = format!("degree {m} block {k:?}");
            let ok = same_span(&orthogonal_complement(frame, &monos, &m_basis), &i_basis)
                && same_span(&orthogonal_complement(frame, &monos, &i_basis), &m_basis);
            perp.push(Check::from_bool(name.clone(), ok, ""));
            // M_r is a complement of FʳA, so its basis represents R_r(m).
            let full = gram(&m_basis, &m_basis)?.rank() == m_basis.len();
            nondeg.push(Check::from_bool(name, full, ""));
        }
    }
    Ok(vec![
        all_of(format!("{tag}: M_r and F^r A are mutual orthogonals"), perp),
        all_of(format!("{tag}: pairing R_r x M_r nondegenerate"), nondeg),
    ])
}

/// `τ(Y) = F(ψ̃(ϑ(Y)))`, the action on `M_r`.
pub fn tau(xs: &ChevalleySystem, label: &BasisLabel) -> WeylOp {
    let unit: LieElt = [(label.clone(), Scalar::one())].into_iter().collect();
    xs.realize(&anti_involution(&unit)).fourier()
}

/// `Q_b = F̃ ∂_{U_b} − U_{-b} I(d)` on the U frame.
pub fn q_op(n: usize, b: i32, d: &Rational) -> Result<WeylOp> {
    let f = Frame::u(n);
    let ft = weyl::quadratic_form_op(f);
    let first = &ft * &WeylOp::du(f, b)?;
    let second = &WeylOp::u(f, -b)? * &shifted_euler_u(n, d);
    Ok(&first - &second)
}

/// `F(V_b) = Q_b`, `F(U_b) = ∂_{U_b}`, and `τ` preserves brackets of basis elements.
pub fn tau_formula_check(n: usize, r: usize) -> Result<Vec<Check>> {
    let frame = Frame::new(FrameKind::U, n)?;
    let d = weyl::d_param(n, r);
    let mut transforms = Vec::new();
    for b in frame.labels() {
        let fv = v_op(n, b, &d)?.fourier();
        transforms.push(Check::from_bool(
            format!("F(V[{b}]) = Q[{b}]"),
            fv == q_op(n, b, &d)?,
            "",
        ));
        let fu = WeylOp::u(frame, b)?.fourier();
        transforms.push(Check::from_bool(
            format!("F(U[{b}]) = dU[{b}]"),
            fu == WeylOp::du(frame, b)?,
            "",
        ));
    }
    let xs = ChevalleySystem::operator(n, r)?;
    let labels = xs.labels().to_vec();
    let images: BTreeMap<&BasisLabel, WeylOp> = labels.iter().map(|l| (l, tau(&xs, l))).collect();
    let mut hom = Vec::new();
    for a in &labels {
        for b in &labels {
            if a >= b {
                continue;
            }
            let br = xs.get(a).expect("label").bracket(xs.get(b).expect("label"));
            let coords = xs
                .expand(&br)
                .ok_or_else(|| Error::NotInSubspace(format!("[{a}, {b}]")))?;
            let lhs = coords
                .iter()
                .fold(WeylOp::zero(frame), |acc, (l, c)| &acc + &images[l].scale(c));
            let rhs = images[a].bracket(&images[b]);
            hom.push(Check::from_bool(format!("tau[{a}, {b}]"), lhs == rhs, ""));
        }
    }
    let tag = format!("n={n} r={r}");
    Ok(vec![
        all_of(format!("{tag}: Fourier transforms of V_b and U_b"), transforms),
        all_of(format!("{tag}: tau is a homomorphism"), hom),
    ])
}

/// `⟨Y·p, g⟩ = ⟨p, F(ψ̃(Y)) g⟩` for every Chevalley basis element `Y` on
/// random `p ∈ R_r`, `g ∈ M_r`, and `F(ψ̃(Y)) g ∈ M_r`.
pub fn g_invariance_check<R: Rng + ?Sized>(
    n: usize,
    r: usize,
    max_degree: usize,
    samples: usize,
    rng: &mut R,
) -> Result<Check> {
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let m_bases: Vec<Vec<Poly>> = (0..=max_degree)
        .map(|m| harmonic::polyharmonic_basis_dense(frame, r, m))
        .collect();
    let tag = format!("n={n} r={r} D={max_degree}");
    let mut checks = Vec::new();
    for label in xs.labels() {
        let x = xs.get(label).expect("label");
        let fx = x.fourier();
        for _ in 0..samples {
            let p = sample::polynomial(rng, frame, max_degree, 3);
            let m = rng.gen_range(0..=max_degree);
            let g = sample::combination(rng, frame, &m_bases[m]);
            let yp = ResidueElt::reduce(&x.apply(&p), r)?.representative();
            let fg = fx.apply(&g);
            let lhs = pair_diag(&yp, &g)?;
            let rhs = pair_diag(&p, &fg)?;
            let in_m = (0..r).fold(fg.clone(), |q, _| poly::laplacian(&q)).is_zero();
            checks.push(Check::from_bool(
                format!("{label}"),
                lhs == rhs && in_m,
                format!("p = {p}, g = {g}"),
            ));
        }
    }
    Ok(all_of(format!("{tag}: pairing is g-invariant"), checks))
}

/// Dimension of `M_r^ν` under `τ` against `R_r^ν`, per weight.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DualityDimEntry {
    pub degree: usize,
    pub eps_coords: Vec<String>,
    pub dim_r: usize,
    pub dim_m: usize,
}

/// Compares weight multiplicities of `R_r` and of `M_r` with the `τ`-action.
/// The `M_r` weights are read off `τ(h_j)` acting on a block basis.
pub fn duality_dims_check(n: usize, r: usize, max_degree: usize) -> Result<(Check, Vec<DualityDimEntry>)> {
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let d = weyl::d_param(n, r);
    let cartans: Vec<WeylOp> = (1..=xs.roots.ell).map(|j| tau(&xs, &BasisLabel::Cartan(j))).collect();
    let mut dims_m: BTreeMap<(usize, Vec<String>), usize> = BTreeMap::new();
    let mut eigen_ok = true;
    for m in 0..=max_degree {
        for (k, monos) in weight_blocks(frame, m) {
            let basis = polyharmonic_block(frame, r, m, &k);
            if basis.is_empty() {
                continue;
            }
            let w = u_monomial_weight(frame, &d, &monos[0]);
            for g in &basis {
                for (h, c) in cartans.iter().zip(&w.0) {
                    eigen_ok &= h.apply(g) == g.scale(&Scalar::from_rational(c.clone()));
                }
            }
            *dims_m.entry((m, w.coord_strings())).or_default() += basis.len();
        }
    }
    let r_report = weight_space_dims(n, r, max_degree)?;
    let dims_r: BTreeMap<(usize, Vec<String>), usize> = r_report
        .weights
        .iter()
        .map(|w| ((w.degree, w.eps_coords.clone()), w.dim))
        .collect();
    let keys: std::collections::BTreeSet<_> = dims_m.keys().chain(dims_r.keys()).cloned().collect();
    let entries: Vec<DualityDimEntry> = keys
        .into_iter()
        .map(|key| DualityDimEntry {
            dim_r: dims_r.get(&key).copied().unwrap_or(0),
            dim_m: dims_m.get(&key).copied().unwrap_or(0),
            degree: key.0,
            eps_coords: key.1,
        })
        .collect();
    let mismatch = entries.iter().find(|e| e.dim_r != e.dim_m);
    let ok = eigen_ok && mismatch.is_none();
    let detail = match mismatch {
        Some(e) => format!(
            "weight {:?} in degree {}: {} vs {}",
            e.eps_coords, e.degree, e.dim_r, e.dim_m
        ),
        None if !eigen_ok => "tau(h) is not diagonal on the block basis".into(),
        None => format!("{} weights", entries.len()),
    };
    Ok((
        Check::from_bool(
            format!("n={n} r={r} D={max_degree}: dim R_r^nu = dim M_r^nu"),
            ok,
            detail,
        ),
        entries,
    ))
}

/// Dimension of the `τ`-submodule of `M_r` generated by `1`, or
/// `InfiniteAtBound` if it reaches past `max_degree`.
pub fn dual_finite_submodule_dim(n: usize, r: usize, max_degree: usize) -> Result<QuotientDim> {
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let ops: Vec<WeylOp> = xs.labels().iter().map(|l| tau(&xs, l)).collect();
    let mut span: SparseSpan<Exps> = SparseSpan::new();
    let mut queue = vec![Poly::one(frame)];
    span.insert(&sparse(&queue[0]));
    while let Some(g) = queue.pop() {
        for op in &ops {
            let img = op.apply(&g);
            if img.is_zero() {
                continue;
            }
            if img.degree().unwrap_or(0) as usize > max_degree {
                return Ok(QuotientDim::InfiniteAtBound);
            }
            if span.insert(&sparse(&img)) {
                queue.push(img);
            }
        }
    }
    Ok(QuotientDim::Finite(span.dim()))
}

/// `L^⊥⊥ = L` for `L` spanned by the given homogeneous polynomials of degree `m`.
pub fn double_orthogonal(frame: Frame, m: usize, span: &[Poly]) -> bool {
    let monos = frame.monomials(m as u32);
    let perp = orthogonal_complement(frame, &monos, span);
    let perp2 = orthogonal_complement(frame, &monos, &perp);
    same_span(span, &perp2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn x1_pairs_to_half() {
        let f = Frame::x(4);
        let x1 = Poly::var(f, 0).unwrap();
        assert_eq!(pair(&x1, &x1).unwrap(), Scalar::frac(1, 2));
        assert_eq!(pair_diag(&x1, &x1).unwrap(), Scalar::frac(1, 2));
    }

    #[test]
    fn diagonal_form_matches_definition() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for frame in [Frame::x(3), Frame::x(4), Frame::u(5), Frame::u(4)] {
            for m in 0..=3 {
                let a = sample::homogeneous(&mut rng, frame, m, 4);
                let b = sample::homogeneous(&mut rng, frame, m, 4);
                assert_eq!(pair(&a, &b).unwrap(), pair_diag(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        for (n, r) in [(3, 1), (4, 2)] {
            let checks = orthogonal_check(n, r, 5).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn tau_formulas() {
        let checks = tau_formula_check(4, 2).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn invariance_and_dims() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        assert!(g_invariance_check(4, 2, 3, 1, &mut rng).unwrap().passed);
        let (c, _) = duality_dims_check(5, 2, 4).unwrap();
        assert!(c.passed, "{c:?}");
        assert_eq!(dual_finite_submodule_dim(4, 2, 6).unwrap(), QuotientDim::Finite(1));
        assert_eq!(dual_finite_submodule_dim(4, 3, 8).unwrap(), QuotientDim::Finite(6));
    }
}

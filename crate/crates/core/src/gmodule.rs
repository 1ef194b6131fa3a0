//! The module `R_r = A/FʳA`: harmonic normal form of residues, weight
//! spaces, highest weight, socle and finite quotient, a bounded simplicity
//! certificate, and the adjoint action on `D(R_r, R_{r−1})`.

use crate::error::{Error, Result};
use crate::harmonic::{self, decompose_graded};
use crate::liealg::{ChevalleySystem, Root, Weight};
use crate::linalg::{Matrix, SparseSpan, SparseVec};
use crate::poly::{self, Exps, Frame, FrameKind, Poly};
use crate::report::{all_of, Check};
use crate::scalars::{Rational, Scalar};
use crate::weyl::{self, p_op, rotation, shifted_euler, WeylOp};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// An element of `R_r` stored as `Σ_{k<r} p_k Fᵏ` with every `p_k` harmonic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueElt {
    pub r: usize,
    pub frame: Frame,
    pub components: BTreeMap<usize, Poly>,
}

impl ResidueElt {
    /// The class of `p` modulo `Fʳ`.
    pub fn reduce(p: &Poly, r: usize) -> Result<ResidueElt> {
        let frame = p.frame();
        let mut components: BTreeMap<usize, Poly> = BTreeMap::new();
        for dec in decompose_graded(p)?.into_values() {
            for (k, pk) in dec.components.into_iter().filter(|(k, _)| *k < r) {
                let slot = components.entry(k).or_insert_with(|| Poly::zero(frame));
                *slot = &*slot + &pk;
            }
        }
        components.retain(|_, p| !p.is_zero());
        Ok(ResidueElt { r, frame, components })
    }

    pub fn one(frame: Frame, r: usize) -> ResidueElt {
        ResidueElt::reduce(&Poly::one(frame), r).expect("constant")
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// The canonical representative `Σ p_k Fᵏ`.
    pub fn representative(&self) -> Poly {
        let f = poly::quadratic_form(self.frame);
        self.components
            .iter()
            .fold(Poly::zero(self.frame), |acc, (&k, p)| &acc + &(p * &f.pow(k as u32)))
    }
}

/// The action of an operator preserving `FʳA` on a residue.
pub fn act(op: &WeylOp, x: &ResidueElt) -> Result<ResidueElt> {
    if op.frame() != x.frame {
        return Err(Error::FrameMismatch {
            left: op.frame().to_string(),
            right: x.frame.to_string(),
        });
    }
    ResidueElt::reduce(&op.apply(&x.representative()), x.r)
}

/// Weight of a U-frame monomial: `(−(deg + d), α_{U_2} − α_{U_-2}, …)`.
pub fn u_monomial_weight(frame: Frame, d: &Rational, e: &[u16]) -> Weight {
    let deg = poly::total_degree(e) as i64;
    let mut coords = vec![-(Rational::from_integer(BigInt::from(deg)) + d)];
    coords.extend(kappa(frame, e).into_iter().map(|c| Rational::from_integer(c.into())));
    Weight(coords)
}

/// The `h_2..h_ℓ` eigenvalues of a U-frame monomial.
pub fn kappa(frame: Frame, e: &[u16]) -> Vec<i64> {
    (2..=frame.ell() as i32)
        .map(|j| {
            let p = frame.u_slot(j).expect("label");
            let m = frame.u_slot(-j).expect("label");
            e[p] as i64 - e[m] as i64
        })
        .collect()
}

/// Monomials of `A(m)` on the U frame grouped by `κ`.
pub fn weight_blocks(frame: Frame, m: usize) -> BTreeMap<Vec<i64>, Vec<Exps>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Exps>> = BTreeMap::new();
    for e in frame.monomials(m as u32) {
        out.entry(kappa(frame, &e)).or_default().push(e);
    }
    out
}

pub(crate) fn block_of(frame: Frame, m: i64, k: &[i64]) -> Vec<Exps> {
    if m < 0 {
        return Vec::new();
    }
    weight_blocks(frame, m as usize).remove(k).unwrap_or_default()
}

pub(crate) fn sparse(p: &Poly) -> SparseVec<Exps> {
    p.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
}

pub(crate) fn mono(frame: Frame, e: &Exps) -> Poly {
    Poly::monomial(frame, e.clone(), Scalar::one()).expect("live monomial")
}

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WeightEntry {
    pub degree: usize,
    pub eps_coords: Vec<String>,
    pub dim: usize,
}

/// Weight-space dimensions of `R_r` in degrees `0..=degree`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WeightSpaceReport {
    pub n: usize,
    pub r: usize,
    pub degree: usize,
    pub weights: Vec<WeightEntry>,
}

impl WeightSpaceReport {
    pub fn total_in_degree(&self, m: usize) -> usize {
        self.weights.iter().filter(|w| w.degree == m).map(|w| w.dim).sum()
    }
}

/// `dim R_r(m)^ν = |A(m)^ν| − rank(Fʳ·A(m−2r)^ν)` per weight.
pub fn weight_space_dims(n: usize, r: usize, max_degree: usize) -> Result<WeightSpaceReport> {
    let frame = Frame::new(FrameKind::U, n)?;
    let d = weyl::d_param(n, r);
    let fr = poly::quadratic_form(frame).pow(r as u32);
    let mut weights = Vec::new();
    for m in 0..=max_degree {
        for (k, monos) in weight_blocks(frame, m) {
            let mut sp: SparseSpan<Exps> = SparseSpan::new();
            for e in block_of(frame, m as i64 - 2 * r as i64, &k) {
                sp.insert(&sparse(&(&fr * &mono(frame, &e))));
            }
            let dim = monos.len() - sp.dim();
            if dim == 0 {
                continue;
            }
            let w = u_monomial_weight(frame, &d, &monos[0]);
            weights.push(WeightEntry {
                degree: m,
                eps_coords: w.coord_strings(),
                dim,
            });
        }
    }
    Ok(WeightSpaceReport {
        n,
        r,
        degree: max_degree,
        weights,
    })
}

/// Checks that `1` is killed by `n⁺` and has weight `−dϖ₁`.
pub fn verify_highest_weight(n: usize, r: usize) -> Result<(Weight, bool)> {
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let one = ResidueElt::one(frame, r);
    let killed = xs
        .roots
        .positive_roots()
        .iter()
        .map(|a| act(xs.root_vector(a), &one))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(ResidueElt::is_zero);
    let mut coords = Vec::new();
    let mut eigen = true;
    for j in 1..=xs.roots.ell {
        let image = act(xs.cartan(j), &one)?.representative();
        let c = image.constant_term();
        eigen &= image == Poly::constant(frame, c.clone());
        coords.push(c.as_rational().cloned().unwrap_or_else(Rational::zero));
    }
    let lambda = Weight(coords);
    let d = weyl::d_param(n, r);
    let expected = Weight::eps(xs.roots.ell, 1, -d);
    Ok((lambda.clone(), killed && eigen && lambda == expected))
}

/// Which case of the structure theorem the parameters fall in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleCase {
    /// `n` odd, or `n` even with `r < n/2`: `R_r` is simple.
    Simple,
    /// `n` even and `r ≥ n/2`: simple socle with a finite-dimensional quotient.
    FiniteQuotient,
}

pub fn module_case(n: usize, r: usize) -> ModuleCase {
    if n.is_multiple_of(2) && 2 * r >= n {
        ModuleCase::FiniteQuotient
    } else {
        ModuleCase::Simple
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum QuotientDim {
    Finite(usize),
    InfiniteAtBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleReport {
    pub n: usize,
    pub r: usize,
    pub case: ModuleCase,
    pub degree_bound: usize,
    pub socle_degree: Option<usize>,
    pub socle_hw: Option<Vec<String>>,
    pub quotient_dims: Vec<usize>,
    pub quotient_dim: Option<QuotientDim>,
    pub expected_quotient_dim: Option<usize>,
    pub hw_vector_killed: bool,
    pub hw_vector_weight_ok: bool,
}

impl SocleReport {
    pub fn checks(&self) -> Vec<Check> {
        let tag = format!("n={} r={}", self.n, self.r);
        if self.case == ModuleCase::Simple {
            return vec![Check::pass(format!("{tag}: module simple per case (1)"))];
        }
        let dim_ok = matches!(
            (&self.quotient_dim, self.expected_quotient_dim),
            (Some(QuotientDim::Finite(a)), Some(b)) if *a == b
        );
        vec![
            Check::from_bool(
                format!("{tag}: socle quotient dim"),
                dim_ok,
                format!("{:?} vs expected {:?}", self.quotient_dim, self.expected_quotient_dim),
            ),
            Check::from_bool(format!("{tag}: xi^(1-d) killed by n+"), self.hw_vector_killed, ""),
            Check::from_bool(format!("{tag}: xi^(1-d) has weight mu"), self.hw_vector_weight_ok, ""),
        ]
    }
}

/// Basis of `H(m)^κ` on the U frame (rational coefficients).
fn harmonic_block(frame: Frame, m: usize, k: &[i64]) -> Vec<Poly> {
    let cols = block_of(frame, m as i64, k);
    let rows = block_of(frame, m as i64 - 2, k);
    let images: Vec<Poly> = cols.iter().map(|e| poly::laplacian(&mono(frame, e))).collect();
    let mat = harmonic::coefficient_matrix(&images, &rows);
    nullspace_polys(frame, &cols, &mat)
}

pub(crate) fn nullspace_polys(frame: Frame, cols: &[Exps], mat: &Matrix) -> Vec<Poly> {
    mat.nullspace()
        .into_iter()
        .map(|v| {
            let terms = cols.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
            Poly::from_map(frame, terms)
        })
        .collect()
}

/// All `κ` vectors occurring in degree `m`.
fn kappas(frame: Frame, m: usize) -> Vec<Vec<i64>> {
    weight_blocks(frame, m).into_keys().collect()
}

/// The socle (ideal generated by `H(1−d)`) and the finite quotient in case (2).
pub fn socle_report(n: usize, r: usize, degree_bound: usize) -> Result<SocleReport> {
    let case = module_case(n, r);
    let mut report = SocleReport {
        n,
        r,
        case,
        degree_bound,
        socle_degree: None,
        socle_hw: None,
        quotient_dims: Vec::new(),
        quotient_dim: None,
        expected_quotient_dim: None,
        hw_vector_killed: false,
        hw_vector_weight_ok: false,
    };
    if case == ModuleCase::Simple {
        return Ok(report);
    }
    let frame = Frame::new(FrameKind::U, n)?;
    let m0 = 1 + r - n / 2;
    let ell = frame.ell();
    report.socle_degree = Some(m0);
    report.expected_quotient_dim = Some(harmonic::harmonic_dim(n + 2, r - n / 2));
    let fr = poly::quadratic_form(frame).pow(r as u32);
    let h_blocks: BTreeMap<Vec<i64>, Vec<Poly>> = kappas(frame, m0)
        .into_iter()
        .map(|k| {
            let b = harmonic_block(frame, m0, &k);
            (k, b)
        })
        .collect();
    let mut stabilized = false;
    for deg in 0..=degree_bound {
        let mut qdim = 0;
        for (k, monos) in weight_blocks(frame, deg) {
            let mut sp: SparseSpan<Exps> = SparseSpan::new();
            for e in block_of(frame, deg as i64 - 2 * r as i64, &k) {
                sp.insert(&sparse(&(&fr * &mono(frame, &e))));
            }
            if deg >= m0 {
                for (k1, hs) in &h_blocks {
                    let k2: Vec<i64> = k.iter().zip(k1).map(|(a, b)| a - b).collect();
                    for e in block_of(frame, (deg - m0) as i64, &k2) {
                        let u = mono(frame, &e);
                        for h in hs {
                            sp.insert(&sparse(&(h * &u)));
                        }
                    }
                }
            }
            qdim += monos.len() - sp.dim();
        }
        report.quotient_dims.push(qdim);
        if qdim == 0 {
            stabilized = true;
            break;
        }
    }
    report.quotient_dim = Some(if stabilized {
        QuotientDim::Finite(report.quotient_dims.iter().sum())
    } else {
        QuotientDim::InfiniteAtBound
    });
    // ξ^{m0} with ξ = U_2.
    let xs = ChevalleySystem::operator(n, r)?;
    let xi = Poly::u_var(frame, 2)?.pow(m0 as u32);
    let res = ResidueElt::reduce(&xi, r)?;
    let mut killed = !res.is_zero();
    for a in xs.roots.positive_roots() {
        killed &= act(xs.root_vector(&a), &res)?.is_zero();
    }
    report.hw_vector_killed = killed;
    let d = weyl::d_param(n, r);
    let mut mu = Weight::zero(ell);
    mu.0[0] = rat(-1);
    mu.0[1] = rat(1) - &d;
    let mut eig_ok = true;
    for j in 1..=ell {
        let img = xs.cartan(j).apply(&xi);
        eig_ok &= img == xi.scale(&Scalar::from_rational(mu.0[j - 1].clone()));
    }
    let (xi_exps, _) = xi.terms().next().expect("monomial");
    report.hw_vector_weight_ok = eig_ok && u_monomial_weight(frame, &d, xi_exps) == mu;
    report.socle_hw = Some(mu.coord_strings());
    Ok(report)
}

/// Per-degree dimension of `{v ∈ R_r(m) : r⁺ v = 0}`.
#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub n: usize,
    pub r: usize,
    pub case: ModuleCase,
    pub degree_bound: usize,
    /// `kernel_dims[m]` for `m = 0..=D`.
    pub kernel_dims: Vec<usize>,
    pub socle_degree: Option<usize>,
    pub passed: bool,
}

/// Bounded simplicity certificate.
///
/// A nonzero submodule of `R_r` is graded, and a lowest-degree vector in it
/// is killed by the degree-lowering part `r⁺ = span{P_j}`. So the lowering
/// chain from every vector of degree `1..=D` reaches `1` exactly when no
/// nonzero vector of those degrees is killed by all of `r⁺`. In case (2)
/// the check instead requires the kernel to be `H(1−d)`, the socle's
/// lowest piece, and zero in every other positive degree.
pub fn saturation_simplicity_check(n: usize, r: usize, degree_bound: usize) -> Result<SaturationReport> {
    let xs = ChevalleySystem::operator(n, r)?;
    let frame = xs.frame();
    let case = module_case(n, r);
    let fr = poly::quadratic_form(frame).pow(r as u32);
    let raising: Vec<Root> = xs.roots.positive_roots().into_iter().filter(|a| a.0[0] == 1).collect();
    let mut kernel_dims = Vec::new();
    for m in 0..=degree_bound {
        let mut total = 0;
        for (k, monos) in weight_blocks(frame, m) {
            let mut sp: SparseSpan<(usize, Exps)> = SparseSpan::new();
            for (ai, a) in raising.iter().enumerate() {
                let tk: Vec<i64> = k.iter().zip(&a.0[1..]).map(|(x, &y)| x + y as i64).collect();
                for e in block_of(frame, m as i64 - 1 - 2 * r as i64, &tk) {
                    let v = &fr * &mono(frame, &e);
                    sp.insert(&v.terms().map(|(e, c)| ((ai, e.clone()), c.clone())).collect());
                }
            }
            let base = sp.dim();
            for e in &monos {
                let u = mono(frame, e);
                let mut v: SparseVec<(usize, Exps)> = BTreeMap::new();
                for (ai, a) in raising.iter().enumerate() {
                    for (ie, c) in xs.root_vector(a).apply(&u).terms() {
                        v.insert((ai, ie.clone()), c.clone());
                    }
                }
                sp.insert(&v);
            }
            let rank = sp.dim() - base;
            let trivial = block_of(frame, m as i64 - 2 * r as i64, &k).len();
            total += monos.len() - rank - trivial;
        }
        kernel_dims.push(total);
    }
    let socle_degree = (case == ModuleCase::FiniteQuotient).then(|| 1 + r - n / 2);
    let passed = kernel_dims
        .iter()
        .enumerate()
        .skip(1)
        .all(|(m, &k)| match socle_degree {
            Some(m0) if m == m0 => k == harmonic::harmonic_dim(n, m0),
            _ => k == 0,
        })
        && kernel_dims.first() == Some(&1);
    Ok(SaturationReport {
        n,
        r,
        case,
        degree_bound,
        kernel_dims,
        socle_degree,
        passed,
    })
}

/// The three operators `θ : R_r → R_{r−1}` of the adjoint-action table.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Theta {
    Laplacian,
    Partial(usize),
    Identity,
}

impl Theta {
    fn op(&self, n: usize) -> WeylOp {
        let f = Frame::x(n);
        match self {
            Theta::Laplacian => weyl::laplacian(f),
            Theta::Partial(i) => WeylOp::d(f, i - 1).expect("index"),
            Theta::Identity => WeylOp::one(f),
        }
    }

    fn name(&self) -> String {
        match self {
            Theta::Laplacian => "Lap".into(),
            Theta::Partial(i) => format!("D{i}"),
            Theta::Identity => "1".into(),
        }
    }
}

/// A generator `x` of the operator presentation, realized for `R_r` and `R_{r−1}`.
struct Pair {
    name: String,
    left: WeylOp,
    right: WeylOp,
}

fn adjoint_pairs(n: usize, r: usize) -> Vec<Pair> {
    let f = Frame::x(n);
    let d = weyl::d_param(n, r);
    let d1 = &d + rat(1);
    let mut out = Vec::new();
    for j in 1..=n {
        out.push(Pair {
            name: format!("P[{j}]"),
            left: p_op(n, j, &d1),
            right: p_op(n, j, &d),
        });
        let x = WeylOp::x(f, j - 1).expect("index");
        out.push(Pair {
            name: format!("X{j}"),
            left: x.clone(),
            right: x,
        });
    }
    out.push(Pair {
        name: "E1+d".into(),
        left: shifted_euler(n, &d1),
        right: shifted_euler(n, &d),
    });
    for a in 1..=n {
        for b in a + 1..=n {
            let rot = rotation(n, a, b);
            out.push(Pair {
                name: format!("D[{a}][{b}]"),
                left: rot.clone(),
                right: rot,
            });
        }
    }
    out
}

/// The expected value of `ψ̃(x)(θ)` from the table, as an operator.
fn expected_adjoint(n: usize, x: &str, theta: &Theta) -> WeylOp {
    let f = Frame::x(n);
    let zero = WeylOp::zero(f);
    let lap = weyl::laplacian(f);
    let dx = |i: usize| WeylOp::d(f, i - 1).expect("index");
    let idx = |s: &str| -> Vec<usize> {
        s.split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().expect("digits"))
            .collect()
    };
    match (x, theta) {
        ("E1+d", Theta::Laplacian) => -&lap,
        // [X_k, Δ₁] = −∂_k, so this entry is not zero.
        (x, Theta::Laplacian) if x.starts_with('X') => -&dx(idx(x)[0]),
        (_, Theta::Laplacian) => zero,
        (x, Theta::Partial(i)) if x.starts_with("P[") => {
            if idx(x)[0] == *i {
                -&lap
            } else {
                zero
            }
        }
        (x, Theta::Partial(i)) if x.starts_with('X') => {
            if idx(x)[0] == *i {
                WeylOp::scalar(f, Scalar::from_int(-1))
            } else {
                zero
            }
        }
        (x, Theta::Partial(i)) if x.starts_with("D[") => {
            let ab = idx(x);
            let (a, b) = (ab[0], ab[1]);
            let mut out = zero;
            if a == *i {
                out = &out - &dx(b);
            }
            if b == *i {
                out = &out + &dx(a);
            }
            out
        }
        (_, Theta::Partial(_)) => zero,
        (x, Theta::Identity) if x.starts_with("P[") => -&dx(idx(x)[0]),
        ("E1+d", Theta::Identity) => WeylOp::one(f),
        (_, Theta::Identity) => zero,
    }
}

/// Verifies the adjoint-action table `ψ̃(x)(θ) = ψ_{r−1}(x)θ − θψ_r(x)` on
/// all monomials of degree `≤ max_degree`, modulo `F^{r−1}`, and that each
/// `θ` maps `FʳA` into `F^{r−1}A`.
pub fn intertwiner_adjoint_table(n: usize, r: usize, max_degree: usize) -> Result<Vec<Check>> {
    if r < 2 {
        return Err(Error::InvalidParameter("the adjoint table needs r >= 2".into()));
    }
    let f = Frame::new(FrameKind::X, n)?;
    let big_f = poly::quadratic_form(f);
    let fr = big_f.pow(r as u32);
    let fr1 = big_f.pow(r as u32 - 1);
    let thetas: Vec<Theta> = std::iter::once(Theta::Laplacian)
        .chain((1..=n).map(Theta::Partial))
        .chain(std::iter::once(Theta::Identity))
        .collect();
    let monos: Vec<Poly> = (0..=max_degree)
        .flat_map(|m| f.monomials(m as u32))
        .map(|e| mono(f, &e))
        .collect();
    let tag = format!("n={n} r={r}");
    let mut table = Vec::new();
    for pair in adjoint_pairs(n, r) {
        for theta in &thetas {
            let t = theta.op(n);
            let adj = &(&pair.left * &t) - &(&t * &pair.right);
            let diff = &adj - &expected_adjoint(n, &pair.name, theta);
            let mut ok = true;
            let mut detail = String::new();
            for u in &monos {
                let v = diff.apply(u);
                if !ResidueElt::reduce(&v, r - 1)?.is_zero() {
                    ok = false;
                    detail = format!("fails on {u}");
                    break;
                }
            }
            table.push(Check::from_bool(
                format!("psi({})({})", pair.name, theta.name()),
                ok,
                detail,
            ));
        }
    }
    let mut well_defined = Vec::new();
    for theta in &thetas {
        let t = theta.op(n);
        let bad = monos.iter().find(|u| {
            let image = t.apply(&(&fr * *u));
            !image.is_zero() && image.div_exact(&fr1).is_none()
        });
        well_defined.push(match bad {
            None => Check::pass(format!("{} well defined", theta.name())),
            Some(u) => Check::fail(format!("{} well defined", theta.name()), format!("F^r*{u}")),
        });
    }
    Ok(vec![
        all_of(format!("{tag}: adjoint action table"), table),
        all_of(format!("{tag}: Lap, D_j, 1 induce maps R_r -> R_(r-1)"), well_defined),
    ])
}

/// Checks that `R_r → R_s` and `Δ₁^{r−s}` descend: both send `FʳA` into `F^sA`.
pub fn descent_check(n: usize, r: usize, s: usize, samples: &[Poly]) -> Result<Check> {
    if s > r {
        return Err(Error::InvalidParameter(format!("s = {s} > r = {r}")));
    }
    let f = poly::quadratic_form(Frame::new(FrameKind::X, n)?);
    let fr = f.pow(r as u32);
    let fs = f.pow(s as u32);
    for q in samples {
        let v = &fr * q;
        let mut w = v.clone();
        for _ in 0..(r - s) {
            w = poly::laplacian(&w);
        }
        let ok = v.div_exact(&fs).is_some() && (w.is_zero() || w.div_exact(&fs).is_some());
        if !ok {
            return Ok(Check::fail(format!("descent r={r} s={s}"), format!("input {q}")));
        }
    }
    Ok(Check::pass(format!("descent n={n} r={r} s={s}")).with_detail(format!("{} cases", samples.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highest_weights() {
        let (l, ok) = verify_highest_weight(5, 2).unwrap();
        assert!(ok);
        assert_eq!(l.0[0], Rational::new((-1).into(), 2.into()));
        let (l, ok) = verify_highest_weight(6, 1).unwrap();
        assert!(ok);
        assert_eq!(l.0[0], rat(-2));
        assert!(verify_highest_weight(4, 2).unwrap().1);
    }

    #[test]
    fn socle_dims() {
        for (n, r, q) in [(4, 2, 1), (4, 3, 6), (6, 3, 1)] {
            let rep = socle_report(n, r, 2 * (r + 2)).unwrap();
            assert_eq!(rep.quotient_dim, Some(QuotientDim::Finite(q)), "{rep:?}");
            assert!(rep.hw_vector_killed && rep.hw_vector_weight_ok, "{rep:?}");
        }
    }

    #[test]
    fn saturation() {
        assert!(saturation_simplicity_check(5, 1, 4).unwrap().passed);
        let rep = saturation_simplicity_check(4, 2, 4).unwrap();
        assert!(rep.passed, "{rep:?}");
    }

    #[test]
    fn weight_totals() {
        let rep = weight_space_dims(4, 2, 5).unwrap();
        for m in 0..=5 {
            assert_eq!(rep.total_in_degree(m), harmonic::polyharmonic_dim(4, 2, m));
        }
    }

    #[test]
    fn adjoint_table_small() {
        let checks = intertwiner_adjoint_table(3, 2, 3).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:#?}");
    }
}

//! Invariants of the harmonic decomposition, residue modules, pairing and symmetries.

use hsym_core::duality::{double_orthogonal, pair, pair_diag};
use hsym_core::gmodule::{act, ResidueElt};
use hsym_core::harmonic::{decompose, gamma, harmonic_basis};
use hsym_core::liealg::{e_op, ChevalleySystem};
use hsym_core::poly::{self, Frame, FrameKind};
use hsym_core::symmetry::{check_symmetry, random_operator, symmetry_generators};
use hsym_core::weyl;
use hsym_core::{sample, Poly, Scalar};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn decomposition_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = Frame::x(3 + (seed % 4) as usize);
        let m = g.gen_range(0..=6);
        let p = sample::homogeneous(&mut g, f, m, 4);
        let dec = decompose(&p).unwrap();
        prop_assert_eq!(dec.recompose(), p);
        for c in dec.components.values() {
            prop_assert!(poly::laplacian(c).is_zero());
        }
    }

    #[test]
    fn gamma_consistency(seed in any::<u64>(), t in 1usize..=2) {
        let mut g = rng(seed);
        let n = 3 + (seed % 3) as usize;
        let f = Frame::x(n);
        let k = g.gen_range(0..=3);
        let basis = harmonic_basis(n, k).unwrap();
        let h = sample::combination(&mut g, f, &basis);
        let mut v = &h * &poly::quadratic_form(f).pow(t as u32);
        for _ in 0..t {
            v = poly::laplacian(&v);
        }
        prop_assert_eq!(v, h.scale(&Scalar::from_rational(gamma(t, k + 2 * t, n))));
    }

    #[test]
    fn residue_action_is_a_representation(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = 3 + (seed % 3) as usize;
        let r = g.gen_range(1..=2);
        let xs = ChevalleySystem::operator(n, r).unwrap();
        let labels = xs.labels();
        let a = xs.get(labels.choose(&mut g).unwrap()).unwrap();
        let b = xs.get(labels.choose(&mut g).unwrap()).unwrap();
        let p = sample::polynomial(&mut g, xs.frame(), 4, 3);
        let x = ResidueElt::reduce(&p, r).unwrap();
        let lhs = act(&a.bracket(b), &x).unwrap();
        let ab = act(a, &act(b, &x).unwrap()).unwrap();
        let ba = act(b, &act(a, &x).unwrap()).unwrap();
        let rhs = ResidueElt::reduce(&(&ab.representative() - &ba.representative()), r).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Well defined on classes.
        let q = sample::polynomial(&mut g, xs.frame(), 2, 2);
        let shifted = &p + &(&q * &poly::quadratic_form(xs.frame()).pow(r as u32));
        prop_assert_eq!(act(a, &ResidueElt::reduce(&shifted, r).unwrap()).unwrap(), act(a, &x).unwrap());
    }

    #[test]
    fn pairing_symmetric_and_diagonal(seed in any::<u64>()) {
        let mut g = rng(seed);
        let kind = if seed % 2 == 0 { FrameKind::X } else { FrameKind::U };
        let f = Frame::new(kind, 3 + (seed % 4) as usize).unwrap();
        let m = g.gen_range(0..=4);
        let a = sample::homogeneous(&mut g, f, m, 3);
        let b = sample::homogeneous(&mut g, f, m, 3);
        prop_assert_eq!(pair(&a, &b).unwrap(), pair(&b, &a).unwrap());
        prop_assert_eq!(pair(&a, &b).unwrap(), pair_diag(&a, &b).unwrap());
    }

    #[test]
    fn pairing_transports_operators_by_fourier(seed in any::<u64>()) {
        let mut g = rng(seed);
        let kind = if seed % 2 == 0 { FrameKind::X } else { FrameKind::U };
        let f = Frame::new(kind, 3 + (seed % 4) as usize).unwrap();
        let y = random_operator(&mut g, f, 2);
        let a = sample::polynomial(&mut g, f, 3, 3);
        let b = sample::polynomial(&mut g, f, 5, 4);
        prop_assert_eq!(pair(&y.apply(&a), &b).unwrap(), pair(&a, &y.fourier().apply(&b)).unwrap());
    }

    #[test]
    fn pairing_is_invariant_under_compact_rotations(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = Frame::u(3 + (seed % 4) as usize);
        let labels = f.labels();
        let (a_lab, b_lab) = (*labels.choose(&mut g).unwrap(), *labels.choose(&mut g).unwrap());
        prop_assume!(a_lab != -b_lab && a_lab != b_lab);
        // E_ab − E_ba is skew for the pairing.
        let y = &e_op(f, a_lab, b_lab).unwrap() - &e_op(f, b_lab, a_lab).unwrap();
        prop_assert_eq!(y.fourier(), -&y);
        let m = g.gen_range(1..=4);
        let a = sample::homogeneous(&mut g, f, m, 3);
        let b = sample::homogeneous(&mut g, f, m, 3);
        let lhs = &pair_diag(&y.apply(&a), &b).unwrap() + &pair_diag(&a, &y.apply(&b)).unwrap();
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn double_orthogonal_is_identity(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = Frame::x(3 + (seed % 3) as usize);
        let m = g.gen_range(1..=4);
        let monos = f.monomials(m as u32);
        let k = g.gen_range(1..=5.min(monos.len()));
        let span: Vec<Poly> = (0..k).map(|_| sample::homogeneous(&mut g, f, m, 2)).collect();
        prop_assert!(double_orthogonal(f, m, &span));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn witnesses_are_symmetries_and_symmetries_form_an_algebra(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = 3 + (seed % 2) as usize;
        let r = g.gen_range(1..=2);
        let gens = symmetry_generators(n, r, None);
        let (_, a) = gens.choose(&mut g).unwrap();
        let (_, b) = gens.choose(&mut g).unwrap();
        for q in [&a.bracket(b), &(a * b), &(a + b)] {
            let v = check_symmetry(q, r, n).unwrap();
            prop_assert!(v.is_symmetry);
            let w = v.witness.unwrap();
            let lap_r = weyl::laplacian(Frame::x(n)).pow(r as u32);
            prop_assert_eq!(&lap_r * q, &w * &lap_r);
            // The witness itself need not be a symmetry; its formal adjoint is.
            prop_assert!(check_symmetry(&w.formal_adjoint(), r, n).unwrap().is_symmetry);
        }
    }

    #[test]
    fn left_multiples_are_trivial_symmetries(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = 3 + (seed % 3) as usize;
        let r = g.gen_range(1..=2);
        let f = Frame::x(n);
        let s = random_operator(&mut g, f, 2);
        let q = &s * &weyl::laplacian(f).pow(r as u32);
        let v = check_symmetry(&q, r, n).unwrap();
        prop_assert!(v.is_symmetry && v.trivial);
    }
}

#[test]
fn witness_of_q_generator_is_not_itself_a_symmetry() {
    let (n, r) = (3, 1);
    let (_, q) = symmetry_generators(n, r, None)
        .into_iter()
        .find(|(name, _)| name.starts_with('Q'))
        .unwrap();
    let w = check_symmetry(&q, r, n).unwrap().witness.unwrap();
    assert!(!check_symmetry(&w, r, n).unwrap().is_symmetry);
}

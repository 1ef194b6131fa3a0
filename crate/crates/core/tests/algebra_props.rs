//! Ring-level properties of scalars, polynomials and operators.

use hsym_core::poly::{self, Frame, FrameKind};
use hsym_core::sample;
use hsym_core::weyl::{self, WeylOp};
use hsym_core::{Poly, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn frame_for(seed: u64, kind: FrameKind) -> Frame {
    Frame::new(kind, 3 + (seed % 4) as usize).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_inverse(seed in any::<u64>()) {
        let x = sample::nonzero_scalar(&mut rng(seed), false);
        prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn conjugations_are_ring_maps(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (a, b) = (sample::scalar(&mut g, false), sample::scalar(&mut g, false));
        prop_assert_eq!((&a * &b).conj_i(), &a.conj_i() * &b.conj_i());
        prop_assert_eq!((&a * &b).conj_sqrt2(), &a.conj_sqrt2() * &b.conj_sqrt2());
        prop_assert_eq!((&a + &b).conj_i(), &a.conj_i() + &b.conj_i());
    }

    #[test]
    fn poly_ring_laws(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = frame_for(seed, FrameKind::X);
        let [p, q, s] = [0; 3].map(|_| sample::polynomial(&mut g, f, 3, 3));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
    }

    #[test]
    fn frame_change_is_a_ring_isomorphism(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = frame_for(seed, FrameKind::X);
        let p = sample::polynomial(&mut g, f, 3, 3);
        let q = sample::polynomial(&mut g, f, 3, 3);
        let pu = p.to_u_frame().unwrap();
        prop_assert_eq!((&p * &q).to_u_frame().unwrap(), &pu * &q.to_u_frame().unwrap());
        prop_assert_eq!(pu.to_x_frame().unwrap(), p.clone());
        prop_assert_eq!(poly::laplacian(&p).to_u_frame().unwrap(), poly::laplacian(&pu));
    }

    #[test]
    fn weyl_associativity_and_action(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = frame_for(seed, if seed % 2 == 0 { FrameKind::X } else { FrameKind::U });
        let a = hsym_core::symmetry::random_operator(&mut g, f, 2);
        let b = hsym_core::symmetry::random_operator(&mut g, f, 2);
        let c = hsym_core::symmetry::random_operator(&mut g, f, 2);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        let p = sample::polynomial(&mut g, f, 4, 3);
        prop_assert_eq!((&a * &b).apply(&p), a.apply(&b.apply(&p)));
    }

    #[test]
    fn fourier_is_an_involutive_anti_automorphism(seed in any::<u64>()) {
        let mut g = rng(seed);
        let f = frame_for(seed, if seed % 2 == 0 { FrameKind::X } else { FrameKind::U });
        let a = hsym_core::symmetry::random_operator(&mut g, f, 3);
        let b = hsym_core::symmetry::random_operator(&mut g, f, 3);
        prop_assert_eq!(a.fourier().fourier(), a.clone());
        prop_assert_eq!((&a * &b).fourier(), &b.fourier() * &a.fourier());
    }

    #[test]
    fn left_multiples_of_laplacian_power_are_members(seed in any::<u64>(), r in 1u32..=2) {
        let mut g = rng(seed);
        let f = frame_for(seed, FrameKind::X);
        let s = hsym_core::symmetry::random_operator(&mut g, f, 2);
        let member = &s * &weyl::laplacian(f).pow(r);
        prop_assert!(weyl::in_left_ideal_of_power(&member, r));
        let fr = poly::quadratic_form(f).pow(r);
        let right = &WeylOp::from_poly(&fr) * &s;
        prop_assert!(weyl::in_right_ideal_of_power(&right, &poly::quadratic_form(f), r));
    }
}

#[test]
fn dead_u0_rejected_for_even_n() {
    let f = Frame::u(4);
    let slot = f.u_slot(0);
    assert!(slot.is_none_or(|s| Poly::var(f, s).is_err()));
}

//! Ambient-space invariants: the Laplacian identity, weights and the derivation action.

use hsym_core::ambient::{self, AmbientElt};
use hsym_core::liealg::ChevalleySystem;
use hsym_core::poly::{self, Frame};
use hsym_core::sample;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A homogeneous term with `Q̄`-degree below `r / 2`, so products are not truncated.
fn random_elt(g: &mut ChaCha8Rng, n: usize, r: usize) -> AmbientElt {
    let j = g.gen_range(0..r / 2);
    let nu = g.gen_range(-4..=4);
    let m = g.gen_range(0..=3);
    AmbientElt::term(n, r, j, nu, sample::homogeneous(g, Frame::u(n), m, 3)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn laplacian_identity_and_frame_agreement(seed in any::<u64>()) {
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let n = 3 + (seed % 3) as usize;
        let r = g.gen_range(1..=3);
        for c in ambient::ambient_identities_check(n, r, 2, &mut g).unwrap() {
            prop_assert!(c.passed, "{:?}", c);
        }
    }

    #[test]
    fn weight_is_additive(seed in any::<u64>()) {
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let n = 3 + (seed % 3) as usize;
        let big = 8;
        let x = random_elt(&mut g, n, big);
        let y = random_elt(&mut g, n, big);
        let xy = &x * &y;
        prop_assume!(!x.is_zero() && !y.is_zero());
        prop_assert_eq!(xy.weight2(), Some(x.weight2().unwrap() + y.weight2().unwrap()));
    }

    #[test]
    fn derivations_act_componentwise(seed in any::<u64>()) {
        let mut g = ChaCha8Rng::seed_from_u64(seed);
        let n = 3 + (seed % 3) as usize;
        let r = 4;
        let ys = ChevalleySystem::derivation(n).unwrap();
        let y = ys.get(ys.labels().choose(&mut g).unwrap()).unwrap();
        let full = Frame::ufull(n);
        prop_assert!(y.apply(&poly::quadratic_form(full)).is_zero());
        let m = g.gen_range(0..=3);
        let f = sample::homogeneous(&mut g, Frame::u(n), m, 3);
        let nu = g.gen_range(-4..=4);
        let j = g.gen_range(0..r);
        let with_q = AmbientElt::term(n, r, j, nu, f.clone()).unwrap();
        let bare = AmbientElt::term(n, r, 0, nu, f).unwrap();
        let q_j = AmbientElt::term(n, r, j, 0, hsym_core::Poly::one(Frame::u(n))).unwrap();
        let lhs = ambient::apply_derivation(y, &with_q).unwrap();
        let rhs = &ambient::apply_derivation(y, &bare).unwrap() * &q_j;
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn slice_dimensions_match_polyharmonic() {
    for (n, r) in [(3, 1), (4, 2), (5, 2)] {
        for s in ambient::slice_dims(n, r, 4).unwrap() {
            assert_eq!(s.kernel_dim, s.polyharmonic_dim, "n={n} r={r} {s:?}");
            assert!(s.basis_spans_kernel, "n={n} r={r} {s:?}");
        }
    }
}

#[test]
fn lift_constants_follow_the_recursion() {
    for r in 1..=5 {
        for p in 0..r - 1 {
            let next = ambient::c_p(r, p)
                * hsym_core::Rational::from_integer((-2 * (p as i64 + 1) * (r as i64 - p as i64 - 1)).into());
            assert_eq!(ambient::c_p(r, p + 1), next);
        }
    }
}

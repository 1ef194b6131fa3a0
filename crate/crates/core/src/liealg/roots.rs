//! Root systems of type B_ℓ / D_ℓ and weights in the ε-basis.
//!
//! Conventions are Bourbaki's: simple roots `ε_i − ε_{i+1}` plus `ε_ℓ` (B) or
//! `ε_{ℓ-1} + ε_ℓ` (D); fundamental weights accordingly, `ϖ₁ = ε₁`.

use crate::error::{Error, Result};
use crate::scalars::{rational_text, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    B,
    D,
}

/// The root system of so(n+2): `B_ℓ` for odd `n`, `D_ℓ` for even `n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystem {
    pub ell: usize,
    pub kind: RootType,
}

/// A root, as integer coordinates on `ε_1..ε_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i8>);

/// A weight, as rational coordinates on `ε_1..ε_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

impl RootSystem {
    pub fn for_n(n: usize) -> RootSystem {
        RootSystem {
            ell: n / 2 + 1,
            kind: if n % 2 == 1 { RootType::B } else { RootType::D },
        }
    }

    /// All roots: positive roots first, then their negatives, each in a fixed order.
    pub fn roots(&self) -> Vec<Root> {
        let pos = self.positive_roots();
        let neg: Vec<Root> = pos.iter().map(Root::neg).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let l = self.ell;
        let mut out = Vec::new();
        for a in 0..l {
            for b in a + 1..l {
                for sb in [-1i8, 1] {
                    let mut v = vec![0i8; l];
                    v[a] = 1;
                    v[b] = sb;
                    out.push(Root(v));
                }
            }
            if self.kind == RootType::B {
                let mut v = vec![0i8; l];
                v[a] = 1;
                out.push(Root(v));
            }
        }
        out
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        let l = self.ell;
        let mut out = Vec::new();
        for i in 0..l - 1 {
            let mut v = vec![0i8; l];
            v[i] = 1;
            v[i + 1] = -1;
            out.push(Root(v));
        }
        let mut last = vec![0i8; l];
        match self.kind {
            RootType::B => last[l - 1] = 1,
            RootType::D => {
                last[l - 2] = 1;
                last[l - 1] = 1;
            }
        }
        out.push(Root(last));
        out
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let l = self.ell;
        let ones = |k: usize| -> Vec<Rational> { (0..l).map(|i| if i < k { q(1) } else { q(0) }).collect() };
        let mut out = Vec::new();
        for i in 1..=l {
            let w = match (self.kind, i) {
                (RootType::B, i) if i == l => ones(l).into_iter().map(|x| x * half()).collect(),
                (RootType::D, i) if i == l => ones(l).into_iter().map(|x| x * half()).collect(),
                (RootType::D, i) if i == l - 1 => {
                    let mut v: Vec<Rational> = ones(l).into_iter().map(|x| x * half()).collect();
                    v[l - 1] = -half();
                    v
                }
                (_, i) => ones(i),
            };
            out.push(Weight(w));
        }
        out
    }

    /// `ρ = Σ ϖ_j`.
    pub fn rho(&self) -> Weight {
        self.fundamental_weights()
            .into_iter()
            .fold(Weight::zero(self.ell), |a, b| a.add(&b))
    }

    /// `⟨λ, α∨⟩ = 2(λ, α)/(α, α)`.
    pub fn coroot_pairing(&self, w: &Weight, a: &Root) -> Rational {
        let dot: Rational =
            w.0.iter()
                .zip(&a.0)
                .map(|(x, &c)| x * q(c as i64))
                .fold(Rational::zero(), |s, t| s + t);
        let norm: i64 = a.0.iter().map(|&c| (c as i64) * (c as i64)).sum();
        dot * q(2) / q(norm)
    }

    /// Coordinates on the fundamental weights: `c_i = ⟨λ, α_i∨⟩`.
    pub fn to_fundamental(&self, w: &Weight) -> Vec<Rational> {
        self.simple_roots().iter().map(|a| self.coroot_pairing(w, a)).collect()
    }

    pub fn from_fundamental(&self, coeffs: &[Rational]) -> Weight {
        self.fundamental_weights()
            .iter()
            .zip(coeffs)
            .fold(Weight::zero(self.ell), |acc, (w, c)| acc.add(&w.scale(c)))
    }

    /// The unique dominant element of the Weyl-group orbit of `w`.
    ///
    /// Signed permutations for `B_ℓ`; for `D_ℓ` only an even number of sign
    /// changes is allowed, so an odd count leaves the last (smallest)
    /// coordinate negative unless some coordinate vanishes.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let negatives = w.0.iter().filter(|x| x.is_negative()).count();
        let has_zero = w.0.iter().any(Zero::is_zero);
        let mut v: Vec<Rational> = w.0.iter().map(|x| x.abs()).collect();
        v.sort_by(|a, b| b.cmp(a));
        if self.kind == RootType::D && negatives % 2 == 1 && !has_zero {
            let last = v.len() - 1;
            v[last] = -v[last].clone();
        }
        Weight(v)
    }

    /// True iff `⟨λ, α∨⟩` is a nonnegative integer for every simple root.
    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        self.to_fundamental(w)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

/// `ν ∈ W(λ + ρ)` dominant, for the root system of so(n+2).
pub fn dominant_weight(lambda: &Weight, n: usize) -> Weight {
    let rs = RootSystem::for_n(n);
    rs.dominant_conjugate(&lambda.add(&rs.rho()))
}

/// True iff the irreducible module of highest weight `λ` is finite dimensional.
pub fn is_finite_dim_weight(lambda: &Weight, n: usize) -> bool {
    RootSystem::for_n(n).is_dominant_integral(lambda)
}

impl Root {
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn as_weight(&self) -> Weight {
        Weight(self.0.iter().map(|&c| q(c as i64)).collect())
    }

    /// Squared length with `(ε_i, ε_j) = δ_ij`.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|&c| (c as i64) * (c as i64)).sum()
    }

    /// Nonzero entries as `(index, sign)` pairs, index 0-based.
    pub fn support(&self) -> Vec<(usize, i8)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

impl fmt::Display for Root {
    /// Label such as `e1-e2`, `-e1-e3` or `e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.support() {
            match (first, c > 0) {
                (true, true) => {}
                (_, false) => write!(f, "-")?,
                (false, true) => write!(f, "+")?,
            }
            first = false;
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}

impl Root {
    /// Parses a label like `e1-e2` for a rank-`ell` system.
    pub fn parse(s: &str, ell: usize) -> Result<Root> {
        let bad = || Error::InvalidParameter(format!("bad root label '{s}'"));
        let mut v = vec![0i8; ell];
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut count = 0;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'-' => {
                    i += 1;
                    -1
                }
                b'+' if i > 0 => {
                    i += 1;
                    1
                }
                _ if i == 0 => 1,
                _ => return Err(bad()),
            };
            if bytes.get(i) != Some(&b'e') {
                return Err(bad());
            }
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let k: usize = s[start..i].parse().map_err(|_| bad())?;
            if k == 0 || k > ell || v[k - 1] != 0 {
                return Err(bad());
            }
            v[k - 1] = sign;
            count += 1;
        }
        if count == 0 || count > 2 {
            return Err(bad());
        }
        Ok(Root(v))
    }
}

impl Weight {
    pub fn zero(ell: usize) -> Weight {
        Weight(vec![Rational::zero(); ell])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    /// `c·ε_k` (1-based `k`).
    pub fn eps(ell: usize, k: usize, c: Rational) -> Weight {
        let mut w = Weight::zero(ell);
        w.0[k - 1] = c;
        w
    }

    /// Coordinates as strings `p` or `p/q`.
    pub fn coord_strings(&self) -> Vec<String> {
        self.0.iter().map(rational_text).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(", "))
    }
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(RootType::B),
            "D" => Ok(RootType::D),
            _ => Err(Error::InvalidParameter(format!("root type {s}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: i64, den: i64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    #[test]
    fn root_counts() {
        for n in 3..=8 {
            let rs = RootSystem::for_n(n);
            let dim = (n + 2) * (n + 1) / 2;
            assert_eq!(rs.roots().len() + rs.ell, dim);
        }
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for n in 3..=8 {
            let rs = RootSystem::for_n(n);
            for (i, w) in rs.fundamental_weights().iter().enumerate() {
                let c = rs.to_fundamental(w);
                for (j, cj) in c.iter().enumerate() {
                    assert_eq!(*cj, q(if i == j { 1 } else { 0 }));
                }
            }
            assert_eq!(rs.fundamental_weights()[0], Weight::eps(rs.ell, 1, q(1)));
        }
    }

    #[test]
    fn labels_round_trip() {
        let rs = RootSystem::for_n(5);
        for a in rs.roots() {
            assert_eq!(Root::parse(&a.to_string(), rs.ell).unwrap(), a);
        }
        assert!(Root::parse("e1-e1", 3).is_err());
        assert!(Root::parse("e4", 3).is_err());
    }

    #[test]
    fn dominant_weight_small_d() {
        // n = 5, r = 2: d = 1/2 ≤ 1 so ν = λ + ρ.
        let rs = RootSystem::for_n(5);
        let lambda = Weight::eps(3, 1, r(-1, 2));
        assert_eq!(dominant_weight(&lambda, 5), lambda.add(&rs.rho()));
    }

    #[test]
    fn finiteness_criterion() {
        // n = 4, r = 2: d = 0.
        assert!(is_finite_dim_weight(&Weight::zero(3), 4));
        assert!(is_finite_dim_weight(&Weight::eps(3, 1, q(1)), 4));
        // n = 5, r = 3: d = -1/2 is not integral.
        assert!(!is_finite_dim_weight(&Weight::eps(3, 1, r(1, 2)), 5));
    }
}

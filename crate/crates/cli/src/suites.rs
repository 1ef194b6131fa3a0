//! Verification suites: parameter grids, items and their execution.

use crate::args::{ParamArgs, SuiteSel};
use hsym_core::ambient;
use hsym_core::duality;
use hsym_core::gmodule;
use hsym_core::liealg::{self, ChevalleySystem};
use hsym_core::poly::{Frame, FrameKind};
use hsym_core::report::{all_of, Check};
use hsym_core::symmetry;
use hsym_core::{sample, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};
use thiserror::Error;

pub const SUITES: [SuiteSel; 5] = [
    SuiteSel::Lie,
    SuiteSel::Module,
    SuiteSel::Duality,
    SuiteSel::Symmetry,
    SuiteSel::Ambient,
];

/// Wall-clock budget per suite unless `--no-timeout` is given.
pub const SUITE_BUDGET: Duration = Duration::from_secs(240);

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("n = {0}: need n >= 3")]
    SmallN(usize),
    #[error("r = {0}: need r >= 1")]
    ZeroR(usize),
    #[error("p = {p} exceeds n = {n}")]
    BigP { p: usize, n: usize },
    #[error("degree bound must be at least 1")]
    ZeroDegree,
    #[error("--p needs --n")]
    PWithoutN,
}

/// Validated run parameters; `None` means the default grid.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub p: Option<usize>,
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub cases: usize,
}

impl RunConfig {
    pub fn new(params: &ParamArgs, seed: u64, cases: usize) -> Result<Self, ConfigError> {
        if let Some(n) = params.n.filter(|&n| n < 3) {
            return Err(ConfigError::SmallN(n));
        }
        if let Some(r) = params.r.filter(|&r| r == 0) {
            return Err(ConfigError::ZeroR(r));
        }
        if params.max_degree == Some(0) {
            return Err(ConfigError::ZeroDegree);
        }
        match (params.p, params.n) {
            (Some(_), None) => return Err(ConfigError::PWithoutN),
            (Some(p), Some(n)) if p > n => return Err(ConfigError::BigP { p, n }),
            _ => {}
        }
        Ok(RunConfig {
            n: params.n,
            r: params.r,
            p: params.p,
            max_degree: params.max_degree,
            seed,
            cases,
        })
    }

    fn ns(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        self.n.map_or_else(|| default.into_iter().collect(), |n| vec![n])
    }

    fn rs(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        self.r.map_or_else(|| default.into_iter().collect(), |r| vec![r])
    }

    /// `(n, r)` pairs: the override if given, else the listed defaults.
    fn pairs(&self, default: &[(usize, usize)]) -> Vec<(usize, usize)> {
        match (self.n, self.r) {
            (Some(n), Some(r)) => vec![(n, r)],
            (Some(n), None) => {
                let v: Vec<_> = default.iter().copied().filter(|p| p.0 == n).collect();
                if v.is_empty() {
                    vec![(n, 1)]
                } else {
                    v
                }
            }
            (None, Some(r)) => {
                let v: Vec<_> = default.iter().copied().filter(|p| p.1 == r).collect();
                if v.is_empty() {
                    vec![(default[0].0, r)]
                } else {
                    v
                }
            }
            (None, None) => default.to_vec(),
        }
    }

    fn degree(&self, default: usize) -> usize {
        self.max_degree.unwrap_or(default)
    }
}

#[derive(Clone, Debug)]
enum Job {
    Relations { n: usize, r: usize },
    RealPresentation { n: usize, p: usize, r: usize },
    HighestWeight { n: usize, r: usize },
    Socle { n: usize, r: usize },
    Saturation { n: usize, r: usize, d: usize },
    AdjointTable { n: usize, r: usize, d: usize },
    Descent { n: usize, r: usize },
    Orthogonality { n: usize, r: usize, d: usize },
    TauFormulas { n: usize, r: usize },
    Invariance { n: usize, r: usize, d: usize },
    DualDims { n: usize, r: usize, d: usize },
    PairingLaws { n: usize },
    FourierLaws { n: usize },
    FourierOfFPower { n: usize, r: usize },
    Generators { n: usize, r: usize, p: Option<usize> },
    Correspondence { n: usize, r: usize },
    ConstantCoeff { n: usize, r: usize, d: usize },
    AmbientIdentities { n: usize, r: usize },
    LiftConstants { r: usize },
    Slices { n: usize, r: usize, d: usize },
    Equivariance { n: usize, r: usize, d: usize },
    HighestWeightVectors { n: usize, r: usize },
}

/// One unit of work; its RNG is derived from the seed and the key alone.
#[derive(Clone, Debug)]
pub struct Item {
    pub suite: SuiteSel,
    pub key: String,
    job: Job,
}

fn item(suite: SuiteSel, key: String, job: Job) -> Item {
    Item { suite, key, job }
}

const MODULE_SATURATION: [(usize, usize); 7] = [(3, 1), (3, 2), (5, 1), (5, 2), (4, 1), (6, 1), (6, 2)];
const MODULE_SOCLE: [(usize, usize); 3] = [(4, 2), (4, 3), (6, 3)];
const ADJOINT: [(usize, usize); 3] = [(3, 2), (4, 2), (4, 3)];
const DUALITY: [(usize, usize); 3] = [(3, 1), (4, 2), (5, 2)];
const AMBIENT: [(usize, usize); 3] = [(4, 2), (4, 3), (6, 3)];

/// Samples per pair for invariance and equivariance.
const PAIR_SAMPLES: usize = 50;
const CORRESPONDENCE_SAMPLES: usize = 100;

pub fn items(suite: SuiteSel, cfg: &RunConfig) -> Vec<Item> {
    use SuiteSel as S;
    let mut out = Vec::new();
    match suite {
        S::Lie => {
            for n in cfg.ns(3..=6) {
                for r in cfg.rs(1..=3) {
                    out.push(item(suite, format!("relations n={n} r={r}"), Job::Relations { n, r }));
                }
            }
            for n in cfg.ns(3..=5) {
                for p in cfg.p.map_or_else(|| signatures(n), |p| vec![p]) {
                    for r in cfg.rs(1..=2) {
                        out.push(item(
                            suite,
                            format!("real n={n} p={p} r={r}"),
                            Job::RealPresentation { n, p, r },
                        ));
                    }
                }
            }
        }
        S::Module => {
            for n in cfg.ns(3..=6) {
                for r in cfg.rs(1..=3) {
                    out.push(item(
                        suite,
                        format!("highest-weight n={n} r={r}"),
                        Job::HighestWeight { n, r },
                    ));
                    out.push(item(suite, format!("descent n={n} r={r}"), Job::Descent { n, r }));
                }
            }
            for (n, r) in cfg.pairs(&MODULE_SOCLE) {
                out.push(item(suite, format!("socle n={n} r={r}"), Job::Socle { n, r }));
            }
            for (n, r) in cfg.pairs(&MODULE_SATURATION) {
                let d = cfg.degree(5);
                out.push(item(
                    suite,
                    format!("saturation n={n} r={r} D={d}"),
                    Job::Saturation { n, r, d },
                ));
            }
            for (n, r) in cfg.pairs(&ADJOINT).into_iter().filter(|p| p.1 >= 2) {
                let d = cfg.degree(5);
                out.push(item(
                    suite,
                    format!("adjoint-table n={n} r={r} D={d}"),
                    Job::AdjointTable { n, r, d },
                ));
            }
        }
        S::Duality => {
            for (n, r) in cfg.pairs(&DUALITY) {
                let d = cfg.degree(6);
                out.push(item(
                    suite,
                    format!("orthogonality n={n} r={r} D={d}"),
                    Job::Orthogonality { n, r, d },
                ));
                out.push(item(suite, format!("tau n={n} r={r}"), Job::TauFormulas { n, r }));
                let d = cfg.degree(4);
                out.push(item(
                    suite,
                    format!("invariance n={n} r={r} D={d}"),
                    Job::Invariance { n, r, d },
                ));
                let d = cfg.degree(5);
                out.push(item(
                    suite,
                    format!("weight-dims n={n} r={r} D={d}"),
                    Job::DualDims { n, r, d },
                ));
            }
            let mut ns: Vec<usize> = cfg.pairs(&DUALITY).into_iter().map(|p| p.0).collect();
            ns.dedup();
            for n in ns {
                out.push(item(suite, format!("pairing-laws n={n}"), Job::PairingLaws { n }));
            }
        }
        S::Symmetry => {
            for n in cfg.ns(3..=5) {
                out.push(item(suite, format!("fourier-laws n={n}"), Job::FourierLaws { n }));
                for r in cfg.rs(1..=2) {
                    out.push(item(
                        suite,
                        format!("fourier-f-power n={n} r={r}"),
                        Job::FourierOfFPower { n, r },
                    ));
                    out.push(item(
                        suite,
                        format!("generators n={n} r={r} complex"),
                        Job::Generators { n, r, p: None },
                    ));
                    for p in cfg.p.map_or_else(|| signatures(n), |p| vec![p]) {
                        out.push(item(
                            suite,
                            format!("generators n={n} r={r} p={p}"),
                            Job::Generators { n, r, p: Some(p) },
                        ));
                    }
                    out.push(item(
                        suite,
                        format!("correspondence n={n} r={r}"),
                        Job::Correspondence { n, r },
                    ));
                    let d = cfg.degree(6);
                    out.push(item(
                        suite,
                        format!("constant-coeff n={n} r={r} D={d}"),
                        Job::ConstantCoeff { n, r, d },
                    ));
                }
            }
        }
        S::Ambient => {
            let pairs = cfg.pairs(&AMBIENT);
            let mut rs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            rs.sort_unstable();
            rs.dedup();
            for r in rs {
                out.push(item(suite, format!("lift-constants r={r}"), Job::LiftConstants { r }));
            }
            for (n, r) in pairs {
                let d = cfg.degree(4);
                out.push(item(
                    suite,
                    format!("identities n={n} r={r}"),
                    Job::AmbientIdentities { n, r },
                ));
                out.push(item(
                    suite,
                    format!("slices n={n} r={r} D={d}"),
                    Job::Slices { n, r, d },
                ));
                out.push(item(
                    suite,
                    format!("equivariance n={n} r={r} D={d}"),
                    Job::Equivariance { n, r, d },
                ));
                out.push(item(
                    suite,
                    format!("highest-weights n={n} r={r}"),
                    Job::HighestWeightVectors { n, r },
                ));
            }
        }
        S::All => {
            for s in SUITES {
                out.extend(items(s, cfg));
            }
        }
    }
    out
}

/// `{n, n−1, ⌈n/2⌉}` without repeats.
fn signatures(n: usize) -> Vec<usize> {
    let mut v = vec![n, n - 1, n.div_ceil(2)];
    v.dedup();
    v
}

/// FNV-1a, so item seeds do not depend on the std hasher.
fn key_hash(key: &str) -> u64 {
    key.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn fourier_laws(n: usize, cases: usize, rng: &mut ChaCha8Rng) -> Check {
    let checks = (0..cases).map(|i| {
        let kind = if i % 2 == 0 { FrameKind::X } else { FrameKind::U };
        let f = Frame::new(kind, n).expect("n >= 3");
        let a = symmetry::random_operator(rng, f, 3);
        let b = symmetry::random_operator(rng, f, 3);
        let ok = a.fourier().fourier() == a && (&a * &b).fourier() == &b.fourier() * &a.fourier();
        Check::from_bool(format!("case {i}"), ok, format!("P = {a}, Q = {b}"))
    });
    all_of(
        format!("n={n}: F is an involutive anti-automorphism"),
        checks.collect::<Vec<_>>(),
    )
}

fn pairing_laws(n: usize, cases: usize, rng: &mut ChaCha8Rng) -> hsym_core::Result<Vec<Check>> {
    let mut sym = Vec::new();
    let mut dbl = Vec::new();
    for i in 0..cases {
        let kind = if i % 2 == 0 { FrameKind::X } else { FrameKind::U };
        let f = Frame::new(kind, n)?;
        let m = rng.gen_range(0..=4);
        let a = sample::homogeneous(rng, f, m, 3);
        let b = sample::homogeneous(rng, f, m, 3);
        let (ab, ba) = (duality::pair(&a, &b)?, duality::pair(&b, &a)?);
        sym.push(Check::from_bool(
            format!("case {i}"),
            ab == ba,
            format!("a = {a}, f = {b}"),
        ));
        if i % 10 == 0 {
            let k = rng.gen_range(1..=5);
            let span: Vec<_> = (0..k).map(|_| sample::homogeneous(rng, f, m.max(1), 2)).collect();
            dbl.push(Check::from_bool(
                format!("case {i}"),
                duality::double_orthogonal(f, m.max(1), &span),
                "",
            ));
        }
    }
    Ok(vec![
        all_of(format!("n={n}: pairing is symmetric"), sym),
        all_of(format!("n={n}: L-perp-perp = L"), dbl),
    ])
}

fn lift_constants(r: usize) -> Check {
    let mut checks = Vec::new();
    for p in 0..r {
        let c = ambient::c_p(r, p);
        checks.push(Check::from_bool(
            format!("c_{p} nonzero"),
            c != Rational::from_integer(0.into()),
            c.to_string(),
        ));
        if p + 1 < r {
            let factor = Rational::from_integer((-2 * (p as i64 + 1) * (r as i64 - p as i64 - 1)).into());
            checks.push(Check::from_bool(
                format!("c_{} = c_{p} * (-2)({})({})", p + 1, p + 1, r - p - 1),
                ambient::c_p(r, p + 1) == c * factor,
                "",
            ));
        }
    }
    all_of(format!("r={r}: lift constants"), checks)
}

fn run_job(job: &Job, cfg: &RunConfig, rng: &mut ChaCha8Rng) -> hsym_core::Result<Vec<Check>> {
    Ok(match *job {
        Job::Relations { n, r } => {
            let mut v = liealg::verify_relations(n, r)?;
            v.push(liealg::verify_iso_psi(n, r)?.check());
            v.push(liealg::verify_involution_compat(n, r)?);
            for sys in [ChevalleySystem::derivation(n)?, ChevalleySystem::operator(n, r)?] {
                v.extend(sys.verify_root_relations());
                v.extend(sys.verify_chevalley_signs());
            }
            v
        }
        Job::RealPresentation { n, p, r } => liealg::verify_real_presentation(n, p, r)?,
        Job::HighestWeight { n, r } => {
            let (w, ok) = gmodule::verify_highest_weight(n, r)?;
            vec![Check::from_bool(
                format!("n={n} r={r}: 1 is a highest-weight vector of weight -d*w1"),
                ok,
                w.to_string(),
            )]
        }
        Job::Socle { n, r } => gmodule::socle_report(n, r, 2 * (r + 2))?.checks(),
        Job::Saturation { n, r, d } => {
            let rep = gmodule::saturation_simplicity_check(n, r, d)?;
            vec![Check::from_bool(
                format!("n={n} r={r} D={d}: saturation certificate"),
                rep.passed,
                format!("kernel dims {:?}", rep.kernel_dims),
            )]
        }
        Job::AdjointTable { n, r, d } => gmodule::intertwiner_adjoint_table(n, r, d)?,
        Job::Descent { n, r } => {
            let f = Frame::x(n);
            let samples: Vec<_> = (0..cfg.cases.min(20))
                .map(|_| sample::polynomial(rng, f, 3, 3))
                .collect();
            (1..=r)
                .map(|s| gmodule::descent_check(n, r, s, &samples))
                .collect::<hsym_core::Result<_>>()?
        }
        Job::Orthogonality { n, r, d } => duality::orthogonal_check(n, r, d)?,
        Job::TauFormulas { n, r } => duality::tau_formula_check(n, r)?,
        Job::Invariance { n, r, d } => vec![duality::g_invariance_check(n, r, d, PAIR_SAMPLES, rng)?],
        Job::DualDims { n, r, d } => vec![duality::duality_dims_check(n, r, d)?.0],
        Job::PairingLaws { n } => pairing_laws(n, cfg.cases, rng)?,
        Job::FourierLaws { n } => vec![fourier_laws(n, cfg.cases, rng)],
        Job::FourierOfFPower { n, r } => vec![symmetry::fourier_of_f_power(n, r)],
        Job::Generators { n, r, p } => symmetry::verify_generator_sets(n, r, p)?,
        Job::Correspondence { n, r } => {
            vec![symmetry::fourier_correspondence_check(n, r, 3, CORRESPONDENCE_SAMPLES, rng)?.check()]
        }
        Job::ConstantCoeff { n, r, d } => {
            let rep = symmetry::module_action_on_constant_coeff(n, r, d)?;
            vec![Check::from_bool(
                format!("n={n} r={r} D={d}: C[D]/(Lap^r) is the Fourier image of R_r"),
                rep.graded_dims_match && rep.fourier_of_f_power,
                rep.verdict.clone(),
            )]
        }
        Job::AmbientIdentities { n, r } => ambient::ambient_identities_check(n, r, cfg.cases.min(PAIR_SAMPLES), rng)?,
        Job::LiftConstants { r } => vec![lift_constants(r)],
        Job::Slices { n, r, d } => {
            let slices = ambient::slice_dims(n, r, d)?;
            let checks = slices.iter().map(|s| {
                Check::from_bool(
                    format!("degree {}", s.degree),
                    s.kernel_dim == s.polyharmonic_dim && s.basis_spans_kernel,
                    format!("kernel {} vs M_r {}", s.kernel_dim, s.polyharmonic_dim),
                )
            });
            vec![all_of(
                format!("n={n} r={r} D={d}: sigma o ev0 is bijective on slices"),
                checks.collect::<Vec<_>>(),
            )]
        }
        Job::Equivariance { n, r, d } => vec![ambient::equivariance_check(n, r, d, PAIR_SAMPLES, rng)?],
        Job::HighestWeightVectors { n, r } => ambient::highest_weight_vectors_check(n, r)?.checks(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemReport {
    pub key: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteSel,
    pub passed: bool,
    pub items: Vec<ItemReport>,
}

fn run_item(it: &Item, cfg: &RunConfig) -> ItemReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ key_hash(&it.key));
    let checks = match run_job(&it.job, cfg, &mut rng) {
        Ok(c) => c,
        Err(e) => vec![Check::fail(format!("{}: error", it.key), e.to_string())],
    };
    ItemReport {
        key: it.key.clone(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Runs the selected suites; items in a suite run in parallel, reports keep item order.
pub fn run_suites(selection: SuiteSel, cfg: &RunConfig, enforce_budget: bool) -> Vec<SuiteReport> {
    let suites: Vec<SuiteSel> = if selection == SuiteSel::All {
        SUITES.to_vec()
    } else {
        vec![selection]
    };
    suites
        .into_iter()
        .map(|suite| {
            let started = Instant::now();
            let list = items(suite, cfg);
            let mut reports: Vec<ItemReport> = list.par_iter().map(|it| run_item(it, cfg)).collect();
            let elapsed = started.elapsed();
            if enforce_budget && elapsed > SUITE_BUDGET {
                reports.push(ItemReport {
                    key: "time budget".into(),
                    passed: false,
                    checks: vec![Check::fail(
                        "suite finished within budget",
                        format!(
                            "{:.1}s > {}s; rerun with --no-timeout",
                            elapsed.as_secs_f64(),
                            SUITE_BUDGET.as_secs()
                        ),
                    )],
                });
            }
            SuiteReport {
                suite,
                passed: reports.iter().all(|r| r.passed),
                items: reports,
            }
        })
        .collect()
}

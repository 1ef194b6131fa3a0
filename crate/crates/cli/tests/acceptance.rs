//! Acceptance harness: one pass/fail line per criterion, exit status 1 on any failure.

use hsym_core::ambient;
use hsym_core::duality;
use hsym_core::exprio::{parse_op, print_op, EvalContext};
use hsym_core::gmodule::{self, QuotientDim};
use hsym_core::harmonic;
use hsym_core::liealg::{self, ChevalleySystem};
use hsym_core::poly::{Frame, FrameKind};
use hsym_core::report::Check;
use hsym_core::symmetry;
use hsym_core::{sample, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

const SEED: u64 = 0x5eed_2024;

type Outcome = Result<Vec<Check>, String>;

fn first_failure(checks: &[Check]) -> Option<String> {
    checks
        .iter()
        .find(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.detail))
}

fn collect<T>(r: hsym_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let mut out = Vec::new();
    for n in 3..=6 {
        for r in 1..=3 {
            out.extend(collect(liealg::verify_relations(n, r))?);
            for sys in [
                collect(ChevalleySystem::derivation(n))?,
                collect(ChevalleySystem::operator(n, r))?,
            ] {
                out.extend(sys.verify_root_relations());
                out.extend(sys.verify_chevalley_signs());
            }
        }
    }
    Ok(out)
}

fn criterion_2() -> Outcome {
    let mut out = Vec::new();
    for n in 3..=6 {
        for r in 1..=3 {
            out.push(collect(liealg::verify_iso_psi(n, r))?.check());
        }
    }
    Ok(out)
}

fn criterion_3() -> Outcome {
    let mut out = Vec::new();
    for n in 3..=6 {
        for r in 1..=3 {
            let (w, ok) = collect(gmodule::verify_highest_weight(n, r))?;
            out.push(Check::from_bool(
                format!("(a) n={n} r={r} highest weight"),
                ok,
                w.to_string(),
            ));
        }
    }
    for (n, r, want) in [(4, 2, 1), (4, 3, 6), (6, 3, 1)] {
        let rep = collect(gmodule::socle_report(n, r, 2 * (r + 2)))?;
        let d = n as i64 - 2 * r as i64;
        let harmonic = harmonic::harmonic_dim(n + 2, (-d / 2) as usize);
        out.push(Check::from_bool(
            format!("(b) n={n} r={r} quotient dim"),
            rep.quotient_dim == Some(QuotientDim::Finite(want)) && harmonic == want,
            format!("{:?}, harmonic {harmonic}, expected {want}", rep.quotient_dim),
        ));
        out.push(Check::from_bool(
            format!("(c) n={n} r={r} socle vector killed"),
            rep.hw_vector_killed,
            "",
        ));
        out.push(Check::from_bool(
            format!("(c) n={n} r={r} socle vector weight"),
            rep.hw_vector_weight_ok,
            format!("{:?}", rep.socle_hw),
        ));
    }
    for (n, r) in [(3, 1), (3, 2), (5, 1), (5, 2), (4, 1), (6, 1), (6, 2)] {
        let rep = collect(gmodule::saturation_simplicity_check(n, r, 5))?;
        out.push(Check::from_bool(
            format!("(d) n={n} r={r} saturation"),
            rep.passed,
            format!("{:?}", rep.kernel_dims),
        ));
    }
    Ok(out)
}

fn criterion_4() -> Outcome {
    let mut out = Vec::new();
    for (n, r) in [(3, 2), (4, 2), (4, 3)] {
        out.extend(collect(gmodule::intertwiner_adjoint_table(n, r, 5))?);
    }
    Ok(out)
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Outcome {
    let mut out = Vec::new();
    let mut laws = true;
    for i in 0..200 {
        let kind = if i % 2 == 0 { FrameKind::X } else { FrameKind::U };
        let f = Frame::new(kind, 3 + i % 4).unwrap();
        let a = symmetry::random_operator(rng, f, 3);
        let b = symmetry::random_operator(rng, f, 3);
        laws &= a.fourier().fourier() == a && (&a * &b).fourier() == &b.fourier() * &a.fourier();
    }
    out.push(Check::from_bool("F involutive anti-automorphism, 200 pairs", laws, ""));
    for n in 3..=5 {
        for r in 1..=2 {
            out.push(symmetry::fourier_of_f_power(n, r));
            out.extend(collect(symmetry::verify_generator_sets(n, r, None))?);
            let mut ps = vec![n, n - 1, n.div_ceil(2)];
            ps.dedup();
            for p in ps {
                out.extend(collect(symmetry::verify_generator_sets(n, r, Some(p)))?);
                out.extend(collect(liealg::verify_real_presentation(n, p, r))?);
            }
            out.push(collect(symmetry::fourier_correspondence_check(n, r, 3, 100, rng))?.check());
        }
    }
    Ok(out)
}

fn criterion_6(rng: &mut ChaCha8Rng) -> Outcome {
    let mut out = Vec::new();
    for (n, r) in [(3, 1), (4, 2), (5, 2)] {
        let f = Frame::u(n);
        let (mut symmetric, mut orthogonal) = (true, true);
        for _ in 0..100 {
            let m = rng.gen_range(0..=4);
            let a = sample::homogeneous(rng, f, m, 3);
            let b = sample::homogeneous(rng, f, m, 3);
            let c = sample::homogeneous(rng, f, m + 1, 3);
            symmetric &= collect(duality::pair(&a, &b))? == collect(duality::pair(&b, &a))?;
            orthogonal &= collect(duality::pair(&a, &c))?.is_zero();
        }
        out.push(Check::from_bool(
            format!("n={n} r={r} pairing symmetric"),
            symmetric,
            "",
        ));
        out.push(Check::from_bool(
            format!("n={n} r={r} degrees orthogonal"),
            orthogonal,
            "",
        ));
        out.extend(collect(duality::orthogonal_check(n, r, 6))?);
        out.push(collect(duality::g_invariance_check(n, r, 4, 50, rng))?);
        out.push(collect(duality::duality_dims_check(n, r, 5))?.0);
    }
    Ok(out)
}

fn criterion_7(rng: &mut ChaCha8Rng) -> Outcome {
    let mut out = Vec::new();
    for (n, r) in [(4, 2), (4, 3), (6, 3)] {
        out.extend(collect(ambient::ambient_identities_check(n, r, 20, rng))?);
        let mut recursion = true;
        for p in 0..r {
            let c = ambient::c_p(r, p);
            recursion &= c != Rational::from_integer(0.into());
            if p + 1 < r {
                let step = Rational::from_integer((-2 * (p as i64 + 1) * (r as i64 - p as i64 - 1)).into());
                recursion &= ambient::c_p(r, p + 1) == c * step;
            }
        }
        out.push(Check::from_bool(format!("n={n} r={r} c_p recursion"), recursion, ""));
        for s in collect(ambient::slice_dims(n, r, 4))? {
            out.push(Check::from_bool(
                format!("n={n} r={r} slice degree {}", s.degree),
                s.kernel_dim == s.polyharmonic_dim && s.basis_spans_kernel,
                format!("{} vs {}", s.kernel_dim, s.polyharmonic_dim),
            ));
        }
        out.push(collect(ambient::equivariance_check(n, r, 4, 50, rng))?);
        out.extend(collect(ambient::highest_weight_vectors_check(n, r))?.checks());
    }
    Ok(out)
}

const MALFORMED: &[(&str, usize, usize)] = &[
    ("X1 + ", 1, 6),
    ("(X1 + X2", 1, 9),
    ("X1 # X2", 1, 4),
    ("X1^X2", 1, 4),
    ("Q7*X1", 1, 1),
    ("X1 *\n   Y2", 2, 4),
    ("X1 X2", 1, 4),
];

fn hsym(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hsym"))
        .args(args)
        .output()
        .expect("run hsym");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_8(rng: &mut ChaCha8Rng) -> Outcome {
    let mut out = Vec::new();
    let mut round_trip = true;
    for i in 0..500 {
        let kinds = [FrameKind::X, FrameKind::U, FrameKind::UFull];
        let f = Frame::new(kinds[i % 3], 3 + i % 4).unwrap();
        let op = symmetry::random_operator(rng, f, 3);
        round_trip &= parse_op(&print_op(&op), &EvalContext::new(f)).ok() == Some(op);
    }
    out.push(Check::from_bool("500 print/parse round trips", round_trip, ""));
    let ctx = EvalContext::new(Frame::x(3));
    for &(text, line, col) in MALFORMED {
        let got = parse_op(text, &ctx).err().map(|e| (e.pos.line, e.pos.col));
        out.push(Check::from_bool(
            format!("error position for {text:?}"),
            got == Some((line, col)),
            format!("{got:?}"),
        ));
    }
    let (code, _) = hsym(&["verify", "lie", "--n", "4", "--r", "2"]);
    out.push(Check::from_bool(
        "verify lie --n 4 --r 2 exits 0",
        code == 0,
        format!("exit {code}"),
    ));
    let (code, text) = hsym(&[
        "report",
        "weight-dims",
        "--n",
        "4",
        "--r",
        "3",
        "--max-degree",
        "6",
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    out.push(Check::from_bool(
        "report weight-dims exits 0 with quotient_dim 6",
        code == 0 && json["quotient_dim"] == 6 && json["schema_version"] == 1,
        format!("exit {code}, quotient_dim {}", json["quotient_dim"]),
    ));
    let (code, text) = hsym(&["symmetry-check", "--n", "3", "--r", "1", "--expr", "X1*D2 - X2*D1"]);
    let json: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    out.push(Check::from_bool(
        "symmetry-check D12 exits 0 with is_symmetry true",
        code == 0 && json["is_symmetry"] == true,
        format!("exit {code}"),
    ));
    let (code, _) = hsym(&["verify", "nonsense"]);
    out.push(Check::from_bool(
        "invalid flags exit 2",
        code == 2,
        format!("exit {code}"),
    ));
    Ok(out)
}

const BUDGET: Duration = Duration::from_secs(600);

fn criterion_9() -> Outcome {
    let started = Instant::now();
    let (code, _) = hsym(&["verify", "all"]);
    let elapsed = started.elapsed();
    Ok(vec![Check::from_bool(
        "verify all exits 0 within 10 minutes",
        code == 0 && elapsed <= BUDGET,
        format!("exit {code} in {:.1}s", elapsed.as_secs_f64()),
    )])
}

type Criterion = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let criteria: Vec<(u32, &str, Criterion)> = vec![
        (
            1,
            "Lie relations, n 3..6, r 1..3 (exact equality)",
            Box::new(|_| criterion_1()),
        ),
        (
            2,
            "psi isomorphism structure constants (exact equality)",
            Box::new(|_| criterion_2()),
        ),
        (
            3,
            "module structure: weight, socle, quotient, saturation (exact)",
            Box::new(|_| criterion_3()),
        ),
        (
            4,
            "adjoint-action table, degree <= 5 (exact)",
            Box::new(|_| criterion_4()),
        ),
        (
            5,
            "Fourier laws and symmetry generators (exact witnesses)",
            Box::new(criterion_5),
        ),
        (
            6,
            "duality: pairing, orthogonals, invariance, dimensions (exact)",
            Box::new(criterion_6),
        ),
        (
            7,
            "ambient: identity, constants, slices, equivariance, highest weights (exact)",
            Box::new(criterion_7),
        ),
        (
            8,
            "parser round trip, error positions, CLI exit codes (exact)",
            Box::new(criterion_8),
        ),
        (9, "verify all: exit 0 in <= 600 s", Box::new(|_| criterion_9())),
    ];
    let mut failed = 0;
    for (id, desc, run) in criteria {
        let started = Instant::now();
        let outcome = run(&mut rng);
        let secs = started.elapsed().as_secs_f64();
        let (ok, note) = match outcome {
            Ok(checks) => match first_failure(&checks) {
                None => (true, format!("{} checks", checks.len())),
                Some(f) => (false, f),
            },
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {id}: {} | {desc} | {note} | {secs:.1}s",
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

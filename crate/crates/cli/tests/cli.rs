//! Exit-code contract, output formats and reproducibility of the binary.

use std::process::Command;

fn hsym(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hsym"))
        .args(args)
        .output()
        .expect("run hsym");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn same_seed_gives_identical_reports() {
    let args = [
        "--seed", "7", "verify", "duality", "--n", "4", "--r", "2", "--cases", "20",
    ];
    let (c1, a, _) = hsym(&args);
    let (c2, b, _) = hsym(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn usage_and_parameter_errors_exit_2() {
    assert_eq!(hsym(&["verify"]).0, 2);
    assert_eq!(hsym(&["verify", "lie", "--n", "2"]).0, 2);
    assert_eq!(hsym(&["verify", "lie", "--r", "0"]).0, 2);
    assert_eq!(hsym(&["--format", "yaml", "verify", "lie"]).0, 2);
    let (code, _, err) = hsym(&["symmetry-check", "--n", "3", "--r", "1", "--expr", "X1 + Y2"]);
    assert_eq!(code, 2);
    assert!(err.contains("1:6"), "{err}");
}

#[test]
fn non_symmetry_exits_1() {
    let (code, out, _) = hsym(&[
        "symmetry-check",
        "--n",
        "3",
        "--r",
        "1",
        "--expr",
        "X1*D1^2",
        "--format",
        "text",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("is_symmetry: false"));
}

#[test]
fn real_signature_symmetry() {
    let (code, out, _) = hsym(&[
        "symmetry-check",
        "--n",
        "4",
        "--r",
        "2",
        "--p",
        "2",
        "--expr",
        "X1*D3 + X3*D1",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("hsym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lie.csv");
    let (code, stdout, _) = hsym(&[
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
        "verify",
        "lie",
        "--n",
        "3",
        "--r",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("suite,item,check,passed,detail"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("lie,")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn expression_from_file_and_decompose() {
    let dir = std::env::temp_dir().join(format!("hsym-dec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.txt");
    std::fs::write(&path, "X1^2*X2 + F\n").unwrap();
    let (code, out, _) = hsym(&["decompose", "--n", "3", "--expr", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["recomposes"], true);
    assert_eq!(json["schema_version"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

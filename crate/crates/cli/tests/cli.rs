use std::process::{Command, Output};

fn powinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powinv")).args(args).output().expect("spawn powinv")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn invert_examples() {
    let o = powinv(&["invert", "12", "--radix", "5", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0x71f");

    let o = powinv(&["invert", "1", "--radix", "7", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "0x1");

    let o = powinv(&["invert", "4", "--radix", "6", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not invertible: gcd=2"), "{}", stderr(&o));
}

#[test]
fn invert_algorithms_agree() {
    for alg in ["auto", "koc", "radix", "bitwise"] {
        let o = powinv(&["invert", "0x1234567", "--radix", "2", "--k", "40", "--algorithm", alg]);
        assert_eq!(o.status.code(), Some(0), "{alg}");
        assert_eq!(stdout(&o).trim(), "0x13c2a50657", "{alg}");
    }
    let o = powinv(&["invert", "7", "--radix", "3", "--k", "4", "--algorithm", "bitwise"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_one() {
    for args in [
        vec!["invert", "12z", "--radix", "5", "--k", "5"],
        vec!["invert", "12", "--radix", "1", "--k", "5"],
        vec!["invert", "12", "--radix", "5", "--k", "0"],
        vec!["invert", "12", "--radix", "5"],
        vec!["frobnicate"],
        vec!["verify", "1", "1", "--radix", "limb", "--k", "x"],
    ] {
        assert_eq!(powinv(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn verify_examples() {
    let o = powinv(&["verify", "12", "1823", "--radix", "5", "--k", "5"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(0), "OK".into()));
    let o = powinv(&["verify", "12", "1824", "--radix", "5", "--k", "5"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(3), "FAIL".into()));
    let o = powinv(&["verify", "1", "1", "--radix", "limb", "--k", "9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn invert_then_verify_round_trip() {
    let cases = [
        ("0xfedcba9876543211", "limb", "8"),
        ("987654321987654321", "10", "30"),
        ("0x7", "0xffffffffffffffff", "3"),
        ("12345", "2", "100"),
        ("77", "9", "12"),
    ];
    for (a, n, k) in cases {
        let o = powinv(&["invert", a, "--radix", n, "--k", k]);
        assert_eq!(o.status.code(), Some(0), "{a} {n} {k}");
        let x = stdout(&o).trim().to_string();
        let v = powinv(&["verify", a, &x, "--radix", n, "--k", k]);
        assert_eq!(stdout(&v).trim(), "OK", "{a} {n} {k} -> {x}");
    }
}

#[test]
fn explain_radix_instance() {
    let o = powinv(&["explain", "12", "--radix", "5", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit())).collect();
    assert_eq!(rows.len(), 5, "{out}");
    assert!(out.contains("digits (most significant first): (2 4 2 4 3)_5"), "{out}");
    assert!(out.contains("x = 0x71f"));
}

#[test]
fn explain_koc_instance() {
    let o = powinv(&["explain", "7", "--radix", "2", "--k", "4", "--koc"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows = out.lines().filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit())).count();
    assert_eq!(rows, 5, "{out}");
    assert!(out.contains("a + b_s, s = 1..k: 0x4 0x2 0x1 0x4"), "{out}");
    for b in ["0x1", "-0x3", "-0x5", "-0x6", "-0x3"] {
        assert!(out.contains(b), "{b} missing in {out}");
    }
}

#[test]
fn explain_identity_and_limits() {
    let o = powinv(&["explain", "1", "--radix", "3", "--k", "2"]);
    let out = stdout(&o);
    assert!(out.contains("(0 1)_3"), "{out}");
    let o = powinv(&["explain", "3", "--radix", "5", "--k", "65"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_small_csv() {
    let o = powinv(&["bench", "--sizes", "128", "--reps", "10", "--warmup", "2", "--format", "csv", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body[0], "algorithm,modulus_bits,reps,median_ns,mean_ns");
    assert!(body.len() >= 4);
    assert!(body[1..].iter().all(|l| l.split(',').nth(1) == Some("128")));

    let again = powinv(&["bench", "--sizes", "128", "--reps", "10", "--warmup", "2", "--seed", "7"]);
    let inputs = |s: &str| s.lines().filter(|l| l.starts_with("# input")).map(String::from).collect::<Vec<_>>();
    assert!(!inputs(&out).is_empty());
    assert_eq!(inputs(&out), inputs(&stdout(&again)));
}

#[test]
fn bench_markdown_and_bad_size() {
    let o = powinv(&["bench", "--sizes", "64,128", "--reps", "5", "--warmup", "1", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| modulus bits | radix_limb_base | bitwise_koc | bitwise_radix | hensel_fullwidth_newton |"));
    assert!(out.lines().any(|l| l.starts_with("| 128 |")));
    assert_eq!(powinv(&["bench", "--sizes", "100"]).status.code(), Some(1));
}

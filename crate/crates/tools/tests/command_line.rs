use brace_core::Brace;
use std::fs;
use std::path::{Path, PathBuf};

use brace_tools::cli::run;

fn spec(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../specs")
        .join(name)
        .display()
        .to_string()
}

fn brace(args: &[&str]) -> i32 {
    run(std::iter::once("brace").chain(args.iter().copied()))
}

fn output(dir: &Path, name: &str, args: &[&str]) -> (i32, String) {
    let out: PathBuf = dir.join(name);
    let out_s = out.display().to_string();
    let mut full = vec!["--out", &out_s];
    full.extend_from_slice(args);
    let code = brace(&full);
    (code, fs::read_to_string(&out).unwrap_or_default())
}

#[test]
fn exit_codes() {
    let cf = spec("cf72.json");
    let ns = spec("ns216.json");
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        output(
            dir.path(),
            "a",
            &["verify", "--spec", &cf, "--expect-simple"]
        )
        .0,
        0
    );
    assert_eq!(
        output(
            dir.path(),
            "b",
            &["verify", "--spec", &ns, "--expect-simple"]
        )
        .0,
        1
    );
    assert_eq!(output(dir.path(), "c", &["verify", "--spec", &ns]).0, 0);
    assert_eq!(
        output(
            dir.path(),
            "d",
            &["witness", "--p", "2", "--p1", "3", "--dim", "1"]
        )
        .0,
        1
    );
    assert_eq!(brace(&["verify", "--spec", "/nonexistent/spec.json"]), 2);
    assert_eq!(brace(&["verify"]), 2);
    assert_eq!(brace(&["bounds", "--primes", "5,5"]), 2);
    assert_eq!(brace(&["--version"]), 0);

    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{}").unwrap();
    assert_eq!(brace(&["build", "--spec", &bad.display().to_string()]), 2);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let ns = spec("ns216.json");
    for cmd in [
        &["verify", "--json", "--spec", &ns][..],
        &["export", "--spec", &spec("cf72.json")][..],
    ] {
        let mut seen = Vec::new();
        for (k, threads) in ["1", "3", "1"].iter().enumerate() {
            let mut args = vec!["--threads", threads];
            args.extend_from_slice(cmd);
            let (code, body) = output(dir.path(), &format!("{}-{k}", cmd[0]), &args);
            assert_eq!(code, 0);
            assert!(!body.is_empty());
            seen.push(body);
        }
        assert!(
            seen.windows(2).all(|w| w[0] == w[1]),
            "{} output differs",
            cmd[0]
        );
    }
}

#[test]
fn witness_output_is_a_usable_block() {
    let dir = tempfile::tempdir().unwrap();
    let (code, block) = output(dir.path(), "w", &["witness", "--p", "7", "--p1", "3"]);
    assert_eq!(code, 0);
    let (code, other) = output(dir.path(), "w2", &["witness", "--p", "3", "--p1", "7"]);
    assert_eq!(code, 0);
    let text = format!("{{\"n\": 2, \"blocks\": [{other}, {block}]}}");
    let spec = brace_tools::parse_spec_str(&text).unwrap();
    assert_eq!(spec.build().unwrap().order(), 3usize.pow(7) * 7usize.pow(3));
}

#[test]
fn bounds_table() {
    let dir = tempfile::tempdir().unwrap();
    let (code, body) = output(dir.path(), "b", &["bounds", "--primes", "3,7"]);
    assert_eq!(code, 0);
    assert!(body.starts_with("k=(6,1)\nl=(42,18)\n"), "{body}");
}

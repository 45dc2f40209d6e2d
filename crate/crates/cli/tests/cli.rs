use std::path::PathBuf;
use std::process::{Command, Output};

use sperner_core::construction::truncate;
use sperner_core::order::text::parse_dot;
use sperner_core::TruncationSpec;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_sperner"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn diamond_splits() {
    let (code, out, _) = run(&["check-finite", &fixture("diamond.poset"), "--splitting", "--list-maximal-antichains"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("maximal-antichains: 3"));
    assert!(out.contains("splitting: true"));
}

#[test]
fn depth_two_tree_fails_on_the_top_pair() {
    let (code, out, _) = run(&[
        "check-finite",
        &fixture("binary_tree_depth2.poset"),
        "--splitting",
        "--strongly-dense",
    ]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("splitting: false antichain={0,1}"), "{out}");
    assert!(out.contains("strongly-dense: false interval=(e,00)"), "{out}");
}

#[test]
fn cycle_is_an_input_error() {
    let (code, _, err) = run(&["check-finite", &fixture("cycle.poset")]);
    assert_eq!(code, 2);
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, _) = run(&["check-finite", "/nonexistent/x.poset"]);
    assert_eq!(code, 2);
}

#[test]
fn c_leq_examples() {
    for (x, y, expected) in [
        ("(0,0)", "(0,01)", "<"),
        ("(0,01)", "(0,0)", ">"),
        ("(1,(0,e),0)", "(1,(0,e),1)", "incomparable"),
        ("(2,(0,e),0)", "(1,(0,e),0)", "<"),
        ("(0,e)", "(0,e)", "="),
    ] {
        let (code, out, _) = run(&["c-leq", x, y]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), expected, "{x} vs {y}");
    }
    let (code, _, err) = run(&["c-leq", "(1,(0,e),e)", "(0,e)"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn c_truncate_counts() {
    for (levels, depth, elems) in [("0", "1", 3), ("2", "1", 27), ("0", "0", 1)] {
        let (code, out, _) = run(&["c-truncate", "--levels", levels, "--depth", depth]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("elem ")).count(), elems, "({levels},{depth})");
        if elems == 1 {
            assert_eq!(out.lines().filter(|l| l.starts_with("cover ")).count(), 0);
        }
    }
}

#[test]
fn c_truncate_over_capacity_is_refused() {
    let (code, _, err) = run(&["c-truncate", "--levels", "4", "--depth", "3"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn c_truncate_dot_reimports() {
    let dir = std::env::temp_dir().join(format!("sperner-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c21.dot");
    let (code, _, err) = run(&[
        "c-truncate",
        "--levels",
        "2",
        "--depth",
        "1",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let back = parse_dot(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let expected = truncate(TruncationSpec::new(2, 1)).unwrap();
    assert!(back.same_order_as(expected.poset()));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn c_claims_pass() {
    let (code, out, _) = run(&["c-claims", "--levels", "2", "--depth", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("elements=343"));
    assert!(out.contains("w=(1,(0,e),01)"));
    assert!(out.contains("w=(0,e)"));
    assert!(out.contains("partitions_refuted=4/4"));
    assert!(out.trim_end().ends_with("claims pass"));
}

#[test]
fn verify_aeg_small_runs() {
    let (code, out, _) = run(&["verify-aeg", "--size", "8", "--count", "200", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("summary samples=200"), "{out}");
    assert!(out.contains("failures=0"));

    let (code, out, _) = run(&["verify-aeg", "--size", "1", "--count", "1"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn verify_aeg_respects_the_bound() {
    let (code, _, _) = run(&["verify-aeg", "--size", "30"]);
    assert_eq!(code, 2);
}

#[test]
fn antichain_flag_colours_the_split() {
    let dir = std::env::temp_dir().join(format!("sperner-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("diamond.dot");
    let (code, out, _) = run(&[
        "check-finite",
        &fixture("diamond.poset"),
        "--antichain",
        "a,b",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("\"a\" [style=filled, fillcolor=lightblue]"));
    assert!(dot.contains("\"b\" [style=filled, fillcolor=salmon]"));
    std::fs::remove_dir_all(dir).ok();
}

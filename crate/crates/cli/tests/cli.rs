use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamari"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tamari"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).to_string()
}

#[test]
fn count() {
    assert_eq!(ok(&["count", "--size", "6"]), "2530\n");
    assert_eq!(
        ok(&["count", "--size", "4", "--enumerate"]),
        "n  enumerated  formula  match\n4          68       68   true\n"
    );
}

#[test]
fn phi_small() {
    let out = ok(&[
        "phi",
        "--max-size",
        "2",
        "--check-symmetry",
        "--check-equations",
    ]);
    assert_eq!(
        out,
        "1+1*y*x*z+1*y^2*x*z^2+1*y^2*x^2*z+1*y^2*x^2*z^2\n\
         symmetry: true\nfirst equation: true\nsecond equation: true\n"
    );
}

#[test]
fn beta_worked_example() {
    let input = "6: 3->2, 5->4, 1->2, 2->4, 3->4, 5->6";
    let output = "6: 2->1, 3->2, 4->3, 5->2, 6->1, 2->6, 3->6, 4->5, 5->6\n";
    assert_eq!(ok(&["beta", "--poset", input]), output);
    let back = run_stdin(&["beta", "--inverse"], output);
    assert_eq!(stdout(&back), format!("{input}\n"));
}

#[test]
fn involution_table() {
    let out = ok(&["check-involution", "--max-size", "3"]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().skip(1).all(|l| l.ends_with("true")));
}

#[test]
fn conversions() {
    assert_eq!(
        ok(&["convert", "--from", "tree", "--to", "dyck", "--input", "(.(..))"]),
        "UUDD\n"
    );
    assert_eq!(
        ok(&["convert", "--from", "dyck", "--to", "tree", "--input", "UDUD"]),
        "((..).)\n"
    );
    assert_eq!(
        ok(&[
            "convert",
            "--from",
            "tree-pair",
            "--to",
            "poset",
            "--input",
            "((..).), ((..).)"
        ]),
        "2: 1->2\n"
    );
    let pair = ok(&[
        "convert",
        "--from",
        "poset",
        "--to",
        "tree-pair",
        "--input",
        "4: 2->1, 3->1, 3->4",
    ]);
    let poset = ok(&[
        "convert",
        "--from",
        "tree-pair",
        "--to",
        "poset",
        "--input",
        pair.trim(),
    ]);
    assert_eq!(poset, "4: 2->1, 3->1, 3->4\n");
    assert_eq!(
        ok(&["convert", "--from", "flow", "--to", "poset", "--input", "(-1 (1))"]),
        "2: 2->1\n"
    );
    assert_eq!(
        ok(&["convert", "--from", "poset", "--to", "flow", "--input", "2: 2->1"]),
        "(-1 (1))\n"
    );
}

#[test]
fn flows() {
    let out = ok(&["flows", "--forest", "(())()(()())", "--closed"]);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(out.lines().last(), Some("(0 (0)) (0) (0 (0) (0))"));
    assert_eq!(
        ok(&["flows", "--forest", "(())", "--exit-rate", "1", "--count"]),
        "3\n"
    );
    assert_eq!(
        ok(&["flows", "--forest", "(())", "--exit-rate", "1"]),
        "(-1 (2))\n(0 (1))\n(1 (0))\n"
    );
}

#[test]
fn flow_theorem() {
    let out = ok(&["verify-flow-theorem", "--max-size", "3"]);
    assert_eq!(out.lines().count(), 1 + 1 + 2 + 5);
    assert!(out.contains("(()())             3      3   true"));
}

#[test]
fn render() {
    let out = ok(&[
        "render",
        "--dot",
        "--kind",
        "poset",
        "--input",
        "4: 2->1, 3->1, 3->4",
    ]);
    assert_eq!(out.matches("color=red").count(), 2);
    assert_eq!(out.matches("color=blue").count(), 1);
    let out = ok(&["render", "--dot", "--kind", "flow", "--input", "(-1 (1))"]);
    assert!(out.contains("1 [label=\"1:-1\"]"));
    assert!(out.contains("2 -> 1 [label=\"1\"]"));
}

#[test]
fn exit_codes() {
    // malformed text
    assert_eq!(run(&["beta", "--poset", "2 1->2"]).status.code(), Some(2));
    assert_eq!(
        run(&["convert", "--from", "tree", "--to", "dyck", "--input", "(.x)"])
            .status
            .code(),
        Some(2)
    );
    // well-formed but invalid objects
    assert_eq!(
        run(&["beta", "--poset", "2: 1->2, 2->1"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["convert", "--from", "dyck", "--to", "tree", "--input", "DU"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&[
            "convert",
            "--from",
            "tree-pair",
            "--to",
            "poset",
            "--input",
            "(.(..)) ((..).)"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&["convert", "--from", "flow", "--to", "poset", "--input", "(0 (1))"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["flows", "--forest", "(()", "--closed"]).status.code(),
        Some(2)
    );
    // usage errors
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["flows", "--forest", "()"]).status.code(), Some(2));
    assert_eq!(
        run(&["convert", "--from", "tree", "--to", "flow", "--input", "(..)"])
            .status
            .code(),
        Some(2)
    );
    let e = run(&["beta", "--poset", "2 1->2"]);
    assert!(String::from_utf8_lossy(&e.stderr).contains("line 1, column 3"));
}

#[test]
fn byte_stable_output() {
    let args = ["phi", "--max-size", "4", "--check-symmetry"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify-flow-theorem", "--max-size", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

//! Byte-exact CLI contract: each invocation below must keep producing the
//! frozen output, and the exit-code scheme must hold (0 ok, 2 bad input,
//! 3 non-unit, 4 no real solution).

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gpdmf"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
        out.status.code().expect("binary exits normally"),
    )
}

fn check_golden(args: &[&str], golden: &str) {
    let (stdout, stderr, code) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    assert_eq!(stdout, golden, "stdout drifted for args {args:?}");
}

#[test]
fn golden_op_sub() {
    check_golden(
        &["op", "sub", "<3; 4, 1, 1, 2>", "<1; 1, 1, 0, 0>"],
        include_str!("golden/op_sub.txt"),
    );
}

#[test]
fn golden_op_inv() {
    check_golden(
        &["op", "inv", "<2; e, e, 1, 1>"],
        include_str!("golden/op_inv.txt"),
    );
}

#[test]
fn golden_op_scale_zero() {
    check_golden(
        &["op", "scale", "0", "<5; 2, 3, 1, -1>"],
        include_str!("golden/op_scale_zero.txt"),
    );
}

#[test]
fn golden_op_pow() {
    check_golden(
        &["op", "pow", "<2; e, 1, 1, 1>", "3"],
        include_str!("golden/op_pow.txt"),
    );
}

#[test]
fn golden_solve_linear_real() {
    check_golden(
        &["solve", "linear-real", "2", "<1; 1, 1, 0, 0>", "<3; 4, 1, 1, 2>"],
        include_str!("golden/solve_linear_real.txt"),
    );
}

#[test]
fn golden_solve_linear_fuzzy() {
    check_golden(
        &[
            "solve",
            "linear-fuzzy",
            "<2; e, e, 1, 1>",
            "<1; 1, 1, 0, 0>",
            "<3; 4, 1, 1, 2>",
        ],
        include_str!("golden/solve_linear_fuzzy.txt"),
    );
}

#[test]
fn golden_solve_quadratic_text() {
    check_golden(
        &[
            "solve",
            "quadratic",
            "<1; e, e, 1, 1>",
            "<2; e, e, 1, 2>",
            "<-3; 1, 1, 0, -1>",
        ],
        include_str!("golden/solve_quadratic.txt"),
    );
}

#[test]
fn golden_solve_quadratic_json() {
    check_golden(
        &[
            "solve",
            "quadratic",
            "--json",
            "<1; e, e, 1, 1>",
            "<2; e, e, 1, 2>",
            "<-3; 1, 1, 0, -1>",
        ],
        include_str!("golden/solve_quadratic.json"),
    );
}

#[test]
fn golden_sample_csv() {
    check_golden(
        &["sample", "<1; 2, 1, 0.5, 1>", "--points", "201"],
        include_str!("golden/sample_201.csv"),
    );
}

#[test]
fn golden_fit() {
    check_golden(
        &["fit", "-1", "1", "2", "0:0.5", "1.5:0.5"],
        include_str!("golden/fit.txt"),
    );
}

#[test]
fn golden_coords_to() {
    check_golden(
        &["coords", "to", "<1; 2, 1, 0.5, 1>"],
        include_str!("golden/coords_to.txt"),
    );
}

#[test]
fn coords_round_trip_through_text() {
    let (coords_line, _, code) = run(&["coords", "to", "<1; 2, 1, 0.5, 1>"]);
    assert_eq!(code, 0);
    let mut args = vec!["coords", "from"];
    args.extend(coords_line.trim().split(' '));
    let (tuple, _, code) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(tuple, "<1; 2, 1, 0.5, 1>\n");
}

#[test]
fn exit_code_2_on_parse_error() {
    let (_, stderr, code) = run(&["op", "add", "<1; 2, 1>", "<1; 1, 1, 0, 0>"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("4 comma-separated fields"), "stderr: {stderr}");
}

#[test]
fn exit_code_2_on_invalid_tuple() {
    let (_, stderr, code) = run(&["op", "neg", "<1; -2, 1, 0.5, 1>"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid fuzzy tuple"), "stderr: {stderr}");
}

#[test]
fn exit_code_3_on_non_unit_inversion() {
    let (_, stderr, code) = run(&["op", "inv", "<2; 1, 2, 1, 1>"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("not a unit"), "stderr: {stderr}");

    let (_, _, code) = run(&["op", "div", "<1; 2, 1, 0.5, 1>", "<0; 2, 2, 1, 1>"]);
    assert_eq!(code, 3);

    let (_, _, code) = run(&[
        "solve",
        "linear-fuzzy",
        "<2; 2, 3, 1, 0>",
        "<1; 1, 1, 0, 0>",
        "<3; 4, 1, 1, 2>",
    ]);
    assert_eq!(code, 3);
}

#[test]
fn exit_code_4_on_no_real_solution() {
    let (stdout, _, code) = run(&[
        "solve",
        "quadratic",
        "<1; e, e, 1, 1>",
        "<0; e, e, 1, 1>",
        "<1; e, e, 1, 1>",
    ]);
    assert_eq!(code, 4);
    assert_eq!(stdout, "no real solution (component x)\n");
}

#[test]
fn digits_flag_controls_rendering() {
    let (stdout, _, code) = run(&["--digits", "3", "op", "inv", "<2; e, e, 1, 1>"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "<0.5; 2.718, 2.718, 1, 1>\n");

    let (_, stderr, code) = run(&["--digits", "0", "op", "neg", "<1; 1, 1, 0, 0>"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("1..=17"), "stderr: {stderr}");
}

#[test]
fn quadratic_free_component_note_goes_to_stderr() {
    // the d- equation has all three coefficients zero (a's d- support is 1,
    // b's and c's too), so that component is reported as unconstrained
    let (stdout, stderr, code) = run(&[
        "solve",
        "quadratic",
        "<1; 1, e, 1, 1>",
        "<0; 1, 1, 1, 1>",
        "<0; 1, 1, 0, 0>",
    ]);
    assert_eq!(code, 0);
    assert!(stderr.contains("unconstrained"), "stderr: {stderr}");
    assert!(stderr.contains("d-"), "stderr: {stderr}");
    for line in stdout.lines() {
        assert!(line.starts_with('<') && line.ends_with('>'));
    }
}

#[test]
fn closed_stdout_pipe_ends_quietly() {
    // `gpdmf ... | head` closes our stdout mid-stream; that must truncate
    // the output cleanly, not panic with a broken-pipe error
    use std::io::Read;
    use std::process::Stdio;

    let mut child = Command::new(env!("CARGO_BIN_EXE_gpdmf"))
        .args(["sample", "<1; 2, 1, 0.5, 1>", "--points", "100000"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");

    // read one chunk, then hang up while the child is still writing
    let mut stdout = child.stdout.take().expect("stdout piped");
    let mut buf = [0u8; 256];
    let n = stdout.read(&mut buf).expect("first chunk readable");
    assert!(n > 0, "no output before hangup");
    drop(stdout);

    let status = child.wait().expect("child exits");
    assert!(status.success(), "closed pipe is not an error: {status:?}");
    let mut stderr = String::new();
    child
        .stderr
        .take()
        .expect("stderr piped")
        .read_to_string(&mut stderr)
        .expect("stderr is utf-8");
    assert!(stderr.is_empty(), "expected silence on stderr, got: {stderr}");
}

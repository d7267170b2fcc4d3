use std::path::{Path, PathBuf};
use std::process::Command;

use bkrel_core::lattice::Lattice;
use bkrel_core::morphism::{
    amphimorphism, solve_f_backward, solve_f_forward, solve_g_backward, solve_g_forward,
    solve_r_lower, solve_r_upper, solve_s_lower, solve_s_upper, MorphismSquare,
};
use bkrel_core::relation::{io, Relation};

fn data(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(file)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bkrel(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bkrel"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn load(file: &str) -> Relation {
    io::load(data(file), &Lattice::Lukasiewicz).unwrap()
}

/// `--lattice` plus the square's relation files, leaving out `omit` (if any).
fn square_args(lattice: &str, omit: Option<&str>) -> Vec<String> {
    let mut args = vec!["--lattice".to_string(), lattice.to_string()];
    for name in ["R", "S", "F", "G"] {
        if omit != Some(name) {
            args.push(format!("--{name}"));
            args.push(data(&format!("{name}.csv")).display().to_string());
        }
    }
    args
}

fn eval_square(expr: &str) -> Run {
    let mut args = vec!["eval".to_string(), "--lattice".into(), "lukasiewicz".into()];
    for name in ["R", "S", "F", "G"] {
        args.push("--rel".into());
        args.push(format!("{name}={}", data(&format!("{name}.csv")).display()));
    }
    args.push(expr.into());
    bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

fn parse_csv(text: &str) -> Relation {
    io::read_csv(text.as_bytes(), &Lattice::Lukasiewicz).unwrap()
}

#[test]
fn composition_matches_golden_file() {
    let run = eval_square("R o G");
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        run.stdout,
        std::fs::read_to_string(data("R_o_G.golden.csv")).unwrap()
    );
}

#[test]
fn bound_expressions_typed_as_text_match_the_solvers() {
    let (r, s, f, g) = (load("R.csv"), load("S.csv"), load("F.csv"), load("G.csv"));
    let cases = [
        ("F <| (S |> G')", solve_r_upper(&s, &f, &g).unwrap()),
        ("F' <| (R |> G)", solve_s_upper(&r, &f, &g).unwrap()),
        ("R <| (G <| S')", solve_f_forward(&r, &s, &g).unwrap()),
        ("R' <| (F <| S)", solve_g_forward(&r, &s, &f).unwrap()),
        ("(R |> G) |> S'", solve_f_backward(&r, &s, &g).unwrap()),
        ("(R' |> F) |> S", solve_g_backward(&r, &s, &f).unwrap()),
        ("F o S o G'", solve_r_lower(&s, &f, &g).unwrap()),
        ("F' o R o G", solve_s_lower(&r, &f, &g).unwrap()),
    ];
    for (expr, expected) in cases {
        let run = eval_square(expr);
        assert_eq!(run.code, 0, "{expr}: {}", run.stderr);
        let got = parse_csv(&run.stdout);
        assert_eq!(got, expected, "{expr}");
        assert_eq!(got.name(), expr);
    }
}

#[test]
fn solve_prints_the_same_bounds() {
    let (r, s, f, g) = (load("R.csv"), load("S.csv"), load("F.csv"), load("G.csv"));
    let cases = [
        ("S", "backward", solve_s_upper(&r, &f, &g).unwrap()),
        ("R", "forward", solve_r_upper(&s, &f, &g).unwrap()),
        ("F", "backward", solve_f_backward(&r, &s, &g).unwrap()),
        ("G", "forward", solve_g_forward(&r, &s, &f).unwrap()),
    ];
    for (unknown, direction, expected) in cases {
        let mut args = vec![
            "solve".to_string(),
            unknown.into(),
            "--direction".into(),
            direction.into(),
        ];
        args.extend(square_args("lukasiewicz", Some(unknown)));
        let run = bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(run.code, 0, "{unknown}: {}", run.stderr);
        assert_eq!(parse_csv(&run.stdout), expected);
    }
}

#[test]
fn statements_agree_with_the_compatibility_report() {
    let m =
        MorphismSquare::new(load("R.csv"), load("S.csv"), load("F.csv"), load("G.csv")).unwrap();
    let report = amphimorphism(&m);
    let forward = eval_square("F' o R o G <= S");
    let via_bound = eval_square("R <= F <| (S |> G')");
    let backward = eval_square("F o S o G' <= R");
    assert_eq!(forward.stdout.trim(), report.forward.to_string());
    assert_eq!(via_bound.stdout.trim(), report.forward.to_string());
    assert_eq!(backward.stdout.trim(), report.backward.to_string());
    assert_eq!(forward.code, if report.forward { 0 } else { 1 });
    assert_eq!(backward.code, if report.backward { 0 } else { 1 });
}

#[test]
fn check_reports_json_and_exit_codes() {
    let mut args = vec!["check".to_string(), "forward".into()];
    args.extend(square_args("lukasiewicz", None));
    let run = bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let json: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(json["forward"], false);
    assert_eq!(json["backward"], true);
    assert_eq!(json["forward_violation"]["row_label"], "c1");
    assert_eq!(run.code, 1);

    args[1] = "backward".into();
    assert_eq!(
        bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>()).code,
        0
    );
}

#[test]
fn identity_square_is_forward_compatible() {
    let e = data("E.csv").display().to_string();
    let run = bkrel(&[
        "check", "forward", "--R", &e, "--S", &e, "--F", &e, "--G", &e,
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let json: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(json["forward"], true);
    assert_eq!(json["bothways"], true);
}

#[test]
fn solved_s_passes_the_backward_check() {
    let dir = tempfile::tempdir().unwrap();
    let without_s = square_args("lukasiewicz", Some("S"));
    let mut args = vec![
        "solve".to_string(),
        "S".into(),
        "--direction".into(),
        "backward".into(),
    ];
    args.extend(without_s.iter().cloned());
    let run = bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let solved = dir.path().join("S_max.csv");
    std::fs::write(&solved, &run.stdout).unwrap();

    let mut args = vec!["check".to_string(), "backward".into()];
    args.extend(without_s);
    args.extend(["--S".to_string(), solved.display().to_string()]);
    let run = bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run.code, 0, "{}", run.stdout);
}

#[test]
fn lattice_validation_exit_codes() {
    let broken = bkrel(&[
        "lattice",
        "validate",
        data("broken_chain.json").to_str().unwrap(),
    ]);
    assert_eq!(broken.code, 1);
    assert!(
        broken.stdout.contains("FAIL tensor-associative"),
        "{}",
        broken.stdout
    );
    assert!(
        broken.stdout.contains("witness (1/3, 2/3, 2/3)"),
        "{}",
        broken.stdout
    );

    let json = bkrel(&[
        "lattice",
        "validate",
        "--json",
        data("broken_chain.json").to_str().unwrap(),
    ]);
    let report: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(json.code, 1);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["passed"] == false));

    let table = format!("table:{}", data("three_chain.json").display());
    assert_eq!(bkrel(&["lattice", "validate", &table]).code, 0);
    for builtin in ["godel", "lukasiewicz", "product", "nilmin", "boolean"] {
        assert_eq!(
            bkrel(&["lattice", "validate", builtin]).code,
            0,
            "{builtin}"
        );
    }
}

#[test]
fn csv_round_trips_through_eval() {
    let run = eval_square("R");
    assert_eq!(parse_csv(&run.stdout), load("R.csv"));
    let twice = eval_square("R''");
    assert_eq!(parse_csv(&twice.stdout), load("R.csv"));

    // Element names survive on table lattices.
    let table = format!("table:{}", data("three_chain.json").display());
    let t = format!("T={}", data("T.csv").display());
    let run = bkrel(&["eval", "--lattice", &table, "--rel", &t, "T"]);
    assert_eq!(run.stdout, "T,maybe,yes\nno,yes,maybe\nyes,no,yes\n");
}

#[test]
fn json_output() {
    let mut args = vec![
        "eval".to_string(),
        "--json".into(),
        "--lattice".into(),
        "lukasiewicz".into(),
    ];
    args.extend(["--rel".into(), format!("R={}", data("R.csv").display())]);
    args.push("R'".into());
    let run = bkrel(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let json: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(json["name"], "R'");
    assert_eq!(json["source"], serde_json::json!(["b1", "b2", "b3"]));
    assert_eq!(json["matrix"][0][1], 0.75);
}

#[test]
fn usage_and_io_errors_exit_two() {
    let non_assoc = bkrel(&["eval", "A <| B |> C"]);
    assert_eq!(non_assoc.code, 2);
    assert!(
        non_assoc.stderr.contains("not associative"),
        "{}",
        non_assoc.stderr
    );
    assert!(non_assoc.stdout.is_empty());

    let syntax = bkrel(&["eval", "R o"]);
    assert_eq!(syntax.code, 2);
    assert!(syntax.stderr.contains("column 4"), "{}", syntax.stderr);

    assert_eq!(eval_square("R o X").code, 2);
    assert_eq!(eval_square("R <| S").code, 2);
    assert_eq!(
        bkrel(&["eval", "--rel", "R=/nonexistent/R.csv", "R"]).code,
        2
    );
    assert_eq!(bkrel(&["eval", "--lattice", "hamming", "R"]).code, 2);
    assert_eq!(bkrel(&["frobnicate"]).code, 2);

    let mut no_greatest = vec![
        "solve".to_string(),
        "R".into(),
        "--direction".into(),
        "backward".into(),
    ];
    no_greatest.extend(square_args("lukasiewicz", Some("R")));
    let run = bkrel(&no_greatest.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("no greatest"), "{}", run.stderr);
}

#[test]
fn search_exit_codes() {
    let law3 = bkrel(&["search", "assoc3", "--lattice", "boolean"]);
    assert_eq!(law3.code, 1);
    let json: serde_json::Value = serde_json::from_str(&law3.stdout).unwrap();
    assert_eq!(json["verdict"], "counterexample");
    assert_eq!(json["instances_checked"], 1);

    let law2 = bkrel(&[
        "search",
        "assoc2",
        "--lattice",
        "lukasiewicz",
        "--sizes",
        "1,2,1,2",
    ]);
    assert_eq!(law2.code, 0, "{}", law2.stderr);
    let json: serde_json::Value = serde_json::from_str(&law2.stdout).unwrap();
    assert_eq!(json["verdict"], "verified-exhaustive");

    let sampled = bkrel(&[
        "search",
        "bootstrap",
        "--lattice",
        "godel",
        "--budget",
        "100",
    ]);
    assert_eq!(sampled.code, 0);
    assert!(sampled.stdout.contains("verified-sampled"));

    let max = bkrel(&[
        "search",
        "maximality",
        "--lattice",
        "boolean",
        "--which",
        "F",
        "--sizes",
        "1,2,2,1",
    ]);
    assert_eq!(max.code, 0, "{}", max.stderr);
    assert_eq!(
        bkrel(&["search", "maximality", "--lattice", "boolean"]).code,
        2
    );
    assert_eq!(bkrel(&["search", "bootstrap", "--sizes", "2,2"]).code, 2);
}

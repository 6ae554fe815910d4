use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homlie::document::{emit_algebra, parse_algebra};
use homlie::fixtures;
use homlie::series::{compute_series, SeriesKind};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).to_path_buf()
}

fn data(name: &str) -> String {
    root()
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn homlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    homlie(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(homlie(args).stdout).expect("utf-8")
}

/// Compare against `tests/golden/<name>`; `HOMLIE_BLESS=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("HOMLIE_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn spec_examples() {
    assert_eq!(
        stdout(&["class", "solvable", &data("family-nil-6.hla")]),
        "solvable: class 3\n"
    );
    let out = homlie(&["class", "nilpotent", &data("c2.hla")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "not nilpotent (stabilized at dim 1)\n"
    );
    let out = homlie(&[
        "morphism",
        &data("matrix.hla"),
        &data("c2.hla"),
        "--matrix",
        "1,0;0,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "isomorphism\n");
}

#[test]
fn documents_load_as_the_fixtures() {
    let c2 = fixtures::c2_fixture().algebra;
    for f in ["c2.hla", "c2-matrix-form.hla"] {
        let l = parse_algebra(&std::fs::read_to_string(data(f)).unwrap()).unwrap();
        assert!(l.same_structure(&c2), "{f}");
    }
    let l = parse_algebra(&std::fs::read_to_string(data("abelian-3-matrix.hla")).unwrap()).unwrap();
    assert!(l.same_structure(&fixtures::abelian(3).algebra));
    let out = homlie(&["check", &data("inconsistent-skew.hla")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("inconsistent-skew.hla:7:1: bracket inconsistent with line 6"),
        "{err}"
    );
}

#[test]
fn exit_code_contract() {
    let c2 = data("c2.hla");
    let f6 = data("family-nil-6.hla");
    let ce = data("counterexample.hla");
    let m = data("matrix.hla");
    let bad = data("not-multiplicative.hla");
    let broken = data("inconsistent-skew.hla");
    let cases: &[(&[&str], i32)] = &[
        (&["check", &c2], 0),
        (&["check", &bad], 2),
        (&["check", &broken], 1),
        (&["check", "/nonexistent/file.hla"], 1),
        (&["series", "derived", &c2], 0),
        (&["series", "lower-central", &c2], 2),
        (&["series", "derived", &bad], 3),
        (&["--max-steps", "1", "series", "derived", &f6], 3),
        (&["class", "solvable", &f6], 0),
        (&["class", "nilpotent", &c2], 2),
        (&["class", "nilpotent", &bad], 3),
        (&["quotient", &ce, "--ideal", "1,0"], 0),
        (&["quotient", &ce, "--ideal", "0,1"], 3),
        (&["quotient", &ce, "--ideal", "1,0,0"], 1),
        (&["direct-sum", &c2, &f6], 0),
        (&["direct-sum", &c2, &broken], 1),
        (&["restrict", &ce, "--subspace", "1,0"], 0),
        (&["restrict", &c2, "--subspace", "1,0"], 3),
        (&["restrict", &c2, "--subspace", "1,x"], 1),
        (&["morphism", &m, &c2, "--matrix", "1,0;0,1"], 0),
        (&["morphism", &m, &c2, "--matrix", "1,0;0,2"], 2),
        (&["morphism", &m, &c2, "--matrix", "1,0"], 1),
        (&["example", "c2"], 0),
        (&["example", "family-nil", "--n", "4"], 3),
        (&["example", "no-such-example"], 1),
        (&["example", "c2", "--n", "3"], 1),
        (&[], 1),
        (&["frobnicate"], 1),
        (&["--help"], 0),
        (&["--version"], 0),
    ];
    for (args, expected) in cases {
        assert_eq!(code(args), *expected, "homlie {}", args.join(" "));
    }
}

#[test]
fn refusal_messages() {
    let out = homlie(&["quotient", &data("counterexample.hla"), "--ideal", "0,1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a Hom-Lie ideal"), "{err}");
    let out = homlie(&["class", "solvable", &data("not-multiplicative.hla")]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("multiplicative: false"), "{err}");
}

#[test]
fn golden_text_outputs() {
    let c2 = data("c2.hla");
    let cases: &[(&str, &[&str])] = &[
        ("check-c2.txt", &["check", &c2]),
        (
            "check-not-multiplicative.txt",
            &["check", &data("not-multiplicative.hla")],
        ),
        ("check-poly-4.txt", &["check", &data("poly-4.hla")]),
        ("series-derived-c2.txt", &["series", "derived", &c2]),
        (
            "series-lower-central-family-nil-6.txt",
            &["series", "lower-central", &data("family-nil-6.hla")],
        ),
        (
            "quotient-counterexample.hla",
            &["quotient", &data("counterexample.hla"), "--ideal", "1,0"],
        ),
        (
            "direct-sum-c2-counterexample.hla",
            &["direct-sum", &c2, &data("counterexample.hla")],
        ),
        (
            "restrict-poly-4.hla",
            &[
                "restrict",
                &data("poly-4.hla"),
                "--subspace",
                "1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,1,0",
            ],
        ),
        (
            "morphism-not.txt",
            &["morphism", &data("matrix.hla"), &c2, "--matrix", "1,0;0,2"],
        ),
        ("example-poly-3.txt", &["example", "poly", "--n", "3"]),
        ("example-matrix.txt", &["example", "matrix"]),
        ("class-json-c2.json", &["--json", "class", "nilpotent", &c2]),
        (
            "morphism-json.json",
            &[
                "--json",
                "morphism",
                &data("matrix.hla"),
                &c2,
                "--matrix",
                "1,0;0,2",
            ],
        ),
    ];
    for (name, args) in cases {
        golden(name, &stdout(args));
    }
}

#[test]
fn fixture_documents_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<(Vec<String>, homlie::HomLieAlgebra)> = fixtures::catalogue()
        .into_iter()
        .map(|f| {
            let (name, n) = match f.name.as_str() {
                "c2" => ("c2".to_string(), None),
                "matrix" => ("matrix".into(), None),
                "counterexample-2" => ("counterexample".into(), None),
                other => {
                    let (base, n) = other.rsplit_once('-').unwrap();
                    (base.to_string(), Some(n.to_string()))
                }
            };
            let mut args = vec!["example".to_string(), name, "--emit".into()];
            if let Some(n) = n {
                args.extend(["--n".into(), n]);
            }
            (args, f.algebra)
        })
        .collect();
    for (args, algebra) in runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let text = stdout(&args);
        assert_eq!(text, emit_algebra(&algebra), "{args:?}");
        let parsed = parse_algebra(&text).unwrap();
        assert!(parsed.same_structure(&algebra));
        assert_eq!(emit_algebra(&parsed), text);
        // the emitted file is accepted by the CLI and re-emitted unchanged
        let path = dir.path().join("doc.hla");
        std::fs::write(&path, &text).unwrap();
        let p = path.to_string_lossy();
        let sum = stdout(&["direct-sum", &p, &data("c2.hla")]);
        assert_eq!(
            sum,
            emit_algebra(&homlie::constructions::direct_sum(
                &parsed,
                &fixtures::c2_fixture().algebra
            ))
        );
    }
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("../../docs/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

#[test]
fn json_reports_validate_against_schema() {
    let v = schema();
    let c2 = data("c2.hla");
    let invocations: &[&[&str]] = &[
        &["check", &c2],
        &["check", &data("poly-4.hla")],
        &["check", &data("not-multiplicative.hla")],
        &["series", "derived", &c2],
        &["series", "lower-central", &data("family-nil-6.hla")],
        &["class", "solvable", &data("family-nil-6.hla")],
        &["class", "nilpotent", &c2],
        &["quotient", &data("counterexample.hla"), "--ideal", "1,0"],
        &["direct-sum", &c2, &c2],
        &["restrict", &data("counterexample.hla"), "--subspace", "1,0"],
        &["morphism", &data("matrix.hla"), &c2, "--matrix", "1,0;0,1"],
        &["morphism", &data("matrix.hla"), &c2, "--matrix", "1,0;0,2"],
        &["example", "matrix"],
        &["example", "random", "--n", "5", "--seed", "9"],
        &["example", "abelian", "--n", "0", "--emit"],
    ];
    for args in invocations {
        let value = json(args);
        let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn json_series_matches_library() {
    for f in fixtures::catalogue() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.hla");
        std::fs::write(&path, emit_algebra(&f.algebra)).unwrap();
        let p = path.to_string_lossy();
        for (kind, arg) in [
            (SeriesKind::Derived, "derived"),
            (SeriesKind::LowerCentral, "lower-central"),
        ] {
            let lib = compute_series(&f.algebra, kind, None).unwrap();
            let value = json(&["series", arg, &p]);
            assert_eq!(
                value["series"],
                serde_json::to_value(&lib).unwrap(),
                "{} {arg}",
                f.name
            );
            let property = if kind == SeriesKind::Derived {
                "solvable"
            } else {
                "nilpotent"
            };
            let class = json(&["class", property, &p]);
            assert_eq!(class["dims"], serde_json::to_value(&lib.dims).unwrap());
            assert_eq!(class["verdict"], serde_json::to_value(lib.verdict).unwrap());
        }
    }
}

//! End-to-end tests of the `reid` binary: the documented example outputs,
//! golden files, agreement between text and JSON modes, and a corpus of
//! malformed inputs with their exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn reid(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_reid"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn data(name: &str) -> String {
    format!("tests/data/{name}")
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn documented_examples() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["classify", "catalog:axb", "--aut", "1 0; 3 2"],
            "R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim 1)",
        ),
        (
            &["torus", "--matrix", "2 1; 1 1"],
            "R = 1; Fix trivial (|det(A−I)| = 1)",
        ),
        (
            &["rinfty", "catalog:t", "--n", "4"],
            "topological R∞ certified: split solvable, dim(G/N) = 3 odd",
        ),
        (
            &["sl2-verify"],
            "identity verified: entry(1,2)+entry(2,1) = r",
        ),
    ];
    for (args, headline) in cases {
        let run = reid(args);
        assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
        assert_eq!(first_line(&run.stdout), headline, "{args:?}");
    }
}

/// Command lines whose text output is pinned in `tests/golden`.
const GOLDEN: &[(&str, &[&str])] = &[
    (
        "classify_axb",
        &["classify", "catalog:axb", "--aut", "1 0; 3 2"],
    ),
    (
        "classify_heisenberg",
        &[
            "classify",
            "catalog:heisenberg",
            "--aut",
            "2 0 0; 0 3 0; 0 0 6",
        ],
    ),
    ("torus_cat_map", &["torus", "--matrix", "2 1; 1 1"]),
    (
        "torus_rank_one",
        &["torus", "--matrix", "3 2 0; 1 1 0; 0 0 1"],
    ),
    ("torus_negation", &["torus", "--matrix", "-1 0; 0 -1"]),
    ("rinfty_t4", &["rinfty", "catalog:t", "--n", "4"]),
    ("rinfty_t3", &["rinfty", "catalog:t", "--n", "3"]),
    ("rinfty_so2_r2", &["rinfty", "catalog:so2_r2"]),
    ("sl2_verify", &["sl2-verify"]),
    (
        "finite_heisenberg",
        &[
            "finite",
            "--group",
            "heisenberg_mod(3)",
            "--aut",
            "inner:2",
            "--subgroup",
            "center",
        ],
    ),
    (
        "finite_s3",
        &["finite", "--group", "S3", "--aut", "identity"],
    ),
    (
        "check_rotation_qi",
        &["check", "tests/data/rotation_qi.alg"],
    ),
    ("catalog_list", &["catalog", "list"]),
];

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

#[test]
fn golden_outputs() {
    for (name, args) in GOLDEN {
        let expected = std::fs::read_to_string(golden_path(name)).expect("golden file exists");
        let run = reid(args);
        assert_eq!(run.code, 0, "{name}: {}", run.stderr);
        assert_eq!(run.stdout, expected, "{name}");
    }
}

/// Renders a JSON report in the text layout, independently of the binary's
/// own renderer.
fn render_json(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let scalar = |v: &Value| -> String {
        fn go(v: &Value) -> String {
            match v {
                Value::String(s) => s.clone(),
                Value::Array(xs) => {
                    format!("[{}]", xs.iter().map(go).collect::<Vec<_>>().join(", "))
                }
                other => other.to_string(),
            }
        }
        go(v)
    };
    out.push_str(&format!("{pad}{}\n", v["headline"].as_str().unwrap()));
    for key in [
        "verdict",
        "reason",
        "char_poly",
        "fix_dim",
        "nilradical_dim",
        "codim",
        "invariant_factors",
    ] {
        if !v[key].is_null() {
            out.push_str(&format!("{pad}  {key}: {}\n", scalar(&v[key])));
        }
    }
    for (key, value) in v["details"].as_object().unwrap() {
        out.push_str(&format!("{pad}  {key}: {}\n", scalar(value)));
    }
    let citations = v["citations"].as_array().unwrap();
    if !citations.is_empty() {
        out.push_str(&format!("{pad}  citations:\n"));
        for c in citations {
            out.push_str(&format!("{pad}    - {}\n", c.as_str().unwrap()));
        }
    }
    for item in v
        .get("items")
        .and_then(Value::as_array)
        .into_iter()
        .flatten()
    {
        render_json(item, depth + 1, out);
    }
}

#[test]
fn json_and_text_modes_carry_identical_content() {
    let mut cases: Vec<Vec<&str>> = GOLDEN.iter().map(|(_, args)| args.to_vec()).collect();
    cases.push(vec!["catalog", "analyze", "t", "--n", "3"]);
    cases.push(vec!["catalog", "analyze", "walnut"]);
    cases.push(vec!["--field", "Qi", "rinfty", "catalog:so2_r2"]);
    for args in cases {
        let text = reid(&args);
        let mut json_args = vec!["--json"];
        json_args.extend(&args);
        let json = reid(&json_args);
        assert_eq!((text.code, json.code), (0, 0), "{args:?}");
        let v: Value = serde_json::from_str(&json.stdout).expect("valid JSON");
        for key in [
            "verdict",
            "reason",
            "char_poly",
            "fix_dim",
            "nilradical_dim",
            "codim",
            "invariant_factors",
            "citations",
        ] {
            assert!(v.get(key).is_some(), "{args:?}: missing key {key}");
        }
        let mut rendered = String::new();
        render_json(&v, 0, &mut rendered);
        assert_eq!(rendered, text.stdout, "{args:?}");
    }
}

#[test]
fn json_values_are_exact_strings() {
    let run = reid(&["--json", "torus", "--matrix", "3 2 0; 1 1 0; 0 0 1"]);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["verdict"], "Infinite");
    assert_eq!(v["reason"], "DetZero");
    assert_eq!(v["fix_dim"], 1);
    assert_eq!(v["invariant_factors"], serde_json::json!(["1", "2", "0"]));
    assert_eq!(v["details"]["fix_group"], "Z/2 ⊕ T^1");

    let run = reid(&[
        "--json",
        "classify",
        "catalog:so2_r2",
        "--aut",
        "-1 0 0; 0 0 3/2; 0 3/2 0",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["verdict"], "One");
    assert_eq!(v["details"]["det"], "5/2");
    assert!(
        !run.stdout.contains('.'),
        "no decimal output: {}",
        run.stdout
    );
}

#[test]
fn rinfty_verdicts_across_the_catalog() {
    let cases = [
        ("catalog:t", Some("2"), "Infinite", "OddCodimSplit"),
        ("catalog:t", Some("3"), "Inconclusive", "EvenCodim"),
        ("catalog:axb", None, "Infinite", "OddCodimSplit"),
        ("catalog:H", Some("3"), "Infinite", "OddCodimSplit"),
        ("catalog:heisenberg", None, "Inconclusive", "EvenCodim"),
        ("catalog:walnut", None, "Inconclusive", "NotSplit"),
        ("catalog:sl2", None, "Inconclusive", "NotSolvable"),
    ];
    for (alg, n, verdict, reason) in cases {
        let mut args = vec!["--json", "rinfty", alg];
        if let Some(n) = n {
            args.extend(["--n", n]);
        }
        let run = reid(&args);
        assert_eq!(run.code, 0, "{alg}: {}", run.stderr);
        let v: Value = serde_json::from_str(&run.stdout).unwrap();
        assert_eq!(
            (v["verdict"].as_str(), v["reason"].as_str()),
            (Some(verdict), Some(reason)),
            "{alg}"
        );
    }
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let aut = dir.path().join("aut.mat");
    std::fs::write(&aut, "# t ↦ t + 3x, x ↦ 2x\n1 0\n3 2\n").unwrap();
    let run = reid(&["classify", &data("axb.alg"), "--aut", aut.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        first_line(&run.stdout),
        "R = ∞ (eigenvalue 1 of dφ; fix-subalgebra dim 1)"
    );

    let torus = dir.path().join("torus.mat");
    std::fs::write(&torus, "2 1\n1 1\n").unwrap();
    let run = reid(&["torus", "--matrix", torus.to_str().unwrap()]);
    assert_eq!(
        first_line(&run.stdout),
        "R = 1; Fix trivial (|det(A−I)| = 1)"
    );

    // Z/3 from a table, negation given as an image file: x ~ x + 2g for
    // every g, so a single class, and only 0 is fixed.
    let neg = dir.path().join("neg.aut");
    std::fs::write(&neg, "1 3 2\n").unwrap();
    let run = reid(&[
        "--json",
        "finite",
        "--group",
        &data("z3.grp"),
        "--aut",
        neg.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["details"]["r"], 1);
    assert_eq!(v["details"]["fix_count"], 1);
}

#[test]
fn gaussian_field() {
    let run = reid(&[
        "--json",
        "classify",
        &data("rotation_qi.alg"),
        "--aut",
        "1 0; 0 2+i",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["verdict"], "Infinite");
    assert_eq!(v["details"]["field"], "Qi");
    // A rational catalog algebra read over Q(i).
    let run = reid(&[
        "--json",
        "--field",
        "Qi",
        "classify",
        "catalog:axb",
        "--aut",
        "1 0; 0 i",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["verdict"], "Infinite");
}

#[test]
fn catalog_export_round_trips_through_check() {
    let run = reid(&["catalog", "export", "t", "--n", "3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t3.alg");
    std::fs::write(&path, &run.stdout).unwrap();
    let check = reid(&["--json", "check", path.to_str().unwrap()]);
    assert_eq!(check.code, 0, "{}", check.stderr);
    let v: Value = serde_json::from_str(&check.stdout).unwrap();
    assert_eq!(v["details"]["dim"], 6);
    assert_eq!(v["nilradical_dim"], 4);

    // Every exported sample automorphism classifies against the exported file.
    let samples: Vec<&str> = run
        .stdout
        .lines()
        .filter_map(|l| l.strip_prefix("# automorphism "))
        .map(|l| l.rsplit_once(": ").unwrap().1)
        .collect();
    assert!(!samples.is_empty());
    for m in samples {
        let c = reid(&["classify", path.to_str().unwrap(), "--aut", m]);
        assert_eq!(c.code, 0, "{m}: {}", c.stderr);
    }
}

/// Malformed inputs: (arguments, exit code, fragment of the error message).
const MALFORMED: &[(&[&str], i32, &str)] = &[
    // Validation failures: exit 1.
    (
        &["check", "tests/data/bad_jacobi.alg"],
        1,
        "Jacobi identity fails",
    ),
    (
        &["check", "tests/data/bad_syntax.alg"],
        1,
        "parse error at line 3",
    ),
    (
        &["check", "tests/data/bad_dim.alg"],
        1,
        "parse error at line 2",
    ),
    (
        &["--field", "Q", "check", "tests/data/rotation_qi.alg"],
        1,
        "cannot be read over Q",
    ),
    (
        &[
            "classify",
            "tests/data/axb.alg",
            "--aut",
            "tests/data/not_aut.mat",
        ],
        1,
        "does not preserve the bracket",
    ),
    (
        &["classify", "catalog:axb", "--aut", "1 0; 0 0"],
        1,
        "not invertible",
    ),
    (
        &["classify", "catalog:axb", "--aut", "1 0 0; 0 1 0; 0 0 1"],
        1,
        "dimension mismatch",
    ),
    (
        &["classify", "catalog:axb", "--aut", "1 x; 0 1"],
        1,
        "parse error",
    ),
    (
        &["classify", "catalog:sl2", "--aut", "1 0 0; 0 1 0; 0 0 1"],
        1,
        "not solvable",
    ),
    (
        &["classify", "catalog:t", "--n", "9", "--aut", "1"],
        1,
        "bad parameter",
    ),
    (&["rinfty", "catalog:nope"], 1, "unknown catalog entry"),
    (&["torus", "--matrix", "2 0; 0 1"], 1, "not unimodular"),
    (&["torus", "--matrix", "1 2; 3"], 1, "ragged rows"),
    (&["torus", "--matrix", "1/2 0; 0 2"], 1, "parse error"),
    (
        &[
            "finite",
            "--group",
            "tests/data/not_latin.grp",
            "--aut",
            "identity",
        ],
        1,
        "invalid group table",
    ),
    (
        &[
            "finite",
            "--group",
            "tests/data/not_associative.grp",
            "--aut",
            "identity",
        ],
        1,
        "not associative",
    ),
    (
        &[
            "finite",
            "--group",
            "tests/data/short_table.grp",
            "--aut",
            "identity",
        ],
        1,
        "2 table rows, expected 3",
    ),
    (
        &["finite", "--group", "cyclic(4)", "--aut", "1 1 2 3"],
        1,
        "not a bijection",
    ),
    (
        &["finite", "--group", "S3", "--aut", "inverse"],
        1,
        "invalid group automorphism",
    ),
    (
        &["finite", "--group", "S3", "--aut", "inner:9"],
        1,
        "not an element index",
    ),
    (
        &[
            "finite",
            "--group",
            "S3",
            "--aut",
            "identity",
            "--subgroup",
            "1 2 3",
        ],
        1,
        "not a subgroup",
    ),
    (
        &[
            "finite",
            "--group",
            "heisenberg_mod(4)",
            "--aut",
            "identity",
        ],
        1,
        "not prime",
    ),
    (
        &["finite", "--group", "klein", "--aut", "identity"],
        1,
        "unknown catalog entry",
    ),
    // Usage errors: exit 2.
    (&["check", "tests/data/missing.alg"], 2, "not a file"),
    (
        &["check", "tests/data/axb.alg", "--n", "3"],
        2,
        "--n applies only",
    ),
    (&["classify", "catalog:axb"], 2, "--aut"),
    (&["frobnicate"], 2, "unrecognized subcommand"),
    (&["--field", "R", "check", "catalog:axb"], 2, "--field"),
    (&[], 2, "Usage"),
];

#[test]
fn malformed_input_corpus() {
    for (args, code, fragment) in MALFORMED {
        let run = reid(args);
        assert_eq!(
            run.code, *code,
            "{args:?}: stdout {} stderr {}",
            run.stdout, run.stderr
        );
        assert!(
            run.stderr.contains(fragment),
            "{args:?}: stderr was {}",
            run.stderr
        );
        assert!(!run.stderr.contains("panicked"), "{args:?}");
    }
}

#[test]
fn json_mode_reports_errors_as_json() {
    let run = reid(&["--json", "check", "tests/data/bad_jacobi.alg"]);
    assert_eq!(run.code, 1);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["kind"], "invalid input");
    assert!(v["error"].as_str().unwrap().contains("Jacobi"));
}

#[test]
fn non_normal_subgroup_is_rejected() {
    // In S3 the element generated first is a transposition; its order-2
    // subgroup is not normal.
    let run = reid(&["--json", "finite", "--group", "S3", "--aut", "identity"]);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["details"]["r"], 3);
    let run = reid(&[
        "finite",
        "--group",
        "S3",
        "--aut",
        "identity",
        "--subgroup",
        "1 2",
    ]);
    assert_eq!(run.code, 1, "{}", run.stdout);
    assert!(run.stderr.contains("not normal"), "{}", run.stderr);
}

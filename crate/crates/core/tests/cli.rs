use std::process::{Command, Output};

use serde_json::Value;
use symsemi::{classify, GeneratorSet, SemigroupClass};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn frobenius_text_and_json() {
    let out = run(&["frobenius", "5", "6", "7", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "9\n");
    assert_eq!(stdout(&run(&["frobenius", "2", "3"])), "1\n");

    let out = run(&["frobenius", "--json", "5", "6", "7", "8"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["generators"], serde_json::json!([5, 6, 7, 8]));
    assert_eq!(v["frobenius"], 9);
    assert_eq!(v["genus"], 5);
    assert_eq!(v["symmetric"], true);
}

#[test]
fn validation_errors_exit_2() {
    let out = run(&["frobenius", "6", "8", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("gcd is 2, must be 1"),
        "{}",
        stderr(&out)
    );

    let out = run(&["frobenius", "5", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("'-3'"), "{}", stderr(&out));

    let out = run(&["frobenius", "0", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("'0'"));

    let out = run(&["classify", "5", "6", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exactly 4"));

    assert_eq!(
        run(&["classify", "5", "6", "7", "11"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["survey", "--min", "10", "--max", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["survey", "--min", "2", "--max", "500"]).status.code(),
        Some(2)
    );
}

#[test]
fn classify_outputs() {
    let out = run(&["classify", "151", "154", "157", "158"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "SymmetricNotCI\nc=4255\na=[308,625,628,3473,3476]\n"
    );

    let out = run(&["classify", "8", "10", "12", "15"]);
    assert_eq!(stdout(&out), "SymmetricCI\ndegrees=[20,24,30]\n");
}

#[test]
fn classify_json_round_trips() {
    for gens in [
        ["151", "154", "157", "158"],
        ["8", "10", "12", "15"],
        ["5", "6", "7", "9"],
    ] {
        let mut args = vec!["classify", "--json"];
        args.extend(gens);
        let v: Value = serde_json::from_str(&stdout(&run(&args))).unwrap();
        let raw: Vec<u64> = serde_json::from_value(v["generators"].clone()).unwrap();
        let g = GeneratorSet::new(&raw).unwrap();
        let class = classify(&g).unwrap();
        assert_eq!(v["class"], class.tag());
        match class {
            SemigroupClass::SymmetricNotCi { a_list, c } => {
                let parsed: [u64; 5] = serde_json::from_value(v["a_list"].clone()).unwrap();
                assert_eq!(parsed, a_list);
                assert_eq!(parsed.iter().sum::<u64>(), 2 * v["c"].as_u64().unwrap());
                assert_eq!(v["c"], c);
            }
            SemigroupClass::SymmetricCi { degrees } => {
                let parsed: [u64; 3] =
                    serde_json::from_value(v["relation_degrees"].clone()).unwrap();
                assert_eq!(parsed, degrees);
            }
            SemigroupClass::NonSymmetric => assert!(v.get("c").is_none()),
        }
    }
}

#[test]
fn numerator_listing() {
    assert_eq!(stdout(&run(&["numerator", "2", "3"])), "0 1\n6 -1\n");

    let text = stdout(&run(&["numerator", "151", "154", "157", "158"]));
    let expected = "0 1\n308 -1\n625 -1\n628 -1\n779 1\n782 1\n3473 -1\n3476 -1\n3627 1\n3630 1\n3947 1\n4255 -1\n";
    assert_eq!(text, expected);

    let text = stdout(&run(&["numerator", "5", "6", "7", "8"]));
    assert_eq!(text.lines().count(), 12);
    assert_eq!(text.lines().last(), Some("35 -1"));

    let v: Value = serde_json::from_str(&stdout(&run(&["numerator", "--json", "2", "3"]))).unwrap();
    assert_eq!(v["terms"], serde_json::json!([[0, 1], [6, -1]]));
}

#[test]
fn bounds_outputs() {
    let text = stdout(&run(&["bounds", "--exact", "8", "13", "15", "17"]));
    assert!(text.contains("F=35\n"), "{text}");
    assert!(text.contains("bound_not_ci=34.198\n"), "{text}");

    let text = stdout(&run(&["bounds", "--exact", "7", "8", "9", "13"]));
    assert!(
        text.contains("F=19\n") && text.contains("bound_not_ci=17.715\n"),
        "{text}"
    );

    let text = stdout(&run(&["bounds", "151", "154", "157"]));
    assert!(text.starts_with("bound_ns3=2847.477"), "{text}");

    let v: Value = serde_json::from_str(&stdout(&run(&[
        "bounds", "--json", "--exact", "5", "6", "7", "8",
    ])))
    .unwrap();
    assert_eq!(v["frobenius"], 9);
    assert_eq!(v["class"], "symmetric_not_ci");
    let b = v["bound_not_ci"].as_f64().unwrap();
    assert!((b - 8.76).abs() < 0.005);
    // json carries full precision
    assert_ne!(b, 8.760);

    assert_eq!(run(&["bounds", "2", "3"]).status.code(), Some(2));
}

#[test]
fn survey_to_stdout_and_file() {
    let out = run(&["survey", "--min", "5", "--max", "10"]);
    assert!(out.status.success());
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,tightness,identity_ok")
    );
    assert!(body
        .lines()
        .any(|l| l.starts_with("5,6,7,8,9,5,symmetric_not_ci,35,8.760,")));
    assert!(stderr(&out).contains("symmetric_not_ci="));

    let out = run(&["survey", "--min", "5", "--max", "6"]);
    assert_eq!(
        stdout(&out),
        "d1,d2,d3,d4,F,genus,class,c,bound_notci,bound_ci,bound_ns,tightness,identity_ok\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let out = run(&[
        "survey",
        "--min",
        "5",
        "--max",
        "20",
        "--jobs",
        "1",
        "--out",
        a.to_str().unwrap(),
    ]);
    assert!(stdout(&out).contains("symmetric_not_ci=67"));
    run(&[
        "survey",
        "--min",
        "5",
        "--max",
        "20",
        "--jobs",
        "4",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn survey_jsonl_round_trips() {
    let out = run(&["survey", "--min", "5", "--max", "12", "--format", "jsonl"]);
    let body = stdout(&out);
    assert!(!body.is_empty());
    for line in body.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let gens: Vec<u64> = serde_json::from_value(v["generators"].clone()).unwrap();
        let g = GeneratorSet::new(&gens).unwrap();
        assert_eq!(v["frobenius"], symsemi::frobenius(&g).unwrap());
        assert_eq!(v["class"], classify(&g).unwrap().tag());
        if v["class"] == "symmetric_not_ci" {
            let a: [u64; 5] = serde_json::from_value(v["a_list"].clone()).unwrap();
            let c = v["c"].as_u64().unwrap();
            assert!(symsemi::verify_key_identity(&a, c, g.pi()).unwrap());
            assert_eq!(v["identity_ok"], true);
            assert_eq!(v["maclaurin_ok"], true);
            assert_eq!(v["threshold_ok"], true);
        }
    }
}

//! End-to-end runs of the binary.

use std::process::{Command, Output};

use abtaxon::Citation;

fn abtaxon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abtaxon"))
        .args(args)
        .env_remove("ABTAXON_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is one JSON document")
}

#[test]
fn exit_code_contract() {
    assert_eq!(abtaxon(&["classify", "Z(2^inf)"]).status.code(), Some(0));
    assert_eq!(abtaxon(&["classify", "Q + Z(2)^w"]).status.code(), Some(0));
    assert_eq!(abtaxon(&["classify", "Z(6)"]).status.code(), Some(1));
    assert_eq!(abtaxon(&["parse", "TF(0)"]).status.code(), Some(1));
    assert_eq!(abtaxon(&["decompose", "B(3)"]).status.code(), Some(2));
    assert_eq!(abtaxon(&["oracle", "bassian-sweep", "--max-order", "4096"]).status.code(), Some(3));
    assert_eq!(abtaxon(&["oracle", "embedding-equiv", "--p", "3", "--max-exp", "6"]).status.code(), Some(3));
    assert_eq!(abtaxon(&["no-such-verb"]).status.code(), Some(1));
}

#[test]
fn classify_quasi_cyclic() {
    let o = abtaxon(&["classify", "--json", "Z(5^inf)"]);
    let v = json(&o);
    assert_eq!(v["verdicts"]["bassian"]["value"], "No");
    assert_eq!(v["verdicts"]["nearlyBassian"]["value"], "Yes");
    assert_eq!(v["verdicts"]["nearlyBassian"]["citation"], "PROP-3");
    assert_eq!(v["verdicts"]["nearlyGeneralizedBassian"]["citation"], "THM-CHIEF");
}

#[test]
fn classify_zero_is_all_yes() {
    let v = json(&abtaxon(&["classify", "--json", "0"]));
    for (_, verdict) in v["verdicts"].as_object().unwrap() {
        assert_eq!(verdict["value"], "Yes");
    }
}

#[test]
fn report_keys_in_documented_order() {
    let text = stdout(&abtaxon(&["decompose", "--json", "Z(2)^w + Z(2^3)^2 + Z"]));
    let keys = ["inputText", "canonicalForm", "invariants", "verdicts", "decomposition", "toolVersion", "strictnessFlag"];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["decomposition"]["elementary"], "Z(2)^w");
    assert_eq!(v["decomposition"]["bassian"], "Z(2^3)^2 + Z");
    assert_eq!(v["toolVersion"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn every_citation_is_registered() {
    for expr in ["Z(5^inf)", "Q + Z(2)^w", "B(7)", "TF(2;3) + Z(3)", "Z^w", "0"] {
        for flag in [None, Some("--strict-paper")] {
            let mut args = vec!["classify", "--json"];
            args.extend(flag);
            args.push(expr);
            let v = json(&abtaxon(&args));
            for (_, verdict) in v["verdicts"].as_object().unwrap() {
                let id = verdict["citation"].as_str().unwrap();
                assert!(Citation::from_id(id).is_some(), "{id}");
            }
        }
    }
}

#[test]
fn machine_output_is_byte_identical() {
    for args in [
        &["classify", "--json", "Z(2)^w + Q^3 + TF(2;5)"][..],
        &["classify", "--json", "--corpus"],
        &["parse", "--json", "Z + Z"],
    ] {
        assert_eq!(abtaxon(args).stdout, abtaxon(args).stdout);
    }
}

#[test]
fn strict_paper_flag() {
    let v = json(&abtaxon(&["classify", "--json", "--strict-paper", "Z(2)^w"]));
    assert_eq!(v["verdicts"]["nearlyGeneralizedBassian"]["value"], "Unknown");
    assert_eq!(v["strictnessFlag"], "strict-paper");
}

#[test]
fn decompose_outputs() {
    let o = abtaxon(&["decompose", "B(3)"]);
    assert!(stderr(&o).contains("T_3 not elementary ⊕ finite"));
    let v = json(&abtaxon(&["decompose", "--json", "0"]));
    assert_eq!(v["decomposition"]["elementary"], "0");
    assert_eq!(v["decomposition"]["bassian"], "0");
}

#[test]
fn parse_outputs() {
    assert_eq!(stdout(&abtaxon(&["parse", "Z + Z"])), "Z^2\n");
    assert_eq!(stdout(&abtaxon(&["parse", "Q ⊕ Z(2^∞)"])), "Q + Z(2^inf)\n");
    let o = abtaxon(&["parse", "--ast", "Z^3 + Q + Z(2^3)^w"]);
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().skip(1).map(|l| l.split_whitespace().map(String::from).collect()).collect();
    assert_eq!(rows, [["Z(2^3)", "aleph0"], ["Z", "3"], ["Q", "1"]]);
    let o = abtaxon(&["parse", "TF(0)"]);
    assert!(stderr(&o).contains("line 1, column 4"), "{}", stderr(&o));
}

#[test]
fn corpus_runs_clean() {
    let o = abtaxon(&["classify", "--corpus"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(" 0 mismatches"));
}

#[test]
fn oracle_summaries() {
    let o = abtaxon(&["oracle", "bassian-sweep", "--max-order", "32"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("groups checked"), "{text}");
    assert!(text.contains("counterexamples: 0"));
    assert!(text.contains("wall time"));

    let v = json(&abtaxon(&["oracle", "lemma-basic", "--p", "3", "--trials", "50", "--seed", "7", "--max-order", "81", "--json"]));
    assert_eq!(v["summary"]["counterexamples"].as_array().unwrap().len(), 0);

    let o = abtaxon(&["oracle", "embedding-equiv", "--p", "2", "--max-exp", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = abtaxon(&["oracle", "embedding-equiv", "--p", "4", "--max-exp", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("4 = 2^2"));
}

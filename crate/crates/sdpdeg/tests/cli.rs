use std::process::{Command, Output};

use sdpdeg::record::{read_csv, read_json, OutputRecord};
use sdpdeg::table::{DualityError, DualityViolation};
use sdpdeg::{exit, exit_code_for};
use sdpdeg_core::degree::validate_triple;
use sdpdeg_core::{BigInt, Error};

fn sdpdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdpdeg")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn csv_rows(out: &Output) -> Vec<OutputRecord> {
    read_csv(out.stdout.as_slice()).expect("valid CSV")
}

#[test]
fn value_examples() {
    let out = sdpdeg(&["value", "3", "4", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(csv_rows(&out)[0].delta, "10");

    let out = sdpdeg(&["value", "4", "4", "2", "--method", "residue", "--check"]);
    assert_eq!(code(&out), 0);
    let rec = &csv_rows(&out)[0];
    assert_eq!((rec.delta.as_str(), rec.method.as_str()), ("30", "residue"));
    assert!(stderr(&out).contains("verified"));
}

#[test]
fn invalid_triples_exit_2_with_the_bound() {
    let out = sdpdeg(&["value", "2", "4", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("lower bound") && stderr(&out).contains("=3"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());

    let out = sdpdeg(&["value", "8", "4", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("upper bound"));

    for r in ["0", "4"] {
        assert_eq!(code(&sdpdeg(&["value", "3", "4", r])), 2);
    }
    assert_eq!(code(&sdpdeg(&["value", "5", "4", "2", "--method", "closed"])), 2);
    assert_eq!(code(&sdpdeg(&["value", "5", "4", "2", "--lambda", "1,2,2,3"])), 2);
}

#[test]
fn lambda_does_not_change_the_value() {
    let a = sdpdeg(&["value", "5", "4", "2", "--method", "residue", "--lambda", "-3,11,0,4"]);
    let b = sdpdeg(&["value", "5", "4", "2", "--method", "theorem1"]);
    assert_eq!(csv_rows(&a)[0].delta, "42");
    assert_eq!(csv_rows(&b)[0].delta, "42");
}

#[test]
fn table_n3() {
    let out = sdpdeg(&["table", "3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().next(), Some("m,n,r,k,l,delta,method"));
    let rows = csv_rows(&out);
    let get = |m, r| rows.iter().find(|x| x.m == m && x.r == r).map(|x| x.delta.clone());
    assert_eq!(get(2, 2).as_deref(), Some("6"));
    assert_eq!(get(3, 1).as_deref(), Some("4"));
}

#[test]
fn table_n4_covers_the_pataki_range() {
    let rows = csv_rows(&sdpdeg(&["table", "4", "--check-duality"]));
    let keys: Vec<_> = rows.iter().map(|x| (x.r, x.m)).collect();
    let want: Vec<_> = (1..4u32)
        .flat_map(|r| {
            let t_lo = sdpdeg_core::degree::PatakiTriple::lower_bound(4, r);
            let t_hi = sdpdeg_core::degree::PatakiTriple::upper_bound(4, r);
            (t_lo..=t_hi).map(move |m| (r, m))
        })
        .collect();
    assert_eq!(keys, want);
    for rec in &rows {
        let t = validate_triple(rec.m, rec.n, rec.r).unwrap();
        assert_eq!((rec.k_script, rec.l_script), (t.k_script(), t.l_script()));
        assert!(rec.delta_value().unwrap() > BigInt::from(0));
    }
}

#[test]
fn csv_and_json_carry_the_same_data() {
    for n in ["3", "4", "6"] {
        let csv = csv_rows(&sdpdeg(&["table", n]));
        let json = read_json(sdpdeg(&["table", n, "--format", "json"]).stdout.as_slice()).unwrap();
        let a: Vec<_> = csv.iter().map(OutputRecord::csv_fields).collect();
        let b: Vec<_> = json.iter().map(OutputRecord::csv_fields).collect();
        assert_eq!(a, b, "n = {n}");
    }
    let raw: serde_json::Value = serde_json::from_slice(&sdpdeg(&["table", "4", "--format", "json"]).stdout).unwrap();
    let rows = raw.as_array().unwrap();
    assert_eq!(rows.len(), 13);
    for row in rows {
        assert!(row["delta"].is_string());
        for key in ["m", "n", "r", "k", "l", "method", "elapsed_ms"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn thread_cap_is_respected_and_deterministic() {
    let one = Command::new(env!("CARGO_BIN_EXE_sdpdeg")).args(["table", "5"]).env("SDPDEG_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_sdpdeg")).args(["table", "5"]).env("SDPDEG_THREADS", "4").output().unwrap();
    assert_eq!(one.stdout, many.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_sdpdeg")).args(["table", "5"]).env("SDPDEG_THREADS", "lots").output().unwrap();
    assert_eq!(code(&bad), 1);
    assert!(bad.stdout.is_empty());
}

#[test]
fn checked_table_agrees() {
    let out = sdpdeg(&["table", "5", "--check", "--method", "residue"]);
    assert_eq!(code(&out), 0);
    assert!(csv_rows(&out).iter().all(|x| x.method == "residue"));
}

#[test]
fn verify_suites() {
    let out = sdpdeg(&["verify", "--suite", "lemma21", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("100/100 pass"));

    let out = sdpdeg(&["verify", "--suite", "cross-methods", "--max-n", "5"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("45/45 pass"));

    let out = sdpdeg(&["verify", "--suite", "identities"]);
    assert_eq!(code(&out), 0);

    let out = sdpdeg(&["verify", "--seed", "11"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).matches("PASS").count(), 4);
}

#[test]
fn disagreements_map_to_exit_3() {
    let mismatch = anyhow::Error::from(Error::CrossCheckMismatch {
        first_method: "residue",
        first: 1.into(),
        second_method: "theorem1",
        second: 2.into(),
    });
    assert_eq!(exit_code_for(&mismatch), exit::DISAGREEMENT);
    let t = validate_triple(3, 3, 1).unwrap();
    let dual = anyhow::Error::from(DualityError(vec![DualityViolation {
        triple: t,
        value: 4.into(),
        partner: sdpdeg_core::degree::duality_partner(&t),
        partner_value: 5.into(),
    }]));
    assert_eq!(exit_code_for(&dual), exit::DISAGREEMENT);
    assert_eq!(exit_code_for(&anyhow::Error::from(Error::BelowPatakiLower { m: 2, lower: 3 })), exit::INVALID_INPUT);
    assert_eq!(exit_code_for(&anyhow::anyhow!("io")), exit::FAILURE);
}

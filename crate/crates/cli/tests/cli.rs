use assert_cmd::Command;
use predicates::str::contains;
use serde_json::Value;

use semigroup_forge::make_semigroup;

fn cmd() -> Command {
    Command::cargo_bin("semigroup-forge").unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = cmd()
        .args(args)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{args:?}");
    serde_json::from_slice(&out.stdout).unwrap()
}

fn generators(result: &Value, key: &str) -> Vec<Vec<u64>> {
    result[key]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            s["generators"]
                .as_array()
                .unwrap()
                .iter()
                .map(|g| g.as_u64().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn min_genus_table() {
    cmd()
        .args(["min-genus", "5", "3"])
        .assert()
        .success()
        .stdout(
            "\
# min-genus m=5 e=3 via=tree
g(5,3) = 6
tree level P = 2
route: tree
minimizers (2):
  ⟨5,6,7⟩  F=9 g=6
  ⟨5,6,8⟩  F=9 g=6
-- explored: 12, verify: skipped
",
        );
}

#[test]
fn min_frobenius_json() {
    let doc = json_of(&["min-frobenius", "4", "3"]);
    assert_eq!(doc["command"], "min-frobenius");
    assert_eq!(doc["result"]["value"], 6);
    assert_eq!(
        generators(&doc["result"], "minimizers"),
        vec![vec![4, 5, 7]]
    );
    assert_eq!(doc["result"]["minimizers"][0]["genus"], 4);
}

#[test]
fn class_min_frob_output() {
    let doc = json_of(&["class-min-frob", "6,7,8,9,11"]);
    assert_eq!(
        generators(&doc["result"], "members"),
        vec![
            vec![6, 7, 8, 9, 11],
            vec![6, 8, 9, 11, 13],
            vec![6, 8, 11, 13, 15]
        ]
    );
    cmd()
        .args(["class-min-frob", "5,11,17"])
        .assert()
        .code(2)
        .stderr(contains("is not packed"));
}

#[test]
fn routes_report_same_values() {
    let tree = json_of(&["min-frobenius", "7", "4"]);
    let full = json_of(&["min-frobenius", "7", "4", "--via", "packed", "--full-set"]);
    let packed = json_of(&["min-frobenius", "7", "4", "--via", "packed"]);
    assert_eq!(tree["result"]["minimizers"], full["result"]["minimizers"]);
    assert_eq!(tree["result"]["value"], packed["result"]["value"]);
    let packed_sets = generators(&packed["result"], "minimizers");
    assert!(packed_sets.iter().all(|g| g.iter().all(|&x| x < 14)));

    let a = json_of(&["min-genus", "8", "3"]);
    let b = json_of(&["min-genus", "8", "3", "--via", "packed"]);
    assert_eq!(a["result"]["minimizers"], b["result"]["minimizers"]);
    assert_eq!(a["result"]["value"], 14);
}

#[test]
fn verify_only_touches_meta() {
    for args in [
        &["min-genus", "6", "3"][..],
        &["min-frobenius", "6", "4"],
        &["packed", "7", "3"],
        &["tree", "4", "--levels", "3"],
        &["info", "4,5,7"],
    ] {
        let plain = json_of(args);
        let mut with: Vec<&str> = args.to_vec();
        with.push("--verify");
        let checked = json_of(&with);
        assert_eq!(plain["result"], checked["result"], "{args:?}");
        assert_eq!(plain["meta"]["verify"], "skipped");
        assert!(checked["meta"]["verify"]
            .as_str()
            .unwrap()
            .starts_with("passed"));
    }
}

#[test]
fn json_round_trips_through_canonicalisation() {
    let doc = json_of(&["tree", "5", "--levels", "4"]);
    for lvl in doc["result"]["levels"].as_array().unwrap() {
        for s in lvl["members"].as_array().unwrap() {
            let gens: Vec<u64> = serde_json::from_value(s["generators"].clone()).unwrap();
            let canon = make_semigroup(&gens).unwrap();
            assert_eq!(canon.min_gens(), gens.as_slice());
            assert_eq!(s["frobenius"], canon.frobenius());
            assert_eq!(s["genus"], canon.genus());
        }
    }
}

#[test]
fn info_reports_invariants() {
    let doc = json_of(&["info", "4,6,7,9,10"]);
    let r = &doc["result"];
    assert_eq!(
        r["semigroup"]["generators"],
        serde_json::json!([4, 6, 7, 9])
    );
    assert_eq!(r["embedding_dimension"], 4);
    assert_eq!(r["apery"], serde_json::json!([0, 9, 6, 7]));
    assert_eq!(r["packed"], false);
}

#[test]
fn packed_show_columns() {
    cmd()
        .args(["packed", "6", "5", "--show", "f"])
        .assert()
        .success()
        .stdout(contains("⟨6,7,9,10,11⟩  F=8"));
}

#[test]
fn audit_wilf_reports_clean() {
    let doc = json_of(&["audit-wilf", "5", "3", "--levels", "8"]);
    assert!(doc["result"]["checked"].as_u64().unwrap() > 0);
    assert_eq!(doc["result"]["violations"], serde_json::json!([]));
}

#[test]
fn naturals_family() {
    let doc = json_of(&["min-genus", "1", "1"]);
    assert_eq!(doc["result"]["value"], 0);
    assert_eq!(generators(&doc["result"], "minimizers"), vec![vec![1]]);
    let doc = json_of(&["min-frobenius", "1", "1"]);
    assert_eq!(doc["result"]["value"], -1);
}

#[test]
fn exit_codes() {
    cmd().args(["min-genus", "3", "5"]).assert().code(2);
    cmd().args(["min-genus", "3", "0"]).assert().code(2);
    cmd().args(["min-frobenius", "4", "1"]).assert().code(3);
    cmd().args(["min-genus", "5001", "3"]).assert().code(2);
    cmd().args(["tree", "4", "--levels", "13"]).assert().code(2);
    cmd().args(["min-genus", "five", "3"]).assert().code(2);
    cmd()
        .args(["info", "2,4"])
        .assert()
        .code(2)
        .stderr(contains("gcd 2"));
    cmd()
        .args(["info", "6,x,9"])
        .assert()
        .code(2)
        .stderr(contains("`x`"));
}

#[test]
fn thread_cap_does_not_change_output() {
    let base = cmd().args(["tree", "6", "--levels", "7"]).output().unwrap();
    let capped = cmd()
        .env("SEMIGROUP_FORGE_THREADS", "1")
        .args(["tree", "6", "--levels", "7"])
        .output()
        .unwrap();
    assert_eq!(base.stdout, capped.stdout);
}

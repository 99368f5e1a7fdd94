use std::process::{Command, Output};

use serde_json::Value;

fn randic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_randic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = randic(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn charpoly_petersen() {
    assert_eq!(
        ok(&["charpoly", "--graph", "petersen"]),
        "λ^10 - 15λ^8 + 75λ^6 - 24λ^5 - 165λ^4 + 120λ^3 + 120λ^2 - 160λ + 48\n"
    );
    let v = json(&["charpoly", "--graph", "g6:Bw"]);
    assert_eq!(v["coefficients"], serde_json::json!(["-2", "-3", "0", "1"]));
}

#[test]
fn charpoly_catalog_row() {
    assert_eq!(
        ok(&["charpoly", "--graph", "catalog:G_21"]),
        "λ^10 - 15λ^8 - 8λ^7 + 51λ^6 + 72λ^5 + 27λ^4\n"
    );
}

#[test]
fn randic_charpoly_forms() {
    assert_eq!(
        ok(&["randic-charpoly", "--graph", "cycle:5"]),
        "λ^5 - (5/4)λ^3 + (5/16)λ - 1/16\n"
    );
    assert_eq!(
        ok(&["randic-charpoly", "--graph", "windmill:3,2"]),
        "λ^5 - λ^3 - (1/4)λ^2 + (3/16)λ + 1/16\n"
    );
    let out = randic(&["randic-charpoly", "--graph", "kmn-e:3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn energy_petersen() {
    let text = ok(&["energy", "--graph", "petersen"]);
    assert_eq!(text, "E  16.000000000000\nRE 5.333333333333\nmethod regular-shortcut\n");
    let numeric = ok(&["energy", "--graph", "petersen", "--no-shortcut"]);
    assert!(numeric.ends_with("method numeric\n"));
}

#[test]
fn energy_json_windmill() {
    let v = json(&["energy", "--graph", "windmill:5,2"]);
    assert_eq!(v["id"], "D_5^2");
    assert_eq!(v["n"], 9);
    assert_eq!(v["edges"], 10);
    assert_eq!(v["method"], "numeric");
    let re = v["randic_energy"].as_f64().unwrap();
    assert!((re - (1.0 + 2.0 * 5f64.sqrt())).abs() < 1e-10);
    assert_eq!(v["spectrum"].as_array().unwrap().len(), 9);
}

#[test]
fn energy_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.g6");
    std::fs::write(&path, "\nBw\n").unwrap();
    let text = ok(&["energy", "--graph", &format!("file:{}", path.display())]);
    assert!(text.starts_with("E  4.000000000000\nRE 2.000000000000\n"), "{text}");
}

#[test]
fn perm_outputs() {
    assert_eq!(ok(&["perm", "--catalog", "G_7"]), "85\n");
    assert_eq!(ok(&["perm", "--catalog", "G_11"]), "85\n");
    assert_eq!(ok(&["perm", "--graph", "petersen"]), "60\n");
    assert_eq!(json(&["perm", "--graph", "cycle:6"])["permanent"], "4");
    assert_eq!(randic(&["perm", "--catalog", "G_99"]).status.code(), Some(2));
}

#[test]
fn census_six() {
    let text = ok(&["census", "--n", "6"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], "2 graphs, 0 disconnected");
    let v = json(&["census", "--n", "10"]);
    assert_eq!(v["count"], 21);
    assert_eq!(v["disconnected"], 2);
}

#[test]
fn census_write_matches_embedded() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic10.g6");
    ok(&["census", "--n", "10", "--write", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, randic_core::Catalog::embedded_g6());
    assert_eq!(randic(&["census", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn classes_default() {
    let text = ok(&["classes", "--key", "energy", "--tol", "1e-6"]);
    let pairs: Vec<&str> = text.lines().filter(|l| l.contains(',')).collect();
    assert_eq!(pairs, ["{G_1, G_8}", "{G_12, G_17}", "{G_16, G_20}"]);
    assert_eq!(text.lines().count(), 18);
    let v = json(&["classes", "--key", "randic"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 18);
}

#[test]
fn families_spec_and_probe() {
    assert_eq!(
        ok(&["families", "--spec", "windmill4:3"]),
        "windmill4:3\tRE = 2+2√2 = 4.828427124746\n"
    );
    assert_eq!(
        ok(&["families", "--spec", "kmn-e:3,4"]),
        "complete-bipartite-minus-edge:3,4\tRE = 2+(1/3)√3 = 2.577350269190\n"
    );
    assert_eq!(
        ok(&["families", "--probe", "2.5", "2.51"]),
        "complete-bipartite-minus-edge:2,8\t5/2\t2.500000000000\n1 witnesses in [2.5, 2.51]\n"
    );
    let v = json(&["families", "--probe", "4.8", "5.0"]);
    let w = v["witnesses"].as_array().unwrap();
    assert_eq!(w.len(), 2);
    assert_eq!(w[0]["family"], "windmill4");
    assert_eq!(w[0]["re_exact"], "2+2√2");
    assert_eq!(w[1]["family"], "friendship");
    assert_eq!(w[1]["params"], serde_json::json!([4]));
    assert_eq!(randic(&["families", "--probe", "1.5", "2.5"]).status.code(), Some(2));
}

#[test]
fn verify_passing_groups() {
    let text = ok(&["verify", "--census", "--classes", "--closed-forms", "--windmill"]);
    assert!(text.lines().all(|l| l.starts_with("PASS") || l.ends_with("0 failed")), "{text}");
    let v = json(&["verify", "--windmill", "--tol", "1e-8"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_tables_reports_misprints() {
    let out = randic(&["verify", "--tables", "--tol", "2e-4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failed.len(), 3, "{text}");
    assert!(failed[0].starts_with("FAIL table1 G_4:"));
    assert!(failed[1].starts_with("FAIL table2 E(G_14):"));
    assert!(failed[2].starts_with("FAIL table2 RE(G_14):"));
}

#[test]
fn verify_custom_tables_file() {
    let mut doc: Value = serde_json::from_str(randic_core::PaperTables::embedded_json()).unwrap();
    doc["table1"][3]["charpoly"] =
        serde_json::json!(["0", "0", "-12", "-56", "-61", "36", "63", "-4", "-15", "0", "1"]);
    doc["table2"][13]["energy"] = "15.5175".into();
    doc["table2"][13]["randic_energy"] = "5.1725".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let text = ok(&["verify", "--tables", "--tables-file", path.to_str().unwrap()]);
    assert!(text.ends_with("71 checks, 0 failed\n"), "{text}");
}

#[test]
fn usage_errors() {
    assert_eq!(randic(&[]).status.code(), Some(2));
    assert_eq!(randic(&["verify"]).status.code(), Some(2));
    assert_eq!(randic(&["energy", "--graph", "star:3"]).status.code(), Some(2));
    assert_eq!(randic(&["charpoly", "--graph", "petersen", "--bogus"]).status.code(), Some(2));
}

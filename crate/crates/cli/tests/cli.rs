use std::process::{Command, Output};

use serde_json::Value;

fn taupoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taupoly")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = taupoly(args);
    let v = serde_json::from_slice(&out.stdout).expect("json report");
    (v, out.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn poly_reports_ascending_coefficients() {
    let (v, code) = json(&["poly", "--family", "path", "--diagram", "A3", "--kind", "d"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["results"]), ["46", "46", "10"]);
    assert_eq!(v["exit_status"], 0);
    assert_eq!(v["command"], "poly --family path --diagram A3 --kind d");

    let (v, _) = json(&["poly", "--family", "path", "--diagram", "A1", "--kind", "d"]);
    assert_eq!(strings(&v["results"]), ["1"]);
    let (v, _) = json(&["poly", "--family", "preprojective", "--diagram", "D4", "--kind", "d"]);
    assert_eq!(strings(&v["results"]), ["2688", "4032", "1728", "192"]);
    let (v, _) = json(&["poly", "--family", "preprojective", "--diagram", "a3", "--kind", "f"]);
    assert_eq!(strings(&v["results"]), ["24", "36", "14", "1"]);
}

#[test]
fn poly_verify_runs_table_checks() {
    let (v, code) = json(&["poly", "--family", "preprojective", "--diagram", "E6", "--verify"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"table-3-row-6"));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn json_polynomials_round_trip() {
    let (v, _) = json(&["poly", "--family", "path", "--diagram", "E7"]);
    let p: taupoly::Polynomial = serde_json::from_value(v["results"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&p).unwrap(), v["results"]);
}

#[test]
fn table_csv_matches_golden_file() {
    for k in 1..=6 {
        let out = taupoly(&["table", &k.to_string(), "--format", "csv"]);
        assert!(out.status.success());
        let golden = std::fs::read_to_string(format!(
            "{}/../core/tests/golden/table{k}.csv",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap();
        let printed = String::from_utf8(out.stdout).unwrap();
        let errata: Vec<_> = taupoly::checks::golden::errata().into_iter().filter(|e| e.table == k).collect();
        let mut expected = golden.trim_end().to_string();
        for e in errata {
            expected = expected.replace(&e.printed.to_string(), &e.corrected.to_string());
        }
        assert_eq!(printed.trim_end(), expected, "table {k}");
    }
}

#[test]
fn table_columns_reverse_json_coefficients() {
    let out = taupoly(&["table", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').skip(1).collect();
    let (v, _) = json(&["poly", "--family", "path", "--diagram", "D4"]);
    let mut coeffs = strings(&v["results"]);
    coeffs.reverse();
    assert_eq!(row, coeffs);
}

#[test]
fn genfun_terms() {
    let (v, _) = json(&["genfun", "exp-h-ppa-a", "--order", "3"]);
    let terms: Vec<Vec<String>> = v["results"].as_array().unwrap().iter().map(strings).collect();
    assert_eq!(terms, [vec!["1"], vec!["1"], vec!["1", "1"], vec!["1", "4", "1"]]);
    let (v, _) = json(&["genfun", "exp-d-ppa-a", "--order", "0"]);
    assert_eq!(strings(&v["results"][0]), ["0"]);
    let (v, _) = json(&["genfun", "ord-d-path-a", "--order", "4"]);
    assert_eq!(strings(&v["results"][3]), ["8", "4"]);
    assert_eq!(strings(&v["results"][4]), ["46", "46", "10"]);
    let (v, code) = json(&["genfun", "ord-h-path-a", "--order", "8", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn genfun_order_is_bounded() {
    assert_eq!(taupoly(&["genfun", "exp-h-ppa-a", "--order", "15"]).status.code(), Some(2));
}

#[test]
fn eulerian_and_narayana() {
    let (v, _) = json(&["eulerian", "A3"]);
    assert_eq!(strings(&v["results"]), ["1", "11", "11", "1"]);
    let (v, _) = json(&["eulerian", "D4", "--oracle"]);
    assert_eq!(strings(&v["results"]), ["1", "44", "102", "44", "1"]);
    let (v, _) = json(&["narayana", "D4"]);
    assert_eq!(strings(&v["results"]), ["1", "12", "24", "12", "1"]);
    let (v, _) = json(&["narayana", "A1xA2"]);
    assert_eq!(strings(&v["results"]), ["1", "4", "4", "1"]);
}

#[test]
fn e8_enumeration_needs_the_flag() {
    let out = taupoly(&["eulerian", "E8"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--enable-e8"));
    assert_eq!(taupoly(&["narayana", "E8", "--oracle"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(taupoly(&["poly", "--family", "path", "--diagram", "X4"]).status.code(), Some(2));
    assert_eq!(taupoly(&["poly", "--family", "path", "--diagram", "D12"]).status.code(), Some(2));
    assert_eq!(taupoly(&["table", "7"]).status.code(), Some(2));
    assert_eq!(taupoly(&["nonsense"]).status.code(), Some(2));
    assert_eq!(taupoly(&["oracle", "path", "--rank", "4", "--orientation", "++"]).status.code(), Some(2));
}

#[test]
fn dim_orbit_formula_and_oracle_agree() {
    for (ty, rank, vertex) in [("A", "5", "2"), ("D", "6", "-1"), ("D", "6", "3")] {
        let (a, _) = json(&["dim-orbit", "--family", "ppa", "--type", ty, "--rank", rank, "--vertex", vertex]);
        let (b, _) =
            json(&["dim-orbit", "--family", "ppa", "--type", ty, "--rank", rank, "--vertex", vertex, "--oracle"]);
        assert_eq!(a["results"], b["results"], "{ty}{rank} vertex {vertex}");
    }
    let (v, _) = json(&["dim-orbit", "--type", "A", "--rank", "3"]);
    assert_eq!(v["results"], "24");
}

#[test]
fn oracles() {
    let (v, code) = json(&["oracle", "path", "--type", "A", "--rank", "4", "--orientation", "++-", "--kind", "d"]);
    assert_eq!(code, 0);
    let (w, _) = json(&["poly", "--family", "path", "--diagram", "A4"]);
    assert_eq!(v["results"], w["results"]);
    let (v, code) = json(&["oracle", "tau-orbit", "--type", "E6", "--vertex", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"], "42");
}

#[test]
fn aggregates_report_the_printed_path_d_form_as_failing() {
    let (v, code) = json(&["aggregates", "--family", "path", "--diagram", "D4"]);
    assert_eq!(v["results"]["irigid"], "28");
    assert_eq!(v["results"]["stilt"], "332");
    assert_eq!(code, 1);
    let (_, code) = json(&["aggregates", "--family", "preprojective", "--diagram", "A5"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "--suite", "tables"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("table-")).count(), 7);
    let (_, code) = json(&["verify", "--suite", "genfun", "--order", "10"]);
    assert_eq!(code, 0);
    let (_, code) = json(&["verify", "--suite", "oracles", "--max-rank", "4"]);
    assert_eq!(code, 0);
    assert_eq!(taupoly(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn output_is_stable_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_taupoly"))
            .args(["poly", "--family", "preprojective", "--diagram", "E7", "--kind", "h"])
            .env("TAUPOLY_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}

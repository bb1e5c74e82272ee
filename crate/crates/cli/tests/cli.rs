use std::process::{Command, Output};

fn corank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decompose_clebsch_gordan() {
    let o = corank(&["decompose", "A1", "2", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "weight,multiplicity,dim\n6,1,7\n4,1,5\n2,1,3\n");
}

#[test]
fn decompose_trivial_source() {
    let o = corank(&["decompose", "A1", "0", "5"]);
    assert_eq!(stdout(&o), "weight,multiplicity,dim\n5,1,6\n");
}

#[test]
fn decompose_a2_json() {
    let o = corank(&["decompose", "A2", "1,0", "0,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        serde_json::json!([
            {"weight": [1, 0], "multiplicity": 1, "dim": 3},
            {"weight": [0, 2], "multiplicity": 1, "dim": 6}
        ])
    );
}

#[test]
fn verify_symmetric_forms() {
    let o = corank(&["verify", "A2", "1,0", "2,0", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ConstantCorankOneCertified"));
}

#[test]
fn verify_json_has_witnesses() {
    let o = corank(&["verify", "A1", "4", "2", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let verdict = &v["candidates"][0]["verdict"];
    assert_eq!(verdict["kind"], "CertifiedNotConstant");
    assert_eq!(verdict["min_rank_witness"]["rank"], 1);
    assert!(verdict["max_rank_witness"]["point"][0].is_string());
}

#[test]
fn scan_small_grids() {
    let o = corank(&["scan-sl2", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("m,n,k,nu,mult,rank_closed_orbit,rank_generic,verdict,seed")
    );
    let ks: Vec<&str> = lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(ks.len(), 4);
    assert!(ks.iter().all(|k| *k == "0" || *k == "1"));
    assert_eq!(corank(&["scan-sl2", "4"]).status.code(), Some(0));
}

#[test]
fn output_is_reproducible() {
    let args = ["scan-sl2", "5", "--seed", "7", "--format", "json"];
    let a = corank(&args);
    let b = corank(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("corank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wedge.csv");
    let o = corank(&["wedge", "4", "1", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,r,k,ker_e,ker_sum,strict\n4,1,2,2,0,true\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn wedge_cases() {
    assert!(stdout(&corank(&["wedge", "5", "2", "1"])).contains("5,2,1,4,4,false"));
    assert_eq!(corank(&["wedge", "5", "1", "3"]).status.code(), Some(0));
}

#[test]
fn lemmas_pass() {
    let o = corank(&["lemmas", "B2", "--max-dim", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("false"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(corank(&["decompose", "X2", "1", "1"]).status.code(), Some(1));
    assert_eq!(corank(&["decompose", "A1", "1"]).status.code(), Some(1));
    assert_eq!(corank(&["verify", "A1", "-1", "2", "2"]).status.code(), Some(1));
    assert_eq!(corank(&["wedge", "4", "2", "2"]).status.code(), Some(1));
    assert_eq!(corank(&["decompose", "A2", "1", "1"]).status.code(), Some(1));
    assert_eq!(corank(&["--format", "xml", "wedge", "4", "1", "2"]).status.code(), Some(1));
}

#[test]
fn guard_is_enforced() {
    let o = corank(&["decompose", "A2", "9,9", "9,9", "--guard", "50"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension guard"));
}

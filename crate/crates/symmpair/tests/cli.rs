use serde_json::Value;
use std::process::{Command, Output};

fn symmpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symmpair")).args(args).env_remove("SYMMPAIR_RANK_GUARD").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const SL3_E: &str = r#"{"field":"Q","rows":[["0","1","0"],["0","0","0"],["1","0","0"]]}"#;

#[test]
fn regquot_doubled_origin() {
    let out = symmpair(&["regquot", "AIII:group=GL,n=2,m=1", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["schema"], "symmpair.regquot/1");
    assert_eq!(v["version"], symmpair_core::VERSION);
    assert_eq!(v["seed"], 0);
    let r = &v["result"];
    assert!(r["summary"].as_str().unwrap().contains("doubled origin"));
    let sheets: Vec<&Value> = r["strata"].as_array().unwrap().iter().map(|s| &s["sheets"]).collect();
    assert_eq!(sheets, [&Value::from(1), &Value::from(2)]);
    assert_eq!(r["Z"][0]["equations"], "d1 = 0");
}

#[test]
fn parse_error_exits_one() {
    let out = symmpair(&["pair", "info", "BOGUS:n=1"]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown family BOGUS"));
    let out = symmpair(&["pair", "info", "BOGUS:n=1", "--json"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["kind"], "ParseError");
    assert_eq!(code(&symmpair(&["pair", "info", "AIII:group=GL,n=1,m=1"])), 1);
}

#[test]
fn usage_exit_codes() {
    assert_eq!(code(&symmpair(&["--help"])), 0);
    assert_eq!(code(&symmpair(&["--version"])), 0);
    assert_eq!(code(&symmpair(&["regquot"])), 1);
    assert_eq!(code(&symmpair(&["frobnicate"])), 1);
    assert_eq!(code(&symmpair(&["verify", "99"])), 1);
}

#[test]
fn pair_info_reports_model() {
    let out = symmpair(&["pair", "info", "AIII:group=GL,n=4,m=2", "--json"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    assert_eq!(r["restricted_type"], "C2");
    assert_eq!(r["quasi_split"]["computed"], true);
    assert_eq!(r["model"]["field"], "Q");
    assert_eq!(r["model"]["cartan"].as_array().unwrap().len(), 2);
    assert_eq!(r["model"]["cartan"][0]["rows"][0][2], "1");
}

#[test]
fn unresolved_exits_two() {
    let out = symmpair(&["regquot", "BDI:n=8,m=4", "--json"]);
    assert_eq!(code(&out), 2);
    let r = &json_of(&out)["result"];
    assert_eq!(r["max_sheets"], 4);
    assert!(!r["unresolved"].as_array().unwrap().is_empty());

    let x = r#"{"field":"Q","rows":[["0","0","1","0"],["0","0","0","2"],["1","0","0","0"],["0","2","0","0"]]}"#;
    let out = symmpair(&["centralizer", "CI:n=2", "--x", x, "--json"]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(json_of(&out)["result"]["unresolved"].is_string());
}

#[test]
fn centralizer_mu3() {
    let out = symmpair(&["centralizer", "AIII:group=SL,n=3,m=1", "--x", SL3_E, "--json"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    assert_eq!(r["regular"], true);
    assert_eq!(r["group"]["component_count"], 3);
    assert_eq!(r["group"]["dim"], 1);
    assert_eq!(r["commutation_system"]["condition"], "det = 1");
    assert_eq!(r["jordan"]["semisimple"]["rows"][0][0], "0");
}

#[test]
fn spectral_commands() {
    let blk = r#"{"field":"Q","rows":[["1","0"],["0","2"]]}"#;
    let out = symmpair(&["spectral", "invariants", "--n", "2", "--C", blk, "--D", blk, "--json"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    assert_eq!(r["a"], serde_json::json!(["-5", "4"]));
    assert_eq!(r["discriminant"], "9");
    assert_eq!(r["sheets"], 1);

    for (a, sheets) in [("−5,4", 1), ("-5,4", 1), ("1,0", 2), ("0,0", 2)] {
        let out = symmpair(&["spectral", "sheets", "--a", a, "--json"]);
        assert_eq!(code(&out), 0, "{a}");
        assert_eq!(json_of(&out)["result"]["sheets"], sheets, "{a}");
    }
    assert_eq!(code(&symmpair(&["spectral", "invariants", "--n", "3", "--C", blk, "--D", blk])), 1);
}

#[test]
fn hitchin_commands() {
    let out = symmpair(&["hitchin", "base", "--pair", "AIII:group=GL,n=4,m=2", "--genus", "2", "--degD", "4", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["base_dimension"], 22);
    let out = symmpair(&["hitchin", "sheets", "--degD", "3", "--json"]);
    assert_eq!(json_of(&out)["result"]["degrees"], serde_json::json!(["1", "3", "3", "1"]));
    let out = symmpair(&["hitchin", "base", "--pair", "AIII:group=GL,n=4,m=2", "--genus", "2", "--degD", "3"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("below 2g"));
    let out = symmpair(&["hitchin", "base", "--pair", "AIII:group=GL,n=2,m=1", "--genus", "2", "--canonical", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["base_dimension"], 3);
}

#[test]
fn rank_guard_env() {
    let run = |guard: &str| {
        Command::new(env!("CARGO_BIN_EXE_symmpair"))
            .args(["regquot", "CI:n=3", "--json"])
            .env("SYMMPAIR_RANK_GUARD", guard)
            .output()
            .unwrap()
    };
    let out = run("2");
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["kind"], "EnumerationLimitExceeded");
    assert_eq!(code(&run("3")), 0);
    assert_eq!(code(&run("x")), 1);
}

#[test]
fn verify_exit_codes() {
    let out = symmpair(&["verify", "4", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["result"]["failed"], serde_json::json!([]));
    let out = symmpair(&["verify", "7"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL  7"));
}

#[test]
fn same_seed_same_bytes() {
    let a = symmpair(&["verify", "5", "--seed", "3", "--json"]);
    let b = symmpair(&["verify", "5", "--seed", "3", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["seed"], 3);
    assert_eq!(v["command"], serde_json::json!(["verify", "5", "--seed=3", "--json"]));
}

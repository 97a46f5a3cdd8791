use std::process::{Command, Output};

use flagrep_core::geometry::ProjectiveSpace;
use serde_json::{json, Value};

fn flagrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagrep")).args(args).env_remove("FLAGREP_THREADS").output().unwrap()
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = flagrep(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

fn fano_files(dir: &tempfile::TempDir) -> (String, String) {
    let space = ProjectiveSpace::new(2, 2).unwrap();
    let design = json!({ "v": 7, "blocks": space.flats(1).unwrap() });
    let g = space.induced_action(&space.gl_generators(), space.points()).unwrap();
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    let dpath = dir.path().join("fano.json");
    let gpath = dir.path().join("gl32.json");
    std::fs::write(&dpath, design.to_string()).unwrap();
    std::fs::write(&gpath, json!({ "degree": 7, "generators": gens }).to_string()).unwrap();
    (dpath.display().to_string(), gpath.display().to_string())
}

#[test]
fn feasible_csv_and_json() {
    let out = flagrep(&["feasible", "--max-v", "20", "--max-lambda", "5", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("v,b,r,k,lambda"));
    assert!(text.lines().any(|l| l == "12,22,11,6,5"));

    let (code, r) = report(&["feasible", "--max-v", "5", "--max-lambda", "1"]);
    assert_eq!((code, r["status"].as_str()), (0, Some("ok")));
    assert_eq!(r["results"]["rows"], json!([]));

    let out = flagrep(&["feasible", "--max-v", "130", "--max-lambda", "2", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "120,255,17,8,1"));
    assert!(text.lines().any(|l| l == "120,136,17,15,2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(flagrep(&["feasible", "--max-v", "x", "--max-lambda", "1"]).status.code(), Some(2));
    assert_eq!(flagrep(&["feasible", "--max-v", "10", "--max-lambda", "0"]).status.code(), Some(2));
    assert_eq!(flagrep(&["verify-tables", "--table", "8"]).status.code(), Some(2));
    assert_eq!(flagrep(&["verify-tables", "--table", "7", "--q-grid", "6"]).status.code(), Some(2));
    assert_eq!(flagrep(&["construct", "--design", "wbs", "--q", "9"]).status.code(), Some(2));
    assert_eq!(flagrep(&["check", "--in", "/nonexistent/design.json"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_flagrep"))
        .args(["feasible", "--max-v", "10", "--max-lambda", "1"])
        .env("FLAGREP_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_tables_examples() {
    let (code, r) = report(&["verify-tables", "--table", "4"]);
    assert_eq!(code, 0);
    let vs: Vec<&str> = r["results"]["tables"][0]["rows"].as_array().unwrap().iter().map(|x| x["v"].as_str().unwrap()).collect();
    for v in ["28", "21", "36", "45", "66", "55"] {
        assert!(vs.contains(&v), "{v}");
    }

    let (code, r) = report(&["verify-tables", "--table", "3"]);
    assert_eq!((code, r["status"].as_str()), (0, Some("ok")));
    let verdicts = &r["results"]["tables"][0]["verdicts"];
    assert_eq!(verdicts["AnnotatedClosed"], json!(3));
    assert!(verdicts.get("SurvivesToParams").is_none());

    let (code, r) = report(&["verify-tables", "--table", "7", "--q-grid", "2,4,8"]);
    assert_eq!(code, 0);
    let rows = r["results"]["tables"][0]["rows"].as_array().unwrap();
    assert!(rows.iter().all(|x| x["verdict"]["name"] == "Eliminated"));

    let (code, r) = report(&["verify-tables", "--table", "2"]);
    assert_eq!(code, 0);
    assert!(r["results"]["tables"][0]["rows"].as_array().unwrap().iter().all(|x| x["matches"] == true));
}

#[test]
fn verify_tables_csv() {
    let out = flagrep(&["verify-tables", "--table", "4", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 11);
    assert!(text.starts_with("table,class,group,stabilizer,q,v,u_r,verdict\n"));
    assert_eq!(flagrep(&["verify-tables", "--table", "1", "--csv"]).status.code(), Some(2));
}

#[test]
fn construct_examples() {
    let (code, r) = report(&["construct", "--design", "wbs", "--q", "16"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["params"], json!({ "v": 120, "b": 255, "r": 17, "k": 8, "lambda": 1 }));
    assert_eq!(r["results"]["r_prime"], json!(true));

    let (code, r) = report(&["construct", "--design", "wbs", "--q", "8"]);
    assert_eq!((code, r["status"].as_str()), (0, Some("ok")));
    assert_eq!(r["results"]["params"]["r"], json!(9));
    assert_eq!(r["results"]["r_prime"], json!(false));
    assert!(!r["results"]["warnings"].as_array().unwrap().is_empty());

    let (code, r) = report(&["construct", "--design", "table1:4"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["label"], json!("2-(11,5,2)"));
    assert_eq!(r["results"]["group"]["flag_transitive"], json!(true));
}

#[test]
fn check_examples() {
    let dir = tempfile::tempdir().unwrap();
    let (design, group) = fano_files(&dir);

    let (code, r) = report(&["check", "--in", &design, "--group", &group]);
    assert_eq!((code, r["status"].as_str()), (0, Some("ok")));
    assert_eq!(r["results"]["group"]["flag_transitive"], json!(true));
    assert_eq!(r["results"]["group"]["subdegrees"], json!([1, 6]));

    let (code, r) = report(&["check", "--in", &design]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["params"], json!({ "v": 7, "b": 7, "r": 3, "k": 3, "lambda": 1 }));
    assert_eq!(r["results"]["group"], Value::Null);

    // move one point of the first line
    let mut d: Value = serde_json::from_str(&std::fs::read_to_string(&design).unwrap()).unwrap();
    let first = d["blocks"][0].as_array().unwrap().clone();
    let spare = (0..7).find(|x| !first.contains(&json!(x))).unwrap();
    d["blocks"][0] = json!([first[0], first[1], spare]);
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, d.to_string()).unwrap();
    let (code, r) = report(&["check", "--in", broken.to_str().unwrap()]);
    assert_eq!((code, r["status"].as_str()), (1, Some("error")));
    assert!(r["results"]["error"].as_str().unwrap().contains("pair"), "{r}");

    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{\"v\": 7, \"blocks\": ").unwrap();
    assert_eq!(flagrep(&["check", "--in", garbled.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn construct_output_feeds_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w8.json");
    let (code, _) = report(&["construct", "--design", "wbs", "--q", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, r) = report(&["check", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["params"]["v"], json!(28));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_flagrep"))
            .args(["verify-tables", "--table", "all"])
            .env("FLAGREP_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, run("4").stdout);
}

//! The acceptance battery: one PASS/FAIL line per criterion.
//!
//! The default suite (seed 0, bound 8, trials 20, max-dim 6) runs twice through the binary;
//! the first report decides criteria 1-14 and the pair decides criterion 15. A few criteria
//! also get direct checks through `sdcheck check`.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;
use sdcheck_core::corpus::corpus_algebras;

fn sdcheck(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_sdcheck"))
        .args(args)
        .args(["--format", "json"])
        .env_remove("SDCHECK_SEED")
        .output()
        .expect("sdcheck runs");
    let code = out.status.code().unwrap_or(-1);
    let text = String::from_utf8_lossy(&out.stdout);
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("unparseable report for {args:?}: {e}\n{text}"));
    (code, value)
}

struct Property {
    checks: u64,
    failures: u64,
    witnesses: Vec<String>,
}

fn property(report: &Value, id: u64) -> Property {
    let p = report["properties"]
        .as_array()
        .and_then(|ps| ps.iter().find(|p| p["id"] == id))
        .unwrap_or_else(|| panic!("property {id} missing from the suite report"));
    Property {
        checks: p["checks"].as_u64().unwrap_or(0),
        failures: p["failures"].as_u64().unwrap_or(u64::MAX),
        witnesses: p["witnesses"]
            .as_array()
            .map(|w| w.iter().map(|s| s.as_str().unwrap_or_default().to_string()).collect())
            .unwrap_or_default(),
    }
}

/// Passes when the property has no failures and at least `min_checks` checks.
fn from_property(report: &Value, id: u64, min_checks: u64) -> (bool, String) {
    let p = property(report, id);
    let ok = p.failures == 0 && p.checks >= min_checks;
    let mut detail = format!("{} checks, {} failures (need >= {min_checks} checks)", p.checks, p.failures);
    if let Some(w) = p.witnesses.first() {
        detail += &format!("; first witness: {w}");
    }
    (ok, detail)
}

/// Everything in the property results except timings.
fn witness_set(report: &Value) -> Vec<Value> {
    report["properties"]
        .as_array()
        .expect("properties")
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.as_object_mut().expect("property object").remove("elapsed_ms");
            p
        })
        .collect()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (code1, first) = sdcheck(&["suite"]);
    let suite_ms = first["wall_clock_ms"].as_u64().unwrap_or(0);
    let (code2, second) = sdcheck(&["suite"]);
    let corpus = first["corpus"].as_array().map_or(0, |c| c.len()) as u64;
    let algebras = corpus_algebras();
    let n_alg = algebras.len() as u64;

    let mut results: Vec<(u32, &str, bool, String)> = Vec::new();
    let mut record = |id: u32, name: &'static str, (ok, detail): (bool, String)| results.push((id, name, ok, detail));

    // 1: every corpus algebra, both checks, certified; plus the CLI on each regular bimodule
    let (ok, mut detail) = from_property(&first, 1, 2 * n_alg);
    let mut cli_ok = true;
    for a in &algebras {
        let (code, rep) = sdcheck(&["check", "semidualizing", "-b", &format!("regular({})", a.name())]);
        cli_ok &= code == 0 && rep["report"]["overall"]["kind"] == "yes";
        let (code, _) = sdcheck(&["check", "faithful", "-b", &format!("regular({})", a.name())]);
        cli_ok &= code == 0;
    }
    detail += &format!("; CLI exit 0 on all {n_alg} regular bimodules: {cli_ok}");
    record(1, "rank-one regular bimodules", (ok && cli_ok, detail));

    // 2: per prime one semidualizing check and four checks for each of 20 trials
    record(2, "Morita row space", from_property(&first, 2, 2 * (1 + 4 * 20)));

    // 3: exact (b2) dimensions through the CLI
    let (ok, mut detail) = from_property(&first, 3, n_alg);
    let mut dims_ok = true;
    for a in &algebras {
        let (code, rep) = sdcheck(&["check", "semidualizing", "-b", &format!("rsquared({})", a.name())]);
        let b2 = rep["report"]["conditions"]
            .as_array()
            .and_then(|cs| cs.iter().find(|c| c["label"] == "b2"))
            .cloned()
            .unwrap_or(Value::Null);
        let n = a.dim() as u64;
        dims_ok &= code == 2 && b2["status"] == "fail" && b2["dims"] == serde_json::json!([n, 4 * n]);
    }
    detail += &format!("; CLI exit 2 with (b2) dims [n, 4n] on every algebra: {dims_ok}");
    record(3, "negative control R+R", (ok && dims_ok, detail));

    // 4: semidualizing at bound 8, faithful, k a witnessed non-member
    let (ok, mut detail) = from_property(&first, 4, 5);
    let c = "dualizing(F2[x,y]/(x2,xy,y2))";
    let (sd, _) = sdcheck(&["check", "semidualizing", "-b", c, "--bound", "8"]);
    let (fa, _) = sdcheck(&["check", "faithful", "-b", c]);
    let (au, rep) = sdcheck(&["check", "auslander", "-b", c, "-m", "k", "--bound", "8"]);
    let witness = rep["report"]["conditions"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["status"] == "fail"))
        .cloned()
        .unwrap_or(Value::Null);
    let degree = witness["degree"].as_u64();
    let cli_ok = (sd == 0 || sd == 3) && fa == 0 && au == 2 && degree.is_some_and(|d| d <= 8);
    detail += &format!(
        "; CLI semidualizing exit {sd}, faithful exit {fa}, k: exit {au} witness ({}) at degree {degree:?}",
        witness["label"].as_str().unwrap_or("?")
    );
    record(4, "dualizing example", (ok && cli_ok, detail));

    record(5, "projectives in A_C, injectives in B_C", from_property(&first, 5, 100));
    record(6, "left-right inverse identities", from_property(&first, 6, 50 * corpus));
    record(7, "two-of-three", from_property(&first, 7, 100 * corpus));
    // 20 members on both sides of every bimodule; non-members exist only where the classes
    // are proper, so at least 20 are required on each side over the whole corpus
    let (ok, mut detail) = from_property(&first, 8, 2 * 20 * corpus);
    let counts = first["properties"]
        .as_array()
        .and_then(|ps| ps.iter().find(|p| p["id"] == 8))
        .map_or(Value::Null, |p| p["counts"].clone());
    let found = |key: &str| counts[key].as_u64().unwrap_or(0);
    let enough = found("A_C non-members") >= 20 && found("B_C non-members") >= 20;
    detail += &format!("; counts {counts}");
    record(8, "characterizing complexes", (ok && enough, detail));
    record(9, "Ext/Tor comparison tables", from_property(&first, 9, 2 * 20));
    record(10, "evaluation identities", from_property(&first, 10, 2 * 20));
    record(11, "precover/preenvelope certificates", from_property(&first, 11, 2 * 20 * corpus));
    record(12, "faithfulness oracle", from_property(&first, 12, corpus));
    record(13, "homology balance oracle", from_property(&first, 13, n_alg));
    record(14, "radical oracle", from_property(&first, 14, n_alg));

    let same = witness_set(&first) == witness_set(&second);
    record(
        15,
        "determinism",
        (
            same && code1 == code2,
            format!("two default runs: identical witness sets {same}, exit codes {code1} and {code2}"),
        ),
    );

    let mut all = true;
    for (id, name, ok, detail) in &results {
        all &= ok;
        println!("criterion {id:>2} {} {name}: {detail}", if *ok { "PASS" } else { "FAIL" });
    }
    println!(
        "default suite: exit {code1}, {suite_ms} ms (target under 120000 ms); acceptance total {} ms",
        start.elapsed().as_millis()
    );
    if all {
        println!("acceptance: all 15 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES");
        ExitCode::FAILURE
    }
}

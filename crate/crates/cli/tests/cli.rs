use std::fs;
use std::process::{Command, Output};

use qasl_cli::{parse_jobspec, run, GkOut, HilbertOut, LatticeAnalysis};
use serde_json::Value;

fn qasl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qasl"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn grass_table_counts() {
    let v = stdout_json(&qasl(&["grass", "table", "--m", "2", "--n", "4"]));
    assert_eq!(v["straightening"].as_array().unwrap().len(), 2);
    assert_eq!(v["commutation"].as_array().unwrap().len(), 36);
}

#[test]
fn grass_table_at_q_one_is_classical() {
    let v = stdout_json(&qasl(&[
        "grass", "table", "--m", "2", "--n", "4", "--q", "1",
    ]));
    for row in v["commutation"].as_array().unwrap() {
        assert_eq!(row["qpow"], "1");
    }
}

#[test]
fn richardson_gk_of_diamond() {
    let out = qasl(&["richardson", "gk", "--alpha", "1,3", "--beta", "2,4"]);
    let g: GkOut = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(g.gk_dim, 3);
    let text = qasl(&[
        "richardson",
        "gk",
        "--alpha",
        "1,3",
        "--beta",
        "2,4",
        "--format",
        "text",
    ]);
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "3\n");
}

#[test]
fn richardson_hilbert_of_diamond() {
    let out = qasl(&["richardson", "hilbert", "--alpha", "1,3", "--beta", "2,4"]);
    let h: HilbertOut = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(h.numerator, "1 + t");
    assert_eq!(&h.coefficients[..4], ["1", "4", "9", "16"]);
    assert!(h.palindromic);
}

#[test]
fn chain_lattice_rank() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.json");
    fs::write(
        &path,
        r#"{"elements":["a","b","c","d"],"covers":[["a","b"],["b","c"],["c","d"]]}"#,
    )
    .unwrap();
    let out = qasl(&["lattice", "analyze", "--input", path.to_str().unwrap()]);
    let a: LatticeAnalysis = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(a.rank, a.size - 1);
    assert!(a.distributive);
    assert_eq!(a.incomparable_pairs, 0);
}

#[test]
fn pentagon_is_reported_not_distributive() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n5.json");
    fs::write(
        &path,
        r#"{"elements":["0","a","b","c","1"],"covers":[["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]}"#,
    )
    .unwrap();
    let v = stdout_json(&qasl(&[
        "lattice",
        "analyze",
        "--input",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["distributive"], false);
    assert!(v["realization"].is_null());
    assert!(v["distributivity_witness"].is_array());
}

#[test]
fn toric_commands_on_a_degenerate_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let out = qasl(&[
        "degenerate",
        "--m",
        "2",
        "--n",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let saved: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let pres = dir.path().join("pres.json");
    fs::write(&pres, saved["presentation"].to_string()).unwrap();
    let pres = pres.to_str().unwrap();

    let c = stdout_json(&qasl(&["toric", "certify", "--input", pres]));
    assert_eq!(c["gk_dim"], 5);

    let nf = stdout_json(&qasl(&[
        "toric", "nf", "--input", pres, "--word", "2,3", "1,4",
    ]));
    assert_eq!(nf["monomial"], serde_json::json!(["1,3", "2,4"]));

    let t = stdout_json(&qasl(&["toric", "torus", "--input", pres]));
    assert_eq!(t["images"].as_array().unwrap().len(), 6);
    assert_eq!(t["relations"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn input_errors_exit_two_with_json() {
    let out = qasl(&["grass", "table", "--m", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "BadShape");
    assert_eq!(v["exit_code"], 2);

    let out = qasl(&["richardson", "gk", "--alpha", "1,4", "--beta", "2,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qasl(&["toric", "certify", "--input", "/nonexistent/p.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn short_hilbert_bound_exits_four() {
    let out = qasl(&[
        "richardson",
        "hilbert",
        "--alpha",
        "1,3",
        "--beta",
        "2,4",
        "--degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "ReconstructionFailed");
}

#[test]
fn inconsistent_presentation_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(
        &path,
        r#"{"lattice":{"chain_product":{"sizes":[2,2]}},"q":[["1,1","1,1","q"]]}"#,
    )
    .unwrap();
    let out = qasl(&["toric", "certify", "--input", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["degenerate", "--m", "2", "--n", "4", "--seed", "7"];
    assert_eq!(qasl(&args).stdout, qasl(&args).stdout);
    let args = ["grass", "table", "--m", "2", "--n", "5"];
    assert_eq!(qasl(&args).stdout, qasl(&args).stdout);
}

#[test]
fn job_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    fs::write(
        &path,
        r#"{"command":"richardson hilbert","alpha":"1,3","beta":"2,4"}"#,
    )
    .unwrap();
    let from_job = qasl(&["job", path.to_str().unwrap()]);
    let from_flags = qasl(&["richardson", "hilbert", "--alpha", "1,3", "--beta", "2,4"]);
    assert!(from_job.status.success());
    assert_eq!(from_job.stdout, from_flags.stdout);
}

#[test]
fn library_runner_round_trips_json() {
    let job =
        parse_jobspec(r#"{"command":"richardson hilbert","alpha":"1,2","beta":"3,4"}"#).unwrap();
    let out = run(&job).unwrap();
    assert_eq!(out.exit, 0);
    let h: HilbertOut = serde_json::from_str(&out.body).unwrap();
    let again = serde_json::to_string_pretty(&h).unwrap() + "\n";
    assert_eq!(again, out.body);
    assert_eq!(h.coefficients[2], "20");
}

fn round_trips<T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(
    job: &str,
) {
    let out = run(&parse_jobspec(job).unwrap()).unwrap();
    let value: T = serde_json::from_str(&out.body).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&value).unwrap() + "\n",
        out.body,
        "{job}"
    );
    let again: T = serde_json::from_str(&out.body).unwrap();
    assert_eq!(again, value);
}

#[test]
fn every_output_round_trips() {
    use qasl::io::TableDto;
    use qasl_cli::{CertifyOut, DegenerateOut, GorensteinOut, GrassVerify, NfOut, TorusOut};

    round_trips::<TableDto>(r#"{"command":"grass table","m":2,"n":4}"#);
    round_trips::<TableDto>(r#"{"command":"grass table","m":2,"n":4,"q":"-1/2"}"#);
    round_trips::<GrassVerify>(r#"{"command":"grass verify","m":2,"n":4}"#);
    round_trips::<GkOut>(r#"{"command":"richardson gk","alpha":"1,2","beta":"2,4"}"#);
    round_trips::<GorensteinOut>(
        r#"{"command":"richardson gorenstein","alpha":"1,3","beta":"3,4"}"#,
    );

    let dir = tempfile::tempdir().unwrap();
    let lattice = dir.path().join("l.json");
    fs::write(&lattice, r#"{"chain_product":{"sizes":[2,3]}}"#).unwrap();
    round_trips::<LatticeAnalysis>(&format!(
        r#"{{"command":"lattice analyze","input":{:?}}}"#,
        lattice.to_str().unwrap()
    ));

    let out = run(&parse_jobspec(r#"{"command":"degenerate","m":2,"n":4}"#).unwrap()).unwrap();
    let d: DegenerateOut = serde_json::from_str(&out.body).unwrap();
    round_trips::<DegenerateOut>(r#"{"command":"degenerate","m":2,"n":4}"#);
    let pres = dir.path().join("p.json");
    fs::write(&pres, serde_json::to_string(&d.presentation).unwrap()).unwrap();
    let pres = pres.to_str().unwrap();
    round_trips::<CertifyOut>(&format!(
        r#"{{"command":"toric certify","input":{pres:?}}}"#
    ));
    round_trips::<TorusOut>(&format!(r#"{{"command":"toric torus","input":{pres:?}}}"#));
    round_trips::<NfOut>(&format!(
        r#"{{"command":"toric nf","input":{pres:?},"word":["3,4","1,2","2,3","1,4"]}}"#
    ));
}

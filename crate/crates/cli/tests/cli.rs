use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cdgraph"));
    c.env_remove("CDGRAPH_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}; stderr: {}", String::from_utf8_lossy(&out.stderr)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn schemas_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

fn load_schema(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(schemas_dir().join(name)).unwrap()).unwrap()
}

fn validate(schema: &str, instance: &Value) {
    let env = load_schema("envelope.schema.json");
    let id = env["$id"].as_str().unwrap().to_string();
    let validator = jsonschema::options()
        .with_resource(id, jsonschema::Resource::from_contents(env).unwrap())
        .build(&load_schema(schema))
        .unwrap_or_else(|e| panic!("{schema}: {e}"));
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

#[test]
fn analyze_named_is_deterministic_and_schema_valid() {
    let a = run(&["analyze", "--named", "suz8"]);
    let b = run(&["analyze", "--named", "suz8"]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    validate("envelope.schema.json", &v);
    validate("analyze.schema.json", &v["result"]);
    assert_eq!(v["seed"], 0);
    assert!(v.get("timings").is_none());
    assert_eq!(v["result"]["verdicts"]["disconnected_structure"]["branch"], "ii");
    assert_eq!(v["result"]["verdicts"]["disconnected_type"], "c");
}

#[test]
fn seed_and_timings_are_recorded() {
    let v = json(&run(&["analyze", "--named", "s3", "--seed", "7", "--timings"]));
    assert_eq!(v["seed"], 7);
    assert!(v["timings"]["oracle"].is_u64());
    validate("envelope.schema.json", &v);
}

#[test]
fn trivial_group_has_null_diameter() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "trivial.grp", "degree 1\n");
    let out = run(&["analyze", "--group", g.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["input"]["kind"], "group");
    assert_eq!(v["input"]["name"], "trivial");
    assert!(v["result"]["graph"]["vertices"].as_array().unwrap().is_empty());
    assert!(v["result"]["verdicts"]["diameter"].is_null());
    assert!(v["result"]["metrics"]["diameter"].is_null());
    validate("analyze.schema.json", &v["result"]);
}

#[test]
fn input_digest_tracks_file_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.grp", "degree 3\n(0 1 2)\n");
    let b = write(dir.path(), "b.grp", "# same group\ndegree 3\n(0 1 2)\n");
    let da = json(&run(&["analyze", "--group", a.to_str().unwrap()]))["input"]["sha256"].clone();
    let db = json(&run(&["analyze", "--group", b.to_str().unwrap()]))["input"]["sha256"].clone();
    assert_ne!(da, db);
    assert_eq!(da.as_str().unwrap().len(), 64);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "bad.grp", "degree 3\n(0 1)\n(0 7)\n");
    let out = run(&["analyze", "--group", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad.grp") && err.contains("line 3"), "{err}");
}

#[test]
fn scale_errors_name_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let r = write(dir.path(), "big.recipe", "kind = affine_semilinear\np = 2\nn = 13\nh = gamma\n");
    let out = run(&["analyze", "--recipe", r.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("AFFINE_MAX_ORDER"), "{}", stderr(&out));
}

#[test]
fn unknown_suite_and_id_are_errors() {
    let out = run(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
    let out = run(&["analyze", "--named", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("known ids"));
}

#[test]
fn exactly_one_source_is_required() {
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--named", "s3", "--spec", "x"]).status.code(), Some(2));
}

fn suite(v: &Value) -> &Value {
    &v["result"]["suites"][0]
}

#[test]
fn verify_zsigmondy_documented_sweep() {
    let out = run(&["verify", "zsigmondy", "--a-max", "50", "--n-max", "24"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    validate("envelope.schema.json", &v);
    validate("verify.schema.json", &v["result"]);
    assert_eq!(suite(&v)["failures"].as_array().unwrap().len(), 0);
    assert_eq!(suite(&v)["checked"], 49 * 24);
    assert_eq!(v["input"]["kind"], "params");
}

#[test]
fn verify_modules_documented_sweep() {
    let out = run(&["verify", "modules", "--qm-max", "4096"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(suite(&json(&out))["verdict"], "pass");
}

#[test]
fn verify_palfy_default_corpus() {
    let out = run(&["verify", "palfy", "--corpus", "default", "--jobs", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["input"]["kind"], "corpus");
    assert_eq!(suite(&v)["failures"].as_array().unwrap().len(), 0);
    assert!(suite(&v)["checked"].as_u64().unwrap() >= 25);
    // The non-solvable control is outside the claim and never fails the run.
    assert_eq!(suite(&v)["summary"]["non_solvable"][0]["group"], "a5");
    assert_eq!(suite(&v)["summary"]["non_solvable"][0]["palfy_ok"], false);
}

#[test]
fn custom_corpus_output_is_sorted_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "mini.txt",
        "version = 1\n\n[zeta]\nkind = named\nid = aff7\n\n[alpha]\nkind = named\nid = a4\n\n[mid]\nkind = affine_semilinear\np = 5\nn = 1\nh = gamma\n",
    );
    let out = run(&["verify", "clifford", "--corpus", m.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    let names: Vec<&str> = suite(&v)["summary"]["compared"].as_array().unwrap().iter().map(|c| c["group"].as_str().unwrap()).collect();
    assert_eq!(names, ["alpha", "mid", "zeta"]);
    assert_eq!(v["input"]["name"], "mini");
}

#[test]
fn bad_manifest_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "dup.txt", "version = 1\n[a]\nkind = named\nid = s3\n[a]\nkind = named\nid = s3\n");
    let out = run(&["verify", "palfy", "--corpus", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5"), "{}", stderr(&out));
}

#[test]
fn construct_round_trips_through_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("heis3.grp");
    assert!(run(&["construct", "--named", "heis3", "-o", g.to_str().unwrap()]).status.success());
    let from_file = json(&run(&["analyze", "--group", g.to_str().unwrap()]));
    let named = json(&run(&["analyze", "--named", "heis3"]));
    assert_eq!(from_file["result"]["cd"], named["result"]["cd"]);
    assert_eq!(from_file["result"]["order"], "54");
}

#[test]
fn construct_recipe_and_spec() {
    let dir = tempfile::tempdir().unwrap();
    let r = write(dir.path(), "e.recipe", "name = e32\nkind = extraspecial\np = 2\nm = 2\nvariant = qd\nexpect.order = 32\n");
    let out = run(&["construct", "--recipe", r.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("order 32"));
    let s = dir.path().join("lewis.spec");
    assert!(run(&["construct", "--named", "lewis", "-o", s.to_str().unwrap()]).status.success());
    let v = json(&run(&["analyze", "--spec", s.to_str().unwrap()]));
    assert_eq!(v["result"]["graph"]["vertices"], serde_json::json!([2, 3, 5, 7, 31, 151]));
}

#[test]
fn export_dot_and_analyze_dot_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("g.dot");
    let out = run(&["analyze", "--named", "sl23", "--dot", d.to_str().unwrap()]);
    assert!(out.status.success());
    let exported = run(&["export-dot", "--named", "sl23"]);
    assert_eq!(std::fs::read(&d).unwrap(), exported.stdout);
    let text = String::from_utf8(exported.stdout).unwrap();
    assert!(text.starts_with("graph \"sl23\""), "{text}");
    assert!(text.contains("2 [") && text.contains("3 ["));
}

#[test]
fn limits_lists_named_bounds() {
    let out = run(&["limits"]);
    assert!(out.status.success());
    let v = json(&out);
    validate("limits.schema.json", &v);
    let names: Vec<&str> = v["limits"].as_array().unwrap().iter().map(|l| l["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"ORACLE_MAX_ORDER") && names.contains(&"AFFINE_MAX_ORDER"));
}

#[test]
fn cache_dir_is_filled_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let plain = run(&["analyze", "--named", "frob25"]);
    let first = bin().args(["analyze", "--named", "frob25"]).env("CDGRAPH_CACHE_DIR", dir.path()).output().unwrap();
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = bin().args(["analyze", "--named", "frob25"]).env("CDGRAPH_CACHE_DIR", dir.path()).output().unwrap();
    assert_eq!(plain.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn corrupt_cache_entries_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let go = || bin().args(["analyze", "--named", "s3"]).env("CDGRAPH_CACHE_DIR", dir.path()).output().unwrap();
    let good = go();
    let entry = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, r#"{"order":6,"degrees":[[1,5]],"provenance":"oracle"}"#).unwrap();
    let again = go();
    assert!(again.status.success(), "{}", stderr(&again));
    assert_eq!(good.stdout, again.stdout);
}

#[test]
fn verify_all_runs_every_suite() {
    let out = run(&["verify", "all", "--timings"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    validate("verify.schema.json", &v["result"]);
    let suites = v["result"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 13);
    assert!(suites.iter().all(|s| s["verdict"] == "pass"), "{}", serde_json::to_string(&suites.iter().map(|s| &s["verdict"]).collect::<Vec<_>>()).unwrap());
    assert_eq!(v["timings"].as_object().unwrap().len(), 13);
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn homkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homkit")).args(args).env_remove("HOMKIT_CACHE").output().unwrap()
}

fn with_cache(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homkit")).args(args).env("HOMKIT_CACHE", dir).output().unwrap()
}

fn first_line(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).lines().next().unwrap_or("").to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn ext_over_the_dual_numbers() {
    let (a, s) = (data("dual.json"), data("dual_s.json"));
    let o = homkit(&["--no-cache", "ext", "-A", &a, "-M", &s, "-N", &s, "-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(first_line(&o), "1");
}

#[test]
fn ext_vanishes_above_one_for_a2() {
    let (a, s1, s2) = (data("a2.json"), data("a2_s1.json"), data("a2_s2.json"));
    let o = homkit(&["--no-cache", "ext", "-A", &a, "-M", &s1, "-N", &s2, "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "0");
    let o = homkit(&["--no-cache", "ext", "-A", &a, "-M", &s1, "-N", &s2, "-n", "1"]);
    assert_eq!(first_line(&o), "1");
}

#[test]
fn degree_zero_is_hom() {
    let (a, p1, s1) = (data("a2.json"), data("a2_p1.json"), data("a2_s1.json"));
    let o = homkit(&["--no-cache", "--json", "ext", "-A", &a, "-M", &p1, "-N", &s1, "-n", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let text = v.to_string();
    assert!(text.contains("classic"), "{text}");
    let o = homkit(&["--no-cache", "ext", "-A", &a, "-M", &p1, "-N", &s1, "-n", "0"]);
    assert_eq!(first_line(&o), "1");
}

#[test]
fn ext_with_a_generated_pair() {
    let (a, s1, s2, pair) = (data("a2.json"), data("a2_s1.json"), data("a2_s2.json"), data("a2_pair.json"));
    let o = homkit(&["--no-cache", "ext", "-A", &a, "--pair", &pair, "-M", &s1, "-N", &s2, "-n", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(first_line(&o), "1");
}

#[test]
fn projective_dimensions() {
    let o = homkit(&["--no-cache", "pd", "-A", &data("a2.json"), "-M", &data("a2_s1.json")]);
    assert_eq!(first_line(&o), "Finite(1)");
    let o = homkit(&["--no-cache", "pd", "-A", &data("dual.json"), "-M", &data("dual_s.json")]);
    assert_eq!(first_line(&o), "CertifiedInfinite(period 1)");
    let o = homkit(&["--no-cache", "pd", "-A", &data("a2.json"), "-M", &data("a2_p1.json")]);
    assert_eq!(first_line(&o), "Finite(0)");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn small_cutoff_is_inconclusive() {
    let o = homkit(&["--no-cache", "--cutoff", "1", "pd", "-A", "catalog:a3-rad2", "-M", &data("a2_s1.json")]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert_eq!(first_line(&o), "UnknownBeyond(1)");
}

#[test]
fn findim_of_a_catalog_algebra() {
    let o = homkit(&["--no-cache", "findim", "-A", "catalog:a3-rad2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(first_line(&o), "findim = 2 (exact)");
}

#[test]
fn replacements_succeed() {
    let (a, s) = (data("a2.json"), data("a2_s2.json"));
    for side in ["cofibrant", "fibrant"] {
        let o = homkit(&["--no-cache", "replace", side, "-A", &a, "-M", &s]);
        assert_eq!(o.status.code(), Some(0), "{side}: {}", stderr(&o));
    }
}

#[test]
fn corrupted_module_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"dims\": {\"1\": 1\n");
    let o = homkit(&["--no-cache", "pd", "-A", &data("dual.json"), "-M", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains(&format!("{}:2:", bad.display())), "{err}");
}

#[test]
fn pair_referencing_a_corrupted_module_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "gen.json", "{\"dims\": [1,\n");
    let pair = write(dir.path(), "pair.json", "{\"mode\": \"generated\", \"generators\": [\"gen.json\"]}");
    let o = homkit(&[
        "--no-cache",
        "ext",
        "-A",
        &data("a2.json"),
        "--pair",
        pair.to_str().unwrap(),
        "-M",
        &data("a2_s1.json"),
        "-N",
        &data("a2_s2.json"),
        "-n",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains(&bad.display().to_string()), "{}", stderr(&o));
}

#[test]
fn manifest_referencing_a_corrupted_algebra_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "alg.json", "{\"vertices\": \n");
    let manifest = write(dir.path(), "m.json", "{\"seed\": 1, \"algebras\": [{\"name\": \"x\", \"algebra\": \"alg.json\"}]}");
    let o = homkit(&["--no-cache", "check", "invariants", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains(&bad.display().to_string()), "{}", stderr(&o));
}

#[test]
fn unknown_manifest_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = write(dir.path(), "m.json", "{\"seed\": 1, \"algebras\": [], \"colour\": 3}");
    let o = homkit(&["--no-cache", "check", "invariants", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn json_reports_do_not_depend_on_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let (a, s) = (data("dual.json"), data("dual_s.json"));
    let runs: [&[&str]; 2] = [
        &["--json", "ext", "-A", &a, "-M", &s, "-N", &s, "-n", "2"],
        &["--json", "cofdim", "-A", &a, "-M", &s],
    ];
    for args in runs {
        let uncached = homkit(&[&["--no-cache"], args].concat());
        let cold = with_cache(dir.path(), args);
        let warm = with_cache(dir.path(), args);
        assert_eq!(uncached.status.code(), cold.status.code());
        assert_eq!(uncached.stdout, cold.stdout);
        assert_eq!(cold.stdout, warm.stdout);
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some(), "cache stayed empty");
}

#[test]
fn corrupted_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let (a, m) = (data("a2.json"), data("a2_s1.json"));
    let args = ["--json", "pd", "-A", &a, "-M", &m];
    let first = with_cache(dir.path(), &args);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{ not json").unwrap();
    }
    let second = with_cache(dir.path(), &args);
    assert_eq!(second.status.code(), Some(0), "{}", stderr(&second));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn data_files_round_trip() {
    let alg = homkit_core::io::algebra_from_json(
        &serde_json::from_str(&std::fs::read_to_string(data("a2.json")).unwrap()).unwrap(),
    )
    .unwrap();
    let alg = std::sync::Arc::new(alg);
    for name in ["a2_s1.json", "a2_s2.json", "a2_p1.json"] {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap();
        let m = homkit_core::io::module_from_json(&alg, &v).unwrap();
        let back = homkit_core::io::module_from_json(&alg, &homkit_core::io::module_to_json(&m)).unwrap();
        assert_eq!(homkit_core::io::module_to_json(&back), homkit_core::io::module_to_json(&m), "{name}");
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn crcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crcheck")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theorem_json_is_deterministic() {
    let args = ["theorem", &fixture("heisenberg.toml"), &fixture("sphere.toml"), "--json"];
    let a = crcheck(&args);
    let b = crcheck(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["theorem"]["verdict"], "applies");
    assert_eq!(v["config"]["order"], "grevlex");
}

#[test]
fn report_file_matches_json_output() {
    let dir = std::env::temp_dir().join(format!("crcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = crcheck(&["discs", &fixture("levi_flat.toml"), "--json", "--report", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&o));
    assert!(stdout(&o).contains("\"verdict\": \"discs_found\""));
}

#[test]
fn subcommands_print_summaries() {
    let o = crcheck(&["minimal", &fixture("sphere.toml"), "--point", "1,0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("at (1, 0): d = [1, 2] => minimal"));

    let o = crcheck(&["segre", &fixture("heisenberg.toml"), "--point", "1,1+I"]);
    assert!(stdout(&o).contains("<2*z1 - z2 + (-1+I)>"));

    let o = crcheck(&["genericity", &fixture("complex_line.toml")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not generic"));

    let o = crcheck(&["discs", &fixture("sphere.toml"), "--mode", "fixed", "--order", "lex"]);
    assert!(stdout(&o).contains("verdict: disc_free_sampled"));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("crcheck-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p.display().to_string()
    };

    // a rejected manifold is a result
    let rejected = write("rejected.toml", "name = \"x\"\nn = 2\npolynomials = [\"z1\"]\n");
    let o = crcheck(&["validate", &rejected]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rejected"));

    let broken = write("broken.toml", "name = \"x\"\nn = 2\npolynomials = [\"z1 +* zb1\"]\n");
    let o = crcheck(&["validate", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 4"));

    let off = write("off.toml", "name = \"s\"\nn = 2\npolynomials = [\"z1*zb1 + z2*zb2 - 1\"]\nbase_points = [[\"1\", \"1\"]]\n");
    assert_eq!(crcheck(&["minimal", &off]).status.code(), Some(2));

    let o = crcheck(&["discs", &fixture("sphere.toml"), "--max-pairs", "1"]);
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(crcheck(&["discs", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn echoed_inputs_reproduce_verdicts() {
    use crcheck::manifold_file::ManifoldSpec;
    use crcheck::report::{cmd_theorem, RunConfig};
    let load = |f: &str| ManifoldSpec::load(std::path::Path::new(&fixture(f))).unwrap();
    let config = RunConfig::default();
    for (m, t) in [("heisenberg.toml", "sphere.toml"), ("sphere.toml", "levi_flat.toml"), ("real_plane.toml", "sphere.toml")] {
        let first = cmd_theorem(&load(m), &load(t), &config).unwrap();
        let again = cmd_theorem(&first.inputs[0], &first.inputs[1], &config).unwrap();
        assert_eq!(first.theorem, again.theorem, "{m} {t}");
        assert_eq!(first.inputs, again.inputs);
    }
}

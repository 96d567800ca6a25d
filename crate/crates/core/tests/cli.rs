use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_configforge"));
    cmd.env_remove("CONFIGFORGE_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn configforge")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, value: &Value) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn realize(dir: &TempDir, name: &str, config: Value) -> PathBuf {
    let cfg = write(dir, &format!("{name}.config.json"), &config);
    let cert = dir.path().join(format!("{name}.cert.json"));
    let out = run(&["realize", "--config", s(&cfg), "--out", s(&cert)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    cert
}

#[test]
fn howson_realize_then_verify() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "h.json", &json!({"n": 2, "ones": [[1, 2]]}));
    let cert = dir.path().join("cert.json");
    let out = run(&["realize", "--config", s(&cfg), "--out", s(&cert)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("in G^2"), "{text}");
    assert!(text.contains("{1}\tf.g."));
    assert!(text.contains("{1,2}\tnot f.g.\tBaseNotFGx2"));

    let out = run(&["verify", "--cert", s(&cert)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("verified: 3 subsets match"));
}

#[test]
fn zero_config_is_all_fg() {
    let dir = TempDir::new().unwrap();
    let cert = realize(&dir, "zero", json!({"n": 3, "ones": []}));
    let value: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    let reports = value["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 7);
    assert!(reports.iter().all(|r| r["fg"] == json!(true)));
    assert_eq!(code(&run(&["verify", "--cert", s(&cert)])), 0);
}

#[test]
fn two_atom_config_uses_both_blocks() {
    let dir = TempDir::new().unwrap();
    let cert = realize(&dir, "pair", json!({"n": 2, "ones": [[1], [1, 2]]}));
    let value: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(value["ambient_m"], json!(4));
    let out = run(&[
        "verify",
        "--cert",
        s(&cert),
        "--samples",
        "20",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn tampered_verdict_fails_verification() {
    let dir = TempDir::new().unwrap();
    let cert = realize(&dir, "h", json!({"n": 2, "ones": [[1, 2]]}));
    let mut value: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    value["reports"][0]["fg"] = json!(false);
    let bad = write(&dir, "bad.json", &value);
    let out = run(&["verify", "--cert", s(&bad)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("mismatch {1}:"), "{text}");
    assert!(!text.contains("mismatch {2}"), "{text}");
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let cert = realize(&dir, "h", json!({"n": 2, "ones": [[1, 2]]}));
    let text = fs::read_to_string(&cert).unwrap();
    let truncated = dir.path().join("trunc.json");
    fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&run(&["verify", "--cert", s(&truncated)])), 2);
    assert_eq!(
        code(&run(&[
            "verify",
            "--cert",
            s(&dir.path().join("missing.json"))
        ])),
        2
    );

    let big = write(&dir, "big.json", &json!({"n": 17, "ones": []}));
    let out = run(&[
        "realize",
        "--config",
        s(&big),
        "--out",
        s(&dir.path().join("x.json")),
    ]);
    assert_eq!(code(&out), 2);
    assert!(!dir.path().join("x.json").exists());

    let out_of_range = write(&dir, "oor.json", &json!({"n": 2, "ones": [[3]]}));
    let out = run(&[
        "realize",
        "--config",
        s(&out_of_range),
        "--out",
        s(&dir.path().join("y.json")),
    ]);
    assert_eq!(code(&out), 2);

    assert_eq!(
        code(&run(&["witness", "--cert", s(&cert), "--subset", "1,5"])),
        2
    );
    assert_eq!(code(&run(&["bogus"])), 2);
}

#[test]
fn enumerate_small_n() {
    for (n, total) in [(1, 2), (2, 8), (3, 128)] {
        let out = run(&["enumerate", "--n", &n.to_string()]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).contains(&format!("n={n}: {total}/{total} configurations verified")));
    }
    assert_eq!(code(&run(&["enumerate", "--n", "0"])), 2);
    assert_eq!(code(&run(&["enumerate", "--n", "4"])), 2);
}

#[test]
fn enumerate_respects_thread_cap() {
    let single = bin()
        .args(["enumerate", "--n", "2"])
        .env("CONFIGFORGE_THREADS", "1")
        .output()
        .unwrap();
    let default = run(&["enumerate", "--n", "2"]);
    assert_eq!(code(&single), 0);
    assert_eq!(single.stdout, default.stdout);
}

fn conj(base: &[(i64, i64)], shift: i64) -> Value {
    json!({"base": base.iter().map(|(i, c)| json!([i, c])).collect::<Vec<_>>(), "shift": shift})
}

#[test]
fn analyze_chain_twist() {
    let dir = TempDir::new().unwrap();
    let spec = json!({
        "m": 3,
        "edges": [
            {"src": 1, "dst": 2, "conjugator": conj(&[], 0)},
            {"src": 2, "dst": 3, "conjugator": conj(&[], 0)},
            {"src": 3, "dst": 1, "conjugator": conj(&[(0, 1)], 0)},
        ],
        "pins": [],
    });
    let path = write(&dir, "spec.json", &spec);
    let out = run(&["analyze", "--spec", s(&path)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.ends_with("1 component, BaseNotFG, not f.g.\n"),
        "{text}"
    );
}

#[test]
fn analyze_free_and_mixed() {
    let dir = TempDir::new().unwrap();
    let free = write(&dir, "free.json", &json!({"m": 2, "edges": [], "pins": []}));
    let out = run(&["analyze", "--spec", s(&free)]);
    assert!(stdout(&out).ends_with("2 components, FullFactor, f.g.\n"));

    let mixed = json!({
        "m": 3,
        "edges": [{"src": 1, "dst": 2, "conjugator": conj(&[], 1)}, {"src": 3, "dst": 3, "conjugator": conj(&[], 2)}],
        "pins": [1],
    });
    let path = write(&dir, "mixed.json", &mixed);
    let text = stdout(&run(&["analyze", "--spec", s(&path)]));
    assert!(text.contains("pinned -> Trivial"), "{text}");
    assert!(
        text.ends_with("2 components, Trivial+Cyclic, f.g.\n"),
        "{text}"
    );

    let bad = write(
        &dir,
        "bad.json",
        &json!({"m": 2, "edges": [{"src": 3, "dst": 1, "conjugator": conj(&[], 0)}]}),
    );
    assert_eq!(code(&run(&["analyze", "--spec", s(&bad)])), 2);
}

#[test]
fn witness_for_howson() {
    let dir = TempDir::new().unwrap();
    let cert = realize(&dir, "h", json!({"n": 2, "ones": [[1, 2]]}));
    let out = run(&["witness", "--cert", s(&cert), "--subset", "1,2"]);
    assert_eq!(code(&out), 0);
    let w: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["witness"][0], conj(&[(1, 1)], 0));

    // candidates supported on [-2, 2] force the witness out to delta_3
    let gens = json!([
        [conj(&[(-2, 1), (2, 4)], 0), conj(&[(-2, 1), (2, 4)], 0)],
        [conj(&[(0, 3)], 0), conj(&[(0, 3)], 0)],
    ]);
    let gens_path = write(&dir, "gens.json", &gens);
    let out = run(&[
        "witness",
        "--cert",
        s(&cert),
        "--subset",
        "1,2",
        "--gens",
        s(&gens_path),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let w: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["witness"][1], conj(&[(3, 1)], 0));
    assert_eq!(w["candidates"], gens);

    // a candidate outside the intersection is rejected
    let outsider = write(&dir, "out.json", &json!([[conj(&[], 1), conj(&[], 0)]]));
    assert_eq!(
        code(&run(&[
            "witness",
            "--cert",
            s(&cert),
            "--subset",
            "1,2",
            "--gens",
            s(&outsider)
        ])),
        2
    );

    let out = run(&["witness", "--cert", s(&cert), "--subset", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("no witness"));
}

#[test]
fn outputs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "c.json",
        &json!({"n": 3, "ones": [[1, 3], [2], [1, 2, 3]]}),
    );
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let ra = run(&["realize", "--config", s(&cfg), "--out", s(&a)]);
    let rb = run(&["realize", "--config", s(&cfg), "--out", s(&b)]);
    assert_eq!(ra.stdout, rb.stdout);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let va = run(&["verify", "--cert", s(&a), "--seed", "3"]);
    let vb = run(&["verify", "--cert", s(&b), "--seed", "3"]);
    assert_eq!(code(&va), 0);
    assert_eq!(va.stdout, vb.stdout);

    let wa = run(&["witness", "--cert", s(&a), "--subset", "1,2,3"]);
    let wb = run(&["witness", "--cert", s(&a), "--subset", "1,2,3"]);
    assert_eq!(code(&wa), 0);
    assert_eq!(wa.stdout, wb.stdout);
}

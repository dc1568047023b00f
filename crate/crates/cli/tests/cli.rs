use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use versal_core::polyring::RingSpec;
use versal_core::Rational;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples_data")
        .join(name)
}

fn versal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_versal"))
        .args(args)
        .env_remove("VERSAL_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = versal(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn param_ring() -> RingSpec {
    RingSpec::new(&["x0", "x1", "x2", "x3", "x4", "t1", "t2", "t3", "t4"]).unwrap()
}

#[test]
fn tangent_dimensions() {
    let e1 = data("quartic_cone.vdef");
    let p = e1.to_str().unwrap();
    assert!(stdout(&versal(&["t1", p])).starts_with("dim T1 = 4\n"));
    assert!(stdout(&versal(&["t2", p])).starts_with("dim T2 = 3\n"));
    assert_eq!(json(&["t1", p, "--degree", "-1"])["dims"]["T1"], 4);
    assert_eq!(json(&["t1", p, "--degree", "0"])["dims"]["T1"], 0);
    let e2 = data("diagonal.vdef");
    let v = json(&["normal", e2.to_str().unwrap(), "--degree", "0,0,0"]);
    assert_eq!(v["dims"]["normal"], 18);
}

#[test]
fn json_and_text_agree() {
    let e1 = data("quartic_cone.vdef");
    let p = e1.to_str().unwrap();
    let text = stdout(&versal(&["deform", p]));
    let doc = json(&["deform", p]);
    let ring = param_ring();
    let from_json: Vec<String> = doc["matrices"]["G"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[0].as_str().unwrap().to_string())
        .collect();
    let block = text
        .split("sum G:\n")
        .nth(1)
        .unwrap()
        .split("transpose sum F:")
        .next()
        .unwrap();
    let from_text: Vec<String> = block
        .lines()
        .map(|l| {
            l.trim()
                .trim_start_matches('|')
                .trim_end_matches('|')
                .trim()
                .to_string()
        })
        .collect();
    assert_eq!(from_json.len(), from_text.len());
    for (a, b) in from_json.iter().zip(&from_text) {
        assert_eq!(
            ring.parse::<Rational>(a).unwrap(),
            ring.parse::<Rational>(b).unwrap()
        );
    }
    assert_eq!(doc["status"], "polynomial");
    assert!(text.starts_with("status: polynomial\norder: 3\n"));
}

#[test]
fn max_order_bounds_every_series() {
    let e2 = data("diagonal.vdef");
    for k in [1usize, 2, 4] {
        let ks = k.to_string();
        let doc = json(&[
            "deform",
            e2.to_str().unwrap(),
            "--degree",
            "0,0,0",
            "--max-order",
            &ks,
        ]);
        assert_eq!(
            doc["status"],
            if k < 6 { "truncated" } else { "polynomial" }
        );
        for (_, pieces) in doc["series"].as_object().unwrap() {
            assert!(pieces.as_array().unwrap().len() <= k + 1);
        }
    }
    let o = Command::new(env!("CARGO_BIN_EXE_versal"))
        .args([
            "deform",
            e2.to_str().unwrap(),
            "--degree",
            "0,0,0",
            "--json",
        ])
        .env("VERSAL_MAX_ORDER", "2")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["status"], "truncated");
    assert_eq!(doc["dims"]["order"], 2);
}

#[test]
fn exit_codes() {
    let e1 = data("quartic_cone.vdef");
    let e2 = data("diagonal.vdef");
    let p1 = e1.to_str().unwrap();
    let code = |args: &[&str]| versal(args).status.code().unwrap();
    assert_eq!(code(&["t1", p1]), 0);
    assert_eq!(code(&["t1", "/nonexistent/input.vdef"]), 2);
    assert_eq!(code(&["t1", p1, "--degree", "0,0"]), 2);
    assert_eq!(code(&["deform", p1, "--smart-lift"]), 2);
    assert_eq!(code(&["deform", p1, "--max-order", "0"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["t1", e2.to_str().unwrap()]), 1);

    let dir = std::env::temp_dir().join(format!("versal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.vdef");
    std::fs::write(&bad, "ring: QQ\nvars: x y\ngenerators:\n  x*y + \n").unwrap();
    let o = versal(&["t1", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    let inhom = dir.join("inhom.vdef");
    std::fs::write(&inhom, "ring: QQ\nvars: x y\ngenerators:\n  x^2 - y^3\n").unwrap();
    assert_eq!(code(&["t1", inhom.to_str().unwrap()]), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_file_and_determinism() {
    let e1 = data("quartic_cone.vdef");
    let p = e1.to_str().unwrap();
    let a = versal(&["deform", p, "--verbose", "2"]);
    let b = versal(&["deform", p, "--verbose", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let log = String::from_utf8(a.stderr).unwrap();
    assert!(log.contains("Order 2\n") && log.contains("Order 3\n"));
    assert!(log.ends_with("Solution is polynomial\n"));

    let out = std::env::temp_dir().join(format!("versal-out-{}.txt", std::process::id()));
    let o = versal(&["t2", p, "--output", out.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).unwrap();
    assert_eq!(written, stdout(&versal(&["t2", p])));
}

#[test]
fn auxiliary_commands() {
    let e1 = data("quartic_cone.vdef");
    let p = e1.to_str().unwrap();
    let hf = stdout(&versal(&["hilbert", p, "--upto", "4"]));
    let want: String = (0..=4)
        .map(|d| format!("HF({d}) = {}\n", 4 * d + 1))
        .collect();
    assert_eq!(hf, want);
    assert!(stdout(&versal(&["gb", p])).starts_with("gb: 6 elements\n"));
    let cusp = data("cusp.vdef");
    let doc = json(&["t1", cusp.to_str().unwrap()]);
    assert_eq!(doc["dims"]["T1"], 2);
}

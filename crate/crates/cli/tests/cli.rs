use std::path::{Path, PathBuf};
use std::process::Command;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn bless() -> bool {
    std::env::var_os("GRADEDPI_BLESS").is_some()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gradedpi"))
        .args(args)
        .current_dir(root())
        .env_remove("GRADEDPI_BUDGET")
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn doc_files() -> Vec<PathBuf> {
    let mut files = vec![root().join("README.md")];
    let mut docs: Vec<PathBuf> = std::fs::read_dir(root().join("docs"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "md"))
        .collect();
    docs.sort();
    files.extend(docs);
    files
}

struct Example {
    args: Vec<String>,
    shown: String,
}

/// Every `$ gradedpi` line in a console block, with the lines after it.
fn examples(text: &str) -> Vec<Example> {
    let mut out = Vec::new();
    let mut in_block = false;
    for line in text.lines() {
        if line.trim_start().starts_with("```") {
            in_block = line.trim() == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ gradedpi ") {
            out.push(Example {
                args: cmd.split_whitespace().map(|s| s.trim_matches('"').to_string()).collect(),
                shown: String::new(),
            });
        } else if let Some(e) = out.last_mut() {
            e.shown.push_str(line);
            e.shown.push('\n');
        }
    }
    out
}

/// The same text with the output under each command replaced.
fn with_outputs(text: &str, outputs: &[String]) -> String {
    let mut out = String::new();
    let mut in_block = false;
    let mut skipping = false;
    let mut next = outputs.iter();
    for line in text.lines() {
        if line.trim_start().starts_with("```") {
            in_block = line.trim() == "```console";
            skipping = false;
            out.push_str(line);
            out.push('\n');
            continue;
        }
        if in_block && line.starts_with("$ gradedpi ") {
            out.push_str(line);
            out.push('\n');
            out.push_str(next.next().unwrap());
            skipping = true;
            continue;
        }
        if !skipping {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

fn slug(args: &[String]) -> String {
    let s: String = args
        .join("_")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '-' })
        .collect();
    s.chars().take(120).collect()
}

#[test]
fn documented_examples_match() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut count = 0;
    for file in doc_files() {
        let text = std::fs::read_to_string(&file).unwrap();
        let mut outputs = Vec::new();
        for ex in examples(&text) {
            let args: Vec<&str> = ex.args.iter().map(String::as_str).collect();
            let (code, stdout, stderr) = run(&args);
            let record = format!("exit: {code}\n{stdout}");
            let path = golden.join(format!("{}.txt", slug(&ex.args)));
            if bless() {
                std::fs::write(&path, &record).unwrap();
            } else {
                let want = std::fs::read_to_string(&path)
                    .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
                assert_eq!(record, want, "gradedpi {}", ex.args.join(" "));
                assert_eq!(ex.shown, stdout, "documented output of gradedpi {}", ex.args.join(" "));
            }
            assert_ne!(code, 2, "gradedpi {} failed: {stderr}", ex.args.join(" "));
            outputs.push(stdout);
            count += 1;
        }
        if bless() {
            std::fs::write(&file, with_outputs(&text, &outputs)).unwrap();
        }
    }
    assert!(count >= 10, "only {count} documented examples");
}

#[test]
fn headline_examples() {
    let (code, out, _) = run(&["verify", "--algebra", "sl2_z2", "--field", "5", "--basis", "beta_z2.lie"]);
    assert_eq!(code, 0);
    assert!(out.contains("4/4 identities hold"));
    let (code, out, _) = run(&["verify", "--algebra", "sl2_z3", "--field", "7", "--basis", "beta2_z3.lie"]);
    assert_eq!(code, 0);
    assert!(out.contains("7/7 identities hold"));
    let (code, out, _) = run(&["--json", "kernel", "--algebra", "sl2_z2", "--field", "5", "--cell", "z1:1,y1:1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 0);
    assert_eq!(v["op"], "kernel");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--algebra", "sl2_z2", "--basis", "b2_z2.lie"]).0, 1);
    assert_eq!(run(&["compare-spans", "--a", "kernel:sl2_z2", "--b", "kernel:b2_z2", "--cell", "z1,z2"]).0, 1);
    assert_eq!(run(&["--frobnicate"]).0, 2);
    assert_eq!(run(&["kernel", "--algebra", "sl2_z2", "--cell", "q1"]).0, 2);
    assert_eq!(run(&["kernel", "--algebra", "sl9", "--cell", "y1"]).0, 2);
    assert_eq!(run(&["verify", "--algebra", "sl2_z3", "--field", "5", "--basis", "beta2_z3.lie"]).0, 2);
    assert_eq!(run(&["consequences", "--basis", "beta_z2.lie", "--cell", "y1", "--limits", "2"]).0, 2);
    assert_eq!(run(&["compare-kernels", "--a", "sl2_z2", "--b", "gl2_z2"]).0, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_gradedpi"))
        .args(["verify", "--algebra", "sl2_z2", "--basis", "beta_z2.lie"])
        .env("GRADEDPI_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn output_ignores_thread_count() {
    let cases: [&[&str]; 4] = [
        &["--json", "verify", "--algebra", "sl2_z2", "--basis", "b2_z2.lie"],
        &["--json", "kernel", "--algebra", "gl2_z2", "--cell", "y1,y2,z1,z2"],
        &["--json", "consequences", "--basis", "beta_z2.lie", "--cell", "y1,y2,z1"],
        &["--json", "analyze", "--algebra", "gl2_z2"],
    ];
    for args in cases {
        let one = run(&[&["--threads", "1"], args].concat());
        let four = run(&[&["--threads", "4"], args].concat());
        assert_eq!(one, four, "{args:?}");
    }
}

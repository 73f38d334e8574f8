use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dh-cct"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn recognize_reports_sequences_and_witnesses() {
    let o = run(&["recognize", "-"], "Bw\n");
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "DH: yes\n0 initial -\n1 true_twin 0\n2 true_twin 0\n"
    );

    let gem = run(&["patterns", "gem"], "");
    let o = run(&["recognize", "-"], &stdout(&gem));
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("DH: no\ngem at vertices 0->"));
}

#[test]
fn cct_methods_agree_and_comments_pass_through() {
    let input = "# first\nEwCW\nBw\n# last\n";
    let o = run(&["cct", "-", "--method", "both", "--trace"], input);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with("rule ")).collect();
    assert_eq!(lines, ["# first", "NONE", "CCT 1,2", "# last"]);

    let o = run(&["cct", "-", "--minimize"], "Bw\n");
    assert_eq!(stdout(&o), "CCT 2\n");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = run(&["cct", "-"], "Bw\nBx\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&["patterns", "nonsense"], "").status.code(), Some(1));
}

#[test]
fn two_one_and_patterns() {
    let o = run(&["two-one", "-"], "EwCW\nDhc\n");
    assert_eq!(stdout(&o), "NONE\nTWO-ONE 0,1\n");
    assert_eq!(stdout(&run(&["patterns", "K3"], "")), "Bw\n");
}

#[test]
fn enumerate_and_verify_small() {
    let o = run(&["enumerate", "--max-n", "4"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 4 + 11);

    let dir = std::env::temp_dir().join(format!("dh-cct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let family = dir.join("family.g6");
    let o = run(
        &["mine", "--max-n", "7", "--out", family.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    let o = run(
        &[
            "verify",
            "--max-n",
            "7",
            "--family",
            family.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("characterization-mismatches 0 builder-mismatches 0"));

    // a family missing a member fails verification with exit code 2
    let text = std::fs::read_to_string(&family).unwrap();
    let truncated: Vec<&str> = text.lines().collect();
    let truncated = truncated[..truncated.len() - 2].join("\n");
    std::fs::write(&family, truncated).unwrap();
    let o = run(
        &[
            "verify",
            "--max-n",
            "7",
            "--family",
            family.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

use std::process::Command;

fn twistlab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn exit_codes() {
    assert_eq!(twistlab(&["braid", "eq", "B3: s1 s2 s1", "B3: s2 s1 s2"]).0, 0);
    assert_eq!(twistlab(&["braid", "eq", "B3: s1", "B3: s2"]).0, 1);
    assert_eq!(twistlab(&["braid", "eq", "B3: s9", "B3: s2"]).0, 2);
    assert_eq!(twistlab(&["no-such-command"]).0, 2);
}

#[test]
fn script_check_prints_the_final_line() {
    let (code, out) = twistlab(&["gt", "check", "scripts/F-d3.gts"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("F(d3) = d3^L"));
}

#[test]
fn json_reports_parse() {
    let (code, out) = twistlab(&["--format", "json", "mcg", "suite", "--genus", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    let (_, out) = twistlab(&["--format", "json", "gt", "specialize", "--context", "braid n=3", "--lambda", "-1", "s1^L f(s1;s2)"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "s1^-1");
}

#[test]
fn bracketing_enumeration() {
    let (code, out) = twistlab(&["bracketing", "enum", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains(",")).count(), 14);
    assert_eq!(out.lines().last(), Some("14 bracketings"));
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn moveable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moveable")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("moveable-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn scenes_lists_the_catalog() {
    let o = moveable(&["scenes"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().collect::<Vec<_>>(),
        ["calculator", "data-selection", "personal-info", "panels", "plots", "polygon", "nnode"]
    );
}

#[test]
fn golden_mismatch_exits_2_with_a_diff() {
    let trace = golden_dir().join("calculator/rearrange.trace");
    let golden = golden_dir().join("calculator/rearrange.mrl");
    let edited = std::fs::read_to_string(&golden).unwrap().replace("equals framed 312 288 56 80", "equals framed 312 288 56 36");
    let wrong = scratch("wrong.mrl", &edited);
    let o = moveable(&["replay", "--scene", "calculator", "--trace", trace.to_str().unwrap(), "--golden", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("-equals framed 312 288 56 36 0\n+equals framed 312 288 56 80 0\n"), "{out}");
    assert!(out.contains("@@"), "{out}");
}

#[test]
fn assertion_failure_exits_1() {
    let trace = scratch("fail.trace", "down 34 129 L\nmove 44 129\nup\nassert b7 x 99 0\n");
    let o = moveable(&["replay", "--scene", "calculator", "--trace", trace.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL assert b7 x 99 0 (actual 34)"));
}

#[test]
fn usage_and_parse_errors_exit_3() {
    let bad = scratch("bad.trace", "down 5\n");
    let o = moveable(&["replay", "--scene", "calculator", "--trace", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let ok = scratch("ok.trace", "up\n");
    assert_eq!(moveable(&["replay", "--scene", "nowhere", "--trace", ok.to_str().unwrap()]).status.code(), Some(3));
    let unknown_tag = scratch("tag.trace", "assert ghost x 0 0\n");
    let o = moveable(&["replay", "--scene", "calculator", "--trace", unknown_tag.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(moveable(&["replay", "--scene", "calculator"]).status.code(), Some(3));
    assert_eq!(moveable(&["fuzz", "--scene", "polygon", "--steps", "many"]).status.code(), Some(3));
    assert_eq!(moveable(&["--help"]).status.code(), Some(0));
}

#[test]
fn save_layout_writes_the_final_document() {
    let trace = scratch("save.trace", "down 250 77 L\nmove 322 77\nup\n");
    let out = std::env::temp_dir().join(format!("moveable-cli-{}/saved.mrl", std::process::id()));
    let o = moveable(&["replay", "--scene", "calculator", "--trace", trace.to_str().unwrap(), "--save-layout", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let saved = std::fs::read_to_string(out).unwrap();
    assert!(saved.starts_with("MRL1 calculator\n"));
    assert!(saved.contains("\ndivide framed 312 80 56 36 0\n"));
}

#[test]
fn fuzz_is_reproducible_and_its_trace_replays() {
    let a = moveable(&["fuzz", "--scene", "plots", "--steps", "300", "--seed", "7"]);
    let b = moveable(&["fuzz", "--scene", "plots", "--steps", "300", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("violations 0\n"));

    let trace = std::env::temp_dir().join(format!("moveable-cli-{}/fuzz.trace", std::process::id()));
    let golden = scratch("fuzz.mrl", stdout(&a).split_once("final layout\n").unwrap().1);
    moveable(&["fuzz", "--scene", "plots", "--steps", "300", "--seed", "7", "--save-trace", trace.to_str().unwrap()]);
    let o = moveable(&["replay", "--scene", "plots", "--trace", trace.to_str().unwrap(), "--golden", golden.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn boundary_speaks_json_lines() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_moveable"))
        .arg("boundary")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let requests = [
        r#"{"type":"init","sceneName":"calculator"}"#,
        r#"{"type":"pointerDown","x":250,"y":77,"button":"left"}"#,
        r#"{"type":"pointerMove","x":322,"y":77}"#,
        r#"{"type":"pointerUp"}"#,
        r#"{"type":"getCursor","x":299,"y":44}"#,
        "",
        "not json",
    ];
    child.stdin.take().unwrap().write_all(requests.join("\n").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], r#"{"type":"ready","sceneName":"calculator"}"#);
    assert_eq!(lines[2], r#"{"type":"pointerMove","changed":true}"#);
    assert_eq!(lines[4], r#"{"type":"cursor","cursor":"size-we"}"#);
    assert!(lines[5].starts_with(r#"{"type":"error""#));
}

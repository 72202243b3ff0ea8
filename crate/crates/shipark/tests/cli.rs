use std::io::Write;
use std::process::{Command, Output, Stdio};

fn shipark(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_shipark"))
        .args(args)
        .env_remove("SHIPARK_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> (String, String) {
    let out = shipark(args, stdin);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        out.status.success(),
        "{args:?}\nstdout:\n{stdout}stderr:\n{stderr}"
    );
    (stdout, stderr)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/golden/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

#[test]
fn worked_example() {
    let (f, _) = ok(
        &["label", "--word", "843967125", "--intervals", "1-6,3-8,6-9"],
        None,
    );
    assert_eq!(f, "341183414\n");
    let (p, _) = ok(&["invert", "--fn", "341183414"], None);
    assert_eq!(p, "843967125 1-6,3-8,6-9\n");
}

#[test]
fn peel_trace_golden() {
    let (_, trace) = ok(&["invert", "--fn", "341183414", "--trace-peel"], None);
    assert_eq!(trace, golden("peel_341183414.tsv"));
}

#[test]
fn spark_traces_golden() {
    for (f, domain, word) in [
        ("113414", "346789", "843967"),
        ("121232", "123679", "396712"),
        ("1231", "1257", "7125"),
    ] {
        let (out, trace) = ok(
            &["spark", "--fn", f, "--domain", domain, "--trace-spark"],
            None,
        );
        assert_eq!(out, format!("{word}\n"));
        assert_eq!(trace, golden(&format!("spark_{word}.tsv")));
    }
}

#[test]
fn renders_golden() {
    let (a, _) = ok(&["render", "--word", "321", "--intervals", "1-2,2-3"], None);
    assert_eq!(a, golden("render_321.txt"));
    let (b, _) = ok(&["render", "--fn", "113414", "--domain", "346789"], None);
    assert_eq!(b, golden("render_113414.txt"));
    let (c, _) = ok(
        &["render", "--format", "svg", "-"],
        Some("843967125 1-6,3-8,6-9"),
    );
    assert_eq!(c, golden("render_843967125.svg"));
    let (d, _) = ok(
        &["render", "--format", "svg", "--kind", "fn", "-"],
        Some("113414 346789"),
    );
    assert_eq!(d, golden("render_113414.svg"));
    let (e, _) = ok(&["render", "--fn", "1"], None);
    assert_eq!(e, "1\n-\n1\n");
}

#[test]
fn invert_then_label_is_identity() {
    for input in [
        "341183414\n",
        "311411\n",
        "1216232 1235679\n",
        r#"{"domain":[1,2,3,4,5,6,7,8,9],"values":[3,4,1,1,8,3,4,1,4]}"#,
        r#"{"domain":[2,5,11],"values":[1,1,2]}"#,
    ] {
        let (pair, _) = ok(&["invert", "-"], Some(input));
        let (back, _) = ok(&["label", "-"], Some(&pair));
        assert_eq!(back.trim_end(), input.trim_end(), "via {pair}");
    }
}

#[test]
fn point_round_trip() {
    for pair in [
        "843967125 1-6,3-8,6-9\n",
        "321 1-3\n",
        "123\n",
        r#"{"word":[2,1],"intervals":[]}"#,
    ] {
        let (x, _) = ok(&["pair-to-point", "-"], Some(pair));
        let (back, _) = ok(&["point-to-pair", "-"], Some(&x));
        assert_eq!(back.trim_end(), pair.trim_end());
    }
    let (p, _) = ok(&["point-to-pair", "--point", "2/3,1/3,0"], None);
    assert_eq!(p, "321 1-3\n");
}

#[test]
fn other_commands() {
    assert_eq!(ok(&["contract", "--word", "7125"], None).0, "1231 1257\n");
    assert_eq!(ok(&["maxinv", "--word", "843967"], None).0, "1-6\n");
    assert_eq!(
        ok(&["maxinv", "--format", "json", "-"], Some("[3,2,1]")).0,
        "[[1,3]]\n"
    );
    assert_eq!(
        ok(&["center", "--fn", "341183414"], None).0,
        "113414 346789\n"
    );
    let (c, _) = ok(&["center", "--format", "json", "--fn", "211"], None);
    assert_eq!(
        c,
        r#"{"center":[2,3],"restriction":{"domain":[2,3],"values":[1,1]}}"#.to_string() + "\n"
    );
    let (lines, _) = ok(&["enumerate", "pairs", "--n", "3"], None);
    assert_eq!(lines.lines().count(), 16);
    let (lines, _) = ok(
        &["enumerate", "parking", "--n", "4", "--format", "json"],
        None,
    );
    assert_eq!(lines.lines().count(), 125);
    assert!(lines
        .lines()
        .all(|l| l.starts_with(r#"{"domain":[1,2,3,4],"values":"#)));
    assert_eq!(
        ok(&["enumerate", "central", "--n", "4"], None)
            .0
            .lines()
            .count(),
        24
    );
    assert_eq!(
        ok(&["enumerate", "words", "--n", "3"], None).0,
        "123\n132\n213\n231\n312\n321\n"
    );
}

#[test]
fn pretty_output() {
    let (t, _) = ok(
        &[
            "label",
            "--pretty",
            "--word",
            "321",
            "--intervals",
            "1-2,2-3",
        ],
        None,
    );
    assert_eq!(t, "x  1 2 3\nf  2 1 1\n");
    let (j, _) = ok(
        &["label", "--pretty", "--format", "json", "--word", "21"],
        None,
    );
    assert!(j.contains("\n  \"domain\""));
    let (p, _) = ok(&["invert", "--pretty", "--fn", "211"], None);
    assert_eq!(p, "+-+\n  +-+\n3 2 1\n");
}

#[test]
fn verify_report() {
    let (json, _) = ok(&["verify", "--n", "3"], None);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        (v["pair_count"].as_u64(), v["parking_count"].as_u64()),
        (Some(16), Some(16))
    );
    assert_eq!(v["success"], true);
    let out = Command::new(env!("CARGO_BIN_EXE_shipark"))
        .args(["verify", "--n", "4", "--format", "text"])
        .env("SHIPARK_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("valid pairs         125"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let (stdout, _) = ok(
        &[
            "label",
            "--format",
            "json",
            "--word",
            "321",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "{\"domain\":[1,2,3],\"values\":[3,2,1]}\n"
    );
    let input = dir.path().join("in.txt");
    std::fs::write(&input, "843967125 1-6,3-8,6-9\n").unwrap();
    assert_eq!(
        ok(&["label", input.to_str().unwrap()], None).0,
        "341183414\n"
    );
}

#[test]
fn domain_errors_are_json_with_status_1() {
    for (args, stdin, kind) in [
        (vec!["spark", "--fn", "231"], None, "NotCentral"),
        (vec!["invert", "--fn", "22"], None, "NotParking"),
        (
            vec!["label", "--word", "123", "--intervals", "1-3"],
            None,
            "DescentViolated",
        ),
        (
            vec!["label", "--word", "321", "--intervals", "1-3,2-3"],
            None,
            "CloserOrder",
        ),
        (
            vec!["point-to-pair", "--point", "1,0"],
            None,
            "OnHyperplane",
        ),
        (
            vec!["label", "-"],
            Some("{\"word\":[1,1]}"),
            "DuplicateLetter",
        ),
        (vec!["label", "-"], Some("{oops"), "Json"),
        (vec!["label", "/nonexistent/file"], None, "Io"),
    ] {
        let out = shipark(&args, stdin);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["error"], kind, "{args:?}");
        assert!(v["message"].is_string());
    }
}

#[test]
fn usage_errors_have_status_2() {
    for args in [
        vec!["label", "--fn", "1"],
        vec!["frobnicate"],
        vec!["verify"],
        vec!["verify", "--n", "12"],
        vec!["invert", "--domain", "12"],
        vec!["render", "-"],
    ] {
        let out = shipark(&args, Some("321"));
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(shipark(&["label"], None).status.code(), Some(2));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn schubert(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("schubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const KLEIN: &str = r#"{"rank":2,"coeffs":[{"partition":[],"coeff":"1"},{"partition":[2,2],"coeff":"1"}]}"#;

#[test]
fn decomposable_exit_codes() {
    let o = schubert(&["decomposable"], Some(r#"{"rank":2,"coeffs":[{"partition":[],"coeff":"1"}]}"#));
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["agree"], true);
    assert_eq!(report["decomposable"], true);

    let o = schubert(&["decomposable"], Some(KLEIN));
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["decomposable"], false);
    assert!(report["first_nonzero"].is_object());

    let path = temp_file("klein.json", KLEIN);
    let o = schubert(&["decomposable", "--input", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_input_is_a_usage_error() {
    for bad in ["{", r#"{"rank":1,"coeffs":[{"partition":[1,1],"coeff":"1"}]}"#, r#"{"rank":0,"coeffs":[]}"#] {
        let o = schubert(&["decomposable"], Some(bad));
        assert_eq!(o.status.code(), Some(64), "{bad}");
        assert!(o.stdout.is_empty());
    }
    let o = schubert(&["decomposable", "--input", "/nonexistent/file.json"], None);
    assert_eq!(o.status.code(), Some(64));
    assert_eq!(schubert(&["no-such-command"], None).status.code(), Some(64));
}

#[test]
fn ideal_outputs() {
    let o = schubert(&["ideal", "--r", "2", "--n", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a[1,1]*a[2] - a[1]*a[2,1] + a[]*a[2,2]\n");

    let o = schubert(&["ideal", "--r", "2", "--n", "5", "--format", "text"], None);
    assert_eq!(stdout(&o).lines().count(), 5);

    let o = schubert(&["ideal", "--r", "2", "--n", "4", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quadrics"].as_array().unwrap().len(), 1);
    assert_eq!(v["quadrics"][0]["terms"].as_array().unwrap().len(), 3);

    let o = schubert(&["ideal", "--r", "1", "--n", "5"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    assert_eq!(schubert(&["ideal", "--r", "3", "--n", "2"], None).status.code(), Some(64));
}

#[test]
fn random_gen_feeds_decomposable() {
    let args = ["random-gen", "--r", "3", "--n", "6", "--seed", "7", "--count", "4"];
    let a = schubert(&args, None);
    let b = schubert(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let lines: Vec<String> = stdout(&a).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        assert_eq!(schubert(&["decomposable"], Some(&line)).status.code(), Some(0));
    }
}

#[test]
fn kp_check_verdicts() {
    let one = temp_file("one.json", r#"{"family":"x","weight_bound":1,"terms":[{"exponents":[],"coeff":"1"}]}"#);
    let o = schubert(&["kp-check", "--tau", one.to_str().unwrap(), "--weight", "8"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));

    // h_1 h_2 - h_3
    let s21 = temp_file(
        "s21.json",
        r#"{"family":"h","weight_bound":3,"terms":[{"exponents":[[1,1],[2,1]],"coeff":"1"},{"exponents":[[3,1]],"coeff":"-1"}]}"#,
    );
    let o = schubert(&["kp-check", "--tau", s21.to_str().unwrap(), "--weight", "8"], None);
    assert_eq!(o.status.code(), Some(0));

    // 1 + h_2^2 - h_1 h_3
    let klein = temp_file(
        "kp-klein.json",
        r#"{"family":"h","weight_bound":4,"terms":[{"exponents":[],"coeff":"1"},{"exponents":[[2,2]],"coeff":"1"},{"exponents":[[1,1],[3,1]],"coeff":"-1"}]}"#,
    );
    let o = schubert(&["kp-check", "--tau", klein.to_str().unwrap(), "--weight", "8"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first nonzero coefficient"));

    let o = schubert(&["kp-check", "--tau", klein.to_str().unwrap(), "--weight", "3"], None);
    assert_eq!(o.status.code(), Some(64));
    assert!(o.stdout.is_empty());
}

#[test]
fn selftest_passes_and_catches_the_mutation() {
    let o = schubert(&["selftest"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 11);

    let o = schubert(&["selftest", "--mutate", "h-recurrence"], None);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL")));
}

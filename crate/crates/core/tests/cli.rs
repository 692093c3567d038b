use std::process::Command;

fn jarnik(args: &[&str], threads: Option<&str>) -> std::process::Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jarnik"));
    cmd.args(args).env_remove("JARNIK_THREADS");
    if let Some(t) = threads {
        cmd.env("JARNIK_THREADS", t);
    }
    cmd.output().expect("spawn jarnik")
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["polygon", "--domain", "ball:3/2", "--q", "60", "--scaled"];
    let one = jarnik(&args, Some("1"));
    let four = jarnik(&args, Some("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, jarnik(&args, None).stdout);
}

#[test]
fn bad_thread_count_is_rejected() {
    let out = jarnik(&["selftest"], Some("zero"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("JARNIK_THREADS"));
}

#[test]
fn selftest_passes() {
    let out = jarnik(&["selftest"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 17);
    assert!(!text.contains("FAIL"));
}

#[test]
fn usage_errors_and_svg() {
    let out = jarnik(
        &["curvature", "--lambda", "rat:1/2", "--q-min", "2", "--q-max", "9"],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    let out = jarnik(&["limit-curve", "--curve", "Cdelta:2", "--format", "svg"], None);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("<svg"));
}

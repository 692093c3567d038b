// Drives the command line in-process and runs the built-in checks.

use jarnik::cli::{run, selftest};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        [
            "jarnik",
            "curvature",
            "--lambda",
            "rat:1/2",
            "--side",
            "+",
            "--q-min",
            "4",
            "--q-max",
            "8",
        ],
        &mut out,
        &mut err,
    );
    if code != 0 {
        return Err(String::from_utf8_lossy(&err).into_owned().into());
    }
    print!("{}", String::from_utf8(out)?);

    let items = selftest();
    for item in &items {
        println!("{item}");
    }
    if let Some(bad) = items.iter().find(|i| !i.passed) {
        return Err(bad.to_string().into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("command_line example failed");
}

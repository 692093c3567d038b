// Window estimates of lim sup and lim inf against the exact values.

use jarnik::curvature::{limsup_liminf_estimate, TraceMode};
use jarnik::number_theory::RealSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("1/phi", RealSpec::inv_golden()),
        ("1/sqrt3", RealSpec::inv_sqrt3()),
        ("[0; 3, 1, 4]", RealSpec::periodic(0, vec![], vec![3, 1, 4])?),
        ("e-2", RealSpec::e_minus_two()),
    ];
    for (name, x) in &cases {
        let e = limsup_liminf_estimate(x, 2000, TraceMode::Incremental)?;
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v:.4}"));
        println!(
            "{name:<13} window {:?}: sup {:.4} (exact {}), inf {:.4} (exact {})",
            e.window,
            e.sup_est,
            fmt(e.exact_limsup),
            e.inf_est,
            fmt(e.exact_liminf)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("limsup_estimate example failed");
}

// Local radii of curvature at a vertex and along a range of orders.

use jarnik::curvature::{circumradius_squared, curvature_trace, local_radius, CurvatureBounds, TraceMode};
use jarnik::number_theory::{RealSpec, Side};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "circumradius^2 of (7,2),(9,3),(12,5) = {}",
        circumradius_squared((7, 2), (9, 3), (12, 5))?
    );

    let half = RealSpec::rational(1, 2)?;
    for side in [Side::Minus, Side::Plus] {
        let s = local_radius(4, &half, Some(side))?;
        println!("r_4(1/2{side})^2 = {}, r~ = {:.4}", s.r_squared, s.r_tilde);
    }

    let x = RealSpec::inv_sqrt3();
    let trace = curvature_trace(&x, None, 100, 2000, TraceMode::Incremental)?;
    let (lo, hi) = trace.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), s| {
        (lo.min(s.r_tilde), hi.max(s.r_tilde))
    });
    let b = CurvatureBounds::new(x.to_f64());
    println!(
        "1/sqrt3, Q in [100, 2000]: r~ in [{lo:.4}, {hi:.4}], band [{:.4}, {:.4}]",
        b.limsup_band.0, b.limsup_band.1
    );
    let last = trace.last().ok_or("empty trace")?;
    println!(
        "at Q = {}: r~ = {:.4}, predicted {:.4}",
        last.order, last.r_tilde, last.predicted
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("curvature_trace example failed");
}

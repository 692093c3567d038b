// Vertex coordinates of the square's polygons against their asymptotics.

use jarnik::analysis::{cross_route_error, lemma_check};
use jarnik::curvature::square_two_r;
use jarnik::number_theory::RealSpec;
use jarnik::DomainSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambdas = [
        RealSpec::rational(1, 3)?,
        RealSpec::inv_sqrt3(),
        RealSpec::rational(1, 1)?,
    ];
    let report = lemma_check(&[100, 400], &lambdas)?;
    print!("{}", report.to_text());
    let (nx, ny) = report.max_normalized();
    println!("largest error times Q/log Q: ({nx:.3}, {ny:.3})");

    let q = 1000;
    let r = square_two_r(q)? as f64 / 2.0;
    println!(
        "R({q}) pi^2 / 3Q^3 = {:.6}",
        r * std::f64::consts::PI.powi(2) / (3.0 * (q as f64).powi(3))
    );
    println!(
        "moment route vs lattice vertex at Q = 200: {:.2e}",
        cross_route_error(&DomainSpec::Diamond, 200, &RealSpec::inv_sqrt3())?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("vertex_asymptotics example failed");
}

// Samples each limit-curve family and checks its implicit equation.

use jarnik::number_theory::Fraction;
use jarnik::LimitCurve;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let curves = [
        LimitCurve::C,
        LimitCurve::C1,
        LimitCurve::cdelta(Fraction::new(2, 1)?)?,
        LimitCurve::cp(Fraction::new(1, 2)?)?,
        LimitCurve::cp(Fraction::new(2, 1)?)?,
    ];
    for c in &curves {
        let arc = c.sample_arc(201)?;
        let worst = arc
            .iter()
            .filter_map(|&(_, x, y)| c.residual(x, y))
            .fold(0.0f64, |m, r| m.max(r.abs()));
        let (ex, ey) = c.arc_end()?;
        println!(
            "{:<9} ends at ({ex:.6}, {ey:.6}), worst residual {worst:.2e}",
            c.to_string()
        );
    }
    let svg = LimitCurve::C.curve_svg(400)?;
    println!("C as SVG: {} bytes", svg.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("limit_curves example failed");
}

// Distance from scaled polygons to their limit curves as Q grows.

use jarnik::analysis::{convergence_csv, convergence_table, DEFAULT_SAMPLES};
use jarnik::number_theory::Fraction;
use jarnik::{DomainSpec, LimitCurve};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let domains = [
        DomainSpec::Square,
        DomainSpec::Diamond,
        DomainSpec::octagon(Fraction::new(2, 1)?)?,
        DomainSpec::ball(Fraction::new(2, 1)?)?,
    ];
    for d in &domains {
        let curve = LimitCurve::for_domain(d);
        let rows = convergence_table(d, &[10, 40, 80], &curve, DEFAULT_SAMPLES)?;
        print!("{}", convergence_csv(&rows));
        if rows.windows(2).any(|w| w[1].sup_distance >= w[0].sup_distance) {
            println!("  (not monotone over this range)");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("convergence example failed");
}

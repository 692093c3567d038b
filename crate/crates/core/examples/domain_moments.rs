// Membership and moment integrals of the four domain families.

use jarnik::number_theory::Fraction;
use jarnik::DomainSpec;
use num_rational::Ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let domains = [
        DomainSpec::Square,
        DomainSpec::Diamond,
        DomainSpec::octagon(Fraction::new(2, 1)?)?,
        DomainSpec::ball(Fraction::new(1, 2)?)?,
    ];
    let probe = (Ratio::new(3, 5), Ratio::new(1, 5));
    for d in &domains {
        let m = d.moment_integrals(0.5)?;
        println!(
            "{d:<10} contains (3/5, 1/5): {:<5}  M(1/2) = ({:.6}, {:.6})  R/Q^3 -> {:.6}",
            d.contains(probe.0, probe.1),
            m.mx,
            m.my,
            d.scale_factor_asymptote()
        );
    }
    let parsed: DomainSpec = "ball:3/2".parse()?;
    println!("parsed {parsed}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("domain_moments example failed");
}

// Farey neighbours of a slope, found three ways.

use jarnik::number_theory::{
    cf_expand, convergents, farey_neighbors, farey_neighbors_stern_brocot, farey_sequence, RealSpec, Side,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f4: Vec<String> = farey_sequence(4)?.iter().map(ToString::to_string).collect();
    println!("F_4 = {}", f4.join(" "));

    let x = RealSpec::inv_sqrt3();
    let cf = cf_expand(&x, 10)?;
    println!("1/sqrt3 = [0; {:?}]", cf.quotients());
    let conv: Vec<String> = convergents(&cf, 6)?.iter().map(ToString::to_string).collect();
    println!("convergents {}", conv.join(", "));

    for q in [4, 15, 100, 1000] {
        let n = farey_neighbors(&x, q)?;
        let sb = farey_neighbors_stern_brocot(&x, Side::Plus, q)?;
        if n != sb {
            return Err(format!("routes disagree at Q = {q}").into());
        }
        println!("Q = {q:4}: {} < 1/sqrt3 < {}", n.left, n.right);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("farey_neighbors example failed");
}

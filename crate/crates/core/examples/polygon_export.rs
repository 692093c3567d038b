// Builds P_4 and writes its lattice and scaled forms.

use jarnik::export::write_atomic;
use jarnik::polygon::{build_polygon, primitive_vectors, scale_polygon};
use jarnik::DomainSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = primitive_vectors(&DomainSpec::Square, 4)?;
    let p = build_polygon(&DomainSpec::Square, 4)?;
    println!("{} primitive vectors, {} vertices", v.len(), p.vertices.len());
    println!(
        "fundamental arc ends at {:?}, 2R = {}",
        p.fundamental_arc_end(),
        p.two_r()
    );
    println!("first vertices {:?}", &p.vertices[..8]);

    let scaled = scale_polygon(&p)?;
    println!("R = {}, longest edge {:.4}", scaled.scale(), scaled.max_edge_length());

    let dir = tempfile::tempdir()?;
    write_atomic(&dir.path().join("p4.csv"), p.to_csv().as_bytes())?;
    write_atomic(&dir.path().join("p4.svg"), scaled.to_svg().as_bytes())?;
    for entry in std::fs::read_dir(dir.path())? {
        let entry = entry?;
        println!(
            "wrote {} ({} bytes)",
            entry.file_name().to_string_lossy(),
            entry.metadata()?.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polygon_export example failed");
}
